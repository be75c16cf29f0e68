#include <doctest.h>

#include "sympcoh/frame.hpp"
#include "sympcoh/xn_complex.hpp"

using namespace sympcoh;

namespace {

const GroupElement& cls(long long disc, size_t idx) {
  return ClassGroup::of(disc).coords_of(idx);
}

}  // namespace

TEST_CASE("frame construction for n = 1 over disc -20") {
  // b_1 = trivial class, a_1 = [p]
  SymplecticFrame frame = build_frame(-20, 1, {{cls(-20, 1), cls(-20, 0)}});
  CHECK(frame_axiom_check(frame).pass);
  CHECK(all_pass(verify_frame(frame)));
  CHECK(steinitz_class(frame.line(1)).is_zero());
  CHECK(steinitz_class(frame.line(-1)) == cls(-20, 1));

  const ClassGroup& cl = ClassGroup::of(-20);
  XnComplex x(1, cl.group());
  FormalChain image = pushforward_apartment(frame);
  CHECK(x.is_top_cycle(image));
  CHECK(image == sigma_s_cycle(x, frame.s_classes));
  CHECK(image.num_terms() == 2);

  // the class pair is not inverse-compatible, so the frame cannot be integral
  CHECK_FALSE(is_integral_frame(frame));
}

TEST_CASE("frame construction for n = 2 over disc -20") {
  std::vector<std::pair<GroupElement, GroupElement>> s{{cls(-20, 1), cls(-20, 0)},
                                                       {cls(-20, 1), cls(-20, 0)}};
  SymplecticFrame frame = build_frame(-20, 2, s);
  auto checks = verify_frame(frame);
  for (const auto& c : checks) {
    INFO(c.name);
    CHECK(c.pass);
  }

  const ClassGroup& cl = ClassGroup::of(-20);
  XnComplex x(2, cl.group());
  FormalChain image = pushforward_apartment(frame);
  CHECK(x.is_top_cycle(image));
  CHECK(image == sigma_s_cycle(x, s));
  CHECK_FALSE(is_integral_frame(frame));
}

TEST_CASE("frame construction over a class-number-3 field") {
  // disc -23: pick distinct nontrivial classes on both levels
  std::vector<std::pair<GroupElement, GroupElement>> s{{cls(-23, 1), cls(-23, 2)},
                                                       {cls(-23, 2), cls(-23, 0)}};
  SymplecticFrame frame = build_frame(-23, 2, s);
  CHECK(all_pass(verify_frame(frame)));
  const ClassGroup& cl = ClassGroup::of(-23);
  XnComplex x(2, cl.group());
  FormalChain image = pushforward_apartment(frame);
  CHECK(image == sigma_s_cycle(x, s));
}

TEST_CASE("standard frame") {
  SymplecticFrame frame = standard_frame(-20, 2);
  CHECK(frame_axiom_check(frame).pass);
  CHECK(is_integral_frame(frame));
  // all vertex classes are trivial, so all chambers coincide and cancel
  CHECK(pushforward_apartment(frame).is_zero());
}

TEST_CASE("corrupting a line breaks the frame axiom") {
  SymplecticFrame frame = build_frame(-20, 1, {{cls(-20, 1), cls(-20, 0)}});
  frame.lines.erase(-1);
  frame.lines.emplace(-1, frame.b_chain[1]);  // I_{-1} := a line inside B_1
  CHECK_FALSE(frame_axiom_check(frame).pass);
}

TEST_CASE("build_frame validates its inputs") {
  CHECK_THROWS(build_frame(-20, 1, {{cls(-20, 0), cls(-20, 0)}}));  // a = b
  CHECK_THROWS(build_frame(-20, 4, {}));                            // over the cap
  CHECK_THROWS(build_frame(-20, 2, {{cls(-20, 1), cls(-20, 0)}}));  // wrong count
}

TEST_CASE("frame json roundtrip") {
  SymplecticFrame frame = build_frame(-20, 1, {{cls(-20, 1), cls(-20, 0)}});
  SymplecticFrame back = SymplecticFrame::from_json(frame.to_json());
  CHECK(back.disc == frame.disc);
  CHECK(back.n == frame.n);
  CHECK(back.s_classes == frame.s_classes);
  CHECK(back.line(1) == frame.line(1));
  CHECK(back.line(-1) == frame.line(-1));
  CHECK(all_pass(verify_frame(back)));
}

TEST_CASE("pushforward respects the rank cap") {
  SymplecticFrame frame = standard_frame(-20, 2);
  frame.n = 4;  // simulate an oversized frame
  CHECK_THROWS(pushforward_apartment(frame));
}
