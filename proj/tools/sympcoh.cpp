// Command-line front end: wires the exact-arithmetic kernels into named
// verification suites and emits machine-readable reports (JSON on stdout,
// human-readable tables on stderr).
//
// Exit codes: 0 all checks passed, 1 a mathematical check failed, 2 usage or
// parameter error.

#include <chrono>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "sympcoh/frame.hpp"
#include "sympcoh/lattice.hpp"
#include "sympcoh/quadratic.hpp"
#include "sympcoh/report.hpp"
#include "sympcoh/signed_perm.hpp"
#include "sympcoh/steinberg.hpp"
#include "sympcoh/xn_complex.hpp"

namespace {

using namespace sympcoh;

constexpr int kMaxHomologyRank = 4;
const Int kMaxHomologyOrder(4);

class UsageError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

struct Timer {
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
  long long ms() const {
    return std::chrono::duration_cast<std::chrono::milliseconds>(
               std::chrono::steady_clock::now() - start)
        .count();
  }
};

int finish(Report& report, const Timer& timer) {
  report.elapsed_ms = timer.ms();
  std::cout << report.to_json().dump(2) << "\n";
  report.print_human(std::cerr);
  return report.all_pass() ? 0 : 1;
}

std::vector<std::pair<GroupElement, GroupElement>> parse_classes(const ClassGroup& cl,
                                                                 const std::string& spec,
                                                                 int n) {
  std::vector<std::pair<GroupElement, GroupElement>> out;
  std::stringstream ss(spec);
  std::string level;
  while (std::getline(ss, level, ';')) {
    auto comma = level.find(',');
    if (comma == std::string::npos)
      throw UsageError("--classes: each level needs two comma-separated indices");
    size_t ia = std::stoul(level.substr(0, comma));
    size_t ib = std::stoul(level.substr(comma + 1));
    size_t h = cl.forms().size();
    if (ia >= h || ib >= h)
      throw UsageError("--classes: index out of range (h = " + std::to_string(h) + ")");
    if (ia == ib) throw UsageError("--classes: a_i and b_i must differ");
    out.emplace_back(cl.coords_of(ia), cl.coords_of(ib));
  }
  if (static_cast<int>(out.size()) != n)
    throw UsageError("--classes: expected " + std::to_string(n) + " levels");
  return out;
}

std::string classes_str(const std::vector<std::pair<GroupElement, GroupElement>>& s) {
  std::string out;
  for (size_t i = 0; i < s.size(); ++i) {
    if (i) out += ";";
    out += s[i].first.str() + "," + s[i].second.str();
  }
  return out;
}

// ---------------------------------------------------------------------------

int cmd_classgroup(long long disc) {
  Timer timer;
  if (!QuadraticOrder::is_fundamental(disc))
    throw UsageError("--disc must be a fundamental negative discriminant");
  const ClassGroup& cl = ClassGroup::of(disc);
  Report report;
  report.suite = "classgroup";
  report.params = {{"disc", disc}};

  nlohmann::json forms = nlohmann::json::array();
  for (const auto& f : cl.forms()) forms.push_back(f.str());
  nlohmann::json reps = nlohmann::json::array();
  for (const auto& rep : cl.representatives()) reps.push_back(rep.to_json());
  report.add("class_number", true, cl.class_number().to_long_long());
  report.add("reduced_forms", true, forms);
  report.add("representative_ideals", true, reps);
  report.add("invariant_factors", true, cl.group().str());

  Int order(1);
  for (const Int& f : cl.group().factors()) order *= f;
  report.add("group_order_equals_h", order == cl.class_number());

  bool law = true;
  const size_t h = cl.forms().size();
  for (size_t i = 0; i < h && law; ++i)
    for (size_t j = 0; j < h && law; ++j) {
      GroupElement expect = cl.group().add(cl.coords_of(i), cl.coords_of(j));
      law = cl.class_of(cl.representatives()[i].mul(cl.representatives()[j])) == expect;
    }
  report.add("class_map_is_homomorphism", law);
  report.add("identity_is_principal_form",
             cl.class_of(FracIdeal::unit_ideal(cl.order())).is_zero());
  return finish(report, timer);
}

int cmd_homology(int n, const std::string& group_spec) {
  Timer timer;
  FiniteAbelianGroup group = FiniteAbelianGroup::parse(group_spec);
  if (n < 1 || n > kMaxHomologyRank) throw UsageError("--n must be in [1, 4]");
  if (group.order() > kMaxHomologyOrder) throw UsageError("--group order must be <= 4");

  XnComplex complex(n, group);
  HomologySummary summary = homology(complex);

  Report report;
  report.suite = "homology";
  report.params = {{"n", n}, {"group", group.str()}};
  report.add("summary", true, summary.to_json());

  Int expected_top = pow(group.order() - Int(1), static_cast<unsigned>(n));
  for (const auto& e : summary.entries) {
    Int expected = e.degree == n - 1 ? expected_top : Int(0);
    report.add("wedge_rank_degree_" + std::to_string(e.degree),
               Int(static_cast<long long>(e.rank)) == expected,
               {{"rank", e.rank}, {"expected", expected.to_long_long()}});
    report.add("torsion_free_degree_" + std::to_string(e.degree), e.torsion.empty());
  }
  return finish(report, timer);
}

int cmd_verify_symbolic(int n) {
  Timer timer;
  if (n < 1 || n > kMaxSymbolicRank) throw UsageError("--n must be in [1, 5]");
  GoodBadSplit split = split_good_bad(n);

  // Expected good part: one chamber per subset of the Coxeter word, entry
  // B_i or A_i per level, sign by the number of A's.
  FormalChain expected;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    Chamber chamber;
    int ones = 0;
    for (int i = 0; i < n; ++i) {
      bool a = (mask >> i) & 1u;
      ones += a ? 1 : 0;
      chamber.push_back(a ? VertexLabel::a_class(i + 1) : VertexLabel::b_class(i + 1));
    }
    expected.add(chamber, Int(ones % 2 == 0 ? 1 : -1));
  }

  Report report;
  report.suite = "verify-symbolic";
  report.params = {{"n", n}};
  nlohmann::json good_windows = nlohmann::json::array();
  for (const auto& sigma : all_elements(n))
    if (is_good(sigma)) good_windows.push_back(sigma.window_csv());
  report.add("good_part_matches_sigma_s_pattern", split.good == expected,
             {{"good_count", split.good_count}, {"good_elements", good_windows}});
  report.add("bad_part_cancels_to_zero", split.bad.is_zero(),
             {{"bad_count", split.bad_count}});
  FormalChain total = apartment_chain_symbolic(n);
  report.add("split_sums_to_apartment_chain", split.good + split.bad == total);
  report.add("good_count_is_2_pow_n", split.good_count == (1LL << n));
  return finish(report, timer);
}

SymplecticFrame obtain_frame(long long disc, int n, const std::string& classes,
                             const std::string& frame_file) {
  if (!frame_file.empty()) {
    std::ifstream in(frame_file);
    if (!in) throw UsageError("cannot open frame file: " + frame_file);
    nlohmann::json j;
    in >> j;
    return SymplecticFrame::from_json(j);
  }
  if (!QuadraticOrder::is_fundamental(disc))
    throw UsageError("--disc must be a fundamental negative discriminant");
  if (n < 1 || n > kMaxConcreteRank) throw UsageError("--n must be in [1, 3]");
  const ClassGroup& cl = ClassGroup::of(disc);
  return build_frame(disc, n, parse_classes(cl, classes, n));
}

int cmd_build_frame(long long disc, int n, const std::string& classes,
                    const std::string& out_file) {
  Timer timer;
  SymplecticFrame frame = obtain_frame(disc, n, classes, "");
  Report report;
  report.suite = "build-frame";
  report.params = {{"disc", disc}, {"n", n}, {"classes", classes_str(frame.s_classes)}};
  FrameCheck axiom = frame_axiom_check(frame);
  report.add(axiom.name, axiom.pass, axiom.witness);
  report.add("lines", true, [&] {
    nlohmann::json lines = nlohmann::json::object();
    for (const auto& [s, l] : frame.lines) lines[std::to_string(s)] = l.to_json();
    return lines;
  }());
  report.add("integral", true, is_integral_frame(frame));
  if (!out_file.empty()) {
    std::ofstream out(out_file);
    if (!out) throw UsageError("cannot write frame file: " + out_file);
    out << frame.to_json().dump(2) << "\n";
    report.add("written_to", true, out_file);
  }
  return finish(report, timer);
}

int cmd_verify_frame(long long disc, int n, const std::string& classes,
                     const std::string& frame_file) {
  Timer timer;
  SymplecticFrame frame = obtain_frame(disc, n, classes, frame_file);
  Report report;
  report.suite = "verify-frame";
  report.params = {{"disc", frame.disc},
                   {"n", frame.n},
                   {"classes", classes_str(frame.s_classes)}};
  for (const FrameCheck& c : verify_frame(frame))
    report.add(c.name, c.pass, c.witness.empty() ? nlohmann::json() : nlohmann::json(c.witness));
  return finish(report, timer);
}

int cmd_pushforward(long long disc, int n, const std::string& classes,
                    const std::string& frame_file) {
  Timer timer;
  SymplecticFrame frame = obtain_frame(disc, n, classes, frame_file);
  Report report;
  report.suite = "pushforward";
  report.params = {{"disc", frame.disc},
                   {"n", frame.n},
                   {"classes", classes_str(frame.s_classes)}};

  std::vector<FrameCheck> checks = verify_frame(frame);
  report.add("frame_verifies", all_pass(checks));

  const ClassGroup& cl = ClassGroup::of(frame.disc);
  XnComplex complex(frame.n, cl.group());
  FormalChain image = pushforward_apartment(frame);
  report.add("chain", true, image.to_json());
  report.add("is_cycle", complex.is_top_cycle(image));

  FormalChain target = sigma_s_cycle(complex, frame.s_classes);
  FormalChain difference = image - target;
  bool same_class = difference.is_zero() ||
                    class_span_rank(complex, {difference}) == 0;
  report.add("class_equals_sigma_s_cycle", same_class);
  report.add("integral", true, is_integral_frame(frame));
  return finish(report, timer);
}

int cmd_nonintegrality(long long h, int n) {
  Timer timer;
  if (h < 2) throw UsageError("--cl must be >= 2");
  if (n < 2 || n > kMaxSymbolicRank) throw UsageError("--n must be in [2, 5]");
  FiniteAbelianGroup group = FiniteAbelianGroup::cyclic(Int(h));
  IntegralImageCount count = count_integral_images(n, group);

  Report report;
  report.suite = "nonintegrality";
  report.params = {{"cl", h}, {"n", n}};
  report.add("counts", true,
             {{"distinct_nonzero_images", count.distinct_nonzero.to_long_long()},
              {"kappa_binomial", count.kappa_binomial.to_long_long()},
              {"wedge_rank", count.wedge_rank.to_long_long()}});
  report.add("count_le_kappa_binomial", count.distinct_nonzero <= count.kappa_binomial);
  report.add("kappa_binomial_lt_wedge_rank", count.kappa_binomial < count.wedge_rank);
  return finish(report, timer);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact-arithmetic verification suites for symplectic Steinberg "
               "module combinatorics over imaginary quadratic orders"};
  app.require_subcommand(1);

  unsigned long long seed = 12345;
  int jobs = 1;
  app.add_option("--seed", seed, "Seed for randomized property checks")->capture_default_str();
  app.add_option("--jobs", jobs, "Worker count; suites run sequentially when 1")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();

  long long disc = 0;
  int n = 1;
  std::string group_spec = "1";
  std::string classes;
  std::string frame_file;
  std::string out_file;
  long long cl_order = 2;

  CLI::App* c_class = app.add_subcommand("classgroup", "Class group of a discriminant");
  c_class->add_option("--disc", disc, "Fundamental negative discriminant")->required();

  CLI::App* c_hom = app.add_subcommand("homology", "Reduced homology of X_n(G)");
  c_hom->add_option("--n", n, "Rank (1..4)")->required();
  c_hom->add_option("--group", group_spec, "Invariant factors, e.g. 1, 2 or 2,2")->required();

  CLI::App* c_sym = app.add_subcommand("verify-symbolic", "Good/bad split of the symbolic apartment chain");
  c_sym->add_option("--n", n, "Rank (1..5)")->required();

  CLI::App* c_build = app.add_subcommand("build-frame", "Construct a symplectic frame");
  c_build->add_option("--disc", disc, "Fundamental negative discriminant")->required();
  c_build->add_option("--n", n, "Rank (1..3)")->required();
  c_build->add_option("--classes", classes, "Per level a,b indices into the reduced-form list, e.g. 1,0;0,1")->required();
  c_build->add_option("--out", out_file, "Write the frame (with certificates) to a JSON file");

  CLI::App* c_verify = app.add_subcommand("verify-frame", "Replay the construction invariants on a frame");
  c_verify->add_option("--disc", disc, "Fundamental negative discriminant");
  c_verify->add_option("--n", n, "Rank (1..3)");
  c_verify->add_option("--classes", classes, "Class indices (see build-frame)");
  c_verify->add_option("--frame", frame_file, "Load a frame JSON instead of rebuilding");

  CLI::App* c_push = app.add_subcommand("pushforward", "Apartment image in X_n(cl(R))");
  c_push->add_option("--disc", disc, "Fundamental negative discriminant");
  c_push->add_option("--n", n, "Rank (1..3)");
  c_push->add_option("--classes", classes, "Class indices (see build-frame)");
  c_push->add_option("--frame", frame_file, "Load a frame JSON instead of rebuilding");

  CLI::App* c_nonint = app.add_subcommand("nonintegrality", "Counting bound for integral-frame images");
  c_nonint->add_option("--cl", cl_order, "Class number h (>= 2)")->required();
  c_nonint->add_option("--n", n, "Rank (2..5)")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return e.get_exit_code() == 0 ? 0 : 2;
  }

  try {
    if (c_class->parsed()) return cmd_classgroup(disc);
    if (c_hom->parsed()) return cmd_homology(n, group_spec);
    if (c_sym->parsed()) return cmd_verify_symbolic(n);
    if (c_build->parsed()) return cmd_build_frame(disc, n, classes, out_file);
    if (c_verify->parsed()) return cmd_verify_frame(disc, n, classes, frame_file);
    if (c_push->parsed()) return cmd_pushforward(disc, n, classes, frame_file);
    if (c_nonint->parsed()) return cmd_nonintegrality(cl_order, n);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
