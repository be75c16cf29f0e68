#include "sympcoh/frame.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "sympcoh/signed_perm.hpp"

namespace sympcoh {

namespace {

/// Downward chain of isotropic summands with classes a_i: given `top` =
/// A^{(j)}_{top_rank} inside `enclosing`, produce A^{(j)}_1 < ... < A^{(j)}_{top_rank}
/// by repeatedly applying the relative extension to (B_{i-1}, A^{(j)}_{i+1}).
std::vector<RLattice> descend_a_chain(const std::vector<RLattice>& b_chain,
                                      const RLattice& top, int top_rank,
                                      const std::vector<std::pair<GroupElement, GroupElement>>& s) {
  std::vector<RLattice> chain(static_cast<size_t>(top_rank), top);
  for (int i = top_rank - 1; i >= 1; --i) {
    const RLattice& upper = chain[static_cast<size_t>(i)];
    chain[static_cast<size_t>(i - 1)] =
        relative_extension(b_chain[static_cast<size_t>(i - 1)], upper,
                           s[static_cast<size_t>(i - 1)].first);
  }
  return chain;
}

}  // namespace

SymplecticFrame build_frame(long long disc, int n,
                            const std::vector<std::pair<GroupElement, GroupElement>>& s) {
  if (n < 1) throw std::invalid_argument("build_frame: n must be >= 1");
  if (n > kMaxConcreteRank)
    throw std::domain_error("build_frame: concrete rank cap exceeded (n <= " +
                            std::to_string(kMaxConcreteRank) + ")");
  if (static_cast<int>(s.size()) != n)
    throw std::invalid_argument("build_frame: need one class pair per level");
  const ClassGroup& cl = ClassGroup::of(disc);
  for (const auto& [a, b] : s) {
    if (a.coords().size() != cl.group().num_factors() ||
        b.coords().size() != cl.group().num_factors())
      throw std::invalid_argument("build_frame: class outside cl(R)");
    if (a == b) throw std::invalid_argument("build_frame: a_i and b_i must differ");
  }

  SymplecticFrame frame;
  frame.disc = disc;
  frame.n = n;
  frame.s_classes = s;

  // B-chain with classes b_1, ..., b_n.
  std::vector<GroupElement> b_classes;
  for (const auto& [a, b] : s) b_classes.push_back(b);
  std::vector<RLattice> bs = isotropic_chain(disc, n, b_classes);
  frame.b_chain.push_back(RLattice::zero(disc, n));
  for (auto& b : bs) frame.b_chain.push_back(std::move(b));

  // A^{(j)} chains inside B_j for j = 2..n; the top element comes from the
  // pair B_{j-2} < B_j.
  frame.lines.emplace(1, frame.b_chain[1]);
  for (int j = 2; j <= n; ++j) {
    RLattice top = relative_extension(frame.b_chain[static_cast<size_t>(j - 2)],
                                      frame.b_chain[static_cast<size_t>(j)],
                                      s[static_cast<size_t>(j - 2)].first);
    std::vector<RLattice> chain = descend_a_chain(frame.b_chain, top, j - 1, s);
    frame.lines.emplace(j, chain.front());
    frame.a_chains.emplace(j, std::move(chain));
  }

  // Descending induction for I_{-n}, ..., I_{-1} inside the W_{j+1}.
  for (int j = n; j >= 1; --j) {
    RLattice w = orthogonal_complement(frame.b_chain[static_cast<size_t>(j - 1)]);
    for (int k = j + 1; k <= n; ++k) {
      w = w.intersect(orthogonal_complement(frame.line(k)));
      w = w.intersect(orthogonal_complement(frame.line(-k)));
    }
    RLattice top = relative_extension(frame.b_chain[static_cast<size_t>(j - 1)], w,
                                      s[static_cast<size_t>(j - 1)].first);
    std::vector<RLattice> chain = descend_a_chain(frame.b_chain, top, j, s);
    frame.lines.emplace(-j, chain.front());
    frame.a_chains.emplace(-j, std::move(chain));
    frame.w_lattices.emplace(j, std::move(w));
  }
  return frame;
}

std::vector<FrameCheck> verify_frame(const SymplecticFrame& frame) {
  std::vector<FrameCheck> checks;
  const long long disc = frame.disc;
  const int n = frame.n;
  if (frame.b_chain.size() != static_cast<size_t>(n) + 1)
    throw std::invalid_argument("verify_frame: frame carries no construction certificates");
  auto record = [&](const std::string& name, bool pass, const std::string& witness = "") {
    checks.push_back({name, pass, witness});
  };

  // Chain data: ranks, classes, isotropy, containments.
  for (int i = 1; i <= n; ++i) {
    const RLattice& b = frame.b_chain[static_cast<size_t>(i)];
    bool ok = is_summand(b) && b.r_rank() == i && is_isotropic(b) &&
              steinitz_class(b) == frame.s_classes[static_cast<size_t>(i - 1)].second &&
              b.contains(frame.b_chain[static_cast<size_t>(i - 1)]);
    record("b_chain_data_i" + std::to_string(i), ok);
  }
  for (const auto& [j, chain] : frame.a_chains) {
    for (size_t idx = 0; idx < chain.size(); ++idx) {
      int i = static_cast<int>(idx) + 1;
      const RLattice& a = chain[idx];
      bool ok = is_summand(a) && a.r_rank() == i && is_isotropic(a) &&
                steinitz_class(a) == frame.s_classes[static_cast<size_t>(i - 1)].first &&
                a.contains(frame.b_chain[static_cast<size_t>(i - 1)]);
      if (idx + 1 < chain.size()) ok = ok && chain[idx + 1].contains(a);
      if (j > 0 && idx + 1 == chain.size())
        ok = ok && frame.b_chain[static_cast<size_t>(j)].contains(a);
      if (j < 0 && idx + 1 == chain.size())
        ok = ok && frame.w_lattices.at(-j).contains(a);
      record("a_chain_data_j" + std::to_string(j) + "_i" + std::to_string(i), ok);
    }
  }

  // B_i meet A^{(+-j)}_i = B_{i-1}.
  for (const auto& [j, chain] : frame.a_chains) {
    for (size_t idx = 0; idx < chain.size(); ++idx) {
      int i = static_cast<int>(idx) + 1;
      if (i > n) continue;
      RLattice meet = frame.b_chain[static_cast<size_t>(i)].intersect(chain[idx]);
      bool ok = meet == frame.b_chain[static_cast<size_t>(i - 1)];
      record("b_meet_a_j" + std::to_string(j) + "_i" + std::to_string(i), ok);
    }
  }

  // I_j is not contained in B_{j-1}; I_{-j} is not contained in B_j.
  for (int j = 1; j <= n; ++j) {
    record("line_not_in_b_j" + std::to_string(j),
           !frame.b_chain[static_cast<size_t>(j - 1)].contains(frame.line(j)));
    record("line_not_in_b_j-" + std::to_string(j),
           !frame.b_chain[static_cast<size_t>(j)].contains(frame.line(-j)));
  }

  // Frame axiom: I_i + I_j isotropic iff j != -i.
  checks.push_back(frame_axiom_check(frame));

  // Partial sums B_{2n-j+1} = Sat(I_1+...+I_n+I_{-n}+...+I_{-j}): rank
  // 2n-j+1 and orthogonal complement B_{j-1}.
  {
    RLattice acc = RLattice::zero(disc, n);
    for (int i = 1; i <= n; ++i) acc = acc.sum(frame.line(i));
    for (int j = n; j >= 1; --j) {
      acc = acc.sum(frame.line(-j));
      RLattice sat = saturate(acc);
      bool rank_ok = sat.r_rank() == 2 * n - j + 1;
      bool perp_ok = orthogonal_complement(sat) == frame.b_chain[static_cast<size_t>(j - 1)];
      record("partial_sum_rank_j" + std::to_string(j), rank_ok);
      record("partial_sum_perp_j" + std::to_string(j), perp_ok);
    }
  }

  // Saturation identities: Sat(I_1+...+I_i) = B_i and Sat(B_i + I_j) =
  // A^{(j)}_{i+1} for j in {-(i+1), +-(i+2), ..., +-n}.
  {
    RLattice acc = RLattice::zero(disc, n);
    for (int i = 1; i <= n; ++i) {
      acc = acc.sum(frame.line(i));
      record("sat_prefix_i" + std::to_string(i),
             saturate(acc) == frame.b_chain[static_cast<size_t>(i)]);
    }
  }
  for (int i = 0; i <= n - 1; ++i) {
    std::vector<int> js;
    js.push_back(-(i + 1));
    for (int k = i + 2; k <= n; ++k) {
      js.push_back(k);
      js.push_back(-k);
    }
    for (int j : js) {
      RLattice sat = saturate(frame.b_chain[static_cast<size_t>(i)].sum(frame.line(j)));
      bool ok = sat == frame.a_chains.at(j)[static_cast<size_t>(i)];
      record("sat_b" + std::to_string(i) + "_plus_line_j" + std::to_string(j), ok);
    }
  }

  // Line classes: [I_1] = b_1, [I_j] = a_1 otherwise.
  for (int j = -n; j <= n; ++j) {
    if (j == 0) continue;
    GroupElement expected =
        j == 1 ? frame.s_classes[0].second : frame.s_classes[0].first;
    record("line_class_j" + std::to_string(j),
           steinitz_class(frame.line(j)) == expected);
  }
  return checks;
}

FrameCheck frame_axiom_check(const SymplecticFrame& frame) {
  const int n = frame.n;
  std::vector<int> indices;
  for (int i = 1; i <= n; ++i) {
    indices.push_back(i);
    indices.push_back(-i);
  }
  for (size_t x = 0; x < indices.size(); ++x)
    for (size_t y = x + 1; y < indices.size(); ++y) {
      int i = indices[x], j = indices[y];
      bool isotropic = is_isotropic(frame.line(i).sum(frame.line(j)));
      if (isotropic != (j != -i))
        return {"frame_axiom", false,
                "pair (" + std::to_string(i) + "," + std::to_string(j) + ")"};
    }
  return {"frame_axiom", true, ""};
}

bool all_pass(const std::vector<FrameCheck>& checks) {
  return std::all_of(checks.begin(), checks.end(),
                     [](const FrameCheck& c) { return c.pass; });
}

bool is_integral_frame(const SymplecticFrame& frame) {
  RLattice acc = RLattice::zero(frame.disc, frame.n);
  for (const auto& [s, line] : frame.lines) acc = acc.sum(line);
  return acc == RLattice::standard(frame.disc, frame.n);
}

FormalChain pushforward_apartment(const SymplecticFrame& frame) {
  const int n = frame.n;
  if (n > kMaxConcreteRank)
    throw std::domain_error("pushforward_apartment: concrete rank cap exceeded");

  // One saturated partial sum per admissible subset, shared across sigma.
  std::map<std::vector<int>, VertexLabel> vertex_cache;
  auto vertex_of = [&](const std::vector<int>& subset) {
    auto it = vertex_cache.find(subset);
    if (it != vertex_cache.end()) return it->second;
    RLattice sum = RLattice::zero(frame.disc, n);
    for (int s : subset) sum = sum.sum(frame.line(s));
    RLattice sat = saturate(sum);
    VertexLabel label =
        VertexLabel::concrete(sat.r_rank(), steinitz_class(sat));
    vertex_cache.emplace(subset, label);
    return label;
  };

  FormalChain chain;
  for (const auto& sigma : all_elements(n)) {
    Chamber chamber;
    chamber.reserve(static_cast<size_t>(n));
    for (int m = 1; m <= n; ++m) chamber.push_back(vertex_of(sigma.image_of_prefix(m)));
    chain.add(chamber, Int(sigma.length_parity()));
  }
  return chain;
}

SymplecticFrame standard_frame(long long disc, int n) {
  SymplecticFrame frame;
  frame.disc = disc;
  frame.n = n;
  const ClassGroup& cl = ClassGroup::of(disc);
  for (int i = 0; i < n; ++i)
    frame.s_classes.emplace_back(cl.group().zero(), cl.group().zero());
  for (int s = -n; s <= n; ++s) {
    if (s == 0) continue;
    QMat rows(2, 4 * n);
    rows.setZero();
    Index p = SymplecticSpace::position(s, n);
    rows(0, 2 * p) = Rat(1);
    rows(1, 2 * p + 1) = Rat(1);
    frame.lines.emplace(s, RLattice::from_rows(disc, n, rows));
  }
  return frame;
}

nlohmann::json SymplecticFrame::to_json() const {
  nlohmann::json classes = nlohmann::json::array();
  for (const auto& [a, b] : s_classes)
    classes.push_back({{"a", a.str()}, {"b", b.str()}});
  nlohmann::json lines_json = nlohmann::json::object();
  for (const auto& [s, l] : lines) lines_json[std::to_string(s)] = l.to_json();
  nlohmann::json b_json = nlohmann::json::array();
  for (const auto& b : b_chain) b_json.push_back(b.to_json());
  nlohmann::json a_json = nlohmann::json::object();
  for (const auto& [j, chain] : a_chains) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& a : chain) arr.push_back(a.to_json());
    a_json[std::to_string(j)] = std::move(arr);
  }
  nlohmann::json w_json = nlohmann::json::object();
  for (const auto& [j, w] : w_lattices) w_json[std::to_string(j)] = w.to_json();
  return {{"disc", disc},     {"n", n},           {"classes", classes},
          {"lines", lines_json}, {"b_chain", b_json}, {"a_chains", a_json},
          {"w_lattices", w_json}};
}

SymplecticFrame SymplecticFrame::from_json(const nlohmann::json& j) {
  SymplecticFrame frame;
  frame.disc = j.at("disc").get<long long>();
  frame.n = j.at("n").get<int>();
  const ClassGroup& cl = ClassGroup::of(frame.disc);
  auto parse_element = [&](const std::string& s) {
    if (cl.group().num_factors() == 0) return cl.group().zero();
    std::vector<Int> coords;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ':')) coords.emplace_back(tok);
    return cl.group().element(std::move(coords));
  };
  for (const auto& pair : j.at("classes"))
    frame.s_classes.emplace_back(parse_element(pair.at("a").get<std::string>()),
                                 parse_element(pair.at("b").get<std::string>()));
  for (const auto& [key, value] : j.at("lines").items())
    frame.lines.emplace(std::stoi(key), RLattice::from_json(value));
  for (const auto& value : j.at("b_chain")) frame.b_chain.push_back(RLattice::from_json(value));
  for (const auto& [key, value] : j.at("a_chains").items()) {
    std::vector<RLattice> chain;
    for (const auto& l : value) chain.push_back(RLattice::from_json(l));
    frame.a_chains.emplace(std::stoi(key), std::move(chain));
  }
  for (const auto& [key, value] : j.at("w_lattices").items())
    frame.w_lattices.emplace(std::stoi(key), RLattice::from_json(value));
  return frame;
}

}  // namespace sympcoh
