#include "stralg/axioms.hpp"

#include <algorithm>
#include <cassert>
#include <set>

#include "stralg/structure.hpp"

namespace stralg {

namespace {

std::string arrow_list(const Quiver& Q, const std::vector<int>& arrows) {
  std::string s = "{";
  for (size_t i = 0; i < arrows.size(); ++i) {
    if (i) s += ", ";
    s += Q.arrow_name(arrows[i]);
  }
  return s + "}";
}

} // namespace

AxiomCheck AxiomChecker::check_permissible() const {
  const Quiver& Q = A.quiver();
  for (int a = 0; a < Q.num_arrows(); ++a) {
    if (!A.path_admissible(Path::of_arrow(Q, a)))
      return {Verdict::fails, "arrow " + Q.arrow_name(a) + " lies in the ideal", ""};
  }
  return {Verdict::holds, "", ""};
}

AxiomCheck AxiomChecker::check_special() const {
  const Quiver& Q = A.quiver();
  for (int b = 0; b < Q.num_arrows(); ++b) {
    Path pb = Path::of_arrow(Q, b);
    std::vector<int> left_ext, right_ext;
    for (int a = 0; a < Q.num_arrows(); ++a) {
      if (Q.tail(a) == Q.head(b)) {
        auto ab = compose(Q, Path::of_arrow(Q, a), pb);
        if (ab && A.path_admissible(*ab)) left_ext.push_back(a);
      }
      if (Q.head(a) == Q.tail(b)) {
        auto ba = compose(Q, pb, Path::of_arrow(Q, a));
        if (ba && A.path_admissible(*ba)) right_ext.push_back(a);
      }
    }
    if (left_ext.size() > 1)
      return {Verdict::fails,
              "arrow " + Q.arrow_name(b) + " extends admissibly on the left by " +
                  arrow_list(Q, left_ext),
              ""};
    if (right_ext.size() > 1)
      return {Verdict::fails,
              "arrow " + Q.arrow_name(b) + " extends admissibly on the right by " +
                  arrow_list(Q, right_ext),
              ""};
  }
  return {Verdict::holds, "", ""};
}

RowModule AxiomChecker::arrow_module(Side side, int arrow) const {
  return A.cyclic(side, A.path_row(Path::of_arrow(A.quiver(), arrow)));
}

RowModule AxiomChecker::competing_sum(Side side, int arrow) const {
  const Quiver& Q = A.quiver();
  std::vector<Row> rows;
  for (int b = 0; b < Q.num_arrows(); ++b) {
    if (b == arrow) continue;
    bool same_end = side == Side::left ? Q.tail(b) == Q.tail(arrow)
                                       : Q.head(b) == Q.head(arrow);
    if (!same_end) continue;
    auto cyc = arrow_module(side, b);
    for (const auto& r : cyc.rows()) rows.push_back(r);
  }
  return A.span(std::move(rows));
}

AxiomCheck AxiomChecker::check_arrow_direct() const {
  const Quiver& Q = A.quiver();
  for (Side side : {Side::left, Side::right}) {
    for (int a = 0; a < Q.num_arrows(); ++a) {
      auto meet = intersect(arrow_module(side, a), competing_sum(side, a));
      if (!A.module_is_zero(meet)) {
        std::string w;
        for (const auto& r : meet.rows())
          if (!A.row_is_zero(r)) {
            w = A.row_to_elem(r).str();
            break;
          }
        return {Verdict::fails,
                std::string(side_name(side)) + " module of arrow " + Q.arrow_name(a) +
                    " meets the other arrows in " + w,
                ""};
      }
    }
  }
  return {Verdict::holds, "", ""};
}

AxiomCheck AxiomChecker::check_arrow_distinct() const {
  const Quiver& Q = A.quiver();
  const auto& rad = A.radical();
  for (Side side : {Side::left, Side::right}) {
    for (int a = 0; a < Q.num_arrows(); ++a) {
      auto mod = arrow_module(side, a);
      auto meet = intersect(mod, competing_sum(side, a));
      auto bound = side == Side::left ? A.mult_module(rad.module, mod)
                                      : A.mult_module(mod, rad.module);
      if (!bound.contains(meet)) {
        std::string w;
        for (const auto& r : meet.rows())
          if (!bound.contains_vector(r)) {
            w = A.row_to_elem(r).str();
            break;
          }
        return {Verdict::fails,
                std::string(side_name(side)) + " module of arrow " + Q.arrow_name(a) +
                    " meets the other arrows outside its radical: " + w,
                ""};
      }
    }
  }
  return {Verdict::holds, "", ""};
}

AxiomCheck AxiomChecker::check_arrow_radical() const {
  const Quiver& Q = A.quiver();
  const ChainRing& R = A.ring();
  const auto& rad = A.radical();

  // (ii) the arrow-and-pi ideal must be nilpotent
  if (!rad.nilpotent)
    return {Verdict::fails, "the ideal of arrows and pi is not nilpotent", ""};

  for (int v = 0; v < Q.num_vertices(); ++v) {
    Row ev = A.path_row(Path::trivial(Q, v));
    for (Side side : {Side::left, Side::right}) {
      auto incident =
          side == Side::left ? Q.arrows_with_tail(v) : Q.arrows_with_head(v);
      // (i) pi e_v lies in the arrow-generated submodule
      std::vector<Row> arrow_rows;
      for (int a : incident) {
        auto cyc = arrow_module(side, a);
        arrow_rows.insert(arrow_rows.end(), cyc.rows().begin(), cyc.rows().end());
      }
      auto arrows_mod = A.span(std::move(arrow_rows));
      if (R.pi() != 0) {
        Row piev = ev;
        for (auto& x : piev) x = R.mul(R.pi(), x);
        if (!arrows_mod.contains_vector(piev))
          return {Verdict::fails,
                  "pi e_" + Q.vertex_name(v) + " is outside the " +
                      std::string(side_name(side)) + " arrow-generated submodule",
                  ""};
      }
      // (iii) the principal module modulo the arrow ideal has k-rank 1
      auto principal = A.cyclic(side, ev);
      std::vector<Row> jv;
      Path triv = Path::trivial(Q, v);
      for (const auto& r : rad.module.rows())
        jv.push_back(side == Side::left ? A.right_mult_path(r, triv)
                                        : A.left_mult_path(triv, r));
      auto top = subquotient_profile(principal, A.span(std::move(jv)));
      if (k_dimension(top) != 1)
        return {Verdict::fails,
                "principal " + std::string(side_name(side)) + " module at vertex " +
                    Q.vertex_name(v) + " has simple top of k-dimension " +
                    std::to_string(k_dimension(top)),
                ""};
    }
  }
  return {Verdict::holds, "", ""};
}

AxiomCheck AxiomChecker::check_bounded_below(int* minimal_m) const {
  if (minimal_m) *minimal_m = -1;
  const auto& mons = A.monomials();
  int L = A.window();
  for (int m = 1; m <= L; ++m) {
    bool all_radical = true;
    for (const auto& p : mons) {
      if (p.length() != m) continue;
      Row r = A.path_row(p);
      for (uint64_t c : r)
        if (c != 0 && A.ring().valuation(c) == 0) {
          all_radical = false;
          break;
        }
      if (!all_radical) break;
    }
    if (all_radical) {
      if (minimal_m) *minimal_m = m;
      return {Verdict::holds, "",
              "minimal m = " + std::to_string(m) + " within window " +
                  std::to_string(L)};
    }
  }
  return {Verdict::fails,
          "some path of every length up to " + std::to_string(L) +
              " keeps a unit coefficient",
          ""};
}

AxiomCheck AxiomChecker::check_degree_le_2() const {
  const Quiver& Q = A.quiver();
  auto degs = Q.vertex_degrees();
  for (int v = 0; v < Q.num_vertices(); ++v) {
    if (degs[v].first > 2)
      return {Verdict::fails,
              "vertex " + Q.vertex_name(v) + " is the head of " +
                  std::to_string(degs[v].first) + " arrows",
              ""};
    if (degs[v].second > 2)
      return {Verdict::fails,
              "vertex " + Q.vertex_name(v) + " is the tail of " +
                  std::to_string(degs[v].second) + " arrows",
              ""};
  }
  return {Verdict::holds, "", ""};
}

AxiomCheck AxiomChecker::check_biserial() const {
  const Quiver& Q = A.quiver();
  auto degree = check_degree_le_2();
  if (!degree.holds()) return degree;
  for (int v = 0; v < Q.num_vertices(); ++v) {
    for (Side side : {Side::left, Side::right}) {
      auto incident =
          side == Side::left ? Q.arrows_with_tail(v) : Q.arrows_with_head(v);
      for (size_t i = 0; i < incident.size(); ++i)
        for (size_t j = i + 1; j < incident.size(); ++j) {
          auto meet = intersect(arrow_module(side, incident[i]),
                                arrow_module(side, incident[j]));
          if (!A.module_is_zero(meet))
            return {Verdict::fails,
                    "arrow summands " + Q.arrow_name(incident[i]) + " and " +
                        Q.arrow_name(incident[j]) + " of the " +
                        std::string(side_name(side)) + " radical at vertex " +
                        Q.vertex_name(v) + " overlap",
                    ""};
        }
      for (int a : incident) {
        Path pa = Path::of_arrow(Q, a);
        if (!A.path_admissible(pa)) continue; // zero summand
        auto chain = uniserial_chain(A, pa, side);
        if (!chain.strict || !chain.exhaustive)
          return {Verdict::fails,
                  "the " + std::string(side_name(side)) + " module of arrow " +
                      Q.arrow_name(a) + " is not certified uniserial",
                  ""};
      }
    }
  }
  return {Verdict::holds, "", ""};
}

AxiomReport AxiomChecker::check_string() const {
  AxiomReport rep;
  rep.precision = A.precision();
  rep.window = A.window();
  rep.permissible = check_permissible();
  rep.special = check_special();
  rep.arrow_direct = check_arrow_direct();
  rep.arrow_distinct = check_arrow_distinct();
  rep.arrow_radical = check_arrow_radical();
  rep.bounded_below = check_bounded_below(&rep.minimal_m);
  rep.degree_le_2 = check_degree_le_2();

  // arrow-direct forces arrow-distinct; a violation is a checker bug
  assert(!(rep.arrow_direct.holds() && rep.arrow_distinct.verdict == Verdict::fails));

  if (!rep.permissible.holds()) {
    rep.bounded_above = {Verdict::fails, rep.permissible.witness,
                         "an inadmissible arrow rules out the degree sandwich"};
  } else if (rep.arrow_radical.holds() && rep.arrow_distinct.holds()) {
    rep.bounded_above = {Verdict::holds, "",
                         "derived from permissible together with arrow-radical "
                         "and arrow-distinct"};
  } else {
    rep.bounded_above = {Verdict::not_applicable, "",
                         "not derivable: needs permissible, arrow-radical and "
                         "arrow-distinct"};
  }

  bool all = rep.arrow_radical.holds() && rep.arrow_direct.holds() &&
             rep.permissible.holds() && rep.special.holds() &&
             rep.degree_le_2.holds() && rep.bounded_below.holds();
  if (all) {
    rep.string_algebra = {Verdict::holds, "", ""};
    rep.biserial = check_biserial();
  } else {
    std::string first;
    if (!rep.arrow_radical.holds()) first = "arrow_radical";
    else if (!rep.arrow_direct.holds()) first = "arrow_direct";
    else if (!rep.permissible.holds()) first = "permissible";
    else if (!rep.special.holds()) first = "special";
    else if (!rep.degree_le_2.holds()) first = "degree_le_2";
    else first = "bounded_below";
    rep.string_algebra = {Verdict::fails, first + " fails", ""};
    rep.biserial = {Verdict::not_applicable, "", "checked only for string algebras"};
  }
  return rep;
}

ButlerRingelVerdict butler_ringel_check(const Presentation& pres, int length_cap) {
  const Quiver& Q = *pres.quiver;
  if (!pres.ring.is_field()) return {false, "coefficients are not a field"};

  // monomial generators only
  std::vector<Path> zero_paths;
  for (const auto& g : pres.generators) {
    if (g.support().size() != 1) return {false, "a generator is not a single path"};
    const auto& [p, c] = *g.support().begin();
    if (pres.ring.valuation(c) != 0)
      return {false, "a generator has a non-unit coefficient"};
    zero_paths.push_back(p);
  }
  for (const auto& z : zero_paths) {
    if (z.length() == 0) return {false, "a trivial path generates the ideal"};
    if (z.length() == 1) return {false, "arrow " + z.str(Q) + " lies in the ideal"};
  }

  auto contains_zero_subword = [&](const Path& p) {
    const auto& w = p.word();
    for (const auto& z : zero_paths) {
      const auto& zw = z.word();
      if (zw.size() > w.size()) continue;
      for (size_t i = 0; i + zw.size() <= w.size(); ++i)
        if (std::equal(zw.begin(), zw.end(), w.begin() + i)) return true;
    }
    return false;
  };

  for (auto [in, out] : Q.vertex_degrees())
    if (in > 2 || out > 2)
      return {false, "a vertex has more than 2 arrows on one side"};

  // (SP): at most one admissible extension per arrow and side
  for (int b = 0; b < Q.num_arrows(); ++b) {
    int lext = 0, rext = 0;
    for (int a = 0; a < Q.num_arrows(); ++a) {
      if (Q.tail(a) == Q.head(b)) {
        Path ab = *compose(Q, Path::of_arrow(Q, a), Path::of_arrow(Q, b));
        if (!contains_zero_subword(ab)) ++lext;
      }
      if (Q.head(a) == Q.tail(b)) {
        Path ba = *compose(Q, Path::of_arrow(Q, b), Path::of_arrow(Q, a));
        if (!contains_zero_subword(ba)) ++rext;
      }
    }
    if (lext > 1 || rext > 1)
      return {false, "arrow " + Q.arrow_name(b) + " has two admissible extensions"};
  }

  // finite-dimensionality: admissible words die out within the cap
  std::vector<Path> layer;
  for (int a = 0; a < Q.num_arrows(); ++a) {
    Path p = Path::of_arrow(Q, a);
    if (!contains_zero_subword(p)) layer.push_back(p);
  }
  for (int len = 1; len <= length_cap; ++len) {
    if (layer.empty()) return {true, ""};
    std::vector<Path> next;
    for (const auto& p : layer)
      for (int a = 0; a < Q.num_arrows(); ++a) {
        if (Q.tail(a) != p.head()) continue;
        Path q = *compose(Q, Path::of_arrow(Q, a), p);
        if (!contains_zero_subword(q)) next.push_back(q);
      }
    layer = std::move(next);
  }
  return {false, "admissible words survive past the length cap"};
}

} // namespace stralg
