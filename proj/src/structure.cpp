#include "stralg/structure.hpp"

#include <algorithm>
#include <cassert>

namespace stralg {

namespace {

// The unique arrow extending q admissibly on the given side, if any.
// Throws when two extensions are admissible (the ideal is not special).
struct Extension {
  bool has_composable = false;
  int arrow = -1;
  Path extended;
};

Extension admissible_extension(const TruncatedAlgebra& A, const Path& q, Side side) {
  const Quiver& Q = A.quiver();
  Extension ext;
  for (int x = 0; x < Q.num_arrows(); ++x) {
    std::optional<Path> e = side == Side::left
                                ? compose(Q, Path::of_arrow(Q, x), q)
                                : compose(Q, q, Path::of_arrow(Q, x));
    if (!e) continue;
    ext.has_composable = true;
    if (!A.path_admissible(*e)) continue;
    if (ext.arrow >= 0)
      throw Error(Errc::not_a_string_algebra,
                  "two admissible one-arrow extensions of " + q.str(Q) +
                      ": the ideal is not special");
    ext.arrow = x;
    ext.extended = *e;
  }
  return ext;
}

} // namespace

UniserialChain uniserial_chain(const TruncatedAlgebra& A, const Path& p, Side side) {
  const Quiver& Q = A.quiver();
  if (p.is_trivial())
    throw Error(Errc::inadmissible_path, "chains start at non-trivial paths");
  if (!A.path_admissible(p))
    throw Error(Errc::inadmissible_path, "path " + p.str(Q) + " lies in the ideal");

  UniserialChain out;
  out.generator = p;
  out.side = side;
  out.chain.push_back(p);
  out.strict = true;

  std::vector<RowModule> modules;
  modules.push_back(A.cyclic(side, A.path_row(p)));

  size_t cap = (size_t)k_dimension(A.algebra_profile()) + 2;
  Path cur = p;
  for (;;) {
    Extension ext = admissible_extension(A, cur, side);
    if (ext.arrow < 0) {
      out.terminal = ext.has_composable
                         ? UniserialChain::Terminal::zero_at_precision
                         : UniserialChain::Terminal::no_admissible_extension;
      break;
    }
    Path next = ext.extended;
    RowModule next_mod = A.cyclic(side, A.path_row(next));
    const RowModule& cur_mod = modules.back();
    bool contained = cur_mod.contains(next_mod);
    bool strict = !next_mod.contains_vector(A.path_row(cur));
    if (!contained || !strict) out.strict = false;
    // chain entries are pairwise distinct paths (lengths increase)
    assert(next.length() > cur.length());
    out.chain.push_back(next);
    modules.push_back(std::move(next_mod));
    cur = next;
    if (out.chain.size() > cap)
      throw Error(Errc::not_finite_at_precision,
                  "extension chain of " + p.str(Q) + " fails to terminate");
  }

  // exhaustiveness: nonzero monomial-generated cyclic submodules of the
  // module of p all occur as chain entries
  out.exhaustive = true;
  const RowModule& top = modules.front();
  for (const auto& m : A.basis()) {
    Row rm = A.path_row(m);
    if (A.row_is_zero(rm)) continue;
    if (!top.contains_vector(rm)) continue;
    RowModule cyc = A.cyclic(side, rm);
    bool matched = false;
    for (const auto& mod : modules)
      if (mod == cyc) {
        matched = true;
        break;
      }
    if (!matched) {
      out.exhaustive = false;
      break;
    }
  }
  return out;
}

KernelReport cover_kernel(const TruncatedAlgebra& A, const Path& p, Side side) {
  const Quiver& Q = A.quiver();
  if (p.is_trivial())
    throw Error(Errc::inadmissible_path, "cover kernels of non-trivial paths only");
  if (!A.path_admissible(p))
    throw Error(Errc::inadmissible_path, "path " + p.str(Q) + " lies in the ideal");

  KernelReport rep;
  rep.p = p;
  rep.side = side;
  int v = side == Side::left ? p.head() : p.tail();
  rep.cover_vertex = v;
  auto incident = side == Side::left ? Q.arrows_with_tail(v) : Q.arrows_with_head(v);

  // the unique arrow extending p admissibly, when present
  Extension ext = admissible_extension(A, p, side);

  std::vector<Row> comb_rows;
  for (int b : incident) {
    if (b == ext.arrow) continue;
    rep.summands.push_back({true, Path::of_arrow(Q, b)});
    auto cyc = A.cyclic(side, A.path_row(Path::of_arrow(Q, b)));
    comb_rows.insert(comb_rows.end(), cyc.rows().begin(), cyc.rows().end());
  }

  if (ext.arrow >= 0) {
    // walk the admissible extension chain of the arrow for the shortest q
    // whose product with p dies
    Path q = Path::of_arrow(Q, ext.arrow);
    for (;;) {
      std::optional<Path> qp = side == Side::left ? compose(Q, q, p)
                                                  : compose(Q, p, q);
      assert(qp);
      if (!A.path_admissible(*qp)) {
        rep.obstruction_found = true;
        rep.summands.push_back({false, q});
        auto cyc = A.cyclic(side, A.path_row(q));
        comb_rows.insert(comb_rows.end(), cyc.rows().begin(), cyc.rows().end());
        break;
      }
      Extension qe = admissible_extension(A, q, side);
      if (qe.arrow < 0) break; // chain dead at precision; case without obstruction
      q = qe.extended;
    }
  }
  rep.combinatorial = A.span(comb_rows);

  // brute force: kernel of multiplication by p out of the principal module
  const ChainRing& R = A.ring();
  int nb = (int)A.basis().size();
  std::vector<int> domain;
  for (int i = 0; i < nb; ++i) {
    int anchor = side == Side::left ? A.basis()[i].tail() : A.basis()[i].head();
    if (anchor == v) domain.push_back(i);
  }
  HowellBuilder builder(R, nb + (int)domain.size());
  for (size_t d = 0; d < domain.size(); ++d) {
    Row unit = A.zero_row();
    unit[domain[d]] = R.one();
    Row img = side == Side::left ? A.right_mult_path(unit, p)
                                 : A.left_mult_path(p, unit);
    Row big(nb + domain.size(), 0);
    std::copy(img.begin(), img.end(), big.begin());
    big[nb + d] = R.one();
    builder.add_row(std::move(big));
  }
  for (const auto& t : A.torsion_module().rows()) {
    Row big(nb + domain.size(), 0);
    std::copy(t.begin(), t.end(), big.begin());
    builder.add_row(std::move(big));
  }
  RowModule full = builder.finish();
  std::vector<Row> brute_rows;
  for (int i = 0; i < full.num_rows(); ++i) {
    if (full.pivot_col(i) < nb) continue;
    const Row& r = full.rows()[i];
    Row emb = A.zero_row();
    for (size_t d = 0; d < domain.size(); ++d) emb[domain[d]] = r[nb + d];
    brute_rows.push_back(std::move(emb));
  }
  rep.brute = A.span(brute_rows);
  rep.brute_force_agreement = (rep.combinatorial == rep.brute);

  // at most two summands and pairwise trivial intersections at precision
  rep.summands_independent = true;
  std::vector<RowModule> mods;
  for (const auto& s : rep.summands)
    mods.push_back(A.cyclic(side, A.path_row(s.path)));
  for (size_t i = 0; i < mods.size(); ++i)
    for (size_t j = i + 1; j < mods.size(); ++j)
      if (!A.module_is_zero(intersect(mods[i], mods[j])))
        rep.summands_independent = false;
  return rep;
}

std::vector<KernelReport> radical_syzygies(const TruncatedAlgebra& A,
                                           const AxiomReport& report) {
  if (!report.string_holds())
    throw Error(Errc::not_a_string_algebra,
                "radical syzygies need a string-algebra verdict");
  const Quiver& Q = A.quiver();
  std::vector<KernelReport> out;
  for (int v = 0; v < Q.num_vertices(); ++v) {
    for (Side side : {Side::left, Side::right}) {
      auto incident =
          side == Side::left ? Q.arrows_with_tail(v) : Q.arrows_with_head(v);
      for (int a : incident) {
        Path pa = Path::of_arrow(Q, a);
        if (!A.path_admissible(pa)) continue;
        out.push_back(cover_kernel(A, pa, side));
      }
    }
  }
  return out;
}

GabrielQuiverReport gabriel_quiver(const TruncatedAlgebra& A) {
  const Quiver& Q = A.quiver();
  const auto& rad = A.radical();
  RowModule j2 = A.mult_module(rad.module, rad.module);

  GabrielQuiverReport rep;
  int n = Q.num_vertices();
  rep.arrow_counts.assign(n, std::vector<unsigned>(n, 0));
  for (int i = 0; i < n; ++i) {
    Path ei = Path::trivial(Q, i);
    for (int j = 0; j < n; ++j) {
      Path ej = Path::trivial(Q, j);
      // e_j J e_i + J^2 over J^2
      std::vector<Row> plus = j2.rows();
      for (const auto& r : rad.module.rows())
        plus.push_back(A.left_mult_path(ej, A.right_mult_path(r, ei)));
      auto u = A.span(std::move(plus));
      auto w = A.span(j2.rows());
      rep.arrow_counts[i][j] = k_dimension(subquotient_profile(u, w));
    }
  }
  rep.matches_input = true;
  std::vector<std::vector<unsigned>> input(n, std::vector<unsigned>(n, 0));
  for (int a = 0; a < Q.num_arrows(); ++a) input[Q.tail(a)][Q.head(a)]++;
  if (input != rep.arrow_counts) rep.matches_input = false;
  return rep;
}

RadicalCompatibility radical_compatibility(const TruncatedAlgebra& A, const Path& p) {
  const Quiver& Q = A.quiver();
  if (p.is_trivial() || !A.path_admissible(p))
    throw Error(Errc::inadmissible_path,
                "radical compatibility needs an admissible non-trivial path");
  const auto& rad = A.radical();
  Path b = Path::of_arrow(Q, p.left_arrow());
  Path a = Path::of_arrow(Q, p.right_arrow());

  std::vector<Row> jp_rows, pj_rows;
  for (const auto& r : rad.module.rows()) {
    jp_rows.push_back(A.right_mult_path(r, p));
    pj_rows.push_back(A.left_mult_path(p, r));
  }
  auto jp = A.span(std::move(jp_rows));
  auto pj = A.span(std::move(pj_rows));
  auto b_right = A.cyclic(Side::right, A.path_row(b)); // b Lambda
  auto a_left = A.cyclic(Side::left, A.path_row(a));   // Lambda a

  RadicalCompatibility out;
  out.left_inclusion = pj.contains(intersect(jp, b_right));
  out.right_inclusion = jp.contains(intersect(pj, a_left));
  return out;
}

} // namespace stralg
