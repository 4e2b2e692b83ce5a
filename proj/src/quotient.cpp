#include "stralg/quotient.hpp"

#include <algorithm>
#include <cassert>

namespace stralg {

Presentation opposite(const Presentation& pres) {
  const Quiver& Q = *pres.quiver;
  std::vector<std::string> vertices;
  for (int v = 0; v < Q.num_vertices(); ++v) vertices.push_back(Q.vertex_name(v));
  std::vector<ArrowSpec> arrows;
  for (int a = 0; a < Q.num_arrows(); ++a)
    arrows.push_back({Q.arrow_name(a), Q.vertex_name(Q.head(a)), Q.vertex_name(Q.tail(a))});
  auto rq = std::make_shared<Quiver>(std::move(vertices), arrows);
  std::vector<AlgElem> gens;
  for (const auto& g : pres.generators) {
    AlgElem rg(pres.ring, rq);
    for (const auto& [p, c] : g.support()) rg.accumulate(reverse_path(*rq, p), c);
    gens.push_back(std::move(rg));
  }
  std::string name = pres.name;
  const std::string tag = "^op";
  if (name.size() >= tag.size() && name.compare(name.size() - tag.size(), tag.size(), tag) == 0)
    name.resize(name.size() - tag.size());
  else
    name += tag;
  Presentation out;
  out.name = std::move(name);
  out.ring = pres.ring;
  out.quiver = std::move(rq);
  out.generators = std::move(gens);
  return out;
}

namespace {

// All paths of length <= max_len in display order (degree first, then
// lexicographic on the written word).
std::vector<Path> enumerate_paths(const Quiver& Q, int max_len, size_t guard) {
  std::vector<Path> all;
  std::vector<Path> layer;
  for (int v = 0; v < Q.num_vertices(); ++v) layer.push_back(Path::trivial(Q, v));
  for (int len = 0; len <= max_len; ++len) {
    std::sort(layer.begin(), layer.end());
    all.insert(all.end(), layer.begin(), layer.end());
    if (all.size() > guard)
      throw Error(Errc::not_finite_at_precision,
                  "monomial window exceeds " + std::to_string(guard) +
                      " paths; presentation not certifiable at this precision");
    if (len == max_len) break;
    std::vector<Path> next;
    for (const auto& p : layer)
      for (int a = 0; a < Q.num_arrows(); ++a)
        if (Q.tail(a) == p.head())
          next.push_back(*compose(Q, Path::of_arrow(Q, a), p));
    layer = std::move(next);
  }
  return all;
}

struct WindowForm {
  std::vector<Path> mons; // display order
  std::unordered_map<Path, int, PathHash> index;
  RowModule form;         // over elimination columns (reverse display)

  WindowForm() : form(ChainRing::finite_field(2), 0) {}

  int elim_col(int display_idx) const { return (int)mons.size() - 1 - display_idx; }
  int display_of_col(int col) const { return (int)mons.size() - 1 - col; }
};

WindowForm eliminate_window(const Presentation& pres, int W, size_t guard) {
  WindowForm wf;
  const Quiver& Q = *pres.quiver;
  const ChainRing& R = pres.ring;
  wf.mons = enumerate_paths(Q, W, guard);
  for (int i = 0; i < (int)wf.mons.size(); ++i) wf.index.emplace(wf.mons[i], i);
  int M = (int)wf.mons.size();
  HowellBuilder builder(R, M);
  for (const auto& g : pres.generators) {
    int gh = g.support().begin()->first.head();
    int gt = g.support().begin()->first.tail();
    int gd = g.degree_window().second;
    for (const auto& p : wf.mons) {
      if (p.tail() != gh || p.length() + gd > W) continue;
      for (const auto& q : wf.mons) {
        if (q.head() != gt || p.length() + gd + q.length() > W) continue;
        Row row(M, 0);
        for (const auto& [m, c] : g.support()) {
          Path pm = *compose(Q, p, m);
          Path pmq = *compose(Q, pm, q);
          int col = wf.elim_col(wf.index.at(pmq));
          row[col] = R.add(row[col], c);
        }
        builder.add_row(std::move(row));
      }
    }
  }
  wf.form = builder.finish();
  return wf;
}

// Rows supported in degrees <= L, re-indexed over the trailing block of
// columns; canonical for the ideal restricted to the small window.
std::vector<Row> restrict_form(const WindowForm& wf, int L) {
  int M = (int)wf.mons.size();
  int small = 0;
  while (small < M && wf.mons[small].length() <= L) ++small;
  int offset = M - small; // elim columns [0, offset) hold degrees > L
  std::vector<Row> out;
  for (int i = 0; i < wf.form.num_rows(); ++i) {
    if (wf.form.pivot_col(i) < offset) continue;
    const Row& r = wf.form.rows()[i];
    out.emplace_back(r.begin() + offset, r.end());
  }
  return out;
}

} // namespace

int TruncatedAlgebra::monomial_index(const Path& p) const {
  auto it = mon_index_.find(p);
  return it == mon_index_.end() ? -1 : it->second;
}

int TruncatedAlgebra::basis_index(const Path& p) const {
  auto it = basis_index_.find(p);
  return it == basis_index_.end() ? -1 : it->second;
}

Row TruncatedAlgebra::reduce_window_row(Row w) const { return ideal_->reduce(std::move(w)); }

Row TruncatedAlgebra::window_row_to_basis(const Row& w) const {
  int M = (int)mons_.size();
  Row r(basis_.size(), 0);
  for (int col = 0; col < M; ++col) {
    if (w[col] == 0) continue;
    int disp = M - 1 - col;
    int b = basis_of_mon_[disp];
    if (b < 0)
      throw Error(Errc::not_finite_at_precision,
                  "reduction left support on non-basis monomial " +
                      mons_[disp].str(quiver()));
    r[b] = w[col];
  }
  return r;
}

AlgElem TruncatedAlgebra::normal_form(const AlgElem& x) const {
  if (x.ring() != ring())
    throw Error(Errc::ring_mismatch, "element ring differs from the algebra ring");
  if (x.quiver() != quiver())
    throw Error(Errc::quiver_mismatch, "element quiver differs from the algebra quiver");
  if (x.is_zero()) return x;
  if (x.degree_window().second > window_)
    throw Error(Errc::degree_overflow,
                "degree exceeds the certified window " + std::to_string(window_));
  int M = (int)mons_.size();
  Row w(M, 0);
  for (const auto& [p, c] : x.support()) {
    int i = monomial_index(p);
    assert(i >= 0);
    w[M - 1 - i] = c;
  }
  w = reduce_window_row(w);
  AlgElem out(ring(), pres_.quiver);
  for (int col = 0; col < M; ++col) {
    if (w[col] == 0) continue;
    out.accumulate(mons_[M - 1 - col], w[col]);
  }
  return out;
}

bool TruncatedAlgebra::is_member(const AlgElem& x) const {
  return normal_form(x).is_zero();
}

Row TruncatedAlgebra::path_row(const Path& p) const {
  if (p.length() <= window_) {
    int i = monomial_index(p);
    if (i >= 0) {
      int M = (int)mons_.size();
      Row w(M, 0);
      w[M - 1 - i] = ring().one();
      return window_row_to_basis(reduce_window_row(std::move(w)));
    }
  }
  Row r = elem_to_row(elem_path(ring(), pres_.quiver, Path::trivial(quiver(), p.tail())));
  const auto& w = p.word();
  for (auto it = w.rbegin(); it != w.rend(); ++it) r = left_mult_arrow(*it, r);
  return r;
}

bool TruncatedAlgebra::path_admissible(const Path& p) const {
  return !row_is_zero(path_row(p));
}

std::vector<Path> TruncatedAlgebra::admissible_paths(int max_len) const {
  if (max_len > window_)
    throw Error(Errc::degree_overflow,
                "requested length exceeds the certified window " +
                    std::to_string(window_));
  std::vector<Path> out;
  for (const auto& m : mons_) {
    if (m.length() > max_len) break;
    if (path_admissible(m)) out.push_back(m);
  }
  return out;
}

Row TruncatedAlgebra::elem_to_row(const AlgElem& x) const {
  AlgElem nf = normal_form(x);
  Row r = zero_row();
  for (const auto& [p, c] : nf.support()) {
    int b = basis_index(p);
    assert(b >= 0);
    r[b] = c;
  }
  return r;
}

AlgElem TruncatedAlgebra::row_to_elem(const Row& r) const {
  AlgElem out(ring(), pres_.quiver);
  for (size_t i = 0; i < r.size(); ++i)
    if (r[i]) out.accumulate(basis_[i], r[i]);
  return normal_form(out);
}

Row TruncatedAlgebra::unit_row() const {
  Row r = zero_row();
  const ChainRing& R = ring();
  for (int v = 0; v < quiver().num_vertices(); ++v) {
    Row ev = path_row(Path::trivial(quiver(), v));
    for (size_t i = 0; i < r.size(); ++i) r[i] = R.add(r[i], ev[i]);
  }
  return r;
}

Row TruncatedAlgebra::right_mult_arrow(const Row& x, int arrow) const {
  const ChainRing& R = ring();
  Row r = zero_row();
  const auto& tab = right_tab_[arrow];
  for (size_t i = 0; i < x.size(); ++i) {
    if (x[i] == 0) continue;
    const Row& t = tab[i];
    for (size_t j = 0; j < r.size(); ++j)
      if (t[j]) r[j] = R.add(r[j], R.mul(x[i], t[j]));
  }
  return r;
}

Row TruncatedAlgebra::left_mult_arrow(int arrow, const Row& x) const {
  const ChainRing& R = ring();
  Row r = zero_row();
  const auto& tab = left_tab_[arrow];
  for (size_t i = 0; i < x.size(); ++i) {
    if (x[i] == 0) continue;
    const Row& t = tab[i];
    for (size_t j = 0; j < r.size(); ++j)
      if (t[j]) r[j] = R.add(r[j], R.mul(x[i], t[j]));
  }
  return r;
}

Row TruncatedAlgebra::right_mult_path(const Row& x, const Path& p) const {
  if (p.is_trivial()) {
    Row r = x;
    for (size_t i = 0; i < r.size(); ++i)
      if (basis_[i].tail() != p.head()) r[i] = 0;
    return r;
  }
  Row r = x;
  for (uint16_t a : p.word()) r = right_mult_arrow(r, a);
  return r;
}

Row TruncatedAlgebra::left_mult_path(const Path& p, const Row& x) const {
  if (p.is_trivial()) {
    Row r = x;
    for (size_t i = 0; i < r.size(); ++i)
      if (basis_[i].head() != p.head()) r[i] = 0;
    return r;
  }
  Row r = x;
  const auto& w = p.word();
  for (auto it = w.rbegin(); it != w.rend(); ++it) r = left_mult_arrow(*it, r);
  return r;
}

Row TruncatedAlgebra::mult(const Row& x, const Row& y) const {
  const ChainRing& R = ring();
  Row r = zero_row();
  for (size_t i = 0; i < x.size(); ++i) {
    if (x[i] == 0) continue;
    Row part = left_mult_path(basis_[i], y);
    for (size_t j = 0; j < r.size(); ++j)
      if (part[j]) r[j] = R.add(r[j], R.mul(x[i], part[j]));
  }
  return r;
}

bool TruncatedAlgebra::row_is_zero(const Row& x) const {
  return torsion_.contains_vector(x);
}

RowModule TruncatedAlgebra::zero_module() const { return torsion_; }

RowModule TruncatedAlgebra::span(std::vector<Row> gens) const {
  for (const auto& r : torsion_.rows()) gens.push_back(r);
  return RowModule::canonical(ring(), (int)basis_.size(), gens);
}

RowModule TruncatedAlgebra::whole_module() const {
  std::vector<Row> gens;
  for (size_t i = 0; i < basis_.size(); ++i) {
    Row r = zero_row();
    r[i] = ring().one();
    gens.push_back(std::move(r));
  }
  return span(std::move(gens));
}

RowModule TruncatedAlgebra::submodule(Side side, const std::vector<AlgElem>& gens) const {
  std::vector<Row> rows;
  for (const auto& g : gens) {
    Row gr = elem_to_row(g);
    for (const auto& b : basis_) {
      rows.push_back(side == Side::left ? left_mult_path(b, gr)
                                        : right_mult_path(gr, b));
    }
  }
  return span(std::move(rows));
}

RowModule TruncatedAlgebra::cyclic(Side side, const Row& gen) const {
  std::vector<Row> rows;
  for (const auto& b : basis_)
    rows.push_back(side == Side::left ? left_mult_path(b, gen)
                                      : right_mult_path(gen, b));
  return span(std::move(rows));
}

RowModule TruncatedAlgebra::mult_module(const RowModule& a, const RowModule& b) const {
  std::vector<Row> rows;
  for (const auto& ra : a.rows())
    for (const auto& rb : b.rows()) rows.push_back(mult(ra, rb));
  return span(std::move(rows));
}

const TruncatedAlgebra::RadicalInfo& TruncatedAlgebra::radical() const {
  if (radical_cache_) return *radical_cache_;
  auto info = std::make_shared<RadicalInfo>(RadicalInfo{zero_module(), false, -1});
  const ChainRing& R = ring();
  std::vector<Row> gens;
  for (int a = 0; a < quiver().num_arrows(); ++a)
    gens.push_back(path_row(Path::of_arrow(quiver(), a)));
  uint64_t pi = R.pi();
  if (pi != 0) {
    for (int v = 0; v < quiver().num_vertices(); ++v) {
      Row r = path_row(Path::trivial(quiver(), v));
      for (auto& x : r) x = R.mul(pi, x);
      gens.push_back(std::move(r));
    }
  }
  RowModule cur = span(gens);
  // two-sided closure under arrow multiplication
  while (true) {
    std::vector<Row> next = cur.rows();
    for (const auto& r : cur.rows())
      for (int a = 0; a < quiver().num_arrows(); ++a) {
        next.push_back(left_mult_arrow(a, r));
        next.push_back(right_mult_arrow(r, a));
      }
    RowModule grown = span(std::move(next));
    if (grown == cur) break;
    cur = std::move(grown);
  }
  info->module = cur;
  // nilpotency by iterated powers; the chain J^k is descending, so it
  // either hits zero or stabilizes at a nonzero fixpoint
  if (module_is_zero(cur)) {
    info->nilpotent = true;
    info->nilpotency_index = 1;
  } else {
    RowModule pow = cur;
    int k = 1;
    while (true) {
      RowModule nxt = mult_module(pow, cur);
      ++k;
      if (module_is_zero(nxt)) {
        info->nilpotent = true;
        info->nilpotency_index = k;
        break;
      }
      if (nxt == pow) {
        info->nilpotent = false;
        info->nilpotency_index = -1;
        break;
      }
      pow = std::move(nxt);
    }
  }
  radical_cache_ = info;
  return *radical_cache_;
}

std::vector<unsigned> TruncatedAlgebra::algebra_profile() const {
  return quotient_profile(ring(), torsion_.rows(), (int)basis_.size());
}

TruncatedAlgebra build(const Presentation& pres, const BuildConfig& cfg) {
  if (!pres.quiver || pres.quiver->num_vertices() == 0)
    throw Error(Errc::empty_quiver, "presentation has no vertices");
  const ChainRing& R = pres.ring;
  unsigned N = R.precision();
  int gdeg = std::max(1, pres.generators.empty() ? 1 : pres.max_generator_degree());
  int cap = cfg.max_window > 0 ? cfg.max_window : 4 * (int)N * gdeg;
  int L = std::max(2 * gdeg, cfg.min_window);
  cap = std::max(cap, L);
  std::string failure;

  for (;;) {
    WindowForm wf1 = eliminate_window(pres, L + cfg.slack, cfg.max_monomials);
    WindowForm wf2 = eliminate_window(pres, L + cfg.slack + 2, cfg.max_monomials);
    auto r1 = restrict_form(wf1, L);
    auto r2 = restrict_form(wf2, L);
    bool ok = (r1 == r2);
    if (!ok) {
      failure = "ideal rows in degrees <= " + std::to_string(L) +
                " changed when the window grew";
    } else {
      // statuses and closure
      TruncatedAlgebra A;
      A.pres_ = pres;
      A.window_ = L;
      A.big_window_ = L + cfg.slack;
      A.mons_ = wf1.mons;
      A.mon_index_ = wf1.index;
      A.ideal_ = std::make_shared<RowModule>(wf1.form);
      int M = (int)A.mons_.size();
      A.mon_torsion_.assign(M, N);
      for (int i = 0; i < wf1.form.num_rows(); ++i) {
        int disp = M - 1 - wf1.form.pivot_col(i);
        A.mon_torsion_[disp] = wf1.form.pivot_val(i);
      }
      A.basis_of_mon_.assign(M, -1);
      for (int i = 0; i < M; ++i) {
        if (A.mons_[i].length() > L) break;
        if (A.mon_torsion_[i] == 0) continue;
        A.basis_of_mon_[i] = (int)A.basis_.size();
        A.basis_.push_back(A.mons_[i]);
        A.basis_torsion_.push_back(A.mon_torsion_[i]);
        A.basis_index_.emplace(A.mons_[i], (int)A.basis_.size() - 1);
      }
      // torsion relations over basis coordinates
      std::vector<Row> trows;
      bool basis_ok = true;
      Path bad_path = A.mons_.empty() ? Path() : A.mons_[0];
      for (int i = 0; i < wf1.form.num_rows() && basis_ok; ++i) {
        int disp = M - 1 - wf1.form.pivot_col(i);
        if (A.mons_[disp].length() > L) continue;
        unsigned v = wf1.form.pivot_val(i);
        if (v == 0 || v >= N) continue;
        Row t(A.basis_.size(), 0);
        const Row& r = wf1.form.rows()[i];
        for (int col = wf1.form.pivot_col(i); col < M; ++col) {
          if (r[col] == 0) continue;
          int d = M - 1 - col;
          int b = A.basis_of_mon_[d];
          if (b < 0) {
            basis_ok = false;
            bad_path = A.mons_[d];
            break;
          }
          t[b] = r[col];
        }
        if (basis_ok) trows.push_back(std::move(t));
      }
      if (!basis_ok) {
        failure = "torsion relation involves non-basis monomial " +
                  bad_path.str(*pres.quiver);
      } else {
        A.torsion_ = RowModule::canonical(R, (int)A.basis_.size(), trows);
        // closure: arrow multiples of basis monomials reduce onto the basis
        const Quiver& Q = *pres.quiver;
        bool closed = true;
        std::string closure_witness;
        A.left_tab_.assign(Q.num_arrows(), {});
        A.right_tab_.assign(Q.num_arrows(), {});
        for (int a = 0; a < Q.num_arrows() && closed; ++a) {
          A.left_tab_[a].assign(A.basis_.size(), Row(A.basis_.size(), 0));
          A.right_tab_[a].assign(A.basis_.size(), Row(A.basis_.size(), 0));
          for (size_t i = 0; i < A.basis_.size() && closed; ++i) {
            const Path& b = A.basis_[i];
            for (int dir = 0; dir < 2 && closed; ++dir) {
              std::optional<Path> prod =
                  dir == 0 ? compose(Q, Path::of_arrow(Q, a), b)
                           : compose(Q, b, Path::of_arrow(Q, a));
              if (!prod) continue;
              int mi = A.monomial_index(*prod);
              assert(mi >= 0);
              Row w(M, 0);
              w[M - 1 - mi] = R.one();
              w = A.reduce_window_row(std::move(w));
              Row res(A.basis_.size(), 0);
              for (int col = 0; col < M; ++col) {
                if (w[col] == 0) continue;
                int d = M - 1 - col;
                int bb = A.basis_of_mon_[d];
                if (bb < 0) {
                  closed = false;
                  closure_witness = prod->str(Q) + " reduces onto " +
                                    A.mons_[d].str(Q) + " outside the basis";
                  break;
                }
                res[bb] = w[col];
              }
              if (!closed) break;
              if (dir == 0)
                A.left_tab_[a][i] = std::move(res);
              else
                A.right_tab_[a][i] = std::move(res);
            }
          }
        }
        if (closed) return A;
        failure = closure_witness;
      }
    }
    if (L >= cap) break;
    L = std::min(2 * L, cap);
  }
  throw Error(Errc::not_finite_at_precision,
              "presentation '" + pres.name + "' not certified up to window " +
                  std::to_string(cap) + " at precision " + std::to_string(N) +
                  ": " + failure);
}

} // namespace stralg
