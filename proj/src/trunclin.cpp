#include "stralg/trunclin.hpp"

#include <algorithm>
#include <cassert>
#include <deque>
#include <numeric>

namespace stralg {

namespace {

void check_width(const std::vector<Row>& rows, int cols) {
  for (const auto& r : rows)
    if ((int)r.size() != cols)
      throw Error(Errc::dimension_mismatch,
                  "row has length " + std::to_string(r.size()) + ", expected " +
                      std::to_string(cols));
}

void sub_scaled(const ChainRing& R, Row& v, uint64_t q, const Row& w, int from) {
  for (int j = from; j < (int)w.size(); ++j)
    if (w[j]) v[j] = R.sub(v[j], R.mul(q, w[j]));
}

} // namespace

HowellBuilder::HowellBuilder(ChainRing ring, int cols)
    : ring_(std::move(ring)), cols_(cols), precision_(ring_.precision()),
      pivot_of_col_(cols, -1) {}

void HowellBuilder::insert(Row v) {
  std::deque<Row> pending;
  pending.push_back(std::move(v));
  while (!pending.empty()) {
    Row x = std::move(pending.front());
    pending.pop_front();
    int col = 0;
    while (col < cols_) {
      if (x[col] == 0) {
        ++col;
        continue;
      }
      int pi = pivot_of_col_[col];
      if (pi < 0) {
        unsigned val = ring_.valuation(x[col]);
        uint64_t unit_inv = ring_.invert_unit(ring_.unit_part(x[col]));
        for (int j = col; j < cols_; ++j) x[j] = ring_.mul(x[j], unit_inv);
        pivot_of_col_[col] = (int)rows_.size();
        rows_.push_back(std::move(x));
        vals_.push_back(val);
        cols_of_rows_.push_back(col);
        if (val > 0 && precision_ > val) {
          // Howell completion: the pi-shift kills the pivot and may
          // expose new structure further right
          Row shift(cols_, 0);
          uint64_t f = ring_.pi_pow(precision_ - val);
          const Row& w = rows_.back();
          for (int j = col; j < cols_; ++j) shift[j] = ring_.mul(f, w[j]);
          pending.push_back(std::move(shift));
        }
        break;
      }
      Row& w = rows_[pi];
      unsigned pval = vals_[pi];
      unsigned xval = ring_.valuation(x[col]);
      if (xval >= pval) {
        uint64_t q = ring_.mul(ring_.unit_part(x[col]), ring_.pi_pow(xval - pval));
        sub_scaled(ring_, x, q, w, col);
        assert(x[col] == 0);
        ++col;
      } else {
        // the incoming row is the better pivot; swap and reprocess the
        // old pivot row
        uint64_t unit_inv = ring_.invert_unit(ring_.unit_part(x[col]));
        for (int j = col; j < cols_; ++j) x[j] = ring_.mul(x[j], unit_inv);
        std::swap(rows_[pi], x);
        vals_[pi] = xval;
        if (xval > 0 && precision_ > xval) {
          Row shift(cols_, 0);
          uint64_t f = ring_.pi_pow(precision_ - xval);
          const Row& nw = rows_[pi];
          for (int j = col; j < cols_; ++j) shift[j] = ring_.mul(f, nw[j]);
          pending.push_back(std::move(shift));
        }
        // x now holds the displaced row; same column, larger valuation
      }
    }
  }
}

bool HowellBuilder::add_row(Row v) {
  if ((int)v.size() != cols_)
    throw Error(Errc::dimension_mismatch, "row length mismatch");
  size_t before = rows_.size();
  std::vector<unsigned> vals_before = vals_;
  insert(std::move(v));
  return rows_.size() != before || vals_ != vals_before;
}

void HowellBuilder::add_rows(const std::vector<Row>& rows) {
  for (const auto& r : rows) add_row(r);
}

Row HowellBuilder::reduce(Row v) const {
  if ((int)v.size() != cols_)
    throw Error(Errc::dimension_mismatch, "row length mismatch");
  for (int col = 0; col < cols_; ++col) {
    if (v[col] == 0) continue;
    int pi = pivot_of_col_[col];
    if (pi < 0) continue;
    auto [q, rem] = ring_.split(v[col], vals_[pi]);
    if (q == 0) continue;
    sub_scaled(ring_, v, q, rows_[pi], col);
    v[col] = rem;
  }
  return v;
}

RowModule HowellBuilder::finish() const {
  RowModule m(ring_, cols_);
  std::vector<int> order(rows_.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return cols_of_rows_[a] < cols_of_rows_[b]; });
  for (int i : order) {
    m.rows_.push_back(rows_[i]);
    m.pivot_cols_.push_back(cols_of_rows_[i]);
    m.pivot_vals_.push_back(vals_[i]);
  }
  // canonicalize entries above pivots, walking pivot columns left to
  // right so later reductions cannot disturb finished columns
  for (size_t i = 0; i < m.rows_.size(); ++i) {
    for (size_t j = 0; j < m.rows_.size(); ++j) {
      if (j == i) continue;
      int c = m.pivot_cols_[j];
      if (c <= m.pivot_cols_[i]) continue;
      uint64_t e = m.rows_[i][c];
      if (e == 0) continue;
      auto [q, rem] = ring_.split(e, m.pivot_vals_[j]);
      if (q == 0) continue;
      sub_scaled(ring_, m.rows_[i], q, m.rows_[j], c);
      m.rows_[i][c] = rem;
    }
  }
  return m;
}

RowModule RowModule::canonical(const ChainRing& ring, int cols,
                               const std::vector<Row>& generators) {
  check_width(generators, cols);
  HowellBuilder b(ring, cols);
  b.add_rows(generators);
  return b.finish();
}

Row RowModule::reduce(Row v) const {
  if ((int)v.size() != cols_)
    throw Error(Errc::dimension_mismatch, "vector length mismatch");
  for (size_t i = 0; i < rows_.size(); ++i) {
    int c = pivot_cols_[i];
    if (v[c] == 0) continue;
    auto [q, rem] = ring_.split(v[c], pivot_vals_[i]);
    if (q == 0) continue;
    sub_scaled(ring_, v, q, rows_[i], c);
    v[c] = rem;
  }
  return v;
}

bool RowModule::contains_vector(const Row& v) const {
  Row r = reduce(v);
  return std::all_of(r.begin(), r.end(), [](uint64_t x) { return x == 0; });
}

std::optional<Row> RowModule::member(const Row& v) const {
  if ((int)v.size() != cols_)
    throw Error(Errc::dimension_mismatch, "vector length mismatch");
  Row w = v;
  Row witness(rows_.size(), 0);
  for (size_t i = 0; i < rows_.size(); ++i) {
    int c = pivot_cols_[i];
    if (w[c] == 0) continue;
    auto [q, rem] = ring_.split(w[c], pivot_vals_[i]);
    if (q == 0) continue;
    sub_scaled(ring_, w, q, rows_[i], c);
    w[c] = rem;
    witness[i] = q;
  }
  for (uint64_t x : w)
    if (x != 0) return std::nullopt;
  return witness;
}

bool RowModule::contains(const RowModule& other) const {
  if (cols_ != other.cols_)
    throw Error(Errc::dimension_mismatch, "ambient dimension mismatch");
  for (const auto& r : other.rows_)
    if (!contains_vector(r)) return false;
  return true;
}

RowModule kernel(const ChainRing& ring, const std::vector<Row>& matrix_rows,
                 int cols) {
  check_width(matrix_rows, cols);
  int k = (int)matrix_rows.size();
  HowellBuilder b(ring, cols + k);
  for (int i = 0; i < k; ++i) {
    Row big(cols + k, 0);
    std::copy(matrix_rows[i].begin(), matrix_rows[i].end(), big.begin());
    big[cols + i] = ring.one();
    b.add_row(std::move(big));
  }
  RowModule full = b.finish();
  std::vector<Row> gens;
  for (int i = 0; i < full.num_rows(); ++i) {
    if (full.pivot_col(i) < cols) continue;
    const Row& r = full.rows()[i];
    gens.emplace_back(r.begin() + cols, r.end());
  }
  return RowModule::canonical(ring, k, gens);
}

RowModule intersect(const RowModule& a, const RowModule& b) {
  if (a.cols() != b.cols())
    throw Error(Errc::dimension_mismatch, "ambient dimension mismatch");
  const ChainRing& R = a.ring();
  std::vector<Row> stacked = a.rows();
  stacked.insert(stacked.end(), b.rows().begin(), b.rows().end());
  RowModule ker = kernel(R, stacked, a.cols());
  std::vector<Row> gens;
  for (const auto& x : ker.rows()) {
    Row v(a.cols(), 0);
    for (int i = 0; i < a.num_rows(); ++i)
      if (x[i]) sub_scaled(R, v, R.neg(x[i]), a.rows()[i], 0);
    gens.push_back(std::move(v));
  }
  return RowModule::canonical(R, a.cols(), gens);
}

std::vector<unsigned> smith_valuations(const ChainRing& ring,
                                       std::vector<Row> rows, int cols) {
  check_width(rows, cols);
  std::vector<unsigned> diag;
  int top = 0;
  int left = 0;
  int nrows = (int)rows.size();
  while (top < nrows && left < cols) {
    // locate the minimum-valuation entry in the remaining block
    unsigned best = ChainRing::val_infinity;
    int bi = -1, bj = -1;
    for (int i = top; i < nrows; ++i)
      for (int j = left; j < cols; ++j) {
        if (rows[i][j] == 0) continue;
        unsigned v = ring.valuation(rows[i][j]);
        if (v < best) {
          best = v;
          bi = i;
          bj = j;
          if (best == 0) goto found;
        }
      }
  found:
    if (bi < 0) break;
    std::swap(rows[top], rows[bi]);
    for (int i = top; i < nrows; ++i) std::swap(rows[i][left], rows[i][bj]);
    uint64_t unit_inv = ring.invert_unit(ring.unit_part(rows[top][left]));
    for (int j = left; j < cols; ++j) rows[top][j] = ring.mul(rows[top][j], unit_inv);
    for (int i = top + 1; i < nrows; ++i) {
      uint64_t e = rows[i][left];
      if (e == 0) continue;
      uint64_t q = ring.mul(ring.unit_part(e), ring.pi_pow(ring.valuation(e) - best));
      sub_scaled(ring, rows[i], q, rows[top], left);
    }
    for (int j = left + 1; j < cols; ++j) {
      uint64_t e = rows[top][j];
      if (e == 0) continue;
      uint64_t q = ring.mul(ring.unit_part(e), ring.pi_pow(ring.valuation(e) - best));
      for (int i = top; i < nrows; ++i)
        rows[i][j] = ring.sub(rows[i][j], ring.mul(q, rows[i][left]));
    }
    diag.push_back(best);
    ++top;
    ++left;
  }
  std::sort(diag.begin(), diag.end());
  return diag;
}

std::vector<unsigned> rank_profile(const RowModule& m) {
  auto vals = smith_valuations(m.ring(), m.rows(), m.cols());
  std::vector<unsigned> exps;
  unsigned N = m.ring().precision();
  for (unsigned s : vals)
    if (s < N) exps.push_back(N - s);
  std::sort(exps.rbegin(), exps.rend());
  return exps;
}

std::vector<unsigned> quotient_profile(const ChainRing& ring,
                                       const std::vector<Row>& relations,
                                       int ambient) {
  auto vals = smith_valuations(ring, relations, ambient);
  std::vector<unsigned> exps;
  unsigned N = ring.precision();
  for (unsigned s : vals)
    if (s > 0) exps.push_back(std::min(s, N));
  for (int i = (int)vals.size(); i < ambient; ++i) exps.push_back(N);
  std::sort(exps.rbegin(), exps.rend());
  return exps;
}

std::vector<unsigned> subquotient_profile(const RowModule& u, const RowModule& v) {
  if (u.cols() != v.cols())
    throw Error(Errc::dimension_mismatch, "ambient dimension mismatch");
  const ChainRing& R = u.ring();
  int n = u.cols();
  int k = u.num_rows();
  if (k == 0) return {};
  // relations of the chosen generators of U modulo V
  HowellBuilder b(R, n + k);
  for (int i = 0; i < k; ++i) {
    Row big(n + k, 0);
    std::copy(u.rows()[i].begin(), u.rows()[i].end(), big.begin());
    big[n + i] = R.one();
    b.add_row(std::move(big));
  }
  for (const auto& r : v.rows()) {
    Row big(n + k, 0);
    std::copy(r.begin(), r.end(), big.begin());
    b.add_row(std::move(big));
  }
  RowModule full = b.finish();
  std::vector<Row> rel;
  for (int i = 0; i < full.num_rows(); ++i) {
    if (full.pivot_col(i) < n) continue;
    const Row& r = full.rows()[i];
    rel.emplace_back(r.begin() + n, r.end());
  }
  return quotient_profile(R, rel, k);
}

unsigned k_dimension(const std::vector<unsigned>& profile) {
  unsigned s = 0;
  for (unsigned d : profile) s += d;
  return s;
}

} // namespace stralg
