#pragma once

#include <optional>
#include <vector>

#include "stralg/chainring.hpp"

namespace stralg {

using Row = std::vector<uint64_t>;

/// A finitely generated submodule of R^n in Howell canonical form: two
/// equal submodules always produce identical stored rows, and the form
/// is closed under the pi-shifts needed for membership testing. Rows are
/// sorted by pivot column, each pivot entry is exactly pi^v, and entries
/// above a pivot are canonical residues below pi^v.
class RowModule {
public:
  RowModule(ChainRing ring, int cols) : ring_(std::move(ring)), cols_(cols) {}

  static RowModule canonical(const ChainRing& ring, int cols,
                             const std::vector<Row>& generators);

  const ChainRing& ring() const { return ring_; }
  int cols() const { return cols_; }
  const std::vector<Row>& rows() const { return rows_; }
  int num_rows() const { return (int)rows_.size(); }
  bool is_zero() const { return rows_.empty(); }
  int pivot_col(int i) const { return pivot_cols_[i]; }
  unsigned pivot_val(int i) const { return pivot_vals_[i]; }

  /// Canonical residue of v modulo this module.
  Row reduce(Row v) const;
  bool contains_vector(const Row& v) const;
  /// Witness coordinates over rows() when v lies in the span.
  std::optional<Row> member(const Row& v) const;
  bool contains(const RowModule& other) const;

  bool operator==(const RowModule& o) const {
    return cols_ == o.cols_ && rows_ == o.rows_;
  }
  bool operator!=(const RowModule& o) const { return !(*this == o); }

private:
  friend class HowellBuilder;
  ChainRing ring_;
  int cols_;
  std::vector<Row> rows_;
  std::vector<int> pivot_cols_;
  std::vector<unsigned> pivot_vals_;
};

/// Incrementally maintained Howell form; add_row reduces the new row and
/// grows the form when the span enlarges.
class HowellBuilder {
public:
  HowellBuilder(ChainRing ring, int cols);

  /// Returns true when the row enlarged the span.
  bool add_row(Row v);
  void add_rows(const std::vector<Row>& rows);

  int cols() const { return cols_; }
  /// Finishes canonicalization and returns the module.
  RowModule finish() const;

  /// Reduction against the current (not yet canonicalized) pivots;
  /// correct for membership tests during construction.
  Row reduce(Row v) const;

private:
  void insert(Row v);

  ChainRing ring_;
  int cols_;
  unsigned precision_;
  // pivot column -> (row, pivot valuation); rows have zero entries left
  // of their pivot column
  std::vector<int> pivot_of_col_; // -1 when the column has no pivot
  std::vector<Row> rows_;
  std::vector<unsigned> vals_;
  std::vector<int> cols_of_rows_;
};

/// Kernel {x in R^k : x M = 0} of the matrix with the given k rows.
RowModule kernel(const ChainRing& ring, const std::vector<Row>& matrix_rows,
                 int cols);

RowModule intersect(const RowModule& a, const RowModule& b);

/// Smith valuations of the matrix: diagonal pi-exponents after
/// diagonalization by row and column operations, ascending.
std::vector<unsigned> smith_valuations(const ChainRing& ring,
                                       std::vector<Row> rows, int cols);

/// Torsion exponents {d_i} with the module isomorphic to the direct sum
/// of R/pi^{d_i}, sorted descending.
std::vector<unsigned> rank_profile(const RowModule& m);

/// Iso type of R^ambient / span(relations), exponents sorted descending
/// (free columns count with exponent N; zero summands are dropped).
std::vector<unsigned> quotient_profile(const ChainRing& ring,
                                       const std::vector<Row>& relations,
                                       int ambient);

/// Iso type of U/V for V a submodule of U inside R^n.
std::vector<unsigned> subquotient_profile(const RowModule& u, const RowModule& v);

/// Sum of exponents = dimension over the residue field.
unsigned k_dimension(const std::vector<unsigned>& profile);

} // namespace stralg
