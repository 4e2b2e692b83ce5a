#pragma once

#include <memory>
#include <unordered_map>
#include <vector>

#include "stralg/freealg.hpp"
#include "stralg/trunclin.hpp"

namespace stralg {

enum class Side { left, right };

inline const char* side_name(Side s) { return s == Side::left ? "left" : "right"; }

struct BuildConfig {
  /// Certify at least this window length (0 = automatic).
  int min_window = 0;
  /// Cap for the auto-doubling search; -1 = 4 * N * max generator degree.
  int max_window = -1;
  int slack = 2;
  /// Guard against runaway monomial enumeration.
  size_t max_monomials = 200000;
};

/// The reverse-arrow presentation: generator words reversed over the
/// reversed quiver. An involution up to the "^op" name marker.
Presentation opposite(const Presentation& pres);

/// A finite R-module model of RQ/(I + pi^N RQ) restricted to a certified
/// degree window L: monomials of length <= L have unique normal forms on
/// the nf basis, the window is closed under multiplication by arrows, and
/// the ideal rows in degrees <= L are stable under window enlargement.
class TruncatedAlgebra {
public:
  const Presentation& pres() const { return pres_; }
  const ChainRing& ring() const { return pres_.ring; }
  const Quiver& quiver() const { return *pres_.quiver; }
  unsigned precision() const { return ring().precision(); }
  int window() const { return window_; }       // certified L
  int big_window() const { return big_window_; }

  const std::vector<Path>& monomials() const { return mons_; }
  int monomial_index(const Path& p) const;

  // nf basis: monomials of length <= L carrying torsion exponent > 0,
  // in display order; exponent N marks a free generator
  const std::vector<Path>& basis() const { return basis_; }
  const std::vector<unsigned>& basis_torsion() const { return basis_torsion_; }
  int basis_index(const Path& p) const;
  /// Relations of the basis coordinates (the zero submodule handle).
  const RowModule& torsion_module() const { return torsion_; }

  /// Unique representative on the nf basis; linear and idempotent as a
  /// map on cosets. Requires degree <= window.
  AlgElem normal_form(const AlgElem& x) const;
  bool is_member(const AlgElem& x) const;

  /// Normal form of an arbitrary-length path by iterated arrow
  /// multiplication through the closed window.
  Row path_row(const Path& p) const;
  bool path_admissible(const Path& p) const;

  /// Paths of length <= max_len lying outside the ideal, display order.
  std::vector<Path> admissible_paths(int max_len) const;

  // ---- basis-coordinate arithmetic ----
  Row zero_row() const { return Row(basis_.size(), 0); }
  Row elem_to_row(const AlgElem& x) const; // normal-forms first
  AlgElem row_to_elem(const Row& r) const;
  Row unit_row() const; // image of 1 = sum of trivial paths
  Row right_mult_arrow(const Row& x, int arrow) const;
  Row left_mult_arrow(int arrow, const Row& x) const;
  Row right_mult_path(const Row& x, const Path& p) const;
  Row left_mult_path(const Path& p, const Row& x) const;
  Row mult(const Row& x, const Row& y) const;
  bool row_is_zero(const Row& x) const;

  // ---- submodules: RowModules over basis coordinates, always
  // containing the torsion relations ----
  RowModule zero_module() const;
  RowModule span(std::vector<Row> gens) const;
  RowModule whole_module() const;
  /// Side-generated module: span of nf(b*g) (left) or nf(g*b) (right)
  /// over basis monomials b.
  RowModule submodule(Side side, const std::vector<AlgElem>& gens) const;
  RowModule cyclic(Side side, const Row& gen) const;
  /// Pointwise product span {x*y}, a*b-side aware via row products.
  RowModule mult_module(const RowModule& a, const RowModule& b) const;
  bool module_is_zero(const RowModule& m) const { return m == zero_module(); }

  struct RadicalInfo {
    RowModule module;        // J0 = two-sided ideal of arrows and pi*1
    bool nilpotent = false;
    int nilpotency_index = -1;
  };
  const RadicalInfo& radical() const;

  /// Iso type of the whole algebra as an R-module.
  std::vector<unsigned> algebra_profile() const;
  /// Iso type of U/V for torsion-containing submodule handles V <= U.
  std::vector<unsigned> quotient_type(const RowModule& u, const RowModule& v) const {
    return subquotient_profile(u, v);
  }

  friend TruncatedAlgebra build(const Presentation& pres, const BuildConfig& cfg);

private:
  TruncatedAlgebra() : torsion_(ChainRing::finite_field(2), 0) {}

  Row reduce_window_row(Row w) const;   // over big-window columns
  Row window_row_to_basis(const Row& w) const;

  Presentation pres_;
  int window_ = 0;
  int big_window_ = 0;
  std::vector<Path> mons_;                        // display order
  std::unordered_map<Path, int, PathHash> mon_index_;
  std::shared_ptr<const RowModule> ideal_;        // over big-window columns (elim order)
  std::vector<unsigned> mon_torsion_;             // exponent per monomial, 0 = eliminated
  std::vector<Path> basis_;
  std::vector<unsigned> basis_torsion_;
  std::unordered_map<Path, int, PathHash> basis_index_;
  std::vector<int> basis_of_mon_;                 // -1 when not a basis monomial
  RowModule torsion_;
  std::vector<std::vector<Row>> right_tab_, left_tab_; // arrow x basis -> row
  mutable std::shared_ptr<RadicalInfo> radical_cache_;
};

/// Builds the truncated algebra, auto-doubling the window until the
/// ideal rows stabilize and the basis closes under arrow multiplication.
/// Throws NotFiniteAtPrecision with the offending path otherwise.
TruncatedAlgebra build(const Presentation& pres, const BuildConfig& cfg = {});

} // namespace stralg
