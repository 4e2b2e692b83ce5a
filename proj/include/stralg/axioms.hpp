#pragma once

#include <optional>
#include <string>

#include "stralg/quotient.hpp"

namespace stralg {

enum class Verdict { holds, fails, not_applicable };

inline const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::holds: return "holds";
    case Verdict::fails: return "fails";
    case Verdict::not_applicable: return "not-applicable";
  }
  return "?";
}

struct AxiomCheck {
  Verdict verdict = Verdict::not_applicable;
  std::string witness; // nonempty on failure
  std::string note;    // derivation or side information

  bool holds() const { return verdict == Verdict::holds; }
};

/// Structured verdicts for the string-algebra conditions, certified at
/// (precision N, window L).
struct AxiomReport {
  AxiomCheck permissible;
  AxiomCheck special;
  AxiomCheck arrow_direct;
  AxiomCheck arrow_distinct;
  AxiomCheck arrow_radical;
  AxiomCheck bounded_below;
  int minimal_m = -1; // smallest m with all length-m coefficients in (pi)
  AxiomCheck bounded_above; // derived through the permissible/arrow-distinct route
  AxiomCheck degree_le_2;
  AxiomCheck string_algebra;
  AxiomCheck biserial;
  unsigned precision = 0;
  int window = 0;

  bool string_holds() const { return string_algebra.holds(); }
};

/// Checkers for the paper-level conditions on a built algebra. Right-side
/// conditions run through the same side-parameterized machinery.
class AxiomChecker {
public:
  explicit AxiomChecker(const TruncatedAlgebra& alg) : A(alg) {}

  AxiomCheck check_permissible() const;
  AxiomCheck check_special() const;
  AxiomCheck check_arrow_direct() const;
  AxiomCheck check_arrow_distinct() const;
  AxiomCheck check_arrow_radical() const;
  AxiomCheck check_bounded_below(int* minimal_m = nullptr) const;
  AxiomCheck check_degree_le_2() const;
  AxiomCheck check_biserial() const;

  /// The full bundle; string_algebra is the conjunction of arrow_radical,
  /// arrow_direct, permissible, special, degree_le_2 and bounded_below.
  AxiomReport check_string() const;

  /// Lambda a (left) or a Lambda (right) for the arrow.
  RowModule arrow_module(Side side, int arrow) const;
  /// Sum over the other arrows at the same tail (left) / head (right).
  RowModule competing_sum(Side side, int arrow) const;

private:
  const TruncatedAlgebra& A;
};

/// Independent classical string-algebra test for monomial presentations
/// over a field (generators are single paths of length >= 2 after
/// normalization): subpath-avoidance admissibility, the (SP) counts, the
/// vertex-degree bound and nilpotence of long paths within the cap. Used
/// as a cross-validation oracle; it never touches the quotient machinery.
struct ButlerRingelVerdict {
  bool is_string = false;
  std::string reason;
};

ButlerRingelVerdict butler_ringel_check(const Presentation& pres, int length_cap);

} // namespace stralg
