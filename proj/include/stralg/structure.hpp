#pragma once

#include "stralg/axioms.hpp"
#include "stralg/quotient.hpp"

namespace stralg {

/// The chain of cyclic submodules under the admissible one-arrow
/// extensions of p: q_0 = p and q_{i+1} = x q_i (left) or q_i x (right)
/// for the unique extension arrow keeping the path admissible.
struct UniserialChain {
  Path generator;
  Side side = Side::left;
  std::vector<Path> chain;
  enum class Terminal { zero_at_precision, no_admissible_extension };
  Terminal terminal = Terminal::no_admissible_extension;
  /// Consecutive inclusions are strict (checked by membership).
  bool strict = false;
  /// Every nonzero monomial-generated cyclic submodule of the module of p
  /// equals some chain entry.
  bool exhaustive = false;
};

UniserialChain uniserial_chain(const TruncatedAlgebra& A, const Path& p, Side side);

struct KernelSummand {
  bool is_complement_arrow = false; // the module of an arrow b != a at the cover vertex
  Path path;                        // b, or the shortest obstructing path q
};

/// Kernel of the cover map (multiplication by p) out of the principal
/// module at the cover vertex, decomposed combinatorially and checked
/// against the brute-force linear-algebra kernel.
struct KernelReport {
  Path p;
  Side side = Side::left;
  int cover_vertex = 0;
  std::vector<KernelSummand> summands;
  bool obstruction_found = false; // a summand of obstructing-path type exists
  /// No obstructing path exists within the certified window; with the
  /// chain dead at this precision the kernel is exact here.
  bool within_window = true;
  bool summands_independent = false; // pairwise intersections vanish at precision
  bool brute_force_agreement = false;
  RowModule combinatorial;
  RowModule brute;

  KernelReport() : combinatorial(ChainRing::finite_field(2), 0), brute(combinatorial) {}
};

KernelReport cover_kernel(const TruncatedAlgebra& A, const Path& p, Side side);

/// Cover kernels of the arrow summands of every principal radical, on
/// both sides. Requires a string-algebra verdict.
std::vector<KernelReport> radical_syzygies(const TruncatedAlgebra& A,
                                           const AxiomReport& report);

struct GabrielQuiverReport {
  /// arrow_counts[i][j] = k-dimension of e_j (J/J^2) e_i = reconstructed
  /// number of arrows from vertex i to vertex j.
  std::vector<std::vector<unsigned>> arrow_counts;
  bool matches_input = false;
};

GabrielQuiverReport gabriel_quiver(const TruncatedAlgebra& A);

/// Radical compatibility of an admissible non-trivial path p with left
/// arrow b and right arrow a: Jp intersected with b*Lambda lies in pJ,
/// and pJ intersected with Lambda*a lies in Jp.
struct RadicalCompatibility {
  bool left_inclusion = false;
  bool right_inclusion = false;
  bool both() const { return left_inclusion && right_inclusion; }
};

RadicalCompatibility radical_compatibility(const TruncatedAlgebra& A, const Path& p);

} // namespace stralg
