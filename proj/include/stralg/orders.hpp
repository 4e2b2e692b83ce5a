#pragma once

#include <optional>
#include <string>
#include <vector>

#include "stralg/quotient.hpp"

namespace stralg {

/// An exponent-pattern subring of a product of matrix rings over R:
/// entry (i,j) of block b is allowed iff its valuation is at least
/// exponents[b][i][j], optionally sharpened by diagonal congruences
/// "entry(i,i) - entry(j,j) in (pi^mod)". Validated at construction to
/// contain the identity and be closed under multiplication.
class OrderPattern {
public:
  struct Congruence {
    int block_a = 0, idx_a = 0; // diagonal entry (idx_a, idx_a) of block_a
    int block_b = 0, idx_b = 0;
    unsigned mod = 1;
  };

  /// Hereditary type: block exponents e_ij = 1 for i < j, else 0.
  static OrderPattern hereditary(const ChainRing& ring, std::vector<int> block_sizes);
  static OrderPattern make(const ChainRing& ring, std::vector<int> block_sizes,
                           std::vector<std::vector<std::vector<unsigned>>> exponents,
                           std::vector<Congruence> congruences);

  const ChainRing& ring() const { return ring_; }
  const std::vector<int>& block_sizes() const { return sizes_; }
  int num_blocks() const { return (int)sizes_.size(); }
  /// Total flattened coordinate count, sum of n_b^2.
  int dim() const { return dim_; }
  unsigned exponent(int block, int i, int j) const { return exps_[block][i][j]; }
  const std::vector<Congruence>& congruences() const { return congs_; }
  bool is_hereditary() const;

  /// The allowed set as a row module over the flattened coordinates.
  const RowModule& member_module() const { return members_; }

private:
  OrderPattern() : members_(ChainRing::finite_field(2), 0) {}

  ChainRing ring_ = ChainRing::finite_field(2);
  std::vector<int> sizes_;
  int dim_ = 0;
  std::vector<std::vector<std::vector<unsigned>>> exps_;
  std::vector<Congruence> congs_;
  RowModule members_;
};

/// Block matrices over the chain ring, the codomain of hom assignments.
struct BlockMatrix {
  std::vector<std::vector<Row>> blocks; // blocks[b][i][j]

  static BlockMatrix zeros(const std::vector<int>& sizes);
  Row flatten(int dim) const;
};

BlockMatrix bm_add(const ChainRing& R, const BlockMatrix& x, const BlockMatrix& y);
BlockMatrix bm_mul(const ChainRing& R, const BlockMatrix& x, const BlockMatrix& y);
BlockMatrix bm_scale(const ChainRing& R, uint64_t c, const BlockMatrix& x);
bool bm_equal(const BlockMatrix& x, const BlockMatrix& y);

/// A vertex/arrow-to-matrix assignment into a pattern order.
struct HomAssignment {
  OrderPattern target;
  std::vector<BlockMatrix> vertex_images; // by vertex index
  std::vector<BlockMatrix> arrow_images;  // by arrow index

  /// Multiplicative image of a path.
  BlockMatrix path_image(const Quiver& Q, const Path& p) const;
  BlockMatrix elem_image(const AlgElem& x) const;
};

struct OrderCheck {
  bool ok = false;
  std::string detail;
};

/// The unital-relations check: vertex images are complete orthogonal
/// idempotents and arrow images respect heads and tails.
OrderCheck verify_unital_relations(const HomAssignment& h, const Quiver& Q);

/// theta kills every generator and is injective on the truncated algebra:
/// the image row module has the rank profile of the algebra itself.
struct KernelCertificate {
  bool ok = false;
  std::string detail;
  std::vector<unsigned> algebra_profile;
  std::vector<unsigned> image_profile;
};

KernelCertificate certify_kernel_is_ideal(const TruncatedAlgebra& A,
                                          const HomAssignment& h);

/// The combinatorial radical of a hereditary pattern: strict inequality
/// on the diagonal (entries (i,j) with i <= j gain one valuation step).
RowModule pattern_radical(const OrderPattern& P);

/// rad(Gamma) lies inside the image and equals the image of the
/// arrows-and-pi ideal.
OrderCheck backstrom_check(const TruncatedAlgebra& A, const HomAssignment& h);

} // namespace stralg
