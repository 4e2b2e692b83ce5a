#include "stralg/orders.hpp"

#include <algorithm>
#include <cassert>

namespace stralg {

namespace {

// Flattened coordinate of entry (i,j) in block b.
int flat_index(const std::vector<int>& sizes, int b, int i, int j) {
  int off = 0;
  for (int k = 0; k < b; ++k) off += sizes[k] * sizes[k];
  return off + i * sizes[b] + j;
}

} // namespace

OrderPattern OrderPattern::hereditary(const ChainRing& ring,
                                      std::vector<int> block_sizes) {
  std::vector<std::vector<std::vector<unsigned>>> exps;
  for (int n : block_sizes) {
    std::vector<std::vector<unsigned>> e(n, std::vector<unsigned>(n, 0));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (i < j) e[i][j] = 1;
    exps.push_back(std::move(e));
  }
  return make(ring, std::move(block_sizes), std::move(exps), {});
}

OrderPattern OrderPattern::make(const ChainRing& ring, std::vector<int> block_sizes,
                                std::vector<std::vector<std::vector<unsigned>>> exponents,
                                std::vector<Congruence> congruences) {
  if (block_sizes.empty())
    throw Error(Errc::bad_input, "pattern needs at least one block");
  if (exponents.size() != block_sizes.size())
    throw Error(Errc::bad_input, "one exponent matrix per block expected");
  OrderPattern P;
  P.ring_ = ring;
  P.sizes_ = std::move(block_sizes);
  P.exps_ = std::move(exponents);
  P.congs_ = std::move(congruences);
  P.dim_ = 0;
  for (size_t b = 0; b < P.sizes_.size(); ++b) {
    int n = P.sizes_[b];
    if (n < 1) throw Error(Errc::bad_input, "block sizes must be positive");
    if ((int)P.exps_[b].size() != n)
      throw Error(Errc::bad_input, "exponent matrix has the wrong size");
    for (const auto& row : P.exps_[b])
      if ((int)row.size() != n)
        throw Error(Errc::bad_input, "exponent matrix has the wrong size");
    for (int i = 0; i < n; ++i)
      if (P.exps_[b][i][i] != 0)
        throw Error(Errc::unsupported_pattern,
                    "diagonal exponents must vanish so the identity is allowed");
    P.dim_ += n * n;
  }
  for (const auto& c : P.congs_) {
    if (c.block_a < 0 || c.block_a >= P.num_blocks() || c.block_b < 0 ||
        c.block_b >= P.num_blocks())
      throw Error(Errc::bad_input, "congruence block out of range");
    if (c.idx_a < 0 || c.idx_a >= P.sizes_[c.block_a] || c.idx_b < 0 ||
        c.idx_b >= P.sizes_[c.block_b])
      throw Error(Errc::bad_input, "congruence index out of range");
  }

  // generators of the allowed set as a module
  std::vector<Row> gens;
  const ChainRing& R = P.ring_;
  // congruence-linked diagonal classes move together
  std::vector<std::vector<std::pair<int, int>>> diag_classes;
  {
    std::vector<std::pair<int, int>> all;
    for (int b = 0; b < P.num_blocks(); ++b)
      for (int i = 0; i < P.sizes_[b]; ++i) all.push_back({b, i});
    std::vector<int> cls(all.size());
    for (size_t i = 0; i < all.size(); ++i) cls[i] = (int)i;
    auto find = [&](int x) {
      while (cls[x] != x) x = cls[x] = cls[cls[x]];
      return x;
    };
    for (const auto& c : P.congs_) {
      int a = -1, b = -1;
      for (size_t i = 0; i < all.size(); ++i) {
        if (all[i] == std::make_pair(c.block_a, c.idx_a)) a = (int)i;
        if (all[i] == std::make_pair(c.block_b, c.idx_b)) b = (int)i;
      }
      cls[find(a)] = find(b);
    }
    std::vector<std::vector<std::pair<int, int>>> classes(all.size());
    for (size_t i = 0; i < all.size(); ++i) classes[find((int)i)].push_back(all[i]);
    for (auto& c : classes)
      if (!c.empty()) diag_classes.push_back(std::move(c));
  }
  unsigned cong_mod = 1;
  for (const auto& c : P.congs_) cong_mod = std::max(cong_mod, c.mod);
  for (const auto& cls : diag_classes) {
    // the shared unit part of the class
    Row r(P.dim_, 0);
    for (auto [b, i] : cls) r[flat_index(P.sizes_, b, i, i)] = R.one();
    gens.push_back(std::move(r));
    // individual pi^mod deviations
    if (cls.size() > 1) {
      for (auto [b, i] : cls) {
        Row d(P.dim_, 0);
        d[flat_index(P.sizes_, b, i, i)] = R.pi_pow(cong_mod);
        gens.push_back(std::move(d));
      }
    } else {
      // unconstrained diagonal entry: already free via the unit row
    }
  }
  for (int b = 0; b < P.num_blocks(); ++b)
    for (int i = 0; i < P.sizes_[b]; ++i)
      for (int j = 0; j < P.sizes_[b]; ++j) {
        if (i == j) continue;
        Row r(P.dim_, 0);
        r[flat_index(P.sizes_, b, i, j)] = R.pi_pow(P.exps_[b][i][j]);
        gens.push_back(std::move(r));
      }
  P.members_ = RowModule::canonical(R, P.dim_, gens);

  // closure under multiplication, checked on the generating rows
  auto unflatten = [&](const Row& r) {
    BlockMatrix m = BlockMatrix::zeros(P.sizes_);
    for (int b = 0; b < P.num_blocks(); ++b)
      for (int i = 0; i < P.sizes_[b]; ++i)
        for (int j = 0; j < P.sizes_[b]; ++j)
          m.blocks[b][i][j] = r[flat_index(P.sizes_, b, i, j)];
    return m;
  };
  for (const auto& x : P.members_.rows())
    for (const auto& y : P.members_.rows()) {
      BlockMatrix prod = bm_mul(R, unflatten(x), unflatten(y));
      if (!P.members_.contains_vector(prod.flatten(P.dim_)))
        throw Error(Errc::unsupported_pattern,
                    "pattern is not closed under matrix multiplication");
    }
  // contains the identity
  BlockMatrix one = BlockMatrix::zeros(P.sizes_);
  for (int b = 0; b < P.num_blocks(); ++b)
    for (int i = 0; i < P.sizes_[b]; ++i) one.blocks[b][i][i] = R.one();
  if (!P.members_.contains_vector(one.flatten(P.dim_)))
    throw Error(Errc::unsupported_pattern, "pattern does not contain the identity");
  return P;
}

bool OrderPattern::is_hereditary() const {
  if (!congs_.empty()) return false;
  for (int b = 0; b < num_blocks(); ++b)
    for (int i = 0; i < sizes_[b]; ++i)
      for (int j = 0; j < sizes_[b]; ++j)
        if (exps_[b][i][j] != (i < j ? 1u : 0u)) return false;
  return true;
}

BlockMatrix BlockMatrix::zeros(const std::vector<int>& sizes) {
  BlockMatrix m;
  for (int n : sizes) m.blocks.push_back(std::vector<Row>(n, Row(n, 0)));
  return m;
}

Row BlockMatrix::flatten(int dim) const {
  Row r;
  r.reserve(dim);
  for (const auto& blk : blocks)
    for (const auto& row : blk) r.insert(r.end(), row.begin(), row.end());
  assert((int)r.size() == dim);
  return r;
}

BlockMatrix bm_add(const ChainRing& R, const BlockMatrix& x, const BlockMatrix& y) {
  BlockMatrix out = x;
  for (size_t b = 0; b < out.blocks.size(); ++b)
    for (size_t i = 0; i < out.blocks[b].size(); ++i)
      for (size_t j = 0; j < out.blocks[b][i].size(); ++j)
        out.blocks[b][i][j] = R.add(x.blocks[b][i][j], y.blocks[b][i][j]);
  return out;
}

BlockMatrix bm_mul(const ChainRing& R, const BlockMatrix& x, const BlockMatrix& y) {
  BlockMatrix out = x;
  for (size_t b = 0; b < out.blocks.size(); ++b) {
    size_t n = out.blocks[b].size();
    for (size_t i = 0; i < n; ++i)
      for (size_t j = 0; j < n; ++j) {
        uint64_t acc = 0;
        for (size_t k = 0; k < n; ++k)
          acc = R.add(acc, R.mul(x.blocks[b][i][k], y.blocks[b][k][j]));
        out.blocks[b][i][j] = acc;
      }
  }
  return out;
}

BlockMatrix bm_scale(const ChainRing& R, uint64_t c, const BlockMatrix& x) {
  BlockMatrix out = x;
  for (auto& blk : out.blocks)
    for (auto& row : blk)
      for (auto& e : row) e = R.mul(c, e);
  return out;
}

bool bm_equal(const BlockMatrix& x, const BlockMatrix& y) {
  return x.blocks == y.blocks;
}

BlockMatrix HomAssignment::path_image(const Quiver& Q, const Path& p) const {
  if (p.is_trivial()) return vertex_images[p.tail()];
  BlockMatrix acc = arrow_images[p.word().front()];
  for (size_t i = 1; i < p.word().size(); ++i)
    acc = bm_mul(target.ring(), acc, arrow_images[p.word()[i]]);
  return acc;
}

BlockMatrix HomAssignment::elem_image(const AlgElem& x) const {
  const ChainRing& R = target.ring();
  BlockMatrix acc = BlockMatrix::zeros(target.block_sizes());
  for (const auto& [p, c] : x.support())
    acc = bm_add(R, acc, bm_scale(R, c, path_image(x.quiver(), p)));
  return acc;
}

OrderCheck verify_unital_relations(const HomAssignment& h, const Quiver& Q) {
  if ((int)h.vertex_images.size() != Q.num_vertices() ||
      (int)h.arrow_images.size() != Q.num_arrows())
    throw Error(Errc::incomplete_assignment,
                "hom assignment misses vertex or arrow images");
  const ChainRing& R = h.target.ring();
  const auto& sizes = h.target.block_sizes();

  BlockMatrix sum = BlockMatrix::zeros(sizes);
  for (const auto& m : h.vertex_images) sum = bm_add(R, sum, m);
  BlockMatrix one = BlockMatrix::zeros(sizes);
  for (size_t b = 0; b < one.blocks.size(); ++b)
    for (size_t i = 0; i < one.blocks[b].size(); ++i)
      one.blocks[b][i][i] = R.one();
  if (!bm_equal(sum, one)) return {false, "vertex images do not sum to 1"};

  for (int u = 0; u < Q.num_vertices(); ++u) {
    if (!bm_equal(bm_mul(R, h.vertex_images[u], h.vertex_images[u]),
                  h.vertex_images[u]))
      return {false, "image of e_" + Q.vertex_name(u) + " is not idempotent"};
    for (int w = 0; w < Q.num_vertices(); ++w) {
      if (u == w) continue;
      BlockMatrix prod = bm_mul(R, h.vertex_images[u], h.vertex_images[w]);
      if (!bm_equal(prod, BlockMatrix::zeros(sizes)))
        return {false, "images of e_" + Q.vertex_name(u) + " and e_" +
                           Q.vertex_name(w) + " are not orthogonal"};
    }
  }
  for (int a = 0; a < Q.num_arrows(); ++a) {
    const auto& ma = h.arrow_images[a];
    if (!bm_equal(bm_mul(R, h.vertex_images[Q.head(a)], ma), ma) ||
        !bm_equal(bm_mul(R, ma, h.vertex_images[Q.tail(a)]), ma))
      return {false, "image of arrow " + Q.arrow_name(a) +
                         " is not supported at its head/tail block"};
    if (!h.target.member_module().contains_vector(ma.flatten(h.target.dim())))
      return {false, "image of arrow " + Q.arrow_name(a) + " leaves the pattern"};
  }
  return {true, ""};
}

KernelCertificate certify_kernel_is_ideal(const TruncatedAlgebra& A,
                                          const HomAssignment& h) {
  KernelCertificate cert;
  const ChainRing& R = A.ring();
  const Quiver& Q = A.quiver();
  // (i) every generator maps to zero
  for (const auto& g : A.pres().generators) {
    BlockMatrix img = h.elem_image(g);
    if (!bm_equal(img, BlockMatrix::zeros(h.target.block_sizes()))) {
      cert.ok = false;
      cert.detail = "generator " + g.str() + " is not in the kernel";
      throw Error(Errc::generator_not_in_kernel, cert.detail);
    }
  }
  (void)Q;
  // (ii) the induced map is injective at precision: image profile matches
  std::vector<Row> image_rows;
  for (const auto& b : A.basis())
    image_rows.push_back(h.path_image(A.quiver(), b).flatten(h.target.dim()));
  auto image = RowModule::canonical(R, h.target.dim(), image_rows);
  cert.algebra_profile = A.algebra_profile();
  cert.image_profile = rank_profile(image);
  if (cert.algebra_profile != cert.image_profile) {
    cert.ok = false;
    cert.detail = "image rank profile differs from the algebra profile";
    throw Error(Errc::rank_deficit, cert.detail);
  }
  cert.ok = true;
  return cert;
}

RowModule pattern_radical(const OrderPattern& P) {
  if (!P.is_hereditary())
    throw Error(Errc::unsupported_pattern,
                "radical formula applies to hereditary blocks only");
  const ChainRing& R = P.ring();
  std::vector<Row> gens;
  int off = 0;
  for (int b = 0; b < P.num_blocks(); ++b) {
    int n = P.block_sizes()[b];
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        Row r(P.dim(), 0);
        r[off + i * n + j] = i <= j ? R.pi() : R.one();
        if (r[off + i * n + j] != 0) gens.push_back(std::move(r));
      }
    off += n * n;
  }
  return RowModule::canonical(R, P.dim(), gens);
}

OrderCheck backstrom_check(const TruncatedAlgebra& A, const HomAssignment& h) {
  const ChainRing& R = A.ring();
  RowModule rad_gamma = pattern_radical(h.target);

  // image of the algebra
  std::vector<Row> image_rows;
  for (const auto& b : A.basis())
    image_rows.push_back(h.path_image(A.quiver(), b).flatten(h.target.dim()));
  auto image = RowModule::canonical(R, h.target.dim(), image_rows);
  if (!image.contains(rad_gamma))
    return {false, "the hereditary radical is not inside the image"};

  // image of the arrows-and-pi ideal
  const auto& rad = A.radical();
  std::vector<Row> jrows;
  for (const auto& r : rad.module.rows()) {
    BlockMatrix acc = BlockMatrix::zeros(h.target.block_sizes());
    for (size_t i = 0; i < r.size(); ++i)
      if (r[i])
        acc = bm_add(R, acc,
                     bm_scale(R, r[i], h.path_image(A.quiver(), A.basis()[i])));
    jrows.push_back(acc.flatten(h.target.dim()));
  }
  auto jimage = RowModule::canonical(R, h.target.dim(), jrows);
  if (!(jimage == rad_gamma))
    return {false, "the image of the arrows-and-pi ideal differs from the "
                   "hereditary radical"};
  return {true, ""};
}

} // namespace stralg
