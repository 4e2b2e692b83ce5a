#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "stralg/error.hpp"

namespace stralg {

/// Exact arithmetic in a local Artinian chain ring R with maximal ideal
/// (pi), pi^N = 0 and residue field k of order q. Three kinds are
/// supported:
///
///   finite_field   F_q            (N = 1, pi = 0)
///   padic_trunc    Z/p^N          (pi = p)
///   series_trunc   F_q[t]/(t^N)   (pi = t)
///
/// Elements are canonical uint64 encodings; the ring descriptor owns all
/// arithmetic on them. Descriptors are immutable and shareable.
class ChainRing {
public:
  enum class Kind { finite_field, padic_trunc, series_trunc };

  /// Sentinel valuation of 0.
  static constexpr unsigned val_infinity = ~0u;

  static ChainRing finite_field(uint64_t q);
  static ChainRing padic(uint64_t p, unsigned precision);
  static ChainRing series(uint64_t q, unsigned precision);

  Kind kind() const { return kind_; }
  unsigned precision() const { return precision_; }
  /// Characteristic p of the residue field.
  uint64_t residue_char() const { return p_; }
  /// Order q = p^d of the residue field.
  uint64_t residue_card() const { return q_; }
  /// |R| = q^N.
  uint64_t card() const { return card_; }
  bool is_field() const { return kind_ == Kind::finite_field; }
  /// True when k is a prime field (every scalar is an integer multiple
  /// of 1); this is what the element grammar can express.
  bool prime_residue_field() const { return fq_deg_ == 1; }

  uint64_t zero() const { return 0; }
  uint64_t one() const;
  /// Image of the uniformizer; 0 for finite fields.
  uint64_t pi() const;
  uint64_t pi_pow(unsigned v) const;
  uint64_t from_int(long long n) const;

  uint64_t add(uint64_t x, uint64_t y) const;
  uint64_t sub(uint64_t x, uint64_t y) const;
  uint64_t mul(uint64_t x, uint64_t y) const;
  uint64_t neg(uint64_t x) const;

  /// Largest v with x in (pi^v); val_infinity for x = 0.
  unsigned valuation(uint64_t x) const;
  bool is_unit(uint64_t x) const { return valuation(x) == 0; }
  /// Multiplicative inverse; throws not_a_unit when valuation >= 1.
  uint64_t invert_unit(uint64_t x) const;

  /// Writes x = q*pi^v + r with r the canonical residue below pi^v.
  /// Returns {q, r}.
  std::pair<uint64_t, uint64_t> split(uint64_t x, unsigned v) const;

  /// Unit u with x = u * pi^valuation(x); 1 for x = 0.
  uint64_t unit_part(uint64_t x) const;

  std::string scalar_str(uint64_t x) const;
  /// Decomposes x as sum of c_v * pi^v with prime-subfield digits c_v;
  /// throws bad_input when a digit falls outside the prime subfield.
  std::vector<uint64_t> pi_digits(uint64_t x) const;

  bool operator==(const ChainRing& o) const {
    return kind_ == o.kind_ && p_ == o.p_ && fq_deg_ == o.fq_deg_ &&
           precision_ == o.precision_;
  }
  bool operator!=(const ChainRing& o) const { return !(*this == o); }

  std::string describe() const;

private:
  ChainRing() = default;

  Kind kind_ = Kind::finite_field;
  uint64_t p_ = 2;        // residue characteristic
  unsigned fq_deg_ = 1;   // d with q = p^d
  uint64_t q_ = 2;        // residue field order
  unsigned precision_ = 1;
  uint64_t card_ = 2;
  std::vector<uint64_t> fq_modulus_; // monic modulus of F_q over F_p, deg d

  // F_q arithmetic on indices in [0, q)
  uint64_t fq_add(uint64_t a, uint64_t b) const;
  uint64_t fq_neg(uint64_t a) const;
  uint64_t fq_mul(uint64_t a, uint64_t b) const;
  uint64_t fq_inv(uint64_t a) const;
  std::string fq_str(uint64_t a) const;

  uint64_t digit(uint64_t x, unsigned i) const; // i-th pi-adic digit
};

/// A ring element tagged with its ring; the arithmetic entry point used
/// by code that mixes rings and wants mismatch checking.
struct ChainElem {
  const ChainRing* ring = nullptr;
  uint64_t repr = 0;
};

enum class ArithOp { add, sub, mul, neg };

ChainElem arith(ArithOp op, const ChainElem& x, const ChainElem& y);

} // namespace stralg
