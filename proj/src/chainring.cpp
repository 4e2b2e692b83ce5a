#include "stralg/chainring.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>

namespace stralg {

const char* errc_name(Errc c) {
  switch (c) {
    case Errc::invalid_characteristic: return "InvalidCharacteristic";
    case Errc::invalid_precision: return "InvalidPrecision";
    case Errc::ring_mismatch: return "RingMismatch";
    case Errc::not_a_unit: return "NotAUnit";
    case Errc::trivial_path_has_no_arrows: return "TrivialPathHasNoArrows";
    case Errc::syntax_error: return "SyntaxError";
    case Errc::unknown_name: return "UnknownName";
    case Errc::dimension_mismatch: return "DimensionMismatch";
    case Errc::zero_element: return "ZeroElement";
    case Errc::quiver_mismatch: return "QuiverMismatch";
    case Errc::degree_overflow: return "DegreeOverflow";
    case Errc::not_finite_at_precision: return "NotFiniteAtPrecision";
    case Errc::empty_quiver: return "EmptyQuiver";
    case Errc::inadmissible_path: return "InadmissiblePath";
    case Errc::not_a_string_algebra: return "NotAStringAlgebra";
    case Errc::incomplete_assignment: return "IncompleteAssignment";
    case Errc::generator_not_in_kernel: return "GeneratorNotInKernel";
    case Errc::rank_deficit: return "RankDeficit";
    case Errc::unsupported_pattern: return "UnsupportedPattern";
    case Errc::bad_input: return "BadInput";
  }
  return "Error";
}

namespace {

bool is_prime(uint64_t n) {
  if (n < 2) return false;
  for (uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

// p^d with overflow guard against the 2^62 element-encoding budget.
uint64_t checked_pow(uint64_t p, unsigned d) {
  uint64_t r = 1;
  for (unsigned i = 0; i < d; ++i) {
    if (r > (uint64_t(1) << 62) / p)
      throw Error(Errc::invalid_precision, "ring cardinality exceeds encoding range");
    r *= p;
  }
  return r;
}

// Fixed irreducible monic polynomials over F_p defining F_{p^d}, stored
// low degree first without the leading 1.
struct FqModulus {
  uint64_t p;
  unsigned d;
  std::vector<uint64_t> tail;
};

const FqModulus kModuli[] = {
    {2, 2, {1, 1}},       // u^2 + u + 1
    {2, 3, {1, 1, 0}},    // u^3 + u + 1
    {2, 4, {1, 1, 0, 0}}, // u^4 + u + 1
    {3, 2, {1, 0}},       // u^2 + 1
    {3, 3, {1, 2, 0}},    // u^3 + 2u + 1
    {5, 2, {1, 1}},       // u^2 + u + 1
    {5, 3, {1, 1, 0}},    // u^3 + u + 1
    {7, 2, {1, 0}},       // u^2 + 1
};

// Factors q as p^d for prime p; throws when q is not a prime power we
// can represent.
void factor_prime_power(uint64_t q, uint64_t& p, unsigned& d) {
  if (q < 2) throw Error(Errc::invalid_characteristic, "residue order must be >= 2");
  for (uint64_t c = 2; c * c <= q; ++c) {
    if (q % c == 0) {
      p = c;
      d = 0;
      uint64_t r = q;
      while (r % c == 0) { r /= c; ++d; }
      if (r != 1)
        throw Error(Errc::invalid_characteristic,
                    "residue order " + std::to_string(q) + " is not a prime power");
      return;
    }
  }
  p = q;
  d = 1;
}

std::vector<uint64_t> lookup_modulus(uint64_t p, unsigned d) {
  if (d == 1) return {};
  for (const auto& m : kModuli)
    if (m.p == p && m.d == d) {
      std::vector<uint64_t> full(m.tail);
      full.push_back(1);
      return full;
    }
  throw Error(Errc::invalid_characteristic,
              "no residue-field modulus shipped for p=" + std::to_string(p) +
                  ", degree " + std::to_string(d));
}

} // namespace

ChainRing ChainRing::finite_field(uint64_t q) {
  ChainRing r;
  r.kind_ = Kind::finite_field;
  factor_prime_power(q, r.p_, r.fq_deg_);
  if (!is_prime(r.p_))
    throw Error(Errc::invalid_characteristic, std::to_string(r.p_) + " is not prime");
  r.fq_modulus_ = lookup_modulus(r.p_, r.fq_deg_);
  r.q_ = q;
  r.precision_ = 1;
  r.card_ = q;
  return r;
}

ChainRing ChainRing::padic(uint64_t p, unsigned precision) {
  if (!is_prime(p))
    throw Error(Errc::invalid_characteristic, std::to_string(p) + " is not prime");
  if (precision < 1) throw Error(Errc::invalid_precision, "precision must be >= 1");
  ChainRing r;
  r.kind_ = Kind::padic_trunc;
  r.p_ = p;
  r.fq_deg_ = 1;
  r.q_ = p;
  r.precision_ = precision;
  r.card_ = checked_pow(p, precision);
  return r;
}

ChainRing ChainRing::series(uint64_t q, unsigned precision) {
  if (precision < 1) throw Error(Errc::invalid_precision, "precision must be >= 1");
  ChainRing r;
  r.kind_ = Kind::series_trunc;
  factor_prime_power(q, r.p_, r.fq_deg_);
  if (!is_prime(r.p_))
    throw Error(Errc::invalid_characteristic, std::to_string(r.p_) + " is not prime");
  r.fq_modulus_ = lookup_modulus(r.p_, r.fq_deg_);
  r.q_ = q;
  r.precision_ = precision;
  r.card_ = checked_pow(q, precision);
  return r;
}

// ---- F_q arithmetic on indices (base-p digit packing of polynomials) ----

uint64_t ChainRing::fq_add(uint64_t a, uint64_t b) const {
  if (fq_deg_ == 1) return (a + b) % p_;
  uint64_t r = 0, mult = 1;
  for (unsigned i = 0; i < fq_deg_; ++i) {
    r += ((a % p_ + b % p_) % p_) * mult;
    a /= p_;
    b /= p_;
    mult *= p_;
  }
  return r;
}

uint64_t ChainRing::fq_neg(uint64_t a) const {
  if (fq_deg_ == 1) return (p_ - a % p_) % p_;
  uint64_t r = 0, mult = 1;
  for (unsigned i = 0; i < fq_deg_; ++i) {
    r += ((p_ - a % p_) % p_) * mult;
    a /= p_;
    mult *= p_;
  }
  return r;
}

uint64_t ChainRing::fq_mul(uint64_t a, uint64_t b) const {
  if (fq_deg_ == 1) return (a * b) % p_;
  // schoolbook product then reduction by the fixed modulus
  std::vector<uint64_t> da(fq_deg_), db(fq_deg_), prod(2 * fq_deg_ - 1, 0);
  for (unsigned i = 0; i < fq_deg_; ++i) { da[i] = a % p_; a /= p_; }
  for (unsigned i = 0; i < fq_deg_; ++i) { db[i] = b % p_; b /= p_; }
  for (unsigned i = 0; i < fq_deg_; ++i)
    for (unsigned j = 0; j < fq_deg_; ++j)
      prod[i + j] = (prod[i + j] + da[i] * db[j]) % p_;
  for (unsigned i = 2 * fq_deg_ - 2; i + 1 > fq_deg_; --i) {
    uint64_t c = prod[i];
    if (c == 0) continue;
    prod[i] = 0;
    for (unsigned j = 0; j < fq_deg_; ++j)
      prod[i - fq_deg_ + j] =
          (prod[i - fq_deg_ + j] + c * (p_ - fq_modulus_[j]) % p_ * 1) % p_;
  }
  uint64_t r = 0, mult = 1;
  for (unsigned i = 0; i < fq_deg_; ++i) { r += prod[i] * mult; mult *= p_; }
  return r;
}

uint64_t ChainRing::fq_inv(uint64_t a) const {
  assert(a != 0);
  if (fq_deg_ == 1) {
    // Fermat
    uint64_t r = 1, base = a % p_, e = p_ - 2;
    while (e) {
      if (e & 1) r = (r * base) % p_;
      base = (base * base) % p_;
      e >>= 1;
    }
    return r;
  }
  uint64_t r = 1, base = a, e = q_ - 2;
  while (e) {
    if (e & 1) r = fq_mul(r, base);
    base = fq_mul(base, base);
    e >>= 1;
  }
  return r;
}

std::string ChainRing::fq_str(uint64_t a) const {
  if (fq_deg_ == 1) return std::to_string(a);
  std::string s;
  uint64_t v = a;
  bool first = true;
  for (unsigned i = 0; i < fq_deg_; ++i) {
    uint64_t c = v % p_;
    v /= p_;
    if (c == 0) continue;
    if (!first) s += "+";
    first = false;
    if (i == 0) {
      s += std::to_string(c);
    } else {
      if (c != 1) s += std::to_string(c) + "*";
      s += (i == 1) ? "u" : "u^" + std::to_string(i);
    }
  }
  if (first) s = "0";
  return s;
}

// ---- pi-adic digit access ----

uint64_t ChainRing::digit(uint64_t x, unsigned i) const {
  switch (kind_) {
    case Kind::finite_field:
      return i == 0 ? x : 0;
    case Kind::padic_trunc: {
      uint64_t v = x;
      for (unsigned j = 0; j < i; ++j) v /= p_;
      return v % p_;
    }
    case Kind::series_trunc: {
      uint64_t v = x;
      for (unsigned j = 0; j < i; ++j) v /= q_;
      return v % q_;
    }
  }
  return 0;
}

// ---- ring operations ----

uint64_t ChainRing::one() const { return 1; }

uint64_t ChainRing::pi() const {
  switch (kind_) {
    case Kind::finite_field: return 0;
    case Kind::padic_trunc: return precision_ > 1 ? p_ : 0;
    case Kind::series_trunc: return precision_ > 1 ? q_ : 0;
  }
  return 0;
}

uint64_t ChainRing::pi_pow(unsigned v) const {
  if (v == 0) return 1;
  if (v >= precision_) return 0;
  uint64_t base = (kind_ == Kind::padic_trunc) ? p_ : q_;
  uint64_t r = 1;
  for (unsigned i = 0; i < v; ++i) r *= base;
  return r;
}

uint64_t ChainRing::from_int(long long n) const {
  if (kind_ == Kind::padic_trunc) {
    long long m = n % (long long)card_;
    if (m < 0) m += (long long)card_;
    return (uint64_t)m;
  }
  long long m = n % (long long)p_;
  if (m < 0) m += (long long)p_;
  return (uint64_t)m; // constant digit in the prime subfield
}

uint64_t ChainRing::add(uint64_t x, uint64_t y) const {
  switch (kind_) {
    case Kind::finite_field: return fq_add(x, y);
    case Kind::padic_trunc: return (x + y) % card_;
    case Kind::series_trunc: {
      uint64_t r = 0, mult = 1;
      for (unsigned i = 0; i < precision_; ++i) {
        r += fq_add(x % q_, y % q_) * mult;
        x /= q_;
        y /= q_;
        mult *= q_;
      }
      return r;
    }
  }
  return 0;
}

uint64_t ChainRing::neg(uint64_t x) const {
  switch (kind_) {
    case Kind::finite_field: return fq_neg(x);
    case Kind::padic_trunc: return x == 0 ? 0 : card_ - x;
    case Kind::series_trunc: {
      uint64_t r = 0, mult = 1;
      for (unsigned i = 0; i < precision_; ++i) {
        r += fq_neg(x % q_) * mult;
        x /= q_;
        mult *= q_;
      }
      return r;
    }
  }
  return 0;
}

uint64_t ChainRing::sub(uint64_t x, uint64_t y) const { return add(x, neg(y)); }

uint64_t ChainRing::mul(uint64_t x, uint64_t y) const {
  switch (kind_) {
    case Kind::finite_field: return fq_mul(x, y);
    case Kind::padic_trunc: {
      // card_ <= 2^62 keeps x*y inside uint64 only when operands are
      // below 2^32; split the product to stay exact for larger rings.
      if (card_ <= (uint64_t(1) << 32)) return (x * y) % card_;
      __uint128_t prod = (__uint128_t)x * y;
      return (uint64_t)(prod % card_);
    }
    case Kind::series_trunc: {
      std::vector<uint64_t> dx(precision_), dy(precision_), dp(precision_, 0);
      uint64_t xv = x, yv = y;
      for (unsigned i = 0; i < precision_; ++i) { dx[i] = xv % q_; xv /= q_; }
      for (unsigned i = 0; i < precision_; ++i) { dy[i] = yv % q_; yv /= q_; }
      for (unsigned i = 0; i < precision_; ++i)
        for (unsigned j = 0; i + j < precision_; ++j)
          dp[i + j] = fq_add(dp[i + j], fq_mul(dx[i], dy[j]));
      uint64_t r = 0, mult = 1;
      for (unsigned i = 0; i < precision_; ++i) { r += dp[i] * mult; mult *= q_; }
      return r;
    }
  }
  return 0;
}

unsigned ChainRing::valuation(uint64_t x) const {
  if (x == 0) return val_infinity;
  switch (kind_) {
    case Kind::finite_field:
      return 0;
    case Kind::padic_trunc: {
      unsigned v = 0;
      while (x % p_ == 0) { x /= p_; ++v; }
      return v;
    }
    case Kind::series_trunc: {
      unsigned v = 0;
      while (x % q_ == 0) { x /= q_; ++v; }
      return v;
    }
  }
  return 0;
}

uint64_t ChainRing::invert_unit(uint64_t x) const {
  if (valuation(x) != 0)
    throw Error(Errc::not_a_unit, "element " + scalar_str(x) + " is not a unit");
  switch (kind_) {
    case Kind::finite_field:
      return fq_inv(x);
    case Kind::padic_trunc: {
      // extended euclid modulo p^N
      int64_t a = (int64_t)card_, b = (int64_t)x;
      int64_t s0 = 0, s1 = 1;
      while (b) {
        int64_t t = a / b;
        int64_t r = a - t * b;
        a = b;
        b = r;
        int64_t s = s0 - t * s1;
        s0 = s1;
        s1 = s;
      }
      int64_t inv = s0 % (int64_t)card_;
      if (inv < 0) inv += (int64_t)card_;
      return (uint64_t)inv;
    }
    case Kind::series_trunc: {
      // digitwise Hensel lift: y_0 = x_0^{-1}, y_n = -y_0 * sum x_i y_{n-i}
      std::vector<uint64_t> dx(precision_), dy(precision_, 0);
      uint64_t xv = x;
      for (unsigned i = 0; i < precision_; ++i) { dx[i] = xv % q_; xv /= q_; }
      dy[0] = fq_inv(dx[0]);
      for (unsigned n = 1; n < precision_; ++n) {
        uint64_t acc = 0;
        for (unsigned i = 1; i <= n; ++i) acc = fq_add(acc, fq_mul(dx[i], dy[n - i]));
        dy[n] = fq_mul(fq_neg(acc), dy[0]);
      }
      uint64_t r = 0, mult = 1;
      for (unsigned i = 0; i < precision_; ++i) { r += dy[i] * mult; mult *= q_; }
      return r;
    }
  }
  return 0;
}

std::pair<uint64_t, uint64_t> ChainRing::split(uint64_t x, unsigned v) const {
  if (v == 0) return {x, 0};
  if (v >= precision_) return {0, x};
  switch (kind_) {
    case Kind::finite_field:
      return {0, x};
    case Kind::padic_trunc: {
      uint64_t m = pi_pow(v);
      return {x / m, x % m};
    }
    case Kind::series_trunc: {
      uint64_t m = 1;
      for (unsigned i = 0; i < v; ++i) m *= q_;
      return {x / m, x % m};
    }
  }
  return {0, x};
}

uint64_t ChainRing::unit_part(uint64_t x) const {
  unsigned v = valuation(x);
  if (v == val_infinity) return 1;
  return split(x, v).first;
}

std::vector<uint64_t> ChainRing::pi_digits(uint64_t x) const {
  std::vector<uint64_t> ds(precision_, 0);
  for (unsigned i = 0; i < precision_; ++i) {
    uint64_t d = digit(x, i);
    if (fq_deg_ > 1 && d >= p_)
      throw Error(Errc::bad_input, "scalar digit outside the prime subfield");
    ds[i] = d;
  }
  return ds;
}

std::string ChainRing::scalar_str(uint64_t x) const {
  switch (kind_) {
    case Kind::finite_field:
      return fq_str(x);
    case Kind::padic_trunc:
      return std::to_string(x);
    case Kind::series_trunc: {
      std::string s;
      bool first = true;
      uint64_t v = x;
      for (unsigned i = 0; i < precision_; ++i) {
        uint64_t c = v % q_;
        v /= q_;
        if (c == 0) continue;
        if (!first) s += " + ";
        first = false;
        std::string cs = fq_str(c);
        if (i == 0) {
          s += cs;
        } else {
          std::string t = (i == 1) ? "t" : "t^" + std::to_string(i);
          s += (cs == "1") ? t : cs + "*" + t;
        }
      }
      if (first) s = "0";
      return s;
    }
  }
  return "?";
}

std::string ChainRing::describe() const {
  switch (kind_) {
    case Kind::finite_field:
      return "F_" + std::to_string(q_);
    case Kind::padic_trunc:
      return "Z/" + std::to_string(p_) + "^" + std::to_string(precision_);
    case Kind::series_trunc:
      return "F_" + std::to_string(q_) + "[t]/(t^" + std::to_string(precision_) + ")";
  }
  return "?";
}

ChainElem arith(ArithOp op, const ChainElem& x, const ChainElem& y) {
  if (!x.ring) throw Error(Errc::bad_input, "element has no ring");
  if (op != ArithOp::neg) {
    if (!y.ring || *x.ring != *y.ring)
      throw Error(Errc::ring_mismatch, "operands belong to different rings");
  }
  const ChainRing& R = *x.ring;
  switch (op) {
    case ArithOp::add: return {x.ring, R.add(x.repr, y.repr)};
    case ArithOp::sub: return {x.ring, R.sub(x.repr, y.repr)};
    case ArithOp::mul: return {x.ring, R.mul(x.repr, y.repr)};
    case ArithOp::neg: return {x.ring, R.neg(x.repr)};
  }
  return x;
}

} // namespace stralg
