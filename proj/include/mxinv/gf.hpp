#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <utility>
#include <vector>

namespace mxinv {

class GF;
using GFPtr = std::shared_ptr<const GF>;

/// An element of GF(q), q = p^s. The coefficient vector (c0, ..., c_{s-1})
/// with respect to the power basis of the modulus is packed canonically as
/// v = c0 + c1*p + ... + c_{s-1}*p^{s-1}, so equality of elements is equality
/// of packed values. Elements keep a handle to their owning field; mixing
/// elements of distinct fields is a hard error.
class GFElem {
public:
  GFElem() = default;
  GFElem(GFPtr field, uint32_t value) : f_(std::move(field)), v_(value) {}

  uint32_t value() const { return v_; }
  const GFPtr& field() const { return f_; }
  bool is_zero() const { return v_ == 0; }
  std::vector<uint32_t> coeffs() const;
  std::string str() const;

  GFElem operator-() const;
  GFElem inverse() const;
  bool is_square() const;

  friend GFElem operator+(const GFElem& a, const GFElem& b);
  friend GFElem operator-(const GFElem& a, const GFElem& b);
  friend GFElem operator*(const GFElem& a, const GFElem& b);
  friend GFElem operator/(const GFElem& a, const GFElem& b);
  friend bool operator==(const GFElem& a, const GFElem& b);
  friend bool operator!=(const GFElem& a, const GFElem& b);

private:
  GFPtr f_;
  uint32_t v_ = 0;
};

/// The field GF(p^s). Prime fields need no modulus; extension fields reduce
/// modulo a monic irreducible polynomial of degree s over GF(p), chosen as
/// the lexicographically smallest one (coefficients compared low-degree
/// first) when none is supplied. Immutable after construction.
class GF : public std::enable_shared_from_this<GF> {
public:
  /// p prime, s >= 1. Picks the default modulus for s > 1.
  static GFPtr make(uint32_t p, uint32_t s);
  /// Explicit modulus: s+1 coefficients low-degree-first, monic, irreducible.
  static GFPtr make(uint32_t p, uint32_t s, const std::vector<uint32_t>& modulus);

  uint32_t p() const { return p_; }
  uint32_t s() const { return s_; }
  uint32_t q() const { return q_; }
  /// Empty for prime fields, size s+1 otherwise.
  const std::vector<uint32_t>& modulus() const { return modulus_; }

  // Arithmetic on packed values in [0, q). These are the hot-path entry
  // points; GFElem wraps them with field-identity checks.
  uint32_t add(uint32_t a, uint32_t b) const;
  uint32_t sub(uint32_t a, uint32_t b) const;
  uint32_t neg(uint32_t a) const;
  uint32_t mul(uint32_t a, uint32_t b) const;
  uint32_t inv(uint32_t a) const;  // throws on a = 0
  uint32_t pow(uint32_t a, uint64_t e) const;

  /// True iff a is a square in GF(q)^x. Throws on a = 0. Every nonzero
  /// element of a characteristic-2 field is a square.
  bool is_square(uint32_t a) const;

  GFElem elem(uint32_t packed) const;
  /// Embeds an integer through the prime subfield (n mod p).
  GFElem from_int(int64_t n) const;
  GFElem from_coeffs(const std::vector<uint32_t>& c) const;
  GFElem zero() const { return elem(0); }
  GFElem one() const { return elem(1); }

  /// All q elements in packed-value order: 0, 1, ..., p-1, t, t+1, ...
  std::vector<GFElem> enumerate() const;

  /// (A0, A1): nonzero squares and non-squares, each of size (q-1)/2.
  /// Defined for odd q only; throws for characteristic 2.
  std::pair<std::vector<GFElem>, std::vector<GFElem>> residue_sets() const;

  std::vector<uint32_t> unpack(uint32_t v) const;
  uint32_t pack(const std::vector<uint32_t>& c) const;

  bool same(const GF& other) const;
  std::string describe() const;

private:
  GF() = default;

  uint32_t p_ = 0, s_ = 0, q_ = 0;
  std::vector<uint32_t> modulus_;
  std::vector<uint32_t> mul_table_;  // q*q entries when tabulated, else empty
  std::vector<uint32_t> inv_table_;

  uint32_t mul_slow(uint32_t a, uint32_t b) const;
  uint32_t inv_slow(uint32_t a) const;
  void build_tables();
};

/// Throws std::invalid_argument unless both handles refer to the same field
/// (pointer identity or structural equality).
void check_same_field(const GFPtr& a, const GFPtr& b);

bool is_prime(uint32_t n);

/// Factors a prime power: q = p^s. Throws if q is not a prime power >= 2.
std::pair<uint32_t, uint32_t> factor_prime_power(uint32_t q);

}  // namespace mxinv
