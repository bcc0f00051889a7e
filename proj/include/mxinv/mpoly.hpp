#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "mxinv/gf.hpp"

namespace mxinv {

inline constexpr uint32_t kNumVars = 4;
inline constexpr uint32_t kMaxExponent = 65535;

/// A monomial in x1..x4. Exponents are bounded by kMaxExponent; products
/// that would overflow throw instead of wrapping.
struct Monomial {
  std::array<uint16_t, 4> e{0, 0, 0, 0};

  uint32_t degree() const {
    return uint32_t(e[0]) + e[1] + e[2] + e[3];
  }
  /// Packs x1 into the most significant 16 bits, so numeric order on keys
  /// is lexicographic order with x1 > x2 > x3 > x4.
  uint64_t key() const {
    return (uint64_t(e[0]) << 48) | (uint64_t(e[1]) << 32) | (uint64_t(e[2]) << 16) | e[3];
  }
  static Monomial from_key(uint64_t k) {
    return Monomial{{uint16_t(k >> 48), uint16_t(k >> 32), uint16_t(k >> 16), uint16_t(k)}};
  }
  static Monomial one() { return Monomial{}; }
  static Monomial variable(size_t i);  // i in [0,4)

  Monomial times(const Monomial& o) const;
  bool divisible_by(const Monomial& o) const;
  Monomial divided_by(const Monomial& o) const;

  bool operator==(const Monomial& o) const { return e == o.e; }
  bool operator!=(const Monomial& o) const { return e != o.e; }
};

inline bool lex_greater(const Monomial& a, const Monomial& b) { return a.key() > b.key(); }

/// Graded reverse lexicographic order (x1 > x2 > x3 > x4); used by the
/// Groebner engine only. Display and basis enumeration use plain lex.
bool grevlex_greater(const Monomial& a, const Monomial& b);

struct Term {
  Monomial m;
  uint32_t c;  // nonzero packed field value
  bool operator==(const Term& o) const { return m == o.m && c == o.c; }
};

struct LinearSub;

/// Sparse polynomial over GF(q) in canonical form: terms sorted in
/// descending lex order, no zero coefficients. Immutable value semantics.
class Poly {
public:
  explicit Poly(GFPtr f) : f_(std::move(f)) {}

  static Poly zero(GFPtr f) { return Poly(std::move(f)); }
  static Poly constant(const GFPtr& f, uint32_t value);
  static Poly variable(const GFPtr& f, size_t i);
  static Poly term(const GFPtr& f, const Monomial& m, uint32_t c);
  /// Builds c1*x1 + c2*x2 + c3*x3 + c4*x4.
  static Poly linear_form(const GFPtr& f, const std::array<uint32_t, 4>& c);

  const GFPtr& field() const { return f_; }
  const std::vector<Term>& terms() const { return t_; }
  bool is_zero() const { return t_.empty(); }
  size_t term_count() const { return t_.size(); }
  /// Total degree; -1 for the zero polynomial.
  int degree() const;
  bool homogeneous_of(uint32_t d) const;

  GFElem coeff(const Monomial& m) const;
  Poly operator-() const;
  Poly scaled(uint32_t c) const;
  Poly pow(uint32_t k) const;
  Poly substituted(const LinearSub& sub) const;

  std::string str() const;
  static Poly parse(const GFPtr& f, std::string_view text);

  friend Poly operator+(const Poly& a, const Poly& b);
  friend Poly operator-(const Poly& a, const Poly& b);
  friend Poly operator*(const Poly& a, const Poly& b);
  bool operator==(const Poly& o) const;
  bool operator!=(const Poly& o) const { return !(*this == o); }

  /// Builds canonical form from arbitrary (monomial, coefficient) pairs.
  static Poly from_terms(GFPtr f, std::vector<Term> terms);

private:
  GFPtr f_;
  std::vector<Term> t_;
};

/// A total order on polynomials over one field; any deterministic order
/// works, this one compares term lists lexicographically.
bool poly_less(const Poly& a, const Poly& b);
struct PolyLess {
  bool operator()(const Poly& a, const Poly& b) const { return poly_less(a, b); }
};

/// Linear change of variables: column j holds the image of x_{j+1}, i.e.
/// x_{j+1} |-> sum_i m[i][j] * x_{i+1}. Invertibility is not checked here;
/// group code only constructs invertible ones.
struct LinearSub {
  GFPtr f;
  std::array<std::array<uint32_t, 4>, 4> m;

  static LinearSub identity(const GFPtr& f);
  Poly image(size_t j) const;
  bool operator==(const LinearSub& o) const { return m == o.m; }
};

/// All C(d+3,3) degree-d monomials in descending lex order. Stable across
/// runs; degree 0 yields the single monomial 1.
std::vector<Monomial> monomials_of_degree(uint32_t d);

/// Basis of a graded component: the monomial list plus an index lookup.
class DegreeBasis {
public:
  explicit DegreeBasis(uint32_t d);
  uint32_t degree() const { return d_; }
  size_t size() const { return monos_.size(); }
  const std::vector<Monomial>& monomials() const { return monos_; }
  uint32_t index_of(const Monomial& m) const;

private:
  uint32_t d_;
  std::vector<Monomial> monos_;
  std::unordered_map<uint64_t, uint32_t> index_;
};

/// Coordinates of a homogeneous degree-d polynomial in the monomial basis.
/// Throws if the polynomial has a term of a different degree.
std::vector<uint32_t> coefficient_vector(const Poly& p, const DegreeBasis& basis);
std::vector<uint32_t> coefficient_vector(const Poly& p, uint32_t d);
Poly poly_from_vector(const GFPtr& f, const std::vector<uint32_t>& v, const DegreeBasis& basis);

}  // namespace mxinv
