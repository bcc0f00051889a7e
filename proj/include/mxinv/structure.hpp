#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mxinv/grobner.hpp"
#include "mxinv/groups.hpp"
#include "mxinv/invgen.hpp"

namespace mxinv {

struct Caps {
  uint64_t max_monomials = 20000;   // widest graded component handled
  uint64_t max_group = kDefaultGroupCap;
  size_t max_basis = 10000;         // Groebner cap
};

/// Series sum_e lambda^e / prod_i (1 - lambda^{d_i}), expanded exactly.
struct ClosedFormSeries {
  std::vector<uint32_t> numerator_exps;
  std::vector<uint32_t> denominator_degrees;

  /// Integer coefficients through degree D (prefix recurrence per factor).
  std::vector<int64_t> expand(uint32_t D) const;
  std::string str() const;
};

uint64_t monomial_count(uint32_t d);  // C(d+3,3)

/// Dimension of the degree-d invariants: nullity of the stacked matrices
/// (induced(g, d) - I) over the generators. Generators generate, so the
/// joint kernel is exactly the fixed space of the group.
uint32_t graded_invariant_dimension(const GroupSpec& spec, uint32_t d, const Caps& caps = {});

/// Deterministic basis of the degree-d invariant space (generator route).
std::vector<std::vector<uint32_t>> invariant_space(const GroupSpec& spec, uint32_t d,
                                                   const Caps& caps = {});

/// Oracle route: intersects the fixed spaces of every element of the full
/// image, one element at a time. Used to cross-check the generator route.
uint32_t invariant_dimension_via_image(const GroupSpec& spec, uint32_t d, const Caps& caps = {});

struct HilbertRow {
  uint32_t degree;
  int64_t expected;
  uint32_t computed;
  bool match;
};
struct HilbertReport {
  ClosedFormSeries series;
  std::vector<HilbertRow> rows;
  bool pass;
};
HilbertReport hilbert_check(const GroupSpec& spec, const ClosedFormSeries& series, uint32_t D,
                            const Caps& caps = {});

struct HsopReport {
  bool zero_dimensional;
  std::vector<uint32_t> degrees;
  uint64_t degree_product;
  std::vector<Monomial> pure_powers;  // the witnessing leading monomials
  uint64_t quotient_dim;              // standard monomial count (0 if not 0-dim)
  size_t basis_size;
};
/// Zero-dimensionality certificate for 4 homogeneous polynomials via a
/// reduced Groebner basis. Throws on non-homogeneous input.
HsopReport hsop_certify(const std::vector<Poly>& polys, const Caps& caps = {});

struct DecompRow {
  uint32_t degree;
  uint32_t invariant_dim;
  uint32_t span_rank;
  bool match;
};
struct DecompositionReport {
  std::vector<DecompRow> rows;
  bool pass;
};
/// Degreewise certificate that the invariant ring equals the span of
/// products of the primaries plus secondary times such products, for every
/// degree through D. Throws if the span rank ever exceeds the invariant
/// dimension (a non-invariant input).
DecompositionReport decompose(const std::vector<Poly>& primaries, const Poly& secondary,
                              const GroupSpec& spec, uint32_t D, const Caps& caps = {});

/// One term of the generating relation, as a monomial in the abstract
/// generator variables X1..X4 (the primaries) and Y (the secondary).
struct RelTerm {
  std::array<uint16_t, 5> e;
  uint32_t c;
};
struct RelationReport {
  bool found;
  std::vector<RelTerm> relation;  // Y^2 - B(X) Y - A(X), monic in Y
  uint32_t weighted_degree;       // 2 deg(secondary)
  bool residual_zero;             // substituting the generators gives 0
  std::string text;
};
/// Solves secondary^2 = A + B * secondary in the coefficient space of
/// degree 2*deg(secondary) and verifies the relation by re-substitution.
RelationReport find_relation(const std::vector<Poly>& primaries, const Poly& secondary,
                             const Caps& caps = {});

struct ReflectionReport {
  uint64_t scanned;
  uint32_t count;
  std::vector<size_t> witnesses;  // image indices of reflections found
};
ReflectionReport reflection_scan(const GroupSpec& spec, const Caps& caps = {});

/// Secondary degree forced by degree arithmetic when the image is
/// reflection-free: sum of the hsop degrees minus 4. No prediction
/// otherwise.
std::optional<uint32_t> predict_secondary_degree(const std::vector<uint32_t>& hsop_degrees,
                                                 bool reflection_free);

/// A degree-d invariant outside the span of degree-d products of the
/// primaries, or nullopt when the products already span. Deterministic:
/// first basis vector of the invariant space whose reduction against the
/// product span is nonzero, normalized so its first nonzero coordinate in
/// the monomial order is 1.
std::optional<Poly> secondary_search(const GroupSpec& spec, const std::vector<Poly>& primaries,
                                     uint32_t d, const Caps& caps = {});

/// The generating set the structure theorems assert for each group, with
/// its closed-form Hilbert series. For the rotation groups at q in {2,3}
/// the two extra generators are found by secondary_search (degrees 3,6 at
/// q=3 and 2,4 at q=2); `asserted` marks whether a theorem backs the series
/// or it is reproduced computationally. Throws for groups with no known
/// structure (gl2, sl2tilde at q in {2,3}).
struct GeneratorSet {
  std::vector<NamedInvariant> primaries;
  std::optional<NamedInvariant> secondary;
  ClosedFormSeries series;
  bool asserted;
};
GeneratorSet standard_generators(GroupName name, const GFPtr& f, bool need_secondary,
                                 const Caps& caps = {});

}  // namespace mxinv
