#pragma once

#include <cstdint>
#include <vector>

#include "mxinv/mpoly.hpp"

namespace mxinv {

struct GBConfig {
  size_t max_basis = 10000;  // fail loudly instead of thrashing
};

/// A Groebner basis under the fixed graded-reverse-lexicographic order.
/// When `reduced` is set the basis is the unique reduced one: generators are
/// monic, no term of any generator is divisible by another's leading
/// monomial, and the list is sorted by leading monomial.
struct GroebnerBasis {
  std::vector<Poly> gens;
  bool reduced = false;
};

/// Leading term under grevlex. Throws on the zero polynomial.
Term grevlex_lead(const Poly& p);

/// Remainder of multivariate division of f by the basis (grevlex).
/// Deterministic: the reducer is always the first list entry whose leading
/// monomial divides. With an empty basis, f itself is returned. When
/// `quotients` is given it receives one cofactor per basis entry, so that
/// f = sum quotients[i] * basis[i] + remainder.
Poly normal_form(const Poly& f, const std::vector<Poly>& basis,
                 std::vector<Poly>* quotients = nullptr);

/// Buchberger's algorithm with the normal pair-selection strategy (lowest
/// lcm degree first) and the coprime-leading-term criterion. Returns the
/// reduced basis.
GroebnerBasis buchberger(const std::vector<Poly>& gens, const GBConfig& cfg = {});

/// True iff every variable has a pure power among the leading monomials —
/// for a homogeneous ideal this decides that the vanishing locus over the
/// field closure is the origin.
bool is_zero_dimensional(const GroebnerBasis& gb);

/// Number of standard monomials (monomials outside the leading-term ideal).
/// Requires a zero-dimensional basis.
uint64_t quotient_dimension(const GroebnerBasis& gb);

}  // namespace mxinv
