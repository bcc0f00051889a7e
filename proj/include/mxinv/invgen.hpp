#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mxinv/groups.hpp"
#include "mxinv/mpoly.hpp"

namespace mxinv {

/// A constructed invariant with its declared degree and the group it is
/// declared invariant under. Construction checks that the polynomial's
/// actual degree matches the declared one.
struct NamedInvariant {
  std::string name;
  Poly poly;
  uint32_t degree;
  GroupName group;
};

/// Orbit of f under the full group image, deduplicated exactly and returned
/// in a deterministic order.
std::vector<Poly> orbit(const Poly& f, const GroupSpec& spec, uint64_t cap = kDefaultGroupCap);

/// Product over the orbit set. Fixed by every element of the group, since
/// the group permutes the factors.
Poly orbit_product(const Poly& f, const GroupSpec& spec, uint64_t cap = kDefaultGroupCap);

/// The shear-orbit factor x4 - c x3 - c x2 + (c^2 - a) x1.
Poly shear_orbit_form(const GFPtr& f, uint32_t c, uint32_t a);

/// Builds one of the named invariants from its product formula:
///   f1 = x1                      f2 = x2 - x3            f3 = x1 x4 - x2 x3
///   f4 = prod_c (x4 - c x3 - c x2 + c^2 x1)              (degree q)
///   zeta = prod_c (x3 - c x1) = x3^q - x1^{q-1} x3       (degree q)
///   f0 = (x3+x2)^q - (x3+x2) x1^{q-1}                    (degree q)
///   h(a) = prod_c (x4 - c x3 - c x2 + (c^2 - a) x1)      (degree q)
///   g0 = x1^q x4 + x1 x4^q - x2^q x3 - x2 x3^q           (degree q+1)
///   g1 = prod_{a non-square} h(a)                        (degree q(q-1)/2)
///   g2 = f0 * prod_{a nonzero square} h(a)               (degree q(q+1)/2)
///   k1 = prod_{a != 0} h(a)                              (degree q(q-1))
/// Valid names: f0 f1 f2 f3 f4 zeta h g0 g1 g2 k1; `a` is required for h
/// and rejected otherwise; g1 and g2 require odd q. In characteristic 2 the
/// k1 product above degenerates (it is not rotation-stable) and is replaced
/// by a congruence-class product of the same degree; see the source.
NamedInvariant build_named(const std::string& name, const GFPtr& f,
                           std::optional<GFElem> a = std::nullopt);

struct InvarianceCheck {
  bool invariant;
  std::string witness;  // violating generator label when not invariant
  Poly difference;      // act(witness, f) - f
};

/// Checks act(g, f) = f on every generator; generators generate, so this
/// decides invariance under the whole group.
InvarianceCheck verify_invariant(const Poly& f, const GroupSpec& spec);

/// The named invariants a CLI listing shows for one group, in a fixed order.
std::vector<NamedInvariant> named_for_group(GroupName name, const GFPtr& f);

}  // namespace mxinv
