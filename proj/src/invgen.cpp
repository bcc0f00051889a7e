#include "mxinv/invgen.hpp"

#include <set>
#include <stdexcept>

namespace mxinv {

std::vector<Poly> orbit(const Poly& f, const GroupSpec& spec, uint64_t cap) {
  check_same_field(f.field(), spec.field());
  std::set<Poly, PolyLess> seen;
  for (const Mat& m : spec.image(cap)) {
    LinearSub sub{spec.field(), {}};
    for (size_t i = 0; i < 4; ++i)
      for (size_t j = 0; j < 4; ++j) sub.m[i][j] = m.at(i, j);
    seen.insert(f.substituted(sub));
  }
  return {seen.begin(), seen.end()};
}

Poly orbit_product(const Poly& f, const GroupSpec& spec, uint64_t cap) {
  Poly r = Poly::constant(f.field(), 1);
  for (const Poly& g : orbit(f, spec, cap)) r = r * g;
  return r;
}

Poly shear_orbit_form(const GFPtr& f, uint32_t c, uint32_t a) {
  const GF& F = *f;
  return Poly::linear_form(f, {F.sub(F.mul(c, c), a), F.neg(c), F.neg(c), 1});
}

namespace {

Poly x(const GFPtr& f, size_t i) { return Poly::variable(f, i - 1); }

Poly shear_product(const GFPtr& f, uint32_t a) {
  Poly r = Poly::constant(f, 1);
  for (uint32_t c = 0; c < f->q(); ++c) r = r * shear_orbit_form(f, c, a);
  return r;
}

Poly build_poly(const std::string& name, const GFPtr& f, const std::optional<GFElem>& a) {
  const uint32_t q = f->q();
  if (name == "f1") return x(f, 1);
  if (name == "f2") return x(f, 2) - x(f, 3);
  if (name == "f3") return x(f, 1) * x(f, 4) - x(f, 2) * x(f, 3);
  if (name == "f4") return shear_product(f, 0);
  if (name == "h") {
    if (!a) throw std::invalid_argument("h requires the parameter a");
    check_same_field(a->field(), f);
    return shear_product(f, a->value());
  }
  if (name == "zeta") {
    Poly r = Poly::constant(f, 1);
    for (uint32_t c = 0; c < q; ++c)
      r = r * (x(f, 3) - x(f, 1).scaled(c));
    return r;
  }
  if (name == "f0") {
    Poly u = x(f, 3) + x(f, 2);
    return u.pow(q) - u * x(f, 1).pow(q - 1);
  }
  if (name == "g0")
    return x(f, 1).pow(q) * x(f, 4) + x(f, 1) * x(f, 4).pow(q) - x(f, 2).pow(q) * x(f, 3) -
           x(f, 2) * x(f, 3).pow(q);
  if (name == "g1" || name == "g2") {
    if (f->p() == 2) throw std::invalid_argument(name + " requires odd characteristic");
    auto [a0, a1] = f->residue_sets();
    Poly r = name == "g2" ? build_poly("f0", f, std::nullopt) : Poly::constant(f, 1);
    for (const GFElem& e : (name == "g1" ? a1 : a0)) r = r * shear_product(f, e.value());
    return r;
  }
  if (name == "k1") {
    if (f->p() != 2) {
      Poly r = Poly::constant(f, 1);
      for (uint32_t v = 1; v < q; ++v) r = r * shear_product(f, v);
      return r;
    }
    // In characteristic 2 the product of all h(a) is not stable under the
    // rotation generator (the factors with vanishing x1-coefficient leave
    // the family), so build the degree q(q-1) invariant as a congruence-
    // class product instead. A linear form b x1 + B x2 + C x3 + d x4 is
    // tr(. M) against the matrix (b B; C d), on which the group acts by
    // congruence; pf = B + C and det = bd + BC give the class invariant
    // det/pf^2. The classes with x^2 + x = det/pf^2 unsolvable have exactly
    // q(q-1) lines and are permuted by the group, so their product is
    // invariant. Take the smallest such class representative, one line per
    // class member normalized to pf = 1.
    const GF& F = *f;
    uint32_t r = 0;
    for (uint32_t cand = 1; cand < q && r == 0; ++cand) {
      bool solvable = false;
      for (uint32_t v = 0; v < q; ++v)
        if (F.add(F.mul(v, v), v) == cand) solvable = true;
      if (!solvable) r = cand;
    }
    Poly prod = Poly::constant(f, 1);
    for (uint32_t beta = 0; beta < q; ++beta) {
      const uint32_t s = F.add(F.add(r, beta), F.mul(beta, beta));
      for (uint32_t b = 1; b < q; ++b)
        prod = prod * Poly::linear_form(f, {b, beta, F.add(beta, 1), F.mul(s, F.inv(b))});
    }
    return prod;
  }
  throw std::invalid_argument("unknown invariant name: " + name);
}

uint32_t declared_degree(const std::string& name, uint32_t q) {
  if (name == "f1" || name == "f2") return 1;
  if (name == "f3") return 2;
  if (name == "f4" || name == "zeta" || name == "f0" || name == "h") return q;
  if (name == "g0") return q + 1;
  if (name == "g1") return q * (q - 1) / 2;
  if (name == "g2") return q * (q + 1) / 2;
  if (name == "k1") return q * (q - 1);
  throw std::invalid_argument("unknown invariant name: " + name);
}

GroupName declared_group(const std::string& name, uint32_t p) {
  if (name == "g0" || name == "g1" || name == "g2") return GroupName::SL2;
  // in odd characteristic k1 is a product of shear-orbit products and only
  // its even-characteristic form is a rotation invariant
  if (name == "k1") return p == 2 ? GroupName::SL2 : GroupName::U2;
  return GroupName::U2;
}

}  // namespace

NamedInvariant build_named(const std::string& name, const GFPtr& f, std::optional<GFElem> a) {
  if (name != "h" && a) throw std::invalid_argument(name + " takes no parameter");
  Poly p = build_poly(name, f, a);
  uint32_t deg = declared_degree(name, f->q());
  if (p.degree() != int(deg)) throw std::logic_error("degree bookkeeping mismatch for " + name);
  std::string shown = name == "h" ? "h(" + a->str() + ")" : name;
  return NamedInvariant{shown, std::move(p), deg, declared_group(name, f->p())};
}

InvarianceCheck verify_invariant(const Poly& f, const GroupSpec& spec) {
  check_same_field(f.field(), spec.field());
  for (const GroupElement& g : spec.generators()) {
    Poly diff = act(g, f) - f;
    if (!diff.is_zero()) return {false, g.label, std::move(diff)};
  }
  return {true, {}, Poly::zero(f.field())};
}

std::vector<NamedInvariant> named_for_group(GroupName name, const GFPtr& f) {
  std::vector<NamedInvariant> r;
  auto push = [&](const std::string& n) { r.push_back(build_named(n, f)); };
  switch (name) {
    case GroupName::U2:
    case GroupName::U2Tilde:
      push("f1"), push("f2"), push("f3"), push("f4"), push("zeta"), push("f0");
      for (uint32_t v = 0; v < f->q(); ++v)
        r.push_back(build_named("h", f, f->elem(v)));
      break;
    case GroupName::SL2:
    case GroupName::SL2Tilde:
    case GroupName::GL2:
      push("f2"), push("f3"), push("g0");
      if (f->p() != 2) {
        push("g1");
        push("g2");
      }
      push("k1");
      break;
  }
  return r;
}

}  // namespace mxinv
