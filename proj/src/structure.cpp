#include "mxinv/structure.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace mxinv {

std::vector<int64_t> ClosedFormSeries::expand(uint32_t D) const {
  std::vector<int64_t> c(D + 1, 0);
  for (uint32_t e : numerator_exps)
    if (e <= D) c[e] += 1;
  for (uint32_t m : denominator_degrees) {
    if (m == 0) throw std::invalid_argument("denominator degree must be positive");
    for (uint32_t i = m; i <= D; ++i) c[i] += c[i - m];
  }
  return c;
}

std::string ClosedFormSeries::str() const {
  std::ostringstream os;
  os << "(";
  for (size_t i = 0; i < numerator_exps.size(); ++i) {
    if (i) os << " + ";
    if (numerator_exps[i] == 0)
      os << "1";
    else
      os << "t^" << numerator_exps[i];
  }
  os << ") / (";
  for (size_t i = 0; i < denominator_degrees.size(); ++i) {
    if (i) os << " ";
    os << "(1-t^" << denominator_degrees[i] << ")";
  }
  os << ")";
  return os.str();
}

uint64_t monomial_count(uint32_t d) {
  return uint64_t(d + 1) * (d + 2) * (d + 3) / 6;
}

namespace {

void check_monomial_cap(uint32_t d, const Caps& caps) {
  if (monomial_count(d) > caps.max_monomials)
    throw std::runtime_error("degree " + std::to_string(d) + " needs " +
                             std::to_string(monomial_count(d)) +
                             " monomials, over the cap of " + std::to_string(caps.max_monomials));
}

// stacked (induced(g,d) - I) over all generators
Mat fixed_space_system(const GroupSpec& spec, uint32_t d) {
  const GFPtr& f = spec.field();
  const GF& F = *f;
  std::vector<Mat> blocks;
  for (const GroupElement& g : spec.generators()) {
    Mat m = induced_degree_matrix(dual_action(g), d);
    for (size_t i = 0; i < m.rows(); ++i) m.at(i, i) = F.sub(m.at(i, i), 1);
    blocks.push_back(std::move(m));
  }
  return stack_rows(blocks);
}

}  // namespace

uint32_t graded_invariant_dimension(const GroupSpec& spec, uint32_t d, const Caps& caps) {
  check_monomial_cap(d, caps);
  if (d == 0) return 1;
  Mat sys = fixed_space_system(spec, d);
  return uint32_t(sys.cols() - rank(sys));
}

std::vector<std::vector<uint32_t>> invariant_space(const GroupSpec& spec, uint32_t d,
                                                   const Caps& caps) {
  check_monomial_cap(d, caps);
  return nullspace_basis(fixed_space_system(spec, d));
}

uint32_t invariant_dimension_via_image(const GroupSpec& spec, uint32_t d, const Caps& caps) {
  check_monomial_cap(d, caps);
  const GFPtr& f = spec.field();
  const GF& F = *f;
  const size_t n = monomial_count(d);
  Mat basis = Mat::identity(f, n);
  for (const Mat& elem : spec.image(caps.max_group)) {
    if (basis.cols() == 0) break;
    LinearSub sub{f, {}};
    for (size_t i = 0; i < 4; ++i)
      for (size_t j = 0; j < 4; ++j) sub.m[i][j] = elem.at(i, j);
    Mat m = induced_degree_matrix(sub, d);
    for (size_t i = 0; i < n; ++i) m.at(i, i) = F.sub(m.at(i, i), 1);
    Mat constrained = mat_mul(m, basis);
    auto ns = nullspace_basis(constrained);
    Mat next(f, basis.cols(), ns.size());
    for (size_t j = 0; j < ns.size(); ++j)
      for (size_t i = 0; i < basis.cols(); ++i) next.at(i, j) = ns[j][i];
    basis = mat_mul(basis, next);
  }
  return uint32_t(basis.cols());
}

HilbertReport hilbert_check(const GroupSpec& spec, const ClosedFormSeries& series, uint32_t D,
                            const Caps& caps) {
  HilbertReport r{series, {}, true};
  auto expected = series.expand(D);
  for (uint32_t d = 0; d <= D; ++d) {
    uint32_t dim = graded_invariant_dimension(spec, d, caps);
    bool ok = int64_t(dim) == expected[d];
    r.rows.push_back({d, expected[d], dim, ok});
    r.pass = r.pass && ok;
  }
  return r;
}

HsopReport hsop_certify(const std::vector<Poly>& polys, const Caps& caps) {
  if (polys.size() != 4) throw std::invalid_argument("a parameter system here has 4 polynomials");
  HsopReport r{};
  for (const Poly& p : polys) {
    int d = p.degree();
    if (d <= 0) throw std::invalid_argument("parameter system entries must be nonconstant");
    if (!p.homogeneous_of(uint32_t(d)))
      throw std::invalid_argument("parameter system entries must be homogeneous");
    r.degrees.push_back(uint32_t(d));
  }
  r.degree_product = 1;
  for (uint32_t d : r.degrees) r.degree_product *= d;

  GBConfig cfg;
  cfg.max_basis = caps.max_basis;
  GroebnerBasis gb = buchberger(polys, cfg);
  r.basis_size = gb.gens.size();
  r.zero_dimensional = is_zero_dimensional(gb);
  for (const Poly& g : gb.gens) {
    Monomial lt = grevlex_lead(g).m;
    int nonzero = 0;
    for (size_t k = 0; k < 4; ++k) nonzero += lt.e[k] != 0;
    if (nonzero == 1) r.pure_powers.push_back(lt);
  }
  r.quotient_dim = r.zero_dimensional ? quotient_dimension(gb) : 0;
  return r;
}

namespace {

struct WeightedProduct {
  std::array<uint16_t, 4> exps;
  Poly poly;
};

// all products prod gens[i]^{e_i} with weighted degree <= maxw, bucketed by
// weighted degree; deterministic DFS order with incremental products
std::vector<std::vector<WeightedProduct>> weighted_products(const std::vector<Poly>& gens,
                                                            uint32_t maxw) {
  if (gens.size() > 4) throw std::invalid_argument("at most 4 product generators supported");
  std::vector<uint32_t> degs;
  for (const Poly& g : gens) {
    if (g.degree() <= 0) throw std::invalid_argument("product generators must be nonconstant");
    degs.push_back(uint32_t(g.degree()));
  }
  std::vector<std::vector<WeightedProduct>> buckets(maxw + 1);
  std::array<uint16_t, 4> exps{};

  auto rec = [&](auto&& self, size_t i, uint32_t w, const Poly& cur) -> void {
    if (i == gens.size()) {
      buckets[w].push_back({exps, cur});
      return;
    }
    Poly p = cur;
    for (uint32_t e = 0;; ++e) {
      exps[i] = uint16_t(e);
      self(self, i + 1, w + e * degs[i], p);
      if (w + (e + 1) * degs[i] > maxw) break;
      p = p * gens[i];
    }
    exps[i] = 0;
  };
  rec(rec, 0, 0, Poly::constant(gens.front().field(), 1));
  return buckets;
}

Mat rows_from_vectors(const GFPtr& f, const std::vector<std::vector<uint32_t>>& vecs, size_t n) {
  Mat m(f, vecs.size(), n);
  for (size_t i = 0; i < vecs.size(); ++i)
    for (size_t j = 0; j < n; ++j) m.at(i, j) = vecs[i][j];
  return m;
}

}  // namespace

DecompositionReport decompose(const std::vector<Poly>& primaries, const Poly& secondary,
                              const GroupSpec& spec, uint32_t D, const Caps& caps) {
  if (primaries.size() != 4) throw std::invalid_argument("expected 4 primary invariants");
  check_monomial_cap(D, caps);
  const GFPtr& f = spec.field();
  const uint32_t sdeg = uint32_t(secondary.degree());
  auto buckets = weighted_products(primaries, D);

  DecompositionReport report{{}, true};
  for (uint32_t d = 0; d <= D; ++d) {
    DegreeBasis basis(d);
    std::vector<std::vector<uint32_t>> vecs;
    for (const WeightedProduct& wp : buckets[d]) vecs.push_back(coefficient_vector(wp.poly, basis));
    if (d >= sdeg)
      for (const WeightedProduct& wp : buckets[d - sdeg])
        vecs.push_back(coefficient_vector(wp.poly * secondary, basis));

    uint32_t span_rank = vecs.empty() ? 0 : uint32_t(rank(rows_from_vectors(f, vecs, basis.size())));
    uint32_t dim = graded_invariant_dimension(spec, d, caps);
    if (span_rank > dim)
      throw std::invalid_argument("span rank exceeds the invariant dimension at degree " +
                                  std::to_string(d) + "; an input is not invariant");
    bool ok = span_rank == dim;
    report.rows.push_back({d, dim, span_rank, ok});
    report.pass = report.pass && ok;
  }
  return report;
}

RelationReport find_relation(const std::vector<Poly>& primaries, const Poly& secondary,
                             const Caps& caps) {
  if (primaries.size() != 4) throw std::invalid_argument("expected 4 primary invariants");
  const GFPtr& f = secondary.field();
  const GF& F = *f;
  const uint32_t sdeg = uint32_t(secondary.degree());
  const uint32_t w = 2 * sdeg;
  check_monomial_cap(w, caps);

  auto buckets = weighted_products(primaries, w);
  const auto& a_products = buckets[w];     // A-part: pure primary products
  const auto& b_products = buckets[sdeg];  // B-part: primary products times secondary

  DegreeBasis basis(w);
  Mat sys(f, basis.size(), a_products.size() + b_products.size());
  std::vector<Poly> b_polys;
  for (size_t j = 0; j < a_products.size(); ++j) {
    auto col = coefficient_vector(a_products[j].poly, basis);
    for (size_t i = 0; i < col.size(); ++i) sys.at(i, j) = col[i];
  }
  for (size_t j = 0; j < b_products.size(); ++j) {
    b_polys.push_back(b_products[j].poly * secondary);
    auto col = coefficient_vector(b_polys.back(), basis);
    for (size_t i = 0; i < col.size(); ++i) sys.at(i, a_products.size() + j) = col[i];
  }
  auto rhs = coefficient_vector(secondary * secondary, basis);

  RelationReport report{};
  report.weighted_degree = w;
  auto x = solve(sys, rhs);
  if (!x) {
    report.found = false;
    return report;
  }
  report.found = true;

  // Q(X, Y) = Y^2 - B(X) Y - A(X)
  report.relation.push_back({{0, 0, 0, 0, 2}, 1});
  for (size_t j = 0; j < b_products.size(); ++j) {
    uint32_t c = (*x)[a_products.size() + j];
    if (c == 0) continue;
    const auto& e = b_products[j].exps;
    report.relation.push_back({{e[0], e[1], e[2], e[3], 1}, F.neg(c)});
  }
  for (size_t j = 0; j < a_products.size(); ++j) {
    uint32_t c = (*x)[j];
    if (c == 0) continue;
    const auto& e = a_products[j].exps;
    report.relation.push_back({{e[0], e[1], e[2], e[3], 0}, F.neg(c)});
  }

  // residual check by re-substitution of the concrete generators
  Poly residual = secondary * secondary;
  for (size_t j = 0; j < b_products.size(); ++j) {
    uint32_t c = (*x)[a_products.size() + j];
    if (c != 0) residual = residual - b_polys[j].scaled(c);
  }
  for (size_t j = 0; j < a_products.size(); ++j) {
    uint32_t c = (*x)[j];
    if (c != 0) residual = residual - a_products[j].poly.scaled(c);
  }
  report.residual_zero = residual.is_zero();

  std::ostringstream os;
  bool first = true;
  for (const RelTerm& t : report.relation) {
    if (!first) os << " + ";
    first = false;
    bool unit = t.c == 1;
    bool constant = t.e == std::array<uint16_t, 5>{0, 0, 0, 0, 0};
    if (!unit || constant) os << f->elem(t.c).str();
    bool star = !unit;
    for (size_t i = 0; i < 5; ++i) {
      if (t.e[i] == 0) continue;
      if (star) os << "*";
      os << (i < 4 ? "X" + std::to_string(i + 1) : std::string("Y"));
      if (t.e[i] > 1) os << "^" << t.e[i];
      star = true;
    }
  }
  report.text = os.str();
  return report;
}

ReflectionReport reflection_scan(const GroupSpec& spec, const Caps& caps) {
  ReflectionReport r{};
  const auto& image = spec.image(caps.max_group);
  r.scanned = image.size();
  for (size_t i = 0; i < image.size(); ++i) {
    if (is_reflection(image[i])) {
      ++r.count;
      if (r.witnesses.size() < 8) r.witnesses.push_back(i);
    }
  }
  return r;
}

std::optional<uint32_t> predict_secondary_degree(const std::vector<uint32_t>& hsop_degrees,
                                                 bool reflection_free) {
  if (!reflection_free) return std::nullopt;
  uint32_t sum = 0;
  for (uint32_t d : hsop_degrees) sum += d;
  if (hsop_degrees.size() != 4 || sum < 4)
    throw std::invalid_argument("expected 4 positive degrees");
  return sum - 4;
}

std::optional<Poly> secondary_search(const GroupSpec& spec, const std::vector<Poly>& primaries,
                                     uint32_t d, const Caps& caps) {
  check_monomial_cap(d, caps);
  const GFPtr& f = spec.field();
  const GF& F = *f;
  DegreeBasis basis(d);

  auto buckets = weighted_products(primaries, d);
  std::vector<std::vector<uint32_t>> prod_vecs;
  for (const WeightedProduct& wp : buckets[d]) prod_vecs.push_back(coefficient_vector(wp.poly, basis));
  RrefResult span = rref(rows_from_vectors(f, prod_vecs, basis.size()));

  for (std::vector<uint32_t>& v : invariant_space(spec, d, caps)) {
    // reduce against the span's pivot rows
    for (size_t prow = 0; prow < span.pivots.size(); ++prow) {
      const uint32_t c = v[span.pivots[prow]];
      if (c == 0) continue;
      for (size_t j = 0; j < v.size(); ++j)
        if (span.m.at(prow, j) != 0) v[j] = F.sub(v[j], F.mul(c, span.m.at(prow, j)));
    }
    size_t lead = v.size();
    for (size_t j = 0; j < v.size(); ++j)
      if (v[j] != 0) {
        lead = j;
        break;
      }
    if (lead == v.size()) continue;  // inside the span
    const uint32_t inv = F.inv(v[lead]);
    if (inv != 1)
      for (auto& c : v) c = F.mul(c, inv);
    return poly_from_vector(f, v, basis);
  }
  return std::nullopt;
}

GeneratorSet standard_generators(GroupName name, const GFPtr& f, bool need_secondary,
                                 const Caps& caps) {
  const uint32_t q = f->q();
  GeneratorSet gs{{}, std::nullopt, {}, true};
  switch (name) {
    case GroupName::U2:
    case GroupName::U2Tilde: {
      for (const char* n : {"f1", "f2", "f3", "f4"}) gs.primaries.push_back(build_named(n, f));
      gs.series.denominator_degrees = {1, 1, 2, q};
      if (name == GroupName::U2) {
        gs.series.numerator_exps = {0, q};
        if (need_secondary) gs.secondary = build_named("zeta", f);
      } else {
        gs.series.numerator_exps = {0};
      }
      return gs;
    }
    case GroupName::SL2:
    case GroupName::SL2Tilde: {
      const bool tilde = name == GroupName::SL2Tilde;
      if (q >= 4) {
        for (const char* n : {"f2", "f3", "g0"}) gs.primaries.push_back(build_named(n, f));
        const bool even = f->p() == 2;
        gs.primaries.push_back(build_named(even ? "k1" : "g1", f));
        const uint32_t top = even ? q * q : q * (q + 1) / 2;
        gs.series.denominator_degrees = {1, 2, q + 1, even ? q * (q - 1) : q * (q - 1) / 2};
        gs.series.numerator_exps = tilde ? std::vector<uint32_t>{0} : std::vector<uint32_t>{0, top};
        if (!tilde && need_secondary) {
          if (even) {
            // the degree-q^2 module generator has no closed product formula;
            // locate it outside the span of the primaries
            auto spec = GroupSpec::make(GroupName::SL2, f);
            auto found = secondary_search(
                spec, {gs.primaries[0].poly, gs.primaries[1].poly, gs.primaries[2].poly,
                       gs.primaries[3].poly},
                q * q, caps);
            if (!found) throw std::runtime_error("no secondary of degree q^2 found");
            gs.secondary = NamedInvariant{"k2", *found, q * q, GroupName::SL2};
          } else {
            gs.secondary = build_named("g2", f);
          }
        }
        return gs;
      }
      // q in {2, 3}: both extra generators are found by search
      if (tilde)
        throw std::invalid_argument("no closed-form structure is asserted for sl2tilde at q = " +
                                    std::to_string(q));
      gs.asserted = false;  // reproduced computationally, not theorem-backed
      for (const char* n : {"f2", "f3", "g0"}) gs.primaries.push_back(build_named(n, f));
      auto spec = GroupSpec::make(GroupName::SL2, f);
      const uint32_t k1_deg = q == 3 ? 3 : 2;
      const uint32_t k2_deg = q == 3 ? 6 : 4;
      auto k1 = secondary_search(
          spec, {gs.primaries[0].poly, gs.primaries[1].poly, gs.primaries[2].poly}, k1_deg, caps);
      if (!k1) throw std::runtime_error("no degree-" + std::to_string(k1_deg) + " generator found");
      gs.primaries.push_back(NamedInvariant{"k1", *k1, k1_deg, GroupName::SL2});
      gs.series.denominator_degrees = {1, 2, q + 1, k1_deg};
      gs.series.numerator_exps = {0, k2_deg};
      if (need_secondary) {
        auto k2 = secondary_search(spec,
                                   {gs.primaries[0].poly, gs.primaries[1].poly,
                                    gs.primaries[2].poly, gs.primaries[3].poly},
                                   k2_deg, caps);
        if (!k2) throw std::runtime_error("no degree-" + std::to_string(k2_deg) + " generator found");
        gs.secondary = NamedInvariant{"k2", *k2, k2_deg, GroupName::SL2};
      }
      return gs;
    }
    case GroupName::GL2:
      throw std::invalid_argument("no generating set is asserted for gl2");
  }
  throw std::invalid_argument("unknown group");
}

}  // namespace mxinv
