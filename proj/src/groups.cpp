#include "mxinv/groups.hpp"

#include <map>
#include <queue>
#include <stdexcept>

namespace mxinv {

GroupName parse_group_name(const std::string& s) {
  if (s == "u2") return GroupName::U2;
  if (s == "u2tilde") return GroupName::U2Tilde;
  if (s == "sl2") return GroupName::SL2;
  if (s == "sl2tilde") return GroupName::SL2Tilde;
  if (s == "gl2") return GroupName::GL2;
  throw std::invalid_argument("unknown group: " + s + " (expected u2, u2tilde, sl2, sl2tilde, gl2)");
}

std::string group_name_str(GroupName g) {
  switch (g) {
    case GroupName::U2: return "u2";
    case GroupName::U2Tilde: return "u2tilde";
    case GroupName::SL2: return "sl2";
    case GroupName::SL2Tilde: return "sl2tilde";
    case GroupName::GL2: return "gl2";
  }
  return "?";
}

namespace {

// c = a*b for 2x2 row-major matrices
std::array<uint32_t, 4> mul2(const GF& F, const std::array<uint32_t, 4>& a,
                             const std::array<uint32_t, 4>& b) {
  return {F.add(F.mul(a[0], b[0]), F.mul(a[1], b[2])),
          F.add(F.mul(a[0], b[1]), F.mul(a[1], b[3])),
          F.add(F.mul(a[2], b[0]), F.mul(a[3], b[2])),
          F.add(F.mul(a[2], b[1]), F.mul(a[3], b[3]))};
}

}  // namespace

Mat transpose_action_on_space(const GFPtr& f, const std::array<uint32_t, 4>& g) {
  const GF& F = *f;
  if (F.sub(F.mul(g[0], g[3]), F.mul(g[1], g[2])) == 0)
    throw std::invalid_argument("group element must be invertible");
  const std::array<uint32_t, 4> gt = {g[0], g[2], g[1], g[3]};
  // basis (E11, E21, E12, E22); coordinates (N11, N21, N12, N22)
  const std::array<std::array<uint32_t, 4>, 4> basis = {{{1, 0, 0, 0}, {0, 0, 1, 0}, {0, 1, 0, 0}, {0, 0, 0, 1}}};
  Mat m(f, 4, 4);
  for (size_t i = 0; i < 4; ++i) {
    auto n = mul2(F, mul2(F, g, basis[i]), gt);
    m.at(i, 0) = n[0];
    m.at(i, 1) = n[2];
    m.at(i, 2) = n[1];
    m.at(i, 3) = n[3];
  }
  return m;
}

GroupElement element_from_2x2(const GFPtr& f, const std::array<uint32_t, 4>& g, std::string label) {
  Mat action = transpose_action_on_space(f, g);
  return GroupElement{std::move(label), g, inverse(transpose(action))};
}

GroupElement element_alpha(const GFPtr& f) {
  Mat a(f, 4, 4);
  a.at(0, 0) = 1;
  a.at(1, 2) = f->neg(1);
  a.at(2, 1) = f->neg(1);
  a.at(3, 3) = 1;
  return GroupElement{"alpha", std::nullopt, std::move(a)};
}

GroupElement element_identity(const GFPtr& f) {
  return GroupElement{"id", std::array<uint32_t, 4>{1, 0, 0, 1}, Mat::identity(f, 4)};
}

GroupElement element_from_dual(const GFPtr& f, Mat dual, std::string label) {
  if (dual.rows() != 4 || dual.cols() != 4) throw std::invalid_argument("dual matrix must be 4x4");
  (void)f;
  return GroupElement{std::move(label), std::nullopt, std::move(dual)};
}

LinearSub dual_action(const GroupElement& g) {
  LinearSub s{g.dual.field(), {}};
  for (size_t i = 0; i < 4; ++i)
    for (size_t j = 0; j < 4; ++j) s.m[i][j] = g.dual.at(i, j);
  return s;
}

Poly act(const GroupElement& g, const Poly& f) { return f.substituted(dual_action(g)); }

GroupElement compose(const GroupElement& g, const GroupElement& h) {
  return GroupElement{g.label + "*" + h.label, std::nullopt, mat_mul(g.dual, h.dual)};
}

Mat induced_degree_matrix(const LinearSub& sub, uint32_t d) {
  const GFPtr& f = sub.f;
  DegreeBasis basis(d);
  const size_t n = basis.size();
  Mat m(f, n, n);
  const std::array<Poly, 4> img = {sub.image(0), sub.image(1), sub.image(2), sub.image(3)};

  // cached powers of the last image; the other three are folded in
  // incrementally along the enumeration
  std::vector<Poly> x4pow;
  x4pow.reserve(d + 1);
  x4pow.push_back(Poly::constant(f, 1));
  for (uint32_t k = 1; k <= d; ++k) x4pow.push_back(x4pow.back() * img[3]);

#pragma omp parallel for schedule(dynamic)
  for (uint32_t e1 = 0; e1 <= d; ++e1) {
    Poly p1 = img[0].pow(e1);
    Poly p2 = p1;
    for (uint32_t e2 = 0; e2 + e1 <= d; ++e2) {
      Poly p3 = p2;
      for (uint32_t e3 = 0; e1 + e2 + e3 <= d; ++e3) {
        const uint32_t e4 = d - e1 - e2 - e3;
        Poly col = p3 * x4pow[e4];
        const uint32_t j = basis.index_of(
            Monomial{{uint16_t(e1), uint16_t(e2), uint16_t(e3), uint16_t(e4)}});
        for (const Term& t : col.terms()) m.at(basis.index_of(t.m), j) = t.c;
        if (e1 + e2 + e3 < d) p3 = p3 * img[2];
      }
      if (e1 + e2 < d) p2 = p2 * img[1];
    }
  }
  return m;
}

Mat induced_degree_matrix_ref(const LinearSub& sub, uint32_t d) {
  DegreeBasis basis(d);
  Mat m(sub.f, basis.size(), basis.size());
  for (size_t j = 0; j < basis.size(); ++j) {
    Poly image = Poly::term(sub.f, basis.monomials()[j], 1).substituted(sub);
    auto col = coefficient_vector(image, basis);
    for (size_t i = 0; i < col.size(); ++i) m.at(i, j) = col[i];
  }
  return m;
}

bool is_reflection(const Mat& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("is_reflection expects a square matrix");
  const GF& F = *m.field();
  Mat diff = m;
  bool is_id = true;
  for (size_t i = 0; i < m.rows(); ++i) {
    diff.at(i, i) = F.sub(diff.at(i, i), 1);
    for (size_t j = 0; j < m.cols(); ++j) is_id = is_id && diff.at(i, j) == 0;
  }
  return !is_id && rank(diff) == 1;
}

namespace {

uint64_t image_order_formula(GroupName name, uint32_t q, uint32_t p) {
  const uint64_t qq = q;
  switch (name) {
    case GroupName::U2: return qq;
    case GroupName::U2Tilde: return 2 * qq;
    case GroupName::SL2: {
      uint64_t o = qq * qq * qq - qq;
      return p == 2 ? o : o / 2;
    }
    case GroupName::SL2Tilde: {
      uint64_t o = qq * qq * qq - qq;
      return p == 2 ? 2 * o : o;
    }
    case GroupName::GL2: {
      uint64_t o = (qq * qq - 1) * (qq * qq - qq);
      return p == 2 ? o : o / 2;
    }
  }
  return 0;
}

uint32_t primitive_element(const GF& F) {
  for (uint32_t v = 2; v < F.q(); ++v) {
    uint32_t x = v;
    uint32_t order = 1;
    while (x != 1) {
      x = F.mul(x, v);
      ++order;
    }
    if (order == F.q() - 1) return v;
  }
  return 1;  // q = 2
}

}  // namespace

GroupSpec GroupSpec::make(GroupName name, const GFPtr& f) {
  GroupSpec g;
  g.f_ = f;
  g.name_ = name;
  g.label_ = group_name_str(name);
  g.order_ = image_order_formula(name, f->q(), f->p());

  // shear generators delta_b over an F_p-basis of the field
  std::vector<GroupElement> gens;
  uint32_t basis_elem = 1;
  for (uint32_t i = 0; i < f->s(); ++i) {
    gens.push_back(element_from_2x2(f, {1, basis_elem, 0, 1},
                                    "delta_" + f->elem(basis_elem).str()));
    basis_elem *= f->p();
  }
  const bool with_tau = name != GroupName::U2 && name != GroupName::U2Tilde;
  const bool with_alpha = name == GroupName::U2Tilde || name == GroupName::SL2Tilde;
  if (with_tau) gens.push_back(element_from_2x2(f, {0, 1, f->neg(1), 0}, "tau"));
  if (with_alpha) gens.push_back(element_alpha(f));
  if (name == GroupName::GL2) {
    uint32_t w = primitive_element(*f);
    if (w != 1) gens.push_back(element_from_2x2(f, {w, 0, 0, 1}, "diag_" + f->elem(w).str()));
  }
  g.gens_ = std::move(gens);
  return g;
}

GroupSpec GroupSpec::synthetic(const GFPtr& f, std::vector<GroupElement> gens, std::string label) {
  GroupSpec g;
  g.f_ = f;
  g.gens_ = std::move(gens);
  g.label_ = std::move(label);
  return g;
}

const std::vector<Mat>& GroupSpec::image(uint64_t cap) const {
  if (image_) return *image_;
  std::vector<Mat> elems;
  std::map<std::vector<uint32_t>, size_t> seen;
  std::queue<size_t> work;
  elems.push_back(Mat::identity(f_, 4));
  seen.emplace(elems[0].data(), 0);
  work.push(0);
  while (!work.empty()) {
    size_t idx = work.front();
    work.pop();
    for (const GroupElement& g : gens_) {
      Mat next = mat_mul(elems[idx], g.dual);
      auto [it, fresh] = seen.emplace(next.data(), elems.size());
      if (fresh) {
        elems.push_back(std::move(next));
        work.push(elems.size() - 1);
        if (elems.size() > cap)
          throw std::runtime_error("group image exceeds cap of " + std::to_string(cap) +
                                   " elements");
      }
    }
  }
  if (order_ != 0 && elems.size() != order_)
    throw std::logic_error("image size " + std::to_string(elems.size()) +
                           " does not match the order formula " + std::to_string(order_));
  image_ = std::move(elems);
  return *image_;
}

}  // namespace mxinv
