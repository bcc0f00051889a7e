#include "mxinv/mpoly.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

namespace mxinv {

Monomial Monomial::variable(size_t i) {
  if (i >= kNumVars) throw std::invalid_argument("variable index out of range");
  Monomial m;
  m.e[i] = 1;
  return m;
}

Monomial Monomial::times(const Monomial& o) const {
  Monomial r;
  for (size_t i = 0; i < 4; ++i) {
    uint32_t s = uint32_t(e[i]) + o.e[i];
    if (s > kMaxExponent) throw std::overflow_error("monomial exponent overflow");
    r.e[i] = uint16_t(s);
  }
  return r;
}

bool Monomial::divisible_by(const Monomial& o) const {
  for (size_t i = 0; i < 4; ++i)
    if (e[i] < o.e[i]) return false;
  return true;
}

Monomial Monomial::divided_by(const Monomial& o) const {
  Monomial r;
  for (size_t i = 0; i < 4; ++i) {
    if (e[i] < o.e[i]) throw std::domain_error("monomial division with remainder");
    r.e[i] = uint16_t(e[i] - o.e[i]);
  }
  return r;
}

bool grevlex_greater(const Monomial& a, const Monomial& b) {
  uint32_t da = a.degree(), db = b.degree();
  if (da != db) return da > db;
  // same degree: a > b iff the last nonzero entry of a-b is negative
  for (size_t i = 4; i-- > 0;) {
    if (a.e[i] != b.e[i]) return a.e[i] < b.e[i];
  }
  return false;
}

Poly Poly::constant(const GFPtr& f, uint32_t value) {
  Poly p(f);
  if (value != 0) {
    if (value >= f->q()) throw std::invalid_argument("coefficient out of range");
    p.t_.push_back({Monomial::one(), value});
  }
  return p;
}

Poly Poly::variable(const GFPtr& f, size_t i) {
  Poly p(f);
  p.t_.push_back({Monomial::variable(i), 1});
  return p;
}

Poly Poly::term(const GFPtr& f, const Monomial& m, uint32_t c) {
  Poly p(f);
  if (c != 0) {
    if (c >= f->q()) throw std::invalid_argument("coefficient out of range");
    p.t_.push_back({m, c});
  }
  return p;
}

Poly Poly::linear_form(const GFPtr& f, const std::array<uint32_t, 4>& c) {
  std::vector<Term> ts;
  for (size_t i = 0; i < 4; ++i)
    if (c[i] != 0) ts.push_back({Monomial::variable(i), c[i]});
  return from_terms(f, std::move(ts));
}

Poly Poly::from_terms(GFPtr f, std::vector<Term> terms) {
  std::sort(terms.begin(), terms.end(),
            [](const Term& a, const Term& b) { return a.m.key() > b.m.key(); });
  Poly p(std::move(f));
  const GF& F = *p.f_;
  for (auto& t : terms) {
    if (t.c == 0) continue;
    if (!p.t_.empty() && p.t_.back().m == t.m) {
      p.t_.back().c = F.add(p.t_.back().c, t.c);
      if (p.t_.back().c == 0) p.t_.pop_back();
    } else {
      p.t_.push_back(t);
    }
  }
  return p;
}

int Poly::degree() const {
  int d = -1;
  for (auto& t : t_) d = std::max(d, int(t.m.degree()));
  return d;
}

bool Poly::homogeneous_of(uint32_t d) const {
  for (auto& t : t_)
    if (t.m.degree() != d) return false;
  return true;
}

GFElem Poly::coeff(const Monomial& m) const {
  for (auto& t : t_)
    if (t.m == m) return f_->elem(t.c);
  return f_->zero();
}

Poly Poly::operator-() const {
  Poly r(f_);
  r.t_ = t_;
  for (auto& t : r.t_) t.c = f_->neg(t.c);
  return r;
}

Poly Poly::scaled(uint32_t c) const {
  Poly r(f_);
  if (c == 0) return r;
  r.t_.reserve(t_.size());
  for (auto& t : t_) r.t_.push_back({t.m, f_->mul(t.c, c)});
  return r;
}

Poly operator+(const Poly& a, const Poly& b) {
  check_same_field(a.f_, b.f_);
  const GF& F = *a.f_;
  Poly r(a.f_);
  r.t_.reserve(a.t_.size() + b.t_.size());
  size_t i = 0, j = 0;
  while (i < a.t_.size() && j < b.t_.size()) {
    uint64_t ka = a.t_[i].m.key(), kb = b.t_[j].m.key();
    if (ka > kb) {
      r.t_.push_back(a.t_[i++]);
    } else if (kb > ka) {
      r.t_.push_back(b.t_[j++]);
    } else {
      uint32_t c = F.add(a.t_[i].c, b.t_[j].c);
      if (c != 0) r.t_.push_back({a.t_[i].m, c});
      ++i, ++j;
    }
  }
  for (; i < a.t_.size(); ++i) r.t_.push_back(a.t_[i]);
  for (; j < b.t_.size(); ++j) r.t_.push_back(b.t_[j]);
  return r;
}

Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

Poly operator*(const Poly& a, const Poly& b) {
  check_same_field(a.f_, b.f_);
  const GF& F = *a.f_;
  Poly r(a.f_);
  if (a.is_zero() || b.is_zero()) return r;
  std::unordered_map<uint64_t, uint32_t> acc;
  acc.reserve(a.t_.size() + b.t_.size());
  for (auto& ta : a.t_)
    for (auto& tb : b.t_) {
      Monomial m = ta.m.times(tb.m);
      uint32_t c = F.mul(ta.c, tb.c);
      auto [it, fresh] = acc.try_emplace(m.key(), c);
      if (!fresh) it->second = F.add(it->second, c);
    }
  r.t_.reserve(acc.size());
  for (auto& [k, c] : acc)
    if (c != 0) r.t_.push_back({Monomial::from_key(k), c});
  std::sort(r.t_.begin(), r.t_.end(),
            [](const Term& x, const Term& y) { return x.m.key() > y.m.key(); });
  return r;
}

Poly Poly::pow(uint32_t k) const {
  Poly r = Poly::constant(f_, 1);
  Poly base = *this;
  while (k) {
    if (k & 1) r = r * base;
    if (k >>= 1) base = base * base;
  }
  return r;
}

bool Poly::operator==(const Poly& o) const {
  check_same_field(f_, o.f_);
  if (t_.size() != o.t_.size()) return false;
  for (size_t i = 0; i < t_.size(); ++i)
    if (t_[i].m != o.t_[i].m || t_[i].c != o.t_[i].c) return false;
  return true;
}

bool poly_less(const Poly& a, const Poly& b) {
  const auto& ta = a.terms();
  const auto& tb = b.terms();
  for (size_t i = 0; i < std::min(ta.size(), tb.size()); ++i) {
    if (ta[i].m.key() != tb[i].m.key()) return ta[i].m.key() < tb[i].m.key();
    if (ta[i].c != tb[i].c) return ta[i].c < tb[i].c;
  }
  return ta.size() < tb.size();
}

// --- substitution ---

namespace {

// Horner step: r * image^k
Poly times_image_power(Poly r, const Poly& image, uint32_t k) {
  for (uint32_t i = 0; i < k; ++i) r = r * image;
  return r;
}

// Terms are sorted in descending lex order, so within a span that agrees on
// all exponents below `var`, runs with equal exponents[var] are contiguous
// and descending; Horner over those runs.
Poly substitute_rec(const Term* begin, const Term* end, size_t var,
                    const std::array<Poly, 4>& images, const GFPtr& f) {
  if (var == 3) {
    Poly acc = Poly::zero(f);
    uint32_t prev = 0;
    bool first = true;
    for (const Term* t = begin; t != end; ++t) {
      uint32_t e = t->m.e[3];
      if (!first) acc = times_image_power(std::move(acc), images[3], prev - e);
      acc = acc + Poly::constant(f, t->c);
      prev = e;
      first = false;
    }
    return times_image_power(std::move(acc), images[3], prev);
  }
  Poly acc = Poly::zero(f);
  uint32_t prev = 0;
  bool first = true;
  const Term* t = begin;
  while (t != end) {
    uint32_t e = t->m.e[var];
    const Term* run_end = t;
    while (run_end != end && run_end->m.e[var] == e) ++run_end;
    Poly inner = substitute_rec(t, run_end, var + 1, images, f);
    if (!first) acc = times_image_power(std::move(acc), images[var], prev - e);
    acc = acc + inner;
    prev = e;
    first = false;
    t = run_end;
  }
  return times_image_power(std::move(acc), images[var], prev);
}

}  // namespace

Poly Poly::substituted(const LinearSub& sub) const {
  check_same_field(f_, sub.f);
  if (is_zero()) return Poly::zero(f_);
  std::array<Poly, 4> images = {sub.image(0), sub.image(1), sub.image(2), sub.image(3)};
  return substitute_rec(t_.data(), t_.data() + t_.size(), 0, images, f_);
}

LinearSub LinearSub::identity(const GFPtr& f) {
  LinearSub s{f, {}};
  for (size_t i = 0; i < 4; ++i) s.m[i][i] = 1;
  return s;
}

Poly LinearSub::image(size_t j) const {
  std::array<uint32_t, 4> c{};
  for (size_t i = 0; i < 4; ++i) c[i] = m[i][j];
  return Poly::linear_form(f, c);
}

// --- graded monomial bases ---

std::vector<Monomial> monomials_of_degree(uint32_t d) {
  if (d > kMaxExponent) throw std::invalid_argument("degree out of range");
  std::vector<Monomial> r;
  r.reserve(size_t(d + 1) * (d + 2) * (d + 3) / 6);
  for (uint32_t e1 = d + 1; e1-- > 0;)
    for (uint32_t e2 = d - e1 + 1; e2-- > 0;)
      for (uint32_t e3 = d - e1 - e2 + 1; e3-- > 0;) {
        uint32_t e4 = d - e1 - e2 - e3;
        r.push_back(Monomial{{uint16_t(e1), uint16_t(e2), uint16_t(e3), uint16_t(e4)}});
      }
  return r;
}

DegreeBasis::DegreeBasis(uint32_t d) : d_(d), monos_(monomials_of_degree(d)) {
  index_.reserve(monos_.size());
  for (uint32_t i = 0; i < monos_.size(); ++i) index_[monos_[i].key()] = i;
}

uint32_t DegreeBasis::index_of(const Monomial& m) const {
  auto it = index_.find(m.key());
  if (it == index_.end()) throw std::invalid_argument("monomial not in basis");
  return it->second;
}

std::vector<uint32_t> coefficient_vector(const Poly& p, const DegreeBasis& basis) {
  std::vector<uint32_t> v(basis.size(), 0);
  for (auto& t : p.terms()) {
    if (t.m.degree() != basis.degree())
      throw std::invalid_argument("polynomial is not homogeneous of the basis degree");
    v[basis.index_of(t.m)] = t.c;
  }
  return v;
}

std::vector<uint32_t> coefficient_vector(const Poly& p, uint32_t d) {
  return coefficient_vector(p, DegreeBasis(d));
}

Poly poly_from_vector(const GFPtr& f, const std::vector<uint32_t>& v, const DegreeBasis& basis) {
  if (v.size() != basis.size()) throw std::invalid_argument("vector length does not match basis");
  std::vector<Term> ts;
  for (size_t i = 0; i < v.size(); ++i)
    if (v[i] != 0) ts.push_back({basis.monomials()[i], v[i]});
  return Poly::from_terms(f, std::move(ts));
}

// --- text format ---
//
// term   = [coeff "*"] factor ("*" factor)* | coeff
// factor = "x" <1-4> ["^" exponent]
// coeff  = decimal residue (prime field / prime subfield) or "[c0,c1,...]"
// terms joined by "+" / "-"; whitespace insignificant.

namespace {

struct Parser {
  const GFPtr& f;
  std::string_view s;
  size_t pos = 0;

  [[noreturn]] void fail(const std::string& what) const {
    throw std::invalid_argument(what + " at position " + std::to_string(pos));
  }
  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }
  bool eat(char c) {
    skip_ws();
    if (pos < s.size() && s[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }
  char peek() {
    skip_ws();
    return pos < s.size() ? s[pos] : '\0';
  }

  uint64_t number() {
    skip_ws();
    if (pos >= s.size() || !std::isdigit(static_cast<unsigned char>(s[pos]))) fail("expected number");
    uint64_t v = 0;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
      v = v * 10 + (s[pos] - '0');
      if (v > (uint64_t(1) << 40)) fail("number too large");
      ++pos;
    }
    return v;
  }

  uint32_t coefficient() {
    if (eat('[')) {
      std::vector<uint32_t> c;
      do {
        uint64_t d = number();
        if (d >= f->p()) fail("coefficient outside field");
        c.push_back(uint32_t(d));
      } while (eat(','));
      if (!eat(']')) fail("expected ']'");
      if (c.size() > f->s()) fail("coefficient outside field");
      return f->pack(c);
    }
    uint64_t d = number();
    if (d >= f->p()) fail("coefficient outside field");
    return uint32_t(d);
  }

  // one "a * x1^2 * x3" style product
  Term product() {
    Term t{Monomial::one(), 1};
    bool any = false;
    for (;;) {
      char c = peek();
      if (c == 'x') {
        ++pos;
        uint64_t idx = number();
        if (idx < 1 || idx > 4) fail("variable index must be 1..4");
        uint64_t exp = 1;
        if (eat('^')) {
          exp = number();
          if (exp > kMaxExponent) fail("exponent overflow");
        }
        Monomial m;
        m.e[idx - 1] = uint16_t(exp);
        // accumulate with the overflow check in times()
        t.m = t.m.times(m);
        any = true;
      } else if (std::isdigit(static_cast<unsigned char>(c)) || c == '[') {
        t.c = f->mul(t.c, coefficient());
        any = true;
      } else {
        break;
      }
      if (!eat('*')) break;
    }
    if (!any) fail("expected term");
    return t;
  }

  Poly run() {
    std::vector<Term> terms;
    bool negated = eat('-');
    if (!negated) eat('+');
    for (;;) {
      Term t = product();
      if (negated) t.c = f->neg(t.c);
      terms.push_back(t);
      skip_ws();
      if (pos >= s.size()) break;
      if (eat('+')) {
        negated = false;
      } else if (eat('-')) {
        negated = true;
      } else {
        fail("expected '+' or '-'");
      }
    }
    return Poly::from_terms(f, std::move(terms));
  }
};

}  // namespace

Poly Poly::parse(const GFPtr& f, std::string_view text) {
  Parser p{f, text};
  return p.run();
}

std::string Poly::str() const {
  if (t_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto& t : t_) {
    if (!first) os << " + ";
    first = false;
    const bool is_const = (t.m == Monomial::one());
    const bool unit = (t.c == 1);
    if (is_const || !unit) os << f_->elem(t.c).str();
    bool need_star = !is_const && !unit;
    for (size_t i = 0; i < 4; ++i) {
      if (t.m.e[i] == 0) continue;
      if (need_star) os << "*";
      os << "x" << (i + 1);
      if (t.m.e[i] > 1) os << "^" << t.m.e[i];
      need_star = true;
    }
  }
  return os.str();
}

}  // namespace mxinv
