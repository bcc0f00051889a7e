#include "mxinv/gf.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace mxinv {

namespace {

constexpr uint32_t kMaxOrder = 1u << 20;
constexpr uint32_t kTableCap = 1024;  // full mul/inv tables up to this order

// --- polynomial arithmetic over Z/p, coefficient vectors low-degree-first ---

void pm_trim(std::vector<uint32_t>& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

// remainder of a modulo monic b
std::vector<uint32_t> pm_rem(std::vector<uint32_t> a, const std::vector<uint32_t>& b, uint32_t p) {
  pm_trim(a);
  const size_t db = b.size() - 1;
  while (a.size() >= b.size()) {
    const uint32_t lead = a.back();
    const size_t shift = a.size() - b.size();
    if (lead != 0) {
      for (size_t i = 0; i <= db; ++i) {
        uint64_t x = a[shift + i] + static_cast<uint64_t>(p) * p - static_cast<uint64_t>(lead) * b[i] % p;
        a[shift + i] = static_cast<uint32_t>(x % p);
      }
    }
    a.pop_back();
    pm_trim(a);
  }
  return a;
}

std::vector<uint32_t> pm_mul(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b, uint32_t p) {
  if (a.empty() || b.empty()) return {};
  std::vector<uint32_t> r(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size(); ++j)
      r[i + j] = static_cast<uint32_t>((r[i + j] + static_cast<uint64_t>(a[i]) * b[j]) % p);
  }
  pm_trim(r);
  return r;
}

uint32_t int_inv_mod(uint32_t a, uint32_t p) {
  // extended Euclid on integers
  int64_t t = 0, nt = 1, r = p, nr = a % p;
  while (nr != 0) {
    int64_t qq = r / nr;
    std::swap(t -= qq * nt, nt);
    std::swap(r -= qq * nr, nr);
  }
  if (r != 1) throw std::domain_error("element has no inverse");
  return static_cast<uint32_t>(t < 0 ? t + p : t);
}

// inverse of a modulo monic m, via extended Euclid on polynomials
std::vector<uint32_t> pm_inv_mod(std::vector<uint32_t> a, std::vector<uint32_t> m, uint32_t p) {
  pm_trim(a);
  if (a.empty()) throw std::domain_error("inversion of zero");
  std::vector<uint32_t> r0 = m, r1 = a;
  std::vector<uint32_t> t0, t1 = {1};
  while (!r1.empty()) {
    // divide r0 by r1: quotient q, remainder r
    std::vector<uint32_t> q, r = r0;
    const uint32_t lead_inv = int_inv_mod(r1.back(), p);
    q.assign(r.size() >= r1.size() ? r.size() - r1.size() + 1 : 0, 0);
    while (r.size() >= r1.size() && !r.empty()) {
      uint32_t c = static_cast<uint32_t>(static_cast<uint64_t>(r.back()) * lead_inv % p);
      size_t shift = r.size() - r1.size();
      q[shift] = c;
      for (size_t i = 0; i < r1.size(); ++i) {
        uint64_t x = r[shift + i] + static_cast<uint64_t>(p) * p - static_cast<uint64_t>(c) * r1[i] % p;
        r[shift + i] = static_cast<uint32_t>(x % p);
      }
      pm_trim(r);
    }
    // (t0, t1) <- (t1, t0 - q*t1)
    std::vector<uint32_t> qt = pm_mul(q, t1, p);
    std::vector<uint32_t> nt(std::max(t0.size(), qt.size()), 0);
    for (size_t i = 0; i < nt.size(); ++i) {
      uint64_t x = (i < t0.size() ? t0[i] : 0) + static_cast<uint64_t>(p) - (i < qt.size() ? qt[i] : 0);
      nt[i] = static_cast<uint32_t>(x % p);
    }
    pm_trim(nt);
    t0 = std::move(t1);
    t1 = std::move(nt);
    r0 = std::move(r1);
    r1 = std::move(r);
  }
  // r0 = gcd, should be a nonzero constant
  if (r0.size() != 1) throw std::domain_error("element has no inverse (gcd not constant)");
  const uint32_t scale = int_inv_mod(r0[0], p);
  for (auto& c : t0) c = static_cast<uint32_t>(static_cast<uint64_t>(c) * scale % p);
  return pm_rem(std::move(t0), m, p);
}

bool pm_divides(const std::vector<uint32_t>& divisor, const std::vector<uint32_t>& f, uint32_t p) {
  return pm_rem(f, divisor, p).empty();
}

// monic m of degree s: irreducible iff no monic factor of degree 1..s/2
bool is_irreducible(const std::vector<uint32_t>& m, uint32_t p) {
  const size_t s = m.size() - 1;
  for (size_t d = 1; 2 * d <= s; ++d) {
    uint64_t count = 1;
    for (size_t i = 0; i < d; ++i) count *= p;
    for (uint64_t j = 0; j < count; ++j) {
      std::vector<uint32_t> g(d + 1, 0);
      g[d] = 1;
      uint64_t t = j;
      for (size_t i = 0; i < d; ++i) {
        g[i] = static_cast<uint32_t>(t % p);
        t /= p;
      }
      if (pm_divides(g, m, p)) return false;
    }
  }
  return true;
}

std::vector<uint32_t> default_modulus(uint32_t p, uint32_t s) {
  // lexicographically smallest monic irreducible, low-degree coefficients
  // most significant in the comparison
  uint64_t count = 1;
  for (uint32_t i = 0; i < s; ++i) count *= p;
  for (uint64_t j = 0; j < count; ++j) {
    std::vector<uint32_t> m(s + 1, 0);
    m[s] = 1;
    // c0 is the most significant base-p digit of j, so increasing j walks
    // the candidates in low-degree-first lexicographic order
    uint64_t t = j;
    for (uint32_t i = s; i-- > 0;) {
      m[i] = static_cast<uint32_t>(t % p);
      t /= p;
    }
    if (is_irreducible(m, p)) return m;
  }
  throw std::logic_error("no irreducible polynomial found");  // unreachable
}

}  // namespace

bool is_prime(uint32_t n) {
  if (n < 2) return false;
  for (uint32_t d = 2; static_cast<uint64_t>(d) * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::pair<uint32_t, uint32_t> factor_prime_power(uint32_t q) {
  if (q < 2) throw std::invalid_argument("field order must be at least 2");
  for (uint32_t p = 2; static_cast<uint64_t>(p) * p <= q; ++p) {
    if (q % p != 0) continue;
    uint32_t s = 0, r = q;
    while (r % p == 0) {
      r /= p;
      ++s;
    }
    if (r != 1) throw std::invalid_argument("field order is not a prime power: " + std::to_string(q));
    return {p, s};
  }
  return {q, 1};  // q itself prime
}

GFPtr GF::make(uint32_t p, uint32_t s) {
  if (!is_prime(p)) throw std::invalid_argument("characteristic must be prime, got " + std::to_string(p));
  if (s == 0) throw std::invalid_argument("extension degree must be positive");
  if (s == 1) return make(p, 1, {});
  return make(p, s, default_modulus(p, s));
}

GFPtr GF::make(uint32_t p, uint32_t s, const std::vector<uint32_t>& modulus) {
  if (!is_prime(p)) throw std::invalid_argument("characteristic must be prime, got " + std::to_string(p));
  if (s == 0) throw std::invalid_argument("extension degree must be positive");
  uint64_t q = 1;
  for (uint32_t i = 0; i < s; ++i) {
    q *= p;
    if (q > kMaxOrder) throw std::invalid_argument("field order exceeds supported bound");
  }
  auto f = std::shared_ptr<GF>(new GF());
  f->p_ = p;
  f->s_ = s;
  f->q_ = static_cast<uint32_t>(q);
  if (s == 1) {
    if (!modulus.empty()) throw std::invalid_argument("prime fields take no modulus");
  } else {
    if (modulus.size() != s + 1) throw std::invalid_argument("modulus must have degree s");
    if (modulus.back() != 1) throw std::invalid_argument("modulus must be monic");
    for (uint32_t c : modulus)
      if (c >= p) throw std::invalid_argument("modulus coefficient out of range");
    if (!is_irreducible(modulus, p)) throw std::invalid_argument("modulus is reducible");
    f->modulus_ = modulus;
  }
  f->build_tables();
  return f;
}

void GF::build_tables() {
  if (s_ > 1 && q_ <= kTableCap) {
    mul_table_.assign(static_cast<size_t>(q_) * q_, 0);
    for (uint32_t a = 0; a < q_; ++a)
      for (uint32_t b = a; b < q_; ++b) {
        uint32_t v = mul_slow(a, b);
        mul_table_[static_cast<size_t>(a) * q_ + b] = v;
        mul_table_[static_cast<size_t>(b) * q_ + a] = v;
      }
  }
  if (q_ <= kTableCap) {
    inv_table_.assign(q_, 0);
    for (uint32_t a = 1; a < q_; ++a) inv_table_[a] = inv_slow(a);
  }
}

std::vector<uint32_t> GF::unpack(uint32_t v) const {
  std::vector<uint32_t> c(s_);
  for (uint32_t i = 0; i < s_; ++i) {
    c[i] = v % p_;
    v /= p_;
  }
  return c;
}

uint32_t GF::pack(const std::vector<uint32_t>& c) const {
  if (c.size() > s_) throw std::invalid_argument("too many coefficients");
  uint32_t v = 0;
  for (size_t i = c.size(); i-- > 0;) {
    if (c[i] >= p_) throw std::invalid_argument("coefficient out of range");
    v = v * p_ + c[i];
  }
  return v;
}

uint32_t GF::add(uint32_t a, uint32_t b) const {
  if (s_ == 1) {
    uint32_t r = a + b;
    return r >= q_ ? r - q_ : r;
  }
  uint32_t r = 0, mult = 1;
  for (uint32_t i = 0; i < s_; ++i) {
    uint32_t da = a % p_, db = b % p_;
    uint32_t d = da + db;
    if (d >= p_) d -= p_;
    r += d * mult;
    mult *= p_;
    a /= p_;
    b /= p_;
  }
  return r;
}

uint32_t GF::neg(uint32_t a) const {
  if (s_ == 1) return a == 0 ? 0 : q_ - a;
  uint32_t r = 0, mult = 1;
  for (uint32_t i = 0; i < s_; ++i) {
    uint32_t d = a % p_;
    r += (d == 0 ? 0 : p_ - d) * mult;
    mult *= p_;
    a /= p_;
  }
  return r;
}

uint32_t GF::sub(uint32_t a, uint32_t b) const { return add(a, neg(b)); }

uint32_t GF::mul_slow(uint32_t a, uint32_t b) const {
  if (s_ == 1) return static_cast<uint32_t>(static_cast<uint64_t>(a) * b % p_);
  std::vector<uint32_t> prod = pm_mul(unpack(a), unpack(b), p_);
  prod = pm_rem(std::move(prod), modulus_, p_);
  prod.resize(s_, 0);
  return pack(prod);
}

uint32_t GF::mul(uint32_t a, uint32_t b) const {
  if (s_ == 1) return static_cast<uint32_t>(static_cast<uint64_t>(a) * b % p_);
  if (!mul_table_.empty()) return mul_table_[static_cast<size_t>(a) * q_ + b];
  return mul_slow(a, b);
}

uint32_t GF::inv_slow(uint32_t a) const {
  if (a == 0) throw std::domain_error("inversion of zero");
  if (s_ == 1) return int_inv_mod(a, p_);
  std::vector<uint32_t> r = pm_inv_mod(unpack(a), modulus_, p_);
  r.resize(s_, 0);
  return pack(r);
}

uint32_t GF::inv(uint32_t a) const {
  if (a == 0) throw std::domain_error("inversion of zero");
  if (!inv_table_.empty()) return inv_table_[a];
  return inv_slow(a);
}

uint32_t GF::pow(uint32_t a, uint64_t e) const {
  uint32_t r = 1;
  while (e) {
    if (e & 1) r = mul(r, a);
    a = mul(a, a);
    e >>= 1;
  }
  return r;
}

bool GF::is_square(uint32_t a) const {
  if (a == 0) throw std::domain_error("is_square is defined on nonzero elements");
  if (p_ == 2) return true;
  return pow(a, (q_ - 1) / 2) == 1;
}

GFElem GF::elem(uint32_t packed) const {
  if (packed >= q_) throw std::invalid_argument("element value out of range");
  return GFElem(shared_from_this(), packed);
}

GFElem GF::from_int(int64_t n) const {
  int64_t r = n % p_;
  if (r < 0) r += p_;
  return GFElem(shared_from_this(), static_cast<uint32_t>(r));
}

GFElem GF::from_coeffs(const std::vector<uint32_t>& c) const {
  return GFElem(shared_from_this(), pack(c));
}

std::vector<GFElem> GF::enumerate() const {
  std::vector<GFElem> r;
  r.reserve(q_);
  for (uint32_t v = 0; v < q_; ++v) r.push_back(GFElem(shared_from_this(), v));
  return r;
}

std::pair<std::vector<GFElem>, std::vector<GFElem>> GF::residue_sets() const {
  if (p_ == 2)
    throw std::domain_error("residue sets are defined for odd characteristic only");
  std::vector<bool> sq(q_, false);
  for (uint32_t c = 1; c < q_; ++c) sq[mul(c, c)] = true;
  std::vector<GFElem> a0, a1;
  for (uint32_t v = 1; v < q_; ++v)
    (sq[v] ? a0 : a1).push_back(GFElem(shared_from_this(), v));
  return {a0, a1};
}

bool GF::same(const GF& o) const {
  return this == &o || (p_ == o.p_ && s_ == o.s_ && modulus_ == o.modulus_);
}

std::string GF::describe() const {
  std::ostringstream os;
  os << "GF(" << q_ << ")";
  if (s_ > 1) {
    os << " = GF(" << p_ << ")[t]/(";
    bool first = true;
    for (size_t i = modulus_.size(); i-- > 0;) {
      if (modulus_[i] == 0) continue;
      if (!first) os << " + ";
      first = false;
      if (i == 0 || modulus_[i] != 1) os << modulus_[i];
      if (i >= 1) {
        if (modulus_[i] != 1) os << "*";
        os << "t";
        if (i > 1) os << "^" << i;
      }
    }
    os << ")";
  }
  return os.str();
}

void check_same_field(const GFPtr& a, const GFPtr& b) {
  if (!a || !b) throw std::invalid_argument("element has no field");
  if (a.get() == b.get()) return;
  if (!a->same(*b)) throw std::invalid_argument("operands belong to different fields");
}

std::vector<uint32_t> GFElem::coeffs() const { return f_->unpack(v_); }

std::string GFElem::str() const {
  if (f_->s() == 1) return std::to_string(v_);
  std::ostringstream os;
  os << "[";
  auto c = coeffs();
  for (size_t i = 0; i < c.size(); ++i) {
    if (i) os << ",";
    os << c[i];
  }
  os << "]";
  return os.str();
}

GFElem GFElem::operator-() const { return GFElem(f_, f_->neg(v_)); }
GFElem GFElem::inverse() const { return GFElem(f_, f_->inv(v_)); }
bool GFElem::is_square() const { return f_->is_square(v_); }

GFElem operator+(const GFElem& a, const GFElem& b) {
  check_same_field(a.f_, b.f_);
  return GFElem(a.f_, a.f_->add(a.v_, b.v_));
}
GFElem operator-(const GFElem& a, const GFElem& b) {
  check_same_field(a.f_, b.f_);
  return GFElem(a.f_, a.f_->sub(a.v_, b.v_));
}
GFElem operator*(const GFElem& a, const GFElem& b) {
  check_same_field(a.f_, b.f_);
  return GFElem(a.f_, a.f_->mul(a.v_, b.v_));
}
GFElem operator/(const GFElem& a, const GFElem& b) {
  check_same_field(a.f_, b.f_);
  return GFElem(a.f_, a.f_->mul(a.v_, a.f_->inv(b.v_)));
}
bool operator==(const GFElem& a, const GFElem& b) {
  check_same_field(a.f_, b.f_);
  return a.v_ == b.v_;
}
bool operator!=(const GFElem& a, const GFElem& b) { return !(a == b); }

}  // namespace mxinv
