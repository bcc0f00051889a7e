#include "mxinv/grobner.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace mxinv {

namespace {

struct GrevlexGreater {
  bool operator()(const Monomial& a, const Monomial& b) const { return grevlex_greater(a, b); }
};

// working form during division: terms keyed by grevlex order, lead at begin()
using WorkPoly = std::map<Monomial, uint32_t, GrevlexGreater>;

WorkPoly to_work(const Poly& p) {
  WorkPoly w;
  for (const Term& t : p.terms()) w.emplace(t.m, t.c);
  return w;
}

Poly from_work(const GFPtr& f, const WorkPoly& w) {
  std::vector<Term> ts;
  ts.reserve(w.size());
  for (auto& [m, c] : w) ts.push_back({m, c});
  return Poly::from_terms(f, std::move(ts));
}

// basis entry with cached lead data; terms sorted grevlex-descending
struct Reducer {
  Monomial lt;
  uint32_t lc;
  std::vector<Term> terms;
};

Reducer to_reducer(const Poly& p) {
  std::vector<Term> ts(p.terms().begin(), p.terms().end());
  std::sort(ts.begin(), ts.end(),
            [](const Term& a, const Term& b) { return grevlex_greater(a.m, b.m); });
  return Reducer{ts.front().m, ts.front().c, std::move(ts)};
}

// f -= factor * shift * red, where the lead cancels by construction
void subtract_multiple(const GF& F, WorkPoly& f, const Reducer& red, const Monomial& shift,
                       uint32_t factor) {
  for (const Term& t : red.terms) {
    Monomial m = t.m.times(shift);
    uint32_t delta = F.mul(factor, t.c);
    auto it = f.find(m);
    if (it == f.end()) {
      f.emplace(m, F.neg(delta));
    } else {
      it->second = F.sub(it->second, delta);
      if (it->second == 0) f.erase(it);
    }
  }
}

WorkPoly normal_form_work(const GF& F, WorkPoly f, const std::vector<Reducer>& basis,
                          std::vector<WorkPoly>* quotients = nullptr) {
  WorkPoly remainder;
  while (!f.empty()) {
    const auto [lm, lc] = *f.begin();
    bool reduced_step = false;
    for (size_t i = 0; i < basis.size(); ++i) {
      if (!lm.divisible_by(basis[i].lt)) continue;
      Monomial shift = lm.divided_by(basis[i].lt);
      uint32_t factor = F.mul(lc, F.inv(basis[i].lc));
      subtract_multiple(F, f, basis[i], shift, factor);
      if (quotients) {
        auto& q = (*quotients)[i];
        auto it = q.find(shift);
        if (it == q.end())
          q.emplace(shift, factor);
        else
          it->second = F.add(it->second, factor);
      }
      reduced_step = true;
      break;
    }
    if (!reduced_step) {
      remainder.emplace(lm, lc);
      f.erase(f.begin());
    }
  }
  return remainder;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  Monomial r;
  for (size_t i = 0; i < 4; ++i) r.e[i] = std::max(a.e[i], b.e[i]);
  return r;
}

bool coprime(const Monomial& a, const Monomial& b) {
  for (size_t i = 0; i < 4; ++i)
    if (a.e[i] != 0 && b.e[i] != 0) return false;
  return true;
}

}  // namespace

Term grevlex_lead(const Poly& p) {
  if (p.is_zero()) throw std::domain_error("zero polynomial has no leading term");
  Term best = p.terms().front();
  for (const Term& t : p.terms())
    if (grevlex_greater(t.m, best.m)) best = t;
  return best;
}

Poly normal_form(const Poly& f, const std::vector<Poly>& basis, std::vector<Poly>* quotients) {
  const GFPtr& field = f.field();
  std::vector<Reducer> reds;
  for (const Poly& g : basis) {
    check_same_field(field, g.field());
    if (g.is_zero()) throw std::invalid_argument("zero polynomial in division basis");
    reds.push_back(to_reducer(g));
  }
  std::vector<WorkPoly> qwork;
  if (quotients) qwork.resize(basis.size());
  WorkPoly r = normal_form_work(*field, to_work(f), reds, quotients ? &qwork : nullptr);
  if (quotients) {
    quotients->clear();
    for (auto& q : qwork) quotients->push_back(from_work(field, q));
  }
  return from_work(field, r);
}

GroebnerBasis buchberger(const std::vector<Poly>& gens, const GBConfig& cfg) {
  if (gens.empty()) throw std::invalid_argument("empty generator list");
  const GFPtr& field = gens.front().field();
  const GF& F = *field;

  std::vector<Reducer> basis;
  for (const Poly& g : gens) {
    check_same_field(field, g.field());
    if (g.is_zero()) throw std::invalid_argument("zero polynomial among generators");
    Reducer r = to_reducer(g);
    const uint32_t inv = F.inv(r.lc);
    if (inv != 1)
      for (Term& t : r.terms) t.c = F.mul(t.c, inv);
    r.lc = 1;
    basis.push_back(std::move(r));
  }

  // pair queue, lowest lcm degree first
  using PairKey = std::tuple<uint32_t, size_t, size_t>;
  std::set<PairKey> pairs;
  auto push_pairs = [&](size_t j) {
    for (size_t i = 0; i < j; ++i)
      pairs.emplace(lcm(basis[i].lt, basis[j].lt).degree(), i, j);
  };
  for (size_t j = 1; j < basis.size(); ++j) push_pairs(j);

  while (!pairs.empty()) {
    auto [deg, i, j] = *pairs.begin();
    pairs.erase(pairs.begin());
    if (coprime(basis[i].lt, basis[j].lt)) continue;

    const Monomial l = lcm(basis[i].lt, basis[j].lt);
    WorkPoly s;
    {
      // S(i,j) = shift_i * g_i - shift_j * g_j with monic generators
      const Monomial si = l.divided_by(basis[i].lt), sj = l.divided_by(basis[j].lt);
      for (const Term& t : basis[i].terms) {
        Monomial m = t.m.times(si);
        auto it = s.find(m);
        if (it == s.end())
          s.emplace(m, t.c);
        else if ((it->second = F.add(it->second, t.c)) == 0)
          s.erase(it);
      }
      for (const Term& t : basis[j].terms) {
        Monomial m = t.m.times(sj);
        auto it = s.find(m);
        if (it == s.end())
          s.emplace(m, F.neg(t.c));
        else if ((it->second = F.sub(it->second, t.c)) == 0)
          s.erase(it);
      }
    }
    WorkPoly r = normal_form_work(F, std::move(s), basis);
    if (r.empty()) continue;

    Reducer nr;
    nr.lt = r.begin()->first;
    nr.lc = 1;
    const uint32_t inv = F.inv(r.begin()->second);
    for (auto& [m, c] : r) nr.terms.push_back({m, F.mul(c, inv)});
    basis.push_back(std::move(nr));
    if (basis.size() > cfg.max_basis)
      throw std::runtime_error("Groebner basis exceeds cap of " + std::to_string(cfg.max_basis));
    push_pairs(basis.size() - 1);
  }

  // minimalize: drop generators whose lead is divisible by another lead
  std::sort(basis.begin(), basis.end(),
            [](const Reducer& a, const Reducer& b) { return grevlex_greater(b.lt, a.lt); });
  std::vector<Reducer> minimal;
  for (Reducer& r : basis) {
    bool redundant = false;
    for (const Reducer& kept : minimal)
      if (r.lt.divisible_by(kept.lt)) {
        redundant = true;
        break;
      }
    if (!redundant) minimal.push_back(std::move(r));
  }

  // tail-reduce to the unique reduced basis
  bool changed = true;
  while (changed) {
    changed = false;
    for (size_t i = 0; i < minimal.size(); ++i) {
      std::vector<Reducer> others;
      for (size_t k = 0; k < minimal.size(); ++k)
        if (k != i) others.push_back(minimal[k]);
      WorkPoly w;
      for (const Term& t : minimal[i].terms) w.emplace(t.m, t.c);
      WorkPoly r = normal_form_work(F, std::move(w), others);
      Reducer nr;
      nr.lt = r.begin()->first;
      nr.lc = 1;
      for (auto& [m, c] : r) nr.terms.push_back({m, c});
      if (nr.terms != minimal[i].terms) {
        minimal[i] = std::move(nr);
        changed = true;
      }
    }
  }

  GroebnerBasis out;
  out.reduced = true;
  for (const Reducer& r : minimal) {
    std::vector<Term> ts = r.terms;
    out.gens.push_back(Poly::from_terms(field, std::move(ts)));
  }
  return out;
}

bool is_zero_dimensional(const GroebnerBasis& gb) {
  if (!gb.reduced) throw std::invalid_argument("zero-dimensionality test expects a reduced basis");
  for (const Poly& g : gb.gens)
    if (!g.is_zero() && grevlex_lead(g).m == Monomial::one()) return true;  // unit ideal
  for (size_t var = 0; var < 4; ++var) {
    bool found = false;
    for (const Poly& g : gb.gens) {
      Monomial lt = grevlex_lead(g).m;
      bool pure = lt.e[var] > 0;
      for (size_t k = 0; k < 4 && pure; ++k)
        if (k != var && lt.e[k] != 0) pure = false;
      if (pure) {
        found = true;
        break;
      }
    }
    if (!found) return false;
  }
  return true;
}

uint64_t quotient_dimension(const GroebnerBasis& gb) {
  if (!is_zero_dimensional(gb)) throw std::domain_error("ideal is not zero-dimensional");
  std::vector<Monomial> lts;
  for (const Poly& g : gb.gens) lts.push_back(grevlex_lead(g).m);
  for (const Monomial& lt : lts)
    if (lt == Monomial::one()) return 0;  // unit ideal

  // pure powers bound the staircase box
  std::array<uint32_t, 4> bound{};
  for (size_t var = 0; var < 4; ++var)
    for (const Monomial& lt : lts) {
      bool pure = lt.e[var] > 0;
      for (size_t k = 0; k < 4 && pure; ++k)
        if (k != var && lt.e[k] != 0) pure = false;
      if (pure && (bound[var] == 0 || lt.e[var] < bound[var])) bound[var] = lt.e[var];
    }
  uint64_t box = 1;
  for (uint32_t b : bound) box *= b;
  if (box > 10'000'000) throw std::runtime_error("staircase too large to enumerate");

  uint64_t count = 0;
  Monomial m;
  for (m.e[0] = 0; m.e[0] < bound[0]; ++m.e[0])
    for (m.e[1] = 0; m.e[1] < bound[1]; ++m.e[1])
      for (m.e[2] = 0; m.e[2] < bound[2]; ++m.e[2])
        for (m.e[3] = 0; m.e[3] < bound[3]; ++m.e[3]) {
          bool standard = true;
          for (const Monomial& lt : lts)
            if (m.divisible_by(lt)) {
              standard = false;
              break;
            }
          count += standard;
        }
  return count;
}

}  // namespace mxinv
