#include "qkgr/groebner.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "qkgr/errors.hpp"

namespace qkgr {

namespace {

struct Term {
  Monomial m;
  Integer c;
};

// Integer polynomial with terms in descending order for a fixed TermOrder.
struct IPoly {
  std::vector<Term> t;
  unsigned sugar = 0;

  bool zero() const { return t.empty(); }
  const Monomial& lm() const { return t.front().m; }
  const Integer& lc() const { return t.front().c; }
};

Integer content(const std::vector<Term>& terms, std::size_t from = 0) {
  Integer g = 0;
  for (std::size_t i = from; i < terms.size(); ++i) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), terms[i].c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

void make_primitive(IPoly& p) {
  if (p.zero()) return;
  Integer g = content(p.t);
  if (p.lc() < 0) g = -g;
  if (g != 1) {
    for (auto& term : p.t) mpz_divexact(term.c.get_mpz_t(), term.c.get_mpz_t(), g.get_mpz_t());
  }
}

class Engine {
 public:
  explicit Engine(const TermOrder& order) : order_(order) {}

  IPoly from_poly(const Poly& p) const {
    IPoly r;
    Integer den = 1;
    for (const auto& [m, c] : p.terms()) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
    for (const auto& [m, c] : p.terms()) {
      Integer v = c.get_num() * (den / c.get_den());
      r.t.push_back({m, v});
      r.sugar = std::max(r.sugar, m.total_degree());
    }
    sort(r);
    return r;
  }

  void sort(IPoly& p) const {
    std::sort(p.t.begin(), p.t.end(), [&](const Term& a, const Term& b) { return order_.greater(a.m, b.m); });
  }

  // a*h[from..] - b*x^d*g, dropping the cancelled leading term.
  std::vector<Term> combine(const std::vector<Term>& h, std::size_t from, const Integer& a, const Integer& b,
                            const Monomial& d, const IPoly& g) const {
    std::vector<Term> out;
    out.reserve(h.size() - from + g.t.size());
    std::size_t i = from + 1, j = 1;
    while (i < h.size() || j < g.t.size()) {
      if (j >= g.t.size()) {
        out.push_back({h[i].m, a * h[i].c});
        ++i;
        continue;
      }
      Monomial gm = g.t[j].m * d;
      if (i >= h.size()) {
        out.push_back({gm, -b * g.t[j].c});
        ++j;
        continue;
      }
      int cmp = order_.compare(h[i].m, gm);
      if (cmp > 0) {
        out.push_back({h[i].m, a * h[i].c});
        ++i;
      } else if (cmp < 0) {
        out.push_back({gm, -b * g.t[j].c});
        ++j;
      } else {
        Integer v = a * h[i].c - b * g.t[j].c;
        if (v != 0) out.push_back({h[i].m, std::move(v)});
        ++i;
        ++j;
      }
    }
    return out;
  }

  // Full (tail = true) or top reduction of h. `scale` accumulates the rational factor that
  // h has been multiplied by, so result / scale is congruent to the input.
  IPoly reduce(IPoly h, const std::vector<const IPoly*>& basis, bool tail, Rational* scale) const {
    std::vector<Term> done;
    std::size_t from = 0;
    std::size_t steps = 0;
    while (from < h.t.size()) {
      const Monomial& lead = h.t[from].m;
      const IPoly* div = nullptr;
      for (const IPoly* g : basis) {
        if (g->lm().divides(lead)) {
          if (!div || g->t.size() < div->t.size()) div = g;
        }
      }
      if (!div) {
        if (!tail) break;
        done.push_back(std::move(h.t[from]));
        ++from;
        continue;
      }
      Integer gcd;
      mpz_gcd(gcd.get_mpz_t(), div->lc().get_mpz_t(), h.t[from].c.get_mpz_t());
      Integer a = div->lc() / gcd;
      Integer b = h.t[from].c / gcd;
      if (a < 0) {
        a = -a;
        b = -b;
      }
      Monomial d = div->lm().quotient_of(lead);
      h.sugar = std::max(h.sugar, div->sugar + d.total_degree());
      h.t = combine(h.t, from, a, b, d, *div);
      from = 0;
      if (a != 1) {
        for (auto& term : done) term.c *= a;
        if (scale) *scale *= a;
      }
      if (++steps % 8 == 0) {
        Integer g = content(h.t);
        for (const auto& term : done) {
          if (g == 1) break;
          mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), term.c.get_mpz_t());
        }
        if (g > 1) {
          for (auto& term : h.t) mpz_divexact(term.c.get_mpz_t(), term.c.get_mpz_t(), g.get_mpz_t());
          for (auto& term : done) mpz_divexact(term.c.get_mpz_t(), term.c.get_mpz_t(), g.get_mpz_t());
          if (scale) *scale /= g;
        }
      }
    }
    IPoly r;
    r.sugar = h.sugar;
    r.t = std::move(done);
    for (std::size_t i = from; i < h.t.size(); ++i) r.t.push_back(std::move(h.t[i]));
    return r;
  }

  IPoly spoly(const IPoly& f, const IPoly& g) const {
    Monomial l = f.lm().lcm(g.lm());
    Monomial df = f.lm().quotient_of(l);
    Monomial dg = g.lm().quotient_of(l);
    Integer gcd;
    mpz_gcd(gcd.get_mpz_t(), f.lc().get_mpz_t(), g.lc().get_mpz_t());
    Integer a = g.lc() / gcd;  // multiplies f
    Integer b = f.lc() / gcd;  // multiplies g
    IPoly fs;
    for (const auto& term : f.t) fs.t.push_back({term.m * df, term.c});
    IPoly gs;
    gs.t.reserve(g.t.size());
    for (const auto& term : g.t) gs.t.push_back({term.m * dg, term.c});
    // a*fs - b*gs with leading terms cancelling; reuse combine with d = 1.
    IPoly r;
    r.t = combine(fs.t, 0, a, b, Monomial(), gs);
    r.sugar = std::max(f.sugar + df.total_degree(), g.sugar + dg.total_degree());
    return r;
  }

  const TermOrder& order() const { return order_; }

 private:
  const TermOrder& order_;
};

struct Pair {
  std::size_t i, j;
  Monomial lcm;
  unsigned sugar;
};

Poly to_poly(const IPoly& p, const VarSpacePtr& space, bool monic) {
  Poly r(space);
  if (p.zero()) return r;
  Rational lead(p.lc());
  for (const auto& term : p.t) {
    Rational c(term.c);
    if (monic) c /= lead;
    r.add_term(term.m, c);
  }
  return r;
}

}  // namespace

std::string hex64(std::uint64_t v) {
  static const char* digits = "0123456789abcdef";
  std::string s(16, '0');
  for (int i = 15; i >= 0; --i) {
    s[i] = digits[v & 0xF];
    v >>= 4;
  }
  return s;
}

std::uint64_t ideal_fingerprint(const std::vector<Poly>& gens, const TermOrder& order) {
  std::string canon = "order=" + order.name() + ";";
  if (!gens.empty()) {
    for (const auto& v : gens.front().space()->vars()) {
      canon += v.name + ":" + std::to_string(v.degree) + ":" + std::to_string(v.block) + ",";
    }
  }
  canon += ";";
  for (const auto& g : gens) canon += to_string(g) + "\n";
  return fnv1a(canon);
}

GroebnerBasis::GroebnerBasis(VarSpacePtr space, TermOrder order, std::vector<Poly> monic_basis,
                             std::uint64_t fingerprint)
    : space_(std::move(space)), order_(std::move(order)), basis_(std::move(monic_basis)), fingerprint_(fingerprint) {
  for (const auto& g : basis_) leads_.push_back(leading_monomial(g));
}

Monomial GroebnerBasis::leading_monomial(const Poly& p) const {
  if (p.is_zero()) throw InvalidArgument("leading monomial of zero");
  const Monomial* best = nullptr;
  for (const auto& [m, c] : p.terms()) {
    if (!best || order_.greater(m, *best)) best = &m;
  }
  return *best;
}

Poly GroebnerBasis::normal_form(const Poly& p) const {
  if (p.is_zero()) return p;
  if (!same_space(p.space(), space_)) throw SpaceMismatch("normal_form: polynomial and basis spaces differ");
  Engine eng(order_);
  std::vector<IPoly> ib;
  ib.reserve(basis_.size());
  for (const auto& g : basis_) ib.push_back(eng.from_poly(g));
  std::vector<const IPoly*> ptrs;
  for (const auto& g : ib) ptrs.push_back(&g);
  Integer den = 1;
  for (const auto& [m, c] : p.terms()) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
  Rational scale(den);
  IPoly h = eng.from_poly(p);
  IPoly r = eng.reduce(std::move(h), ptrs, true, &scale);
  Poly out(space_);
  for (const auto& term : r.t) out.add_term(term.m, Rational(term.c) / scale);
  return out;
}

bool GroebnerBasis::is_unit_ideal() const {
  return basis_.size() == 1 && basis_.front().is_constant() && !basis_.front().is_zero();
}

std::vector<Monomial> GroebnerBasis::leading_monomials() const { return leads_; }

std::optional<long> GroebnerBasis::quotient_dimension() const {
  if (is_unit_ideal()) return 0;
  const std::size_t nv = space_->size();
  for (std::size_t v = 0; v < nv; ++v) {
    bool found = false;
    for (const auto& m : leads_) {
      bool pure = m[v] > 0;
      for (std::size_t w = 0; w < nv && pure; ++w)
        if (w != v && m[w] != 0) pure = false;
      if (pure) {
        found = true;
        break;
      }
    }
    if (!found) return std::nullopt;
  }
  auto standard = [&](const Monomial& m) {
    for (const auto& l : leads_)
      if (l.divides(m)) return false;
    return true;
  };
  std::set<Monomial> seen;
  std::deque<Monomial> queue;
  queue.push_back(Monomial());
  seen.insert(Monomial());
  while (!queue.empty()) {
    Monomial m = queue.front();
    queue.pop_front();
    for (std::size_t v = 0; v < nv; ++v) {
      Monomial next = m;
      next.set(v, m[v] + 1);
      if (seen.count(next) || !standard(next)) continue;
      seen.insert(next);
      queue.push_back(next);
    }
  }
  return static_cast<long>(seen.size());
}

GroebnerBasis groebner(const std::vector<Poly>& gens, const TermOrder& order, const GroebnerOptions& options) {
  if (gens.empty()) throw InvalidArgument("groebner: empty generator list");
  const VarSpacePtr space = gens.front().space();
  for (const auto& g : gens) {
    if (!same_space(g.space(), space)) throw SpaceMismatch("groebner: generators live in different spaces");
  }
  const std::uint64_t fp = ideal_fingerprint(gens, order);
  Engine eng(order);
  std::vector<IPoly> polys;
  std::vector<bool> active;
  std::vector<Pair> pairs;
  GroebnerStats stats;

  auto active_ptrs = [&]() {
    std::vector<const IPoly*> out;
    for (std::size_t i = 0; i < polys.size(); ++i)
      if (active[i]) out.push_back(&polys[i]);
    return out;
  };

  auto update = [&](std::size_t h) {
    const Monomial lh = polys[h].lm();
    std::vector<std::size_t> C;
    for (std::size_t g = 0; g < polys.size(); ++g)
      if (active[g] && g != h) C.push_back(g);
    std::vector<std::size_t> D;
    for (std::size_t idx = 0; idx < C.size(); ++idx) {
      std::size_t g1 = C[idx];
      const Monomial l1 = lh.lcm(polys[g1].lm());
      bool keep = lh.coprime(polys[g1].lm());
      if (!keep) {
        keep = true;
        for (std::size_t jdx = idx + 1; jdx < C.size() && keep; ++jdx) {
          if (lh.lcm(polys[C[jdx]].lm()).divides(l1)) keep = false;
        }
        for (std::size_t g2 : D) {
          if (!keep) break;
          if (lh.lcm(polys[g2].lm()).divides(l1)) keep = false;
        }
      }
      if (keep) D.push_back(g1);
    }
    std::vector<Pair> fresh;
    for (std::size_t g : D) {
      if (lh.coprime(polys[g].lm())) continue;
      Monomial l = lh.lcm(polys[g].lm());
      unsigned s = std::max(polys[h].sugar + l.total_degree() - lh.total_degree(),
                            polys[g].sugar + l.total_degree() - polys[g].lm().total_degree());
      fresh.push_back({g, h, l, s});
    }
    std::vector<Pair> kept;
    for (auto& p : pairs) {
      const Monomial& l = p.lcm;
      bool drop = lh.divides(l) && polys[p.i].lm().lcm(lh) != l && lh.lcm(polys[p.j].lm()) != l;
      if (!drop) kept.push_back(std::move(p));
    }
    pairs = std::move(kept);
    for (auto& p : fresh) pairs.push_back(std::move(p));
    for (std::size_t g = 0; g < polys.size(); ++g) {
      if (active[g] && g != h && lh.divides(polys[g].lm())) active[g] = false;
    }
    active[h] = true;
  };

  auto add = [&](IPoly p) {
    make_primitive(p);
    polys.push_back(std::move(p));
    active.push_back(false);
    update(polys.size() - 1);
  };

  // Seed with the inputs, each reduced against what is already there.
  std::vector<IPoly> inputs;
  for (const auto& g : gens) {
    if (g.is_zero()) continue;
    inputs.push_back(eng.from_poly(g));
  }
  std::sort(inputs.begin(), inputs.end(), [&](const IPoly& a, const IPoly& b) {
    if (a.sugar != b.sugar) return a.sugar < b.sugar;
    return order.compare(a.lm(), b.lm()) < 0;
  });
  for (auto& in : inputs) {
    IPoly r = eng.reduce(std::move(in), active_ptrs(), true, nullptr);
    if (!r.zero()) add(std::move(r));
  }

  while (!pairs.empty()) {
    std::size_t best = 0;
    for (std::size_t p = 1; p < pairs.size(); ++p) {
      const auto& a = pairs[p];
      const auto& b = pairs[best];
      if (a.sugar != b.sugar) {
        if (a.sugar < b.sugar) best = p;
        continue;
      }
      int c = order.compare(a.lcm, b.lcm);
      if (c < 0 || (c == 0 && std::tie(a.j, a.i) < std::tie(b.j, b.i))) best = p;
    }
    Pair pr = pairs[best];
    pairs.erase(pairs.begin() + static_cast<long>(best));
    if (++stats.pairs_considered > options.max_pairs) {
      throw ResourceLimit("groebner: S-pair budget of " + std::to_string(options.max_pairs) + " exceeded");
    }
    IPoly s = eng.spoly(polys[pr.i], polys[pr.j]);
    ++stats.pairs_reduced;
    IPoly r = eng.reduce(std::move(s), active_ptrs(), true, nullptr);
    if (r.zero()) {
      ++stats.zero_reductions;
      continue;
    }
    if (r.lm().is_one()) {
      GroebnerBasis unit(space, order, {Poly::constant(space, 1)}, fp);
      unit.set_stats(stats);
      return unit;
    }
    add(std::move(r));
  }

  // Inter-reduce the minimal basis and normalize to monic.
  std::vector<std::size_t> idx;
  for (std::size_t i = 0; i < polys.size(); ++i)
    if (active[i]) idx.push_back(i);
  std::vector<IPoly> reduced;
  for (std::size_t a : idx) {
    std::vector<const IPoly*> others;
    for (std::size_t b : idx)
      if (b != a) others.push_back(&polys[b]);
    IPoly r = eng.reduce(polys[a], others, true, nullptr);
    make_primitive(r);
    reduced.push_back(std::move(r));
  }
  std::sort(reduced.begin(), reduced.end(),
            [&](const IPoly& a, const IPoly& b) { return order.greater(a.lm(), b.lm()); });
  std::vector<Poly> basis;
  for (const auto& r : reduced) {
    if (r.lm().is_one()) {
      basis = {Poly::constant(space, 1)};
      break;
    }
    basis.push_back(to_poly(r, space, true));
  }
  GroebnerBasis out(space, order, std::move(basis), fp);
  out.set_stats(stats);
  return out;
}

bool ideal_contains(const GroebnerBasis& basis, const Poly& p) { return basis.contains(p); }

bool ideal_equal(const std::vector<Poly>& I, const std::vector<Poly>& J, const TermOrder& order,
                 const GroebnerOptions& options) {
  auto gi = groebner(I, order, options);
  auto gj = groebner(J, order, options);
  for (const auto& p : J)
    if (!gi.contains(p)) return false;
  for (const auto& p : I)
    if (!gj.contains(p)) return false;
  return true;
}

}  // namespace qkgr
