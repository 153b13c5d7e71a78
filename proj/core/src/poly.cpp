#include "qkgr/poly.hpp"

#include <algorithm>

#include "qkgr/errors.hpp"

namespace qkgr {

Monomial Monomial::single(std::size_t var, unsigned exp) {
  Monomial m;
  m.set(var, exp);
  return m;
}

void Monomial::set(std::size_t i, unsigned e) {
  if (i >= kMaxVars) throw InvalidArgument("variable index out of range");
  if (e > 0xFFFFu) throw ResourceLimit("exponent overflow");
  exps_[i] = static_cast<std::uint16_t>(e);
}

unsigned Monomial::total_degree() const {
  unsigned d = 0;
  for (auto e : exps_) d += e;
  return d;
}

long Monomial::weighted_degree(const VarSpace& space) const {
  long d = 0;
  for (std::size_t i = 0; i < space.size(); ++i) d += static_cast<long>(exps_[i]) * space.var(i).degree;
  return d;
}

bool Monomial::is_one() const {
  return std::all_of(exps_.begin(), exps_.end(), [](auto e) { return e == 0; });
}

bool Monomial::divides(const Monomial& other) const {
  for (std::size_t i = 0; i < kMaxVars; ++i) {
    if (exps_[i] > other.exps_[i]) return false;
  }
  return true;
}

bool Monomial::coprime(const Monomial& other) const {
  for (std::size_t i = 0; i < kMaxVars; ++i) {
    if (exps_[i] != 0 && other.exps_[i] != 0) return false;
  }
  return true;
}

Monomial Monomial::lcm(const Monomial& other) const {
  Monomial r;
  for (std::size_t i = 0; i < kMaxVars; ++i) r.exps_[i] = std::max(exps_[i], other.exps_[i]);
  return r;
}

Monomial Monomial::quotient_of(const Monomial& other) const {
  Monomial r;
  for (std::size_t i = 0; i < kMaxVars; ++i) r.exps_[i] = other.exps_[i] - exps_[i];
  return r;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial r;
  for (std::size_t i = 0; i < kMaxVars; ++i) {
    unsigned e = unsigned(exps_[i]) + other.exps_[i];
    if (e > 0xFFFFu) throw ResourceLimit("exponent overflow");
    r.exps_[i] = static_cast<std::uint16_t>(e);
  }
  return r;
}

std::size_t Monomial::hash() const {
  std::size_t h = 1469598103934665603ull;
  for (auto e : exps_) {
    h ^= e;
    h *= 1099511628211ull;
  }
  return h;
}

Poly Poly::constant(VarSpacePtr space, const Rational& c) {
  Poly p(std::move(space));
  if (c != 0) p.terms_.emplace(Monomial(), c);
  return p;
}

Poly Poly::variable(VarSpacePtr space, std::string_view name, unsigned exp) {
  auto i = space->index(name);
  return variable(std::move(space), i, exp);
}

Poly Poly::variable(VarSpacePtr space, std::size_t index, unsigned exp) {
  if (index >= space->size()) throw InvalidArgument("variable index out of range");
  Poly p(std::move(space));
  p.terms_.emplace(Monomial::single(index, exp), Rational(1));
  return p;
}

Poly Poly::monomial(VarSpacePtr space, const Monomial& m, const Rational& c) {
  Poly p(std::move(space));
  if (c != 0) p.terms_.emplace(m, c);
  return p;
}

bool Poly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
}

Rational Poly::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

Rational Poly::constant_term() const { return coefficient(Monomial()); }

void Poly::add_term(const Monomial& m, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

int Poly::total_degree() const {
  if (terms_.empty()) return -1;
  return static_cast<int>(terms_.begin()->first.total_degree());
}

int Poly::degree_in(std::size_t var) const {
  int d = terms_.empty() ? -1 : 0;
  for (const auto& [m, c] : terms_) d = std::max(d, static_cast<int>(m[var]));
  return d;
}

long Poly::filtration_order() const {
  if (terms_.empty()) return -1;
  long best = -1;
  for (const auto& [m, c] : terms_) {
    long d = m.weighted_degree(*space_);
    if (best < 0 || d < best) best = d;
  }
  return best;
}

void Poly::check_space(const Poly& o) const {
  if (!space_ || !o.space_) {
    if (!space_ && !o.space_) return;
    // A default-constructed zero adopts the other operand's space.
    return;
  }
  if (!same_space(space_, o.space_)) throw SpaceMismatch("polynomials live in different variable spaces");
}

Poly& Poly::operator+=(const Poly& o) {
  check_space(o);
  if (!space_) space_ = o.space_;
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  check_space(o);
  if (!space_) space_ = o.space_;
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

Poly& Poly::operator*=(const Poly& o) {
  *this = *this * o;
  return *this;
}

Poly& Poly::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, v] : terms_) v *= c;
  return *this;
}

Poly Poly::operator+(const Poly& o) const {
  Poly r = *this;
  r += o;
  return r;
}

Poly Poly::operator-(const Poly& o) const {
  Poly r = *this;
  r -= o;
  return r;
}

Poly Poly::operator*(const Poly& o) const {
  check_space(o);
  Poly r(space_ ? space_ : o.space_);
  if (terms_.empty() || o.terms_.empty()) return r;
  Rational prod;
  for (const auto& [ma, ca] : terms_) {
    for (const auto& [mb, cb] : o.terms_) {
      prod = ca * cb;
      auto [it, inserted] = r.terms_.emplace(ma * mb, prod);
      if (!inserted) it->second += prod;
    }
  }
  for (auto it = r.terms_.begin(); it != r.terms_.end();) {
    if (it->second == 0) {
      it = r.terms_.erase(it);
    } else {
      ++it;
    }
  }
  return r;
}

Poly Poly::operator*(const Rational& c) const {
  Poly r = *this;
  r *= c;
  return r;
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& [m, c] : r.terms_) c = -c;
  return r;
}

Poly Poly::pow(unsigned e) const {
  Poly result = constant(space_, 1);
  Poly base = *this;
  while (e > 0) {
    if (e & 1u) result *= base;
    e >>= 1u;
    if (e > 0) base *= base;
  }
  return result;
}

bool Poly::operator==(const Poly& o) const {
  if (space_ && o.space_ && !same_space(space_, o.space_)) {
    throw SpaceMismatch("comparing polynomials from different variable spaces");
  }
  return terms_ == o.terms_;
}

Poly operator+(const Poly& p, const Rational& c) { return p + Poly::constant(p.space(), c); }
Poly operator-(const Poly& p, const Rational& c) { return p - Poly::constant(p.space(), c); }
Poly operator-(const Rational& c, const Poly& p) { return Poly::constant(p.space(), c) - p; }

Poly substitute(const Poly& p, const Bindings& bindings, const VarSpacePtr& target) {
  const auto& src = *p.space();
  struct Image {
    bool bound = false;
    std::size_t target_index = 0;
    std::vector<Poly> powers;  // powers[e] cached lazily
  };
  std::vector<Image> images(src.size());
  for (std::size_t i = 0; i < src.size(); ++i) {
    auto it = bindings.find(src.var(i).name);
    if (it != bindings.end()) {
      if (!same_space(it->second.space(), target)) {
        throw SpaceMismatch("binding for " + src.var(i).name + " is not in the target space");
      }
      images[i].bound = true;
      images[i].powers.push_back(Poly::constant(target, 1));
      images[i].powers.push_back(it->second);
    } else {
      auto idx = target->find(src.var(i).name);
      if (idx) {
        images[i].target_index = *idx;
      } else if (p.degree_in(i) > 0) {
        throw SpaceMismatch("variable " + src.var(i).name + " has no image in the target space");
      }
    }
  }
  Poly result(target);
  for (const auto& [m, c] : p.terms()) {
    Monomial carried;
    Poly term = Poly::constant(target, c);
    for (std::size_t i = 0; i < src.size(); ++i) {
      unsigned e = m[i];
      if (e == 0) continue;
      auto& img = images[i];
      if (img.bound) {
        while (img.powers.size() <= e) img.powers.push_back(img.powers.back() * img.powers[1]);
        term *= img.powers[e];
      } else {
        carried.set(img.target_index, carried[img.target_index] + e);
      }
    }
    if (!carried.is_one()) term *= Poly::monomial(target, carried);
    result += term;
  }
  return result;
}

Poly embed(const Poly& p, const VarSpacePtr& target) {
  if (same_space(p.space(), target)) return p;
  return substitute(p, {}, target);
}

std::vector<Poly> coefficients_in(const Poly& p, std::string_view var) {
  auto v = p.space()->index(var);
  int d = std::max(p.degree_in(v), 0);
  std::vector<Poly> out(d + 1, Poly(p.space()));
  for (const auto& [m, c] : p.terms()) {
    Monomial rest = m;
    rest.set(v, 0);
    out[m[v]].add_term(rest, c);
  }
  return out;
}

Poly leading_filtration_part(const Poly& p) {
  Poly r(p.space());
  long d = p.filtration_order();
  for (const auto& [m, c] : p.terms()) {
    if (m.weighted_degree(*p.space()) == d) r.add_term(m, c);
  }
  return r;
}

Poly divide_by_variable(const Poly& p, std::size_t var) {
  Poly r(p.space());
  for (const auto& [m, c] : p.terms()) {
    if (m[var] == 0) throw InvalidArgument("polynomial not divisible by " + p.space()->var(var).name);
    Monomial q = m;
    q.set(var, m[var] - 1);
    r.add_term(q, c);
  }
  return r;
}

Poly remainder_monic(const Poly& p, const Poly& divisor, std::size_t var) {
  auto dc = coefficients_in(divisor, p.space()->var(var).name);
  int dd = static_cast<int>(dc.size()) - 1;
  if (dd < 0 || dc.back() != Poly::constant(p.space(), 1)) {
    throw InvalidArgument("divisor is not monic in " + p.space()->var(var).name);
  }
  Poly r = p;
  const Poly x = Poly::variable(p.space(), var);
  for (int deg = r.degree_in(var); deg >= dd; deg = r.degree_in(var)) {
    auto rc = coefficients_in(r, p.space()->var(var).name);
    r -= rc[deg] * x.pow(deg - dd) * divisor;
  }
  return r;
}

Integer binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

}  // namespace qkgr
