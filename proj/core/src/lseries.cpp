#include "qkgr/lseries.hpp"

#include "qkgr/errors.hpp"

namespace qkgr {

LSeries::LSeries(VarSpacePtr space, int order)
    : space_(std::move(space)), order_(order), coeffs_(static_cast<std::size_t>(order + 1), Poly(space_)) {
  if (order < 0) throw InvalidArgument("negative truncation order");
}

LSeries LSeries::constant(const Poly& c, int order) { return monomial(c, 0, order); }

LSeries LSeries::monomial(const Poly& c, int power, int order) {
  LSeries s(c.space(), order);
  if (power <= order) s.coeffs_[power] = c;
  return s;
}

const Poly& LSeries::coefficient(int power) const {
  if (power < 0 || power > order_) throw InvalidArgument("power outside truncation range");
  return coeffs_[power];
}

void LSeries::set_coefficient(int power, Poly c) {
  if (power < 0 || power > order_) throw InvalidArgument("power outside truncation range");
  coeffs_[power] = std::move(c);
}

int LSeries::valuation() const {
  for (int i = 0; i <= order_; ++i)
    if (!coeffs_[i].is_zero()) return i;
  return -1;
}

LSeries LSeries::operator+(const LSeries& o) const {
  LSeries r(space_, std::min(order_, o.order_));
  for (int i = 0; i <= r.order_; ++i) r.coeffs_[i] = coeffs_[i] + o.coeffs_[i];
  return r;
}

LSeries LSeries::operator-(const LSeries& o) const {
  LSeries r(space_, std::min(order_, o.order_));
  for (int i = 0; i <= r.order_; ++i) r.coeffs_[i] = coeffs_[i] - o.coeffs_[i];
  return r;
}

LSeries LSeries::operator*(const LSeries& o) const {
  LSeries r(space_, std::min(order_, o.order_));
  for (int i = 0; i <= r.order_; ++i) {
    if (coeffs_[i].is_zero()) continue;
    for (int j = 0; i + j <= r.order_; ++j) {
      if (o.coeffs_[j].is_zero()) continue;
      r.coeffs_[i + j] += coeffs_[i] * o.coeffs_[j];
    }
  }
  return r;
}

LSeries LSeries::operator*(const Rational& c) const {
  LSeries r = *this;
  for (auto& p : r.coeffs_) p *= c;
  return r;
}

LSeries LSeries::operator-() const { return *this * Rational(-1); }

LSeries LSeries::pow(unsigned e) const {
  LSeries r = constant(Poly::constant(space_, 1), order_);
  for (unsigned i = 0; i < e; ++i) r = r * *this;
  return r;
}

LSeries LSeries::exp(const LSeries& s) {
  if (!s.coefficient(0).is_zero()) throw InvalidArgument("exp of a series with nonzero constant term");
  LSeries result = constant(Poly::constant(s.space_, 1), s.order_);
  LSeries term = result;
  for (int i = 1; i <= s.order_; ++i) {
    term = term * s * Rational(1, i);
    result = result + term;
  }
  return result;
}

LSeries LSeries::geometric(const LSeries& s) {
  if (!s.coefficient(0).is_zero()) throw InvalidArgument("geometric series of a series with nonzero constant term");
  LSeries result = constant(Poly::constant(s.space_, 1), s.order_);
  LSeries term = result;
  for (int i = 1; i <= s.order_; ++i) {
    term = term * s;
    result = result + term;
  }
  return result;
}

}  // namespace qkgr
