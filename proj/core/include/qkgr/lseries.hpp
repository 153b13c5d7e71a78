#pragma once

#include <vector>

#include "qkgr/poly.hpp"

namespace qkgr {

// Power series in a formal parameter L, truncated after L^order, with polynomial coefficients.
class LSeries {
 public:
  LSeries(VarSpacePtr space, int order);
  static LSeries constant(const Poly& c, int order);
  // c * L^power
  static LSeries monomial(const Poly& c, int power, int order);

  int order() const { return order_; }
  const VarSpacePtr& space() const { return space_; }
  const Poly& coefficient(int power) const;
  void set_coefficient(int power, Poly c);

  // Lowest power with a nonzero coefficient, or -1 if every retained coefficient vanishes.
  int valuation() const;

  LSeries operator+(const LSeries& o) const;
  LSeries operator-(const LSeries& o) const;
  LSeries operator*(const LSeries& o) const;
  LSeries operator*(const Rational& c) const;
  LSeries operator-() const;
  LSeries pow(unsigned e) const;

  // exp(s) for s with zero constant term.
  static LSeries exp(const LSeries& s);
  // 1/(1-s) for s with zero constant term.
  static LSeries geometric(const LSeries& s);

 private:
  VarSpacePtr space_;
  int order_;
  std::vector<Poly> coeffs_;
};

}  // namespace qkgr
