#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "qkgr/varspace.hpp"

namespace qkgr {

using Rational = mpq_class;
using Integer = mpz_class;

class Monomial {
 public:
  Monomial() { exps_.fill(0); }

  static Monomial single(std::size_t var, unsigned exp = 1);

  unsigned operator[](std::size_t i) const { return exps_[i]; }
  void set(std::size_t i, unsigned e);
  const std::array<std::uint16_t, kMaxVars>& exps() const { return exps_; }

  unsigned total_degree() const;
  long weighted_degree(const VarSpace& space) const;
  bool is_one() const;

  bool divides(const Monomial& other) const;
  bool coprime(const Monomial& other) const;
  Monomial lcm(const Monomial& other) const;
  // Requires divides(other); returns other / *this.
  Monomial quotient_of(const Monomial& other) const;

  Monomial operator*(const Monomial& other) const;
  bool operator==(const Monomial& other) const = default;
  // Plain lexicographic comparison of exponent vectors.
  std::strong_ordering operator<=>(const Monomial& other) const { return exps_ <=> other.exps_; }

  std::size_t hash() const;

 private:
  std::array<std::uint16_t, kMaxVars> exps_;
};

// Graded lex, larger first. Used as the storage and printing order of Poly.
struct GrlexGreater {
  bool operator()(const Monomial& a, const Monomial& b) const {
    unsigned da = a.total_degree();
    unsigned db = b.total_degree();
    if (da != db) return da > db;
    return a > b;
  }
};

// Sparse multivariate polynomial with exact rational coefficients over a fixed VarSpace.
class Poly {
 public:
  using TermMap = std::map<Monomial, Rational, GrlexGreater>;

  Poly() = default;
  explicit Poly(VarSpacePtr space) : space_(std::move(space)) {}

  static Poly constant(VarSpacePtr space, const Rational& c);
  static Poly variable(VarSpacePtr space, std::string_view name, unsigned exp = 1);
  static Poly variable(VarSpacePtr space, std::size_t index, unsigned exp = 1);
  static Poly monomial(VarSpacePtr space, const Monomial& m, const Rational& c = 1);

  const VarSpacePtr& space() const { return space_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  std::size_t num_terms() const { return terms_.size(); }

  Rational coefficient(const Monomial& m) const;
  Rational constant_term() const;
  void add_term(const Monomial& m, const Rational& c);

  int total_degree() const;  // -1 for zero
  int degree_in(std::size_t var) const;
  bool uses(std::size_t var) const { return degree_in(var) > 0; }
  // Minimum weighted degree over terms (the filtration order); -1 for zero.
  long filtration_order() const;

  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Poly& o);
  Poly& operator*=(const Rational& c);
  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator*(const Poly& o) const;
  Poly operator*(const Rational& c) const;
  Poly operator-() const;
  Poly pow(unsigned e) const;

  bool operator==(const Poly& o) const;
  bool operator!=(const Poly& o) const { return !(*this == o); }

 private:
  void check_space(const Poly& o) const;

  VarSpacePtr space_;
  TermMap terms_;
};

inline Poly operator*(const Rational& c, const Poly& p) { return p * c; }
Poly operator+(const Poly& p, const Rational& c);
inline Poly operator+(const Rational& c, const Poly& p) { return p + c; }
Poly operator-(const Poly& p, const Rational& c);
Poly operator-(const Rational& c, const Poly& p);

using Bindings = std::map<std::string, Poly, std::less<>>;

// Replaces each bound variable by its image; unbound variables are carried over by name
// into the target space (which must contain them).
Poly substitute(const Poly& p, const Bindings& bindings, const VarSpacePtr& target);
// Moves p into target, matching variables by name.
Poly embed(const Poly& p, const VarSpacePtr& target);
// Coefficients of p as a polynomial in the named variable: result[i] is the coefficient
// of var^i, still living in p's space.
std::vector<Poly> coefficients_in(const Poly& p, std::string_view var);
// Terms of minimal filtration order.
Poly leading_filtration_part(const Poly& p);
// Exact division by a single variable; throws if some term is not divisible.
Poly divide_by_variable(const Poly& p, std::size_t var);
// Remainder of p on division by a polynomial monic in the given variable.
Poly remainder_monic(const Poly& p, const Poly& divisor, std::size_t var);

Integer binomial(long n, long k);

std::string to_string(const Poly& p);
std::string to_string(const Rational& r);
std::string monomial_string(const Monomial& m, const VarSpace& space);
// Parses the canonical print format (and simple variations with spaces, parentheses-free).
Poly parse_poly(std::string_view text, const VarSpacePtr& space);

}  // namespace qkgr
