#include <doctest.h>

#include "doctest_poly.hpp"
#include "oracles.hpp"
#include "qkgr/errors.hpp"
#include "qkgr/lseries.hpp"
#include "qkgr/matrix.hpp"
#include "qkgr/poly.hpp"

using namespace qkgr;

namespace {

VarSpacePtr xyz() { return VarSpace::of_names({"x", "y", "z"}); }

}  // namespace

TEST_CASE("varspace lookup and derived spaces") {
  auto sp = VarSpace::create({{"a", 1, 0}, {"b", 2, 1}, {"c", 0, 1}});
  CHECK(sp->size() == 3);
  CHECK(sp->index("b") == 1);
  CHECK_FALSE(sp->find("d").has_value());
  CHECK_THROWS_AS(sp->index("d"), InvalidArgument);
  CHECK(sp->num_blocks() == 2);
  auto smaller = sp->without({"b"});
  CHECK(smaller->names() == std::vector<std::string>{"a", "c"});
  auto bigger = sp->with({{"a", 1, 0}, {"d", 1, 2}});
  CHECK(bigger->names() == std::vector<std::string>{"a", "b", "c", "d"});
  CHECK(VarSpace::of_names({"a", "b", "c"})->fingerprint() != sp->fingerprint());
  CHECK(VarSpace::create({{"a", 1, 0}, {"b", 2, 1}, {"c", 0, 1}})->same_as(*sp));
}

TEST_CASE("ring axioms at random polynomials") {
  auto sp = xyz();
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    Poly a = oracle::random_poly(sp, rng), b = oracle::random_poly(sp, rng), c = oracle::random_poly(sp, rng);
    CHECK(a * b == b * a);
    CHECK((a + b) * c == a * c + b * c);
    CHECK((a * b) * c == a * (b * c));
    CHECK((a - a).is_zero());
    CHECK(a.pow(3) == a * a * a);
    auto pt = oracle::random_point(sp, rng);
    CHECK(oracle::evaluate(a * b, pt) == oracle::evaluate(a, pt) * oracle::evaluate(b, pt));
    CHECK(oracle::evaluate(a - c, pt) == oracle::evaluate(a, pt) - oracle::evaluate(c, pt));
  }
}

TEST_CASE("binomial expansion") {
  auto sp = xyz();
  Poly x = Poly::variable(sp, "x"), y = Poly::variable(sp, "y");
  Poly expected(sp);
  for (unsigned i = 0; i <= 6; ++i)
    expected += Poly::monomial(sp, Monomial::single(0, i) * Monomial::single(1, 6 - i), Rational(binomial(6, i)));
  CHECK((x + y).pow(6) == expected);
  // Pascal's rule as an independent check of binomial().
  for (long n = 1; n < 12; ++n)
    for (long k = 1; k < n; ++k) CHECK(binomial(n, k) == binomial(n - 1, k - 1) + binomial(n - 1, k));
  CHECK(binomial(5, 7) == 0);
  CHECK(binomial(4, -1) == 0);
}

TEST_CASE("canonical printing and parsing round trip") {
  auto sp = xyz();
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 30; ++trial) {
    Poly p = oracle::random_poly(sp, rng);
    CHECK(parse_poly(to_string(p), sp) == p);
  }
  CHECK(to_string(Poly(sp)) == "0");
  Poly x = Poly::variable(sp, "x"), y = Poly::variable(sp, "y");
  CHECK(to_string(x * x - Rational(1, 2) * y + 3) == "x^2 - 1/2*y + 3");
  CHECK(to_string(-x) == "-x");
  CHECK(parse_poly(" x^2 -  y + 1 ", sp) == x * x - y + 1);
  CHECK_THROWS_AS(parse_poly("x + w", sp), Error);
}

TEST_CASE("mixing spaces is an error") {
  Poly a = Poly::variable(xyz(), "x");
  Poly b = Poly::variable(VarSpace::of_names({"x"}), "x");
  CHECK_THROWS_AS(a + b, SpaceMismatch);
  CHECK(embed(b, a.space()) == a);
}

TEST_CASE("substitution, coefficients and division") {
  auto sp = xyz();
  Poly x = Poly::variable(sp, "x"), y = Poly::variable(sp, "y"), z = Poly::variable(sp, "z");
  Poly p = x * x * y + 3 * x * z - y;

  auto target = VarSpace::of_names({"y", "z", "t"});
  Poly t = Poly::variable(target, "t");
  Poly ty = Poly::variable(target, "y"), tz = Poly::variable(target, "z");
  CHECK(substitute(p, {{"x", t + 1}}, target) == (t + 1) * (t + 1) * ty + 3 * (t + 1) * tz - ty);

  auto parts = coefficients_in(p, "x");
  REQUIRE(parts.size() == 3);
  CHECK(parts[0] == -y);
  CHECK(parts[1] == 3 * z);
  CHECK(parts[2] == y);

  CHECK(divide_by_variable(x * y + x * x, 0) == y + x);
  CHECK_THROWS(divide_by_variable(x + y, 0));

  Poly d = x * x - y;
  Poly r = remainder_monic(x.pow(5) + z, d, 0);
  CHECK(r.degree_in(0) < 2);
  // x^5 = x (x^2)^2 = x y^2 modulo x^2 - y
  CHECK(r == x * y * y + z);
}

TEST_CASE("filtration order uses variable degrees") {
  auto sp = VarSpace::create({{"e1", 1, 0}, {"e2", 2, 0}, {"q", 3, 1}, {"u", 0, 1}});
  Poly e1 = Poly::variable(sp, "e1"), e2 = Poly::variable(sp, "e2"), q = Poly::variable(sp, "q"),
       u = Poly::variable(sp, "u");
  CHECK((e1 * e2 + q * u).filtration_order() == 3);
  CHECK((e2 + e1 * e1 * e1).filtration_order() == 2);
  CHECK(leading_filtration_part(e2 + e1 * e1 * e1 + e1 * e1) == e2 + e1 * e1);
  CHECK(Poly(sp).filtration_order() == -1);
}

TEST_CASE("determinant against the Leibniz formula") {
  auto sp = xyz();
  std::mt19937_64 rng(3);
  for (std::size_t n = 1; n <= 4; ++n) {
    PolyMatrix m(sp, n, n);
    std::vector<std::vector<Poly>> a(n, std::vector<Poly>(n, Poly(sp)));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        Poly p = oracle::random_poly(sp, rng, 2, 1);
        if (rng() % 4 == 0) p = Poly(sp);
        m.at(i, j) = p;
        a[i][j] = p;
      }
    CHECK(determinant(m) == oracle::det_leibniz(a, sp));
  }
}

TEST_CASE("matrix algebra") {
  auto sp = xyz();
  std::mt19937_64 rng(5);
  auto random_matrix = [&](std::size_t r, std::size_t c) {
    PolyMatrix m(sp, r, c);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j) m.at(i, j) = oracle::random_poly(sp, rng, 2, 1);
    return m;
  };
  PolyMatrix a = random_matrix(2, 3), b = random_matrix(3, 2), c = random_matrix(2, 2);
  CHECK((a * b) * c == a * (b * c));
  CHECK((a * b).transpose() == b.transpose() * a.transpose());
  CHECK(PolyMatrix::identity(sp, 2) * c == c);
  CHECK((c - c).is_zero());
  CHECK_THROWS_AS(a * a, DimensionMismatch);
  PolyMatrix t = a.antidiagonal_transpose();
  CHECK(t.rows() == 3);
  CHECK(t.cols() == 2);
  CHECK(t.at(0, 0) == a.at(1, 2));
  CHECK(t.at(2, 1) == a.at(0, 0));
  CHECK(t.antidiagonal_transpose() == a);
  Poly x = Poly::variable(sp, "x");
  CHECK((c * x).at(1, 0) == c.at(1, 0) * x);
}

TEST_CASE("truncated power series in L") {
  auto sp = VarSpace::of_names({"a", "b"});
  Poly a = Poly::variable(sp, "a"), b = Poly::variable(sp, "b");
  const int order = 6;
  LSeries L = LSeries::monomial(Poly::constant(sp, 1), 1, order);
  LSeries e = LSeries::exp(L);
  Rational fact = 1;
  for (int i = 0; i <= order; ++i) {
    if (i) fact *= i;
    CHECK(e.coefficient(i) == Poly::constant(sp, Rational(1) / fact));
  }
  // exp(aL) exp(bL) = exp((a + b) L)
  LSeries sa = LSeries::monomial(a, 1, order), sb = LSeries::monomial(b, 1, order);
  auto lhs = LSeries::exp(sa) * LSeries::exp(sb);
  auto rhs = LSeries::exp(sa + sb);
  for (int i = 0; i <= order; ++i) CHECK(lhs.coefficient(i) == rhs.coefficient(i));
  // (1 - s) * geometric(s) = 1
  LSeries s = LSeries::monomial(a, 1, order) + LSeries::monomial(b, 2, order);
  auto one = (LSeries::constant(Poly::constant(sp, 1), order) - s) * LSeries::geometric(s);
  CHECK(one.coefficient(0) == Poly::constant(sp, 1));
  for (int i = 1; i <= order; ++i) CHECK(one.coefficient(i).is_zero());
  CHECK(LSeries::monomial(a, 3, order).valuation() == 3);
  CHECK(LSeries(sp, order).valuation() == -1);
  CHECK_THROWS_AS(LSeries::exp(LSeries::constant(a, order)), InvalidArgument);
  CHECK(L.pow(7).valuation() == -1);  // truncated away
}
