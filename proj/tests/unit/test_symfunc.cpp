#include <doctest.h>

#include "doctest_poly.hpp"
#include "oracles.hpp"
#include "qkgr/errors.hpp"
#include "qkgr/presentations.hpp"
#include "qkgr/symfunc.hpp"

using namespace qkgr;

namespace {

struct Explicit {
  int k;
  int n;
  VarSpacePtr space;
  SymRing ring;
  std::vector<Poly> z;
  std::vector<Poly> zeta;

  static VarSpacePtr make_space(int k, int n) {
    std::vector<std::string> names;
    for (int i = 1; i <= k; ++i) names.push_back("z" + std::to_string(i));
    for (int i = 1; i <= n; ++i) names.push_back("zeta" + std::to_string(i));
    return VarSpace::of_names(names);
  }
  Explicit(int k_, int n_)
      : k(k_),
        n(n_),
        space(make_space(k_, n_)),
        ring(space, k_, n_, RootBlock::explicit_roots("z", k_), RootBlock::explicit_roots("zeta", n_)) {
    for (int i = 1; i <= k; ++i) z.push_back(Poly::variable(space, "z" + std::to_string(i)));
    for (int i = 1; i <= n; ++i) zeta.push_back(Poly::variable(space, "zeta" + std::to_string(i)));
  }
};

}  // namespace

TEST_CASE("partitions") {
  CHECK(Partition({3, 1, 1, 0}).parts() == std::vector<int>{3, 1, 1});
  CHECK(Partition({3, 1, 1}).size() == 5);
  CHECK(Partition::hook(4, 2) == Partition({4, 1, 1}));
  CHECK_THROWS_AS(Partition({1, 2}), InvalidArgument);
  CHECK_THROWS_AS(Partition({2, -1}), InvalidArgument);
}

TEST_CASE("elementary and complete polynomials by enumeration") {
  for (int k = 1; k <= 4; ++k) {
    Explicit X(k, 2);
    for (int i = 0; i <= k + 1; ++i) CHECK(X.ring.e(i) == oracle::elementary_brute(X.space, X.z, i));
    for (int j = 0; j <= 5; ++j) CHECK(X.ring.h(j) == oracle::complete_brute(X.space, X.z, j));
    // Newton-type identity sum (-1)^i e_i h_{j-i} = 0 for j > 0
    for (int j = 1; j <= 6; ++j) {
      Poly acc = X.ring.zero();
      for (int i = 0; i <= j; ++i) acc += X.ring.e(i) * X.ring.h(j - i) * Rational(i % 2 ? -1 : 1);
      CHECK(acc.is_zero());
    }
    Poly prod = X.ring.one();
    for (const auto& zi : X.z) prod *= Rational(1) - zi;
    CHECK(X.ring.c() == prod);
  }
}

TEST_CASE("Schur polynomials against the bialternant formula") {
  for (int k = 1; k <= 3; ++k) {
    Explicit X(k, 1);
    Poly vdm = oracle::vandermonde(X.space, X.z);
    for (const auto& lambda : std::vector<std::vector<int>>{{1}, {2}, {2, 1}, {3, 1}, {2, 2}, {3, 1, 1}, {4, 2, 1}}) {
      Poly s = X.ring.schur(Partition(lambda));
      if (static_cast<int>(lambda.size()) > k) {
        CHECK(s.is_zero());
        continue;
      }
      CHECK(s * vdm == oracle::bialternant_numerator(X.space, X.z, lambda, false));
    }
  }
}

TEST_CASE("Grothendieck polynomials against the bialternant formula") {
  for (int k = 1; k <= 3; ++k) {
    Explicit X(k, 1);
    Poly vdm = oracle::vandermonde(X.space, X.z);
    for (int j = 1; j <= 5; ++j) {
      CAPTURE(k);
      CAPTURE(j);
      Poly row = oracle::bialternant_numerator(X.space, X.z, {j}, true);
      CHECK(X.ring.G(j) * vdm == row);
      CHECK(X.ring.G_via_h(j) == X.ring.G(j));
      if (j <= k) {
        std::vector<int> column(j, 1);
        CHECK(X.ring.Gcol(j) * vdm == oracle::bialternant_numerator(X.space, X.z, column, true));
      } else {
        CHECK(X.ring.Gcol(j).is_zero());
      }
    }
  }
}

TEST_CASE("two-variable Grothendieck polynomials in closed form") {
  Explicit X(2, 1);
  Poly z1 = X.z[0], z2 = X.z[1];
  CHECK(X.ring.G(1) == z1 + z2 - z1 * z2);
  CHECK(X.ring.G(2) == z1 * z1 + z1 * z2 + z2 * z2 - z1 * z1 * z2 - z1 * z2 * z2);
  CHECK(X.ring.G(3) == z1.pow(3) + z1 * z1 * z2 + z1 * z2 * z2 + z2.pow(3) - z1.pow(3) * z2 - z1 * z1 * z2 * z2 -
                           z1 * z2.pow(3));
}

TEST_CASE("deformed families from generating functions") {
  // sum_j h'_j t^j = prod (1 - zeta_a t) / prod (1 - z_i t); compare coefficients up to t^5.
  Explicit X(2, 3);
  auto coeff_prod = [&](int j) {
    Poly acc = X.ring.zero();
    for (int a = 0; a <= j; ++a)
      acc += oracle::elementary_brute(X.space, X.zeta, a) * oracle::complete_brute(X.space, X.z, j - a) *
             Rational(a % 2 ? -1 : 1);
    return acc;
  };
  for (int j = 0; j <= 5; ++j) CHECK(X.ring.hp(j) == coeff_prod(j));
  for (int j = 1; j <= 5; ++j) {
    Poly acc = X.ring.zero();
    for (int a = 0; a <= j; ++a)
      acc += oracle::elementary_brute(X.space, X.zeta, a) * (a == j ? X.ring.one() : X.ring.G(j - a)) *
             Rational(a % 2 ? -1 : 1);
    CHECK(X.ring.Gp(j) == acc);
  }
}

TEST_CASE("e of shifted variables by direct expansion") {
  for (int m = 1; m <= 4; ++m) {
    Explicit X(m, 1);
    std::vector<Poly> shifted;
    for (const auto& zi : X.z) shifted.push_back(Rational(1) - zi);
    for (int i = 0; i <= m; ++i)
      CHECK(e_of_shifted(i, m, [&](int s) { return X.ring.e(s); }) == oracle::elementary_brute(X.space, shifted, i));
  }
}

TEST_CASE("surrogate ring agrees with explicit roots") {
  const int k = 3, n = 4;
  Explicit X(k, n);
  auto sur = standard_space(k, n, {}, true, false, false);
  SymRing R = standard_ring(sur, k, n, true);
  std::vector<std::string> zn, en, zetan, ezn;
  for (int i = 1; i <= k; ++i) zn.push_back("z" + std::to_string(i)), en.push_back("e" + std::to_string(i));
  for (int i = 1; i <= n; ++i)
    zetan.push_back("zeta" + std::to_string(i)), ezn.push_back("ezeta" + std::to_string(i));
  auto mid = VarSpace::of_names([&] {
    auto v = en;
    v.insert(v.end(), zetan.begin(), zetan.end());
    return v;
  }());
  auto to_surrogates = [&](const Poly& p) {
    Poly a = express_in_e_basis(p, zn, en, mid);
    return express_in_e_basis(a, zetan, ezn, sur);
  };
  for (int j = 1; j <= 5; ++j) {
    CHECK(to_surrogates(X.ring.h(j)) == R.h(j));
    CHECK(to_surrogates(X.ring.G(j)) == R.G(j));
    CHECK(to_surrogates(X.ring.hp(j)) == R.hp(j));
    CHECK(to_surrogates(X.ring.Gp(j)) == R.Gp(j));
    CHECK(to_surrogates(X.ring.cp_ge(j)) == R.cp_ge(j));
  }
  CHECK(to_surrogates(X.ring.schur(Partition({2, 1}))) == R.schur(Partition({2, 1})));
  CHECK_THROWS_AS(express_in_e_basis(X.z[0], zn, en, mid), NotSymmetric);
}

TEST_CASE("family lookup by key") {
  Explicit X(2, 2);
  CHECK(X.ring.family("h", {3}) == X.ring.h(3));
  CHECK(X.ring.family("s", {2, 1}) == X.ring.schur(Partition({2, 1})));
  CHECK(X.ring.family("Gcol", {2}) == X.ring.Gcol(2));
  CHECK(SymRing::is_family("Gp"));
  CHECK_FALSE(SymRing::is_family("ghat"));
  CHECK(X.ring.e(3).is_zero());
  CHECK(X.ring.e_zeta(3).is_zero());
}
