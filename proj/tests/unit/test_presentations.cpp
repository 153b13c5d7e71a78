#include <doctest.h>

#include "doctest_poly.hpp"
#include "gr25.hpp"
#include "oracles.hpp"
#include "qkgr/errors.hpp"
#include "qkgr/groebner.hpp"
#include "qkgr/presentations.hpp"

using namespace qkgr;

namespace {

bool equal_up_to_sign(const Poly& a, const Poly& b) { return a == b || a == -b; }

PresentationSpec spec(int k, int n, Kind kind, bool equivariant, QMode mode = QMode::cleared()) {
  PresentationSpec s;
  s.k = k;
  s.n = n;
  s.kind = kind;
  s.equivariant = equivariant;
  s.q_mode = mode;
  return s;
}

}  // namespace

TEST_CASE("Gr(2;5) hat polynomials") {
  oracle::Gr25 g;
  SymRing R = standard_ring(g.sp, 2, 5, true);
  for (int l = 1; l <= 5; ++l) {
    CAPTURE(l);
    CHECK(g_hat_closed(R, l, g.q) == g.ghat(l));
  }
  auto oracle = g_hat_oracle(2, 5);
  REQUIRE(oracle.size() == 5);
  for (int l = 1; l <= 5; ++l) CHECK(embed(oracle[l - 1], g.sp) == g.ghat(l));
}

TEST_CASE("Gr(2;5) tilde polynomials") {
  oracle::Gr25 g;
  SymRing R = standard_ring(g.sp, 2, 5, true);
  Poly est = e_shift_tilde_eliminated(R);
  CHECK(est == g.est());
  for (int l = 1; l <= 3; ++l) CHECK(g_tilde(R, l, g.q, g.u, est) == g.ez(l));
  CHECK(g_tilde(R, 4, g.q, g.u, est) == g.gtilde(4));
  CHECK(g_tilde(R, 5, g.q, g.u, est) == g.gtilde(5));
  for (int l = 1; l <= 5; ++l) CHECK(g_tilde_delta_form(R, l, g.q, g.u, est) == g_tilde(R, l, g.q, g.u, est));
}

TEST_CASE("Gr(2;5) elimination of the secondary variables") {
  oracle::Gr25 g;
  auto coulomb = build_presentation(spec(2, 5, Kind::kCoulomb, true, QMode::aux()));
  auto shifted = build_presentation(spec(2, 5, Kind::kWhitneyShifted, true, QMode::aux()));
  auto hat = solve_secondary(coulomb.generators, names::series(names::ehat, 3));
  auto tilde = solve_secondary(shifted.generators, names::series(names::etilde, 3));
  for (int j = 1; j <= 3; ++j) {
    CAPTURE(j);
    Rational sign = j % 2 ? -1 : 1;
    CHECK(embed(hat[j - 1], g.sp) == g.Gp(j) * sign);
    CHECK(embed(tilde[j - 1], g.sp) == g.hp(j) * sign);
  }
  // e_1(zhat) = e_1(zeta) - G_1, with G_1 = h_1 - e_2
  CHECK(embed(hat[0], g.sp) == g.ez(1) - (g.e1 - g.e2));
}

TEST_CASE("Gr(2;5) eliminated presentations") {
  oracle::Gr25 g;
  auto hat = build_presentation(spec(2, 5, Kind::kEliminatedHat, true, QMode::aux()));
  REQUIRE(hat.generators.size() == 2);
  CHECK(equal_up_to_sign(embed(hat.generators[0], g.sp), g.hat_relation(4)));
  CHECK(equal_up_to_sign(embed(hat.generators[1], g.sp), g.hat_relation(5)));

  auto tilde = build_presentation(spec(2, 5, Kind::kEliminatedTilde, true, QMode::aux()));
  REQUIRE(tilde.generators.size() == 2);
  CHECK(equal_up_to_sign(embed(tilde.generators[0], g.sp), g.tilde_relation(4)));
  CHECK(equal_up_to_sign(embed(tilde.generators[1], g.sp), g.tilde_relation(5)));

  // Cleared mode multiplies exactly the generators that use u by 1 - q.
  auto cleared = build_presentation(spec(2, 5, Kind::kEliminatedTilde, true));
  CHECK_FALSE(cleared.space->contains("u"));
  Poly one_minus_q = Rational(1) - Poly::variable(tilde.space, "q");
  for (int i = 0; i < 2; ++i) {
    auto parts = coefficients_in(tilde.generators[i], "u");
    REQUIRE(parts.size() == 2);
    CHECK(cleared.generators[i] == embed(parts[0] * one_minus_q + parts[1], cleared.space));
  }
  auto hat_cleared = build_presentation(spec(2, 5, Kind::kEliminatedHat, true));
  for (int i = 0; i < 2; ++i) CHECK(hat_cleared.generators[i] == embed(hat.generators[i], hat_cleared.space));
}

TEST_CASE("Gr(3;4) non-equivariant displays") {
  auto sp = standard_space(3, 4, {}, false, true, true);
  SymRing R = standard_ring(sp, 3, 4, false);
  Poly e1 = Poly::variable(sp, "e1"), e2 = Poly::variable(sp, "e2"), e3 = Poly::variable(sp, "e3");
  Poly q = Poly::variable(sp, "q"), u = Poly::variable(sp, "u");
  CHECK(g_hat_closed(R, 2, q) == e3 - q);
  CHECK(g_hat_closed(R, 3, q) == -2 * q);
  CHECK(g_hat_closed(R, 4, q) == -q);

  Poly est = e_shift_tilde_eliminated(R);
  CHECK(est == Rational(1) + e1);
  // q/(q-1) = -q u
  CHECK(g_tilde(R, 2, q, u, est) == -q * u * (Rational(1) + e1) * (Rational(3) - e1));
  CHECK(g_tilde(R, 3, q, u, est) == -q * u * (Rational(1) + e1) * (Rational(3) - e2));
  CHECK(g_tilde(R, 4, q, u, est) == -q * u * (Rational(1) + e1) * (Rational(1) - e3));

  // h_j in three variables from the generating function 1 / (1 - e1 t + e2 t^2 - e3 t^3).
  std::vector<Poly> h = {Poly::constant(sp, 1)};
  for (int j = 1; j <= 4; ++j) {
    Poly acc = e1 * h[j - 1];
    if (j >= 2) acc -= e2 * h[j - 2];
    if (j >= 3) acc += e3 * h[j - 3];
    h.push_back(acc);
  }
  auto tilde = build_presentation(spec(3, 4, Kind::kEliminatedTilde, false));
  REQUIRE(tilde.generators.size() == 3);
  auto target = tilde.space;
  auto in = [&](const Poly& p) { return embed(p, target); };
  Poly one_minus_q = Rational(1) - q;
  Poly lhs2 = one_minus_q * h[2] - q * (Rational(1) + e1) * (Rational(3) - e1);
  Poly lhs3 = one_minus_q * (e1 * h[2] - h[3]) - q * (Rational(1) + e1) * (Rational(3) - e2);
  Poly lhs4 = one_minus_q * (e2 * h[2] - e1 * h[3] + h[4]) - q * (Rational(1) + e1) * (Rational(1) - e3);
  CHECK(equal_up_to_sign(tilde.generators[0], in(lhs2)));
  CHECK(equal_up_to_sign(tilde.generators[1], in(lhs3)));
  CHECK(equal_up_to_sign(tilde.generators[2], in(lhs4)));
}

TEST_CASE("Gr(3;4) non-equivariant Coulomb relations") {
  auto sp = standard_space(3, 4, {}, false, true, false);
  Poly e1 = Poly::variable(sp, "e1"), e2 = Poly::variable(sp, "e2"), e3 = Poly::variable(sp, "e3");
  Poly q = Poly::variable(sp, "q");
  // G_j of three variables from the Grothendieck bialternant, rewritten in e1, e2, e3.
  auto roots = VarSpace::of_names({"z1", "z2", "z3"});
  auto z = oracle::vars(roots, {"z1", "z2", "z3"});
  Poly vdm = oracle::vandermonde(roots, z);
  auto G = [&](int j) {
    Poly num = oracle::bialternant_numerator(roots, z, {j}, true);
    // divide by the Vandermonde determinant via the symmetric quotient: num = G * vdm
    SymRing R(roots, 3, 1, RootBlock::explicit_roots("z", 3), RootBlock::zero(1));
    Poly candidate = R.G(j);
    REQUIRE(candidate * vdm == num);
    return express_in_e_basis(candidate, {"z1", "z2", "z3"}, {"e1", "e2", "e3"}, sp);
  };
  auto hat = build_presentation(spec(3, 4, Kind::kEliminatedHat, false));
  REQUIRE(hat.generators.size() == 3);
  auto in = [&](const Poly& p) { return embed(p, hat.space); };
  // ghat_l + (E G)_l - c_{>=l}: the constant c_{>=3} = e3 belongs to the first relation.
  CHECK(equal_up_to_sign(hat.generators[0], in(e3 - q + G(2) - e3)));
  CHECK(equal_up_to_sign(hat.generators[1], in(-2 * q + e1 * G(2) - G(3))));
  CHECK(equal_up_to_sign(hat.generators[2], in(-q + e2 * G(2) - e1 * G(3) + G(4))));

  // Placing e3 in the second relation instead gives a different ideal; only the placement
  // above agrees with the Whitney ideal.
  const Rational q0(1, 3);
  auto at_q0 = [&](const Poly& p) { return substitute(p, {{"q", Poly::constant(hat.space, q0)}}, hat.space); };
  auto s = spec(3, 4, Kind::kEliminatedTilde, false, QMode::numeric(q0));
  auto whitney = build_presentation(s);
  std::vector<Poly> w;
  for (const auto& p : whitney.generators) w.push_back(embed(p, hat.space));
  auto gb = groebner(w, TermOrder::grevlex(*hat.space));
  for (const auto& p : hat.generators) CHECK(gb.contains(at_q0(p)));
  CHECK_FALSE(gb.contains(at_q0(in(e3 - q + G(2)))));
}

TEST_CASE("projective space") {
  for (int n = 2; n <= 6; ++n) {
    for (Kind kind : {Kind::kEliminatedHat, Kind::kEliminatedTilde}) {
      auto g = build_presentation(spec(1, n, kind, false));
      REQUIRE(g.generators.size() == 1);
      Poly z = Poly::variable(g.space, "e1");
      Poly q = Poly::variable(g.space, "q");
      CHECK(equal_up_to_sign(g.generators[0], z.pow(n) - q));
    }
  }
}

TEST_CASE("GK coefficient and series forms agree") {
  for (auto [k, n] : std::vector<std::pair<int, int>>{{1, 3}, {2, 4}, {2, 5}, {3, 5}}) {
    auto sp = gk_space(k, n);
    CHECK(gk_generators_coefficients(k, n, sp) == gk_generators_series(k, n, sp));
  }
}

TEST_CASE("specs are validated") {
  CHECK_THROWS_AS(build_presentation(spec(0, 3, Kind::kCoulomb, true)), InvalidArgument);
  CHECK_THROWS_AS(build_presentation(spec(3, 3, Kind::kCoulomb, true)), InvalidArgument);
  CHECK_THROWS_AS(build_presentation(spec(2, 4, Kind::kGk, true)), InvalidArgument);
  auto s = spec(2, 4, Kind::kCoulomb, true, QMode::numeric(1));
  CHECK_THROWS_AS(build_presentation(s), InvalidArgument);
  s = spec(2, 4, Kind::kCoulomb, true);
  s.zeta_values = {2, 3};
  CHECK_THROWS_AS(build_presentation(s), InvalidArgument);
  s.zeta_values = {2, 1, 3, 4};
  CHECK_THROWS_AS(build_presentation(s), InvalidArgument);
  CHECK_THROWS_AS(parse_kind("grassmann"), InvalidArgument);
  CHECK(parse_kind("eliminated-hat") == Kind::kEliminatedHat);
  CHECK(QMode::parse("numeric:2/6").value == Rational(1, 3));
  CHECK_THROWS_AS(QMode::parse("sometimes"), InvalidArgument);
}

TEST_CASE("numeric modes bind q and zeta") {
  auto s = spec(2, 4, Kind::kEliminatedHat, true, QMode::numeric(Rational(1, 3)));
  s.zeta_values = {2, 3, 4, 5};
  auto g = build_presentation(s);
  CHECK_FALSE(g.space->contains("q"));
  CHECK_FALSE(g.space->contains("ezeta1"));
  auto symbolic = build_presentation(spec(2, 4, Kind::kEliminatedHat, true));
  // Substituting the values into the symbolic generators gives the same polynomials.
  Bindings b{{"q", Poly::constant(g.space, Rational(1, 3))}};
  std::vector<Rational> ez = {1, 14, 71, 154, 120};  // e_i(2, 3, 4, 5)
  for (int i = 1; i <= 4; ++i) b[names::ezeta(i)] = Poly::constant(g.space, ez[i]);
  for (std::size_t i = 0; i < g.generators.size(); ++i)
    CHECK(substitute(symbolic.generators[i], b, g.space) == g.generators[i]);
}

TEST_CASE("json document") {
  auto g = build_presentation(spec(2, 5, Kind::kCoulomb, true));
  auto j = g.to_json();
  CHECK(j["schema"] == 1);
  CHECK(j["generators"].size() == 5);
  CHECK(j["provenance"].size() == 5);
  CHECK(j["kind"] == "coulomb");
  CHECK(j.dump() == build_presentation(spec(2, 5, Kind::kCoulomb, true)).to_json().dump());
}
