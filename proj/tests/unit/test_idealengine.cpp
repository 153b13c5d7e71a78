#include <doctest.h>

#include <filesystem>
#include <fstream>

#include <unistd.h>

#include "doctest_poly.hpp"
#include "oracles.hpp"
#include "qkgr/errors.hpp"
#include "qkgr/groebner.hpp"
#include "qkgr/presentations.hpp"
#include "qkgr/specialize.hpp"

using namespace qkgr;
namespace fs = std::filesystem;

namespace {

struct Xyz {
  VarSpacePtr sp = VarSpace::create({{"x", 1, 0}, {"y", 1, 0}, {"z", 1, 1}});
  Poly x = Poly::variable(sp, "x"), y = Poly::variable(sp, "y"), z = Poly::variable(sp, "z");
};

// S-polynomial built from leading terms under the basis' order.
Poly s_poly(const GroebnerBasis& gb, const Poly& f, const Poly& g) {
  Monomial lf = gb.leading_monomial(f), lg = gb.leading_monomial(g);
  Monomial l = lf.lcm(lg);
  Rational cf = f.coefficient(lf), cg = g.coefficient(lg);
  return Poly::monomial(f.space(), lf.quotient_of(l), 1 / cf) * f - Poly::monomial(g.space(), lg.quotient_of(l), 1 / cg) * g;
}

fs::path fresh_dir(const std::string& name) {
  auto dir = fs::temp_directory_path() / ("qkgr-test-" + name + "-" + std::to_string(::getpid()));
  fs::remove_all(dir);
  return dir;
}

}  // namespace

TEST_CASE("term orders") {
  Xyz r;
  auto m = [&](const Poly& p) { return p.terms().begin()->first; };
  auto grevlex = TermOrder::grevlex(*r.sp);
  // degree two in x > y > z: x^2 > xy > y^2 > xz > yz > z^2
  std::vector<Poly> chain = {r.x * r.x, r.x * r.y, r.y * r.y, r.x * r.z, r.y * r.z, r.z * r.z};
  for (std::size_t i = 0; i + 1 < chain.size(); ++i) CHECK(grevlex.greater(m(chain[i]), m(chain[i + 1])));
  CHECK(grevlex.greater(m(r.z.pow(3)), m(r.x * r.x)));
  auto lex = TermOrder::lex(*r.sp);
  CHECK(lex.greater(m(r.x), m(r.y.pow(5))));
  CHECK(lex.greater(m(r.x * r.z), m(r.x)));
  auto block = TermOrder::block(*r.sp);
  CHECK(block.blocks().size() == 2);
  CHECK(block.greater(m(r.y), m(r.z.pow(4))));
  CHECK(block.greater(m(r.x * r.x), m(r.x * r.y)));
  CHECK(block.compare(m(r.x), m(r.x)) == 0);
}

TEST_CASE("small ideals with known quotients") {
  Xyz r;
  auto order = TermOrder::grevlex(*r.sp);
  auto gb = groebner({r.x * r.x - r.y, r.y * r.y - 1, r.z - r.x}, order);
  CHECK(gb.quotient_dimension() == 4);
  CHECK(gb.contains(r.x.pow(4) - 1));
  CHECK_FALSE(gb.contains(r.x - 1));
  CHECK_FALSE(gb.is_unit_ideal());
  CHECK(groebner({r.x * r.y - 1, r.x}, order).is_unit_ideal());
  CHECK_FALSE(groebner({r.x * r.y}, order).quotient_dimension().has_value());
  // twisted cubic: three quadrics, dimension one, so infinite quotient
  auto cubic = groebner({r.x * r.z - r.y * r.y, r.y - r.x * r.x, r.z - r.x * r.y}, TermOrder::lex(*r.sp));
  CHECK_FALSE(cubic.quotient_dimension().has_value());
  CHECK(cubic.contains(r.z - r.x.pow(3)));
}

TEST_CASE("bases satisfy Buchberger's criterion and are reduced") {
  Xyz r;
  std::mt19937_64 rng(19);
  for (auto order : {TermOrder::grevlex(*r.sp), TermOrder::lex(*r.sp), TermOrder::block(*r.sp)}) {
    for (int trial = 0; trial < 4; ++trial) {
      // sparse, low degree, so that lex bases stay small
      std::vector<Poly> gens = {oracle::random_poly(r.sp, rng, 2, 2) + r.x * r.x,
                                oracle::random_poly(r.sp, rng, 2, 1) + r.y * r.z};
      auto gb = groebner(gens, order);
      const auto& basis = gb.generators();
      for (std::size_t i = 0; i < basis.size(); ++i) {
        CHECK(basis[i].coefficient(gb.leading_monomial(basis[i])) == 1);
        for (std::size_t j = i + 1; j < basis.size(); ++j) CHECK(gb.normal_form(s_poly(gb, basis[i], basis[j])).is_zero());
        for (std::size_t j = 0; j < basis.size(); ++j)
          if (i != j) CHECK_FALSE(gb.leading_monomial(basis[j]).divides(gb.leading_monomial(basis[i])));
      }
      for (const auto& g : gens) CHECK(gb.contains(g));
      Poly p = oracle::random_poly(r.sp, rng, 6, 3);
      Poly nf = gb.normal_form(p);
      CHECK(gb.normal_form(nf) == nf);
      CHECK(gb.contains(p - nf));
    }
  }
}

TEST_CASE("membership and dimension do not depend on the term order") {
  PresentationSpec s;
  s.k = 2;
  s.n = 4;
  s.kind = Kind::kEliminatedHat;
  s.equivariant = false;
  s.q_mode = QMode::numeric(Rational(2, 3));
  auto g = build_presentation(s);
  auto tilde_spec = s;
  tilde_spec.kind = Kind::kEliminatedTilde;
  auto t = build_presentation(tilde_spec);
  for (auto order : {TermOrder::grevlex(*g.space), TermOrder::lex(*g.space), TermOrder::block(*g.space)}) {
    CAPTURE(order.name());
    auto gb = groebner(g.generators, order);
    CHECK(gb.quotient_dimension() == 6);
    for (const auto& p : t.generators) CHECK(gb.contains(embed(p, g.space)));
  }
  std::vector<Poly> tg;
  for (const auto& p : t.generators) tg.push_back(embed(p, g.space));
  CHECK(ideal_equal(g.generators, tg, TermOrder::grevlex(*g.space)));
}

TEST_CASE("budget exhaustion raises ResourceLimit") {
  Xyz r;
  GroebnerOptions tiny;
  tiny.max_pairs = 1;
  CHECK_THROWS_AS(groebner({r.x * r.x - r.y * r.z, r.y * r.y - r.x * r.z, r.z * r.z - r.x * r.y + r.x}, TermOrder::grevlex(*r.sp), tiny),
                  ResourceLimit);
}

TEST_CASE("cache round trip") {
  Xyz r;
  auto dir = fresh_dir("cache");
  GroebnerCache cache(dir);
  auto order = TermOrder::block(*r.sp);
  std::vector<Poly> gens = {r.x * r.x - r.y * r.z, r.y * r.y - r.z, r.z * r.z - r.x};
  CHECK_FALSE(cache.load(gens, order).has_value());
  auto computed = groebner_cached(gens, order, &cache);
  REQUIRE(cache.entries().size() == 1);
  auto loaded = cache.load(gens, order);
  REQUIRE(loaded.has_value());
  CHECK(loaded->generators() == computed.generators());
  CHECK(loaded->fingerprint() == computed.fingerprint());
  // a different order is a different entry
  CHECK_FALSE(cache.load(gens, TermOrder::lex(*r.sp)).has_value());
  // corrupt entries are ignored and recomputed
  { std::ofstream(cache.entries().front()) << "{ not json"; }
  CHECK_FALSE(cache.load(gens, order).has_value());
  CHECK(groebner_cached(gens, order, &cache).generators() == computed.generators());
  CHECK(cache.clear() == 1);
  CHECK(cache.entries().empty());
  fs::remove_all(dir);
}

TEST_CASE("numeric points") {
  auto a = draw_point(5, 42), b = draw_point(5, 42), c = draw_point(5, 43);
  CHECK(a.str() == b.str());
  CHECK(a.str() != c.str());
  REQUIRE(a.zeta.size() == 5);
  CHECK(a.q != 0);
  CHECK(a.q != 1);
  for (const auto& pt : draw_points(4, 1, 20)) {
    for (const auto& v : pt.zeta) {
      CHECK(v != 0);
      CHECK(abs(v.get_num()) <= 9);
      CHECK(v.get_den() <= 7);
    }
    // e_i of 1 - zeta from e_i of zeta
    auto ez = pt.e_zeta();
    auto et = pt.e_T();
    Rational prod = 1;
    for (const auto& v : pt.zeta) prod *= 1 - v;
    CHECK(et[4] == prod);
    Rational alt = 0;
    for (int i = 0; i <= 4; ++i) alt += (i % 2 ? -1 : 1) * ez[i];
    CHECK(alt == prod);
  }
  auto pts = draw_points(3, 7, 3);
  CHECK(pts[2].seed == 9);
}

TEST_CASE("specialization binds parameters") {
  auto sp = standard_space(2, 3, {}, true, true, true);
  Poly e1 = Poly::variable(sp, "e1"), q = Poly::variable(sp, "q"), u = Poly::variable(sp, "u");
  Poly ez1 = Poly::variable(sp, "ezeta1"), ez3 = Poly::variable(sp, "ezeta3");
  auto pt = draw_point(3, 5);
  auto target = specialized_space(sp);
  CHECK(target->names() == std::vector<std::string>{"e1", "e2"});
  Poly p = e1 * ez1 + q * u - ez3;
  Poly expected = Poly::variable(target, "e1") * pt.e_zeta()[1] + Poly::constant(target, pt.q / (1 - pt.q) - pt.e_zeta()[3]);
  CHECK(specialize(p, pt, target) == expected);
  auto keep_q = specialized_space(sp, false);
  CHECK(keep_q->contains("q"));
}
