#include "qkgr/specialize.hpp"

#include <random>

#include "qkgr/errors.hpp"

namespace qkgr {

namespace {

Rational small_rational(std::mt19937_64& rng) {
  long num = static_cast<long>(rng() % 18);  // 0..17 -> -9..-1, 1..9
  num = num < 9 ? num - 9 : num - 8;
  long den = static_cast<long>(rng() % 7) + 1;
  Rational r(num, den);
  r.canonicalize();
  return r;
}

std::vector<Rational> elementary(const std::vector<Rational>& vals) {
  std::vector<Rational> e(vals.size() + 1, Rational(0));
  e[0] = 1;
  for (const auto& v : vals)
    for (std::size_t j = vals.size(); j >= 1; --j) e[j] += v * e[j - 1];
  return e;
}

bool bound_name(const std::string& name, bool bind_q) {
  auto starts = [&](const char* p) {
    std::string s(p);
    return name.size() > s.size() && name.compare(0, s.size(), s) == 0 &&
           name.find_first_not_of("0123456789", s.size()) == std::string::npos;
  };
  if (bind_q && (name == "q" || name == "u")) return true;
  return starts("ezeta") || starts("eT") || starts("zeta");
}

}  // namespace

std::vector<Rational> NumericPoint::e_zeta() const { return elementary(zeta); }

std::vector<Rational> NumericPoint::e_T() const {
  std::vector<Rational> t;
  for (const auto& z : zeta) t.push_back(Rational(1) - z);
  return elementary(t);
}

std::string NumericPoint::str() const {
  std::string s = "seed=" + std::to_string(seed) + " q=" + q.get_str() + " zeta=(";
  for (std::size_t i = 0; i < zeta.size(); ++i) {
    if (i) s += ",";
    s += zeta[i].get_str();
  }
  return s + ")";
}

NumericPoint draw_point(int n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  NumericPoint p;
  p.seed = seed;
  for (int i = 0; i < n; ++i) {
    Rational z;
    do {
      z = small_rational(rng);
    } while (z == 1);  // keeps T_i = 1 - zeta_i invertible
    p.zeta.push_back(z);
  }
  do {
    p.q = small_rational(rng);
  } while (p.q == 0 || p.q == 1);
  return p;
}

std::vector<NumericPoint> draw_points(int n, std::uint64_t base_seed, int count) {
  std::vector<NumericPoint> out;
  for (int i = 0; i < count; ++i) out.push_back(draw_point(n, base_seed + static_cast<std::uint64_t>(i)));
  return out;
}

VarSpacePtr specialized_space(const VarSpacePtr& space, bool bind_q) {
  std::vector<std::string> drop;
  for (const auto& v : space->vars())
    if (bound_name(v.name, bind_q)) drop.push_back(v.name);
  return space->without(drop);
}

Poly specialize(const Poly& p, const NumericPoint& pt, const VarSpacePtr& target, bool bind_q) {
  const auto ez = pt.e_zeta();
  const auto eT = pt.e_T();
  Bindings b;
  for (const auto& v : p.space()->vars()) {
    const auto& name = v.name;
    if (!bound_name(name, bind_q)) continue;
    Rational value;
    if (name == "q") {
      value = pt.q;
    } else if (name == "u") {
      value = Rational(1) / (Rational(1) - pt.q);
    } else {
      std::size_t p0 = name.find_first_of("0123456789");
      std::string prefix = name.substr(0, p0);
      std::size_t idx = std::stoul(name.substr(p0));
      if (idx == 0 || idx > pt.zeta.size()) throw InvalidArgument("no numeric value for " + name);
      if (prefix == "ezeta") value = ez[idx];
      else if (prefix == "eT") value = eT[idx];
      else value = pt.zeta[idx - 1];
    }
    b.emplace(name, Poly::constant(target, value));
  }
  return substitute(p, b, target);
}

}  // namespace qkgr
