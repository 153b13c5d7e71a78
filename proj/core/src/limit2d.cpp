#include <cctype>
#include <optional>

#include "qkgr/errors.hpp"
#include "qkgr/lseries.hpp"
#include "qkgr/presentations.hpp"

namespace qkgr {

VarSpacePtr limit_space(int k, int n, int secondary) {
  std::vector<VarInfo> vars;
  for (int i = 1; i <= k; ++i) vars.push_back({"sigma" + std::to_string(i), 1, 0});
  for (int i = 1; i <= secondary; ++i) vars.push_back({"sigmahat" + std::to_string(i), 1, 1});
  for (int i = 1; i <= n; ++i) vars.push_back({"m" + std::to_string(i), 1, 2});
  vars.push_back({"q2d", n, 3});
  return VarSpace::create(std::move(vars));
}

namespace {

std::pair<std::string, int> split_name(const std::string& name) {
  std::size_t p = name.size();
  while (p > 0 && std::isdigit(static_cast<unsigned char>(name[p - 1]))) --p;
  if (p == name.size()) return {name, 0};
  return {name.substr(0, p), std::stoi(name.substr(p))};
}

std::vector<LSeries> elementary_series(const std::vector<LSeries>& roots, const VarSpacePtr& sp, int order) {
  std::vector<LSeries> e(roots.size() + 1, LSeries(sp, order));
  e[0] = LSeries::constant(Poly::constant(sp, 1), order);
  for (std::size_t r = 0; r < roots.size(); ++r)
    for (std::size_t j = r + 1; j >= 1; --j) e[j] = e[j] + roots[r] * e[j - 1];
  return e;
}

}  // namespace

LimitResult limit_2d(const Poly& p, int k, int n, int order, LimitConvention convention) {
  if (order < 0) order = n + 1;
  const int m_sec = n - k;
  auto sp = limit_space(k, n, m_sec);
  // X = exp(-L s) in the Chern-root convention, exp(L s) literally; the root is 1 - X.
  const Rational sign = convention == LimitConvention::kChernRoots ? Rational(-1) : Rational(1);
  auto root = [&](const std::string& var) {
    LSeries arg = LSeries::monomial(Poly::variable(sp, var), 1, order) * sign;
    return LSeries::constant(Poly::constant(sp, 1), order) - LSeries::exp(arg);
  };
  std::vector<LSeries> z, zs, zeta;
  for (int i = 1; i <= k; ++i) z.push_back(root("sigma" + std::to_string(i)));
  for (int i = 1; i <= m_sec; ++i) zs.push_back(root("sigmahat" + std::to_string(i)));
  for (int i = 1; i <= n; ++i) zeta.push_back(root("m" + std::to_string(i)));
  auto one = LSeries::constant(Poly::constant(sp, 1), order);
  auto shifted = [&](const std::vector<LSeries>& roots) {
    std::vector<LSeries> out;
    for (const auto& r : roots) out.push_back(one - r);
    return out;
  };
  auto ez = elementary_series(z, sp, order);
  auto es = elementary_series(zs, sp, order);
  auto ezeta = elementary_series(zeta, sp, order);
  auto eX = elementary_series(shifted(z), sp, order);
  auto eXt = elementary_series(shifted(zs), sp, order);
  auto eT = elementary_series(shifted(zeta), sp, order);
  LSeries qs = LSeries::monomial(Poly::variable(sp, "q2d"), n, order);
  LSeries us = LSeries::geometric(qs);

  const auto& src = *p.space();
  std::vector<std::optional<LSeries>> images(src.size());
  for (std::size_t i = 0; i < src.size(); ++i) {
    const auto& name = src.var(i).name;
    auto [prefix, idx] = split_name(name);
    auto pick = [&](const std::vector<LSeries>& v) -> std::optional<LSeries> {
      if (idx >= 1 && idx < static_cast<int>(v.size())) return v[idx];
      return std::nullopt;
    };
    std::optional<LSeries> img;
    if (name == "q") img = qs;
    else if (name == "u") img = us;
    else if (prefix == "e") img = pick(ez);
    else if (prefix == "ehat" || prefix == "etilde") img = pick(es);
    else if (prefix == "ezeta") img = pick(ezeta);
    else if (prefix == "eX") img = pick(eX);
    else if (prefix == "eXt") img = pick(eXt);
    else if (prefix == "eT") img = pick(eT);
    else if (prefix == "z" && idx >= 1 && idx <= k) img = z[idx - 1];
    else if ((prefix == "zhat" || prefix == "ztilde") && idx >= 1 && idx <= m_sec) img = zs[idx - 1];
    else if (prefix == "zeta" && idx >= 1 && idx <= n) img = zeta[idx - 1];
    if (!img && p.uses(i)) throw InvalidArgument("limit_2d: no image for variable " + name);
    images[i] = img;
  }

  LSeries total(sp, order);
  for (const auto& [mono, c] : p.terms()) {
    LSeries term = LSeries::constant(Poly::constant(sp, c), order);
    for (std::size_t i = 0; i < src.size(); ++i) {
      if (mono[i] == 0) continue;
      term = term * images[i]->pow(mono[i]);
    }
    total = total + term;
  }
  int v = total.valuation();
  if (v < 0) {
    throw ResourceLimit("limit_2d: all coefficients up to L^" + std::to_string(order) +
                        " vanish; raise the truncation order");
  }
  return {v, total.coefficient(v)};
}

}  // namespace qkgr
