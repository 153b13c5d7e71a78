#include "qkgr/errors.hpp"
#include "qkgr/presentations.hpp"

namespace qkgr {

// Works with formal surrogates e1..ek for e_i(z), explicit zeta roots, q and x = z_1.
// P(x) = prod_i (x - zeta_i) * prod_{b>=2} (1 - z_b) + (-1)^k q (1-x)^{k-1} prod_i (1 - zeta_i).
// The identity e_j(z) = e_j(z_2..z_k) + x e_{j-1}(z_2..z_k) is applied upward (from e_0) to get a
// polynomial in x, and downward (from e_k(z_2..z_k) = 0) to get a Laurent form whose top
// coefficients are the classical ones. The monic degree-n representative agrees with the top
// of the Laurent form and with the upward form modulo the characteristic polynomial of z.
std::vector<Poly> g_hat_oracle(int k, int n) {
  if (k < 1 || n <= k) throw InvalidArgument("g_hat_oracle needs 1 <= k < n");
  std::vector<VarInfo> vars;
  for (int i = 1; i <= k; ++i) vars.push_back({names::e(i), i, 0});
  std::vector<std::string> zeta;
  for (int i = 1; i <= n; ++i) {
    zeta.push_back("zeta" + std::to_string(i));
    vars.push_back({zeta.back(), 1, 2});
  }
  vars.push_back({names::q, n, 3});
  vars.push_back({"x", 1, 5});
  auto sp = VarSpace::create(std::move(vars));
  const std::size_t xi = sp->index("x");
  Poly x = Poly::variable(sp, xi);
  Poly one = Poly::constant(sp, 1);
  Poly q = Poly::variable(sp, names::q);
  auto E = [&](int j) {
    if (j == 0) return one;
    if (j < 0 || j > k) return Poly(sp);
    return Poly::variable(sp, names::e(j));
  };

  Poly pz = one;
  Poly cz = one;
  for (const auto& name : zeta) {
    Poly t = Poly::variable(sp, name);
    pz *= x - t;
    cz *= one - t;
  }
  Poly qpart = q * (one - x).pow(k - 1) * cz;
  if (k % 2 == 1) qpart = -qpart;

  // upward: f_j = e_j(z_2..z_k) = E_j - x f_{j-1}
  Poly r_up(sp);
  {
    Poly f = one;
    for (int j = 0; j <= k - 1; ++j) {
      if (j > 0) f = E(j) - x * f;
      r_up += (j % 2 == 0) ? f : -f;
    }
  }
  Poly p_up = pz * r_up + qpart;

  // downward, scaled by x^{k-1}: s_j = x^{k-1} e_j(z_2..z_k)
  std::vector<Poly> s(static_cast<std::size_t>(k), Poly(sp));
  s[0] = x.pow(k - 1);
  if (k >= 2) {
    s[k - 1] = x.pow(k - 2) * E(k);
    for (int j = k - 1; j >= 2; --j) s[j - 1] = x.pow(k - 2) * E(j) - divide_by_variable(s[j], xi);
  }
  Poly r_down(sp);
  for (int j = 0; j < k; ++j) r_down += (j % 2 == 0) ? s[j] : -s[j];
  Poly p_down = pz * r_down + qpart * x.pow(k - 1);
  auto down = coefficients_in(p_down, "x");
  down.resize(static_cast<std::size_t>(n + k + 1), Poly(sp));
  if (down[n + k - 1] != one || p_down.degree_in(xi) != n + k - 1) {
    throw Error("g_hat_oracle: Laurent form is not monic of degree n");
  }

  Poly top = x.pow(n);
  for (int l = 1; l <= n - k; ++l) top += down[n - l + k - 1] * x.pow(n - l);

  Poly chi(sp);
  for (int j = 0; j <= k; ++j) chi += ((j % 2 == 0) ? E(j) : -E(j)) * x.pow(k - j);
  Poly f = top + remainder_monic(p_up - top, chi, xi);
  if (f.degree_in(xi) != n) throw Error("g_hat_oracle: representative has wrong degree");
  auto coeffs = coefficients_in(f, "x");
  if (coeffs[n] != one) throw Error("g_hat_oracle: representative is not monic");

  auto target = standard_space(k, n, {}, true, true, false);
  std::vector<Poly> out;
  for (int l = 1; l <= n; ++l) {
    Poly c = coeffs[n - l];
    if (c.uses(xi)) throw Error("g_hat_oracle: coefficient still depends on x");
    if (l % 2 == 1) c = -c;
    out.push_back(express_in_e_basis(c, zeta, names::series(names::ezeta, n), target));
  }
  return out;
}

}  // namespace qkgr
