#include "qkgr/presentations.hpp"

#include <algorithm>

#include "qkgr/errors.hpp"

namespace qkgr {

namespace {

const std::vector<std::pair<Kind, const char*>>& kind_table() {
  static const std::vector<std::pair<Kind, const char*>> table = {
      {Kind::kWhitney, "whitney"},
      {Kind::kWhitneyShifted, "whitney-shifted"},
      {Kind::kCoulomb, "coulomb"},
      {Kind::kEliminatedTilde, "eliminated-tilde"},
      {Kind::kEliminatedHat, "eliminated-hat"},
      {Kind::kGk, "gk"},
  };
  return table;
}

Poly signed_term(const Poly& p, int exponent) { return exponent % 2 == 0 ? p : -p; }

}  // namespace

std::string kind_name(Kind kind) {
  for (const auto& [k, name] : kind_table())
    if (k == kind) return name;
  return "?";
}

Kind parse_kind(std::string_view name) {
  for (const auto& [k, n] : kind_table())
    if (name == n) return k;
  throw InvalidArgument("unknown presentation kind: " + std::string(name));
}

const std::vector<Kind>& all_kinds() {
  static const std::vector<Kind> kinds = {Kind::kWhitney,         Kind::kWhitneyShifted, Kind::kCoulomb,
                                          Kind::kEliminatedTilde, Kind::kEliminatedHat,  Kind::kGk};
  return kinds;
}

QMode QMode::parse(std::string_view text) {
  if (text == "aux" || text == "aux-inverse") return aux();
  if (text == "cleared") return cleared();
  auto colon = text.find(':');
  if (colon != std::string_view::npos && text.substr(0, colon) == "numeric") {
    Rational v;
    try {
      v = Rational(std::string(text.substr(colon + 1)));
    } catch (const std::exception&) {
      throw InvalidArgument("bad numeric q value: " + std::string(text));
    }
    v.canonicalize();
    return numeric(v);
  }
  throw InvalidArgument("unknown q mode: " + std::string(text) + " (use aux, cleared or numeric:VALUE)");
}

std::string QMode::str() const {
  switch (type) {
    case Type::kAuxInverse:
      return "aux-inverse";
    case Type::kCleared:
      return "cleared";
    case Type::kNumeric:
      return "numeric(" + value.get_str() + ")";
  }
  return "?";
}

void PresentationSpec::validate() const {
  if (k < 1 || n < k + 1) {
    throw InvalidArgument("need 1 <= k <= n-1, got k=" + std::to_string(k) + " n=" + std::to_string(n));
  }
  if (n > 12) throw InvalidArgument("n too large");
  if (kind == Kind::kGk && equivariant) throw InvalidArgument("the gk presentation is non-equivariant");
  if (!zeta_values.empty() && static_cast<int>(zeta_values.size()) != n) {
    throw InvalidArgument("zeta_values must have n entries");
  }
  if (!zeta_values.empty() && !equivariant) throw InvalidArgument("zeta values given for a non-equivariant spec");
  for (const auto& z : zeta_values) {
    // T_i = 1 - zeta_i is a torus character and must stay invertible.
    if (z == 1) throw InvalidArgument("zeta values must differ from 1");
  }
  if (q_mode.type == QMode::Type::kNumeric && q_mode.value == 1) throw InvalidArgument("numeric q must differ from 1");
}

std::vector<Poly> GeneratorList::ideal_generators() const {
  std::vector<Poly> out = generators;
  if (spec.q_mode.type == QMode::Type::kAuxInverse) {
    Poly q = Poly::variable(space, names::q);
    Poly u = Poly::variable(space, names::u);
    out.push_back(u * (Rational(1) - q) - Rational(1));
  }
  return out;
}

nlohmann::json GeneratorList::to_json() const {
  nlohmann::json j;
  j["schema"] = 1;
  j["k"] = spec.k;
  j["n"] = spec.n;
  j["kind"] = kind_name(spec.kind);
  j["equivariant"] = spec.equivariant;
  j["q_mode"] = spec.q_mode.str();
  if (!spec.zeta_values.empty()) {
    std::vector<std::string> z;
    for (const auto& v : spec.zeta_values) z.push_back(v.get_str());
    j["zeta_values"] = z;
  }
  j["variables"] = space->names();
  std::vector<std::string> gens;
  for (const auto& g : generators) gens.push_back(to_string(g));
  j["generators"] = gens;
  j["provenance"] = provenance;
  return j;
}

namespace names {
std::string e(int i) { return "e" + std::to_string(i); }
std::string ehat(int i) { return "ehat" + std::to_string(i); }
std::string etilde(int i) { return "etilde" + std::to_string(i); }
std::string ezeta(int i) { return "ezeta" + std::to_string(i); }
std::string eX(int i) { return "eX" + std::to_string(i); }
std::string eXt(int i) { return "eXt" + std::to_string(i); }
std::string eT(int i) { return "eT" + std::to_string(i); }
std::string H(int i) { return "H" + std::to_string(i); }
std::string E(int i) { return "E" + std::to_string(i); }
std::vector<std::string> series(std::string (*f)(int), int count) {
  std::vector<std::string> out;
  for (int i = 1; i <= count; ++i) out.push_back(f(i));
  return out;
}
}  // namespace names

VarSpacePtr standard_space(int k, int n, const std::vector<std::string>& secondary, bool zeta, bool q, bool u) {
  std::vector<VarInfo> vars;
  for (int i = 1; i <= k; ++i) vars.push_back({names::e(i), i, 0});
  for (std::size_t i = 0; i < secondary.size(); ++i) vars.push_back({secondary[i], static_cast<int>(i) + 1, 1});
  if (zeta)
    for (int i = 1; i <= n; ++i) vars.push_back({names::ezeta(i), i, 2});
  if (q) vars.push_back({names::q, n, 3});
  if (u) vars.push_back({names::u, 0, 4});
  return VarSpace::create(std::move(vars));
}

SymRing standard_ring(const VarSpacePtr& space, int k, int n, bool zeta) {
  return SymRing(space, k, n, RootBlock::elementary("e", k),
                 zeta ? RootBlock::elementary("ezeta", n) : RootBlock::zero(n));
}

Poly g_hat_closed(const SymRing& R, int l, const Poly& q) {
  const int k = R.k();
  const int n = R.n();
  if (l < 1 || l > n) throw InvalidArgument("ghat index out of range");
  Poly g = R.cp_ge(l);
  if (l <= n - k) return g;
  int i = l - n + k;
  // (E * C^zeta)_i with E[i][c] = -e_{i-c}(z) and C^zeta[c] = c^zeta_{>= n-k+1+c}, last entry 0.
  for (int c = 1; c <= i && c < k; ++c) g -= R.e(i - c) * R.c_zeta_ge(n - k + 1 + c);
  Poly qpart = q * R.c_zeta() * Rational(binomial(k - 1, n - l));
  g += signed_term(qpart, n + k);
  return g;
}

Poly g_tilde(const SymRing& R, int l, const Poly& q, const Poly& u, const Poly& e_shift_tilde) {
  const int k = R.k();
  const int n = R.n();
  if (l < 1 || l > n) throw InvalidArgument("gtilde index out of range");
  int m = l + k - n;
  Poly bracket = R.one() * Rational(binomial(k, m)) - R.e(m);
  if (m < 0) bracket = R.zero();
  Poly qpart = q * u * e_shift_tilde * bracket;
  return R.e_zeta(l) + signed_term(qpart, n - k);
}

Poly g_tilde_delta_form(const SymRing& R, int l, const Poly& q, const Poly& u, const Poly& e_shift_tilde) {
  const int k = R.k();
  const int n = R.n();
  Poly sum = R.zero();
  for (int s = n - k + 1; s <= l; ++s) {
    Poly e_shift_z = e_of_shifted(s + k - n, k, [&](int j) { return R.e(j); });
    Poly delta = e_shift_z * e_shift_tilde;
    sum += signed_term(delta * Rational(binomial(n - s, l - s)), s);
  }
  return R.e_zeta(l) - q * u * sum;
}

Poly e_shift_tilde_eliminated(const SymRing& R) {
  int m = R.n() - R.k();
  return e_of_shifted(m, m, [&](int s) { return signed_term(R.hp(s), s); });
}

namespace mat {

namespace {
PolyMatrix column_of(const SymRing& R, const std::function<Poly(int)>& entry) {
  PolyMatrix m(R.space(), R.k(), 1);
  for (int i = 1; i <= R.k(); ++i) m.at(i - 1, 0) = entry(i);
  return m;
}
}  // namespace

PolyMatrix E(const SymRing& R) {
  const int k = R.k();
  PolyMatrix m(R.space(), k, k);
  for (int r = 1; r <= k; ++r)
    for (int c = 1; c <= r; ++c) m.at(r - 1, c - 1) = -R.e(r - c);
  return m;
}

PolyMatrix A(const SymRing& R) {
  const int k = R.k();
  PolyMatrix m(R.space(), k, k);
  for (int i = 1; i <= k; ++i) {
    for (int j = 1; j <= k; ++j) {
      if (j < i) {
        m.at(i - 1, j - 1) = signed_term(R.c_ge(k - j + 1), k - i);
      } else {
        m.at(i - 1, j - 1) = signed_term(R.c_le(k - j), j - i);
      }
    }
  }
  return m;
}

PolyMatrix A_prime(const SymRing& R) { return A(R).antidiagonal_transpose(); }

PolyMatrix H(const SymRing& R) {
  const int off = R.n() - R.k();
  return column_of(R, [&](int i) { return signed_term(R.h(off + i), off + i); });
}

PolyMatrix G(const SymRing& R) {
  const int off = R.n() - R.k();
  return column_of(R, [&](int i) { return signed_term(R.G(off + i), off + i); });
}

PolyMatrix H_prime(const SymRing& R) {
  const int off = R.n() - R.k();
  return column_of(R, [&](int i) { return signed_term(R.hp(off + i), off + i); });
}

PolyMatrix G_prime(const SymRing& R) {
  const int off = R.n() - R.k();
  return column_of(R, [&](int i) { return signed_term(R.Gp(off + i), off + i); });
}

PolyMatrix G_dagger(const SymRing& R) {
  const int off = R.n() - R.k();
  return column_of(R, [&](int i) { return signed_term(R.G_dagger(off + i), off + i); });
}

PolyMatrix C_zeta(const SymRing& R) {
  const int off = R.n() - R.k();
  return column_of(R, [&](int i) { return i < R.k() ? R.c_zeta_ge(off + 1 + i) : R.zero(); });
}

PolyMatrix C_z_zeta(const SymRing& R) {
  const int off = R.n() - R.k();
  return column_of(R, [&](int i) { return R.cp_ge(off + i); });
}

PolyMatrix E_zeta(const SymRing& R) {
  const int off = R.n() - R.k();
  return column_of(R, [&](int i) { return R.e_zeta(off + i); });
}

PolyMatrix binom_column(const SymRing& R) {
  const int k = R.k();
  return column_of(R, [&](int i) { return R.one() * Rational(binomial(k - 1, k - i)); });
}

PolyMatrix shifted_binom_column(const SymRing& R) {
  const int k = R.k();
  return column_of(R, [&](int i) { return R.one() * Rational(binomial(k, i)) - R.e(i); });
}

PolyMatrix R_hat(const SymRing& R, const Poly& q) {
  const int off = R.n() - R.k();
  return column_of(R, [&](int i) { return g_hat_closed(R, off + i, q); });
}

PolyMatrix R_tilde(const SymRing& R, const Poly& q, const Poly& u, const Poly& e_shift_tilde) {
  const int off = R.n() - R.k();
  return column_of(R, [&](int i) { return g_tilde(R, off + i, q, u, e_shift_tilde); });
}

}  // namespace mat

Poly realize_q(const Poly& p, const QMode& mode, const VarSpacePtr& target) {
  const auto& space = p.space();
  bool has_u = space->contains(names::u);
  switch (mode.type) {
    case QMode::Type::kAuxInverse:
      return embed(p, target);
    case QMode::Type::kCleared: {
      if (!has_u) return embed(p, target);
      auto parts = coefficients_in(p, names::u);
      if (parts.size() < 2) return embed(p, target);  // nothing to clear
      if (parts.size() > 2) throw InvalidArgument("cannot clear a generator of degree > 1 in 1/(1-q)");
      Poly q = Poly::variable(space, names::q);
      Poly cleared = parts[0] * (Rational(1) - q) + parts[1];
      return embed(cleared, target);
    }
    case QMode::Type::kNumeric: {
      Bindings b;
      if (space->contains(names::q)) b.emplace(names::q, Poly::constant(target, mode.value));
      if (has_u) b.emplace(names::u, Poly::constant(target, Rational(1) / (Rational(1) - mode.value)));
      return substitute(p, b, target);
    }
  }
  return p;
}

std::vector<Poly> solve_secondary(const std::vector<Poly>& gens, const std::vector<std::string>& secondary) {
  std::vector<Poly> sol;
  if (gens.size() < secondary.size()) throw InvalidArgument("not enough relations to solve");
  const auto& space = gens.front().space();
  Bindings b;
  for (std::size_t l = 0; l < secondary.size(); ++l) {
    Poly s = Poly::variable(space, secondary[l]);
    auto parts = coefficients_in(gens[l], secondary[l]);
    if (parts.size() != 2 || parts[1] != Poly::constant(space, 1)) {
      throw InvalidArgument("relation " + std::to_string(l + 1) + " is not monic linear in " + secondary[l]);
    }
    Poly value = substitute(s - gens[l], b, space);
    for (std::size_t j = l; j < secondary.size(); ++j) {
      if (value.uses(space->index(secondary[j]))) {
        throw InvalidArgument("relation " + std::to_string(l + 1) + " involves later unknowns");
      }
    }
    b.emplace(secondary[l], value);
    sol.push_back(value);
  }
  return sol;
}

VarSpacePtr gk_space(int k, int n) {
  std::vector<VarInfo> vars;
  for (int j = 1; j <= n - k; ++j) vars.push_back({names::H(j), j, 0});
  for (int j = 1; j <= k; ++j) vars.push_back({names::E(j), j, 0});
  vars.push_back({names::q, n, 1});
  return VarSpace::create(std::move(vars));
}

std::vector<Poly> gk_generators_coefficients(int k, int n, const VarSpacePtr& space) {
  auto Hv = [&](int r) {
    if (r == 0) return Poly::constant(space, 1);
    if (r < 0 || r > n - k) return Poly(space);
    return Poly::variable(space, names::H(r));
  };
  auto Ev = [&](int r) {
    if (r == 0) return Poly::constant(space, 1);
    if (r < 0 || r > k) return Poly(space);
    return Poly::variable(space, names::E(r));
  };
  Poly q = Poly::variable(space, names::q);
  std::vector<Poly> out;
  for (int l = 1; l <= n; ++l) {
    Poly lhs = signed_term(Hv(l) - Hv(l + 1), k);
    for (int j = 1; j <= l; ++j) {
      Poly inner(space);
      for (int s = j; s <= k; ++s) inner += Ev(s) * Rational(binomial(s - 1, s - j));
      lhs += (Hv(l - j) - Hv(l + 1 - j)) * signed_term(inner, k - j);
    }
    Poly rhs(space);
    if (l >= n - k) rhs = signed_term(q * Rational(binomial(k, n - l)), n - l);
    out.push_back(lhs - rhs);
  }
  return out;
}

std::vector<Poly> gk_generators_series(int k, int n, const VarSpacePtr& base) {
  auto space = base->with({{"xi", 1, 9}});
  auto Hv = [&](int r) {
    if (r == 0) return Poly::constant(space, 1);
    if (r < 0 || r > n - k) return Poly(space);
    return Poly::variable(space, names::H(r));
  };
  auto Ev = [&](int r) {
    if (r == 0) return Poly::constant(space, 1);
    if (r < 0 || r > k) return Poly(space);
    return Poly::variable(space, names::E(r));
  };
  Poly xi = Poly::variable(space, "xi");
  Poly one = Poly::constant(space, 1);
  Poly q = Poly::variable(space, names::q);
  Poly Hs(space);
  for (int r = 0; r <= n - k; ++r) Hs += (Hv(r) - Hv(r + 1)) * xi.pow(n - k - r);
  // E(-xi/(1-xi)) * (1-xi)^k
  Poly Es(space);
  for (int r = 0; r <= k; ++r) Es += (Ev(r) - Ev(r + 1)) * (-xi).pow(k - r) * (one - xi).pow(r);
  Poly lhs = Hs * Es;
  Poly rhs = (-xi).pow(k) * xi.pow(n - k) * (one - Hv(1)) + q * (one - xi).pow(k);
  auto coeffs = coefficients_in(lhs - rhs, "xi");
  coeffs.resize(static_cast<std::size_t>(n + 1), Poly(space));
  if (!coeffs[n].is_zero()) throw Error("gk series: top coefficient does not vanish");
  std::vector<Poly> out;
  for (int l = 1; l <= n; ++l) out.push_back(embed(coeffs[n - l], base));
  return out;
}

namespace {

struct Master {
  VarSpacePtr space;
  std::vector<Poly> gens;
  std::vector<std::string> tags;
  std::vector<std::string> zeta_names;  // surrogates to bind when zeta is numeric
  bool zeta_are_T = false;              // whitney: surrogates are e_j(T) = e_j(1 - zeta)
};

Master build_whitney(const PresentationSpec& s) {
  const int k = s.k, n = s.n;
  std::vector<VarInfo> vars;
  for (int i = 1; i <= k; ++i) vars.push_back({names::eX(i), 0, 0});
  for (int j = 1; j <= n - k; ++j) vars.push_back({names::eXt(j), 0, 1});
  if (s.equivariant)
    for (int j = 1; j <= n; ++j) vars.push_back({names::eT(j), 0, 2});
  vars.push_back({names::q, n, 3});
  vars.push_back({names::u, 0, 4});
  Master m;
  m.space = VarSpace::create(std::move(vars));
  const auto& sp = m.space;
  auto eX = [&](int i) {
    if (i == 0) return Poly::constant(sp, 1);
    if (i < 0 || i > k) return Poly(sp);
    return Poly::variable(sp, names::eX(i));
  };
  auto eXt = [&](int j) {
    if (j == 0) return Poly::constant(sp, 1);
    if (j < 0 || j > n - k) return Poly(sp);
    return Poly::variable(sp, names::eXt(j));
  };
  auto eT = [&](int j) {
    if (!s.equivariant) return Poly::constant(sp, Rational(binomial(n, j)));
    if (j == 0) return Poly::constant(sp, 1);
    return Poly::variable(sp, names::eT(j));
  };
  Poly q = Poly::variable(sp, names::q);
  Poly u = Poly::variable(sp, names::u);
  for (int l = 1; l <= n; ++l) {
    Poly g(sp);
    for (int i = 0; i <= std::min(l, k); ++i) g += eX(i) * eXt(l - i);
    g -= eT(l);
    if (l - (n - k) >= 1) g += q * u * eXt(n - k) * eX(l - (n - k));
    m.gens.push_back(g);
    m.tags.push_back("y^" + std::to_string(l) + " coefficient of the Whitney relation");
  }
  if (s.equivariant) m.zeta_names = names::series(names::eT, n);
  m.zeta_are_T = true;
  return m;
}

Master build_standard(const PresentationSpec& s) {
  const int k = s.k, n = s.n;
  Master m;
  std::vector<std::string> secondary;
  if (s.kind == Kind::kCoulomb) secondary = names::series(names::ehat, n - k);
  if (s.kind == Kind::kWhitneyShifted) secondary = names::series(names::etilde, n - k);
  m.space = standard_space(k, n, secondary, s.equivariant, true, true);
  SymRing R = standard_ring(m.space, k, n, s.equivariant);
  const auto& sp = m.space;
  Poly q = Poly::variable(sp, names::q);
  Poly u = Poly::variable(sp, names::u);
  auto sec = [&](int j) {
    if (j == 0) return Poly::constant(sp, 1);
    if (j < 0 || j > n - k) return Poly(sp);
    return Poly::variable(sp, secondary[j - 1]);
  };
  auto vieta = [&](int l) {
    Poly v(sp);
    for (int i = 0; i <= std::min(l, k); ++i) v += R.e(i) * sec(l - i);
    return v;
  };
  switch (s.kind) {
    case Kind::kCoulomb:
      for (int l = 1; l <= n; ++l) {
        m.gens.push_back(vieta(l) - g_hat_closed(R, l, q));
        m.tags.push_back("l=" + std::to_string(l) + ": sum e_i(z)e_j(zhat) - ghat_" + std::to_string(l));
      }
      break;
    case Kind::kWhitneyShifted: {
      Poly est = e_of_shifted(n - k, n - k, [&](int j) { return sec(j); });
      for (int l = 1; l <= n; ++l) {
        Poly gt = g_tilde(R, l, q, u, est);
        if (gt != g_tilde_delta_form(R, l, q, u, est)) {
          throw Error("gtilde: the two closed forms disagree at l=" + std::to_string(l));
        }
        m.gens.push_back(vieta(l) - gt);
        m.tags.push_back("l=" + std::to_string(l) + ": sum e_i(z)e_j(ztilde) - gtilde_" + std::to_string(l));
      }
      break;
    }
    case Kind::kEliminatedTilde: {
      Poly est = e_shift_tilde_eliminated(R);
      auto rhs = mat::E(R) * mat::H_prime(R);
      for (int i = 1; i <= k; ++i) {
        int l = n - k + i;
        m.gens.push_back(g_tilde(R, l, q, u, est) - rhs.at(i - 1, 0) - R.e_zeta(l));
        m.tags.push_back("row " + std::to_string(i) + " (l=" + std::to_string(l) + "): gtilde = (E H')_i + e_l(zeta)");
      }
      break;
    }
    case Kind::kEliminatedHat: {
      auto rhs = mat::E(R) * mat::G_prime(R);
      for (int i = 1; i <= k; ++i) {
        int l = n - k + i;
        m.gens.push_back(g_hat_closed(R, l, q) - rhs.at(i - 1, 0) - R.cp_ge(l));
        m.tags.push_back("row " + std::to_string(i) + " (l=" + std::to_string(l) + "): ghat = (E G')_i + c'_{>=l}");
      }
      break;
    }
    default:
      throw InvalidArgument("unsupported kind");
  }
  if (s.equivariant) m.zeta_names = names::series(names::ezeta, n);
  return m;
}

Master build_gk(const PresentationSpec& s) {
  Master m;
  m.space = gk_space(s.k, s.n);
  m.gens = gk_generators_coefficients(s.k, s.n, m.space);
  auto check = gk_generators_series(s.k, s.n, m.space);
  for (int l = 1; l <= s.n; ++l) {
    if (m.gens[l - 1] != check[l - 1]) {
      throw Error("gk: coefficient display and series expansion disagree at l=" + std::to_string(l));
    }
    m.tags.push_back("coefficient of xi^" + std::to_string(l));
  }
  return m;
}

}  // namespace

GeneratorList build_presentation(const PresentationSpec& spec) {
  spec.validate();
  Master m;
  switch (spec.kind) {
    case Kind::kWhitney:
      m = build_whitney(spec);
      break;
    case Kind::kGk:
      m = build_gk(spec);
      break;
    default:
      m = build_standard(spec);
  }
  std::vector<std::string> drop;
  bool has_u = m.space->contains(names::u);
  if (spec.q_mode.type != QMode::Type::kAuxInverse && has_u) drop.push_back(names::u);
  if (spec.q_mode.type == QMode::Type::kNumeric) drop.push_back(names::q);
  VarSpacePtr stage = m.space->without(drop);
  GeneratorList out;
  out.spec = spec;
  for (auto& g : m.gens) g = realize_q(g, spec.q_mode, stage);
  if (!spec.zeta_values.empty()) {
    VarSpacePtr target = stage->without(m.zeta_names);
    std::vector<Rational> vals = spec.zeta_values;
    if (m.zeta_are_T)
      for (auto& v : vals) v = Rational(1) - v;
    // e_j of the numeric values
    std::vector<Rational> ej(vals.size() + 1, Rational(0));
    ej[0] = 1;
    for (const auto& v : vals)
      for (std::size_t j = vals.size(); j >= 1; --j) ej[j] += v * ej[j - 1];
    Bindings b;
    for (std::size_t j = 0; j < m.zeta_names.size(); ++j) b.emplace(m.zeta_names[j], Poly::constant(target, ej[j + 1]));
    for (auto& g : m.gens) g = substitute(g, b, target);
    stage = target;
  }
  out.space = stage;
  out.generators = std::move(m.gens);
  out.provenance = std::move(m.tags);
  return out;
}

}  // namespace qkgr
