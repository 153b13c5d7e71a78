#include "overview.hpp"

#include <sstream>

#include "qkgr/errors.hpp"
#include "qkgr/symfunc.hpp"

namespace qkgr::cli {

namespace {

std::string deformed_display(const std::string& family, int l, int n, bool equivariant) {
  std::string s = family + "_" + std::to_string(l);
  if (!equivariant) return s;
  for (int a = 1; a <= std::min(l, n); ++a) {
    s += a % 2 ? " - " : " + ";
    if (a < l) s += family + "_" + std::to_string(l - a) + "*";
    s += "ezeta" + std::to_string(a);
  }
  return s;
}

std::string signed_name(int l, const std::string& name) { return (l % 2 ? "-" : "") + name; }

nlohmann::json entries_json(const std::vector<Entry>& v) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& e : v) {
    nlohmann::json j;
    j["label"] = e.label;
    if (!e.display.empty()) j["display"] = e.display;
    j["value"] = to_string(e.value);
    arr.push_back(j);
  }
  return arr;
}

void text_section(std::ostringstream& os, const std::string& title, const std::vector<Entry>& v) {
  if (v.empty()) return;
  os << "\n[" << title << "]\n";
  for (const auto& e : v) {
    os << e.label << " = ";
    if (!e.display.empty()) os << e.display << " = ";
    os << to_string(e.value) << "\n";
  }
}

std::string latex_label(const std::string& label) {
  // ghat_4 -> \hat{g}_{4}, ehat1 -> e_{1}(\hat{z}), G'_4 -> G'_{4}
  auto idx = [&](std::size_t from) { return label.substr(from); };
  if (label.rfind("ghat_", 0) == 0) return "\\hat{g}_{" + idx(5) + "}";
  if (label.rfind("gtilde_", 0) == 0) return "\\tilde{g}_{" + idx(7) + "}";
  if (label.rfind("ehat", 0) == 0) return "e_{" + idx(4) + "}(\\hat{z})";
  if (label.rfind("etilde", 0) == 0) return "e_{" + idx(6) + "}(\\tilde{z})";
  if (label.rfind("G'_", 0) == 0) return "G'_{" + idx(3) + "}(z,\\zeta)";
  if (label.rfind("h'_", 0) == 0) return "h'_{" + idx(3) + "}(z,\\zeta)";
  return label;
}

void latex_section(std::ostringstream& os, const std::string& title, const std::vector<Entry>& v) {
  if (v.empty()) return;
  os << "% " << title << "\n\\begin{align*}\n";
  for (std::size_t i = 0; i < v.size(); ++i) {
    os << "  " << latex_label(v[i].label) << " &= " << latex(v[i].value);
    os << (i + 1 < v.size() ? " \\\\\n" : "\n");
  }
  os << "\\end{align*}\n";
}

}  // namespace

Overview build_overview(int k, int n, bool equivariant, const QMode& q_mode, const std::vector<Rational>& zeta) {
  PresentationSpec probe;
  probe.k = k;
  probe.n = n;
  probe.equivariant = equivariant;
  probe.q_mode = q_mode;
  probe.zeta_values = zeta;
  probe.validate();

  Overview o;
  o.k = k;
  o.n = n;
  o.equivariant = equivariant;
  o.q_mode = q_mode;
  o.space = standard_space(k, n, {}, equivariant, true, true);
  SymRing R = standard_ring(o.space, k, n, equivariant);
  Poly q = Poly::variable(o.space, names::q);
  Poly u = Poly::variable(o.space, names::u);
  Poly est = e_shift_tilde_eliminated(R);
  for (int l = 1; l <= n; ++l) {
    o.ghat.push_back({"ghat_" + std::to_string(l), "", g_hat_closed(R, l, q)});
    o.gtilde.push_back({"gtilde_" + std::to_string(l), "", g_tilde(R, l, q, u, est)});
  }

  auto spec_of = [&](Kind kind, bool eq, const QMode& mode) {
    PresentationSpec s = probe;
    s.kind = kind;
    s.equivariant = eq;
    s.q_mode = mode;
    if (!eq) s.zeta_values.clear();
    return s;
  };
  // The literal recursion on the first n-k relations, compared with the closed forms.
  auto coulomb = build_presentation(spec_of(Kind::kCoulomb, equivariant, QMode::aux()));
  auto shifted = build_presentation(spec_of(Kind::kWhitneyShifted, equivariant, QMode::aux()));
  auto hat_sol = solve_secondary(coulomb.generators, names::series(names::ehat, n - k));
  auto tilde_sol = solve_secondary(shifted.generators, names::series(names::etilde, n - k));
  const std::string Gname = equivariant ? "G'_" : "G_";
  const std::string hname = equivariant ? "h'_" : "h_";
  for (int l = 1; l <= n - k; ++l) {
    Poly hv = embed(hat_sol[l - 1], o.space);
    Poly tv = embed(tilde_sol[l - 1], o.space);
    Poly G = equivariant ? R.Gp(l) : R.G(l);
    Poly h = equivariant ? R.hp(l) : R.h(l);
    if (l % 2) {
      G = -G;
      h = -h;
    }
    if (hv != G || tv != h) throw Error("elimination does not match the closed form at l=" + std::to_string(l));
    o.elimination_hat.push_back({names::ehat(l), signed_name(l, Gname + std::to_string(l)), hv});
    o.elimination_tilde.push_back({names::etilde(l), signed_name(l, hname + std::to_string(l)), tv});
  }
  for (int l = n - k + 1; l <= n; ++l) {
    o.g_prime.push_back({"G'_" + std::to_string(l), deformed_display("G", l, n, equivariant), R.Gp(l)});
    o.h_prime.push_back({"h'_" + std::to_string(l), deformed_display("h", l, n, equivariant), R.hp(l)});
  }

  for (Kind kind : all_kinds()) {
    if (kind == Kind::kGk && equivariant) continue;
    o.presentations.push_back(build_presentation(spec_of(kind, equivariant, q_mode)));
  }
  return o;
}

std::string overview_text(const Overview& o) {
  std::ostringstream os;
  os << "Gr(" << o.k << ";" << o.n << "), " << (o.equivariant ? "equivariant" : "non-equivariant") << ", q-mode "
     << o.q_mode.str() << "\n";
  os << "variables:";
  for (const auto& v : o.space->names()) os << " " << v;
  os << "  (u = 1/(1-q))\n";
  text_section(os, "ghat", o.ghat);
  text_section(os, "gtilde, e_{n-k}(1 - ztilde) eliminated", o.gtilde);
  text_section(os, "elimination of zhat", o.elimination_hat);
  text_section(os, "elimination of ztilde", o.elimination_tilde);
  text_section(os, "deformed Grothendieck polynomials", o.g_prime);
  text_section(os, "deformed complete homogeneous polynomials", o.h_prime);
  for (const auto& p : o.presentations) {
    os << "\n[" << kind_name(p.spec.kind) << (p.spec.kind == Kind::kGk ? ", non-equivariant" : "") << "]\n";
    for (std::size_t i = 0; i < p.generators.size(); ++i)
      os << p.provenance[i] << ": " << to_string(p.generators[i]) << "\n";
  }
  return os.str();
}

std::string overview_latex(const Overview& o) {
  std::ostringstream os;
  os << "% Gr(" << o.k << ";" << o.n << "), " << (o.equivariant ? "equivariant" : "non-equivariant") << ", q-mode "
     << o.q_mode.str() << "\n";
  latex_section(os, "hat g", o.ghat);
  latex_section(os, "tilde g", o.gtilde);
  latex_section(os, "elimination of zhat", o.elimination_hat);
  latex_section(os, "elimination of ztilde", o.elimination_tilde);
  latex_section(os, "deformed Grothendieck polynomials", o.g_prime);
  latex_section(os, "deformed complete homogeneous polynomials", o.h_prime);
  for (const auto& p : o.presentations) os << latex_document(p);
  return os.str();
}

nlohmann::json overview_json(const Overview& o) {
  nlohmann::json j;
  j["schema"] = 1;
  j["k"] = o.k;
  j["n"] = o.n;
  j["kind"] = "all";
  j["equivariant"] = o.equivariant;
  j["q_mode"] = o.q_mode.str();
  j["variables"] = o.space->names();
  j["ghat"] = entries_json(o.ghat);
  j["gtilde"] = entries_json(o.gtilde);
  j["elimination"]["hat"] = entries_json(o.elimination_hat);
  j["elimination"]["tilde"] = entries_json(o.elimination_tilde);
  j["g_prime"] = entries_json(o.g_prime);
  j["h_prime"] = entries_json(o.h_prime);
  j["presentations"] = nlohmann::json::array();
  for (const auto& p : o.presentations) j["presentations"].push_back(p.to_json());
  return j;
}

}  // namespace qkgr::cli
