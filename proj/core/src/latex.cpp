#include <cctype>
#include <sstream>

#include "qkgr/presentations.hpp"

namespace qkgr {

namespace {

std::string latex_var(const std::string& name) {
  std::size_t p = name.size();
  while (p > 0 && std::isdigit(static_cast<unsigned char>(name[p - 1]))) --p;
  std::string prefix = name.substr(0, p);
  std::string idx = name.substr(p);
  if (name == "q") return "q";
  if (name == "u") return "\\frac{1}{1-q}";
  if (name == "q2d") return "q_{2d}";
  if (idx.empty()) return name;
  if (prefix == "e") return "e_{" + idx + "}(z)";
  if (prefix == "ehat") return "e_{" + idx + "}(\\hat{z})";
  if (prefix == "etilde") return "e_{" + idx + "}(\\tilde{z})";
  if (prefix == "ezeta") return "e_{" + idx + "}(\\zeta)";
  if (prefix == "eX") return "e_{" + idx + "}(X)";
  if (prefix == "eXt") return "e_{" + idx + "}(\\tilde{X})";
  if (prefix == "eT") return "e_{" + idx + "}(T)";
  if (prefix == "zeta") return "\\zeta_{" + idx + "}";
  if (prefix == "sigma") return "\\sigma_{" + idx + "}";
  if (prefix == "sigmahat") return "\\hat{\\sigma}_{" + idx + "}";
  return prefix + "_{" + idx + "}";
}

std::string latex_rational(const Rational& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return "\\frac{" + r.get_num().get_str() + "}{" + r.get_den().get_str() + "}";
}

}  // namespace

std::string latex(const Poly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : p.terms()) {
    Rational a = abs(c);
    if (first) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    first = false;
    std::string mono;
    for (std::size_t i = 0; i < p.space()->size(); ++i) {
      if (m[i] == 0) continue;
      std::string v = latex_var(p.space()->var(i).name);
      bool wrap = v.find('(') != std::string::npos || v.rfind("\\frac", 0) == 0;
      if (m[i] > 1) {
        v = (wrap ? "\\left(" + v + "\\right)" : v) + "^{" + std::to_string(m[i]) + "}";
      }
      if (!mono.empty()) mono += " ";
      mono += v;
    }
    if (mono.empty()) {
      out += latex_rational(a);
    } else if (a == 1) {
      out += mono;
    } else {
      out += latex_rational(a) + " " + mono;
    }
  }
  return out;
}

namespace {

// The relation a generator comes from, in conventional notation.
std::string latex_relation(const PresentationSpec& s, std::size_t index) {
  const int i = static_cast<int>(index) + 1;
  const std::string l = std::to_string(i);
  const std::string row = std::to_string(s.n - s.k + i);
  switch (s.kind) {
    case Kind::kWhitney:
      return "[y^{" + l + "}]\\;\\lambda_y(S)\\,\\lambda_y(Q) = \\lambda_y(\\mathbb{C}^n)";
    case Kind::kWhitneyShifted:
      return "\\sum_{i+j=" + l + "} e_i(z) e_j(\\tilde{z}) = \\tilde{g}_{" + l + "}";
    case Kind::kCoulomb:
      return "\\sum_{i+j=" + l + "} e_i(z) e_j(\\hat{z}) = \\hat{g}_{" + l + "}";
    case Kind::kEliminatedTilde:
      return "\\tilde{g}_{" + row + "} = (E H')_{" + l + "} + e_{" + row + "}(\\zeta)";
    case Kind::kEliminatedHat:
      return "\\hat{g}_{" + row + "} = (E G')_{" + l + "} + c'_{\\ge " + row + "}";
    case Kind::kGk:
      return "[\\xi^{" + l + "}]";
  }
  return "";
}

}  // namespace

std::string latex_document(const GeneratorList& list) {
  std::ostringstream os;
  const auto& s = list.spec;
  os << "% Gr(" << s.k << ";" << s.n << "), " << kind_name(s.kind) << ", "
     << (s.equivariant ? "equivariant" : "non-equivariant") << ", q-mode " << s.q_mode.str() << "\n";
  os << "\\begin{align*}\n";
  for (std::size_t i = 0; i < list.generators.size(); ++i) {
    os << "  0 &= " << latex(list.generators[i]) << " && " << latex_relation(s, i);
    os << (i + 1 < list.generators.size() ? " \\\\\n" : "\n");
  }
  os << "\\end{align*}\n";
  return os.str();
}

}  // namespace qkgr
