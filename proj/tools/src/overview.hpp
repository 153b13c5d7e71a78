#pragma once

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "qkgr/presentations.hpp"

namespace qkgr::cli {

struct Entry {
  std::string label;    // e.g. "ghat_4", "ehat1"
  std::string display;  // symbolic form, e.g. "-G'_1" or "G_4 - G_3*ezeta1 + ..."; may be empty
  Poly value;
};

// Everything the summary of one Grassmannian lists: hat and tilde polynomials,
// the elimination of the secondary variables, the deformed Grothendieck polynomials used
// by the eliminated presentations, and the generator lists of every presentation.
struct Overview {
  int k = 0;
  int n = 0;
  bool equivariant = true;
  QMode q_mode;
  VarSpacePtr space;  // e, ezeta, q, u
  std::vector<Entry> ghat;
  std::vector<Entry> gtilde;  // with e_{n-k}(1 - ztilde) eliminated
  std::vector<Entry> elimination_hat;
  std::vector<Entry> elimination_tilde;
  std::vector<Entry> g_prime;
  std::vector<Entry> h_prime;
  std::vector<GeneratorList> presentations;
};

Overview build_overview(int k, int n, bool equivariant, const QMode& q_mode, const std::vector<Rational>& zeta);

std::string overview_text(const Overview& o);
std::string overview_latex(const Overview& o);
nlohmann::json overview_json(const Overview& o);

}  // namespace qkgr::cli
