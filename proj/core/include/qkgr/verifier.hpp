#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "qkgr/groebner.hpp"
#include "qkgr/poly.hpp"

namespace qkgr {

enum class CheckMode { kAuto, kSymbolic, kNumeric };
std::string check_mode_name(CheckMode mode);
CheckMode parse_check_mode(std::string_view text);

struct VerifyOptions {
  CheckMode mode = CheckMode::kAuto;
  std::uint64_t seed = 1;
  int draws = 3;
  // Auto mode runs symbolically while the ideal ring has at most this many variables.
  std::size_t symbolic_max_vars = 12;
  GroebnerOptions groebner;
  const GroebnerCache* cache = nullptr;
};

struct CheckReport {
  std::string name;
  int k = 0;
  int n = 0;
  std::string mode;  // "exact", "symbolic", "numeric", "symbolic+numeric"
  bool passed = true;
  std::optional<std::string> witness;  // canonical form of the first nonzero residue
  nlohmann::json details = nlohmann::json::object();
  double seconds = 0;

  // Records a failure unless residue is zero; the first failure provides the witness.
  void expect_zero(const Poly& residue, const std::string& what);
  void fail(const std::string& what, const std::string& witness_text);
  nlohmann::json to_json() const;
};

// Cauchy identity for Grothendieck polynomials and the agreement of the two definitions of G_j,
// by expansion in explicit roots z_1..z_k.
CheckReport check_cauchy_grothendieck(int k_max, int l_max);
// sum (-1)^a h'_a e_b = e_l(zeta) and sum (-1)^a G'_a e_b = c'_{>=l}.
CheckReport check_cauchy_h(int k, int n);
// G = A H, G' = A H' + C^zeta, G^dagger - G', G^dagger = A H', E A = A' E.
CheckReport check_matrix_identities(int k, int n);
CheckReport check_aprt(int k, int n);
// Closed form of hat g_l against the independent oracle.
CheckReport check_g_hat(int k, int n);
// Literal recursion on the first n-k relations, both secondary variable families.
CheckReport check_elimination(int k, int n);
CheckReport check_key_and_inclusion(int k, int n, const VerifyOptions& options);
CheckReport check_presentation_equivalence(int k, int n, const VerifyOptions& options);
CheckReport check_gk_isomorphism(int k, int n, const VerifyOptions& options);
// All 1 <= i <= k.
CheckReport check_qdual_membership(int k, int n, const VerifyOptions& options);
CheckReport check_rank(int k, int n, const VerifyOptions& options);
CheckReport check_2d_limits(int k, int n);
// Gr(1;n): both eliminated presentations are +-(z^n - q) non-equivariantly.
CheckReport check_projective(int n);

// Sorted check names accepted by run_check.
const std::vector<std::string>& check_names();
bool check_applies(const std::string& name, int k, int n);
CheckReport run_check(const std::string& name, int k, int n, const VerifyOptions& options);

}  // namespace qkgr
