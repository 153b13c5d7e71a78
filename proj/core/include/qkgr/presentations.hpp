#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "qkgr/matrix.hpp"
#include "qkgr/poly.hpp"
#include "qkgr/symfunc.hpp"

namespace qkgr {

enum class Kind { kWhitney, kWhitneyShifted, kCoulomb, kEliminatedTilde, kEliminatedHat, kGk };

std::string kind_name(Kind kind);
Kind parse_kind(std::string_view name);
const std::vector<Kind>& all_kinds();

// How the unit 1/(1-q) is realized.
struct QMode {
  enum class Type { kAuxInverse, kNumeric, kCleared };
  Type type = Type::kCleared;
  Rational value;  // q0 for numeric mode

  static QMode aux() { return {Type::kAuxInverse, 0}; }
  static QMode cleared() { return {Type::kCleared, 0}; }
  static QMode numeric(const Rational& q0) { return {Type::kNumeric, q0}; }
  static QMode parse(std::string_view text);  // "aux", "cleared", "numeric:1/3"
  std::string str() const;
};

struct PresentationSpec {
  int k = 1;
  int n = 2;
  Kind kind = Kind::kCoulomb;
  bool equivariant = true;
  QMode q_mode;
  // When nonempty (size n), the equivariant parameters zeta_i are bound to these values.
  std::vector<Rational> zeta_values;

  void validate() const;
  bool symbolic_zeta() const { return equivariant && zeta_values.empty(); }
};

struct GeneratorList {
  PresentationSpec spec;
  VarSpacePtr space;
  std::vector<Poly> generators;
  std::vector<std::string> provenance;

  // Generators plus u(1-q)-1 in aux-inverse mode.
  std::vector<Poly> ideal_generators() const;
  nlohmann::json to_json() const;
};

// Variable naming shared by every presentation space.
namespace names {
std::string e(int i);       // e_i(z)          "e1"
std::string ehat(int i);    // e_i(zhat)       "ehat1"
std::string etilde(int i);  // e_i(ztilde)     "etilde1"
std::string ezeta(int i);   // e_i(zeta)       "ezeta1"
std::string eX(int i);      // e_i(X)          "eX1"
std::string eXt(int i);     // e_i(Xtilde)     "eXt1"
std::string eT(int i);      // e_i(T)          "eT1"
std::string H(int i);       // abstract H_i    "H1"
std::string E(int i);       // abstract E_i    "E1"
inline constexpr const char* q = "q";
inline constexpr const char* u = "u";
std::vector<std::string> series(std::string (*f)(int), int count);
}  // namespace names

// The space e1..ek, [extra block], ezeta1..ezetan, q, [u] with the standard degrees and blocks.
VarSpacePtr standard_space(int k, int n, const std::vector<std::string>& secondary, bool zeta, bool q, bool u);
// SymRing on a space built by standard_space (or any space with e*/ezeta* surrogates).
SymRing standard_ring(const VarSpacePtr& space, int k, int n, bool zeta);

// hat g_l in closed form; q must live in R's space.
Poly g_hat_closed(const SymRing& R, int l, const Poly& q);
// tilde g_l with the factor e_{n-k}(1 - ztilde) supplied; u stands for 1/(1-q).
Poly g_tilde(const SymRing& R, int l, const Poly& q, const Poly& u, const Poly& e_shift_tilde);
// Same element built from the Delta_i form with e_i(1 - z) expanded.
Poly g_tilde_delta_form(const SymRing& R, int l, const Poly& q, const Poly& u, const Poly& e_shift_tilde);
// e_{n-k}(1 - ztilde) after eliminating ztilde: sum_{s <= n-k} h'_s.
Poly e_shift_tilde_eliminated(const SymRing& R);

// Independent derivation of hat g_1..hat g_n from the symmetrized vacuum equation.
// Result lives in standard_space(k, n, {}, true, true, false).
std::vector<Poly> g_hat_oracle(int k, int n);

// Matrices and columns used by the elimination theorems. All k x k or k x 1.
namespace mat {
PolyMatrix E(const SymRing& R);
PolyMatrix A(const SymRing& R);
PolyMatrix A_prime(const SymRing& R);
PolyMatrix H(const SymRing& R);
PolyMatrix G(const SymRing& R);
PolyMatrix H_prime(const SymRing& R);
PolyMatrix G_prime(const SymRing& R);
PolyMatrix G_dagger(const SymRing& R);
PolyMatrix C_zeta(const SymRing& R);      // (c^zeta_{>=n-k+2}, ..., c^zeta_{>=n}, 0)
PolyMatrix C_z_zeta(const SymRing& R);    // (c'_{>=n-k+1}, ..., c'_{>=n})
PolyMatrix E_zeta(const SymRing& R);      // (e_{n-k+1}(zeta), ..., e_n(zeta))
PolyMatrix binom_column(const SymRing& R);        // (binom(k-1, k-i))_i
PolyMatrix shifted_binom_column(const SymRing& R);  // (binom(k, i) - e_i(z))_i
PolyMatrix R_hat(const SymRing& R, const Poly& q);
PolyMatrix R_tilde(const SymRing& R, const Poly& q, const Poly& u, const Poly& e_shift_tilde);
}  // namespace mat

GeneratorList build_presentation(const PresentationSpec& spec);

// Generators of the GK presentation read off the coefficient display, and the same generators
// obtained by expanding the cleared generating-series identity. Both in H1.., E1.., q.
std::vector<Poly> gk_generators_coefficients(int k, int n, const VarSpacePtr& space);
std::vector<Poly> gk_generators_series(int k, int n, const VarSpacePtr& space);
VarSpacePtr gk_space(int k, int n);

// Solves the first n-k linear relations successively for the secondary surrogates.
// gens[l-1] must contain secondary[l-1] with coefficient 1.
std::vector<Poly> solve_secondary(const std::vector<Poly>& gens, const std::vector<std::string>& secondary);

// Multiplies generators by (1-q), replaces u, or substitutes q0 according to the mode.
Poly realize_q(const Poly& p, const QMode& mode, const VarSpacePtr& target);

// Two-dimensional limit.
enum class LimitConvention { kChernRoots, kLiteral };
struct LimitResult {
  int power = -1;  // lowest surviving power of L
  Poly coefficient;
};
VarSpacePtr limit_space(int k, int n, int secondary);
// p may use e*, ehat*, etilde*, ezeta*, eX*, eXt*, eT*, q, u and explicit z*, zeta*.
LimitResult limit_2d(const Poly& p, int k, int n, int order = -1,
                     LimitConvention convention = LimitConvention::kChernRoots);

// LaTeX rendering with the conventional symbol names.
std::string latex(const Poly& p);
std::string latex_document(const GeneratorList& list);

}  // namespace qkgr
