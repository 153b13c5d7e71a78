#pragma once

#include <functional>
#include <map>
#include <mutex>
#include <string>
#include <string_view>
#include <vector>

#include "qkgr/poly.hpp"

namespace qkgr {

class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);  // throws unless weakly decreasing, nonnegative
  static Partition hook(int arm, int legs);     // (arm, 1^legs)

  const std::vector<int>& parts() const { return parts_; }
  int length() const { return static_cast<int>(parts_.size()); }
  int size() const;
  int operator[](int i) const { return i < length() ? parts_[i] : 0; }
  std::string str() const;
  bool operator==(const Partition& o) const = default;

 private:
  std::vector<int> parts_;  // trailing zeros removed
};

enum class RootEncoding { kExplicit, kElementary, kZero };

// How a block of roots (z or zeta) is represented inside a VarSpace: by the individual
// roots, by surrogates for their elementary symmetric polynomials, or identically zero.
struct RootBlock {
  RootEncoding encoding = RootEncoding::kZero;
  int count = 0;
  std::vector<std::string> names;  // root names, or e_1..e_count surrogate names

  static RootBlock explicit_roots(const std::string& prefix, int count);
  static RootBlock elementary(const std::string& prefix, int count);
  static RootBlock zero(int count);
};

// Symmetric functions in z = (z_1..z_k) and zeta = (zeta_1..zeta_n) over a fixed VarSpace.
// All families are memoized; lookups are thread-safe.
class SymRing {
 public:
  SymRing(VarSpacePtr space, int k, int n, RootBlock z, RootBlock zeta);

  const VarSpacePtr& space() const { return space_; }
  int k() const { return k_; }
  int n() const { return n_; }
  const RootBlock& z_block() const { return z_; }
  const RootBlock& zeta_block() const { return zeta_; }

  Poly zero() const { return Poly(space_); }
  Poly one() const { return Poly::constant(space_, 1); }

  Poly e(int i) const;       // e_i(z)
  Poly e_zeta(int i) const;  // e_i(zeta)
  Poly h(int j) const;
  Poly schur(const Partition& lambda) const;
  Poly G(int j) const;         // row Grothendieck via hook Schur expansion
  Poly G_via_h(int j) const;   // row Grothendieck via alternating h/e sum
  Poly Gcol(int j) const;      // column Grothendieck G_{1^j}
  Poly hp(int j) const;        // h'_j
  Poly Gp(int j) const;        // G'_j
  Poly G_dagger(int j) const;  // alternating h'/e sum

  Poly c() const;             // prod (1 - z_i)
  Poly c_le(int j) const;
  Poly c_ge(int j) const;
  Poly c_zeta() const;        // prod (1 - zeta_i)
  Poly c_zeta_le(int j) const;
  Poly c_zeta_ge(int j) const;
  Poly cp_ge(int l) const;    // c'_{>= l}

  // Family lookup by key: e, ezeta, h, s, G, Gcol, hp, Gp, cge, cpge.
  Poly family(std::string_view key, const std::vector<int>& indices) const;
  static bool is_family(std::string_view key);

 private:
  Poly memo(const std::string& key, const std::function<Poly()>& compute) const;
  Poly elementary_of(const RootBlock& block, int i, const char* tag) const;

  VarSpacePtr space_;
  int k_;
  int n_;
  RootBlock z_;
  RootBlock zeta_;
  mutable std::mutex mutex_;
  mutable std::map<std::string, Poly> cache_;
};

// e_i of explicit variables (by name) inside p's space.
Poly elementary_explicit(const VarSpacePtr& space, const std::vector<std::string>& roots, int i);

// Rewrites p, symmetric in the listed roots, as a polynomial in surrogates e_names[i-1] = e_i(roots).
// Other variables are carried by name into target. Throws NotSymmetric.
Poly express_in_e_basis(const Poly& p, const std::vector<std::string>& roots,
                        const std::vector<std::string>& e_names, const VarSpacePtr& target);

// e_i(1 - x_1, ..., 1 - x_m) = sum_s (-1)^s binom(m - s, i - s) e_s(x), with e_s(x) supplied.
Poly e_of_shifted(int i, int m, const std::function<Poly(int)>& e_x);

}  // namespace qkgr
