#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qkgr/poly.hpp"

namespace qkgr {

// A seeded generic point for the equivariant parameters and q.
struct NumericPoint {
  std::uint64_t seed = 0;
  std::vector<Rational> zeta;  // zeta_1..zeta_n
  Rational q;                  // never 0 or 1

  std::vector<Rational> e_zeta() const;  // e_0..e_n of zeta
  std::vector<Rational> e_T() const;     // e_0..e_n of 1 - zeta
  std::string str() const;
};

// Small rationals (numerators in [-9, 9] without 0, denominators in [1, 7]) from a 64-bit
// Mersenne twister; identical on every platform.
NumericPoint draw_point(int n, std::uint64_t seed);
std::vector<NumericPoint> draw_points(int n, std::uint64_t base_seed, int count);

// Binds q, u = 1/(1-q), ezeta*/eT* surrogates and explicit zeta* roots present in p's space;
// the remaining variables are carried into target by name.
Poly specialize(const Poly& p, const NumericPoint& pt, const VarSpacePtr& target, bool bind_q = true);
// p's space minus every variable specialize() would bind.
VarSpacePtr specialized_space(const VarSpacePtr& space, bool bind_q = true);

}  // namespace qkgr
