#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "qkgr/poly.hpp"

namespace qkgr {

// Monomial order built from consecutive blocks, graded reverse lex inside each block.
// grevlex is one block, lex is one block per variable.
class TermOrder {
 public:
  enum class Kind { kGrevlex, kLex, kBlock };

  static TermOrder grevlex(const VarSpace& space);
  static TermOrder lex(const VarSpace& space);
  // Blocks taken from VarInfo::block, lower block index compares first.
  static TermOrder block(const VarSpace& space);

  Kind kind() const { return kind_; }
  // <0 if a < b, 0 if equal, >0 if a > b.
  int compare(const Monomial& a, const Monomial& b) const;
  bool greater(const Monomial& a, const Monomial& b) const { return compare(a, b) > 0; }
  std::string name() const;
  const std::vector<std::vector<std::size_t>>& blocks() const { return blocks_; }

 private:
  Kind kind_ = Kind::kGrevlex;
  std::vector<std::vector<std::size_t>> blocks_;
};

struct GroebnerOptions {
  std::size_t max_pairs = 1000000;  // S-pair budget, exceeded -> ResourceLimit
};

struct GroebnerStats {
  std::size_t pairs_considered = 0;
  std::size_t pairs_reduced = 0;
  std::size_t zero_reductions = 0;
};

class GroebnerBasis {
 public:
  GroebnerBasis(VarSpacePtr space, TermOrder order, std::vector<Poly> monic_basis, std::uint64_t fingerprint);

  const VarSpacePtr& space() const { return space_; }
  const TermOrder& order() const { return order_; }
  const std::vector<Poly>& generators() const { return basis_; }
  std::uint64_t fingerprint() const { return fingerprint_; }
  const GroebnerStats& stats() const { return stats_; }
  void set_stats(const GroebnerStats& s) { stats_ = s; }

  Poly normal_form(const Poly& p) const;
  bool contains(const Poly& p) const { return normal_form(p).is_zero(); }
  bool is_unit_ideal() const;
  std::vector<Monomial> leading_monomials() const;
  // Number of standard monomials; nullopt when infinite.
  std::optional<long> quotient_dimension() const;
  Monomial leading_monomial(const Poly& p) const;

 private:
  VarSpacePtr space_;
  TermOrder order_;
  std::vector<Poly> basis_;
  std::vector<Monomial> leads_;
  std::uint64_t fingerprint_;
  GroebnerStats stats_;
};

std::uint64_t ideal_fingerprint(const std::vector<Poly>& gens, const TermOrder& order);

GroebnerBasis groebner(const std::vector<Poly>& gens, const TermOrder& order, const GroebnerOptions& options = {});

bool ideal_contains(const GroebnerBasis& basis, const Poly& p);
// Mutual containment. Both generator lists must share a space.
bool ideal_equal(const std::vector<Poly>& I, const std::vector<Poly>& J, const TermOrder& order,
                 const GroebnerOptions& options = {});

// On-disk cache of reduced bases keyed by ideal fingerprint. Readers may run concurrently;
// writes go through a temporary file and an atomic rename.
class GroebnerCache {
 public:
  explicit GroebnerCache(std::filesystem::path dir);
  // QKGR_CACHE_DIR if set, else ~/.cache/qkgr (or ./.qkgr-cache without HOME).
  static GroebnerCache from_env();

  const std::filesystem::path& dir() const { return dir_; }
  std::optional<GroebnerBasis> load(const std::vector<Poly>& gens, const TermOrder& order) const;
  std::vector<std::filesystem::path> entries() const;
  std::size_t clear() const;

  std::filesystem::path path_for(std::uint64_t fingerprint) const;

 private:
  std::filesystem::path dir_;
};

// Uses the cache when given; computes and stores on a miss.
GroebnerBasis groebner_cached(const std::vector<Poly>& gens, const TermOrder& order, const GroebnerCache* cache,
                              const GroebnerOptions& options = {});

std::string hex64(std::uint64_t v);

}  // namespace qkgr
