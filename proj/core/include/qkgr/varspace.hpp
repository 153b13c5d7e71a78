#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace qkgr {

inline constexpr std::size_t kMaxVars = 32;

struct VarInfo {
  std::string name;
  int degree = 1;  // filtration degree
  int block = 0;   // block index for block term orders, 0 is eliminated first
};

class VarSpace;
using VarSpacePtr = std::shared_ptr<const VarSpace>;

// Ordered, immutable list of named variables. Polynomials share a space by pointer.
class VarSpace {
 public:
  explicit VarSpace(std::vector<VarInfo> vars);

  static VarSpacePtr create(std::vector<VarInfo> vars);
  // All variables in block 0 with degree 1.
  static VarSpacePtr of_names(const std::vector<std::string>& names);

  std::size_t size() const { return vars_.size(); }
  const VarInfo& var(std::size_t i) const { return vars_.at(i); }
  const std::vector<VarInfo>& vars() const { return vars_; }
  std::vector<std::string> names() const;

  std::optional<std::size_t> find(std::string_view name) const;
  std::size_t index(std::string_view name) const;  // throws InvalidArgument
  bool contains(std::string_view name) const { return find(name).has_value(); }

  int num_blocks() const;
  std::uint64_t fingerprint() const { return fingerprint_; }
  bool same_as(const VarSpace& other) const;

  // New space with the listed variables removed.
  VarSpacePtr without(const std::vector<std::string>& names) const;
  // New space with extra variables appended (names already present are skipped).
  VarSpacePtr with(const std::vector<VarInfo>& extra) const;

 private:
  std::vector<VarInfo> vars_;
  std::uint64_t fingerprint_ = 0;
};

bool same_space(const VarSpacePtr& a, const VarSpacePtr& b);

// FNV-1a, used for fingerprints throughout.
std::uint64_t fnv1a(std::string_view data, std::uint64_t seed = 1469598103934665603ull);

}  // namespace qkgr
