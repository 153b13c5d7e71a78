#include "qkgr/varspace.hpp"

#include <algorithm>
#include <set>

#include "qkgr/errors.hpp"

namespace qkgr {

std::uint64_t fnv1a(std::string_view data, std::uint64_t seed) {
  std::uint64_t h = seed;
  for (unsigned char c : data) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

VarSpace::VarSpace(std::vector<VarInfo> vars) : vars_(std::move(vars)) {
  if (vars_.size() > kMaxVars) {
    throw InvalidArgument("variable space exceeds " + std::to_string(kMaxVars) + " variables");
  }
  std::set<std::string> seen;
  std::string canon;
  for (const auto& v : vars_) {
    if (v.name.empty()) throw InvalidArgument("empty variable name");
    if (!seen.insert(v.name).second) throw InvalidArgument("duplicate variable name: " + v.name);
    if (v.degree < 0 || v.block < 0) throw InvalidArgument("negative degree or block for " + v.name);
    canon += v.name + ":" + std::to_string(v.degree) + ":" + std::to_string(v.block) + ";";
  }
  fingerprint_ = fnv1a(canon);
}

VarSpacePtr VarSpace::create(std::vector<VarInfo> vars) {
  return std::make_shared<const VarSpace>(std::move(vars));
}

VarSpacePtr VarSpace::of_names(const std::vector<std::string>& names) {
  std::vector<VarInfo> vars;
  for (const auto& n : names) vars.push_back({n, 1, 0});
  return create(std::move(vars));
}

std::vector<std::string> VarSpace::names() const {
  std::vector<std::string> out;
  for (const auto& v : vars_) out.push_back(v.name);
  return out;
}

std::optional<std::size_t> VarSpace::find(std::string_view name) const {
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    if (vars_[i].name == name) return i;
  }
  return std::nullopt;
}

std::size_t VarSpace::index(std::string_view name) const {
  auto i = find(name);
  if (!i) throw InvalidArgument("unknown variable: " + std::string(name));
  return *i;
}

int VarSpace::num_blocks() const {
  int b = 0;
  for (const auto& v : vars_) b = std::max(b, v.block + 1);
  return b;
}

bool VarSpace::same_as(const VarSpace& other) const {
  if (this == &other) return true;
  if (vars_.size() != other.vars_.size() || fingerprint_ != other.fingerprint_) return false;
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    const auto& a = vars_[i];
    const auto& b = other.vars_[i];
    if (a.name != b.name || a.degree != b.degree || a.block != b.block) return false;
  }
  return true;
}

VarSpacePtr VarSpace::without(const std::vector<std::string>& names) const {
  std::vector<VarInfo> kept;
  for (const auto& v : vars_) {
    if (std::find(names.begin(), names.end(), v.name) == names.end()) kept.push_back(v);
  }
  return create(std::move(kept));
}

VarSpacePtr VarSpace::with(const std::vector<VarInfo>& extra) const {
  auto all = vars_;
  for (const auto& v : extra) {
    if (!contains(v.name)) all.push_back(v);
  }
  return create(std::move(all));
}

bool same_space(const VarSpacePtr& a, const VarSpacePtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return a->same_as(*b);
}

}  // namespace qkgr
