#include <map>

#include "qkgr/groebner.hpp"

namespace qkgr {

TermOrder TermOrder::grevlex(const VarSpace& space) {
  TermOrder o;
  o.kind_ = Kind::kGrevlex;
  o.blocks_.emplace_back();
  for (std::size_t i = 0; i < space.size(); ++i) o.blocks_.back().push_back(i);
  return o;
}

TermOrder TermOrder::lex(const VarSpace& space) {
  TermOrder o;
  o.kind_ = Kind::kLex;
  for (std::size_t i = 0; i < space.size(); ++i) o.blocks_.push_back({i});
  return o;
}

TermOrder TermOrder::block(const VarSpace& space) {
  TermOrder o;
  o.kind_ = Kind::kBlock;
  std::map<int, std::vector<std::size_t>> by_block;
  for (std::size_t i = 0; i < space.size(); ++i) by_block[space.var(i).block].push_back(i);
  for (auto& [b, vars] : by_block) o.blocks_.push_back(std::move(vars));
  return o;
}

int TermOrder::compare(const Monomial& a, const Monomial& b) const {
  for (const auto& blk : blocks_) {
    unsigned da = 0, db = 0;
    for (auto i : blk) {
      da += a[i];
      db += b[i];
    }
    if (da != db) return da < db ? -1 : 1;
    for (auto it = blk.rbegin(); it != blk.rend(); ++it) {
      if (a[*it] != b[*it]) return a[*it] < b[*it] ? 1 : -1;
    }
  }
  return 0;
}

std::string TermOrder::name() const {
  switch (kind_) {
    case Kind::kGrevlex:
      return "grevlex";
    case Kind::kLex:
      return "lex";
    case Kind::kBlock: {
      std::string s = "block(";
      for (std::size_t b = 0; b < blocks_.size(); ++b) {
        if (b) s += "|";
        for (std::size_t j = 0; j < blocks_[b].size(); ++j) {
          if (j) s += ",";
          s += std::to_string(blocks_[b][j]);
        }
      }
      return s + ")";
    }
  }
  return "?";
}

}  // namespace qkgr
