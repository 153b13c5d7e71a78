#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "qkgr/poly.hpp"
#include "qkgr/presentations.hpp"

namespace qkgr::expr {

// Grammar (whitespace between tokens is ignored):
//
//   expr    = [ "+" | "-" ] term { ( "+" | "-" ) term } ;
//   term    = factor { "*" factor } ;
//   factor  = base [ "^" uint ] ;
//   base    = literal | name "[" uint { "," uint } "]" | variable | "(" expr ")" ;
//   literal = uint [ "/" uint ] ;
//
// name is one of e ezeta h s G Gcol hp Gp Gdagger cge cpge ghat gtilde; a variable is
// z_i, zeta_i, zhat_i, ztilde_i (underscore optional), q, u or a variable of the presentation.
struct Node {
  enum class Type { kSum, kProduct, kPower, kNumber, kFamily, kVariable };

  Type type = Type::kNumber;
  std::size_t position = 0;  // offset of the first character in the source
  std::vector<Node> children;
  std::vector<bool> negated;  // kSum: sign of each child
  Rational value;             // kNumber
  unsigned exponent = 1;      // kPower
  std::string name;           // kFamily, kVariable
  std::vector<int> indices;   // kFamily

  // Structural equality, ignoring positions.
  bool operator==(const Node& o) const;
  std::size_t size() const;  // number of nodes
};

Node parse(std::string_view source);
std::string print(const Node& node);

const std::vector<std::string>& family_names();

struct Elaboration {
  Poly value;  // in the presentation's space
  std::vector<std::string> warnings;
};

// Evaluates the tree in the ring of the given presentation: families become symmetric
// functions in z (and zeta), explicit roots are rewritten in the elementary surrogates,
// and everything is mapped into the presentation's variables (e.g. e_i(X) for whitney).
Elaboration elaborate(const Node& node, const GeneratorList& presentation);

}  // namespace qkgr::expr
