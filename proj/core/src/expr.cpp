#include "qkgr/expr.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <optional>

#include "qkgr/errors.hpp"
#include "qkgr/symfunc.hpp"

namespace qkgr::expr {

bool Node::operator==(const Node& o) const {
  return type == o.type && children == o.children && negated == o.negated && value == o.value &&
         exponent == o.exponent && name == o.name && indices == o.indices;
}

std::size_t Node::size() const {
  std::size_t s = 1;
  for (const auto& c : children) s += c.size();
  return s;
}

const std::vector<std::string>& family_names() {
  static const std::vector<std::string> names = {"G",   "Gcol", "Gdagger", "Gp", "cge",  "cpge",  "e",
                                                 "ezeta", "ghat", "gtilde", "h",  "hp",   "s"};
  return names;
}

namespace {

// ---------------------------------------------------------------- lexer

struct Token {
  enum class Kind { kNumber, kIdent, kSymbol, kEnd };
  Kind kind = Kind::kEnd;
  std::string text;
  std::size_t position = 0;
};

std::vector<Token> lex(std::string_view src) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < src.size()) {
    char c = src[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    Token t;
    t.position = i;
    if (std::isdigit(static_cast<unsigned char>(c))) {
      t.kind = Token::Kind::kNumber;
      while (i < src.size() && std::isdigit(static_cast<unsigned char>(src[i]))) t.text += src[i++];
    } else if (std::isalpha(static_cast<unsigned char>(c))) {
      t.kind = Token::Kind::kIdent;
      while (i < src.size() && (std::isalnum(static_cast<unsigned char>(src[i])) || src[i] == '_')) t.text += src[i++];
    } else if (std::string_view("+-*^()[],/").find(c) != std::string_view::npos) {
      t.kind = Token::Kind::kSymbol;
      t.text = std::string(1, c);
      ++i;
    } else {
      throw ParseError(i, "a number, name or operator", std::string("'") + c + "'");
    }
    out.push_back(std::move(t));
  }
  Token end;
  end.position = src.size();
  out.push_back(end);
  return out;
}

// ---------------------------------------------------------------- parser

class Parser {
 public:
  explicit Parser(std::string_view src) : tokens_(lex(src)) {}

  Node parse_all() {
    Node n = expr();
    if (peek().kind != Token::Kind::kEnd) throw error("an operator or end of input");
    return n;
  }

 private:
  const Token& peek() const { return tokens_[pos_]; }
  bool at_symbol(const char* s) const { return peek().kind == Token::Kind::kSymbol && peek().text == s; }
  Token take() { return tokens_[pos_++]; }

  ParseError error(const std::string& expected) const {
    const Token& t = peek();
    std::string found = t.kind == Token::Kind::kEnd ? "end of input" : "'" + t.text + "'";
    return ParseError(t.position, expected, found);
  }

  void expect(const char* s) {
    if (!at_symbol(s)) throw error(std::string("'") + s + "'");
    take();
  }

  unsigned uint_token(const std::string& what) {
    if (peek().kind != Token::Kind::kNumber) throw error(what);
    Token t = take();
    if (t.text.size() > 9) throw ParseError(t.position, "an integer below 10^9", t.text);
    return static_cast<unsigned>(std::stoul(t.text));
  }

  Node expr() {
    Node sum;
    sum.type = Node::Type::kSum;
    sum.position = peek().position;
    bool neg = false;
    if (at_symbol("+") || at_symbol("-")) neg = take().text == "-";
    sum.children.push_back(term());
    sum.negated.push_back(neg);
    while (at_symbol("+") || at_symbol("-")) {
      neg = take().text == "-";
      sum.children.push_back(term());
      sum.negated.push_back(neg);
    }
    if (sum.children.size() == 1 && !sum.negated[0]) return std::move(sum.children[0]);
    return sum;
  }

  Node term() {
    Node prod;
    prod.type = Node::Type::kProduct;
    prod.position = peek().position;
    prod.children.push_back(factor());
    while (at_symbol("*")) {
      take();
      prod.children.push_back(factor());
    }
    if (prod.children.size() == 1) return std::move(prod.children[0]);
    return prod;
  }

  Node factor() {
    Node b = base();
    if (!at_symbol("^")) return b;
    take();
    Node p;
    p.type = Node::Type::kPower;
    p.position = b.position;
    p.exponent = uint_token("an unsigned integer exponent");
    p.children.push_back(std::move(b));
    return p;
  }

  Node base() {
    const Token& t = peek();
    if (t.kind == Token::Kind::kNumber) {
      Node n;
      n.type = Node::Type::kNumber;
      n.position = t.position;
      Integer num(take().text);
      Integer den = 1;
      if (at_symbol("/")) {
        take();
        std::size_t at = peek().position;
        if (peek().kind != Token::Kind::kNumber) throw error("a denominator");
        den = Integer(take().text);
        if (den == 0) throw ParseError(at, "a nonzero denominator", "0");
      }
      n.value = Rational(num, den);
      n.value.canonicalize();
      return n;
    }
    if (t.kind == Token::Kind::kIdent) {
      Node n;
      n.position = t.position;
      n.name = take().text;
      if (!at_symbol("[")) {
        n.type = Node::Type::kVariable;
        return n;
      }
      const auto& fams = family_names();
      if (std::find(fams.begin(), fams.end(), n.name) == fams.end())
        throw ParseError(n.position, "a family name (e, h, s, G, Gcol, hp, Gp, ...)", "'" + n.name + "'");
      n.type = Node::Type::kFamily;
      take();
      n.indices.push_back(static_cast<int>(uint_token("an index")));
      while (at_symbol(",")) {
        take();
        n.indices.push_back(static_cast<int>(uint_token("an index")));
      }
      expect("]");
      return n;
    }
    if (at_symbol("(")) {
      take();
      Node inner = expr();
      expect(")");
      return inner;
    }
    throw error("a number, name or '('");
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
};

// ---------------------------------------------------------------- printer

enum class Ctx { kTop, kSumTerm, kFactor, kPowerBase };

std::string print_in(const Node& n, Ctx ctx) {
  switch (n.type) {
    case Node::Type::kNumber:
      if (ctx == Ctx::kPowerBase && n.value.get_den() != 1) return "(" + n.value.get_str() + ")";
      return n.value.get_str();
    case Node::Type::kVariable:
      return n.name;
    case Node::Type::kFamily: {
      std::string s = n.name + "[";
      for (std::size_t i = 0; i < n.indices.size(); ++i) s += (i ? "," : "") + std::to_string(n.indices[i]);
      return s + "]";
    }
    case Node::Type::kPower: {
      std::string s = print_in(n.children[0], Ctx::kPowerBase) + "^" + std::to_string(n.exponent);
      return ctx == Ctx::kPowerBase ? "(" + s + ")" : s;
    }
    case Node::Type::kProduct: {
      std::string s;
      for (std::size_t i = 0; i < n.children.size(); ++i) s += (i ? "*" : "") + print_in(n.children[i], Ctx::kFactor);
      return ctx == Ctx::kPowerBase ? "(" + s + ")" : s;
    }
    case Node::Type::kSum: {
      std::string s;
      for (std::size_t i = 0; i < n.children.size(); ++i) {
        if (i) s += n.negated[i] ? " - " : " + ";
        else if (n.negated[i]) s += "-";
        s += print_in(n.children[i], Ctx::kSumTerm);
      }
      return ctx == Ctx::kTop ? s : "(" + s + ")";
    }
  }
  return "";
}

// ---------------------------------------------------------------- elaboration

std::optional<std::pair<std::string, int>> split_indexed(const std::string& name, const std::vector<std::string>& prefixes) {
  // Longest prefix first so that "zeta1" is not read as z + "eta1".
  std::vector<std::string> sorted = prefixes;
  std::sort(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) { return a.size() > b.size(); });
  for (const auto& p : sorted) {
    if (name.size() <= p.size() || name.compare(0, p.size(), p) != 0) continue;
    std::string rest = name.substr(p.size());
    if (rest[0] == '_') rest = rest.substr(1);
    if (rest.empty() || rest.size() > 6 || !std::all_of(rest.begin(), rest.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
      continue;
    return std::make_pair(p, std::stoi(rest));
  }
  return std::nullopt;
}

struct Usage {
  bool z = false, zeta = false, secondary = false;
};

void scan(const Node& n, Usage& u) {
  if (n.type == Node::Type::kVariable) {
    if (auto s = split_indexed(n.name, {"z", "zeta", "zhat", "ztilde"})) {
      if (s->first == "z") u.z = true;
      else if (s->first == "zeta") u.zeta = true;
      else u.secondary = true;
    }
  }
  for (const auto& c : n.children) scan(c, u);
}

std::vector<std::string> numbered(const std::string& prefix, int count) {
  std::vector<std::string> v;
  for (int i = 1; i <= count; ++i) v.push_back(prefix + std::to_string(i));
  return v;
}

class Elaborator {
 public:
  explicit Elaborator(const GeneratorList& pres) : pres_(pres), spec_(pres.spec), k_(spec_.k), n_(spec_.n) {}

  Elaboration run(const Node& root) {
    scan(root, usage_);
    const bool gk = spec_.kind == Kind::kGk;
    if (spec_.kind == Kind::kCoulomb) sec_ = "hat";
    if (spec_.kind == Kind::kWhitney || spec_.kind == Kind::kWhitneyShifted) sec_ = "tilde";
    if (usage_.zeta && !spec_.equivariant) throw InvalidArgument("zeta_i is not available in a non-equivariant presentation");
    if (gk && (usage_.z || usage_.secondary)) throw InvalidArgument("the gk presentation has no root variables; use H_j, E_j, q");

    std::vector<VarInfo> vars;
    if (!gk) {
      for (int i = 1; i <= k_; ++i) vars.push_back({(usage_.z ? "z" : "e") + std::to_string(i), usage_.z ? 1 : i, 0});
      if (!sec_.empty())
        for (int j = 1; j <= n_ - k_; ++j)
          vars.push_back({(usage_.secondary ? "z" + sec_ : "e" + sec_) + std::to_string(j), usage_.secondary ? 1 : j, 1});
      if (spec_.equivariant)
        for (int j = 1; j <= n_; ++j) vars.push_back({(usage_.zeta ? "zeta" : "ezeta") + std::to_string(j), usage_.zeta ? 1 : j, 2});
    }
    vars.push_back({names::q, n_, 3});
    vars.push_back({names::u, 0, 4});
    auto base = VarSpace::create(vars);
    space_ = base->with(pres_.space->vars());

    if (!gk) {
      RootBlock z = usage_.z ? RootBlock::explicit_roots("z", k_) : RootBlock::elementary("e", k_);
      RootBlock zeta = !spec_.equivariant ? RootBlock::zero(n_)
                       : usage_.zeta     ? RootBlock::explicit_roots("zeta", n_)
                                         : RootBlock::elementary("ezeta", n_);
      ring_.emplace(space_, k_, n_, z, zeta);
    }
    Poly value = eval(root);
    Elaboration out;
    out.value = to_presentation(to_surrogates(value));
    out.warnings = warnings_;
    return out;
  }

 private:
  [[noreturn]] void fail(const Node& n, const std::string& msg) const {
    throw InvalidArgument("at position " + std::to_string(n.position) + ": " + msg);
  }

  const SymRing& ring(const Node& n) const {
    if (!ring_) fail(n, "families are not available in the gk presentation; use H_j, E_j, q");
    return *ring_;
  }

  void warn(const Node& n, const std::string& msg) {
    warnings_.push_back("position " + std::to_string(n.position) + ": " + msg);
  }

  Poly secondary_e(const Node& n, int j) {
    if (sec_.empty()) fail(n, "the " + kind_name(spec_.kind) + " presentation has no secondary variables");
    if (j == 0) return Poly::constant(space_, 1);
    if (j > n_ - k_) {
      warn(n, "e_" + std::to_string(j) + " of " + std::to_string(n_ - k_) + " secondary roots is 0");
      return Poly(space_);
    }
    if (usage_.secondary) return elementary_explicit(space_, numbered("z" + sec_, n_ - k_), j);
    return Poly::variable(space_, "e" + sec_ + std::to_string(j));
  }

  Poly eval(const Node& n) {
    switch (n.type) {
      case Node::Type::kNumber:
        return Poly::constant(space_, n.value);
      case Node::Type::kSum: {
        Poly s(space_);
        for (std::size_t i = 0; i < n.children.size(); ++i) {
          Poly c = eval(n.children[i]);
          if (n.negated[i]) s -= c;
          else s += c;
        }
        return s;
      }
      case Node::Type::kProduct: {
        Poly p = Poly::constant(space_, 1);
        for (const auto& c : n.children) p *= eval(c);
        return p;
      }
      case Node::Type::kPower:
        return eval(n.children[0]).pow(n.exponent);
      case Node::Type::kFamily:
        return family(n);
      case Node::Type::kVariable:
        return variable(n);
    }
    return Poly(space_);
  }

  Poly family(const Node& n) {
    const SymRing& R = ring(n);
    const std::string& f = n.name;
    if (f != "s" && n.indices.size() != 1) fail(n, f + " takes exactly one index");
    const int i = n.indices.front();
    auto zero_with = [&](const std::string& why) {
      warn(n, f + "[" + std::to_string(i) + "] = 0: " + why);
      return Poly(space_);
    };
    if (f == "e" && i > k_) return zero_with("index exceeds k = " + std::to_string(k_));
    if (f == "ezeta" && i > n_) return zero_with("index exceeds n = " + std::to_string(n_));
    if (f == "Gcol" && (i < 1 || i > k_)) return zero_with("column Grothendieck polynomials are indexed by 1..k");
    if (f == "s") {
      for (std::size_t j = 1; j < n.indices.size(); ++j)
        if (n.indices[j] > n.indices[j - 1]) fail(n, "partition parts must be weakly decreasing");
      if (Partition(n.indices).length() > k_) return zero_with("more than k parts");
    }
    Poly q = Poly::variable(space_, names::q);
    if (f == "ghat" || f == "gtilde") {
      if (i < 1 || i > n_) return zero_with("l must lie in 1..n");
      if (f == "ghat") return g_hat_closed(R, i, q);
      Poly u = Poly::variable(space_, names::u);
      Poly est = sec_ == "tilde" ? e_of_shifted(n_ - k_, n_ - k_, [&](int j) { return secondary_e(n, j); })
                                 : e_shift_tilde_eliminated(R);
      return g_tilde(R, i, q, u, est);
    }
    return R.family(f, n.indices);
  }

  Poly variable(const Node& n) {
    const std::string& v = n.name;
    if (v == names::q || v == names::u) return Poly::variable(space_, v);
    if (auto s = split_indexed(v, {"z", "zeta", "zhat", "ztilde"})) {
      auto [prefix, idx] = *s;
      int count = prefix == "z" ? k_ : prefix == "zeta" ? n_ : n_ - k_;
      if (idx < 1 || idx > count) fail(n, v + " is out of range (1.." + std::to_string(count) + ")");
      if (prefix == "zhat" || prefix == "ztilde") {
        if (prefix != "z" + sec_) fail(n, v + " is not a variable of the " + kind_name(spec_.kind) + " presentation");
        return Poly::variable(space_, prefix + std::to_string(idx));
      }
      return Poly::variable(space_, prefix + std::to_string(idx));
    }
    if (ring_) {
      if (auto s = split_indexed(v, {"e", "ezeta", "ehat", "etilde"})) {
        auto [prefix, idx] = *s;
        Node fam = n;
        fam.type = Node::Type::kFamily;
        fam.name = prefix;
        fam.indices = {idx};
        if (prefix == "e" || prefix == "ezeta") {
          if (prefix == "ezeta" && !spec_.equivariant) fail(n, v + " is not available in a non-equivariant presentation");
          return family(fam);
        }
        if (prefix != "e" + sec_) fail(n, v + " is not a variable of the " + kind_name(spec_.kind) + " presentation");
        return secondary_e(n, idx);
      }
    }
    if (space_->contains(v)) return Poly::variable(space_, v);
    fail(n, "unknown variable '" + v + "'");
  }

  Poly to_surrogates(Poly p) const {
    auto replace = [&](const std::string& root_prefix, const std::string& e_prefix, int count, int block) {
      auto roots = numbered(root_prefix, count);
      auto enames = numbered(e_prefix, count);
      std::vector<VarInfo> extra;
      for (int i = 1; i <= count; ++i) extra.push_back({enames[i - 1], i, block});
      auto target = p.space()->without(roots)->with(extra);
      p = express_in_e_basis(p, roots, enames, target);
    };
    if (usage_.z) replace("z", "e", k_, 0);
    if (usage_.secondary && !sec_.empty()) replace("z" + sec_, "e" + sec_, n_ - k_, 1);
    if (usage_.zeta) replace("zeta", "ezeta", n_, 2);
    return p;
  }

  Poly to_presentation(const Poly& p) const {
    const auto& target = pres_.space;
    const auto& src = p.space();
    Bindings b;
    const bool whitney = spec_.kind == Kind::kWhitney;
    const bool numeric_q = spec_.q_mode.type == QMode::Type::kNumeric;
    auto target_var = [&](const std::string& name) { return Poly::variable(target, name); };
    std::vector<Rational> ezeta_values;
    if (!spec_.zeta_values.empty()) {
      ezeta_values.assign(n_ + 1, Rational(0));
      ezeta_values[0] = 1;
      for (const auto& z : spec_.zeta_values)
        for (int j = n_; j >= 1; --j) ezeta_values[j] += z * ezeta_values[j - 1];
    }
    if (whitney) {
      auto shifted = [&](const std::string& prefix, int count, int i) {
        return e_of_shifted(i, count, [&](int s) { return s == 0 ? Poly::constant(target, 1) : target_var(prefix + std::to_string(s)); });
      };
      for (int i = 1; i <= k_; ++i) b.emplace(names::e(i), shifted("eX", k_, i));
      for (int j = 1; j <= n_ - k_; ++j) b.emplace(names::etilde(j), shifted("eXt", n_ - k_, j));
      if (spec_.symbolic_zeta())
        for (int j = 1; j <= n_; ++j) b.emplace(names::ezeta(j), shifted("eT", n_, j));
    }
    if (!ezeta_values.empty())
      for (int j = 1; j <= n_; ++j) b.emplace(names::ezeta(j), Poly::constant(target, ezeta_values[j]));
    if (numeric_q) {
      b.emplace(names::q, Poly::constant(target, spec_.q_mode.value));
      b.emplace(names::u, Poly::constant(target, Rational(1) / (Rational(1) - spec_.q_mode.value)));
    }
    for (std::size_t i = 0; i < src->size(); ++i) {
      const auto& name = src->var(i).name;
      if (!p.uses(i) || b.count(name) || target->contains(name)) continue;
      if (name == names::u)
        throw InvalidArgument("1/(1-q) (u, or gtilde) needs the aux-inverse or a numeric q mode, not " + spec_.q_mode.str());
      throw InvalidArgument("variable " + name + " is not part of the " + kind_name(spec_.kind) + " presentation");
    }
    return substitute(p, b, target);
  }

  const GeneratorList& pres_;
  const PresentationSpec& spec_;
  int k_;
  int n_;
  std::string sec_;
  Usage usage_;
  VarSpacePtr space_;
  std::optional<SymRing> ring_;
  std::vector<std::string> warnings_;
};

}  // namespace

Node parse(std::string_view source) { return Parser(source).parse_all(); }

std::string print(const Node& node) { return print_in(node, Ctx::kTop); }

Elaboration elaborate(const Node& node, const GeneratorList& presentation) { return Elaborator(presentation).run(node); }

}  // namespace qkgr::expr
