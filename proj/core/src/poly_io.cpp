#include <cctype>
#include <sstream>

#include "qkgr/errors.hpp"
#include "qkgr/poly.hpp"

namespace qkgr {

std::string to_string(const Rational& r) { return r.get_str(); }

std::string monomial_string(const Monomial& m, const VarSpace& space) {
  std::string out;
  for (std::size_t i = 0; i < space.size(); ++i) {
    if (m[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += space.var(i).name;
    if (m[i] > 1) out += '^' + std::to_string(m[i]);
  }
  return out;
}

std::string to_string(const Poly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : p.terms()) {
    Rational a = abs(c);
    if (first) {
      if (c < 0) out += '-';
    } else {
      out += c < 0 ? " - " : " + ";
    }
    first = false;
    std::string mono = monomial_string(m, *p.space());
    if (mono.empty()) {
      out += to_string(a);
    } else if (a == 1) {
      out += mono;
    } else {
      out += to_string(a) + "*" + mono;
    }
  }
  return out;
}

namespace {

class PolyReader {
 public:
  PolyReader(std::string_view text, const VarSpacePtr& space) : text_(text), space_(space) {}

  Poly read() {
    Poly result(space_);
    skip();
    if (pos_ >= text_.size()) throw ParseError(pos_, "term", "end of input");
    bool first = true;
    while (true) {
      skip();
      if (pos_ >= text_.size()) break;
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = peek() == '-' ? -1 : 1;
        ++pos_;
        skip();
      } else if (!first) {
        throw ParseError(pos_, "'+' or '-'", quote(pos_));
      }
      first = false;
      auto [m, c] = term();
      result.add_term(m, sign * c);
    }
    return result;
  }

 private:
  std::pair<Monomial, Rational> term() {
    Rational coeff = 1;
    Monomial m;
    bool need_factor = true;
    if (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(peek()))) {
      coeff = number();
      need_factor = false;
      skip();
      if (pos_ < text_.size() && peek() == '*') {
        ++pos_;
        need_factor = true;
      } else {
        return {m, coeff};
      }
    }
    while (true) {
      skip();
      if (need_factor) {
        auto [idx, e] = factor();
        m.set(idx, m[idx] + e);
      }
      skip();
      if (pos_ < text_.size() && peek() == '*') {
        ++pos_;
        need_factor = true;
        continue;
      }
      break;
    }
    return {m, coeff};
  }

  std::pair<std::size_t, unsigned> factor() {
    std::size_t start = pos_;
    if (pos_ >= text_.size() || !(std::isalpha(static_cast<unsigned char>(peek())) || peek() == '_')) {
      throw ParseError(pos_, "variable", quote(pos_));
    }
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_')) {
      ++pos_;
    }
    std::string name(text_.substr(start, pos_ - start));
    auto idx = space_->find(name);
    if (!idx) throw ParseError(start, "variable of the ring", "'" + name + "'");
    unsigned e = 1;
    skip();
    if (pos_ < text_.size() && peek() == '^') {
      ++pos_;
      skip();
      e = unsigned_int();
    }
    return {*idx, e};
  }

  Rational number() {
    Integer num(digits());
    if (pos_ < text_.size() && peek() == '/') {
      ++pos_;
      Integer den(digits());
      if (den == 0) throw ParseError(pos_, "nonzero denominator", "0");
      Rational r(num, den);
      r.canonicalize();
      return r;
    }
    return Rational(num);
  }

  unsigned unsigned_int() {
    std::size_t start = pos_;
    std::string d = digits();
    if (d.size() > 5 || std::stoul(d) > 0xFFFFu) throw ParseError(start, "small exponent", d);
    return static_cast<unsigned>(std::stoul(d));
  }

  std::string digits() {
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (start == pos_) throw ParseError(pos_, "unsigned integer", quote(pos_));
    return std::string(text_.substr(start, pos_ - start));
  }

  char peek() const { return text_[pos_]; }
  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  std::string quote(std::size_t at) const {
    if (at >= text_.size()) return "end of input";
    return std::string("'") + text_[at] + "'";
  }

  std::string_view text_;
  const VarSpacePtr& space_;
  std::size_t pos_ = 0;
};

}  // namespace

Poly parse_poly(std::string_view text, const VarSpacePtr& space) { return PolyReader(text, space).read(); }

}  // namespace qkgr
