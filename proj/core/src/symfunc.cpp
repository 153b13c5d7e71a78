#include "qkgr/symfunc.hpp"

#include <algorithm>

#include "qkgr/errors.hpp"
#include "qkgr/matrix.hpp"

namespace qkgr {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 0) throw InvalidArgument("partition with a negative part");
    if (i > 0 && parts_[i] > parts_[i - 1]) throw InvalidArgument("partition parts must be weakly decreasing");
  }
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
}

Partition Partition::hook(int arm, int legs) {
  std::vector<int> p{arm};
  for (int i = 0; i < legs; ++i) p.push_back(1);
  return Partition(std::move(p));
}

int Partition::size() const {
  int s = 0;
  for (int p : parts_) s += p;
  return s;
}

std::string Partition::str() const {
  std::string out = "(";
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(parts_[i]);
  }
  return out + ")";
}

RootBlock RootBlock::explicit_roots(const std::string& prefix, int count) {
  RootBlock b{RootEncoding::kExplicit, count, {}};
  for (int i = 1; i <= count; ++i) b.names.push_back(prefix + std::to_string(i));
  return b;
}

RootBlock RootBlock::elementary(const std::string& prefix, int count) {
  RootBlock b{RootEncoding::kElementary, count, {}};
  for (int i = 1; i <= count; ++i) b.names.push_back(prefix + std::to_string(i));
  return b;
}

RootBlock RootBlock::zero(int count) { return RootBlock{RootEncoding::kZero, count, {}}; }

SymRing::SymRing(VarSpacePtr space, int k, int n, RootBlock z, RootBlock zeta)
    : space_(std::move(space)), k_(k), n_(n), z_(std::move(z)), zeta_(std::move(zeta)) {
  if (k < 1) throw InvalidArgument("k must be at least 1");
  if (z_.count != k) throw InvalidArgument("z block must have k roots");
  if (zeta_.count != n) throw InvalidArgument("zeta block must have n roots");
  for (const auto* b : {&z_, &zeta_}) {
    for (const auto& name : b->names) {
      if (!space_->contains(name)) throw InvalidArgument("variable " + name + " missing from space");
    }
  }
}

Poly SymRing::memo(const std::string& key, const std::function<Poly()>& compute) const {
  {
    std::lock_guard<std::mutex> lock(mutex_);
    auto it = cache_.find(key);
    if (it != cache_.end()) return it->second;
  }
  Poly value = compute();
  std::lock_guard<std::mutex> lock(mutex_);
  cache_.emplace(key, value);
  return value;
}

Poly elementary_explicit(const VarSpacePtr& space, const std::vector<std::string>& roots, int i) {
  int m = static_cast<int>(roots.size());
  if (i < 0 || i > m) return Poly(space);
  if (i == 0) return Poly::constant(space, 1);
  // e_j over the first r roots, built up one root at a time.
  std::vector<Poly> cur(static_cast<std::size_t>(i + 1), Poly(space));
  cur[0] = Poly::constant(space, 1);
  for (int r = 0; r < m; ++r) {
    Poly x = Poly::variable(space, roots[r]);
    for (int j = std::min(i, r + 1); j >= 1; --j) cur[j] += x * cur[j - 1];
  }
  return cur[i];
}

Poly SymRing::elementary_of(const RootBlock& block, int i, const char* tag) const {
  if (i < 0 || i > block.count) return zero();
  if (i == 0) return one();
  switch (block.encoding) {
    case RootEncoding::kZero:
      return zero();
    case RootEncoding::kElementary:
      return Poly::variable(space_, block.names[i - 1]);
    case RootEncoding::kExplicit:
      return memo(std::string(tag) + std::to_string(i),
                  [&] { return elementary_explicit(space_, block.names, i); });
  }
  return zero();
}

Poly SymRing::e(int i) const { return elementary_of(z_, i, "e"); }
Poly SymRing::e_zeta(int i) const { return elementary_of(zeta_, i, "ez"); }

Poly SymRing::h(int j) const {
  if (j < 0) return zero();
  if (j == 0) return one();
  return memo("h" + std::to_string(j), [&] {
    Poly acc = zero();
    for (int i = 1; i <= std::min(j, k_); ++i) {
      Poly t = e(i) * h(j - i);
      if (i % 2 == 1) {
        acc += t;
      } else {
        acc -= t;
      }
    }
    return acc;
  });
}

Poly SymRing::schur(const Partition& lambda) const {
  if (lambda.length() > k_) return zero();
  if (lambda.length() == 0) return one();
  return memo("s" + lambda.str(), [&] {
    int l = lambda.length();
    PolyMatrix m(space_, l, l);
    for (int i = 0; i < l; ++i)
      for (int j = 0; j < l; ++j) m.at(i, j) = h(lambda[i] - i + j);
    return determinant(m);
  });
}

Poly SymRing::G(int j) const {
  if (j < 0) throw InvalidArgument("G_j requires j >= 0");
  if (j == 0) return one();
  return memo("G" + std::to_string(j), [&] {
    Poly acc = h(j);
    for (int a = 2; a <= k_; ++a) {
      Poly s = schur(Partition::hook(j, a - 1));
      if (a % 2 == 0) {
        acc -= s;
      } else {
        acc += s;
      }
    }
    return acc;
  });
}

Poly SymRing::G_via_h(int j) const {
  if (j < 0) throw InvalidArgument("G_j requires j >= 0");
  if (j == 0) return one();
  Poly acc = zero();
  for (int a = 0; a <= k_; ++a) {
    for (int b = 0; a + b <= k_; ++b) {
      Poly t = h(j + a) * e(b);
      if (b % 2 == 0) {
        acc += t;
      } else {
        acc -= t;
      }
    }
  }
  return acc;
}

Poly SymRing::Gcol(int j) const {
  if (j <= 0) return one();
  if (j > k_) return zero();
  return memo("Gcol" + std::to_string(j), [&] {
    Poly acc = e(j);
    for (int i = j + 1; i <= k_; ++i) acc -= Gcol(i) * Rational(binomial(i - 1, i - j));
    return acc;
  });
}

Poly SymRing::hp(int j) const {
  if (j < 0) return zero();
  return memo("hp" + std::to_string(j), [&] {
    Poly acc = zero();
    for (int a = 0; a <= j; ++a) {
      Poly t = e_zeta(a) * h(j - a);
      if (a % 2 == 0) {
        acc += t;
      } else {
        acc -= t;
      }
    }
    return acc;
  });
}

Poly SymRing::Gp(int j) const {
  if (j < 0) return zero();
  return memo("Gp" + std::to_string(j), [&] {
    Poly acc = zero();
    for (int a = 0; a <= j; ++a) {
      Poly t = e_zeta(a) * G(j - a);
      if (a % 2 == 0) {
        acc += t;
      } else {
        acc -= t;
      }
    }
    return acc;
  });
}

Poly SymRing::G_dagger(int j) const {
  Poly acc = zero();
  for (int a = 0; a <= k_; ++a) {
    for (int b = 0; a + b <= k_; ++b) {
      Poly t = hp(j + a) * e(b);
      if (b % 2 == 0) {
        acc += t;
      } else {
        acc -= t;
      }
    }
  }
  return acc;
}

namespace {

Poly alternating(const std::function<Poly(int)>& el, int from, int to, int sign_offset, const Poly& zero) {
  Poly acc = zero;
  for (int i = from; i <= to; ++i) {
    if ((i - sign_offset) % 2 == 0) {
      acc += el(i);
    } else {
      acc -= el(i);
    }
  }
  return acc;
}

}  // namespace

Poly SymRing::c() const { return c_le(k_); }

Poly SymRing::c_le(int j) const {
  return alternating([&](int i) { return e(i); }, 0, std::min(j, k_), 0, zero());
}

Poly SymRing::c_ge(int j) const {
  int from = std::max(j, 0);
  Poly r = alternating([&](int i) { return e(i); }, from, k_, 0, zero());
  return (j % 2 == 0) ? r : -r;
}

Poly SymRing::c_zeta() const { return c_zeta_le(n_); }

Poly SymRing::c_zeta_le(int j) const {
  return alternating([&](int i) { return e_zeta(i); }, 0, std::min(j, n_), 0, zero());
}

Poly SymRing::c_zeta_ge(int j) const {
  int from = std::max(j, 0);
  Poly r = alternating([&](int i) { return e_zeta(i); }, from, n_, 0, zero());
  return (j % 2 == 0) ? r : -r;
}

Poly SymRing::cp_ge(int l) const {
  return memo("cp" + std::to_string(l), [&] {
    Poly acc = e_zeta(l);
    for (int m = 2; m <= k_; ++m) acc += e_zeta(l - m + 1) * c_ge(m);
    return acc;
  });
}

bool SymRing::is_family(std::string_view key) {
  static const char* const keys[] = {"e", "ezeta", "h", "s", "G", "Gcol", "hp", "Gp", "cge", "cpge", "Gdagger"};
  return std::any_of(std::begin(keys), std::end(keys), [&](const char* k) { return key == k; });
}

Poly SymRing::family(std::string_view key, const std::vector<int>& idx) const {
  if (key == "s") return schur(Partition(idx));
  if (idx.size() != 1) throw InvalidArgument("family " + std::string(key) + " takes exactly one index");
  int i = idx[0];
  if (key == "e") return e(i);
  if (key == "ezeta") return e_zeta(i);
  if (key == "h") return h(i);
  if (key == "G") return G(i);
  if (key == "Gcol") return Gcol(i);
  if (key == "hp") return hp(i);
  if (key == "Gp") return Gp(i);
  if (key == "cge") return c_ge(i);
  if (key == "cpge") return cp_ge(i);
  if (key == "Gdagger") return G_dagger(i);
  throw InvalidArgument("unknown family: " + std::string(key));
}

Poly express_in_e_basis(const Poly& p, const std::vector<std::string>& roots,
                        const std::vector<std::string>& e_names, const VarSpacePtr& target) {
  const auto& space = p.space();
  const std::size_t r = roots.size();
  if (e_names.size() != r) throw InvalidArgument("need one surrogate per root");
  std::vector<std::size_t> ridx;
  for (const auto& name : roots) ridx.push_back(space->index(name));
  std::vector<std::size_t> eidx;
  for (const auto& name : e_names) eidx.push_back(target->index(name));

  std::vector<Poly> e_explicit;
  for (std::size_t i = 0; i <= r; ++i) e_explicit.push_back(elementary_explicit(space, roots, static_cast<int>(i)));

  Poly rest = p;
  Poly result(target);
  auto root_exps = [&](const Monomial& m) {
    std::vector<unsigned> v(r);
    for (std::size_t i = 0; i < r; ++i) v[i] = m[ridx[i]];
    return v;
  };
  while (!rest.is_zero()) {
    std::vector<unsigned> lead;
    bool first = true;
    for (const auto& [m, c] : rest.terms()) {
      auto v = root_exps(m);
      if (first || v > lead) lead = v;
      first = false;
    }
    Poly coeff(space);
    for (const auto& [m, c] : rest.terms()) {
      if (root_exps(m) != lead) continue;
      Monomial stripped = m;
      for (auto i : ridx) stripped.set(i, 0);
      coeff.add_term(stripped, c);
    }
    for (std::size_t i = 1; i < r; ++i) {
      if (lead[i] > lead[i - 1]) {
        throw NotSymmetric("polynomial is not symmetric in " + roots.front() + ".." + roots.back());
      }
    }
    Poly sym = coeff;
    Monomial emono;
    for (std::size_t i = 0; i < r; ++i) {
      unsigned d = lead[i] - (i + 1 < r ? lead[i + 1] : 0u);
      if (d == 0) continue;
      sym *= e_explicit[i + 1].pow(d);
      emono.set(eidx[i], d);
    }
    rest -= sym;
    result += embed(coeff, target) * Poly::monomial(target, emono);
  }
  return result;
}

Poly e_of_shifted(int i, int m, const std::function<Poly(int)>& e_x) {
  if (i < 0 || i > m) throw InvalidArgument("e_of_shifted requires 0 <= i <= m");
  Poly acc = e_x(0) * Rational(binomial(m, i));
  for (int s = 1; s <= i; ++s) {
    Poly t = e_x(s) * Rational(binomial(m - s, i - s));
    if (s % 2 == 0) {
      acc += t;
    } else {
      acc -= t;
    }
  }
  return acc;
}

}  // namespace qkgr
