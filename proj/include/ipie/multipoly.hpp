#pragma once

// Sparse multivariate polynomials over Q. Terms are kept sorted descending in
// plain lex (variable 0 most significant); that order doubles as the
// canonical form, so structural equality is polynomial equality.

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "error.hpp"
#include "rational.hpp"

namespace ipie {

using Exponent = std::uint32_t;
using Monomial = std::vector<Exponent>;

inline bool divides(const Monomial& a, const Monomial& b) {
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

inline Monomial mono_lcm(const Monomial& a, const Monomial& b) {
  Monomial r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = std::max(a[i], b[i]);
  return r;
}

inline Monomial mono_mul(const Monomial& a, const Monomial& b) {
  Monomial r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

/// a / b, assuming b | a.
inline Monomial mono_div(const Monomial& a, const Monomial& b) {
  Monomial r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

inline bool coprime(const Monomial& a, const Monomial& b) {
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i] != 0 && b[i] != 0) return false;
  return true;
}

inline unsigned mono_degree(const Monomial& m) {
  unsigned d = 0;
  for (auto e : m) d += e;
  return d;
}

class MultiPoly {
 public:
  struct Term {
    Monomial mono;
    Rational coef;
    bool operator==(const Term& o) const { return mono == o.mono && coef == o.coef; }
  };

  MultiPoly() = default;
  explicit MultiPoly(size_t num_vars) : num_vars_(num_vars) {}

  static MultiPoly constant(size_t num_vars, const Rational& c) {
    MultiPoly p(num_vars);
    if (c != 0) p.terms_.push_back({Monomial(num_vars, 0), c});
    return p;
  }

  static MultiPoly variable(size_t num_vars, size_t v) {
    if (v >= num_vars) fail(ErrorKind::VariableMismatch, "variable index out of range");
    Monomial m(num_vars, 0);
    m[v] = 1;
    MultiPoly p(num_vars);
    p.terms_.push_back({std::move(m), Rational(1)});
    return p;
  }

  static MultiPoly term(Monomial m, const Rational& c) {
    MultiPoly p(m.size());
    if (c != 0) p.terms_.push_back({std::move(m), c});
    return p;
  }

  /// Builds from arbitrary (possibly repeated, unordered, zero) terms.
  static MultiPoly from_terms(size_t num_vars, std::vector<Term> terms) {
    std::map<Monomial, Rational, std::greater<>> acc;
    for (auto& t : terms) {
      if (t.mono.size() != num_vars) fail(ErrorKind::VariableMismatch, "monomial arity");
      acc[t.mono] += t.coef;
    }
    MultiPoly p(num_vars);
    for (auto& [m, c] : acc)
      if (c != 0) p.terms_.push_back({m, c});
    return p;
  }

  size_t num_vars() const { return num_vars_; }
  const std::vector<Term>& terms() const { return terms_; }
  size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && mono_degree(terms_[0].mono) == 0);
  }

  /// Leading term under plain lex.
  const Term& leading() const { return terms_.front(); }

  Rational constant_term() const {
    if (!terms_.empty() && mono_degree(terms_.back().mono) == 0) return terms_.back().coef;
    return Rational(0);
  }

  unsigned total_degree() const {
    unsigned d = 0;
    for (auto& t : terms_) d = std::max(d, mono_degree(t.mono));
    return d;
  }

  unsigned degree_in(size_t v) const {
    unsigned d = 0;
    for (auto& t : terms_) d = std::max(d, t.mono[v]);
    return d;
  }

  bool involves(size_t v) const { return degree_in(v) > 0; }

  /// Variables with a nonzero exponent somewhere.
  std::vector<size_t> support() const {
    std::vector<size_t> out;
    for (size_t v = 0; v < num_vars_; ++v)
      if (involves(v)) out.push_back(v);
    return out;
  }

  bool operator==(const MultiPoly& o) const { return num_vars_ == o.num_vars_ && terms_ == o.terms_; }

  MultiPoly operator-() const {
    MultiPoly r = *this;
    for (auto& t : r.terms_) t.coef = -t.coef;
    return r;
  }

  MultiPoly& operator+=(const MultiPoly& o) { return *this = add_scaled(o, Rational(1)); }
  MultiPoly& operator-=(const MultiPoly& o) { return *this = add_scaled(o, Rational(-1)); }
  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }

  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    check_arity(a, b);
    if (a.is_zero() || b.is_zero()) return MultiPoly(a.num_vars_);
    std::vector<Term> all;
    all.reserve(a.size() * b.size());
    for (auto& s : a.terms_)
      for (auto& t : b.terms_) all.push_back({mono_mul(s.mono, t.mono), s.coef * t.coef});
    return from_terms(a.num_vars_, std::move(all));
  }
  MultiPoly& operator*=(const MultiPoly& o) { return *this = *this * o; }

  MultiPoly scaled(const Rational& c) const {
    if (c == 0) return MultiPoly(num_vars_);
    MultiPoly r = *this;
    for (auto& t : r.terms_) t.coef *= c;
    return r;
  }

  /// this * c * m
  MultiPoly mul_term(const Monomial& m, const Rational& c) const {
    if (c == 0) return MultiPoly(num_vars_);
    MultiPoly r(num_vars_);
    r.terms_.reserve(terms_.size());
    for (auto& t : terms_) r.terms_.push_back({mono_mul(t.mono, m), t.coef * c});
    return r;  // multiplying by a monomial preserves lex order
  }

  /// this + c * o, by merging sorted term lists.
  MultiPoly add_scaled(const MultiPoly& o, const Rational& c) const {
    check_arity(*this, o);
    MultiPoly r(num_vars_);
    r.terms_.reserve(terms_.size() + o.terms_.size());
    size_t i = 0, j = 0;
    while (i < terms_.size() || j < o.terms_.size()) {
      if (j == o.terms_.size() || (i < terms_.size() && terms_[i].mono > o.terms_[j].mono)) {
        r.terms_.push_back(terms_[i++]);
      } else if (i == terms_.size() || o.terms_[j].mono > terms_[i].mono) {
        Rational v = o.terms_[j].coef * c;
        if (v != 0) r.terms_.push_back({o.terms_[j].mono, v});
        ++j;
      } else {
        Rational v = terms_[i].coef + o.terms_[j].coef * c;
        if (v != 0) r.terms_.push_back({terms_[i].mono, v});
        ++i;
        ++j;
      }
    }
    return r;
  }

  MultiPoly pow(unsigned e) const {
    MultiPoly r = constant(num_vars_, Rational(1));
    for (unsigned k = 0; k < e; ++k) r *= *this;
    return r;
  }

  Rational evaluate(std::span<const Rational> point) const {
    if (point.size() != num_vars_) fail(ErrorKind::VariableMismatch, "evaluation point arity");
    Rational sum = 0;
    for (auto& t : terms_) {
      Rational prod = t.coef;
      for (size_t v = 0; v < num_vars_; ++v)
        if (t.mono[v]) prod *= pow_rat(point[v], t.mono[v]);
      sum += prod;
    }
    return sum;
  }

  /// Binds variable v to a value; the arity is kept (v simply no longer occurs).
  MultiPoly substitute(size_t v, const Rational& value) const {
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (auto& t : terms_) {
      Term s = t;
      if (s.mono[v]) {
        s.coef *= pow_rat(value, s.mono[v]);
        s.mono[v] = 0;
      }
      out.push_back(std::move(s));
    }
    return from_terms(num_vars_, std::move(out));
  }

  /// Replaces variable v by a polynomial.
  MultiPoly compose(size_t v, const MultiPoly& q) const {
    check_arity(*this, q);
    unsigned d = degree_in(v);
    std::vector<MultiPoly> powers{constant(num_vars_, Rational(1))};
    for (unsigned k = 1; k <= d; ++k) powers.push_back(powers.back() * q);
    MultiPoly r(num_vars_);
    for (auto& t : terms_) {
      Monomial m = t.mono;
      unsigned e = m[v];
      m[v] = 0;
      r += powers[e].mul_term(m, t.coef);
    }
    return r;
  }

  MultiPoly derivative(size_t v) const {
    std::vector<Term> out;
    for (auto& t : terms_) {
      if (t.mono[v] == 0) continue;
      Term s = t;
      s.coef *= t.mono[v];
      s.mono[v] -= 1;
      out.push_back(std::move(s));
    }
    return from_terms(num_vars_, std::move(out));
  }

  /// Renames variables: old variable i becomes new variable new_index[i].
  MultiPoly renamed(std::span<const size_t> new_index, size_t new_num_vars) const {
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (auto& t : terms_) {
      Monomial m(new_num_vars, 0);
      for (size_t i = 0; i < num_vars_; ++i) {
        if (t.mono[i] == 0) continue;
        if (new_index[i] >= new_num_vars) fail(ErrorKind::VariableMismatch, "renaming drops a used variable");
        m[new_index[i]] += t.mono[i];
      }
      out.push_back({std::move(m), t.coef});
    }
    return from_terms(new_num_vars, std::move(out));
  }

  /// Scales to integer coefficients with content 1 and positive leading coefficient.
  MultiPoly primitive() const {
    if (is_zero()) return *this;
    Integer den = 1, g = 0;
    for (auto& t : terms_) den = lcm(den, t.coef.get_den());
    for (auto& t : terms_) g = gcd(g, Integer(t.coef.get_num() * (den / t.coef.get_den())));
    Rational s(den, g);
    if (terms_.front().coef < 0) s = -s;
    return scaled(s);
  }

  MultiPoly monic() const {
    if (is_zero()) return *this;
    return scaled(Rational(1) / terms_.front().coef);
  }

  Rational max_abs_coefficient() const {
    Rational m = 0;
    for (auto& t : terms_) m = std::max(m, abs_rat(t.coef));
    return m;
  }

  std::string to_string(std::span<const std::string> names) const;
  std::string to_string() const;

 private:
  static void check_arity(const MultiPoly& a, const MultiPoly& b) {
    if (a.num_vars_ != b.num_vars_) fail(ErrorKind::VariableMismatch, "polynomial arity mismatch");
  }

  size_t num_vars_ = 0;
  std::vector<Term> terms_;
};

inline std::vector<std::string> default_var_names(size_t n) {
  static const char* small[] = {"x", "y", "z", "w"};
  std::vector<std::string> names;
  for (size_t i = 0; i < n; ++i) names.push_back(n <= 4 ? std::string(small[i]) : "x" + std::to_string(i));
  return names;
}

inline std::string MultiPoly::to_string(std::span<const std::string> names) const {
  if (is_zero()) return "0";
  std::string out;
  bool first = true;
  for (auto& t : terms_) {
    Rational c = t.coef;
    bool neg = c < 0;
    if (neg) c = -c;
    out += first ? (neg ? "-" : "") : (neg ? " - " : " + ");
    first = false;
    std::string mono;
    for (size_t v = 0; v < num_vars_; ++v) {
      if (t.mono[v] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += names[v];
      if (t.mono[v] > 1) mono += "^" + std::to_string(t.mono[v]);
    }
    if (mono.empty()) {
      out += c.get_str();
    } else if (c == 1) {
      out += mono;
    } else {
      out += c.get_str() + "*" + mono;
    }
  }
  return out;
}

inline std::string MultiPoly::to_string() const { return to_string(default_var_names(num_vars_)); }

/// Lex monomial order given by a precedence list of variables, highest first.
class MonomialOrder {
 public:
  MonomialOrder() = default;
  explicit MonomialOrder(std::vector<size_t> precedence) : precedence_(std::move(precedence)) {
    std::vector<bool> seen(precedence_.size(), false);
    for (auto v : precedence_) {
      if (v >= precedence_.size() || seen[v]) fail(ErrorKind::InvalidArgument, "order is not a permutation");
      seen[v] = true;
    }
    rank_.assign(precedence_.size(), 0);
    for (size_t r = 0; r < precedence_.size(); ++r) rank_[precedence_[r]] = r;
  }

  /// x_0 > x_1 > ... > x_{n-1}.
  static MonomialOrder lex(size_t n) {
    std::vector<size_t> p(n);
    for (size_t i = 0; i < n; ++i) p[i] = i;
    return MonomialOrder(std::move(p));
  }

  /// Plain lex on the remaining variables, with `lowest` moved to the bottom.
  static MonomialOrder with_lowest(size_t n, size_t lowest) {
    std::vector<size_t> p;
    for (size_t i = 0; i < n; ++i)
      if (i != lowest) p.push_back(i);
    p.push_back(lowest);
    return MonomialOrder(std::move(p));
  }

  size_t num_vars() const { return precedence_.size(); }
  const std::vector<size_t>& precedence() const { return precedence_; }
  size_t lowest() const { return precedence_.back(); }

  /// Maps a polynomial into ranked coordinates, where plain lex is this order.
  MultiPoly to_ranked(const MultiPoly& p) const { return p.renamed(rank_, rank_.size()); }
  MultiPoly from_ranked(const MultiPoly& p) const { return p.renamed(precedence_, precedence_.size()); }

  bool operator==(const MonomialOrder& o) const { return precedence_ == o.precedence_; }

 private:
  std::vector<size_t> precedence_;
  std::vector<size_t> rank_;
};

namespace detail {

class PolyParser {
 public:
  PolyParser(std::string_view text, std::span<const std::string> names) : s_(text), names_(names) {}

  MultiPoly parse() {
    MultiPoly p = expr();
    skip();
    if (pos_ != s_.size()) error("unexpected trailing input");
    return p;
  }

 private:
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool eat(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  [[noreturn]] void error(const std::string& msg) const {
    fail(ErrorKind::MalformedInput, msg + " at offset " + std::to_string(pos_) + " in '" + std::string(s_) + "'");
  }

  MultiPoly expr() {
    MultiPoly acc(names_.size());
    bool neg = false;
    if (eat('-')) neg = true;
    else eat('+');
    MultiPoly t = product();
    acc = neg ? -t : t;
    while (true) {
      if (eat('+')) acc += product();
      else if (eat('-')) acc -= product();
      else break;
    }
    return acc;
  }

  MultiPoly product() {
    MultiPoly acc = power();
    while (true) {
      skip();
      if (eat('*')) {
        acc *= power();
      } else if (eat('/')) {
        MultiPoly d = power();
        if (!d.is_constant() || d.is_zero()) error("division by a non-constant");
        acc = acc.scaled(Rational(1) / d.constant_term());
      } else if (pos_ < s_.size() && (std::isalpha(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '(')) {
        acc *= power();  // implicit multiplication, e.g. "3x^2"
      } else {
        break;
      }
    }
    return acc;
  }

  MultiPoly power() {
    MultiPoly base = atom();
    if (eat('^')) {
      skip();
      size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (start == pos_) error("expected exponent");
      base = base.pow(static_cast<unsigned>(std::stoul(std::string(s_.substr(start, pos_ - start)))));
    }
    return base;
  }

  MultiPoly atom() {
    skip();
    if (eat('(')) {
      MultiPoly p = expr();
      if (!eat(')')) error("expected ')'");
      return p;
    }
    if (pos_ < s_.size() && (std::isdigit(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '.')) {
      size_t start = pos_;
      while (pos_ < s_.size() && (std::isdigit(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '.')) ++pos_;
      auto q = parse_rational(s_.substr(start, pos_ - start));
      if (!q) error("bad number");
      return MultiPoly::constant(names_.size(), *q);
    }
    if (pos_ < s_.size() && (std::isalpha(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) {
      size_t start = pos_;
      while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_')) ++pos_;
      std::string name(s_.substr(start, pos_ - start));
      for (size_t v = 0; v < names_.size(); ++v)
        if (names_[v] == name) return MultiPoly::variable(names_.size(), v);
      error("unknown variable '" + name + "'");
    }
    error("unexpected character");
  }

  std::string_view s_;
  std::span<const std::string> names_;
  size_t pos_ = 0;
};

}  // namespace detail

/// Parses text such as "x^2*y - 3/2*x + 1" over the given variable names.
inline MultiPoly parse_poly(std::string_view text, std::span<const std::string> names) {
  return detail::PolyParser(text, names).parse();
}

inline MultiPoly parse_poly(std::string_view text, std::initializer_list<std::string> names) {
  std::vector<std::string> v(names);
  return parse_poly(text, std::span<const std::string>(v));
}

}  // namespace ipie
