// Exact multivariate polynomials in canonical form: a structure-of-arrays
// term list (coefficients + flat dense exponent rows), strictly descending
// under the ring's term order, no zero coefficients.
#pragma once

#include <algorithm>
#include <cctype>
#include <cstring>
#include <map>
#include <numeric>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "minvar/ring.hpp"

namespace minvar {

using kern::Exp;

// Largest total degree a polynomial may reach; keeps every exponent well
// below the uint16 wrap point.
inline constexpr std::uint32_t kMaxTotalDegree = 1u << 15;

template <class F>
class Poly {
 public:
  using Elem = typename F::Elem;

  Poly() = default;
  explicit Poly(RingPtr<F> ring) : ring_(std::move(ring)) {}

  static Poly zero(RingPtr<F> ring) { return Poly(std::move(ring)); }

  static Poly constant(RingPtr<F> ring, Elem c) {
    Poly p(ring);
    if (!ring->field.is_zero(c)) {
      p.cs_.push_back(std::move(c));
      p.es_.assign(ring->width(), 0);
    }
    return p;
  }

  static Poly one(RingPtr<F> ring) {
    auto c = ring->field.one();
    return constant(std::move(ring), c);
  }

  static Poly variable(RingPtr<F> ring, std::size_t var, Exp power = 1) {
    if (power == 0) return one(std::move(ring));
    Poly p(ring);
    p.cs_.push_back(ring->field.one());
    p.es_.assign(ring->width(), 0);
    p.es_[var] = power;
    return p;
  }

  static Poly variable(const RingPtr<F>& ring, const std::string& name, Exp power = 1) {
    int idx = ring->vars.index(name);
    if (idx < 0) throw ValueError("unknown variable '" + name + "'");
    return variable(ring, static_cast<std::size_t>(idx), power);
  }

  // term is (coefficient, exponent row); rows need not be sorted or unique
  static Poly from_terms(RingPtr<F> ring, std::vector<Elem> cs, std::vector<Exp> es);

  // trusted variant: rows already strictly descending, coefficients nonzero
  static Poly from_sorted_terms(RingPtr<F> ring, std::vector<Elem> cs, std::vector<Exp> es) {
    Poly p(std::move(ring));
    p.cs_ = std::move(cs);
    p.es_ = std::move(es);
    return p;
  }

  const RingPtr<F>& ring() const { return ring_; }
  std::size_t nterms() const { return cs_.size(); }
  bool is_zero() const { return cs_.empty(); }
  std::size_t width() const { return ring_->width(); }

  const Elem& coeff(std::size_t i) const { return cs_[i]; }
  const Exp* mono(std::size_t i) const { return es_.data() + i * width(); }
  std::span<const Exp> mono_span(std::size_t i) const { return {mono(i), width()}; }
  const std::vector<Elem>& cs() const { return cs_; }
  const std::vector<Exp>& es() const { return es_; }

  const Elem& lc() const {
    if (is_zero()) throw ValueError("leading term of the zero polynomial");
    return cs_[0];
  }
  const Exp* lm() const {
    if (is_zero()) throw ValueError("leading term of the zero polynomial");
    return es_.data();
  }
  std::pair<Elem, std::vector<Exp>> leading_term() const {
    return {lc(), std::vector<Exp>(lm(), lm() + width())};
  }

  std::uint32_t total_degree() const {
    std::uint32_t d = 0;
    for (std::size_t i = 0; i < nterms(); ++i)
      d = std::max(d, kern::ops().total_deg(mono(i), width()));
    return d;
  }

  bool is_constant() const {
    return is_zero() || (nterms() == 1 && kern::ops().total_deg(mono(0), width()) == 0);
  }

  bool is_homogeneous() const {
    if (is_zero()) return true;
    std::uint32_t d = kern::ops().total_deg(mono(0), width());
    for (std::size_t i = 1; i < nterms(); ++i)
      if (kern::ops().total_deg(mono(i), width()) != d) return false;
    return true;
  }

  bool is_monomial() const { return nterms() == 1; }

  bool operator==(const Poly& o) const {
    if (ring_ != o.ring_) check_same_ring(ring_, o.ring_);
    if (cs_.size() != o.cs_.size()) return false;
    for (std::size_t i = 0; i < cs_.size(); ++i)
      if (!ring_->field.equal(cs_[i], o.cs_[i])) return false;
    return es_ == o.es_;
  }
  bool operator!=(const Poly& o) const { return !(*this == o); }

  Poly operator-() const {
    Poly r = *this;
    for (auto& c : r.cs_) c = ring_->field.neg(c);
    return r;
  }

  Poly operator+(const Poly& o) const { return merged(o, false); }
  Poly operator-(const Poly& o) const { return merged(o, true); }

  Poly operator*(const Poly& o) const;

  Poly scale(const Elem& c) const {
    if (ring_->field.is_zero(c)) return zero(ring_);
    Poly r = *this;
    for (auto& x : r.cs_) x = ring_->field.mul(x, c);
    return r;
  }

  // c * x^m * this, term order preserved
  Poly mul_term(const Elem& c, const Exp* m) const;

  // this - c * x^m * g in a single merge pass
  Poly sub_mul(const Elem& c, const Exp* m, const Poly& g) const;

  Poly monic() const {
    if (is_zero()) return *this;
    return scale(ring_->field.inv(cs_[0]));
  }

  // support over all terms
  std::vector<bool> support() const {
    std::vector<bool> s(width(), false);
    for (std::size_t i = 0; i < nterms(); ++i) {
      const Exp* m = mono(i);
      for (std::size_t v = 0; v < width(); ++v)
        if (m[v]) s[v] = true;
    }
    return s;
  }

  // Homomorphic image: variable i of this ring maps to images[i] in the
  // target ring.
  Poly substitute(const RingPtr<F>& target, const std::vector<Poly>& images) const;

  // Partial map by name within one ring; unmapped variables stay fixed.
  Poly substitute(const std::map<std::string, Poly>& assignment) const;

  // Map into a ring containing (at least) the same variable names.
  Poly lift(const RingPtr<F>& target) const;

  Elem evaluate(const std::vector<Elem>& point) const;

  std::string format() const;
  static Poly parse(const std::string& text, const RingPtr<F>& ring);

 private:
  Poly merged(const Poly& o, bool subtract) const;
  void canonicalize();

  RingPtr<F> ring_;
  std::vector<Elem> cs_;
  std::vector<Exp> es_;
};

template <class F>
Poly<F> Poly<F>::from_terms(RingPtr<F> ring, std::vector<Elem> cs, std::vector<Exp> es) {
  Poly p(std::move(ring));
  p.cs_ = std::move(cs);
  p.es_ = std::move(es);
  if (p.cs_.size() * p.width() != p.es_.size())
    throw ValueError("term arrays disagree in length");
  p.canonicalize();
  return p;
}

template <class F>
void Poly<F>::canonicalize() {
  const std::size_t w = width(), n = cs_.size();
  if (n == 0) return;
  std::vector<std::size_t> idx(n);
  std::iota(idx.begin(), idx.end(), 0);
  std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
    return ring_->cmp(es_.data() + a * w, es_.data() + b * w) > 0;
  });
  std::vector<Elem> cs;
  std::vector<Exp> es;
  cs.reserve(n);
  es.reserve(n * w);
  for (std::size_t k = 0; k < n; ++k) {
    const Exp* m = es_.data() + idx[k] * w;
    if (!es.empty() && kern::ops().equal(m, es.data() + es.size() - w, w)) {
      cs.back() = ring_->field.add(cs.back(), cs_[idx[k]]);
      continue;
    }
    cs.push_back(cs_[idx[k]]);
    es.insert(es.end(), m, m + w);
  }
  // strip zero coefficients introduced by cancellation
  std::size_t out = 0;
  for (std::size_t k = 0; k < cs.size(); ++k) {
    if (ring_->field.is_zero(cs[k])) continue;
    if (out != k) {
      cs[out] = std::move(cs[k]);
      std::memcpy(es.data() + out * w, es.data() + k * w, w * sizeof(Exp));
    }
    ++out;
  }
  cs.resize(out);
  es.resize(out * w);
  cs_ = std::move(cs);
  es_ = std::move(es);
}

template <class F>
Poly<F> Poly<F>::merged(const Poly& o, bool subtract) const {
  check_same_ring(ring_, o.ring_);
  const std::size_t w = width();
  const auto& fld = ring_->field;
  Poly r(ring_);
  r.cs_.reserve(cs_.size() + o.cs_.size());
  r.es_.reserve(es_.size() + o.es_.size());
  std::size_t i = 0, j = 0;
  while (i < cs_.size() || j < o.cs_.size()) {
    int c;
    if (i == cs_.size())
      c = -1;
    else if (j == o.cs_.size())
      c = 1;
    else
      c = ring_->cmp(mono(i), o.mono(j));
    if (c > 0) {
      r.cs_.push_back(cs_[i]);
      r.es_.insert(r.es_.end(), mono(i), mono(i) + w);
      ++i;
    } else if (c < 0) {
      r.cs_.push_back(subtract ? fld.neg(o.cs_[j]) : o.cs_[j]);
      r.es_.insert(r.es_.end(), o.mono(j), o.mono(j) + w);
      ++j;
    } else {
      Elem s = subtract ? fld.sub(cs_[i], o.cs_[j]) : fld.add(cs_[i], o.cs_[j]);
      if (!fld.is_zero(s)) {
        r.cs_.push_back(std::move(s));
        r.es_.insert(r.es_.end(), mono(i), mono(i) + w);
      }
      ++i;
      ++j;
    }
  }
  return r;
}

template <class F>
Poly<F> Poly<F>::mul_term(const Elem& c, const Exp* m) const {
  if (ring_->field.is_zero(c)) return zero(ring_);
  Poly r(ring_);
  const std::size_t w = width();
  r.cs_.reserve(cs_.size());
  r.es_.resize(es_.size());
  for (std::size_t i = 0; i < cs_.size(); ++i) {
    r.cs_.push_back(ring_->field.mul(cs_[i], c));
    kern::ops().add(mono(i), m, r.es_.data() + i * w, w);
  }
  return r;
}

template <class F>
Poly<F> Poly<F>::sub_mul(const Elem& c, const Exp* m, const Poly& g) const {
  check_same_ring(ring_, g.ring_);
  const std::size_t w = width();
  const auto& fld = ring_->field;
  Poly r(ring_);
  r.cs_.reserve(cs_.size() + g.cs_.size());
  r.es_.reserve(es_.size() + g.es_.size());
  std::vector<Exp> shifted(w);
  std::size_t i = 0, j = 0;
  bool have_shift = false;
  while (i < cs_.size() || j < g.cs_.size()) {
    if (j < g.cs_.size() && !have_shift) {
      kern::ops().add(g.mono(j), m, shifted.data(), w);
      have_shift = true;
    }
    int cv;
    if (i == cs_.size())
      cv = -1;
    else if (j == g.cs_.size())
      cv = 1;
    else
      cv = ring_->cmp(mono(i), shifted.data());
    if (cv > 0) {
      r.cs_.push_back(cs_[i]);
      r.es_.insert(r.es_.end(), mono(i), mono(i) + w);
      ++i;
    } else if (cv < 0) {
      r.cs_.push_back(fld.neg(fld.mul(c, g.cs_[j])));
      r.es_.insert(r.es_.end(), shifted.begin(), shifted.end());
      ++j;
      have_shift = false;
    } else {
      Elem s = fld.sub(cs_[i], fld.mul(c, g.cs_[j]));
      if (!fld.is_zero(s)) {
        r.cs_.push_back(std::move(s));
        r.es_.insert(r.es_.end(), mono(i), mono(i) + w);
      }
      ++i;
      ++j;
      have_shift = false;
    }
  }
  return r;
}

template <class F>
Poly<F> Poly<F>::operator*(const Poly& o) const {
  check_same_ring(ring_, o.ring_);
  if (is_zero() || o.is_zero()) return zero(ring_);
  if (total_degree() + o.total_degree() >= kMaxTotalDegree)
    throw ValueError("product degree exceeds the supported bound");
  const std::size_t w = width();
  Poly r(ring_);
  r.cs_.reserve(cs_.size() * o.cs_.size());
  r.es_.resize(cs_.size() * o.cs_.size() * w);
  std::size_t k = 0;
  for (std::size_t i = 0; i < cs_.size(); ++i)
    for (std::size_t j = 0; j < o.cs_.size(); ++j) {
      r.cs_.push_back(ring_->field.mul(cs_[i], o.cs_[j]));
      kern::ops().add(mono(i), o.mono(j), r.es_.data() + k * w, w);
      ++k;
    }
  r.canonicalize();
  return r;
}

template <class F>
Poly<F> Poly<F>::substitute(const RingPtr<F>& target, const std::vector<Poly>& images) const {
  if (images.size() != width()) throw ValueError("one image per variable required");
  for (const auto& g : images) check_same_ring(target, g.ring());
  // powers by repeated squaring
  auto power = [&](const Poly& base, Exp e) {
    Poly acc = Poly::one(target);
    Poly sq = base;
    while (e) {
      if (e & 1) acc = acc * sq;
      e >>= 1;
      if (e) sq = sq * sq;
    }
    return acc;
  };
  Poly result = zero(target);
  for (std::size_t i = 0; i < nterms(); ++i) {
    Poly term = constant(target, cs_[i]);
    const Exp* m = mono(i);
    for (std::size_t v = 0; v < width() && !term.is_zero(); ++v)
      if (m[v]) term = term * power(images[v], m[v]);
    result = result + term;
  }
  return result;
}

template <class F>
Poly<F> Poly<F>::substitute(const std::map<std::string, Poly>& assignment) const {
  std::vector<Poly> images;
  images.reserve(width());
  for (std::size_t v = 0; v < width(); ++v) {
    auto it = assignment.find(ring_->vars.name(v));
    if (it == assignment.end()) {
      images.push_back(variable(ring_, v));
    } else {
      check_same_ring(ring_, it->second.ring());
      images.push_back(it->second);
    }
  }
  return substitute(ring_, images);
}

template <class F>
Poly<F> Poly<F>::lift(const RingPtr<F>& target) const {
  const std::size_t w = width(), tw = target->width();
  std::vector<int> map(w);
  auto sup = support();
  for (std::size_t v = 0; v < w; ++v) {
    map[v] = target->vars.index(ring_->vars.name(v));
    if (map[v] < 0 && sup[v])
      throw ValueError("target ring lacks variable '" + ring_->vars.name(v) + "'");
  }
  Poly r(target);
  r.cs_ = cs_;
  r.es_.assign(nterms() * tw, 0);
  for (std::size_t i = 0; i < nterms(); ++i) {
    const Exp* m = mono(i);
    for (std::size_t v = 0; v < w; ++v)
      if (m[v]) r.es_[i * tw + static_cast<std::size_t>(map[v])] = m[v];
  }
  r.canonicalize();
  return r;
}

template <class F>
typename F::Elem Poly<F>::evaluate(const std::vector<Elem>& point) const {
  if (point.size() != width()) throw ValueError("one value per variable required");
  const auto& fld = ring_->field;
  Elem acc = fld.zero();
  for (std::size_t i = 0; i < nterms(); ++i) {
    Elem t = cs_[i];
    const Exp* m = mono(i);
    for (std::size_t v = 0; v < width(); ++v)
      for (Exp e = 0; e < m[v]; ++e) t = fld.mul(t, point[v]);
    acc = fld.add(acc, t);
  }
  return acc;
}

// ---- text I/O ----
//
// Grammar: variables [a-zA-Z][a-zA-Z0-9_]*, integer or num/den coefficients,
// operators + - * ^, '*' mandatory between factors, '^' with positive
// integer exponents, whitespace insignificant.

namespace detail {

struct Token {
  enum Kind { Int, Name, Plus, Minus, Star, Caret, Slash, End } kind;
  std::string text;
};

class Lexer {
 public:
  explicit Lexer(const std::string& s) : s_(s) {}

  Token next() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (pos_ >= s_.size()) return {Token::End, ""};
    char c = s_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t b = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      return {Token::Int, s_.substr(b, pos_ - b)};
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t b = pos_;
      while (pos_ < s_.size() &&
             (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
        ++pos_;
      return {Token::Name, s_.substr(b, pos_ - b)};
    }
    ++pos_;
    switch (c) {
      case '+':
        return {Token::Plus, "+"};
      case '-':
        return {Token::Minus, "-"};
      case '*':
        return {Token::Star, "*"};
      case '^':
        return {Token::Caret, "^"};
      case '/':
        return {Token::Slash, "/"};
      default:
        throw ParseError(std::string("unexpected character '") + c + "'");
    }
  }

 private:
  const std::string& s_;
  std::size_t pos_ = 0;
};

}  // namespace detail

template <class F>
Poly<F> Poly<F>::parse(const std::string& text, const RingPtr<F>& ring) {
  using detail::Token;
  detail::Lexer lex(text);
  Token tok = lex.next();
  const std::size_t w = ring->width();
  const auto& fld = ring->field;

  std::vector<Elem> cs;
  std::vector<Exp> es;

  auto parse_exponent = [&]() -> Exp {
    Token t = lex.next();
    if (t.kind != Token::Int) throw ParseError("expected integer exponent after '^'");
    unsigned long e = std::stoul(t.text);
    if (e < 1) throw ParseError("exponent must be a positive integer");
    if (e >= kMaxTotalDegree) throw ParseError("exponent too large");
    return static_cast<Exp>(e);
  };

  bool any_term = false;
  while (tok.kind != Token::End) {
    bool negate = false;
    if (any_term || tok.kind == Token::Plus || tok.kind == Token::Minus) {
      if (tok.kind == Token::Plus) {
        tok = lex.next();
      } else if (tok.kind == Token::Minus) {
        negate = true;
        tok = lex.next();
      } else if (any_term) {
        throw ParseError("expected '+' or '-' between terms");
      }
    }
    // one term: factors joined by '*'
    Elem coef = fld.one();
    std::vector<Exp> m(w, 0);
    bool first_factor = true;
    while (true) {
      if (tok.kind == Token::Int) {
        std::string num = tok.text;
        tok = lex.next();
        std::string den;
        if (tok.kind == Token::Slash) {
          Token d = lex.next();
          if (d.kind != Token::Int) throw ParseError("expected integer denominator");
          den = d.text;
          tok = lex.next();
        }
        coef = fld.mul(coef, fld.parse_coeff(num, den));
      } else if (tok.kind == Token::Name) {
        int idx = ring->vars.index(tok.text);
        if (idx < 0) throw ParseError("unknown variable '" + tok.text + "'");
        tok = lex.next();
        Exp e = 1;
        if (tok.kind == Token::Caret) {
          e = parse_exponent();
          tok = lex.next();
        }
        if (static_cast<std::uint32_t>(m[idx]) + e >= kMaxTotalDegree)
          throw ParseError("exponent too large");
        m[idx] = static_cast<Exp>(m[idx] + e);
      } else {
        throw ParseError(first_factor ? "expected a coefficient or variable"
                                      : "expected a factor after '*'");
      }
      first_factor = false;
      if (tok.kind != Token::Star) break;
      tok = lex.next();
    }
    if (negate) coef = fld.neg(coef);
    cs.push_back(std::move(coef));
    es.insert(es.end(), m.begin(), m.end());
    any_term = true;
  }
  if (!any_term) throw ParseError("empty polynomial text");
  return from_terms(ring, std::move(cs), std::move(es));
}

template <class F>
std::string Poly<F>::format() const {
  if (is_zero()) return "0";
  const auto& fld = ring_->field;
  std::string out;
  for (std::size_t i = 0; i < nterms(); ++i) {
    Elem c = cs_[i];
    bool neg = fld.negative(c);
    if (neg) c = fld.neg(c);
    if (i == 0) {
      if (neg) out += "-";
    } else {
      out += neg ? " - " : " + ";
    }
    const Exp* m = mono(i);
    bool const_term = kern::ops().total_deg(m, width()) == 0;
    if (const_term) {
      out += fld.to_string(c);
      continue;
    }
    bool wrote = false;
    if (!fld.is_one(c)) {
      out += fld.to_string(c);
      wrote = true;
    }
    for (std::size_t v = 0; v < width(); ++v) {
      if (!m[v]) continue;
      if (wrote) out += "*";
      out += ring_->vars.name(v);
      if (m[v] > 1) out += "^" + std::to_string(m[v]);
      wrote = true;
    }
  }
  return out;
}

}  // namespace minvar
