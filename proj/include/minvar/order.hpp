// Term orders over dense exponent vectors: lex, degrevlex, and block
// (elimination) orders built from them.
#pragma once

#include <memory>
#include <string>

#include "minvar/errors.hpp"
#include "minvar/kernels.hpp"

namespace minvar {

class TermOrder {
 public:
  enum class Kind { Lex, DegRevLex, Block };

  TermOrder() : kind_(Kind::DegRevLex) {}

  static TermOrder lex() { return TermOrder(Kind::Lex); }
  static TermOrder degrevlex() { return TermOrder(Kind::DegRevLex); }
  // Eliminates the first elim_count variables: any monomial touching them
  // beats any monomial that does not.
  static TermOrder block(int elim_count, const TermOrder& inner);
  static TermOrder parse(const std::string& text);

  Kind kind() const { return kind_; }
  int elim_count() const { return elim_; }
  const TermOrder& inner() const { return *inner_; }

  // Three-way comparison of exponent vectors of length n.
  int cmp(const kern::Exp* a, const kern::Exp* b, std::size_t n) const;

  std::string to_string() const;
  bool operator==(const TermOrder& o) const;

 private:
  explicit TermOrder(Kind k) : kind_(k) {}

  Kind kind_;
  int elim_ = 0;
  std::shared_ptr<const TermOrder> inner_;
};

}  // namespace minvar
