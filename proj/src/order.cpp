#include "minvar/order.hpp"

namespace minvar {

TermOrder TermOrder::block(int elim_count, const TermOrder& inner) {
  if (elim_count < 1) throw ValueError("block order needs elim_count >= 1");
  TermOrder o(Kind::Block);
  o.elim_ = elim_count;
  o.inner_ = std::make_shared<TermOrder>(inner);
  return o;
}

TermOrder TermOrder::parse(const std::string& text) {
  if (text == "lex") return lex();
  if (text == "degrevlex") return degrevlex();
  throw ParseError("unknown term order '" + text + "'");
}

int TermOrder::cmp(const kern::Exp* a, const kern::Exp* b, std::size_t n) const {
  const auto& k = kern::ops();
  switch (kind_) {
    case Kind::Lex:
      return k.lex_cmp(a, b, n);
    case Kind::DegRevLex: {
      std::uint32_t da = k.total_deg(a, n), db = k.total_deg(b, n);
      if (da != db) return da > db ? 1 : -1;
      return k.revlex_cmp(a, b, n);
    }
    case Kind::Block: {
      std::size_t head = std::min<std::size_t>(elim_, n);
      std::uint32_t da = k.total_deg(a, head), db = k.total_deg(b, head);
      if (da != db) return da > db ? 1 : -1;
      if (int c = k.revlex_cmp(a, b, head)) return c;
      return inner_->cmp(a + head, b + head, n - head);
    }
  }
  return 0;
}

std::string TermOrder::to_string() const {
  switch (kind_) {
    case Kind::Lex:
      return "lex";
    case Kind::DegRevLex:
      return "degrevlex";
    case Kind::Block:
      return "block(" + std::to_string(elim_) + "," + inner_->to_string() + ")";
  }
  return "?";
}

bool TermOrder::operator==(const TermOrder& o) const {
  if (kind_ != o.kind_) return false;
  if (kind_ != Kind::Block) return true;
  return elim_ == o.elim_ && *inner_ == *o.inner_;
}

}  // namespace minvar
