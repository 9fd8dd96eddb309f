// Ring context: variable table + coefficient field + term order. Rings are
// immutable and shared by pointer; polynomial operations require operands
// from the same context.
#pragma once

#include <memory>
#include <string>
#include <unordered_map>
#include <vector>

#include "minvar/errors.hpp"
#include "minvar/field.hpp"
#include "minvar/order.hpp"

namespace minvar {

class VariableTable {
 public:
  VariableTable() = default;
  explicit VariableTable(std::vector<std::string> names);

  std::size_t size() const { return names_.size(); }
  const std::string& name(std::size_t i) const { return names_[i]; }
  const std::vector<std::string>& names() const { return names_; }
  // -1 when absent
  int index(const std::string& name) const;
  bool contains(const std::string& name) const { return index(name) >= 0; }

  static bool valid_name(const std::string& name);

  bool operator==(const VariableTable& o) const { return names_ == o.names_; }

 private:
  std::vector<std::string> names_;
  std::unordered_map<std::string, int> index_;
};

template <class F>
struct Ring {
  VariableTable vars;
  F field;
  TermOrder order;

  std::size_t width() const { return vars.size(); }
  int cmp(const kern::Exp* a, const kern::Exp* b) const {
    return order.cmp(a, b, vars.size());
  }

  // First of base, base1, base2, ... that is not already a variable.
  std::string fresh_name(const std::string& base) const {
    if (!vars.contains(base)) return base;
    for (int i = 1;; ++i) {
      std::string cand = base + std::to_string(i);
      if (!vars.contains(cand)) return cand;
    }
  }
};

template <class F>
using RingPtr = std::shared_ptr<const Ring<F>>;

template <class F>
RingPtr<F> make_ring(std::vector<std::string> names, F field,
                     TermOrder order = TermOrder::degrevlex()) {
  auto r = std::make_shared<Ring<F>>();
  r->vars = VariableTable(std::move(names));
  r->field = std::move(field);
  r->order = std::move(order);
  return r;
}

// Same variables and field, different order.
template <class F>
RingPtr<F> with_order(const RingPtr<F>& ring, const TermOrder& order) {
  auto r = std::make_shared<Ring<F>>(*ring);
  r->order = order;
  return r;
}

template <class F>
void check_same_ring(const RingPtr<F>& a, const RingPtr<F>& b) {
  if (a == b) return;
  // distinct contexts with identical content are still the same ring
  if (a && b && a->vars == b->vars && a->field == b->field && a->order == b->order)
    return;
  throw RingMismatchError("operands come from different ring contexts");
}

}  // namespace minvar
