#include "minvar/ring.hpp"

#include <cctype>

namespace minvar {

VariableTable::VariableTable(std::vector<std::string> names) : names_(std::move(names)) {
  index_.reserve(names_.size());
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (!valid_name(names_[i]))
      throw ValueError("invalid variable name '" + names_[i] + "'");
    auto [it, fresh] = index_.emplace(names_[i], static_cast<int>(i));
    if (!fresh) throw ValueError("duplicate variable name '" + names_[i] + "'");
  }
}

int VariableTable::index(const std::string& name) const {
  auto it = index_.find(name);
  return it == index_.end() ? -1 : it->second;
}

bool VariableTable::valid_name(const std::string& name) {
  if (name.empty() || !std::isalpha(static_cast<unsigned char>(name[0]))) return false;
  for (char c : name)
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
  return true;
}

}  // namespace minvar
