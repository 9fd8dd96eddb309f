#include "minvar/barred.hpp"

#include <algorithm>
#include <map>

namespace minvar {

BarredMatrixSpec BarredMatrixSpec::parse(int s, int t, const std::string& ident) {
  if (ident == "distinct") return distinct(s, t);
  if (ident == "bar") return bar(s, t);
  throw SpecError("unknown identification scheme '" + ident + "'");
}

void BarredMatrixSpec::validate() const {
  if (s < 2) throw SpecError("s must be at least 2");
  if (t < 0) throw SpecError("t must be non-negative");
  if (scheme != Scheme::Custom) {
    if (x2s_eq_y0 || !z_eq_y.empty())
      throw SpecError("identifications are only allowed with the custom scheme");
    return;
  }
  if (x2s_eq_y0 && t < 1) throw SpecError("x_2s = y_0 needs t >= 1");
  for (auto [i, j] : z_eq_y) {
    if (!(1 <= i && i <= j && j <= t - 1))
      throw SpecError("identification z_i = y_j requires 1 <= i <= j <= t-1");
  }
  // conservative reading: index pairs of distinct identifications are disjoint
  for (std::size_t a = 0; a < z_eq_y.size(); ++a)
    for (std::size_t b = a + 1; b < z_eq_y.size(); ++b) {
      auto [i1, j1] = z_eq_y[a];
      auto [i2, j2] = z_eq_y[b];
      if (i1 == i2 || i1 == j2 || j1 == i2 || j1 == j2)
        throw SpecError("identification index pairs must be pairwise disjoint");
    }
}

std::string BarredMatrixSpec::ident_string() const {
  switch (scheme) {
    case Scheme::Distinct:
      return "distinct";
    case Scheme::Bar:
      return "bar";
    case Scheme::Custom: {
      std::string out = "custom(";
      bool first = true;
      if (x2s_eq_y0) {
        out += "x2s=y0";
        first = false;
      }
      for (auto [i, j] : z_eq_y) {
        if (!first) out += ",";
        out += "z" + std::to_string(i) + "=y" + std::to_string(j);
        first = false;
      }
      return out + ")";
    }
  }
  return "?";
}

BarredMatrix build_matrix(const BarredMatrixSpec& spec) {
  spec.validate();
  const int s = spec.s, t = spec.t;
  const bool bar = spec.scheme == BarredMatrixSpec::Scheme::Bar && t >= 1;

  // entry tokens of the two rows, identifications applied
  std::vector<std::string> r1, r2;
  for (int c = 1; c <= s; ++c) r1.push_back("x" + std::to_string(c));
  for (int c = 1; c <= s; ++c) r2.push_back("x" + std::to_string(s + c));
  for (int k = 1; k <= t; ++k) {
    std::string top = "y" + std::to_string(k - 1);
    if (k == 1 && (bar || spec.x2s_eq_y0)) top = "x" + std::to_string(2 * s);
    r1.push_back(top);

    std::string bottom = "z" + std::to_string(k);
    if (bar) {
      bottom = "y" + std::to_string(k);
    } else {
      for (auto [i, j] : spec.z_eq_y)
        if (i == k) bottom = "y" + std::to_string(j);
    }
    r2.push_back(bottom);
  }

  // no entry may appear more than twice
  std::map<std::string, int> count;
  for (const auto& e : r1) ++count[e];
  for (const auto& e : r2) ++count[e];
  for (const auto& [name, c] : count)
    if (c > 2) throw SpecError("entry '" + name + "' appears more than twice");

  // variable order: x_1..x_{2s}, then y's by index, then z's by index
  BarredMatrix m;
  m.s = s;
  m.t = t;
  for (int c = 1; c <= 2 * s; ++c) m.var_names.push_back("x" + std::to_string(c));
  auto add_if_used = [&](const std::string& name) {
    if (std::find(r1.begin(), r1.end(), name) != r1.end() ||
        std::find(r2.begin(), r2.end(), name) != r2.end())
      m.var_names.push_back(name);
  };
  for (int k = 0; k <= t; ++k) add_if_used("y" + std::to_string(k));
  for (int k = 1; k <= t; ++k) add_if_used("z" + std::to_string(k));

  VariableTable table(m.var_names);
  for (const auto& e : r1) m.row1.push_back(table.index(e));
  for (const auto& e : r2) m.row2.push_back(table.index(e));
  return m;
}

BoundsReport bounds_oracle(int s, int t, std::uint32_t characteristic) {
  if (s < 2) throw SpecError("bounds need s >= 2");
  if (t < 1) throw SpecError("bounds need t >= 1");
  if (characteristic != 0 && !is_prime(characteristic))
    throw SpecError("characteristic must be 0 or a prime");
  BoundsReport r;
  r.s = s;
  r.t = t;
  r.characteristic = characteristic;
  r.height = s + t - 1;
  r.ara_lower = 2 * s + t - 3;
  r.ara_upper = 2 * s + t - 2;
  if (s == 2)
    r.ara_exact = t + 1;
  else if (t == 1 && (s == 3 || s == 4 || s == 5))
    r.ara_exact = 2 * s - 2;
  r.cd = characteristic > 0 ? s + t - 1 : 2 * s + t - 3;
  return r;
}

}  // namespace minvar
