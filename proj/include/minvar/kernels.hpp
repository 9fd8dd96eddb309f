// Exponent-vector kernels: the data-parallel primitives under every monomial
// operation. Scalar reference implementations plus SIMD variants selected at
// runtime; all backends are bit-for-bit equivalent.
#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace minvar::kern {

// Dense exponent entry. Arithmetic wraps mod 2^16; the polynomial layer
// guards total degree < 2^15 so wrap never occurs in valid data.
using Exp = std::uint16_t;

struct Ops {
  const char* name;
  void (*add)(const Exp*, const Exp*, Exp*, std::size_t);
  void (*sub)(const Exp*, const Exp*, Exp*, std::size_t);
  void (*max)(const Exp*, const Exp*, Exp*, std::size_t);
  // a divides b: a[i] <= b[i] for all i
  bool (*divides)(const Exp*, const Exp*, std::size_t);
  // disjoint supports: min(a[i], b[i]) == 0 for all i
  bool (*disjoint)(const Exp*, const Exp*, std::size_t);
  bool (*equal)(const Exp*, const Exp*, std::size_t);
  std::uint32_t (*total_deg)(const Exp*, std::size_t);
  // sign of lexicographic comparison: first differing entry decides
  int (*lex_cmp)(const Exp*, const Exp*, std::size_t);
  // reverse-lex tail rule: at the last differing entry the vector with the
  // smaller value is the greater monomial; returns +1 when a > b
  int (*revlex_cmp)(const Exp*, const Exp*, std::size_t);
};

const Ops& scalar_ops();
#ifdef MINVAR_HAVE_AVX2
const Ops& avx2_ops();
#endif

// Active backend: AVX2 when the CPU supports it, else scalar. The
// MINVAR_KERNELS environment variable (or set_backend) overrides.
const Ops& ops();
bool set_backend(const std::string& name);
std::string backend_name();
std::vector<std::string> available_backends();

}  // namespace minvar::kern
