// AVX2 variants of the exponent-vector kernels. 16 lanes of uint16 per
// 256-bit block, scalar tail for the remainder. Semantics match the scalar
// reference exactly (wrapping add/sub included).
#include "minvar/kernels.hpp"

#ifdef MINVAR_HAVE_AVX2

#include <immintrin.h>

#include <bit>

namespace minvar::kern {

namespace {

inline __m256i load(const Exp* p) {
  return _mm256_loadu_si256(reinterpret_cast<const __m256i*>(p));
}

inline void store(Exp* p, __m256i v) {
  _mm256_storeu_si256(reinterpret_cast<__m256i*>(p), v);
}

void add_avx2(const Exp* a, const Exp* b, Exp* out, std::size_t n) {
  std::size_t i = 0;
  for (; i + 16 <= n; i += 16)
    store(out + i, _mm256_add_epi16(load(a + i), load(b + i)));
  for (; i < n; ++i) out[i] = static_cast<Exp>(a[i] + b[i]);
}

void sub_avx2(const Exp* a, const Exp* b, Exp* out, std::size_t n) {
  std::size_t i = 0;
  for (; i + 16 <= n; i += 16)
    store(out + i, _mm256_sub_epi16(load(a + i), load(b + i)));
  for (; i < n; ++i) out[i] = static_cast<Exp>(a[i] - b[i]);
}

void max_avx2(const Exp* a, const Exp* b, Exp* out, std::size_t n) {
  std::size_t i = 0;
  for (; i + 16 <= n; i += 16)
    store(out + i, _mm256_max_epu16(load(a + i), load(b + i)));
  for (; i < n; ++i) out[i] = a[i] > b[i] ? a[i] : b[i];
}

bool divides_avx2(const Exp* a, const Exp* b, std::size_t n) {
  std::size_t i = 0;
  for (; i + 16 <= n; i += 16) {
    __m256i va = load(a + i);
    __m256i le = _mm256_cmpeq_epi16(_mm256_min_epu16(va, load(b + i)), va);
    if (_mm256_movemask_epi8(le) != -1) return false;
  }
  for (; i < n; ++i)
    if (a[i] > b[i]) return false;
  return true;
}

bool disjoint_avx2(const Exp* a, const Exp* b, std::size_t n) {
  const __m256i zero = _mm256_setzero_si256();
  std::size_t i = 0;
  for (; i + 16 <= n; i += 16) {
    __m256i mn = _mm256_min_epu16(load(a + i), load(b + i));
    if (_mm256_movemask_epi8(_mm256_cmpeq_epi16(mn, zero)) != -1) return false;
  }
  for (; i < n; ++i)
    if (a[i] != 0 && b[i] != 0) return false;
  return true;
}

bool equal_avx2(const Exp* a, const Exp* b, std::size_t n) {
  std::size_t i = 0;
  for (; i + 16 <= n; i += 16) {
    __m256i eq = _mm256_cmpeq_epi16(load(a + i), load(b + i));
    if (_mm256_movemask_epi8(eq) != -1) return false;
  }
  for (; i < n; ++i)
    if (a[i] != b[i]) return false;
  return true;
}

std::uint32_t total_deg_avx2(const Exp* a, std::size_t n) {
  // madd treats lanes as signed; exponents stay < 2^15 so this is exact.
  const __m256i ones = _mm256_set1_epi16(1);
  __m256i acc = _mm256_setzero_si256();
  std::size_t i = 0;
  for (; i + 16 <= n; i += 16)
    acc = _mm256_add_epi32(acc, _mm256_madd_epi16(load(a + i), ones));
  __m128i lo = _mm256_castsi256_si128(acc);
  __m128i hi = _mm256_extracti128_si256(acc, 1);
  __m128i s = _mm_add_epi32(lo, hi);
  s = _mm_add_epi32(s, _mm_srli_si128(s, 8));
  s = _mm_add_epi32(s, _mm_srli_si128(s, 4));
  std::uint32_t d = static_cast<std::uint32_t>(_mm_cvtsi128_si32(s));
  for (; i < n; ++i) d += a[i];
  return d;
}

int lex_cmp_avx2(const Exp* a, const Exp* b, std::size_t n) {
  std::size_t i = 0;
  for (; i + 16 <= n; i += 16) {
    __m256i eq = _mm256_cmpeq_epi16(load(a + i), load(b + i));
    auto mask = static_cast<std::uint32_t>(_mm256_movemask_epi8(eq));
    if (mask != 0xffffffffu) {
      std::size_t lane = std::countr_zero(~mask) / 2;
      std::size_t k = i + lane;
      return a[k] > b[k] ? 1 : -1;
    }
  }
  for (; i < n; ++i)
    if (a[i] != b[i]) return a[i] > b[i] ? 1 : -1;
  return 0;
}

int revlex_cmp_avx2(const Exp* a, const Exp* b, std::size_t n) {
  std::size_t tail = n % 16;
  for (std::size_t i = n; i-- > n - tail;)
    if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
  for (std::size_t i = n - tail; i >= 16;) {
    i -= 16;
    __m256i eq = _mm256_cmpeq_epi16(load(a + i), load(b + i));
    auto mask = static_cast<std::uint32_t>(_mm256_movemask_epi8(eq));
    if (mask != 0xffffffffu) {
      std::size_t lane = (31 - std::countl_zero(~mask)) / 2;
      std::size_t k = i + lane;
      return a[k] < b[k] ? 1 : -1;
    }
  }
  return 0;
}

constexpr Ops kAvx2Ops = {
    "avx2",        add_avx2,     sub_avx2,   max_avx2,
    divides_avx2,  disjoint_avx2, equal_avx2, total_deg_avx2,
    lex_cmp_avx2,  revlex_cmp_avx2,
};

}  // namespace

const Ops& avx2_ops() { return kAvx2Ops; }

}  // namespace minvar::kern

#endif  // MINVAR_HAVE_AVX2
