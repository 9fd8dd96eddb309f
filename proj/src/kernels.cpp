#include "minvar/kernels.hpp"

#include <atomic>
#include <cstdlib>

namespace minvar::kern {

namespace {

void add_scalar(const Exp* a, const Exp* b, Exp* out, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) out[i] = static_cast<Exp>(a[i] + b[i]);
}

void sub_scalar(const Exp* a, const Exp* b, Exp* out, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) out[i] = static_cast<Exp>(a[i] - b[i]);
}

void max_scalar(const Exp* a, const Exp* b, Exp* out, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) out[i] = a[i] > b[i] ? a[i] : b[i];
}

bool divides_scalar(const Exp* a, const Exp* b, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i)
    if (a[i] > b[i]) return false;
  return true;
}

bool disjoint_scalar(const Exp* a, const Exp* b, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i)
    if (a[i] != 0 && b[i] != 0) return false;
  return true;
}

bool equal_scalar(const Exp* a, const Exp* b, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i)
    if (a[i] != b[i]) return false;
  return true;
}

std::uint32_t total_deg_scalar(const Exp* a, std::size_t n) {
  std::uint32_t d = 0;
  for (std::size_t i = 0; i < n; ++i) d += a[i];
  return d;
}

int lex_cmp_scalar(const Exp* a, const Exp* b, std::size_t n) {
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i] != b[i]) return a[i] > b[i] ? 1 : -1;
  }
  return 0;
}

int revlex_cmp_scalar(const Exp* a, const Exp* b, std::size_t n) {
  for (std::size_t i = n; i-- > 0;) {
    if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
  }
  return 0;
}

constexpr Ops kScalarOps = {
    "scalar",         add_scalar,       sub_scalar,   max_scalar,
    divides_scalar,   disjoint_scalar,  equal_scalar, total_deg_scalar,
    lex_cmp_scalar,   revlex_cmp_scalar,
};

const Ops* detect() {
  if (const char* env = std::getenv("MINVAR_KERNELS")) {
    std::string want(env);
#ifdef MINVAR_HAVE_AVX2
    if (want == "avx2" && __builtin_cpu_supports("avx2")) return &avx2_ops();
#endif
    if (want == "scalar") return &kScalarOps;
  }
#ifdef MINVAR_HAVE_AVX2
  if (__builtin_cpu_supports("avx2")) return &avx2_ops();
#endif
  return &kScalarOps;
}

std::atomic<const Ops*> g_active{nullptr};

}  // namespace

const Ops& scalar_ops() { return kScalarOps; }

const Ops& ops() {
  const Ops* p = g_active.load(std::memory_order_acquire);
  if (!p) {
    p = detect();
    g_active.store(p, std::memory_order_release);
  }
  return *p;
}

bool set_backend(const std::string& name) {
  if (name == "scalar") {
    g_active.store(&kScalarOps, std::memory_order_release);
    return true;
  }
#ifdef MINVAR_HAVE_AVX2
  if (name == "avx2" && __builtin_cpu_supports("avx2")) {
    g_active.store(&avx2_ops(), std::memory_order_release);
    return true;
  }
#endif
  return false;
}

std::string backend_name() { return ops().name; }

std::vector<std::string> available_backends() {
  std::vector<std::string> v{"scalar"};
#ifdef MINVAR_HAVE_AVX2
  if (__builtin_cpu_supports("avx2")) v.push_back("avx2");
#endif
  return v;
}

}  // namespace minvar::kern
