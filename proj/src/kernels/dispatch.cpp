#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <stdexcept>
#include <string_view>

#include "cograph/kernels.hpp"

namespace cograph::kernels {

#ifndef COGRAPH_HAVE_AVX2
namespace avx2 {
double dot(const double*, const double*, std::size_t) { throw std::runtime_error("AVX2 kernels not built"); }
double dot_reversed(const double*, const double*, std::size_t) {
  throw std::runtime_error("AVX2 kernels not built");
}
}  // namespace avx2
#endif

namespace {

Isa detect() {
  if (const char* env = std::getenv("COGRAPH_ISA"); env && std::string_view(env) == "scalar") return Isa::scalar;
  return avx2_available() ? Isa::avx2 : Isa::scalar;
}

std::atomic<Isa>& current() {
  static std::atomic<Isa> isa{detect()};
  return isa;
}

}  // namespace

bool avx2_available() {
#if defined(COGRAPH_HAVE_AVX2) && (defined(__x86_64__) || defined(__i386__))
  __builtin_cpu_init();
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
  return false;
#endif
}

Isa active_isa() { return current().load(std::memory_order_relaxed); }

void set_isa(Isa isa) {
  if (isa == Isa::avx2 && !avx2_available()) throw std::runtime_error("AVX2 is not available on this machine");
  current().store(isa, std::memory_order_relaxed);
}

std::string isa_name(Isa isa) { return isa == Isa::avx2 ? "avx2" : "scalar"; }

double dot(const double* a, const double* b, std::size_t n) {
  return active_isa() == Isa::avx2 ? avx2::dot(a, b, n) : scalar::dot(a, b, n);
}

double dot_reversed(const double* a, const double* b, std::size_t n) {
  return active_isa() == Isa::avx2 ? avx2::dot_reversed(a, b, n) : scalar::dot_reversed(a, b, n);
}

void convolve(std::span<const double> a, std::span<const double> b, std::span<double> out) {
  for (std::size_t m = 0; m < out.size(); ++m) {
    // j ranges over max(0, m - |b| + 1) .. min(m, |a| - 1)
    const std::size_t jlo = m + 1 > b.size() ? m + 1 - b.size() : 0;
    const std::size_t jhi = std::min(m + 1, a.size());
    out[m] = jhi > jlo ? dot_reversed(a.data() + jlo, b.data() + (m - (jhi - 1)), jhi - jlo) : 0.0;
  }
}

}  // namespace cograph::kernels
