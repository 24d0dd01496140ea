#pragma once

// Double-precision inner-product kernels used by the leaf-count recurrences
// and by the exact convolution powers of leaf-count laws. A scalar and an
// AVX2 variant exist; the AVX2 one is chosen at runtime when the CPU
// supports it. COGRAPH_ISA=scalar in the environment forces the scalar path.

#include <cstddef>
#include <span>
#include <string>

namespace cograph::kernels {

enum class Isa { scalar, avx2 };

bool avx2_available();
Isa active_isa();
// Throws std::runtime_error when the requested variant is not available.
void set_isa(Isa isa);
std::string isa_name(Isa isa);

double dot(const double* a, const double* b, std::size_t n);
// sum_{k<n} a[k] * b[n-1-k]
double dot_reversed(const double* a, const double* b, std::size_t n);
// out[m] = sum_{j=0}^{m} a[j] b[m-j] for m < out.size(); a and b are
// zero-padded past their ends.
void convolve(std::span<const double> a, std::span<const double> b, std::span<double> out);

namespace scalar {
double dot(const double* a, const double* b, std::size_t n);
double dot_reversed(const double* a, const double* b, std::size_t n);
}  // namespace scalar

namespace avx2 {
double dot(const double* a, const double* b, std::size_t n);
double dot_reversed(const double* a, const double* b, std::size_t n);
}  // namespace avx2

}  // namespace cograph::kernels
