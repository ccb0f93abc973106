#pragma once

#include <cstddef>
#include <string>
#include <vector>

// Data-parallel inner loops behind the numerics module. Every entry point has
// a scalar reference implementation plus SIMD variants selected once at
// runtime (AVX2 on x86-64, NEON on aarch64).
//
// Determinism contract: all variants of one kernel return bit-identical
// results for identical inputs. Reductions therefore follow a fixed four-lane
// accumulation order regardless of instruction set:
//
//   lane[j] = sum of x[i] (i mod 4 == j),  result = (lane0+lane1)+(lane2+lane3)
//
// and the SIMD code uses separate mul/add (no FMA), matching the scalar
// reference exactly. Element-wise kernels carry no ordering concern.

namespace mlns::kernels {

struct Ops {
    const char* name;
    // dot(a, b, n): four-lane dot product.
    double (*dot)(const double* a, const double* b, std::size_t n);
    // sum(x, n): four-lane sum.
    double (*sum)(const double* x, std::size_t n);
    // max_value(x, n): maximum; order-insensitive for finite inputs. n >= 1.
    double (*max_value)(const double* x, std::size_t n);
    // axpy(a, x, y, n): y[i] += a * x[i].
    void (*axpy)(double a, const double* x, double* y, std::size_t n);
    // scale(a, x, n): x[i] *= a.
    void (*scale)(double a, double* x, std::size_t n);
};

const Ops& scalar_ops();

// Every variant the current CPU can actually run (scalar first).
std::vector<const Ops*> available_variants();

// Variant used by the wrappers below. Chosen once: the last entry of
// available_variants(), unless the MLNS_KERNELS environment variable names a
// specific variant ("scalar", "avx2", "neon").
const Ops& active();

inline double dot(const double* a, const double* b, std::size_t n) { return active().dot(a, b, n); }
inline double sum(const double* x, std::size_t n) { return active().sum(x, n); }
inline double max_value(const double* x, std::size_t n) { return active().max_value(x, n); }
inline void axpy(double a, const double* x, double* y, std::size_t n) { active().axpy(a, x, y, n); }
inline void scale(double a, double* x, std::size_t n) { active().scale(a, x, n); }

} // namespace mlns::kernels
