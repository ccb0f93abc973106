#include "mlns/kernels.hpp"

#include <algorithm>
#include <cassert>
#include <cstdlib>
#include <cstring>

namespace mlns::kernels {

// ---------------------------------------------------------------------------
// Scalar reference. The reduction loops mirror the SIMD lane layout so that
// every variant rounds identically; see the contract in kernels.hpp.
// ---------------------------------------------------------------------------

namespace {

double scalar_dot(const double* a, const double* b, std::size_t n) {
    double lane[4] = {0.0, 0.0, 0.0, 0.0};
    for (std::size_t i = 0; i < n; ++i) {
        lane[i & 3] += a[i] * b[i];
    }
    return (lane[0] + lane[1]) + (lane[2] + lane[3]);
}

double scalar_sum(const double* x, std::size_t n) {
    double lane[4] = {0.0, 0.0, 0.0, 0.0};
    for (std::size_t i = 0; i < n; ++i) {
        lane[i & 3] += x[i];
    }
    return (lane[0] + lane[1]) + (lane[2] + lane[3]);
}

double scalar_max(const double* x, std::size_t n) {
    assert(n >= 1);
    double m = x[0];
    for (std::size_t i = 1; i < n; ++i) {
        m = std::max(m, x[i]);
    }
    return m;
}

void scalar_axpy(double a, const double* x, double* y, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) {
        y[i] += a * x[i];
    }
}

void scalar_scale(double a, double* x, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) {
        x[i] *= a;
    }
}

constexpr Ops kScalarOps = {"scalar", scalar_dot, scalar_sum, scalar_max, scalar_axpy, scalar_scale};

} // namespace

const Ops& scalar_ops() { return kScalarOps; }

#if defined(MLNS_HAVE_AVX2_TU)
const Ops& avx2_ops();   // kernels_avx2.cpp
bool avx2_supported();
#endif
#if defined(MLNS_HAVE_NEON_TU)
const Ops& neon_ops();   // kernels_neon.cpp
#endif

std::vector<const Ops*> available_variants() {
    std::vector<const Ops*> out;
    out.push_back(&kScalarOps);
#if defined(MLNS_HAVE_AVX2_TU)
    if (avx2_supported()) {
        out.push_back(&avx2_ops());
    }
#endif
#if defined(MLNS_HAVE_NEON_TU)
    out.push_back(&neon_ops());
#endif
    return out;
}

const Ops& active() {
    static const Ops* chosen = [] {
        auto variants = available_variants();
        const Ops* pick = variants.back();
        if (const char* wanted = std::getenv("MLNS_KERNELS")) {
            for (const Ops* v : variants) {
                if (std::strcmp(v->name, wanted) == 0) {
                    pick = v;
                }
            }
        }
        return pick;
    }();
    return *chosen;
}

} // namespace mlns::kernels
