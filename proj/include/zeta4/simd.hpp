#pragma once
// Batched floor sums sum_t w_t floor((a_t X + b_t Y_i + c_t Z_i) / D) over
// sample points (Y_i, Z_i): an exact int64 reference kernel and an AVX2
// double-precision variant selected at runtime.

#include <cstddef>
#include <cstdint>

namespace zeta4::simd {

struct FloorTerm {
    long a = 0, b = 0, c = 0;  // coefficients of X, Y, Z
    int w = 0;
};

enum class Backend { Scalar, Avx2 };

bool avx2_available();
/// AVX2 when the CPU supports it, unless ZETA4_SIMD=scalar.
Backend active_backend();
const char* backend_name(Backend b);

/// out[i] = sum_t w_t floor((a_t X + b_t Y[i] + c_t Z[i]) / D), D > 0.
/// The AVX2 path is exact while every numerator stays below 2^50 in
/// magnitude; larger inputs fall back to the scalar kernel.
void floor_sums(Backend backend, const FloorTerm* terms, std::size_t nterms, long X, long D, const long* Y,
                const long* Z, std::size_t n, int* out);

/// Minimum of floor_sums over the n >= 1 samples.
int floor_sums_min(Backend backend, const FloorTerm* terms, std::size_t nterms, long X, long D, const long* Y,
                   const long* Z, std::size_t n);

}  // namespace zeta4::simd
