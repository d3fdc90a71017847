#include "zeta4/simd.hpp"

#include <algorithm>
#include <climits>
#include <cstdlib>
#include <cstring>
#include <vector>

#if defined(__x86_64__) || defined(__i386__)
#include <immintrin.h>
#define ZETA4_X86 1
#endif

namespace zeta4::simd {

namespace {

long floor_div(long n, long d) {
    long q = n / d;
    if ((n % d != 0) && ((n < 0) != (d < 0))) --q;
    return q;
}

void scalar_kernel(const FloorTerm* terms, std::size_t nterms, long X, long D, const long* Y, const long* Z,
                   std::size_t n, int* out) {
    for (std::size_t i = 0; i < n; ++i) {
        long acc = 0;
        for (std::size_t t = 0; t < nterms; ++t) {
            const FloorTerm& f = terms[t];
            acc += f.w * floor_div(f.a * X + f.b * Y[i] + f.c * Z[i], D);
        }
        out[i] = static_cast<int>(acc);
    }
}

bool fits_double(const FloorTerm* terms, std::size_t nterms, long X, long D, const long* Y, const long* Z,
                 std::size_t n) {
    constexpr long kLimit = 1L << 50;
    long ymax = 0, zmax = 0;
    for (std::size_t i = 0; i < n; ++i) {
        ymax = std::max(ymax, std::labs(Y[i]));
        zmax = std::max(zmax, std::labs(Z[i]));
    }
    if (D >= kLimit || ymax >= kLimit || zmax >= kLimit || std::labs(X) >= kLimit) return false;
    for (std::size_t t = 0; t < nterms; ++t) {
        const FloorTerm& f = terms[t];
        // |a X| + |b Y| + |c Z| < 2^50, checked without overflow
        const long ca = std::labs(f.a), cb = std::labs(f.b), cc = std::labs(f.c);
        if (ca != 0 && std::labs(X) > kLimit / ca) return false;
        if (cb != 0 && ymax > kLimit / cb) return false;
        if (cc != 0 && zmax > kLimit / cc) return false;
        if (ca * std::labs(X) + cb * ymax + cc * zmax >= kLimit) return false;
    }
    return true;
}

#ifdef ZETA4_X86
// Numerators are integers below 2^50, so they and D are exact doubles; the
// correctly rounded quotient of two integers lands on an integer only when
// the division is exact, and otherwise stays at least 1/D away from one.
__attribute__((target("avx2"))) void avx2_kernel(const FloorTerm* terms, std::size_t nterms, long X, long D,
                                                  const long* Y, const long* Z, std::size_t n, int* out) {
    const __m256d vd = _mm256_set1_pd(static_cast<double>(D));
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        const __m256d y = _mm256_set_pd(static_cast<double>(Y[i + 3]), static_cast<double>(Y[i + 2]),
                                        static_cast<double>(Y[i + 1]), static_cast<double>(Y[i]));
        const __m256d z = _mm256_set_pd(static_cast<double>(Z[i + 3]), static_cast<double>(Z[i + 2]),
                                        static_cast<double>(Z[i + 1]), static_cast<double>(Z[i]));
        __m256d acc = _mm256_setzero_pd();
        for (std::size_t t = 0; t < nterms; ++t) {
            const FloorTerm& f = terms[t];
            __m256d num = _mm256_set1_pd(static_cast<double>(f.a * X));
            if (f.b != 0) num = _mm256_add_pd(num, _mm256_mul_pd(_mm256_set1_pd(static_cast<double>(f.b)), y));
            if (f.c != 0) num = _mm256_add_pd(num, _mm256_mul_pd(_mm256_set1_pd(static_cast<double>(f.c)), z));
            const __m256d q = _mm256_floor_pd(_mm256_div_pd(num, vd));
            acc = _mm256_add_pd(acc, _mm256_mul_pd(_mm256_set1_pd(static_cast<double>(f.w)), q));
        }
        const __m128i r = _mm256_cvtpd_epi32(acc);
        _mm_storeu_si128(reinterpret_cast<__m128i*>(out + i), r);
    }
    if (i < n) scalar_kernel(terms, nterms, X, D, Y + i, Z + i, n - i, out + i);
}
#endif

}  // namespace

bool avx2_available() {
#ifdef ZETA4_X86
    static const bool ok = __builtin_cpu_supports("avx2");
    return ok;
#else
    return false;
#endif
}

Backend active_backend() {
    const char* env = std::getenv("ZETA4_SIMD");
    if (env != nullptr && std::strcmp(env, "scalar") == 0) return Backend::Scalar;
    return avx2_available() ? Backend::Avx2 : Backend::Scalar;
}

const char* backend_name(Backend b) { return b == Backend::Avx2 ? "avx2" : "scalar"; }

void floor_sums(Backend backend, const FloorTerm* terms, std::size_t nterms, long X, long D, const long* Y,
                const long* Z, std::size_t n, int* out) {
#ifdef ZETA4_X86
    if (backend == Backend::Avx2 && avx2_available() && fits_double(terms, nterms, X, D, Y, Z, n)) {
        avx2_kernel(terms, nterms, X, D, Y, Z, n, out);
        return;
    }
#endif
    (void)backend;
    scalar_kernel(terms, nterms, X, D, Y, Z, n, out);
}

int floor_sums_min(Backend backend, const FloorTerm* terms, std::size_t nterms, long X, long D, const long* Y,
                   const long* Z, std::size_t n) {
    thread_local std::vector<int> buf;
    buf.resize(n);
    floor_sums(backend, terms, nterms, X, D, Y, Z, n, buf.data());
    return *std::min_element(buf.begin(), buf.end());
}

}  // namespace zeta4::simd
