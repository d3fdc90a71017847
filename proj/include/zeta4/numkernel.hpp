#pragma once
// Exact and high-precision arithmetic primitives.
//
// ExactInt / ExactRat are GMP integers and canonical rationals. BigReal is an
// MPFR value whose precision is always chosen explicitly by the caller.

#include <gmpxx.h>
#include <mpfr.h>

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

namespace zeta4 {

using ExactInt = mpz_class;
using ExactRat = mpq_class;

/// Library error with a short machine-readable kind ("pole", "domain", ...).
class Error : public std::runtime_error {
public:
    Error(std::string kind, const std::string& what)
        : std::runtime_error(kind + ": " + what), kind_(std::move(kind)) {}
    const std::string& kind() const noexcept { return kind_; }

private:
    std::string kind_;
};

/// p-adic order of zero.
inline constexpr long kInfiniteOrd = std::numeric_limits<long>::max();

/// Rising factorial x(x+1)...(x+m-1); 1 when m == 0.
ExactRat pochhammer(const ExactRat& x, long m);

/// Sum of 1/(x+i) for 0 <= i < m. Throws Error("pole") if some x+i == 0.
ExactRat pochhammer_logderiv(const ExactRat& x, long m);

/// (x)_m / m! for integer x, i.e. binom(x+m-1, m) with generalized top.
ExactInt rising_binomial(long x, long m);

/// d/dx of (x)_m / m! at integer x, exact (handles the zero factor case).
ExactRat rising_binomial_deriv(long x, long m);

ExactInt factorial(long n);
ExactInt binomial(long n, long k);

/// d_n = lcm(1, ..., n); d_0 = d_1 = 1.
ExactInt lcm_upto(long n);

/// Primes p with lo < p <= hi, ascending (segmented sieve).
std::vector<long> primes_between(const ExactRat& lo, long hi);

/// Exact value of "p/q", "-12" or "36.47011287"; throws Error("parse").
ExactRat parse_rational(const std::string& s);

/// Exponent of p in q; kInfiniteOrd for q == 0.
long p_adic_ord(const ExactRat& q, long p);
long p_adic_ord(const ExactInt& q, long p);

/// High-precision real. Every constructor takes the precision in bits.
class BigReal {
public:
    explicit BigReal(mpfr_prec_t prec);
    BigReal(double v, mpfr_prec_t prec);
    BigReal(const ExactInt& v, mpfr_prec_t prec);
    BigReal(const ExactRat& v, mpfr_prec_t prec);
    BigReal(const BigReal& other);
    BigReal(BigReal&& other) noexcept;
    BigReal& operator=(const BigReal& other);
    BigReal& operator=(BigReal&& other) noexcept;
    ~BigReal();

    mpfr_prec_t precision() const { return mpfr_get_prec(v_); }
    mpfr_srcptr get() const { return v_; }
    mpfr_ptr get() { return v_; }

    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
    /// Decimal string with `digits` significant digits.
    std::string to_string(int digits) const;
    bool is_zero() const { return mpfr_zero_p(v_) != 0; }
    int sign() const { return mpfr_sgn(v_); }

    friend BigReal operator+(const BigReal& a, const BigReal& b);
    friend BigReal operator-(const BigReal& a, const BigReal& b);
    friend BigReal operator*(const BigReal& a, const BigReal& b);
    friend BigReal operator/(const BigReal& a, const BigReal& b);
    BigReal operator-() const;
    friend bool operator<(const BigReal& a, const BigReal& b) { return mpfr_less_p(a.v_, b.v_) != 0; }
    friend bool operator>(const BigReal& a, const BigReal& b) { return mpfr_greater_p(a.v_, b.v_) != 0; }

    BigReal abs() const;
    /// Natural logarithm; the argument must be positive.
    BigReal log() const;

private:
    mpfr_t v_;
};

/// zeta(k) for k in {2,3,4}, relative error below 2^(1-prec).
BigReal zeta_const(int k, mpfr_prec_t prec);

/// Digamma function for rational x > 0. Throws Error("domain") otherwise.
BigReal digamma(const ExactRat& x, mpfr_prec_t prec);

/// Exact Bernoulli number B_k (B_1 = -1/2), cached.
const ExactRat& bernoulli(int k);

}  // namespace zeta4
