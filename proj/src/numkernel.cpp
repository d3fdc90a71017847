#include "zeta4/numkernel.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>
#include <regex>

namespace zeta4 {

ExactRat pochhammer(const ExactRat& x, long m) {
    if (m < 0) throw Error("domain", "pochhammer length must be nonnegative");
    ExactRat acc = 1;
    ExactRat term = x;
    for (long i = 0; i < m; ++i) {
        acc *= term;
        if (acc == 0) return acc;
        term += 1;
    }
    return acc;
}

ExactRat pochhammer_logderiv(const ExactRat& x, long m) {
    ExactRat acc = 0;
    ExactRat term = x;
    for (long i = 0; i < m; ++i) {
        if (term == 0) throw Error("pole", "pochhammer_logderiv: factor x+" + std::to_string(i) + " vanishes");
        acc += 1 / term;
        term += 1;
    }
    return acc;
}

ExactInt rising_binomial(long x, long m) {
    if (m < 0) throw Error("domain", "rising_binomial length must be nonnegative");
    // (x)_m / m! = binom(x+m-1, m); GMP accepts a negative top.
    ExactInt top = x;
    top += m - 1;
    ExactInt r;
    mpz_bin_ui(r.get_mpz_t(), top.get_mpz_t(), static_cast<unsigned long>(m));
    return r;
}

ExactRat rising_binomial_deriv(long x, long m) {
    if (m == 0) return 0;
    if (x <= 0 && x + m - 1 >= 0) {
        // exactly one factor vanishes (at i0 = -x); the derivative is the product of the rest
        long i0 = -x;
        // prod_{i != i0} (x+i) = prod_{k=-i0}^{-1} k * prod_{k=1}^{m-1-i0} k
        ExactInt prod = factorial(i0) * factorial(m - 1 - i0);
        if (i0 % 2) prod = -prod;
        ExactRat r(prod, factorial(m));
        r.canonicalize();
        return r;
    }
    ExactRat base(rising_binomial(x, m));
    return base * pochhammer_logderiv(ExactRat(x), m);
}

ExactInt factorial(long n) {
    if (n < 0) throw Error("domain", "factorial of negative number");
    ExactInt r;
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
    return r;
}

ExactInt binomial(long n, long k) {
    if (k < 0) return 0;
    ExactInt top = n;
    ExactInt r;
    mpz_bin_ui(r.get_mpz_t(), top.get_mpz_t(), static_cast<unsigned long>(k));
    return r;
}

ExactInt lcm_upto(long n) {
    ExactInt r = 1;
    for (long p : primes_between(ExactRat(0), n)) {
        long pk = p;
        while (pk <= n / p) pk *= p;
        r *= pk;
    }
    return r;
}

namespace {

std::vector<long> simple_sieve(long limit) {
    std::vector<long> primes;
    if (limit < 2) return primes;
    std::vector<char> mark(static_cast<size_t>(limit) + 1, 1);
    mark[0] = mark[1] = 0;
    for (long i = 2; i * i <= limit; ++i)
        if (mark[i])
            for (long j = i * i; j <= limit; j += i) mark[j] = 0;
    for (long i = 2; i <= limit; ++i)
        if (mark[i]) primes.push_back(i);
    return primes;
}

long isqrt(long n) {
    long r = static_cast<long>(std::sqrt(static_cast<double>(n)));
    while (r * r > n) --r;
    while ((r + 1) * (r + 1) <= n) ++r;
    return r;
}

}  // namespace

std::vector<long> primes_between(const ExactRat& lo, long hi) {
    std::vector<long> out;
    if (hi < 2) return out;
    // first candidate: floor(lo) + 1
    ExactInt fl;
    mpz_fdiv_q(fl.get_mpz_t(), lo.get_num_mpz_t(), lo.get_den_mpz_t());
    long start = fl.fits_slong_p() ? fl.get_si() + 1 : (fl > 0 ? hi + 1 : 2);
    start = std::max(start, 2L);
    if (start > hi) return out;

    const auto base = simple_sieve(isqrt(hi));
    constexpr long kSegment = 1 << 15;
    std::vector<char> seg;
    for (long low = start; low <= hi; low += kSegment) {
        long high = std::min(hi, low + kSegment - 1);
        seg.assign(static_cast<size_t>(high - low + 1), 1);
        for (long p : base) {
            if (p * p > high) break;
            long first = std::max(p * p, ((low + p - 1) / p) * p);
            for (long j = first; j <= high; j += p) seg[j - low] = 0;
        }
        for (long i = low; i <= high; ++i)
            if (seg[i - low]) out.push_back(i);
    }
    return out;
}

long p_adic_ord(const ExactInt& q, long p) {
    if (q == 0) return kInfiniteOrd;
    ExactInt pz = p;
    ExactInt rest;
    return static_cast<long>(mpz_remove(rest.get_mpz_t(), q.get_mpz_t(), pz.get_mpz_t()));
}

long p_adic_ord(const ExactRat& q, long p) {
    if (q == 0) return kInfiniteOrd;
    return p_adic_ord(ExactInt(q.get_num()), p) - p_adic_ord(ExactInt(q.get_den()), p);
}

// ---------------------------------------------------------------- BigReal

BigReal::BigReal(mpfr_prec_t prec) {
    mpfr_init2(v_, prec);
    mpfr_set_zero(v_, 1);
}

BigReal::BigReal(double v, mpfr_prec_t prec) {
    mpfr_init2(v_, prec);
    mpfr_set_d(v_, v, MPFR_RNDN);
}

BigReal::BigReal(const ExactInt& v, mpfr_prec_t prec) {
    mpfr_init2(v_, prec);
    mpfr_set_z(v_, v.get_mpz_t(), MPFR_RNDN);
}

BigReal::BigReal(const ExactRat& v, mpfr_prec_t prec) {
    mpfr_init2(v_, prec);
    mpfr_set_q(v_, v.get_mpq_t(), MPFR_RNDN);
}

BigReal::BigReal(const BigReal& other) {
    mpfr_init2(v_, other.precision());
    mpfr_set(v_, other.v_, MPFR_RNDN);
}

BigReal::BigReal(BigReal&& other) noexcept {
    mpfr_init2(v_, other.precision());
    mpfr_swap(v_, other.v_);
}

BigReal& BigReal::operator=(const BigReal& other) {
    if (this != &other) {
        mpfr_set_prec(v_, other.precision());
        mpfr_set(v_, other.v_, MPFR_RNDN);
    }
    return *this;
}

BigReal& BigReal::operator=(BigReal&& other) noexcept {
    mpfr_swap(v_, other.v_);
    return *this;
}

BigReal::~BigReal() { mpfr_clear(v_); }

std::string BigReal::to_string(int digits) const {
    char* buf = nullptr;
    mpfr_asprintf(&buf, "%.*Rg", digits, v_);
    std::string s(buf);
    mpfr_free_str(buf);
    return s;
}

namespace {
mpfr_prec_t join(const BigReal& a, const BigReal& b) { return std::max(a.precision(), b.precision()); }
}  // namespace

BigReal operator+(const BigReal& a, const BigReal& b) {
    BigReal r(join(a, b));
    mpfr_add(r.get(), a.get(), b.get(), MPFR_RNDN);
    return r;
}

BigReal operator-(const BigReal& a, const BigReal& b) {
    BigReal r(join(a, b));
    mpfr_sub(r.get(), a.get(), b.get(), MPFR_RNDN);
    return r;
}

BigReal operator*(const BigReal& a, const BigReal& b) {
    BigReal r(join(a, b));
    mpfr_mul(r.get(), a.get(), b.get(), MPFR_RNDN);
    return r;
}

BigReal operator/(const BigReal& a, const BigReal& b) {
    BigReal r(join(a, b));
    mpfr_div(r.get(), a.get(), b.get(), MPFR_RNDN);
    return r;
}

BigReal BigReal::operator-() const {
    BigReal r(precision());
    mpfr_neg(r.get(), v_, MPFR_RNDN);
    return r;
}

BigReal BigReal::abs() const {
    BigReal r(precision());
    mpfr_abs(r.get(), v_, MPFR_RNDN);
    return r;
}

BigReal BigReal::log() const {
    if (mpfr_sgn(v_) <= 0) throw Error("domain", "log of nonpositive value");
    BigReal r(precision());
    mpfr_log(r.get(), v_, MPFR_RNDN);
    return r;
}

BigReal zeta_const(int k, mpfr_prec_t prec) {
    if (k < 2 || k > 5) throw Error("domain", "zeta_const supports k = 2..5");
    BigReal r(prec);
    mpfr_zeta_ui(r.get(), static_cast<unsigned long>(k), MPFR_RNDN);
    return r;
}

const ExactRat& bernoulli(int k) {
    static std::mutex mu;
    static std::vector<ExactRat> cache{ExactRat(1)};
    std::lock_guard lock(mu);
    while (static_cast<int>(cache.size()) <= k) {
        // sum_{i=0}^{m} binom(m+1, i) B_i = 0
        const long m = static_cast<long>(cache.size());
        ExactRat s = 0;
        for (long i = 0; i < m; ++i) s += ExactRat(binomial(m + 1, i)) * cache[i];
        ExactRat b = -s / ExactRat(m + 1);
        b.canonicalize();
        cache.push_back(b);
    }
    return cache[static_cast<size_t>(k)];
}

BigReal digamma(const ExactRat& x, mpfr_prec_t prec) {
    if (x <= 0) throw Error("domain", "digamma needs x > 0");
    const mpfr_prec_t wp = prec + 32;
    // shift x upward until x + N >= prec/4, then use the asymptotic series
    const double threshold = std::max(8.0, static_cast<double>(prec) / 4.0);
    BigReal y(x, wp);
    BigReal shift_sum(wp);
    BigReal one(1.0, wp);
    while (y.to_double() < threshold) {
        shift_sum = shift_sum + one / y;
        y = y + one;
    }
    BigReal result = y.log() - one / (BigReal(2.0, wp) * y);
    BigReal y2 = y * y;
    BigReal ypow = y2;
    BigReal eps(1.0, wp);
    mpfr_mul_2si(eps.get(), eps.get(), -static_cast<long>(wp), MPFR_RNDN);
    for (int k = 1; k < 10000; ++k) {
        BigReal term = BigReal(bernoulli(2 * k), wp) / (BigReal(2.0 * k, wp) * ypow);
        result = result - term;
        if (term.abs() < eps) break;
        ypow = ypow * y2;
    }
    BigReal out(prec);
    mpfr_sub(out.get(), result.get(), shift_sum.get(), MPFR_RNDN);
    return out;
}

ExactRat parse_rational(const std::string& s) {
    static const std::regex form(R"(^\s*([+-]?)(\d+)(?:\.(\d*))?(?:/(\d+))?\s*$)");
    std::smatch m;
    if (!std::regex_match(s, m, form) || (m[3].matched && m[4].matched)) throw Error("parse", "not a rational: '" + s + "'");
    ExactInt num(m[2].str(), 10), den(1);
    if (m[3].matched) {
        const std::string frac = m[3].str();
        num = ExactInt(m[2].str() + frac, 10);
        mpz_ui_pow_ui(den.get_mpz_t(), 10, frac.size());
    }
    if (m[4].matched) den = ExactInt(m[4].str(), 10);
    if (den == 0) throw Error("parse", "zero denominator in '" + s + "'");
    if (m[1].str() == "-") num = -num;
    ExactRat r(num, den);
    r.canonicalize();
    return r;
}

}  // namespace zeta4
