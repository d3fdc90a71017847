#include "zeta4/forms.hpp"

#include "zeta4/parallel.hpp"

#include <algorithm>
#include <atomic>
#include <vector>

namespace zeta4 {

namespace {

std::atomic<bool> g_fault{false};

// (x)_m / m! and its x-derivative at rational x
std::pair<ExactRat, ExactRat> rising_pair(const ExactRat& x, long m) {
    ExactRat mf(factorial(m));
    long zero_at = -1;
    for (long i = 0; i < m; ++i)
        if (x + i == 0) zero_at = i;
    if (zero_at < 0) {
        ExactRat v = pochhammer(x, m) / mf;
        return {v, v * pochhammer_logderiv(x, m)};
    }
    ExactRat d = 1;
    for (long i = 0; i < m; ++i)
        if (i != zero_at) d *= x + i;
    return {ExactRat(0), ExactRat(d / mf)};
}

ExactInt signed_binomial(long top, long k, long a0) {
    ExactInt c = binomial(top, k - a0);
    if ((k + a0) % 2 != 0) c = -c;
    return c;
}

ExactInt scaled_int(const ExactRat& q, const ExactInt& scale) {
    ExactRat s = q * scale;
    if (s.get_den() != 1) throw Error("pole-range", "derivative not cleared by lcm scaling");
    return s.get_num();
}

// value and scale*derivative of prod_r (x_r)_{len_r}/len_r! with x_r = base_r + shift
// for integer arguments; sign multiplies the derivative
struct ProductEval {
    ExactInt value;
    ExactInt dscaled;
};

ProductEval product_eval(const std::array<long, 3>& base, const std::array<long, 3>& len, long shift, int sign,
                         const ExactInt& scale) {
    std::array<ExactInt, 3> f;
    std::array<ExactInt, 3> df;
    int zeros = 0;
    for (int r = 0; r < 3; ++r) {
        f[r] = rising_binomial(base[r] + shift, len[r]);
        if (f[r] == 0) ++zeros;
    }
    ProductEval out;
    out.value = f[0] * f[1] * f[2];
    out.dscaled = 0;
    if (zeros >= 2) return out;
    for (int r = 0; r < 3; ++r) {
        ExactInt others = 1;
        for (int s = 0; s < 3; ++s)
            if (s != r) others *= f[s];
        if (others == 0) continue;
        out.dscaled += scaled_int(rising_binomial_deriv(base[r] + shift, len[r]), scale) * others;
    }
    if (sign < 0) out.dscaled = -out.dscaled;
    return out;
}

}  // namespace

void set_fault_injection(bool on) { g_fault.store(on); }
bool fault_injection() { return g_fault.load(); }

std::pair<ExactRat, ExactRat> coeff_A_eval(const ABParams& ab, long k, const ExactRat& t) {
    if (k < ab.a0() || k > ab.b0() - 1) throw Error("invalid-params", "k outside [a0, b0-1]");
    long top = ab.b0() - ab.a0() - 1 + (fault_injection() ? 1 : 0);
    ExactRat c(signed_binomial(top, k, ab.a0()));
    std::array<std::pair<ExactRat, ExactRat>, 3> f;
    for (int i = 0; i < 3; ++i) {
        int r = 2 * i + 1;
        f[i] = rising_pair(ExactRat(-t - k + ab.b(r)), ab.a(r) - ab.b(r));
    }
    ExactRat value = c * f[0].first * f[1].first * f[2].first;
    // d/dt of g(-t - k + b) is -g'
    ExactRat deriv = -c * (f[0].second * f[1].first * f[2].first + f[0].first * f[1].second * f[2].first +
                           f[0].first * f[1].first * f[2].second);
    return {value, deriv};
}

PartialFractionData decompose(const ABParams& ab, std::optional<long> nu0_opt, unsigned jobs) {
    const long a0 = ab.a0(), b0 = ab.b0();
    const long nu_min = 1 - ab.a_star(3), nu_max = 1 - ab.b_star(3);
    const long nu0 = nu0_opt.value_or(nu_min);
    if (nu0 < nu_min || nu0 > nu_max) throw Error("invalid-params", "nu0 outside [1-a3*, 1-b3*]");

    std::array<long, 3> odd_b{}, odd_len{}, even_b{}, even_len{};
    long max_len = 0;
    for (int i = 0; i < 3; ++i) {
        odd_b[i] = ab.b(2 * i + 1);
        odd_len[i] = ab.a(2 * i + 1) - odd_b[i];
        even_b[i] = ab.b(2 * i + 2);
        even_len[i] = ab.a(2 * i + 2) - even_b[i];
        if (odd_len[i] < 0 || even_len[i] < 0) throw Error("invalid-params", "a_r < b_r");
        max_len = std::max({max_len, odd_len[i], even_len[i]});
    }
    const ExactInt L = lcm_upto(max_len);

    const long top = b0 - a0 - 1 + (fault_injection() ? 1 : 0);
    std::vector<ExactInt> c(static_cast<size_t>(b0 - a0));
    for (long k = a0; k < b0; ++k) c[static_cast<size_t>(k - a0)] = signed_binomial(top, k, a0);

    PartialFractionData pf{ab, nu0, a0 + nu0, b0 - 2 + nu0, {}, {}};
    if (pf.j_hi < pf.j_lo) return pf;

    // A_k(-j) = c_k Q(k - j); the odd-slot product only depends on m = k - j
    const long m_lo = 1 - nu0, m_hi = b0 - 1 - pf.j_lo;
    std::vector<ProductEval> Q(static_cast<size_t>(m_hi - m_lo + 1));
    std::vector<long> live;  // m with Q or Q' nonzero
    for (long m = m_lo; m <= m_hi; ++m) {
        ProductEval q = product_eval(odd_b, odd_len, -m, -1, L);
        if (q.value != 0 || q.dscaled != 0) live.push_back(m);
        Q[static_cast<size_t>(m - m_lo)] = std::move(q);
    }

    struct Residue {
        ExactInt B;
        ExactRat C;
    };
    const long count = pf.j_hi - pf.j_lo + 1;
    auto residues = parallel_map(static_cast<size_t>(count), jobs, [&](size_t idx) -> Residue {
        const long j = pf.j_lo + static_cast<long>(idx);
        ProductEval P = product_eval(even_b, even_len, -j, +1, L);
        if (P.value == 0 && P.dscaled == 0) return {ExactInt(0), ExactRat(0)};
        ExactInt T = 0, dT = 0;
        const long m_end = b0 - 1 - j;
        for (long m : live) {
            if (m > m_end) break;
            const ExactInt& ck = c[static_cast<size_t>(j + m - a0)];
            const ProductEval& q = Q[static_cast<size_t>(m - m_lo)];
            if (q.value != 0) T += ck * q.value;
            if (q.dscaled != 0) dT += ck * q.dscaled;
        }
        Residue r;
        r.B = -P.value * T;
        r.C = ExactRat(-(P.dscaled * T + P.value * dT), L);
        r.C.canonicalize();
        return r;
    });

    const long a2 = ab.a_star(2);
    for (long idx = 0; idx < count; ++idx) {
        const long j = pf.j_lo + idx;
        Residue& r = residues[static_cast<size_t>(idx)];
        if (j < a2 && (r.B != 0 || r.C != 0))
            throw Error("pole-range", "nonzero residue at t = " + std::to_string(-j) + " right of the contour");
        if (r.B != 0) pf.B.emplace(j, std::move(r.B));
        if (r.C != 0) pf.C.emplace(j, std::move(r.C));
    }
    return pf;
}

std::pair<ExactInt, ExactRat> half_form(const PartialFractionData& pf) {
    // t-contour just left of 1 - b6*: the tail sum for the pole at -j starts
    // at 1/(j - b6* + 1). With the s-contour just left of 1 - b5* the kernel
    // poles s = -t - k crossed after splitting sin(pi(s+t)) give boundary
    // terms that cancel between the two halves.
    const long b6 = pf.ab.b_star(6);
    long j_max = b6;
    if (!pf.B.empty()) j_max = std::max(j_max, pf.B.rbegin()->first);
    if (!pf.C.empty()) j_max = std::max(j_max, pf.C.rbegin()->first);
    const long N = j_max - b6;
    const ExactInt d = lcm_upto(N);
    const ExactInt D = d * d * d * d;

    ExactInt u = 0;
    ExactInt num4 = 0;  // sum B_j * D*S4(j - b6*)
    ExactRat num3 = 0;  // sum C_j * D*S3(j - b6*)
    ExactInt s4 = 0, s3 = 0;
    long l = 0;
    for (long j = b6; j <= j_max; ++j) {
        for (; l < j - b6; ) {
            ++l;
            ExactInt l3 = ExactInt(l) * l * l;
            s3 += D / l3;
            s4 += D / (l3 * l);
        }
        auto b = pf.B.find(j);
        if (b != pf.B.end()) {
            u += b->second;
            num4 += b->second * s4;
        }
        auto cc = pf.C.find(j);
        if (cc != pf.C.end()) num3 += cc->second * ExactRat(s3);
    }
    ExactRat v = (ExactRat(3 * num4) + num3) / ExactRat(D);
    v.canonicalize();
    return {ExactInt(3 * u), v};
}

CrossingTerms crossing_terms(const ABParams& ab, unsigned jobs) {
    CrossingTerms out;
    const long a0 = ab.a0(), b0 = ab.b0();
    out.nu = 1 - ab.b_star(6);
    out.k_lo = a0;
    out.k_hi = std::min(ab.b_star(5) + ab.b_star(6) - 2, b0 - 1);
    if (out.k_hi < out.k_lo) return out;

    std::array<long, 3> odd_b{}, odd_len{}, even_b{}, even_len{};
    long degree = 0;
    for (int i = 0; i < 3; ++i) {
        odd_b[i] = ab.b(2 * i + 1);
        odd_len[i] = ab.a(2 * i + 1) - odd_b[i];
        even_b[i] = ab.b(2 * i + 2);
        even_len[i] = ab.a(2 * i + 2) - even_b[i];
        degree += odd_len[i] + even_len[i];
    }
    // g with g(t+1) - g(t) = f(t) has degree deg f + 1 = N; interpolate it on
    // the nodes nu, ..., nu + N with g(nu) = 0
    const long N = degree + 1;
    const long top = b0 - a0 - 1 + (fault_injection() ? 1 : 0);
    std::vector<ExactInt> c;
    for (long k = out.k_lo; k <= out.k_hi; ++k) c.push_back(signed_binomial(top, k, a0));

    // Q(m) = prod_odd (m + b_r)_{len_r} / len_r! for m = -(nu + l) - k
    const long m_lo = -(out.nu + N - 1) - out.k_hi, m_hi = -out.nu - out.k_lo;
    auto Q = parallel_map(static_cast<size_t>(m_hi - m_lo + 1), jobs, [&](size_t idx) {
        const long m = m_lo + static_cast<long>(idx);
        ExactInt q = 1;
        for (int i = 0; i < 3 && q != 0; ++i) q *= rising_binomial(m + odd_b[i], odd_len[i]);
        return q;
    });
    auto f = parallel_map(static_cast<size_t>(N), jobs, [&](size_t l) {
        const long t = out.nu + static_cast<long>(l);
        ExactInt p = 1;
        for (int i = 0; i < 3 && p != 0; ++i) p *= rising_binomial(t + even_b[i], even_len[i]);
        if (p == 0) return ExactInt(0);
        ExactInt sum = 0;
        for (long k = out.k_lo; k <= out.k_hi; ++k) {
            const ExactInt& q = Q[static_cast<size_t>(-t - k - m_lo)];
            if (q != 0) sum += c[static_cast<size_t>(k - out.k_lo)] * q;
        }
        return ExactInt(p * sum);
    });

    // [x^2] and [x^4] of the Lagrange basis polynomial of node i among 0..N:
    // (-1)^i binom(N, i) / i times e_1, e_3 of {1/j : 1 <= j <= N, j != i}
    const ExactInt L = lcm_upto(N);
    ExactInt H1 = 0, H2 = 0, H3 = 0;  // L^k * sum 1/j^k
    for (long j = 1; j <= N; ++j) {
        ExactInt lj = L / j;
        H1 += lj;
        H2 += lj * lj;
        H3 += lj * lj * lj;
    }
    ExactInt g = 0, acc2 = 0, acc4 = 0;
    for (long i = 1; i <= N; ++i) {
        g += f[static_cast<size_t>(i - 1)];
        if (g == 0) continue;
        const ExactInt li = L / i;
        const ExactInt p1 = H1 - li, p2 = H2 - li * li, p3 = H3 - li * li * li;
        ExactInt w = binomial(N, i) * li * g;
        if (i % 2 != 0) w = -w;
        acc2 += w * p1;
        acc4 += w * (p1 * p1 * p1 - 3 * p1 * p2 + 2 * p3);
    }
    // J = g''''(nu)/24 + zeta(2) g''(nu): the kernel pi^5 cos/sin^5 has
    // Laurent part x^-5 + (pi^2/3) x^-3 and no x^-1 term
    const ExactInt L2 = L * L;
    out.z2 = ExactRat(2 * acc2, L2);
    out.z2.canonicalize();
    out.rational = ExactRat(acc4, 6 * L2 * L2);
    out.rational.canonicalize();
    return out;
}

LinearForm assemble_form(const ABParams& ab, unsigned jobs) {
    const ABParams mirror = ab.reflected();
    struct Half {
        std::pair<ExactInt, ExactRat> form;
        CrossingTerms crossing;
    };
    const unsigned inner = jobs == 1 ? 1 : std::max(1u, (jobs == 0 ? default_jobs() : jobs) / 2);
    auto halves = parallel_map(2, jobs, [&](size_t i) {
        const ABParams& side = i == 0 ? ab : mirror;
        return Half{half_form(decompose(side, std::nullopt, inner)), crossing_terms(side, inner)};
    });
    auto& first = halves[0].form;
    auto& second = halves[1].form;
    const CrossingTerms& x1 = halves[0].crossing;
    const CrossingTerms& x2 = halves[1].crossing;
    if (x1.z2 + x2.z2 != 0) throw Error("internal", "zeta(2) parts of the crossing terms do not cancel");
    LinearForm f;
    f.u = first.first + second.first;
    f.v = first.second + second.second - x1.rational - x2.rational;
    f.v.canonicalize();
    std::tie(f.m1, f.m2) = denominator_orders(ab);
    return f;
}

LinearForm symmetric_form(long n, unsigned jobs) {
    if (n < 1) throw Error("invalid-params", "n must be >= 1");
    LinearForm f = assemble_form(h_to_ab(from_eta(Eta{3, 3, {1, 1, 1, 1, 1, 1}}, n)), jobs);
    f.n = n;
    f.family = FormFamily::Symmetric;
    return f;
}

int series_sign(const HParams& h) {
    long s = 0;
    for (long x : h.h) s += x;
    return s % 2 == 0 ? 1 : -1;
}

SeriesForm series_oracle(const HParams& h) {
    if (!validate_h(h).ok()) throw Error("invalid-params", validate_h(h).first_failure());
    const long h0 = h.h0, hm1 = h.hm1;
    auto H = [&](int j) { return h.at(j); };

    // R(t) = K * prod (t + s)^{mult}
    std::map<ExactRat, long> mult;
    auto run = [&](long start, long count, long sign) {
        if (count < 0) throw Error("invalid-params", "negative Pochhammer length in R(t)");
        for (long i = 0; i < count; ++i) mult[ExactRat(start + i)] += sign;
    };
    ExactRat half_h0(h0, 2);
    half_h0.canonicalize();
    mult[half_h0] += 1;
    run(1, H(1) - 1, +1);
    run(1 + h0 - H(2), H(2) - 1, +1);
    run(1 + h0 - H(5), H(5) + hm1 - h0 - 1, +1);
    run(1 + h0 - hm1, H(6) + hm1 - h0 - 1, +1);
    run(H(2), h0 - H(2) - H(4) + 1, -1);
    run(H(3), h0 - H(1) - H(3) + 1, -1);
    run(H(4), h0 - H(4) - H(6) + 1, -1);
    run(H(5), h0 - H(3) - H(5) + 1, -1);
    const ExactRat K = 2 * gamma_factor(h);

    long degree = 0;
    for (auto it = mult.begin(); it != mult.end();) {
        degree += it->second;
        it = it->second == 0 ? mult.erase(it) : std::next(it);
    }
    if (degree > -2) throw Error("degree", "R(t) has degree " + std::to_string(degree) + " > -2");

    // R' vanishes at the integers in [1 - min h_j, -max(0, h0 - h-1)], so the
    // sum may start anywhere there; start at the lowest point
    const long min_h = *std::min_element(h.h.begin(), h.h.end());
    const long t0 = 1 - min_h;
    if (t0 > -std::max(0L, h0 - hm1)) throw Error("pole-at-lattice", "empty range for the summation start");

    std::vector<ExactRat> z(8, ExactRat(0));  // z[k] multiplies zeta(k)
    ExactRat r = 0;
    for (const auto& [s0, m0] : mult) {
        if (m0 >= 0) continue;
        if (s0.get_den() != 1) throw Error("pole-at-lattice", "non-integral pole");
        const long M = -m0;
        // terms t >= t0 contribute 1/(t+s0)^k with t + s0 >= N + 1
        const long N = t0 + s0.get_num().get_si() - 1;
        if (N < 0)
            throw Error("pole-at-lattice", "pole at t = " + std::to_string(-s0.get_num().get_si()) +
                                               " inside the summation range");
        if (M + 1 >= static_cast<long>(z.size())) throw Error("degree", "pole order too large");

        // Laurent coefficients of g(eps) = K prod_{s != s0} (eps + s - s0)^{m_s}
        ExactRat g0 = K;
        std::vector<ExactRat> p(static_cast<size_t>(M), ExactRat(0));
        for (const auto& [s, m] : mult) {
            if (s == s0) continue;
            ExactRat v = s - s0;
            ExactRat vm = 1;
            for (long i = 0; i < std::abs(m); ++i) vm *= v;
            g0 = m > 0 ? ExactRat(g0 * vm) : ExactRat(g0 / vm);
            ExactRat inv = 1 / v, pw = inv;
            for (long k = 1; k < M; ++k) {
                p[static_cast<size_t>(k)] += m * pw;
                pw *= inv;
            }
        }
        std::vector<ExactRat> g(static_cast<size_t>(M), ExactRat(0));
        g[0] = g0;
        for (long n = 1; n < M; ++n) {
            ExactRat acc = 0;
            for (long k = 1; k <= n; ++k) {
                ExactRat term = p[static_cast<size_t>(k)] * g[static_cast<size_t>(n - k)];
                acc += (k % 2 == 1) ? term : ExactRat(-term);
            }
            g[static_cast<size_t>(n)] = acc / n;
        }
        // R = sum_i c_i / (t+s0)^i, c_i = g_{M-i};  -R' = sum_i i c_i / (t+s0)^{i+1}
        for (long i = 1; i <= M; ++i) {
            ExactRat coef = i * g[static_cast<size_t>(M - i)];
            if (coef == 0) continue;
            z[static_cast<size_t>(i + 1)] += coef;
            ExactRat partial = 0;
            for (long l = 1; l <= N; ++l) {
                ExactInt lp = 1;
                for (long e = 0; e <= i; ++e) lp *= l;
                partial += ExactRat(1, lp);
            }
            r -= coef * partial;
        }
    }
    for (size_t k = 6; k < z.size(); ++k)
        if (z[k] != 0) throw Error("degree", "unexpected zeta(" + std::to_string(k) + ") term");
    SeriesForm out;
    out.z2 = z[2];
    out.z3 = z[3];
    out.z4 = z[4];
    out.z5 = z[5];
    out.r = r;
    return out;
}

ExactInt gcd_phi(long n) {
    if (n < 1) throw Error("invalid-params", "n must be >= 1");
    ExactInt g = 0;
    for (long a = n; a <= 2 * n; ++a)
        for (long b = n; a + b + 1 <= 3 * n + 1; ++b) {
            ExactInt v = binomial(3 * n + 1, a + b + 1) * binomial(a, n) * binomial(b, n);
            mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
        }
    return g;
}

BigReal numeric_value(const LinearForm& f, mpfr_prec_t prec) {
    return BigReal(f.u, prec) * zeta_const(4, prec) - BigReal(f.v, prec);
}

}  // namespace zeta4
