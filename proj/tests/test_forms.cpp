#include "doctest.h"
#include "zeta4/forms.hpp"

#include <random>
#include <set>

using namespace zeta4;

namespace {

const Eta kBase{68, 57, {22, 23, 24, 25, 26, 27}};
const Eta kSym{3, 3, {1, 1, 1, 1, 1, 1}};

// Dense polynomial with exact rational coefficients, test-only.
struct Poly {
    std::vector<ExactRat> c;  // c[i] * t^i

    ExactRat operator()(const ExactRat& t) const {
        ExactRat acc = 0;
        for (size_t i = c.size(); i-- > 0;) acc = acc * t + c[i];
        return acc;
    }
    Poly deriv() const {
        Poly d;
        for (size_t i = 1; i < c.size(); ++i) d.c.push_back(c[i] * ExactRat(static_cast<long>(i)));
        return d;
    }
};

// Newton interpolation through (x_i, y_i), then expanded to monomials.
Poly interpolate(const std::vector<ExactRat>& x, std::vector<ExactRat> y) {
    const size_t m = x.size();
    for (size_t k = 1; k < m; ++k)
        for (size_t i = m - 1; i >= k; --i) y[i] = (y[i] - y[i - 1]) / (x[i] - x[i - k]);
    Poly p{{y[m - 1]}};
    for (size_t k = m - 1; k-- > 0;) {
        // p = p * (t - x_k) + y_k
        Poly q{std::vector<ExactRat>(p.c.size() + 1, ExactRat(0))};
        for (size_t i = 0; i < p.c.size(); ++i) {
            q.c[i + 1] += p.c[i];
            q.c[i] -= p.c[i] * x[k];
        }
        q.c[0] += y[k];
        p = std::move(q);
    }
    return p;
}

ExactRat rising_over_fact(const ExactRat& x, long m) {
    ExactRat v = 1;
    for (long i = 0; i < m; ++i) v *= x + i;
    for (long i = 2; i <= m; ++i) v /= i;
    return v;
}

ExactInt binom(long n, long k) {
    ExactInt r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

// A_k(t) straight from its product definition.
ExactRat A_direct(const ABParams& ab, long k, const ExactRat& t) {
    ExactRat v(binom(ab.b0() - ab.a0() - 1, k - ab.a0()));
    if ((k + ab.a0()) % 2 != 0) v = -v;
    for (int r = 1; r <= 5; r += 2) v *= rising_over_fact(-t - k + ab.b(r), ab.a(r) - ab.b(r));
    return v;
}

// A_k as a polynomial in t, for an exact derivative
Poly A_poly(const ABParams& ab, long k) {
    Poly p{{ExactRat(binom(ab.b0() - ab.a0() - 1, k - ab.a0()))}};
    if ((k + ab.a0()) % 2 != 0) p.c[0] = -p.c[0];
    for (int r = 1; r <= 5; r += 2) {
        const long len = ab.a(r) - ab.b(r);
        for (long i = 0; i < len; ++i) {
            // times (-t - k + b_r + i) / (i + 1)
            ExactRat c0(-k + ab.b(r) + i, i + 1), c1(-1, i + 1);
            c0.canonicalize();
            Poly q{std::vector<ExactRat>(p.c.size() + 1, ExactRat(0))};
            for (size_t j = 0; j < p.c.size(); ++j) {
                q.c[j] += p.c[j] * c0;
                q.c[j + 1] += p.c[j] * c1;
            }
            p = std::move(q);
        }
    }
    return p;
}

ExactRat P_direct(const ABParams& ab, const ExactRat& t) {
    ExactRat v = 1;
    for (int r = 2; r <= 6; r += 2) v *= rising_over_fact(t + ab.b(r), ab.a(r) - ab.b(r));
    return v;
}

// P(t) * (-sum_k A_k(t) sum_{l=a0}^{k-1} 1/(t+l+nu0)^2)
ExactRat Htilde_direct(const ABParams& ab, long nu0, const ExactRat& t) {
    ExactRat h = 0;
    for (long k = ab.a0(); k < ab.b0(); ++k) {
        ExactRat inner = 0;
        for (long l = ab.a0(); l < k; ++l) {
            ExactRat d = t + l + nu0;
            inner += 1 / (d * d);
        }
        h -= A_direct(ab, k, t) * inner;
    }
    return P_direct(ab, t) * h;
}

// Double- and simple-pole coefficients of H~ at t = -j for j in [j_lo, j_hi],
// via M(t) = H~(t) prod_j (t+j)^2 interpolated as a polynomial.
struct Residues {
    std::map<long, ExactRat> B, C;
};

Residues residues_oracle(const ABParams& ab, long nu0, long j_lo, long j_hi) {
    long degree = 2 * (j_hi - j_lo + 1);
    for (int r = 1; r <= 6; ++r) degree += ab.a(r) - ab.b(r);
    auto D = [&](const ExactRat& t, long skip) {
        ExactRat d = 1;
        for (long j = j_lo; j <= j_hi; ++j)
            if (j != skip) d *= (t + j) * (t + j);
        return d;
    };
    std::vector<ExactRat> xs, ys;
    for (long i = 0; i <= degree; ++i) {
        ExactRat t(3 * i + 1, 3);
        xs.push_back(t);
        ys.push_back(Htilde_direct(ab, nu0, t) * D(t, j_lo - 1));
    }
    Poly M = interpolate(xs, ys);
    Poly dM = M.deriv();
    Residues out;
    for (long j = j_lo; j <= j_hi; ++j) {
        ExactRat t(-j);
        ExactRat Dj = D(t, j);
        // d/dt log prod_{i != j} (t+i)^2
        ExactRat dlog = 0;
        for (long i = j_lo; i <= j_hi; ++i)
            if (i != j) dlog += ExactRat(2) / (t + i);
        ExactRat b = M(t) / Dj;
        ExactRat c = dM(t) / Dj - b * dlog;
        if (b != 0) out.B[j] = b;
        if (c != 0) out.C[j] = c;
    }
    return out;
}

std::map<long, ExactRat> as_rat(const std::map<long, ExactInt>& m) {
    std::map<long, ExactRat> r;
    for (const auto& [k, v] : m) r[k] = ExactRat(v);
    return r;
}

bool route_equal(const HParams& h) {
    LinearForm f = assemble_form(h_to_ab(h));
    SeriesForm s = series_oracle(h);
    const int sg = series_sign(h);
    return s.z5 == 0 && s.z3 == 0 && s.z2 == 0 && s.z4 == ExactRat(sg * f.u) && s.r == ExactRat(-sg * f.v);
}

bool integral(const ExactRat& q) { return q.get_den() == 1; }

// Random h admitted by both validity checks, hand-rolled generator.
std::optional<HParams> random_valid_h(std::mt19937& rng) {
    std::uniform_int_distribution<long> d(1, 10);
    for (int attempt = 0; attempt < 10000; ++attempt) {
        HParams h;
        h.h0 = d(rng) + 8;
        h.hm1 = d(rng) + 6;
        for (auto& x : h.h) x = d(rng);
        if (!validate_h(h).ok()) continue;
        try {
            ABParams ab = h_to_ab(h);
            if (!validate(ab, false).ok()) continue;
            series_oracle(h);
        } catch (const Error&) {
            continue;
        }
        return h;
    }
    return std::nullopt;
}

}  // namespace

TEST_CASE("coeff_A_eval") {
    ABParams sym1 = h_to_ab(from_eta(kSym, 1));
    CHECK(coeff_A_eval(sym1, 1, ExactRat(0)).first == 0);

    std::mt19937 rng(11);
    std::uniform_int_distribution<long> num(-300, 300), den(1, 17);
    for (const ABParams& ab : {sym1, h_to_ab(from_eta(kSym, 3)), h_to_ab(from_eta(kBase, 1))}) {
        for (int trial = 0; trial < 5; ++trial) {
            ExactRat t(num(rng), den(rng));
            t.canonicalize();
            ExactRat sum = 0;
            for (long k = ab.a0(); k < ab.b0(); ++k) {
                auto [value, deriv] = coeff_A_eval(ab, k, t);
                CHECK(value == A_direct(ab, k, t));
                CHECK(deriv == A_poly(ab, k).deriv()(t));
                sum += value;
            }
            CHECK(sum == 0);
        }
        // signs alternate as (-1)^(k+a0) at a point where the product is positive
        ExactRat far(-1000000);
        for (long k = ab.a0(); k < ab.b0(); ++k) {
            ExactRat v = coeff_A_eval(ab, k, far).first;
            CHECK((v > 0) == ((k + ab.a0()) % 2 == 0));
        }
    }
}

TEST_CASE("coeff_A_eval derivative at a zero of one factor") {
    ABParams ab = h_to_ab(from_eta(kBase, 1));
    // t with -t - k + b1 == 0 for k = a0
    long k = ab.a0();
    ExactRat t(ab.b(1) - k);
    auto [value, deriv] = coeff_A_eval(ab, k, t);
    CHECK(value == 0);
    CHECK(deriv != 0);
    CHECK(deriv == A_poly(ab, k).deriv()(t));
}

TEST_CASE("decompose matches residues of the rational function") {
    for (const ABParams& ab : {h_to_ab(from_eta(kSym, 1)), h_to_ab(from_eta(kSym, 2)), h_to_ab(from_eta(kBase, 1))}) {
        PartialFractionData pf = decompose(ab);
        CHECK(pf.nu0 == 1 - ab.a_star(3));
        Residues want = residues_oracle(ab, pf.nu0, pf.j_lo, pf.j_hi);
        CHECK(as_rat(pf.B) == want.B);
        CHECK(pf.C == want.C);
    }
}

TEST_CASE("decompose: symmetric pole set and sum of C_j") {
    PartialFractionData pf = decompose(h_to_ab(from_eta(kSym, 1)));
    std::set<long> poles;
    for (const auto& [j, b] : pf.B) poles.insert(j);
    for (const auto& [j, c] : pf.C) poles.insert(j);
    CHECK(poles == std::set<long>{2, 3});

    std::vector<ABParams> cases;
    for (long n = 1; n <= 5; ++n) cases.push_back(h_to_ab(from_eta(kSym, n)));
    cases.push_back(h_to_ab(from_eta(kBase, 1)));
    for (const ABParams& ab : cases)
        for (const ABParams& half : {ab, ab.reflected()}) {
            PartialFractionData d = decompose(half);
            ExactRat sum = 0;
            for (const auto& [j, c] : d.C) sum += c;
            CHECK(sum == 0);
            const long b_lo = std::max(half.a_star(6), 1 + half.a0() - half.b_star(1));
            const long b_hi = half.b0() - half.a_star(5) - 1;
            const long c_lo = std::max(half.a_star(4), 1 + half.a0() - half.b_star(3));
            const long c_hi = half.b0() - half.a_star(3) - 1;
            for (const auto& [j, b] : d.B) CHECK((j >= b_lo && j <= b_hi));
            for (const auto& [j, c] : d.C) CHECK((j >= c_lo && j <= c_hi));
        }
}

TEST_CASE("decompose: nu0 independence") {
    for (const ABParams& ab : {h_to_ab(from_eta(kSym, 2)), h_to_ab(from_eta(kSym, 4)), h_to_ab(from_eta(kBase, 1)),
                               h_to_ab(from_eta(kBase, 2))})
        for (const ABParams& half : {ab, ab.reflected()}) {
            PartialFractionData lo = decompose(half, 1 - half.a_star(3));
            PartialFractionData hi = decompose(half, 1 - half.b_star(3));
            CHECK(lo.B == hi.B);
            CHECK(lo.C == hi.C);
        }
    ABParams ab = h_to_ab(from_eta(kSym, 2));
    CHECK_THROWS_AS(decompose(ab, 2 - ab.b_star(3)), Error);
}

TEST_CASE("decompose is independent of the worker count") {
    ABParams ab = h_to_ab(from_eta(kBase, 2));
    PartialFractionData one = decompose(ab, std::nullopt, 1);
    PartialFractionData four = decompose(ab, std::nullopt, 4);
    CHECK(one.B == four.B);
    CHECK(one.C == four.C);
    LinearForm f1 = assemble_form(ab, 1), f4 = assemble_form(ab, 4);
    CHECK(f1.u == f4.u);
    CHECK(f1.v == f4.v);
}

TEST_CASE("symmetric family: halves, values, integrality") {
    for (long n = 1; n <= 5; ++n) {
        ABParams ab = h_to_ab(from_eta(kSym, n));
        auto first = half_form(decompose(ab));
        auto second = half_form(decompose(ab.reflected()));
        CHECK(first.first == second.first);
        CHECK(first.second == second.second);

        LinearForm f = symmetric_form(n);
        CHECK(f.family == FormFamily::Symmetric);
        CHECK(f.u == 2 * first.first);
        BigReal x = numeric_value(f, 340);
        CHECK(x.to_double() > 0);
        CHECK(x.to_double() < 1);

        // (1/2) Phi_n^{-1} d_n^4 u and Phi_n^{-1} d_n^4 v are integers
        ExactInt d = lcm_upto(n);
        ExactInt d4 = d * d * d * d;
        CHECK(integral(ExactRat(ExactRat(f.u * d4) / (2 * gcd_phi(n)))));
        CHECK(integral(ExactRat(ExactRat(f.v * d4) / gcd_phi(n))));
    }
    // u_n alternates in sign while F_n stays positive
    for (long n = 1; n <= 10; ++n) CHECK((n % 2 == 0 ? symmetric_form(n).u : ExactInt(-symmetric_form(n).u)) > 0);

    LinearForm one = symmetric_form(1);
    CHECK(one.u == -72);
    CHECK(one.v == -78);
    // the extra factor 1/2 does not clear v: 78 / (2 * Phi_1) = 39/2
    CHECK_FALSE(integral(ExactRat(one.v / (2 * gcd_phi(1)))));
    LinearForm via_h = assemble_form(h_to_ab(HParams{5, 5, {2, 2, 2, 2, 2, 2}}));
    CHECK(via_h.u == one.u);
    CHECK(via_h.v == one.v);
    CHECK_THROWS_AS(symmetric_form(0), Error);
}

TEST_CASE("route equality: residues and series") {
    for (long n = 1; n <= 5; ++n) CHECK(route_equal(from_eta(kSym, n)));
    for (long n = 1; n <= 2; ++n) CHECK(route_equal(from_eta(kBase, n)));

    LinearForm f = assemble_form(h_to_ab(from_eta(kBase, 1)));
    SeriesForm s = series_oracle(from_eta(kBase, 1));
    CHECK(series_sign(from_eta(kBase, 1)) == -1);
    CHECK(s.z4 == -f.u);
    CHECK(s.r == f.v);
}

TEST_CASE("route equality on random valid parameters") {
    std::mt19937 rng(20240613);
    for (int trial = 0; trial < 40; ++trial) {
        auto h = random_valid_h(rng);
        REQUIRE(h.has_value());
        CAPTURE(h->h0);
        CAPTURE(h->hm1);
        CHECK(route_equal(*h));
    }
}

TEST_CASE("crossing terms") {
    // none for the symmetric family
    CrossingTerms sym = crossing_terms(h_to_ab(from_eta(kSym, 3)));
    CHECK(sym.k_hi < sym.k_lo);
    CHECK(sym.rational == 0);
    // present for the 68/57 family; zeta(2) parts cancel between halves
    ABParams ab = h_to_ab(from_eta(kBase, 1));
    CrossingTerms x1 = crossing_terms(ab), x2 = crossing_terms(ab.reflected());
    CHECK(x1.k_lo == 12);
    CHECK(x1.nu == 1 - ab.b_star(6));
    CHECK(x1.z2 != 0);
    CHECK(x1.z2 + x2.z2 == 0);
}

TEST_CASE("denominator certificate") {
    std::vector<HParams> hs;
    for (long n = 1; n <= 5; ++n) hs.push_back(from_eta(kSym, n));
    for (long n = 1; n <= 3; ++n) hs.push_back(from_eta(kBase, n));
    std::mt19937 rng(7);
    for (int i = 0; i < 10; ++i) hs.push_back(*random_valid_h(rng));
    for (const HParams& h : hs) {
        LinearForm f = assemble_form(h_to_ab(h));
        ExactInt d1 = lcm_upto(f.m1), d2 = lcm_upto(f.m2);
        CHECK(integral(ExactRat(f.v * d1 * d1 * d1 * d2)));
    }
    LinearForm base = assemble_form(h_to_ab(from_eta(kBase, 1)));
    CHECK(base.m1 == 21);
    CHECK(base.m2 == 23);
}

TEST_CASE("series oracle") {
    SeriesForm s = series_oracle(HParams{5, 5, {2, 2, 2, 2, 2, 2}});
    CHECK(s.z3 == 0);
    CHECK(s.z2 == 0);
    CHECK(s.z4 == -72);
    CHECK(s.r == 78);

    // degree of R is 2*sum h + 2*h-1 - 6*h0 - 7 = 5
    try {
        series_oracle(HParams{10, 6, {5, 5, 5, 5, 5, 5}});
        FAIL("expected an error");
    } catch (const Error& e) {
        CHECK(e.kind() == "degree");
    }
}

TEST_CASE("gcd_phi") {
    CHECK(gcd_phi(1) == 2);
    for (long n = 1; n <= 20; ++n) {
        ExactInt g = gcd_phi(n);
        CHECK(g >= 1);
        ExactInt prod = 1;
        for (long p : primes_between(ExactRat(1), 3 * n)) {
            if (p * p <= 3 * n) continue;
            ExactRat frac(n % p, p);
            if (frac >= ExactRat(2, 3)) prod *= p;
        }
        CHECK(mpz_divisible_p(g.get_mpz_t(), prod.get_mpz_t()) != 0);
    }
    CHECK_THROWS_AS(gcd_phi(0), Error);
}

TEST_CASE("numeric_value") {
    LinearForm zero;
    zero.u = 0;
    zero.v = 0;
    CHECK(numeric_value(zero, 128).to_double() == 0);

    LinearForm f = assemble_form(h_to_ab(from_eta(kBase, 1)));
    BigReal x = numeric_value(f, 512);
    double lg = x.abs().log().to_double();
    CHECK(lg < -20);
    CHECK(lg > -55);
    CHECK(x.to_string(12).rfind("1.90002763907e-19", 0) == 0);
}

TEST_CASE("fault injection breaks the A_k identity and the route equality") {
    ABParams ab = h_to_ab(from_eta(kSym, 2));
    set_fault_injection(true);
    ExactRat sum = 0;
    for (long k = ab.a0(); k < ab.b0(); ++k) sum += coeff_A_eval(ab, k, ExactRat(1, 3)).first;
    bool route = true;
    try {
        route = route_equal(from_eta(kSym, 2));
    } catch (const Error&) {
        route = false;
    }
    set_fault_injection(false);
    CHECK(sum != 0);
    CHECK_FALSE(route);
}
