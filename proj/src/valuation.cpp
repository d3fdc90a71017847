#include "zeta4/valuation.hpp"

#include "zeta4/parallel.hpp"

#include <json.hpp>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace zeta4 {

namespace {

using simd::FloorTerm;

/// Reduced p/q with q > 0, ordered by value.
struct Frac {
    long p = 0, q = 1;
    friend bool operator<(const Frac& x, const Frac& y) { return x.p * y.q < y.p * x.q; }
    friend bool operator==(const Frac& x, const Frac& y) { return x.p == y.p && x.q == y.q; }
};

Frac reduced(long p, long q) {
    const long g = std::gcd(p, q);
    return {p / g, q / g};
}

long mod(long a, long m) {
    const long r = a % m;
    return r < 0 ? r + m : r;
}

long floor_div(long n, long d) { return n / d - ((n % d != 0) && ((n < 0) != (d < 0)) ? 1 : 0); }

ExactRat to_rat(const Frac& f) {
    ExactRat r(f.p, f.q);
    r.canonicalize();
    return r;
}

/// Every k/c in [0, 1) for the given denominators, ascending.
std::vector<Frac> fractions(const std::set<long>& dens) {
    std::vector<Frac> out;
    for (long c : dens)
        for (long k = 0; k < c; ++k) out.push_back(reduced(k, c));
    if (out.empty()) out.push_back({0, 1});
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

/// A point strictly inside [breaks[i], breaks[i+1]) (the next break of the last cell is 1).
Frac cell_sample(const std::vector<Frac>& breaks, std::size_t i) {
    const Frac lo = breaks[i];
    const Frac hi = i + 1 < breaks.size() ? breaks[i + 1] : Frac{1, 1};
    return reduced(lo.p + hi.p, lo.q + hi.q);  // mediant
}

void add_term(std::vector<FloorTerm>& t, long a, long b, long c, int w) { t.push_back({a, b, c, w}); }

/// Slopes L of the jump lines {v + L x in Z} of the terms depending only on v.
std::vector<long> line_slopes(const std::vector<FloorTerm>& terms, bool y_only, bool z_only, bool diag) {
    std::vector<long> out;
    for (const auto& f : terms) {
        const bool isy = f.b != 0 && f.c == 0, isz = f.b == 0 && f.c != 0, isd = f.b != 0 && f.c != 0;
        if (isy && y_only) out.push_back(f.a * f.b);
        if (isz && z_only) out.push_back(f.a * f.c);
        if (isd && diag) out.push_back(f.a * f.b);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

void add_den(std::set<long>& dens, long c) {
    if (c != 0) dens.insert(std::labs(c));
}

/// Denominators of every x at which the (y, z) arrangement of omega1 or
/// omega2 changes combinatorially: a line passing through an integer, two
/// parallel lines meeting, or a y-line, z-line and diagonal concurrent.
std::set<long> star_denominators(const std::vector<FloorTerm>& t1, const std::vector<FloorTerm>& t2) {
    std::set<long> dens{1};
    for (const auto* t : {&t1, &t2})
        for (const auto& f : *t) add_den(dens, f.a);
    const auto ly = line_slopes(t1, true, false, false);
    const auto lz = line_slopes(t1, false, true, false);
    const auto ld = line_slopes(t1, false, false, true);
    const auto l2 = line_slopes(t2, true, false, false);
    for (const auto* fam : {&ly, &lz, &ld, &l2})
        for (long u : *fam)
            for (long v : *fam) add_den(dens, u - v);
    for (long u : ly)
        for (long v : lz)
            for (long w : ld) add_den(dens, u + v - w);
    return dens;
}

/// Sorted cut positions in units of 1/q: 0 and the residues of -L P mod q.
std::vector<long> cuts(const std::vector<long>& slopes, long P, long q) {
    std::vector<long> c{0};
    for (long L : slopes) c.push_back(mod(-L * P, q));
    std::sort(c.begin(), c.end());
    c.erase(std::unique(c.begin(), c.end()), c.end());
    return c;
}

struct TermSet {
    std::vector<FloorTerm> t1, t2;
    std::vector<long> ly, lz, ld, l2;
};

TermSet make_terms(const DirectionPair& d) {
    TermSet ts{omega1_terms(d), omega2_terms(d), {}, {}, {}, {}};
    ts.ly = line_slopes(ts.t1, true, false, false);
    ts.lz = line_slopes(ts.t1, false, true, false);
    ts.ld = line_slopes(ts.t1, false, false, true);
    ts.l2 = line_slopes(ts.t2, true, false, false);
    return ts;
}

/// Minimum of omega1 over the torus at x = P/q, x not a breakpoint: one
/// sample per open face of the arrangement of y-, z- and diagonal lines.
int omega1_at(const TermSet& ts, long P, long q, simd::Backend be) {
    const auto yc = cuts(ts.ly, P, q), zc = cuts(ts.lz, P, q);
    std::vector<long> dc;
    for (long L : ts.ld) {
        const long r = mod(-L * P, q);
        dc.push_back(r);
        dc.push_back(r + q);
    }
    // positions in units of 1/(4q)
    thread_local std::vector<long> Y, Z;
    Y.clear();
    Z.clear();
    std::vector<long> tc;
    for (std::size_t i = 0; i < yc.size(); ++i) {
        const long ylo = yc[i], yhi = i + 1 < yc.size() ? yc[i + 1] : q;
        for (std::size_t j = 0; j < zc.size(); ++j) {
            const long zlo = zc[j], zhi = j + 1 < zc.size() ? zc[j + 1] : q;
            tc.assign({ylo + zlo, yhi + zhi});
            for (long t : dc)
                if (t > ylo + zlo && t < yhi + zhi) tc.push_back(t);
            std::sort(tc.begin(), tc.end());
            tc.erase(std::unique(tc.begin(), tc.end()), tc.end());
            for (std::size_t k = 0; k + 1 < tc.size(); ++k) {
                const long tmid2 = tc[k] + tc[k + 1];
                const long lo2 = std::max(2 * ylo, tmid2 - 2 * zhi);
                const long hi2 = std::min(2 * yhi, tmid2 - 2 * zlo);
                const long y4 = lo2 + hi2;
                Y.push_back(y4);
                Z.push_back(2 * tmid2 - y4);
            }
        }
    }
    return simd::floor_sums_min(be, ts.t1.data(), ts.t1.size(), 4 * P, 4 * q, Y.data(), Z.data(), Y.size());
}

int omega2_at(const TermSet& ts, long P, long q, simd::Backend be) {
    const auto yc = cuts(ts.l2, P, q);
    thread_local std::vector<long> Y, Z;
    Y.clear();
    for (std::size_t i = 0; i < yc.size(); ++i) {
        const long hi = i + 1 < yc.size() ? yc[i + 1] : q;
        Y.push_back(2 * (yc[i] + hi));
    }
    Z.assign(Y.size(), 0);
    return simd::floor_sums_min(be, ts.t2.data(), ts.t2.size(), 4 * P, 4 * q, Y.data(), Z.data(), Y.size());
}

/// omega1*, omega2* on the cells of the star breakpoint set, as Frac breaks.
struct StarTable {
    std::vector<Frac> breaks;
    std::vector<int> w1, w2;
};

StarTable star_table(const DirectionPair& d, unsigned jobs) {
    const TermSet ts = make_terms(d);
    StarTable st;
    st.breaks = fractions(star_denominators(ts.t1, ts.t2));
    const auto be = simd::active_backend();
    const std::size_t m = st.breaks.size();
    // blocks of cells keep the pool overhead small
    const std::size_t block = 64, nblocks = (m + block - 1) / block;
    auto parts = parallel_map(nblocks, jobs, [&](std::size_t b) {
        std::vector<std::pair<int, int>> out;
        for (std::size_t i = b * block; i < std::min(m, (b + 1) * block); ++i) {
            const Frac x = cell_sample(st.breaks, i);
            out.emplace_back(omega1_at(ts, x.p, x.q, be), omega2_at(ts, x.p, x.q, be));
        }
        return out;
    });
    for (const auto& part : parts)
        for (auto [a, b] : part) {
            st.w1.push_back(a);
            st.w2.push_back(b);
        }
    return st;
}

PiecewiseQ to_piecewise(const std::vector<Frac>& breaks, const std::vector<int>& values) {
    PiecewiseQ pw;
    for (const auto& b : breaks) pw.breaks.push_back(to_rat(b));
    pw.values = values;
    return pw;
}

/// Value of a Frac-indexed step function at x, for x walking upward.
struct Cursor {
    const std::vector<Frac>* breaks;
    std::size_t i = 0;
    std::size_t advance(const Frac& x) {
        while (i + 1 < breaks->size() && !(x < (*breaks)[i + 1])) ++i;
        return i;
    }
};

std::array<long, 12> normalization_values(const EMultiset& e) {
    std::array<long, 12> out{};
    const auto& labels = normalization_labels();
    for (std::size_t i = 0; i < labels.size(); ++i) out[i] = e.v[labels[i]];
    return out;
}

}  // namespace

// ------------------------------------------------------------- PiecewiseQ

std::size_t PiecewiseQ::cell(const ExactRat& x) const {
    mpz_class fl;
    mpz_fdiv_q(fl.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
    const ExactRat f = x - ExactRat(fl);
    auto it = std::upper_bound(breaks.begin(), breaks.end(), f);
    return static_cast<std::size_t>(it - breaks.begin()) - 1;
}

int PiecewiseQ::at(const ExactRat& x) const { return values[cell(x)]; }

PiecewiseQ PiecewiseQ::merged() const {
    PiecewiseQ out;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (!out.values.empty() && out.values.back() == values[i]) continue;
        out.breaks.push_back(breaks[i]);
        out.values.push_back(values[i]);
    }
    return out;
}

// ------------------------------------------------------------- omega

std::vector<FloorTerm> omega1_terms(const DirectionPair& d) {
    const auto& al = d.alpha;
    const auto& be = d.beta;
    std::vector<FloorTerm> t;
    add_term(t, be[0] - al[0], 0, 0, 1);
    add_term(t, -al[0], 1, 1, -1);
    add_term(t, be[0], -1, -1, -1);
    for (int r = 1; r <= 6; ++r) {
        const bool even = r % 2 == 0;
        const long b = even ? 1 : 0, c = even ? 0 : 1;
        add_term(t, -be[r], b, c, 1);
        add_term(t, -al[r], b, c, -1);
        add_term(t, al[r] - be[r], 0, 0, -1);
    }
    return t;
}

std::vector<FloorTerm> omega2_terms(const DirectionPair& d) {
    const auto& al = d.alpha;
    const auto& be = d.beta;
    std::vector<FloorTerm> t;
    for (int r = 1; r <= 6; ++r) {
        if (r % 2 == 0) {
            add_term(t, -be[r], 1, 0, 1);
            add_term(t, -al[r], 1, 0, -1);
        } else {
            add_term(t, al[r] - al[0], 1, 0, 1);
            add_term(t, be[r] - al[0], 1, 0, -1);
        }
        add_term(t, al[r] - be[r], 0, 0, -1);
    }
    return t;
}

std::pair<PiecewiseQ, PiecewiseQ> omega12_min(const DirectionPair& d, unsigned jobs) {
    const StarTable st = star_table(d, jobs);
    return {to_piecewise(st.breaks, st.w1), to_piecewise(st.breaks, st.w2)};
}

PiecewiseQ omega_star(const DirectionPair& d, unsigned jobs) {
    const StarTable st = star_table(d, jobs);
    std::vector<int> v(st.w1.size());
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = std::min(st.w1[i], st.w2[i]);
    return to_piecewise(st.breaks, v);
}

ConjectureReport conjecture_check(const DirectionPair& d, unsigned jobs) {
    const StarTable st = star_table(d, jobs);
    ConjectureReport rep;
    for (std::size_t i = 0; i < st.w1.size(); ++i) {
        if (st.w2[i] >= st.w1[i]) continue;
        ++rep.violating_cells;
        const Frac hi = i + 1 < st.breaks.size() ? st.breaks[i + 1] : Frac{1, 1};
        rep.violating_length += to_rat(hi) - to_rat(st.breaks[i]);
    }
    return rep;
}

OmegaReport omega_group(const DirectionPair& d, const RepSet& reps, unsigned jobs) {
    const std::size_t nr = reps.reps.size();
    const EMultiset e = direction_multiset(d);
    const auto base_vals = normalization_values(e);

    std::vector<DirectionPair> images(nr);
    std::vector<std::array<long, 12>> image_vals(nr);
    for (std::size_t r = 0; r < nr; ++r) {
        const EMultiset ge = act(reps.reps[r].g, e);
        for (long x : ge.v)
            if (x < 0) throw Error("invalid-rep", "representative " + std::to_string(r) + " has a negative entry");
        images[r] = directions_from_multiset(ge);
        image_vals[r] = normalization_values(ge);
    }

    // reps sharing an image share omega*
    std::map<DirectionPair, std::size_t> slot;
    std::vector<DirectionPair> distinct;
    for (const auto& im : images)
        if (slot.emplace(im, distinct.size()).second) distinct.push_back(im);
    std::vector<StarTable> stars;
    stars.reserve(distinct.size());
    if (jobs == 1 || distinct.size() == 1) {
        for (const auto& im : distinct) stars.push_back(star_table(im, jobs));
    } else {
        stars = parallel_map(distinct.size(), jobs, [&](std::size_t k) { return star_table(distinct[k], 1); });
    }

    std::set<long> dens{1};
    for (const auto& st : stars)
        for (const auto& b : st.breaks) dens.insert(b.q);
    for (long v : base_vals) add_den(dens, v);
    for (const auto& iv : image_vals)
        for (long v : iv) add_den(dens, v);
    const std::vector<Frac> breaks = fractions(dens);

    OmegaReport rep;
    rep.directions = d;
    std::vector<Cursor> cur(distinct.size());
    for (std::size_t k = 0; k < distinct.size(); ++k) cur[k].breaks = &stars[k].breaks;
    std::vector<int> values, argmax;
    std::vector<std::vector<int>> attaining;
    for (std::size_t i = 0; i < breaks.size(); ++i) {
        const Frac x = cell_sample(breaks, i);
        long base_sum = 0;
        for (long v : base_vals) base_sum += floor_div(v * x.p, x.q);
        std::vector<int> star(distinct.size());
        for (std::size_t k = 0; k < distinct.size(); ++k) {
            const std::size_t c = cur[k].advance(x);
            star[k] = std::min(stars[k].w1[c], stars[k].w2[c]);
        }
        int best = 0;
        std::vector<int> who;
        for (std::size_t r = 0; r < nr; ++r) {
            long s = base_sum;
            for (long v : image_vals[r]) s -= floor_div(v * x.p, x.q);
            const int val = static_cast<int>(s) + star[slot[images[r]]];
            if (who.empty() || val > best) {
                best = val;
                who.assign(1, static_cast<int>(r));
            } else if (val == best) {
                who.push_back(static_cast<int>(r));
            }
        }
        values.push_back(best);
        argmax.push_back(who.front());
        attaining.push_back(std::move(who));
    }
    rep.omega = to_piecewise(breaks, values);
    rep.argmax = std::move(argmax);
    rep.attaining = std::move(attaining);
    return rep;
}

// ------------------------------------------------------------- cache

namespace {

std::string join(const std::array<long, 7>& a) {
    std::string s;
    for (std::size_t i = 0; i < a.size(); ++i) s += (i ? "." : "") + std::to_string(a[i]);
    return s;
}

nlohmann::json report_to_json(const OmegaReport& r, std::size_t nreps) {
    nlohmann::json j;
    j["directions"] = {{"alpha", r.directions.alpha}, {"beta", r.directions.beta}};
    j["reps"] = nreps;
    std::vector<std::string> breaks;
    for (const auto& b : r.omega.breaks) breaks.push_back(b.get_str());
    j["breaks"] = breaks;
    j["values"] = r.omega.values;
    j["argmax"] = r.argmax;
    j["attaining"] = r.attaining;
    return j;
}

std::optional<OmegaReport> report_from_json(const nlohmann::json& j, const DirectionPair& d, std::size_t nreps) {
    if (j.at("reps").get<std::size_t>() != nreps) return std::nullopt;
    OmegaReport r;
    r.directions.alpha = j.at("directions").at("alpha").get<std::array<long, 7>>();
    r.directions.beta = j.at("directions").at("beta").get<std::array<long, 7>>();
    if (!(r.directions == d)) return std::nullopt;
    for (const auto& s : j.at("breaks")) {
        r.omega.breaks.push_back(parse_rational(s.get<std::string>()));
    }
    r.omega.values = j.at("values").get<std::vector<int>>();
    r.argmax = j.at("argmax").get<std::vector<int>>();
    r.attaining = j.at("attaining").get<std::vector<std::vector<int>>>();
    const std::size_t m = r.omega.breaks.size();
    if (m == 0 || r.omega.values.size() != m || r.argmax.size() != m || r.attaining.size() != m)
        return std::nullopt;
    return r;
}

}  // namespace

std::string omega_cache_file(const std::string& cache_dir, const DirectionPair& d) {
    return (std::filesystem::path(cache_dir) / ("omega_" + join(d.alpha) + "_" + join(d.beta) + ".json")).string();
}

OmegaReport omega_group_cached(const DirectionPair& d, const RepSet& reps, const std::string& cache_dir,
                               unsigned jobs) {
    if (cache_dir.empty()) return omega_group(d, reps, jobs);
    const std::string path = omega_cache_file(cache_dir, d);
    if (std::ifstream in(path); in) {
        try {
            if (auto r = report_from_json(nlohmann::json::parse(in), d, reps.reps.size())) return *r;
        } catch (const std::exception&) {
            // unreadable cache entries are recomputed and overwritten
        }
    }
    OmegaReport r = omega_group(d, reps, jobs);
    std::filesystem::create_directories(cache_dir);
    const std::string tmp = path + ".tmp";
    {
        std::ofstream out(tmp);
        out << report_to_json(r, reps.reps.size()).dump() << '\n';
    }
    std::filesystem::rename(tmp, path);
    return r;
}

// ------------------------------------------------------------- Phi and checks

namespace {

/// Primes p with sqrt(M n) < p <= M n.
std::vector<long> large_primes(long n, const DirectionPair& d) {
    const long mn = (d.beta[0] - d.alpha[0]) * n;
    if (mn < 2) return {};
    mpz_class s;
    mpz_sqrt(s.get_mpz_t(), mpz_class(mn).get_mpz_t());
    return primes_between(ExactRat(s), mn);
}

}  // namespace

ExactInt phi_factor(long n, const OmegaReport& report) {
    ExactInt phi = 1;
    for (long p : large_primes(n, report.directions)) {
        const int w = report.omega.at(ExactRat(n, p));
        ExactInt pw;
        mpz_ui_pow_ui(pw.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(std::max(w, 0)));
        phi *= pw;
    }
    return phi;
}

OrdBoundReport check_ord_bounds(long n, const DirectionPair& d, const LinearForm& f, const OmegaReport& report) {
    OrdBoundReport out;
    for (long p : large_primes(n, d)) {
        PrimeCheck c;
        c.p = p;
        c.omega = report.omega.at(ExactRat(n, p));
        c.ord_u = p_adic_ord(f.u, p);
        c.ord_v = p_adic_ord(f.v, p);
        const bool u_ok = c.ord_u == kInfiniteOrd || c.ord_u >= c.omega;
        const bool v_ok = c.ord_v == kInfiniteOrd || 4 + c.ord_v >= c.omega;
        c.ok = u_ok && v_ok;
        out.ok = out.ok && c.ok;
        out.primes.push_back(c);
    }
    return out;
}

}  // namespace zeta4
