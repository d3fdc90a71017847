#pragma once
// p-adic valuation bounds for the forms of a direction family: the minima
// omega1*, omega2* of the floor-function expressions over the torus, the
// group-boosted omega maximized over coset representatives, the product
// Phi_n = prod p^omega(n/p), and verification against exact forms.

#include "zeta4/forms.hpp"
#include "zeta4/params.hpp"
#include "zeta4/simd.hpp"
#include "zeta4/symmetry.hpp"

#include <optional>
#include <string>
#include <vector>

namespace zeta4 {

/// Right-continuous step function on [0, 1), extended 1-periodically:
/// values[i] holds on [breaks[i], breaks[i+1]).
struct PiecewiseQ {
    std::vector<ExactRat> breaks;  // strictly ascending, breaks[0] = 0
    std::vector<int> values;

    int at(const ExactRat& x) const;
    /// Index of the cell containing the fractional part of x.
    std::size_t cell(const ExactRat& x) const;
    /// Adjacent cells with equal values joined.
    PiecewiseQ merged() const;
    friend bool operator==(const PiecewiseQ&, const PiecewiseQ&) = default;
};

struct OmegaReport {
    DirectionPair directions;
    PiecewiseQ omega;
    std::vector<int> argmax;                  // per cell: lowest attaining representative
    std::vector<std::vector<int>> attaining;  // per cell: every attaining representative
};

/// Floor terms of omega1(x, y, z) and omega2(x, y) as coefficients of (x, y, z).
std::vector<simd::FloorTerm> omega1_terms(const DirectionPair& d);
std::vector<simd::FloorTerm> omega2_terms(const DirectionPair& d);

/// Exact minima over y (and z) of omega1 and omega2, per x-cell.
std::pair<PiecewiseQ, PiecewiseQ> omega12_min(const DirectionPair& d, unsigned jobs = 1);
/// min(omega1*, omega2*).
PiecewiseQ omega_star(const DirectionPair& d, unsigned jobs = 1);

/// Max over the representatives g of sum_e (floor(e x) - floor((g e) x)) + omega*(g d; x).
/// Throws "invalid-rep" if an image has a negative entry.
OmegaReport omega_group(const DirectionPair& d, const RepSet& reps, unsigned jobs = 1);

/// omega_group through a JSON file in cache_dir keyed by the directions;
/// an empty cache_dir disables caching.
OmegaReport omega_group_cached(const DirectionPair& d, const RepSet& reps, const std::string& cache_dir,
                               unsigned jobs = 1);
std::string omega_cache_file(const std::string& cache_dir, const DirectionPair& d);

/// prod over primes sqrt(M n) < p <= M n of p^omega({n/p}), M = beta0 - alpha0.
ExactInt phi_factor(long n, const OmegaReport& report);

struct PrimeCheck {
    long p = 0;
    int omega = 0;
    long ord_u = 0, ord_v = 0;  // kInfiniteOrd for a zero coefficient
    bool ok = true;
};

struct OrdBoundReport {
    bool ok = true;
    std::vector<PrimeCheck> primes;
};

/// For every prime in (sqrt(M n), M n]: ord_p(u) >= omega(n/p) and 4 + ord_p(v) >= omega(n/p).
OrdBoundReport check_ord_bounds(long n, const DirectionPair& d, const LinearForm& f, const OmegaReport& report);

/// Cells of positive length on which omega2* < omega1* (the conjecture says none).
struct ConjectureReport {
    std::size_t violating_cells = 0;
    ExactRat violating_length = 0;
};
ConjectureReport conjecture_check(const DirectionPair& d, unsigned jobs = 1);

}  // namespace zeta4
