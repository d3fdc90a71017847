#pragma once
// Asymptotic constants of a direction family: the denominator growth C2 from
// omega by the digamma integral, empirical decay/growth rates C0, C1 from
// exact forms, and the resulting irrationality-exponent bound.

#include "zeta4/forms.hpp"
#include "zeta4/valuation.hpp"

#include <vector>

namespace zeta4 {

/// 3 m1 + m2 - sum over cells of omega_i (psi(b_i) - psi(a_i)).
/// Throws "singular" if omega is nonzero on the cell touching 0.
BigReal c2_exact(const OmegaReport& report, long m1_dir, long m2_dir, mpfr_prec_t prec);

/// Limit of a difference sequence, by least squares on c + a log(n)/n + b/n.
struct Extrapolation {
    double value = 0;
    double uncertainty = 0;            // spread of the last three extrapolants
    std::vector<double> extrapolants;  // fits ending at n_max - 2, n_max - 1, n_max
    double residual = 0;               // rms residual of the final fit
};

struct GrowthEstimate {
    long n_max = 0;
    Extrapolation c0, c1;
    std::vector<double> log_abs_f, log_abs_u;  // index n - 1
    bool f_decreasing = true, u_increasing = true;
};

/// Bits for numeric_value(f) to resolve u zeta(4) - v: the size of u plus
/// headroom 1.5 c0_guess n / ln 2 for the cancellation, plus 64 guard bits.
mpfr_prec_t form_precision(const LinearForm& f, long n, double c0_guess);

/// Exact forms for n = 1..n_max, then the extrapolated rates.
/// Throws "insufficient-data" if n_max < 8.
GrowthEstimate estimate_growth(const DirectionPair& d, long n_max, double c0_guess = 40.0, unsigned jobs = 1);
/// The same from precomputed log|F_n| and log|u_n|, n = 1..size.
GrowthEstimate estimate_from_logs(std::vector<double> log_abs_f, std::vector<double> log_abs_u);
/// Fit of the differences of log_abs[0 .. m) for the given m.
Extrapolation extrapolate_rate(const std::vector<double>& log_abs, long m);

/// (C0 + C1) / (C0 - C2); throws "no-bound" unless C0 > C2.
BigReal irrationality_bound(const BigReal& c0, const BigReal& c1, const BigReal& c2);

}  // namespace zeta4
