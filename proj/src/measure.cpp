#include "zeta4/measure.hpp"

#include "zeta4/parallel.hpp"

#include <algorithm>
#include <cmath>

namespace zeta4 {

BigReal c2_exact(const OmegaReport& report, long m1_dir, long m2_dir, mpfr_prec_t prec) {
    const PiecewiseQ w = report.omega.merged();
    if (!w.values.empty() && w.values.front() != 0)
        throw Error("singular", "omega is nonzero on the cell at 0, where psi diverges");
    BigReal integral(0.0, prec);
    for (std::size_t i = 1; i < w.values.size(); ++i) {
        if (w.values[i] == 0) continue;
        const ExactRat hi = i + 1 < w.breaks.size() ? w.breaks[i + 1] : ExactRat(1);
        const BigReal jump = digamma(hi, prec) - digamma(w.breaks[i], prec);
        integral = integral + BigReal(ExactInt(w.values[i]), prec) * jump;
    }
    return BigReal(ExactInt(3 * m1_dir + m2_dir), prec) - integral;
}

mpfr_prec_t form_precision(const LinearForm& f, long n, double c0_guess) {
    const auto ubits = static_cast<double>(mpz_sizeinbase(f.u.get_mpz_t(), 2));
    return static_cast<mpfr_prec_t>(64 + ubits + std::ceil(1.5 * c0_guess * static_cast<double>(n) / std::log(2.0)));
}

Extrapolation extrapolate_rate(const std::vector<double>& log_abs, long m) {
    // fit c + a log(n)/n + b/n to delta_n = L_{n+1} - L_n on the last ceil(m/2) differences, n < m
    auto fit = [&](long end, double* rms) {
        const long k = (end + 1) / 2;
        long double A[3][3] = {}, r[3] = {};
        std::vector<std::pair<std::array<long double, 3>, long double>> rows;
        for (long n = end - k; n <= end - 1; ++n) {
            const long double x = static_cast<long double>(n);
            const std::array<long double, 3> phi{1.0L, std::log(x) / x, 1.0L / x};
            const long double y = log_abs[static_cast<std::size_t>(n)] - log_abs[static_cast<std::size_t>(n - 1)];
            rows.push_back({phi, y});
            for (int i = 0; i < 3; ++i) {
                r[i] += phi[i] * y;
                for (int j = 0; j < 3; ++j) A[i][j] += phi[i] * phi[j];
            }
        }
        // Gaussian elimination with partial pivoting on the 3x3 normal equations
        int idx[3] = {0, 1, 2};
        for (int c = 0; c < 3; ++c) {
            int piv = c;
            for (int i = c + 1; i < 3; ++i)
                if (std::fabs(A[idx[i]][c]) > std::fabs(A[idx[piv]][c])) piv = i;
            std::swap(idx[c], idx[piv]);
            for (int i = c + 1; i < 3; ++i) {
                const long double f = A[idx[i]][c] / A[idx[c]][c];
                for (int j = c; j < 3; ++j) A[idx[i]][j] -= f * A[idx[c]][j];
                r[idx[i]] -= f * r[idx[c]];
            }
        }
        long double sol[3];
        for (int c = 2; c >= 0; --c) {
            long double s = r[idx[c]];
            for (int j = c + 1; j < 3; ++j) s -= A[idx[c]][j] * sol[j];
            sol[c] = s / A[idx[c]][c];
        }
        if (rms != nullptr) {
            long double ss = 0;
            for (const auto& [phi, y] : rows) {
                const long double e = y - (sol[0] * phi[0] + sol[1] * phi[1] + sol[2] * phi[2]);
                ss += e * e;
            }
            *rms = static_cast<double>(std::sqrt(ss / static_cast<long double>(rows.size())));
        }
        return static_cast<double>(sol[0]);
    };
    Extrapolation out;
    for (long end = m - 2; end <= m; ++end) out.extrapolants.push_back(fit(end, end == m ? &out.residual : nullptr));
    out.value = out.extrapolants.back();
    const auto [lo, hi] = std::minmax_element(out.extrapolants.begin(), out.extrapolants.end());
    out.uncertainty = *hi - *lo;
    return out;
}

GrowthEstimate estimate_from_logs(std::vector<double> log_abs_f, std::vector<double> log_abs_u) {
    const long n_max = static_cast<long>(log_abs_f.size());
    if (n_max < 8 || log_abs_u.size() != log_abs_f.size())
        throw Error("insufficient-data", "need forms for n = 1..n_max with n_max >= 8");
    GrowthEstimate g;
    g.n_max = n_max;
    g.c0 = extrapolate_rate(log_abs_f, n_max);
    g.c0.value = -g.c0.value;
    for (double& e : g.c0.extrapolants) e = -e;
    g.c1 = extrapolate_rate(log_abs_u, n_max);
    for (long n = 1; n < n_max; ++n) {
        const auto i = static_cast<std::size_t>(n);
        g.f_decreasing = g.f_decreasing && log_abs_f[i] < log_abs_f[i - 1];
        g.u_increasing = g.u_increasing && log_abs_u[i] > log_abs_u[i - 1];
    }
    g.log_abs_f = std::move(log_abs_f);
    g.log_abs_u = std::move(log_abs_u);
    return g;
}

GrowthEstimate estimate_growth(const DirectionPair& d, long n_max, double c0_guess, unsigned jobs) {
    if (n_max < 8) throw Error("insufficient-data", "n_max must be at least 8");
    // largest n first so the long computations start early
    const auto logs = parallel_map(static_cast<std::size_t>(n_max), jobs, [&](std::size_t k) {
        const long n = n_max - static_cast<long>(k);
        const LinearForm f = assemble_form(directions_to_ab(d, n));
        const BigReal F = numeric_value(f, form_precision(f, n, c0_guess));
        if (F.is_zero() || f.u == 0) throw Error("internal", "vanishing form at n = " + std::to_string(n));
        const mpfr_prec_t p = 128;
        return std::pair{F.abs().log().to_double(), BigReal(f.u, p).abs().log().to_double()};
    });
    std::vector<double> lf(static_cast<std::size_t>(n_max)), lu(static_cast<std::size_t>(n_max));
    for (std::size_t k = 0; k < logs.size(); ++k) {
        const std::size_t i = static_cast<std::size_t>(n_max) - 1 - k;
        lf[i] = logs[k].first;
        lu[i] = logs[k].second;
    }
    return estimate_from_logs(std::move(lf), std::move(lu));
}

BigReal irrationality_bound(const BigReal& c0, const BigReal& c1, const BigReal& c2) {
    if (!(c0 > c2)) throw Error("no-bound", "C0 must exceed C2");
    return (c0 + c1) / (c0 - c2);
}

}  // namespace zeta4
