#pragma once
// Exact linear forms u*zeta(4) - v: partial-fraction residues of the
// double-integral representation, and an independent route through the
// derivative series of a single rational function R(t).

#include "zeta4/numkernel.hpp"
#include "zeta4/params.hpp"

#include <map>
#include <optional>
#include <utility>

namespace zeta4 {

struct PartialFractionData {
    ABParams ab;
    long nu0 = 0;
    long j_lo = 0, j_hi = -1;         // every j with a possibly nonzero tail sum
    std::map<long, ExactInt> B;       // nonzero double-pole coefficients
    std::map<long, ExactRat> C;       // nonzero simple-pole coefficients
};

enum class FormFamily { General, Symmetric };

struct LinearForm {
    long n = 0;
    ExactInt u;
    ExactRat v;
    long m1 = 0, m2 = 0;
    FormFamily family = FormFamily::General;
};

/// z5*zeta(5) + z4*zeta(4) + z3*zeta(3) + z2*zeta(2) + r.
struct SeriesForm {
    ExactRat z5, z4, z3, z2, r;
};

/// A_k(t) and dA_k/dt at rational t, for a0 <= k <= b0-1.
std::pair<ExactRat, ExactRat> coeff_A_eval(const ABParams& ab, long k, const ExactRat& t);

/// Residues of the prefactor times H(t). nu0 defaults to 1 - a3*; it must lie
/// in [1 - a3*, 1 - b3*]. Throws "pole-range" if a pole left of a2* survives.
PartialFractionData decompose(const ABParams& ab, std::optional<long> nu0 = std::nullopt, unsigned jobs = 1);

/// (3 sum B_j, sum 3 B_j S4(j - b6*) + C_j S3(j - b6*)).
std::pair<ExactInt, ExactRat> half_form(const PartialFractionData& pf);

/// Contribution of the kernel poles s = -t - k, a0 <= k <= k_hi, that lie
/// between the contours once sin(pi(s+t)) is split: z2*zeta(2) + rational,
/// the residue at t = nu of Delta^{-1}(P(t) sum_k A_k(t)) times
/// pi^5 cos(pi t)/sin^5(pi t). The zeta(2) parts of the two halves cancel.
struct CrossingTerms {
    long nu = 0, k_lo = 0, k_hi = -1;
    ExactRat z2, rational;
};
CrossingTerms crossing_terms(const ABParams& ab, unsigned jobs = 1);

/// Sum of the halves for ab and its slot reflection, plus their crossing terms.
LinearForm assemble_form(const ABParams& ab, unsigned jobs = 1);
LinearForm symmetric_form(long n, unsigned jobs = 1);

/// Throws "degree" if R is not of degree <= -2, "pole-at-lattice" if no
/// admissible starting point of the summation exists.
SeriesForm series_oracle(const HParams& h);

/// Sign s with series_oracle(h) = s * (u zeta(4) - v) for assemble_form(h_to_ab(h)):
/// (-1)^(h1 + ... + h6).
int series_sign(const HParams& h);

ExactInt gcd_phi(long n);

BigReal numeric_value(const LinearForm& f, mpfr_prec_t prec);

/// Testing hook: shifts the top of the binomial in A_k by one.
void set_fault_injection(bool on);
bool fault_injection();

}  // namespace zeta4
