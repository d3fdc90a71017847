#pragma once
// The four parameterizations of one approximation family:
//   HParams      h = (h0, h-1; h1..h6)
//   ABParams     (a0; a1..a6), (b0; b1..b6) of the double integral
//   EMultiset    the 27 labeled entries e0j, ebar0j, ejk
//   DirectionPair (alpha, beta) growth directions, a_j = alpha_j n + 1, ...

#include "zeta4/numkernel.hpp"

#include <array>
#include <string>
#include <utility>
#include <vector>

namespace zeta4 {

/// Direction data in eta form (eta0, eta-1; eta1..eta6).
struct Eta {
    long e0 = 0;
    long em1 = 0;
    std::array<long, 6> e{};

    friend bool operator==(const Eta&, const Eta&) = default;
};

struct HParams {
    long h0 = 0;
    long hm1 = 0;
    std::array<long, 6> h{};  // h[j-1] = h_j

    long at(int j) const { return h.at(static_cast<size_t>(j - 1)); }
    friend bool operator==(const HParams&, const HParams&) = default;
};

class ABParams {
public:
    ABParams(long a0, const std::array<long, 6>& a, long b0, const std::array<long, 6>& b);

    long a0() const { return a0_; }
    long b0() const { return b0_; }
    /// slot in 1..6
    long a(int slot) const { return a_.at(static_cast<size_t>(slot - 1)); }
    long b(int slot) const { return b_.at(static_cast<size_t>(slot - 1)); }
    /// Sorted reordering: a1* <= a3* <= a5* and a2* <= a4* <= a6* (same for b).
    long a_star(int slot) const { return a_star_.at(static_cast<size_t>(slot - 1)); }
    long b_star(int slot) const { return b_star_.at(static_cast<size_t>(slot - 1)); }
    const std::array<long, 6>& a_slots() const { return a_; }
    const std::array<long, 6>& b_slots() const { return b_; }

    /// The involution a_j <-> a_{7-j}, b_j <-> b_{7-j}.
    ABParams reflected() const;

    friend bool operator==(const ABParams& x, const ABParams& y) {
        return x.a0_ == y.a0_ && x.b0_ == y.b0_ && x.a_ == y.a_ && x.b_ == y.b_;
    }

private:
    long a0_, b0_;
    std::array<long, 6> a_, b_;
    std::array<long, 6> a_star_, b_star_;
};

// ------------------------------------------------------------- multiset

inline constexpr int kLabelCount = 27;

/// Label layout: [0,6) e0j, [6,12) ebar0j, [12,27) ejk for 1 <= j < k <= 6.
constexpr int label_e0(int j) { return j - 1; }
constexpr int label_ebar(int j) { return 6 + j - 1; }
constexpr int label_pair(int j, int k) {
    if (j > k) std::swap(j, k);
    // offsets of rows j = 1..5 inside the pair block
    constexpr int row_start[6] = {0, 0, 5, 9, 12, 14};
    return 12 + row_start[j] + (k - j - 1);
}
std::string label_name(int label);

/// The 12 labels whose factorials form Pi(e).
const std::array<int, 12>& normalization_labels();

struct EMultiset {
    std::array<long, kLabelCount> v{};

    long e0(int j) const { return v[label_e0(j)]; }
    long ebar(int j) const { return v[label_ebar(j)]; }
    long pair(int j, int k) const { return v[label_pair(j, k)]; }
    friend bool operator==(const EMultiset&, const EMultiset&) = default;
};

// ------------------------------------------------------------- directions

struct DirectionPair {
    std::array<long, 7> alpha{};  // alpha[0] = alpha_0
    std::array<long, 7> beta{};

    friend bool operator==(const DirectionPair&, const DirectionPair&) = default;
    friend bool operator<(const DirectionPair& x, const DirectionPair& y) {
        return std::pair(x.alpha, x.beta) < std::pair(y.alpha, y.beta);
    }
};

// ------------------------------------------------------------- validity

struct ValidityCheck {
    std::string name;
    bool passed = true;
    std::string detail;  // the violated inequality, if any
};

struct ValidityReport {
    std::vector<ValidityCheck> checks;
    bool ok() const;
    /// First failing check formatted for diagnostics ("" if none).
    std::string first_failure() const;
};

// ------------------------------------------------------------- operations

/// h0 = eta0 n + 2, h-1 = eta-1 n + 2, hj = etaj n + 1.
HParams from_eta(const Eta& eta, long n);

/// h0 - h-1 < hj and 2 hj <= h0, all entries >= 1.
ValidityReport validate_h(const HParams& h);

ABParams h_to_ab(const HParams& h);
EMultiset h_to_e(const HParams& h);
ValidityReport validate(const ABParams& ab, bool require_balanced);
ExactRat gamma_factor(const HParams& h);
ExactInt pi_factor(const EMultiset& e);
/// (m1, m2) of the certified denominator d_{m1}^3 d_{m2}.
std::pair<long, long> denominator_orders(const ABParams& ab);

DirectionPair directions_from_eta(const Eta& eta);
Eta eta_from_directions(const DirectionPair& d);
/// a_j = alpha_j n + 1, b0 = beta0 n + 3, b_j = beta_j n + 1.
ABParams directions_to_ab(const DirectionPair& d, long n);
/// Direction-level multiset: e0j = alpha_j, ebar0j = alpha_j - alpha_0, ejk = beta0 - alpha_j - alpha_k.
EMultiset direction_multiset(const DirectionPair& d);
/// Inverse of direction_multiset; throws "negative-entry" or "inconsistent-multiset".
DirectionPair directions_from_multiset(const EMultiset& e);
/// 2 beta0 + alpha0 = alpha1 + ... + alpha6.
bool is_balanced(const DirectionPair& d);
/// Coefficients of n in denominator_orders for the family built from d.
std::pair<long, long> direction_orders(const DirectionPair& d);

}  // namespace zeta4
