#include "zeta4/params.hpp"

#include <algorithm>
#include <sstream>

namespace zeta4 {

namespace {

std::array<long, 6> star_order(const std::array<long, 6>& x) {
    std::array<long, 3> odd{x[0], x[2], x[4]};
    std::array<long, 3> even{x[1], x[3], x[5]};
    std::sort(odd.begin(), odd.end());
    std::sort(even.begin(), even.end());
    return {odd[0], even[0], odd[1], even[1], odd[2], even[2]};
}

void add_check(ValidityReport& r, std::string name, bool ok, long lhs, const char* op, long rhs) {
    ValidityCheck c;
    c.name = std::move(name);
    c.passed = ok;
    if (!ok) {
        std::ostringstream os;
        os << lhs << ' ' << op << ' ' << rhs << " is false";
        c.detail = os.str();
    }
    r.checks.push_back(std::move(c));
}

void require(const ValidityReport& r, const char* kind) {
    if (!r.ok()) throw Error(kind, r.first_failure());
}

}  // namespace

ABParams::ABParams(long a0, const std::array<long, 6>& a, long b0, const std::array<long, 6>& b)
    : a0_(a0), b0_(b0), a_(a), b_(b), a_star_(star_order(a)), b_star_(star_order(b)) {}

ABParams ABParams::reflected() const {
    std::array<long, 6> ra, rb;
    for (int j = 0; j < 6; ++j) {
        ra[j] = a_[5 - j];
        rb[j] = b_[5 - j];
    }
    return ABParams(a0_, ra, b0_, rb);
}

std::string label_name(int label) {
    if (label < 0 || label >= kLabelCount) throw Error("invalid-params", "label out of range");
    if (label < 6) return "e0" + std::to_string(label + 1);
    if (label < 12) return "ebar0" + std::to_string(label - 5);
    for (int j = 1; j <= 6; ++j)
        for (int k = j + 1; k <= 6; ++k)
            if (label_pair(j, k) == label) return "e" + std::to_string(j) + std::to_string(k);
    return {};
}

const std::array<int, 12>& normalization_labels() {
    static const std::array<int, 12> labels = {
        label_e0(3),       label_e0(4),       label_e0(5),       label_e0(6),
        label_ebar(1),     label_ebar(2),     label_ebar(3),     label_ebar(4),
        label_pair(1, 3),  label_pair(2, 4),  label_pair(3, 5),  label_pair(4, 6)};
    return labels;
}

bool ValidityReport::ok() const {
    return std::all_of(checks.begin(), checks.end(), [](const ValidityCheck& c) { return c.passed; });
}

std::string ValidityReport::first_failure() const {
    for (const auto& c : checks)
        if (!c.passed) return c.name + " (" + c.detail + ")";
    return {};
}

HParams from_eta(const Eta& eta, long n) {
    HParams h;
    h.h0 = eta.e0 * n + 2;
    h.hm1 = eta.em1 * n + 2;
    for (int j = 0; j < 6; ++j) h.h[j] = eta.e[j] * n + 1;
    require(validate_h(h), "invalid-params");
    return h;
}

ValidityReport validate_h(const HParams& h) {
    ValidityReport r;
    add_check(r, "h0 >= 1", h.h0 >= 1, h.h0, ">=", 1);
    add_check(r, "h-1 >= 1", h.hm1 >= 1, h.hm1, ">=", 1);
    for (int j = 1; j <= 6; ++j) {
        std::string s = "h" + std::to_string(j);
        add_check(r, "h0-h-1 < " + s, h.h0 - h.hm1 < h.at(j), h.h0 - h.hm1, "<", h.at(j));
        add_check(r, "2*" + s + " <= h0", 2 * h.at(j) <= h.h0, 2 * h.at(j), "<=", h.h0);
    }
    return r;
}

ABParams h_to_ab(const HParams& h) {
    require(validate_h(h), "invalid-params");
    long a0 = 1 + h.h0 - h.hm1;
    long b0 = 1 + h.h0;
    std::array<long, 6> a = h.h;
    std::array<long, 6> b{1, 1, h.at(1) + h.at(3) + h.at(5) - h.h0, h.at(2) + h.at(4) + h.at(6) - h.h0,
                          1 + h.h0 - h.hm1, 1 + h.h0 - h.hm1};
    ABParams ab(a0, a, b0, b);
    require(validate(ab, false), "invalid-params");
    return ab;
}

EMultiset h_to_e(const HParams& h) {
    EMultiset e;
    for (int j = 1; j <= 6; ++j) {
        e.v[label_e0(j)] = h.at(j) - 1;
        e.v[label_ebar(j)] = h.at(j) + h.hm1 - h.h0 - 1;
        for (int k = j + 1; k <= 6; ++k) e.v[label_pair(j, k)] = h.h0 - h.at(j) - h.at(k);
    }
    for (int i = 0; i < kLabelCount; ++i)
        if (e.v[i] < 0) throw Error("negative-entry", label_name(i) + " = " + std::to_string(e.v[i]));
    return e;
}

ValidityReport validate(const ABParams& ab, bool require_balanced) {
    ValidityReport r;
    long gap = ab.b0() - ab.a0() - 2;
    long odd = ab.a(1) + ab.a(3) + ab.a(5) - ab.b(1) - ab.b(3) - ab.b(5);
    long even = ab.a(2) + ab.a(4) + ab.a(6) - ab.b(2) - ab.b(4) - ab.b(6);
    add_check(r, "b0-a0-2 >= (a1+a3+a5)-(b1+b3+b5)", gap >= odd, gap, ">=", odd);
    add_check(r, "b0-a0-2 >= (a2+a4+a6)-(b2+b4+b6)", gap >= even, gap, ">=", even);
    add_check(r, "max{b1,b3,b5} <= min{a1,a3,a5}", ab.b_star(5) <= ab.a_star(1), ab.b_star(5), "<=",
              ab.a_star(1));
    add_check(r, "max{b2,b4,b6} <= min{a2,a4,a6}", ab.b_star(6) <= ab.a_star(2), ab.b_star(6), "<=",
              ab.a_star(2));
    add_check(r, "b3*+b4* <= a0+1", ab.b_star(3) + ab.b_star(4) <= ab.a0() + 1, ab.b_star(3) + ab.b_star(4),
              "<=", ab.a0() + 1);
    if (require_balanced) {
        long l = ab.b(1) - ab.b(3), rr = ab.b(4) - ab.b(6);
        add_check(r, "b1-b3 == b4-b6", l == rr, l, "==", rr);
    }
    return r;
}

ExactRat gamma_factor(const HParams& h) {
    long num[4] = {h.h0 - h.at(2) - h.at(4), h.h0 - h.at(1) - h.at(3), h.h0 - h.at(4) - h.at(6),
                   h.h0 - h.at(3) - h.at(5)};
    long den[4] = {h.at(1) - 1, h.at(2) - 1, h.at(5) + h.hm1 - h.h0 - 1, h.at(6) + h.hm1 - h.h0 - 1};
    ExactInt p = 1, q = 1;
    for (int i = 0; i < 4; ++i) {
        if (num[i] < 0 || den[i] < 0) throw Error("invalid-params", "negative factorial argument in gamma factor");
        p *= factorial(num[i]);
        q *= factorial(den[i]);
    }
    ExactRat g(p, q);
    g.canonicalize();
    return g;
}

ExactInt pi_factor(const EMultiset& e) {
    ExactInt p = 1;
    for (int l : normalization_labels()) {
        if (e.v[l] < 0) throw Error("negative-entry", label_name(l));
        p *= factorial(e.v[l]);
    }
    return p;
}

std::pair<long, long> denominator_orders(const ABParams& ab) {
    long b0 = ab.b0();
    auto a = [&](int s) { return ab.a_star(s); };
    long m1 = std::max(b0 - a(2) - a(3) - 1, b0 - a(1) - a(4) - 1);
    long m2 = std::max(b0 - a(2) - a(5) - 1, b0 - a(1) - a(6) - 1);
    for (int j = 1; j <= 6; ++j) m2 = std::max(m2, ab.a(j) - ab.b(j));
    return {m1, m2};
}

DirectionPair directions_from_eta(const Eta& eta) {
    DirectionPair d;
    long a0 = eta.e0 - eta.em1;
    d.alpha[0] = a0;
    for (int j = 1; j <= 6; ++j) d.alpha[j] = eta.e[j - 1];
    d.beta = {eta.e0, 0, 0, d.alpha[1] + d.alpha[3] + d.alpha[5] - eta.e0,
              d.alpha[2] + d.alpha[4] + d.alpha[6] - eta.e0, a0, a0};
    return d;
}

Eta eta_from_directions(const DirectionPair& d) {
    Eta eta;
    eta.e0 = d.beta[0];
    eta.em1 = d.beta[0] - d.alpha[0];
    for (int j = 1; j <= 6; ++j) eta.e[j - 1] = d.alpha[j];
    return eta;
}

ABParams directions_to_ab(const DirectionPair& d, long n) {
    std::array<long, 6> a, b;
    for (int j = 1; j <= 6; ++j) {
        a[j - 1] = d.alpha[j] * n + 1;
        b[j - 1] = d.beta[j] * n + 1;
    }
    return ABParams(d.alpha[0] * n + 1, a, d.beta[0] * n + 3, b);
}

EMultiset direction_multiset(const DirectionPair& d) {
    EMultiset e;
    for (int j = 1; j <= 6; ++j) {
        e.v[label_e0(j)] = d.alpha[j];
        e.v[label_ebar(j)] = d.alpha[j] - d.alpha[0];
        for (int k = j + 1; k <= 6; ++k) e.v[label_pair(j, k)] = d.beta[0] - d.alpha[j] - d.alpha[k];
    }
    return e;
}

DirectionPair directions_from_multiset(const EMultiset& e) {
    for (int i = 0; i < kLabelCount; ++i)
        if (e.v[i] < 0) throw Error("negative-entry", label_name(i) + " = " + std::to_string(e.v[i]));
    DirectionPair d;
    for (int j = 1; j <= 6; ++j) d.alpha[j] = e.e0(j);
    d.alpha[0] = d.alpha[1] - e.ebar(1);
    long b0 = e.pair(1, 2) + d.alpha[1] + d.alpha[2];
    for (int j = 1; j <= 6; ++j) {
        if (d.alpha[j] - e.ebar(j) != d.alpha[0])
            throw Error("inconsistent-multiset", "e0j - ebar0j differs at j = " + std::to_string(j));
        for (int k = j + 1; k <= 6; ++k)
            if (e.pair(j, k) + d.alpha[j] + d.alpha[k] != b0)
                throw Error("inconsistent-multiset",
                            "ejk + e0j + e0k differs at (" + std::to_string(j) + "," + std::to_string(k) + ")");
    }
    long a0 = d.alpha[0];
    d.beta = {b0, 0, 0, d.alpha[1] + d.alpha[3] + d.alpha[5] - b0, d.alpha[2] + d.alpha[4] + d.alpha[6] - b0, a0, a0};
    return d;
}

bool is_balanced(const DirectionPair& d) {
    long s = 0;
    for (int j = 1; j <= 6; ++j) s += d.alpha[j];
    return 2 * d.beta[0] + d.alpha[0] == s;
}

std::pair<long, long> direction_orders(const DirectionPair& d) {
    std::array<long, 6> al{d.alpha[1], d.alpha[2], d.alpha[3], d.alpha[4], d.alpha[5], d.alpha[6]};
    auto s = star_order(al);
    auto a = [&](int slot) { return s[slot - 1]; };
    long b0 = d.beta[0];
    long m1 = std::max(b0 - a(2) - a(3), b0 - a(1) - a(4));
    long m2 = std::max(b0 - a(2) - a(5), b0 - a(1) - a(6));
    for (int j = 1; j <= 6; ++j) m2 = std::max(m2, d.alpha[j] - d.beta[j]);
    return {m1, m2};
}

}  // namespace zeta4
