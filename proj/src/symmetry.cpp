#include "zeta4/symmetry.hpp"

#include <algorithm>
#include <deque>
#include <mutex>

namespace zeta4 {

namespace {

const Eta kDefaultEta{68, 57, {22, 23, 24, 25, 26, 27}};

GroupElement from_cycles(const std::vector<std::pair<int, int>>& swaps, std::string name) {
    GroupElement g = GroupElement::identity();
    g.word = std::move(name);
    for (auto [x, y] : swaps) std::swap(g.perm[x], g.perm[y]);
    return g;
}

// canonical preference inside a coset: larger beta0, then smaller alpha
bool better_image(const DirectionPair& x, const DirectionPair& y) {
    if (x.beta[0] != y.beta[0]) return x.beta[0] > y.beta[0];
    return x.alpha < y.alpha;
}

bool slots_ascending(const DirectionPair& d) {
    const auto& a = d.alpha;
    return a[1] <= a[3] && a[3] <= a[5] && a[2] <= a[4] && a[4] <= a[6];
}

}  // namespace

GroupElement GroupElement::identity() {
    GroupElement g;
    for (int i = 0; i < kLabelCount; ++i) g.perm[i] = static_cast<std::uint8_t>(i);
    g.word = "id";
    return g;
}

GroupElement GroupElement::from_slot_permutation(const std::array<int, 6>& sigma, std::string name) {
    GroupElement g;
    g.word = std::move(name);
    for (int j = 1; j <= 6; ++j) {
        int sj = sigma[j - 1];
        g.perm[label_e0(j)] = static_cast<std::uint8_t>(label_e0(sj));
        g.perm[label_ebar(j)] = static_cast<std::uint8_t>(label_ebar(sj));
        for (int k = j + 1; k <= 6; ++k)
            g.perm[label_pair(j, k)] = static_cast<std::uint8_t>(label_pair(sj, sigma[k - 1]));
    }
    return g;
}

bool GroupElement::is_identity() const {
    for (int i = 0; i < kLabelCount; ++i)
        if (perm[i] != i) return false;
    return true;
}

GroupElement GroupElement::inverse() const {
    GroupElement r;
    for (int i = 0; i < kLabelCount; ++i) r.perm[perm[i]] = static_cast<std::uint8_t>(i);
    r.word = "inv(" + word + ")";
    return r;
}

GroupElement compose(const GroupElement& g, const GroupElement& h) {
    GroupElement r;
    for (int i = 0; i < kLabelCount; ++i) r.perm[i] = h.perm[g.perm[i]];
    if (g.word == "id")
        r.word = h.word;
    else if (h.word == "id")
        r.word = g.word;
    else
        r.word = g.word + " " + h.word;
    return r;
}

EMultiset act(const GroupElement& g, const EMultiset& e) {
    EMultiset r;
    for (int i = 0; i < kLabelCount; ++i) r.v[i] = e.v[g.perm[i]];
    return r;
}

std::size_t LabelPermHash::operator()(const LabelPerm& p) const noexcept {
    std::uint64_t h = 1469598103934665603ull;
    for (auto x : p) {
        h ^= x;
        h *= 1099511628211ull;
    }
    return static_cast<std::size_t>(h);
}

PermGroup::PermGroup(std::vector<GroupElement> elements) : elements_(std::move(elements)) {
    index_.reserve(elements_.size() * 2);
    for (std::size_t i = 0; i < elements_.size(); ++i) index_.emplace(elements_[i].perm, i);
}

PermGroup close_under(const std::vector<GroupElement>& gens, std::size_t limit) {
    std::vector<GroupElement> out{GroupElement::identity()};
    std::unordered_map<LabelPerm, std::size_t, LabelPermHash> seen;
    seen.emplace(out[0].perm, 0);
    for (std::size_t head = 0; head < out.size(); ++head) {
        for (const auto& s : gens) {
            GroupElement y = compose(out[head], s);
            if (seen.count(y.perm)) continue;
            if (out.size() >= limit)
                throw Error("closure-overflow", "more than " + std::to_string(limit) + " elements");
            seen.emplace(y.perm, out.size());
            out.push_back(std::move(y));
        }
    }
    return PermGroup(std::move(out));
}

GroupElement swap_b135() {
    return from_cycles({{label_e0(1), label_pair(3, 5)},
                        {label_e0(3), label_pair(1, 5)},
                        {label_e0(5), label_pair(1, 3)},
                        {label_ebar(2), label_pair(4, 6)},
                        {label_ebar(4), label_pair(2, 6)},
                        {label_ebar(6), label_pair(2, 4)}},
                       "b135");
}

GroupElement involution() { return GroupElement::from_slot_permutation({6, 5, 4, 3, 2, 1}, "i"); }

const std::vector<GroupElement>& generators() {
    static const std::vector<GroupElement> gens = {
        GroupElement::from_slot_permutation({3, 2, 1, 4, 5, 6}, "t13"),
        GroupElement::from_slot_permutation({1, 2, 5, 4, 3, 6}, "t35"),
        GroupElement::from_slot_permutation({1, 4, 3, 2, 5, 6}, "t24"),
        GroupElement::from_slot_permutation({1, 2, 3, 6, 5, 4}, "t46"),
        swap_b135(),
        GroupElement::from_slot_permutation({1, 2, 4, 3, 5, 6}, "t34"),
    };
    return gens;
}

const PermGroup& generate_group() {
    static const PermGroup g = close_under(generators(), 51840);
    return g;
}

const PermGroup& trivial_subgroup() {
    static const PermGroup t = [] {
        const auto& gens = generators();
        std::vector<GroupElement> tg(gens.begin(), gens.begin() + 5);
        tg.push_back(involution());
        return close_under(tg, 51840);
    }();
    return t;
}

DirectionPair act_on_directions(const GroupElement& g, const DirectionPair& d) {
    if (!is_balanced(d)) throw Error("invalid-params", "directions violate 2*beta0 + alpha0 = alpha1 + ... + alpha6");
    return directions_from_multiset(act(g, direction_multiset(d)));
}

RepSet coset_reps(const DirectionPair& base) {
    if (!is_balanced(base)) throw Error("invalid-params", "directions violate 2*beta0 + alpha0 = alpha1 + ... + alpha6");
    const PermGroup& G = generate_group();
    const PermGroup& T = trivial_subgroup();
    EMultiset e = direction_multiset(base);
    std::vector<char> taken(G.size(), 0);
    std::unordered_map<LabelPerm, std::size_t, LabelPermHash> where;
    where.reserve(G.size() * 2);
    for (std::size_t i = 0; i < G.size(); ++i) where.emplace(G.elements()[i].perm, i);

    RepSet out;
    out.base = base;
    for (std::size_t i = 0; i < G.size(); ++i) {
        if (taken[i]) continue;
        const GroupElement& g = G.elements()[i];
        std::size_t best = G.size();
        DirectionPair best_img;
        bool best_sorted = false;
        for (const auto& t : T.elements()) {
            std::size_t k = where.at(compose(t, g).perm);
            taken[k] = 1;
            const GroupElement& m = G.elements()[k];
            DirectionPair img = directions_from_multiset(act(m, e));
            bool sorted = slots_ascending(img);
            bool take = false;
            if (best == G.size() || sorted != best_sorted)
                take = best == G.size() || sorted;
            else if (better_image(img, best_img))
                take = true;
            else if (img == best_img && m.perm < G.elements()[best].perm)
                take = true;
            if (take) {
                best = k;
                best_img = img;
                best_sorted = sorted;
            }
        }
        out.reps.push_back({G.elements()[best], best_img});
    }
    std::sort(out.reps.begin(), out.reps.end(),
              [](const RepEntry& x, const RepEntry& y) {
                  if (x.image == y.image) return x.g.perm < y.g.perm;
                  return better_image(x.image, y.image);
              });
    return out;
}

const RepSet& default_reps() {
    static const RepSet reps = coset_reps(directions_from_eta(kDefaultEta));
    return reps;
}

}  // namespace zeta4
