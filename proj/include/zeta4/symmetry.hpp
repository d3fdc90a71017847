#pragma once
// The order-51840 group of permutations of the 27 multiset labels, its
// 432-element subgroup of (a,b)-trivial moves, and the 120 coset
// representatives.

#include "zeta4/params.hpp"

#include <array>
#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

namespace zeta4 {

using LabelPerm = std::array<std::uint8_t, kLabelCount>;

/// A label permutation acting on multisets by (g e)[L] = e[perm[L]].
struct GroupElement {
    LabelPerm perm{};
    std::string word;  // generator names, rightmost acts first

    static GroupElement identity();
    /// The permutation induced by the slot permutation j -> sigma[j-1] of h1..h6.
    static GroupElement from_slot_permutation(const std::array<int, 6>& sigma, std::string name);

    bool is_identity() const;
    GroupElement inverse() const;
};

/// Acts as `g` after `h`: act(compose(g, h)) = act(g) o act(h).
GroupElement compose(const GroupElement& g, const GroupElement& h);
EMultiset act(const GroupElement& g, const EMultiset& e);

struct LabelPermHash {
    std::size_t operator()(const LabelPerm& p) const noexcept;
};

class PermGroup {
public:
    explicit PermGroup(std::vector<GroupElement> elements);

    std::size_t size() const { return elements_.size(); }
    const std::vector<GroupElement>& elements() const { return elements_; }
    bool contains(const LabelPerm& p) const { return index_.count(p) != 0; }
    bool contains(const GroupElement& g) const { return contains(g.perm); }

private:
    std::vector<GroupElement> elements_;
    std::unordered_map<LabelPerm, std::size_t, LabelPermHash> index_;
};

/// Breadth-first closure; elements ordered by discovery, identity first.
/// Throws Error("closure-overflow") beyond `limit` elements.
PermGroup close_under(const std::vector<GroupElement>& gens, std::size_t limit);

/// (h1 h3), (h3 h5), (h2 h4), (h4 h6), b135, (h3 h4).
const std::vector<GroupElement>& generators();
GroupElement swap_b135();
GroupElement involution();

/// Shared, generated once.
const PermGroup& generate_group();
const PermGroup& trivial_subgroup();

struct RepEntry {
    GroupElement g;
    DirectionPair image;  // g applied to the base directions
};

/// One entry per coset {t o g : t trivial}; sorted by beta0 descending, then
/// alpha ascending.
struct RepSet {
    DirectionPair base;
    std::vector<RepEntry> reps;
};

/// The 120 representatives, canonicalized against `base` (must be balanced):
/// within a coset keep members whose image has odd and even alpha slots
/// ascending, then take the largest beta0, then the smallest alpha.
RepSet coset_reps(const DirectionPair& base);
/// Canonicalized against the (68,57;22,...,27) family.
const RepSet& default_reps();

/// Throws "invalid-params" if d is not balanced, "negative-entry" if the image
/// multiset has a negative entry.
DirectionPair act_on_directions(const GroupElement& g, const DirectionPair& d);

}  // namespace zeta4
