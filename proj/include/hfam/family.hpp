#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "hfam/errors.hpp"

namespace hfam {

inline constexpr int kMaxGroundSize = 20;

/// The ground set {1, ..., n}. Elements are 1-based in the public interface;
/// bit positions are 0-based (element i <-> bit i-1).
struct GroundSet {
    int n;

    explicit GroundSet(int size) : n(size) {
        if (n < 1 || n > kMaxGroundSize) {
            throw std::invalid_argument("ground set size must be in [1, " +
                                        std::to_string(kMaxGroundSize) + "], got " +
                                        std::to_string(n));
        }
    }

    friend bool operator==(const GroundSet&, const GroundSet&) = default;
};

/// A subset of the ground set packed into one machine word.
using Word = std::uint32_t;

/// The word with all n ground elements present.
Word full_word(int n) noexcept;

/// |A| for a packed set.
int set_size(Word a) noexcept;

/// a <= b as sets.
bool subset_of(Word a, Word b) noexcept;

/// Elements of a packed set in ascending order (1-based).
std::vector<int> elements_of(Word a);

/// Packs a list of 1-based elements; throws std::out_of_range on elements
/// outside the ground set.
Word word_of(std::span<const int> elements, const GroundSet& ground);

/// "{1,3}" rendering; "{}" for the empty set.
std::string set_to_string(Word a);

/// A duplicate-free collection of subsets of a common ground set, kept in
/// strictly increasing word order (the canonical order used everywhere).
class SetFamily {
public:
    explicit SetFamily(GroundSet ground) : ground_(ground) {}

    /// Canonicalizes: sorts, collapses duplicates, validates every word
    /// against the ground set.
    SetFamily(GroundSet ground, std::vector<Word> members);

    int n() const noexcept { return ground_.n; }
    GroundSet ground() const noexcept { return ground_; }
    std::size_t size() const noexcept { return members_.size(); }
    bool empty() const noexcept { return members_.empty(); }
    const std::vector<Word>& members() const noexcept { return members_; }
    Word operator[](std::size_t i) const noexcept { return members_[i]; }

    /// Binary search over the canonical list.
    bool contains(Word a) const noexcept;

    auto begin() const noexcept { return members_.begin(); }
    auto end() const noexcept { return members_.end(); }

    friend bool operator==(const SetFamily&, const SetFamily&) = default;

private:
    GroundSet ground_;
    std::vector<Word> members_;  // strictly increasing
};

/// The (kernel, residue) partition of a family: the kernel holds the members
/// that intersect every member (including themselves), the residue the rest.
struct KernelSplit {
    SetFamily kernel;
    SetFamily residue;
};

/// Builds a family from 1-based element lists; duplicate sets collapse.
SetFamily make_family(int n, const std::vector<std::vector<int>>& sets);

/// 2^[n] over the given ground set.
SetFamily power_set(GroundSet ground);

/// Smallest hereditary family containing every input set (union of the
/// power sets of the members).
SetFamily hereditary_closure(const SetFamily& bases);

/// The maximal members under inclusion.
SetFamily bases_of(const SetFamily& family);

/// True iff the family is closed under taking subsets. Vacuously true for
/// the empty family.
bool is_hereditary(const SetFamily& family);

/// Union of all members; the empty word for the empty family.
Word union_support(const SetFamily& family);

/// The subfamily of members containing x.
SetFamily star(const SetFamily& family, int x);

/// Any two members intersect. The empty family counts as intersecting; any
/// family containing the empty set does not (it fails to meet itself).
bool is_intersecting(const SetFamily& family);

/// All members share a common element; vacuously true for the empty family.
bool is_centred(const SetFamily& family);

/// Every set in one family intersects every set in each other family.
/// Requires k >= 2 families over one ground set. Empty families impose no
/// constraint, and no family is required to be intersecting internally.
bool are_cross_intersecting(std::span<const SetFamily> families);

/// True iff x is in the support and swapping any member element for x stays
/// inside the family.
bool is_compressed_wrt(const SetFamily& family, int x);

/// True iff swapping any member element j for any smaller i stays inside.
bool is_left_compressed(const SetFamily& family);

/// (A \ {y}) u {x} when y is present and x absent; A unchanged otherwise.
Word delta(const GroundSet& ground, Word a, int x, int y);

/// The size-preserving compression: each member A is replaced by
/// delta(A, x, y) unless the image is already a member, in which case A is
/// kept.
SetFamily compress(const SetFamily& family, int x, int y);

/// Partitions the family into kernel and residue.
KernelSplit split_kernel(const SetFamily& family);

}  // namespace hfam
