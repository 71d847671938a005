#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hfam/family.hpp"

namespace hfam {

/// Full antichain sweeps stop here by default; n = 6 (7.8M antichains) must
/// be requested explicitly and n >= 7 is out of reach.
inline constexpr int kEnumDefaultMaxGround = 5;
inline constexpr int kEnumHardMaxGround = 6;

/// Streams every antichain of 2^[n] exactly once, as a SetFamily of pairwise
/// incomparable sets. Order is depth-first extension over ascending word
/// values, i.e. lexicographic on the serialized member list; the empty
/// antichain comes first.
class AntichainIterator {
public:
    explicit AntichainIterator(GroundSet ground, bool allow_large = false);

    std::optional<SetFamily> next();

private:
    GroundSet ground_;
    Word limit_;
    std::vector<Word> chain_;
    Word next_word_ = 0;
    bool first_ = true;
};

/// Post-filter atoms for hereditary sweeps.
struct FamilyFilter {
    bool nonempty = false;
    bool not_just_empty_set = false;
    bool bases_share_element = false;
    bool left_compressed = false;
    std::optional<int> compressed_wrt;

    /// Comma-separated atoms: nonempty, not-just-empty-set, compressed-wrt(x),
    /// bases-share-element, left-compressed. Unknown atoms are an error.
    static FamilyFilter parse(const std::string& text);

    bool accepts(const SetFamily& family) const;
    std::string str() const;
};

/// Streams the hereditary closure of every antichain, post-filtered. Each
/// hereditary family over [n] appears exactly once (bases <-> antichains).
class HereditaryIterator {
public:
    explicit HereditaryIterator(GroundSet ground, FamilyFilter filter = {},
                                bool allow_large = false);

    std::optional<SetFamily> next();

private:
    AntichainIterator inner_;
    FamilyFilter filter_;
};

std::vector<SetFamily> all_antichains(int n, bool allow_large = false);
std::vector<SetFamily> all_hereditary(int n, const FamilyFilter& filter = {},
                                      bool allow_large = false);

/// Minimum of the canonical serialization over all relabelings of [n]; two
/// families get equal keys iff a ground-set permutation maps one to the
/// other. Requires n <= 8 (n! scan).
struct CanonicalKey {
    int n = 0;
    std::vector<Word> words;

    friend bool operator==(const CanonicalKey&, const CanonicalKey&) = default;
    std::string str() const;
};

CanonicalKey canonical_key(const SetFamily& family);

}  // namespace hfam
