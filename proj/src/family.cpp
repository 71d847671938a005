#include "hfam/family.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

namespace hfam {

Word full_word(int n) noexcept { return (Word{1} << n) - 1; }

int set_size(Word a) noexcept { return std::popcount(a); }

bool subset_of(Word a, Word b) noexcept { return (a & ~b) == 0; }

std::vector<int> elements_of(Word a) {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(std::popcount(a)));
    while (a != 0) {
        const Word low = a & (~a + 1);
        out.push_back(std::countr_zero(low) + 1);
        a ^= low;
    }
    return out;
}

Word word_of(std::span<const int> elements, const GroundSet& ground) {
    Word a = 0;
    for (int e : elements) {
        if (e < 1 || e > ground.n) {
            throw std::out_of_range("element " + std::to_string(e) + " outside ground set [1, " +
                                    std::to_string(ground.n) + "]");
        }
        a |= Word{1} << (e - 1);
    }
    return a;
}

std::string set_to_string(Word a) {
    std::string out = "{";
    bool first = true;
    for (int e : elements_of(a)) {
        if (!first) out += ',';
        out += std::to_string(e);
        first = false;
    }
    out += '}';
    return out;
}

SetFamily::SetFamily(GroundSet ground, std::vector<Word> members)
    : ground_(ground), members_(std::move(members)) {
    const Word full = full_word(ground_.n);
    for (Word a : members_) {
        if ((a & ~full) != 0) {
            throw std::invalid_argument("set word uses elements outside the ground set");
        }
    }
    std::sort(members_.begin(), members_.end());
    members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

bool SetFamily::contains(Word a) const noexcept {
    // TODO: optional 2^n bit-table accelerator for n <= 16 when membership
    // queries show up in profiles; binary search is fine at current sizes.
    return std::binary_search(members_.begin(), members_.end(), a);
}

SetFamily make_family(int n, const std::vector<std::vector<int>>& sets) {
    const GroundSet ground(n);
    std::vector<Word> words;
    words.reserve(sets.size());
    for (const auto& s : sets) words.push_back(word_of(s, ground));
    return SetFamily(ground, std::move(words));
}

SetFamily power_set(GroundSet ground) {
    std::vector<Word> words(std::size_t{1} << ground.n);
    std::iota(words.begin(), words.end(), Word{0});
    return SetFamily(ground, std::move(words));
}

SetFamily hereditary_closure(const SetFamily& bases) {
    std::vector<bool> seen(std::size_t{1} << bases.n(), false);

    // Larger generators first: once a set is marked, all its subsets already
    // are, so marked generators can be skipped outright.
    std::vector<Word> order(bases.members());
    std::sort(order.begin(), order.end(),
              [](Word a, Word b) { return std::popcount(a) > std::popcount(b); });
    for (Word m : order) {
        if (seen[m]) continue;
        for (Word s = m;; s = (s - 1) & m) {
            seen[s] = true;
            if (s == 0) break;
        }
    }

    std::vector<Word> words;
    if (!bases.empty()) {
        for (Word a = 0; a <= full_word(bases.n()); ++a) {
            if (seen[a]) words.push_back(a);
        }
    }
    return SetFamily(bases.ground(), std::move(words));
}

SetFamily bases_of(const SetFamily& family) {
    // Descending size order: every non-maximal member is a strict subset of
    // some maximal member, which has more elements and is processed first.
    std::vector<Word> order(family.members());
    std::sort(order.begin(), order.end(),
              [](Word a, Word b) { return std::popcount(a) > std::popcount(b); });

    std::vector<bool> covered(std::size_t{1} << family.n(), false);
    std::vector<Word> maximal;
    for (Word m : order) {
        if (covered[m]) continue;
        maximal.push_back(m);
        for (Word s = m;; s = (s - 1) & m) {
            covered[s] = true;
            if (s == 0) break;
        }
    }
    return SetFamily(family.ground(), std::move(maximal));
}

bool is_hereditary(const SetFamily& family) {
    for (Word m : family) {
        Word rest = m;
        while (rest != 0) {
            const Word low = rest & (~rest + 1);
            if (!family.contains(m ^ low)) return false;
            rest ^= low;
        }
    }
    return true;
}

Word union_support(const SetFamily& family) {
    Word u = 0;
    for (Word m : family) u |= m;
    return u;
}

SetFamily star(const SetFamily& family, int x) {
    if (x < 1 || x > family.n()) {
        throw std::out_of_range("star center " + std::to_string(x) + " outside ground set");
    }
    const Word bit = Word{1} << (x - 1);
    std::vector<Word> words;
    for (Word m : family) {
        if ((m & bit) != 0) words.push_back(m);
    }
    return SetFamily(family.ground(), std::move(words));
}

bool is_intersecting(const SetFamily& family) {
    const auto& ms = family.members();
    for (std::size_t i = 0; i < ms.size(); ++i) {
        if (ms[i] == 0) return false;  // the empty set fails to meet itself
        for (std::size_t j = i + 1; j < ms.size(); ++j) {
            if ((ms[i] & ms[j]) == 0) return false;
        }
    }
    return true;
}

bool is_centred(const SetFamily& family) {
    if (family.empty()) return true;
    Word common = full_word(family.n());
    for (Word m : family) common &= m;
    return common != 0;
}

bool are_cross_intersecting(std::span<const SetFamily> families) {
    if (families.size() < 2) {
        throw std::invalid_argument("cross-intersection needs at least two families");
    }
    for (const SetFamily& f : families) {
        if (!(f.ground() == families[0].ground())) {
            throw std::invalid_argument("cross-intersection needs one common ground set");
        }
    }
    for (std::size_t i = 0; i < families.size(); ++i) {
        for (std::size_t j = i + 1; j < families.size(); ++j) {
            for (Word a : families[i]) {
                for (Word b : families[j]) {
                    if ((a & b) == 0) return false;
                }
            }
        }
    }
    return true;
}

bool is_compressed_wrt(const SetFamily& family, int x) {
    if (x < 1 || x > family.n()) {
        throw std::out_of_range("element " + std::to_string(x) + " outside ground set");
    }
    const Word xbit = Word{1} << (x - 1);
    if ((union_support(family) & xbit) == 0) return false;
    for (Word m : family) {
        if ((m & xbit) != 0) continue;
        Word rest = m;
        while (rest != 0) {
            const Word ybit = rest & (~rest + 1);
            if (!family.contains((m ^ ybit) | xbit)) return false;
            rest ^= ybit;
        }
    }
    return true;
}

bool is_left_compressed(const SetFamily& family) {
    for (int i = 1; i < family.n(); ++i) {
        const Word ibit = Word{1} << (i - 1);
        for (int j = i + 1; j <= family.n(); ++j) {
            const Word jbit = Word{1} << (j - 1);
            for (Word m : family) {
                if ((m & jbit) == 0 || (m & ibit) != 0) continue;
                if (!family.contains((m ^ jbit) | ibit)) return false;
            }
        }
    }
    return true;
}

namespace {

void validate_swap_pair(const GroundSet& ground, int x, int y) {
    if (x < 1 || x > ground.n || y < 1 || y > ground.n) {
        throw std::out_of_range("swap elements must lie in the ground set");
    }
    if (x == y) throw std::invalid_argument("swap elements must differ");
}

Word delta_unchecked(Word a, Word xbit, Word ybit) noexcept {
    if ((a & ybit) != 0 && (a & xbit) == 0) return (a ^ ybit) | xbit;
    return a;
}

}  // namespace

Word delta(const GroundSet& ground, Word a, int x, int y) {
    validate_swap_pair(ground, x, y);
    if ((a & ~full_word(ground.n)) != 0) {
        throw std::invalid_argument("set word uses elements outside the ground set");
    }
    return delta_unchecked(a, Word{1} << (x - 1), Word{1} << (y - 1));
}

SetFamily compress(const SetFamily& family, int x, int y) {
    validate_swap_pair(family.ground(), x, y);
    const Word xbit = Word{1} << (x - 1);
    const Word ybit = Word{1} << (y - 1);
    std::vector<Word> words;
    words.reserve(family.size());
    for (Word m : family) {
        const Word d = delta_unchecked(m, xbit, ybit);
        words.push_back(d != m && !family.contains(d) ? d : m);
    }
    SetFamily out(family.ground(), std::move(words));
    if (out.size() != family.size()) {
        throw defect_error("compression changed the family size");
    }
    return out;
}

KernelSplit split_kernel(const SetFamily& family) {
    const auto& ms = family.members();
    std::vector<Word> kernel;
    std::vector<Word> residue;
    if (!ms.empty() && ms.front() == 0) {
        // Nothing meets the empty set, so nothing meets every member.
        residue = ms;
    } else {
        for (std::size_t i = 0; i < ms.size(); ++i) {
            bool meets_all = true;
            for (std::size_t j = 0; j < ms.size(); ++j) {
                if ((ms[i] & ms[j]) == 0) {
                    meets_all = false;
                    break;
                }
            }
            (meets_all ? kernel : residue).push_back(ms[i]);
        }
    }
    return KernelSplit{SetFamily(family.ground(), std::move(kernel)),
                       SetFamily(family.ground(), std::move(residue))};
}

}  // namespace hfam
