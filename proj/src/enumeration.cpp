#include "hfam/enumeration.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <sstream>

namespace hfam {

namespace {

void check_enum_budget(int n, bool allow_large) {
    const int cap = allow_large ? kEnumHardMaxGround : kEnumDefaultMaxGround;
    if (n > cap) {
        throw budget_error("antichain enumeration over [" + std::to_string(n) +
                           "] exceeds the budget (max " + std::to_string(cap) + ")");
    }
}

}  // namespace

AntichainIterator::AntichainIterator(GroundSet ground, bool allow_large)
    : ground_(ground), limit_(full_word(ground.n)) {
    check_enum_budget(ground.n, allow_large);
}

std::optional<SetFamily> AntichainIterator::next() {
    if (first_) {
        first_ = false;
        return SetFamily(ground_);  // the empty antichain
    }
    Word candidate = next_word_;
    for (;;) {
        for (; candidate <= limit_; ++candidate) {
            // candidate exceeds every chain word numerically, so it cannot be
            // a subset of one; only the reverse containment needs a check.
            bool compatible = true;
            for (Word c : chain_) {
                if (subset_of(c, candidate)) {
                    compatible = false;
                    break;
                }
            }
            if (compatible) {
                chain_.push_back(candidate);
                next_word_ = candidate + 1;
                return SetFamily(ground_, chain_);
            }
        }
        if (chain_.empty()) return std::nullopt;
        candidate = chain_.back() + 1;
        chain_.pop_back();
    }
}

FamilyFilter FamilyFilter::parse(const std::string& text) {
    FamilyFilter out;
    std::stringstream items(text);
    std::string tok;
    while (std::getline(items, tok, ',')) {
        tok.erase(std::remove_if(tok.begin(), tok.end(), [](char c) { return c == ' '; }),
                  tok.end());
        if (tok.empty()) continue;
        if (tok == "nonempty") {
            out.nonempty = true;
        } else if (tok == "not-just-empty-set") {
            out.not_just_empty_set = true;
        } else if (tok == "bases-share-element") {
            out.bases_share_element = true;
        } else if (tok == "left-compressed") {
            out.left_compressed = true;
        } else if (tok.rfind("compressed-wrt(", 0) == 0 && tok.back() == ')') {
            try {
                out.compressed_wrt = std::stoi(tok.substr(15, tok.size() - 16));
            } catch (const std::exception&) {
                throw parse_error("invalid filter atom '" + tok + "'");
            }
        } else {
            throw parse_error("unknown filter atom '" + tok + "'");
        }
    }
    return out;
}

bool FamilyFilter::accepts(const SetFamily& family) const {
    if (nonempty && family.empty()) return false;
    if (not_just_empty_set && family.size() == 1 && family[0] == 0) return false;
    if (compressed_wrt.has_value() && !is_compressed_wrt(family, *compressed_wrt)) return false;
    if (left_compressed && !is_left_compressed(family)) return false;
    if (bases_share_element) {
        const SetFamily bases = bases_of(family);
        if (bases.empty()) return false;
        Word common = full_word(family.n());
        for (Word b : bases) common &= b;
        if (common == 0) return false;
    }
    return true;
}

std::string FamilyFilter::str() const {
    std::string out;
    auto add = [&out](const std::string& atom) {
        if (!out.empty()) out += ',';
        out += atom;
    };
    if (nonempty) add("nonempty");
    if (not_just_empty_set) add("not-just-empty-set");
    if (compressed_wrt.has_value()) add("compressed-wrt(" + std::to_string(*compressed_wrt) + ")");
    if (bases_share_element) add("bases-share-element");
    if (left_compressed) add("left-compressed");
    return out;
}

HereditaryIterator::HereditaryIterator(GroundSet ground, FamilyFilter filter, bool allow_large)
    : inner_(ground, allow_large), filter_(std::move(filter)) {
    if (filter_.compressed_wrt.has_value() &&
        (*filter_.compressed_wrt < 1 || *filter_.compressed_wrt > ground.n)) {
        throw parse_error("compressed-wrt element outside the ground set");
    }
}

std::optional<SetFamily> HereditaryIterator::next() {
    for (;;) {
        auto antichain = inner_.next();
        if (!antichain.has_value()) return std::nullopt;
        SetFamily closed = hereditary_closure(*antichain);
        if (filter_.accepts(closed)) return closed;
    }
}

std::vector<SetFamily> all_antichains(int n, bool allow_large) {
    AntichainIterator it{GroundSet(n), allow_large};
    std::vector<SetFamily> out;
    while (auto f = it.next()) out.push_back(std::move(*f));
    return out;
}

std::vector<SetFamily> all_hereditary(int n, const FamilyFilter& filter, bool allow_large) {
    HereditaryIterator it{GroundSet(n), filter, allow_large};
    std::vector<SetFamily> out;
    while (auto f = it.next()) out.push_back(std::move(*f));
    return out;
}

CanonicalKey canonical_key(const SetFamily& family) {
    if (family.n() > 8) throw budget_error("canonical keys are limited to n <= 8 (n! scan)");
    const int n = family.n();
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);

    std::vector<Word> best;
    bool have_best = false;
    std::vector<Word> relabeled(family.size());
    do {
        for (std::size_t i = 0; i < family.size(); ++i) {
            Word image = 0;
            Word rest = family[i];
            while (rest != 0) {
                const Word low = rest & (~rest + 1);
                image |= Word{1} << perm[static_cast<std::size_t>(std::countr_zero(low))];
                rest ^= low;
            }
            relabeled[i] = image;
        }
        std::sort(relabeled.begin(), relabeled.end());
        if (!have_best || relabeled < best) {
            best = relabeled;
            have_best = true;
        }
    } while (std::next_permutation(perm.begin(), perm.end()));

    return CanonicalKey{n, std::move(best)};
}

std::string CanonicalKey::str() const {
    std::ostringstream out;
    out << "n=" << n << ';' << std::hex;
    bool first = true;
    for (Word w : words) {
        if (!first) out << ',';
        out << w;
        first = false;
    }
    return out.str();
}

}  // namespace hfam
