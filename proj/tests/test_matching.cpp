#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "hfam/matching.hpp"
#include "oracles.hpp"

using hfam::detail::max_matching;

namespace {

int matching_size(const std::vector<int>& mate) {
    int size = 0;
    for (std::size_t v = 0; v < mate.size(); ++v) {
        if (mate[v] >= 0 && static_cast<std::size_t>(mate[v]) > v) ++size;
    }
    return size;
}

void require_valid(const std::vector<int>& mate, const std::vector<std::uint64_t>& adj) {
    for (std::size_t v = 0; v < mate.size(); ++v) {
        if (mate[v] < 0) continue;
        const std::size_t u = static_cast<std::size_t>(mate[v]);
        REQUIRE_EQ(mate[u], static_cast<int>(v));
        REQUIRE(((adj[v] >> u) & 1) == 1);
    }
}

std::vector<int> run(int n, const std::vector<std::uint64_t>& adj) {
    return max_matching(n, [&adj](int a, int b) { return ((adj[a] >> b) & 1) != 0; });
}

}  // namespace

TEST_CASE("every graph on up to five vertices") {
    for (int n = 1; n <= 5; ++n) {
        std::vector<std::pair<int, int>> slots;
        for (int a = 0; a < n; ++a) {
            for (int b = a + 1; b < n; ++b) slots.emplace_back(a, b);
        }
        for (std::uint64_t edges = 0; edges < (std::uint64_t{1} << slots.size()); ++edges) {
            std::vector<std::uint64_t> adj(n, 0);
            for (std::size_t s = 0; s < slots.size(); ++s) {
                if ((edges >> s) & 1) {
                    adj[slots[s].first] |= std::uint64_t{1} << slots[s].second;
                    adj[slots[s].second] |= std::uint64_t{1} << slots[s].first;
                }
            }
            const auto mate = run(n, adj);
            require_valid(mate, adj);
            REQUIRE_EQ(matching_size(mate), oracle::dp_max_matching(n, adj));
        }
    }
}

TEST_CASE("random graphs up to twelve vertices") {
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 300; ++trial) {
        const int n = 6 + static_cast<int>(rng() % 7);
        std::vector<std::uint64_t> adj(n, 0);
        for (int a = 0; a < n; ++a) {
            for (int b = a + 1; b < n; ++b) {
                if (rng() % 3 == 0) {
                    adj[a] |= std::uint64_t{1} << b;
                    adj[b] |= std::uint64_t{1} << a;
                }
            }
        }
        const auto mate = run(n, adj);
        require_valid(mate, adj);
        REQUIRE_EQ(matching_size(mate), oracle::dp_max_matching(n, adj));
    }
}

TEST_CASE("odd cycles need blossom handling") {
    // C5 plus a pendant: maximum matching has size 3
    const int n = 6;
    std::vector<std::uint64_t> adj(n, 0);
    auto edge = [&adj](int a, int b) {
        adj[a] |= std::uint64_t{1} << b;
        adj[b] |= std::uint64_t{1} << a;
    };
    edge(0, 1);
    edge(1, 2);
    edge(2, 3);
    edge(3, 4);
    edge(4, 0);
    edge(2, 5);
    const auto mate = run(n, adj);
    require_valid(mate, adj);
    CHECK_EQ(matching_size(mate), 3);
}

TEST_CASE("degenerate inputs") {
    CHECK(max_matching(0, [](int, int) { return true; }).empty());
    const auto lonely = max_matching(1, [](int, int) { return true; });
    CHECK_EQ(lonely, std::vector<int>{-1});
}
