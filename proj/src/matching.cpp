#include "hfam/matching.hpp"

#include <algorithm>
#include <numeric>

namespace hfam::detail {

namespace {

// Augmenting-path search with blossom contraction, tracked through per-vertex
// pseudo-node bases. State lives in one struct so a search can recurse into
// helpers without threading six arrays through every call.
struct BlossomMatcher {
    int n;
    const std::function<bool(int, int)>& adjacent;
    std::vector<int> match, parent, base;
    std::vector<char> used, in_blossom, path_mark;

    BlossomMatcher(int vertex_count, const std::function<bool(int, int)>& adj)
        : n(vertex_count),
          adjacent(adj),
          match(n, -1),
          parent(n, -1),
          base(n, 0),
          used(n, 0),
          in_blossom(n, 0),
          path_mark(n, 0) {}

    int lowest_common_base(int a, int b) {
        std::fill(path_mark.begin(), path_mark.end(), 0);
        int v = a;
        for (;;) {
            v = base[v];
            path_mark[v] = 1;
            if (match[v] == -1) break;
            v = parent[match[v]];
        }
        v = b;
        for (;;) {
            v = base[v];
            if (path_mark[v]) return v;
            v = parent[match[v]];
        }
    }

    void mark_blossom_path(int v, int stem_base, int child) {
        while (base[v] != stem_base) {
            in_blossom[base[v]] = 1;
            in_blossom[base[match[v]]] = 1;
            parent[v] = child;
            child = match[v];
            v = parent[match[v]];
        }
    }

    // BFS over alternating trees rooted at `root`; returns an exposed vertex
    // closing an augmenting path, or -1.
    int find_augmenting_path(int root) {
        std::fill(used.begin(), used.end(), 0);
        std::fill(parent.begin(), parent.end(), -1);
        std::iota(base.begin(), base.end(), 0);

        std::vector<int> queue{root};
        used[root] = 1;
        for (std::size_t qi = 0; qi < queue.size(); ++qi) {
            const int v = queue[qi];
            for (int to = 0; to < n; ++to) {
                if (to == v || !adjacent(v, to)) continue;
                if (base[v] == base[to] || match[v] == to) continue;
                if (to == root || (match[to] != -1 && parent[match[to]] != -1)) {
                    // Odd cycle: contract the blossom onto its stem base.
                    const int stem = lowest_common_base(v, to);
                    std::fill(in_blossom.begin(), in_blossom.end(), 0);
                    mark_blossom_path(v, stem, to);
                    mark_blossom_path(to, stem, v);
                    for (int i = 0; i < n; ++i) {
                        if (!in_blossom[base[i]]) continue;
                        base[i] = stem;
                        if (!used[i]) {
                            used[i] = 1;
                            queue.push_back(i);
                        }
                    }
                } else if (parent[to] == -1) {
                    parent[to] = v;
                    if (match[to] == -1) return to;
                    used[match[to]] = 1;
                    queue.push_back(match[to]);
                }
            }
        }
        return -1;
    }

    void augment_from(int exposed) {
        int v = exposed;
        while (v != -1) {
            const int pv = parent[v];
            const int next = match[pv];
            match[v] = pv;
            match[pv] = v;
            v = next;
        }
    }

    std::vector<int> run() {
        // Greedy seed halves the number of augmenting searches in practice.
        for (int v = 0; v < n; ++v) {
            if (match[v] != -1) continue;
            for (int to = v + 1; to < n; ++to) {
                if (match[to] == -1 && adjacent(v, to)) {
                    match[v] = to;
                    match[to] = v;
                    break;
                }
            }
        }
        for (int v = 0; v < n; ++v) {
            if (match[v] != -1) continue;
            const int exposed = find_augmenting_path(v);
            if (exposed != -1) augment_from(exposed);
        }
        return match;
    }
};

}  // namespace

std::vector<int> max_matching(int vertex_count, const std::function<bool(int, int)>& adjacent) {
    if (vertex_count <= 0) return {};
    BlossomMatcher matcher(vertex_count, adjacent);
    return matcher.run();
}

}  // namespace hfam::detail
