#pragma once

#include <functional>
#include <vector>

namespace hfam::detail {

/// Maximum-cardinality matching in a general graph (Edmonds' blossom
/// shrinking, O(V^3)). `adjacent` must be symmetric and is never queried
/// with equal endpoints. Returns mate[v], or -1 for exposed vertices.
std::vector<int> max_matching(int vertex_count, const std::function<bool(int, int)>& adjacent);

}  // namespace hfam::detail
