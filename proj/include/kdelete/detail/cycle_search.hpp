#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "kdelete/vertex_set.hpp"

namespace kdelete::detail {

/// Fixed-length cycle search over a bit-set adjacency. Only cycles whose
/// smallest vertex is >= *anchor are considered; on success *anchor is left
/// at the smallest vertex of the returned cycle so a caller that deletes
/// edges can resume without rescanning exhausted anchors.
std::optional<std::vector<Vertex>> find_cycle(std::span<const VertexSet> adjacency,
                                              std::size_t length, Vertex* anchor);

} // namespace kdelete::detail
