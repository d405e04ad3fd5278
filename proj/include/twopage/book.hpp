#pragma once

#include <vector>

#include "twopage/graph.hpp"

namespace twopage {

enum class Page { Top, Bottom };

inline Page other_page(Page p) { return p == Page::Top ? Page::Bottom : Page::Top; }

/// Spine order plus a page per edge. Valid iff the order is a permutation of
/// the vertices, every edge is paged, and no two same-page edges alternate
/// along the spine.
struct BookEmbedding {
    std::vector<VertexId> order;
    std::vector<Page> page;  ///< indexed by edge id (slots of the host graph)

    int position(VertexId v) const {
        for (int i = 0; i < static_cast<int>(order.size()); ++i)
            if (order[i] == v) return i;
        return -1;
    }
};

/// Cyclic vertex sequence covering all vertices once, together with the
/// augmentation pairs: consecutive vertices not adjacent in the graph.
struct SubhamCycle {
    std::vector<VertexId> order;

    std::vector<std::pair<VertexId, VertexId>> augmentation_edges(const Graph& g) const {
        std::vector<std::pair<VertexId, VertexId>> aug;
        int n = static_cast<int>(order.size());
        for (int i = 0; i < n; ++i) {
            VertexId a = order[i], b = order[(i + 1) % n];
            if (!g.adjacent(a, b)) aug.emplace_back(a, b);
        }
        return aug;
    }
};

}  // namespace twopage
