#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace twopage {

using VertexId = int;
using EdgeId = int;

/// Thrown when an input violates a documented precondition.
struct input_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Thrown when an internal invariant breaks. Indicates either a bug or a
/// corrupted input that escaped validation.
struct internal_error : std::logic_error {
    using std::logic_error::logic_error;
};

struct Incidence {
    EdgeId edge;
    VertexId to;
};

/// Undirected multigraph with stable vertex and edge ids.
///
/// Deletion masks slots instead of compacting, so ids stay valid across the
/// add/remove churn of the recursive algorithms. Parallel edges are distinct
/// objects (incidence lists store edge ids), multiplicity is capped at two
/// and self-loops are rejected.
class Graph {
public:
    Graph() = default;

    static Graph build(int vertex_count, const std::vector<std::pair<VertexId, VertexId>>& edges);

    VertexId add_vertex();
    /// Throws input_error on self-loops, dead endpoints or multiplicity > 2.
    EdgeId add_edge(VertexId u, VertexId v);
    void remove_edge(EdgeId e);
    /// Masks v together with all incident edges.
    void remove_vertex(VertexId v);

    bool has_vertex(VertexId v) const {
        return v >= 0 && v < static_cast<int>(vertex_alive_.size()) && vertex_alive_[v];
    }
    bool has_edge(EdgeId e) const {
        return e >= 0 && e < static_cast<int>(edges_.size()) && edges_[e].alive;
    }

    VertexId edge_u(EdgeId e) const { return at(e).u; }
    VertexId edge_v(EdgeId e) const { return at(e).v; }
    std::pair<VertexId, VertexId> ends(EdgeId e) const { return {at(e).u, at(e).v}; }
    VertexId other_end(EdgeId e, VertexId v) const;

    bool adjacent(VertexId u, VertexId v) const;
    int multiplicity(VertexId u, VertexId v) const;
    /// Smallest-id live edge between u and v, if any.
    std::optional<EdgeId> find_edge(VertexId u, VertexId v) const;

    /// Degree counts multiplicity.
    int degree(VertexId v) const { return static_cast<int>(incident(v).size()); }
    const std::vector<Incidence>& incident(VertexId v) const;

    int vertex_slots() const { return static_cast<int>(vertex_alive_.size()); }
    int edge_slots() const { return static_cast<int>(edges_.size()); }
    int num_vertices() const { return live_vertices_; }
    int num_edges() const { return live_edges_; }
    int max_degree() const;

    std::vector<VertexId> vertices() const;
    std::vector<EdgeId> edges() const;

    /// Masked copy containing exactly `keep`; ids are preserved.
    Graph induced(const std::vector<VertexId>& keep) const;

private:
    struct EdgeRec {
        VertexId u = -1, v = -1;
        bool alive = false;
    };

    const EdgeRec& at(EdgeId e) const;
    void check_vertex(VertexId v) const;

    std::vector<EdgeRec> edges_;
    std::vector<std::vector<Incidence>> adj_;
    std::vector<bool> vertex_alive_;
    int live_vertices_ = 0;
    int live_edges_ = 0;
};

bool is_connected(const Graph& g);
std::vector<std::vector<VertexId>> connected_components(const Graph& g);

/// Edges whose removal increases the number of connected components.
/// Single DFS low-point pass; parallel edges are never bridges.
std::vector<EdgeId> bridges(const Graph& g);

/// Partition of the vertices into bridge-blocks: the connected components
/// left after deleting all bridges. Blocks plus bridges form a forest.
struct BridgeBlockForest {
    std::vector<int> block_of;  ///< vertex slot -> block id, -1 for dead slots
    std::vector<std::vector<VertexId>> block_vertices;
    std::vector<EdgeId> bridge_edges;
    int block_count = 0;
};

BridgeBlockForest bridge_block_forest(const Graph& g);

/// Result of contracting each bridge-block of a sub-structure of `g` into a
/// single fresh vertex. Vertices outside the forest's domain keep their ids.
struct BlockContraction {
    Graph graph;
    std::vector<VertexId> block_vertex;                    ///< block id -> contracted vertex id
    std::vector<std::pair<VertexId, VertexId>> edge_origin;  ///< new edge id -> original endpoints
    std::vector<EdgeId> original_edge;                     ///< new edge id -> original edge id
};

/// Contracts the blocks of `f` inside `g`. `f` may cover a subset of the
/// vertices (blocks of an induced piece); edges between a block-vertex and an
/// uncontracted vertex keep multiplicity up to 2, edges among block-vertices
/// are always simple. Throws internal_error if a multiplicity above two would
/// arise, which signals a non-4-planar input escaped validation.
BlockContraction contract_blocks(const Graph& g, const BridgeBlockForest& f);

}  // namespace twopage
