#pragma once

#include <optional>
#include <vector>

#include "twopage/book.hpp"
#include "twopage/graph.hpp"

namespace twopage {

/// One directed edge side: the walk leaves `from` along `edge`.
struct Dart {
    VertexId from;
    EdgeId edge;
    bool operator==(const Dart&) const = default;
};

using FaceWalk = std::vector<Dart>;

/// Rotation system (cyclic order of incident edges per vertex) plus a
/// designated outerface. Faces are traced with the rule: after arriving at v
/// along e, leave along the successor of e in rotation[v].
struct PlanarEmbedding {
    std::vector<std::vector<EdgeId>> rotation;  ///< indexed by vertex slot
    FaceWalk outer;

    int rotation_index(VertexId v, EdgeId e) const;
    EdgeId rotation_next(VertexId v, EdgeId e) const;
    EdgeId rotation_prev(VertexId v, EdgeId e) const;
    /// Reverses every rotation list (mirror image of the embedding).
    void mirror();
};

/// All face walks of the embedding. Each directed edge side is consumed
/// exactly once; for a connected graph V - E + F = 2.
std::vector<FaceWalk> faces(const Graph& g, const PlanarEmbedding& emb);

/// Canonical rotation of a face walk (smallest dart first) for comparisons.
FaceWalk canonical_face(const FaceWalk& w);

std::vector<VertexId> face_vertices(const FaceWalk& w);
bool face_contains_vertex(const FaceWalk& w, VertexId v);

/// Checks the Euler relation and that rotations are mutually consistent.
bool embedding_valid(const Graph& g, const PlanarEmbedding& emb);

/// Planarity test plus embedding extraction. Deterministic for a fixed input;
/// returns std::nullopt on non-planar graphs (never silent). The graph must
/// be connected; parallel edges are embedded as bigons next to their
/// partner copy.
std::optional<PlanarEmbedding> planar_embed(const Graph& g);

enum class ConnectivityClass { Disconnected, One, Two, ThreePlus };

/// Exact vertex connectivity, bucketed. O(n (n + m)).
ConnectivityClass connectivity_class(const Graph& g);

/// Re-embeds a biconnected planar graph so that the outerface cycle has no
/// chords, by repeatedly moving the far side of a chord into the face that
/// contains the chord. Throws input_error if g is not biconnected.
PlanarEmbedding chordless_outerface(const Graph& g, const PlanarEmbedding& emb);

/// One biconnected component, as an id-preserving masked copy of the parent.
struct BiconnectedBlock {
    Graph graph;
    std::vector<VertexId> vertices;
};

struct BiconnectedSplit {
    std::vector<BiconnectedBlock> blocks;
    std::vector<VertexId> cut_vertices;
};

/// Standard biconnected components of a connected graph. A bridge yields a
/// two-vertex block.
BiconnectedSplit biconnected_split(const Graph& g);

/// Merges per-block two-page embeddings into one embedding of the whole
/// graph: each block's spine interval is spliced immediately after its cut
/// vertex's position in the host order, with the block's copy of the cut
/// vertex identified with the host's.
BookEmbedding recompose_book_embeddings(const Graph& g, const BiconnectedSplit& split,
                                        const std::vector<BookEmbedding>& block_embeddings);

}  // namespace twopage
