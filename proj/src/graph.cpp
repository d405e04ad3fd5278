#include "twopage/graph.hpp"

#include <algorithm>
#include <functional>

namespace twopage {

Graph Graph::build(int vertex_count, const std::vector<std::pair<VertexId, VertexId>>& edges) {
    if (vertex_count < 0) throw input_error("vertex count must be non-negative");
    Graph g;
    g.vertex_alive_.assign(vertex_count, true);
    g.adj_.assign(vertex_count, {});
    g.live_vertices_ = vertex_count;
    for (const auto& [u, v] : edges) g.add_edge(u, v);
    return g;
}

VertexId Graph::add_vertex() {
    vertex_alive_.push_back(true);
    adj_.emplace_back();
    ++live_vertices_;
    return static_cast<VertexId>(vertex_alive_.size()) - 1;
}

EdgeId Graph::add_edge(VertexId u, VertexId v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw input_error("self-loop rejected at vertex " + std::to_string(u));
    if (multiplicity(u, v) >= 2)
        throw input_error("multiplicity above two rejected between " + std::to_string(u) + " and " +
                          std::to_string(v));
    EdgeId e = static_cast<EdgeId>(edges_.size());
    edges_.push_back({u, v, true});
    adj_[u].push_back({e, v});
    adj_[v].push_back({e, u});
    ++live_edges_;
    return e;
}

void Graph::remove_edge(EdgeId e) {
    const EdgeRec& rec = at(e);
    auto strip = [&](VertexId x) {
        auto& inc = adj_[x];
        inc.erase(std::remove_if(inc.begin(), inc.end(),
                                 [&](const Incidence& i) { return i.edge == e; }),
                  inc.end());
    };
    strip(rec.u);
    strip(rec.v);
    edges_[e].alive = false;
    --live_edges_;
}

void Graph::remove_vertex(VertexId v) {
    check_vertex(v);
    std::vector<EdgeId> doomed;
    for (const Incidence& i : adj_[v]) doomed.push_back(i.edge);
    for (EdgeId e : doomed)
        if (has_edge(e)) remove_edge(e);
    vertex_alive_[v] = false;
    --live_vertices_;
}

VertexId Graph::other_end(EdgeId e, VertexId v) const {
    const EdgeRec& rec = at(e);
    if (rec.u == v) return rec.v;
    if (rec.v == v) return rec.u;
    throw internal_error("vertex is not an endpoint of edge");
}

bool Graph::adjacent(VertexId u, VertexId v) const {
    if (!has_vertex(u) || !has_vertex(v)) return false;
    const auto& a = degree(u) <= degree(v) ? adj_[u] : adj_[v];
    VertexId t = degree(u) <= degree(v) ? v : u;
    for (const Incidence& i : a)
        if (i.to == t) return true;
    return false;
}

int Graph::multiplicity(VertexId u, VertexId v) const {
    if (!has_vertex(u) || !has_vertex(v)) return 0;
    int m = 0;
    for (const Incidence& i : adj_[u])
        if (i.to == v) ++m;
    return m;
}

std::optional<EdgeId> Graph::find_edge(VertexId u, VertexId v) const {
    if (!has_vertex(u) || !has_vertex(v)) return std::nullopt;
    std::optional<EdgeId> best;
    for (const Incidence& i : adj_[u])
        if (i.to == v && (!best || i.edge < *best)) best = i.edge;
    return best;
}

const std::vector<Incidence>& Graph::incident(VertexId v) const {
    check_vertex(v);
    return adj_[v];
}

int Graph::max_degree() const {
    int d = 0;
    for (VertexId v = 0; v < vertex_slots(); ++v)
        if (vertex_alive_[v]) d = std::max(d, degree(v));
    return d;
}

std::vector<VertexId> Graph::vertices() const {
    std::vector<VertexId> out;
    out.reserve(live_vertices_);
    for (VertexId v = 0; v < vertex_slots(); ++v)
        if (vertex_alive_[v]) out.push_back(v);
    return out;
}

std::vector<EdgeId> Graph::edges() const {
    std::vector<EdgeId> out;
    out.reserve(live_edges_);
    for (EdgeId e = 0; e < edge_slots(); ++e)
        if (edges_[e].alive) out.push_back(e);
    return out;
}

Graph Graph::induced(const std::vector<VertexId>& keep) const {
    std::vector<bool> in(vertex_slots(), false);
    for (VertexId v : keep) {
        check_vertex(v);
        in[v] = true;
    }
    Graph g = *this;
    for (VertexId v = 0; v < vertex_slots(); ++v)
        if (vertex_alive_[v] && !in[v]) g.remove_vertex(v);
    return g;
}

const Graph::EdgeRec& Graph::at(EdgeId e) const {
    if (!has_edge(e)) throw input_error("unknown edge id " + std::to_string(e));
    return edges_[e];
}

void Graph::check_vertex(VertexId v) const {
    if (!has_vertex(v)) throw input_error("unknown vertex id " + std::to_string(v));
}

std::vector<std::vector<VertexId>> connected_components(const Graph& g) {
    std::vector<std::vector<VertexId>> comps;
    std::vector<bool> seen(g.vertex_slots(), false);
    for (VertexId s : g.vertices()) {
        if (seen[s]) continue;
        comps.emplace_back();
        std::vector<VertexId> stack{s};
        seen[s] = true;
        while (!stack.empty()) {
            VertexId v = stack.back();
            stack.pop_back();
            comps.back().push_back(v);
            for (const Incidence& i : g.incident(v)) {
                if (!seen[i.to]) {
                    seen[i.to] = true;
                    stack.push_back(i.to);
                }
            }
        }
        std::sort(comps.back().begin(), comps.back().end());
    }
    return comps;
}

bool is_connected(const Graph& g) {
    if (g.num_vertices() <= 1) return true;
    return connected_components(g).size() == 1;
}

namespace {

// Iterative low-point DFS. Tree edges to a child with low >= disc of the
// parent are bridges unless a parallel copy exists.
struct BridgeDfs {
    const Graph& g;
    std::vector<int> disc, low;
    std::vector<EdgeId> out;
    int timer = 0;

    explicit BridgeDfs(const Graph& graph)
        : g(graph), disc(graph.vertex_slots(), -1), low(graph.vertex_slots(), 0) {}

    void run(VertexId root) {
        struct Item {
            VertexId v;
            EdgeId via;
            size_t next = 0;
        };
        std::vector<Item> stack;
        stack.push_back({root, -1});
        disc[root] = low[root] = timer++;
        while (!stack.empty()) {
            Item& it = stack.back();
            const auto& inc = g.incident(it.v);
            if (it.next < inc.size()) {
                Incidence i = inc[it.next++];
                if (i.edge == it.via) continue;
                if (disc[i.to] == -1) {
                    disc[i.to] = low[i.to] = timer++;
                    stack.push_back({i.to, i.edge});
                } else {
                    low[it.v] = std::min(low[it.v], disc[i.to]);
                }
            } else {
                Item done = it;
                stack.pop_back();
                if (!stack.empty()) {
                    VertexId p = stack.back().v;
                    low[p] = std::min(low[p], low[done.v]);
                    if (low[done.v] > disc[p] && g.multiplicity(p, done.v) == 1)
                        out.push_back(done.via);
                }
            }
        }
    }
};

}  // namespace

std::vector<EdgeId> bridges(const Graph& g) {
    BridgeDfs dfs(g);
    for (VertexId v : g.vertices())
        if (dfs.disc[v] == -1) dfs.run(v);
    std::sort(dfs.out.begin(), dfs.out.end());
    return dfs.out;
}

BridgeBlockForest bridge_block_forest(const Graph& g) {
    BridgeBlockForest f;
    f.bridge_edges = bridges(g);
    std::vector<bool> is_bridge(g.edge_slots(), false);
    for (EdgeId e : f.bridge_edges) is_bridge[e] = true;

    f.block_of.assign(g.vertex_slots(), -1);
    for (VertexId s : g.vertices()) {
        if (f.block_of[s] != -1) continue;
        int id = f.block_count++;
        f.block_vertices.emplace_back();
        std::vector<VertexId> stack{s};
        f.block_of[s] = id;
        while (!stack.empty()) {
            VertexId v = stack.back();
            stack.pop_back();
            f.block_vertices[id].push_back(v);
            for (const Incidence& i : g.incident(v)) {
                if (is_bridge[i.edge] || f.block_of[i.to] != -1) continue;
                f.block_of[i.to] = id;
                stack.push_back(i.to);
            }
        }
        std::sort(f.block_vertices[id].begin(), f.block_vertices[id].end());
    }
    return f;
}

BlockContraction contract_blocks(const Graph& g, const BridgeBlockForest& f) {
    BlockContraction out;
    out.graph = g;
    auto block_of = [&](VertexId v) -> int {
        return v < static_cast<int>(f.block_of.size()) ? f.block_of[v] : -1;
    };

    // Edges to re-create once the block vertices exist.
    struct Pending {
        VertexId ou, ov;  // original endpoints
        EdgeId oe;
    };
    std::vector<Pending> pend;
    for (EdgeId e : g.edges()) {
        auto [u, v] = g.ends(e);
        int bu = block_of(u), bv = block_of(v);
        if (bu == -1 && bv == -1) continue;       // untouched
        if (bu != -1 && bu == bv) continue;       // internal to a block, vanishes
        pend.push_back({u, v, e});
    }

    for (int b = 0; b < f.block_count; ++b)
        for (VertexId v : f.block_vertices[b]) out.graph.remove_vertex(v);
    out.block_vertex.resize(f.block_count);
    for (int b = 0; b < f.block_count; ++b) out.block_vertex[b] = out.graph.add_vertex();

    auto target = [&](VertexId v) -> VertexId {
        int b = block_of(v);
        return b == -1 ? v : out.block_vertex[b];
    };
    for (const Pending& p : pend) {
        VertexId nu = target(p.ou), nv = target(p.ov);
        bool both_blocks = block_of(p.ou) != -1 && block_of(p.ov) != -1;
        if (both_blocks && out.graph.adjacent(nu, nv)) continue;  // block-block edges stay simple
        EdgeId ne;
        try {
            ne = out.graph.add_edge(nu, nv);
        } catch (const input_error&) {
            throw internal_error("block contraction produced multiplicity above two; "
                                 "input was not 4-planar");
        }
        if (static_cast<int>(out.edge_origin.size()) <= ne) {
            out.edge_origin.resize(ne + 1, {-1, -1});
            out.original_edge.resize(ne + 1, -1);
        }
        out.edge_origin[ne] = {p.ou, p.ov};
        out.original_edge[ne] = p.oe;
    }
    return out;
}

}  // namespace twopage
