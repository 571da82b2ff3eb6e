#pragma once

// Immutable simple graph on dense 0-based vertices with bitset adjacency rows.
// All structure queries used by the toolkit (completeness between sets,
// induced subgraphs, components, cliques) live here.

#include <algorithm>
#include <stdexcept>
#include <utility>
#include <vector>

#include "chibound/bitset.hpp"

namespace chibound {

inline int ceil_div(int a, int b) { return (a + b - 1) / b; }

class Graph {
public:
    Graph() : n_(0) {}

    explicit Graph(int n) : n_(n), adj_(n, VertexSet(n)) {
        if (n < 0) throw std::invalid_argument("Graph: negative vertex count");
    }

    Graph(int n, const std::vector<std::pair<int, int>>& edges) : Graph(n) {
        for (auto [u, v] : edges) add_edge_internal(u, v);
    }

    int n() const { return n_; }

    int m() const {
        int total = 0;
        for (const auto& row : adj_) total += row.count();
        return total / 2;
    }

    bool has_edge(int u, int v) const {
        check_vertex(u);
        check_vertex(v);
        return u != v && adj_[u].test(v);
    }

    const VertexSet& neighbors(int v) const {
        check_vertex(v);
        return adj_[v];
    }

    int degree(int v) const { return neighbors(v).count(); }

    VertexSet vertices() const { return VertexSet::full(n_); }

    VertexSet neighbors_in(int v, const VertexSet& s) const {
        return neighbors(v) & s;
    }

    // N(S): union of neighborhoods outside S itself.
    VertexSet neighbors_of_set(const VertexSet& s) const {
        VertexSet out(n_);
        for (int v = s.first(); v != -1; v = s.next(v)) out |= adj_[v];
        out -= s;
        return out;
    }

    VertexSet closed_neighborhood(int v) const {
        VertexSet s = neighbors(v);
        s.set(v);
        return s;
    }

    bool is_clique(const VertexSet& s) const {
        for (int v = s.first(); v != -1; v = s.next(v)) {
            VertexSet rest = s;
            rest.reset(v);
            if (!rest.is_subset_of(adj_[v])) return false;
        }
        return true;
    }

    bool is_stable_set(const VertexSet& s) const {
        for (int v = s.first(); v != -1; v = s.next(v))
            if (adj_[v].intersects(s)) return false;
        return true;
    }

    bool is_complete_between(const VertexSet& a, const VertexSet& b) const {
        check_disjoint(a, b);
        for (int v = a.first(); v != -1; v = a.next(v))
            if (!b.is_subset_of(adj_[v])) return false;
        return true;
    }

    bool is_anticomplete_between(const VertexSet& a, const VertexSet& b) const {
        check_disjoint(a, b);
        for (int v = a.first(); v != -1; v = a.next(v))
            if (adj_[v].intersects(b)) return false;
        return true;
    }

    bool mixes_on(int v, const VertexSet& s) const {
        check_vertex(v);
        if (s.test(v)) throw std::invalid_argument("mixes_on: v belongs to s");
        VertexSet in = neighbors_in(v, s);
        return in.any() && in != s;
    }

    bool is_universal(int v) const { return degree(v) == n_ - 1; }

    bool is_simplicial(int v) const { return is_clique(neighbors(v)); }

    Graph complement() const {
        Graph g(n_);
        for (int v = 0; v < n_; ++v) {
            g.adj_[v] = ~adj_[v];
            g.adj_[v].reset(v);
        }
        return g;
    }

    // Connected components of G[within]; each returned set lives in the
    // universe [0, n).
    std::vector<VertexSet> components(const VertexSet& within) const {
        std::vector<VertexSet> out;
        VertexSet todo = within;
        while (todo.any()) {
            VertexSet comp(n_);
            VertexSet frontier = VertexSet::single(n_, todo.first());
            while (frontier.any()) {
                comp |= frontier;
                VertexSet nxt(n_);
                for (int v = frontier.first(); v != -1; v = frontier.next(v))
                    nxt |= adj_[v];
                nxt &= todo;
                nxt -= comp;
                frontier = nxt;
            }
            out.push_back(comp);
            todo -= comp;
        }
        return out;
    }

    std::vector<VertexSet> components() const { return components(vertices()); }

    bool is_connected_within(const VertexSet& s) const {
        if (s.none()) return true;
        return components(s).size() == 1;
    }

    bool is_connected() const { return n_ <= 1 || is_connected_within(vertices()); }

    std::vector<std::pair<int, int>> edge_list() const {
        std::vector<std::pair<int, int>> out;
        for (int u = 0; u < n_; ++u)
            for (int v = adj_[u].next(u); v != -1; v = adj_[u].next(v))
                out.emplace_back(u, v);
        return out;
    }

    // Mutation is only available through this builder-style helper so every
    // published Graph stays immutable.
    static Graph from_adjacency(std::vector<VertexSet> adj) {
        Graph g(int(adj.size()));
        g.adj_ = std::move(adj);
        for (int v = 0; v < g.n_; ++v) {
            if (g.adj_[v].universe() != g.n_)
                throw std::invalid_argument("from_adjacency: row universe mismatch");
            if (g.adj_[v].test(v))
                throw std::invalid_argument("from_adjacency: self-loop");
            for (int u = g.adj_[v].first(); u != -1; u = g.adj_[v].next(u))
                if (!g.adj_[u].test(v))
                    throw std::invalid_argument("from_adjacency: asymmetric adjacency");
        }
        return g;
    }

    static Graph empty_graph(int n) { return Graph(n); }

    static Graph complete_graph(int n) {
        Graph g(n);
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v) g.add_edge_internal(u, v);
        return g;
    }

    static Graph path(int n) {
        Graph g(n);
        for (int v = 0; v + 1 < n; ++v) g.add_edge_internal(v, v + 1);
        return g;
    }

    static Graph cycle(int n) {
        if (n < 3) throw std::invalid_argument("cycle: need at least 3 vertices");
        Graph g = path(n);
        g.add_edge_internal(n - 1, 0);
        return g;
    }

private:
    void add_edge_internal(int u, int v) {
        check_vertex(u);
        check_vertex(v);
        if (u == v) throw std::invalid_argument("Graph: self-loop");
        adj_[u].set(v);
        adj_[v].set(u);
    }

    void check_vertex(int v) const {
        if (v < 0 || v >= n_) throw std::out_of_range("Graph: vertex out of range");
    }

    static void check_disjoint(const VertexSet& a, const VertexSet& b) {
        if (a.intersects(b))
            throw std::invalid_argument("sets must be disjoint");
    }

    int n_;
    std::vector<VertexSet> adj_;
};

// Result of taking an induced subgraph: the graph plus, for each new vertex
// index, the original vertex it came from.
struct InducedSubgraph {
    Graph graph;
    std::vector<int> to_parent;
};

inline InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& s) {
    std::vector<int> verts = s.to_vector();
    int k = int(verts.size());
    std::vector<int> back(g.n(), -1);
    for (int i = 0; i < k; ++i) back[verts[i]] = i;
    std::vector<VertexSet> adj(k, VertexSet(k));
    for (int i = 0; i < k; ++i) {
        VertexSet nb = g.neighbors(verts[i]) & s;
        for (int u = nb.first(); u != -1; u = nb.next(u)) adj[i].set(back[u]);
    }
    return {Graph::from_adjacency(std::move(adj)), std::move(verts)};
}

// Lift a vertex set of an induced subgraph back into the parent universe.
inline VertexSet lift_to_parent(const InducedSubgraph& sub, const VertexSet& s, int parent_n) {
    VertexSet out(parent_n);
    for (int v = s.first(); v != -1; v = s.next(v)) out.set(sub.to_parent[v]);
    return out;
}

} // namespace chibound
