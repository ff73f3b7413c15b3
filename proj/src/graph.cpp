#include "fewev/graph.hpp"

#include <bit>
#include <queue>
#include <stdexcept>

namespace fewev {

namespace {

void check_vertex(int v, int n, const char* what) {
    if (v < 0 || v >= n)
        throw std::invalid_argument(std::string(what) + ": vertex out of range");
}

std::uint64_t low_mask(int bits) {
    return bits >= 64 ? ~0ull : ((1ull << bits) - 1);
}

} // namespace

void VertexSet::add(int v) {
    check_vertex(v, universe_, "VertexSet::add");
    words_[v >> 6] |= 1ull << (v & 63);
}

void VertexSet::remove(int v) {
    check_vertex(v, universe_, "VertexSet::remove");
    words_[v >> 6] &= ~(1ull << (v & 63));
}

int VertexSet::size() const {
    int n = 0;
    for (std::uint64_t w : words_) n += std::popcount(w);
    return n;
}

VertexSet VertexSet::complement() const {
    VertexSet s(universe_);
    for (std::size_t k = 0; k < words_.size(); ++k) s.words_[k] = ~words_[k];
    if (!s.words_.empty()) {
        int rem = universe_ & 63;
        if (rem) s.words_.back() &= low_mask(rem);
    }
    return s;
}

std::vector<int> VertexSet::members() const {
    std::vector<int> out;
    for (int v = 0; v < universe_; ++v)
        if (contains(v)) out.push_back(v);
    return out;
}

void Graph::add_edge(int i, int j) {
    check_vertex(i, v_, "add_edge");
    check_vertex(j, v_, "add_edge");
    if (i == j) throw std::invalid_argument("add_edge: loops not allowed");
    mutable_row(i)[j >> 6] |= 1ull << (j & 63);
    mutable_row(j)[i >> 6] |= 1ull << (i & 63);
}

void Graph::remove_edge(int i, int j) {
    check_vertex(i, v_, "remove_edge");
    check_vertex(j, v_, "remove_edge");
    mutable_row(i)[j >> 6] &= ~(1ull << (j & 63));
    mutable_row(j)[i >> 6] &= ~(1ull << (i & 63));
}

int Graph::degree(int i) const {
    int d = 0;
    const std::uint64_t* r = row(i);
    for (int k = 0; k < words_; ++k) d += std::popcount(r[k]);
    return d;
}

long Graph::edge_count() const {
    long total = 0;
    for (int i = 0; i < v_; ++i) total += degree(i);
    return total / 2;
}

VertexSet Graph::neighborhood(int i) const {
    check_vertex(i, v_, "neighborhood");
    VertexSet s(v_);
    for (int j = 0; j < v_; ++j)
        if (adjacent(i, j)) s.add(j);
    return s;
}

Graph complete_graph(int n) {
    if (n < 0) throw std::invalid_argument("complete_graph: n < 0");
    Graph g(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
    return g;
}

Graph complete_bipartite(int a, int b) {
    if (a < 1 || b < 1)
        throw std::invalid_argument("complete_bipartite: class sizes must be >= 1");
    Graph g(a + b);
    for (int i = 0; i < a; ++i)
        for (int j = 0; j < b; ++j) g.add_edge(i, a + j);
    return g;
}

Graph disjoint_union(const std::vector<Graph>& parts) {
    int total = 0;
    for (const Graph& p : parts) total += p.order();
    Graph g(total);
    int off = 0;
    for (const Graph& p : parts) {
        for (int i = 0; i < p.order(); ++i)
            for (int j = i + 1; j < p.order(); ++j)
                if (p.adjacent(i, j)) g.add_edge(off + i, off + j);
        off += p.order();
    }
    return g;
}

Graph complement(const Graph& g) {
    int n = g.order();
    Graph h(n);
    std::uint64_t tail = low_mask(n & 63 ? n & 63 : 64);
    for (int i = 0; i < n; ++i) {
        const std::uint64_t* src = g.row(i);
        std::uint64_t* dst = h.mutable_row(i);
        for (int k = 0; k < g.row_words(); ++k) dst[k] = ~src[k];
        if (n > 0) dst[g.row_words() - 1] &= tail;
        dst[i >> 6] &= ~(1ull << (i & 63));
    }
    return h;
}

Graph add_apex(const Graph& g, const VertexSet& attach) {
    if (attach.universe() != g.order())
        throw std::invalid_argument("add_apex: attach set universe mismatch");
    int n = g.order();
    Graph h(n + 1);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (g.adjacent(i, j)) h.add_edge(i, j);
    for (int i = 0; i < n; ++i)
        if (attach.contains(i)) h.add_edge(i, n);
    return h;
}

Graph induced_subgraph(const Graph& g, const VertexSet& s) {
    if (s.universe() != g.order())
        throw std::invalid_argument("induced_subgraph: set universe mismatch");
    std::vector<int> keep = s.members();
    Graph h(static_cast<int>(keep.size()));
    for (std::size_t i = 0; i < keep.size(); ++i)
        for (std::size_t j = i + 1; j < keep.size(); ++j)
            if (g.adjacent(keep[i], keep[j]))
                h.add_edge(static_cast<int>(i), static_cast<int>(j));
    return h;
}

Graph seidel_switch(const Graph& g, const VertexSet& u) {
    if (u.universe() != g.order())
        throw std::invalid_argument("seidel_switch: set universe mismatch");
    int n = g.order();
    Graph h = g;
    if (n == 0) return h;
    // adj'[i][j] = adj[i][j] xor (i,j on opposite sides); the xor mask keeps
    // the diagonal clear because bit i of the mask applied to row i is 0.
    std::uint64_t tail = low_mask(n & 63 ? n & 63 : 64);
    std::vector<std::uint64_t> inside(u.words(), u.words() + u.word_count());
    std::vector<std::uint64_t> outside(inside.size());
    for (std::size_t k = 0; k < inside.size(); ++k) outside[k] = ~inside[k];
    outside.back() &= tail;
    for (int i = 0; i < n; ++i) {
        const std::uint64_t* mask = u.contains(i) ? outside.data() : inside.data();
        std::uint64_t* r = h.mutable_row(i);
        for (int k = 0; k < h.row_words(); ++k) r[k] ^= mask[k];
    }
    return h;
}

Graph coclique_extension(const Graph& g, const std::vector<int>& sizes) {
    if (static_cast<int>(sizes.size()) != g.order())
        throw std::invalid_argument("coclique_extension: one size per vertex required");
    std::vector<int> offset(sizes.size() + 1, 0);
    for (std::size_t i = 0; i < sizes.size(); ++i) {
        if (sizes[i] < 1)
            throw std::invalid_argument("coclique_extension: sizes must be positive");
        offset[i + 1] = offset[i] + sizes[i];
    }
    Graph h(offset.back());
    for (int i = 0; i < g.order(); ++i)
        for (int j = i + 1; j < g.order(); ++j)
            if (g.adjacent(i, j))
                for (int a = offset[i]; a < offset[i + 1]; ++a)
                    for (int b = offset[j]; b < offset[j + 1]; ++b)
                        h.add_edge(a, b);
    return h;
}

Graph relabel(const Graph& g, const std::vector<int>& perm) {
    if (static_cast<int>(perm.size()) != g.order())
        throw std::invalid_argument("relabel: permutation size mismatch");
    Graph h(g.order());
    for (int i = 0; i < g.order(); ++i)
        for (int j = i + 1; j < g.order(); ++j)
            if (g.adjacent(i, j)) h.add_edge(perm[i], perm[j]);
    return h;
}

std::vector<std::pair<int, int>> valency_histogram(const Graph& g) {
    std::vector<int> count;
    for (int i = 0; i < g.order(); ++i) {
        int d = g.degree(i);
        if (d >= static_cast<int>(count.size())) count.resize(d + 1, 0);
        ++count[d];
    }
    std::vector<std::pair<int, int>> out;
    for (std::size_t d = 0; d < count.size(); ++d)
        if (count[d]) out.emplace_back(static_cast<int>(d), count[d]);
    return out;
}

std::vector<std::vector<int>> connected_components(const Graph& g) {
    int n = g.order();
    std::vector<int> comp(n, -1);
    std::vector<std::vector<int>> out;
    for (int s = 0; s < n; ++s) {
        if (comp[s] >= 0) continue;
        int id = static_cast<int>(out.size());
        out.emplace_back();
        std::queue<int> q;
        q.push(s);
        comp[s] = id;
        while (!q.empty()) {
            int x = q.front();
            q.pop();
            out[id].push_back(x);
            for (int y = 0; y < n; ++y)
                if (g.adjacent(x, y) && comp[y] < 0) {
                    comp[y] = id;
                    q.push(y);
                }
        }
    }
    return out;
}

GraphFlags classify(const Graph& g) {
    int n = g.order();
    GraphFlags f{true, true, true};
    if (n == 0) return f;

    std::vector<int> color(n, -1);
    int seen = 0;
    std::queue<int> q;
    q.push(0);
    color[0] = 0;
    while (!q.empty()) {
        int x = q.front();
        q.pop();
        ++seen;
        for (int y = 0; y < n; ++y) {
            if (!g.adjacent(x, y)) continue;
            if (color[y] < 0) {
                color[y] = color[x] ^ 1;
                q.push(y);
            } else if (color[y] == color[x]) {
                f.bipartite = false;
            }
        }
    }
    f.connected = (seen == n);
    if (!f.connected) {
        // finish the 2-coloring on the remaining components
        for (int s = 0; s < n; ++s) {
            if (color[s] >= 0) continue;
            color[s] = 0;
            q.push(s);
            while (!q.empty()) {
                int x = q.front();
                q.pop();
                for (int y = 0; y < n; ++y) {
                    if (!g.adjacent(x, y)) continue;
                    if (color[y] < 0) {
                        color[y] = color[x] ^ 1;
                        q.push(y);
                    } else if (color[y] == color[x]) {
                        f.bipartite = false;
                    }
                }
            }
        }
    }
    int d0 = g.degree(0);
    for (int i = 1; i < n && f.regular; ++i)
        if (g.degree(i) != d0) f.regular = false;
    return f;
}

} // namespace fewev
