#ifndef FEWEV_GRAPH_HPP
#define FEWEV_GRAPH_HPP

#include <cstdint>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

namespace fewev {

// Subset of {0..universe-1}, packed 64 vertices per word.
class VertexSet {
public:
    VertexSet() = default;
    explicit VertexSet(int universe)
        : universe_(universe), words_((universe + 63) / 64, 0) {}

    static VertexSet of(int universe, std::initializer_list<int> members) {
        VertexSet s(universe);
        for (int v : members) s.add(v);
        return s;
    }
    static VertexSet full(int universe) {
        VertexSet s(universe);
        for (int v = 0; v < universe; ++v) s.add(v);
        return s;
    }

    int universe() const { return universe_; }
    bool contains(int v) const {
        return (words_[v >> 6] >> (v & 63)) & 1u;
    }
    void add(int v);
    void remove(int v);
    int size() const;
    bool empty() const { return size() == 0; }

    VertexSet complement() const;
    std::vector<int> members() const;
    const std::uint64_t* words() const { return words_.data(); }
    int word_count() const { return static_cast<int>(words_.size()); }

    bool operator==(const VertexSet&) const = default;

private:
    int universe_ = 0;
    std::vector<std::uint64_t> words_;
};

// Simple undirected graph, adjacency kept as packed bit rows.
// Treated as a value: operations below never mutate their inputs.
class Graph {
public:
    Graph() = default;
    explicit Graph(int v)
        : v_(v), words_(v == 0 ? 1 : (v + 63) / 64),
          bits_(static_cast<std::size_t>(v) * words_, 0) {}

    int order() const { return v_; }
    int row_words() const { return words_; }

    bool adjacent(int i, int j) const {
        return (row(i)[j >> 6] >> (j & 63)) & 1u;
    }
    void add_edge(int i, int j);
    void remove_edge(int i, int j);
    int degree(int i) const;
    long edge_count() const;

    const std::uint64_t* row(int i) const {
        return bits_.data() + static_cast<std::size_t>(i) * words_;
    }
    VertexSet neighborhood(int i) const;

    bool operator==(const Graph&) const = default;

private:
    std::uint64_t* mutable_row(int i) {
        return bits_.data() + static_cast<std::size_t>(i) * words_;
    }

    int v_ = 0;
    int words_ = 1;
    std::vector<std::uint64_t> bits_;

    friend Graph complement(const Graph&);
    friend Graph seidel_switch(const Graph&, const VertexSet&);
};

struct GraphFlags {
    bool connected;
    bool bipartite;
    bool regular;
};

Graph complete_graph(int n);
Graph complete_bipartite(int a, int b);
Graph disjoint_union(const std::vector<Graph>& parts);
Graph complement(const Graph& g);
Graph add_apex(const Graph& g, const VertexSet& attach);
Graph induced_subgraph(const Graph& g, const VertexSet& s);
Graph seidel_switch(const Graph& g, const VertexSet& u);
Graph coclique_extension(const Graph& g, const std::vector<int>& sizes);
Graph relabel(const Graph& g, const std::vector<int>& perm);

// (valency, count) pairs, ascending by valency.
std::vector<std::pair<int, int>> valency_histogram(const Graph& g);
GraphFlags classify(const Graph& g);
std::vector<std::vector<int>> connected_components(const Graph& g);

} // namespace fewev

#endif
