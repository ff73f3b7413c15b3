#ifndef FEWEV_EMBED_HPP
#define FEWEV_EMBED_HPP

#include <optional>
#include <utility>
#include <vector>

#include "fewev/graph.hpp"
#include "fewev/spectra.hpp"

namespace fewev::embed {

// Injective map from pattern vertices to host vertices preserving adjacency
// and non-adjacency (induced).
struct Embedding {
    std::vector<int> map;
};

// Exhaustive backtracking search, pattern vertices in descending-degree
// order, host candidates in ascending index; returns the first embedding in
// that order, or nothing.
std::optional<Embedding> find_induced_embedding(const Graph& pattern, const Graph& host);

// Post-hoc validation, independent of the search bookkeeping.
bool is_induced_embedding(const Graph& pattern, const Graph& host,
                          const std::vector<int>& map);

struct BuildReport {
    Graph result;
    int r = 0;
    VertexSet image;                 // image inside the 2^{2r}-vertex host
    std::vector<int> image_map;      // pattern vertex -> host vertex
    // per-vertex valency of the result predicted from switching arithmetic
    std::vector<std::pair<int, int>> predicted_valencies;  // (valency, count)
    spectra::Spectrum spectrum;
};

// Embed delta into the Sp(2r) component of the symplectic graph on
// GF(2)^{2r}, r = max(2, floor(n/2)+1), and switch with respect to the
// image. The switching class is a regular two-graph, so the result is
// connected with exactly four distinct eigenvalues.
BuildReport theorem8_build(const Graph& delta);

} // namespace fewev::embed

#endif
