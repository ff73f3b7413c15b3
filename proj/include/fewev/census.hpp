#ifndef FEWEV_CENSUS_HPP
#define FEWEV_CENSUS_HPP

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "fewev/graph.hpp"

namespace fewev::census {

struct CensusKey {
    long rho_key = 0;  // spectral radius * 10000, rounded
    std::vector<std::pair<int, int>> valencies;  // ascending (valency, count)
    auto operator<=>(const CensusKey&) const = default;
};

struct CensusCell {
    CensusKey key;
    long count = 0;
    double rho_min = 0, rho_max = 0;  // unrounded extremes, collision guard
    bool rounding_collision() const { return rho_max - rho_min > 1e-6; }
};

struct IsoClass {
    long count = 0;
    std::string representative;  // graph6 of the first member seen
};

struct IsoClasses {
    std::vector<IsoClass> classes;
    int count() const { return static_cast<int>(classes.size()); }
};

// All 2^{v-1} labeled graphs of the switching class, produced by switching
// with respect to the subsets of {1..v-1} (vertex 0 stays out, picking one
// representative of each {U, complement} pair). Deterministic order: subset
// masks in Gray-code sequence, so consecutive graphs differ by one vertex.
// The visitor receives the member and its subset mask. Supported for v <= 24.
void enumerate_switching_class(
    const Graph& g,
    const std::function<void(const Graph&, std::uint64_t)>& visitor);

// Switching-class census keyed by (4-decimal spectral radius, valency
// multiset). Subset ranges are processed in parallel and merged by sorted
// key; output is independent of the thread count.
std::vector<CensusCell> census_table(const Graph& g, int threads = 1,
                                     double tol = 1e-7);

// Canonical-form classification of one census cell (on demand; this is the
// expensive part). Representatives follow enumeration order.
IsoClasses iso_classify_cell(const Graph& g, const CensusKey& key,
                             double tol = 1e-7);

std::string format_rho(long rho_key);
std::string format_valencies(const std::vector<std::pair<int, int>>& v);
CensusKey parse_cell_key(const std::string& text);  // "8.0000:0^(1),8^(15)"

struct TableDiff {
    std::vector<std::string> lines;
    bool clean() const { return lines.empty(); }
};

// Row-by-row comparison against a reference table (same TSV layout).
TableDiff diff_against_reference(const std::vector<CensusCell>& computed,
                                 const std::string& reference_tsv);

std::string to_tsv(const std::vector<CensusCell>& table);

} // namespace fewev::census

#endif
