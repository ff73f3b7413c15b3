#ifndef FEWEV_CANONICAL_HPP
#define FEWEV_CANONICAL_HPP

#include <compare>
#include <cstdint>
#include <vector>

#include "fewev/graph.hpp"

namespace fewev {

// Certificate of the isomorphism class; equal codes iff isomorphic.
struct CanonicalCode {
    std::vector<std::uint8_t> bytes;
    auto operator<=>(const CanonicalCode&) const = default;
};

// Individualization-refinement with backtracking over all branches,
// lexicographically minimal certificate. Supported for order <= 64.
CanonicalCode canonical_form(const Graph& g);

bool isomorphic(const Graph& a, const Graph& b);

} // namespace fewev

#endif
