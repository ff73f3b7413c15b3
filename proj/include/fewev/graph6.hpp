#ifndef FEWEV_GRAPH6_HPP
#define FEWEV_GRAPH6_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "fewev/graph.hpp"

namespace fewev {

struct Graph6Error : std::runtime_error {
    Graph6Error(std::size_t offset, const std::string& msg)
        : std::runtime_error("graph6: byte " + std::to_string(offset) + ": " + msg),
          byte_offset(offset) {}
    std::size_t byte_offset;
};

std::string graph6_encode(const Graph& g);
Graph graph6_decode(std::string_view line);

} // namespace fewev

#endif
