#ifndef FEWEV_CONSTRUCT_HPP
#define FEWEV_CONSTRUCT_HPP

#include <string>
#include <utility>
#include <vector>

#include "fewev/graph.hpp"

namespace fewev::construct {

// Disjoint union of pairwise non-isomorphic complete bipartite graphs that
// all share the same edge count e.
struct BipartiteFamily {
    std::vector<std::pair<long, long>> pairs;  // class sizes (a_i, b_i)
    long e = 0;   // common edge count a_i * b_i
    int f = 0;    // number of components
    long g = 0;   // zero multiplicity of the union: sum(a_i+b_i) - 2f

    long union_order() const;

    // pairs (2^i, 2^{t-1-i}) for i = 0..floor((t-1)/2), e = 2^{t-1}
    static BipartiteFamily standard(int t);
    static BipartiteFamily make(std::vector<std::pair<long, long>> pairs);
};

enum class Side { a_class, b_class };

Graph union_graph(const BipartiteFamily& fam);

// Apex joined to all vertices of one color class of every component.
// Default side selection: the b class of each component.
Graph theorem1_graph(const BipartiteFamily& fam, const std::vector<Side>& sides = {});

// Apex joined to an arbitrary nonempty subset of each component
// (subsets given in component-local vertex numbering).
Graph mohar_graph(const BipartiteFamily& fam, const std::vector<VertexSet>& attach);

// Complement of the union. Fails loudly if the closed-form rho values
// collide with the other three eigenvalues.
Graph theorem3_graph(const BipartiteFamily& fam);

// rho_{1,2} = -1 + v/2 +- sqrt(v^2 - 4e(2f-1))/2 for the complement of the union
std::pair<double, double> theorem3_rhos(const BipartiteFamily& fam);

// f disjoint edges plus an apex adjacent to one endpoint of each.
Graph spider(int f);

// <u,v> = sum_i u_i v_{r+i} + u_{r+i} v_i over GF(2)
int symplectic_form(int r, unsigned u, unsigned v);

// Graph on all of GF(2)^{2r} (vertex index = vector), u ~ v iff <u,v> != 0.
// Vertex 0 is isolated; the rest is Sp(2r). Supported for r <= 4.
Graph symplectic_rep(int r);

// Sp(2r): the nonzero vectors only. Supported for 2 <= r <= 4.
Graph symplectic_graph(int r);

// Quadratic-residue graph on GF(q), prime q = 1 (mod 4).
Graph paley_graph(long q);

// Surd rendering of the expected adjacency spectra the builders guarantee.
std::vector<std::string> theorem1_exact_spectrum(const BipartiteFamily& fam,
                                                 const std::vector<Side>& sides = {});
std::vector<std::string> theorem3_exact_spectrum(const BipartiteFamily& fam);
std::vector<std::string> spider_exact_spectrum(int f);

} // namespace fewev::construct

#endif
