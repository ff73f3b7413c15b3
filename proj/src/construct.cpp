#include "fewev/construct.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>

namespace fewev::construct {

long BipartiteFamily::union_order() const {
    long n = 0;
    for (auto& [a, b] : pairs) n += a + b;
    return n;
}

BipartiteFamily BipartiteFamily::make(std::vector<std::pair<long, long>> pairs) {
    if (pairs.size() < 2)
        throw std::invalid_argument("BipartiteFamily: need f > 1 components");
    BipartiteFamily fam;
    fam.e = pairs[0].first * pairs[0].second;
    for (auto& [a, b] : pairs) {
        if (a < 1 || b < 1)
            throw std::invalid_argument("BipartiteFamily: class sizes must be positive");
        if (a * b != fam.e)
            throw std::invalid_argument("BipartiteFamily: components must share the edge count");
    }
    for (std::size_t i = 0; i < pairs.size(); ++i)
        for (std::size_t j = i + 1; j < pairs.size(); ++j) {
            auto si = std::minmax(pairs[i].first, pairs[i].second);
            auto sj = std::minmax(pairs[j].first, pairs[j].second);
            if (si == sj)
                throw std::invalid_argument("BipartiteFamily: components must be non-isomorphic");
        }
    fam.f = static_cast<int>(pairs.size());
    fam.pairs = std::move(pairs);
    fam.g = fam.union_order() - 2 * fam.f;
    return fam;
}

BipartiteFamily BipartiteFamily::standard(int t) {
    if (t < 3) throw std::invalid_argument("standard family: t >= 3 required");
    std::vector<std::pair<long, long>> pairs;
    for (int i = 0; i <= (t - 1) / 2; ++i)
        pairs.emplace_back(1L << i, 1L << (t - 1 - i));
    return make(std::move(pairs));
}

Graph union_graph(const BipartiteFamily& fam) {
    std::vector<Graph> parts;
    parts.reserve(fam.pairs.size());
    for (auto& [a, b] : fam.pairs)
        parts.push_back(complete_bipartite(static_cast<int>(a), static_cast<int>(b)));
    return disjoint_union(parts);
}

namespace {

std::vector<Side> resolve_sides(const BipartiteFamily& fam, const std::vector<Side>& sides) {
    if (sides.empty()) return std::vector<Side>(fam.pairs.size(), Side::b_class);
    if (sides.size() != fam.pairs.size())
        throw std::invalid_argument("theorem1_graph: one side per component required");
    return sides;
}

} // namespace

Graph theorem1_graph(const BipartiteFamily& fam, const std::vector<Side>& sides) {
    auto pick = resolve_sides(fam, sides);
    Graph u = union_graph(fam);
    VertexSet attach(u.order());
    long off = 0;
    for (std::size_t c = 0; c < fam.pairs.size(); ++c) {
        auto [a, b] = fam.pairs[c];
        long lo = pick[c] == Side::a_class ? off : off + a;
        long hi = pick[c] == Side::a_class ? off + a : off + a + b;
        for (long x = lo; x < hi; ++x) attach.add(static_cast<int>(x));
        off += a + b;
    }
    return add_apex(u, attach);
}

Graph mohar_graph(const BipartiteFamily& fam, const std::vector<VertexSet>& attach) {
    if (attach.size() != fam.pairs.size())
        throw std::invalid_argument("mohar_graph: one attach set per component required");
    Graph u = union_graph(fam);
    VertexSet full(u.order());
    long off = 0;
    for (std::size_t c = 0; c < fam.pairs.size(); ++c) {
        long size = fam.pairs[c].first + fam.pairs[c].second;
        if (attach[c].universe() != size)
            throw std::invalid_argument("mohar_graph: attach set universe mismatch");
        if (attach[c].empty())
            throw std::invalid_argument("mohar_graph: attach sets must be nonempty");
        for (int x : attach[c].members()) full.add(static_cast<int>(off + x));
        off += size;
    }
    return add_apex(u, full);
}

std::pair<double, double> theorem3_rhos(const BipartiteFamily& fam) {
    double v = static_cast<double>(fam.union_order());
    double disc = v * v - 4.0 * fam.e * (2.0 * fam.f - 1.0);
    if (disc < 0)
        throw std::invalid_argument("theorem3_rhos: negative discriminant");
    double root = std::sqrt(disc);
    return {-1.0 + v / 2.0 + root / 2.0, -1.0 + v / 2.0 - root / 2.0};
}

Graph theorem3_graph(const BipartiteFamily& fam) {
    auto [rho1, rho2] = theorem3_rhos(fam);
    double se = std::sqrt(static_cast<double>(fam.e));
    const double others[3] = {se - 1.0, -1.0, -se - 1.0};
    for (double rho : {rho1, rho2})
        for (double o : others)
            if (std::abs(rho - o) < 1e-9)
                throw std::runtime_error("theorem3_graph: rho collides with a fixed eigenvalue");
    if (std::abs(rho1 - rho2) < 1e-9)
        throw std::runtime_error("theorem3_graph: rho_1 = rho_2");
    return complement(union_graph(fam));
}

Graph spider(int f) {
    if (f < 1) throw std::invalid_argument("spider: f >= 1 required");
    std::vector<Graph> legs(f, complete_graph(2));
    Graph u = disjoint_union(legs);
    VertexSet attach(u.order());
    for (int i = 0; i < f; ++i) attach.add(2 * i);
    return add_apex(u, attach);
}

int symplectic_form(int r, unsigned u, unsigned v) {
    unsigned low = (1u << r) - 1;
    unsigned cross = ((u & low) & (v >> r)) ^ ((u >> r) & (v & low));
    return std::popcount(cross) & 1;
}

Graph symplectic_rep(int r) {
    if (r < 1) throw std::invalid_argument("symplectic_rep: r >= 1 required");
    if (r > 4) throw std::invalid_argument("symplectic_rep: r <= 4 supported");
    int n = 1 << (2 * r);
    Graph g(n);
    for (int u = 1; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (symplectic_form(r, u, v)) g.add_edge(u, v);
    return g;
}

Graph symplectic_graph(int r) {
    if (r < 2) throw std::invalid_argument("symplectic_graph: r >= 2 required");
    if (r > 4) throw std::invalid_argument("symplectic_graph: r <= 4 supported");
    Graph rep = symplectic_rep(r);
    VertexSet nonzero = VertexSet::of(rep.order(), {0}).complement();
    return induced_subgraph(rep, nonzero);
}

Graph paley_graph(long q) {
    if (q < 5 || q % 4 != 1)
        throw std::invalid_argument("paley_graph: q must be a prime = 1 (mod 4)");
    for (long d = 2; d * d <= q; ++d)
        if (q % d == 0)
            throw std::invalid_argument("paley_graph: q must be prime");
    std::vector<char> residue(q, 0);
    for (long x = 1; x < q; ++x) residue[x * x % q] = 1;
    Graph g(static_cast<int>(q));
    for (long i = 0; i < q; ++i)
        for (long j = i + 1; j < q; ++j)
            if (residue[(j - i) % q]) g.add_edge(static_cast<int>(i), static_cast<int>(j));
    return g;
}

namespace {

std::string surd(long square) {
    long root = std::lround(std::sqrt(static_cast<double>(square)));
    if (root * root == square) return std::to_string(root);
    return "sqrt(" + std::to_string(square) + ")";
}

std::string with_mult(const std::string& val, long m) {
    return val + "^(" + std::to_string(m) + ")";
}

} // namespace

std::vector<std::string> theorem1_exact_spectrum(const BipartiteFamily& fam,
                                                 const std::vector<Side>& sides) {
    Graph g = theorem1_graph(fam, sides);
    long theta_sq = g.edge_count() - (fam.f - 1) * fam.e;
    std::vector<std::string> out;
    out.push_back(with_mult(surd(theta_sq), 1));
    if (fam.f > 1) out.push_back(with_mult(surd(fam.e), fam.f - 1));
    out.push_back(with_mult("0", fam.g + 1));
    if (fam.f > 1) out.push_back(with_mult("-" + surd(fam.e), fam.f - 1));
    out.push_back(with_mult("-" + surd(theta_sq), 1));
    return out;
}

std::vector<std::string> theorem3_exact_spectrum(const BipartiteFamily& fam) {
    long v = fam.union_order();
    long disc = v * v - 4 * fam.e * (2 * fam.f - 1);
    std::string rad = surd(disc);
    std::vector<std::string> out;
    out.push_back(with_mult("(" + std::to_string(v - 2) + "+" + rad + ")/2", 1));
    out.push_back(with_mult("-1+" + surd(fam.e), fam.f - 1));
    out.push_back(with_mult("(" + std::to_string(v - 2) + "-" + rad + ")/2", 1));
    out.push_back(with_mult("-1", v - 2 * fam.f));
    out.push_back(with_mult("-1-" + surd(fam.e), fam.f - 1));
    return out;
}

std::vector<std::string> spider_exact_spectrum(int f) {
    if (f < 1) throw std::invalid_argument("spider: f >= 1 required");
    std::vector<std::string> out;
    out.push_back(with_mult(surd(f + 1), 1));
    if (f > 1) out.push_back(with_mult("1", f - 1));
    out.push_back(with_mult("0", 1));
    if (f > 1) out.push_back(with_mult("-1", f - 1));
    out.push_back(with_mult("-" + surd(f + 1), 1));
    return out;
}

} // namespace fewev::construct
