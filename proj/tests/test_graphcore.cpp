#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "fewev/canonical.hpp"
#include "fewev/construct.hpp"
#include "fewev/graph.hpp"
#include "fewev/graph6.hpp"
#include "fewev/spectra.hpp"

using namespace fewev;

namespace {

Graph random_graph(int n, std::mt19937& rng, double p = 0.5) {
    Graph g(n);
    std::bernoulli_distribution edge(p);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (edge(rng)) g.add_edge(i, j);
    return g;
}

std::vector<int> random_perm(int n, std::mt19937& rng) {
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 0);
    std::shuffle(p.begin(), p.end(), rng);
    return p;
}

// brute-force isomorphism over all n! bijections, independent of the
// canonical labeling code path
bool brute_isomorphic(const Graph& a, const Graph& b) {
    if (a.order() != b.order()) return false;
    std::vector<int> p(a.order());
    std::iota(p.begin(), p.end(), 0);
    do {
        bool ok = true;
        for (int i = 0; i < a.order() && ok; ++i)
            for (int j = i + 1; j < a.order() && ok; ++j)
                if (a.adjacent(i, j) != b.adjacent(p[i], p[j])) ok = false;
        if (ok) return true;
    } while (std::next_permutation(p.begin(), p.end()));
    return false;
}

std::vector<double> adjacency_eigenvalues(const Graph& g) {
    return spectra::graph_spectrum(g, spectra::MatrixKind::adjacency).expand();
}

} // namespace

TEST_CASE("complete bipartite basics") {
    Graph k11 = complete_bipartite(1, 1);
    CHECK(k11.order() == 2);
    CHECK(k11.adjacent(0, 1));

    auto c4 = spectra::graph_spectrum(complete_bipartite(2, 2), spectra::MatrixKind::adjacency);
    REQUIRE(c4.distinct() == 3);
    CHECK(c4.pairs[0].first == doctest::Approx(2.0));
    CHECK(c4.pairs[1].first == doctest::Approx(0.0));
    CHECK(c4.pairs[1].second == 2);
    CHECK(c4.pairs[2].first == doctest::Approx(-2.0));

    // star K_{1,4}: {sqrt(e), 0^g, -sqrt(e)} with e=4, f=1
    auto star = spectra::graph_spectrum(complete_bipartite(1, 4), spectra::MatrixKind::adjacency);
    REQUIRE(star.distinct() == 3);
    CHECK(star.pairs[0].first == doctest::Approx(2.0));
    CHECK(star.pairs[1].second == 3);

    CHECK_THROWS_AS(complete_bipartite(0, 3), std::invalid_argument);
}

TEST_CASE("disjoint union") {
    CHECK(disjoint_union({}).order() == 0);

    Graph k2 = complete_graph(2);
    auto two_k2 = spectra::graph_spectrum(disjoint_union({k2, k2}), spectra::MatrixKind::adjacency);
    REQUIRE(two_k2.distinct() == 2);
    CHECK(two_k2.pairs[0].first == doctest::Approx(1.0));
    CHECK(two_k2.pairs[0].second == 2);
    CHECK(two_k2.pairs[1].second == 2);

    Graph u = disjoint_union({complete_bipartite(1, 4), complete_bipartite(2, 2)});
    CHECK(u.order() == 9);
    auto s = spectra::graph_spectrum(u, spectra::MatrixKind::adjacency);
    REQUIRE(s.distinct() == 3);
    CHECK(s.pairs[0].first == doctest::Approx(2.0));
    CHECK(s.pairs[0].second == 2);
    CHECK(s.pairs[1].second == 5);
    CHECK(s.pairs[2].second == 2);
}

TEST_CASE("complement") {
    Graph empty3(3);
    CHECK(complement(empty3) == complete_graph(3));

    std::mt19937 rng(7);
    for (int trial = 0; trial < 20; ++trial) {
        Graph g = random_graph(1 + trial % 12, rng);
        CHECK(complement(complement(g)) == g);
        auto hist = valency_histogram(g);
        auto chist = valency_histogram(complement(g));
        std::vector<std::pair<int, int>> mirrored;
        for (auto it = hist.rbegin(); it != hist.rend(); ++it)
            mirrored.emplace_back(g.order() - 1 - it->first, it->second);
        CHECK(chist == mirrored);
    }

    // complement of Sp(4) is SRG(15,6,1,3): spectrum {6, 1^9, -3^5}
    auto s = spectra::graph_spectrum(complement(construct::symplectic_graph(2)),
                                     spectra::MatrixKind::adjacency);
    REQUIRE(s.distinct() == 3);
    CHECK(s.pairs[0].first == doctest::Approx(6.0));
    CHECK(s.pairs[1].first == doctest::Approx(1.0));
    CHECK(s.pairs[1].second == 9);
    CHECK(s.pairs[2].first == doctest::Approx(-3.0));
    CHECK(s.pairs[2].second == 5);
}

TEST_CASE("add_apex") {
    Graph k2 = complete_graph(2);
    CHECK(add_apex(k2, VertexSet::full(2)) == complete_graph(3));

    // spider with f=3 from 3K2 plus apex on one endpoint per edge
    Graph legs = disjoint_union({k2, k2, k2});
    Graph sp = add_apex(legs, VertexSet::of(6, {0, 2, 4}));
    CHECK(isomorphic(sp, construct::spider(3)));

    CHECK(sp.degree(6) == 3);
    CHECK_THROWS(add_apex(k2, VertexSet::full(3)));
}

TEST_CASE("induced subgraph") {
    std::mt19937 rng(11);
    Graph g = random_graph(9, rng);
    CHECK(induced_subgraph(g, VertexSet::full(9)) == g);
    CHECK(induced_subgraph(g, VertexSet(9)).order() == 0);

    // Sp(4) has lambda = 4 > 0, so triangles exist
    Graph sp4 = construct::symplectic_graph(2);
    bool found = false;
    for (int a = 0; a < sp4.order() && !found; ++a)
        for (int b = a + 1; b < sp4.order() && !found; ++b)
            for (int c = b + 1; c < sp4.order() && !found; ++c)
                if (sp4.adjacent(a, b) && sp4.adjacent(a, c) && sp4.adjacent(b, c)) {
                    VertexSet tri(sp4.order());
                    tri.add(a);
                    tri.add(b);
                    tri.add(c);
                    CHECK(induced_subgraph(sp4, tri) == complete_graph(3));
                    found = true;
                }
    CHECK(found);
}

TEST_CASE("seidel switching") {
    Graph k2 = complete_graph(2);
    CHECK(seidel_switch(k2, VertexSet(2)) == k2);
    CHECK(seidel_switch(k2, VertexSet::full(2)) == k2);
    CHECK(seidel_switch(k2, VertexSet::of(2, {0})) == Graph(2));

    std::mt19937 rng(13);
    for (int trial = 0; trial < 25; ++trial) {
        int n = 2 + trial % 14;
        Graph g = random_graph(n, rng);
        VertexSet u(n);
        for (int i = 0; i < n; ++i)
            if (rng() & 1) u.add(i);
        // involution
        CHECK(seidel_switch(seidel_switch(g, u), u) == g);
        // switching by the complement set gives the same graph
        CHECK(seidel_switch(g, u) == seidel_switch(g, u.complement()));
        // Seidel spectrum is invariant
        auto before = spectra::graph_spectrum(g, spectra::MatrixKind::seidel).expand();
        auto after =
            spectra::graph_spectrum(seidel_switch(g, u), spectra::MatrixKind::seidel).expand();
        REQUIRE(before.size() == after.size());
        for (std::size_t i = 0; i < before.size(); ++i)
            CHECK(std::abs(before[i] - after[i]) < 1e-9);
    }
}

TEST_CASE("coclique extension") {
    std::mt19937 rng(17);
    Graph g = random_graph(6, rng);
    CHECK(coclique_extension(g, {1, 1, 1, 1, 1, 1}) == g);
    CHECK(coclique_extension(complete_graph(2), {3, 4}) == complete_bipartite(3, 4));

    // blowing up spider(2) reproduces the 10-vertex five-eigenvalue graph
    Graph blown = coclique_extension(construct::spider(2), {4, 1, 2, 2, 1});
    Graph th1 = construct::theorem1_graph(construct::BipartiteFamily::standard(3));
    CHECK(isomorphic(blown, th1));

    // nonzero eigenvalue count is preserved
    for (int trial = 0; trial < 10; ++trial) {
        int n = 2 + trial % 5;
        Graph base = random_graph(n, rng);
        std::vector<int> sizes(n);
        for (int& s : sizes) s = 1 + rng() % 3;
        auto count_nonzero = [](const Graph& gr) {
            int c = 0;
            for (double ev : adjacency_eigenvalues(gr))
                if (std::abs(ev) > 1e-6) ++c;
            return c;
        };
        CHECK(count_nonzero(base) == count_nonzero(coclique_extension(base, sizes)));
    }
}

TEST_CASE("valency histogram") {
    CHECK(valency_histogram(complete_bipartite(2, 2)) ==
          std::vector<std::pair<int, int>>{{2, 4}});
    CHECK(valency_histogram(construct::symplectic_rep(2)) ==
          std::vector<std::pair<int, int>>{{0, 1}, {8, 15}});
    CHECK(valency_histogram(construct::theorem1_graph(construct::BipartiteFamily::standard(3))) ==
          std::vector<std::pair<int, int>>{{2, 6}, {3, 2}, {4, 1}, {6, 1}});

    std::mt19937 rng(19);
    Graph g = random_graph(12, rng);
    long total = 0, weighted = 0;
    for (auto& [d, c] : valency_histogram(g)) {
        total += c;
        weighted += static_cast<long>(d) * c;
    }
    CHECK(total == g.order());
    CHECK(weighted == 2 * g.edge_count());
}

TEST_CASE("classify") {
    auto f = classify(complete_bipartite(2, 2));
    CHECK(f.connected);
    CHECK(f.bipartite);
    CHECK(f.regular);

    auto f2 = classify(disjoint_union({complete_graph(2), complete_graph(2)}));
    CHECK(!f2.connected);
    CHECK(f2.bipartite);
    CHECK(f2.regular);

    for (int t = 3; t <= 5; ++t) {
        auto f3 = classify(construct::theorem3_graph(construct::BipartiteFamily::standard(t)));
        CHECK(f3.connected);
        CHECK(!f3.bipartite);
        CHECK(!f3.regular);
    }

    CHECK(classify(Graph(0)).connected);
    CHECK(classify(Graph(1)).connected);
    CHECK(!classify(Graph(2)).connected);
}

TEST_CASE("canonical form: basics") {
    Graph k22 = complete_bipartite(2, 2);
    CHECK(canonical_form(k22) == canonical_form(relabel(k22, {3, 1, 0, 2})));

    Graph c5(5), p5(5);
    for (int i = 0; i < 5; ++i) c5.add_edge(i, (i + 1) % 5);
    for (int i = 0; i < 4; ++i) p5.add_edge(i, i + 1);
    CHECK(canonical_form(c5) != canonical_form(p5));

    CHECK_THROWS_AS(canonical_form(Graph(65)), std::invalid_argument);
    CHECK(canonical_form(Graph(0)).bytes.size() == 1);
}

TEST_CASE("canonical form: relabeling invariance") {
    std::mt19937 rng(23);
    std::vector<Graph> samples = {
        construct::spider(4),
        construct::symplectic_rep(2),
        construct::theorem1_graph(construct::BipartiteFamily::standard(3)),
        random_graph(10, rng, 0.3),
        random_graph(10, rng, 0.7),
    };
    for (const Graph& g : samples) {
        auto code = canonical_form(g);
        for (int trial = 0; trial < 100; ++trial)
            CHECK(canonical_form(relabel(g, random_perm(g.order(), rng))) == code);
    }
}

TEST_CASE("canonical form agrees with brute-force isomorphism on 4 vertices") {
    std::vector<Graph> all;
    for (int mask = 0; mask < 64; ++mask) {
        Graph g(4);
        int bit = 0;
        for (int i = 0; i < 4; ++i)
            for (int j = i + 1; j < 4; ++j, ++bit)
                if (mask >> bit & 1) g.add_edge(i, j);
        all.push_back(g);
    }
    for (std::size_t a = 0; a < all.size(); ++a)
        for (std::size_t b = a + 1; b < all.size(); ++b)
            CHECK((canonical_form(all[a]) == canonical_form(all[b])) ==
                  brute_isomorphic(all[a], all[b]));
}

TEST_CASE("canonical form reproduces the known class counts on 5 and 6 vertices") {
    // numbers of graphs up to isomorphism: 34 on five vertices, 156 on six
    for (int n : {5, 6}) {
        std::set<CanonicalCode> codes;
        int bits = n * (n - 1) / 2;
        for (long mask = 0; mask < (1L << bits); ++mask) {
            Graph g(n);
            int b = 0;
            for (int i = 0; i < n; ++i)
                for (int j = i + 1; j < n; ++j, ++b)
                    if (mask >> b & 1) g.add_edge(i, j);
            codes.insert(canonical_form(g));
        }
        CHECK(codes.size() == (n == 5 ? 34u : 156u));
    }
}

TEST_CASE("graph6 codec") {
    CHECK(graph6_encode(complete_graph(4)) == "C~");
    CHECK(graph6_encode(Graph(1)) == "@");
    CHECK(graph6_encode(Graph(0)) == "?");
    CHECK(graph6_decode("C~") == complete_graph(4));

    std::mt19937 rng(29);
    for (int trial = 0; trial < 30; ++trial) {
        int n = rng() % 40;
        Graph g = random_graph(n, rng);
        CHECK(graph6_decode(graph6_encode(g)) == g);
    }
    // long form (n > 62)
    Graph big = random_graph(70, rng, 0.2);
    std::string enc = graph6_encode(big);
    CHECK(enc[0] == '~');
    CHECK(graph6_decode(enc) == big);
    Graph huge = random_graph(256, rng, 0.05);
    CHECK(graph6_decode(graph6_encode(huge)) == huge);

    CHECK(graph6_decode(">>graph6<<C~") == complete_graph(4));
}

TEST_CASE("graph6 malformed input carries the byte offset") {
    auto offset_of = [](const std::string& line) -> long {
        try {
            graph6_decode(line);
        } catch (const Graph6Error& e) {
            return static_cast<long>(e.byte_offset);
        }
        return -1;
    };
    CHECK(offset_of("") == 0);
    CHECK(offset_of(std::string("C") + static_cast<char>(25)) == 1);  // byte below 63
    CHECK(offset_of("C") == 1);    // truncated edge data
    CHECK(offset_of("C~~") == 2);  // trailing bytes
    CHECK(offset_of("@A") == 1);   // trailing bytes after 1-vertex graph
    // nonzero padding: K2 is "A_" (one edge bit, then zero padding)
    CHECK(offset_of("A~") == 1);
    CHECK(graph6_decode("A_") == complete_graph(2));
}
