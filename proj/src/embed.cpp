#include "fewev/embed.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "fewev/construct.hpp"

namespace fewev::embed {

namespace {

struct SearchState {
    const Graph& pattern;
    const Graph& host;
    std::vector<int> order;   // pattern vertices, descending degree
    std::vector<int> assign;  // order position -> host vertex
    std::vector<char> used;

    bool extend(std::size_t pos) {
        if (pos == order.size()) return true;
        int x = order[pos];
        int dx = pattern.degree(x);
        for (int w = 0; w < host.order(); ++w) {
            if (used[w] || host.degree(w) < dx) continue;
            bool ok = true;
            for (std::size_t j = 0; j < pos && ok; ++j)
                if (host.adjacent(w, assign[j]) != pattern.adjacent(x, order[j]))
                    ok = false;
            if (!ok) continue;
            used[w] = 1;
            assign[pos] = w;
            if (extend(pos + 1)) return true;
            used[w] = 0;
        }
        return false;
    }
};

} // namespace

std::optional<Embedding> find_induced_embedding(const Graph& pattern, const Graph& host) {
    if (pattern.order() > host.order()) return std::nullopt;
    SearchState st{pattern, host, {}, {}, {}};
    st.order.resize(pattern.order());
    std::iota(st.order.begin(), st.order.end(), 0);
    std::stable_sort(st.order.begin(), st.order.end(), [&](int a, int b) {
        return pattern.degree(a) > pattern.degree(b);
    });
    st.assign.resize(pattern.order());
    st.used.assign(host.order(), 0);
    if (!st.extend(0)) return std::nullopt;
    Embedding emb;
    emb.map.resize(pattern.order());
    for (std::size_t pos = 0; pos < st.order.size(); ++pos)
        emb.map[st.order[pos]] = st.assign[pos];
    return emb;
}

bool is_induced_embedding(const Graph& pattern, const Graph& host,
                          const std::vector<int>& map) {
    if (map.size() != static_cast<std::size_t>(pattern.order())) return false;
    std::vector<char> seen(host.order(), 0);
    for (int w : map) {
        if (w < 0 || w >= host.order() || seen[w]) return false;
        seen[w] = 1;
    }
    for (int x = 0; x < pattern.order(); ++x)
        for (int y = x + 1; y < pattern.order(); ++y)
            if (pattern.adjacent(x, y) != host.adjacent(map[x], map[y])) return false;
    return true;
}

BuildReport theorem8_build(const Graph& delta) {
    int n = delta.order();
    if (n < 1) throw std::invalid_argument("theorem8_build: delta must be nonempty");
    int r = std::max(2, n / 2 + 1);
    if (r > 4) throw std::invalid_argument("theorem8_build: resulting r exceeds supported size");

    Graph sp = construct::symplectic_graph(r);
    auto emb = find_induced_embedding(delta, sp);
    if (!emb)
        throw std::runtime_error("theorem8_build: no induced embedding found");

    Graph rep = construct::symplectic_rep(r);
    BuildReport report;
    report.r = r;
    report.image = VertexSet(rep.order());
    report.image_map.resize(n);
    for (int x = 0; x < n; ++x) {
        int host_vertex = emb->map[x] + 1;  // Sp vertex k is rep vertex k+1
        report.image_map[x] = host_vertex;
        report.image.add(host_vertex);
    }
    report.result = seidel_switch(rep, report.image);

    // valencies after switching, from the host side: an image vertex with
    // delta-valency d ends at 2^{2r-1} + 2d - n, a non-image vertex with a
    // neighbors in the image at 2^{2r-1} + n - 2a, the zero vector at n.
    long k_host = 1L << (2 * r - 1);
    std::vector<int> hist(rep.order(), 0);
    std::vector<int> predicted(rep.order(), 0);
    for (int x = 0; x < n; ++x)
        predicted[report.image_map[x]] = static_cast<int>(k_host + 2 * delta.degree(x) - n);
    predicted[0] = n;
    for (int w = 1; w < rep.order(); ++w) {
        if (report.image.contains(w)) continue;
        int a = 0;
        for (int x = 0; x < n; ++x)
            if (rep.adjacent(w, report.image_map[x])) ++a;
        predicted[w] = static_cast<int>(k_host + n - 2 * a);
    }
    for (int w = 0; w < rep.order(); ++w) ++hist[predicted[w]];
    for (int d = 0; d < rep.order(); ++d)
        if (hist[d]) report.predicted_valencies.emplace_back(d, hist[d]);

    report.spectrum = spectra::graph_spectrum(report.result, spectra::MatrixKind::adjacency);
    return report;
}

} // namespace fewev::embed
