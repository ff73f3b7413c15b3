#include "fewev/canonical.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace fewev {

namespace {

// Ordered partition of {0..n-1}; each cell is a bit mask. Cell order is part
// of the state: splits replace a cell in place, fragments ordered by their
// neighbor-count key, so the whole procedure is relabeling-equivariant.
using Partition = std::vector<std::uint64_t>;

struct Searcher {
    int n;
    std::vector<std::uint64_t> rows;
    std::vector<std::uint8_t> best;
    bool have_best = false;

    void refine(Partition& cells) const {
        bool changed = true;
        while (changed) {
            changed = false;
            for (std::size_t s = 0; s < cells.size(); ++s) {
                std::uint64_t splitter = cells[s];
                for (std::size_t c = 0; c < cells.size(); ++c) {
                    std::uint64_t cell = cells[c];
                    if (std::popcount(cell) <= 1) continue;
                    // group cell members by number of neighbors in splitter
                    int first_count = -1;
                    bool uniform = true;
                    for (std::uint64_t m = cell; m; m &= m - 1) {
                        int x = std::countr_zero(m);
                        int cnt = std::popcount(rows[x] & splitter);
                        if (first_count < 0) first_count = cnt;
                        else if (cnt != first_count) { uniform = false; break; }
                    }
                    if (uniform) continue;
                    std::vector<std::pair<int, std::uint64_t>> groups;
                    for (std::uint64_t m = cell; m; m &= m - 1) {
                        int x = std::countr_zero(m);
                        int cnt = std::popcount(rows[x] & splitter);
                        auto it = std::find_if(groups.begin(), groups.end(),
                                               [&](auto& g) { return g.first == cnt; });
                        if (it == groups.end()) groups.emplace_back(cnt, 1ull << x);
                        else it->second |= 1ull << x;
                    }
                    std::sort(groups.begin(), groups.end());
                    cells.erase(cells.begin() + c);
                    for (std::size_t k = 0; k < groups.size(); ++k)
                        cells.insert(cells.begin() + c + k, groups[k].second);
                    changed = true;
                }
            }
        }
    }

    std::vector<std::uint8_t> leaf_certificate(const Partition& cells) const {
        std::vector<int> label(n);
        for (std::size_t k = 0; k < cells.size(); ++k)
            label[std::countr_zero(cells[k])] = static_cast<int>(k);
        std::vector<std::uint8_t> cert;
        cert.reserve(1 + (static_cast<std::size_t>(n) * (n - 1) / 2 + 7) / 8);
        cert.push_back(static_cast<std::uint8_t>(n));
        int acc = 0, nbits = 0;
        std::vector<int> orig(n);
        for (int x = 0; x < n; ++x) orig[label[x]] = x;
        for (int a = 0; a < n; ++a)
            for (int b = a + 1; b < n; ++b) {
                int bit = (rows[orig[a]] >> orig[b]) & 1;
                acc = (acc << 1) | bit;
                if (++nbits == 8) {
                    cert.push_back(static_cast<std::uint8_t>(acc));
                    acc = 0;
                    nbits = 0;
                }
            }
        if (nbits) cert.push_back(static_cast<std::uint8_t>(acc << (8 - nbits)));
        return cert;
    }

    void search(Partition cells) {
        refine(cells);
        int target = -1, target_size = n + 1;
        for (std::size_t c = 0; c < cells.size(); ++c) {
            int sz = std::popcount(cells[c]);
            if (sz > 1 && sz < target_size) {
                target = static_cast<int>(c);
                target_size = sz;
            }
        }
        if (target < 0) {
            auto cert = leaf_certificate(cells);
            if (!have_best || cert < best) {
                best = std::move(cert);
                have_best = true;
            }
            return;
        }
        std::uint64_t cell = cells[target];
        for (std::uint64_t m = cell; m; m &= m - 1) {
            int x = std::countr_zero(m);
            Partition next = cells;
            next[target] = 1ull << x;
            next.insert(next.begin() + target + 1, cell & ~(1ull << x));
            search(std::move(next));
        }
    }
};

} // namespace

CanonicalCode canonical_form(const Graph& g) {
    int n = g.order();
    if (n > 64)
        throw std::invalid_argument("canonical_form: supported up to 64 vertices");
    if (n == 0) return CanonicalCode{{0}};
    Searcher s;
    s.n = n;
    s.rows.resize(n);
    for (int i = 0; i < n; ++i) s.rows[i] = g.row(i)[0];
    s.search(Partition{n == 64 ? ~0ull : (1ull << n) - 1});
    return CanonicalCode{std::move(s.best)};
}

bool isomorphic(const Graph& a, const Graph& b) {
    if (a.order() != b.order() || a.edge_count() != b.edge_count()) return false;
    return canonical_form(a) == canonical_form(b);
}

} // namespace fewev
