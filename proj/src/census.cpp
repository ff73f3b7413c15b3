#include "fewev/census.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdio>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "fewev/canonical.hpp"
#include "fewev/graph6.hpp"
#include "fewev/spectra.hpp"

namespace fewev::census {

namespace {

std::uint64_t gray(std::uint64_t k) { return k ^ (k >> 1); }

// switching set for mask m: bit i of m selects vertex i+1
VertexSet mask_to_set(int v, std::uint64_t m) {
    VertexSet u(v);
    for (int i = 0; i + 1 < v; ++i)
        if ((m >> i) & 1) u.add(i + 1);
    return u;
}

// walk masks gray(first)..gray(last-1), flipping one vertex at a time
template <typename Visit>
void walk_range(const Graph& g, std::uint64_t first, std::uint64_t last, Visit visit) {
    int v = g.order();
    Graph cur = seidel_switch(g, mask_to_set(v, gray(first)));
    visit(cur, gray(first));
    for (std::uint64_t k = first + 1; k < last; ++k) {
        std::uint64_t prev = gray(k - 1), next = gray(k);
        int bit = std::countr_zero(prev ^ next);
        cur = seidel_switch(cur, VertexSet::of(v, {bit + 1}));
        visit(cur, next);
    }
}

struct CellAgg {
    long count = 0;
    double rho_min = 0, rho_max = 0;
};

CensusKey key_of(const Graph& g, double tol, double* rho_out) {
    spectra::Spectrum s = spectra::graph_spectrum(g, spectra::MatrixKind::adjacency, tol);
    double rho = s.pairs.empty() ? 0.0 : s.pairs.front().first;
    if (rho_out) *rho_out = rho;
    return CensusKey{std::lround(rho * 10000.0), valency_histogram(g)};
}

} // namespace

void enumerate_switching_class(
    const Graph& g, const std::function<void(const Graph&, std::uint64_t)>& visitor) {
    int v = g.order();
    if (v > 24)
        throw std::invalid_argument("enumerate_switching_class: supported up to 24 vertices");
    std::uint64_t total = v == 0 ? 1 : 1ull << (v - 1);
    walk_range(g, 0, total, visitor);
}

std::vector<CensusCell> census_table(const Graph& g, int threads, double tol) {
    int v = g.order();
    if (v > 24)
        throw std::invalid_argument("census_table: supported up to 24 vertices");
    std::uint64_t total = v == 0 ? 1 : 1ull << (v - 1);
    if (threads < 1) threads = 1;
    if (static_cast<std::uint64_t>(threads) > total) threads = static_cast<int>(total);

    std::vector<std::map<CensusKey, CellAgg>> partial(threads);
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) {
        std::uint64_t first = total * t / threads;
        std::uint64_t last = total * (t + 1) / threads;
        pool.emplace_back([&, t, first, last] {
            auto& local = partial[t];
            walk_range(g, first, last, [&](const Graph& member, std::uint64_t) {
                double rho;
                CensusKey key = key_of(member, tol, &rho);
                auto [it, fresh] = local.try_emplace(key, CellAgg{0, rho, rho});
                ++it->second.count;
                it->second.rho_min = std::min(it->second.rho_min, rho);
                it->second.rho_max = std::max(it->second.rho_max, rho);
            });
        });
    }
    for (auto& th : pool) th.join();

    std::map<CensusKey, CellAgg> merged;
    for (auto& local : partial)
        for (auto& [key, agg] : local) {
            auto [it, fresh] = merged.try_emplace(key, agg);
            if (!fresh) {
                it->second.count += agg.count;
                it->second.rho_min = std::min(it->second.rho_min, agg.rho_min);
                it->second.rho_max = std::max(it->second.rho_max, agg.rho_max);
            }
        }

    std::vector<CensusCell> out;
    out.reserve(merged.size());
    for (auto& [key, agg] : merged)
        out.push_back(CensusCell{key, agg.count, agg.rho_min, agg.rho_max});
    return out;
}

IsoClasses iso_classify_cell(const Graph& g, const CensusKey& key, double tol) {
    std::map<CanonicalCode, std::size_t> seen;
    IsoClasses out;
    enumerate_switching_class(g, [&](const Graph& member, std::uint64_t) {
        if (key_of(member, tol, nullptr) != key) return;
        CanonicalCode code = canonical_form(member);
        auto [it, fresh] = seen.try_emplace(code, out.classes.size());
        if (fresh)
            out.classes.push_back(IsoClass{1, graph6_encode(member)});
        else
            ++out.classes[it->second].count;
    });
    if (out.classes.empty())
        throw std::invalid_argument("iso_classify_cell: no member matches the cell key");
    return out;
}

std::string format_rho(long rho_key) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.4f", rho_key / 10000.0);
    return buf;
}

std::string format_valencies(const std::vector<std::pair<int, int>>& v) {
    std::string out;
    for (auto& [d, m] : v) {
        if (!out.empty()) out += ',';
        out += std::to_string(d) + "^(" + std::to_string(m) + ")";
    }
    return out;
}

namespace {

std::vector<std::pair<int, int>> parse_valencies(const std::string& text) {
    std::vector<std::pair<int, int>> out;
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t caret = text.find("^(", pos);
        std::size_t close = text.find(')', caret);
        if (caret == std::string::npos || close == std::string::npos)
            throw std::invalid_argument("bad valency multiset: " + text);
        int d = std::stoi(text.substr(pos, caret - pos));
        int m = std::stoi(text.substr(caret + 2, close - caret - 2));
        out.emplace_back(d, m);
        pos = close + 1;
        if (pos < text.size() && text[pos] == ',') ++pos;
    }
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace

CensusKey parse_cell_key(const std::string& text) {
    std::size_t colon = text.find(':');
    if (colon == std::string::npos)
        throw std::invalid_argument("cell key must be rho:valencies");
    double rho = std::stod(text.substr(0, colon));
    return CensusKey{std::lround(rho * 10000.0), parse_valencies(text.substr(colon + 1))};
}

std::string to_tsv(const std::vector<CensusCell>& table) {
    std::string out = "rho\tvalencies\tcount\n";
    for (auto& cell : table) {
        out += format_rho(cell.key.rho_key) + '\t' + format_valencies(cell.key.valencies) +
               '\t' + std::to_string(cell.count);
        if (cell.rounding_collision()) out += "\t# rounding collision";
        out += '\n';
    }
    return out;
}

TableDiff diff_against_reference(const std::vector<CensusCell>& computed,
                                 const std::string& reference_tsv) {
    std::map<CensusKey, long> ref;
    std::istringstream in(reference_tsv);
    std::string line;
    long ref_total = 0;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::istringstream row(line);
        std::string rho_s, val_s, count_s;
        if (!std::getline(row, rho_s, '\t') || !std::getline(row, val_s, '\t') ||
            !std::getline(row, count_s, '\t'))
            continue;
        if (rho_s == "rho") continue;  // header
        CensusKey key{std::lround(std::stod(rho_s) * 10000.0), parse_valencies(val_s)};
        long c = std::stol(count_s);
        ref[key] += c;
        ref_total += c;
    }

    TableDiff diff;
    long comp_total = 0;
    for (auto& cell : computed) {
        comp_total += cell.count;
        auto it = ref.find(cell.key);
        std::string name = format_rho(cell.key.rho_key) + " " +
                           format_valencies(cell.key.valencies);
        if (it == ref.end())
            diff.lines.push_back("computed row missing from reference: " + name + " count " +
                                 std::to_string(cell.count));
        else if (it->second != cell.count)
            diff.lines.push_back("count mismatch at " + name + ": computed " +
                                 std::to_string(cell.count) + ", reference " +
                                 std::to_string(it->second));
    }
    for (auto& [key, c] : ref) {
        bool found = std::any_of(computed.begin(), computed.end(),
                                 [&](const CensusCell& cell) { return cell.key == key; });
        if (!found)
            diff.lines.push_back("reference row not realized: " + format_rho(key.rho_key) +
                                 " " + format_valencies(key.valencies) + " count " +
                                 std::to_string(c));
    }
    if (ref_total != comp_total)
        diff.lines.push_back("totals differ: computed " + std::to_string(comp_total) +
                             ", reference " + std::to_string(ref_total));
    return diff;
}

} // namespace fewev::census
