#include "fewev/spectra.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace fewev::spectra {

std::vector<double> Spectrum::expand() const {
    std::vector<double> out;
    out.reserve(dimension());
    for (auto& [v, m] : pairs)
        for (int k = 0; k < m; ++k) out.push_back(v);
    return out;
}

std::vector<double> sym_eigenvalues(std::vector<double> a, int n, double off_tol) {
    if (static_cast<std::size_t>(n) * n != a.size())
        throw std::invalid_argument("sym_eigenvalues: size mismatch");
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (a[i * n + j] != a[j * n + i])
                throw std::invalid_argument("sym_eigenvalues: matrix not symmetric");

    const int max_sweeps = 100;
    for (int sweep = 0; sweep < max_sweeps; ++sweep) {
        bool rotated = false;
        for (int p = 0; p < n - 1; ++p) {
            for (int q = p + 1; q < n; ++q) {
                double apq = a[p * n + q];
                if (std::abs(apq) <= off_tol) continue;
                rotated = true;
                double theta = (a[q * n + q] - a[p * n + p]) / (2.0 * apq);
                double t = (theta >= 0 ? 1.0 : -1.0) /
                           (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                double c = 1.0 / std::sqrt(t * t + 1.0);
                double s = t * c;
                a[p * n + p] -= t * apq;
                a[q * n + q] += t * apq;
                a[p * n + q] = a[q * n + p] = 0.0;
                for (int k = 0; k < n; ++k) {
                    if (k == p || k == q) continue;
                    double akp = a[k * n + p];
                    double akq = a[k * n + q];
                    a[k * n + p] = a[p * n + k] = c * akp - s * akq;
                    a[k * n + q] = a[q * n + k] = s * akp + c * akq;
                }
            }
        }
        if (!rotated) {
            std::vector<double> ev(n);
            for (int i = 0; i < n; ++i) ev[i] = a[i * n + i];
            std::sort(ev.rbegin(), ev.rend());
            return ev;
        }
    }
    throw std::runtime_error("sym_eigenvalues: Jacobi did not converge");
}

Spectrum cluster(const std::vector<double>& sorted_desc, double tol) {
    Spectrum s;
    s.tol = tol;
    double sum = 0;
    int count = 0;
    for (double v : sorted_desc) {
        if (count && std::abs(v - sum / count) <= tol) {
            sum += v;
            ++count;
        } else {
            if (count) s.pairs.emplace_back(sum / count, count);
            sum = v;
            count = 1;
        }
    }
    if (count) s.pairs.emplace_back(sum / count, count);
    return s;
}

Spectrum graph_spectrum(const Graph& g, MatrixKind kind, double tol, double off_tol) {
    int n = g.order();
    if (kind == MatrixKind::seidel && n < 1)
        throw std::invalid_argument("graph_spectrum: Seidel matrix needs v >= 1");
    std::vector<double> m(static_cast<std::size_t>(n) * n, 0.0);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            if (kind == MatrixKind::adjacency)
                m[i * n + j] = g.adjacent(i, j) ? 1.0 : 0.0;
            else
                m[i * n + j] = i == j ? 0.0 : (g.adjacent(i, j) ? -1.0 : 1.0);
        }
    return cluster(sym_eigenvalues(std::move(m), n, off_tol), tol);
}

namespace {

long round_to_long(double x) { return static_cast<long>(std::llround(x)); }

// Entry (i,j), i != j, of S^2 from packed adjacency rows:
// S[i][k]S[k][j] over k != i,j is +1 where rows i and j agree, -1 where they
// differ, so the entry is (v-2) - 2*#disagreements.
long seidel_square_entry(const Graph& g, int i, int j) {
    int words = g.row_words();
    const std::uint64_t* ri = g.row(i);
    const std::uint64_t* rj = g.row(j);
    int diff = 0;
    for (int k = 0; k < words; ++k) diff += std::popcount(ri[k] ^ rj[k]);
    diff -= 2 * (g.adjacent(i, j) ? 1 : 0);
    return g.order() - 2 - 2L * diff;
}

} // namespace

std::optional<TwoGraphParams> seidel_two_ev_certificate(const Graph& g,
                                                        const Spectrum& seidel_spec) {
    if (g.order() < 2) return std::nullopt;
    if (seidel_spec.distinct() != 2) return std::nullopt;
    long v = g.order();
    double e1 = seidel_spec.pairs[0].first;  // larger Seidel eigenvalue
    double e2 = seidel_spec.pairs[1].first;
    long p = round_to_long(e1 + e2);
    long q = round_to_long(e1 * e2);

    // exact check of S^2 = pS - qI on the integer Seidel matrix
    if (v - 1 != -q) return std::nullopt;
    for (int i = 0; i < v; ++i)
        for (int j = i + 1; j < v; ++j) {
            long s_ij = g.adjacent(i, j) ? -1 : 1;
            if (seidel_square_entry(g, i, j) != p * s_ij) return std::nullopt;
        }

    TwoGraphParams out;
    out.v = v;
    out.sigma = (-1.0 - e2) / 2.0;
    out.tau = (-1.0 - e1) / 2.0;
    out.m_sigma = seidel_spec.pairs[1].second;
    out.m_tau = seidel_spec.pairs[0].second;
    out.seidel_sum = p;
    out.seidel_prod = q;
    out.integral = std::abs(out.sigma - std::round(out.sigma)) < 1e-6 &&
                   std::abs(out.tau - std::round(out.tau)) < 1e-6;
    // a class containing a complete or empty graph shows sigma or tau in {0,-1}
    auto near = [](double x, double y) { return std::abs(x - y) < 1e-6; };
    out.trivial = near(out.sigma, 0) || near(out.sigma, -1) || near(out.tau, 0) ||
                  near(out.tau, -1);
    return out;
}

std::optional<SrgParams> srg_certificate(const Graph& g) {
    long v = g.order();
    if (v < 2) return std::nullopt;
    long k = g.degree(0);
    for (int i = 1; i < v; ++i)
        if (g.degree(i) != k) return std::nullopt;
    long edges = g.edge_count();
    if (edges == 0 || edges == v * (v - 1) / 2) return std::nullopt;  // empty/complete

    auto common = [&](int i, int j) {
        const std::uint64_t* ri = g.row(i);
        const std::uint64_t* rj = g.row(j);
        int c = 0;
        for (int w = 0; w < g.row_words(); ++w) c += std::popcount(ri[w] & rj[w]);
        return static_cast<long>(c);
    };

    long lambda = -1, mu = -1;
    for (int i = 0; i < v && (lambda < 0 || mu < 0); ++i)
        for (int j = i + 1; j < v && (lambda < 0 || mu < 0); ++j) {
            if (g.adjacent(i, j) && lambda < 0) lambda = common(i, j);
            if (!g.adjacent(i, j) && mu < 0) mu = common(i, j);
        }
    // exact identity A^2 = kI + lambda*A + mu*(J-I-A), checked entrywise
    for (int i = 0; i < v; ++i)
        for (int j = i + 1; j < v; ++j) {
            long expect = g.adjacent(i, j) ? lambda : mu;
            if (common(i, j) != expect) return std::nullopt;
        }
    return SrgParams{v, k, lambda, mu};
}

bool interlaces(const Spectrum& outer, const Spectrum& inner, double tol) {
    std::vector<double> a = outer.expand();
    std::vector<double> b = inner.expand();
    std::size_t n = a.size(), m = b.size();
    if (m > n) return false;
    for (std::size_t i = 0; i < m; ++i) {
        if (a[i] < b[i] - tol) return false;
        if (b[i] < a[i + n - m] - tol) return false;
    }
    return true;
}

std::string format_spectrum(const Spectrum& s) {
    std::string out;
    char buf[64];
    for (auto& [v, m] : s.pairs) {
        std::snprintf(buf, sizeof buf, "%.4f", v);
        std::string val(buf);
        // trim trailing zeros ("2.0000" -> "2", "6.6458" stays)
        while (val.find('.') != std::string::npos && (val.back() == '0'))
            val.pop_back();
        if (!val.empty() && val.back() == '.') val.pop_back();
        if (val == "-0") val = "0";
        if (!out.empty()) out += ' ';
        out += val + "^(" + std::to_string(m) + ")";
    }
    return out;
}

} // namespace fewev::spectra
