#include "fewev/twograph.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace fewev::twograph {

std::optional<TwoGraphParams> detect(const Graph& g, double tol) {
    if (g.order() < 2) return std::nullopt;
    Spectrum s = spectra::graph_spectrum(g, spectra::MatrixKind::seidel, tol);
    return spectra::seidel_two_ev_certificate(g, s);
}

Spectrum lemma4_predict(const TwoGraphParams& p, long e, double merge_tol) {
    if (e < 0 || e > p.v * (p.v - 1) / 2)
        throw std::invalid_argument("lemma4_predict: edge count out of range");
    double sum = p.sigma + p.tau + p.v / 2.0;
    double sqsum = p.sigma * p.sigma + p.tau * p.tau + 2.0 * e - p.v * p.v / 4.0;
    double disc = 2.0 * sqsum - sum * sum;
    if (disc < -1e-9)
        throw std::invalid_argument("lemma4_predict: complex rho, e inconsistent with the class");
    double root = std::sqrt(std::max(disc, 0.0));
    double rho1 = (sum + root) / 2.0;
    double rho2 = (sum - root) / 2.0;

    std::vector<std::pair<double, long>> vals;
    vals.emplace_back(rho1, 1);
    vals.emplace_back(rho2, 1);
    if (p.m_sigma > 1) vals.emplace_back(p.sigma, p.m_sigma - 1);
    if (p.m_tau > 1) vals.emplace_back(p.tau, p.m_tau - 1);
    std::sort(vals.begin(), vals.end(),
              [](auto& a, auto& b) { return a.first > b.first; });
    Spectrum out;
    out.tol = merge_tol;
    for (auto& [v, m] : vals) {
        if (!out.pairs.empty() && std::abs(out.pairs.back().first - v) <= merge_tol)
            out.pairs.back().second += static_cast<int>(m);
        else
            out.pairs.emplace_back(v, static_cast<int>(m));
    }
    return out;
}

namespace {

void check_prop_args(long sigma, long tau) {
    if (sigma == 0 || sigma == -1 || tau == 0 || tau == -1)
        throw std::invalid_argument("trivial sigma/tau");
    if (!(sigma > 0 && tau < 0))
        throw std::invalid_argument("expected sigma > 0 > tau");
}

} // namespace

SrgParams prop5_params(long sigma, long tau) {
    check_prop_args(sigma, tau);
    return SrgParams{-(2 * sigma + 1) * (2 * tau + 1), -2 * sigma * tau,
                     sigma + tau - sigma * tau, -sigma * tau};
}

std::pair<SrgParams, SrgParams> prop6_params(long sigma, long tau) {
    check_prop_args(sigma, tau);
    long v = -(2 * sigma + 1) * (2 * tau + 1) + 1;
    SrgParams first{v, -sigma * (2 * tau + 1), tau * (1 - sigma), -sigma * (tau + 1)};
    SrgParams second{v, -tau * (2 * sigma + 1), sigma * (1 - tau), -tau * (sigma + 1)};
    return {first, second};
}

Graph isolate_switch(const Graph& g, int u) {
    return seidel_switch(g, g.neighborhood(u));
}

namespace {

std::string fmt_params(const SrgParams& p) {
    char buf[96];
    std::snprintf(buf, sizeof buf, "(%ld,%ld,%ld,%ld)", p.v, p.k, p.lambda, p.mu);
    return buf;
}

// The prop 5/6 parameter formulas evaluated without assuming integer
// sigma/tau (the conference case yields integers through the products).
SrgParams round_params(double v, double k, double lambda, double mu) {
    auto r = [](double x) { return static_cast<long>(std::llround(x)); };
    return SrgParams{r(v), r(k), r(lambda), r(mu)};
}

} // namespace

AuditReport audit(const Graph& g, const TwoGraphParams& p) {
    if (p.trivial)
        throw std::invalid_argument("audit: trivial two-graph out of scope");
    AuditReport rep;
    GraphFlags flags = classify(g);
    Spectrum spec = spectra::graph_spectrum(g, spectra::MatrixKind::adjacency);
    double st = p.sigma * p.tau;

    if (!flags.connected) {
        rep.disconnected_branch = true;
        auto comps = connected_components(g);
        if (comps.size() != 2) {
            rep.violations.push_back("disconnected member with " +
                                     std::to_string(comps.size()) + " components");
        } else {
            auto& small = comps[0].size() <= comps[1].size() ? comps[0] : comps[1];
            auto& large = comps[0].size() <= comps[1].size() ? comps[1] : comps[0];
            if (small.size() != 1) {
                rep.violations.push_back("disconnected member without an isolated vertex");
            } else {
                VertexSet keep(g.order());
                for (int x : large) keep.add(x);
                Graph big = induced_subgraph(g, keep);
                SrgParams expect = round_params(p.v - 1, -2.0 * st,
                                                p.sigma + p.tau - st, -st);
                auto cert = spectra::srg_certificate(big);
                if (!cert)
                    rep.violations.push_back("large component is not strongly regular");
                else if (*cert != expect) {
                    rep.violations.push_back("large component is " + fmt_params(*cert) +
                                             ", expected " + fmt_params(expect));
                } else {
                    rep.srg = cert;
                }
            }
        }
    }

    if (spec.distinct() <= 3) {
        rep.three_ev_branch = true;
        if (!flags.regular) {
            rep.violations.push_back("<=3 eigenvalues but member is not regular");
        } else {
            SrgParams opt1 = round_params(p.v, -p.sigma * (2 * p.tau + 1),
                                          p.tau * (1 - p.sigma), -p.sigma * (p.tau + 1));
            SrgParams opt2 = round_params(p.v, -p.tau * (2 * p.sigma + 1),
                                          p.sigma * (1 - p.tau), -p.tau * (p.sigma + 1));
            auto cert = spectra::srg_certificate(g);
            if (!cert)
                rep.violations.push_back("<=3 eigenvalues but member is not strongly regular");
            else if (*cert != opt1 && *cert != opt2)
                rep.violations.push_back("3-eigenvalue member is " + fmt_params(*cert) +
                                         ", expected " + fmt_params(opt1) + " or " +
                                         fmt_params(opt2));
            else
                rep.srg = cert;
        }
    }

    if (flags.bipartite)
        rep.violations.push_back("member of a non-trivial regular two-graph is bipartite");

    Spectrum predicted = lemma4_predict(p, g.edge_count());
    bool match = predicted.distinct() == spec.distinct();
    if (match)
        for (int i = 0; i < spec.distinct(); ++i)
            if (predicted.pairs[i].second != spec.pairs[i].second ||
                std::abs(predicted.pairs[i].first - spec.pairs[i].first) > 1e-8) {
                match = false;
                break;
            }
    if (!match)
        rep.violations.push_back("adjacency spectrum deviates from the edge-count prediction");
    return rep;
}

namespace {

// characteristic polynomial coefficients (monic, descending powers) by the
// Faddeev-LeVerrier recurrence
std::vector<double> char_poly(const std::vector<std::vector<double>>& m) {
    std::size_t k = m.size();
    std::vector<std::vector<double>> mk(k, std::vector<double>(k, 0.0));
    for (std::size_t i = 0; i < k; ++i) mk[i][i] = 1.0;
    std::vector<double> coeff(k + 1, 0.0);
    coeff[0] = 1.0;
    for (std::size_t step = 1; step <= k; ++step) {
        // mk = M * mk
        std::vector<std::vector<double>> next(k, std::vector<double>(k, 0.0));
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t l = 0; l < k; ++l) {
                double acc = 0;
                for (std::size_t j = 0; j < k; ++j) acc += m[i][j] * mk[j][l];
                next[i][l] = acc;
            }
        mk = next;
        double tr = 0;
        for (std::size_t i = 0; i < k; ++i) tr += mk[i][i];
        coeff[step] = -tr / static_cast<double>(step);
        for (std::size_t i = 0; i < k; ++i) mk[i][i] += coeff[step];
    }
    return coeff;
}

double eval_poly(const std::vector<double>& coeff, double x, double* scale) {
    double acc = 0, s = 0;
    for (double c : coeff) {
        acc = acc * x + c;
        s = s * std::abs(x) + std::abs(c);
    }
    if (scale) *scale = s;
    return acc;
}

// divide monic polynomial by (x - root)
std::vector<double> deflate(const std::vector<double>& coeff, double root) {
    std::vector<double> out(coeff.size() - 1, 0.0);
    double carry = 0;
    for (std::size_t i = 0; i + 1 < coeff.size(); ++i) {
        carry = coeff[i] + carry * root;
        out[i] = carry;
    }
    return out;
}

} // namespace

FeasibilityReport putative_three_ev_check(
    const std::vector<std::vector<double>>& quotient, const Spectrum& spec,
    const std::vector<std::pair<long, long>>& valencies) {
    std::size_t k = quotient.size();
    for (auto& row : quotient)
        if (row.size() != k)
            throw std::invalid_argument("putative_three_ev_check: quotient must be square");
    if (valencies.size() != k)
        throw std::invalid_argument("putative_three_ev_check: one (valency,count) per class");

    FeasibilityReport rep;
    char buf[160];

    long v = spec.dimension();
    long nsum = 0;
    for (auto& [d, n] : valencies) nsum += n;
    std::snprintf(buf, sizeof buf, "sum n_i = %ld, spectrum dimension = %ld", nsum, v);
    rep.checks.push_back({"class sizes sum to v", nsum == v, buf});

    bool rows_ok = true;
    std::string row_detail;
    for (std::size_t i = 0; i < k; ++i) {
        double rs = 0;
        for (double x : quotient[i]) rs += x;
        if (std::abs(rs - static_cast<double>(valencies[i].first)) > 1e-9) rows_ok = false;
        std::snprintf(buf, sizeof buf, "%srow %zu sums to %.10g (valency %ld)",
                      i ? "; " : "", i, rs, valencies[i].first);
        row_detail += buf;
    }
    rep.checks.push_back({"quotient row sums match class valencies", rows_ok, row_detail});

    double trace_sq = 0;
    for (auto& [val, m] : spec.pairs) trace_sq += val * val * m;
    long degree_sum = 0;
    for (auto& [d, n] : valencies) degree_sum += d * n;
    std::snprintf(buf, sizeof buf, "sum n_i d_i = %ld, sum lambda^2 m = %.10g",
                  degree_sum, trace_sq);
    rep.checks.push_back({"degree sum equals spectral trace of A^2",
                          std::abs(degree_sum - trace_sq) < 1e-6, buf});

    // every quotient eigenvalue must appear in the spectrum: peel candidate
    // roots off the characteristic polynomial (multiplicity-aware)
    std::vector<double> poly = char_poly(quotient);
    std::string eig_detail;
    std::size_t matched = 0;
    for (auto& [val, mult] : spec.pairs) {
        for (int used = 0; used < mult && poly.size() > 1; ++used) {
            double scale;
            double p = eval_poly(poly, val, &scale);
            if (std::abs(p) > 1e-10 * std::max(scale, 1.0)) break;
            poly = deflate(poly, val);
            ++matched;
            std::snprintf(buf, sizeof buf, "%s%.6g", matched > 1 ? "," : "", val);
            eig_detail += buf;
        }
    }
    bool eig_ok = matched == k;
    rep.checks.push_back({"quotient eigenvalues lie in the spectrum", eig_ok,
                          "matched roots: " + (eig_detail.empty() ? "none" : eig_detail)});
    return rep;
}

} // namespace fewev::twograph
