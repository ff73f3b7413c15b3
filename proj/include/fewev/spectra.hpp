#ifndef FEWEV_SPECTRA_HPP
#define FEWEV_SPECTRA_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fewev/graph.hpp"

namespace fewev::spectra {

// Eigenvalues grouped into multiplicity clusters, descending.
struct Spectrum {
    std::vector<std::pair<double, int>> pairs;
    double tol = 1e-7;

    int dimension() const {
        int d = 0;
        for (auto& [v, m] : pairs) d += m;
        return d;
    }
    int distinct() const { return static_cast<int>(pairs.size()); }
    std::vector<double> expand() const;
};

struct SrgParams {
    long v, k, lambda, mu;
    bool operator==(const SrgParams&) const = default;
};

// Seidel eigenstructure of a regular two-graph, as seen from one member:
// Seidel eigenvalues -1-2*sigma (multiplicity m_sigma) and -1-2*tau
// (multiplicity m_tau), with sigma > tau. sigma and tau are integers unless
// the two multiplicities coincide and v-1 is not a perfect square.
struct TwoGraphParams {
    long v;
    double sigma, tau;
    long m_sigma, m_tau;
    bool integral;      // sigma, tau are exact integers
    bool trivial;       // switching class contains a complete or empty graph
    long seidel_sum;    // e1+e2, exact
    long seidel_prod;   // e1*e2, exact

    long sigma_int() const { return static_cast<long>(sigma > 0 ? sigma + 0.5 : sigma - 0.5); }
    long tau_int() const { return static_cast<long>(tau > 0 ? tau + 0.5 : tau - 0.5); }
};

inline constexpr double kDefaultOffTol = 1e-12;
inline constexpr double kDefaultClusterTol = 1e-7;

// Cyclic-by-row Jacobi on a dense symmetric matrix (row-major, n*n).
// Sweeps until every off-diagonal entry is below off_tol; returns the
// diagonal sorted descending. Rejects non-symmetric input.
std::vector<double> sym_eigenvalues(std::vector<double> m, int n,
                                    double off_tol = kDefaultOffTol);

// Greedy clustering of a descending value list: a value joins the current
// cluster iff it is within tol of the cluster's running mean.
Spectrum cluster(const std::vector<double>& sorted_desc, double tol);

enum class MatrixKind { adjacency, seidel };

Spectrum graph_spectrum(const Graph& g, MatrixKind kind,
                        double tol = kDefaultClusterTol,
                        double off_tol = kDefaultOffTol);

// Exact integer verification that the Seidel matrix S satisfies
// S^2 - (e1+e2) S + e1 e2 I = 0 for the two clustered Seidel eigenvalues,
// plus v-1 = -e1*e2. Refuses when the spectrum has != 2 clusters or the
// identity fails.
std::optional<TwoGraphParams> seidel_two_ev_certificate(const Graph& g,
                                                        const Spectrum& seidel_spec);

// Exact integer verification of A^2 = kI + lambda*A + mu*(J-I-A).
// Refuses non-regular, complete, and empty graphs.
std::optional<SrgParams> srg_certificate(const Graph& g);

// Cauchy interlacing test: outer_i >= inner_i >= outer_{i+n-m}.
bool interlaces(const Spectrum& outer, const Spectrum& inner, double tol = 1e-7);

std::string format_spectrum(const Spectrum& s);

} // namespace fewev::spectra

#endif
