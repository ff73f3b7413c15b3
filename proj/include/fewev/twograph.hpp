#ifndef FEWEV_TWOGRAPH_HPP
#define FEWEV_TWOGRAPH_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fewev/graph.hpp"
#include "fewev/spectra.hpp"

namespace fewev::twograph {

using spectra::Spectrum;
using spectra::SrgParams;
using spectra::TwoGraphParams;

// Seidel spectrum + exact certificate; refuses when the switching class is
// not a regular two-graph.
std::optional<TwoGraphParams> detect(const Graph& g,
                                     double tol = spectra::kDefaultClusterTol);

// Adjacency spectrum of a member with e edges:
// {rho1, rho2, sigma^(m_sigma-1), tau^(m_tau-1)} with
// rho1+rho2 = sigma+tau+v/2 and rho1^2+rho2^2 = sigma^2+tau^2+2e-v^2/4.
// Coincident values are merged. Throws if the discriminant is negative.
Spectrum lemma4_predict(const TwoGraphParams& p, long e, double merge_tol = 1e-7);

// (-(2s+1)(2t+1), -2st, s+t-st, -st) for integer s > 0 > t
SrgParams prop5_params(long sigma, long tau);

// the two parameter sets a 3-eigenvalue member can have
std::pair<SrgParams, SrgParams> prop6_params(long sigma, long tau);

// Switch with respect to the neighborhood of u, isolating u.
Graph isolate_switch(const Graph& g, int u);

struct AuditReport {
    bool disconnected_branch = false;   // member is disconnected
    bool three_ev_branch = false;       // member has <= 3 distinct eigenvalues
    std::optional<SrgParams> srg;       // certificate from branch (a) or (b)
    std::vector<std::string> violations;
    bool clean() const { return violations.empty(); }
};

// Checks one member of a non-trivial regular two-graph against the
// structural facts the class guarantees:
//  (a) disconnected => isolated vertex + connected SRG with the
//      sigma/tau parameter set,
//  (b) <= 3 distinct eigenvalues => regular with one of the two
//      3-eigenvalue parameter sets,
//  (c) never bipartite,
//  (d) adjacency spectrum = prediction from the edge count.
// Violations are findings, not errors. Trivial classes are refused.
AuditReport audit(const Graph& g, const TwoGraphParams& p);

struct FeasibilityReport {
    struct Check {
        std::string name;
        bool pass;
        std::string detail;
    };
    std::vector<Check> checks;
    bool all_pass() const {
        for (auto& c : checks)
            if (!c.pass) return false;
        return true;
    }
};

// Consistency checks for a putative equitable valency partition:
// class sizes vs dimension, quotient row sums vs valencies, degree sum vs
// spectral trace, quotient eigenvalues inside the spectrum.
FeasibilityReport putative_three_ev_check(
    const std::vector<std::vector<double>>& quotient, const Spectrum& spec,
    const std::vector<std::pair<long, long>>& valencies);

} // namespace fewev::twograph

#endif
