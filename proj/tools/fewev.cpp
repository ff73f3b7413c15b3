// fewev: build, inspect, and certify graphs with few distinct eigenvalues.
//
// Subcommands exchange graph6 lines on stdin/stdout, so they compose:
//   fewev build spider 3 | fewev spectrum
//   fewev build symplectic-rep 2 | fewev census --threads 4
// Exit codes: 0 all requested checks pass, 1 a check failed, 2 usage or
// format error.

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <json.hpp>

#include "fewev/canonical.hpp"
#include "fewev/census.hpp"
#include "fewev/construct.hpp"
#include "fewev/embed.hpp"
#include "fewev/graph.hpp"
#include "fewev/graph6.hpp"
#include "fewev/spectra.hpp"
#include "fewev/twograph.hpp"

using namespace fewev;

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Args {
    std::vector<std::string> positional;
    std::map<std::string, std::string> flags;

    bool has(const std::string& name) const { return flags.count(name) > 0; }
    std::string get(const std::string& name, const std::string& fallback) const {
        auto it = flags.find(name);
        return it == flags.end() ? fallback : it->second;
    }
};

Args parse_args(int argc, char** argv, int from,
                const std::vector<std::string>& value_flags,
                const std::vector<std::string>& bool_flags) {
    Args args;
    for (int i = from; i < argc; ++i) {
        std::string a = argv[i];
        if (a.rfind("--", 0) == 0) {
            std::string name = a.substr(2);
            if (std::find(bool_flags.begin(), bool_flags.end(), name) != bool_flags.end()) {
                args.flags[name] = "1";
            } else if (std::find(value_flags.begin(), value_flags.end(), name) !=
                       value_flags.end()) {
                if (i + 1 >= argc) throw UsageError("flag --" + name + " needs a value");
                args.flags[name] = argv[++i];
            } else {
                throw UsageError("unknown flag " + a);
            }
        } else {
            args.positional.push_back(a);
        }
    }
    return args;
}

long positional_long(const Args& args, std::size_t idx, const char* what) {
    if (idx >= args.positional.size())
        throw UsageError(std::string("missing argument: ") + what);
    return std::stol(args.positional[idx]);
}

void emit_graph(const Graph& g) { std::cout << graph6_encode(g) << '\n'; }

std::vector<Graph> read_stdin_graphs() {
    std::vector<Graph> out;
    std::string line;
    while (std::getline(std::cin, line)) {
        if (line.empty()) continue;
        out.push_back(graph6_decode(line));
    }
    if (out.empty()) throw UsageError("no graph6 input on stdin");
    return out;
}

void print_exact(const std::vector<std::string>& spectrum) {
    std::string joined;
    for (auto& s : spectrum) {
        if (!joined.empty()) joined += ' ';
        joined += s;
    }
    std::cerr << "expected spectrum: " << joined << '\n';
}

int cmd_build(int argc, char** argv) {
    Args args = parse_args(argc, argv, 2, {"side"}, {"exact"});
    if (args.positional.empty()) throw UsageError("build: missing construction name");
    const std::string& name = args.positional[0];
    bool exact = args.has("exact");

    if (name == "complete-bipartite") {
        emit_graph(complete_bipartite(static_cast<int>(positional_long(args, 1, "a")),
                                      static_cast<int>(positional_long(args, 2, "b"))));
    } else if (name == "spider") {
        int f = static_cast<int>(positional_long(args, 1, "f"));
        emit_graph(construct::spider(f));
        if (exact) print_exact(construct::spider_exact_spectrum(f));
    } else if (name == "theorem1") {
        int t = static_cast<int>(positional_long(args, 1, "t"));
        auto fam = construct::BipartiteFamily::standard(t);
        std::string side = args.get("side", "b");
        if (side != "a" && side != "b") throw UsageError("--side must be a or b");
        std::vector<construct::Side> sides(
            fam.pairs.size(),
            side == "a" ? construct::Side::a_class : construct::Side::b_class);
        emit_graph(construct::theorem1_graph(fam, sides));
        if (exact) print_exact(construct::theorem1_exact_spectrum(fam, sides));
    } else if (name == "theorem3") {
        int t = static_cast<int>(positional_long(args, 1, "t"));
        auto fam = construct::BipartiteFamily::standard(t);
        emit_graph(construct::theorem3_graph(fam));
        if (exact) print_exact(construct::theorem3_exact_spectrum(fam));
    } else if (name == "mohar") {
        int t = static_cast<int>(positional_long(args, 1, "t"));
        auto fam = construct::BipartiteFamily::standard(t);
        std::vector<VertexSet> attach;
        for (auto& [a, b] : fam.pairs)
            attach.push_back(VertexSet::of(static_cast<int>(a + b), {0}));
        emit_graph(construct::mohar_graph(fam, attach));
    } else if (name == "symplectic-rep") {
        emit_graph(construct::symplectic_rep(static_cast<int>(positional_long(args, 1, "r"))));
    } else if (name == "symplectic") {
        emit_graph(construct::symplectic_graph(static_cast<int>(positional_long(args, 1, "r"))));
    } else if (name == "paley") {
        emit_graph(construct::paley_graph(positional_long(args, 1, "q")));
    } else {
        throw UsageError("build: unknown construction " + name);
    }
    return 0;
}

int cmd_spectrum(int argc, char** argv) {
    Args args = parse_args(argc, argv, 2, {"kind", "tol"}, {});
    std::string kind = args.get("kind", "adjacency");
    if (kind != "adjacency" && kind != "seidel")
        throw UsageError("--kind must be adjacency or seidel");
    double tol = std::stod(args.get("tol", "1e-7"));
    for (const Graph& g : read_stdin_graphs()) {
        auto s = spectra::graph_spectrum(
            g, kind == "adjacency" ? spectra::MatrixKind::adjacency
                                   : spectra::MatrixKind::seidel,
            tol);
        std::cout << spectra::format_spectrum(s) << '\n';
    }
    return 0;
}

int cmd_verify(int argc, char** argv) {
    Args args = parse_args(argc, argv, 2, {"tol"}, {"srg", "twograph"});
    bool want_srg = args.has("srg");
    bool want_tg = args.has("twograph");
    if (!want_srg && !want_tg) want_srg = want_tg = true;
    double tol = std::stod(args.get("tol", "1e-7"));

    bool all_pass = true;
    char buf[160];
    for (const Graph& g : read_stdin_graphs()) {
        if (want_srg) {
            auto srg = spectra::srg_certificate(g);
            if (srg) {
                std::snprintf(buf, sizeof buf, "srg (%ld,%ld,%ld,%ld)", srg->v, srg->k,
                              srg->lambda, srg->mu);
                std::cout << buf << '\n';
            } else {
                std::cout << "srg refused\n";
                all_pass = false;
            }
        }
        if (want_tg) {
            auto p = twograph::detect(g, tol);
            if (p) {
                std::snprintf(buf, sizeof buf,
                              "twograph v=%ld sigma=%.6g tau=%.6g m_sigma=%ld m_tau=%ld%s",
                              p->v, p->sigma, p->tau, p->m_sigma, p->m_tau,
                              p->trivial ? " trivial" : "");
                std::cout << buf << '\n';
            } else {
                std::cout << "twograph refused\n";
                all_pass = false;
            }
        }
    }
    return all_pass ? 0 : 1;
}

int cmd_census(int argc, char** argv) {
    Args args = parse_args(argc, argv, 2, {"threads", "tol", "cell", "table", "reps"}, {});
    int threads = static_cast<int>(
        std::stol(args.get("threads", std::to_string(std::thread::hardware_concurrency()))));
    double tol = std::stod(args.get("tol", "1e-7"));

    Graph g = read_stdin_graphs().front();
    auto table = census::census_table(g, threads, tol);

    // classification runs before anything is printed: format errors in the
    // cell key must not leave a partial table behind
    std::optional<census::CensusKey> cell_key;
    census::IsoClasses classes;
    if (args.has("cell")) {
        cell_key = census::parse_cell_key(args.flags.at("cell"));
        classes = census::iso_classify_cell(g, *cell_key, tol);
    }

    std::cout << "rho\tvalencies\tcount\n";
    for (auto& cell : table) {
        std::cout << census::format_rho(cell.key.rho_key) << '\t'
                  << census::format_valencies(cell.key.valencies) << '\t' << cell.count;
        if (cell_key && cell.key == *cell_key) std::cout << '\t' << classes.count();
        if (cell.rounding_collision()) std::cout << "\t# rounding collision";
        std::cout << '\n';
    }
    bool pass = true;
    if (cell_key) {
        std::cout << "cell " << census::format_rho(cell_key->rho_key) << ' '
                  << census::format_valencies(cell_key->valencies) << ": " << classes.count()
                  << " isomorphism classes\n";
        if (args.has("reps")) {
            std::ofstream reps(args.flags.at("reps"));
            for (auto& cls : classes.classes)
                reps << census::format_rho(cell_key->rho_key) << '\t'
                     << census::format_valencies(cell_key->valencies) << '\t'
                     << cls.representative << '\n';
        }
    }
    if (args.has("table")) {
        std::ifstream ref(args.flags.at("table"));
        if (!ref) throw UsageError("cannot open reference table " + args.flags.at("table"));
        std::stringstream buf;
        buf << ref.rdbuf();
        auto diff = census::diff_against_reference(table, buf.str());
        if (diff.clean()) {
            std::cout << "# reference table matches\n";
        } else {
            for (auto& line : diff.lines) std::cout << "# diff: " << line << '\n';
            pass = false;
        }
    }
    return pass ? 0 : 1;
}

int cmd_embed(int argc, char** argv) {
    parse_args(argc, argv, 2, {}, {});
    Graph delta = read_stdin_graphs().front();
    auto report = embed::theorem8_build(delta);
    emit_graph(report.result);
    std::cerr << "r=" << report.r << " host order=" << report.result.order() << '\n';
    std::cerr << "image:";
    for (int w : report.image_map) std::cerr << ' ' << w;
    std::cerr << '\n';
    std::cerr << "valencies: " << census::format_valencies(valency_histogram(report.result))
              << '\n';
    std::cerr << "spectrum: " << spectra::format_spectrum(report.spectrum) << '\n';
    std::cerr << "distinct eigenvalues: " << report.spectrum.distinct() << '\n';
    return 0;
}

int cmd_audit(int argc, char** argv) {
    Args args = parse_args(argc, argv, 2, {"tol"}, {"class"});
    double tol = std::stod(args.get("tol", "1e-7"));
    Graph g = read_stdin_graphs().front();
    auto params = twograph::detect(g, tol);
    if (!params) {
        std::cout << "not a regular two-graph\n";
        return 1;
    }
    if (params->trivial) {
        std::cout << "trivial two-graph, audit out of scope\n";
        return 1;
    }

    long violations = 0;
    if (args.has("class")) {
        long members = 0, disconnected = 0, three_ev = 0;
        census::enumerate_switching_class(g, [&](const Graph& member, std::uint64_t) {
            auto rep = twograph::audit(member, *params);
            ++members;
            if (rep.disconnected_branch) ++disconnected;
            if (rep.three_ev_branch) ++three_ev;
            for (auto& v : rep.violations) {
                std::cout << "violation: " << v << '\n';
                ++violations;
            }
        });
        std::cout << "audited " << members << " members: " << disconnected
                  << " disconnected, " << three_ev << " with <=3 eigenvalues, "
                  << violations << " violations\n";
    } else {
        auto rep = twograph::audit(g, *params);
        for (auto& v : rep.violations) {
            std::cout << "violation: " << v << '\n';
            ++violations;
        }
        std::cout << (rep.clean() ? "audit clean" : "audit found violations") << '\n';
    }
    return violations == 0 ? 0 : 1;
}

int cmd_feasibility(int argc, char** argv) {
    Args args = parse_args(argc, argv, 2, {}, {});
    if (args.positional.empty()) throw UsageError("feasibility: missing parameter file");
    std::ifstream in(args.positional[0]);
    if (!in) throw UsageError("cannot open " + args.positional[0]);
    nlohmann::json j;
    in >> j;

    std::vector<std::vector<double>> quotient =
        j.at("quotient").get<std::vector<std::vector<double>>>();
    spectra::Spectrum spec;
    for (auto& pair : j.at("spectrum"))
        spec.pairs.emplace_back(pair.at(0).get<double>(), pair.at(1).get<int>());
    std::vector<std::pair<long, long>> valencies;
    for (auto& pair : j.at("valencies"))
        valencies.emplace_back(pair.at(0).get<long>(), pair.at(1).get<long>());

    auto rep = twograph::putative_three_ev_check(quotient, spec, valencies);
    for (auto& check : rep.checks)
        std::cout << (check.pass ? "PASS " : "FAIL ") << check.name << " (" << check.detail
                  << ")\n";
    return rep.all_pass() ? 0 : 1;
}

int dispatch(int argc, char** argv) {
    if (argc < 2)
        throw UsageError(
            "usage: fewev {build|spectrum|verify|census|embed|audit|feasibility} ...");
    std::string cmd = argv[1];
    if (cmd == "build") return cmd_build(argc, argv);
    if (cmd == "spectrum") return cmd_spectrum(argc, argv);
    if (cmd == "verify") return cmd_verify(argc, argv);
    if (cmd == "census") return cmd_census(argc, argv);
    if (cmd == "embed") return cmd_embed(argc, argv);
    if (cmd == "audit") return cmd_audit(argc, argv);
    if (cmd == "feasibility") return cmd_feasibility(argc, argv);
    throw UsageError("unknown subcommand " + cmd);
}

} // namespace

int main(int argc, char** argv) {
    // stdout is buffered until the subcommand finishes, so an error never
    // leaves partial output behind
    std::ostringstream captured;
    std::streambuf* real = std::cout.rdbuf(captured.rdbuf());
    int code;
    try {
        code = dispatch(argc, argv);
    } catch (const std::exception& e) {
        std::cout.rdbuf(real);
        const char* prefix = dynamic_cast<const nlohmann::json::exception*>(&e)
                                 ? "error: parameter file: "
                                 : "error: ";
        std::cerr << prefix << e.what() << '\n';
        bool usage = dynamic_cast<const UsageError*>(&e) ||
                     dynamic_cast<const Graph6Error*>(&e) ||
                     dynamic_cast<const nlohmann::json::exception*>(&e) ||
                     dynamic_cast<const std::invalid_argument*>(&e) ||
                     dynamic_cast<const std::out_of_range*>(&e);
        return usage ? 2 : 1;
    }
    std::cout.rdbuf(real);
    std::cout << captured.str();
    return code;
}
