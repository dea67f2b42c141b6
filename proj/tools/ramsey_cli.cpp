// Command-line front end: reproduce the residue constructions, verify or
// derive Ramsey lower-bound witnesses, compute clique numbers, sweep primes
// and residue orders, and re-check certificates.
//
// Exit codes: 0 verified/success, 1 refuted, 2 inconclusive (budget
// exhausted), 64 usage/domain errors, 65 input parse errors.

#include <csignal>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "ramsey/bounds.hpp"
#include "ramsey/certificate.hpp"
#include "ramsey/clique.hpp"
#include "ramsey/dimacs.hpp"
#include "ramsey/graph.hpp"
#include "ramsey/residue.hpp"
#include "ramsey/sweep.hpp"
#include "ramsey/version.hpp"
#include "ramsey/witness.hpp"

namespace {

constexpr int kExitVerified = 0;
constexpr int kExitRefuted = 1;
constexpr int kExitInconclusive = 2;
constexpr int kExitUsage = 64;
constexpr int kExitParse = 65;
constexpr int kExitInternal = 70;

struct BudgetFlags {
    double seconds = 0.0;
    std::uint64_t nodes = 0;

    void attach(CLI::App* cmd) {
        cmd->add_option("--budget-seconds", seconds, "Wall-clock budget per search (seconds)");
        cmd->add_option("--budget-nodes", nodes, "Search-tree node budget per search");
    }

    ramsey::Budget to_budget() const {
        ramsey::Budget b;
        if (seconds > 0.0)
            b.max_duration = std::chrono::milliseconds(static_cast<std::int64_t>(seconds * 1000.0));
        if (nodes > 0)
            b.max_nodes = nodes;
        return b;
    }
};

unsigned default_threads() {
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : hw;
}

std::vector<int> parse_int_list(const std::string& text) {
    std::vector<int> values;
    std::string token;
    std::istringstream in(text);
    while (std::getline(in, token, ',')) {
        if (token.empty())
            continue;
        std::size_t used = 0;
        int v = 0;
        try {
            v = std::stoi(token, &used);
        } catch (const std::exception&) {
            throw std::domain_error("not an integer: '" + token + "'");
        }
        if (used != token.size())
            throw std::domain_error("not an integer: '" + token + "'");
        values.push_back(v);
    }
    return values;
}

// A connection set is given inline ("1,4"), from a file ("@sets/s1.txt",
// whitespace- or comma-separated), or derived from a prime and residue
// order ("auto:313,4").
std::vector<int> parse_set_spec(const std::string& spec, int n,
                                std::optional<ramsey::ConstructionInfo>& construction) {
    if (spec.rfind("auto:", 0) == 0) {
        const auto params = parse_int_list(spec.substr(5));
        if (params.size() != 2)
            throw std::domain_error("auto set spec must be auto:<prime>,<order>");
        const int p = params[0];
        const int k = params[1];
        if (p != n)
            throw std::domain_error("auto:" + std::to_string(p) + "," + std::to_string(k) +
                                    " derives sets mod " + std::to_string(p) +
                                    " but --n is " + std::to_string(n));
        const auto cls = ramsey::kth_power_residues(p, k);
        if (!cls.negation_closed)
            throw std::domain_error("connection set not symmetric; -1 is not a " +
                                    std::to_string(k) + "-th power residue mod " +
                                    std::to_string(p));
        construction = ramsey::ConstructionInfo{p, k};
        return {cls.connection_set.begin(), cls.connection_set.end()};
    }
    if (!spec.empty() && spec.front() == '@') {
        std::ifstream file(spec.substr(1));
        if (!file)
            throw ramsey::ParseError("cannot open set file '" + spec.substr(1) + "'");
        std::vector<int> values;
        std::string token;
        while (file >> token) {
            for (int v : parse_int_list(token))
                values.push_back(v);
        }
        return values;
    }
    return parse_int_list(spec);
}

void print_clique_line(const ramsey::CliqueResult& r, std::optional<int> target) {
    using ramsey::SolveStatus;
    switch (r.status) {
    case SolveStatus::Exact:
        std::cout << "omega " << r.best_size << " exact\n";
        break;
    case SolveStatus::LowerBoundOnly:
        std::cout << "omega >= " << r.best_size << " lower-bound\n";
        break;
    case SolveStatus::DecisionSatisfied:
        std::cout << "clique " << (target ? *target : r.best_size) << " found\n";
        break;
    case SolveStatus::Refuted:
        std::cout << "clique " << (target ? *target : 0) << " refuted (omega " << r.best_size
                  << ")\n";
        break;
    }
    std::cout << "witness:";
    for (int v : r.witness)
        std::cout << ' ' << v;
    std::cout << "\nnodes: " << r.nodes_explored << "\nelapsed_ms: " << r.elapsed_ms() << '\n';
}

void print_side(const char* name, const ramsey::CliqueResult& r) {
    std::cout << name << ": status " << to_string(r.status) << ", best " << r.best_size
              << ", nodes " << r.nodes_explored << ", elapsed_ms " << r.elapsed_ms() << '\n';
}

int verdict_exit(ramsey::Verdict v) {
    switch (v) {
    case ramsey::Verdict::Verified: return kExitVerified;
    case ramsey::Verdict::Refuted: return kExitRefuted;
    case ramsey::Verdict::Inconclusive: return kExitInconclusive;
    }
    return kExitInternal;
}

// --- subcommands ------------------------------------------------------------

int run_residues(std::int64_t prime, int order, bool as_json) {
    const auto cls = ramsey::kth_power_residues(prime, order);
    if (as_json) {
        nlohmann::ordered_json j;
        j["prime"] = cls.prime;
        j["order"] = cls.order;
        j["effective_index"] = cls.effective_index;
        j["negation_closed"] = cls.negation_closed;
        j["degenerate"] = cls.degenerate();
        j["residues_full"] = cls.residues_full;
        j["connection_set"] = cls.connection_set;
        std::cout << j.dump(2) << '\n';
        return kExitVerified;
    }
    for (std::size_t i = 0; i < cls.connection_set.size(); ++i)
        std::cout << (i ? " " : "") << cls.connection_set[i];
    std::cout << '\n';
    std::cout << "negation-closed: " << (cls.negation_closed ? "yes" : "no") << '\n';
    std::cout << "residues: " << cls.residues_full.size() << " of " << cls.prime - 1
              << " (index " << cls.effective_index << ")\n";
    std::cout << "connection set size: " << cls.connection_set.size() << '\n';
    if (!cls.negation_closed)
        std::cout << "connection set undefined: -1 is not a " << order
                  << "-th power residue mod " << prime << '\n';
    else if (cls.degenerate())
        std::cout << "degenerate: gcd(" << order << ", " << prime - 1
                  << ") = 1, the residues are the whole unit group\n";
    return kExitVerified;
}

int run_verify(int n, const std::string& set_spec, int p, int q, const BudgetFlags& budget,
               unsigned threads, const std::string& cert_path) {
    std::optional<ramsey::ConstructionInfo> construction;
    auto s1 = parse_set_spec(set_spec, n, construction);
    const auto w =
        ramsey::verify_witness(n, std::move(s1), p, q, budget.to_budget(), threads, construction);

    std::cout << "claim: R(" << w.claimed_p << "," << w.claimed_q << ") > " << w.n << '\n';
    print_side("red ", w.omega_red);
    print_side("blue", w.omega_blue);
    std::cout << "verdict: " << to_string(w.verdict) << '\n';

    if (!cert_path.empty()) {
        std::ofstream out(cert_path);
        if (!out)
            throw std::runtime_error("cannot write certificate to '" + cert_path + "'");
        ramsey::emit_certificate(w, out);
        std::cout << "certificate: " << cert_path << '\n';
    }
    return verdict_exit(w.verdict);
}

int run_clique(const std::string& dimacs_path, const std::string& circulant_spec,
               std::optional<int> decision, const BudgetFlags& budget, unsigned threads) {
    ramsey::DenseGraph g;
    if (!dimacs_path.empty()) {
        std::ifstream in(dimacs_path);
        if (!in)
            throw ramsey::ParseError("cannot open '" + dimacs_path + "'");
        g = ramsey::read_dimacs(in);
    } else {
        const auto values = parse_int_list(circulant_spec);
        if (values.empty())
            throw std::domain_error("--circulant needs at least a vertex count");
        g = ramsey::build_circulant(values[0],
                                    std::vector<int>(values.begin() + 1, values.end()))
                .adjacency();
    }

    const ramsey::CliqueResult r =
        decision ? ramsey::has_clique_of_size(g, *decision, budget.to_budget(), threads)
                 : ramsey::max_clique(g, budget.to_budget(), threads);
    print_clique_line(r, decision);
    switch (r.status) {
    case ramsey::SolveStatus::Exact:
    case ramsey::SolveStatus::DecisionSatisfied:
        return kExitVerified;
    case ramsey::SolveStatus::Refuted:
        return kExitRefuted;
    case ramsey::SolveStatus::LowerBoundOnly:
        return kExitInconclusive;
    }
    return kExitInternal;
}

std::vector<int> parse_orders(const std::string& text) {
    std::vector<int> orders;
    std::string token;
    std::istringstream in(text);
    while (std::getline(in, token, ',')) {
        if (token.empty())
            continue;
        const auto dots = token.find("..");
        if (dots != std::string::npos) {
            const int lo = std::stoi(token.substr(0, dots));
            const int hi = std::stoi(token.substr(dots + 2));
            for (int k = lo; k <= hi; ++k)
                orders.push_back(k);
        } else {
            orders.push_back(std::stoi(token));
        }
    }
    return orders;
}

int run_sweep(int max_n, const std::string& orders_spec, const BudgetFlags& budget,
              const std::string& bounds_path, const std::string& out_path,
              const std::string& format, unsigned threads) {
    std::vector<int> orders;
    try {
        orders = parse_orders(orders_spec);
    } catch (const std::exception&) {
        throw std::domain_error("cannot parse --orders '" + orders_spec + "'");
    }

    ramsey::KnownBoundsTable bounds;
    if (bounds_path.empty()) {
        bounds = ramsey::builtin_known_bounds();
    } else {
        std::ifstream in(bounds_path);
        if (!in)
            throw ramsey::ParseError("cannot open bounds file '" + bounds_path + "'");
        bounds = ramsey::load_known_bounds(in);
    }

    const auto report = ramsey::sweep(max_n, orders, budget.to_budget(), bounds, threads);

    std::ostream* out = &std::cout;
    std::ofstream file;
    const bool to_file = !out_path.empty();
    if (to_file) {
        file.open(out_path);
        if (!file)
            throw std::runtime_error("cannot write report to '" + out_path + "'");
        out = &file;
    }
    if (format == "table")
        ramsey::write_report_table(report, *out);
    else
        ramsey::write_report_json(report, *out);

    std::ostream& summary = to_file ? std::cout : std::cerr;
    for (const auto& row : report.rows) {
        if (row.claim && row.comparison == ramsey::Comparison::Improves)
            summary << "improves: " << ramsey::claim_to_string(*row.claim) << " via prime "
                    << row.prime << ", order " << row.order << '\n';
    }
    if (to_file)
        std::cout << "report: " << out_path << " (" << report.rows.size() << " rows)\n";
    return kExitVerified;
}

int run_check(const std::string& cert_path, const BudgetFlags& budget, unsigned threads) {
    std::ifstream in(cert_path);
    if (!in)
        throw ramsey::ParseError("cannot open certificate '" + cert_path + "'");
    const auto witness = ramsey::parse_certificate(in);
    const auto check = ramsey::check_certificate(witness, budget.to_budget(), threads);
    std::cout << "certificate: R(" << witness.claimed_p << "," << witness.claimed_q << ") > "
              << witness.n << ", verdict " << to_string(witness.verdict) << '\n';
    for (const auto& d : check.discrepancies)
        std::cout << "discrepancy: " << d << '\n';
    std::cout << "check: " << to_string(check.outcome) << '\n';
    switch (check.outcome) {
    case ramsey::CheckOutcome::Agreement: return kExitVerified;
    case ramsey::CheckOutcome::Discrepancy: return kExitRefuted;
    case ramsey::CheckOutcome::Inconclusive: return kExitInconclusive;
    }
    return kExitInternal;
}

void install_signal_handlers() {
    // Budget checks poll the flag, so a Ctrl-C run still flushes its partial
    // result as Inconclusive instead of dying mid-write.
    std::signal(SIGINT, [](int) { ramsey::g_interrupt.store(true); });
    std::signal(SIGTERM, [](int) { ramsey::g_interrupt.store(true); });
}

} // namespace

int main(int argc, char** argv) {
    install_signal_handlers();

    CLI::App app{"Ramsey lower bounds from power-residue circulant graphs"};
    app.set_version_flag("--version", std::string(ramsey::kToolName) + " " + ramsey::kToolVersion);
    app.require_subcommand(1);

    // residues
    std::int64_t prime = 0;
    int order = 0;
    bool residues_json = false;
    auto* residues = app.add_subcommand("residues", "Print the k-th power residue connection set");
    residues->add_option("--prime", prime, "Odd prime modulus")->required();
    residues->add_option("--order", order, "Residue order k >= 2")->required();
    residues->add_flag("--json", residues_json, "Emit JSON instead of text");

    // verify
    int verify_n = 0, verify_p = 0, verify_q = 0;
    std::string verify_s1, verify_cert;
    BudgetFlags verify_budget;
    unsigned verify_threads = default_threads();
    auto* verify = app.add_subcommand("verify", "Verify a claim R(p,q) > n for a partition");
    verify->add_option("--n", verify_n, "Vertex count of the complete graph")->required();
    verify->add_option("--s1", verify_s1, "Red connection set: list, @file, or auto:P,K")
        ->required();
    verify->add_option("--p", verify_p, "Forbidden red clique size")->required();
    verify->add_option("--q", verify_q, "Forbidden blue clique size")->required();
    verify->add_option("--cert", verify_cert, "Write a certificate JSON here");
    verify->add_option("--threads", verify_threads, "Solver worker threads");
    verify_budget.attach(verify);

    // clique
    std::string clique_in, clique_circulant;
    int clique_decision = 0;
    BudgetFlags clique_budget;
    unsigned clique_threads = default_threads();
    auto* clique = app.add_subcommand("clique", "Compute a clique number (or decide a size)");
    auto* in_opt = clique->add_option("--in", clique_in, "DIMACS edge-format file");
    clique->add_option("--circulant", clique_circulant, "Circulant spec: n,s1,s2,...")
        ->excludes(in_opt);
    auto* decision_opt =
        clique->add_option("--decision", clique_decision, "Decide whether a K_t exists");
    clique->add_option("--threads", clique_threads, "Solver worker threads");
    clique_budget.attach(clique);

    // sweep
    int sweep_max_n = 0;
    std::string sweep_orders, sweep_bounds, sweep_out, sweep_format = "json";
    BudgetFlags sweep_budget;
    unsigned sweep_threads = default_threads();
    auto* sweep_cmd = app.add_subcommand("sweep", "Sweep primes and residue orders for bounds");
    sweep_cmd->add_option("--max-n", sweep_max_n, "Largest prime to try")->required();
    sweep_cmd->add_option("--orders", sweep_orders, "Residue orders, e.g. 2..8 or 4,5")
        ->required();
    sweep_cmd->add_option("--bounds", sweep_bounds, "Known-bounds CSV (default: built-in table)");
    sweep_cmd->add_option("--out", sweep_out, "Report destination (default: stdout)");
    sweep_cmd->add_option("--format", sweep_format, "Report format: json or table")
        ->check(CLI::IsMember({"json", "table"}));
    sweep_cmd->add_option("--threads", sweep_threads, "Solver worker threads");
    sweep_budget.attach(sweep_cmd);

    // check
    std::string check_cert;
    BudgetFlags check_budget;
    unsigned check_threads = default_threads();
    auto* check = app.add_subcommand("check", "Re-verify a certificate");
    check->add_option("--cert", check_cert, "Certificate JSON file")->required();
    check->add_option("--threads", check_threads, "Solver worker threads");
    check_budget.attach(check);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (residues->parsed())
            return run_residues(prime, order, residues_json);
        if (verify->parsed())
            return run_verify(verify_n, verify_s1, verify_p, verify_q, verify_budget,
                              verify_threads, verify_cert);
        if (clique->parsed()) {
            if (clique_in.empty() && clique_circulant.empty())
                throw std::domain_error("clique needs --in or --circulant");
            return run_clique(clique_in, clique_circulant,
                              decision_opt->count() ? std::optional<int>(clique_decision)
                                                    : std::nullopt,
                              clique_budget, clique_threads);
        }
        if (sweep_cmd->parsed())
            return run_sweep(sweep_max_n, sweep_orders, sweep_budget, sweep_bounds, sweep_out,
                             sweep_format, sweep_threads);
        if (check->parsed())
            return run_check(check_cert, check_budget, check_threads);
    } catch (const ramsey::ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitParse;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitInternal;
    }
    return kExitUsage;
}
