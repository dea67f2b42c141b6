#pragma once

#include <algorithm>
#include <cstdint>
#include <iomanip>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "ramsey/bounds.hpp"
#include "ramsey/clique.hpp"
#include "ramsey/errors.hpp"
#include "ramsey/residue.hpp"
#include "ramsey/witness.hpp"

namespace ramsey {

enum class Comparison { Improves, Ties, Worse, Unknown };

inline const char* to_string(Comparison c) {
    switch (c) {
    case Comparison::Improves: return "Improves";
    case Comparison::Ties: return "Ties";
    case Comparison::Worse: return "Worse";
    case Comparison::Unknown: return "Unknown";
    }
    return "?";
}

struct SweepClaim {
    int p = 0;
    int q = 0;
    int n = 0; // the claim is R(p,q) > n

    bool operator==(const SweepClaim&) const = default;
};

struct SweepStats {
    std::uint64_t nodes_red = 0;
    std::uint64_t nodes_blue = 0;
    std::int64_t elapsed_ms = 0;

    bool operator==(const SweepStats&) const = default;
};

// One (prime, order) instance of the exploration. Exactly one of
// skip_reason and claim is set.
struct SweepRow {
    std::int64_t prime = 0;
    int order = 0;
    bool negation_closed = false;
    std::optional<std::string> skip_reason;
    std::optional<SweepClaim> claim;
    std::optional<Verdict> status;
    Comparison comparison = Comparison::Unknown;
    std::optional<SweepStats> stats;

    bool operator==(const SweepRow&) const = default;
};

struct SweepParameters {
    int max_n = 0;
    std::vector<int> orders;
    std::optional<std::uint64_t> max_nodes;
    std::optional<std::int64_t> max_duration_ms;

    bool operator==(const SweepParameters&) const = default;
};

struct SweepReport {
    SweepParameters parameters;
    std::vector<SweepRow> rows;

    bool operator==(const SweepReport&) const = default;
};

inline const char* kSkipDegenerate = "degenerate (gcd(k, p-1) = 1)";
inline const char* kSkipNotNegationClosed = "not negation-closed";

// Explore every odd prime p <= max_n and order k in `orders`: classify the
// k-th power residues, skip rows that cannot split the half range, and run
// derive_bound on the rest under the per-instance budget. Exact claims are
// compared against the known-bounds table. A budget exhaustion (or any
// per-instance failure) becomes row content, never aborts the sweep.
inline SweepReport sweep(int max_n, std::vector<int> orders, Budget per_instance,
                         const KnownBoundsTable& bounds, unsigned threads = 1) {
    if (max_n < 3)
        throw std::domain_error("sweep: max_n must be >= 3");
    if (orders.empty())
        throw std::domain_error("sweep: orders must be nonempty");
    std::sort(orders.begin(), orders.end());
    orders.erase(std::unique(orders.begin(), orders.end()), orders.end());
    for (int k : orders)
        if (k < 2 || k > 8)
            throw std::domain_error("sweep: residue orders must lie in 2..8");

    SweepReport report;
    report.parameters.max_n = max_n;
    report.parameters.orders = orders;
    report.parameters.max_nodes = per_instance.max_nodes;
    if (per_instance.max_duration)
        report.parameters.max_duration_ms = per_instance.max_duration->count();

    for (int p = 3; p <= max_n; p += 2) {
        if (!is_prime(static_cast<std::uint64_t>(p)))
            continue;
        for (int k : orders) {
            SweepRow row;
            row.prime = p;
            row.order = k;
            try {
                const ResidueClassification cls = kth_power_residues(p, k);
                row.negation_closed = cls.negation_closed;
                if (cls.degenerate()) {
                    row.skip_reason = kSkipDegenerate;
                } else if (!cls.negation_closed) {
                    row.skip_reason = kSkipNotNegationClosed;
                } else {
                    std::vector<int> s1(cls.connection_set.begin(), cls.connection_set.end());
                    RamseyWitness w = derive_bound(p, std::move(s1), per_instance, threads,
                                                   ConstructionInfo{p, k});
                    row.claim = SweepClaim{w.claimed_p, w.claimed_q, p};
                    row.status = w.verdict;
                    row.stats = SweepStats{
                        w.omega_red.nodes_explored, w.omega_blue.nodes_explored,
                        w.omega_red.elapsed_ms() + w.omega_blue.elapsed_ms()};
                    if (w.verdict == Verdict::Verified) {
                        if (auto best = bounds.lookup(w.claimed_p, w.claimed_q)) {
                            if (p > *best)
                                row.comparison = Comparison::Improves;
                            else if (p == *best)
                                row.comparison = Comparison::Ties;
                            else
                                row.comparison = Comparison::Worse;
                        }
                    }
                }
            } catch (const std::exception& e) {
                row.skip_reason = std::string("failed: ") + e.what();
            }
            report.rows.push_back(std::move(row));
        }
    }
    return report;
}

// --- report serialization --------------------------------------------------

using report_json = nlohmann::ordered_json;

inline report_json report_to_json(const SweepReport& report) {
    report_json j;
    j["format_version"] = 1;
    report_json params;
    params["max_n"] = report.parameters.max_n;
    params["orders"] = report.parameters.orders;
    report_json budget;
    if (report.parameters.max_nodes)
        budget["max_nodes"] = *report.parameters.max_nodes;
    else
        budget["max_nodes"] = nullptr;
    if (report.parameters.max_duration_ms)
        budget["max_duration_ms"] = *report.parameters.max_duration_ms;
    else
        budget["max_duration_ms"] = nullptr;
    params["budget"] = budget;
    j["parameters"] = params;

    report_json rows = report_json::array();
    for (const SweepRow& row : report.rows) {
        report_json r;
        r["prime"] = row.prime;
        r["order"] = row.order;
        r["negation_closed"] = row.negation_closed;
        r["skip_reason"] = row.skip_reason ? report_json(*row.skip_reason) : report_json(nullptr);
        if (row.claim) {
            r["claim"] = report_json{{"p", row.claim->p}, {"q", row.claim->q}, {"n", row.claim->n}};
        } else {
            r["claim"] = nullptr;
        }
        r["status"] = row.status ? report_json(to_string(*row.status)) : report_json(nullptr);
        r["comparison"] = to_string(row.comparison);
        if (row.stats) {
            r["stats"] = report_json{{"nodes_red", row.stats->nodes_red},
                                     {"nodes_blue", row.stats->nodes_blue},
                                     {"elapsed_ms", row.stats->elapsed_ms}};
        } else {
            r["stats"] = nullptr;
        }
        rows.push_back(std::move(r));
    }
    j["rows"] = rows;
    return j;
}

inline void write_report_json(const SweepReport& report, std::ostream& out) {
    out << report_to_json(report).dump(2) << '\n';
}

inline SweepReport report_from_json(const report_json& j) {
    auto bad = [](const std::string& path) { return ParseError("report: bad field at " + path); };
    if (!j.is_object() || !j.contains("parameters") || !j.contains("rows"))
        throw ParseError("report: missing parameters/rows");
    SweepReport report;
    const report_json& params = j["parameters"];
    try {
        report.parameters.max_n = params.at("max_n").get<int>();
        report.parameters.orders = params.at("orders").get<std::vector<int>>();
        const report_json& budget = params.at("budget");
        if (!budget.at("max_nodes").is_null())
            report.parameters.max_nodes = budget.at("max_nodes").get<std::uint64_t>();
        if (!budget.at("max_duration_ms").is_null())
            report.parameters.max_duration_ms = budget.at("max_duration_ms").get<std::int64_t>();
    } catch (const nlohmann::json::exception&) {
        throw bad("/parameters");
    }
    for (std::size_t i = 0; i < j["rows"].size(); ++i) {
        const report_json& r = j["rows"][i];
        const std::string path = "/rows/" + std::to_string(i);
        SweepRow row;
        try {
            row.prime = r.at("prime").get<std::int64_t>();
            row.order = r.at("order").get<int>();
            row.negation_closed = r.at("negation_closed").get<bool>();
            if (!r.at("skip_reason").is_null())
                row.skip_reason = r.at("skip_reason").get<std::string>();
            if (!r.at("claim").is_null()) {
                const report_json& c = r.at("claim");
                row.claim = SweepClaim{c.at("p").get<int>(), c.at("q").get<int>(),
                                       c.at("n").get<int>()};
            }
            if (!r.at("status").is_null()) {
                const std::string s = r.at("status").get<std::string>();
                if (s == "Verified")
                    row.status = Verdict::Verified;
                else if (s == "Refuted")
                    row.status = Verdict::Refuted;
                else if (s == "Inconclusive")
                    row.status = Verdict::Inconclusive;
                else
                    throw bad(path + "/status");
            }
            const std::string cmp = r.at("comparison").get<std::string>();
            if (cmp == "Improves")
                row.comparison = Comparison::Improves;
            else if (cmp == "Ties")
                row.comparison = Comparison::Ties;
            else if (cmp == "Worse")
                row.comparison = Comparison::Worse;
            else if (cmp == "Unknown")
                row.comparison = Comparison::Unknown;
            else
                throw bad(path + "/comparison");
            if (!r.at("stats").is_null()) {
                const report_json& s = r.at("stats");
                row.stats = SweepStats{s.at("nodes_red").get<std::uint64_t>(),
                                       s.at("nodes_blue").get<std::uint64_t>(),
                                       s.at("elapsed_ms").get<std::int64_t>()};
            }
        } catch (const nlohmann::json::exception&) {
            throw bad(path);
        }
        report.rows.push_back(std::move(row));
    }
    return report;
}

inline SweepReport read_report_json(std::istream& in) {
    report_json j;
    try {
        j = report_json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("report is not valid JSON: ") + e.what());
    }
    return report_from_json(j);
}

inline std::string claim_to_string(const SweepClaim& c) {
    return "R(" + std::to_string(c.p) + "," + std::to_string(c.q) + ")>" + std::to_string(c.n);
}

// Fixed-width table, one line per instance, rows sorted by (prime, order).
inline void write_report_table(const SweepReport& report, std::ostream& out) {
    std::vector<const SweepRow*> rows;
    rows.reserve(report.rows.size());
    for (const SweepRow& r : report.rows)
        rows.push_back(&r);
    std::sort(rows.begin(), rows.end(), [](const SweepRow* a, const SweepRow* b) {
        return std::make_pair(a->prime, a->order) < std::make_pair(b->prime, b->order);
    });
    out << std::left << std::setw(7) << "prime" << std::setw(7) << "order" << std::setw(16)
        << "claim" << std::setw(34) << "status" << "comparison" << '\n';
    for (const SweepRow* r : rows) {
        std::string claim = r->claim ? claim_to_string(*r->claim) : "-";
        std::string status = r->skip_reason ? "skipped: " + *r->skip_reason
                                            : (r->status ? to_string(*r->status) : "-");
        std::string cmp = r->claim ? to_string(r->comparison) : "-";
        out << std::left << std::setw(7) << r->prime << std::setw(7) << r->order << std::setw(16)
            << claim << std::setw(34) << status << cmp << '\n';
    }
}

} // namespace ramsey
