#pragma once

#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "ramsey/clique.hpp"
#include "ramsey/errors.hpp"
#include "ramsey/graph.hpp"
#include "ramsey/version.hpp"
#include "ramsey/witness.hpp"

namespace ramsey {

// Machine-checkable record of a RamseyWitness. Canonical form: fixed key
// order, unquoted integers, ascending arrays, UTF-8 with LF endings.

using certificate_json = nlohmann::ordered_json;

namespace detail {

inline SolveStatus status_from_string(const std::string& s, const std::string& path) {
    if (s == "Exact") return SolveStatus::Exact;
    if (s == "LowerBoundOnly") return SolveStatus::LowerBoundOnly;
    if (s == "DecisionSatisfied") return SolveStatus::DecisionSatisfied;
    if (s == "Refuted") return SolveStatus::Refuted;
    throw ParseError("unknown status '" + s + "' at " + path);
}

inline Verdict verdict_from_string(const std::string& s, const std::string& path) {
    if (s == "Verified") return Verdict::Verified;
    if (s == "Refuted") return Verdict::Refuted;
    if (s == "Inconclusive") return Verdict::Inconclusive;
    throw ParseError("unknown verdict '" + s + "' at " + path);
}

inline certificate_json clique_result_to_json(const CliqueResult& r) {
    certificate_json j;
    j["best_size"] = r.best_size;
    j["status"] = to_string(r.status);
    j["witness"] = r.witness; // already ascending
    j["nodes_explored"] = r.nodes_explored;
    j["elapsed_ms"] = r.elapsed_ms();
    return j;
}

inline const certificate_json& require(const certificate_json& j, const std::string& key,
                                       const std::string& path) {
    auto it = j.find(key);
    if (it == j.end())
        throw ParseError("missing field at " + path + "/" + key);
    return *it;
}

template <typename T>
inline T require_as(const certificate_json& j, const std::string& key, const std::string& path) {
    const certificate_json& v = require(j, key, path);
    try {
        return v.get<T>();
    } catch (const nlohmann::json::exception&) {
        throw ParseError("wrong type at " + path + "/" + key);
    }
}

inline CliqueResult clique_result_from_json(const certificate_json& j, const std::string& path) {
    if (!j.is_object())
        throw ParseError("wrong type at " + path);
    CliqueResult r;
    r.best_size = require_as<int>(j, "best_size", path);
    r.status = status_from_string(require_as<std::string>(j, "status", path), path + "/status");
    r.witness = require_as<std::vector<int>>(j, "witness", path);
    r.nodes_explored = require_as<std::uint64_t>(j, "nodes_explored", path);
    r.elapsed = std::chrono::milliseconds(require_as<std::int64_t>(j, "elapsed_ms", path));
    return r;
}

} // namespace detail

inline certificate_json certificate_to_json(const RamseyWitness& w) {
    certificate_json j;
    j["format_version"] = 1;
    j["n"] = w.n;
    j["s1"] = w.s1;
    j["s2"] = w.s2;
    j["claimed_p"] = w.claimed_p;
    j["claimed_q"] = w.claimed_q;
    j["omega_red"] = detail::clique_result_to_json(w.omega_red);
    j["omega_blue"] = detail::clique_result_to_json(w.omega_blue);
    j["verdict"] = to_string(w.verdict);
    if (w.construction) {
        j["construction"] = certificate_json{{"prime", w.construction->prime},
                                             {"order", w.construction->order}};
    } else {
        j["construction"] = nullptr;
    }
    j["tool"] = certificate_json{{"name", kToolName}, {"version", kToolVersion}};
    return j;
}

inline void emit_certificate(const RamseyWitness& w, std::ostream& out) {
    out << certificate_to_json(w).dump(2) << '\n';
}

inline std::string certificate_text(const RamseyWitness& w) {
    std::ostringstream out;
    emit_certificate(w, out);
    return out.str();
}

inline RamseyWitness certificate_from_json(const certificate_json& j) {
    using detail::require_as;
    if (!j.is_object())
        throw ParseError("certificate root must be an object");
    const int version = require_as<int>(j, "format_version", "");
    if (version != 1)
        throw ParseError("unsupported format_version " + std::to_string(version) +
                         " at /format_version");
    RamseyWitness w;
    w.n = require_as<int>(j, "n", "");
    w.s1 = require_as<std::vector<int>>(j, "s1", "");
    w.s2 = require_as<std::vector<int>>(j, "s2", "");
    w.claimed_p = require_as<int>(j, "claimed_p", "");
    w.claimed_q = require_as<int>(j, "claimed_q", "");
    w.omega_red = detail::clique_result_from_json(detail::require(j, "omega_red", ""), "/omega_red");
    w.omega_blue =
        detail::clique_result_from_json(detail::require(j, "omega_blue", ""), "/omega_blue");
    w.verdict = detail::verdict_from_string(require_as<std::string>(j, "verdict", ""), "/verdict");
    const certificate_json& c = detail::require(j, "construction", "");
    if (!c.is_null()) {
        ConstructionInfo info;
        info.prime = detail::require_as<std::int64_t>(c, "prime", "/construction");
        info.order = detail::require_as<int>(c, "order", "/construction");
        w.construction = info;
    }
    return w;
}

inline RamseyWitness parse_certificate(std::istream& in) {
    certificate_json j;
    try {
        j = certificate_json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("certificate is not valid JSON: ") + e.what());
    }
    return certificate_from_json(j);
}

inline RamseyWitness parse_certificate(const std::string& text) {
    std::istringstream in(text);
    return parse_certificate(in);
}

enum class CheckOutcome {
    Agreement,    // every claim in the certificate checks out
    Discrepancy,  // at least one claim is wrong
    Inconclusive, // static checks pass but re-verification ran out of budget
};

inline const char* to_string(CheckOutcome o) {
    switch (o) {
    case CheckOutcome::Agreement: return "Agreement";
    case CheckOutcome::Discrepancy: return "Discrepancy";
    case CheckOutcome::Inconclusive: return "Inconclusive";
    }
    return "?";
}

struct CertificateCheck {
    CheckOutcome outcome = CheckOutcome::Agreement;
    std::vector<std::string> discrepancies;
};

// Independent re-verification of a certificate. Static checks: the sets
// partition the half range, every recorded witness really is a clique of the
// recorded size in its graph, and the verdict is consistent with the
// recorded statuses. A Verified claim is then re-established by re-running
// the two decision searches under the given budget; a Refuted claim is
// already proven by its recorded counterexample clique.
inline CertificateCheck check_certificate(const RamseyWitness& w, Budget budget = {},
                                          unsigned threads = 1) {
    CertificateCheck check;
    auto flag = [&](const std::string& msg) { check.discrepancies.push_back(msg); };

    if (w.n < 1) {
        flag("vertex count must be >= 1");
        check.outcome = CheckOutcome::Discrepancy;
        return check;
    }
    const int half = w.n / 2;
    std::vector<int> membership(static_cast<std::size_t>(half) + 1, 0);
    bool range_ok = true;
    for (const auto* side : {&w.s1, &w.s2}) {
        for (int v : *side) {
            if (v < 1 || v > half) {
                flag("connection set element " + std::to_string(v) + " out of range");
                range_ok = false;
            } else {
                ++membership[static_cast<std::size_t>(v)];
            }
        }
    }
    if (range_ok) {
        for (int v = 1; v <= half; ++v) {
            if (membership[static_cast<std::size_t>(v)] == 0)
                flag("partition incomplete: element " + std::to_string(v) +
                     " missing from s1 and s2");
            else if (membership[static_cast<std::size_t>(v)] > 1)
                flag("partition overlap: element " + std::to_string(v) + " on both sides");
        }
    }

    if (check.discrepancies.empty()) {
        const DenseGraph red = build_circulant(w.n, w.s1).adjacency();
        const DenseGraph blue = build_circulant(w.n, w.s2).adjacency();

        auto check_side = [&](const CliqueResult& r, const DenseGraph& g, const char* name) {
            if (static_cast<int>(r.witness.size()) != r.best_size)
                flag(std::string(name) + ": witness size does not match best_size");
            if (!is_clique(g, r.witness))
                flag(std::string(name) + ": witness not a clique");
        };
        check_side(w.omega_red, red, "omega_red");
        check_side(w.omega_blue, blue, "omega_blue");

        switch (w.verdict) {
        case Verdict::Verified:
            if (w.omega_red.status != SolveStatus::Exact ||
                w.omega_blue.status != SolveStatus::Exact)
                flag("verdict Verified requires Exact statuses on both sides");
            if (w.omega_red.best_size > w.claimed_p - 1)
                flag("verdict Verified but omega_red exceeds claimed_p - 1");
            if (w.omega_blue.best_size > w.claimed_q - 1)
                flag("verdict Verified but omega_blue exceeds claimed_q - 1");
            break;
        case Verdict::Refuted: {
            const bool red_hit = w.omega_red.status == SolveStatus::DecisionSatisfied &&
                                 w.omega_red.best_size >= w.claimed_p;
            const bool blue_hit = w.omega_blue.status == SolveStatus::DecisionSatisfied &&
                                  w.omega_blue.best_size >= w.claimed_q;
            if (!red_hit && !blue_hit)
                flag("verdict Refuted but no side records a counterexample clique");
            break;
        }
        case Verdict::Inconclusive:
            if (w.omega_red.status != SolveStatus::LowerBoundOnly &&
                w.omega_blue.status != SolveStatus::LowerBoundOnly)
                flag("verdict Inconclusive but neither side ran out of budget");
            break;
        }
    }

    if (!check.discrepancies.empty()) {
        check.outcome = CheckOutcome::Discrepancy;
        return check;
    }

    // The recorded counterexample already proves a Refuted verdict, and an
    // Inconclusive certificate claims nothing further; only Verified needs
    // the searches re-run.
    if (w.verdict == Verdict::Verified) {
        RamseyWitness fresh = verify_witness(w.n, w.s1, w.claimed_p, w.claimed_q, budget, threads);
        if (fresh.verdict == Verdict::Refuted) {
            flag("claim refuted on re-verification: a forbidden clique exists");
            check.outcome = CheckOutcome::Discrepancy;
            return check;
        }
        if (fresh.verdict == Verdict::Inconclusive) {
            check.outcome = CheckOutcome::Inconclusive;
            return check;
        }
    }
    check.outcome = CheckOutcome::Agreement;
    return check;
}

inline CertificateCheck check_certificate(std::istream& in, Budget budget = {},
                                          unsigned threads = 1) {
    return check_certificate(parse_certificate(in), budget, threads);
}

} // namespace ramsey
