#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "ramsey/clique.hpp"
#include "ramsey/graph.hpp"

namespace ramsey {

enum class Verdict { Verified, Refuted, Inconclusive };

inline const char* to_string(Verdict v) {
    switch (v) {
    case Verdict::Verified: return "Verified";
    case Verdict::Refuted: return "Refuted";
    case Verdict::Inconclusive: return "Inconclusive";
    }
    return "?";
}

// Provenance of a connection set derived from power residues.
struct ConstructionInfo {
    std::int64_t prime = 0;
    int order = 0;

    bool operator==(const ConstructionInfo&) const = default;
};

// A checked claim R(p,q) > n: the half range {1..n/2} is split into s1/s2,
// the red graph G_n(s1) was searched for a K_p and the blue graph G_n(s2)
// for a K_q, and the verdict records what the searches established.
struct RamseyWitness {
    int n = 0;
    std::vector<int> s1;
    std::vector<int> s2;
    int claimed_p = 0;
    int claimed_q = 0;
    CliqueResult omega_red;
    CliqueResult omega_blue;
    Verdict verdict = Verdict::Inconclusive;
    std::optional<ConstructionInfo> construction;
};

namespace detail {

// A completed decision search is an exact statement about the clique
// number, so store it as such in the witness.
inline CliqueResult finalize_side(CliqueResult r) {
    if (r.status == SolveStatus::Refuted)
        r.status = SolveStatus::Exact;
    return r;
}

} // namespace detail

// Verify the claim R(claimed_p, claimed_q) > n for the coloring of K_n given
// by s1 (red) and its half-range complement (blue). Runs the cheap decision
// searches rather than full clique numbers: the claim only needs the upper
// bounds omega_red < claimed_p and omega_blue < claimed_q.
inline RamseyWitness verify_witness(int n, std::vector<int> s1, int claimed_p, int claimed_q,
                                    Budget budget = {}, unsigned threads = 1,
                                    std::optional<ConstructionInfo> construction = {}) {
    if (claimed_p < 2 || claimed_q < 2)
        throw std::domain_error("verify_witness: claimed clique sizes must be >= 2");

    RamseyWitness w;
    w.n = n;
    w.claimed_p = claimed_p;
    w.claimed_q = claimed_q;
    w.construction = std::move(construction);

    CirculantGraph red = build_circulant(n, std::move(s1));
    w.s1 = red.connection_set();
    w.s2 = complement_set(n, w.s1);
    CirculantGraph blue = build_circulant(n, w.s2);

    w.omega_red = detail::finalize_side(has_clique_of_size(red.adjacency(), claimed_p, budget, threads));
    w.omega_blue = detail::finalize_side(has_clique_of_size(blue.adjacency(), claimed_q, budget, threads));

    const bool red_hit = w.omega_red.status == SolveStatus::DecisionSatisfied;
    const bool blue_hit = w.omega_blue.status == SolveStatus::DecisionSatisfied;
    if (red_hit || blue_hit)
        w.verdict = Verdict::Refuted;
    else if (w.omega_red.status == SolveStatus::Exact && w.omega_blue.status == SolveStatus::Exact)
        w.verdict = Verdict::Verified;
    else
        w.verdict = Verdict::Inconclusive;
    return w;
}

// Compute both clique numbers in full and report the strongest claim the
// partition supports: R(omega_red + 1, omega_blue + 1) > n. The blue clique
// number is the independence number of the red graph, so this is exactly the
// (p,q) pair the coloring witnesses.
inline RamseyWitness derive_bound(int n, std::vector<int> s1, Budget budget = {},
                                  unsigned threads = 1,
                                  std::optional<ConstructionInfo> construction = {}) {
    RamseyWitness w;
    w.n = n;
    w.construction = std::move(construction);

    CirculantGraph red = build_circulant(n, std::move(s1));
    w.s1 = red.connection_set();
    w.s2 = complement_set(n, w.s1);
    CirculantGraph blue = build_circulant(n, w.s2);

    w.omega_red = max_clique(red.adjacency(), budget, threads);
    w.omega_blue = max_clique(blue.adjacency(), budget, threads);
    w.claimed_p = w.omega_red.best_size + 1;
    w.claimed_q = w.omega_blue.best_size + 1;
    w.verdict = (w.omega_red.status == SolveStatus::Exact &&
                 w.omega_blue.status == SolveStatus::Exact)
                    ? Verdict::Verified
                    : Verdict::Inconclusive;
    return w;
}

} // namespace ramsey
