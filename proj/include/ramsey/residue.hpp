#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace ramsey {

// Largest modulus the modular-arithmetic helpers accept. Reduced values are
// below 2^31, so a product of two of them fits comfortably in 64 bits.
inline constexpr std::int64_t kMaxModulus = std::int64_t{1} << 31;

// base^exponent mod modulus by binary exponentiation.
inline std::int64_t mod_pow(std::int64_t base, std::uint64_t exponent, std::int64_t modulus) {
    if (modulus < 2)
        throw std::domain_error("mod_pow: modulus must be >= 2");
    if (modulus > kMaxModulus)
        throw std::domain_error("mod_pow: modulus exceeds 2^31");
    std::int64_t b = base % modulus;
    if (b < 0)
        b += modulus;
    std::int64_t acc = 1;
    while (exponent != 0) {
        if (exponent & 1)
            acc = acc * b % modulus;
        b = b * b % modulus;
        exponent >>= 1;
    }
    return acc;
}

namespace detail {

inline std::uint64_t mul_mod_u64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

inline std::uint64_t pow_mod_u64(std::uint64_t base, std::uint64_t exponent, std::uint64_t m) {
    std::uint64_t acc = 1 % m;
    base %= m;
    while (exponent != 0) {
        if (exponent & 1)
            acc = mul_mod_u64(acc, base, m);
        base = mul_mod_u64(base, base, m);
        exponent >>= 1;
    }
    return acc;
}

} // namespace detail

// Deterministic Miller-Rabin. The witness set below decides primality
// exactly for every n < 3.3 * 10^24, which covers the whole uint64 range.
inline bool is_prime(std::uint64_t n) {
    if (n < 2)
        return false;
    for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % p == 0)
            return n == p;
    }
    std::uint64_t d = n - 1;
    int r = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++r;
    }
    for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        std::uint64_t x = detail::pow_mod_u64(a, d, n);
        if (x == 1 || x == n - 1)
            continue;
        bool composite = true;
        for (int i = 1; i < r; ++i) {
            x = detail::mul_mod_u64(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite)
            return false;
    }
    return true;
}

// The k-th power residues mod an odd prime p, together with their reduction
// to the half range {1..(p-1)/2}. The residues form the subgroup
// {x^k : x in Z_p*} of index d = gcd(k, p-1). The half-range reduction is
// well defined only when -1 lies in the subgroup (negation_closed): then
// residues pair up as {r, p-r} and the connection set keeps min(r, p-r).
struct ResidueClassification {
    std::int64_t prime = 0;
    int order = 0;
    std::int64_t effective_index = 0;          // gcd(order, prime-1)
    std::vector<std::int64_t> residues_full;   // ascending, subset of {1..p-1}
    std::vector<std::int64_t> connection_set;  // ascending, empty unless negation_closed
    bool negation_closed = false;

    // gcd(k, p-1) = 1 makes the subgroup the whole unit group; such
    // classifications split nothing and sweeps skip them.
    bool degenerate() const { return effective_index == 1; }
};

inline ResidueClassification kth_power_residues(std::int64_t p, int k) {
    if (k < 2)
        throw std::domain_error("kth_power_residues: order must be >= 2");
    if (p < 3 || p > kMaxModulus || !is_prime(static_cast<std::uint64_t>(p)))
        throw std::domain_error("kth_power_residues: " + std::to_string(p) +
                                " is not an odd prime below 2^31");

    ResidueClassification out;
    out.prime = p;
    out.order = k;
    out.effective_index = std::gcd(static_cast<std::int64_t>(k), p - 1);

    std::vector<char> member(static_cast<std::size_t>(p), 0);
    for (std::int64_t x = 1; x < p; ++x)
        member[static_cast<std::size_t>(mod_pow(x, static_cast<std::uint64_t>(k), p))] = 1;

    out.residues_full.reserve(static_cast<std::size_t>((p - 1) / out.effective_index));
    for (std::int64_t r = 1; r < p; ++r)
        if (member[static_cast<std::size_t>(r)])
            out.residues_full.push_back(r);

    out.negation_closed = member[static_cast<std::size_t>(p - 1)] != 0;
    if (out.negation_closed) {
        for (std::int64_t r : out.residues_full) {
            if (r <= (p - 1) / 2)
                out.connection_set.push_back(r);
        }
    }
    return out;
}

// Split {1..(p-1)/2} into the connection set S1 and its complement S2.
// Refused when the residues are not negation-closed: the pairs {d, p-d}
// would straddle S1/S2 and the two circulant graphs would not partition K_p.
inline std::pair<std::vector<std::int64_t>, std::vector<std::int64_t>>
partition_half_range(const ResidueClassification& classification) {
    if (!classification.negation_closed)
        throw std::domain_error(
            "connection set not symmetric; -1 is not a k-th power residue mod " +
            std::to_string(classification.prime));
    const std::int64_t half = (classification.prime - 1) / 2;
    std::vector<char> in_s1(static_cast<std::size_t>(half) + 1, 0);
    for (std::int64_t r : classification.connection_set)
        in_s1[static_cast<std::size_t>(r)] = 1;
    std::vector<std::int64_t> s2;
    s2.reserve(static_cast<std::size_t>(half) - classification.connection_set.size());
    for (std::int64_t v = 1; v <= half; ++v)
        if (!in_s1[static_cast<std::size_t>(v)])
            s2.push_back(v);
    return {classification.connection_set, std::move(s2)};
}

} // namespace ramsey
