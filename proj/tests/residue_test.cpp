#include <catch2/catch.hpp>

#include <numeric>
#include <set>

#include "ramsey/residue.hpp"

using namespace ramsey;

TEST_CASE("mod_pow basics") {
    CHECK(mod_pow(3, 0, 7) == 1);
    CHECK(mod_pow(2, 4, 17) == 16);
    CHECK(mod_pow(5, 312, 313) == 1); // Fermat: 313 is prime
    CHECK(mod_pow(-2, 3, 7) == 6);    // (-8) mod 7
    CHECK(mod_pow(10, 18, 2147483647) == mod_pow(10, 18, 2147483647));
    CHECK_THROWS_AS(mod_pow(2, 3, 1), std::domain_error);
    CHECK_THROWS_AS(mod_pow(2, 3, 0), std::domain_error);
    CHECK_THROWS_AS(mod_pow(2, 3, (std::int64_t{1} << 31) + 1), std::domain_error);
}

TEST_CASE("mod_pow against repeated multiplication") {
    for (std::int64_t m : {2, 3, 17, 101, 65537}) {
        for (std::int64_t b = 0; b < 12; ++b) {
            std::int64_t direct = 1 % m;
            for (unsigned e = 0; e <= 20; ++e) {
                CHECK(mod_pow(b, e, m) == direct);
                direct = direct * (b % m) % m;
            }
        }
    }
}

TEST_CASE("is_prime exact answers") {
    CHECK(is_prime(313));
    CHECK(is_prime(457));
    CHECK_FALSE(is_prime(1));
    CHECK(is_prime(2));
    CHECK(is_prime(3));
    CHECK_FALSE(is_prime(0));
    CHECK_FALSE(is_prime(561));        // Carmichael
    CHECK_FALSE(is_prime(3215031751)); // strong pseudoprime to bases 2,3,5,7
    CHECK(is_prime(2147483647));       // 2^31 - 1
    CHECK(is_prime(2305843009213693951ull)); // 2^61 - 1
    CHECK_FALSE(is_prime((std::uint64_t{1} << 62)));
    CHECK_FALSE(is_prime(2305843009213693951ull * 2));

    // cross-check against a sieve
    std::vector<char> composite(2000, 0);
    for (std::size_t i = 2; i < composite.size(); ++i)
        for (std::size_t j = i * i; j < composite.size(); j += i)
            composite[j] = 1;
    for (std::size_t i = 1; i < composite.size(); ++i)
        CHECK(is_prime(i) == (i >= 2 && !composite[i]));
}

TEST_CASE("quadratic residues mod 17") {
    const auto cls = kth_power_residues(17, 2);
    CHECK(cls.effective_index == 2);
    CHECK(cls.residues_full == std::vector<std::int64_t>{1, 2, 4, 8, 9, 13, 15, 16});
    CHECK(cls.negation_closed);
    CHECK(cls.connection_set == std::vector<std::int64_t>{1, 2, 4, 8});
    CHECK_FALSE(cls.degenerate());
}

TEST_CASE("quartic residues mod 13 are not negation-closed") {
    const auto cls = kth_power_residues(13, 4);
    CHECK(cls.residues_full == std::vector<std::int64_t>{1, 3, 9});
    CHECK_FALSE(cls.negation_closed);
    CHECK(cls.connection_set.empty());
    CHECK_THROWS_WITH(partition_half_range(cls),
                      Catch::Contains("connection set not symmetric"));
}

TEST_CASE("quartic residues mod 313 and 457 have the right shape") {
    const auto a = kth_power_residues(313, 4);
    CHECK(a.effective_index == 4);
    CHECK(a.residues_full.size() == 78);
    CHECK(a.negation_closed);
    CHECK(a.connection_set.size() == 39);
    CHECK(a.connection_set.front() == 1);
    CHECK(a.connection_set.back() == 150);

    const auto b = kth_power_residues(457, 4);
    CHECK(b.residues_full.size() == 114);
    CHECK(b.connection_set.size() == 57);
    CHECK(b.connection_set.back() == 227);
}

TEST_CASE("degenerate classification when gcd(k, p-1) = 1") {
    const auto cls = kth_power_residues(7, 5);
    CHECK(cls.effective_index == 1);
    CHECK(cls.degenerate());
    CHECK(cls.residues_full.size() == 6);
    CHECK(cls.negation_closed); // -1 is trivially in the full unit group
    CHECK(cls.connection_set == std::vector<std::int64_t>{1, 2, 3});
}

TEST_CASE("kth_power_residues rejects bad inputs") {
    CHECK_THROWS_AS(kth_power_residues(12, 2), std::domain_error);
    CHECK_THROWS_AS(kth_power_residues(2, 2), std::domain_error);
    CHECK_THROWS_AS(kth_power_residues(17, 1), std::domain_error);
    CHECK_THROWS_AS(kth_power_residues(17, 0), std::domain_error);
}

TEST_CASE("partition_half_range splits the half range") {
    const auto quad17 = kth_power_residues(17, 2);
    const auto [s1, s2] = partition_half_range(quad17);
    CHECK(s1 == std::vector<std::int64_t>{1, 2, 4, 8});
    CHECK(s2 == std::vector<std::int64_t>{3, 5, 6, 7});

    const auto quad5 = kth_power_residues(5, 2);
    const auto [a, b] = partition_half_range(quad5);
    CHECK(a == std::vector<std::int64_t>{1});
    CHECK(b == std::vector<std::int64_t>{2});

    const auto quart313 = kth_power_residues(313, 4);
    const auto [p1, p2] = partition_half_range(quart313);
    CHECK(p1.size() == 39);
    CHECK(p2.size() == 117);
}

TEST_CASE("residue subgroup properties for all primes up to 1000") {
    std::vector<int> primes;
    for (int p = 3; p <= 1000; ++p)
        if (is_prime(static_cast<std::uint64_t>(p)))
            primes.push_back(p);

    for (int p : primes) {
        for (int k = 2; k <= 8; ++k) {
            const auto cls = kth_power_residues(p, k);
            const std::int64_t d = std::gcd(static_cast<std::int64_t>(k),
                                            static_cast<std::int64_t>(p) - 1);
            REQUIRE(cls.effective_index == d);
            // subgroup order
            REQUIRE(static_cast<std::int64_t>(cls.residues_full.size()) * d == p - 1);
            // the two negation-closure definitions agree
            const bool parity_closed = ((p - 1) / d) % 2 == 0;
            REQUIRE(cls.negation_closed == parity_closed);
            if (cls.negation_closed) {
                std::set<std::int64_t> members(cls.residues_full.begin(),
                                               cls.residues_full.end());
                for (std::int64_t r : cls.residues_full)
                    REQUIRE(members.count(p - r) == 1);
                // connection set is the min(r, p-r) reduction
                REQUIRE(cls.connection_set.size() == cls.residues_full.size() / 2);
                const auto [s1, s2] = partition_half_range(cls);
                std::vector<char> seen(static_cast<std::size_t>((p - 1) / 2) + 1, 0);
                for (std::int64_t v : s1) {
                    REQUIRE(!seen[static_cast<std::size_t>(v)]);
                    seen[static_cast<std::size_t>(v)] = 1;
                }
                for (std::int64_t v : s2) {
                    REQUIRE(!seen[static_cast<std::size_t>(v)]);
                    seen[static_cast<std::size_t>(v)] = 1;
                }
                for (int v = 1; v <= (p - 1) / 2; ++v)
                    REQUIRE(seen[static_cast<std::size_t>(v)] == 1);
            } else {
                REQUIRE(cls.connection_set.empty());
            }
        }
    }
}

TEST_CASE("residues are multiplicatively closed (primes up to 200)") {
    for (int p = 3; p <= 200; ++p) {
        if (!is_prime(static_cast<std::uint64_t>(p)))
            continue;
        for (int k = 2; k <= 8; ++k) {
            const auto cls = kth_power_residues(p, k);
            std::set<std::int64_t> members(cls.residues_full.begin(), cls.residues_full.end());
            REQUIRE(members.count(1) == 1);
            for (std::int64_t a : cls.residues_full)
                for (std::int64_t b : cls.residues_full)
                    REQUIRE(members.count(a * b % p) == 1);
        }
    }
}
