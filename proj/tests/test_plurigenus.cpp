#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"
#include "pluri/plurigenus.hpp"

#include <random>
#include <stdexcept>

using pluri::Basket;
using pluri::CanonicalInvariants;
using pluri::Int;
using pluri::QuotientSingularity;
using pluri::Rat;

namespace {

Basket random_basket(std::mt19937_64& rng, std::int64_t r_max, int n_max) {
    Basket b;
    int n = std::uniform_int_distribution<int>(0, n_max)(rng);
    for (int i = 0; i < n; ++i) {
        std::int64_t r = std::uniform_int_distribution<std::int64_t>(2, r_max)(rng);
        std::int64_t a;
        do {
            a = std::uniform_int_distribution<std::int64_t>(1, r - 1)(rng);
        } while (std::gcd(a, r) != 1);
        b.add(QuotientSingularity(r, a));
    }
    return b;
}

Rat random_rat(std::mt19937_64& rng) {
    return Rat(std::uniform_int_distribution<std::int64_t>(-500, 500)(rng),
               std::uniform_int_distribution<std::int64_t>(1, 60)(rng));
}

// Formula evaluated by hand from the brute-force contribution oracle.
Rat oracle_chi(const Rat& k3, std::int64_t chi, const Basket& b, std::int64_t m) {
    Rat total = Rat((2 * m - 1) * m * (m - 1), 12) * k3 - Rat((2 * m - 1) * chi);
    for (const auto& [q, count] : b.entries()) {
        total += Rat(count) * oracle::brute_contribution(q.r().convert_to<std::int64_t>(),
                                                         q.a().convert_to<std::int64_t>(), m);
    }
    return total;
}

}  // namespace

TEST_CASE("chi_mK examples") {
    CanonicalInvariants inv{Rat(2), 1, Basket{}};
    CHECK(pluri::chi_mK(inv, 0) == Rat(1));
    CHECK(pluri::chi_mK(inv, 1) == Rat(-1));
    CHECK(pluri::chi_mK(inv, 2) == Rat(-2));
    CHECK_THROWS_AS(pluri::chi_mK(inv, -1), std::domain_error);

    CanonicalInvariants y{Rat(1, 26), 1, pluri::parse_basket("26,1")};
    CHECK(pluri::chi_mK(y, 13) == Rat(14));
}

TEST_CASE("h0_ample") {
    CanonicalInvariants y{Rat(1, 26), 1, pluri::parse_basket("26,1")};
    CHECK(pluri::h0_ample(y, 13) == Rat(14));
    CHECK(pluri::h0_ample(CanonicalInvariants{Rat(2), -1, Basket{}}, 2) == Rat(4));
    CHECK_THROWS_AS(pluri::h0_ample(CanonicalInvariants{Rat(1), 1, Basket{}}, 1), std::domain_error);
    CHECK_THROWS_AS(pluri::h0_ample(CanonicalInvariants{Rat(0), 1, Basket{}}, 3), std::domain_error);
    CHECK_THROWS_AS(pluri::h0_ample(CanonicalInvariants{Rat(-1, 2), 1, Basket{}}, 3),
                    std::domain_error);
}

TEST_CASE("integrality_check") {
    CHECK(pluri::integrality_check({Rat(1), 1, Basket{}}, 2) == std::vector<Int>{2});
    CHECK(pluri::integrality_check({Rat(2), 1, Basket{}}, 2).empty());
    CHECK(pluri::integrality_check({Rat(7, 13), 5, pluri::parse_basket("13,5")}, 1).empty());
    CHECK(pluri::integrality_check({Rat(1), 1, Basket{}}, 0).empty());
}

TEST_CASE("plurigenus_table") {
    auto rows = pluri::plurigenus_table({Rat(2), 1, Basket{}}, 2);
    REQUIRE(rows.size() == 3);
    CHECK(rows[0] == std::pair<Int, Rat>{0, Rat(1)});
    CHECK(rows[1] == std::pair<Int, Rat>{1, Rat(-1)});
    CHECK(rows[2] == std::pair<Int, Rat>{2, Rat(-2)});

    auto single = pluri::plurigenus_table({Rat(5, 3), 4, pluri::parse_basket("3,1")}, 0);
    REQUIRE(single.size() == 1);
    CHECK(single[0].second == Rat(4));

    auto y = pluri::plurigenus_table({Rat(1, 26), 1, pluri::parse_basket("26,1")}, 13);
    CHECK(y.back() == std::pair<Int, Rat>{13, Rat(14)});

    CHECK(pluri::table_to_tsv(rows) == "m\tvalue\n0\t1\n1\t-1\n2\t-2\n");
    CHECK(pluri::table_to_json(rows) ==
          R"({"table":[{"m":"0","value":"1"},{"m":"1","value":"-1"},{"m":"2","value":"-2"}]})");
}

TEST_CASE("chi_mK matches the oracle evaluation") {
    std::mt19937_64 rng(11);
    for (int i = 0; i < 100; ++i) {
        Rat k3 = random_rat(rng);
        std::int64_t chi = std::uniform_int_distribution<std::int64_t>(-5, 5)(rng);
        Basket b = random_basket(rng, 20, 4);
        for (std::int64_t m = 0; m <= 25; ++m) {
            REQUIRE(pluri::chi_mK({k3, chi, b}, m) == oracle_chi(k3, chi, b, m));
        }
    }
}

TEST_CASE("endpoint identities, basket additivity and affine scaling") {
    std::mt19937_64 rng(12);
    for (int i = 0; i < 200; ++i) {
        Rat k3 = random_rat(rng);
        Int chi = std::uniform_int_distribution<std::int64_t>(-10, 10)(rng);
        Basket b1 = random_basket(rng, 30, 3);
        Basket b2 = random_basket(rng, 30, 3);
        CanonicalInvariants inv{k3, chi, b1};
        CHECK(pluri::chi_mK(inv, 0) == Rat(chi));
        CHECK(pluri::chi_mK(inv, 1) == Rat(-chi));

        std::int64_t m = std::uniform_int_distribution<std::int64_t>(0, 40)(rng);
        CanonicalInvariants joined{k3, chi, b1 + b2};
        CHECK(pluri::chi_mK(joined, m) == pluri::chi_mK(inv, m) + pluri::contribution(b2, m));

        // affine in k3: three points on a line with slope (2m-1)m(m-1)/12
        Rat f0 = pluri::chi_mK({Rat(0), chi, b1}, m);
        Rat f1 = pluri::chi_mK({Rat(1), chi, b1}, m);
        Rat f2 = pluri::chi_mK({Rat(2), chi, b1}, m);
        CHECK(f1 - f0 == Rat((2 * m - 1) * m * (m - 1), 12));
        CHECK(f2 - f1 == f1 - f0);
        CHECK(pluri::chi_mK(inv, m) == f0 + (f1 - f0) * k3);
        // affine in chi with slope -(2m-1)
        Rat g0 = pluri::chi_mK({k3, 0, b1}, m);
        Rat g1 = pluri::chi_mK({k3, 1, b1}, m);
        Rat g2 = pluri::chi_mK({k3, 2, b1}, m);
        CHECK(g1 - g0 == Rat(-(2 * m - 1)));
        CHECK(g2 - g1 == g1 - g0);
    }
}

TEST_CASE("lower bound on h0(13C K) when the basket holds 1/26C(1,-1,1)") {
    std::mt19937_64 rng(13);
    for (std::int64_t C = 1; C <= 3; ++C) {
        const Rat bound(52 * C * C - 15 * C - 1, 24);
        for (int i = 0; i < 60; ++i) {
            Basket b = random_basket(rng, 12, 3);
            b.add(QuotientSingularity(26 * C, 1));
            Rat k3(std::uniform_int_distribution<std::int64_t>(1, 400)(rng),
                   std::uniform_int_distribution<std::int64_t>(1, 2000)(rng));
            Int chi = std::uniform_int_distribution<std::int64_t>(-6, C)(rng);
            Rat h0 = pluri::h0_ample({k3, chi, b}, 13 * C);
            CHECK(h0 >= bound);
            CHECK(h0 > Rat(1));
        }
        // tight case: chi = C, K^3 -> 0 limit has the basket term alone
        Rat edge = pluri::chi_mK({Rat(0), C, pluri::parse_basket(std::to_string(26 * C) + ",1")},
                                 13 * C);
        CHECK(edge == bound);
    }
}
