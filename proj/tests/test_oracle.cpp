#include <doctest.h>

#include "bethe/configs.hpp"
#include "bethe/errors.hpp"
#include "bethe/oracle.hpp"
#include "oracles.hpp"

using namespace bethe;
using namespace bethe::oracle;

TEST_SUITE("oracle") {

TEST_CASE("weight counts") {
    std::vector<int> mu(5, 2);
    CHECK(weight_count(mu, 0) == 1);
    CHECK(weight_count(mu, 5) == 51);
    CHECK(weight_count(mu, -1) == 0);
    CHECK(weight_count(mu, 11) == 0);
    Integer total = 0;
    for (long w = 0; w <= 10; ++w) total += weight_count(mu, w);
    CHECK(total == 243);
}

TEST_CASE("property: weight counts against tuple enumeration") {
    for (int trial = 0; trial < 100; ++trial) {
        std::vector<int> mu(oracle_ref::uniform(1, 5));
        for (auto& a : mu) a = oracle_ref::uniform(1, 4);
        long N = 0;
        for (int a : mu) N += a;
        auto ch = oracle_ref::character(mu);
        for (long w = 0; w <= N; ++w) {
            CHECK(weight_count(mu, w) == oracle_ref::brute_weight_count(mu, w));
            CHECK(weight_count(mu, w) == ch[w]);
        }
    }
}

TEST_CASE("multiplicities") {
    std::vector<int> mu(5, 2);
    std::vector<long> expect{1, 4, 10, 15, 15, 6};
    for (long l = 0; l <= 5; ++l) CHECK(sl2_multiplicity(mu, l) == expect[l]);
    CHECK_THROWS_AS(sl2_multiplicity(mu, 6), PreconditionError);
    CHECK_THROWS_AS(sl2_multiplicity(mu, -1), PreconditionError);
}

TEST_CASE("property: multiplicities equal XXX counts for every composition up to 12") {
    long cases = 0;
    for (const auto& c : oracle_ref::all_chains(12)) {
        std::vector<int> mu;
        for (auto [two_s, n] : c.species)
            for (long i = 0; i < n; ++i) mu.push_back(static_cast<int>(two_s));
        long N = 0;
        for (int a : mu) N += a;
        for (long l = 0; 2 * l <= N; ++l) {
            REQUIRE(sl2_multiplicity(mu, l) == configs::count_xxx(l, mu));
            ++cases;
        }
    }
    CHECK(cases > 500);
}

TEST_CASE("XXX completeness") {
    auto r = check_completeness_xxx(spectral::parse_chain("2x5"));
    CHECK(r.lhs_total == 243);
    CHECK(r.matched);
    CHECK(r.per_l.size() == 6);
    CHECK(check_completeness_xxx(spectral::parse_chain("3x5")).weighted_sum == 1024);
    auto one = check_completeness_xxx(spectral::parse_chain("4x1"));
    CHECK(one.weighted_sum == 5);
    CHECK(one.matched);
}

TEST_CASE("XXZ completeness") {
    auto r = check_completeness_xxz(ts::compute_ts(6), spectral::parse_chain("3x5"));
    CHECK(r.lhs_total == 1024);
    CHECK(r.weighted_sum == 1024);
    CHECK(r.per_l[5].count == 101);
    CHECK(r.matched);
    CHECK(check_completeness_xxz(ts::compute_ts(6), spectral::parse_chain("2x3")).weighted_sum == 27);
    auto small = check_completeness_xxz(ts::compute_ts(2), spectral::parse_chain("1x1"));
    CHECK(small.weighted_sum == 2);
    CHECK(small.matched);
}

}
