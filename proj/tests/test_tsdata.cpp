#include <doctest.h>

#include "bethe/errors.hpp"
#include "bethe/tsdata.hpp"

using namespace bethe;
using namespace bethe::ts;

namespace {

const char* kSweep[] = {"2", "3", "4", "5", "6", "7", "8", "5/2", "7/3", "16/7", "9/4", "11/4", "13/5", "17/6", "23/9", "31/11", "3/2", "7/5"};

std::vector<long> as_longs(const std::vector<Integer>& v) {
    std::vector<long> r;
    for (const auto& x : v) r.push_back(x.get_si());
    return r;
}

}  // namespace

TEST_SUITE("tsdata") {

TEST_CASE("sixteen sevenths") {
    auto t = compute_ts(Rational(16, 7));
    CHECK(t.alpha == 2);
    CHECK(t.nu == std::vector<long>{2, 3, 2});
    CHECK(t.m == std::vector<long>{0, 2, 5, 7});
    CHECK(as_longs(t.y_) == std::vector<long>{0, 1, 2, 7, 16});
    CHECK(as_longs(t.z_) == std::vector<long>{0, 1, 3, 7});
    REQUIRE(t.p0_bar);
    CHECK(*t.p0_bar == Rational(7, 3));
    // The four linear branches of n_j.
    for (long j = 0; j < 2; ++j) CHECK(n_of(t, j) == j);
    for (long j = 2; j < 5; ++j) CHECK(n_of(t, j) == 1 + 2 * (j - 2));
    for (long j = 5; j < 7; ++j) CHECK(n_of(t, j) == 2 + 7 * (j - 5));
    for (long j = 7; j < 12; ++j) CHECK(n_of(t, j) == 7 + 16 * (j - 7));
    CHECK(r_of(t, 3) == 1);
    CHECK(r_of(t, 0) == 0);
    CHECK(r_of(t, 7) == 3);
}

TEST_CASE("integer p0") {
    auto t = compute_ts(3);
    CHECK(t.alpha == 0);
    CHECK(t.nu == std::vector<long>{3});
    CHECK(t.m == std::vector<long>{0, 3});
    CHECK(t.y(0) == 1);
    CHECK(t.y(1) == 3);
    CHECK(t.z(0) == 1);
    CHECK_FALSE(t.p0_bar);
    auto six = compute_ts(6);
    CHECK(r_of(six, 6) == 1);
    for (long p0 = 2; p0 <= 10; ++p0) {
        auto u = compute_ts(p0);
        CHECK(n_of(u, p0) == 1);
        for (long j = 0; j < p0; ++j) CHECK(q_of(u, j) == p0 - j);
        CHECK(q_of(u, p0) == -1);
    }
}

TEST_CASE("p0 = 1 is accepted, p0 < 1 rejected") {
    auto t = compute_ts(1);
    CHECK(t.alpha == 0);
    CHECK(t.nu == std::vector<long>{1});
    CHECK(t.m == std::vector<long>{0, 1});
    CHECK(t.y(1) == 1);
    CHECK_THROWS_AS(compute_ts(Rational(1, 2)), PreconditionError);
    CHECK_THROWS_AS(compute_ts(0), PreconditionError);
}

TEST_CASE("n_of domain and segment values") {
    auto t = compute_ts(Rational(16, 7));
    CHECK_THROWS_AS(n_of(t, -1), PreconditionError);
    for (int i = 0; i <= t.alpha + 1; ++i) CHECK(n_of(t, t.m[i]) == t.y(i - 1));
}

TEST_CASE("n_of jumps at segment ends") {
    // Approaching m_{i+1} along segment i gives y_{i+1}; the value there is y_i.
    for (const char* s : kSweep) {
        auto t = compute_ts(parse_rational(s));
        for (int i = 0; i <= t.alpha; ++i) {
            CHECK(n_on_segment(t, i, t.m[i + 1]) == t.y(i + 1));
            CHECK(n_of(t, t.m[i + 1]) == t.y(i));
        }
    }
}

TEST_CASE("q_of") {
    auto t = compute_ts(Rational(16, 7));
    for (int i = 0; i <= t.alpha; ++i) CHECK(q_of(t, t.m[i]) == (i % 2 ? Rational(-t.p[i]) : t.p[i]));
    CHECK_THROWS_AS(q_of(t, -1), PreconditionError);
    CHECK_THROWS_AS(q_of(t, 8), PreconditionError);
    CHECK_NOTHROW(q_of(t, Rational(15, 2)));
}

TEST_CASE("property: continued-fraction data") {
    for (const char* s : kSweep) {
        auto t = compute_ts(parse_rational(s));
        CAPTURE(s);
        CHECK(Rational(t.y(t.alpha + 1), t.z(t.alpha)) == t.p0);
        if (t.alpha > 0) {
            CHECK(t.nu[t.alpha] >= 2);
            CHECK(*t.p0_bar == Rational(t.y(t.alpha), t.z(t.alpha - 1)));
        }
        for (int i = 0; i <= t.alpha; ++i) {
            Integer d = t.y(i + 1) * t.z(i - 1) - t.y(i) * t.z(i);
            CHECK(abs(d) == 1);
            CHECK(t.y(i + 1) == t.y(i - 1) + t.nu[i] * t.y(i));
            CHECK(t.m[i + 1] > t.m[i]);
            CHECK(t.p[i + 2] == t.p[i] - t.nu[i] * t.p[i + 1]);
        }
        for (int i = 1; i <= t.alpha; ++i) CHECK(t.y(i + 1) > t.y(i));
        // Inside segment i the sign of q_j is (-1)^i.
        for (long j = 0; j < t.dim(); ++j) {
            Rational q = q_of(t, j);
            CHECK((r_of(t, j) % 2 ? Rational(-q) : q) >= 0);
        }
    }
}

TEST_CASE("n_inverse") {
    auto t = compute_ts(Rational(16, 7));
    CHECK(n_inverse(t, 2) == 5);
    CHECK(n_inverse(t, 4) == Rational(7, 2));
    CHECK(n_inverse(compute_ts(6), 4) == 4);
    CHECK_THROWS_AS(n_inverse(t, 1), PreconditionError);
    for (const char* s : kSweep) {
        auto u = compute_ts(parse_rational(s));
        for (long n = 2; n <= 50; ++n) CHECK(n_of(u, n_inverse(u, n)) == n);
    }
}

TEST_CASE("admissible spins") {
    for (long p0 = 2; p0 <= 8; ++p0) {
        auto t = compute_ts(p0);
        for (long two_s = 1; two_s + 1 < p0; ++two_s) CHECK(admissible_spin(t, two_s));
    }
    // p0 = 2 reaches length 2 only at the closed end of segment 0.
    CHECK(admissible_spin(compute_ts(2), 1));
    CHECK_FALSE(admissible_spin(compute_ts(2), 2));
    auto t = compute_ts(Rational(16, 7));
    // Closed segments reach the lengths {0,1,2}, {1,3,5,7}, {2,9,16}.
    for (long two_s : {1, 2, 4, 6, 8, 15}) CHECK(admissible_spin(t, two_s));
    for (long two_s : {3, 5, 7, 9, 14}) CHECK_FALSE(admissible_spin(t, two_s));
}

TEST_CASE("property: Phi against the integer closed forms") {
    for (long p0 = 2; p0 <= 12; ++p0) {
        auto t = compute_ts(p0);
        for (long two_s = 1; two_s + 1 < p0; ++two_s) {
            for (long k = 1; k < p0; ++k)
                CHECK(2 * phi(t, k, two_s) == make_rational(two_s * k, p0) - std::min(k, two_s));
            CHECK(2 * phi(t, p0, two_s) == make_rational(two_s, p0));
        }
    }
    CHECK(phi(compute_ts(6), 3, 3) == Rational(-3, 4));
}

}
