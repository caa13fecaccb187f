#include <doctest.h>

#include "bethe/configs.hpp"
#include "bethe/errors.hpp"
#include "bethe/spectral.hpp"
#include "oracles.hpp"

using namespace bethe;
using namespace bethe::spectral;

namespace {

RationalMatrix from_rows(const std::vector<std::vector<long>>& rows, const Rational& scale = 1) {
    RationalMatrix m(static_cast<long>(rows.size()));
    for (long i = 0; i < m.dim(); ++i)
        for (long j = 0; j < m.dim(); ++j) m(i, j) = Rational(rows[i][j]) * scale;
    return m;
}

const std::vector<std::vector<long>> kThetaInv167 = {
    {1, 1, 0, 0, 0, 0, 0},   {1, -2, 1, 0, 0, 0, 0}, {0, 1, -2, 1, 0, 0, 0},  {0, 0, 1, -1, -1, 0, 0},
    {0, 0, 0, -1, 2, -1, 0}, {0, 0, 0, 0, -1, 1, 1}, {0, 0, 0, 0, 0, 1, -1}};
const std::vector<std::vector<long>> kTheta167x16 = {
    {9, 7, 5, 3, 2, 1, 1},         {7, -7, -5, -3, -2, -1, -1}, {5, -5, -15, -9, -6, -3, -3},
    {3, -3, -9, -15, -10, -5, -5}, {2, -2, -6, -10, 4, 2, 2},   {1, -1, -3, -5, 2, 9, 9},
    {1, -1, -3, -5, 2, 9, -7}};

// Integer symmetric matrix with small random entries and non-zero determinant.
RationalMatrix random_invertible(long n) {
    while (true) {
        RationalMatrix m(n);
        for (long i = 0; i < n; ++i)
            for (long j = i; j < n; ++j) m(i, j) = m(j, i) = oracle_ref::uniform(-3, 3);
        if (determinant(m) != 0) return m;
    }
}

}  // namespace

TEST_SUITE("spectral") {

TEST_CASE("theta inverse and theta for sixteen sevenths") {
    auto t = ts::compute_ts(Rational(16, 7));
    auto ti = build_theta_inverse(t);
    CHECK(ti == from_rows(kThetaInv167));
    auto th = invert(ti);
    CHECK(th.scaled(16) == from_rows(kTheta167x16));
    CHECK(abs(determinant(ti)) == 16);
    CHECK(ti * th == RationalMatrix::identity(7));
}

TEST_CASE("property: |det theta inverse| = y_{alpha+1}, symmetric, tridiagonal") {
    for (const char* s : {"2", "3", "4", "5", "6", "7", "8", "5/2", "7/3", "9/4", "16/7", "11/4", "13/5", "23/9", "31/11", "3/2"}) {
        CAPTURE(s);
        auto t = ts::compute_ts(parse_rational(s));
        auto ti = build_theta_inverse(t);
        CHECK(ti.symmetric());
        for (long i = 0; i < ti.dim(); ++i)
            for (long j = 0; j < ti.dim(); ++j) {
                if (std::abs(i - j) > 1) CHECK(ti(i, j) == 0);
                CHECK(is_integer(ti(i, j)));
            }
        CHECK(abs(determinant(ti)) == t.y(t.alpha + 1));
        CHECK(invert(ti) * ti == RationalMatrix::identity(ti.dim()));
    }
}

TEST_CASE("theta inverse for p0 = 3") {
    // The sign rule gives c_12 = -1 on segment 0 and c_23 = +1 past it.
    auto ti = build_theta_inverse(ts::compute_ts(3));
    CHECK(ti == from_rows({{2, -1, 0}, {-1, 1, 1}, {0, 1, -1}}));
    CHECK(abs(determinant(ti)) == 3);
}

TEST_CASE("exact inversion") {
    CHECK(invert(RationalMatrix::identity(4)) == RationalMatrix::identity(4));
    CHECK_THROWS_AS(invert(from_rows({{1, 2}, {2, 4}})), PreconditionError);
    for (int trial = 0; trial < 40; ++trial) {
        auto m = random_invertible(oracle_ref::uniform(1, 6));
        auto inv = invert(m);
        CHECK(m * inv == RationalMatrix::identity(m.dim()));
        CHECK(invert(inv) == m);
        CHECK(determinant(m) * determinant(inv) == 1);
    }
}

TEST_CASE("E matrix") {
    for (long p0 = 2; p0 <= 7; ++p0) {
        auto E = build_E(ts::compute_ts(p0));
        RationalMatrix ref(p0);
        for (long j = 0; j < p0 - 1; ++j) ref(j, j) = 1;
        ref(p0 - 1, p0 - 1) = -1;
        ref(p0 - 2, p0 - 1) = 1;   // -eps_{p0}
        ref(p0 - 1, p0 - 2) = 1;   // +eps_{p0-1}
        CHECK(E == ref);
    }
    auto t = ts::compute_ts(Rational(16, 7));
    auto E = build_E(t);
    for (long j = 1; j <= 7; ++j)
        for (long k = 1; k <= 7; ++k) {
            int e = ts::epsilon(t, k);
            long d = (j == k) - (j == 6 && k == 7) + (j == 7 && k == 6);
            CHECK(E(j - 1, k - 1) == e * d);
        }
    auto one = build_E(ts::compute_ts(1));
    CHECK(one.dim() == 1);
    CHECK(one(0, 0) == -1);
}

TEST_CASE("b vector") {
    auto t = ts::compute_ts(6);
    auto chain = parse_chain("3x5");
    // N - 2l = 5 is not divisible by 6.
    auto b = build_b(t, chain, 5);
    for (long j = 1; j <= 6; ++j)
        CHECK(b[j - 1] == ts::epsilon(t, j) * (ts::n_of(t, j) * Rational(5, 6) - 2 * ts::phi(t, j, 3) * 5));
    // p0 | N - 2l: only the Phi part survives.
    auto b2 = build_b(t, parse_chain("2x3"), 0);
    for (long j = 1; j <= 6; ++j)
        CHECK(b2[j - 1] == -ts::epsilon(t, j) * 2 * ts::phi(t, j, 2) * 3);
    // Negative N - 2l uses x - floor(x).
    auto b3 = build_b(t, parse_chain("1x2"), 5);
    for (long j = 1; j <= 6; ++j)
        CHECK(b3[j - 1] == ts::epsilon(t, j) * (ts::n_of(t, j) * Rational(2, 3) - 2 * ts::phi(t, j, 1) * 2));
}

TEST_CASE("vacancies from the linear form") {
    auto t = ts::compute_ts(6);
    auto chain = parse_chain("3x5");
    std::vector<long> zero(6, 0);
    auto P0 = vacancy_linear_form(t, chain, 0, zero);
    CHECK(P0 == build_b(t, chain, 0));
    // One 1-string and four 1^- strings.
    std::vector<long> lam{1, 0, 0, 0, 0, 4};
    auto v = vacancy_linear_form(t, chain, 5, lam);
    CHECK(v[0] - lam[0] == 3);
    CHECK(v[5] - lam[5] == 0);
}

TEST_CASE("property: linear form agrees with the closed form for integer p0") {
    long checked = 0;
    for (const auto& c : oracle_ref::all_chains(12)) {
        ChainSpec chain;
        for (auto [two_s, n] : c.species) chain.species.push_back({two_s, n});
        long N = chain.total();
        for (long p0 = 2; p0 <= 8; ++p0) {
            auto t = ts::compute_ts(p0);
            bool ok = true;
            for (const auto& s : chain.species) ok = ok && ts::admissible_spin(t, s.two_s);
            if (!ok) continue;
            XXZSystem sys(t);
            for (long l = 0; l <= N; ++l) {
                auto b = build_b(t, chain, l);
                for (const auto& cfg : configs::xxz_candidates(p0, l)) {
                    auto lam = cfg.full();
                    auto v = vacancy_linear_form(sys, b, lam);
                    auto closed = configs::xxz_vacancies_int(t, chain, cfg);
                    for (long j = 0; j < p0; ++j) REQUIRE(v[j] - lam[j] == closed[j]);
                    ++checked;
                }
            }
        }
    }
    CHECK(checked > 10000);
}

TEST_CASE("integer form matches the rational form") {
    for (const char* s : {"6", "16/7", "7/3", "5/2"}) {
        auto t = ts::compute_ts(parse_rational(s));
        XXZSystem sys(t);
        auto chain = parse_chain("1x3,2x1");
        for (long l = 0; l <= 5; ++l) {
            auto b = build_b(t, chain, l);
            IntegerVacancyForm f(sys, b);
            for (const auto& lam : configs::enumerate_lambda(sys, l)) {
                auto v = vacancy_linear_form(sys, b, lam);
                std::vector<long> tops;
                bool integral = std::all_of(v.begin(), v.end(), [](const Rational& x) { return is_integer(x); });
                CHECK(f.tops(lam, tops) == integral);
                if (integral)
                    for (long j = 0; j < sys.dim(); ++j) CHECK(tops[j] == v[j]);
                CHECK(make_rational(static_cast<long>(f.quadratic_numerator(lam)), static_cast<long>(f.theta_den())) ==
                      sys.quadratic_form(lam));
            }
        }
    }
}

TEST_CASE("chain parsing") {
    auto c = parse_chain("2x5,1x3");
    CHECK(c.total() == 13);
    CHECK(c.spin_sum() == Rational(13, 2));
    CHECK(c.dimension() == 243 * 8);
    CHECK(c.str() == "2x5,1x3");
    CHECK(parse_chain("3*5").str() == "3x5");
    CHECK(c.composition() == std::vector<int>{2, 2, 2, 2, 2, 1, 1, 1});
    for (const char* bad : {"", "2x", "x5", "0x3", "2x0", "2y5", "2x5,", "-1x3", "2x5x1"})
        CHECK_THROWS_AS(parse_chain(bad), ParseError);
}

TEST_CASE("p0 = 1 is rejected downstream") {
    CHECK_THROWS_AS(XXZSystem(ts::compute_ts(1)), PreconditionError);
}

}
