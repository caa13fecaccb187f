#include "bethe/bijection.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "bethe/errors.hpp"
#include "bethe/oracle.hpp"

namespace bethe::bijection {

using spectral::ChainSpec;

namespace {

long p0_of(const ts::TSData& ts) { return ts.p0.get_num().get_si(); }

XXZConfig with_clubs(const Partition& nu, long p0, long lam_p0) {
    XXZConfig c;
    c.lam.assign(p0 - 1, 0);
    for (int part : nu.parts) {
        if (part >= p0) throw PreconditionError("partition " + nu.str() + " has a part >= p0");
        ++c.lam[part - 1];
    }
    c.lam_p0 = lam_p0;
    return c;
}

bool admissible(const ts::TSData& ts, const ChainSpec& chain, const XXZConfig& c) {
    auto P = configs::xxz_vacancies_int(ts, chain, c);
    return std::all_of(P.begin(), P.end(), [](long v) { return v >= 0; });
}

std::string describe(const XXZConfig& c) {
    std::ostringstream os;
    os << "nu=" << c.xxx_part().str() << " lam_p0=" << c.lam_p0;
    return os.str();
}

void record(CheckResult& r, bool ok, const std::string& what) {
    ++r.checked;
    if (ok) return;
    r.passed = false;
    if (r.counterexamples.size() < 10) r.counterexamples.push_back(what);
}

}  // namespace

bool in_treated_case(const ts::TSData& ts, const ChainSpec& chain) {
    return ts.integral() && ts.p0 >= 2 && ts.p0 > chain.spin_sum();
}

PiImage pair(const ts::TSData& ts, const ChainSpec& chain, const Partition& nu) {
    if (!in_treated_case(ts, chain))
        throw PreconditionError("outside treated case: needs integer p0 > sum of spins (p0=" + ts.p0.get_str() +
                                ", sum s=" + chain.spin_sum().get_str() + ")");
    auto mu = chain.composition();
    if (!configs::xxx_admissible(nu, mu)) throw PreconditionError(nu.str() + " is not a valid XXX configuration");
    long p0 = p0_of(ts);
    PiImage img;
    img.xxx_config = nu;
    img.designated_lam_p0 = floor_of(chain.spin_sum() - nu.size()).get_si();
    img.paired_admissible = admissible(ts, chain, with_clubs(nu, p0, img.designated_lam_p0));
    for (long k = 0; k < img.designated_lam_p0; ++k)
        if (admissible(ts, chain, with_clubs(nu, p0, k))) img.descendants.push_back(k);
    return img;
}

Partition forget(const ts::TSData& ts, const ChainSpec& chain, const XXZConfig& cfg) {
    if (!admissible(ts, chain, cfg)) throw PreconditionError("forget expects an admissible configuration");
    Partition nu = cfg.xxx_part();
    if (!configs::xxx_admissible(nu, chain.composition()))
        throw ClaimViolation("stripping 1^- strings from " + describe(cfg) + " gives an invalid XXX configuration");
    return nu;
}

std::vector<StaircaseEntry> staircase_decompose(long m, long k) {
    if (m < 0 || k < 0) throw PreconditionError("staircase needs m, k >= 0");
    std::vector<StaircaseEntry> out;
    for (auto& r : configs::rigging_lists(k, m)) {
        long j = 0, w = 0;
        for (long x : r)
            if (x < m) {
                ++j;
                w += x + 1;
            }
        out.push_back({std::move(r), j, w});
    }
    return out;
}

bool staircase_identity(long m, long k) {
    using qalg::QPolynomial;
    QPolynomial lhs = qalg::gauss_binomial(m + k, k);
    QPolynomial rhs;
    for (long j = 0; j <= k; ++j) rhs += qalg::gauss_binomial_extended(m + j - 1, j).shifted(j);
    if (!(lhs == rhs)) return false;
    // The enumerated classes realise the same sum term by term.
    std::vector<QPolynomial> by_class(k + 1);
    QPolynomial all;
    for (const auto& e : staircase_decompose(m, k)) {
        if (e.j < 0 || e.j > k) return false;
        by_class[e.j].add_term(e.weight, 1);
        all.add_term(e.weight, 1);
    }
    for (long j = 0; j <= k; ++j)
        if (!(by_class[j] == qalg::gauss_binomial_extended(m + j - 1, j).shifted(j))) return false;
    return all == lhs;
}

PiReport verify_pi(const ts::TSData& ts, const ChainSpec& chain) {
    PiReport rep;
    rep.dimension = chain.dimension();
    if (!in_treated_case(ts, chain)) {
        rep.reason = "outside treated case: needs integer p0 > sum of spins (p0=" + ts.p0.get_str() +
                     ", sum s=" + chain.spin_sum().get_str() + ")";
        return rep;
    }
    rep.treated_case = true;
    long p0 = p0_of(ts);
    auto mu = chain.composition();
    long N = chain.total();
    long half = N / 2;  // l <= sum s_m

    CheckResult dom{"vacancy dominance P_j(XXX) >= P_j(XXZ), j < p0, l <= sum s"};
    CheckResult down{"downward closure in lambda_p0"};
    CheckResult eq{"P_j(XXZ) = P_j(XXX) for j < p0-1 on the paired range"};
    CheckResult total{"state totals: XXZ = weighted XXX = dimension"};
    CheckResult fiber{"forget o pair = id, forget valid, fibers contain every admissible (nu,k) with l <= sum s"};

    // All admissible XXZ configurations of the chain, every l.
    for (long l = 0; l <= N; ++l)
        for (const auto& cfg : configs::xxz_candidates(p0, l)) {
            auto P = configs::xxz_vacancies_int(ts, chain, cfg);
            if (std::any_of(P.begin(), P.end(), [](long v) { return v < 0; })) continue;
            Partition nu = cfg.xxx_part();
            if (l > half) ++rep.beyond_equator;

            bool closed = true;
            for (long k = 0; k <= cfg.lam_p0 && closed; ++k) {
                XXZConfig lower = cfg;
                lower.lam_p0 = cfg.lam_p0 - k;
                closed = admissible(ts, chain, lower);
            }
            record(down, closed, describe(cfg));

            // The remaining claims are made for l <= sum s_m only.
            if (l > half) continue;
            try {
                (void)forget(ts, chain, cfg);
                record(fiber, true, "");
            } catch (const ClaimViolation& e) {
                record(fiber, false, e.what());
            }

            bool ok = true;
            for (long j = 1; j <= p0 - 1; ++j) ok = ok && configs::xxx_vacancy(nu, mu, static_cast<int>(j)) >= P[j - 1];
            record(dom, ok, describe(cfg));

            long designated = floor_of(chain.spin_sum() - nu.size()).get_si();
            record(fiber, cfg.lam_p0 <= designated, describe(cfg) + " lies above its fiber");
        }

    for (long size = 0; size <= half; ++size)
        for (const auto& nu : configs::enumerate_xxx_configs(size, mu)) {
            PiImage img = pair(ts, chain, nu);
            record(fiber, img.paired_admissible, "pair of " + nu.str() + " is not admissible");
            record(fiber, img.xxx_config == nu, "forget o pair moved " + nu.str());

            // Paired range from the vacancy algebra: 0 <= N - 2l < p0.
            std::set<long> derived;
            for (long lam = 0; 2 * (size + lam) <= N; ++lam) {
                if (N - 2 * (size + lam) >= p0) continue;
                derived.insert(lam);
                XXZConfig c = with_clubs(nu, p0, lam);
                auto P = configs::xxz_vacancies_int(ts, chain, c);
                bool ok = std::all_of(P.begin(), P.end(), [](long v) { return v >= 0; });
                for (long j = 1; j < p0 - 1; ++j) ok = ok && P[j - 1] == configs::xxx_vacancy(nu, mu, static_cast<int>(j));
                record(eq, ok, describe(c));
            }
            // Printed ranges, with sum s = N/2 and l = |nu|.
            std::set<long> printed_pair, printed_desc, admissible_desc(img.descendants.begin(), img.descendants.end());
            for (long lam = 0; 2 * lam <= N - 2 * size; ++lam)
                if (N - 2 * size - p0 < lam) printed_pair.insert(lam);
            for (long k = 0; 2 * k < N - 2 * size - 2; ++k) printed_desc.insert(k);
            auto show = [](const std::set<long>& s) {
                std::string t = "{";
                for (long v : s) t += (t.size() > 1 ? "," : "") + std::to_string(v);
                return t + "}";
            };
            if (printed_pair != derived)
                rep.range_notes.push_back(nu.str() + ": paired range " + show(derived) + " vs printed " +
                                          show(printed_pair));
            if (printed_desc != admissible_desc)
                rep.range_notes.push_back(nu.str() + ": descendants " + show(admissible_desc) + " vs printed " +
                                          show(printed_desc));
            rep.images.push_back(std::move(img));
        }

    auto xxz = oracle::check_completeness_xxz(ts, chain);
    auto xxx = oracle::check_completeness_xxx(chain);
    Integer dim = 0;
    for (long w = 0; w <= N; ++w) dim += oracle::weight_count(mu, w);
    rep.xxz_total = xxz.weighted_sum;
    rep.xxx_weighted_total = xxx.weighted_sum;
    record(total, rep.xxz_total == rep.xxx_weighted_total && rep.xxx_weighted_total == dim && dim == rep.dimension,
           "XXZ " + rep.xxz_total.get_str() + ", XXX " + rep.xxx_weighted_total.get_str() + ", dimension " +
               dim.get_str());

    rep.checks = {dom, down, eq, total, fiber};
    rep.all_passed = std::all_of(rep.checks.begin(), rep.checks.end(), [](const CheckResult& c) { return c.passed; });
    return rep;
}

std::vector<FiberCensus> experimental_fiber_census(const ts::TSData& ts, const ChainSpec& chain) {
    if (!in_treated_case(ts, chain)) throw PreconditionError("outside treated case");
    long p0 = p0_of(ts);
    auto mu = chain.composition();
    long N = chain.total();
    std::vector<FiberCensus> out;
    for (long size = 0; 2 * size <= N; ++size)
        for (const auto& nu : configs::enumerate_xxx_configs(size, mu)) {
            FiberCensus f{nu, 0, configs::xxx_config_count(nu, mu) * (N - 2 * size + 1)};
            long designated = floor_of(chain.spin_sum() - size).get_si();
            for (long k = 0; k <= designated; ++k) {
                XXZConfig c = with_clubs(nu, p0, k);
                auto P = configs::xxz_vacancies_int(ts, chain, c);
                if (std::any_of(P.begin(), P.end(), [](long v) { return v < 0; })) continue;
                auto lam = c.full();
                Integer n = 1;
                for (long j = 0; j < p0; ++j) n *= binomial(P[j] + lam[j], lam[j]);
                f.xxz_states += n;
            }
            out.push_back(std::move(f));
        }
    return out;
}

}  // namespace bethe::bijection
