#include "bethe/oracle.hpp"

#include "bethe/configs.hpp"
#include "bethe/errors.hpp"
#include "bethe/parallel.hpp"

namespace bethe::oracle {

Integer weight_count(const std::vector<int>& mu, long w) {
    if (w < 0) return 0;
    // dp[t] = number of ways to reach weight t with the factors seen so far.
    std::vector<Integer> dp{1};
    for (int a : mu) {
        std::vector<Integer> next(dp.size() + a);
        for (std::size_t t = 0; t < dp.size(); ++t)
            for (int x = 0; x <= a; ++x) next[t + x] += dp[t];
        dp = std::move(next);
    }
    return w < static_cast<long>(dp.size()) ? dp[w] : Integer(0);
}

Integer sl2_multiplicity(const std::vector<int>& mu, long l) {
    long N = 0;
    for (int a : mu) N += a;
    if (l < 0 || 2 * l > N) throw PreconditionError("sl2_multiplicity needs 0 <= l <= N/2");
    return weight_count(mu, l) - weight_count(mu, l - 1);
}

CompletenessReport check_completeness_xxx(const spectral::ChainSpec& chain) {
    CompletenessReport r;
    r.chain = chain;
    r.lhs_total = chain.dimension();
    auto mu = chain.composition();
    long N = chain.total();
    auto counts = parallel_map(N / 2 + 1, [&](std::size_t l) { return configs::count_xxx(l, mu); });
    for (long l = 0; l <= N / 2; ++l) {
        r.per_l.push_back({l, counts[l], N - 2 * l + 1});
        r.weighted_sum += counts[l] * (N - 2 * l + 1);
    }
    r.matched = r.weighted_sum == r.lhs_total;
    return r;
}

CompletenessReport check_completeness_xxz(const spectral::XXZSystem& sys, const spectral::ChainSpec& chain) {
    CompletenessReport r;
    r.chain = chain;
    r.lhs_total = chain.dimension();
    for (const auto& s : chain.species) r.spins_admissible = r.spins_admissible && ts::admissible_spin(sys.ts, s.two_s);
    long N = chain.total();
    auto counts = parallel_map(N + 1, [&](std::size_t l) {
        return configs::count_xxz_general_detail(sys, chain, static_cast<long>(l), false);
    });
    for (long l = 0; l <= N; ++l) {
        r.per_l.push_back({l, counts[l].total, 1});
        r.weighted_sum += counts[l].total;
        r.skipped_non_integer += counts[l].skipped_non_integer;
    }
    r.matched = r.weighted_sum == r.lhs_total;
    return r;
}

CompletenessReport check_completeness_xxz(const ts::TSData& ts, const spectral::ChainSpec& chain) {
    return check_completeness_xxz(spectral::XXZSystem(ts), chain);
}

}  // namespace bethe::oracle
