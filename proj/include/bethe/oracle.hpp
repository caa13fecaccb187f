#pragma once

#include <vector>

#include "bethe/spectral.hpp"

namespace bethe::oracle {

// Number of tuples 0 <= a_i <= mu_i with sum a_i = w (weight-space dimension
// of the tensor product of spin mu_i/2 representations).
Integer weight_count(const std::vector<int>& mu, long w);

// Multiplicity of the (N - 2l + 1)-dimensional irreducible, 0 <= l <= N/2.
Integer sl2_multiplicity(const std::vector<int>& mu, long l);

struct PerL {
    long l;
    Integer count;
    Integer weight;
};

struct CompletenessReport {
    spectral::ChainSpec chain;
    Integer lhs_total;           // prod (2s_m + 1)^{N_m}
    std::vector<PerL> per_l;
    Integer weighted_sum;        // sum count * weight
    bool matched = false;
    bool spins_admissible = true;  // XXZ only: every 2s_m is an admissible length
    long skipped_non_integer = 0;  // XXZ only: lambdas dropped for non-integer tops
};

// Sum_{l <= N/2} (N - 2l + 1) Z^XXX(l) against the total dimension.
CompletenessReport check_completeness_xxx(const spectral::ChainSpec& chain);
// Sum_{l = 0}^{N} Z^XXZ(l) from the general counting formula.
CompletenessReport check_completeness_xxz(const ts::TSData& ts, const spectral::ChainSpec& chain);
CompletenessReport check_completeness_xxz(const spectral::XXZSystem& sys, const spectral::ChainSpec& chain);

}  // namespace bethe::oracle
