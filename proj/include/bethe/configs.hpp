#pragma once

#include <map>
#include <string>
#include <vector>

#include "bethe/spectral.hpp"

namespace bethe::configs {

using Composition = std::vector<int>;

struct Partition {
    std::vector<int> parts;  // weakly decreasing, positive

    Partition() = default;
    explicit Partition(std::vector<int> p);  // sorts

    long size() const;
    int largest() const { return parts.empty() ? 0 : parts.front(); }
    long multiplicity(int n) const;
    std::vector<int> conjugate() const;
    long conjugate_prefix(int n) const;  // sum_{k<=n} nu'_k = sum_i min(n, nu_i)
    std::vector<int> distinct_desc() const;
    std::string str() const;  // "(3,2)", "()" for the empty partition
    friend auto operator<=>(const Partition&, const Partition&) = default;
};

// All partitions of n with parts <= max_part, in decreasing lexicographic order.
std::vector<Partition> partitions(long n, int max_part);

// ---- XXX ----------------------------------------------------------------

long xxx_vacancy(const Partition& nu, const Composition& mu, int n);
bool xxx_admissible(const Partition& nu, const Composition& mu);
std::vector<Partition> enumerate_xxx_configs(long l, const Composition& mu);
Integer xxx_config_count(const Partition& nu, const Composition& mu);
Integer count_xxx(long l, const Composition& mu);

struct XXXRiggedConfig {
    Partition nu;
    std::map<int, std::vector<long>> riggings;  // part size -> weakly increasing labels
};
std::vector<XXXRiggedConfig> enumerate_xxx_rigged(long l, const Composition& mu);

// Weakly increasing sequences of length k with entries in [0, bound].
std::vector<std::vector<long>> rigging_lists(long k, long bound);

// ---- XXZ, integer p0 --------------------------------------------------------

struct XXZConfig {
    std::vector<long> lam;  // lambda_1 .. lambda_{p0-1}
    long lam_p0 = 0;        // number of 1^- strings

    long l() const;
    Partition xxx_part() const;  // the partition (j^{lambda_j})_{j<p0}
    std::vector<long> full() const;  // lambda_1 .. lambda_{p0}
    friend auto operator<=>(const XXZConfig&, const XXZConfig&) = default;
};

struct XXZConfigCount {
    XXZConfig cfg;
    std::vector<long> vacancies;  // P_1 .. P_{p0}
    Integer count;
};

long xxz_vacancy_int(const ts::TSData& ts, const spectral::ChainSpec& chain, const XXZConfig& cfg, long j);
std::vector<long> xxz_vacancies_int(const ts::TSData& ts, const spectral::ChainSpec& chain, const XXZConfig& cfg);
// Every configuration of weight l with parts < p0, admissible or not.
std::vector<XXZConfig> xxz_candidates(long p0, long l);
// Admissible ones (all P_j >= 0, j = 1..p0) with their rigging counts.
std::vector<XXZConfigCount> enumerate_xxz_int(const ts::TSData& ts, const spectral::ChainSpec& chain, long l);

struct XXZRiggedConfig {
    XXZConfig cfg;
    std::vector<std::vector<long>> riggings;  // per string type j = 1..p0
};
std::vector<XXZRiggedConfig> enumerate_xxz_rigged(const ts::TSData& ts, const spectral::ChainSpec& chain,
                                                  const XXZConfig& cfg);

// ---- general rational p0 ------------------------------------------------

// All lambda in N^{dim} with sum_k n_k lambda_k = l, lexicographic order.
std::vector<std::vector<long>> enumerate_lambda(const spectral::XXZSystem& sys, long l);
std::vector<std::vector<long>> enumerate_lambda(const ts::TSData& ts, long l);

struct GeneralTerm {
    std::vector<long> lambda;
    std::vector<Integer> tops;  // P_j + lambda_j
    Integer count;
};

struct GeneralCount {
    Integer total;
    std::vector<GeneralTerm> terms;  // lambdas with integer tops and non-zero product
    long skipped_non_integer = 0;
};

// Sum over lambda of prod_j binom(top_j, lambda_j), generalised binomial for
// negative tops; lambdas with a non-integer top are skipped and counted.
GeneralCount count_xxz_general_detail(const spectral::XXZSystem& sys, const spectral::ChainSpec& chain, long l,
                                      bool keep_terms = true);
Integer count_xxz_general(const ts::TSData& ts, const spectral::ChainSpec& chain, long l);

// ---- diagrams -------------------------------------------------------------

// Rows longest first; 1^- strings are drawn with a club and printed after the
// ordinary length-one strings. The vacancy label sits on the first row of each
// group.
std::string render_xxz_diagram(const XXZConfig& cfg, const std::vector<long>& vacancies);
std::string render_xxx_diagram(const Partition& nu, const Composition& mu);

}  // namespace bethe::configs
