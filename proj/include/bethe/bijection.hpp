#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "bethe/configs.hpp"

namespace bethe::bijection {

using configs::Partition;
using configs::XXZConfig;

// Raised when a claim of the pairing argument fails on concrete data.
struct ClaimViolation : std::logic_error {
    using std::logic_error::logic_error;
};

struct PiImage {
    Partition xxx_config;
    long designated_lam_p0 = 0;   // floor(sum s_m - |nu|)
    std::vector<long> descendants;  // admissible k below the designated value
    bool paired_admissible = false;
};

// Throws PreconditionError unless p0 is an integer > sum_m s_m and nu is a
// valid XXX configuration of the chain.
PiImage pair(const ts::TSData& ts, const spectral::ChainSpec& chain, const Partition& nu);
// Drops the 1^- strings; throws ClaimViolation if the rest is not a valid XXX
// configuration.
Partition forget(const ts::TSData& ts, const spectral::ChainSpec& chain, const XXZConfig& cfg);

// True when p0 is an integer >= 2 with p0 > sum_m s_m.
bool in_treated_case(const ts::TSData& ts, const spectral::ChainSpec& chain);

struct StaircaseEntry {
    std::vector<long> riggings;  // weakly increasing, entries in [0, m]
    long j;                      // entries strictly below m
    long weight;                 // sum over those entries of (J + 1)
};
// Splits the k-multisets over {0..m} by j; class j has
// [m+j-1 choose j] members and q-weight q^j [m+j-1 choose j].
std::vector<StaircaseEntry> staircase_decompose(long m, long k);
// [m+k choose k] = sum_j q^j [m+j-1 choose j], checked as polynomials and
// against the enumerated classes and weights.
bool staircase_identity(long m, long k);

struct CheckResult {
    std::string name;
    bool passed = true;
    long checked = 0;
    std::vector<std::string> counterexamples;  // first few only
};

struct FiberCensus {
    Partition nu;
    Integer xxz_states;    // rigged XXZ states over the fiber (l <= sum s_m)
    Integer xxx_states;    // (N - 2|nu| + 1) * rigged XXX states of nu
};

struct PiReport {
    bool treated_case = false;
    std::string reason;
    std::vector<PiImage> images;
    std::vector<CheckResult> checks;
    Integer xxz_total, xxx_weighted_total, dimension;
    long beyond_equator = 0;               // admissible configs with l > sum s_m
    std::vector<std::string> range_notes;  // differences from the printed ranges
    bool all_passed = false;
};

PiReport verify_pi(const ts::TSData& ts, const spectral::ChainSpec& chain);

// Experimental: compares per-fiber state counts. No correspondence of states
// is asserted; see README.
std::vector<FiberCensus> experimental_fiber_census(const ts::TSData& ts, const spectral::ChainSpec& chain);

}  // namespace bethe::bijection
