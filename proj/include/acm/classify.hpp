#pragma once

// Exhaustive classification of initialized irreducible ACM bundles on a
// fixed G/P_k.  An ACM bundle satisfies M <= dim G/P_k, and M is an affine
// form with positive coefficients over the dominant cone, so the candidate
// set is the lattice simplex {a >= 0, a_k = 0, M(a) <= dim}.

#include <functional>
#include <string>
#include <vector>

#include "acm/bott.hpp"
#include "acm/parabolic.hpp"

namespace acm {

struct EnumOptions {
    long long max_candidates = 10'000'000;
    bool force = false;  // proceed past the guard
};

// Refusal to enumerate an infeasibly large candidate simplex.
struct guard_error : std::runtime_error {
    BigInt estimated_count;
    guard_error(std::string msg, BigInt est)
        : std::runtime_error(std::move(msg)), estimated_count(std::move(est)) {}
};

// Exact lattice-point count of the candidate simplex.
BigInt count_candidates(const ParabolicData& pd);

// Candidates in lexicographic order on (a_1, ..., a_n).
std::vector<WeightCoeffs> enumerate_candidates(const ParabolicData& pd,
                                               const EnumOptions& opts = {});

struct ClassifyOptions {
    // use_oracle < 0: default policy (on for rank <= 6, off above).
    int use_oracle = -1;
    int jobs = 1;
    int pad = 2;
    EnumOptions enum_opts;
};

struct ClassificationResult {
    DynkinType dynkin;
    int k = 1;
    std::vector<WeightCoeffs> acm_weights;  // lex sorted, duplicate-free
    long long candidates_scanned = 0;
    long long bound_used = 0;  // dim G/P_k
    bool oracle_checked = false;
};

// Filters the candidate simplex through the coverage criterion; when the
// oracle is enabled every candidate is additionally run through the twist
// scan and any disagreement throws internal_error.  The result does not
// depend on the worker count.
ClassificationResult classify_acm(const ParabolicData& pd, const ClassifyOptions& opts = {});

struct FixtureOutcome {
    std::string name;
    bool pass = false;
    std::string detail;  // weight-level diff or mismatch description when failing
};

struct FixtureReport {
    std::vector<FixtureOutcome> fixtures;
    bool all_pass = true;
};

// Compares a fresh classification of (type, k) against an expected weight
// list; the outcome carries a weight-level diff on mismatch.
FixtureOutcome run_classification_fixture(const std::string& name, DynkinType type, int k,
                                          const std::vector<std::vector<long long>>& expected);

using Fixture = std::pair<std::string, std::function<FixtureOutcome()>>;

// The built-in fixtures: the worked step-matrix example on E6/P_2 plus the
// six classification lists (E6/P_1, E7/P_7, E8/P_8, F4/P_1, G2/P_1, G2/P_2).
const std::vector<Fixture>& builtin_fixtures();

FixtureReport run_fixtures(const std::vector<Fixture>& fixtures);
FixtureReport verify_fixtures();

}  // namespace acm
