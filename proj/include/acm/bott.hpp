#pragma once

// Cohomology of irreducible homogeneous bundles per twist: each twisted
// weight is classified as singular (all cohomology vanishes) or regular of
// index p (one nonvanishing group, in degree p).  The twist scan doubles as
// an independent check of the coverage criterion in parabolic.hpp: a bundle
// is ACM exactly when no twist lands in an intermediate degree.

#include <boost/multiprecision/cpp_int.hpp>
#include <optional>
#include <vector>

#include "acm/parabolic.hpp"

namespace acm {

using BigInt = boost::multiprecision::cpp_int;

struct CohomologyRow {
    long long t = 0;
    ChamberClass cls;  // classification of lambda + rho - t*w_k
    std::optional<int> nonzero_degree;
    std::optional<WeightCoeffs> rep_highest_weight;
    std::optional<BigInt> rep_dimension;
};

// lambda must be initialized (a_k = 0) and dominant off node k.
CohomologyRow cohomology(const ParabolicData& pd, const WeightCoeffs& lambda, long long t);

struct TwistRow {
    long long t = 0;
    bool singular = false;
    int index = 0;        // meaningful when regular
    bool admissible = false;  // singular or index in {0, dim}
};

struct OracleReport {
    bool acm = false;
    Rational m_max;       // scan bound
    std::vector<TwistRow> rows;  // t = -pad .. ceil(M)+pad in order
};

// Scans every integer twist in [-pad, ceil(M)+pad] and classifies each one;
// verdict is true iff every scanned twist is singular, regular of index 0,
// or regular of index dim G/P_k.  The provably uniform regions (index 0 for
// t < 1, index dim for t > M) are asserted as executed internal-consistency
// checks; a violation throws internal_error, it is never a verdict.
OracleReport acm_oracle(const ParabolicData& pd, const WeightCoeffs& lambda, int pad = 2);

// Dimension of the irreducible representation with dominant highest weight mu
// (product over positive roots of (mu+rho,a)/(rho,a); exact, integrality
// asserted).
BigInt weyl_dimension(const RootSystem& rs, const WeightCoeffs& mu);

}  // namespace acm
