#pragma once

// Data of the homogeneous variety G/P_k for a maximal parabolic:
// the positive roots not orthogonal to w_k, the positive pairing values
// c_a = (w_k, a), the step values (lambda+rho, a)/c_a, and the coverage
// test deciding whether the associated irreducible bundle is ACM.

#include <map>
#include <optional>
#include <vector>

#include "acm/rootsys.hpp"

namespace acm {

struct ParabolicData {
    RootSystem rs;
    int k = 1;                            // 1-based node index
    std::vector<AmbientVector> roots_k;   // {a in Phi^+ : (w_k, a) != 0}, lex order
    std::vector<Rational> c;              // c[i] = (w_k, roots_k[i]) > 0
    int dim = 0;                          // |roots_k| = dim G/P_k
};

ParabolicData parabolic_data(RootSystem rs, int k);

// Highest-weight validity for an irreducible bundle on G/P_k:
// a_i >= 0 off node k; a_k is an arbitrary integer (twist).
void check_bundle_weight(const ParabolicData& pd, const WeightCoeffs& w);

// Strips the node-k coefficient; returns the initialized weight and the twist.
// The ACM property is invariant under this.
std::pair<WeightCoeffs, long long> normalize(const ParabolicData& pd, const WeightCoeffs& w);

struct TProfile {
    std::vector<Rational> values;      // parallel to pd.roots_k
    Rational m_max;                    // maximum of values
    std::map<long long, int> n;        // integer value -> multiplicity
    bool initialized_input = true;

    int n_at(long long l) const {
        auto it = n.find(l);
        return it == n.end() ? 0 : it->second;
    }
};

// Requires an initialized weight (a_k = 0); callers with a twist apply
// normalize first.
TProfile t_profile(const ParabolicData& pd, const WeightCoeffs& lambda);

Rational max_element(const ParabolicData& pd, const WeightCoeffs& lambda);

struct AcmCertificate {
    bool acm = false;
    Rational m_max;
    std::optional<long long> missing_integer;    // least integer in [1,M] not covered
    std::optional<Rational> out_of_range_value;  // integer value outside [1,M] (defensive)
    std::vector<long long> covered;              // 1..floor(M) when acm
};

// The coverage criterion: ACM iff every integer in [1, M] appears among the
// step values.  Normalization is applied internally, so any valid weight
// (twisted or not) can be passed.
AcmCertificate is_acm(const ParabolicData& pd, const WeightCoeffs& w);

// M as an affine form over the dominant cone.  certified means a single root
// realizes the coefficient-wise maximum of all per-root forms, hence the form
// equals max_element identically on a_i >= 0.
struct MAffineForm {
    std::vector<Rational> coeffs;  // length rank; coeffs[k-1] == 1
    Rational constant;
    bool certified = false;
};

MAffineForm m_affine_form(const ParabolicData& pd);

}  // namespace acm
