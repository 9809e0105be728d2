#include "acm/bott.hpp"

#include <stdexcept>

namespace acm {

namespace {

void require_initialized(const ParabolicData& pd, const WeightCoeffs& lambda) {
    check_bundle_weight(pd, lambda);
    if (lambda.a[pd.k - 1] != 0)
        throw std::invalid_argument("weight is not initialized (a_k != 0)");
}

AmbientVector twisted_shift(const ParabolicData& pd, const WeightCoeffs& lambda, long long t) {
    AmbientVector v = to_ambient(pd.rs, lambda) + pd.rs.rho;
    if (t != 0) v = v - Rational(t) * pd.rs.fundamental_weights[pd.k - 1];
    return v;
}

}  // namespace

CohomologyRow cohomology(const ParabolicData& pd, const WeightCoeffs& lambda, long long t) {
    require_initialized(pd, lambda);
    CohomologyRow row;
    row.t = t;
    row.cls = classify_chamber(pd.rs, twisted_shift(pd, lambda, t));
    if (!row.cls.singular) {
        row.nonzero_degree = row.cls.index;
        WeightCoeffs hw = to_weight_coeffs(pd.rs, row.cls.dominant_rep - pd.rs.rho);
        for (long long a : hw.a) {
            if (a < 0) throw internal_error("non-dominant representative weight");
        }
        row.rep_dimension = weyl_dimension(pd.rs, hw);
        row.rep_highest_weight = std::move(hw);
    }
    return row;
}

OracleReport acm_oracle(const ParabolicData& pd, const WeightCoeffs& lambda, int pad) {
    require_initialized(pd, lambda);
    if (pad < 0) throw std::invalid_argument("pad must be nonnegative");

    OracleReport report;
    report.m_max = max_element(pd, lambda);
    long long hi = report.m_max.floor();
    if (Rational(hi) < report.m_max) ++hi;  // ceil
    long long lo = -(long long)pad;
    hi += pad;

    report.acm = true;
    for (long long t = lo; t <= hi; ++t) {
        // Only the classification is consulted here, never the step values;
        // that keeps this scan an independent check of the coverage test.
        ChamberIndex ci = chamber_index(pd.rs, twisted_shift(pd, lambda, t));
        TwistRow row{t, ci.singular, ci.singular ? 0 : ci.index, false};
        row.admissible = ci.singular || ci.index == 0 || ci.index == pd.dim;
        if (!row.admissible) report.acm = false;

        if (t < 1 && !(!ci.singular && ci.index == 0))
            throw internal_error("twist " + std::to_string(t) +
                                 " below 1 is not regular of index 0");
        if (Rational(t) > report.m_max && !(!ci.singular && ci.index == pd.dim))
            throw internal_error("twist " + std::to_string(t) +
                                 " above the maximum is not regular of top index");
        report.rows.push_back(row);
    }
    return report;
}

BigInt weyl_dimension(const RootSystem& rs, const WeightCoeffs& mu) {
    if (mu.dynkin != rs.dynkin) throw std::invalid_argument("weight/root-system type mismatch");
    if ((int)mu.a.size() != rs.rank())
        throw std::invalid_argument("weight has wrong number of coefficients");
    for (long long a : mu.a) {
        if (a < 0) throw std::invalid_argument("weyl_dimension requires a dominant weight");
    }

    AmbientVector shifted = to_ambient(rs, mu) + rs.rho;
    BigInt num = 1, den = 1;
    for (const auto& root : rs.positive_roots) {
        Rational p = pairing(shifted, root);
        Rational q = pairing(rs.rho, root);
        num *= BigInt(p.numerator()) * BigInt(q.denominator());
        den *= BigInt(p.denominator()) * BigInt(q.numerator());
    }
    if (den == 0 || num % den != 0)
        throw internal_error("Weyl dimension product is not an integer");
    BigInt dim = num / den;
    if (dim <= 0) throw internal_error("Weyl dimension is not positive");
    return dim;
}

}  // namespace acm
