#include "acm/parabolic.hpp"

#include <algorithm>
#include <stdexcept>

namespace acm {

ParabolicData parabolic_data(RootSystem rs, int k) {
    if (k < 1 || k > rs.rank())
        throw std::invalid_argument("node index k=" + std::to_string(k) + " out of range for " +
                                    rs.dynkin.str());
    ParabolicData pd;
    pd.k = k;
    const AmbientVector& wk = rs.fundamental_weights[k - 1];
    for (const auto& root : rs.positive_roots) {
        Rational ck = pairing(wk, root);
        if (ck.is_zero()) continue;
        if (ck.sign() < 0) throw internal_error("negative c value for a positive root");
        pd.roots_k.push_back(root);
        pd.c.push_back(ck);
    }
    pd.dim = (int)pd.roots_k.size();
    pd.rs = std::move(rs);
    return pd;
}

void check_bundle_weight(const ParabolicData& pd, const WeightCoeffs& w) {
    if (w.dynkin != pd.rs.dynkin)
        throw std::invalid_argument("weight/parabolic type mismatch");
    if ((int)w.a.size() != pd.rs.rank())
        throw std::invalid_argument("weight has wrong number of coefficients: expected " +
                                    std::to_string(pd.rs.rank()));
    for (int i = 0; i < pd.rs.rank(); ++i) {
        if (i != pd.k - 1 && w.a[i] < 0)
            throw std::invalid_argument("coefficient a_" + std::to_string(i + 1) +
                                        " must be >= 0 away from node " + std::to_string(pd.k));
    }
}

std::pair<WeightCoeffs, long long> normalize(const ParabolicData& pd, const WeightCoeffs& w) {
    check_bundle_weight(pd, w);
    WeightCoeffs out = w;
    long long twist = out.a[pd.k - 1];
    out.a[pd.k - 1] = 0;
    return {out, twist};
}

TProfile t_profile(const ParabolicData& pd, const WeightCoeffs& lambda) {
    check_bundle_weight(pd, lambda);
    if (lambda.a[pd.k - 1] != 0)
        throw std::invalid_argument("weight is not initialized (a_k != 0); apply normalize first");

    AmbientVector shifted = to_ambient(pd.rs, lambda) + pd.rs.rho;
    TProfile tp;
    tp.values.reserve(pd.roots_k.size());
    for (size_t i = 0; i < pd.roots_k.size(); ++i)
        tp.values.push_back(pairing(shifted, pd.roots_k[i]) / pd.c[i]);

    tp.m_max = tp.values.front();
    for (const auto& v : tp.values) {
        if (v > tp.m_max) tp.m_max = v;
        if (v.is_integer()) ++tp.n[v.as_integer()];
    }
    return tp;
}

Rational max_element(const ParabolicData& pd, const WeightCoeffs& lambda) {
    return t_profile(pd, lambda).m_max;
}

AcmCertificate is_acm(const ParabolicData& pd, const WeightCoeffs& w) {
    auto [lambda, twist] = normalize(pd, w);
    (void)twist;  // the verdict is twist-invariant
    TProfile tp = t_profile(pd, lambda);

    AcmCertificate cert;
    cert.m_max = tp.m_max;

    // Integer values outside [1, M] are rejected outright.
    for (const auto& [l, count] : tp.n) {
        (void)count;
        if (l < 1 || Rational(l) > tp.m_max) {
            cert.acm = false;
            cert.out_of_range_value = Rational(l);
            return cert;
        }
    }

    // Walk the integer multiplicity map instead of [1, M] directly: the map
    // has at most dim entries, so huge maxima cannot stall the scan.
    long long top = tp.m_max.floor();
    long long expected = 1;
    for (const auto& [l, count] : tp.n) {
        (void)count;
        if (l > expected) break;
        expected = l + 1;
    }
    if (expected <= top) {
        cert.acm = false;
        cert.missing_integer = expected;
        return cert;
    }
    cert.acm = true;
    cert.covered.reserve(top);
    for (long long l = 1; l <= top; ++l) cert.covered.push_back(l);
    return cert;
}

MAffineForm m_affine_form(const ParabolicData& pd) {
    const int n = pd.rs.rank();
    // Per-root affine forms of the step values over the a-coefficients.
    std::vector<std::vector<Rational>> coeffs(pd.roots_k.size(), std::vector<Rational>(n));
    std::vector<Rational> consts(pd.roots_k.size());
    for (size_t r = 0; r < pd.roots_k.size(); ++r) {
        for (int i = 0; i < n; ++i)
            coeffs[r][i] = pairing(pd.rs.fundamental_weights[i], pd.roots_k[r]) / pd.c[r];
        consts[r] = pairing(pd.rs.rho, pd.roots_k[r]) / pd.c[r];
    }

    MAffineForm form;
    form.coeffs.assign(n, Rational(0));
    form.constant = consts[0];
    for (size_t r = 0; r < pd.roots_k.size(); ++r) {
        for (int i = 0; i < n; ++i)
            if (coeffs[r][i] > form.coeffs[i]) form.coeffs[i] = coeffs[r][i];
        if (consts[r] > form.constant) form.constant = consts[r];
    }
    for (size_t r = 0; r < pd.roots_k.size(); ++r) {
        if (coeffs[r] == form.coeffs && consts[r] == form.constant) {
            form.certified = true;
            break;
        }
    }
    return form;
}

}  // namespace acm
