#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "acm/bott.hpp"
#include "testutil.hpp"

using namespace acm;

namespace {

ParabolicData make(const char* type, int k) {
    return parabolic_data(build_root_system(DynkinType::parse(type)), k);
}

WeightCoeffs zero(const ParabolicData& pd) {
    return {pd.rs.dynkin, std::vector<long long>(pd.rs.rank(), 0)};
}

}  // namespace

TEST_CASE("twist zero of the trivial weight is one-dimensional in degree zero") {
    for (const char* type : {"E6", "F4", "G2", "A3", "B3", "C3", "D4"}) {
        ParabolicData pd = make(type, 1);
        CohomologyRow row = cohomology(pd, zero(pd), 0);
        CHECK(!row.cls.singular);
        CHECK(row.nonzero_degree == 0);
        CHECK(row.rep_highest_weight->a == std::vector<long long>(pd.rs.rank(), 0));
        CHECK(*row.rep_dimension == 1);
    }
}

TEST_CASE("E6/P2 structure sheaf: vanishing at twist 2, top degree past the maximum") {
    ParabolicData pd = make("E6", 2);
    CHECK(cohomology(pd, zero(pd), 2).cls.singular);
    for (long long t : {11, 12, 15}) {  // max step value of the trivial weight is 10
        CohomologyRow row = cohomology(pd, zero(pd), t);
        CHECK(!row.cls.singular);
        CHECK(row.nonzero_degree == 21);
    }
    CHECK_THROWS_AS(cohomology(pd, {pd.rs.dynkin, {0, 3, 0, 0, 0, 0}}, 0), std::invalid_argument);
}

TEST_CASE("twist scan verdicts on the worked examples") {
    ParabolicData e6 = make("E6", 2);
    OracleReport yes = acm_oracle(e6, {e6.rs.dynkin, {2, 0, 1, 0, 0, 0}}, 2);
    CHECK(yes.acm);
    CHECK(yes.m_max == Rational(14));
    CHECK(yes.rows.front().t == -2);
    CHECK(yes.rows.back().t == 16);

    OracleReport no = acm_oracle(e6, {e6.rs.dynkin, {0, 0, 0, 1, 1, 0}}, 2);
    CHECK(!no.acm);
    bool bad_at_2 = false;
    for (const auto& row : no.rows)
        if (row.t == 2 && !row.singular && row.index != 0 && row.index != e6.dim)
            bad_at_2 = true;
    CHECK(bad_at_2);

    ParabolicData g2 = make("G2", 2);
    CHECK(acm_oracle(g2, {g2.rs.dynkin, {1, 0}}, 2).acm);

    CHECK_THROWS_AS(acm_oracle(e6, {e6.rs.dynkin, {0, 1, 0, 0, 0, 0}}, 2), std::invalid_argument);
}

TEST_CASE("boundary classifications: index 0 below twist 1, top index above the maximum") {
    std::mt19937 rng(5150);
    for (DynkinType t : {DynkinType{Series::E, 6}, {Series::F, 4}, {Series::G, 2}, {Series::A, 4},
                         {Series::B, 3}, {Series::C, 4}, {Series::D, 4}}) {
        RootSystem rs = build_root_system(t);
        for (int k = 1; k <= t.rank; ++k) {
            ParabolicData pd = parabolic_data(rs, k);
            for (int trial = 0; trial < 6; ++trial) {
                WeightCoeffs lambda = testutil::random_initialized(rng, pd, 3);
                Rational m = max_element(pd, lambda);

                ChamberIndex at0 = chamber_index(rs, to_ambient(rs, lambda) + rs.rho);
                CHECK(!at0.singular);
                CHECK(at0.index == 0);

                // t = 1 is always a step value of an initialized weight.
                AmbientVector at1 = to_ambient(rs, lambda) + rs.rho - rs.fundamental_weights[k - 1];
                CHECK(chamber_index(rs, at1).singular);

                long long above = m.floor() + 1;
                AmbientVector v = to_ambient(rs, lambda) + rs.rho -
                                  Rational(above) * rs.fundamental_weights[k - 1];
                ChamberIndex top = chamber_index(rs, v);
                CHECK(!top.singular);
                CHECK(top.index == pd.dim);
            }
        }
    }
}

TEST_CASE("integer twists in [1, M] are singular exactly at the step values") {
    std::mt19937 rng(8086);
    for (DynkinType t : {DynkinType{Series::E, 6}, {Series::F, 4}, {Series::G, 2}, {Series::B, 4},
                         {Series::D, 5}}) {
        RootSystem rs = build_root_system(t);
        for (int k = 1; k <= t.rank; ++k) {
            ParabolicData pd = parabolic_data(rs, k);
            for (int trial = 0; trial < 5; ++trial) {
                WeightCoeffs lambda = testutil::random_initialized(rng, pd, 3);
                TProfile tp = t_profile(pd, lambda);
                for (long long l = 1; l <= tp.m_max.floor(); ++l) {
                    AmbientVector v = to_ambient(rs, lambda) + rs.rho -
                                      Rational(l) * rs.fundamental_weights[k - 1];
                    CHECK(chamber_index(rs, v).singular == (tp.n_at(l) >= 1));
                }
            }
        }
    }
}

TEST_CASE("twist scan agrees with the coverage criterion on random weights") {
    std::mt19937 rng(16180);
    for (DynkinType t : {DynkinType{Series::E, 6}, {Series::F, 4}, {Series::G, 2}, {Series::A, 5},
                         {Series::B, 4}, {Series::C, 4}, {Series::D, 5}}) {
        RootSystem rs = build_root_system(t);
        for (int k = 1; k <= t.rank; ++k) {
            ParabolicData pd = parabolic_data(rs, k);
            for (int trial = 0; trial < 25; ++trial) {
                WeightCoeffs lambda = testutil::random_initialized(rng, pd, 3);
                CHECK(acm_oracle(pd, lambda, 2).acm == is_acm(pd, lambda).acm);
            }
        }
    }
}

TEST_CASE("representation dimensions: closed forms and known values") {
    RootSystem a1 = build_root_system({Series::A, 1});
    for (long long m = 0; m <= 20; ++m)
        CHECK(weyl_dimension(a1, {{Series::A, 1}, {m}}) == m + 1);

    auto dim_of = [](const char* type, std::vector<long long> a) {
        RootSystem rs = build_root_system(DynkinType::parse(type));
        return weyl_dimension(rs, {rs.dynkin, std::move(a)});
    };
    CHECK(dim_of("E6", {0, 0, 0, 0, 0, 0}) == 1);
    CHECK(dim_of("E6", {1, 0, 0, 0, 0, 0}) == 27);
    CHECK(dim_of("E6", {0, 0, 0, 0, 0, 1}) == 27);
    CHECK(dim_of("E6", {0, 1, 0, 0, 0, 0}) == 78);   // adjoint
    CHECK(dim_of("E7", {0, 0, 0, 0, 0, 0, 1}) == 56);
    CHECK(dim_of("E7", {1, 0, 0, 0, 0, 0, 0}) == 133);  // adjoint
    CHECK(dim_of("E8", {0, 0, 0, 0, 0, 0, 0, 1}) == 248);  // adjoint
    CHECK(dim_of("F4", {0, 0, 0, 1}) == 26);
    CHECK(dim_of("F4", {1, 0, 0, 0}) == 52);  // adjoint
    CHECK(dim_of("G2", {1, 0}) == 7);
    CHECK(dim_of("G2", {0, 1}) == 14);  // adjoint
    CHECK(dim_of("A2", {1, 1}) == 8);   // adjoint
    CHECK(dim_of("A3", {0, 1, 0}) == 6);
    CHECK(dim_of("B3", {0, 0, 1}) == 8);   // spin
    CHECK(dim_of("C3", {1, 0, 0}) == 6);
    CHECK(dim_of("C3", {0, 0, 1}) == 14);
    CHECK(dim_of("D4", {1, 0, 0, 0}) == 8);
    CHECK(dim_of("D4", {0, 0, 1, 0}) == 8);
    CHECK(dim_of("D4", {0, 0, 0, 1}) == 8);

    // Binomial closed form on the A series.
    for (int n = 2; n <= 6; ++n) {
        RootSystem rs = build_root_system({Series::A, n});
        BigInt binom = 1;
        for (int k = 1; k <= n; ++k) {
            binom = binom * (n + 2 - k) / k;
            std::vector<long long> a(n, 0);
            a[k - 1] = 1;
            CHECK(weyl_dimension(rs, {rs.dynkin, a}) == binom);
        }
    }

    RootSystem g2 = build_root_system({Series::G, 2});
    CHECK_THROWS_AS(weyl_dimension(g2, {{Series::G, 2}, {-1, 0}}), std::invalid_argument);
}

TEST_CASE("regular cohomology rows carry positive integral dimensions") {
    std::mt19937 rng(271828);
    for (DynkinType t : {DynkinType{Series::E, 7}, {Series::F, 4}, {Series::B, 4}}) {
        RootSystem rs = build_root_system(t);
        for (int k = 1; k <= t.rank; ++k) {
            ParabolicData pd = parabolic_data(rs, k);
            WeightCoeffs lambda = testutil::random_initialized(rng, pd, 2);
            Rational m = max_element(pd, lambda);
            for (long long tw = -1; tw <= m.floor() + 1; ++tw) {
                CohomologyRow row = cohomology(pd, lambda, tw);
                if (row.cls.singular) continue;
                CHECK(*row.rep_dimension >= 1);
                for (long long a : row.rep_highest_weight->a) CHECK(a >= 0);
            }
        }
    }
}
