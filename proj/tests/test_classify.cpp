#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>
#include <random>
#include <set>

#include "acm/classify.hpp"
#include "acm/output.hpp"
#include "testutil.hpp"

using namespace acm;

namespace {

ParabolicData make(const char* type, int k) {
    return parabolic_data(build_root_system(DynkinType::parse(type)), k);
}

std::set<std::vector<long long>> weight_set(const ClassificationResult& r) {
    std::set<std::vector<long long>> s;
    for (const auto& w : r.acm_weights) s.insert(w.a);
    return s;
}

}  // namespace

TEST_CASE("candidate counting matches direct enumeration") {
    for (const char* type : {"E6", "F4", "G2", "A4", "B3", "C3", "D4"}) {
        DynkinType t = DynkinType::parse(type);
        RootSystem rs = build_root_system(t);
        for (int k = 1; k <= t.rank; ++k) {
            ParabolicData pd = parabolic_data(rs, k);
            std::vector<WeightCoeffs> cands = enumerate_candidates(pd);
            CHECK(BigInt(cands.size()) == count_candidates(pd));
            CHECK(std::is_sorted(cands.begin(), cands.end(),
                                 [](const WeightCoeffs& a, const WeightCoeffs& b) {
                                     return a.a < b.a;
                                 }));
            for (const auto& w : cands) {
                CHECK(w.a[k - 1] == 0);
                CHECK(max_element(pd, w) <= Rational(pd.dim));
            }
            // Nothing just past the boundary is missing.
            std::set<std::vector<long long>> have;
            for (const auto& w : cands) have.insert(w.a);
            std::mt19937 rng(99 + k);
            for (int trial = 0; trial < 50; ++trial) {
                WeightCoeffs probe = testutil::random_initialized(rng, pd, 5);
                bool in_budget = max_element(pd, probe) <= Rational(pd.dim);
                CHECK(have.count(probe.a) == (size_t)(in_budget ? 1 : 0));
            }
        }
    }
}

TEST_CASE("trivial weight is always a candidate and always classified ACM") {
    std::mt19937 rng(1);
    for (DynkinType t : {DynkinType{Series::A, 3}, {Series::B, 3}, {Series::C, 4}, {Series::D, 4},
                         {Series::F, 4}, {Series::G, 2}}) {
        RootSystem rs = build_root_system(t);
        int k = 1 + (int)testutil::rand_int(rng, 0, t.rank - 1);
        ParabolicData pd = parabolic_data(rs, k);
        ClassificationResult res = classify_acm(pd);
        CHECK(weight_set(res).count(std::vector<long long>(t.rank, 0)) == 1);
        CHECK(res.bound_used == pd.dim);
    }
}

TEST_CASE("candidate guard refuses huge sweeps and can be overridden") {
    ParabolicData e8p4 = make("E8", 4);
    CHECK(count_candidates(e8p4) > BigInt(10'000'000'000LL));
    CHECK_THROWS_AS(enumerate_candidates(e8p4), guard_error);
    try {
        enumerate_candidates(e8p4);
    } catch (const guard_error& e) {
        CHECK(e.estimated_count > BigInt(10'000'000'000LL));
        CHECK(std::string(e.what()).find("lattice points") != std::string::npos);
    }

    // The override and the limit knob work on a small case.
    ParabolicData e6p1 = make("E6", 1);
    EnumOptions tight;
    tight.max_candidates = 5;
    CHECK_THROWS_AS(enumerate_candidates(e6p1, tight), guard_error);
    tight.force = true;
    CHECK(enumerate_candidates(e6p1, tight).size() == 36);
}

TEST_CASE("classification lists for the small exceptional cases") {
    ClassificationResult cayley = classify_acm(make("E6", 1));
    std::set<std::vector<long long>> expect;
    for (long long i = 0; i <= 1; ++i)
        for (long long j = 0; j <= 3; ++j) expect.insert({0, 0, 0, 0, i, j});
    CHECK(weight_set(cayley) == expect);
    CHECK(cayley.candidates_scanned == 36);
    CHECK(cayley.oracle_checked);  // default policy at rank 6

    ClassificationResult g2p1 = classify_acm(make("G2", 1));
    CHECK(weight_set(g2p1) == std::set<std::vector<long long>>{{0, 0}});

    ClassificationResult g2p2 = classify_acm(make("G2", 2));
    CHECK(weight_set(g2p2) == std::set<std::vector<long long>>{{0, 0}, {1, 0}, {2, 0}});

    ClassificationResult f4p1 = classify_acm(make("F4", 1));
    std::set<std::vector<long long>> f4_expect;
    for (long long i = 0; i <= 4; ++i) f4_expect.insert({0, 0, 0, i});
    for (long long j : {0, 1, 2, 3, 5}) f4_expect.insert({0, 0, 1, j});
    CHECK(weight_set(f4p1) == f4_expect);

    ClassificationResult e7p7 = classify_acm(make("E7", 7));
    CHECK(weight_set(e7p7) == std::set<std::vector<long long>>{
                                  {0, 0, 0, 0, 0, 0, 0}, {0, 1, 0, 0, 0, 0, 0},
                                  {0, 2, 0, 0, 0, 0, 0}});
    CHECK(!e7p7.oracle_checked);  // default policy above rank 6
}

TEST_CASE("independent box sweep with the twist scan alone reproduces the lists") {
    // Loop over a coefficient box, filter by the twist-scan oracle only, and
    // compare with the classification output.
    auto box_sweep = [](const ParabolicData& pd, long long cap) {
        std::set<std::vector<long long>> found;
        std::vector<long long> a(pd.rs.rank(), 0);
        std::function<void(int)> walk = [&](int i) {
            if (i == pd.rs.rank()) {
                if (max_element(pd, {pd.rs.dynkin, a}) <= Rational(pd.dim) &&
                    acm_oracle(pd, {pd.rs.dynkin, a}, 2).acm)
                    found.insert(a);
                return;
            }
            if (i == pd.k - 1) {
                walk(i + 1);
                return;
            }
            for (long long v = 0; v <= cap; ++v) {
                a[i] = v;
                walk(i + 1);
            }
            a[i] = 0;
        };
        walk(0);
        return found;
    };

    ParabolicData g2p1 = make("G2", 1);
    CHECK(box_sweep(g2p1, 6) == weight_set(classify_acm(g2p1)));
    ParabolicData g2p2 = make("G2", 2);
    CHECK(box_sweep(g2p2, 6) == weight_set(classify_acm(g2p2)));
    ParabolicData f4p1 = make("F4", 1);
    CHECK(box_sweep(f4p1, 6) == weight_set(classify_acm(f4p1)));
}

TEST_CASE("classification output is independent of the worker count") {
    for (const char* spec : {"E6:1", "F4:1", "G2:2", "B4:2"}) {
        std::string s(spec);
        ParabolicData pd = make(s.substr(0, 2).c_str(), s[3] - '0');
        ClassifyOptions one, four;
        one.jobs = 1;
        four.jobs = 4;
        ClassificationResult a = classify_acm(pd, one);
        ClassificationResult b = classify_acm(pd, four);
        CHECK(a.acm_weights == b.acm_weights);
        CHECK(a.candidates_scanned == b.candidates_scanned);
    }
}

TEST_CASE("every classified weight passes both the criterion and the oracle") {
    for (const char* spec : {"E6:3", "F4:2", "B3:3", "C3:1", "D4:2", "A4:2"}) {
        std::string s(spec);
        ParabolicData pd = make(s.substr(0, 2).c_str(), s[3] - '0');
        ClassifyOptions opts;
        opts.use_oracle = 1;  // internal agreement assertion on every candidate
        ClassificationResult res = classify_acm(pd, opts);
        for (const auto& w : res.acm_weights) {
            CHECK(is_acm(pd, w).acm);
            CHECK(acm_oracle(pd, w, 2).acm);
        }
    }
}

TEST_CASE("built-in fixtures all pass") {
    FixtureReport report = verify_fixtures();
    CHECK(report.all_pass);
    CHECK(report.fixtures.size() == 7);
    for (const auto& f : report.fixtures) {
        CAPTURE(f.name);
        CHECK(f.pass);
    }
}

TEST_CASE("fixture harness reports weight-level diffs and handles the empty set") {
    // Perturbed expectation: drop one weight, add a bogus one.
    FixtureOutcome bad = run_classification_fixture("perturbed", {Series::G, 2}, 2,
                                                    {{0, 0}, {1, 0}, {3, 0}});
    CHECK(!bad.pass);
    CHECK(bad.detail.find("missing (3,0)") != std::string::npos);
    CHECK(bad.detail.find("unexpected (2,0)") != std::string::npos);

    FixtureReport empty = run_fixtures({});
    CHECK(empty.all_pass);
    CHECK(empty.fixtures.empty());
}

TEST_CASE("E6 classifications respect the diagram automorphism") {
    // Swapping nodes 1<->6 and 3<->5 is a symmetry of the root system, so it
    // must carry the ACM list at node k to the list at the mirrored node.
    auto mirror = [](const std::vector<long long>& a) {
        return std::vector<long long>{a[5], a[1], a[4], a[3], a[2], a[0]};
    };
    ClassifyOptions opts;
    opts.use_oracle = 0;  // agreement is covered elsewhere; this is a set check
    const std::pair<int, int> pairs[] = {{1, 6}, {3, 5}, {2, 2}, {4, 4}};
    for (auto [k, mk] : pairs) {
        std::set<std::vector<long long>> left, right;
        for (const auto& w : classify_acm(make("E6", k), opts).acm_weights)
            left.insert(mirror(w.a));
        for (const auto& w : classify_acm(make("E6", mk), opts).acm_weights) right.insert(w.a);
        CAPTURE(k);
        CHECK(left == right);
    }
}

TEST_CASE("classification documents round-trip through their JSON form") {
    acm::out::CommandResult res = acm::out::cmd_classify("F4", 1, -1, 1, 10'000'000, false, 2);
    const auto& doc = res.doc;
    CHECK(doc.at("schema_version") == "1");
    CHECK(doc.at("command") == "classify");
    auto reparsed = nlohmann::ordered_json::parse(doc.dump(2));
    CHECK(reparsed == doc);

    ParabolicData pd = make("F4", 1);
    ClassificationResult direct = classify_acm(pd);
    const auto& weights = reparsed.at("payload").at("acm_weights");
    REQUIRE(weights.size() == direct.acm_weights.size());
    for (size_t i = 0; i < weights.size(); ++i)
        CHECK(weights[i].get<std::vector<long long>>() == direct.acm_weights[i].a);
    CHECK(reparsed.at("payload").at("m_form").at("constant").get<std::string>() == "7");
}

TEST_CASE("profile documents reproduce the exact rationals") {
    acm::out::CommandResult res = acm::out::cmd_tprofile("E6", 2, {2, 0, 1, 0, 0, 0});
    auto reparsed = nlohmann::ordered_json::parse(res.doc.dump(2));

    ParabolicData pd = make("E6", 2);
    TProfile tp = t_profile(pd, {pd.rs.dynkin, {2, 0, 1, 0, 0, 0}});
    auto parse_rational = [](const std::string& s) {
        size_t slash = s.find('/');
        if (slash == std::string::npos) return Rational(std::stoll(s));
        return Rational(std::stoll(s.substr(0, slash)), std::stoll(s.substr(slash + 1)));
    };
    const auto& entries = reparsed.at("payload").at("entries");
    REQUIRE(entries.size() == tp.values.size());
    for (size_t i = 0; i < entries.size(); ++i) {
        CHECK(parse_rational(entries[i].at("value").get<std::string>()) == tp.values[i]);
        CHECK(parse_rational(entries[i].at("c").get<std::string>()) == pd.c[i]);
        const auto& root = entries[i].at("root");
        for (size_t j = 0; j < root.size(); ++j)
            CHECK(parse_rational(root[j].get<std::string>()) == pd.roots_k[i][j]);
    }
    CHECK(parse_rational(reparsed.at("payload").at("m_max").get<std::string>()) == tp.m_max);
}
