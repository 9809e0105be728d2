#include "acm/classify.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>
#include <thread>

namespace acm {

namespace {

// Scaled integer weights of the budget inequality sum w_i a_i <= B over the
// free coordinates (node k excluded).
struct Budget {
    std::vector<long long> weights;  // one per free coordinate, > 0
    std::vector<int> coord;          // free coordinate -> 0-based node index
    long long budget = -1;           // < 0 means empty candidate set
};

Budget scaled_budget(const ParabolicData& pd) {
    MAffineForm form = m_affine_form(pd);
    if (!form.certified)
        throw internal_error("M affine form is not a certified pointwise maximum for " +
                             pd.rs.dynkin.str() + " k=" + std::to_string(pd.k));
    Rational slack = Rational(pd.dim) - form.constant;

    long long lcm = 1;
    for (int i = 0; i < pd.rs.rank(); ++i)
        lcm = std::lcm(lcm, form.coeffs[i].denominator());
    lcm = std::lcm(lcm, slack.denominator());

    Budget b;
    for (int i = 0; i < pd.rs.rank(); ++i) {
        if (i == pd.k - 1) continue;
        Rational w = Rational(lcm) * form.coeffs[i];
        long long wi = w.as_integer();
        if (wi <= 0) throw internal_error("nonpositive budget weight");
        b.weights.push_back(wi);
        b.coord.push_back(i);
    }
    Rational scaled = Rational(lcm) * slack;
    b.budget = scaled.sign() < 0 ? -1 : scaled.floor();
    return b;
}

BigInt count_lattice_points(const Budget& b) {
    if (b.budget < 0) return 0;
    // DP over coordinates: ways[r] = #points of the tail using residual r.
    std::vector<BigInt> ways(size_t(b.budget) + 1, 1);  // no coordinates left
    for (size_t i = b.weights.size(); i-- > 0;) {
        std::vector<BigInt> next(size_t(b.budget) + 1, 0);
        long long w = b.weights[i];
        for (long long r = 0; r <= b.budget; ++r) {
            BigInt acc = 0;
            for (long long v = 0; v * w <= r; ++v) acc += ways[size_t(r - v * w)];
            next[size_t(r)] = std::move(acc);
        }
        ways = std::move(next);
    }
    return ways[size_t(b.budget)];
}

}  // namespace

BigInt count_candidates(const ParabolicData& pd) { return count_lattice_points(scaled_budget(pd)); }

std::vector<WeightCoeffs> enumerate_candidates(const ParabolicData& pd, const EnumOptions& opts) {
    Budget b = scaled_budget(pd);
    BigInt total = count_lattice_points(b);
    if (!opts.force && total > BigInt(opts.max_candidates)) {
        std::ostringstream msg;
        msg << "candidate simplex for " << pd.rs.dynkin.str() << " k=" << pd.k << " has "
            << total << " lattice points, over the limit of " << opts.max_candidates
            << "; raise --max-candidates or pass --force to proceed";
        throw guard_error(msg.str(), total);
    }

    std::vector<WeightCoeffs> out;
    WeightCoeffs cur{pd.rs.dynkin, std::vector<long long>(pd.rs.rank(), 0)};
    // DFS in coordinate order with ascending values: lexicographic output.
    std::function<void(size_t, long long)> walk = [&](size_t i, long long rest) {
        if (i == b.weights.size()) {
            out.push_back(cur);
            return;
        }
        long long w = b.weights[i];
        for (long long v = 0; v * w <= rest; ++v) {
            cur.a[b.coord[i]] = v;
            walk(i + 1, rest - v * w);
        }
        cur.a[b.coord[i]] = 0;
    };
    if (b.budget >= 0) walk(0, b.budget);
    return out;
}

ClassificationResult classify_acm(const ParabolicData& pd, const ClassifyOptions& opts) {
    bool use_oracle = opts.use_oracle < 0 ? pd.rs.rank() <= 6 : opts.use_oracle > 0;
    std::vector<WeightCoeffs> candidates = enumerate_candidates(pd, opts.enum_opts);

    std::vector<char> verdicts(candidates.size(), 0);
    auto evaluate = [&](size_t begin, size_t end) {
        for (size_t i = begin; i < end; ++i) {
            AcmCertificate cert = is_acm(pd, candidates[i]);
            if (use_oracle) {
                OracleReport oracle = acm_oracle(pd, candidates[i], opts.pad);
                if (oracle.acm != cert.acm) {
                    std::ostringstream msg;
                    msg << "criterion/oracle disagreement on " << pd.rs.dynkin.str()
                        << " k=" << pd.k << " weight (";
                    for (size_t j = 0; j < candidates[i].a.size(); ++j)
                        msg << (j ? "," : "") << candidates[i].a[j];
                    msg << "): coverage says " << (cert.acm ? "ACM" : "not ACM")
                        << ", twist scan says " << (oracle.acm ? "ACM" : "not ACM");
                    throw internal_error(msg.str());
                }
            }
            verdicts[i] = cert.acm ? 1 : 0;
        }
    };

    int jobs = std::max(1, opts.jobs);
    if (jobs == 1 || candidates.size() < 2) {
        evaluate(0, candidates.size());
    } else {
        size_t nthreads = std::min<size_t>(jobs, candidates.size());
        size_t chunk = (candidates.size() + nthreads - 1) / nthreads;
        std::vector<std::thread> pool;
        std::vector<std::exception_ptr> errors(nthreads);
        for (size_t w = 0; w < nthreads; ++w) {
            size_t begin = w * chunk, end = std::min(candidates.size(), begin + chunk);
            pool.emplace_back([&, w, begin, end] {
                try {
                    evaluate(begin, end);
                } catch (...) {
                    errors[w] = std::current_exception();
                }
            });
        }
        for (auto& th : pool) th.join();
        for (auto& e : errors)
            if (e) std::rethrow_exception(e);
    }

    ClassificationResult result;
    result.dynkin = pd.rs.dynkin;
    result.k = pd.k;
    result.candidates_scanned = (long long)candidates.size();
    result.bound_used = pd.dim;
    result.oracle_checked = use_oracle;
    for (size_t i = 0; i < candidates.size(); ++i)
        if (verdicts[i]) result.acm_weights.push_back(candidates[i]);
    return result;
}

namespace {

std::string weight_str(const std::vector<long long>& a) {
    std::string s = "(";
    for (size_t i = 0; i < a.size(); ++i) s += (i ? "," : "") + std::to_string(a[i]);
    return s + ")";
}

FixtureOutcome diff_weight_lists(const std::string& name,
                                 const std::vector<std::vector<long long>>& expected,
                                 const std::vector<std::vector<long long>>& actual) {
    FixtureOutcome out{name, true, ""};
    std::ostringstream detail;
    for (const auto& w : expected) {
        if (std::find(actual.begin(), actual.end(), w) == actual.end()) {
            out.pass = false;
            detail << "missing " << weight_str(w) << "; ";
        }
    }
    for (const auto& w : actual) {
        if (std::find(expected.begin(), expected.end(), w) == expected.end()) {
            out.pass = false;
            detail << "unexpected " << weight_str(w) << "; ";
        }
    }
    out.detail = detail.str();
    return out;
}

FixtureOutcome step_matrix_example_fixture() {
    FixtureOutcome out{"E6 P2 step-matrix example", true, ""};
    std::ostringstream detail;
    RootSystem rs = build_root_system({Series::E, 6});
    ParabolicData pd = parabolic_data(std::move(rs), 2);

    auto check_profile = [&](const std::vector<long long>& a,
                             std::vector<Rational> expected_values, const Rational& expected_max) {
        TProfile tp = t_profile(pd, {pd.rs.dynkin, a});
        std::vector<Rational> got = tp.values;
        auto lt = [](const Rational& x, const Rational& y) { return x < y; };
        std::sort(got.begin(), got.end(), lt);
        std::sort(expected_values.begin(), expected_values.end(), lt);
        if (got != expected_values) {
            out.pass = false;
            detail << "value multiset mismatch for " << weight_str(a) << "; ";
        }
        if (tp.m_max != expected_max) {
            out.pass = false;
            detail << "max mismatch for " << weight_str(a) << ": got " << tp.m_max.str() << "; ";
        }
    };

    check_profile({2, 0, 1, 0, 0, 0},
                  {1, 2, 3, 4, 14, 4, 5, 6, 13, 11, 6, 7, 12, 10, 9, 8, 11, 9, 8, 7,
                   Rational(15, 2)},
                  14);
    check_profile({0, 0, 0, 1, 1, 0},
                  {1, 3, 5, 6, 15, 4, 6, 7, 13, 12, 8, 9, 11, 10, 8, 11, 10, 9, 7, 5, 8}, 15);

    AcmCertificate lam = is_acm(pd, {pd.rs.dynkin, {2, 0, 1, 0, 0, 0}});
    if (!lam.acm) {
        out.pass = false;
        detail << "expected ACM verdict for (2,0,1,0,0,0); ";
    }
    AcmCertificate mu = is_acm(pd, {pd.rs.dynkin, {0, 0, 0, 1, 1, 0}});
    if (mu.acm || mu.missing_integer != std::optional<long long>(2)) {
        out.pass = false;
        detail << "expected non-ACM with least gap 2 for (0,0,0,1,1,0); ";
    }
    out.detail = detail.str();
    return out;
}

std::vector<std::vector<long long>> cayley_plane_list() {
    std::vector<std::vector<long long>> v;
    for (long long i = 0; i <= 1; ++i)
        for (long long j = 0; j <= 3; ++j) v.push_back({0, 0, 0, 0, i, j});
    return v;
}

std::vector<std::vector<long long>> freudenthal_list() {
    return {{0, 0, 0, 0, 0, 0, 0}, {0, 1, 0, 0, 0, 0, 0}, {0, 2, 0, 0, 0, 0, 0}};
}

std::vector<std::vector<long long>> e8_p8_list() {
    std::vector<std::vector<long long>> v;
    for (long long i = 0; i <= 5; ++i) v.push_back({i, 0, 0, 0, 0, 0, 0, 0});
    for (long long i = 0; i <= 5; ++i) v.push_back({i, 0, 1, 0, 0, 0, 0, 0});
    for (long long j = 1; j <= 4; ++j) v.push_back({j, 1, 0, 0, 0, 0, 0, 0});
    for (long long k = 1; k <= 2; ++k) v.push_back({0, k, 0, 0, 0, 0, 0, 0});
    return v;
}

std::vector<std::vector<long long>> f4_p1_list() {
    std::vector<std::vector<long long>> v;
    for (long long i = 0; i <= 4; ++i) v.push_back({0, 0, 0, i});
    for (long long j : {0, 1, 2, 3, 5}) v.push_back({0, 0, 1, j});
    return v;
}

}  // namespace

FixtureOutcome run_classification_fixture(const std::string& name, DynkinType type, int k,
                                          const std::vector<std::vector<long long>>& expected) {
    ParabolicData pd = parabolic_data(build_root_system(type), k);
    ClassifyOptions opts;
    opts.use_oracle = 1;  // fixtures always cross-check
    ClassificationResult res = classify_acm(pd, opts);
    std::vector<std::vector<long long>> actual;
    for (const auto& w : res.acm_weights) actual.push_back(w.a);
    return diff_weight_lists(name, expected, actual);
}

const std::vector<Fixture>& builtin_fixtures() {
    static const std::vector<Fixture> fixtures = {
        {"E6 P2 step-matrix example", [] { return step_matrix_example_fixture(); }},
        {"E6 P1 Cayley plane",
         [] {
             return run_classification_fixture("E6 P1 Cayley plane", {Series::E, 6}, 1,
                                               cayley_plane_list());
         }},
        {"E7 P7 Freudenthal variety",
         [] {
             return run_classification_fixture("E7 P7 Freudenthal variety", {Series::E, 7}, 7,
                                               freudenthal_list());
         }},
        {"E8 P8",
         [] { return run_classification_fixture("E8 P8", {Series::E, 8}, 8, e8_p8_list()); }},
        {"F4 P1",
         [] { return run_classification_fixture("F4 P1", {Series::F, 4}, 1, f4_p1_list()); }},
        {"G2 P1",
         [] { return run_classification_fixture("G2 P1", {Series::G, 2}, 1, {{0, 0}}); }},
        {"G2 P2",
         [] {
             return run_classification_fixture("G2 P2", {Series::G, 2}, 2,
                                               {{0, 0}, {1, 0}, {2, 0}});
         }},
    };
    return fixtures;
}

FixtureReport run_fixtures(const std::vector<Fixture>& fixtures) {
    FixtureReport report;
    for (const auto& [name, run] : fixtures) {
        (void)name;
        FixtureOutcome outcome = run();
        report.all_pass = report.all_pass && outcome.pass;
        report.fixtures.push_back(std::move(outcome));
    }
    return report;
}

FixtureReport verify_fixtures() { return run_fixtures(builtin_fixtures()); }

}  // namespace acm
