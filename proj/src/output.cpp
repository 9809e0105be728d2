#include "acm/output.hpp"

#include <algorithm>
#include <sstream>

namespace acm::out {

namespace {

Json envelope(const std::string& command, Json inputs, Json payload) {
    Json doc;
    doc["schema_version"] = "1";
    doc["command"] = command;
    doc["inputs"] = std::move(inputs);
    doc["payload"] = std::move(payload);
    return doc;
}

ParabolicData make_pd(const std::string& type_token, int k) {
    return parabolic_data(build_root_system(DynkinType::parse(type_token)), k);
}

WeightCoeffs make_weight(const ParabolicData& pd, const std::vector<long long>& weight) {
    WeightCoeffs w{pd.rs.dynkin, weight};
    check_bundle_weight(pd, w);
    return w;
}

Json m_form_json(const MAffineForm& form) {
    Json j;
    Json coeffs = Json::array();
    for (const auto& c : form.coeffs) coeffs.push_back(rational_json(c));
    j["coeffs"] = std::move(coeffs);
    j["constant"] = rational_json(form.constant);
    return j;
}

Json n_map_json(const TProfile& tp) {
    Json j = Json::object();
    long long top = tp.m_max.floor();
    if (top <= 4096) {  // zero counts included so gaps are visible directly
        for (long long l = 1; l <= top; ++l) j[std::to_string(l)] = tp.n_at(l);
    } else {
        for (const auto& [l, count] : tp.n) j[std::to_string(l)] = count;
    }
    return j;
}

// The 5x5 step-matrix layout used on E6/P_2: above the diagonal the entries
// for e_r + e_c, below it the entries for the half-roots negative at
// coordinates {c, r, 6, 7}, and in the last diagonal cell the entry for the
// half-root negative at {6, 7}.
Json e6_p2_matrix(const ParabolicData& pd, const TProfile& tp) {
    auto value_of = [&](const AmbientVector& root) -> std::string {
        for (size_t i = 0; i < pd.roots_k.size(); ++i)
            if (pd.roots_k[i] == root) return tp.values[i].str();
        throw internal_error("step-matrix root not found among Phi^+_k");
    };
    auto half_root = [&](std::initializer_list<int> minus) {
        AmbientVector v(8, Rational(1, 2));
        for (int i : minus) v[i] = Rational(-1, 2);
        return v;
    };
    auto unit2 = [&](int i, int j) {
        AmbientVector v(8, Rational(0));
        v[i] = 1;
        v[j] = 1;
        return v;
    };
    Json rows = Json::array();
    for (int r = 1; r <= 5; ++r) {
        Json row = Json::array();
        for (int c = 1; c <= 5; ++c) {
            if (r < c)
                row.push_back(value_of(unit2(r - 1, c - 1)));
            else if (r > c)
                row.push_back(value_of(half_root({c - 1, r - 1, 5, 6})));
            else if (r == 5)
                row.push_back(value_of(half_root({5, 6})));
            else
                row.push_back("0");
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace

Json rational_json(const Rational& r) { return r.str(); }

Json vector_json(const AmbientVector& v) {
    Json j = Json::array();
    for (const auto& x : v) j.push_back(x.str());
    return j;
}

Json bigint_json(const BigInt& n) {
    static const BigInt limit = BigInt(1) << 53;
    if (n < limit) return (long long)n;
    std::ostringstream os;
    os << n;
    return os.str();
}

CommandResult cmd_info(const std::string& type_token, int k) {
    ParabolicData pd = make_pd(type_token, k);
    Json inputs;
    inputs["type"] = pd.rs.dynkin.str();
    inputs["k"] = k;

    Json payload;
    payload["type"] = pd.rs.dynkin.str();
    payload["rank"] = pd.rs.rank();
    payload["positive_roots"] = (long long)pd.rs.positive_roots.size();
    payload["k"] = k;
    payload["dim"] = pd.dim;
    payload["roots_k"] = pd.dim;
    payload["m_form"] = m_form_json(m_affine_form(pd));
    return {envelope("info", std::move(inputs), std::move(payload)), 0};
}

CommandResult cmd_tprofile(const std::string& type_token, int k,
                           const std::vector<long long>& weight) {
    ParabolicData pd = make_pd(type_token, k);
    auto [lambda, twist] = normalize(pd, make_weight(pd, weight));
    TProfile tp = t_profile(pd, lambda);

    Json inputs;
    inputs["type"] = pd.rs.dynkin.str();
    inputs["k"] = k;
    inputs["weight"] = weight;

    Json payload;
    payload["type"] = pd.rs.dynkin.str();
    payload["k"] = k;
    payload["weight"] = lambda.a;
    payload["twist"] = twist;
    if (twist != 0)
        payload["notice"] = "input weight was not initialized; profile computed after "
                            "stripping twist " + std::to_string(twist) + " at node " +
                            std::to_string(k);
    payload["dim"] = pd.dim;
    Json entries = Json::array();
    for (size_t i = 0; i < pd.roots_k.size(); ++i) {
        Json e;
        e["root"] = vector_json(pd.roots_k[i]);
        e["c"] = rational_json(pd.c[i]);
        e["value"] = rational_json(tp.values[i]);
        entries.push_back(std::move(e));
    }
    payload["entries"] = std::move(entries);
    payload["m_max"] = rational_json(tp.m_max);
    payload["n"] = n_map_json(tp);
    if (pd.rs.dynkin == DynkinType{Series::E, 6} && k == 2)
        payload["matrix"] = e6_p2_matrix(pd, tp);
    return {envelope("tprofile", std::move(inputs), std::move(payload)), 0};
}

CommandResult cmd_is_acm(const std::string& type_token, int k,
                         const std::vector<long long>& weight, bool with_oracle, int pad) {
    ParabolicData pd = make_pd(type_token, k);
    WeightCoeffs w = make_weight(pd, weight);
    auto [lambda, twist] = normalize(pd, w);
    AcmCertificate cert = is_acm(pd, w);

    Json inputs;
    inputs["type"] = pd.rs.dynkin.str();
    inputs["k"] = k;
    inputs["weight"] = weight;
    inputs["oracle"] = with_oracle;
    if (with_oracle) inputs["pad"] = pad;

    Json payload;
    payload["type"] = pd.rs.dynkin.str();
    payload["k"] = k;
    payload["weight"] = lambda.a;
    payload["twist"] = twist;
    payload["verdict"] = cert.acm;
    payload["m_max"] = rational_json(cert.m_max);
    Json certificate;
    if (cert.out_of_range_value)
        certificate["out_of_range_value"] = rational_json(*cert.out_of_range_value);
    else if (cert.missing_integer)
        certificate["missing_integer"] = *cert.missing_integer;
    else
        certificate["covered"] = cert.covered;
    payload["certificate"] = std::move(certificate);

    int exit_code = cert.acm ? 0 : 1;
    if (with_oracle) {
        OracleReport oracle = acm_oracle(pd, lambda, pad);
        Json oj;
        oj["verdict"] = oracle.acm;
        oj["agrees"] = oracle.acm == cert.acm;
        payload["oracle"] = std::move(oj);
        if (oracle.acm != cert.acm) exit_code = 3;
    }
    return {envelope("is-acm", std::move(inputs), std::move(payload)), exit_code};
}

CommandResult cmd_cohomology(const std::string& type_token, int k,
                             const std::vector<long long>& weight, long long t_lo, long long t_hi) {
    if (t_lo > t_hi) throw std::invalid_argument("empty twist range");
    ParabolicData pd = make_pd(type_token, k);
    auto [lambda, twist] = normalize(pd, make_weight(pd, weight));
    if (twist != 0)
        throw std::invalid_argument("cohomology expects an initialized weight (a_k = 0)");

    Json inputs;
    inputs["type"] = pd.rs.dynkin.str();
    inputs["k"] = k;
    inputs["weight"] = weight;
    inputs["twists"] = std::to_string(t_lo) + ".." + std::to_string(t_hi);

    Json payload;
    payload["type"] = pd.rs.dynkin.str();
    payload["k"] = k;
    payload["weight"] = lambda.a;
    payload["dim"] = pd.dim;
    Json rows = Json::array();
    for (long long t = t_lo; t <= t_hi; ++t) {
        CohomologyRow row = cohomology(pd, lambda, t);
        Json r;
        r["t"] = t;
        if (row.cls.singular) {
            r["status"] = "singular";
        } else {
            r["status"] = "regular";
            r["index"] = row.cls.index;
            r["degree"] = *row.nonzero_degree;
            r["weight"] = row.rep_highest_weight->a;
            r["dimension"] = bigint_json(*row.rep_dimension);
        }
        rows.push_back(std::move(r));
    }
    payload["twists"] = std::move(rows);
    return {envelope("cohomology", std::move(inputs), std::move(payload)), 0};
}

CommandResult cmd_classify(const std::string& type_token, int k, int use_oracle, int jobs,
                           long long max_candidates, bool force, int pad) {
    ParabolicData pd = make_pd(type_token, k);
    ClassifyOptions opts;
    opts.use_oracle = use_oracle;
    opts.jobs = jobs;
    opts.pad = pad;
    opts.enum_opts.max_candidates = max_candidates;
    opts.enum_opts.force = force;
    ClassificationResult res = classify_acm(pd, opts);

    Json inputs;
    inputs["type"] = pd.rs.dynkin.str();
    inputs["k"] = k;

    Json payload;
    payload["type"] = res.dynkin.str();
    payload["k"] = res.k;
    payload["dim"] = pd.dim;
    payload["bound_used"] = res.bound_used;
    payload["m_form"] = m_form_json(m_affine_form(pd));
    payload["candidates_scanned"] = res.candidates_scanned;
    payload["oracle_checked"] = res.oracle_checked;
    Json weights = Json::array();
    for (const auto& w : res.acm_weights) weights.push_back(w.a);
    payload["acm_weights"] = std::move(weights);
    return {envelope("classify", std::move(inputs), std::move(payload)), 0};
}

CommandResult cmd_verify_fixtures() {
    FixtureReport report = verify_fixtures();
    Json payload;
    Json rows = Json::array();
    for (const auto& f : report.fixtures) {
        Json r;
        r["name"] = f.name;
        r["pass"] = f.pass;
        if (!f.pass) r["detail"] = f.detail;
        rows.push_back(std::move(r));
    }
    payload["fixtures"] = std::move(rows);
    payload["all_pass"] = report.all_pass;
    return {envelope("verify-fixtures", Json::object(), std::move(payload)),
            report.all_pass ? 0 : 1};
}

namespace {

std::string root_str(const Json& root) {
    std::string s = "(";
    for (size_t i = 0; i < root.size(); ++i) s += (i ? " " : "") + root[i].get<std::string>();
    return s + ")";
}

std::string weight_row(const Json& w) {
    std::string s;
    for (size_t i = 0; i < w.size(); ++i)
        s += (i ? "," : "") + std::to_string(w[i].get<long long>());
    return s;
}

std::string gaps_line(const Json& n) {
    std::string gaps;
    for (auto it = n.begin(); it != n.end(); ++it)
        if (it.value().get<int>() == 0) gaps += (gaps.empty() ? "" : ", ") + it.key();
    return gaps;
}

void render_matrix(std::ostringstream& os, const Json& matrix) {
    size_t width = 0;
    for (const auto& row : matrix)
        for (const auto& cell : row) width = std::max(width, cell.get<std::string>().size());
    for (const auto& row : matrix) {
        os << "  ";
        for (const auto& cell : row) {
            std::string s = cell.get<std::string>();
            os << std::string(width - s.size() + 2, ' ') << s;
        }
        os << "\n";
    }
}

}  // namespace

std::string render_table(const Json& doc) {
    const std::string cmd = doc["command"];
    const Json& p = doc["payload"];
    std::ostringstream os;
    if (cmd == "info") {
        os << "type            " << p["type"].get<std::string>() << "\n"
           << "rank            " << p["rank"] << "\n"
           << "positive roots  " << p["positive_roots"] << "\n"
           << "k               " << p["k"] << "\n"
           << "dim G/P_k       " << p["dim"] << "\n"
           << "|Phi^+_k|       " << p["roots_k"] << "\n";
        os << "M form          ";
        const Json& m = p["m_form"];
        for (size_t i = 0; i < m["coeffs"].size(); ++i) {
            std::string c = m["coeffs"][i].get<std::string>();
            if (c != "0") os << (c == "1" ? "" : c + "*") << "a" << (i + 1) << " + ";
        }
        os << m["constant"].get<std::string>() << "\n";
    } else if (cmd == "tprofile") {
        os << p["type"].get<std::string>() << " k=" << p["k"] << " weight ("
           << weight_row(p["weight"]) << ")";
        if (p["twist"].get<long long>() != 0) os << " [twist " << p["twist"] << " stripped]";
        os << "\n";
        if (p.contains("matrix")) {
            render_matrix(os, p["matrix"]);
        } else {
            for (const auto& e : p["entries"])
                os << "  " << root_str(e["root"]) << "  c=" << e["c"].get<std::string>()
                   << "  value=" << e["value"].get<std::string>() << "\n";
        }
        os << "max " << p["m_max"].get<std::string>() << "\n";
        std::string gaps = gaps_line(p["n"]);
        os << "integer gaps in [1, max]: " << (gaps.empty() ? "none" : gaps) << "\n";
    } else if (cmd == "is-acm") {
        os << p["type"].get<std::string>() << " k=" << p["k"] << " weight ("
           << weight_row(p["weight"]) << ")";
        if (p["twist"].get<long long>() != 0) os << " [twist " << p["twist"] << " stripped]";
        os << "\n";
        os << "verdict: " << (p["verdict"].get<bool>() ? "ACM" : "not ACM") << "\n";
        os << "max " << p["m_max"].get<std::string>() << "\n";
        const Json& cert = p["certificate"];
        if (cert.contains("missing_integer"))
            os << "least missing integer: " << cert["missing_integer"] << "\n";
        else if (cert.contains("out_of_range_value"))
            os << "integer value out of range: " << cert["out_of_range_value"].get<std::string>()
               << "\n";
        else
            os << "covered: 1.." << p["m_max"].get<std::string>() << "\n";
        if (p.contains("oracle"))
            os << "oracle: " << (p["oracle"]["verdict"].get<bool>() ? "ACM" : "not ACM") << " ("
               << (p["oracle"]["agrees"].get<bool>() ? "agrees" : "DISAGREES") << ")\n";
    } else if (cmd == "cohomology") {
        os << p["type"].get<std::string>() << " k=" << p["k"] << " weight ("
           << weight_row(p["weight"]) << ")  dim " << p["dim"] << "\n";
        for (const auto& r : p["twists"]) {
            os << "  t=" << r["t"];
            if (r["status"] == "singular") {
                os << "  all cohomology vanishes\n";
            } else {
                os << "  H^" << r["degree"] << " nonzero, highest weight ("
                   << weight_row(r["weight"]) << "), dimension ";
                if (r["dimension"].is_string())
                    os << r["dimension"].get<std::string>();
                else
                    os << r["dimension"];
                os << "\n";
            }
        }
    } else if (cmd == "classify") {
        os << p["type"].get<std::string>() << " k=" << p["k"] << "  dim " << p["dim"]
           << "  candidates " << p["candidates_scanned"] << "  oracle "
           << (p["oracle_checked"].get<bool>() ? "on" : "off") << "\n";
        os << p["acm_weights"].size() << " ACM weights:\n";
        for (const auto& w : p["acm_weights"]) os << "  (" << weight_row(w) << ")\n";
    } else if (cmd == "verify-fixtures") {
        for (const auto& f : p["fixtures"]) {
            os << (f["pass"].get<bool>() ? "[pass] " : "[FAIL] ") << f["name"].get<std::string>();
            if (!f["pass"].get<bool>()) os << "  " << f["detail"].get<std::string>();
            os << "\n";
        }
        os << (p["all_pass"].get<bool>() ? "all fixtures pass" : "fixture failures present")
           << "\n";
    } else {
        os << doc.dump(2) << "\n";
    }
    return os.str();
}

std::string render_csv(const Json& doc) {
    const std::string cmd = doc["command"];
    const Json& p = doc["payload"];
    std::ostringstream os;
    if (cmd == "classify") {
        size_t rank = 0;
        if (!p["acm_weights"].empty()) rank = p["acm_weights"][0].size();
        for (size_t i = 0; i < rank; ++i) os << (i ? "," : "") << "a" << (i + 1);
        os << "\n";
        for (const auto& w : p["acm_weights"]) os << weight_row(w) << "\n";
    } else if (cmd == "tprofile") {
        os << "root,c,value\n";
        for (const auto& e : p["entries"]) {
            std::string root;
            for (const auto& x : e["root"])
                root += (root.empty() ? "" : " ") + x.get<std::string>();
            os << root << "," << e["c"].get<std::string>() << "," << e["value"].get<std::string>()
               << "\n";
        }
    } else if (cmd == "cohomology") {
        os << "t,status,degree,dimension\n";
        for (const auto& r : p["twists"]) {
            os << r["t"] << "," << r["status"].get<std::string>() << ",";
            if (r["status"] == "regular") {
                os << r["degree"] << ",";
                if (r["dimension"].is_string())
                    os << r["dimension"].get<std::string>();
                else
                    os << r["dimension"];
            } else {
                os << ",";
            }
            os << "\n";
        }
    } else {
        // key,value rows for the scalar commands
        os << "key,value\n";
        for (auto it = p.begin(); it != p.end(); ++it) {
            if (it.value().is_structured()) continue;
            os << it.key() << "," << (it.value().is_string() ? it.value().get<std::string>()
                                                             : it.value().dump())
               << "\n";
        }
    }
    return os.str();
}

}  // namespace acm::out
