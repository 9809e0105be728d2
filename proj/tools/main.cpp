// Command-line front end: inspect root data, print step-value profiles,
// test ACM-ness, emit cohomology tables, run classifications.

#include <CLI11.hpp>
#include <iostream>
#include <string>
#include <vector>

#include "acm/output.hpp"

namespace {

std::vector<long long> parse_weight_csv(const std::string& csv, const std::string& type_token) {
    acm::DynkinType type = acm::DynkinType::parse(type_token);
    std::vector<long long> a;
    size_t pos = 0;
    while (pos <= csv.size()) {
        size_t comma = csv.find(',', pos);
        std::string tok = csv.substr(pos, comma == std::string::npos ? comma : comma - pos);
        try {
            size_t used = 0;
            a.push_back(std::stoll(tok, &used));
            if (used != tok.size()) throw std::invalid_argument(tok);
        } catch (const std::exception&) {
            throw std::invalid_argument("cannot parse weight coefficient '" + tok + "'");
        }
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    if ((int)a.size() != type.rank)
        throw std::invalid_argument("weight for " + type.str() + " needs " +
                                    std::to_string(type.rank) + " comma-separated coefficients, got " +
                                    std::to_string(a.size()));
    return a;
}

std::pair<long long, long long> parse_twist_range(const std::string& s) {
    size_t dots = s.find("..");
    if (dots == std::string::npos)
        throw std::invalid_argument("twist range must look like N..M");
    try {
        long long lo = std::stoll(s.substr(0, dots));
        long long hi = std::stoll(s.substr(dots + 2));
        if (lo > hi) throw std::invalid_argument(s);
        return {lo, hi};
    } catch (const std::exception&) {
        throw std::invalid_argument("cannot parse twist range '" + s + "' (expected N..M with N <= M)");
    }
}

void emit(const acm::out::CommandResult& result, const std::string& format) {
    if (format == "json")
        std::cout << result.doc.dump(2) << "\n";
    else if (format == "csv")
        std::cout << acm::out::render_csv(result.doc);
    else
        std::cout << acm::out::render_table(result.doc);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"homogeneous ACM bundle calculator"};
    app.require_subcommand(1);
    app.fallthrough();  // global flags may follow the subcommand

    std::string format = "table";
    app.add_option("--format", format, "output format")
        ->check(CLI::IsMember({"table", "json", "csv"}))
        ->capture_default_str();
    bool oracle = false;
    app.add_flag("--oracle", oracle, "cross-check with the cohomology twist scan");
    int pad = 2;
    app.add_option("--pad", pad, "extra twists scanned beyond the provably uniform region")
        ->capture_default_str();
    long long max_candidates = 10'000'000;
    app.add_option("--max-candidates", max_candidates, "classification candidate guard")
        ->capture_default_str();
    bool force = false;
    app.add_flag("--force", force, "enumerate past the candidate guard");
    int jobs = 1;
    app.add_option("--jobs", jobs, "worker threads for classification")->capture_default_str();

    std::string type_token, weight_csv, twists = "0..0";
    int k = 1;

    CLI::App* info = app.add_subcommand("info", "root and parabolic data for a type");
    info->add_option("type", type_token, "Dynkin type, e.g. E6")->required();
    info->add_option("--k,-k,k", k, "node index (1-based)")->required();

    CLI::App* tprofile = app.add_subcommand("tprofile", "step values of a bundle weight");
    tprofile->add_option("type", type_token)->required();
    tprofile->add_option("k", k)->required();
    tprofile->add_option("weight", weight_csv, "comma-separated coefficients")->required();

    CLI::App* isacm = app.add_subcommand("is-acm", "decide whether the bundle is ACM");
    isacm->add_option("type", type_token)->required();
    isacm->add_option("k", k)->required();
    isacm->add_option("weight", weight_csv)->required();

    CLI::App* coh = app.add_subcommand("cohomology", "per-twist cohomology table");
    coh->add_option("type", type_token)->required();
    coh->add_option("k", k)->required();
    coh->add_option("weight", weight_csv)->required();
    coh->add_option("--twists", twists, "inclusive twist range N..M")->capture_default_str();

    CLI::App* classify = app.add_subcommand("classify", "all initialized ACM weights on G/P_k");
    classify->add_option("type", type_token)->required();
    classify->add_option("k", k)->required();
    bool oracle_off = false;
    classify->add_flag("--no-oracle", oracle_off, "skip the twist-scan cross-check");

    CLI::App* verify = app.add_subcommand("verify-fixtures", "run the built-in result fixtures");
    (void)verify;

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        acm::out::CommandResult result;
        if (info->parsed()) {
            result = acm::out::cmd_info(type_token, k);
        } else if (tprofile->parsed()) {
            result = acm::out::cmd_tprofile(type_token, k, parse_weight_csv(weight_csv, type_token));
        } else if (isacm->parsed()) {
            result = acm::out::cmd_is_acm(type_token, k, parse_weight_csv(weight_csv, type_token),
                                          oracle, pad);
        } else if (coh->parsed()) {
            auto [lo, hi] = parse_twist_range(twists);
            result = acm::out::cmd_cohomology(type_token, k,
                                              parse_weight_csv(weight_csv, type_token), lo, hi);
        } else if (classify->parsed()) {
            int use_oracle = oracle ? 1 : (oracle_off ? 0 : -1);
            result = acm::out::cmd_classify(type_token, k, use_oracle, jobs, max_candidates,
                                            force, pad);
        } else {
            result = acm::out::cmd_verify_fixtures();
        }
        emit(result, format);
        return result.exit_code;
    } catch (const acm::guard_error& e) {
        std::cerr << "refused: " << e.what() << "\n";
        return 4;
    } catch (const acm::internal_error& e) {
        std::cerr << "internal consistency failure: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
