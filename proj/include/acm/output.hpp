#pragma once

// Builders for the machine-readable output documents (schema_version "1")
// and the table/csv renderers.  Documents are byte-stable for fixed inputs:
// key order is fixed, rationals serialize as lowest-terms "p/q" strings
// (integers without "/1"), weights as integer arrays.  Worker counts and
// output format are execution details and never appear in a document.

#include <json.hpp>
#include <string>

#include "acm/classify.hpp"

namespace acm::out {

using Json = nlohmann::ordered_json;

Json rational_json(const Rational& r);
Json vector_json(const AmbientVector& v);
Json bigint_json(const BigInt& n);  // number when < 2^53, decimal string otherwise

struct CommandResult {
    Json doc;
    int exit_code = 0;
};

CommandResult cmd_info(const std::string& type_token, int k);
CommandResult cmd_tprofile(const std::string& type_token, int k,
                           const std::vector<long long>& weight);
CommandResult cmd_is_acm(const std::string& type_token, int k,
                         const std::vector<long long>& weight, bool with_oracle, int pad);
CommandResult cmd_cohomology(const std::string& type_token, int k,
                             const std::vector<long long>& weight, long long t_lo, long long t_hi);
CommandResult cmd_classify(const std::string& type_token, int k, int use_oracle, int jobs,
                           long long max_candidates, bool force, int pad);
CommandResult cmd_verify_fixtures();

std::string render_table(const Json& doc);
std::string render_csv(const Json& doc);

}  // namespace acm::out
