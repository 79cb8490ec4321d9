#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "qcantor/reduce.hpp"

namespace qcantor {

inline constexpr const char* schema_version = "1";

struct ReductionRecord {
    std::string prefix;
    std::string factor;
    std::string a_form;
    std::string b_form;
    std::string a_display;
    std::string b_display;
    long n_start = 1;
    /// First coefficients from n_start on, as decimal text.
    std::vector<std::string> a_values;
    std::vector<std::string> b_values;

    friend bool operator==(const ReductionRecord&, const ReductionRecord&) = default;
};

struct HypothesisRecord {
    std::string name;
    std::string status;
    std::optional<long> crossover;
    long prefix_depth = 0;
    std::string evidence;

    friend bool operator==(const HypothesisRecord&, const HypothesisRecord&) = default;
};

struct CertificateDocument {
    std::string schema_version;
    std::string series;
    std::string point;
    ReductionRecord reduction;
    std::string criterion;
    std::vector<HypothesisRecord> hypotheses;
    std::string verdict;
    std::string residual_width;
    std::vector<std::string> notes;

    friend bool operator==(const CertificateDocument&, const CertificateDocument&) = default;
};

CertificateDocument make_document(const CertifiedReduction& c);

void to_json(nlohmann::json& j, const ReductionRecord& r);
void from_json(const nlohmann::json& j, ReductionRecord& r);
void to_json(nlohmann::json& j, const HypothesisRecord& h);
void from_json(const nlohmann::json& j, HypothesisRecord& h);
void to_json(nlohmann::json& j, const CertificateDocument& d);
void from_json(const nlohmann::json& j, CertificateDocument& d);

namespace exit_code {
inline constexpr int ok = 0;
inline constexpr int not_irrational = 1;
inline constexpr int usage = 2;
inline constexpr int internal = 3;
}  // namespace exit_code

/// "1e-N" gives exactly 10^-N; otherwise "p/q" or an integer.
Rational parse_eps(const std::string& text);

/// Runs the command line (without the program name) and returns the exit code.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace qcantor
