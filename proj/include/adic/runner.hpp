#ifndef ADIC_RUNNER_HPP
#define ADIC_RUNNER_HPP

#include <json.hpp>

#include "adic/dsl.hpp"

namespace adic {

struct RunOptions {
    int kmax = 4;
    int depth = 4;
    bool strict = false;
    unsigned long seed = 0;
};

/// Machine-readable result of one command, serialized as one JSON line
/// with schema tag "adic-report/1".
struct Report {
    std::string command;
    std::string inputs_digest;
    std::string verdict;  // pass | fail | undetermined-at-bound
    nlohmann::json witnesses = nlohmann::json::array();
    nlohmann::json bounds = nlohmann::json::object();
    nlohmann::json detail = nlohmann::json::object();
    double timing_ms = 0.0;
};

std::vector<Report> run_script(const SessionScript& script, const RunOptions& options);

nlohmann::json report_to_json(const Report& r);
std::string report_summary_line(const Report& r);

/// FNV-1a, the stable digest used in reports.
std::string fnv1a_hex(const std::string& data);

} // namespace adic

#endif
