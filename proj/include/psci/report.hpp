#ifndef PSCI_REPORT_HPP
#define PSCI_REPORT_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "psci/lefschetz.hpp"

namespace psci {

inline constexpr const char* kVersion = "1.0.0";

/*
 * A node in a structured verification report. A parent passes exactly when
 * it has no failing child and was not marked failed itself.
 */
struct CheckNode {
    std::string name;
    bool pass = true;
    std::string detail;
    nlohmann::json data;
    std::vector<CheckNode> children;

    static CheckNode leaf(std::string name, bool pass, std::string detail = {});
    static CheckNode group(std::string name);

    CheckNode& add(CheckNode child);
    /// Adds a leaf and returns its verdict.
    bool check(std::string name, bool ok, std::string detail = {});
    void fail(std::string why);

    int count_leaves() const;
    int count_failures() const;
    /// Path of the first failing leaf, "" when everything passed.
    std::string first_failure() const;
};

nlohmann::json to_json(const CheckNode& node);
std::string to_text(const CheckNode& node);

struct VerifyOptions {
    bool fail_fast = false;
    SlpOptions slp;
    std::uint64_t seed = 1;
    int max_tries = 20;
    /// 0 means: read PSCI_WORKERS, else the hardware concurrency.
    int workers = 0;
};

/// Worker count from the PSCI_WORKERS environment variable (at least 1).
int default_worker_count();

/// Runs jobs on up to `workers` threads; results keep the job order.
std::vector<CheckNode> run_jobs(const std::vector<std::function<CheckNode()>>& jobs, int workers);

/// Runs jobs in order and stops after the first failure.
std::vector<CheckNode> run_jobs_fail_fast(const std::vector<std::function<CheckNode()>>& jobs);

/// Either of the above, depending on the options.
std::vector<CheckNode> run_jobs(const std::vector<std::function<CheckNode()>>& jobs, const VerifyOptions& opts);

std::string join_ints(const std::vector<long>& v);

}  // namespace psci

#endif  // PSCI_REPORT_HPP
