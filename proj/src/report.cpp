#include "psci/report.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <sstream>
#include <thread>

namespace psci {

CheckNode CheckNode::leaf(std::string name, bool pass, std::string detail) {
    CheckNode n;
    n.name = std::move(name);
    n.pass = pass;
    n.detail = std::move(detail);
    return n;
}

CheckNode CheckNode::group(std::string name) { return leaf(std::move(name), true); }

CheckNode& CheckNode::add(CheckNode child) {
    pass = pass && child.pass;
    children.push_back(std::move(child));
    return children.back();
}

bool CheckNode::check(std::string name, bool ok, std::string detail) {
    add(leaf(std::move(name), ok, std::move(detail)));
    return ok;
}

void CheckNode::fail(std::string why) {
    pass = false;
    if (!why.empty()) detail = detail.empty() ? why : detail + "; " + why;
}

int CheckNode::count_leaves() const {
    if (children.empty()) return 1;
    int n = 0;
    for (const auto& c : children) n += c.count_leaves();
    return n;
}

int CheckNode::count_failures() const {
    if (children.empty()) return pass ? 0 : 1;
    int n = 0;
    for (const auto& c : children) n += c.count_failures();
    return (n == 0 && !pass) ? 1 : n;
}

std::string CheckNode::first_failure() const {
    if (pass) return "";
    for (const auto& c : children)
        if (!c.pass) return name + " / " + c.first_failure();
    return name + (detail.empty() ? "" : " (" + detail + ")");
}

nlohmann::json to_json(const CheckNode& node) {
    nlohmann::json j = {{"name", node.name}, {"pass", node.pass}};
    if (!node.detail.empty()) j["detail"] = node.detail;
    if (!node.data.is_null()) j["data"] = node.data;
    if (!node.children.empty()) {
        j["children"] = nlohmann::json::array();
        for (const auto& c : node.children) j["children"].push_back(to_json(c));
    }
    return j;
}

namespace {

void text_rec(const CheckNode& node, int depth, std::ostringstream& os) {
    os << std::string(2 * depth, ' ') << (node.pass ? "[pass] " : "[FAIL] ") << node.name;
    if (!node.detail.empty()) os << ": " << node.detail;
    os << '\n';
    for (const auto& c : node.children) text_rec(c, depth + 1, os);
}

}  // namespace

std::string to_text(const CheckNode& node) {
    std::ostringstream os;
    text_rec(node, 0, os);
    return os.str();
}

int default_worker_count() {
    if (const char* env = std::getenv("PSCI_WORKERS")) {
        const int n = std::atoi(env);
        if (n >= 1) return n;
    }
    return std::max(1u, std::thread::hardware_concurrency());
}

std::vector<CheckNode> run_jobs(const std::vector<std::function<CheckNode()>>& jobs, int workers) {
    std::vector<CheckNode> out(jobs.size());
    if (workers <= 1 || jobs.size() <= 1) {
        for (std::size_t k = 0; k < jobs.size(); ++k) out[k] = jobs[k]();
        return out;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::exception_ptr> errors(jobs.size());
    auto worker = [&] {
        for (std::size_t k; (k = next++) < jobs.size();) {
            try {
                out[k] = jobs[k]();
            } catch (...) {
                errors[k] = std::current_exception();
            }
        }
    };
    std::vector<std::thread> pool;
    const std::size_t n = std::min<std::size_t>(workers, jobs.size());
    for (std::size_t t = 0; t < n; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
    return out;
}

std::vector<CheckNode> run_jobs_fail_fast(const std::vector<std::function<CheckNode()>>& jobs) {
    std::vector<CheckNode> out;
    for (const auto& job : jobs) {
        out.push_back(job());
        if (!out.back().pass) break;
    }
    return out;
}

std::vector<CheckNode> run_jobs(const std::vector<std::function<CheckNode()>>& jobs, const VerifyOptions& opts) {
    if (opts.fail_fast) return run_jobs_fail_fast(jobs);
    return run_jobs(jobs, opts.workers > 0 ? opts.workers : default_worker_count());
}

std::string join_ints(const std::vector<long>& v) {
    std::string s = "(";
    for (std::size_t k = 0; k < v.size(); ++k) s += (k ? "," : "") + std::to_string(v[k]);
    return s + ")";
}

}  // namespace psci
