// Acceptance gate: runs every verification suite at its contract scale with
// its wall-time budget and prints one pass/fail line per criterion. All
// checks are exact; there are no tolerances anywhere.

#include <chrono>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include "extaff/suites.hpp"

using namespace extaff;

namespace {

struct Criterion {
    std::string name;
    std::int64_t budget_ms;
    std::function<std::vector<Report>()> run;
};

std::int64_t total_ms = 0;
int failures = 0;

void execute(int number, const Criterion& criterion)
{
    const auto start = std::chrono::steady_clock::now();
    std::vector<Report> reports;
    std::string error;
    try {
        reports = criterion.run();
    } catch (const std::exception& e) {
        error = e.what();
    }
    const auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                             std::chrono::steady_clock::now() - start)
                             .count();
    total_ms += elapsed;

    bool ok = error.empty();
    long long cases = 0;
    for (const auto& report : reports) {
        ok = ok && report.ok();
        cases += report.cases_run;
    }
    const bool in_budget = elapsed <= criterion.budget_ms;
    ok = ok && in_budget;

    std::cout << "criterion " << number << " (" << criterion.name << "): "
              << (ok ? "PASS" : "FAIL") << " (" << cases << " cases, " << elapsed << " ms, budget "
              << criterion.budget_ms << " ms)\n";
    if (!error.empty()) std::cout << "    exception: " << error << "\n";
    if (!in_budget) std::cout << "    over budget\n";
    for (const auto& report : reports)
        for (std::size_t i = 0; i < report.failures.size() && i < 5; ++i)
            std::cout << "    " << report.suite << " " << report.failures[i].case_id
                      << ": expected " << report.failures[i].expected << ", got "
                      << report.failures[i].got << "\n";
    if (!ok) ++failures;
}

SuiteParams scaled(int cases)
{
    SuiteParams params;
    params.cases = cases;
    return params;
}

} // namespace

int main()
{
    const std::vector<Criterion> criteria = {
        {"prop21: merge-sign identities, n = 2..8, 200 instances each", 5000,
         [] { return std::vector<Report>{run_suite("prop21", scaled(200))}; }},
        {"lemma41: decomposition identities, n <= 6, 200 instances each", 5000,
         [] { return std::vector<Report>{run_suite("lemma41", scaled(200))}; }},
        {"lemma44: kernel triviality and orthogonality relations, n <= 6", 60000,
         [] { return std::vector<Report>{run_suite("lemma44", scaled(200))}; }},
        {"lemma45: H identity and power preimages", 120000,
         [] { return std::vector<Report>{run_suite("lemma45", scaled(200))}; }},
        {"thm51: single-form round trips and refutations, 100 + 100 per (n,k)", 120000,
         [] { return std::vector<Report>{run_suite("thm51", scaled(100))}; }},
        {"cor52: round trips through the Hodge transform and involution", 60000,
         [] { return std::vector<Report>{run_suite("cor52", scaled(100))}; }},
        {"thm53: exact intersection of the two affine classes", 60000,
         [] { return std::vector<Report>{run_suite("thm53", scaled(100))}; }},
        {"thm54 + cor55: pair round trips, one-sided nonlinearity, splitting", 180000,
         [] {
             return std::vector<Report>{run_suite("thm54", scaled(100)),
                                        run_suite("cor55", scaled(100))};
         }},
        {"remark36: product counterexample with pinned witness", 1000,
         [] { return std::vector<Report>{run_suite("remark36", scaled(100))}; }},
    };

    for (std::size_t i = 0; i < criteria.size(); ++i)
        execute(static_cast<int>(i) + 1, criteria[i]);

    const bool total_ok = total_ms <= 600000;
    std::cout << "criterion 10 (full suite wall time): " << (total_ok ? "PASS" : "FAIL") << " ("
              << total_ms << " ms, budget 600000 ms)\n";
    if (!total_ok) ++failures;

    if (failures == 0) {
        std::cout << "acceptance: all criteria PASS\n";
        return 0;
    }
    std::cout << "acceptance: " << failures << " criteria FAILED\n";
    return 1;
}
