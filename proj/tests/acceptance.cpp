// Acceptance run: one PASS/FAIL line per criterion, then labelled diagnostics.
#include <iostream>

#include <CLI11.hpp>

#include "starlax/suite.hpp"

int main(int argc, char** argv)
{
    CLI::App app{"starlax acceptance criteria"};
    std::uint64_t seed = 20240611;
    int jobs = 1;
    std::vector<int> only;
    bool no_timing = false;
    app.add_option("--seed", seed, "seed for the randomized property checks");
    app.add_option("--jobs", jobs, "worker threads")->check(CLI::PositiveNumber);
    app.add_option("--only", only, "run only these criterion numbers")->check(CLI::Range(1, 11));
    app.add_flag("--no-timing", no_timing, "omit wall-clock times");
    CLI11_PARSE(app, argc, argv);

    bool all = true;
    for (const auto& c : starlax::run_acceptance(seed, jobs, only)) {
        std::cout << starlax::render_criterion(c, !no_timing) << std::endl;
        all = all && c.pass;
    }
    if (only.empty()) {
        for (const auto& r : starlax::diagnostic_reports(8, jobs))
            std::cout << "DIAGNOSTIC " << (r.pass ? "PASS " : "FAIL ") << r.name << " residual_terms=" << r.residual_terms
                      << (r.witness ? " " + *r.witness : "") << std::endl;
    }
    return all ? 0 : 1;
}
