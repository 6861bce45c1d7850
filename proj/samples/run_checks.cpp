// Runs a verification suite and prints one line per check.
// Usage: sample_verify [suite]   (default: all)

#include <cstdio>
#include <string>

#include "coxeuler/suites.hpp"

int main(int argc, char** argv) {
    using namespace coxeuler;

    const std::string name = argc > 1 ? argv[1] : "all";
    SuiteConfig cfg;
    std::vector<CheckReport> reports;
    try {
        reports = run_suite(name, cfg);
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        std::fprintf(stderr, "suites:");
        for (const std::string& s : suite_names()) std::fprintf(stderr, " %s", s.c_str());
        std::fprintf(stderr, "\n");
        return 2;
    }

    int failures = 0;
    for (const CheckReport& r : reports) {
        if (r.passed) {
            std::printf("pass  %s\n", r.context.c_str());
        } else {
            ++failures;
            std::printf("FAIL  %s", r.context.c_str());
            if (r.first_failure)
                std::printf("  [%s: expected %s, got %s]", r.first_failure->location.c_str(),
                            r.first_failure->expected.c_str(), r.first_failure->actual.c_str());
            std::printf("\n");
        }
    }
    std::printf("%zu checks, %d failures\n", reports.size(), failures);
    return failures == 0 ? 0 : 1;
}
