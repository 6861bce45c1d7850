#pragma once

#include <optional>
#include <string>
#include <utility>

namespace coxeuler {

struct FailureDetail {
    std::string location;
    std::string expected;
    std::string actual;
};

// Outcome of one identity verification: pass, or the first failing
// coefficient with enough detail to reproduce it by hand.
struct CheckReport {
    bool passed = false;
    std::string context;
    std::optional<FailureDetail> first_failure;

    static CheckReport pass(std::string context) { return {true, std::move(context), std::nullopt}; }

    static CheckReport fail(std::string context, std::string location, std::string expected,
                            std::string actual) {
        return {false, std::move(context),
                FailureDetail{std::move(location), std::move(expected), std::move(actual)}};
    }
};

}  // namespace coxeuler
