#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace cores::verify {

struct Options {
    std::int64_t s_max = 6;
    std::int64_t t_max = 7;
    std::uint64_t seed = 42;
    std::int64_t trials = 1000;
};

struct Check {
    std::string suite;
    std::string name;
    std::int64_t cases = 0;
    std::int64_t failures = 0;
    std::string first_failure;

    bool passed() const noexcept { return failures == 0; }
};

/// Known suite names, excluding "all".
const std::vector<std::string>& suite_names();

/// Runs one suite (or "all"). Throws DomainError for an unknown name or bounds below 2.
std::vector<Check> run(std::string_view suite, const Options& options);

/// Fixed-width pass/fail table.
std::string report(const std::vector<Check>& checks);

}  // namespace cores::verify
