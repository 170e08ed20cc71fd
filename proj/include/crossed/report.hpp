#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

namespace crossed {

struct Check {
    std::string id;
    bool pass = true;
    std::string witness;   // failure detail, empty on pass
};

/// List of named checks with a seed for reproducibility. Canonical order is
/// by check id so parallel execution never changes the rendering.
struct Report {
    std::vector<Check> checks;
    std::uint64_t seed = 0;

    void add(std::string id, bool pass, std::string witness = {}) {
        checks.push_back({std::move(id), pass, std::move(witness)});
    }
    void merge(const Report& other) {
        checks.insert(checks.end(), other.checks.begin(), other.checks.end());
    }
    void canonicalize() {
        std::stable_sort(checks.begin(), checks.end(),
                         [](const Check& a, const Check& b) { return a.id < b.id; });
    }
    bool all_pass() const {
        for (const Check& c : checks)
            if (!c.pass) return false;
        return true;
    }
    std::size_t failures() const {
        std::size_t n = 0;
        for (const Check& c : checks)
            if (!c.pass) ++n;
        return n;
    }
};

} // namespace crossed
