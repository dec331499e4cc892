#pragma once

#include <string>
#include <utility>
#include <vector>

namespace fone {

/// Outcome of a verification sweep. An empty violation list means the check
/// passed; `scope` records the truncation the sweep ran under.
struct Report {
    std::string name;
    std::string scope;
    std::vector<std::string> violations;

    bool passed() const { return violations.empty(); }
    explicit operator bool() const { return passed(); }

    void fail(std::string witness) { violations.push_back(std::move(witness)); }

    void absorb(const Report& other)
    {
        for (const auto& v : other.violations)
            violations.push_back(other.name.empty() ? v : other.name + ": " + v);
    }
};

}  // namespace fone
