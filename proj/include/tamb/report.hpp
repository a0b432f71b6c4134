#pragma once

#include <string>
#include <vector>

namespace tamb {

// Result of a property-check suite: every failed identity is recorded with
// the rule that broke and enough context to replay the instance.
struct Violation {
    std::string rule;
    std::string witness;
};

struct Report {
    long long checks = 0;
    std::vector<Violation> violations;

    bool ok() const { return violations.empty(); }
    void count() { ++checks; }
    void add(const std::string& rule, const std::string& witness) {
        ++checks;
        violations.push_back({rule, witness});
    }
    bool check(bool pass, const std::string& rule, const std::string& witness) {
        if (pass) count(); else add(rule, witness);
        return pass;
    }
    void merge(const Report& o) {
        checks += o.checks;
        violations.insert(violations.end(), o.violations.begin(), o.violations.end());
    }
};

} // namespace tamb
