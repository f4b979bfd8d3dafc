#pragma once

#include <string>
#include <vector>

namespace coalg {

/// Outcome of a diagnostic check: empty iff every identity held.
class Report {
public:
    struct Violation {
        std::string check;
        std::string detail;
    };

    void add(std::string check, std::string detail) { violations_.push_back({std::move(check), std::move(detail)}); }
    void merge(const Report& other) {
        violations_.insert(violations_.end(), other.violations_.begin(), other.violations_.end());
    }

    bool ok() const { return violations_.empty(); }
    const std::vector<Violation>& violations() const { return violations_; }

    std::string to_string() const {
        if (ok()) return "ok";
        std::string s;
        for (const auto& v : violations_) s += v.check + ": " + v.detail + "\n";
        return s;
    }

private:
    std::vector<Violation> violations_;
};

}  // namespace coalg
