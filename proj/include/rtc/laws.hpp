// laws.hpp -- pass/fail reports shared by the quantale and path-algebra
// law checkers.

#pragma once

#include <string>
#include <vector>

namespace rtc {

struct LawCheck {
    std::string law;
    bool pass = false;
    std::string witness; // empty when the law passed
};

struct LawReport {
    std::vector<LawCheck> checks;

    bool all_pass() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }

    void record(std::string law, bool pass, std::string witness = {}) {
        checks.push_back({std::move(law), pass, pass ? std::string{} : std::move(witness)});
    }
};

} // namespace rtc
