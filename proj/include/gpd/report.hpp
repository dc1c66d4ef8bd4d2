#pragma once

#include <string>
#include <vector>

namespace gpd {

struct Violation {
    std::string tag;                     // stable axiom identifier
    std::vector<std::string> witnesses;  // offending element / point ids
    std::string message;
};

// Result of an axiom scan.  Empty violation list means the checked object
// satisfies every axiom of its kind.
struct ValidationReport {
    std::vector<Violation> violations;

    bool passed() const { return violations.empty(); }
    bool has_tag(const std::string& tag) const;
    const Violation* first(const std::string& tag) const;
    void add(std::string tag, std::vector<std::string> witnesses, std::string message);
    std::string summary() const;
};

}  // namespace gpd
