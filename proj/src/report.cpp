#include "gpd/report.hpp"

#include <sstream>

namespace gpd {

bool ValidationReport::has_tag(const std::string& tag) const {
    for (const auto& v : violations)
        if (v.tag == tag) return true;
    return false;
}

const Violation* ValidationReport::first(const std::string& tag) const {
    for (const auto& v : violations)
        if (v.tag == tag) return &v;
    return nullptr;
}

void ValidationReport::add(std::string tag, std::vector<std::string> witnesses,
                           std::string message) {
    violations.push_back({std::move(tag), std::move(witnesses), std::move(message)});
}

std::string ValidationReport::summary() const {
    if (passed()) return "ok\n";
    std::ostringstream os;
    for (const auto& v : violations) {
        os << v.tag << ": " << v.message;
        if (!v.witnesses.empty()) {
            os << " [";
            for (size_t i = 0; i < v.witnesses.size(); ++i) {
                if (i) os << ", ";
                os << v.witnesses[i];
            }
            os << "]";
        }
        os << "\n";
    }
    return os.str();
}

}  // namespace gpd
