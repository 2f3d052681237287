#include "symker/certificate.hpp"

#include <algorithm>

namespace symker {

bool Certificate::pass() const {
    if (cap_exceeded || checks.empty()) return false;
    return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.pass; });
}

void Certificate::add_check(std::string name, bool ok, std::string detail) {
    checks.push_back({std::move(name), ok, std::move(detail)});
}

std::uint64_t Certificate::dim(const std::string& key) const {
    for (const auto& [k, v] : dims)
        if (k == key) return v;
    throw std::out_of_range("certificate has no dimension '" + key + "'");
}

}  // namespace symker
