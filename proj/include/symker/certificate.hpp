#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "symker/scalar.hpp"

namespace symker {

/// Raised when an ambient space would exceed the configured column cap.
class SizeCapExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline constexpr std::size_t kDefaultSizeCap = 20000;

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;
};

/// Machine-checkable record of one exactness verification.
struct Certificate {
    std::string sequence;  // "M->T->S", "Lambda->S'->S", ...
    int m = 0;
    int n = 0;
    FieldSpec field;
    std::vector<std::pair<std::string, std::uint64_t>> dims;  // insertion order is output order
    std::vector<CheckResult> checks;
    bool cap_exceeded = false;
    double seconds = 0.0;

    /// Fail-closed: an empty check list or a cap trip never passes.
    bool pass() const;
    void add_check(std::string name, bool ok, std::string detail = {});
    std::uint64_t dim(const std::string& key) const;
};

}  // namespace symker
