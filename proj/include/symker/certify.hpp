#pragma once

#include <vector>

#include "symker/certificate.hpp"
#include "symker/combination.hpp"

namespace symker {

struct CheckGrid {
    std::vector<int> m_values;
    std::vector<int> n_values;
    std::vector<FieldSpec> fields;
    std::size_t size_cap = kDefaultSizeCap;
};

enum class Sequence { M, Sprime, Both };

/// One certificate per (m, n, field) cell and requested sequence, ordered by
/// (m, n, field, sequence) regardless of completion order. Cells with n < 2
/// are skipped; a failing or oversized cell never aborts the grid.
/// workers = 0 picks the hardware concurrency.
std::vector<Certificate> run_grid(const CheckGrid& grid, Sequence which, unsigned workers = 0);

/// 0 -> Lambda^2 -> T^2 -> S^2 -> 0.
Certificate check_exact_degree2(const Space& space);

/// M^2 = Lambda^2 with matching maps into T^2, and S'^2 = T^2 with matching
/// maps from Lambda^2 and to S^2.
Certificate degree2_coincidence(const Space& space);

}  // namespace symker
