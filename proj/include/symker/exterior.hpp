#pragma once

#include <optional>

#include "symker/tensor.hpp"

namespace symker {

/// Basis of Lambda^n: strictly increasing words.
struct ExtTraits {
    static void validate(const Space& space, const Word& w, int degree);
    static int degree_of(const Word& w) { return static_cast<int>(w.size()); }
};

using ExtElement = Combination<Word, ExtTraits>;

struct WedgeCanon {
    int sign;  // +1 or -1
    Word word;
};

/// Sorts the letters, sign = parity of the sort. Empty on a repeated letter.
std::optional<WedgeCanon> wedge_canon(const Word& letters);

/// v_{l_1} ^ ... ^ v_{l_n} with the sign folded in (zero on repeats).
ExtElement wedge(const Space& space, const Word& letters, int degree);
inline ExtElement wedge(const Space& space, const Word& letters) {
    return wedge(space, letters, static_cast<int>(letters.size()));
}

std::uint64_t dim_Lambda(int m, int n);

/// x ^ y |-> [x, y].
TensorElement rho_Lambda2_T2(const ExtElement& a);

/// Coordinates in the strictly increasing basis, ordered lexicographically.
Vector ext_coordinates(const ExtElement& a);

/// dim_T(m,2) x C(m,2) matrix, column (i,j) = [v_i, v_j].
ExactMatrix matrix_rho_Lambda2_T2(const Space& space);

}  // namespace symker
