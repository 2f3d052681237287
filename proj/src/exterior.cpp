#include "symker/exterior.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace symker {

void ExtTraits::validate(const Space& space, const Word& w, int degree) {
    TensorTraits::validate(space, w, degree);
    for (std::size_t k = 1; k < w.size(); ++k)
        if (w[k - 1] >= w[k]) throw std::invalid_argument("wedge word must be strictly increasing");
}

std::optional<WedgeCanon> wedge_canon(const Word& letters) {
    int inversions = 0;
    for (std::size_t i = 0; i < letters.size(); ++i)
        for (std::size_t j = i + 1; j < letters.size(); ++j) {
            if (letters[i] == letters[j]) return std::nullopt;
            if (letters[i] > letters[j]) ++inversions;
        }
    WedgeCanon out{inversions % 2 == 0 ? 1 : -1, letters};
    std::sort(out.word.begin(), out.word.end());
    return out;
}

ExtElement wedge(const Space& space, const Word& letters, int degree) {
    ExtElement out(space, degree);
    if (auto canon = wedge_canon(letters)) out.add(canon->word, Scalar::from_int(space.field, canon->sign));
    return out;
}

std::uint64_t dim_Lambda(int m, int n) { return binomial(m, n); }

TensorElement rho_Lambda2_T2(const ExtElement& a) {
    if (a.degree() != 2)
        throw DimensionMismatch("rho_Lambda2_T2 needs degree 2, got " + std::to_string(a.degree()));
    TensorElement out(a.space(), 2);
    for (const auto& [w, c] : a.terms()) {
        out.add(Word{w[0], w[1]}, c);
        out.add(Word{w[1], w[0]}, -c);
    }
    return out;
}

Vector ext_coordinates(const ExtElement& a) {
    const auto basis = increasing_words(a.space().m, a.degree(), true);
    Vector v = zero_vector(a.space().field, basis.size());
    for (const auto& [w, c] : a.terms()) {
        auto it = std::lower_bound(basis.begin(), basis.end(), w);
        v[static_cast<std::size_t>(it - basis.begin())] = c;
    }
    return v;
}

ExactMatrix matrix_rho_Lambda2_T2(const Space& space) {
    ExactMatrix columns(space.field, dim_T(space.m, 2));
    for (const auto& w : increasing_words(space.m, 2, true))
        columns.append_row(coordinates(rho_Lambda2_T2(ExtElement::basis(space, w))));
    return columns.transpose();
}

}  // namespace symker
