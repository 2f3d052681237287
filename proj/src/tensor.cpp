#include "symker/tensor.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace symker {

namespace {

void validate_letters(const Space& space, const Word& w, int degree) {
    if (static_cast<int>(w.size()) != degree)
        throw DimensionMismatch("word of length " + std::to_string(w.size()) + " in degree " +
                                std::to_string(degree));
    for (int x : w)
        if (x < 1 || x > space.m)
            throw std::out_of_range("letter " + std::to_string(x) + " outside 1.." +
                                    std::to_string(space.m));
}

void enumerate_increasing(int m, int n, bool strict, Word& prefix, std::vector<Word>& out) {
    if (static_cast<int>(prefix.size()) == n) {
        out.push_back(prefix);
        return;
    }
    int start = prefix.empty() ? 1 : prefix.back() + (strict ? 1 : 0);
    for (int x = start; x <= m; ++x) {
        prefix.push_back(x);
        enumerate_increasing(m, n, strict, prefix, out);
        prefix.pop_back();
    }
}

}  // namespace

void TensorTraits::validate(const Space& space, const Word& w, int degree) {
    validate_letters(space, w, degree);
}

void SymTraits::validate(const Space& space, const Word& w, int degree) {
    validate_letters(space, w, degree);
    if (!std::is_sorted(w.begin(), w.end()))
        throw std::invalid_argument("symmetric monomial must be weakly increasing");
}

std::uint64_t binomial(std::int64_t n, std::int64_t k) {
    if (k < 0) return 0;
    if (k == 0) return 1;
    if (n < k) return 0;
    k = std::min(k, n - k);
    std::uint64_t r = 1;
    for (std::int64_t i = 1; i <= k; ++i)
        r = r * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
    return r;
}

std::uint64_t ipow(std::uint64_t base, int exp) {
    std::uint64_t r = 1;
    for (int i = 0; i < exp; ++i) r *= base;
    return r;
}

std::uint64_t dim_T(int m, int n) { return ipow(static_cast<std::uint64_t>(m), n); }
std::uint64_t dim_S(int m, int n) { return binomial(m + n - 1, n); }

TensorElement tensor_word(const Space& space, const Word& w) { return TensorElement::basis(space, w); }

TensorElement tensor_unit(const Space& space) { return TensorElement::basis(space, Word{}); }

TensorElement tensor_vector(const Space& space, const std::vector<Scalar>& coeffs) {
    if (static_cast<int>(coeffs.size()) != space.m)
        throw DimensionMismatch("vector needs " + std::to_string(space.m) + " coordinates");
    TensorElement v(space, 1);
    for (int k = 0; k < space.m; ++k) v.add(Word{k + 1}, coeffs[static_cast<std::size_t>(k)]);
    return v;
}

TensorElement tensor_product(const TensorElement& a, const TensorElement& b) {
    require_same_space(a.space(), b.space());
    TensorElement out(a.space(), a.degree() + b.degree());
    for (const auto& [wa, ca] : a.terms())
        for (const auto& [wb, cb] : b.terms()) {
            Word w = wa;
            w.insert(w.end(), wb.begin(), wb.end());
            out.add(w, ca * cb);
        }
    return out;
}

TensorElement commutator(const TensorElement& a, const TensorElement& b) {
    return tensor_product(a, b) - tensor_product(b, a);
}

Word permute_word(const Perm& tau, const Word& w) {
    if (tau.size() != static_cast<int>(w.size()))
        throw DimensionMismatch("permutation of size " + std::to_string(tau.size()) +
                                " acting on degree " + std::to_string(w.size()));
    // Letter at position k moves to position tau(k).
    Word out(w.size());
    for (int k = 1; k <= tau.size(); ++k)
        out[static_cast<std::size_t>(tau(k) - 1)] = w[static_cast<std::size_t>(k - 1)];
    return out;
}

TensorElement perm_action(const Perm& tau, const TensorElement& a) {
    if (tau.size() != a.degree())
        throw DimensionMismatch("permutation of size " + std::to_string(tau.size()) +
                                " acting on degree " + std::to_string(a.degree()));
    TensorElement out(a.space(), a.degree());
    for (const auto& [w, c] : a.terms()) out.add(permute_word(tau, w), c);
    return out;
}

SymElement sym_monomial(const Space& space, Word w) {
    std::sort(w.begin(), w.end());
    return SymElement::basis(space, w);
}

SymElement sym_product(const SymElement& a, const SymElement& b) {
    require_same_space(a.space(), b.space());
    SymElement out(a.space(), a.degree() + b.degree());
    for (const auto& [wa, ca] : a.terms())
        for (const auto& [wb, cb] : b.terms()) {
            Word w = wa;
            w.insert(w.end(), wb.begin(), wb.end());
            std::sort(w.begin(), w.end());
            out.add(w, ca * cb);
        }
    return out;
}

SymElement rho_T_S(const TensorElement& a) {
    SymElement out(a.space(), a.degree());
    for (const auto& [word, c] : a.terms()) {
        Word w = word;
        std::sort(w.begin(), w.end());
        out.add(w, c);
    }
    return out;
}

std::vector<Word> all_words(int m, int n) {
    std::vector<Word> out;
    const std::uint64_t count = dim_T(m, n);
    out.reserve(count);
    for (std::uint64_t i = 0; i < count; ++i) out.push_back(word_at(m, n, i));
    return out;
}

std::vector<Word> increasing_words(int m, int n, bool strict) {
    std::vector<Word> out;
    Word prefix;
    enumerate_increasing(m, n, strict, prefix, out);
    return out;
}

std::size_t word_index(int m, const Word& w) {
    std::size_t idx = 0;
    for (int x : w) idx = idx * static_cast<std::size_t>(m) + static_cast<std::size_t>(x - 1);
    return idx;
}

Word word_at(int m, int n, std::size_t index) {
    Word w(static_cast<std::size_t>(n));
    for (int k = n - 1; k >= 0; --k) {
        w[static_cast<std::size_t>(k)] = static_cast<int>(index % static_cast<std::size_t>(m)) + 1;
        index /= static_cast<std::size_t>(m);
    }
    return w;
}

Vector coordinates(const TensorElement& a) {
    Vector v = zero_vector(a.space().field, dim_T(a.space().m, a.degree()));
    for (const auto& [w, c] : a.terms()) v[word_index(a.space().m, w)] = c;
    return v;
}

TensorElement tensor_from_coordinates(const Space& space, int n, std::span<const Scalar> v) {
    if (v.size() != dim_T(space.m, n)) throw DimensionMismatch("coordinate vector length");
    TensorElement out(space, n);
    for (std::size_t i = 0; i < v.size(); ++i)
        if (!v[i].is_zero()) out.add(word_at(space.m, n, i), v[i]);
    return out;
}

Vector sym_coordinates(const SymElement& a) {
    const auto monomials = increasing_words(a.space().m, a.degree(), false);
    Vector v = zero_vector(a.space().field, monomials.size());
    for (const auto& [w, c] : a.terms()) {
        auto it = std::lower_bound(monomials.begin(), monomials.end(), w);
        v[static_cast<std::size_t>(it - monomials.begin())] = c;
    }
    return v;
}

ExactMatrix matrix_rho_T_S(const Space& space, int n) {
    const auto monomials = increasing_words(space.m, n, false);
    const std::size_t ncols = dim_T(space.m, n);
    ExactMatrix columns(space.field, monomials.size());
    for (std::size_t i = 0; i < ncols; ++i) {
        Word w = word_at(space.m, n, i);
        std::sort(w.begin(), w.end());
        auto it = std::lower_bound(monomials.begin(), monomials.end(), w);
        SparseVector col{{static_cast<std::size_t>(it - monomials.begin()), Scalar::one(space.field)}};
        columns.append_row(col);
    }
    return columns.transpose();
}

}  // namespace symker
