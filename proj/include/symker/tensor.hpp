#pragma once

#include <cstdint>
#include <vector>

#include "symker/combination.hpp"
#include "symker/linalg.hpp"
#include "symker/perm.hpp"

namespace symker {

/// Basis word v_{w_1} (x) ... (x) v_{w_n}; letters are 1-based.
using Word = std::vector<int>;

struct TensorTraits {
    static void validate(const Space& space, const Word& w, int degree);
    static int degree_of(const Word& w) { return static_cast<int>(w.size()); }
};

/// Monomials of S^n are weakly increasing words.
struct SymTraits {
    static void validate(const Space& space, const Word& w, int degree);
    static int degree_of(const Word& w) { return static_cast<int>(w.size()); }
};

using TensorElement = Combination<Word, TensorTraits>;
using SymElement = Combination<Word, SymTraits>;

std::uint64_t binomial(std::int64_t n, std::int64_t k);
std::uint64_t ipow(std::uint64_t base, int exp);

std::uint64_t dim_T(int m, int n);
std::uint64_t dim_S(int m, int n);

TensorElement tensor_word(const Space& space, const Word& w);
/// The degree-0 unit 1 in T^0.
TensorElement tensor_unit(const Space& space);
/// sum_k coeffs[k] v_{k+1} in T^1.
TensorElement tensor_vector(const Space& space, const std::vector<Scalar>& coeffs);

TensorElement tensor_product(const TensorElement& a, const TensorElement& b);
TensorElement commutator(const TensorElement& a, const TensorElement& b);

/// tau . (x_1 ... x_n) = x_{tau^-1(1)} ... x_{tau^-1(n)}.
Word permute_word(const Perm& tau, const Word& w);
TensorElement perm_action(const Perm& tau, const TensorElement& a);

SymElement sym_monomial(const Space& space, Word w);
SymElement sym_product(const SymElement& a, const SymElement& b);
SymElement rho_T_S(const TensorElement& a);

// Coordinates. Words of degree n are indexed lexicographically (base m);
// monomials of S^n lexicographically among weakly increasing words.

std::vector<Word> all_words(int m, int n);
std::vector<Word> increasing_words(int m, int n, bool strict);
std::size_t word_index(int m, const Word& w);
Word word_at(int m, int n, std::size_t index);

Vector coordinates(const TensorElement& a);
TensorElement tensor_from_coordinates(const Space& space, int n, std::span<const Scalar> v);
Vector sym_coordinates(const SymElement& a);

/// dim_S x dim_T matrix whose column w is rho_{T,S}(w).
ExactMatrix matrix_rho_T_S(const Space& space, int n);

}  // namespace symker
