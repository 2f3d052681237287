#pragma once

#include <compare>
#include <cstdint>
#include <vector>

#include "symker/certificate.hpp"
#include "symker/exterior.hpp"
#include "symker/tensor.hpp"

namespace symker {

/// Basis of S'^n: a weakly increasing word, either itself ("plain") or its
/// c-image ("twisted"). Twisted words are strictly increasing, degree >= 2.
struct SPrimeBasisElem {
    Word word;
    bool twisted = false;

    friend auto operator<=>(const SPrimeBasisElem&, const SPrimeBasisElem&) = default;
};

struct SPrimeTraits {
    static void validate(const Space& space, const SPrimeBasisElem& e, int degree);
    static int degree_of(const SPrimeBasisElem& e) { return static_cast<int>(e.word.size()); }
};

using SPrimeElement = Combination<SPrimeBasisElem, SPrimeTraits>;

/// Class of the word w in S'^n: sorted, twisted iff the letters are distinct
/// and the sorting permutation is odd.
SPrimeBasisElem sprime_normal_form(const Word& w);
/// Plain: the sorted word. Twisted: the sorted word with the first two letters swapped.
Word representative(const SPrimeBasisElem& e);

SPrimeElement sprime_class(const Space& space, const Word& w);

/// x_1 . x_2 ... |-> x_2 . x_1 ...; requires degree >= 2.
SPrimeElement c_op(const SPrimeElement& a);
SPrimeElement sprime_product(const SPrimeElement& a, const SPrimeElement& b);
SymElement rho_Sprime_S(const SPrimeElement& a);
/// x_1 ^ ... ^ x_n |-> x_1 ... x_n - c(x_1 ... x_n); requires degree >= 2.
SPrimeElement rho_Lambda_Sprime(const ExtElement& a);

std::uint64_t dim_Sprime(int m, int n);

/// Basis ordered by (word, plain before twisted).
std::vector<SPrimeBasisElem> sprime_basis(int m, int n);
Vector sprime_coordinates(const SPrimeElement& a);

/// dim_Sprime x dim_T matrix of the normal-form map T^n -> S'^n.
ExactMatrix matrix_normal_form(const Space& space, int n);
/// dim_S x dim_Sprime.
ExactMatrix matrix_rho_Sprime_S(const Space& space, int n);
/// dim_Sprime x dim_Lambda.
ExactMatrix matrix_rho_Lambda_Sprime(const Space& space, int n);

/// Rows spanning W_S'^n in T^n coordinates: alpha (x) (xyz - yzx) (x) beta.
std::vector<SparseVector> wsprime_ideal_rows(const Space& space, int n);
/// Rows u_w - u_{sigma w}, sigma in A_n.
std::vector<SparseVector> wsprime_alternating_rows(const Space& space, int n);

/// Both constructions of W_S'^n agree, have rank m^n - dim S'^n, and equal
/// the kernel of the normal-form map.
Certificate wsprime_span_check(const Space& space, int n, std::size_t size_cap = kDefaultSizeCap);

/// 0 -> Lambda^n -> S'^n -> S^n -> 0 verified by exact ranks.
Certificate check_exact_Sprime(const Space& space, int n, std::size_t size_cap = kDefaultSizeCap);

}  // namespace symker
