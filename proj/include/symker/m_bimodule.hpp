#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "symker/certificate.hpp"
#include "symker/exterior.hpp"
#include "symker/linalg.hpp"
#include "symker/perm.hpp"
#include "symker/tensor.hpp"

namespace symker {

/// Basis element left (x) (a ^ b) (x) right of T (x) Lambda^2 (x) T, with a < b.
struct MTerm {
    Word left;
    int a = 0;
    int b = 0;
    Word right;

    int degree() const { return static_cast<int>(left.size() + right.size()) + 2; }

    /// Canonical order: left degree, then left word, wedge pair, right word.
    friend std::strong_ordering operator<=>(const MTerm& x, const MTerm& y) {
        if (auto c = x.left.size() <=> y.left.size(); c != 0) return c;
        if (auto c = x.left <=> y.left; c != 0) return c;
        if (auto c = x.a <=> y.a; c != 0) return c;
        if (auto c = x.b <=> y.b; c != 0) return c;
        return x.right <=> y.right;
    }
    friend bool operator==(const MTerm&, const MTerm&) = default;
};

struct MTraits {
    static void validate(const Space& space, const MTerm& t, int degree);
    static int degree_of(const MTerm& t) { return t.degree(); }
};

/// Element of T (x) Lambda^2 (x) T, before passing to the class in M(V).
using MElementRaw = Combination<MTerm, MTraits>;

/// (n-1) C(m,2) m^(n-2); zero for n < 2.
std::uint64_t ambient_dim(int m, int n);

std::size_t mterm_index(int m, const MTerm& t);
MTerm mterm_at(int m, int n, std::size_t index);

/// 1 (x) (x ^ y) (x) 1, sign-normalised; zero when x = y.
MElementRaw m_wedge(const Space& space, int x, int y);

/// l (x) x (x) r, concatenating into the outer slots.
MElementRaw bimodule_mult(const TensorElement& l, const MElementRaw& x, const TensorElement& r);
/// l (x) x - x (x) l.
MElementRaw commutator(const TensorElement& l, const MElementRaw& x);
/// x (x) r - r (x) x.
MElementRaw commutator(const MElementRaw& x, const TensorElement& r);

/// [x,y] (x) xi (x) z^t - x^y (x) xi (x) [z,t].
MElementRaw wm_generator_i(const Space& space, int x, int y, const Word& xi, int z, int t);
/// [x, y^z] + [y, z^x] + [z, x^y].
MElementRaw wm_generator_ii(const Space& space, int x, int y, int z);

enum class GeneratorFamily {
    Reduced,  // x<y, z<t for (i) and x<y<z for (ii); the rest are +-these or 0
    Full,     // every instantiation over basis vectors
};

/// Visits alpha . g . beta for basis words alpha, beta and core generators g
/// with deg(alpha) + deg(g) + deg(beta) = n.
void for_each_wm_generator(const Space& space, int n, GeneratorFamily family,
                           const std::function<void(const MElementRaw&)>& visit);
std::vector<MElementRaw> wm_generators(const Space& space, int n,
                                       GeneratorFamily family = GeneratorFamily::Reduced);

/// Degree-n quotient M^n = (T (x) Lambda^2 (x) T)^n / W_M^n with cached
/// echelon basis of W_M^n in canonical MTerm coordinates.
class MQuotientContext {
public:
    static MQuotientContext build(const Space& space, int n, std::size_t size_cap = kDefaultSizeCap);

    const Space& space() const { return space_; }
    int degree() const { return degree_; }
    std::size_t ambient_dim() const { return relations_.ncols(); }
    std::size_t wm_rank() const { return relations_.rank(); }
    std::size_t m_dim() const { return ambient_dim() - wm_rank(); }

    const RowSpace& relations() const { return relations_; }
    ExactMatrix wm_rref() const { return relations_.to_rref(); }
    /// Non-pivot columns; their unit vectors form a basis of M^n.
    std::vector<std::size_t> basis_columns() const;

    MTerm term_at(std::size_t index) const { return mterm_at(space_.m, degree_, index); }
    std::size_t index_of(const MTerm& t) const { return mterm_index(space_.m, t); }

    Vector coordinates(const MElementRaw& x) const;
    /// Canonical representative: zero exactly on W_M^n, equal exactly on equal classes.
    Vector normal_form(const MElementRaw& x) const;
    MElementRaw from_coordinates(std::span<const Scalar> v) const;

private:
    MQuotientContext(Space space, int n, RowSpace relations)
        : space_(space), degree_(n), relations_(std::move(relations)) {}

    Space space_;
    int degree_;
    RowSpace relations_;
};

inline MQuotientContext build_context(const Space& space, int n, std::size_t size_cap = kDefaultSizeCap) {
    return MQuotientContext::build(space, n, size_cap);
}

inline Vector m_normal_form(const MQuotientContext& ctx, const MElementRaw& x) { return ctx.normal_form(x); }

/// xi (x) a^b (x) eta |-> xi (x) [a,b] (x) eta.
TensorElement rho_M_T(const MElementRaw& x);

/// Replaces the tensor sign between positions i and i+1 by a wedge (1 <= i < n).
MElementRaw f_i(const TensorElement& w, int i);

/// sum_k f_{i_k} tau_{i_{k-1}} ... tau_{i_1} (a) for word = [i_1, ..., i_s], unreduced.
MElementRaw cocycle_sum(const TensorElement& a, const std::vector<int>& word);

/// h_tau(a) in normal-form coordinates. Uses the bubble-sort factorization
/// unless `word` is given, which must compose to tau.
Vector h_tau(const MQuotientContext& ctx, const Perm& tau, const TensorElement& a,
             const std::optional<std::vector<int>>& word = std::nullopt);

/// dim_T x m_dim matrix of rho_{M,T} on the basis columns of ctx.
ExactMatrix matrix_rho_M_T(const MQuotientContext& ctx);

/// 0 -> M^n -> T^n -> S^n -> 0 verified by exact ranks.
Certificate check_exact_M(const Space& space, int n, std::size_t size_cap = kDefaultSizeCap);

}  // namespace symker
