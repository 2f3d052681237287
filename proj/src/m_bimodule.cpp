#include "symker/m_bimodule.hpp"

#include <algorithm>
#include <chrono>
#include <stdexcept>
#include <string>

namespace symker {

namespace {

std::size_t pair_count(int m) { return static_cast<std::size_t>(binomial(m, 2)); }

/// Position of (a,b), a < b, among pairs in lexicographic order.
std::size_t pair_index(int m, int a, int b) {
    std::size_t idx = 0;
    for (int x = 1; x < a; ++x) idx += static_cast<std::size_t>(m - x);
    return idx + static_cast<std::size_t>(b - a - 1);
}

std::pair<int, int> pair_at(int m, std::size_t idx) {
    for (int a = 1; a < m; ++a) {
        const auto row = static_cast<std::size_t>(m - a);
        if (idx < row) return {a, a + 1 + static_cast<int>(idx)};
        idx -= row;
    }
    throw std::out_of_range("pair index out of range");
}

std::size_t upow(int m, int e) { return static_cast<std::size_t>(ipow(static_cast<std::uint64_t>(m), e)); }

}  // namespace

void MTraits::validate(const Space& space, const MTerm& t, int degree) {
    if (t.degree() != degree)
        throw DimensionMismatch("term of degree " + std::to_string(t.degree()) + " in degree " +
                                std::to_string(degree));
    if (!(1 <= t.a && t.a < t.b && t.b <= space.m))
        throw std::invalid_argument("wedge pair must satisfy 1 <= a < b <= m");
    TensorTraits::validate(space, t.left, static_cast<int>(t.left.size()));
    TensorTraits::validate(space, t.right, static_cast<int>(t.right.size()));
}

std::uint64_t ambient_dim(int m, int n) {
    if (n < 2) return 0;
    return static_cast<std::uint64_t>(n - 1) * binomial(m, 2) * ipow(static_cast<std::uint64_t>(m), n - 2);
}

std::size_t mterm_index(int m, const MTerm& t) {
    const int n = t.degree();
    const int i = static_cast<int>(t.left.size());
    const int j = static_cast<int>(t.right.size());
    const std::size_t block = pair_count(m) * upow(m, n - 2);
    return static_cast<std::size_t>(i) * block +
           (word_index(m, t.left) * pair_count(m) + pair_index(m, t.a, t.b)) * upow(m, j) +
           word_index(m, t.right);
}

MTerm mterm_at(int m, int n, std::size_t index) {
    const std::size_t block = pair_count(m) * upow(m, n - 2);
    if (block == 0 || index >= block * static_cast<std::size_t>(n - 1))
        throw std::out_of_range("MTerm index " + std::to_string(index) + " out of range");
    const int i = static_cast<int>(index / block);
    const int j = n - 2 - i;
    std::size_t rest = index % block;
    const std::size_t right = rest % upow(m, j);
    rest /= upow(m, j);
    const auto [a, b] = pair_at(m, rest % pair_count(m));
    const std::size_t left = rest / pair_count(m);
    return MTerm{word_at(m, i, left), a, b, word_at(m, j, right)};
}

MElementRaw m_wedge(const Space& space, int x, int y) {
    MElementRaw out(space, 2);
    if (auto canon = wedge_canon(Word{x, y}))
        out.add(MTerm{{}, canon->word[0], canon->word[1], {}}, Scalar::from_int(space.field, canon->sign));
    return out;
}

MElementRaw bimodule_mult(const TensorElement& l, const MElementRaw& x, const TensorElement& r) {
    require_same_space(l.space(), x.space());
    require_same_space(r.space(), x.space());
    MElementRaw out(x.space(), l.degree() + x.degree() + r.degree());
    for (const auto& [lw, lc] : l.terms())
        for (const auto& [t, c] : x.terms())
            for (const auto& [rw, rc] : r.terms()) {
                MTerm term{lw, t.a, t.b, rw};
                term.left.insert(term.left.end(), t.left.begin(), t.left.end());
                term.right.insert(term.right.begin(), t.right.begin(), t.right.end());
                out.add(term, lc * c * rc);
            }
    return out;
}

MElementRaw commutator(const TensorElement& l, const MElementRaw& x) {
    const TensorElement one = tensor_unit(x.space());
    return bimodule_mult(l, x, one) - bimodule_mult(one, x, l);
}

MElementRaw commutator(const MElementRaw& x, const TensorElement& r) {
    const TensorElement one = tensor_unit(x.space());
    return bimodule_mult(one, x, r) - bimodule_mult(r, x, one);
}

MElementRaw wm_generator_i(const Space& space, int x, int y, const Word& xi, int z, int t) {
    const TensorElement one = tensor_unit(space);
    const TensorElement middle = tensor_word(space, xi);
    const TensorElement xy = commutator(tensor_word(space, {x}), tensor_word(space, {y}));
    const TensorElement zt = commutator(tensor_word(space, {z}), tensor_word(space, {t}));
    return bimodule_mult(tensor_product(xy, middle), m_wedge(space, z, t), one) -
           bimodule_mult(one, m_wedge(space, x, y), tensor_product(middle, zt));
}

MElementRaw wm_generator_ii(const Space& space, int x, int y, int z) {
    auto v = [&](int k) { return tensor_word(space, {k}); };
    return commutator(v(x), m_wedge(space, y, z)) + commutator(v(y), m_wedge(space, z, x)) +
           commutator(v(z), m_wedge(space, x, y));
}

void for_each_wm_generator(const Space& space, int n, GeneratorFamily family,
                           const std::function<void(const MElementRaw&)>& visit) {
    if (n < 3) return;
    const int m = space.m;
    const bool full = family == GeneratorFamily::Full;

    std::vector<MElementRaw> core;
    for (int x = 1; x <= m; ++x)
        for (int y = full ? 1 : x + 1; y <= m; ++y)
            for (int z = full ? 1 : y + 1; z <= m; ++z) core.push_back(wm_generator_ii(space, x, y, z));
    for (int k = 0; k + 4 <= n; ++k)
        for (const Word& xi : all_words(m, k))
            for (int x = 1; x <= m; ++x)
                for (int y = full ? 1 : x + 1; y <= m; ++y)
                    for (int z = 1; z <= m; ++z)
                        for (int t = full ? 1 : z + 1; t <= m; ++t)
                            core.push_back(wm_generator_i(space, x, y, xi, z, t));

    for (const auto& g : core) {
        if (g.is_zero()) continue;
        const int slack = n - g.degree();
        for (int p = 0; p <= slack; ++p)
            for (const Word& alpha : all_words(m, p))
                for (const Word& beta : all_words(m, slack - p))
                    visit(bimodule_mult(tensor_word(space, alpha), g, tensor_word(space, beta)));
    }
}

std::vector<MElementRaw> wm_generators(const Space& space, int n, GeneratorFamily family) {
    std::vector<MElementRaw> out;
    for_each_wm_generator(space, n, family, [&](const MElementRaw& g) { out.push_back(g); });
    return out;
}

// --- MQuotientContext -----------------------------------------------------------

MQuotientContext MQuotientContext::build(const Space& space, int n, std::size_t size_cap) {
    if (n < 0) throw std::invalid_argument("negative degree");
    const std::uint64_t ambient = symker::ambient_dim(space.m, n);
    if (ambient > size_cap)
        throw SizeCapExceeded("ambient dimension " + std::to_string(ambient) + " exceeds cap " +
                              std::to_string(size_cap));
    RowSpace relations(space.field, static_cast<std::size_t>(ambient));
    for_each_wm_generator(space, n, GeneratorFamily::Reduced, [&](const MElementRaw& g) {
        SparseVector row;
        row.reserve(g.size());
        for (const auto& [t, c] : g.terms()) row.emplace_back(mterm_index(space.m, t), c);
        std::sort(row.begin(), row.end(), [](const auto& l, const auto& r) { return l.first < r.first; });
        relations.insert(row);
    });
    return MQuotientContext(space, n, std::move(relations));
}

std::vector<std::size_t> MQuotientContext::basis_columns() const {
    std::vector<std::size_t> out;
    for (std::size_t c = 0; c < ambient_dim(); ++c)
        if (!relations_.is_pivot(c)) out.push_back(c);
    return out;
}

Vector MQuotientContext::coordinates(const MElementRaw& x) const {
    require_same_space(x.space(), space_);
    if (x.degree() != degree_)
        throw DimensionMismatch("element of degree " + std::to_string(x.degree()) +
                                " in a degree-" + std::to_string(degree_) + " context");
    Vector v = zero_vector(space_.field, ambient_dim());
    for (const auto& [t, c] : x.terms()) v[index_of(t)] = c;
    return v;
}

Vector MQuotientContext::normal_form(const MElementRaw& x) const { return relations_.reduce(coordinates(x)); }

MElementRaw MQuotientContext::from_coordinates(std::span<const Scalar> v) const {
    if (v.size() != ambient_dim()) throw DimensionMismatch("coordinate vector length");
    MElementRaw out(space_, degree_);
    for (std::size_t i = 0; i < v.size(); ++i)
        if (!v[i].is_zero()) out.add(term_at(i), v[i]);
    return out;
}

// --- maps -------------------------------------------------------------------------

TensorElement rho_M_T(const MElementRaw& x) {
    TensorElement out(x.space(), x.degree());
    for (const auto& [t, c] : x.terms()) {
        Word w = t.left;
        w.push_back(t.a);
        w.push_back(t.b);
        w.insert(w.end(), t.right.begin(), t.right.end());
        out.add(w, c);
        std::swap(w[t.left.size()], w[t.left.size() + 1]);
        out.add(w, -c);
    }
    return out;
}

MElementRaw f_i(const TensorElement& w, int i) {
    const int n = w.degree();
    if (i < 1 || i > n - 1)
        throw std::out_of_range("f_" + std::to_string(i) + " undefined in degree " + std::to_string(n));
    MElementRaw out(w.space(), n);
    const auto pos = static_cast<std::size_t>(i - 1);
    for (const auto& [word, c] : w.terms()) {
        auto canon = wedge_canon(Word{word[pos], word[pos + 1]});
        if (!canon) continue;
        MTerm t{Word(word.begin(), word.begin() + static_cast<std::ptrdiff_t>(pos)), canon->word[0],
                canon->word[1], Word(word.begin() + static_cast<std::ptrdiff_t>(pos + 2), word.end())};
        out.add(t, canon->sign > 0 ? c : -c);
    }
    return out;
}

MElementRaw cocycle_sum(const TensorElement& a, const std::vector<int>& word) {
    MElementRaw out(a.space(), a.degree());
    TensorElement current = a;
    for (int i : word) {
        out += f_i(current, i);
        current = perm_action(Perm::adjacent(a.degree(), i), current);
    }
    return out;
}

Vector h_tau(const MQuotientContext& ctx, const Perm& tau, const TensorElement& a,
             const std::optional<std::vector<int>>& word) {
    if (tau.size() != a.degree() || a.degree() != ctx.degree())
        throw DimensionMismatch("h_tau: permutation, element and context degrees differ");
    std::vector<int> factors;
    if (word) {
        if (!(Perm::from_adjacent_word(tau.size(), *word) == tau))
            throw std::invalid_argument("factorization does not compose to " + tau.to_string());
        factors = *word;
    } else {
        factors = perm_word(tau);
    }
    return ctx.normal_form(cocycle_sum(a, factors));
}

ExactMatrix matrix_rho_M_T(const MQuotientContext& ctx) {
    const auto& space = ctx.space();
    ExactMatrix columns(space.field, dim_T(space.m, ctx.degree()));
    for (std::size_t c : ctx.basis_columns())
        columns.append_row(coordinates(rho_M_T(MElementRaw::basis(space, ctx.term_at(c)))));
    return columns.transpose();
}

// --- certificate ------------------------------------------------------------------

Certificate check_exact_M(const Space& space, int n, std::size_t size_cap) {
    if (n < 2) throw std::invalid_argument("check_exact_M needs n >= 2");
    const auto start = std::chrono::steady_clock::now();
    Certificate cert;
    cert.sequence = "M->T->S";
    cert.m = space.m;
    cert.n = n;
    cert.field = space.field;

    const std::uint64_t ambient = ambient_dim(space.m, n);
    const std::uint64_t t_dim = dim_T(space.m, n);
    const std::uint64_t s_dim = dim_S(space.m, n);
    if (ambient > size_cap || t_dim > size_cap) {
        cert.cap_exceeded = true;
        cert.dims = {{"ambient", ambient}, {"t_dim", t_dim}, {"s_dim", s_dim}};
        cert.add_check("size_cap", false,
                       "ambient " + std::to_string(ambient) + ", T^n " + std::to_string(t_dim) +
                           " against cap " + std::to_string(size_cap));
        return cert;
    }

    const MQuotientContext ctx = build_context(space, n, size_cap);
    const std::size_t m_dim = ctx.m_dim();
    cert.dims = {{"ambient", ambient}, {"wm_rank", ctx.wm_rank()}, {"m_dim", m_dim},
                 {"t_dim", t_dim}, {"s_dim", s_dim}};

    const auto t_cols = static_cast<std::size_t>(t_dim);
    std::vector<Vector> image;
    RowSpace image_space(space.field, t_cols);
    for (std::size_t c : ctx.basis_columns()) {
        image.push_back(coordinates(rho_M_T(MElementRaw::basis(space, ctx.term_at(c)))));
        image_space.insert(image.back());
    }
    cert.add_check("injective", image_space.rank() == m_dim,
                   "rank " + std::to_string(image_space.rank()) + " of dim M^n " + std::to_string(m_dim));

    const auto kernel = kernel_basis(matrix_rho_T_S(space, n));
    RowSpace kernel_space(space.field, t_cols);
    for (const auto& v : kernel) kernel_space.insert(v);
    std::size_t image_outside = 0, kernel_outside = 0;
    for (const auto& v : image)
        if (!kernel_space.contains(v)) ++image_outside;
    for (const auto& v : kernel)
        if (!image_space.contains(v)) ++kernel_outside;
    cert.add_check("image_equals_kernel", image_outside == 0 && kernel_outside == 0,
                   "dim ker rho_T_S " + std::to_string(kernel.size()) + ", image vectors outside kernel " +
                       std::to_string(image_outside) + ", kernel vectors outside image " +
                       std::to_string(kernel_outside));

    cert.add_check("dimension_identity", m_dim + s_dim == t_dim,
                   std::to_string(m_dim) + " = " + std::to_string(t_dim) + " - " + std::to_string(s_dim));

    cert.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return cert;
}

}  // namespace symker
