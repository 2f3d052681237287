#include "symker/sprime.hpp"

#include <algorithm>
#include <chrono>
#include <stdexcept>
#include <string>

namespace symker {

namespace {

bool strictly_increasing(const Word& w) {
    for (std::size_t k = 1; k < w.size(); ++k)
        if (w[k - 1] >= w[k]) return false;
    return true;
}

std::size_t basis_index(const std::vector<SPrimeBasisElem>& basis, const SPrimeBasisElem& e) {
    auto it = std::lower_bound(basis.begin(), basis.end(), e);
    return static_cast<std::size_t>(it - basis.begin());
}

SparseVector difference_row(std::size_t a, std::size_t b, const FieldSpec& field) {
    if (a == b) return {};
    const Scalar one = Scalar::one(field);
    if (a < b) return {{a, one}, {b, -one}};
    return {{b, -one}, {a, one}};
}

double elapsed_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

}  // namespace

void SPrimeTraits::validate(const Space& space, const SPrimeBasisElem& e, int degree) {
    SymTraits::validate(space, e.word, degree);
    if (e.twisted && (degree < 2 || !strictly_increasing(e.word)))
        throw std::invalid_argument("twisted basis elements need distinct letters and degree >= 2");
}

SPrimeBasisElem sprime_normal_form(const Word& w) {
    SPrimeBasisElem e{w, false};
    std::sort(e.word.begin(), e.word.end());
    if (w.size() < 2 || !strictly_increasing(e.word)) return e;
    int inversions = 0;
    for (std::size_t i = 0; i < w.size(); ++i)
        for (std::size_t j = i + 1; j < w.size(); ++j)
            if (w[i] > w[j]) ++inversions;
    e.twisted = inversions % 2 == 1;
    return e;
}

Word representative(const SPrimeBasisElem& e) {
    Word w = e.word;
    if (e.twisted) std::swap(w[0], w[1]);
    return w;
}

SPrimeElement sprime_class(const Space& space, const Word& w) {
    return SPrimeElement::basis(space, sprime_normal_form(w));
}

SPrimeElement c_op(const SPrimeElement& a) {
    if (a.degree() < 2) throw DimensionMismatch("c needs degree >= 2, got " + std::to_string(a.degree()));
    SPrimeElement out(a.space(), a.degree());
    for (const auto& [e, coeff] : a.terms()) {
        Word w = representative(e);
        std::swap(w[0], w[1]);
        out.add(sprime_normal_form(w), coeff);
    }
    return out;
}

SPrimeElement sprime_product(const SPrimeElement& a, const SPrimeElement& b) {
    require_same_space(a.space(), b.space());
    SPrimeElement out(a.space(), a.degree() + b.degree());
    for (const auto& [ea, ca] : a.terms())
        for (const auto& [eb, cb] : b.terms()) {
            Word w = representative(ea);
            const Word rb = representative(eb);
            w.insert(w.end(), rb.begin(), rb.end());
            out.add(sprime_normal_form(w), ca * cb);
        }
    return out;
}

SymElement rho_Sprime_S(const SPrimeElement& a) {
    SymElement out(a.space(), a.degree());
    for (const auto& [e, c] : a.terms()) out.add(e.word, c);
    return out;
}

SPrimeElement rho_Lambda_Sprime(const ExtElement& a) {
    if (a.degree() < 2)
        throw DimensionMismatch("rho_Lambda_Sprime needs degree >= 2, got " + std::to_string(a.degree()));
    SPrimeElement out(a.space(), a.degree());
    for (const auto& [w, c] : a.terms()) {
        out.add(SPrimeBasisElem{w, false}, c);
        out.add(SPrimeBasisElem{w, true}, -c);
    }
    return out;
}

std::uint64_t dim_Sprime(int m, int n) {
    if (n < 2) return dim_S(m, n);
    return dim_S(m, n) + binomial(m, n);
}

std::vector<SPrimeBasisElem> sprime_basis(int m, int n) {
    std::vector<SPrimeBasisElem> out;
    for (const auto& w : increasing_words(m, n, false)) {
        out.push_back({w, false});
        if (n >= 2 && strictly_increasing(w)) out.push_back({w, true});
    }
    return out;
}

Vector sprime_coordinates(const SPrimeElement& a) {
    const auto basis = sprime_basis(a.space().m, a.degree());
    Vector v = zero_vector(a.space().field, basis.size());
    for (const auto& [e, c] : a.terms()) v[basis_index(basis, e)] = c;
    return v;
}

ExactMatrix matrix_normal_form(const Space& space, int n) {
    const auto basis = sprime_basis(space.m, n);
    ExactMatrix columns(space.field, basis.size());
    for (const auto& w : all_words(space.m, n))
        columns.append_row(SparseVector{{basis_index(basis, sprime_normal_form(w)), Scalar::one(space.field)}});
    return columns.transpose();
}

ExactMatrix matrix_rho_Sprime_S(const Space& space, int n) {
    const auto monomials = increasing_words(space.m, n, false);
    ExactMatrix columns(space.field, monomials.size());
    for (const auto& e : sprime_basis(space.m, n))
        columns.append_row(sym_coordinates(rho_Sprime_S(SPrimeElement::basis(space, e))));
    return columns.transpose();
}

ExactMatrix matrix_rho_Lambda_Sprime(const Space& space, int n) {
    ExactMatrix columns(space.field, dim_Sprime(space.m, n));
    for (const auto& w : increasing_words(space.m, n, true))
        columns.append_row(sprime_coordinates(rho_Lambda_Sprime(ExtElement::basis(space, w))));
    return columns.transpose();
}

std::vector<SparseVector> wsprime_ideal_rows(const Space& space, int n) {
    std::vector<SparseVector> rows;
    const int m = space.m;
    for (int p = 0; p + 3 <= n; ++p) {
        const int q = n - 3 - p;
        for (const Word& alpha : all_words(m, p))
            for (const Word& beta : all_words(m, q))
                for (int x = 1; x <= m; ++x)
                    for (int y = 1; y <= m; ++y)
                        for (int z = 1; z <= m; ++z) {
                            Word u = alpha, v = alpha;
                            u.insert(u.end(), {x, y, z});
                            v.insert(v.end(), {y, z, x});
                            u.insert(u.end(), beta.begin(), beta.end());
                            v.insert(v.end(), beta.begin(), beta.end());
                            auto row = difference_row(word_index(m, u), word_index(m, v), space.field);
                            if (!row.empty()) rows.push_back(std::move(row));
                        }
    }
    return rows;
}

std::vector<SparseVector> wsprime_alternating_rows(const Space& space, int n) {
    std::vector<Perm> even;
    for (const auto& sigma : Perm::all(n))
        if (sigma.is_even() && !sigma.is_identity()) even.push_back(sigma);
    std::vector<SparseVector> rows;
    for (const Word& w : all_words(space.m, n))
        for (const auto& sigma : even) {
            auto row = difference_row(word_index(space.m, w), word_index(space.m, permute_word(sigma, w)),
                                      space.field);
            if (!row.empty()) rows.push_back(std::move(row));
        }
    return rows;
}

Certificate wsprime_span_check(const Space& space, int n, std::size_t size_cap) {
    const auto start = std::chrono::steady_clock::now();
    Certificate cert;
    cert.sequence = "W_S' span";
    cert.m = space.m;
    cert.n = n;
    cert.field = space.field;
    const std::uint64_t t_dim = dim_T(space.m, n);
    const std::uint64_t sprime_dim = dim_Sprime(space.m, n);
    if (t_dim > size_cap) {
        cert.cap_exceeded = true;
        cert.dims = {{"t_dim", t_dim}, {"sprime_dim", sprime_dim}};
        cert.add_check("size_cap", false, "T^n " + std::to_string(t_dim) + " against cap " + std::to_string(size_cap));
        return cert;
    }
    const auto ncols = static_cast<std::size_t>(t_dim);

    const auto ideal_rows = wsprime_ideal_rows(space, n);
    const auto alt_rows = wsprime_alternating_rows(space, n);
    RowSpace ideal(space.field, ncols), alternating(space.field, ncols);
    for (const auto& r : ideal_rows) ideal.insert(r);
    for (const auto& r : alt_rows) alternating.insert(r);

    const auto nf_kernel = kernel_basis(matrix_normal_form(space, n));
    RowSpace kernel(space.field, ncols);
    for (const auto& v : nf_kernel) kernel.insert(v);

    cert.dims = {{"t_dim", t_dim},
                 {"sprime_dim", sprime_dim},
                 {"ideal_rank", ideal.rank()},
                 {"alternating_rank", alternating.rank()},
                 {"nf_kernel_dim", nf_kernel.size()}};

    bool mutual = true;
    for (const auto& r : ideal_rows) mutual = mutual && alternating.contains(r);
    for (const auto& r : alt_rows) mutual = mutual && ideal.contains(r);
    cert.add_check("ideal_equals_alternating", mutual,
                   "ranks " + std::to_string(ideal.rank()) + " and " + std::to_string(alternating.rank()));
    cert.add_check("rank_identity", ideal.rank() + sprime_dim == t_dim,
                   std::to_string(ideal.rank()) + " = " + std::to_string(t_dim) + " - " + std::to_string(sprime_dim));
    bool kernel_match = true;
    for (const auto& v : nf_kernel) kernel_match = kernel_match && ideal.contains(v);
    for (const auto& r : ideal_rows) kernel_match = kernel_match && kernel.contains(r);
    cert.add_check("normal_form_kernel", kernel_match,
                   "dim ker " + std::to_string(nf_kernel.size()) + " vs ideal rank " + std::to_string(ideal.rank()));
    cert.seconds = elapsed_since(start);
    return cert;
}

Certificate check_exact_Sprime(const Space& space, int n, std::size_t size_cap) {
    if (n < 2) throw std::invalid_argument("check_exact_Sprime needs n >= 2");
    const auto start = std::chrono::steady_clock::now();
    Certificate cert;
    cert.sequence = "Lambda->S'->S";
    cert.m = space.m;
    cert.n = n;
    cert.field = space.field;

    const std::uint64_t lambda_dim = dim_Lambda(space.m, n);
    const std::uint64_t s_dim = dim_S(space.m, n);
    const std::uint64_t t_dim = dim_T(space.m, n);
    const auto basis = sprime_basis(space.m, n);
    const std::uint64_t sprime_dim = basis.size();
    cert.dims = {{"lambda_dim", lambda_dim}, {"sprime_dim", sprime_dim}, {"s_dim", s_dim}, {"t_dim", t_dim}};
    if (sprime_dim > size_cap) {
        cert.cap_exceeded = true;
        cert.add_check("size_cap", false,
                       "S'^n " + std::to_string(sprime_dim) + " against cap " + std::to_string(size_cap));
        return cert;
    }
    const auto ncols = static_cast<std::size_t>(sprime_dim);

    std::vector<Vector> image;
    RowSpace image_space(space.field, ncols);
    for (const auto& w : increasing_words(space.m, n, true)) {
        image.push_back(sprime_coordinates(rho_Lambda_Sprime(ExtElement::basis(space, w))));
        image_space.insert(image.back());
    }
    cert.add_check("injective", image_space.rank() == lambda_dim,
                   "rank " + std::to_string(image_space.rank()) + " of dim Lambda^n " + std::to_string(lambda_dim));

    const ExactMatrix rho = matrix_rho_Sprime_S(space, n);
    const auto kernel = kernel_basis(rho);
    RowSpace kernel_space(space.field, ncols);
    for (const auto& v : kernel) kernel_space.insert(v);
    std::size_t image_outside = 0, kernel_outside = 0;
    for (const auto& v : image)
        if (!kernel_space.contains(v)) ++image_outside;
    for (const auto& v : kernel)
        if (!image_space.contains(v)) ++kernel_outside;
    cert.add_check("image_equals_kernel", image_outside == 0 && kernel_outside == 0,
                   "dim ker rho_S'_S " + std::to_string(kernel.size()) + ", image vectors outside kernel " +
                       std::to_string(image_outside) + ", kernel vectors outside image " +
                       std::to_string(kernel_outside));

    const std::size_t rho_rank = rank(rho);
    cert.add_check("surjective", rho_rank == s_dim,
                   "rank " + std::to_string(rho_rank) + " of dim S^n " + std::to_string(s_dim));
    cert.add_check("dimension_identity", sprime_dim == s_dim + lambda_dim,
                   std::to_string(sprime_dim) + " = " + std::to_string(s_dim) + " + " + std::to_string(lambda_dim));
    cert.seconds = elapsed_since(start);
    return cert;
}

}  // namespace symker
