#include "symker/certify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <thread>
#include <tuple>

#include "symker/exterior.hpp"
#include "symker/m_bimodule.hpp"
#include "symker/sprime.hpp"

namespace symker {

namespace {

struct Cell {
    int m;
    int n;
    FieldSpec field;
    bool sprime;  // false: M->T->S, true: Lambda->S'->S
};

Certificate failed_cell(const Cell& cell, const std::string& what) {
    Certificate cert;
    cert.sequence = cell.sprime ? "Lambda->S'->S" : "M->T->S";
    cert.m = cell.m;
    cert.n = cell.n;
    cert.field = cell.field;
    cert.add_check("error", false, what);
    return cert;
}

Certificate run_cell(const Cell& cell, std::size_t cap) {
    try {
        const Space space(cell.m, cell.field);
        return cell.sprime ? check_exact_Sprime(space, cell.n, cap) : check_exact_M(space, cell.n, cap);
    } catch (const SizeCapExceeded& e) {
        Certificate cert = failed_cell(cell, e.what());
        cert.checks.front().name = "size_cap";
        cert.cap_exceeded = true;
        return cert;
    } catch (const std::exception& e) {
        return failed_cell(cell, e.what());
    }
}

std::vector<Vector> columns_of(const ExactMatrix& m) { return m.transpose().rows(); }

}  // namespace

std::vector<Certificate> run_grid(const CheckGrid& grid, Sequence which, unsigned workers) {
    std::vector<Cell> cells;
    for (int m : grid.m_values)
        for (int n : grid.n_values) {
            if (n < 2) continue;
            for (const auto& f : grid.fields) {
                if (which != Sequence::Sprime) cells.push_back({m, n, f, false});
                if (which != Sequence::M) cells.push_back({m, n, f, true});
            }
        }
    auto key = [](const Cell& c) { return std::tuple{c.m, c.n, c.field, c.sprime}; };
    std::sort(cells.begin(), cells.end(), [&](const Cell& a, const Cell& b) { return key(a) < key(b); });
    cells.erase(std::unique(cells.begin(), cells.end(), [&](const Cell& a, const Cell& b) { return key(a) == key(b); }),
                cells.end());

    std::vector<Certificate> out(cells.size());
    if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());
    workers = std::min<unsigned>(workers, static_cast<unsigned>(std::max<std::size_t>(cells.size(), 1)));

    std::atomic<std::size_t> next{0};
    auto work = [&] {
        for (std::size_t i = next++; i < cells.size(); i = next++) out[i] = run_cell(cells[i], grid.size_cap);
    };
    {
        std::vector<std::jthread> pool;
        for (unsigned w = 1; w < workers; ++w) pool.emplace_back(work);
        work();
    }
    return out;
}

Certificate check_exact_degree2(const Space& space) {
    const auto start = std::chrono::steady_clock::now();
    Certificate cert;
    cert.sequence = "Lambda2->T2->S2";
    cert.m = space.m;
    cert.n = 2;
    cert.field = space.field;
    const std::uint64_t lambda_dim = dim_Lambda(space.m, 2), t_dim = dim_T(space.m, 2), s_dim = dim_S(space.m, 2);
    cert.dims = {{"lambda_dim", lambda_dim}, {"t_dim", t_dim}, {"s_dim", s_dim}};

    const auto t_cols = static_cast<std::size_t>(t_dim);
    const auto image = columns_of(matrix_rho_Lambda2_T2(space));
    RowSpace image_space(space.field, t_cols);
    for (const auto& v : image) image_space.insert(v);
    cert.add_check("injective", image_space.rank() == lambda_dim,
                   "rank " + std::to_string(image_space.rank()) + " of " + std::to_string(lambda_dim));

    const ExactMatrix rho = matrix_rho_T_S(space, 2);
    const auto kernel = kernel_basis(rho);
    cert.add_check("image_equals_kernel", same_row_space(image, kernel, space.field, t_cols),
                   "dim ker rho_T2_S2 " + std::to_string(kernel.size()));
    const std::size_t rho_rank = rank(rho);
    cert.add_check("surjective", rho_rank == s_dim,
                   "rank " + std::to_string(rho_rank) + " of " + std::to_string(s_dim));
    cert.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return cert;
}

Certificate degree2_coincidence(const Space& space) {
    const auto start = std::chrono::steady_clock::now();
    Certificate cert;
    cert.sequence = "degree2";
    cert.m = space.m;
    cert.n = 2;
    cert.field = space.field;

    const MQuotientContext ctx = build_context(space, 2);
    const std::uint64_t lambda_dim = dim_Lambda(space.m, 2);
    const std::uint64_t t_dim = dim_T(space.m, 2);
    const auto sbasis = sprime_basis(space.m, 2);
    cert.dims = {{"lambda_dim", lambda_dim}, {"t_dim", t_dim}, {"s_dim", dim_S(space.m, 2)},
                 {"m_dim", ctx.m_dim()}, {"wm_rank", ctx.wm_rank()}, {"sprime_dim", sbasis.size()}};

    cert.add_check("wm_rank_zero", ctx.wm_rank() == 0, "wm_rank " + std::to_string(ctx.wm_rank()));
    cert.add_check("m2_equals_lambda2", ctx.m_dim() == lambda_dim,
                   std::to_string(ctx.m_dim()) + " vs " + std::to_string(lambda_dim));
    const ExactMatrix rho_lambda = matrix_rho_Lambda2_T2(space);
    cert.add_check("rho_M2_equals_rho_Lambda2", matrix_rho_M_T(ctx) == rho_lambda, "matrix comparison");

    // Identify S'^2 with T^2 through basis representatives.
    cert.add_check("sprime2_equals_t2", sbasis.size() == t_dim && rank(matrix_normal_form(space, 2)) == t_dim,
                   "dim S'^2 " + std::to_string(sbasis.size()) + ", dim T^2 " + std::to_string(t_dim));
    ExactMatrix lambda_via_sprime(space.field, lambda_dim);
    {
        ExactMatrix cols(space.field, static_cast<std::size_t>(t_dim));
        for (const auto& w : increasing_words(space.m, 2, true)) {
            TensorElement t(space, 2);
            const SPrimeElement image = rho_Lambda_Sprime(ExtElement::basis(space, w));
            for (const auto& [e, c] : image.terms())
                t.add(representative(e), c);
            cols.append_row(coordinates(t));
        }
        lambda_via_sprime = cols.transpose();
    }
    ExactMatrix sym_via_sprime(space.field, static_cast<std::size_t>(t_dim));
    {
        ExactMatrix cols(space.field, static_cast<std::size_t>(dim_S(space.m, 2)));
        for (const auto& w : all_words(space.m, 2))
            cols.append_row(sym_coordinates(rho_Sprime_S(sprime_class(space, w))));
        sym_via_sprime = cols.transpose();
    }
    cert.add_check("rho_Lambda2_Sprime2_matches", lambda_via_sprime == rho_lambda, "matrix comparison");
    cert.add_check("rho_Sprime2_S2_matches", sym_via_sprime == matrix_rho_T_S(space, 2), "matrix comparison");
    cert.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return cert;
}

}  // namespace symker
