// Acceptance suite: one [PASS]/[FAIL] line per criterion, nonzero exit on
// any failure.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>

#include "generators.hpp"
#include "oracle.hpp"
#include "symker/certify.hpp"
#include "symker/json_io.hpp"
#include "symker/m_bimodule.hpp"
#include "symker/sprime.hpp"

using namespace symker;

namespace {

const FieldSpec Q = FieldSpec::rationals();
const FieldSpec F2 = FieldSpec::prime(2);
const FieldSpec F3 = FieldSpec::prime(3);
const FieldSpec F5 = FieldSpec::prime(5);

/// Counts failures and keeps the first few for the report.
class Tally {
public:
    void expect(bool ok, const std::function<std::string()>& what) {
        ++checked_;
        if (ok) return;
        if (failures_++ < 5) first_ << "\n      " << what();
    }
    long checked() const { return checked_; }
    long failures() const { return failures_; }
    std::string first() const { return first_.str(); }

private:
    long checked_ = 0;
    long failures_ = 0;
    std::ostringstream first_;
};

struct Outcome {
    bool pass;
    std::string summary;
};

int g_failed = 0;

void criterion(const std::string& id, const std::string& title, double limit_seconds,
               const std::function<Outcome()>& body) {
    const auto start = std::chrono::steady_clock::now();
    Outcome out;
    try {
        out = body();
    } catch (const std::exception& e) {
        out = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = limit_seconds <= 0 || secs < limit_seconds;
    const bool pass = out.pass && in_time;
    if (!pass) ++g_failed;
    std::printf("[%s] %s %s: %s (%.2f s", pass ? "PASS" : "FAIL", id.c_str(), title.c_str(), out.summary.c_str(),
                secs);
    if (limit_seconds > 0) std::printf(", limit %.0f s%s", limit_seconds, in_time ? "" : ", EXCEEDED");
    std::printf(")\n");
    std::fflush(stdout);
}

Outcome from_tally(const Tally& t) {
    std::string s = std::to_string(t.checked()) + " checks, " + std::to_string(t.failures()) + " failures" + t.first();
    return {t.failures() == 0 && t.checked() > 0, s};
}

std::string cell(const Certificate& c) {
    return c.sequence + " m=" + std::to_string(c.m) + " n=" + std::to_string(c.n) + " " + c.field.name();
}

/// a * b by columns.
ExactMatrix multiply(const ExactMatrix& a, const ExactMatrix& b) {
    const ExactMatrix bt = b.transpose();
    ExactMatrix cols(a.field(), a.nrows());
    for (const auto& col : bt.rows()) cols.append_row(a.apply(col));
    return cols.transpose();
}

/// Matrix of a T^n -> T^n map given on basis words.
template <class Fn>
ExactMatrix tensor_operator(const Space& s, int n, Fn&& fn) {
    ExactMatrix cols(s.field, dim_T(s.m, n));
    for (const auto& w : all_words(s.m, n)) cols.append_row(coordinates(fn(tensor_word(s, w))));
    return cols.transpose();
}

std::vector<int> padded(std::vector<int> word, int i, std::size_t where) {
    where %= word.size() + 1;
    word.insert(word.begin() + static_cast<std::ptrdiff_t>(where), {i, i});
    return word;
}

Vector add(Vector a, const Vector& b) {
    for (std::size_t k = 0; k < a.size(); ++k) a[k] += b[k];
    return a;
}

}  // namespace

int main() {
    const std::vector<FieldSpec> all_fields{Q, F2, F3, F5};
    const std::vector<FieldSpec> grid_fields{Q, F2, F3};
    std::vector<Certificate> m_grid_run, sprime_grid_run;

    criterion("AC1", "0 -> Lambda^2 -> T^2 -> S^2 -> 0 exact, m 1..5, Q/F2/F3/F5", 1.0, [&] {
        Tally t;
        for (const auto& f : all_fields)
            for (int m = 1; m <= 5; ++m) {
                const Space s(m, f);
                const ExactMatrix inc = matrix_rho_Lambda2_T2(s);
                const auto ker = kernel_basis(matrix_rho_T_S(s, 2));
                const std::string where = f.name() + " m=" + std::to_string(m);
                t.expect(rank(inc) == oracle::choose(m, 2), [&] { return "rank " + where; });
                t.expect(same_row_space(inc.transpose().rows(), ker, f, dim_T(m, 2)),
                         [&] { return "image != kernel " + where; });
                t.expect(check_exact_degree2(s).pass(), [&] { return "certificate " + where; });
            }
        return from_tally(t);
    });

    criterion("AC2", "0 -> M^n -> T^n -> S^n -> 0 grid, dim M^n = m^n - C(m+n-1,n)", 300.0, [&] {
        Tally t;
        m_grid_run = run_grid({{2, 3}, {2, 3, 4, 5}, grid_fields}, Sequence::M);
        const auto extra = run_grid({{4}, {2, 3, 4}, grid_fields}, Sequence::M);
        m_grid_run.insert(m_grid_run.end(), extra.begin(), extra.end());
        t.expect(m_grid_run.size() == 33, [&] { return "expected 33 cells, got " + std::to_string(m_grid_run.size()); });
        for (const auto& c : m_grid_run) {
            t.expect(c.pass() && c.checks.size() == 3, [&] { return "failed " + cell(c); });
            const std::uint64_t expect = oracle::words(c.m, c.n).size() - oracle::count_monomials(c.m, c.n);
            t.expect(c.dim("m_dim") == expect, [&] {
                return cell(c) + " dim M " + std::to_string(c.dim("m_dim")) + " != " + std::to_string(expect);
            });
        }
        return from_tally(t);
    });

    criterion("AC3", "relations die under rho, rho f_i = 1 - tau_i, telescoping sums; m<=3, n<=4", 0, [&] {
        Tally t;
        gen::Rng rng(1003);
        for (const auto& f : all_fields)
            for (int m = 1; m <= 3; ++m)
                for (int n = 2; n <= 4; ++n) {
                    const Space s(m, f);
                    const std::string where = f.name() + " m=" + std::to_string(m) + " n=" + std::to_string(n);
                    for (auto family : {GeneratorFamily::Reduced, GeneratorFamily::Full})
                        for_each_wm_generator(s, n, family, [&](const MElementRaw& g) {
                            t.expect(rho_M_T(g).is_zero(), [&] { return "relation survives rho " + where; });
                        });
                    for (int i = 1; i < n; ++i) {
                        const Perm ti = Perm::adjacent(n, i);
                        const auto lhs = tensor_operator(s, n, [&](const TensorElement& a) { return rho_M_T(f_i(a, i)); });
                        const auto rhs = tensor_operator(s, n, [&](const TensorElement& a) { return a - perm_action(ti, a); });
                        t.expect(lhs == rhs, [&] { return "rho f_" + std::to_string(i) + " " + where; });
                    }
                    for (int k = 0; k < 10; ++k) {
                        std::vector<int> word(static_cast<std::size_t>(rng.uniform(0, 6)));
                        for (auto& i : word) i = rng.uniform(1, n - 1);
                        const Perm tau = Perm::from_adjacent_word(n, word);
                        const auto lhs = tensor_operator(s, n, [&](const TensorElement& a) { return rho_M_T(cocycle_sum(a, word)); });
                        const auto rhs = tensor_operator(s, n, [&](const TensorElement& a) { return a - perm_action(tau, a); });
                        t.expect(lhs == rhs, [&] { return "telescoping " + where; });
                    }
                }
        return from_tally(t);
    });

    criterion("AC4", "h_tau independent of word, cocycle identity (500 samples/config), rho h_tau = 1 - tau", 0, [&] {
        Tally t;
        gen::Rng rng(2024);
        for (const auto& f : all_fields)
            for (int m = 1; m <= 3; ++m)
                for (int n = 2; n <= 4; ++n) {
                    const Space s(m, f);
                    const auto ctx = build_context(s, n);
                    const std::string where = f.name() + " m=" + std::to_string(m) + " n=" + std::to_string(n);
                    std::size_t salt = 0;
                    for (const Perm& tau : Perm::all(n)) {
                        const auto left = perm_word(tau, Factorization::LeftmostDescent);
                        const auto right = perm_word(tau, Factorization::RightmostDescent);
                        for (const auto& w : all_words(m, n)) {
                            const auto a = tensor_word(s, w);
                            const Vector h = h_tau(ctx, tau, a, left);
                            t.expect(h == h_tau(ctx, tau, a, right), [&] { return "two factorizations " + tau.to_string() + " " + where; });
                            for (int i = 1; i < n; ++i)
                                t.expect(h == h_tau(ctx, tau, a, padded(left, i, salt++)),
                                         [&] { return "padded word " + tau.to_string() + " " + where; });
                            t.expect(rho_M_T(ctx.from_coordinates(h)) == a - perm_action(tau, a),
                                     [&] { return "rho h_tau " + tau.to_string() + " " + where; });
                        }
                    }
                    for (int k = 0; k < 500; ++k) {
                        const Perm sigma = rng.perm(n), tau = rng.perm(n);
                        const auto a = tensor_word(s, rng.word(m, n));
                        t.expect(h_tau(ctx, sigma * tau, a) == add(h_tau(ctx, tau, a), h_tau(ctx, sigma, perm_action(tau, a))),
                                 [&] { return "cocycle " + sigma.to_string() + "," + tau.to_string() + " " + where; });
                    }
                }
        return from_tally(t);
    });

    criterion("AC5", "normal-form kernel = ideal W_S'^n, dim S'^n = C(m+n-1,n) + C(m,n); m<=3, n<=4", 60.0, [&] {
        Tally t;
        for (const auto& f : grid_fields)
            for (int m = 1; m <= 3; ++m)
                for (int n = 2; n <= 4; ++n) {
                    const Certificate c = wsprime_span_check(Space(m, f), n);
                    t.expect(c.pass(), [&] { return "failed " + cell(c); });
                    const std::uint64_t expect = oracle::choose(m + n - 1, n) + oracle::choose(m, n);
                    t.expect(c.dim("sprime_dim") == expect && dim_Sprime(m, n) == expect &&
                                 oracle::count_alternating_orbits(m, n) == expect,
                             [&] { return "dim S' " + cell(c); });
                }
        return from_tally(t);
    });

    criterion("AC6", "0 -> Lambda^n -> S'^n -> S^n -> 0 grid, m,n in 2..5, Q/F2/F3", 60.0, [&] {
        Tally t;
        sprime_grid_run = run_grid({{2, 3, 4, 5}, {2, 3, 4, 5}, grid_fields}, Sequence::Sprime);
        t.expect(sprime_grid_run.size() == 48, [&] { return "expected 48 cells"; });
        for (const auto& c : sprime_grid_run) {
            t.expect(c.pass(), [&] { return "failed " + cell(c); });
            t.expect(c.dim("sprime_dim") == oracle::choose(c.m + c.n - 1, c.n) + oracle::choose(c.m, c.n),
                     [&] { return "dim identity " + cell(c); });
        }
        return from_tally(t);
    });

    criterion("AC7", "degree-2 coincidences M^2 = Lambda^2 and S'^2 = T^2, m 1..5, Q/F2/F3/F5", 0, [&] {
        Tally t;
        for (const auto& f : all_fields)
            for (int m = 1; m <= 5; ++m) {
                const Space s(m, f);
                const std::string where = f.name() + " m=" + std::to_string(m);
                const auto ctx = build_context(s, 2);
                t.expect(ctx.wm_rank() == 0, [&] { return "wm_rank " + where; });
                t.expect(matrix_rho_M_T(ctx) == matrix_rho_Lambda2_T2(s), [&] { return "rho_M2 != rho_Lambda2 " + where; });
                const ExactMatrix nf = matrix_normal_form(s, 2);
                t.expect(rank(nf) == dim_T(m, 2) && nf.nrows() == dim_T(m, 2), [&] { return "S'^2 != T^2 " + where; });
                t.expect(multiply(nf, matrix_rho_Lambda2_T2(s)) == matrix_rho_Lambda_Sprime(s, 2),
                         [&] { return "Lambda^2 -> S'^2 mismatch " + where; });
                t.expect(multiply(matrix_rho_Sprime_S(s, 2), nf) == matrix_rho_T_S(s, 2),
                         [&] { return "S'^2 -> S^2 mismatch " + where; });
                t.expect(degree2_coincidence(s).pass(), [&] { return "certificate " + where; });
            }
        return from_tally(t);
    });

    criterion("AC8", "S' associativity, rho multiplicativity, c^2 = 1, rho c = rho", 0, [&] {
        Tally t;
        for (const auto& f : all_fields)
            for (int m = 1; m <= 3; ++m) {
                const Space s(m, f);
                auto B = [&](const SPrimeBasisElem& e) { return SPrimeElement::basis(s, e); };
                for (int n = 2; n <= 4; ++n)
                    for (const auto& e : sprime_basis(m, n)) {
                        t.expect(c_op(c_op(B(e))) == B(e), [&] { return "c^2 " + f.name(); });
                        t.expect(rho_Sprime_S(c_op(B(e))) == rho_Sprime_S(B(e)), [&] { return "rho c " + f.name(); });
                    }
                for (int p = 0; p <= 4; ++p)
                    for (int q = 0; p + q <= 4; ++q)
                        for (const auto& x : sprime_basis(m, p))
                            for (const auto& y : sprime_basis(m, q)) {
                                t.expect(rho_Sprime_S(sprime_product(B(x), B(y))) ==
                                             sym_product(rho_Sprime_S(B(x)), rho_Sprime_S(B(y))),
                                         [&] { return "rho multiplicative " + f.name(); });
                                for (int r = 0; p + q + r <= 4; ++r)
                                    for (const auto& z : sprime_basis(m, r))
                                        t.expect(sprime_product(sprime_product(B(x), B(y)), B(z)) ==
                                                     sprime_product(B(x), sprime_product(B(y), B(z))),
                                                 [&] { return "associativity " + f.name(); });
                            }
            }
        gen::Rng rng(8008);
        for (int k = 0; k < 1200; ++k) {
            const FieldSpec& f = all_fields[static_cast<std::size_t>(k) % all_fields.size()];
            const Space s(rng.uniform(4, 6), f);
            const auto a = rng.sprime(s, rng.uniform(1, 3)), b = rng.sprime(s, rng.uniform(1, 3)),
                       c = rng.sprime(s, rng.uniform(1, 3));
            const auto x = rng.sprime(s, rng.uniform(5, 7));
            t.expect(sprime_product(sprime_product(a, b), c) == sprime_product(a, sprime_product(b, c)),
                     [&] { return "random associativity"; });
            t.expect(rho_Sprime_S(sprime_product(a, b)) == sym_product(rho_Sprime_S(a), rho_Sprime_S(b)),
                     [&] { return "random multiplicativity"; });
            t.expect(c_op(c_op(x)) == x, [&] { return "random c^2"; });
            t.expect(rho_Sprime_S(c_op(x)) == rho_Sprime_S(x), [&] { return "random rho c"; });
        }
        return from_tally(t);
    });

    criterion("AC9", "two full grid runs give byte-identical JSON (timing excluded)", 0, [&] {
        std::vector<Certificate> first = m_grid_run;
        first.insert(first.end(), sprime_grid_run.begin(), sprime_grid_run.end());
        std::vector<Certificate> second = run_grid({{2, 3}, {2, 3, 4, 5}, grid_fields}, Sequence::M, 1);
        const auto extra = run_grid({{4}, {2, 3, 4}, grid_fields}, Sequence::M, 1);
        const auto sp = run_grid({{2, 3, 4, 5}, {2, 3, 4, 5}, grid_fields}, Sequence::Sprime, 1);
        second.insert(second.end(), extra.begin(), extra.end());
        second.insert(second.end(), sp.begin(), sp.end());
        const std::string a = to_json(first, false).dump(), b = to_json(second, false).dump();
        const bool same = !first.empty() && a == b;
        return Outcome{same, std::to_string(first.size()) + " certificates, " + std::to_string(a.size()) + " bytes, " +
                                 (same ? "identical" : "DIFFERENT")};
    });

    std::printf("%s: %d criteria failed\n", g_failed ? "FAIL" : "PASS", g_failed);
    return g_failed ? 1 : 0;
}
