#include <gtest/gtest.h>

#include "generators.hpp"
#include "oracle.hpp"
#include "symker/parse.hpp"
#include "symker/sprime.hpp"

using namespace symker;

namespace {

const FieldSpec Q = FieldSpec::rationals();

SPrimeBasisElem plain(Word w) { return {std::move(w), false}; }
SPrimeBasisElem twisted(Word w) { return {std::move(w), true}; }

SPrimeElement B(const Space& s, const SPrimeBasisElem& e) { return SPrimeElement::basis(s, e); }

}  // namespace

TEST(SPrime, NormalFormExamples) {
    for (const Word& w : {Word{1, 1, 2}, Word{1, 2, 1}, Word{2, 1, 1}}) EXPECT_EQ(sprime_normal_form(w), plain({1, 1, 2}));
    EXPECT_EQ(sprime_normal_form({2, 1, 3}), twisted({1, 2, 3}));
    EXPECT_EQ(sprime_normal_form({1, 2, 3}), plain({1, 2, 3}));
    EXPECT_EQ(sprime_normal_form({3, 1, 2}), plain({1, 2, 3}));
    EXPECT_EQ(sprime_normal_form({1}), plain({1}));
}

TEST(SPrime, Representatives) {
    EXPECT_EQ(representative(twisted({1, 2, 3})), (Word{2, 1, 3}));
    EXPECT_EQ(representative(plain({1, 1, 2})), (Word{1, 1, 2}));
    for (int n = 0; n <= 4; ++n)
        for (const auto& e : sprime_basis(3, n)) EXPECT_EQ(sprime_normal_form(representative(e)), e);
}

TEST(SPrime, NormalFormAgreesWithAlternatingOrbits) {
    // Two words share a class iff an even permutation relates them.
    for (int m = 1; m <= 3; ++m)
        for (int n = 1; n <= 4; ++n) {
            std::set<SPrimeBasisElem> classes;
            for (const auto& w : all_words(m, n)) classes.insert(sprime_normal_form(w));
            EXPECT_EQ(classes.size(), oracle::count_alternating_orbits(m, n)) << m << "," << n;
            EXPECT_EQ(classes.size(), sprime_basis(m, n).size());
        }
}

TEST(SPrime, CInvolution) {
    const Space s(3, Q);
    EXPECT_EQ(c_op(B(s, plain({1, 2, 3}))), B(s, twisted({1, 2, 3})));
    EXPECT_EQ(c_op(B(s, plain({1, 1, 2}))), B(s, plain({1, 1, 2})));
    for (int n = 2; n <= 4; ++n)
        for (const auto& e : sprime_basis(3, n)) EXPECT_EQ(c_op(c_op(B(s, e))), B(s, e));
    EXPECT_THROW(c_op(B(s, plain({1}))), std::invalid_argument);
}

TEST(SPrime, CSwapsFirstTwoLetters) {
    const Space s(3, Q);
    for (int n = 2; n <= 4; ++n)
        for (const auto& w : all_words(3, n)) {
            Word v = w;
            std::swap(v[0], v[1]);
            EXPECT_EQ(c_op(sprime_class(s, w)), sprime_class(s, v));
        }
}

TEST(SPrime, ProductExamples) {
    const Space s(3, Q);
    EXPECT_EQ(sprime_product(B(s, plain({1})), B(s, plain({2}))), B(s, plain({1, 2})));
    EXPECT_EQ(sprime_product(B(s, plain({2})), B(s, plain({1}))), B(s, twisted({1, 2})));
    EXPECT_EQ(sprime_product(B(s, plain({1})), B(s, twisted({1, 2}))), B(s, plain({1, 1, 2})));
}

TEST(SPrime, ProductIsWellDefinedOnRepresentatives) {
    // Concatenating any two representatives lands in the same class.
    const Space s(3, Q);
    for (int p = 1; p <= 2; ++p)
        for (int q = 1; q <= 2; ++q)
            for (const auto& u : all_words(3, p))
                for (const auto& v : all_words(3, q)) {
                    Word uv = u;
                    uv.insert(uv.end(), v.begin(), v.end());
                    EXPECT_EQ(sprime_product(sprime_class(s, u), sprime_class(s, v)), sprime_class(s, uv));
                }
}

TEST(SPrime, RhoToS) {
    const Space s(3, Q);
    EXPECT_EQ(rho_Sprime_S(B(s, twisted({1, 2, 3}))), sym_monomial(s, {1, 2, 3}));
    EXPECT_EQ(rho_Sprime_S(B(s, plain({1, 1}))), sym_monomial(s, {1, 1}));
    EXPECT_TRUE(rho_Sprime_S(B(s, plain({1, 2})) - B(s, twisted({1, 2}))).is_zero());
}

TEST(SPrime, RhoFromLambda) {
    const Space s(3, Q);
    EXPECT_EQ(rho_Lambda_Sprime(wedge(s, {1, 2, 3})), B(s, plain({1, 2, 3})) - B(s, twisted({1, 2, 3})));
    EXPECT_TRUE(rho_Lambda_Sprime(ExtElement(s, 3)).is_zero());
    gen::Rng rng(37);
    for (const auto& f : gen::fields()) {
        const Space t(4, f);
        for (int n = 2; n <= 4; ++n)
            for (const auto& w : increasing_words(4, n, true))
                EXPECT_TRUE(rho_Sprime_S(rho_Lambda_Sprime(wedge(t, w))).is_zero());
    }
}

TEST(SPrime, Dimensions) {
    EXPECT_EQ(dim_Sprime(3, 3), 11u);
    EXPECT_EQ(dim_Sprime(2, 3), 4u);
    for (int m = 0; m <= 5; ++m) EXPECT_EQ(dim_Sprime(m, 2), static_cast<std::uint64_t>(m * m));
    for (int m = 1; m <= 3; ++m)
        for (int n = 1; n <= 4; ++n) EXPECT_EQ(dim_Sprime(m, n), oracle::count_alternating_orbits(m, n));
}

TEST(SPrime, IdealRanksAndSpanCheck) {
    EXPECT_EQ(oracle::rank({}, 1, 0), 0u);
    const auto c23 = wsprime_span_check(Space(2, Q), 3);
    EXPECT_TRUE(c23.pass());
    EXPECT_EQ(c23.dim("ideal_rank"), 4u);
    const auto c33 = wsprime_span_check(Space(3, Q), 3);
    EXPECT_TRUE(c33.pass());
    EXPECT_EQ(c33.dim("ideal_rank"), 16u);
    for (int m = 1; m <= 4; ++m) {
        EXPECT_TRUE(wsprime_ideal_rows(Space(m, Q), 2).empty());
        EXPECT_EQ(wsprime_span_check(Space(m, Q), 2).dim("ideal_rank"), 0u);
    }
}

TEST(SPrime, IdealRankMatchesOracle) {
    for (const auto& f : gen::fields())
        for (int m = 1; m <= 3; ++m)
            for (int n = 3; n <= 4; ++n) {
                const Space s(m, f);
                std::vector<oracle::Row> rows;
                for (const auto& r : wsprime_ideal_rows(s, n)) {
                    oracle::Row o;
                    for (const auto& [c, v] : r)
                        o[c] = f.is_rational() ? v.as_rational().get_num().get_si() : static_cast<long>(v.residue());
                    rows.push_back(o);
                }
                const std::size_t expect = dim_T(m, n) - oracle::count_alternating_orbits(m, n);
                EXPECT_EQ(oracle::rank(rows, dim_T(m, n), static_cast<long>(f.characteristic())), expect);
            }
}

TEST(SPrime, ExactSequence) {
    const auto c = check_exact_Sprime(Space(3, Q), 3);
    EXPECT_TRUE(c.pass());
    EXPECT_EQ(c.dim("sprime_dim"), 11u);
    const auto c2 = check_exact_Sprime(Space(2, Q), 3);
    EXPECT_TRUE(c2.pass());
    EXPECT_EQ(c2.dim("lambda_dim"), 0u);
    EXPECT_EQ(rank(matrix_rho_Sprime_S(Space(2, Q), 3)), 4u);
}

TEST(SPrime, DegreeTwoMapsMatchTensorOnes) {
    for (const auto& f : gen::fields())
        for (int m = 1; m <= 4; ++m) {
            const Space s(m, f);
            // In degree 2 the normal-form map T^2 -> S'^2 is invertible.
            EXPECT_EQ(rank(matrix_normal_form(s, 2)), dim_T(m, 2));
        }
}

TEST(SPrime, AlgebraicLawsRandom) {
    gen::Rng rng(41);
    for (const auto& f : gen::fields()) {
        const Space s(4, f);
        for (int i = 0; i < 80; ++i) {
            const auto a = rng.sprime(s, rng.uniform(1, 2)), b = rng.sprime(s, rng.uniform(1, 2)),
                       c = rng.sprime(s, rng.uniform(1, 2));
            EXPECT_EQ(sprime_product(sprime_product(a, b), c), sprime_product(a, sprime_product(b, c)));
            EXPECT_EQ(rho_Sprime_S(sprime_product(a, b)), sym_product(rho_Sprime_S(a), rho_Sprime_S(b)));
            const auto x = rng.sprime(s, rng.uniform(2, 5));
            EXPECT_EQ(c_op(c_op(x)), x);
            EXPECT_EQ(rho_Sprime_S(c_op(x)), rho_Sprime_S(x));
        }
    }
}

TEST(SPrime, ParseAndFormat) {
    const Space s(3, Q);
    EXPECT_EQ(format(parse_sprime(s, "2,1,3")), "(1,2,3) twisted");
    EXPECT_EQ(format(parse_sprime(s, "1,2,3 - 3,1,2")), "0");
    EXPECT_EQ(format_sprime_basis(sprime_normal_form({1, 1, 2})), "(1,1,2) plain");
}
