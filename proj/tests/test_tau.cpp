#include "doctest.h"
#include "support.hpp"

using namespace bkptau;
using namespace testing;

namespace {

TauSpec spec(std::vector<unsigned> parts, std::vector<std::vector<Rational>> c = {}) {
    TauSpec s = TauSpec::plain(ExtendedStrictPartition(std::move(parts)));
    if (!c.empty()) s.constants = std::move(c);
    return s;
}

}  // namespace

TEST_CASE("chi-bar building blocks") {
    const auto tb = TimeArgument::odd_times();
    CHECK(chi_bar(0, 0, tb, TimeArgument::identity()) == Poly(Rational(1, 2)));
    CHECK(chi_bar(1, 0, tb, tb) == t(1) * GaussRat(Rational(1, 2)));
    CHECK(chi_bar(2, 1, tb, tb) == P("1/12*t1^3 - t3"));
}

TEST_CASE("chi-bar antisymmetry at odd arguments") {
    const auto u = TimeArgument::odd_times().with_shift({Rational(1, 3), 0, 2});
    for (unsigned n = 0; n <= 4; ++n) {
        for (unsigned m = 0; m <= 4; ++m) {
            const Poly sum = chi_bar(n, m, u, u) + chi_bar(m, n, u, u);
            CHECK(sum == (n == 0 && m == 0 ? Poly(1) : Poly{}));
        }
    }
}

TEST_CASE("chi-plus-minus with an empty second sum") {
    const auto id = TimeArgument::identity();
    // M = 0: only the k = 0 term of the first sum, 1/2 s_N(s).
    CHECK(chi_pm(+1, 2, 0, id, id, id, id) == elem_schur(2, id) * GaussRat(Rational(1, 2)));
    CHECK(chi_pm(-1, 2, 0, id, id, id, id) == elem_schur(2, id) * GaussRat(Rational(1, 2)));
    CHECK(chi_pm(+1, 1, 0, id, id, id, id) == t(1) * GaussRat(Rational(1, 2)));
}

TEST_CASE("BKP tau-functions") {
    CHECK(tau_bkp(spec({1, 0})) == t(1) * GaussRat(Rational(1, 2)));
    CHECK(tau_bkp(spec({2, 1})) == P("1/12*t1^3 - t3"));
    CHECK(tau_bkp(TauSpec{}) == Poly(1));
    CHECK_THROWS_AS(tau_bkp(TauSpec{ExtendedStrictPartition({2, 1}), {{1}}}), std::invalid_argument);
    for (const auto& s : suite_specs()) CHECK(tau_bkp(s).odd_only());
}

TEST_CASE("BKP tau with zero constants is a scaled Q-function") {
    for (const auto& lambda : suite_partitions()) {
        const Rational scale(1, 1U << lambda.half_length());
        CHECK(tau_bkp(TauSpec::plain(lambda)) == q_schur(lambda) * GaussRat(scale));
    }
}

TEST_CASE("KP square for lambda = (1,0)") {
    const Poly sq = tau_kp_square(spec({1, 0}));
    CHECK(sq == P("1/4*t1^2 - 1/2*t2"));
    CHECK(restrict_even_zero(sq) == P("1/4*t1^2"));
    CHECK(sq == schur_lambda(Partition({1, 1})) * GaussRat(Rational(1, 2)));
    CHECK(tau_kp_square(TauSpec{}) == Poly(1));
}

TEST_CASE("KP square with zero constants is proportional to the Frobenius Schur function") {
    for (const auto& lambda : suite_partitions()) {
        const Poly sq = tau_kp_square(TauSpec::plain(lambda));
        const Poly s = schur_lambda(kp_square_partition(lambda));
        const Monomial lead = s.terms().begin()->first;
        const GaussRat ratio = sq.coefficient(lead) / s.coefficient(lead);
        CHECK_FALSE(ratio.is_zero());
        CHECK(sq == s * ratio);
    }
}

TEST_CASE("main theorem on the suite") {
    for (const auto& s : suite_specs()) {
        const Poly sq = tau_kp_square(s);
        CHECK(sq.is_real());
        CHECK(tau_bkp(s).pow(2) == restrict_even_zero(sq));
    }
}

TEST_CASE("typeset chi conventions are rejected by the Wick oracle") {
    // The chi-bar pairings only differ when the two arguments differ.
    const TauSpec s = spec({2, 1}, {{1, 0, Rational(1, 2)}, {0, 1}});
    const Poly oracle_bkp = fock::oracle_tau_bkp(s);
    const auto a = TimeArgument::odd_times().with_shift(s.constants[0]);
    const auto b = TimeArgument::odd_times().with_shift(s.constants[1]);
    CHECK(detail::chi_bar(2, 1, a, b, detail::ChiBarPairing::FirstIndexWithFirstArgument) == oracle_bkp);
    CHECK_FALSE(detail::chi_bar(2, 1, a, b, detail::ChiBarPairing::FirstIndexWithSecondArgument) == oracle_bkp);

    const Poly oracle_sq = fock::oracle_tau_kp_square(s);
    CHECK(detail::tau_kp_square(s, detail::ChiPmSigns::MOuterNInner) == oracle_sq);
    CHECK_FALSE(detail::tau_kp_square(s, detail::ChiPmSigns::Alternating) == oracle_sq);
    // Swapping (-1)^N and (-1)^M rescales entry (i,j) by (-1)^{lambda_i + lambda_j}, which cancels in
    // the Pfaffian because every part labels one unhatted and one hatted row.
    CHECK(detail::tau_kp_square(s, detail::ChiPmSigns::NOuterMInner) == oracle_sq);
}

TEST_CASE("chi-plus-minus entries match the Wick oracle pairwise") {
    const TauSpec s = spec({3, 2, 1}, {{1, Rational(1, 2)}, {0, -1, 2}, {Rational(-1, 3)}, {0, 0, 1}});
    const auto word = fock::kp_square_word(s);
    const std::size_t len = s.lambda.length();
    const fock::Hamiltonian h{fock::Flavor::Charged, Bank::T, false};
    const auto matrix = kp_square_matrix(s);
    auto tilde = [](std::vector<Rational> c) {
        for (std::size_t k = 0; k < c.size(); k += 2) c[k] = -c[k];
        return c;
    };
    auto neg = [](std::vector<Rational> c) {
        for (auto& v : c) v = -v;
        return c;
    };
    const auto id = TimeArgument::identity();
    bool printed_differs = false;
    for (std::size_t i = 0; i < len; ++i) {
        for (std::size_t j = 0; j < len; ++j) {
            const auto ci = s.constants_of(i);
            const auto cj = s.constants_of(j);
            const auto a1 = id.with_shift(ci);
            const auto a2 = id.with_shift(neg(tilde(cj)));
            const auto a3 = id.with_shift(neg(tilde(ci)));
            const auto a4 = id.with_shift(cj);
            const unsigned n = s.lambda.parts()[i];
            const unsigned m = s.lambda.parts()[j];
            const Poly mixed = fock::oracle_tau({word[i], word[len + j]}, {h});
            CHECK(mixed == matrix.at(i, len + j));
            CHECK(mixed == -GaussRat::i() * chi_pm(-1, n, m, a1, a2, a3, a4));
            if (i < j) {
                const Poly same = fock::oracle_tau({word[i], word[j]}, {h});
                CHECK(same == matrix.at(i, j));
                CHECK(same == chi_pm(+1, n, m, a1, a2, a3, a4));
                CHECK(fock::oracle_tau({word[len + i], word[len + j]}, {h}) == same);
                if (detail::chi_pm(+1, n, m, a1, a2, a3, a4, detail::ChiPmSigns::NOuterMInner) != same)
                    printed_differs = true;
            }
        }
    }
    CHECK(printed_differs);
}

TEST_CASE("series and constants") {
    CoeffSeries one_plus_az{0, {1, Rational(3)}};
    const auto c = series_to_constants(one_plus_az, 3);
    CHECK(c == std::vector<Rational>{3, Rational(-9, 2), 9});
    CHECK(series_to_constants(CoeffSeries{2, {1}}, 4) == std::vector<Rational>(4, 0));
    // log(1 + z + z^2) = log(1 - z^3) - log(1 - z)
    CHECK(series_to_constants(CoeffSeries{0, {1, 1, 1}}, 3) == std::vector<Rational>{1, Rational(1, 2), Rational(-2, 3)});
    CHECK_THROWS_AS(series_to_constants(CoeffSeries{0, {2, 1}}, 3), std::invalid_argument);
    CHECK_THROWS_AS(series_to_constants(CoeffSeries{0, {}}, 3), std::invalid_argument);

    Rng rng(12);
    for (int n = 0; n < 20; ++n) {
        const std::vector<Rational> consts{rng.rational(), rng.rational(), rng.rational(), rng.rational()};
        const auto series = constants_to_series(consts, 1, 4);
        CHECK(series_to_constants(series, 4) == consts);
        // Cross-check the exponential against elementary Schur polynomials at the constants.
        for (unsigned j = 0; j <= 4; ++j) CHECK(Poly(series.coeffs[j]) == elem_schur(static_cast<int>(j), TimeArgument::constants(consts)));
    }
}

TEST_CASE("KdV family") {
    CHECK(kdv_tau(0) == Poly(1));
    CHECK(kdv_tau(1) == t(1));
    CHECK(kdv_half(1) == t(1) * GaussRat(Rational(1, 2)));
    CHECK(kdv_tau(2) == P("1/3*t1^3 - t3"));
    for (unsigned k = 0; k <= 4; ++k) CHECK(kdv_tau(k).odd_only());
    CHECK(staircase_strict(3).parts() == std::vector<unsigned>{3, 2, 1, 0});
    CHECK(staircase_strict(2).parts() == std::vector<unsigned>{2, 1});
}
