#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "swfam/char_calculus.hpp"

using namespace swfam;

namespace {

ExtElem random_degree(std::mt19937_64& rng, const BasisPtr& basis, int degree) {
    ExtElem e = ExtElem::zero(basis);
    int n = basis->size();
    if (degree == 2) {
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) {
                long long c = static_cast<long long>(rng() % 9) - 4;
                e += ExtElem::monomial(basis, (Mask(1) << i) | (Mask(1) << j), Rational(c));
            }
    } else if (degree == 4) {
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                for (int k = j + 1; k < n; ++k)
                    for (int l = k + 1; l < n; ++l) {
                        long long c = static_cast<long long>(rng() % 9) - 4;
                        e += ExtElem::monomial(
                            basis, (Mask(1) << i) | (Mask(1) << j) | (Mask(1) << k) | (Mask(1) << l),
                            Rational(c));
                    }
    }
    return e;
}

CharData random_critical(std::mt19937_64& rng, int b1) {
    BasisPtr basis = GeneratorBasis::torus(b1);
    return CharData::critical(random_degree(rng, basis, 2), random_degree(rng, basis, 4));
}

} // namespace

TEST_CASE("recursion unrolled by hand") {
    std::mt19937_64 rng(31);
    CharData data = random_critical(rng, 6);
    ExtElem ch1 = data.chern_char(1), ch2 = data.chern_char(2);
    GradedSeries c = chern_recursion(data, 3);
    CHECK(c.coefficient(0) == ExtElem::unit(data.basis()));
    CHECK(c.coefficient(1) == ch1);
    CHECK(c.coefficient(2) == (ch1 * ch1 - ch2 * Rational(2)) * Rational(1, 2));
}

TEST_CASE("zero character gives the unit series") {
    BasisPtr basis = GeneratorBasis::torus(4);
    CharData zero = CharData::critical(ExtElem::zero(basis), ExtElem::zero(basis));
    CHECK(chern_recursion(zero, 4) == GradedSeries::one(basis, 4));
    CHECK(chern_closed_form(zero, 4) == GradedSeries::one(basis, 4));
    CHECK(segre_closed_form(zero, 4) == GradedSeries::one(basis, 4));
}

TEST_CASE("closed form coefficient of t^2 is ch1^2/2 - ch2") {
    std::mt19937_64 rng(32);
    CharData data = random_critical(rng, 6);
    ExtElem ch1 = data.chern_char(1), ch2 = data.chern_char(2);
    GradedSeries c = chern_closed_form(data, 2);
    CHECK(c.coefficient(2) == ch1 * ch1 * Rational(1, 2) - ch2);
}

TEST_CASE("segre coefficients match the explicit sum") {
    std::mt19937_64 rng(33);
    CharData data = random_critical(rng, 8);
    ExtElem ch1 = data.chern_char(1), ch2 = data.chern_char(2);
    GradedSeries s = segre_closed_form(data, 4);
    for (int n = 0; n <= 4; ++n) {
        ExtElem expect = ExtElem::zero(data.basis());
        for (int j = 0; 2 * j <= n; ++j) {
            int i = n - 2 * j;
            ExtElem term = ExtElem::unit(data.basis());
            for (int p = 0; p < i; ++p)
                term = term * ch1;
            for (int p = 0; p < j; ++p)
                term = term * ch2;
            Rational coeff(Int(1), factorial(unsigned(i)) * factorial(unsigned(j)));
            expect += term * ((i % 2) ? -coeff : coeff);
        }
        CHECK(s.coefficient(n) == expect);
    }
}

TEST_CASE("recursion, closed form and inverse segre agree; C(t)S(t)=1") {
    std::mt19937_64 rng(34);
    for (int b1 : {0, 2, 4, 6, 8})
        for (int t = 0; t < 8; ++t) {
            CharData data = random_critical(rng, b1);
            int n = b1 == 0 ? 3 : b1;
            GradedSeries c_rec = chern_recursion(data, n);
            GradedSeries c = chern_closed_form(data, n);
            GradedSeries s = segre_closed_form(data, n);
            CHECK(c_rec == c);
            CHECK(c == series_inverse(s));
            CHECK(c * s == GradedSeries::one(data.basis(), n));
        }
}

TEST_CASE("degree parity of the total classes") {
    std::mt19937_64 rng(35);
    CharData data = random_critical(rng, 8);
    for (const GradedSeries& s : {chern_closed_form(data, 6), segre_closed_form(data, 6)})
        for (int k = 0; k <= 6; ++k)
            for (const auto& [m, c] : s.coefficient(k).terms())
                CHECK(std::popcount(m) % 2 == 0);
}

TEST_CASE("noncritical data is rejected by the critical-case routines") {
    BasisPtr basis = GeneratorBasis::torus(8);
    std::mt19937_64 rng(36);
    std::vector<ExtElem> ch{random_degree(rng, basis, 2), random_degree(rng, basis, 4),
                            ExtElem::zero(basis)};
    // a nonzero ch3 of degree 6
    ch[2] += ExtElem::monomial(basis, 0b00111111, 1);
    CharData data = CharData::from_components(basis, ch);
    CHECK(!data.is_critical());
    CHECK_THROWS_AS(chern_recursion(data, 4), ValidationError);
    CHECK_THROWS_AS(chern_closed_form(data, 4), ValidationError);
    CHECK_THROWS_AS(segre_closed_form(data, 4), ValidationError);
    CHECK_NOTHROW(chern_general(data, 4));
}

TEST_CASE("chern_general specializes to the critical closed form") {
    std::mt19937_64 rng(37);
    for (int t = 0; t < 10; ++t) {
        CharData data = random_critical(rng, 6);
        CHECK(chern_general(data, 6) == chern_closed_form(data, 6));
    }
}

TEST_CASE("roots (1,1) give C(t) = 1 + 2t + t^2") {
    CharData data = CharData::from_roots({1, 1}, 4);
    GradedSeries c = chern_general(data, 4);
    BasisPtr empty = data.basis();
    CHECK(c.coefficient(0) == ExtElem::unit(empty));
    CHECK(c.coefficient(1) == ExtElem::scalar(empty, 2));
    CHECK(c.coefficient(2) == ExtElem::scalar(empty, 1));
    CHECK(c.coefficient(3).is_zero());
    CHECK(c.coefficient(4).is_zero());
}

TEST_CASE("Newton-identity oracle on random integer roots") {
    std::mt19937_64 rng(38);
    for (int t = 0; t < 50; ++t) {
        size_t len = rng() % 7; // up to 6 roots
        std::vector<long long> roots;
        for (size_t i = 0; i < len; ++i)
            roots.push_back(static_cast<long long>(rng() % 7) - 3);
        int n = static_cast<int>(len) + 2;
        CharData data = CharData::from_roots(roots, n);
        GradedSeries c = chern_general(data, n);
        auto e = testing::elementary_symmetric(roots);
        for (int k = 0; k <= n; ++k) {
            Rational expect = k < static_cast<int>(e.size()) ? Rational(e[size_t(k)]) : Rational(0);
            CHECK(c.coefficient(k) == ExtElem::scalar(data.basis(), expect));
        }
    }
}

TEST_CASE("generalized recursion with factorial weights") {
    // i c_i = sum_k (-1)^{k-1} k! ch_k c_{i-k}, checked against the exponential
    std::mt19937_64 rng(39);
    std::vector<long long> roots{2, -1, 3, 1};
    CharData data = CharData::from_roots(roots, 6);
    GradedSeries c = chern_general(data, 6);
    for (int i = 1; i <= 6; ++i) {
        ExtElem acc = ExtElem::zero(data.basis());
        for (int k = 1; k <= i; ++k) {
            Rational w(factorial(unsigned(k)));
            if (k % 2 == 0)
                w = -w;
            acc += data.chern_char(k) * c.coefficient(i - k) * w;
        }
        CHECK(c.coefficient(i) == acc * Rational(1, i));
    }
}

TEST_CASE("twisted symmetric power total classes") {
    ChernPoly c0 = ChernPoly::variable(0);
    ChernPoly c1 = ChernPoly::variable(1);
    ChernPoly c2 = ChernPoly::variable(2);

    SUBCASE("j = 0 is the twisting line bundle") {
        CHECK(twisted_sym_power_chern(0) == ChernPoly::constant(1) + c0);
    }
    SUBCASE("j = 1 has roots t1+c0, t2+c0") {
        ChernPoly expect = ChernPoly::constant(1) + (c1 + c0 * Rational(2)) +
                           (c2 + c0 * c1 + c0 * c0);
        CHECK(twisted_sym_power_chern(1) == expect);
    }
    SUBCASE("c2 of (S^0 + S^1) twisted matches the published polynomial") {
        ChernPoly total = twisted_sym_power_chern(0) * twisted_sym_power_chern(1);
        ChernPoly expect = c0 * c0 * Rational(3) + c0 * c1 * Rational(2) + c2;
        CHECK(total.weight_part(2) == expect);
    }
}

TEST_CASE("Whitney property against root concatenation") {
    for (long long m = 1; m <= 5; ++m) {
        ChernPoly whitney = ChernPoly::constant(1);
        for (long long j = 0; j < m; ++j)
            whitney = whitney * twisted_sym_power_chern(j);
        CHECK(whitney == chern_from_roots(testing::sym_power_roots(m)));
    }
}
