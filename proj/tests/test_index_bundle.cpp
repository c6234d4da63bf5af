#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "swfam/index_bundle.hpp"

using namespace swfam;

namespace {

SpincClass random_spinc(std::mt19937_64& rng, int len, long long bound) {
    SpincClass l;
    for (int a = 0; a < len; ++a)
        l.components.push_back(static_cast<long long>(rng() % (2 * bound + 1)) - bound);
    return l;
}

} // namespace

TEST_CASE("trivial class on t4: ch1 = 0, ch2 has top coefficient 1") {
    ManifoldModel t4 = preset("t4");
    SpincClass zero{std::vector<long long>(6, 0)};
    IndexCharacter ic = index_character(t4, zero);
    CHECK(ic.ch1.is_zero());
    CHECK(top_coefficient(ic.ch2) == Rational(1));
    CHECK(ic.dirac_index == Rational(0));
}

TEST_CASE("b1 = 0 has no torus classes") {
    ManifoldModel k3 = preset("k3");
    SpincClass zero{std::vector<long long>(22, 0)};
    IndexCharacter ic = index_character(k3, zero);
    CHECK(ic.ch1.is_zero());
    CHECK(ic.ch2.is_zero());
    CHECK(ic.dirac_index == Rational(2)); // -sigma/8 = 2
}

TEST_CASE("kodaira character against the hand-computed triples") {
    ManifoldModel kod = preset("kodaira");
    SpincClass l{{0, 0, 2, 4}};
    IndexCharacter ic = index_character(kod, l);
    // ch1 = -(1/2)(m3 y1y3 - m4 y2y3) = -y1y3 + 2 y2y3
    BasisPtr torus = GeneratorBasis::torus(3);
    ExtElem expect = ExtElem::monomial(torus, 0b101, -1) + ExtElem::monomial(torus, 0b110, 2);
    CHECK(ic.ch1 == expect);
    CHECK(ic.ch2.is_zero());
}

TEST_CASE("ch1 is linear in the Spin^c class") {
    ManifoldModel t4 = preset("t4");
    std::mt19937_64 rng(51);
    for (int t = 0; t < 20; ++t) {
        SpincClass a = random_spinc(rng, 6, 5), b = random_spinc(rng, 6, 5);
        SpincClass combo;
        for (int i = 0; i < 6; ++i)
            combo.components.push_back(3 * a.components[size_t(i)] - 2 * b.components[size_t(i)]);
        ExtElem lhs = index_character(t4, combo).ch1;
        ExtElem rhs = index_character(t4, a).ch1 * Rational(3) -
                      index_character(t4, b).ch1 * Rational(2);
        CHECK(lhs == rhs);
    }
}

TEST_CASE("ch2 does not depend on the Spin^c class") {
    ManifoldModel t4 = preset("t4");
    std::mt19937_64 rng(52);
    SpincClass zero{std::vector<long long>(6, 0)};
    ExtElem ch2 = index_character(t4, zero).ch2;
    for (int t = 0; t < 10; ++t)
        CHECK(index_character(t4, random_spinc(rng, 6, 9)).ch2 == ch2);
}

TEST_CASE("family index oracle") {
    ManifoldModel t4 = preset("t4");

    SUBCASE("trivial class: ch2 = 1 on the top cell") {
        SpincClass zero{std::vector<long long>(6, 0)};
        IndexCharacter ic = family_index_oracle(t4, zero);
        CHECK(ic.ch1.is_zero());
        CHECK(top_coefficient(ic.ch2) == Rational(1));
    }
    SUBCASE("c1^2 = 8 gives ch1^2 top coefficient 2") {
        SpincClass l{{2, 0, 0, 0, 0, 2}};
        CHECK(t4.pairing(l, l) == 8);
        IndexCharacter ic = family_index_oracle(t4, l);
        CHECK(top_coefficient(ic.ch1 * ic.ch1) == Rational(2));
        CHECK(ic.dirac_index == Rational(1)); // c1^2/8
    }
    SUBCASE("non-torus fibres are rejected") {
        ManifoldModel k3 = preset("k3");
        SpincClass zero{std::vector<long long>(22, 0)};
        CHECK_THROWS_AS(family_index_oracle(k3, zero), ValidationError);
    }
}

TEST_CASE("oracle equivalence: 20 random classes match the shortcut exactly") {
    ManifoldModel t4 = preset("t4");
    std::mt19937_64 rng(53);
    for (int t = 0; t < 20; ++t) {
        SpincClass l = random_spinc(rng, 6, 9);
        IndexCharacter fast = index_character(t4, l);
        IndexCharacter slow = family_index_oracle(t4, l);
        CHECK(fast.ch1 == slow.ch1);
        CHECK(fast.ch2 == slow.ch2);
        CHECK(fast.dirac_index == slow.dirac_index);
    }
}

TEST_CASE("dirac index agrees with the expected dimension identity") {
    std::mt19937_64 rng(54);
    for (const char* name : {"t4", "k3", "kodaira"}) {
        ManifoldModel m = preset(name);
        for (int t = 0; t < 10; ++t) {
            SpincClass l;
            for (int a = 0; a < m.h2_rank; ++a)
                l.components.push_back(2 * (static_cast<long long>(rng() % 5) - 2));
            Rational ind = index_character(m, l).dirac_index;
            long long d = expected_dimension(m, l, m.bplus - 1);
            CHECK(Rational(d) == Rational(m.bplus - 1) + Rational(2) * ind -
                                     Rational(1 - m.b1 + m.bplus));
        }
    }
}
