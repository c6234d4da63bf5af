// Acceptance suite: runs every formula-level reproduction criterion at exact
// (zero-tolerance) comparison and prints one pass/fail line per criterion.

#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <vector>

#include "oracles.hpp"
#include "swfam/char_calculus.hpp"
#include "swfam/fm_blowup.hpp"
#include "swfam/index_bundle.hpp"
#include "swfam/selftest.hpp"
#include "swfam/wall_crossing.hpp"

using namespace swfam;

namespace {

int failures = 0;

void criterion(int number, const std::string& label, const std::function<void()>& body) {
    try {
        body();
        std::cout << "PASS  criterion " << number << ": " << label << "\n";
    } catch (const std::exception& e) {
        ++failures;
        std::cout << "FAIL  criterion " << number << ": " << label << " — " << e.what() << "\n";
    }
}

void require(bool ok, const std::string& what) {
    if (!ok)
        throw std::runtime_error(what);
}

long long draw(std::mt19937_64& rng, long long lo, long long hi) {
    return lo + static_cast<long long>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

ExtElem random_degree(std::mt19937_64& rng, const BasisPtr& basis, int degree) {
    ExtElem e = ExtElem::zero(basis);
    int n = basis->size();
    std::vector<int> idx;
    std::function<void(int, Mask)> rec = [&](int start, Mask m) {
        if (static_cast<int>(idx.size()) == degree) {
            e += ExtElem::monomial(basis, m, Rational(draw(rng, -4, 4)));
            return;
        }
        for (int i = start; i < n; ++i) {
            idx.push_back(i);
            rec(i + 1, m | (Mask(1) << i));
            idx.pop_back();
        }
    };
    rec(0, 0);
    return e;
}

} // namespace

int main() {
    criterion(1, "t4 pure numbers: wcn_pure = c1^2/8 + 1 over a 25-class grid", [] {
        ManifoldModel t4 = preset("t4");
        std::mt19937_64 rng(101);
        for (int done = 0; done < 25; ++done) {
            SpincClass l;
            for (int a = 0; a < 6; ++a)
                l.components.push_back(draw(rng, -4, 4));
            long long c1sq = t4.pairing(l, l);
            require(c1sq % 2 == 0, "odd self-intersection on an even form");
            require(wcn_pure(t4, l).value == Rational(c1sq, 8) + Rational(1),
                    "wall crossing number differs from c1^2/8 + 1");
        }
    });

    criterion(2, "b1 = 0 normalization: wcn_pure on k3 is +1", [] {
        ManifoldModel k3 = preset("k3");
        std::mt19937_64 rng(102);
        for (int t = 0; t < 10; ++t) {
            SpincClass l;
            for (int a = 0; a < 22; ++a)
                l.components.push_back(draw(rng, -4, 4));
            require(wcn_pure(k3, l).value == Rational(1), "k3 pure number is not +1");
        }
    });

    criterion(3, "Kodaira closed form: wcn_mixed = -(m3 n2 + m4 n3)/2 on the grid", [] {
        ManifoldModel kod = preset("kodaira");
        for (long long m3 = -2; m3 <= 2; m3 += 2)
            for (long long m4 = -2; m4 <= 2; m4 += 2)
                for (long long n2 = -2; n2 <= 2; ++n2)
                    for (long long n3 = -2; n3 <= 2; ++n3) {
                        SpincClass l{{0, 0, m3, m4}};
                        OneCycle zeta{{n3, n2, 0}};
                        require(wcn_mixed(kod, l, {zeta}).value ==
                                    Rational(-(m3 * n2 + m4 * n3), 2),
                                "mixed number differs from the closed form");
                    }
    });

    criterion(4, "generating series: 1296 coefficients match the rational function", [] {
        // the operation itself cross-checks term-by-term sums against the
        // expansion and throws on any mismatch
        for (long long n2 : {1LL, -2LL})
            for (long long n3 : {0LL, 3LL}) {
                MultiSeries s = kodaira_series_q1(OneCycle{{n3, n2, 0}}, 5);
                require(s.coefficient({0, 0, 1, 0}) == Rational(-n2), "t3 coefficient");
                require(s.coefficient({0, 0, 0, 1}) == Rational(-n3), "t4 coefficient");
            }
    });

    criterion(5, "calculus identities on 100 random critical characters", [] {
        std::mt19937_64 rng(105);
        for (int t = 0; t < 100; ++t) {
            int b1 = 2 * static_cast<int>(draw(rng, 0, 4));
            BasisPtr basis = GeneratorBasis::torus(b1);
            CharData data = CharData::critical(random_degree(rng, basis, 2),
                                               random_degree(rng, basis, 4));
            int n = b1 == 0 ? 4 : b1;
            GradedSeries c_rec = chern_recursion(data, n);
            GradedSeries c = chern_closed_form(data, n);
            GradedSeries s = segre_closed_form(data, n);
            require(c_rec == c, "recursion != closed form");
            require(c == series_inverse(s), "closed form != inverse segre");
            require(c * s == GradedSeries::one(basis, n), "C(t) S(t) != 1");
        }
    });

    criterion(6, "Newton-identity oracle on 50 random root vectors", [] {
        std::mt19937_64 rng(106);
        for (int t = 0; t < 50; ++t) {
            std::vector<long long> roots;
            int len = static_cast<int>(draw(rng, 0, 6));
            for (int i = 0; i < len; ++i)
                roots.push_back(draw(rng, -3, 3));
            int n = len + 2;
            GradedSeries c = chern_general(CharData::from_roots(roots, n), n);
            auto e = testing::elementary_symmetric(roots);
            for (int k = 0; k <= n; ++k) {
                Rational expect =
                    k < static_cast<int>(e.size()) ? Rational(e[size_t(k)]) : Rational(0);
                require(c.coefficient(k).scalar_part() == expect &&
                            c.coefficient(k).max_degree() == 0,
                        "elementary symmetric polynomial mismatch");
            }
        }
    });

    criterion(7, "family-index oracle == cup-product shortcut on 20 seeded classes", [] {
        std::ostringstream sink;
        run_oracle_check(20, 107, sink);
    });

    criterion(8, "FM m=2 polynomial has coefficients (3, 2, 0, 1)", [] {
        WcnValue one{Rational(1)};
        require(fm_wcn_n1(FMSpec{1, {2}, {1, 0, 0, 0}}, one).value == Rational(3), "C0^2");
        require(fm_wcn_n1(FMSpec{1, {2}, {0, 1, 0, 0}}, one).value == Rational(2), "C0.c1");
        require(fm_wcn_n1(FMSpec{1, {2}, {0, 0, 1, 0}}, one).value == Rational(0), "c1^2");
        require(fm_wcn_n1(FMSpec{1, {2}, {0, 0, 0, 1}}, one).value == Rational(1), "c2");
    });

    criterion(9, "FM Z2 symmetry for m in 1..5 and rank vanishing at m=1", [] {
        WcnValue one{Rational(1)};
        FMGeometry g{3, -2, 5, 7};
        for (long long m = 1; m <= 5; ++m)
            require(fm_wcn_n1(FMSpec{1, {m}, g}, one) ==
                        fm_wcn_n1(FMSpec{1, {-m - 1}, g}, one),
                    "negated coefficient changes the number at m=" + std::to_string(m));
        require(fm_wcn_n1(FMSpec{1, {1}, g}, one).value == Rational(0), "m=1 is not zero");
    });

    criterion(10, "nodal-count dual report: literal 9 vs composed 12 at C0^2 = 2", [] {
        auto [literal, composed] = fm_t4_nodal(2);
        require(literal.value == Rational(9), "literal route");
        require(composed.value == Rational(12), "composed route");
        require(!(literal == composed), "the documented discrepancy must persist");
    });

    criterion(11, "dimension consistency on all presets and the n=0 reduction", [] {
        std::mt19937_64 rng(111);
        for (const char* name : {"t4", "k3", "kodaira"}) {
            ManifoldModel m = preset(name);
            for (int t = 0; t < 10; ++t) {
                SpincClass l;
                for (int a = 0; a < m.h2_rank; ++a)
                    l.components.push_back(2 * draw(rng, -3, 3));
                long long dim_b = m.bplus - 1;
                Rational ind(Int(m.pairing(l, l) - m.signature), Int(8));
                require(Rational(expected_dimension(m, l, dim_b)) ==
                            Rational(dim_b) + Rational(2) * ind - Rational(1 - m.b1 + m.bplus),
                        std::string("index identity fails on ") + name);
                FMSpec none{0, {}, {}};
                require(fm_expected_dimension(m, m.pairing(l, l), none) ==
                            Rational(expected_dimension(m, l, dim_b)),
                        std::string("n=0 reduction fails on ") + name);
            }
        }
    });

    if (failures == 0) {
        std::cout << "acceptance: all criteria passed\n";
        return 0;
    }
    std::cout << "acceptance: " << failures << " criteria FAILED\n";
    return 1;
}
