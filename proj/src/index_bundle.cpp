#include "swfam/index_bundle.hpp"

#include "swfam/errors.hpp"

namespace swfam {

IndexCharacter index_character(const ManifoldModel& m, const SpincClass& l) {
    if (static_cast<int>(l.components.size()) != m.h2_rank)
        throw ValidationError("index_character: Spin^c vector length does not match h2_rank");
    BasisPtr torus = GeneratorBasis::torus(m.b1);
    ExtElem ch1 = ExtElem::zero(torus);
    for (int i = 0; i < m.b1; ++i)
        for (int j = i + 1; j < m.b1; ++j) {
            Rational q_half(0);
            for (int a = 0; a < m.h2_rank; ++a)
                q_half += Rational(l.components[size_t(a)] * m.triple_at(i, j, a), 2);
            Mask mono = (Mask(1) << i) | (Mask(1) << j);
            ch1 -= ExtElem::monomial(torus, mono, q_half);
        }

    ExtElem ch2 = ExtElem::zero(torus);
    for (int i = 0; i < m.b1; ++i)
        for (int j = i + 1; j < m.b1; ++j)
            for (int k = j + 1; k < m.b1; ++k)
                for (int t = k + 1; t < m.b1; ++t)
                    if (long long eps = m.quadruple(i, j, k, t)) {
                        Mask mono = (Mask(1) << i) | (Mask(1) << j) | (Mask(1) << k) |
                                    (Mask(1) << t);
                        ch2 += ExtElem::monomial(torus, mono, Rational(eps));
                    }

    Rational dirac(Int(m.pairing(l, l) - m.signature), Int(8));
    return IndexCharacter{std::move(ch1), std::move(ch2), std::move(dirac)};
}

IndexCharacter family_index_oracle(const ManifoldModel& m, const SpincClass& l) {
    if (!(m == preset("t4")))
        throw ValidationError("family_index_oracle: fibre must be the t4 preset torus");
    if (l.components.size() != 6)
        throw ValidationError("family_index_oracle: Spin^c vector must have 6 components");

    const int b1 = 4;
    BasisPtr big = GeneratorBasis::bigraded(b1);
    auto x = [&](int i) { return ExtElem::generator(big, i); };
    auto y = [&](int i) { return ExtElem::generator(big, b1 + i); };

    // H^2(T^4) basis in lexicographic wedge order, matching the preset
    std::vector<ExtElem> e;
    for (int i = 0; i < b1; ++i)
        for (int j = i + 1; j < b1; ++j)
            e.push_back(x(i) * x(j));

    ExtElem half_c1 = ExtElem::zero(big);
    for (size_t a = 0; a < 6; ++a)
        half_c1 += e[a] * Rational(l.components[a], 2);

    ExtElem omega = ExtElem::zero(big);
    for (int i = 0; i < b1; ++i)
        omega += x(i) * y(i);

    // A(T^4) = 1, so the index character is the fibre integral of
    // exp(c1(L)/2) exp(Omega)
    ExtElem total = half_c1.exp_nilpotent() * omega.exp_nilpotent();
    std::vector<std::string> fibre;
    for (int i = 0; i < b1; ++i)
        fibre.push_back(big->name(i));
    ExtElem integrated = fibre_integrate(total, fibre);

    IndexCharacter out{integrated.graded_part(2), integrated.graded_part(4),
                       integrated.graded_part(0).scalar_part()};
    // degree-4 A-genus term -p1/24 would add -sigma/8; it vanishes on T^4
    return out;
}

} // namespace swfam
