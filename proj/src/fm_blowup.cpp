#include "swfam/fm_blowup.hpp"

#include "swfam/errors.hpp"

namespace swfam {

namespace {

void require_spec_shape(const FMSpec& spec) {
    if (spec.n < 0)
        throw ValidationError("FMSpec: n must be non-negative");
    if (static_cast<int>(spec.m.size()) != spec.n)
        throw ValidationError("FMSpec: need one multiplicity per point");
}

} // namespace

FMSpec fm_normalize(FMSpec spec) {
    require_spec_shape(spec);
    for (long long& mi : spec.m)
        if (2 * mi + 1 < 0)
            mi = -mi - 1;
    return spec;
}

std::vector<FMSummand> fm_summands(const FMSpec& raw) {
    FMSpec spec = fm_normalize(raw);
    std::vector<FMSummand> out;
    for (int i = 1; i <= spec.n; ++i) {
        std::vector<long long> twist(spec.m.begin(), spec.m.begin() + (i - 1));
        for (long long j = 0; j < spec.m[size_t(i - 1)]; ++j)
            out.push_back(FMSummand{i, j, j + 1, twist});
    }
    return out;
}

namespace {

// c_2 of ⊕_{j=0}^{m-1} S^j(TM) ⊗ C0 as a weight-2 polynomial in (c0, c1, c2)
ChernPoly fm_bundle_c2(long long m) {
    ChernPoly total = ChernPoly::constant(1);
    for (long long j = 0; j < m; ++j)
        total = total * twisted_sym_power_chern(j);
    return total.weight_part(2);
}

Rational evaluate_weight2(const ChernPoly& p, const FMGeometry& g) {
    Rational acc(0);
    for (const auto& [key, c] : p.terms()) {
        long long pairing;
        if (key == ChernPoly::Key{2, 0, 0})
            pairing = g.c0_sq;
        else if (key == ChernPoly::Key{1, 1, 0})
            pairing = g.c0_k;
        else if (key == ChernPoly::Key{0, 2, 0})
            pairing = g.c1_sq;
        else if (key == ChernPoly::Key{0, 0, 1})
            pairing = g.c2;
        else
            throw AlgebraError("evaluate_weight2: unexpected monomial of weight 2");
        acc += c * Rational(pairing);
    }
    return acc;
}

} // namespace

WcnValue fm_wcn_n1(const FMSpec& raw, const WcnValue& delta0) {
    FMSpec spec = fm_normalize(raw);
    if (spec.n != 1)
        throw ValidationError("fm_wcn_n1: evaluation is provided for n = 1 only");
    return WcnValue{evaluate_weight2(fm_bundle_c2(spec.m[0]), spec.geometry) * delta0.value};
}

WcnValue fm_wcn_n1_mixed(const FMSpec& raw, const WcnValue& delta0, int eta_degree,
                         long long eta_c0, long long eta_c1) {
    FMSpec spec = fm_normalize(raw);
    if (spec.n != 1)
        throw ValidationError("fm_wcn_n1_mixed: evaluation is provided for n = 1 only");
    switch (eta_degree) {
    case 0:
        return fm_wcn_n1(spec, delta0);
    case 4:
        // the fundamental class pairs with c_0(bundle) = 1
        return delta0;
    case 2: {
        ChernPoly total = ChernPoly::constant(1);
        for (long long j = 0; j < spec.m[0]; ++j)
            total = total * twisted_sym_power_chern(j);
        ChernPoly c1_part = total.weight_part(1);
        Rational acc(0);
        for (const auto& [key, c] : c1_part.terms()) {
            if (key == ChernPoly::Key{1, 0, 0})
                acc += c * Rational(eta_c0);
            else if (key == ChernPoly::Key{0, 1, 0})
                acc += c * Rational(eta_c1);
            else
                throw AlgebraError("fm_wcn_n1_mixed: unexpected monomial of weight 1");
        }
        return WcnValue{acc * delta0.value};
    }
    default:
        throw ValidationError("fm_wcn_n1_mixed: eta degree must be 0, 2 or 4");
    }
}

std::pair<WcnValue, WcnValue> fm_t4_nodal(long long c0_sq) {
    // literal published value: (C0^2 + 1)/2 * 3 C0^2
    Rational literal = Rational(c0_sq + 1, 2) * Rational(3 * c0_sq);

    // composed route: delta0 for L0 = 2 C0 on the torus is (2C0)^2/8 + 1,
    // then the m = 2 factor with c1(M) = c2(M) = 0
    WcnValue delta0{Rational(4 * c0_sq, 8) + Rational(1)};
    FMSpec spec{1, {2}, FMGeometry{c0_sq, 0, 0, 0}};
    WcnValue composed = fm_wcn_n1(spec, delta0);

    return {WcnValue{literal}, composed};
}

Rational fm_expected_dimension(const ManifoldModel& m, long long l0_sq, const FMSpec& spec,
                               std::optional<long long> dim_b_extra) {
    require_spec_shape(spec);
    long long extra = dim_b_extra.value_or(static_cast<long long>(m.bplus) - 1);
    Rational acc(0);
    for (long long mi : spec.m) {
        long long coeff = 2 * mi + 1;
        acc -= Rational(coeff * coeff);
    }
    acc += Rational(l0_sq);
    acc -= Rational(2 * m.euler + 3 * m.signature);
    acc += Rational(spec.n);
    return acc * Rational(1, 4) + Rational(4 * spec.n) + Rational(extra);
}

} // namespace swfam
