#include "swfam/wall_crossing.hpp"

#include <algorithm>

#include "swfam/errors.hpp"

namespace swfam {

namespace {

// sum_{i+2j=n} (-1)^i ch1^i ch2^j / (i! j!)
ExtElem segre_sum(const ExtElem& ch1, const ExtElem& ch2, int n) {
    ExtElem acc = ExtElem::zero(ch1.basis());
    for (int j = 0; 2 * j <= n; ++j) {
        int i = n - 2 * j;
        ExtElem term = ExtElem::unit(ch1.basis());
        for (int p = 0; p < i; ++p)
            term = term * ch1;
        for (int p = 0; p < j; ++p)
            term = term * ch2;
        Rational coeff(Int(1), factorial(static_cast<unsigned>(i)) *
                                   factorial(static_cast<unsigned>(j)));
        if (i & 1)
            coeff = -coeff;
        acc += term * coeff;
    }
    return acc;
}

} // namespace

WcnValue wcn_pure(const ManifoldModel& m, const SpincClass& l) {
    return wcn_mixed(m, l, {});
}

WcnValue wcn_mixed(const ManifoldModel& m, const SpincClass& l,
                   const std::vector<OneCycle>& zetas) {
    const int q = static_cast<int>(zetas.size());
    if ((m.b1 - q) % 2 != 0 || m.b1 - q < 0)
        return WcnValue{Rational(0)};

    IndexCharacter ic = index_character(m, l);
    ExtElem acc = segre_sum(ic.ch1, ic.ch2, (m.b1 - q) / 2);
    for (const OneCycle& z : zetas) {
        if (static_cast<int>(z.components.size()) != m.b1)
            throw ValidationError("wcn_mixed: zeta vector length does not match b1");
        ExtElem mu = ExtElem::zero(ic.ch1.basis());
        for (int k = 0; k < m.b1; ++k)
            mu += ExtElem::generator(ic.ch1.basis(), k) * Rational(z.components[size_t(k)]);
        acc = acc * mu;
    }
    return WcnValue{top_coefficient(acc)};
}

WcnValue sw_from_winding(const WcnValue& wcn_consecutive, long long chamber) {
    return WcnValue{wcn_consecutive.value * Rational(chamber)};
}

MultiSeries::MultiSeries(std::vector<std::string> variables, std::vector<int> truncation)
    : vars_(std::move(variables)), trunc_(std::move(truncation)) {
    if (vars_.size() != trunc_.size())
        throw AlgebraError("MultiSeries: one truncation order per variable required");
    for (int t : trunc_)
        if (t < 0)
            throw AlgebraError("MultiSeries: negative truncation order");
}

Rational MultiSeries::coefficient(const std::vector<int>& exponents) const {
    auto it = coeff_.find(exponents);
    return it == coeff_.end() ? Rational(0) : it->second;
}

void MultiSeries::add_term(const std::vector<int>& exponents, const Rational& c) {
    if (exponents.size() != vars_.size())
        throw AlgebraError("MultiSeries: exponent vector has wrong length");
    for (size_t v = 0; v < exponents.size(); ++v) {
        if (exponents[v] < 0)
            throw AlgebraError("MultiSeries: negative exponent");
        if (exponents[v] > trunc_[v])
            return; // beyond truncation
    }
    if (c.is_zero())
        return;
    auto [it, fresh] = coeff_.try_emplace(exponents, c);
    if (!fresh) {
        it->second += c;
        if (it->second.is_zero())
            coeff_.erase(it);
    }
}

MultiSeries operator*(const MultiSeries& a, const MultiSeries& b) {
    if (a.vars_ != b.vars_)
        throw AlgebraError("MultiSeries: variable sets differ");
    std::vector<int> trunc(a.vars_.size());
    for (size_t v = 0; v < trunc.size(); ++v)
        trunc[v] = std::min(a.trunc_[v], b.trunc_[v]);
    MultiSeries r(a.vars_, trunc);
    std::vector<int> k(a.vars_.size());
    for (const auto& [ka, ca] : a.coeff_)
        for (const auto& [kb, cb] : b.coeff_) {
            for (size_t v = 0; v < k.size(); ++v)
                k[v] = ka[v] + kb[v];
            r.add_term(k, ca * cb);
        }
    return r;
}

MultiSeries operator+(MultiSeries a, const MultiSeries& b) {
    if (a.vars_ != b.vars_ || a.trunc_ != b.trunc_)
        throw AlgebraError("MultiSeries: shapes differ");
    for (const auto& [k, c] : b.coeff_)
        a.add_term(k, c);
    return a;
}

bool operator==(const MultiSeries& a, const MultiSeries& b) {
    return a.vars_ == b.vars_ && a.trunc_ == b.trunc_ && a.coeff_ == b.coeff_;
}

MultiSeries MultiSeries::geometric(const std::vector<std::string>& variables,
                                   const std::vector<int>& truncation, int var, int power) {
    MultiSeries r(variables, truncation);
    std::vector<int> k(variables.size(), 0);
    // 1/(1-t)^p = sum_d C(d+p-1, p-1) t^d
    for (int d = 0; d <= truncation[size_t(var)]; ++d) {
        k[size_t(var)] = d;
        r.add_term(k, Rational(binomial(static_cast<unsigned>(d + power - 1),
                                        static_cast<unsigned>(power - 1))));
    }
    return r;
}

std::string MultiSeries::csv() const {
    std::string out;
    for (size_t v = 0; v < vars_.size(); ++v)
        out += vars_[v] + ",";
    out += "value\n";
    std::vector<int> k(vars_.size(), 0);
    while (true) {
        for (size_t v = 0; v < k.size(); ++v)
            out += std::to_string(k[v]) + ",";
        out += coefficient(k).str() + "\n";
        // lexicographic increment, rightmost fastest
        size_t v = k.size();
        while (v-- > 0) {
            if (k[v] < trunc_[v]) {
                ++k[v];
                std::fill(k.begin() + static_cast<long>(v) + 1, k.end(), 0);
                break;
            }
            if (v == 0)
                return out;
        }
    }
}

namespace {

const std::vector<std::string> kSeriesVars{"t1", "t2", "t3", "t4"};

} // namespace

MultiSeries kodaira_series_q1(const OneCycle& zeta, int order) {
    ManifoldModel kod = preset("kodaira");
    if (zeta.components.size() != 3)
        throw ValidationError("kodaira_series_q1: zeta must have 3 components");
    std::vector<int> trunc(4, order);

    // route (a): term-by-term wall crossing numbers
    MultiSeries by_terms(kSeriesVars, trunc);
    std::vector<int> k(4, 0);
    while (true) {
        SpincClass l{{2 * k[0], 2 * k[1], 2 * k[2], 2 * k[3]}};
        by_terms.add_term(k, wcn_mixed(kod, l, {zeta}).value);
        size_t v = k.size();
        bool done = true;
        while (v-- > 0) {
            if (k[v] < order) {
                ++k[v];
                std::fill(k.begin() + static_cast<long>(v) + 1, k.end(), 0);
                done = false;
                break;
            }
        }
        if (done)
            break;
    }

    // route (b): expansion of
    // -(n2 t3 + n3 t4 - (n2+n3) t3 t4) / ((1-t1)(1-t2)(1-t3)^2(1-t4)^2),
    // with zeta* = n1 dt + n2 dy + n3 dx read off the (dx, dy, dt) basis
    Rational n2(zeta.components[1]), n3(zeta.components[0]);
    MultiSeries numerator(kSeriesVars, trunc);
    numerator.add_term({0, 0, 1, 0}, -n2);
    numerator.add_term({0, 0, 0, 1}, -n3);
    numerator.add_term({0, 0, 1, 1}, n2 + n3);
    MultiSeries closed = numerator * MultiSeries::geometric(kSeriesVars, trunc, 0, 1) *
                         MultiSeries::geometric(kSeriesVars, trunc, 1, 1) *
                         MultiSeries::geometric(kSeriesVars, trunc, 2, 2) *
                         MultiSeries::geometric(kSeriesVars, trunc, 3, 2);

    if (!(by_terms == closed))
        throw CrossCheckError(
            "kodaira_series_q1: term-by-term series disagrees with the closed rational form");
    return by_terms;
}

MultiSeries kodaira_series_q3(const OneCycle& z1, const OneCycle& z2, const OneCycle& z3,
                              int order) {
    for (const OneCycle* z : {&z1, &z2, &z3})
        if (z->components.size() != 3)
            throw ValidationError("kodaira_series_q3: zetas must have 3 components");
    // phi(zeta1* ^ zeta2* ^ zeta3*): determinant of the coordinate rows in the
    // (dx, dy, dt) basis; phi(dx ^ dy ^ dt) = 1
    const auto& a = z1.components;
    const auto& b = z2.components;
    const auto& c = z3.components;
    long long det = a[0] * (b[1] * c[2] - b[2] * c[1]) - a[1] * (b[0] * c[2] - b[2] * c[0]) +
                    a[2] * (b[0] * c[1] - b[1] * c[0]);

    std::vector<int> trunc(4, order);
    MultiSeries unit(kSeriesVars, trunc);
    unit.add_term({0, 0, 0, 0}, Rational(det));
    for (int v = 0; v < 4; ++v)
        unit = unit * MultiSeries::geometric(kSeriesVars, trunc, v, 1);
    return unit;
}

} // namespace swfam
