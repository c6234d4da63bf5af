#include "swfam/char_calculus.hpp"

#include <algorithm>

#include "swfam/errors.hpp"

namespace swfam {

CharData::CharData(BasisPtr basis, std::vector<ExtElem> ch)
    : basis_(std::move(basis)), ch_(std::move(ch)) {
    for (size_t k = 0; k < ch_.size(); ++k) {
        if (!(*ch_[k].basis() == *basis_))
            throw AlgebraError("CharData: component basis mismatch");
        if (basis_->size() > 0 && !ch_[k].is_homogeneous_of_degree(2 * (static_cast<int>(k) + 1)))
            throw ValidationError("CharData: ch_" + std::to_string(k + 1) +
                                  " is not pure of degree " + std::to_string(2 * (k + 1)));
    }
}

CharData CharData::critical(ExtElem ch1, ExtElem ch2) {
    BasisPtr basis = ch1.basis();
    std::vector<ExtElem> ch;
    ch.push_back(std::move(ch1));
    ch.push_back(std::move(ch2));
    return CharData(std::move(basis), std::move(ch));
}

CharData CharData::from_components(BasisPtr basis, std::vector<ExtElem> ch) {
    return CharData(std::move(basis), std::move(ch));
}

CharData CharData::from_roots(const std::vector<long long>& roots, int up_to) {
    BasisPtr basis = GeneratorBasis::named({});
    if (up_to < 0)
        up_to = static_cast<int>(roots.size());
    std::vector<ExtElem> ch;
    for (int k = 1; k <= up_to; ++k) {
        Int pk = 0;
        for (long long r : roots) {
            Int p = 1;
            for (int e = 0; e < k; ++e)
                p *= r;
            pk += p;
        }
        ch.push_back(ExtElem::scalar(basis, Rational(pk, factorial(static_cast<unsigned>(k)))));
    }
    return CharData(std::move(basis), std::move(ch));
}

ExtElem CharData::chern_char(int i) const {
    if (i < 1)
        throw AlgebraError("CharData::chern_char: index must be >= 1");
    if (i > static_cast<int>(ch_.size()))
        return ExtElem::zero(basis_);
    return ch_[static_cast<size_t>(i - 1)];
}

bool CharData::is_critical() const {
    for (size_t k = 2; k < ch_.size(); ++k)
        if (!ch_[k].is_zero())
            return false;
    return true;
}

namespace {

void require_critical(const CharData& data, const char* op) {
    if (!data.is_critical())
        throw ValidationError(std::string(op) +
                              ": noncritical character (ch_i != 0 for some i > 2); "
                              "use chern_general");
}

} // namespace

GradedSeries chern_recursion(const CharData& data, int n) {
    require_critical(data, "chern_recursion");
    GradedSeries c(data.basis(), n);
    c.set_coefficient(0, ExtElem::unit(data.basis()));
    ExtElem ch1 = data.chern_char(1), ch2 = data.chern_char(2);
    for (int i = 1; i <= n; ++i) {
        ExtElem acc = c.coefficient(i - 1) * ch1;
        if (i >= 2)
            acc -= c.coefficient(i - 2) * ch2 * Rational(2);
        c.set_coefficient(i, acc * Rational(1, i));
    }
    return c;
}

namespace {

GradedSeries critical_exponent(const CharData& data, int n, bool segre) {
    ExtElem ch1 = data.chern_char(1), ch2 = data.chern_char(2);
    GradedSeries arg(data.basis(), n);
    if (n >= 1)
        arg.set_coefficient(1, segre ? -ch1 : ch1);
    if (n >= 2)
        arg.set_coefficient(2, segre ? ch2 : -ch2);
    return series_exp(arg);
}

} // namespace

GradedSeries chern_closed_form(const CharData& data, int n) {
    require_critical(data, "chern_closed_form");
    return critical_exponent(data, n, /*segre=*/false);
}

GradedSeries segre_closed_form(const CharData& data, int n) {
    require_critical(data, "segre_closed_form");
    return critical_exponent(data, n, /*segre=*/true);
}

GradedSeries chern_general(const CharData& data, int n) {
    GradedSeries arg(data.basis(), n);
    Rational sign(1);
    for (int i = 1; i <= n; ++i) {
        arg.set_coefficient(
            i, data.chern_char(i) * (sign * Rational(factorial(static_cast<unsigned>(i - 1)))));
        sign = -sign;
    }
    return series_exp(arg);
}

ChernPoly ChernPoly::constant(Rational c) {
    ChernPoly p;
    p.add_term({0, 0, 0}, c);
    return p;
}

ChernPoly ChernPoly::variable(int which) {
    ChernPoly p;
    Key k{0, 0, 0};
    k[static_cast<size_t>(which)] = 1;
    p.add_term(k, 1);
    return p;
}

Rational ChernPoly::coefficient(const Key& k) const {
    auto it = terms_.find(k);
    return it == terms_.end() ? Rational(0) : it->second;
}

void ChernPoly::add_term(const Key& k, const Rational& c) {
    if (c.is_zero())
        return;
    auto [it, fresh] = terms_.try_emplace(k, c);
    if (!fresh) {
        it->second += c;
        if (it->second.is_zero())
            terms_.erase(it);
    }
}

ChernPoly& ChernPoly::operator+=(const ChernPoly& o) {
    for (const auto& [k, c] : o.terms_)
        add_term(k, c);
    return *this;
}

ChernPoly operator*(const ChernPoly& a, const ChernPoly& b) {
    ChernPoly r;
    for (const auto& [ka, ca] : a.terms_)
        for (const auto& [kb, cb] : b.terms_)
            r.add_term({ka[0] + kb[0], ka[1] + kb[1], ka[2] + kb[2]}, ca * cb);
    return r;
}

ChernPoly operator*(const ChernPoly& a, const Rational& c) {
    ChernPoly r;
    for (const auto& [k, coeff] : a.terms_)
        r.add_term(k, coeff * c);
    return r;
}

ChernPoly ChernPoly::weight_part(int w) const {
    ChernPoly r;
    for (const auto& [k, c] : terms_)
        if (k[0] + k[1] + 2 * k[2] == w)
            r.add_term(k, c);
    return r;
}

std::string ChernPoly::str() const {
    if (terms_.empty())
        return "0";
    static const char* names[3] = {"c0", "c1", "c2"};
    std::string out;
    bool first = true;
    for (const auto& [k, c] : terms_) {
        std::string mono;
        for (int v = 0; v < 3; ++v)
            for (int e = 0; e < k[static_cast<size_t>(v)]; ++e)
                mono += std::string(mono.empty() ? "" : "*") + names[v];
        if (!first)
            out += c >= Rational(0) ? " + " : " - ";
        else if (c < Rational(0))
            out += "-";
        Rational abs = c < Rational(0) ? -c : c;
        if (mono.empty())
            out += abs.str();
        else if (abs == Rational(1))
            out += mono;
        else
            out += abs.str() + "*" + mono;
        first = false;
    }
    return out;
}

namespace {

// exponents of (t1, t2, c0)
using RootKey = std::array<int, 3>;
using RootPoly = std::map<RootKey, Rational>;

void root_add(RootPoly& p, const RootKey& k, const Rational& c) {
    if (c.is_zero())
        return;
    auto [it, fresh] = p.try_emplace(k, c);
    if (!fresh) {
        it->second += c;
        if (it->second.is_zero())
            p.erase(it);
    }
}

RootPoly root_mul(const RootPoly& a, const RootPoly& b) {
    RootPoly r;
    for (const auto& [ka, ca] : a)
        for (const auto& [kb, cb] : b)
            root_add(r, {ka[0] + kb[0], ka[1] + kb[1], ka[2] + kb[2]}, ca * cb);
    return r;
}

// (t1+t2)^alpha (t1 t2)^beta c0^r expanded
RootPoly elementary_expansion(int alpha, int beta, int r) {
    RootPoly p;
    for (int k = 0; k <= alpha; ++k)
        root_add(p, {k + beta, alpha - k + beta, r}, Rational(binomial(static_cast<unsigned>(alpha),
                                                                       static_cast<unsigned>(k))));
    return p;
}

} // namespace

ChernPoly chern_from_roots(const std::vector<std::array<long long, 3>>& roots) {
    RootPoly total{{RootKey{0, 0, 0}, Rational(1)}};
    for (const auto& root : roots) {
        RootPoly factor{{RootKey{0, 0, 0}, Rational(1)}};
        root_add(factor, {1, 0, 0}, Rational(root[0]));
        root_add(factor, {0, 1, 0}, Rational(root[1]));
        root_add(factor, {0, 0, 1}, Rational(root[2]));
        total = root_mul(total, factor);
    }

    // Gauss reduction: rewrite the (t1,t2)-symmetric polynomial in terms of
    // e1 = c1M, e2 = c2M, working down the lex order of (t1,t2) exponents.
    ChernPoly out;
    while (!total.empty()) {
        auto it = std::prev(total.end()); // lex-largest key
        int p = it->first[0], q = it->first[1], r = it->first[2];
        Rational c = it->second;
        if (p == 0 && q == 0) {
            out.add_term({r, 0, 0}, c);
            total.erase(it);
            continue;
        }
        if (p < q)
            throw AlgebraError("chern_from_roots: root polynomial is not symmetric in (t1, t2)");
        out.add_term({r, p - q, q}, c);
        RootPoly sub = elementary_expansion(p - q, q, r);
        for (const auto& [k, coeff] : sub)
            root_add(total, k, -(coeff * c));
    }
    return out;
}

ChernPoly twisted_sym_power_chern(long long j) {
    if (j < 0)
        throw AlgebraError("twisted_sym_power_chern: negative symmetric power");
    std::vector<std::array<long long, 3>> roots;
    for (long long a = 0; a <= j; ++a)
        roots.push_back({a, j - a, 1});
    return chern_from_roots(roots);
}

} // namespace swfam
