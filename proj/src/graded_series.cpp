#include "swfam/graded_series.hpp"

#include <algorithm>

#include "swfam/errors.hpp"

namespace swfam {

namespace {

void require_same_basis(const GradedSeries& a, const GradedSeries& b, const char* op) {
    if (a.basis() == b.basis() || *a.basis() == *b.basis())
        return;
    throw AlgebraError(std::string(op) + ": mismatched generator sets");
}

} // namespace

GradedSeries::GradedSeries(BasisPtr basis, int truncation_order)
    : basis_(std::move(basis)), trunc_(truncation_order) {
    if (trunc_ < 0)
        throw AlgebraError("GradedSeries: negative truncation order");
    coeffs_.assign(static_cast<size_t>(trunc_) + 1, ExtElem::zero(basis_));
}

GradedSeries GradedSeries::one(BasisPtr basis, int truncation_order) {
    GradedSeries s(std::move(basis), truncation_order);
    s.coeffs_[0] = ExtElem::unit(s.basis_);
    return s;
}

GradedSeries GradedSeries::from_coefficients(BasisPtr basis, std::vector<ExtElem> coeffs,
                                             int truncation_order) {
    GradedSeries s(std::move(basis), truncation_order);
    for (size_t k = 0; k < coeffs.size() && k <= static_cast<size_t>(truncation_order); ++k)
        s.set_coefficient(static_cast<int>(k), std::move(coeffs[k]));
    return s;
}

const ExtElem& GradedSeries::coefficient(int k) const {
    if (k < 0 || k > trunc_)
        throw AlgebraError("GradedSeries::coefficient: power out of range");
    return coeffs_[static_cast<size_t>(k)];
}

void GradedSeries::set_coefficient(int k, ExtElem c) {
    if (k < 0 || k > trunc_)
        throw AlgebraError("GradedSeries::set_coefficient: power out of range");
    if (!(*c.basis() == *basis_))
        throw AlgebraError("GradedSeries::set_coefficient: mismatched generator sets");
    coeffs_[static_cast<size_t>(k)] = std::move(c);
}

GradedSeries& GradedSeries::operator+=(const GradedSeries& o) {
    require_same_basis(*this, o, "series add");
    int t = std::min(trunc_, o.trunc_);
    GradedSeries r(basis_, t);
    for (int k = 0; k <= t; ++k)
        r.coeffs_[static_cast<size_t>(k)] =
            coeffs_[static_cast<size_t>(k)] + o.coeffs_[static_cast<size_t>(k)];
    *this = std::move(r);
    return *this;
}

GradedSeries& GradedSeries::operator-=(const GradedSeries& o) {
    require_same_basis(*this, o, "series sub");
    int t = std::min(trunc_, o.trunc_);
    GradedSeries r(basis_, t);
    for (int k = 0; k <= t; ++k)
        r.coeffs_[static_cast<size_t>(k)] =
            coeffs_[static_cast<size_t>(k)] - o.coeffs_[static_cast<size_t>(k)];
    *this = std::move(r);
    return *this;
}

GradedSeries operator*(const GradedSeries& a, const GradedSeries& b) {
    require_same_basis(a, b, "series_mul");
    int t = std::min(a.trunc_, b.trunc_);
    GradedSeries r(a.basis_, t);
    for (int i = 0; i <= t; ++i) {
        if (i > a.trunc_ || a.coeffs_[static_cast<size_t>(i)].is_zero())
            continue;
        for (int j = 0; i + j <= t; ++j) {
            if (j > b.trunc_)
                break;
            const ExtElem& cb = b.coeffs_[static_cast<size_t>(j)];
            if (cb.is_zero())
                continue;
            r.coeffs_[static_cast<size_t>(i + j)] +=
                a.coeffs_[static_cast<size_t>(i)] * cb;
        }
    }
    return r;
}

GradedSeries operator*(const GradedSeries& a, const Rational& c) {
    GradedSeries r(a.basis_, a.trunc_);
    for (int k = 0; k <= a.trunc_; ++k)
        r.coeffs_[static_cast<size_t>(k)] = a.coeffs_[static_cast<size_t>(k)] * c;
    return r;
}

bool operator==(const GradedSeries& a, const GradedSeries& b) {
    if (!(*a.basis_ == *b.basis_) || a.trunc_ != b.trunc_)
        return false;
    return a.coeffs_ == b.coeffs_;
}

GradedSeries series_exp(const GradedSeries& a) {
    if (!a.coefficient(0).is_zero())
        throw AlgebraError("series_exp: nonzero constant term");
    GradedSeries sum = GradedSeries::one(a.basis(), a.truncation_order());
    GradedSeries power = sum;
    // a has no constant term, so a^k vanishes beyond t^trunc
    for (int k = 1; k <= a.truncation_order(); ++k) {
        power = power * a;
        sum += power * Rational(Int(1), factorial(static_cast<unsigned>(k)));
    }
    return sum;
}

GradedSeries series_inverse(const GradedSeries& a) {
    if (!(a.coefficient(0) == ExtElem::unit(a.basis())))
        throw AlgebraError("series_inverse: constant term is not the ring unit");
    int t = a.truncation_order();
    GradedSeries b = GradedSeries::one(a.basis(), t);
    for (int k = 1; k <= t; ++k) {
        ExtElem acc = ExtElem::zero(a.basis());
        for (int j = 1; j <= k; ++j)
            acc += a.coefficient(j) * b.coefficient(k - j);
        b.set_coefficient(k, -acc);
    }
    return b;
}

} // namespace swfam
