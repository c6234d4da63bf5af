#pragma once

#include <vector>

#include "swfam/ext_algebra.hpp"

namespace swfam {

/// Polynomial in a central even variable t with ExtElem coefficients,
/// truncated at a fixed order: every operation drops powers beyond it.
class GradedSeries {
  public:
    GradedSeries(BasisPtr basis, int truncation_order); // zero series
    static GradedSeries one(BasisPtr basis, int truncation_order);
    static GradedSeries from_coefficients(BasisPtr basis, std::vector<ExtElem> coeffs,
                                          int truncation_order);

    const BasisPtr& basis() const { return basis_; }
    int truncation_order() const { return trunc_; }
    const ExtElem& coefficient(int k) const;
    void set_coefficient(int k, ExtElem c);

    GradedSeries& operator+=(const GradedSeries& o);
    GradedSeries& operator-=(const GradedSeries& o);
    friend GradedSeries operator+(GradedSeries a, const GradedSeries& b) { return a += b; }
    friend GradedSeries operator-(GradedSeries a, const GradedSeries& b) { return a -= b; }

    /// Cauchy product, truncated to the smaller order.
    friend GradedSeries operator*(const GradedSeries& a, const GradedSeries& b);
    friend GradedSeries operator*(const GradedSeries& a, const Rational& c);

    friend bool operator==(const GradedSeries& a, const GradedSeries& b);
    friend bool operator!=(const GradedSeries& a, const GradedSeries& b) { return !(a == b); }

  private:
    BasisPtr basis_;
    int trunc_;
    std::vector<ExtElem> coeffs_; // index = power of t, size trunc_+1
};

/// Sum a^k/k!; rejects a nonzero constant term. Terminates because the
/// t-grading is bounded and the coefficients are nilpotent.
GradedSeries series_exp(const GradedSeries& a);

/// Multiplicative inverse up to truncation; rejects a non-unit constant term.
GradedSeries series_inverse(const GradedSeries& a);

} // namespace swfam
