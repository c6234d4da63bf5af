#pragma once

#include <map>
#include <string>
#include <vector>

#include "swfam/index_bundle.hpp"
#include "swfam/manifold_model.hpp"

namespace swfam {

/// A wall-crossing number in the fixed global sign convention (the one that
/// makes the T^4 pure number +(c1(L)^2/8 + 1)).
struct WcnValue {
    Rational value;
    static constexpr const char* convention = "cor-4.12-positive";
    friend bool operator==(const WcnValue& a, const WcnValue& b) { return a.value == b.value; }
};

/// Pure critical-case wall crossing:
/// sum_{i+2j=b1/2} (-1)^i ch1^i ch2^j / (i! j!) [T^{b1}]; zero for odd b1.
WcnValue wcn_pure(const ManifoldModel& m, const SpincClass& l);

/// Mixed invariant with H_1 insertions zeta_1..zeta_q: the same sum over
/// i+2j = (b1-q)/2 multiplied by mu(zeta_1)...mu(zeta_q), mu(zeta) = sum n_k y_k;
/// zero when b1 - q is odd or negative.
WcnValue wcn_mixed(const ManifoldModel& m, const SpincClass& l,
                   const std::vector<OneCycle>& zetas);

/// Chambers are Z-graded and consecutive crossings are equal, so the
/// invariant in winding chamber k is k times the consecutive-chamber number.
WcnValue sw_from_winding(const WcnValue& wcn_consecutive, long long chamber);

/// Truncated formal power series in the variables t1..t4 with Rational
/// coefficients; exponents beyond the per-variable truncation are dropped.
class MultiSeries {
  public:
    MultiSeries(std::vector<std::string> variables, std::vector<int> truncation);

    const std::vector<std::string>& variables() const { return vars_; }
    const std::vector<int>& truncation() const { return trunc_; }
    const std::map<std::vector<int>, Rational>& terms() const { return coeff_; }

    Rational coefficient(const std::vector<int>& exponents) const;
    void add_term(const std::vector<int>& exponents, const Rational& c);

    friend MultiSeries operator*(const MultiSeries& a, const MultiSeries& b);
    friend MultiSeries operator+(MultiSeries a, const MultiSeries& b);
    friend bool operator==(const MultiSeries& a, const MultiSeries& b);

    /// 1/(1 - t_var)^power expanded to the truncation.
    static MultiSeries geometric(const std::vector<std::string>& variables,
                                 const std::vector<int>& truncation, int var, int power);

    /// CSV rows "k1,k2,...,value" over the full truncation box in
    /// lexicographic exponent order, preceded by a header row.
    std::string csv() const;

  private:
    std::vector<std::string> vars_;
    std::vector<int> trunc_;
    std::map<std::vector<int>, Rational> coeff_;
};

/// Kodaira q=1 generating series over L(k) = 2(k1 e1 + ... + k4 e4):
/// computes the coefficients term-by-term through wcn_mixed AND expands the
/// closed rational form, cross-checks them exactly (CrossCheckError on any
/// mismatch), and returns the term-by-term series.
MultiSeries kodaira_series_q1(const OneCycle& zeta, int order);

/// Kodaira q=3 series: phi(zeta1* ^ zeta2* ^ zeta3*) — the determinant in the
/// (dx, dy, dt) basis — times prod_i 1/(1 - t_i).
MultiSeries kodaira_series_q3(const OneCycle& z1, const OneCycle& z2, const OneCycle& z3,
                              int order);

} // namespace swfam
