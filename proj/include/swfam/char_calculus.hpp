#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

#include "swfam/graded_series.hpp"

namespace swfam {

/// Chern-character components ch_1, ch_2, ... of a virtual bundle over the
/// torus algebra; ch_i is stored as an ExtElem of odd-generator degree 2i
/// (scalars over the empty basis for formal root data).
class CharData {
  public:
    static CharData critical(ExtElem ch1, ExtElem ch2);
    static CharData from_components(BasisPtr basis, std::vector<ExtElem> ch);
    /// ch_k = p_k(roots)/k! — the character of the sum of line bundles with
    /// the given integer Chern roots, over the empty generator set. Stores
    /// components up to index up_to (default: the number of roots).
    static CharData from_roots(const std::vector<long long>& roots, int up_to = -1);

    const BasisPtr& basis() const { return basis_; }
    /// 1-based; zero element beyond the stored range.
    ExtElem chern_char(int i) const;
    int max_index() const { return static_cast<int>(ch_.size()); }
    /// ch_i = 0 for all i > 2.
    bool is_critical() const;

  private:
    CharData(BasisPtr basis, std::vector<ExtElem> ch);
    BasisPtr basis_;
    std::vector<ExtElem> ch_; // ch_[k] holds ch_{k+1}
};

/// Chern classes of a critical character by the recursion
/// c_i = (c_{i-1} ch_1 - 2 c_{i-2} ch_2)/i; rejects noncritical data.
GradedSeries chern_recursion(const CharData& data, int n);

/// Exp(ch_1 t - ch_2 t^2) truncated at n; critical data only.
GradedSeries chern_closed_form(const CharData& data, int n);

/// Exp(-ch_1 t + ch_2 t^2) truncated at n; critical data only.
GradedSeries segre_closed_form(const CharData& data, int n);

/// Exp(sum_i (-1)^{i-1} (i-1)! ch_i t^i) — the total Chern class of an
/// arbitrary character.
GradedSeries chern_general(const CharData& data, int n);

/// Polynomial in the three formal classes c0, c1M, c2M with weights 1, 1, 2
/// (cohomological degrees 2, 2, 4). Exponent key = (c0, c1M, c2M) powers.
class ChernPoly {
  public:
    using Key = std::array<int, 3>;

    ChernPoly() = default;
    static ChernPoly constant(Rational c);
    static ChernPoly variable(int which); // 0 = c0, 1 = c1M, 2 = c2M

    const std::map<Key, Rational>& terms() const { return terms_; }
    Rational coefficient(const Key& k) const;
    bool is_zero() const { return terms_.empty(); }

    ChernPoly& operator+=(const ChernPoly& o);
    friend ChernPoly operator+(ChernPoly a, const ChernPoly& b) { return a += b; }
    friend ChernPoly operator*(const ChernPoly& a, const ChernPoly& b);
    friend ChernPoly operator*(const ChernPoly& a, const Rational& c);
    friend bool operator==(const ChernPoly& a, const ChernPoly& b) {
        return a.terms_ == b.terms_;
    }

    /// Terms of the given weight (c0 + c1M + 2*c2M exponent weight).
    ChernPoly weight_part(int w) const;
    void add_term(const Key& k, const Rational& c);
    std::string str() const;

  private:
    std::map<Key, Rational> terms_;
};

/// Total Chern class of S^j(V) ⊗ O(c0) for a rank-2 bundle V with Chern
/// roots t1, t2 (t1 + t2 = c1M, t1 t2 = c2M), by the splitting principle with
/// roots {a t1 + b t2 + c0 : a + b = j}, reduced to the symmetric basis.
ChernPoly twisted_sym_power_chern(long long j);

/// Total Chern class of the bundle with the given formal roots, each root a
/// triple (coefficient of t1, of t2, of c0); symmetric in (t1, t2) overall.
/// Exposed so independent root-concatenation checks can share the reduction.
ChernPoly chern_from_roots(const std::vector<std::array<long long, 3>>& roots);

} // namespace swfam
