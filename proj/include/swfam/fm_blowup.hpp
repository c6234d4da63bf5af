#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "swfam/char_calculus.hpp"
#include "swfam/manifold_model.hpp"
#include "swfam/wall_crossing.hpp"

namespace swfam {

/// Degree-2 and degree-4 pairings of the base geometry against [M].
struct FMGeometry {
    long long c0_sq = 0; // C0 . C0
    long long c0_k = 0;  // C0 . c1(M)
    long long c1_sq = 0; // c1(M) . c1(M)
    long long c2 = 0;    // c2(M) [M]
    friend bool operator==(const FMGeometry&, const FMGeometry&) = default;
};

/// Blow-up data: n points, Spin^c coefficients L = L0 - sum (2 m_i + 1) E_i,
/// and the pairing table of the underlying manifold.
struct FMSpec {
    int n = 1;
    std::vector<long long> m; // multiplicities m_1..m_n
    FMGeometry geometry;
    friend bool operator==(const FMSpec&, const FMSpec&) = default;
};

/// One Koszul-resolution summand S^{j}(V_i) ⊗ (C0 - sum_{s<i} m_s E_s).
struct FMSummand {
    int point = 0;                  // i, 1-based
    long long sym_power = 0;        // j_i in [0, m_i)
    long long rank = 0;             // j_i + 1
    std::vector<long long> twist_e; // coefficients of -E_s for s = 1..i-1
    friend bool operator==(const FMSummand&, const FMSummand&) = default;
};

/// Maps every negative coefficient 2 m_i + 1 to its absolute value
/// (m_i -> -m_i - 1); idempotent, and wall-crossing output is invariant.
FMSpec fm_normalize(FMSpec spec);

/// The full summand list {(i, j_i)} with twists; total rank is
/// sum m_i (m_i + 1) / 2. Normalizes first.
std::vector<FMSummand> fm_summands(const FMSpec& spec);

/// Blow-up factorization for one blown-up point: c_2 of
/// ⊕_{j<m} S^j(TM) ⊗ C0 paired against the geometry table, times delta0.
WcnValue fm_wcn_n1(const FMSpec& spec, const WcnValue& delta0);

/// Mixed variant: eta of degree 0 (empty insertion), 2 (pairings eta.C0 and
/// eta.c1(M) required) or 4 (fundamental class; result is delta0 itself).
WcnValue fm_wcn_n1_mixed(const FMSpec& spec, const WcnValue& delta0, int eta_degree,
                         long long eta_c0 = 0, long long eta_c1 = 0);

/// T^4 one-nodal-point numbers for n=1, m=2: the literal published value
/// (C0^2 + 1)/2 * 3 C0^2 and the composition of the torus wall-crossing
/// number with the blow-up factorization, (C0^2/2 + 1) * 3 C0^2. The two
/// differ; both are reported and not reconciled.
std::pair<WcnValue, WcnValue> fm_t4_nodal(long long c0_sq);

/// (L0^2 - sum (2 m_i + 1)^2 - (2e + 3σ) + n)/4 + 4n + dimB_extra with
/// dimB_extra defaulting to b^+ - 1; the caller checks non-negativity.
Rational fm_expected_dimension(const ManifoldModel& m, long long l0_sq, const FMSpec& spec,
                               std::optional<long long> dim_b_extra = std::nullopt);

} // namespace swfam
