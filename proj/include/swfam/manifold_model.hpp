#pragma once

#include <array>
#include <map>
#include <string>
#include <vector>

#include "swfam/rational.hpp"

namespace swfam {

/// c_1 of a Spin^c determinant line, as integer coordinates in the H^2 basis.
struct SpincClass {
    std::vector<long long> components;
    friend bool operator==(const SpincClass&, const SpincClass&) = default;
};

/// A one-cycle class zeta^* as integer coordinates in the H^1 basis.
struct OneCycle {
    std::vector<long long> components;
    friend bool operator==(const OneCycle&, const OneCycle&) = default;
};

/// Finite cup-product presentation of a closed oriented four-manifold:
/// Betti data, intersection form on H^2, the triple products
/// (x_i ∪ x_j ∪ e_a)[M] and quadruple products (x_i ∪ x_j ∪ x_k ∪ x_l)[M].
class ManifoldModel {
  public:
    std::string name;
    int b1 = 0;
    int bplus = 0;
    long long euler = 0;
    long long signature = 0;
    int h2_rank = 0;
    std::vector<std::vector<long long>> intersection; // h2_rank x h2_rank, symmetric

    /// Full antisymmetrized tensor, 0-based: triple[i][j][a].
    std::vector<std::vector<std::vector<long long>>> triple;
    /// Values on sorted index quadruples (0-based, i<j<k<l).
    std::map<std::array<int, 4>, long long> quadruple_sorted;

    /// Signed lookup of the totally antisymmetric quadruple tensor (0-based).
    long long quadruple(int i, int j, int k, int l) const;
    long long triple_at(int i, int j, int a) const { return triple[size_t(i)][size_t(j)][size_t(a)]; }

    /// c_1(L1) ∪ c_1(L2) [M] through the intersection matrix.
    long long pairing(const SpincClass& l1, const SpincClass& l2) const;

    /// Checks every invariant; throws ValidationError naming the failed one.
    void validate() const;

    friend bool operator==(const ManifoldModel&, const ManifoldModel&) = default;
};

/// Parses the sectioned key-value manifold document and validates the result.
ManifoldModel load_manifold(const std::string& text);

/// Serializes a model in the same format load_manifold reads.
std::string to_text(const ManifoldModel& m);

/// Built-in models: "t4", "k3", "kodaira".
ManifoldModel preset(const std::string& name);

/// Signature (n_plus - n_minus) of a symmetric integer matrix by exact
/// congruence diagonalization over the rationals.
long long symmetric_signature(const std::vector<std::vector<long long>>& q);

/// Index formula dim B + (c_1(L)^2 - (2e + 3σ))/4; rejects a non-integral
/// quotient, naming the parity obstruction.
long long expected_dimension(const ManifoldModel& m, const SpincClass& l, long long dim_b);

} // namespace swfam
