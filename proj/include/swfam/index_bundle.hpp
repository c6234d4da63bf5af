#pragma once

#include "swfam/ext_algebra.hpp"
#include "swfam/manifold_model.hpp"

namespace swfam {

/// Chern-character data of the family index bundle over T^{b1}: ch1 of
/// degree 2 and ch2 of degree 4 in the torus generators, plus the t^0 Dirac
/// index (c1(L)^2 - sigma)/8.
struct IndexCharacter {
    ExtElem ch1;
    ExtElem ch2;
    Rational dirac_index;
};

/// ch1 = -sum_{i<j} q_ij(L/2) y_i y_j with q_ij(L/2) = (1/2) sum_a L_a T[i][j][a],
/// ch2 = sum_{i<j<k<l} eps_ijkl y_i y_j y_k y_l. The ch1 sign carries the
/// Koszul sign of writing Omega^2/2! in fibre-base split form; it is the one
/// that agrees with family_index_oracle and with the Kodaira numbers.
IndexCharacter index_character(const ManifoldModel& m, const SpincClass& l);

/// Brute-force route for torus fibres only: expands exp(c1(L)/2) exp(Omega)
/// in the bigraded algebra on x1..x4, y1..y4 and integrates over the fibre.
/// Rejects any model other than the t4 preset.
IndexCharacter family_index_oracle(const ManifoldModel& m, const SpincClass& l);

} // namespace swfam
