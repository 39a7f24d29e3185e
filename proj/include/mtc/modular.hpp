#pragma once

#include <utility>

#include "mtc/moves.hpp"

namespace mtc {

// Basis of the annular tower at charge a: all pairs (a1, i) with
// i < N(a, a1, a1), enumerated with a1 ascending and i inside. The tower
// matrices below are square on this basis, rows = image slot, columns =
// source slot.
struct TowerIndex {
    std::vector<std::pair<int, int>> slots;   // slot -> (spectator, mult)
    std::map<std::pair<int, int>, int> pos;   // (spectator, mult) -> slot
    int size() const { return int(slots.size()); }
};
TowerIndex tower_index(const CategoryData& cat, int a);

// Modular transformation on the tower at charge a, evaluated from the ring
// diagram: the spectator line of each basis vertex is closed into a ring
// that threads the new spectator strand, weighted by dim(new)/D. Never uses
// the twist/fusion closed form.
Mat s_action(const CategoryData& cat, int a);
// Same ring with both crossings reversed; inverse of s_action.
Mat s_inverse_action(const CategoryData& cat, int a);

// Actions on the dual tower of splitting vertices a1 -> a (x) a1, as the
// upside-down ring diagrams. The first matrix pairs with s_action slotwise
// to the identity (it is the inverse transpose of s_action); the second
// pairs the same way with s_inverse_action.
std::pair<Mat, Mat> s_dual_actions(const CategoryData& cat, int a);

// S and T data of a category, all tower blocks computed from diagrams.
struct ModularData {
    std::vector<std::string> labels;
    double Dsq = 0.0;                     // sum of squared dims
    cplx p_plus, p_minus;                 // Gauss sums
    cplx D;                               // p_minus with the charge phase
    cplx See;                             // vacuum element of s_action(e)
    double c_used = 0.0;                  // lift of the chiral charge in Tmat
    std::vector<TowerIndex> towers;       // per charge a
    std::vector<Mat> Smat;                // s_action per charge a
    std::vector<Eigen::VectorXcd> Tmat;   // diagonal twist phases per charge
};

// Builds every tower block and selects the lift of the chiral charge that
// satisfies the S-T relation (see check_modular_relations).
ModularData modular_data(const CategoryData& cat);

// Relations between the tower matrices and the scalar data:
//   s-square-leg-rotation     S(a)^2 equals the tilde rotation matrix
//   s-inverse-composition     s_action . s_inverse_action = id
//   dual-pairing / -inverse   dual tower actions pair to the identity
//   unit-tower-row            vacuum row of S(e) is dim(a1)/D
//   vacuum-element            S(e) vacuum entry equals 1/D
//   vacuum-element-squared    and its square equals 1/D^2
//   gauss-sum-product         p_plus p_minus = D^2
//   charge-phase-magnitude    |D|^2 equals the dim-squared sum
//   s-t-cube                  (T^-1 S)^3 = S^2 for the recorded lift of c
//   s-t-conjugation           T^-1 S^2 T = S^2 for the same lift
// The S-T rows fix the chiral charge only mod 8 from the stored data, so
// the lift is searched over both signs and three octave shifts; the lift
// that passes is recorded in the witness and in ModularData::c_used.
CheckReport check_modular_relations(const CategoryData& cat,
                                    double tol = 1e-9);

}  // namespace mtc
