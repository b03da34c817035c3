#pragma once

#include <vector>

#include "quasiq/state.hpp"

namespace quasiq {

// Pair-indexed generator matrices for the flip construction on one subsystem.
//
// Flip generator for the pair (i,j), 1 <= i < j <= N: the antisymmetric
// matrix with entries -i/sqrt(N-1) at (i,j) and +i/sqrt(N-1) at (j,i). For
// N = 2 this is the second Pauli matrix.
//
// Unflip generator for the same pair: the diagonal projector onto levels i
// and j scaled by 1/sqrt(N-1); the identity for N = 2.
enum class PairGeneratorKind { Flip, Unflip };

struct FlipGeneratorIndex {
    int dim;
    int i;
    int j;
    PairGeneratorKind kind;
};

ComplexMatrix flip_generator(const FlipGeneratorIndex& g);

// Spin-flip superoperator: the sum over all joint pair choices of
// (tensor of flip generators) * conj(rho) * (tensor of flip generators),
// computed by direct loop. Acts on the expansion coefficients as the
// identity on the all-identity component and as -1/(N_k - 1) per subsystem
// on every traceless component.
ComplexMatrix flip(const DensityMatrix& rho);

// Companion superoperator that keeps every traceless direction with the
// positive factor +1/(N_k - 1) per subsystem and fixes the identity
// component. Realized factor-by-factor as
//     X -> X/(N-1) + (N-2)/(N(N-1)) * tr(X) * I
// on each subsystem, which coincides with conjugation by the pair
// generators above when N = 2. For N >= 3 a pair-indexed conjugation sum
// cannot reproduce this action (its Choi rank is N^2, more than the
// N(N-1)/2 available pairs), so the trace-augmented form is used.
ComplexMatrix unflip(const DensityMatrix& rho);

// Diagonal weights of the two superoperators in the coherence picture, per
// multi-index over the per-subsystem basis families (0 = identity slot).
double flip_weight(const std::vector<int>& dims, const std::vector<int>& multi);
double unflip_weight(const std::vector<int>& dims, const std::vector<int>& multi);

// Sum of the two: 2 at the all-identity index, 0 whenever an odd number of
// components is traceless, and 2 * prod 1/(N_k - 1) over the traceless
// components otherwise.
double g_weight(const std::vector<int>& dims, const std::vector<int>& multi);

// Closed form of the flip superoperator for two subsystems:
//   (tr(rho) I - rho_1 x I - I x rho_2 + rho) / ((N1 - 1)(N2 - 1)).
ComplexMatrix universal_inverter(const DensityMatrix& rho);

} // namespace quasiq
