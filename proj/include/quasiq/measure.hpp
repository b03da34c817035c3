#pragma once

#include <optional>
#include <string>

#include "quasiq/coherence.hpp"
#include "quasiq/state.hpp"

namespace quasiq {

// Independent computation routes for the same quantity. The density and
// coherence pictures apply to every subsystem layout; the other two are
// shortcuts restricted to all-two-level registers and to two subsystems.
enum class Picture { Density, Coherence, QubitFast, BipartiteMixedness };

std::string picture_name(Picture p);
Picture picture_from_name(const std::string& name);

// Every field of the raw measure evaluation:
//   f   = gross + unflip_term - offset,   offset = 2^n / prod dims
//   eq  = max(f, 0)
//   mixedness = 1 - purity
struct MeasureReport {
    double gross = 0.0;
    double unflip_term = 0.0;
    double offset = 0.0;
    double f = 0.0;
    double eq = 0.0;
    double purity = 0.0;
    double mixedness = 0.0;
    Picture picture = Picture::Coherence;
};

// tr(rho * flip(rho)); the overlap of a state with its spin-flipped partner.
double gross_entanglement(const DensityMatrix& rho);

MeasureReport f_density(const DensityMatrix& rho);
MeasureReport f_coherence(const ExpandedCoherenceVector& v);

// All-two-level shortcut: gross term by conjugating with the tensor power of
// the second Pauli matrix, remainder from the purity.
MeasureReport f_qubits_fast(const DensityMatrix& rho);

// Two-subsystem shortcut expressed through the mixedness M(x) = 1 - tr(x^2)
// of the state and its marginals.
MeasureReport f_bipartite_mixedness(const DensityMatrix& rho);

// Dispatch: the requested picture when given (PictureError if it cannot
// handle the layout), the coherence picture otherwise.
MeasureReport eq_measure(const DensityMatrix& rho, std::optional<Picture> picture = {});

// Squared concurrence of a normalized two-qubit state vector; used as an
// independent oracle for the pure two-qubit case.
double concurrence_sq_pure_two_qubit(const Eigen::VectorXcd& psi);

} // namespace quasiq
