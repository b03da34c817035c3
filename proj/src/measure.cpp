#include "quasiq/measure.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "quasiq/flip.hpp"

namespace quasiq {

namespace {

constexpr double kImagResidueTol = 1e-10;

double offset_for(const std::vector<int>& dims) {
    double prod = 1.0;
    for (int d : dims) prod *= d;
    return std::ldexp(1.0, static_cast<int>(dims.size())) / prod;
}

double real_trace_product(const ComplexMatrix& a, const ComplexMatrix& b, const char* label) {
    const Complex val = (a * b).trace();
    if (std::abs(val.imag()) > kImagResidueTol) {
        std::ostringstream os;
        os << label << " has imaginary residue " << std::abs(val.imag());
        throw ValidationError(ValidationDefect::ImaginaryResidue, os.str());
    }
    return val.real();
}

MeasureReport finish(MeasureReport r) {
    r.f = r.gross + r.unflip_term - r.offset;
    r.eq = r.f > 0.0 ? r.f : 0.0;
    r.mixedness = 1.0 - r.purity;
    return r;
}

ComplexMatrix pauli_y_power(int n) {
    ComplexMatrix y(2, 2);
    y << Complex(0, 0), Complex(0, -1), Complex(0, 1), Complex(0, 0);
    ComplexMatrix acc = y;
    for (int k = 1; k < n; ++k) acc = kron(acc, y);
    return acc;
}

} // namespace

std::string picture_name(Picture p) {
    switch (p) {
    case Picture::Density: return "density";
    case Picture::Coherence: return "coherence";
    case Picture::QubitFast: return "qubit_fast";
    case Picture::BipartiteMixedness: return "bipartite_mixedness";
    }
    throw std::logic_error("unknown picture");
}

Picture picture_from_name(const std::string& name) {
    if (name == "density") return Picture::Density;
    if (name == "coherence") return Picture::Coherence;
    if (name == "qubit_fast" || name == "qubit-fast") return Picture::QubitFast;
    if (name == "bipartite_mixedness" || name == "bipartite-mixedness")
        return Picture::BipartiteMixedness;
    throw std::invalid_argument("unknown picture name: " + name);
}

double gross_entanglement(const DensityMatrix& rho) {
    return real_trace_product(rho.matrix(), flip(rho), "flip overlap");
}

MeasureReport f_density(const DensityMatrix& rho) {
    MeasureReport r;
    r.picture = Picture::Density;
    r.gross = real_trace_product(rho.matrix(), flip(rho), "flip overlap");
    r.unflip_term = real_trace_product(rho.matrix(), unflip(rho), "unflip overlap");
    r.offset = offset_for(rho.dims());
    r.purity = purity(rho);
    return finish(r);
}

MeasureReport f_coherence(const ExpandedCoherenceVector& v) {
    const auto& dims = v.dims();
    MeasureReport r;
    r.picture = Picture::Coherence;
    r.offset = offset_for(dims);

    double gross = 0.0;
    double unflip_term = 0.0;
    for (long flat = 0; flat < v.size(); ++flat) {
        const std::vector<int> multi = unflatten_index(dims, static_cast<int>(flat));
        const double sq = v.data()(flat) * v.data()(flat);
        gross += flip_weight(dims, multi) * sq;
        unflip_term += unflip_weight(dims, multi) * sq;
    }
    r.gross = gross;
    r.unflip_term = unflip_term;
    r.purity = v.data().squaredNorm();
    return finish(r);
}

MeasureReport f_qubits_fast(const DensityMatrix& rho) {
    for (int d : rho.dims())
        if (d != 2)
            throw PictureError("the all-two-level shortcut needs every subsystem dimension to be 2");

    const ComplexMatrix y = pauli_y_power(rho.subsystem_count());
    const ComplexMatrix flipped = y * rho.matrix().conjugate() * y;

    MeasureReport r;
    r.picture = Picture::QubitFast;
    r.gross = real_trace_product(rho.matrix(), flipped, "flip overlap");
    r.purity = purity(rho);
    r.unflip_term = r.purity;
    r.offset = 1.0;
    return finish(r);
}

MeasureReport f_bipartite_mixedness(const DensityMatrix& rho) {
    if (rho.subsystem_count() != 2)
        throw PictureError("the mixedness shortcut needs exactly two subsystems");
    const double n1 = rho.dims()[0];
    const double n2 = rho.dims()[1];

    const double p = purity(rho);
    const double p1 = purity(partial_trace(rho, {0}));
    const double p2 = purity(partial_trace(rho, {1}));

    // squared coherence weight per sector, recovered from the three purities
    const double a = (p1 - 1.0 / n1) / n2;       // first subsystem traceless, second identity
    const double b = (p2 - 1.0 / n2) / n1;       // the mirror sector
    const double q = p - 1.0 / (n1 * n2) - a - b; // both traceless

    const double denom = (n1 - 1.0) * (n2 - 1.0);

    MeasureReport r;
    r.picture = Picture::BipartiteMixedness;
    r.gross = 1.0 / (n1 * n2) - a / (n1 - 1.0) - b / (n2 - 1.0) + q / denom;
    r.unflip_term = 1.0 / (n1 * n2) + a / (n1 - 1.0) + b / (n2 - 1.0) + q / denom;
    r.offset = 4.0 / (n1 * n2);
    r.purity = p;

    const double m = 1.0 - p;
    const double m1 = 1.0 - p1;
    const double m2 = 1.0 - p2;
    r.f = 2.0 * (n1 * m1 + n2 * m2 - n1 * n2 * m) / (denom * n1 * n2);
    r.eq = r.f > 0.0 ? r.f : 0.0;
    r.mixedness = m;
    return r;
}

MeasureReport eq_measure(const DensityMatrix& rho, std::optional<Picture> picture) {
    const Picture p = picture.value_or(Picture::Coherence);
    switch (p) {
    case Picture::Density: return f_density(rho);
    case Picture::Coherence: return f_coherence(encode(rho));
    case Picture::QubitFast: return f_qubits_fast(rho);
    case Picture::BipartiteMixedness: return f_bipartite_mixedness(rho);
    }
    throw std::logic_error("unknown picture");
}

double concurrence_sq_pure_two_qubit(const Eigen::VectorXcd& psi) {
    if (psi.size() != 4)
        throw std::invalid_argument("state vector must have 4 amplitudes");
    if (std::abs(psi.norm() - 1.0) > 1e-9)
        throw std::invalid_argument("state vector is not normalized");

    ComplexMatrix yy(4, 4);
    yy.setZero();
    yy(0, 3) = Complex(-1, 0);
    yy(1, 2) = Complex(1, 0);
    yy(2, 1) = Complex(1, 0);
    yy(3, 0) = Complex(-1, 0);

    const Complex amp = psi.adjoint() * (yy * psi.conjugate());
    return std::norm(amp);
}

} // namespace quasiq
