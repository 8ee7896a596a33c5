#pragma once

#include <array>
#include <complex>
#include <cstdint>
#include <vector>

namespace groverian {

using complex = std::complex<double>;

// Dense 2^n storage; anything larger is out of scope.
inline constexpr int max_qubits = 20;
// States must be normalized to this tolerance; out-of-tolerance input is
// rejected, never silently renormalized.
inline constexpr double norm_tolerance = 1e-9;

// Pure n-qubit state, 2^n amplitudes. Index i is read as the bitstring
// i_1 i_2 ... i_n with qubit 1 the most significant bit. Immutable after
// construction; all operations on it are pure functions.
class StateVector {
public:
    StateVector(int n, std::vector<complex> amplitudes);

    static StateVector uniform(int n);
    static StateVector basis(int n, std::uint64_t index);
    static StateVector ghz(int n);
    static StateVector w(int n);

    int qubits() const { return n_; }
    std::uint64_t dimension() const { return std::uint64_t{1} << n_; }
    const std::vector<complex>& amplitudes() const { return amps_; }
    complex amplitude(std::uint64_t i) const { return amps_[i]; }

    bool is_real(double tol = 1e-12) const;
    // Real parts of the amplitudes; throws std::domain_error if any
    // imaginary part exceeds tol.
    std::vector<double> real_amplitudes(double tol = 1e-12) const;

private:
    int n_;
    std::vector<complex> amps_;
};

// Product state |e> = (x)_k (cos theta_k |0> + e^{i phi_k} sin theta_k |1>).
// theta_k runs over the doubled range [-pi/2, pi/2] so real product states
// need no phases; phi_k in [0, 2pi).
struct ProductState {
    std::vector<double> thetas;
    std::vector<double> phis;

    ProductState(std::vector<double> thetas, std::vector<double> phis);
    static ProductState real_angles(std::vector<double> thetas);

    int qubits() const { return static_cast<int>(thetas.size()); }
};

// Single-qubit reduced density matrix. Validated Hermitian, trace one,
// eigenvalues in [0,1] (all within 1e-12).
struct ReducedDensityMatrix {
    complex rho00, rho01, rho10, rho11;

    ReducedDensityMatrix(complex r00, complex r01, complex r10, complex r11);

    // Eigenvalues {(1+|s|)/2, (1-|s|)/2} from the Bloch norm, clamped to
    // [0,1]; robust for 2x2 Hermitian matrices.
    std::array<double, 2> eigenvalues() const;
};

struct BlochVector {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;
};

StateVector product_to_state(const ProductState& p);

// <e|Psi> (the squared magnitude of this is the success-probability
// overlap the measure maximizes).
complex overlap(const StateVector& s, const ProductState& p);

// Partial trace over all qubits except `qubit` (1-based).
ReducedDensityMatrix reduce_qubit(const StateVector& s, int qubit);

// rho = (I + s.sigma)/2  ->  s
BlochVector bloch_from_rdm(const ReducedDensityMatrix& r);

} // namespace groverian
