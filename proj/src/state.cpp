#include "groverian/state.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "groverian/errors.hpp"

namespace groverian {

namespace {

void check_qubit_count(int n)
{
    if (n < 1 || n > max_qubits)
        throw std::domain_error("qubit count must be in [1, " +
                                std::to_string(max_qubits) + "], got " + std::to_string(n));
}

double norm_squared(const std::vector<complex>& amps)
{
    double s = 0.0;
    for (const auto& a : amps)
        s += std::norm(a);
    return s;
}

} // namespace

StateVector::StateVector(int n, std::vector<complex> amplitudes)
    : n_(n), amps_(std::move(amplitudes))
{
    check_qubit_count(n_);
    if (amps_.size() != (std::uint64_t{1} << n_))
        throw std::domain_error("amplitude count " + std::to_string(amps_.size()) +
                                " does not match 2^" + std::to_string(n_));
    double nrm = norm_squared(amps_);
    if (std::abs(nrm - 1.0) > norm_tolerance)
        throw std::domain_error("state is not normalized: sum |a_i|^2 = " + std::to_string(nrm));
}

StateVector StateVector::uniform(int n)
{
    check_qubit_count(n);
    std::uint64_t dim = std::uint64_t{1} << n;
    std::vector<complex> amps(dim, complex{1.0 / std::sqrt(static_cast<double>(dim)), 0.0});
    return StateVector(n, std::move(amps));
}

StateVector StateVector::basis(int n, std::uint64_t index)
{
    check_qubit_count(n);
    std::uint64_t dim = std::uint64_t{1} << n;
    if (index >= dim)
        throw std::domain_error("basis index " + std::to_string(index) +
                                " out of range for n = " + std::to_string(n));
    std::vector<complex> amps(dim, complex{0.0, 0.0});
    amps[index] = 1.0;
    return StateVector(n, std::move(amps));
}

StateVector StateVector::ghz(int n)
{
    check_qubit_count(n);
    if (n < 2)
        throw std::domain_error("ghz requires n >= 2");
    std::uint64_t dim = std::uint64_t{1} << n;
    std::vector<complex> amps(dim, complex{0.0, 0.0});
    amps[0] = amps[dim - 1] = 1.0 / std::sqrt(2.0);
    return StateVector(n, std::move(amps));
}

StateVector StateVector::w(int n)
{
    check_qubit_count(n);
    if (n < 2)
        throw std::domain_error("w requires n >= 2");
    std::uint64_t dim = std::uint64_t{1} << n;
    std::vector<complex> amps(dim, complex{0.0, 0.0});
    double a = 1.0 / std::sqrt(static_cast<double>(n));
    for (int k = 0; k < n; ++k)
        amps[std::uint64_t{1} << k] = a;
    return StateVector(n, std::move(amps));
}

bool StateVector::is_real(double tol) const
{
    for (const auto& a : amps_)
        if (std::abs(a.imag()) > tol)
            return false;
    return true;
}

std::vector<double> StateVector::real_amplitudes(double tol) const
{
    std::vector<double> out(amps_.size());
    for (std::size_t i = 0; i < amps_.size(); ++i) {
        if (std::abs(amps_[i].imag()) > tol)
            throw std::domain_error("state has complex amplitudes");
        out[i] = amps_[i].real();
    }
    return out;
}

ProductState::ProductState(std::vector<double> t, std::vector<double> p)
    : thetas(std::move(t)), phis(std::move(p))
{
    if (thetas.empty() || thetas.size() != phis.size())
        throw std::domain_error("product state needs matching theta/phi lists");
    constexpr double half_pi = 1.5707963267948966;
    constexpr double two_pi = 6.283185307179586;
    for (double th : thetas)
        if (th < -half_pi - 1e-12 || th > half_pi + 1e-12)
            throw std::domain_error("theta out of [-pi/2, pi/2]");
    for (double ph : phis)
        if (ph < 0.0 || ph >= two_pi + 1e-12)
            throw std::domain_error("phi out of [0, 2pi)");
}

ProductState ProductState::real_angles(std::vector<double> thetas)
{
    std::vector<double> phis(thetas.size(), 0.0);
    return ProductState(std::move(thetas), std::move(phis));
}

ReducedDensityMatrix::ReducedDensityMatrix(complex r00, complex r01, complex r10, complex r11)
    : rho00(r00), rho01(r01), rho10(r10), rho11(r11)
{
    if (std::abs(rho10 - std::conj(rho01)) > 1e-12)
        throw std::domain_error("reduced density matrix is not Hermitian");
    if (std::abs(rho00.imag()) > 1e-12 || std::abs(rho11.imag()) > 1e-12 ||
        std::abs(rho00.real() + rho11.real() - 1.0) > 1e-12)
        throw std::domain_error("reduced density matrix trace is not 1");
    auto ev = eigenvalues();
    if (ev[0] > 1.0 + 1e-12 || ev[1] < -1e-12)
        throw std::domain_error("reduced density matrix eigenvalues outside [0, 1]");
}

std::array<double, 2> ReducedDensityMatrix::eigenvalues() const
{
    double sx = 2.0 * rho01.real();
    double sy = 2.0 * rho10.imag();
    double sz = rho00.real() - rho11.real();
    double s = std::sqrt(sx * sx + sy * sy + sz * sz);
    if (s > 1.0)
        s = 1.0;
    double hi = (1.0 + s) / 2.0;
    double lo = (1.0 - s) / 2.0;
    if (lo < 0.0)
        lo = 0.0;
    return {hi, lo};
}

StateVector product_to_state(const ProductState& p)
{
    int n = p.qubits();
    std::vector<complex> amps{complex{1.0, 0.0}};
    for (int k = 0; k < n; ++k) {
        complex u0{std::cos(p.thetas[k]), 0.0};
        complex u1 = std::polar(std::sin(p.thetas[k]), p.phis[k]);
        std::vector<complex> next(amps.size() * 2);
        for (std::size_t i = 0; i < amps.size(); ++i) {
            next[2 * i] = amps[i] * u0;
            next[2 * i + 1] = amps[i] * u1;
        }
        amps = std::move(next);
    }
    return StateVector(n, std::move(amps));
}

complex overlap(const StateVector& s, const ProductState& p)
{
    if (s.qubits() != p.qubits())
        throw std::domain_error("overlap: qubit counts differ");
    // fold one qubit at a time from the least significant end
    std::vector<complex> cur(s.amplitudes());
    for (int k = s.qubits(); k >= 1; --k) {
        complex c0 = complex{std::cos(p.thetas[k - 1]), 0.0};
        complex c1 = std::conj(std::polar(std::sin(p.thetas[k - 1]), p.phis[k - 1]));
        std::size_t half = cur.size() / 2;
        std::vector<complex> next(half);
        for (std::size_t r = 0; r < half; ++r)
            next[r] = c0 * cur[2 * r] + c1 * cur[2 * r + 1];
        cur = std::move(next);
    }
    return cur[0];
}

ReducedDensityMatrix reduce_qubit(const StateVector& s, int qubit)
{
    int n = s.qubits();
    if (qubit < 1 || qubit > n)
        throw std::domain_error("qubit index " + std::to_string(qubit) +
                                " out of range for n = " + std::to_string(n));
    int shift = n - qubit;
    std::uint64_t low_mask = (std::uint64_t{1} << shift) - 1;
    std::uint64_t rest = s.dimension() / 2;
    complex r00{}, r01{}, r11{};
    const auto& a = s.amplitudes();
    for (std::uint64_t j = 0; j < rest; ++j) {
        std::uint64_t i0 = ((j >> shift) << (shift + 1)) | (j & low_mask);
        std::uint64_t i1 = i0 | (std::uint64_t{1} << shift);
        r00 += a[i0] * std::conj(a[i0]);
        r11 += a[i1] * std::conj(a[i1]);
        r01 += a[i0] * std::conj(a[i1]);
    }
    return ReducedDensityMatrix(r00, r01, std::conj(r01), r11);
}

BlochVector bloch_from_rdm(const ReducedDensityMatrix& r)
{
    BlochVector b;
    b.x = 2.0 * r.rho01.real();
    b.y = 2.0 * r.rho10.imag();
    b.z = r.rho00.real() - r.rho11.real();
    return b;
}

} // namespace groverian
