#include "groverian/measures.hpp"

#include <cmath>
#include <stdexcept>

namespace groverian {

double entropy_of_rdm(const ReducedDensityMatrix& r)
{
    auto ev = r.eigenvalues();
    double s = 0.0;
    // eigenvalues within 1e-15 of 0 or 1 are numerical noise at the scale
    // of a trace-one 2x2 matrix; their contribution is an exact zero
    for (double lam : ev)
        if (lam > 1e-15 && lam < 1.0 - 1e-15)
            s -= lam * std::log2(lam);
    return s < 0.0 ? 0.0 : s;
}

double entropy_measure(const StateVector& s, int qubit)
{
    return entropy_of_rdm(reduce_qubit(s, qubit));
}

TangleTerms tangle_terms(const StateVector& s)
{
    if (s.qubits() != 3)
        throw std::domain_error("three_tangle requires n = 3");
    auto v = s.real_amplitudes();
    // amplitude by bitstring b1 b2 b3, qubit 1 most significant
    const double a000 = v[0], a001 = v[1], a010 = v[2], a011 = v[3];
    const double a100 = v[4], a101 = v[5], a110 = v[6], a111 = v[7];
    TangleTerms t;
    t.d1 = a000 * a000 * a111 * a111 + a001 * a001 * a110 * a110 +
           a010 * a010 * a101 * a101 + a100 * a100 * a011 * a011;
    t.d2 = a000 * a111 * a011 * a100 + a000 * a111 * a101 * a010 +
           a000 * a111 * a110 * a001 + a011 * a100 * a101 * a010 +
           a011 * a100 * a110 * a001 + a101 * a010 * a110 * a001;
    t.d3 = a000 * a110 * a101 * a011 + a111 * a001 * a010 * a100;
    return t;
}

double three_tangle(const StateVector& s)
{
    TangleTerms t = tangle_terms(s);
    return 4.0 * std::abs(t.d1 - 2.0 * t.d2 + 4.0 * t.d3);
}

} // namespace groverian
