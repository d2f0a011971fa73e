#pragma once

// Numeric complex roots of rational-coefficient polynomials: simultaneous
// Aberth-Ehrlich iteration seeded on scaled circles, Newton polish, and an
// exact-rational Newton refinement pass for high-accuracy targets.

#include <complex>
#include <vector>

#include "exactalg/unipoly.hpp"

namespace dahazeta::exactalg {

struct ComplexRoot {
    std::complex<double> z;
    int multiplicity = 1;
};

struct ComplexRootSet {
    std::vector<ComplexRoot> roots;  // count with multiplicity == degree
    double residual = 0;             // max |p(z)/p'(z)| over returned roots
};

// All complex roots with multiplicity tags. Conjugate symmetry is enforced.
// Throws on convergence failure (with the residual in the message).
ComplexRootSet complex_roots(const UniRealPoly& p, double tol = 1e-12, int max_iter = 800);

// A few Newton steps in exact rational arithmetic around z0; returns the
// refined approximation (error roughly squares per step for simple roots).
std::complex<double> polish_exact(const UniRealPoly& p, std::complex<double> z0, int steps = 2);

}  // namespace dahazeta::exactalg
