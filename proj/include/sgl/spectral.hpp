#pragma once

#include <vector>

#include "sgl/graph.hpp"

namespace sgl {

// Eigenvalues of the 0/1 adjacency matrix, sorted descending.
struct Spectrum {
    std::vector<double> eigenvalues;

    double lambda(int i) const { return eigenvalues[static_cast<std::size_t>(i) - 1]; } // 1-based
};

// Cyclic Jacobi on the dense symmetric adjacency matrix. Terminates when the
// off-diagonal Frobenius norm drops below tol; throws numeric_error (carrying
// the residual) after 100*n^2 rotations.
Spectrum adjacency_spectrum(const Graph& g, double tol = 1e-10, int dense_cap = 2000);

double lambda2(const Graph& g, double tol = 1e-10);

// Exact Cheeger constant: min over nonempty S, |S| <= n/2 of cut(S)/|S|.
// Gray-code subset scan with O(deg) incremental cut updates; n <= cap.
double cheeger_exact(const Graph& g, int cap = 22);

struct CheegerSandwich {
    double lower = 0; // (d - lambda2)/2
    double h = 0;
    double upper = 0; // sqrt(2d(d - lambda2))
    bool pass = false;
};

// Checks (d-lambda2)/2 <= h(G) <= sqrt(2d(d-lambda2)) within 1e-9.
// Requires a regular connected graph within the cheeger_exact cap.
CheegerSandwich cheeger_sandwich_check(const Graph& g);

// d / (2 (d - lambda2)); degenerate_error when lambda2 = d (disconnected).
double classical_gamma(const Graph& g);

} // namespace sgl
