#pragma once

#include <vector>

#include "rainbow/graph.hpp"

namespace rainbow {

/// Eigenvalues of a symmetric matrix, ascending, via cyclic Jacobi rotations.
/// Sweeps until the off-diagonal Frobenius norm drops below tol; throws
/// ConvergenceFailure after max_sweeps.
std::vector<double> jacobi_eigenvalues(Matrix a, double tol = 1e-10, int max_sweeps = 100);

/// Second-smallest eigenvalue of a Laplacian matrix (algebraic connectivity).
double lambda2(const Matrix& l);
double lambda2(const Graph& g);

}  // namespace rainbow
