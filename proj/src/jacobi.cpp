#include "rainbow/jacobi.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>

#include "rainbow/errors.hpp"

namespace rainbow {

namespace {

double offdiag_norm(const Matrix& a) {
    double s = 0.0;
    std::size_t n = a.size();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) s += a[i][j] * a[i][j];
    return std::sqrt(2.0 * s);
}

}  // namespace

std::vector<double> jacobi_eigenvalues(Matrix a, double tol, int max_sweeps) {
    std::size_t n = a.size();
    for (const auto& row : a)
        if (row.size() != n) throw InvalidSpec("jacobi needs a square matrix");
    if (n == 0) return {};
    if (n == 1) return {a[0][0]};

    for (int sweep = 0; sweep < max_sweeps; ++sweep) {
        if (offdiag_norm(a) < tol) {
            std::vector<double> eig(n);
            for (std::size_t i = 0; i < n; ++i) eig[i] = a[i][i];
            std::sort(eig.begin(), eig.end());
            return eig;
        }
        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                double apq = a[p][q];
                if (apq == 0.0) continue;
                double theta = (a[q][q] - a[p][p]) / (2.0 * apq);
                // stable tan computation, smaller root
                double t = (theta >= 0.0 ? 1.0 : -1.0) /
                           (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                double c = 1.0 / std::sqrt(t * t + 1.0);
                double s = t * c;

                for (std::size_t k = 0; k < n; ++k) {
                    double akp = a[k][p];
                    double akq = a[k][q];
                    a[k][p] = c * akp - s * akq;
                    a[k][q] = s * akp + c * akq;
                }
                for (std::size_t k = 0; k < n; ++k) {
                    double apk = a[p][k];
                    double aqk = a[q][k];
                    a[p][k] = c * apk - s * aqk;
                    a[q][k] = s * apk + c * aqk;
                }
            }
        }
    }
    if (offdiag_norm(a) < tol) {
        std::vector<double> eig(n);
        for (std::size_t i = 0; i < n; ++i) eig[i] = a[i][i];
        std::sort(eig.begin(), eig.end());
        return eig;
    }
    throw ConvergenceFailure("jacobi did not converge");
}

double lambda2(const Matrix& l) {
    if (l.size() < 2) throw InvalidSpec("lambda2 needs at least a 2x2 matrix");
    std::vector<double> eig = jacobi_eigenvalues(l);
    return eig[1];
}

double lambda2(const Graph& g) { return lambda2(laplacian(g)); }

}  // namespace rainbow
