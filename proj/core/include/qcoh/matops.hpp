// matops.hpp — dense complex matrix primitives, spectra, and random density matrices

#pragma once

#include <Eigen/Dense>

#include <complex>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace qcoh {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;

// Validation tolerances (double precision, matrix side <= ~100).
inline constexpr double kHermTol = 1e-12;
inline constexpr double kTraceTol = 1e-12;
inline constexpr double kPsdTol = 1e-10;
inline constexpr double kEigClamp = 1e-12;

// Outcome of the density-matrix invariant checks.
struct StateCheck {
    double herm_residual = 0.0;   // max |m_ij - conj(m_ji)|
    double trace_residual = 0.0;  // |Tr m - 1|
    double min_eigenvalue = 0.0;

    bool hermitian() const { return herm_residual <= kHermTol; }
    bool unit_trace() const { return trace_residual <= kTraceTol; }
    bool positive() const { return min_eigenvalue >= -kPsdTol; }
    bool ok() const { return hermitian() && unit_trace() && positive(); }

    // Name of the first violated invariant ("hermiticity", "trace",
    // "positivity"), or empty when all hold.
    std::string violation() const;
};

StateCheck check_state(const ComplexMatrix& m);

/// A quantum state: Hermitian, unit-trace, positive-semidefinite matrix over
/// subsystems of dimensions `dims` (side = product of dims). The constructor
/// enforces the invariants and throws std::invalid_argument naming the first
/// violated one.
class DensityMatrix {
  public:
    DensityMatrix(std::vector<int> dims, ComplexMatrix mat);

    const std::vector<int>& dims() const { return dims_; }
    const ComplexMatrix& mat() const { return mat_; }
    int side() const { return static_cast<int>(mat_.rows()); }
    const StateCheck& check() const { return check_; }

  private:
    std::vector<int> dims_;
    ComplexMatrix mat_;
    StateCheck check_;
};

// Kronecker product with block-lexicographic index fusion:
// (a ⊗ b)_{(ik)(jl)} = a_ij * b_kl.
ComplexMatrix tensor(const ComplexMatrix& a, const ComplexMatrix& b);

// All eigenvalues of a Hermitian matrix, ascending. Non-Hermitian input
// (residual above kHermTol) is rejected with a diagnostic.
std::vector<double> hermitian_eigenvalues(const ComplexMatrix& m);

// von Neumann entropy S = -sum lambda log2 lambda, in bits; eigenvalues below
// kEigClamp are treated as exact zeros.
double vn_entropy(const DensityMatrix& rho);

double purity(const DensityMatrix& rho);  // Tr(rho^2), in [1/d, 1]

// ------------------------- seeded random states ------------------------------

using RngStream = std::mt19937_64;

// Independent stream for (seed, index); distinct indices give decorrelated
// streams, so samples can be drawn in any order or from any worker.
RngStream substream(std::uint64_t seed, std::uint64_t index);

// Ginibre construction rho = G G^dag / Tr(G G^dag) with i.i.d. standard
// complex Gaussian entries (Hilbert-Schmidt measure). Deterministic for a
// given stream state.
DensityMatrix random_density(int d, RngStream& rng);

// Haar-random pure state |psi><psi|.
DensityMatrix random_pure(int d, RngStream& rng);

}  // namespace qcoh
