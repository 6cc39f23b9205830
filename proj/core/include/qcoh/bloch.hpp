// bloch.hpp — Bloch-vector parametrization and the Hilbert-Schmidt distance

#pragma once

#include "qcoh/gellmann.hpp"
#include "qcoh/matops.hpp"

#include <cstddef>
#include <vector>

namespace qcoh {

/// Tensor-product generator basis for a list of subsystem dimensions:
/// the multi-index space, the product generators G_i = Gamma_{j1} ⊗ ... ⊗
/// Gamma_{jn}, their normalizations Tr(G_i^2) and coherence flags.
class ProductBasis {
  public:
    explicit ProductBasis(std::vector<int> dims);

    const std::vector<int>& dims() const { return dims_; }
    int side() const { return side_; }
    std::size_t size() const { return indices_.size(); }  // prod d_s^2
    const std::vector<MultiIndex>& indices() const { return indices_; }
    const ComplexMatrix& generator(std::size_t i) const { return gens_[i]; }

    // Tr(G_i^2) = 2^{n - sum delta_0js} * prod d_s^{delta_0js}
    double normalization(std::size_t i) const { return norms_[i]; }
    bool coherence(std::size_t i) const { return coherence_[i]; }

  private:
    std::vector<int> dims_;
    int side_;
    std::vector<MultiIndex> indices_;
    std::vector<ComplexMatrix> gens_;
    std::vector<double> norms_;
    std::vector<char> coherence_;
};

// Interned, immutable product basis; safe for shared concurrent reads.
const ProductBasis& product_basis(const std::vector<int>& dims);

// Bloch components of a state, in the flat order of product_basis(dims):
//   mean[i]     = Tr(rho G_i)            (observable mean values)
//   r[i]        = mean[i] / Tr(G_i^2)    (expansion coefficients)
//   rescaled[i] = mean[i] / sqrt(Tr(G_i^2))
// The all-identity components are r[0] = 1/d and rescaled[0] = 1/sqrt(d).
struct BlochVector {
    std::vector<int> dims;
    std::vector<double> mean;
    std::vector<double> r;
    std::vector<double> rescaled;
};

BlochVector to_bloch(const DensityMatrix& rho);

// Reconstruction rho = sum_i r_i G_i. Arbitrary Bloch vectors may leave the
// state set, so the result carries the invariant-check outcome instead of
// enforcing it.
struct BlochReconstruction {
    std::vector<int> dims;
    ComplexMatrix mat;
    StateCheck check;

    bool valid() const { return check.ok(); }
    DensityMatrix to_density() const;  // throws when the checks failed
};

BlochReconstruction from_bloch(const BlochVector& v);

// Hilbert-Schmidt distance sqrt(Tr(rho - zeta)^2), by the trace route.
double hsd_direct(const DensityMatrix& rho, const DensityMatrix& zeta);

// The same distance as the Euclidean norm of the rescaled Bloch-vector
// difference; agrees with hsd_direct within 1e-10.
double hsd_bloch(const DensityMatrix& rho, const DensityMatrix& zeta);

// Qubit state from its generator mean values (diagonal, symmetric,
// antisymmetric); rejects points outside the Bloch ball via the invariant
// checks.
DensityMatrix qubit_from_means(double d_mean, double s_mean, double a_mean);

}  // namespace qcoh
