// nmutp.hpp — non-monotonicity of the HS distance under tensor products

#pragma once

#include "qcoh/matops.hpp"

#include <cstdint>

namespace qcoh {

struct Quartet {
    DensityMatrix rho;
    DensityMatrix sigma;
    DensityMatrix xi;
    DensityMatrix eta;
};

// d_hs(rho ⊗ rho, sigma ⊗ sigma) without building the d^2-side matrices:
// sqrt(Tr(rho^2)^2 + Tr(sigma^2)^2 - 2 Tr(rho sigma)^2).
double hsd_tensor_power(const DensityMatrix& rho, const DensityMatrix& sigma);

// True iff the quartet's distance ordering flips under two-copy tensor
// powers, i.e. (d1 - d2)(D1 - D2) < 0 with d1 = d(rho,sigma),
// d2 = d(xi,eta) and D1, D2 the tensor-power distances. Counted
// symmetrically (a flip in either direction counts once); differences
// within 1e-12 are ties and never count.
bool is_inverted(const Quartet& q);

enum class QuartetKind { Generic, Pure, CollinearQubit };

// Quartet for Monte Carlo sample `index` of stream `seed`: four Ginibre
// states (Generic), four Haar pure states (Pure), or four commuting qubit
// states with Bloch vectors on one random axis (CollinearQubit, d = 2 only).
Quartet sample_quartet(int d, std::uint64_t seed, std::uint64_t index,
                       QuartetKind kind = QuartetKind::Generic);

struct NmutpEstimate {
    int dim = 0;
    long long samples = 0;
    long long hits = 0;
    double percent = 0.0;
    std::uint64_t seed = 0;
};

// Fraction of random quartets showing the inversion. Every sample draws its
// own substream from (seed, index), so the result is bit-identical for any
// worker count.
NmutpEstimate estimate(int d, long long samples, std::uint64_t seed,
                       int workers, QuartetKind kind = QuartetKind::Generic);

// Fixed two-qubit scenario in which the less coherent single-qubit state
// yields the more coherent two-copy state. All four coherences are computed
// directly on the 4x4 tensor products; construction also verifies
// d_hs(x ⊗ x, dephase(x) ⊗ dephase(x)) against the two-copy coherence.
struct InversionDemo {
    double c_rho = 0.0;
    double c_xi = 0.0;
    double c_rhorho = 0.0;
    double c_xixi = 0.0;
    bool inverted = false;
};

InversionDemo coherence_inversion_demo();

}  // namespace qcoh
