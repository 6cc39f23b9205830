// coherence.hpp — coherence quantifiers in the computational product basis

#pragma once

#include "qcoh/bloch.hpp"
#include "qcoh/matops.hpp"

#include <utility>
#include <vector>

namespace qcoh {

// Full dephasing in the reference basis: off-diagonal entries zeroed,
// diagonal preserved. Idempotent, and the closest incoherent state under
// the Hilbert-Schmidt distance.
DensityMatrix dephase(const DensityMatrix& rho);

// Rescaled Bloch components at the coherence indices (those touching a
// symmetric or antisymmetric generator). Length d(d-1); its squared norm
// equals the off-diagonal mass sum_{i != j} |rho_ij|^2.
struct CoherenceVector {
    std::vector<int> dims;
    std::vector<std::pair<MultiIndex, double>> entries;

    double norm() const;
};

CoherenceVector coherence_vector(const DensityMatrix& rho);

// Hilbert-Schmidt coherence: minimum HS distance to the incoherent states,
// attained at dephase(rho); computed as the coherence-vector norm.
double hsc(const DensityMatrix& rho);

// l1-norm coherence: sum of |rho_ij| over i != j.
double l1c(const DensityMatrix& rho);

// Relative entropy of coherence S(dephase(rho)) - S(rho), in bits; clamped
// to zero at rounding-level negatives.
double rec(const DensityMatrix& rho);

// Closed-form qubit REC from the diagonal mean a and the l1 coherence c:
//   H2((1+a)/2) - H2((1+G)/2),  G = sqrt(a^2 + c^2),
// with H2 the binary entropy in bits. (a, c) outside the Bloch ball is
// rejected.
double qubit_rec_closed(double a, double c);

struct CoherenceReport {
    double c_hs = 0.0;
    double c_l1 = 0.0;
    double c_re = 0.0;
};

CoherenceReport coherence_report(const DensityMatrix& rho);

// Split of the squared two-qubit HSC into the part carried by single-qubit
// (identity-paired) components and the remainder:
//   local = sum over kappa in {sym, anti} of R^2_(Id,kappa) + R^2_(kappa,Id)
//   nonlocal = hsc^2 - local
struct TwoQubitSplit {
    double local = 0.0;
    double nonlocal = 0.0;
};

TwoQubitSplit two_qubit_split(const DensityMatrix& rho);

// Closed forms for two copies rho_qb ⊗ rho_qb of a qubit with diagonal mean
// a and squared HSC c2:
//   c2_local = c2,  c2_nonlocal = c2 (a^2 + c2),
//   c_l1_pair = (1 + sqrt(2 c2))^2 - 1.
// Requires a^2 + 2 c2 <= 1.
struct TwoCopyCoherences {
    double c2_local = 0.0;
    double c2_nonlocal = 0.0;
    double c_l1_pair = 0.0;
};

TwoCopyCoherences two_copy_closed_forms(double a, double c2);

// The qubit-REC curve at fixed l1 coherence: a sweeps the cylinder
// [-sqrt(1-c^2), +sqrt(1-c^2)] in `steps` uniform points (a single row at
// a = 0 when the range degenerates, i.e. c_l1 = 1). bloch_norm is
// sqrt(a^2 + c^2).
struct RecCurveRow {
    double a = 0.0;
    double c_re = 0.0;
    double bloch_norm = 0.0;
};

std::vector<RecCurveRow> rec_curve(double c_l1, int steps);

}  // namespace qcoh
