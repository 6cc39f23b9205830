// channels.hpp — qutrit phase/amplitude damping and coherence dynamics sweeps

#pragma once

#include "qcoh/matops.hpp"

#include <vector>

namespace qcoh {

enum class ChannelKind { PD, AD, Custom };

// Kraus representation of a channel; completeness sum K^dag K = I is
// enforced (within kHermTol) on construction through make_channel.
struct KrausChannel {
    int dim = 0;
    std::vector<ComplexMatrix> kraus;
    ChannelKind label = ChannelKind::Custom;
};

KrausChannel make_channel(int dim, std::vector<ComplexMatrix> kraus,
                          ChannelKind label = ChannelKind::Custom);

// Phase damping at parametrized time p in [0,1]:
//   K0 = sqrt(1-p) I3,  K_j = sqrt(p) |j><j|  (j = 1..3).
KrausChannel pd_channel(double p);

// Amplitude damping at p in [0,1]:
//   K0 = |1><1| + sqrt(1-p)(|2><2| + |3><3|),
//   K1 = sqrt(p)|1><2|,  K2 = sqrt(p)|1><3|.
KrausChannel ad_channel(double p);

DensityMatrix apply(const KrausChannel& ch, const DensityMatrix& rho);

// The qutrit family rho_w = (1-w) I3/3 + w |psi><psi| with
// |psi> = (|1> + |2> + |3>)/sqrt(3): diagonal 1/3, off-diagonal w/3.
DensityMatrix rho_w(double w);

// Off-diagonal-pair mean values of a qutrit state,
// s_kl = <Gamma^s_(k,l)>, a_kl = <Gamma^a_(k,l)>.
struct QutritMeans {
    double s12 = 0.0, a12 = 0.0;
    double s13 = 0.0, a13 = 0.0;
    double s23 = 0.0, a23 = 0.0;
};

QutritMeans qutrit_means(const DensityMatrix& rho);

// Closed-form coherences of the amplitude-damped state at time p, from the
// initial mean values:
//   c_l1 = sqrt(1-p) (sqrt(s12^2+a12^2) + sqrt(s13^2+a13^2))
//          + (1-p) sqrt(s23^2+a23^2)
//   c_hs = 2^{-1/2} sqrt((1-p)(s12^2+a12^2+s13^2+a13^2)
//          + (1-p)^2 (s23^2+a23^2))
struct AdCoherences {
    double c_l1 = 0.0;
    double c_hs = 0.0;
};

AdCoherences ad_coherence_closed(double p, const QutritMeans& m);

struct SweepRow {
    double p = 0.0;
    double c_hs = 0.0;
    double c_l1 = 0.0;
    double c_re = 0.0;
};

struct SweepResult {
    std::vector<SweepRow> rows;
};

// Coherences of the evolved state on the uniform grid p = k/(steps-1),
// k = 0..steps-1, for the PD or AD family.
SweepResult sweep(ChannelKind family, const DensityMatrix& rho0, int steps);

}  // namespace qcoh
