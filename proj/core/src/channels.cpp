#include "qcoh/channels.hpp"

#include "qcoh/coherence.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace qcoh {

KrausChannel make_channel(int dim, std::vector<ComplexMatrix> kraus,
                          ChannelKind label) {
    if (dim < 2) throw std::invalid_argument("make_channel: dim must be >= 2");
    if (kraus.empty())
        throw std::invalid_argument("make_channel: at least one Kraus operator");
    ComplexMatrix sum = ComplexMatrix::Zero(dim, dim);
    for (const ComplexMatrix& k : kraus) {
        if (k.rows() != dim || k.cols() != dim)
            throw std::invalid_argument("make_channel: Kraus operator size mismatch");
        sum += k.adjoint() * k;
    }
    const double residual =
        (sum - ComplexMatrix::Identity(dim, dim)).cwiseAbs().maxCoeff();
    if (residual > kHermTol) {
        std::ostringstream os;
        os << "make_channel: completeness violated (residual " << residual << ")";
        throw std::invalid_argument(os.str());
    }
    return {dim, std::move(kraus), label};
}

namespace {

void require_p(double p, const char* who) {
    if (!(p >= 0.0 && p <= 1.0))
        throw std::invalid_argument(std::string(who) + ": p must lie in [0, 1]");
}

}  // namespace

KrausChannel pd_channel(double p) {
    require_p(p, "pd_channel");
    std::vector<ComplexMatrix> ks;
    ks.push_back(std::sqrt(1.0 - p) * ComplexMatrix::Identity(3, 3));
    for (int j = 0; j < 3; ++j) {
        ComplexMatrix k = ComplexMatrix::Zero(3, 3);
        k(j, j) = std::sqrt(p);
        ks.push_back(std::move(k));
    }
    return make_channel(3, std::move(ks), ChannelKind::PD);
}

KrausChannel ad_channel(double p) {
    require_p(p, "ad_channel");
    std::vector<ComplexMatrix> ks;
    ComplexMatrix k0 = ComplexMatrix::Zero(3, 3);
    k0(0, 0) = 1.0;
    k0(1, 1) = std::sqrt(1.0 - p);
    k0(2, 2) = std::sqrt(1.0 - p);
    ks.push_back(std::move(k0));
    ComplexMatrix k1 = ComplexMatrix::Zero(3, 3);
    k1(0, 1) = std::sqrt(p);
    ks.push_back(std::move(k1));
    ComplexMatrix k2 = ComplexMatrix::Zero(3, 3);
    k2(0, 2) = std::sqrt(p);
    ks.push_back(std::move(k2));
    return make_channel(3, std::move(ks), ChannelKind::AD);
}

DensityMatrix apply(const KrausChannel& ch, const DensityMatrix& rho) {
    if (rho.side() != ch.dim)
        throw std::invalid_argument("apply: channel and state dimensions differ");
    ComplexMatrix out = ComplexMatrix::Zero(ch.dim, ch.dim);
    for (const ComplexMatrix& k : ch.kraus) out += k * rho.mat() * k.adjoint();
    return DensityMatrix(rho.dims(), std::move(out));
}

DensityMatrix rho_w(double w) {
    if (!(w >= 0.0 && w <= 1.0))
        throw std::invalid_argument("rho_w: w must lie in [0, 1]");
    ComplexMatrix m = ComplexMatrix::Constant(3, 3, Complex(w / 3.0, 0.0));
    m.diagonal().setConstant(Complex(1.0 / 3.0, 0.0));
    return DensityMatrix({3}, std::move(m));
}

QutritMeans qutrit_means(const DensityMatrix& rho) {
    if (rho.side() != 3 || rho.dims().size() != 1)
        throw std::invalid_argument("qutrit_means: state must be a single qutrit");
    const ComplexMatrix& m = rho.mat();
    // <Gamma^s_(k,l)> = 2 Re rho_kl, <Gamma^a_(k,l)> = -2 Im rho_kl for k < l
    QutritMeans out;
    out.s12 = 2.0 * m(0, 1).real();
    out.a12 = -2.0 * m(0, 1).imag();
    out.s13 = 2.0 * m(0, 2).real();
    out.a13 = -2.0 * m(0, 2).imag();
    out.s23 = 2.0 * m(1, 2).real();
    out.a23 = -2.0 * m(1, 2).imag();
    return out;
}

AdCoherences ad_coherence_closed(double p, const QutritMeans& m) {
    require_p(p, "ad_coherence_closed");
    const double q = 1.0 - p;
    const double g12 = m.s12 * m.s12 + m.a12 * m.a12;
    const double g13 = m.s13 * m.s13 + m.a13 * m.a13;
    const double g23 = m.s23 * m.s23 + m.a23 * m.a23;
    AdCoherences out;
    out.c_l1 = std::sqrt(q) * (std::sqrt(g12) + std::sqrt(g13)) + q * std::sqrt(g23);
    out.c_hs = std::sqrt(0.5 * (q * (g12 + g13) + q * q * g23));
    return out;
}

SweepResult sweep(ChannelKind family, const DensityMatrix& rho0, int steps) {
    if (family != ChannelKind::PD && family != ChannelKind::AD)
        throw std::invalid_argument("sweep: family must be PD or AD");
    if (steps < 2) throw std::invalid_argument("sweep: steps must be >= 2");
    SweepResult result;
    result.rows.reserve(static_cast<std::size_t>(steps));
    for (int k = 0; k < steps; ++k) {
        const double p = static_cast<double>(k) / (steps - 1);
        const KrausChannel ch =
            (family == ChannelKind::PD) ? pd_channel(p) : ad_channel(p);
        const DensityMatrix evolved = apply(ch, rho0);
        result.rows.push_back({p, hsc(evolved), l1c(evolved), rec(evolved)});
    }
    return result;
}

}  // namespace qcoh
