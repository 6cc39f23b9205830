#include "qcoh/coherence.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace qcoh {

DensityMatrix dephase(const DensityMatrix& rho) {
    ComplexMatrix m = ComplexMatrix::Zero(rho.side(), rho.side());
    m.diagonal() = rho.mat().diagonal();
    return DensityMatrix(rho.dims(), std::move(m));
}

double CoherenceVector::norm() const {
    double sq = 0.0;
    for (const auto& [mi, comp] : entries) sq += comp * comp;
    return std::sqrt(sq);
}

CoherenceVector coherence_vector(const DensityMatrix& rho) {
    const ProductBasis& pb = product_basis(rho.dims());
    const BlochVector v = to_bloch(rho);
    CoherenceVector c;
    c.dims = rho.dims();
    c.entries.reserve(static_cast<std::size_t>(rho.side()) * (rho.side() - 1));
    for (std::size_t i = 0; i < pb.size(); ++i)
        if (pb.coherence(i)) c.entries.emplace_back(pb.indices()[i], v.rescaled[i]);
    return c;
}

double hsc(const DensityMatrix& rho) { return coherence_vector(rho).norm(); }

double l1c(const DensityMatrix& rho) {
    return rho.mat().cwiseAbs().sum() - rho.mat().diagonal().cwiseAbs().sum();
}

double rec(const DensityMatrix& rho) {
    return std::max(0.0, vn_entropy(dephase(rho)) - vn_entropy(rho));
}

namespace {

// binary entropy in bits, with 0 log 0 = 0
double h2(double x) {
    double s = 0.0;
    if (x > 0.0) s -= x * std::log2(x);
    if (x < 1.0) s -= (1.0 - x) * std::log2(1.0 - x);
    return s;
}

}  // namespace

double qubit_rec_closed(double a, double c) {
    if (c < 0.0 || a * a + c * c > 1.0 + 1e-12)
        throw std::invalid_argument(
            "qubit_rec_closed: (a, c) lies outside the Bloch ball");
    const double g = std::min(1.0, std::sqrt(a * a + c * c));
    return h2(0.5 * (1.0 + a)) - h2(0.5 * (1.0 + g));
}

CoherenceReport coherence_report(const DensityMatrix& rho) {
    return {hsc(rho), l1c(rho), rec(rho)};
}

TwoQubitSplit two_qubit_split(const DensityMatrix& rho) {
    if (rho.dims() != std::vector<int>{2, 2})
        throw std::invalid_argument("two_qubit_split: state must have dims [2,2]");
    const BlochVector v = to_bloch(rho);
    // qubit flat order: 0 identity, 1 diagonal, 2 symmetric, 3 antisymmetric;
    // flat position of (j1, j2) is 4*j1 + j2
    const auto at = [&](int j1, int j2) { return v.rescaled[4 * j1 + j2]; };
    TwoQubitSplit split;
    for (int kappa : {2, 3})
        split.local += at(0, kappa) * at(0, kappa) + at(kappa, 0) * at(kappa, 0);
    const double total = hsc(rho);
    split.nonlocal = total * total - split.local;
    return split;
}

TwoCopyCoherences two_copy_closed_forms(double a, double c2) {
    if (c2 < 0.0 || a * a + 2.0 * c2 > 1.0 + 1e-12)
        throw std::invalid_argument(
            "two_copy_closed_forms: (a, c2) lies outside the Bloch ball");
    TwoCopyCoherences out;
    out.c2_local = c2;
    out.c2_nonlocal = c2 * (a * a + c2);
    const double root = 1.0 + std::sqrt(2.0 * c2);
    out.c_l1_pair = root * root - 1.0;
    return out;
}

std::vector<RecCurveRow> rec_curve(double c_l1, int steps) {
    if (c_l1 < 0.0 || c_l1 > 1.0)
        throw std::invalid_argument("rec_curve: c_l1 must lie in [0, 1]");
    if (steps < 2) throw std::invalid_argument("rec_curve: steps must be >= 2");
    const double hi = std::sqrt(std::max(0.0, 1.0 - c_l1 * c_l1));
    std::vector<RecCurveRow> rows;
    if (hi < 1e-15) {
        rows.push_back({0.0, qubit_rec_closed(0.0, c_l1), c_l1});
        return rows;
    }
    rows.reserve(static_cast<std::size_t>(steps));
    for (int k = 0; k < steps; ++k) {
        const double a = -hi + 2.0 * hi * k / (steps - 1);
        rows.push_back({a, qubit_rec_closed(a, c_l1),
                        std::sqrt(a * a + c_l1 * c_l1)});
    }
    return rows;
}

}  // namespace qcoh
