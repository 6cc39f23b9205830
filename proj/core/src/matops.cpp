#include "qcoh/matops.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace qcoh {

std::string StateCheck::violation() const {
    if (!hermitian()) return "hermiticity";
    if (!unit_trace()) return "trace";
    if (!positive()) return "positivity";
    return {};
}

StateCheck check_state(const ComplexMatrix& m) {
    StateCheck c;
    c.herm_residual = (m - m.adjoint()).cwiseAbs().maxCoeff();
    c.trace_residual = std::abs(m.trace() - Complex(1.0, 0.0));
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(m, Eigen::EigenvaluesOnly);
    c.min_eigenvalue = es.eigenvalues().minCoeff();
    return c;
}

DensityMatrix::DensityMatrix(std::vector<int> dims, ComplexMatrix mat)
    : dims_(std::move(dims)), mat_(std::move(mat)) {
    if (dims_.empty())
        throw std::invalid_argument("DensityMatrix: dims must be non-empty");
    long long side = 1;
    for (int d : dims_) {
        if (d < 2)
            throw std::invalid_argument(
                "DensityMatrix: every subsystem dimension must be >= 2");
        side *= d;
    }
    if (mat_.rows() != mat_.cols() || mat_.rows() != side) {
        std::ostringstream os;
        os << "DensityMatrix: matrix is " << mat_.rows() << "x" << mat_.cols()
           << " but dims require side " << side;
        throw std::invalid_argument(os.str());
    }
    check_ = check_state(mat_);
    if (!check_.ok()) {
        std::ostringstream os;
        os << "DensityMatrix: " << check_.violation() << " invariant violated"
           << " (hermiticity residual " << check_.herm_residual
           << ", trace residual " << check_.trace_residual
           << ", min eigenvalue " << check_.min_eigenvalue << ")";
        throw std::invalid_argument(os.str());
    }
}

ComplexMatrix tensor(const ComplexMatrix& a, const ComplexMatrix& b) {
    ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i)
        for (Eigen::Index j = 0; j < a.cols(); ++j)
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) =
                a(i, j) * b;
    return out;
}

std::vector<double> hermitian_eigenvalues(const ComplexMatrix& m) {
    if (m.rows() != m.cols())
        throw std::invalid_argument("hermitian_eigenvalues: matrix not square");
    const double residual = (m - m.adjoint()).cwiseAbs().maxCoeff();
    if (residual > kHermTol) {
        std::ostringstream os;
        os << "hermitian_eigenvalues: matrix is not Hermitian (residual "
           << residual << ")";
        throw std::invalid_argument(os.str());
    }
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(m, Eigen::EigenvaluesOnly);
    const auto& ev = es.eigenvalues();
    return std::vector<double>(ev.data(), ev.data() + ev.size());
}

double vn_entropy(const DensityMatrix& rho) {
    double s = 0.0;
    for (double lam : hermitian_eigenvalues(rho.mat()))
        if (lam > kEigClamp) s -= lam * std::log2(lam);
    return s;
}

double purity(const DensityMatrix& rho) { return rho.mat().squaredNorm(); }

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

}  // namespace

RngStream substream(std::uint64_t seed, std::uint64_t index) {
    return RngStream(splitmix64(splitmix64(seed) ^ splitmix64(index)));
}

DensityMatrix random_density(int d, RngStream& rng) {
    if (d < 2) throw std::invalid_argument("random_density: d must be >= 2");
    std::normal_distribution<double> normal;
    ComplexMatrix g(d, d);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
            const double re = normal(rng);
            const double im = normal(rng);
            g(i, j) = Complex(re, im);
        }
    ComplexMatrix w = g * g.adjoint();
    w /= w.trace().real();
    return DensityMatrix({d}, std::move(w));
}

DensityMatrix random_pure(int d, RngStream& rng) {
    if (d < 2) throw std::invalid_argument("random_pure: d must be >= 2");
    std::normal_distribution<double> normal;
    Eigen::VectorXcd psi(d);
    for (int i = 0; i < d; ++i) {
        const double re = normal(rng);
        const double im = normal(rng);
        psi(i) = Complex(re, im);
    }
    psi.normalize();
    return DensityMatrix({d}, psi * psi.adjoint());
}

}  // namespace qcoh
