#include "qcoh/bloch.hpp"

#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace qcoh {

ProductBasis::ProductBasis(std::vector<int> dims) : dims_(std::move(dims)) {
    indices_ = multi_index_space(dims_);
    long long side = 1;
    for (int d : dims_) side *= d;
    side_ = static_cast<int>(side);

    gens_.reserve(indices_.size());
    norms_.reserve(indices_.size());
    coherence_.reserve(indices_.size());
    for (const MultiIndex& mi : indices_) {
        ComplexMatrix g = generator_basis(dims_[0]).gen(mi[0]);
        for (std::size_t s = 1; s < dims_.size(); ++s)
            g = tensor(g, generator_basis(dims_[s]).gen(mi[s]));
        gens_.push_back(std::move(g));

        double norm = 1.0;
        for (std::size_t s = 0; s < dims_.size(); ++s)
            norm *= (mi[s] == 0) ? static_cast<double>(dims_[s]) : 2.0;
        norms_.push_back(norm);
        coherence_.push_back(is_coherence_index(dims_, mi) ? 1 : 0);
    }
}

const ProductBasis& product_basis(const std::vector<int>& dims) {
    static std::mutex mtx;
    static std::map<std::vector<int>, std::unique_ptr<ProductBasis>> cache;
    std::lock_guard<std::mutex> lock(mtx);
    auto& slot = cache[dims];
    if (!slot) slot = std::make_unique<ProductBasis>(dims);
    return *slot;
}

BlochVector to_bloch(const DensityMatrix& rho) {
    const ProductBasis& pb = product_basis(rho.dims());
    BlochVector v;
    v.dims = rho.dims();
    v.mean.resize(pb.size());
    v.r.resize(pb.size());
    v.rescaled.resize(pb.size());
    for (std::size_t i = 0; i < pb.size(); ++i) {
        const Complex t = (rho.mat() * pb.generator(i)).trace();
        if (std::abs(t.imag()) > 1e-10) {
            std::ostringstream os;
            os << "to_bloch: mean value has imaginary residue " << t.imag();
            throw std::invalid_argument(os.str());
        }
        v.mean[i] = t.real();
        v.r[i] = t.real() / pb.normalization(i);
        v.rescaled[i] = t.real() / std::sqrt(pb.normalization(i));
    }
    return v;
}

DensityMatrix BlochReconstruction::to_density() const {
    if (!check.ok())
        throw std::invalid_argument(
            "BlochReconstruction: " + check.violation() + " invariant violated");
    return DensityMatrix(dims, mat);
}

BlochReconstruction from_bloch(const BlochVector& v) {
    const ProductBasis& pb = product_basis(v.dims);
    if (v.r.size() != pb.size()) {
        std::ostringstream os;
        os << "from_bloch: expected " << pb.size() << " components, got "
           << v.r.size();
        throw std::invalid_argument(os.str());
    }
    ComplexMatrix m = ComplexMatrix::Zero(pb.side(), pb.side());
    for (std::size_t i = 0; i < pb.size(); ++i)
        m += v.r[i] * pb.generator(i);
    BlochReconstruction rec;
    rec.dims = v.dims;
    rec.check = check_state(m);
    rec.mat = std::move(m);
    return rec;
}

namespace {

void require_same_dims(const DensityMatrix& a, const DensityMatrix& b,
                       const char* who) {
    if (a.dims() != b.dims())
        throw std::invalid_argument(std::string(who) +
                                    ": states have different dims");
}

}  // namespace

double hsd_direct(const DensityMatrix& rho, const DensityMatrix& zeta) {
    require_same_dims(rho, zeta, "hsd_direct");
    return (rho.mat() - zeta.mat()).norm();
}

double hsd_bloch(const DensityMatrix& rho, const DensityMatrix& zeta) {
    require_same_dims(rho, zeta, "hsd_bloch");
    const BlochVector a = to_bloch(rho);
    const BlochVector b = to_bloch(zeta);
    double sq = 0.0;
    for (std::size_t i = 0; i < a.rescaled.size(); ++i) {
        const double diff = a.rescaled[i] - b.rescaled[i];
        sq += diff * diff;
    }
    return std::sqrt(sq);
}

DensityMatrix qubit_from_means(double d_mean, double s_mean, double a_mean) {
    ComplexMatrix m(2, 2);
    m(0, 0) = Complex(0.5 * (1.0 + d_mean), 0.0);
    m(1, 1) = Complex(0.5 * (1.0 - d_mean), 0.0);
    m(0, 1) = Complex(0.5 * s_mean, -0.5 * a_mean);
    m(1, 0) = Complex(0.5 * s_mean, 0.5 * a_mean);
    return DensityMatrix({2}, std::move(m));
}

}  // namespace qcoh
