#include "qcoh/gellmann.hpp"

#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>

namespace qcoh {

GeneratorBasis::GeneratorBasis(int d) : dim_(d) {
    if (d < 2)
        throw std::invalid_argument("build_basis: dimension must be >= 2");
    const auto n = static_cast<std::size_t>(d) * static_cast<std::size_t>(d);
    cls_.reserve(n);
    gens_.reserve(n);

    cls_.push_back({GenKind::Identity, 0, 0, 0});
    gens_.push_back(ComplexMatrix::Identity(d, d));

    // Diagonal set: sqrt(2/(j(j+1))) (|1><1| + ... + |j><j| - j |j+1><j+1|)
    for (int j = 1; j <= d - 1; ++j) {
        const double coeff = std::sqrt(2.0 / (static_cast<double>(j) * (j + 1)));
        ComplexMatrix m = ComplexMatrix::Zero(d, d);
        for (int k = 1; k <= j; ++k) m(k - 1, k - 1) = coeff;
        m(j, j) = -static_cast<double>(j) * coeff;
        cls_.push_back({GenKind::Diagonal, j, 0, 0});
        gens_.push_back(std::move(m));
    }

    // Symmetric set: |k><l| + |l><k|
    for (int k = 1; k <= d; ++k)
        for (int l = k + 1; l <= d; ++l) {
            ComplexMatrix m = ComplexMatrix::Zero(d, d);
            m(k - 1, l - 1) = 1.0;
            m(l - 1, k - 1) = 1.0;
            cls_.push_back({GenKind::Symmetric, 0, k, l});
            gens_.push_back(std::move(m));
        }

    // Antisymmetric set: -i(|k><l| - |l><k|)
    for (int k = 1; k <= d; ++k)
        for (int l = k + 1; l <= d; ++l) {
            ComplexMatrix m = ComplexMatrix::Zero(d, d);
            m(k - 1, l - 1) = Complex(0.0, -1.0);
            m(l - 1, k - 1) = Complex(0.0, 1.0);
            cls_.push_back({GenKind::Antisymmetric, 0, k, l});
            gens_.push_back(std::move(m));
        }
}

GeneratorBasis build_basis(int d) { return GeneratorBasis(d); }

const GeneratorBasis& generator_basis(int d) {
    static std::mutex mtx;
    static std::map<int, std::unique_ptr<GeneratorBasis>> cache;
    std::lock_guard<std::mutex> lock(mtx);
    auto& slot = cache[d];
    if (!slot) slot = std::make_unique<GeneratorBasis>(d);
    return *slot;
}

std::vector<MultiIndex> multi_index_space(const std::vector<int>& dims) {
    if (dims.empty())
        throw std::invalid_argument("multi_index_space: dims must be non-empty");
    std::size_t total = 1;
    for (int d : dims) {
        if (d < 2)
            throw std::invalid_argument(
                "multi_index_space: every dimension must be >= 2");
        total *= static_cast<std::size_t>(d) * static_cast<std::size_t>(d);
    }
    std::vector<MultiIndex> out;
    out.reserve(total);
    MultiIndex mi(dims.size(), 0);
    for (std::size_t pos = 0; pos < total; ++pos) {
        out.push_back(mi);
        // mixed-radix increment, last subsystem fastest
        for (std::size_t s = dims.size(); s-- > 0;) {
            if (++mi[s] < dims[s] * dims[s]) break;
            mi[s] = 0;
        }
    }
    return out;
}

bool is_coherence_index(const std::vector<int>& dims, const MultiIndex& mi) {
    if (mi.size() != dims.size())
        throw std::invalid_argument(
            "is_coherence_index: multi-index length does not match dims");
    for (std::size_t s = 0; s < dims.size(); ++s) {
        const int span = dims[s] * dims[s];
        if (mi[s] < 0 || mi[s] >= span)
            throw std::invalid_argument(
                "is_coherence_index: component out of range");
        // flat positions at or past d select symmetric/antisymmetric generators
        if (mi[s] >= dims[s]) return true;
    }
    return false;
}

}  // namespace qcoh
