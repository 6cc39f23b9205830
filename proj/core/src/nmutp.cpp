#include "qcoh/nmutp.hpp"

#include "qcoh/bloch.hpp"
#include "qcoh/coherence.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>
#include <thread>
#include <vector>

namespace qcoh {

namespace {

// Tr(a b) for Hermitian a, b as an entry-wise sum. All three overlaps in
// hsd_tensor_power go through this one routine so that bit-identical states
// give an exact zero instead of a cancellation residue.
double hs_overlap(const ComplexMatrix& a, const ComplexMatrix& b) {
    return a.cwiseProduct(b.conjugate()).sum().real();
}

}  // namespace

double hsd_tensor_power(const DensityMatrix& rho, const DensityMatrix& sigma) {
    if (rho.dims() != sigma.dims())
        throw std::invalid_argument("hsd_tensor_power: states have different dims");
    const double pr = hs_overlap(rho.mat(), rho.mat());
    const double ps = hs_overlap(sigma.mat(), sigma.mat());
    const double cross = hs_overlap(rho.mat(), sigma.mat());
    return std::sqrt(std::max(0.0, pr * pr + ps * ps - 2.0 * cross * cross));
}

bool is_inverted(const Quartet& q) {
    const double d1 = hsd_direct(q.rho, q.sigma);
    const double d2 = hsd_direct(q.xi, q.eta);
    const double t1 = hsd_tensor_power(q.rho, q.sigma);
    const double t2 = hsd_tensor_power(q.xi, q.eta);
    constexpr double tie = 1e-12;
    if (std::abs(d1 - d2) <= tie || std::abs(t1 - t2) <= tie) return false;
    return (d1 - d2) * (t1 - t2) < 0.0;
}

namespace {

DensityMatrix collinear_qubit(double t, double nx, double ny, double nz) {
    ComplexMatrix m(2, 2);
    m(0, 0) = Complex(0.5 * (1.0 + t * nz), 0.0);
    m(1, 1) = Complex(0.5 * (1.0 - t * nz), 0.0);
    m(0, 1) = Complex(0.5 * t * nx, -0.5 * t * ny);
    m(1, 0) = Complex(0.5 * t * nx, 0.5 * t * ny);
    return DensityMatrix({2}, std::move(m));
}

}  // namespace

Quartet sample_quartet(int d, std::uint64_t seed, std::uint64_t index,
                       QuartetKind kind) {
    RngStream rng = substream(seed, index);
    switch (kind) {
        case QuartetKind::Generic:
            return {random_density(d, rng), random_density(d, rng),
                    random_density(d, rng), random_density(d, rng)};
        case QuartetKind::Pure:
            return {random_pure(d, rng), random_pure(d, rng),
                    random_pure(d, rng), random_pure(d, rng)};
        case QuartetKind::CollinearQubit: {
            if (d != 2)
                throw std::invalid_argument(
                    "sample_quartet: collinear quartets are qubit-only");
            std::normal_distribution<double> normal;
            double nx = normal(rng);
            double ny = normal(rng);
            double nz = normal(rng);
            const double len = std::sqrt(nx * nx + ny * ny + nz * nz);
            nx /= len;
            ny /= len;
            nz /= len;
            std::uniform_real_distribution<double> radius(-1.0, 1.0);
            const double t1 = radius(rng);
            const double t2 = radius(rng);
            const double t3 = radius(rng);
            const double t4 = radius(rng);
            return {collinear_qubit(t1, nx, ny, nz), collinear_qubit(t2, nx, ny, nz),
                    collinear_qubit(t3, nx, ny, nz), collinear_qubit(t4, nx, ny, nz)};
        }
    }
    throw std::logic_error("sample_quartet: unknown quartet kind");
}

NmutpEstimate estimate(int d, long long samples, std::uint64_t seed,
                       int workers, QuartetKind kind) {
    if (d < 2) throw std::invalid_argument("estimate: d must be >= 2");
    if (samples < 1) throw std::invalid_argument("estimate: samples must be >= 1");
    if (workers < 1) workers = 1;

    const auto count_range = [&](long long lo, long long hi) {
        long long hits = 0;
        for (long long i = lo; i < hi; ++i)
            if (is_inverted(sample_quartet(d, seed, static_cast<std::uint64_t>(i), kind)))
                ++hits;
        return hits;
    };

    long long hits = 0;
    if (workers == 1 || samples < 2 * workers) {
        hits = count_range(0, samples);
    } else {
        std::vector<long long> partial(static_cast<std::size_t>(workers), 0);
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(workers));
        const long long chunk = (samples + workers - 1) / workers;
        for (int w = 0; w < workers; ++w) {
            const long long lo = w * chunk;
            const long long hi = std::min(samples, lo + chunk);
            pool.emplace_back([&, w, lo, hi] { partial[static_cast<std::size_t>(w)] = count_range(lo, hi); });
        }
        for (auto& t : pool) t.join();
        for (long long h : partial) hits += h;
    }

    NmutpEstimate est;
    est.dim = d;
    est.samples = samples;
    est.hits = hits;
    est.percent = 100.0 * static_cast<double>(hits) / static_cast<double>(samples);
    est.seed = seed;
    return est;
}

InversionDemo coherence_inversion_demo() {
    // rho: <Gamma^s> = <Gamma^a> = 0.34, balanced populations;
    // xi:  <Gamma^s> = <Gamma^a> = 0.33 with population split <Gamma_1^d> = 0.7
    const DensityMatrix rho = qubit_from_means(0.0, 0.34, 0.34);
    const DensityMatrix xi = qubit_from_means(0.7, 0.33, 0.33);

    InversionDemo demo;
    demo.c_rho = hsc(rho);
    demo.c_xi = hsc(xi);

    const DensityMatrix rhorho({2, 2}, tensor(rho.mat(), rho.mat()));
    const DensityMatrix xixi({2, 2}, tensor(xi.mat(), xi.mat()));
    demo.c_rhorho = hsc(rhorho);
    demo.c_xixi = hsc(xixi);

    // the closest incoherent state of a two-copy state factorizes
    const auto check_iota = [](const DensityMatrix& pair, const DensityMatrix& one,
                               double coherence) {
        const DensityMatrix iota = dephase(one);
        const DensityMatrix iota_pair({2, 2}, tensor(iota.mat(), iota.mat()));
        const double dist = hsd_direct(pair, iota_pair);
        if (std::abs(dist - coherence) > 1e-10) {
            std::ostringstream os;
            os << "coherence_inversion_demo: factorized-incoherent distance "
               << dist << " differs from the coherence " << coherence;
            throw std::logic_error(os.str());
        }
    };
    check_iota(rhorho, rho, demo.c_rhorho);
    check_iota(xixi, xi, demo.c_xixi);

    demo.inverted = demo.c_rho > demo.c_xi && demo.c_rhorho < demo.c_xixi;
    if (!demo.inverted)
        throw std::logic_error("coherence_inversion_demo: inversion did not occur");
    return demo;
}

}  // namespace qcoh
