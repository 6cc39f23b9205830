// gellmann.hpp — generalized Gell-Mann generator bases and multi-index bookkeeping

#pragma once

#include "qcoh/matops.hpp"

#include <cstddef>
#include <vector>

namespace qcoh {

enum class GenKind { Identity, Diagonal, Symmetric, Antisymmetric };

// Classification of one generator. Indices are 1-based as in the defining
// formulas: Diagonal(j) with 1 <= j <= d-1, Symmetric/Antisymmetric(k,l)
// with 1 <= k < l <= d.
struct GeneratorClass {
    GenKind kind = GenKind::Identity;
    int j = 0;
    int k = 0;
    int l = 0;
};

/// The d^2 Hermitian generators for one subsystem of dimension d, in the
/// canonical flat order: identity; Diagonal(1..d-1); Symmetric(k,l) in
/// lexicographic (k,l); Antisymmetric(k,l) in lexicographic (k,l).
/// Position 0 is the identity; flat positions below d are exactly the
/// identity-or-diagonal (incoherent) generators.
///
/// Trace orthogonality: Tr(G_j G_k) = d^{delta_0j} 2^{1-delta_0j} delta_jk.
class GeneratorBasis {
  public:
    explicit GeneratorBasis(int d);

    int dim() const { return dim_; }
    std::size_t size() const { return gens_.size(); }  // d^2
    const GeneratorClass& cls(std::size_t i) const { return cls_[i]; }
    const ComplexMatrix& gen(std::size_t i) const { return gens_[i]; }

  private:
    int dim_;
    std::vector<GeneratorClass> cls_;
    std::vector<ComplexMatrix> gens_;
};

GeneratorBasis build_basis(int d);

// Interned, immutable basis shared across threads.
const GeneratorBasis& generator_basis(int d);

// Flat per-subsystem generator indices (0-based into the canonical order).
using MultiIndex = std::vector<int>;

// Lexicographic product of the per-subsystem generator orders; length is the
// product of d_s^2 and position 0 is the all-identity index.
std::vector<MultiIndex> multi_index_space(const std::vector<int>& dims);

// True iff at least one component selects a symmetric or antisymmetric
// generator. Over the whole space exactly d(d-1) indices are true,
// d = product of dims.
bool is_coherence_index(const std::vector<int>& dims, const MultiIndex& mi);

}  // namespace qcoh
