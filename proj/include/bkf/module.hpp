#pragma once

// Explicit finite-dimensional irreducible modules V(mu): a weight basis and
// the matrices of the Chevalley generators e_i, f_i, h_i.
//
// Two constructions are provided. The recursive one (default) builds
// V(mu) = U(n^-) v_mu weight space by weight space: a candidate f_i b is
// identified by its images under all e_j, which determine a vector of V(mu)
// uniquely below the top. The tensor construction realizes V(mu) inside a
// tensor power of a small faithful module and is kept as a cross-check.

#include "bkf/linalg.hpp"
#include "bkf/roots.hpp"

#include <map>
#include <string>
#include <vector>

namespace bkf {

enum class IrrepMethod { Recursive, TensorAmbient };

struct ExplicitModule {
    Weight highest_weight;
    std::vector<Weight> basis_weights;           // weight of basis vector k
    std::map<Weight, std::vector<std::size_t>> weight_index;
    std::vector<SparseMatrix> e, f, h;           // one per simple root
    std::string ambient_descriptor;
    // For the tensor construction: basis vectors as ambient tensors.
    std::vector<SparseVector> ambient_basis;
    std::size_t ambient_dimension = 0;

    std::size_t dim() const noexcept { return basis_weights.size(); }
    int rank() const noexcept { return highest_weight.rank(); }
    /// Basis indices of V_lambda (empty if lambda is not a weight).
    const std::vector<std::size_t>& indices_of(const Weight& lambda) const;
};

ExplicitModule build_irrep(const RootSystem& r, const Weight& mu, const Caps& caps = {},
                           IrrepMethod method = IrrepMethod::Recursive);

/// Basis of V_lambda as unit vectors of the module basis.
std::vector<SparseVector> weight_space(const ExplicitModule& v, const Weight& lambda);

/// Checks the structural invariants (weight grading, diagonal h_i, sl2
/// relations per node, [e_i, f_j] = 0 for i != j). Throws on failure.
void check_module(const RootSystem& r, const ExplicitModule& v);

}  // namespace bkf
