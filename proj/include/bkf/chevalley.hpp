#pragma once

// Lie algebra with a Chevalley basis, realized concretely inside the adjoint
// module. Basis order: H_1..H_r, then X_beta for positive beta (in the order
// of RootSystem::positive_roots), then X_{-beta} in the same order.
//
// Root vectors are built from the simple generators by the rule
//   X_beta = [E_i, X_gamma] / (p + 1),   X_{-beta} = -[F_i, X_{-gamma}] / (p + 1)
// where i is the least index with gamma = beta - alpha_i a root and p is the
// largest integer with gamma - p alpha_i a root. This fixes all signs; the
// construction then validates [X_beta, X_{-beta}] = H_beta, |N| = p + 1 and
// (for rank <= 4) the Jacobi identity on all basis triples.

#include "bkf/linalg.hpp"
#include "bkf/module.hpp"
#include "bkf/roots.hpp"

#include <cstdint>
#include <map>
#include <memory>
#include <vector>

namespace bkf {

class ChevalleyAlgebra;

struct AlgebraElement {
    std::uint64_t algebra_id = 0;
    SparseVector coefficients;  // basis index -> coefficient

    bool is_zero() const noexcept { return coefficients.empty(); }
    bool operator==(const AlgebraElement&) const = default;
};

/// How X_beta is built: [E_i, X_parent] / divisor (and the mirrored rule
/// for X_{-beta}). Simple roots have parent == npos.
struct RootVectorRecipe {
    static constexpr std::size_t npos = static_cast<std::size_t>(-1);
    int simple_index = 0;
    std::size_t parent = npos;  // index into positive_roots()
    int divisor = 1;            // p + 1
};

class ChevalleyAlgebra {
public:
    explicit ChevalleyAlgebra(const RootSystem& r, const Caps& caps = {});

    const RootSystem& root_system() const noexcept { return *root_; }
    std::uint64_t id() const noexcept { return id_; }
    std::size_t dim() const noexcept { return dim_; }
    int rank() const noexcept { return root_->rank(); }

    std::size_t h_index(int i) const { return static_cast<std::size_t>(i); }
    std::size_t x_index(std::size_t positive_root) const { return static_cast<std::size_t>(rank()) + positive_root; }
    std::size_t y_index(std::size_t positive_root) const {
        return static_cast<std::size_t>(rank()) + root_->num_positive_roots() + positive_root;
    }
    /// Weight (root) of basis element k in fundamental coordinates; zero for H_i.
    const Weight& basis_weight(std::size_t k) const { return basis_weights_[k]; }
    std::string basis_name(std::size_t k) const;

    AlgebraElement zero() const { return {id_, {}}; }
    AlgebraElement basis(std::size_t k) const;
    AlgebraElement h(int i) const { return basis(h_index(i)); }
    AlgebraElement x(const RootVec& beta) const;  // beta positive or negative root
    /// Coroot H_beta as a combination of the H_i.
    AlgebraElement coroot(std::size_t positive_root) const;
    /// sum c_i H_i with alpha_j(H) = labels_j.
    AlgebraElement cartan_element_from_labels(const std::vector<int>& labels) const;

    AlgebraElement bracket(const AlgebraElement& a, const AlgebraElement& b) const;
    /// Matrix of ad x in this basis.
    SparseMatrix ad_matrix(const AlgebraElement& x) const;
    /// N_{beta,gamma} with [X_beta, X_gamma] = N X_{beta+gamma} (0 if not a root).
    Rational structure_constant(const RootVec& beta, const RootVec& gamma) const;

    const std::vector<RootVectorRecipe>& recipes() const noexcept { return recipes_; }
    const ExplicitModule& adjoint_module() const noexcept { return adjoint_; }

    AlgebraElement make(SparseVector coeffs) const { return {id_, std::move(coeffs)}; }
    void check_same(const AlgebraElement& a) const;

private:
    std::optional<std::size_t> basis_of_root(const RootVec& beta) const;

    std::shared_ptr<const RootSystem> root_;
    std::uint64_t id_;
    std::size_t dim_;
    std::vector<Weight> basis_weights_;
    std::vector<RootVectorRecipe> recipes_;
    ExplicitModule adjoint_;
    // table_[a * dim + b] = [basis a, basis b]
    std::vector<SparseVector> table_;
};

/// Matrices of the root vectors X_beta / X_{-beta} on a module, rebuilt from
/// the module's e_i, f_i by the algebra's recipes.
class ModuleAction {
public:
    ModuleAction(const ChevalleyAlgebra& g, const ExplicitModule& v);
    const SparseMatrix& basis_matrix(std::size_t k) const { return mats_[k]; }
    SparseMatrix apply(const AlgebraElement& x) const;

private:
    const ChevalleyAlgebra* g_;
    std::vector<SparseMatrix> mats_;
};

/// Matrix of x on V (convenience wrapper around ModuleAction).
SparseMatrix apply_element(const ChevalleyAlgebra& g, const ExplicitModule& v, const AlgebraElement& x);

/// Exhaustive Jacobi check on basis triples; returns the number of failures.
std::size_t jacobi_violations(const ChevalleyAlgebra& g);

}  // namespace bkf
