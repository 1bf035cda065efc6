#pragma once

// The (generalized) Brylinski-Kostant filtration on L-highest weight vectors
// and its jump polynomial.

#include "bkf/chevalley.hpp"
#include "bkf/module.hpp"
#include "bkf/qpoly.hpp"

#include <vector>

namespace bkf {

struct FiltrationReport {
    std::vector<std::size_t> subspace_dims;  // dim F^n for n = 0..N
    QPolynomial jump_polynomial;
    bool operator==(const FiltrationReport&) const = default;
};

/// Vectors of V_lambda killed by e_alpha for all alpha in pi_P.
std::vector<SparseVector> l_highest_space(const ExplicitModule& v, const Weight& lambda, const ParabolicSubset& p);

/// F^n = {u in U : M^{n+1} u = 0} for U = l_highest_space and M the matrix of x.
FiltrationReport bk_jump_polynomial(const ExplicitModule& v, const SparseMatrix& x_matrix, const Weight& lambda,
                                    const ParabolicSubset& p);
FiltrationReport bk_jump_polynomial(const ChevalleyAlgebra& g, const ExplicitModule& v, const AlgebraElement& x,
                                    const Weight& lambda, const ParabolicSubset& p);

}  // namespace bkf
