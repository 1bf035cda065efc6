#pragma once

// q-analogs of Kostant's partition function, Lusztig's q-analog of weight
// multiplicity (with its parabolic generalization), Freudenthal
// multiplicities and the Weyl dimension formula.

#include "bkf/kernels.hpp"
#include "bkf/qpoly.hpp"
#include "bkf/roots.hpp"

#include <map>
#include <vector>

namespace bkf {

/// p_q^P tabulated on the box 0 <= delta <= bound (simple-root coordinates).
/// Each nilradical root is folded in as a geometric series, so entry delta
/// counts expressions of delta as a sum of n such roots by q^n.
class QPartitionTable {
public:
    QPartitionTable(const RootSystem& r, const ParabolicSubset& p, const RootVec& bound);

    /// p_q^P(gamma); zero outside the box or for gamma not >= 0.
    const QPolynomial& at(const RootVec& gamma) const;
    const RootVec& bound() const noexcept { return bound_; }

private:
    std::optional<std::size_t> flat(const RootVec& gamma) const;

    RootVec bound_;
    std::vector<std::size_t> stride_;
    std::vector<QPolynomial> table_;
    QPolynomial zero_;
};

/// p_q^P(gamma) for gamma in fundamental-weight coordinates; zero when gamma
/// is outside the nonnegative span of the nilradical roots.
QPolynomial q_partition(const RootSystem& r, const Weight& gamma, const ParabolicSubset& p);

/// m_mu^{P,lambda}(q) = sum_w (-1)^{l(w)} p_q^P(w*mu - lambda).
QPolynomial lusztig_q_analog(const RootSystem& r, const Weight& mu, const Weight& lambda, const ParabolicSubset& p,
                             const Caps& caps = {}, Execution ex = Execution::Serial);
/// Same, reusing an already enumerated Weyl group.
QPolynomial lusztig_q_analog(const RootSystem& r, const std::vector<WeylElement>& weyl, const Weight& mu,
                             const Weight& lambda, const ParabolicSubset& p, Execution ex = Execution::Serial);

/// Dominant weights nu <= mu with mu - nu in the root lattice, each with its
/// multiplicity in V(mu), computed by Freudenthal's recursion.
std::map<Weight, BigInt> dominant_character(const RootSystem& r, const Weight& mu);

/// dim V(mu)_lambda.
BigInt freudenthal_multiplicity(const RootSystem& r, const Weight& mu, const Weight& lambda);

BigInt weyl_dimension(const RootSystem& r, const Weight& mu);

/// The W-orbit of a weight (sorted).
std::vector<Weight> weyl_orbit(const RootSystem& r, const Weight& w);

/// All weights of V(mu) with multiplicities (the full character).
std::map<Weight, BigInt> full_character(const RootSystem& r, const Weight& mu);

}  // namespace bkf
