#pragma once

// Nilpotent orbit data: type A partitions, weighted Dynkin diagrams,
// associated parabolics, evenness, and validated good-position (Richardson)
// representatives on the degree-2 piece of the ad H grading.

#include "bkf/chevalley.hpp"

#include <cstdint>
#include <vector>

namespace bkf {

struct Partition {
    std::vector<int> parts;

    Partition() = default;
    explicit Partition(std::vector<int> p);  // sorts descending, rejects nonpositive parts
    int size() const;
    bool operator==(const Partition&) const = default;
};

/// All partitions of n, in reverse lexicographic order ([n] first).
std::vector<Partition> partitions_of(int n);

struct DynkinLabels {
    std::vector<int> labels;
    bool operator==(const DynkinLabels&) const = default;
};

/// sum of X_{alpha_j} over the interior of each Jordan block.
AlgebraElement orbit_rep_from_partition(const ChevalleyAlgebra& g, const Partition& p);

DynkinLabels weighted_dynkin(const Partition& p);
DynkinLabels g2_subregular_labels();
DynkinLabels principal_labels(int rank);

bool is_even(const Partition& p);
bool is_even(const DynkinLabels& d);

ParabolicSubset associated_parabolic(const DynkinLabels& d);

/// dim ker ad x.
std::size_t centralizer_dimension(const ChevalleyAlgebra& g, const AlgebraElement& x);

/// dim of the Levi factor of the associated parabolic: rank + 2 |Delta^+_P|.
std::size_t levi_dimension(const ChevalleyAlgebra& g, const DynkinLabels& d);

/// Positive-root indices with beta(H') = 2.
std::vector<std::size_t> degree_two_roots(const RootSystem& r, const DynkinLabels& d);

/// A generic element of g_2, validated by dim g^X = dim l. The first draw has
/// all coefficients 1; later draws use small integers from a seeded
/// generator. Throws after max_draws failures.
AlgebraElement good_position_representative(const ChevalleyAlgebra& g, const DynkinLabels& d,
                                            std::uint64_t seed = 0, int max_draws = 8);

/// Validates an arbitrary candidate: supported on g_2 and Richardson.
bool is_good_position(const ChevalleyAlgebra& g, const DynkinLabels& d, const AlgebraElement& x);

/// Principal nilpotent sum_i X_{alpha_i}.
AlgebraElement principal_nilpotent(const ChevalleyAlgebra& g);

/// Jordan type of a nilpotent n x n matrix from the ranks of its powers.
Partition jordan_type(const Matrix& m);

/// x as a matrix on the defining module of sl_{n+1} (type A only).
Matrix defining_matrix(const ChevalleyAlgebra& g, const AlgebraElement& x);

}  // namespace bkf
