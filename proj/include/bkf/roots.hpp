#pragma once

// Root systems of finite type A-D, G2, F4, weight arithmetic, and the Weyl
// group (linear and rho-shifted actions, enumeration, parabolic subgroups).
//
// Conventions: weights are stored in fundamental-weight coordinates
// (coords[i] = <lambda, alpha_i^vee>), roots in simple-root coordinates.
// Simple roots are numbered left to right along the Dynkin diagram:
//   B_n: alpha_n is the short simple root.   C_n: alpha_n is the long one.
//   D_n: alpha_{n-2} is the branch node.      G2: alpha_1 short, alpha_2 long.
//   F4:  alpha_1, alpha_2 short; alpha_3, alpha_4 long (the reverse of the
//        Bourbaki numbering).
// The invariant inner product is normalized so short roots have norm 1.

#include "bkf/rational.hpp"

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace bkf {

/// Size limits shared by all modules.
struct Caps {
    int max_rank = 6;
    std::size_t max_weyl_order = 2000;
    std::size_t max_ambient_dim = 10000;
    std::size_t max_module_dim = 500;
};

enum class RootType { A, B, C, D, G2, F4 };

RootType parse_root_type(const std::string& label);
std::string to_string(RootType t);

/// A weight in fundamental-weight coordinates.
struct Weight {
    std::vector<int> coords;

    Weight() = default;
    explicit Weight(std::vector<int> c) : coords(std::move(c)) {}
    static Weight zero(int rank) { return Weight(std::vector<int>(static_cast<std::size_t>(rank), 0)); }

    int rank() const noexcept { return static_cast<int>(coords.size()); }
    int operator[](int i) const { return coords[static_cast<std::size_t>(i)]; }

    Weight& operator+=(const Weight& o);
    Weight& operator-=(const Weight& o);
    friend Weight operator+(Weight a, const Weight& b) { return a += b; }
    friend Weight operator-(Weight a, const Weight& b) { return a -= b; }
    friend Weight operator-(Weight a) {
        for (auto& c : a.coords) c = -c;
        return a;
    }
    friend Weight operator*(int s, Weight a) {
        for (auto& c : a.coords) c *= s;
        return a;
    }
    auto operator<=>(const Weight&) const = default;
};

/// An element of the root lattice in simple-root coordinates.
struct RootVec {
    std::vector<int> coords;

    RootVec() = default;
    explicit RootVec(std::vector<int> c) : coords(std::move(c)) {}
    static RootVec zero(int rank) { return RootVec(std::vector<int>(static_cast<std::size_t>(rank), 0)); }
    static RootVec simple(int rank, int i) {
        RootVec r = zero(rank);
        r.coords[static_cast<std::size_t>(i)] = 1;
        return r;
    }

    int rank() const noexcept { return static_cast<int>(coords.size()); }
    int operator[](int i) const { return coords[static_cast<std::size_t>(i)]; }
    int height() const;
    bool is_nonnegative() const;

    RootVec& operator+=(const RootVec& o);
    RootVec& operator-=(const RootVec& o);
    friend RootVec operator+(RootVec a, const RootVec& b) { return a += b; }
    friend RootVec operator-(RootVec a, const RootVec& b) { return a -= b; }
    friend RootVec operator-(RootVec a) {
        for (auto& c : a.coords) c = -c;
        return a;
    }
    friend RootVec operator*(int s, RootVec a) {
        for (auto& c : a.coords) c *= s;
        return a;
    }
    auto operator<=>(const RootVec&) const = default;
};

struct Root {
    RootVec coords;
    Weight weight;  // the same root in fundamental-weight coordinates
    int norm_sq = 1;
    bool is_long = false;
};

/// Subset of simple roots (0-based indices) defining a standard parabolic.
struct ParabolicSubset {
    std::vector<int> simple_indices;

    ParabolicSubset() = default;
    explicit ParabolicSubset(std::vector<int> idx);
    static ParabolicSubset borel() { return {}; }
    static ParabolicSubset full(int rank);

    bool is_borel() const noexcept { return simple_indices.empty(); }
    bool contains(int i) const;
    std::size_t size() const noexcept { return simple_indices.size(); }
    bool operator==(const ParabolicSubset&) const = default;
};

class RootSystem {
public:
    RootSystem(RootType type, int rank, const Caps& caps = {});

    RootType type() const noexcept { return type_; }
    int rank() const noexcept { return rank_; }
    std::string label() const;

    /// cartan(i, j) = <alpha_j, alpha_i^vee>.
    int cartan(int i, int j) const { return cartan_[idx(i, j)]; }
    const std::vector<int>& cartan_matrix() const noexcept { return cartan_; }
    int simple_norm_sq(int i) const { return simple_norms_[static_cast<std::size_t>(i)]; }
    /// Gram matrix (alpha_i, alpha_j) of the simple roots.
    const std::vector<Rational>& inner_product_matrix() const noexcept { return gram_; }
    /// det of the Cartan matrix (index of the root lattice in the weight lattice).
    int index_of_connection() const noexcept { return det_; }

    const std::vector<Root>& positive_roots() const noexcept { return positive_; }
    std::size_t num_positive_roots() const noexcept { return positive_.size(); }
    /// Index into positive_roots(), or nullopt if not a positive root.
    std::optional<std::size_t> positive_root_index(const RootVec& r) const;
    bool is_root(const RootVec& r) const;
    /// The highest root.
    const Root& highest_root() const { return positive_.back(); }
    std::size_t expected_weyl_order() const;

    Weight rho() const { return Weight(std::vector<int>(static_cast<std::size_t>(rank_), 1)); }
    Weight simple_root_weight(int i) const;
    Weight to_weight(const RootVec& r) const;
    /// Root coordinates of lambda, or nullopt if lambda is not in the root lattice.
    std::optional<RootVec> to_root_coords(const Weight& w) const;
    std::vector<Rational> rational_root_coords(const Weight& w) const;

    Rational inner(const Weight& a, const Weight& b) const;
    Rational norm_sq(const Weight& w) const { return inner(w, w); }
    /// <lambda, beta^vee> for a root beta (positive or negative).
    int pair(const Weight& w, const RootVec& beta) const;
    int pair(const Weight& w, std::size_t positive_index) const;

    bool is_dominant(const Weight& w) const;
    bool is_regular(const Weight& w) const;
    bool is_p_dominant(const Weight& w, const ParabolicSubset& p) const;
    bool is_p_regular_dominant(const Weight& w, const ParabolicSubset& p) const;
    /// a <= b in the dominance order: b - a is a nonnegative integer sum of simple roots.
    bool dominance_leq(const Weight& a, const Weight& b) const;
    bool same_root_coset(const Weight& a, const Weight& b) const { return to_root_coords(a - b).has_value(); }

    Weight reflect(const Weight& w, int i) const;

    /// Positive roots of the Levi factor, as indices into positive_roots().
    std::vector<std::size_t> levi_positive_roots(const ParabolicSubset& p) const;
    /// Delta^+ \ Delta^+_P as indices into positive_roots().
    std::vector<std::size_t> nilradical_roots(const ParabolicSubset& p) const;
    Weight two_rho_p(const ParabolicSubset& p) const;

    void check_weight(const Weight& w, const char* module) const;
    void check_parabolic(const ParabolicSubset& p, const char* module) const;

private:
    std::size_t idx(int i, int j) const {
        return static_cast<std::size_t>(i) * static_cast<std::size_t>(rank_) + static_cast<std::size_t>(j);
    }

    RootType type_;
    int rank_;
    std::vector<int> cartan_;
    std::vector<int> simple_norms_;
    std::vector<Rational> gram_;
    std::vector<Rational> cartan_inverse_;
    int det_ = 1;
    std::vector<Root> positive_;  // sorted by height, then coordinates
};

RootSystem build_root_system(const std::string& type_label, int rank, const Caps& caps = {});

class WeylElement {
public:
    static WeylElement identity(int rank);
    static WeylElement from_word(const RootSystem& r, const std::vector<int>& word);
    /// Builds the element from its matrix; the stored word is the
    /// lexicographically smallest reduced word.
    static WeylElement from_matrix(const RootSystem& r, std::vector<int> matrix);

    int rank() const noexcept { return rank_; }
    /// Row-major matrix acting on fundamental-weight coordinates.
    const std::vector<int>& matrix() const noexcept { return matrix_; }
    int length() const noexcept { return static_cast<int>(word_.size()); }
    /// Reduced word: w = s_{word[0]} s_{word[1]} ... (0-based indices).
    const std::vector<int>& word() const noexcept { return word_; }

    Weight apply(const Weight& w) const;
    WeylElement inverse() const;
    friend WeylElement operator*(const WeylElement& a, const WeylElement& b);
    bool operator==(const WeylElement& o) const { return matrix_ == o.matrix_; }

private:
    int rank_ = 0;
    std::vector<int> matrix_;
    std::vector<int> word_;
};

/// w * lambda = w(lambda + rho) - rho.
Weight shifted_action(const WeylElement& w, const Weight& lambda);

/// Number of positive roots sent to negative roots by w.
int inversion_count(const RootSystem& r, const WeylElement& w);

/// Returns (lambda^+, w) with w(lambda) = lambda^+ dominant.
std::pair<Weight, WeylElement> dominant_representative(const RootSystem& r, const Weight& lambda);

/// All elements ordered by length, then lexicographically smallest reduced word.
std::vector<WeylElement> enumerate_weyl_group(const RootSystem& r, const Caps& caps = {});
std::vector<WeylElement> enumerate_parabolic_subgroup(const RootSystem& r, const ParabolicSubset& p,
                                                      const Caps& caps = {});

/// Minimal-length w in W_P with w*lambda P-dominant, or nullopt when
/// <lambda + rho, beta^vee> = 0 for some beta in Delta^+_P.
std::optional<std::pair<WeylElement, Weight>> parabolic_shift(const RootSystem& r, const Weight& lambda,
                                                              const ParabolicSubset& p);

std::string to_string(const Weight& w);
std::string to_string(const RootVec& r);

}  // namespace bkf
