#include "bkf/orbits.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <random>

namespace bkf {

namespace {
constexpr const char* kModule = "orbits";

void require_type_a(const ChevalleyAlgebra& g, const Partition& p) {
    const RootSystem& r = g.root_system();
    if (r.type() != RootType::A) throw Error(kModule, "partitions classify nilpotent orbits only in type A");
    if (p.size() != r.rank() + 1)
        throw Error(kModule, "partition of " + std::to_string(p.size()) + " does not match A" +
                                 std::to_string(r.rank()) + " (needs a partition of " + std::to_string(r.rank() + 1) +
                                 ")");
}
}  // namespace

Partition::Partition(std::vector<int> p) : parts(std::move(p)) {
    for (int x : parts)
        if (x <= 0) throw Error(kModule, "partition parts must be positive");
    std::sort(parts.begin(), parts.end(), std::greater<>());
}

int Partition::size() const { return std::accumulate(parts.begin(), parts.end(), 0); }

std::vector<Partition> partitions_of(int n) {
    std::vector<Partition> out;
    std::vector<int> cur;
    std::function<void(int, int)> rec = [&](int left, int max_part) {
        if (left == 0) {
            out.emplace_back(cur);
            return;
        }
        for (int k = std::min(left, max_part); k >= 1; --k) {
            cur.push_back(k);
            rec(left - k, k);
            cur.pop_back();
        }
    };
    if (n > 0) rec(n, n);
    return out;
}

AlgebraElement orbit_rep_from_partition(const ChevalleyAlgebra& g, const Partition& p) {
    require_type_a(g, p);
    const int rank = g.rank();
    SparseVector x;
    int start = 0;  // 0-based position of the block's first basis vector
    for (int part : p.parts) {
        for (int j = start; j < start + part - 1; ++j) {
            auto k = g.root_system().positive_root_index(RootVec::simple(rank, j));
            x.add(static_cast<Key>(g.x_index(*k)), Rational(1));
        }
        start += part;
    }
    return g.make(std::move(x));
}

DynkinLabels weighted_dynkin(const Partition& p) {
    std::vector<int> h;
    for (int q : p.parts)
        for (int e = q - 1; e >= 1 - q; e -= 2) h.push_back(e);
    std::sort(h.begin(), h.end(), std::greater<>());
    DynkinLabels d;
    for (std::size_t i = 0; i + 1 < h.size(); ++i) d.labels.push_back(h[i] - h[i + 1]);
    return d;
}

// 2 on the long simple root. With 2 on the short root instead, g_4 is one
// root space and g_6 is two, so ad x could not map g_4 onto g_6 and no
// element of g_2 has a 4-dimensional centralizer.
DynkinLabels g2_subregular_labels() { return DynkinLabels{{0, 2}}; }

DynkinLabels principal_labels(int rank) { return DynkinLabels{std::vector<int>(static_cast<std::size_t>(rank), 2)}; }

bool is_even(const Partition& p) {
    if (p.parts.empty()) return true;
    const int parity = p.parts.front() % 2;
    return std::all_of(p.parts.begin(), p.parts.end(), [&](int x) { return x % 2 == parity; });
}

bool is_even(const DynkinLabels& d) {
    return std::none_of(d.labels.begin(), d.labels.end(), [](int x) { return x % 2 != 0; });
}

ParabolicSubset associated_parabolic(const DynkinLabels& d) {
    std::vector<int> idx;
    for (std::size_t i = 0; i < d.labels.size(); ++i)
        if (d.labels[i] == 0) idx.push_back(static_cast<int>(i));
    return ParabolicSubset(std::move(idx));
}

std::size_t centralizer_dimension(const ChevalleyAlgebra& g, const AlgebraElement& x) {
    SparseMatrix ad = g.ad_matrix(x);
    std::vector<SparseVector> cols;
    for (std::size_t j = 0; j < ad.cols(); ++j) cols.push_back(ad.col(j));
    return g.dim() - rank(cols);
}

std::size_t levi_dimension(const ChevalleyAlgebra& g, const DynkinLabels& d) {
    const RootSystem& r = g.root_system();
    return static_cast<std::size_t>(r.rank()) + 2 * r.levi_positive_roots(associated_parabolic(d)).size();
}

std::vector<std::size_t> degree_two_roots(const RootSystem& r, const DynkinLabels& d) {
    if (static_cast<int>(d.labels.size()) != r.rank()) throw Error(kModule, "label vector has the wrong length");
    std::vector<std::size_t> out;
    for (std::size_t k = 0; k < r.num_positive_roots(); ++k) {
        int deg = 0;
        for (int i = 0; i < r.rank(); ++i) deg += r.positive_roots()[k].coords[i] * d.labels[static_cast<std::size_t>(i)];
        if (deg == 2) out.push_back(k);
    }
    return out;
}

bool is_good_position(const ChevalleyAlgebra& g, const DynkinLabels& d, const AlgebraElement& x) {
    g.check_same(x);
    auto deg2 = degree_two_roots(g.root_system(), d);
    for (const auto& [k, c] : x.coefficients) {
        bool in = false;
        for (auto r : deg2)
            if (g.x_index(r) == static_cast<std::size_t>(k)) in = true;
        if (!in) return false;
    }
    return centralizer_dimension(g, x) == levi_dimension(g, d);
}

AlgebraElement good_position_representative(const ChevalleyAlgebra& g, const DynkinLabels& d, std::uint64_t seed,
                                            int max_draws) {
    for (int x : d.labels)
        if (x < 0 || x > 2) throw Error(kModule, "weighted Dynkin labels must lie in {0, 1, 2}");
    auto deg2 = degree_two_roots(g.root_system(), d);
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> coeff(1, 9);
    const std::size_t want = levi_dimension(g, d);
    std::size_t last = 0;
    for (int draw = 0; draw < max_draws; ++draw) {
        SparseVector v;
        for (auto k : deg2) v.add(static_cast<Key>(g.x_index(k)), Rational(draw == 0 ? 1 : coeff(rng)));
        AlgebraElement x = g.make(std::move(v));
        last = centralizer_dimension(g, x);
        if (last == want) return x;
    }
    std::string lab;
    for (int x : d.labels) lab += std::to_string(x);
    throw Error(kModule, "no Richardson element found on g_2 for labels " + lab + " after " +
                             std::to_string(max_draws) + " draws (centralizer dimension " + std::to_string(last) +
                             ", Levi dimension " + std::to_string(want) + "); the orbit is not even");
}

AlgebraElement principal_nilpotent(const ChevalleyAlgebra& g) {
    SparseVector v;
    for (int i = 0; i < g.rank(); ++i) {
        auto k = g.root_system().positive_root_index(RootVec::simple(g.rank(), i));
        v.add(static_cast<Key>(g.x_index(*k)), Rational(1));
    }
    return g.make(std::move(v));
}

Partition jordan_type(const Matrix& m) {
    const std::size_t n = m.rows();
    // r_k = rank M^k; number of blocks of size >= k is r_{k-1} - r_k.
    std::vector<std::size_t> ranks{n};
    Matrix power = m;
    while (ranks.back() != 0) {
        if (ranks.size() > n + 1) throw Error(kModule, "matrix is not nilpotent");
        ranks.push_back(power.rank());
        power = power * m;
    }
    std::vector<int> parts;
    for (std::size_t k = 1; k < ranks.size(); ++k) {
        std::size_t at_least_k = ranks[k - 1] - ranks[k];
        std::size_t at_least_k1 = k + 1 < ranks.size() ? ranks[k] - ranks[k + 1] : 0;
        for (std::size_t c = 0; c < at_least_k - at_least_k1; ++c) parts.push_back(static_cast<int>(k));
    }
    return Partition(parts);
}

Matrix defining_matrix(const ChevalleyAlgebra& g, const AlgebraElement& x) {
    const RootSystem& r = g.root_system();
    if (r.type() != RootType::A) throw Error(kModule, "the defining module is only used in type A");
    Weight omega1 = Weight::zero(r.rank());
    omega1.coords[0] = 1;
    ExplicitModule v = build_irrep(r, omega1);
    SparseMatrix s = apply_element(g, v, x);
    Matrix out(v.dim(), v.dim());
    for (std::size_t j = 0; j < v.dim(); ++j)
        for (const auto& [i, val] : s.col(j)) out(static_cast<std::size_t>(i), j) = val;
    return out;
}

}  // namespace bkf
