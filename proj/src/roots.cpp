#include "bkf/roots.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace bkf {

namespace {
constexpr const char* kModule = "roots";

std::size_t factorial(int n) {
    std::size_t f = 1;
    for (int i = 2; i <= n; ++i) f *= static_cast<std::size_t>(i);
    return f;
}
}  // namespace

RootType parse_root_type(const std::string& label) {
    if (label == "A") return RootType::A;
    if (label == "B") return RootType::B;
    if (label == "C") return RootType::C;
    if (label == "D") return RootType::D;
    if (label == "G2" || label == "G") return RootType::G2;
    if (label == "F4" || label == "F") return RootType::F4;
    throw Error(kModule, "unknown root system type '" + label + "' (expected A, B, C, D, G2 or F4)");
}

std::string to_string(RootType t) {
    switch (t) {
        case RootType::A: return "A";
        case RootType::B: return "B";
        case RootType::C: return "C";
        case RootType::D: return "D";
        case RootType::G2: return "G2";
        case RootType::F4: return "F4";
    }
    return "?";
}

// ---------------------------------------------------------------- Weight / RootVec

Weight& Weight::operator+=(const Weight& o) {
    if (o.coords.size() != coords.size()) throw Error(kModule, "weight rank mismatch");
    for (std::size_t i = 0; i < coords.size(); ++i) coords[i] += o.coords[i];
    return *this;
}

Weight& Weight::operator-=(const Weight& o) {
    if (o.coords.size() != coords.size()) throw Error(kModule, "weight rank mismatch");
    for (std::size_t i = 0; i < coords.size(); ++i) coords[i] -= o.coords[i];
    return *this;
}

int RootVec::height() const { return std::accumulate(coords.begin(), coords.end(), 0); }

bool RootVec::is_nonnegative() const {
    return std::all_of(coords.begin(), coords.end(), [](int c) { return c >= 0; });
}

RootVec& RootVec::operator+=(const RootVec& o) {
    if (o.coords.size() != coords.size()) throw Error(kModule, "root vector rank mismatch");
    for (std::size_t i = 0; i < coords.size(); ++i) coords[i] += o.coords[i];
    return *this;
}

RootVec& RootVec::operator-=(const RootVec& o) {
    if (o.coords.size() != coords.size()) throw Error(kModule, "root vector rank mismatch");
    for (std::size_t i = 0; i < coords.size(); ++i) coords[i] -= o.coords[i];
    return *this;
}

// ---------------------------------------------------------------- ParabolicSubset

ParabolicSubset::ParabolicSubset(std::vector<int> idx) : simple_indices(std::move(idx)) {
    std::sort(simple_indices.begin(), simple_indices.end());
    simple_indices.erase(std::unique(simple_indices.begin(), simple_indices.end()), simple_indices.end());
}

ParabolicSubset ParabolicSubset::full(int rank) {
    std::vector<int> idx(static_cast<std::size_t>(rank));
    std::iota(idx.begin(), idx.end(), 0);
    return ParabolicSubset(std::move(idx));
}

bool ParabolicSubset::contains(int i) const {
    return std::binary_search(simple_indices.begin(), simple_indices.end(), i);
}

// ---------------------------------------------------------------- RootSystem

RootSystem::RootSystem(RootType type, int rank, const Caps& caps) : type_(type), rank_(rank) {
    auto bad = [&](const std::string& why) {
        return Error(kModule, "invalid root system " + to_string(type) + std::to_string(rank) + ": " + why);
    };
    switch (type) {
        case RootType::A:
            if (rank < 1) throw bad("type A needs rank >= 1");
            break;
        case RootType::B:
        case RootType::C:
            if (rank < 2) throw bad("types B and C need rank >= 2");
            break;
        case RootType::D:
            if (rank < 4) throw bad("type D needs rank >= 4");
            break;
        case RootType::G2:
            if (rank != 2) throw bad("G2 has rank 2");
            break;
        case RootType::F4:
            if (rank != 4) throw bad("F4 has rank 4");
            break;
    }
    if (rank > caps.max_rank)
        throw CapExceeded(kModule, "rank " + std::to_string(rank) + " exceeds the configured rank cap " +
                                       std::to_string(caps.max_rank));

    const auto n = static_cast<std::size_t>(rank);
    cartan_.assign(n * n, 0);
    simple_norms_.assign(n, 1);
    for (int i = 0; i < rank; ++i) cartan_[idx(i, i)] = 2;
    auto link = [&](int i, int j, int cij, int cji) {
        cartan_[idx(i, j)] = cij;
        cartan_[idx(j, i)] = cji;
    };
    switch (type) {
        case RootType::A:
            for (int i = 0; i + 1 < rank; ++i) link(i, i + 1, -1, -1);
            break;
        case RootType::B:
            for (int i = 0; i + 2 < rank; ++i) link(i, i + 1, -1, -1);
            link(rank - 2, rank - 1, -1, -2);
            for (int i = 0; i + 1 < rank; ++i) simple_norms_[static_cast<std::size_t>(i)] = 2;
            break;
        case RootType::C:
            for (int i = 0; i + 2 < rank; ++i) link(i, i + 1, -1, -1);
            link(rank - 2, rank - 1, -2, -1);
            simple_norms_[n - 1] = 2;
            break;
        case RootType::D:
            for (int i = 0; i + 2 < rank; ++i) link(i, i + 1, -1, -1);
            link(rank - 3, rank - 1, -1, -1);
            break;
        case RootType::G2:
            link(0, 1, -3, -1);
            simple_norms_ = {1, 3};
            break;
        case RootType::F4:
            link(0, 1, -1, -1);
            link(1, 2, -2, -1);
            link(2, 3, -1, -1);
            simple_norms_ = {1, 1, 2, 2};
            break;
    }

    gram_.assign(n * n, Rational(0));
    for (int i = 0; i < rank; ++i)
        for (int j = 0; j < rank; ++j)
            gram_[idx(i, j)] = ratio(cartan(i, j) * simple_norm_sq(i), 2);

    // Inverse Cartan matrix by Gauss-Jordan over Q.
    std::vector<Rational> a(n * 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) a[i * 2 * n + j] = cartan_[i * n + j];
        a[i * 2 * n + n + i] = 1;
    }
    Rational det = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (a[p * 2 * n + c] == 0) ++p;
        if (p != c) {
            for (std::size_t j = 0; j < 2 * n; ++j) std::swap(a[p * 2 * n + j], a[c * 2 * n + j]);
            det = -det;
        }
        Rational piv = a[c * 2 * n + c];
        det *= piv;
        for (std::size_t j = 0; j < 2 * n; ++j) a[c * 2 * n + j] /= piv;
        for (std::size_t r = 0; r < n; ++r) {
            if (r == c || a[r * 2 * n + c] == 0) continue;
            Rational f = a[r * 2 * n + c];
            for (std::size_t j = 0; j < 2 * n; ++j) a[r * 2 * n + j] -= f * a[c * 2 * n + j];
        }
    }
    det_ = static_cast<int>(to_integer(det, kModule));
    cartan_inverse_.assign(n * n, Rational(0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) cartan_inverse_[i * n + j] = a[i * 2 * n + n + j];

    // Positive roots by closure: beta + alpha_i is a root iff q > 0 in the
    // alpha_i-string through beta, where p - q = <beta, alpha_i^vee>.
    std::set<RootVec> found;
    std::vector<RootVec> queue;
    for (int i = 0; i < rank; ++i) {
        queue.push_back(RootVec::simple(rank, i));
        found.insert(queue.back());
    }
    for (std::size_t head = 0; head < queue.size(); ++head) {
        const RootVec beta = queue[head];
        for (int i = 0; i < rank; ++i) {
            int pairing = 0;
            for (int j = 0; j < rank; ++j) pairing += cartan(i, j) * beta[j];
            int p = 0;
            RootVec down = beta;
            while (true) {
                down -= RootVec::simple(rank, i);
                if (!found.count(down)) break;
                ++p;
            }
            if (p - pairing > 0) {
                RootVec up = beta + RootVec::simple(rank, i);
                if (found.insert(up).second) queue.push_back(up);
            }
        }
    }
    std::vector<RootVec> roots(found.begin(), found.end());
    std::sort(roots.begin(), roots.end(), [](const RootVec& x, const RootVec& y) {
        if (x.height() != y.height()) return x.height() < y.height();
        return x.coords > y.coords;
    });
    for (auto& r : roots) {
        Rational nrm = 0;
        for (int i = 0; i < rank; ++i)
            for (int j = 0; j < rank; ++j) nrm += gram_[idx(i, j)] * r[i] * r[j];
        Root root;
        root.weight = to_weight(r);
        root.coords = std::move(r);
        root.norm_sq = static_cast<int>(to_integer(nrm, kModule));
        root.is_long = root.norm_sq > 1;
        positive_.push_back(std::move(root));
    }
}

std::string RootSystem::label() const { return to_string(type_) + (type_ == RootType::G2 || type_ == RootType::F4 ? "" : std::to_string(rank_)); }

std::size_t RootSystem::expected_weyl_order() const {
    switch (type_) {
        case RootType::A: return factorial(rank_ + 1);
        case RootType::B:
        case RootType::C: return (std::size_t{1} << rank_) * factorial(rank_);
        case RootType::D: return (std::size_t{1} << (rank_ - 1)) * factorial(rank_);
        case RootType::G2: return 12;
        case RootType::F4: return 1152;
    }
    return 0;
}

std::optional<std::size_t> RootSystem::positive_root_index(const RootVec& r) const {
    for (std::size_t k = 0; k < positive_.size(); ++k)
        if (positive_[k].coords == r) return k;
    return std::nullopt;
}

bool RootSystem::is_root(const RootVec& r) const {
    return positive_root_index(r).has_value() || positive_root_index(-r).has_value();
}

Weight RootSystem::simple_root_weight(int i) const { return to_weight(RootVec::simple(rank_, i)); }

Weight RootSystem::to_weight(const RootVec& r) const {
    check_weight(Weight(r.coords), kModule);
    Weight w = Weight::zero(rank_);
    for (int i = 0; i < rank_; ++i)
        for (int j = 0; j < rank_; ++j) w.coords[static_cast<std::size_t>(i)] += cartan(i, j) * r[j];
    return w;
}

std::vector<Rational> RootSystem::rational_root_coords(const Weight& w) const {
    check_weight(w, kModule);
    std::vector<Rational> c(static_cast<std::size_t>(rank_));
    for (int i = 0; i < rank_; ++i)
        for (int j = 0; j < rank_; ++j) c[static_cast<std::size_t>(i)] += cartan_inverse_[idx(i, j)] * w[j];
    return c;
}

std::optional<RootVec> RootSystem::to_root_coords(const Weight& w) const {
    auto c = rational_root_coords(w);
    RootVec r = RootVec::zero(rank_);
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (c[i].get_den() != 1) return std::nullopt;
        r.coords[i] = static_cast<int>(c[i].get_num().get_si());
    }
    return r;
}

Rational RootSystem::inner(const Weight& a, const Weight& b) const {
    // (omega_j, alpha_k) = delta_jk |alpha_k|^2 / 2
    auto cb = rational_root_coords(b);
    Rational s = 0;
    for (int j = 0; j < rank_; ++j) s += ratio(a[j] * simple_norm_sq(j), 2) * cb[static_cast<std::size_t>(j)];
    return s;
}

int RootSystem::pair(const Weight& w, std::size_t positive_index) const {
    const Root& beta = positive_.at(positive_index);
    int twice_inner = 0;
    for (int j = 0; j < rank_; ++j) twice_inner += w[j] * beta.coords[j] * simple_norm_sq(j);
    if (twice_inner % beta.norm_sq != 0)
        throw Error(kModule, "non-integral coroot pairing; weight " + to_string(w) + " is not in the weight lattice");
    return twice_inner / beta.norm_sq;
}

int RootSystem::pair(const Weight& w, const RootVec& beta) const {
    check_weight(w, kModule);
    if (beta.rank() != rank_) throw Error(kModule, "root vector rank mismatch");
    if (auto k = positive_root_index(beta)) return pair(w, *k);
    if (auto k = positive_root_index(-beta)) return -pair(w, *k);
    throw Error(kModule, to_string(beta) + " is not a root of " + label());
}

bool RootSystem::is_dominant(const Weight& w) const {
    return std::all_of(w.coords.begin(), w.coords.end(), [](int c) { return c >= 0; });
}

bool RootSystem::is_regular(const Weight& w) const {
    for (std::size_t k = 0; k < positive_.size(); ++k)
        if (pair(w, k) == 0) return false;
    return true;
}

bool RootSystem::is_p_dominant(const Weight& w, const ParabolicSubset& p) const {
    return std::all_of(p.simple_indices.begin(), p.simple_indices.end(), [&](int i) { return w[i] >= 0; });
}

bool RootSystem::is_p_regular_dominant(const Weight& w, const ParabolicSubset& p) const {
    return std::all_of(p.simple_indices.begin(), p.simple_indices.end(), [&](int i) { return w[i] > 0; });
}

bool RootSystem::dominance_leq(const Weight& a, const Weight& b) const {
    auto d = to_root_coords(b - a);
    return d && d->is_nonnegative();
}

Weight RootSystem::reflect(const Weight& w, int i) const {
    Weight out = w;
    const int a = w[i];
    for (int k = 0; k < rank_; ++k) out.coords[static_cast<std::size_t>(k)] -= a * cartan(k, i);
    return out;
}

std::vector<std::size_t> RootSystem::levi_positive_roots(const ParabolicSubset& p) const {
    std::vector<std::size_t> out;
    for (std::size_t k = 0; k < positive_.size(); ++k) {
        bool inside = true;
        for (int i = 0; i < rank_; ++i)
            if (positive_[k].coords[i] != 0 && !p.contains(i)) inside = false;
        if (inside) out.push_back(k);
    }
    return out;
}

std::vector<std::size_t> RootSystem::nilradical_roots(const ParabolicSubset& p) const {
    auto levi = levi_positive_roots(p);
    std::vector<std::size_t> out;
    for (std::size_t k = 0; k < positive_.size(); ++k)
        if (!std::binary_search(levi.begin(), levi.end(), k)) out.push_back(k);
    return out;
}

Weight RootSystem::two_rho_p(const ParabolicSubset& p) const {
    Weight w = Weight::zero(rank_);
    for (auto k : levi_positive_roots(p)) w += positive_[k].weight;
    return w;
}

void RootSystem::check_weight(const Weight& w, const char* module) const {
    if (w.rank() != rank_)
        throw Error(module, "weight " + to_string(w) + " has " + std::to_string(w.rank()) +
                                " coordinates, expected " + std::to_string(rank_));
}

void RootSystem::check_parabolic(const ParabolicSubset& p, const char* module) const {
    for (int i : p.simple_indices)
        if (i < 0 || i >= rank_)
            throw Error(module, "parabolic index " + std::to_string(i + 1) + " out of range 1.." +
                                    std::to_string(rank_));
}

RootSystem build_root_system(const std::string& type_label, int rank, const Caps& caps) {
    return RootSystem(parse_root_type(type_label), rank, caps);
}

// ---------------------------------------------------------------- WeylElement

WeylElement WeylElement::identity(int rank) {
    WeylElement w;
    w.rank_ = rank;
    const auto n = static_cast<std::size_t>(rank);
    w.matrix_.assign(n * n, 0);
    for (std::size_t i = 0; i < n; ++i) w.matrix_[i * n + i] = 1;
    return w;
}

namespace {

std::vector<int> multiply(const std::vector<int>& a, const std::vector<int>& b, int rank) {
    const auto n = static_cast<std::size_t>(rank);
    std::vector<int> c(n * n, 0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k) {
            if (a[i * n + k] == 0) continue;
            for (std::size_t j = 0; j < n; ++j) c[i * n + j] += a[i * n + k] * b[k * n + j];
        }
    return c;
}

std::vector<int> reflection_matrix(const RootSystem& r, int i) {
    const int rank = r.rank();
    const auto n = static_cast<std::size_t>(rank);
    std::vector<int> m(n * n, 0);
    for (std::size_t k = 0; k < n; ++k) m[k * n + k] = 1;
    for (int k = 0; k < rank; ++k) m[static_cast<std::size_t>(k) * n + static_cast<std::size_t>(i)] -= r.cartan(k, i);
    return m;
}

std::vector<int> apply_matrix(const std::vector<int>& m, const std::vector<int>& v) {
    const std::size_t n = v.size();
    std::vector<int> out(n, 0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) out[i] += m[i * n + j] * v[j];
    return out;
}

}  // namespace

WeylElement WeylElement::from_matrix(const RootSystem& r, std::vector<int> matrix) {
    WeylElement w;
    w.rank_ = r.rank();
    w.matrix_ = std::move(matrix);
    // Smallest left descent first: s_i w < w iff <w(rho), alpha_i^vee> < 0.
    Weight mu(apply_matrix(w.matrix_, r.rho().coords));
    while (true) {
        int i = 0;
        while (i < r.rank() && mu[i] >= 0) ++i;
        if (i == r.rank()) break;
        w.word_.push_back(i);
        mu = r.reflect(mu, i);
    }
    if (mu != r.rho()) throw Error(kModule, "matrix is not a Weyl group element");
    return w;
}

WeylElement WeylElement::from_word(const RootSystem& r, const std::vector<int>& word) {
    std::vector<int> m = identity(r.rank()).matrix_;
    for (int i : word) {
        if (i < 0 || i >= r.rank()) throw Error(kModule, "reflection index out of range");
        m = multiply(m, reflection_matrix(r, i), r.rank());
    }
    return from_matrix(r, std::move(m));
}

Weight WeylElement::apply(const Weight& w) const {
    if (w.rank() != rank_) throw Error(kModule, "weight rank mismatch in Weyl action");
    return Weight(apply_matrix(matrix_, w.coords));
}

WeylElement WeylElement::inverse() const {
    // The matrix is unimodular; invert over Q and read back integers.
    const auto n = static_cast<std::size_t>(rank_);
    std::vector<Rational> a(n * 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) a[i * 2 * n + j] = matrix_[i * n + j];
        a[i * 2 * n + n + i] = 1;
    }
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (a[p * 2 * n + c] == 0) ++p;
        if (p != c)
            for (std::size_t j = 0; j < 2 * n; ++j) std::swap(a[p * 2 * n + j], a[c * 2 * n + j]);
        Rational piv = a[c * 2 * n + c];
        for (std::size_t j = 0; j < 2 * n; ++j) a[c * 2 * n + j] /= piv;
        for (std::size_t r = 0; r < n; ++r) {
            if (r == c || a[r * 2 * n + c] == 0) continue;
            Rational f = a[r * 2 * n + c];
            for (std::size_t j = 0; j < 2 * n; ++j) a[r * 2 * n + j] -= f * a[c * 2 * n + j];
        }
    }
    WeylElement out;
    out.rank_ = rank_;
    out.matrix_.assign(n * n, 0);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            out.matrix_[i * n + j] = static_cast<int>(to_integer(a[i * 2 * n + n + j], kModule));
    // reversed reduced word is reduced, though not necessarily lexmin
    out.word_.assign(word_.rbegin(), word_.rend());
    return out;
}

WeylElement operator*(const WeylElement& a, const WeylElement& b) {
    if (a.rank_ != b.rank_) throw Error(kModule, "Weyl element rank mismatch");
    WeylElement c;
    c.rank_ = a.rank_;
    c.matrix_ = multiply(a.matrix_, b.matrix_, a.rank_);
    // Concatenation need not be reduced; callers that need the canonical
    // word rebuild via WeylElement::from_matrix.
    c.word_ = a.word_;
    c.word_.insert(c.word_.end(), b.word_.begin(), b.word_.end());
    return c;
}

Weight shifted_action(const WeylElement& w, const Weight& lambda) {
    const Weight rho(std::vector<int>(static_cast<std::size_t>(lambda.rank()), 1));
    return w.apply(lambda + rho) - rho;
}

int inversion_count(const RootSystem& r, const WeylElement& w) {
    int count = 0;
    for (const auto& beta : r.positive_roots()) {
        auto image = r.to_root_coords(w.apply(beta.weight));
        if (!image) throw Error(kModule, "Weyl image of a root left the root lattice");
        if (!image->is_nonnegative()) ++count;
    }
    return count;
}

std::pair<Weight, WeylElement> dominant_representative(const RootSystem& r, const Weight& lambda) {
    r.check_weight(lambda, kModule);
    Weight mu = lambda;
    std::vector<int> applied;
    while (true) {
        int i = 0;
        while (i < r.rank() && mu[i] >= 0) ++i;
        if (i == r.rank()) break;
        mu = r.reflect(mu, i);
        applied.push_back(i);
    }
    std::vector<int> word(applied.rbegin(), applied.rend());
    return {mu, WeylElement::from_word(r, word)};
}

namespace {

std::vector<WeylElement> close_under(const RootSystem& r, const std::vector<int>& generators, std::size_t cap) {
    std::vector<std::vector<int>> gens;
    for (int i : generators) gens.push_back(reflection_matrix(r, i));
    std::set<std::vector<int>> seen;
    std::vector<std::vector<int>> queue{WeylElement::identity(r.rank()).matrix()};
    seen.insert(queue.front());
    for (std::size_t head = 0; head < queue.size(); ++head) {
        for (const auto& g : gens) {
            auto next = multiply(queue[head], g, r.rank());
            if (seen.insert(next).second) {
                if (seen.size() > cap)
                    throw CapExceeded(kModule, "Weyl group order exceeds the configured cap " + std::to_string(cap));
                queue.push_back(std::move(next));
            }
        }
    }
    std::vector<WeylElement> out;
    out.reserve(queue.size());
    for (auto& m : queue) out.push_back(WeylElement::from_matrix(r, std::move(m)));
    std::sort(out.begin(), out.end(), [](const WeylElement& a, const WeylElement& b) {
        if (a.length() != b.length()) return a.length() < b.length();
        return a.word() < b.word();
    });
    return out;
}

}  // namespace

std::vector<WeylElement> enumerate_weyl_group(const RootSystem& r, const Caps& caps) {
    if (r.expected_weyl_order() > caps.max_weyl_order)
        throw CapExceeded(kModule, "Weyl group of " + r.label() + " has order " +
                                       std::to_string(r.expected_weyl_order()) + ", above the configured cap " +
                                       std::to_string(caps.max_weyl_order));
    return enumerate_parabolic_subgroup(r, ParabolicSubset::full(r.rank()), caps);
}

std::vector<WeylElement> enumerate_parabolic_subgroup(const RootSystem& r, const ParabolicSubset& p,
                                                      const Caps& caps) {
    r.check_parabolic(p, kModule);
    return close_under(r, p.simple_indices, caps.max_weyl_order);
}

std::optional<std::pair<WeylElement, Weight>> parabolic_shift(const RootSystem& r, const Weight& lambda,
                                                              const ParabolicSubset& p) {
    r.check_weight(lambda, kModule);
    r.check_parabolic(p, kModule);
    Weight nu = lambda + r.rho();
    std::vector<int> applied;
    while (true) {
        auto it = std::find_if(p.simple_indices.begin(), p.simple_indices.end(), [&](int i) { return nu[i] < 0; });
        if (it == p.simple_indices.end()) break;
        nu = r.reflect(nu, *it);
        applied.push_back(*it);
    }
    for (int i : p.simple_indices)
        if (nu[i] == 0) return std::nullopt;
    std::vector<int> word(applied.rbegin(), applied.rend());
    return std::make_pair(WeylElement::from_word(r, word), nu - r.rho());
}

std::string to_string(const Weight& w) {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < w.coords.size(); ++i) os << (i ? "," : "") << w.coords[i];
    os << ')';
    return os.str();
}

std::string to_string(const RootVec& r) {
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < r.coords.size(); ++i) os << (i ? "," : "") << r.coords[i];
    os << ']';
    return os.str();
}

}  // namespace bkf
