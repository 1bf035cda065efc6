#include "bkf/chevalley.hpp"

#include <algorithm>
#include <atomic>

namespace bkf {

namespace {

constexpr const char* kModule = "chevalley";

std::atomic<std::uint64_t> next_algebra_id{1};

SparseVector flatten(const SparseMatrix& m) {
    SparseVector out;
    const auto rows = static_cast<Key>(m.rows());
    for (std::size_t j = 0; j < m.cols(); ++j)
        for (const auto& [i, val] : m.col(j)) out.add(static_cast<Key>(j) * rows + i, val);
    return out;
}

}  // namespace

ChevalleyAlgebra::ChevalleyAlgebra(const RootSystem& r, const Caps& caps)
    : root_(std::make_shared<const RootSystem>(r)), id_(next_algebra_id++) {
    const int rank = r.rank();
    const std::size_t npos = r.num_positive_roots();
    dim_ = static_cast<std::size_t>(rank) + 2 * npos;

    basis_weights_.assign(static_cast<std::size_t>(rank), Weight::zero(rank));
    for (const auto& beta : r.positive_roots()) basis_weights_.push_back(beta.weight);
    for (const auto& beta : r.positive_roots()) basis_weights_.push_back(-beta.weight);

    recipes_.resize(npos);
    for (std::size_t k = 0; k < npos; ++k) {
        const RootVec& beta = r.positive_roots()[k].coords;
        if (beta.height() == 1) {
            recipes_[k].simple_index = static_cast<int>(std::find(beta.coords.begin(), beta.coords.end(), 1) -
                                                         beta.coords.begin());
            continue;
        }
        for (int i = 0; i < rank; ++i) {
            auto parent = r.positive_root_index(beta - RootVec::simple(rank, i));
            if (!parent) continue;
            const RootVec& gamma = r.positive_roots()[*parent].coords;
            int p = 0;
            while (r.is_root(gamma - (p + 1) * RootVec::simple(rank, i))) ++p;
            recipes_[k] = RootVectorRecipe{i, *parent, p + 1};
            break;
        }
    }

    Caps adj_caps = caps;
    adj_caps.max_module_dim = std::max(caps.max_module_dim, dim_);
    adjoint_ = build_irrep(r, r.highest_root().weight, adj_caps);
    if (adjoint_.dim() != dim_) throw Error(kModule, "adjoint module has the wrong dimension (internal error)");

    ModuleAction action(*this, adjoint_);
    IncrementalBasis span;
    for (std::size_t k = 0; k < dim_; ++k)
        if (span.insert(flatten(action.basis_matrix(k))))
            throw Error(kModule, "basis matrices are linearly dependent (internal error)");

    table_.resize(dim_ * dim_);
    for (std::size_t a = 0; a < dim_; ++a)
        for (std::size_t b = a + 1; b < dim_; ++b) {
            auto coords = span.coordinates(flatten(commutator(action.basis_matrix(a), action.basis_matrix(b))));
            if (!coords) throw Error(kModule, "bracket left the algebra (internal error)");
            SparseVector v;
            for (std::size_t m = 0; m < coords->size(); ++m)
                if ((*coords)[m] != 0) v.add(static_cast<Key>(m), (*coords)[m]);
            table_[b * dim_ + a] = Rational(-1) * v;
            table_[a * dim_ + b] = std::move(v);
        }

    // Chevalley basis checks.
    for (std::size_t k = 0; k < npos; ++k)
        if (bracket(basis(x_index(k)), basis(y_index(k))) != coroot(k))
            throw Error(kModule, "[X_beta, X_-beta] != H_beta for beta = " + to_string(r.positive_roots()[k].coords));
    std::vector<RootVec> all;
    for (const auto& beta : r.positive_roots()) all.push_back(beta.coords);
    for (const auto& beta : r.positive_roots()) all.push_back(-beta.coords);
    for (const auto& b : all)
        for (const auto& c : all) {
            if (!r.is_root(b + c)) continue;
            int p = 0;
            while (r.is_root(c - (p + 1) * b)) ++p;
            Rational n = structure_constant(b, c);
            if (n != p + 1 && n != -(p + 1))
                throw Error(kModule, "structure constant N" + to_string(b) + to_string(c) + " = " + n.get_str() +
                                         ", expected +-" + std::to_string(p + 1));
        }
    if (rank <= 4 && jacobi_violations(*this) != 0) throw Error(kModule, "Jacobi identity fails (internal error)");
}

std::string ChevalleyAlgebra::basis_name(std::size_t k) const {
    const int rank = this->rank();
    if (k < static_cast<std::size_t>(rank)) return "H" + std::to_string(k + 1);
    const std::size_t npos = root_->num_positive_roots();
    const std::size_t idx = k - static_cast<std::size_t>(rank);
    if (idx < npos) return "X" + to_string(root_->positive_roots()[idx].coords);
    return "X" + to_string(-root_->positive_roots()[idx - npos].coords);
}

void ChevalleyAlgebra::check_same(const AlgebraElement& a) const {
    if (a.algebra_id != id_) throw Error(kModule, "element belongs to a different algebra");
}

AlgebraElement ChevalleyAlgebra::basis(std::size_t k) const {
    if (k >= dim_) throw Error(kModule, "basis index out of range");
    return {id_, SparseVector::unit(static_cast<Key>(k))};
}

std::optional<std::size_t> ChevalleyAlgebra::basis_of_root(const RootVec& beta) const {
    if (auto k = root_->positive_root_index(beta)) return x_index(*k);
    if (auto k = root_->positive_root_index(-beta)) return y_index(*k);
    return std::nullopt;
}

AlgebraElement ChevalleyAlgebra::x(const RootVec& beta) const {
    auto k = basis_of_root(beta);
    if (!k) throw Error(kModule, to_string(beta) + " is not a root");
    return basis(*k);
}

AlgebraElement ChevalleyAlgebra::coroot(std::size_t positive_root) const {
    // beta^vee = sum_i beta_i |alpha_i|^2 / |beta|^2 alpha_i^vee
    const Root& beta = root_->positive_roots().at(positive_root);
    SparseVector v;
    for (int i = 0; i < rank(); ++i)
        v.add(static_cast<Key>(i), ratio(beta.coords[i] * root_->simple_norm_sq(i), beta.norm_sq));
    return make(std::move(v));
}

AlgebraElement ChevalleyAlgebra::cartan_element_from_labels(const std::vector<int>& labels) const {
    const auto n = static_cast<std::size_t>(rank());
    if (labels.size() != n) throw Error(kModule, "label vector has the wrong length");
    // alpha_i(sum_j c_j H_j) = sum_j c_j C[j][i]
    Matrix a(n, n + 1);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) a(i, j) = root_->cartan(static_cast<int>(j), static_cast<int>(i));
        a(i, n) = -labels[i];
    }
    auto kernel = a.nullspace();
    if (kernel.size() != 1 || kernel[0][n] != 1) throw Error(kModule, "singular Cartan matrix (internal error)");
    SparseVector v;
    for (std::size_t j = 0; j < n; ++j) v.add(static_cast<Key>(j), kernel[0][j]);
    return make(std::move(v));
}

AlgebraElement ChevalleyAlgebra::bracket(const AlgebraElement& a, const AlgebraElement& b) const {
    check_same(a);
    check_same(b);
    SparseVector out;
    for (const auto& [i, ai] : a.coefficients)
        for (const auto& [j, bj] : b.coefficients)
            out.axpy(ai * bj, table_[static_cast<std::size_t>(i) * dim_ + static_cast<std::size_t>(j)]);
    return make(std::move(out));
}

SparseMatrix ChevalleyAlgebra::ad_matrix(const AlgebraElement& x) const {
    check_same(x);
    SparseMatrix m(dim_, dim_);
    for (std::size_t j = 0; j < dim_; ++j)
        for (const auto& [i, xi] : x.coefficients)
            m.col(j).axpy(xi, table_[static_cast<std::size_t>(i) * dim_ + j]);
    return m;
}

Rational ChevalleyAlgebra::structure_constant(const RootVec& beta, const RootVec& gamma) const {
    auto target = basis_of_root(beta + gamma);
    if (!target) return 0;
    return bracket(x(beta), x(gamma)).coefficients.get(static_cast<Key>(*target));
}

ModuleAction::ModuleAction(const ChevalleyAlgebra& g, const ExplicitModule& v) : g_(&g) {
    const RootSystem& r = g.root_system();
    if (v.rank() != r.rank()) throw Error(kModule, "module rank does not match the algebra");
    mats_.resize(g.dim());
    for (int i = 0; i < r.rank(); ++i) mats_[g.h_index(i)] = v.h[static_cast<std::size_t>(i)];
    for (std::size_t k = 0; k < r.num_positive_roots(); ++k) {
        const auto& rec = g.recipes()[k];
        const auto i = static_cast<std::size_t>(rec.simple_index);
        if (rec.parent == RootVectorRecipe::npos) {
            mats_[g.x_index(k)] = v.e[i];
            mats_[g.y_index(k)] = v.f[i];
            continue;
        }
        const Rational inv(1, rec.divisor);
        mats_[g.x_index(k)] = commutator(v.e[i], mats_[g.x_index(rec.parent)]).scaled(inv);
        mats_[g.y_index(k)] = commutator(v.f[i], mats_[g.y_index(rec.parent)]).scaled(-inv);
    }
}

SparseMatrix ModuleAction::apply(const AlgebraElement& x) const {
    g_->check_same(x);
    const std::size_t n = mats_.empty() ? 0 : mats_.front().rows();
    SparseMatrix out(n, n);
    for (const auto& [k, c] : x.coefficients) {
        const auto& m = mats_[static_cast<std::size_t>(k)];
        for (std::size_t j = 0; j < n; ++j) out.col(j).axpy(c, m.col(j));
    }
    return out;
}

SparseMatrix apply_element(const ChevalleyAlgebra& g, const ExplicitModule& v, const AlgebraElement& x) {
    return ModuleAction(g, v).apply(x);
}

std::size_t jacobi_violations(const ChevalleyAlgebra& g) {
    std::size_t bad = 0;
    const std::size_t n = g.dim();
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a + 1; b < n; ++b)
            for (std::size_t c = b + 1; c < n; ++c) {
                auto x = g.basis(a), y = g.basis(b), z = g.basis(c);
                SparseVector s = g.bracket(x, g.bracket(y, z)).coefficients;
                s += g.bracket(y, g.bracket(z, x)).coefficients;
                s += g.bracket(z, g.bracket(x, y)).coefficients;
                if (!s.empty()) ++bad;
            }
    return bad;
}

}  // namespace bkf
