#include "bkf/filtration.hpp"

#include <map>

namespace bkf {

namespace {
constexpr const char* kModule = "rep_builder";
}

std::vector<SparseVector> l_highest_space(const ExplicitModule& v, const Weight& lambda, const ParabolicSubset& p) {
    const auto& idx = v.indices_of(lambda);
    if (idx.empty()) return {};
    for (int i : p.simple_indices)
        if (i < 0 || i >= v.rank()) throw Error(kModule, "parabolic index out of range");
    // Stack e_alpha for alpha in pi_P; rows keyed by target basis index.
    std::map<Key, std::size_t> rows;
    for (int i : p.simple_indices)
        for (std::size_t b : idx)
            for (const auto& [key, val] : v.e[static_cast<std::size_t>(i)].col(b)) rows.emplace(key, 0);
    std::size_t row = 0;
    for (auto& [key, r] : rows) r = row++;
    Matrix a(rows.size(), idx.size());
    for (int i : p.simple_indices)
        for (std::size_t c = 0; c < idx.size(); ++c)
            for (const auto& [key, val] : v.e[static_cast<std::size_t>(i)].col(idx[c])) a(rows[key], c) += val;
    std::vector<SparseVector> out;
    for (const auto& k : a.nullspace()) {
        SparseVector u;
        for (std::size_t c = 0; c < idx.size(); ++c)
            if (k[c] != 0) u.add(static_cast<Key>(idx[c]), k[c]);
        out.push_back(std::move(u));
    }
    return out;
}

FiltrationReport bk_jump_polynomial(const ExplicitModule& v, const SparseMatrix& m, const Weight& lambda,
                                    const ParabolicSubset& p) {
    {
        std::vector<SparseVector> cols;
        for (std::size_t j = 0; j < v.dim(); ++j) cols.push_back(SparseVector::unit(static_cast<Key>(j)));
        std::size_t steps = 0;
        while (true) {
            bool all_zero = true;
            for (auto& c : cols) {
                c = m.apply(c);
                if (!c.empty()) all_zero = false;
            }
            if (all_zero) break;
            if (++steps > v.dim()) throw Error(kModule, "the element does not act nilpotently on the module");
        }
    }
    std::vector<SparseVector> images = l_highest_space(v, lambda, p);
    const std::size_t total = images.size();
    FiltrationReport rep;
    std::vector<std::int64_t> coeffs;
    std::size_t prev = 0;
    // M is nilpotent iff M^{dim V} = 0, so more steps than dim V means it is not.
    for (std::size_t n = 0;; ++n) {
        if (n > v.dim()) throw Error(kModule, "the element does not act nilpotently on the module");
        for (auto& u : images) u = m.apply(u);
        const std::size_t dim_f = total - rank(images);
        rep.subspace_dims.push_back(dim_f);
        coeffs.push_back(static_cast<std::int64_t>(dim_f - prev));
        prev = dim_f;
        if (dim_f == total) break;
    }
    rep.jump_polynomial = QPolynomial::from_coefficients(std::move(coeffs));
    return rep;
}

FiltrationReport bk_jump_polynomial(const ChevalleyAlgebra& g, const ExplicitModule& v, const AlgebraElement& x,
                                    const Weight& lambda, const ParabolicSubset& p) {
    return bk_jump_polynomial(v, apply_element(g, v, x), lambda, p);
}

}  // namespace bkf
