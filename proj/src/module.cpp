#include "bkf/module.hpp"

#include "bkf/qcomb.hpp"

#include <algorithm>

namespace bkf {

namespace {

constexpr const char* kModule = "rep_builder";

const std::vector<std::size_t>& empty_indices() {
    static const std::vector<std::size_t> none;
    return none;
}

void check_dimension(const RootSystem& r, const Weight& mu, const Caps& caps) {
    r.check_weight(mu, kModule);
    if (!r.is_dominant(mu)) throw Error(kModule, "highest weight " + to_string(mu) + " is not dominant");
    BigInt d = weyl_dimension(r, mu);
    if (d > BigInt(static_cast<unsigned long>(caps.max_module_dim)))
        throw CapExceeded(kModule, "dim V" + to_string(mu) + " = " + d.get_str() +
                                       " exceeds the configured module dimension cap " +
                                       std::to_string(caps.max_module_dim));
}

SparseVector unit(std::size_t k) { return SparseVector::unit(static_cast<Key>(k)); }

void finish(ExplicitModule& v, std::vector<std::vector<SparseVector>>& ecols,
            std::vector<std::vector<SparseVector>>& fcols) {
    const std::size_t n = v.dim();
    const auto rank = static_cast<std::size_t>(v.rank());
    v.e.assign(rank, SparseMatrix(n, n));
    v.f.assign(rank, SparseMatrix(n, n));
    v.h.assign(rank, SparseMatrix(n, n));
    for (std::size_t i = 0; i < rank; ++i) {
        ecols[i].resize(n);
        fcols[i].resize(n);
        for (std::size_t b = 0; b < n; ++b) {
            v.e[i].col(b) = std::move(ecols[i][b]);
            v.f[i].col(b) = std::move(fcols[i][b]);
            int c = v.basis_weights[b][static_cast<int>(i)];
            if (c != 0) v.h[i].col(b) = Rational(c) * unit(b);
        }
    }
    v.weight_index.clear();
    for (std::size_t b = 0; b < n; ++b) v.weight_index[v.basis_weights[b]].push_back(b);
}

ExplicitModule build_recursive(const RootSystem& r, const Weight& mu, const Caps& caps) {
    const int rank = r.rank();
    const auto nr = static_cast<std::size_t>(rank);
    std::vector<Weight> simple(nr);
    for (int i = 0; i < rank; ++i) simple[static_cast<std::size_t>(i)] = r.simple_root_weight(i);

    ExplicitModule v;
    v.highest_weight = mu;
    v.ambient_descriptor = "recursive";
    v.basis_weights.push_back(mu);
    std::vector<std::vector<SparseVector>> ecols(nr, std::vector<SparseVector>(1));
    std::vector<std::vector<SparseVector>> fcols(nr, std::vector<SparseVector>(1));

    std::vector<std::size_t> layer{0};
    while (!layer.empty()) {
        // Group the candidates f_i b by target weight.
        std::map<Weight, std::vector<std::pair<std::size_t, int>>> targets;
        for (std::size_t b : layer)
            for (int i = 0; i < rank; ++i)
                targets[v.basis_weights[b] - simple[static_cast<std::size_t>(i)]].emplace_back(b, i);

        std::vector<std::size_t> next;
        for (auto& [nu, cands] : targets) {
            IncrementalBasis ib;
            std::vector<std::size_t> accepted;
            for (auto [b, i] : cands) {
                const auto ui = static_cast<std::size_t>(i);
                // e_j f_i b = f_i e_j b + delta_ij <wt b, alpha_i^vee> b
                SparseVector up;
                for (std::size_t j = 0; j < nr; ++j) up += ecols[j][b];
                SparseVector image;
                for (const auto& [key, val] : up) image.axpy(val, fcols[ui][static_cast<std::size_t>(key)]);
                image.add(static_cast<Key>(b), Rational(v.basis_weights[b][i]));

                auto coords = ib.insert(image);
                if (coords) {
                    SparseVector col;
                    for (std::size_t m = 0; m < coords->size(); ++m)
                        if ((*coords)[m] != 0) col.add(static_cast<Key>(accepted[m]), (*coords)[m]);
                    fcols[ui][b] = std::move(col);
                    continue;
                }
                const std::size_t k = v.basis_weights.size();
                if (k + 1 > caps.max_module_dim)
                    throw CapExceeded(kModule, "module dimension exceeds the configured cap");
                v.basis_weights.push_back(nu);
                accepted.push_back(k);
                next.push_back(k);
                for (std::size_t j = 0; j < nr; ++j) {
                    ecols[j].emplace_back();
                    fcols[j].emplace_back();
                }
                fcols[ui][b] = unit(k);
                for (const auto& [key, val] : image) {
                    const Weight diff = v.basis_weights[static_cast<std::size_t>(key)] - nu;
                    auto it = std::find(simple.begin(), simple.end(), diff);
                    ecols[static_cast<std::size_t>(it - simple.begin())][k].add(key, val);
                }
            }
        }
        layer = std::move(next);
    }
    finish(v, ecols, fcols);
    return v;
}

// ---------------------------------------------------------------- tensor construction

// A small module given by explicit generator matrices.
struct Factor {
    std::vector<Weight> weights;
    std::vector<SparseMatrix> e, f;
};

Factor defining_module_type_a(const RootSystem& r) {
    // Standard basis v_1..v_{n+1}; wt(v_k) = omega_k - omega_{k-1}.
    const int n = r.rank();
    Factor fac;
    const auto d = static_cast<std::size_t>(n + 1);
    for (int k = 0; k <= n; ++k) {
        Weight w = Weight::zero(n);
        if (k < n) w.coords[static_cast<std::size_t>(k)] += 1;
        if (k > 0) w.coords[static_cast<std::size_t>(k - 1)] -= 1;
        fac.weights.push_back(w);
    }
    for (int i = 0; i < n; ++i) {
        SparseMatrix e(d, d), f(d, d);
        const auto ui = static_cast<std::size_t>(i);
        e.col(ui + 1) = unit(ui);
        f.col(ui) = unit(ui + 1);
        fac.e.push_back(std::move(e));
        fac.f.push_back(std::move(f));
    }
    return fac;
}

struct TensorPower {
    const Factor* factor;
    int k;
    std::size_t d;
    std::vector<std::size_t> stride;

    std::size_t digit(Key key, int p) const {
        return (static_cast<std::size_t>(key) / stride[static_cast<std::size_t>(p)]) % d;
    }

    SparseVector apply(const std::vector<SparseMatrix>& gen, int i, const SparseVector& v) const {
        SparseVector out;
        const auto& m = gen[static_cast<std::size_t>(i)];
        for (const auto& [key, val] : v)
            for (int p = 0; p < k; ++p) {
                const std::size_t dig = digit(key, p);
                for (const auto& [to, c] : m.col(dig))
                    out.add(key + (static_cast<Key>(to) - static_cast<Key>(dig)) *
                                      static_cast<Key>(stride[static_cast<std::size_t>(p)]),
                            val * c);
            }
        return out;
    }

    Weight weight(Key key, int rank) const {
        Weight w = Weight::zero(rank);
        for (int p = 0; p < k; ++p) w += factor->weights[digit(key, p)];
        return w;
    }
};

std::optional<SparseVector> highest_weight_vector(const RootSystem& r, const TensorPower& t, const Weight& mu,
                                                  std::size_t total) {
    std::vector<Key> keys;
    for (std::size_t key = 0; key < total; ++key)
        if (t.weight(static_cast<Key>(key), r.rank()) == mu) keys.push_back(static_cast<Key>(key));
    if (keys.empty()) return std::nullopt;
    std::vector<SparseVector> images(keys.size());
    std::map<Key, std::size_t> rows;
    for (std::size_t c = 0; c < keys.size(); ++c) {
        for (int i = 0; i < r.rank(); ++i) {
            // offset rows per generator so that different e_i do not mix
            for (const auto& [key, val] : t.apply(t.factor->e, i, SparseVector::unit(keys[c]))) {
                Key tagged = key * r.rank() + i;
                images[c].add(tagged, val);
                rows.emplace(tagged, 0);
            }
        }
    }
    std::size_t row = 0;
    for (auto& [key, idx] : rows) idx = row++;
    Matrix a(rows.size(), keys.size());
    for (std::size_t c = 0; c < keys.size(); ++c)
        for (const auto& [key, val] : images[c]) a(rows[key], c) = val;
    auto kernel = a.nullspace();
    if (kernel.empty()) return std::nullopt;
    SparseVector hw;
    for (std::size_t c = 0; c < keys.size(); ++c)
        if (kernel.front()[c] != 0) hw.add(keys[c], kernel.front()[c]);
    return hw;
}

ExplicitModule build_tensor(const RootSystem& r, const Weight& mu, const Caps& caps) {
    Factor fac;
    std::string name;
    int k_min = 0, k_max = 0;
    if (r.type() == RootType::A) {
        fac = defining_module_type_a(r);
        name = "defining";
        for (int i = 0; i < r.rank(); ++i) k_min += (i + 1) * mu[i];
        k_max = k_min;
    } else {
        if (!r.to_root_coords(mu))
            throw Error(kModule, "weight " + to_string(mu) +
                                     " is not in the root lattice, so no adjoint tensor power contains it");
        ExplicitModule adj = build_recursive(r, r.highest_root().weight, caps);
        fac.weights = adj.basis_weights;
        fac.e = adj.e;
        fac.f = adj.f;
        name = "adjoint";
        k_max = 64;
    }
    const std::size_t d = fac.weights.size();
    for (int k = k_min; k <= k_max; ++k) {
        std::size_t total = 1;
        for (int p = 0; p < k; ++p) {
            total *= d;
            if (total > caps.max_ambient_dim)
                throw CapExceeded(kModule, "ambient " + name + "^" + std::to_string(k) + " has dimension above the cap " +
                                               std::to_string(caps.max_ambient_dim));
        }
        TensorPower t{&fac, k, d, std::vector<std::size_t>(static_cast<std::size_t>(k))};
        std::size_t s = 1;
        for (int p = k; p-- > 0;) {
            t.stride[static_cast<std::size_t>(p)] = s;
            s *= d;
        }
        auto hw = highest_weight_vector(r, t, mu, total);
        if (!hw) continue;

        ExplicitModule v;
        v.highest_weight = mu;
        v.ambient_descriptor = name + "^" + std::to_string(k);
        v.ambient_dimension = total;
        std::map<Weight, IncrementalBasis> spaces;
        std::map<Weight, std::vector<std::size_t>> members;
        auto add_vector = [&](const Weight& w, const SparseVector& vec) -> bool {
            if (spaces[w].insert(vec)) return false;
            members[w].push_back(v.basis_weights.size());
            v.basis_weights.push_back(w);
            v.ambient_basis.push_back(vec);
            if (v.basis_weights.size() > caps.max_module_dim)
                throw CapExceeded(kModule, "module dimension exceeds the configured cap");
            return true;
        };
        add_vector(mu, *hw);
        for (std::size_t head = 0; head < v.basis_weights.size(); ++head)
            for (int i = 0; i < r.rank(); ++i) {
                SparseVector img = t.apply(fac.f, i, v.ambient_basis[head]);
                if (!img.empty()) add_vector(v.basis_weights[head] - r.simple_root_weight(i), img);
            }

        const auto nr = static_cast<std::size_t>(r.rank());
        std::vector<std::vector<SparseVector>> ecols(nr, std::vector<SparseVector>(v.dim()));
        std::vector<std::vector<SparseVector>> fcols(nr, std::vector<SparseVector>(v.dim()));
        auto express = [&](const Weight& w, const SparseVector& vec) {
            SparseVector out;
            if (vec.empty()) return out;
            auto it = spaces.find(w);
            auto coords = it == spaces.end() ? std::nullopt : it->second.coordinates(vec);
            if (!coords) throw Error(kModule, "tensor module is not closed under the generators (internal error)");
            const auto& idx = members[w];
            for (std::size_t m = 0; m < coords->size(); ++m)
                if ((*coords)[m] != 0) out.add(static_cast<Key>(idx[m]), (*coords)[m]);
            return out;
        };
        for (std::size_t b = 0; b < v.dim(); ++b)
            for (int i = 0; i < r.rank(); ++i) {
                const Weight& w = v.basis_weights[b];
                const Weight a = r.simple_root_weight(i);
                ecols[static_cast<std::size_t>(i)][b] = express(w + a, t.apply(fac.e, i, v.ambient_basis[b]));
                fcols[static_cast<std::size_t>(i)][b] = express(w - a, t.apply(fac.f, i, v.ambient_basis[b]));
            }
        finish(v, ecols, fcols);
        return v;
    }
    throw Error(kModule, "no highest weight vector of weight " + to_string(mu) + " found in any " + name +
                             " tensor power within the cap");
}

}  // namespace

const std::vector<std::size_t>& ExplicitModule::indices_of(const Weight& lambda) const {
    auto it = weight_index.find(lambda);
    return it == weight_index.end() ? empty_indices() : it->second;
}

ExplicitModule build_irrep(const RootSystem& r, const Weight& mu, const Caps& caps, IrrepMethod method) {
    check_dimension(r, mu, caps);
    return method == IrrepMethod::Recursive ? build_recursive(r, mu, caps) : build_tensor(r, mu, caps);
}

std::vector<SparseVector> weight_space(const ExplicitModule& v, const Weight& lambda) {
    std::vector<SparseVector> out;
    for (std::size_t k : v.indices_of(lambda)) out.push_back(unit(k));
    return out;
}

void check_module(const RootSystem& r, const ExplicitModule& v) {
    auto fail = [](const std::string& what) { return Error(kModule, "module check failed: " + what); };
    const std::size_t n = v.dim();
    for (int i = 0; i < r.rank(); ++i) {
        const auto ui = static_cast<std::size_t>(i);
        const Weight a = r.simple_root_weight(i);
        for (std::size_t b = 0; b < n; ++b) {
            if (v.h[ui].col(b) != Rational(v.basis_weights[b][i]) * unit(b)) throw fail("h is not diagonal");
            for (const auto& [key, val] : v.e[ui].col(b))
                if (v.basis_weights[static_cast<std::size_t>(key)] != v.basis_weights[b] + a)
                    throw fail("e does not raise weights by a simple root");
            for (const auto& [key, val] : v.f[ui].col(b))
                if (v.basis_weights[static_cast<std::size_t>(key)] != v.basis_weights[b] - a)
                    throw fail("f does not lower weights by a simple root");
        }
        if (commutator(v.h[ui], v.e[ui]) != v.e[ui].scaled(2)) throw fail("[h, e] != 2e");
        if (commutator(v.h[ui], v.f[ui]) != v.f[ui].scaled(-2)) throw fail("[h, f] != -2f");
        for (int j = 0; j < r.rank(); ++j) {
            SparseMatrix c = commutator(v.e[ui], v.f[static_cast<std::size_t>(j)]);
            if (i == j ? c != v.h[ui] : !c.is_zero()) throw fail("[e_i, f_j] != delta_ij h_i");
        }
    }
}

}  // namespace bkf
