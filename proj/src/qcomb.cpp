#include "bkf/qcomb.hpp"

#include <algorithm>
#include <set>

namespace bkf {

namespace {
constexpr const char* kModule = "qcombinatorics";
}

QPartitionTable::QPartitionTable(const RootSystem& r, const ParabolicSubset& p, const RootVec& bound)
    : bound_(bound) {
    r.check_parabolic(p, kModule);
    if (bound.rank() != r.rank()) throw Error(kModule, "partition table bound has the wrong rank");
    if (!bound.is_nonnegative()) throw Error(kModule, "partition table bound must be nonnegative");
    const auto n = static_cast<std::size_t>(r.rank());
    stride_.assign(n, 1);
    std::size_t size = 1;
    for (std::size_t i = n; i-- > 0;) {
        stride_[i] = size;
        size *= static_cast<std::size_t>(bound.coords[i]) + 1;
    }
    table_.assign(size, QPolynomial());
    table_[0] = QPolynomial(1);

    // Row-major with the last coordinate fastest: delta - beta always has a
    // smaller flat index than delta, so one increasing pass per root applies
    // the full geometric series 1/(1 - q e^beta).
    std::vector<int> delta(n, 0);
    for (std::size_t k : r.nilradical_roots(p)) {
        const RootVec& beta = r.positive_roots()[k].coords;
        bool fits = true;
        std::ptrdiff_t offset = 0;
        for (std::size_t i = 0; i < n; ++i) {
            if (beta.coords[i] > bound.coords[i]) fits = false;
            offset += static_cast<std::ptrdiff_t>(beta.coords[i]) * static_cast<std::ptrdiff_t>(stride_[i]);
        }
        if (!fits) continue;
        std::fill(delta.begin(), delta.end(), 0);
        for (std::size_t idx = 0; idx < size; ++idx) {
            bool ok = true;
            for (std::size_t i = 0; i < n; ++i)
                if (delta[i] < beta.coords[i]) {
                    ok = false;
                    break;
                }
            if (ok) {
                const auto& src = table_[idx - static_cast<std::size_t>(offset)];
                if (!src.is_zero()) table_[idx].add_shifted(src, 1);
            }
            for (std::size_t i = n; i-- > 0;) {
                if (++delta[i] <= bound.coords[i]) break;
                delta[i] = 0;
            }
        }
    }
}

std::optional<std::size_t> QPartitionTable::flat(const RootVec& gamma) const {
    std::size_t idx = 0;
    for (std::size_t i = 0; i < stride_.size(); ++i) {
        if (gamma.coords[i] < 0 || gamma.coords[i] > bound_.coords[i]) return std::nullopt;
        idx += static_cast<std::size_t>(gamma.coords[i]) * stride_[i];
    }
    return idx;
}

const QPolynomial& QPartitionTable::at(const RootVec& gamma) const {
    if (gamma.rank() != bound_.rank()) throw Error(kModule, "partition table lookup has the wrong rank");
    auto idx = flat(gamma);
    return idx ? table_[*idx] : zero_;
}

QPolynomial q_partition(const RootSystem& r, const Weight& gamma, const ParabolicSubset& p) {
    r.check_weight(gamma, kModule);
    auto rc = r.to_root_coords(gamma);
    if (!rc || !rc->is_nonnegative()) return {};
    QPartitionTable table(r, p, *rc);
    return table.at(*rc);
}

QPolynomial lusztig_q_analog(const RootSystem& r, const std::vector<WeylElement>& weyl, const Weight& mu,
                             const Weight& lambda, const ParabolicSubset& p, Execution ex) {
    r.check_weight(mu, kModule);
    r.check_weight(lambda, kModule);
    r.check_parabolic(p, kModule);
    if (!r.same_root_coset(mu, lambda)) return {};

    // Only translates w*mu - lambda in the nonnegative cone can contribute.
    std::vector<std::optional<RootVec>> gamma(weyl.size());
    RootVec bound = RootVec::zero(r.rank());
    for (std::size_t k = 0; k < weyl.size(); ++k) {
        auto rc = r.to_root_coords(shifted_action(weyl[k], mu) - lambda);
        if (!rc || !rc->is_nonnegative()) continue;
        for (int i = 0; i < r.rank(); ++i)
            bound.coords[static_cast<std::size_t>(i)] = std::max(bound[i], (*rc)[i]);
        gamma[k] = std::move(rc);
    }
    QPartitionTable table(r, p, bound);
    return kernels::signed_sum(
        weyl.size(),
        [&](std::size_t k) -> std::optional<kernels::SignedTerm> {
            if (!gamma[k]) return std::nullopt;
            return kernels::SignedTerm{weyl[k].length() % 2 ? -1 : 1, &table.at(*gamma[k])};
        },
        ex);
}

QPolynomial lusztig_q_analog(const RootSystem& r, const Weight& mu, const Weight& lambda, const ParabolicSubset& p,
                             const Caps& caps, Execution ex) {
    return lusztig_q_analog(r, enumerate_weyl_group(r, caps), mu, lambda, p, ex);
}

namespace {

std::vector<Weight> dominant_weights_below(const RootSystem& r, const Weight& mu) {
    // Dominant weights below mu are connected to mu by subtracting positive
    // roots while staying dominant.
    std::set<Weight> seen{mu};
    std::vector<Weight> queue{mu};
    for (std::size_t head = 0; head < queue.size(); ++head) {
        for (const auto& beta : r.positive_roots()) {
            Weight nu = queue[head] - beta.weight;
            if (!r.is_dominant(nu) || seen.count(nu)) continue;
            seen.insert(nu);
            queue.push_back(nu);
        }
    }
    return queue;
}

}  // namespace

std::map<Weight, BigInt> dominant_character(const RootSystem& r, const Weight& mu) {
    r.check_weight(mu, kModule);
    if (!r.is_dominant(mu)) throw Error(kModule, "highest weight " + to_string(mu) + " is not dominant");
    auto dom = dominant_weights_below(r, mu);
    // process by depth, shallowest first
    std::vector<std::pair<int, Weight>> order;
    for (auto& nu : dom) order.emplace_back(r.to_root_coords(mu - nu)->height(), nu);
    std::sort(order.begin(), order.end());

    std::map<Weight, BigInt> mult;
    const Weight rho = r.rho();
    const Rational top = r.norm_sq(mu + rho);
    auto lookup = [&](const Weight& w) -> BigInt {
        auto plus = dominant_representative(r, w).first;
        auto it = mult.find(plus);
        return it == mult.end() ? BigInt(0) : it->second;
    };
    for (const auto& [depth, nu] : order) {
        if (depth == 0) {
            mult[nu] = 1;
            continue;
        }
        Rational sum = 0;
        for (const auto& beta : r.positive_roots()) {
            Weight w = nu + beta.weight;
            // weights along a root string are unbroken, so stop at the first gap
            while (true) {
                BigInt m = lookup(w);
                if (m == 0) break;
                sum += Rational(m) * r.inner(w, beta.weight);
                w += beta.weight;
            }
        }
        Rational denom = top - r.norm_sq(nu + rho);
        if (denom == 0) throw Error(kModule, "degenerate Freudenthal denominator");
        Rational value = 2 * sum / denom;
        if (value.get_den() != 1) throw Error(kModule, "non-integral Freudenthal multiplicity (internal error)");
        mult[nu] = value.get_num();
    }
    return mult;
}

BigInt freudenthal_multiplicity(const RootSystem& r, const Weight& mu, const Weight& lambda) {
    r.check_weight(lambda, kModule);
    if (!r.same_root_coset(mu, lambda)) return 0;
    auto chi = dominant_character(r, mu);
    auto it = chi.find(dominant_representative(r, lambda).first);
    return it == chi.end() ? BigInt(0) : it->second;
}

BigInt weyl_dimension(const RootSystem& r, const Weight& mu) {
    r.check_weight(mu, kModule);
    if (!r.is_dominant(mu)) throw Error(kModule, "highest weight " + to_string(mu) + " is not dominant");
    Rational prod = 1;
    const Weight shifted = mu + r.rho();
    for (std::size_t k = 0; k < r.num_positive_roots(); ++k)
        prod *= ratio(r.pair(shifted, k), r.pair(r.rho(), k));
    if (prod.get_den() != 1) throw Error(kModule, "non-integral Weyl dimension (internal error)");
    return prod.get_num();
}

std::vector<Weight> weyl_orbit(const RootSystem& r, const Weight& w) {
    std::set<Weight> seen{w};
    std::vector<Weight> queue{w};
    for (std::size_t head = 0; head < queue.size(); ++head)
        for (int i = 0; i < r.rank(); ++i) {
            Weight next = r.reflect(queue[head], i);
            if (seen.insert(next).second) queue.push_back(next);
        }
    return {seen.begin(), seen.end()};
}

std::map<Weight, BigInt> full_character(const RootSystem& r, const Weight& mu) {
    std::map<Weight, BigInt> out;
    for (const auto& [nu, m] : dominant_character(r, mu))
        for (auto& w : weyl_orbit(r, nu)) out[w] = m;
    return out;
}

}  // namespace bkf
