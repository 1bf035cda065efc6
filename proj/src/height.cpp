#include "bkf/height.hpp"

#include <algorithm>
#include <functional>
#include <unordered_map>

namespace bkf {

namespace {
constexpr const char* kModule = "height";
}

Weight plus(const RootSystem& r, const Weight& lambda) { return dominant_representative(r, lambda).first; }

Weight star(const RootSystem& r, const Weight& lambda) {
    r.check_weight(lambda, kModule);
    Weight w = lambda;
    while (true) {
        int i = 0;
        while (i < r.rank() && w[i] >= 0) ++i;
        if (i == r.rank()) return w;
        w += r.simple_root_weight(i);
    }
}

int longest_dominant_chain(const RootSystem& r, const Weight& lo, const Weight& hi) {
    auto span = r.to_root_coords(hi - lo);
    if (!span || !span->is_nonnegative())
        throw Error(kModule, "chain endpoints " + to_string(lo) + " and " + to_string(hi) + " are not comparable");
    const int n = r.rank();
    const auto un = static_cast<std::size_t>(n);
    // Points are offsets d (root coords) from lo with 0 <= d <= span.
    std::vector<std::size_t> stride(un);
    std::size_t s = 1;
    for (std::size_t i = un; i-- > 0;) {
        stride[i] = s;
        s *= static_cast<std::size_t>(span->coords[i]) + 1;
    }
    std::vector<std::vector<int>> steps;  // positive roots in root coords
    for (const auto& beta : r.positive_roots()) steps.push_back(beta.coords.coords);

    std::unordered_map<std::size_t, int> memo;
    // depth(d, w): longest chain from the point d (weight w) down to lo.
    std::function<int(std::vector<int>&, Weight&)> depth = [&](std::vector<int>& d, Weight& w) -> int {
        std::size_t key = 0;
        bool at_bottom = true;
        for (std::size_t i = 0; i < un; ++i) {
            key += static_cast<std::size_t>(d[i]) * stride[i];
            if (d[i] != 0) at_bottom = false;
        }
        if (at_bottom) return 0;
        if (auto it = memo.find(key); it != memo.end()) return it->second;
        int best = -1;  // -1: lo not reachable along dominant steps
        for (std::size_t k = 0; k < steps.size(); ++k) {
            bool fits = true;
            for (std::size_t i = 0; i < un; ++i)
                if (d[i] < steps[k][i]) fits = false;
            if (!fits) continue;
            const Weight& bw = r.positive_roots()[k].weight;
            bool dominant = true;
            for (int i = 0; i < n; ++i)
                if (w[i] - bw[i] < 0) dominant = false;
            if (!dominant) continue;
            for (std::size_t i = 0; i < un; ++i) d[i] -= steps[k][i];
            w -= bw;
            int sub = depth(d, w);
            for (std::size_t i = 0; i < un; ++i) d[i] += steps[k][i];
            w += bw;
            if (sub >= 0) best = std::max(best, sub + 1);
        }
        memo.emplace(key, best);
        return best;
    };
    std::vector<int> d = span->coords;
    Weight w = hi;
    int result = depth(d, w);
    if (result < 0) throw Error(kModule, "no dominant chain between the endpoints (internal error)");
    return result;
}

int cht(const RootSystem& r, const Weight& lambda) {
    return longest_dominant_chain(r, star(r, lambda), plus(r, lambda));
}

bool cht_is_zero_fast(const RootSystem& r, const Weight& lambda) {
    r.check_weight(lambda, kModule);
    for (std::size_t k = 0; k < r.num_positive_roots(); ++k)
        if (r.pair(lambda, k) < -1) return false;
    return true;
}

namespace reference {

namespace {

// Every dominant weight lambda + sum c_i alpha_i with 0 <= c <= bound.
std::vector<Weight> dominant_in_box(const RootSystem& r, const Weight& base, const RootVec& bound) {
    std::vector<Weight> out;
    const auto n = static_cast<std::size_t>(r.rank());
    std::vector<int> c(n, 0);
    while (true) {
        Weight w = base + r.to_weight(RootVec(c));
        if (r.is_dominant(w)) out.push_back(w);
        std::size_t i = 0;
        while (i < n && ++c[i] > bound.coords[i]) c[i++] = 0;
        if (i == n) break;
    }
    return out;
}

}  // namespace

Weight star_by_box(const RootSystem& r, const Weight& lambda) {
    const Weight top = plus(r, lambda);
    auto span = r.to_root_coords(top - lambda);
    if (!span || !span->is_nonnegative()) throw Error(kModule, "lambda^+ is not above lambda (internal error)");
    auto cands = dominant_in_box(r, lambda, *span);
    for (const auto& c : cands) {
        bool least = true;
        for (const auto& o : cands)
            if (!r.dominance_leq(c, o)) least = false;
        if (least) return c;
    }
    throw Error(kModule, "no least dominant weight above lambda (internal error)");
}

int cht_by_box(const RootSystem& r, const Weight& lambda) {
    const Weight lo = star_by_box(r, lambda);
    const Weight hi = plus(r, lambda);
    auto span = r.to_root_coords(hi - lo);
    auto pts = dominant_in_box(r, lo, *span);
    std::sort(pts.begin(), pts.end(), [&](const Weight& a, const Weight& b) {
        return r.to_root_coords(a - lo)->height() < r.to_root_coords(b - lo)->height();
    });
    // longest chain ending at each point, in height order
    std::vector<int> best(pts.size(), -1);
    for (std::size_t j = 0; j < pts.size(); ++j) {
        if (pts[j] == lo) best[j] = 0;
        for (std::size_t i = 0; i < j; ++i)
            if (best[i] >= 0 && pts[i] != pts[j] && r.dominance_leq(pts[i], pts[j]))
                best[j] = std::max(best[j], best[i] + 1);
    }
    for (std::size_t j = 0; j < pts.size(); ++j)
        if (pts[j] == hi) return best[j];
    throw Error(kModule, "lambda^+ missing from the box (internal error)");
}

}  // namespace reference

}  // namespace bkf
