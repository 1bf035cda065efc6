#pragma once

// Loop kernels shared by the Weyl-group sums and the property sweeps. Each
// comes in a serial reference form and an OpenMP form; both must return
// identical results (all arithmetic is exact, so order does not matter).

#include "bkf/qpoly.hpp"

#include <cstddef>
#include <functional>
#include <optional>

namespace bkf {

enum class Execution { Serial, Parallel };

namespace kernels {

/// One term of an alternating sum: sign * q^0 * poly. nullopt terms are skipped.
struct SignedTerm {
    int sign = 1;
    const QPolynomial* poly = nullptr;
};
using TermFn = std::function<std::optional<SignedTerm>(std::size_t)>;

QPolynomial signed_sum_serial(std::size_t n, const TermFn& term);
QPolynomial signed_sum_parallel(std::size_t n, const TermFn& term);
QPolynomial signed_sum(std::size_t n, const TermFn& term, Execution ex);

/// Number of i in [0, n) with pred(i) true. pred must be safe to call
/// concurrently. The first exception thrown by any call is rethrown.
std::size_t count_serial(std::size_t n, const std::function<bool(std::size_t)>& pred);
std::size_t count_parallel(std::size_t n, const std::function<bool(std::size_t)>& pred);
std::size_t count(std::size_t n, const std::function<bool(std::size_t)>& pred, Execution ex);

/// Calls fn(i) for every i; results are written by fn into caller-owned slots.
void for_each(std::size_t n, const std::function<void(std::size_t)>& fn, Execution ex);

int max_threads();

}  // namespace kernels
}  // namespace bkf
