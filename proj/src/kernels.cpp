#include "bkf/kernels.hpp"

#include <exception>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace bkf::kernels {

int max_threads() {
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

QPolynomial signed_sum_serial(std::size_t n, const TermFn& term) {
    QPolynomial acc;
    for (std::size_t i = 0; i < n; ++i) {
        auto t = term(i);
        if (!t || !t->poly) continue;
        acc.add_shifted(*t->poly, 0, t->sign);
    }
    return acc;
}

QPolynomial signed_sum_parallel(std::size_t n, const TermFn& term) {
    QPolynomial acc;
    std::exception_ptr err;
    const auto total = static_cast<long long>(n);
#pragma omp parallel
    {
        QPolynomial local;
#pragma omp for schedule(static)
        for (long long i = 0; i < total; ++i) {
            try {
                auto t = term(static_cast<std::size_t>(i));
                if (t && t->poly) local.add_shifted(*t->poly, 0, t->sign);
            } catch (...) {
#pragma omp critical(bkf_kernel_error)
                if (!err) err = std::current_exception();
            }
        }
#pragma omp critical(bkf_kernel_merge)
        acc += local;
    }
    if (err) std::rethrow_exception(err);
    return acc;
}

QPolynomial signed_sum(std::size_t n, const TermFn& term, Execution ex) {
    return ex == Execution::Parallel ? signed_sum_parallel(n, term) : signed_sum_serial(n, term);
}

std::size_t count_serial(std::size_t n, const std::function<bool(std::size_t)>& pred) {
    std::size_t c = 0;
    for (std::size_t i = 0; i < n; ++i)
        if (pred(i)) ++c;
    return c;
}

std::size_t count_parallel(std::size_t n, const std::function<bool(std::size_t)>& pred) {
    long long c = 0;
    std::exception_ptr err;
    const auto total = static_cast<long long>(n);
#pragma omp parallel for schedule(dynamic, 16) reduction(+ : c)
    for (long long i = 0; i < total; ++i) {
        try {
            if (pred(static_cast<std::size_t>(i))) ++c;
        } catch (...) {
#pragma omp critical(bkf_kernel_error)
            if (!err) err = std::current_exception();
        }
    }
    if (err) std::rethrow_exception(err);
    return static_cast<std::size_t>(c);
}

std::size_t count(std::size_t n, const std::function<bool(std::size_t)>& pred, Execution ex) {
    return ex == Execution::Parallel ? count_parallel(n, pred) : count_serial(n, pred);
}

void for_each(std::size_t n, const std::function<void(std::size_t)>& fn, Execution ex) {
    if (ex == Execution::Serial) {
        for (std::size_t i = 0; i < n; ++i) fn(i);
        return;
    }
    std::exception_ptr err;
    const auto total = static_cast<long long>(n);
#pragma omp parallel for schedule(dynamic, 1)
    for (long long i = 0; i < total; ++i) {
        try {
            fn(static_cast<std::size_t>(i));
        } catch (...) {
#pragma omp critical(bkf_kernel_error)
            if (!err) err = std::current_exception();
        }
    }
    if (err) std::rethrow_exception(err);
}

}  // namespace bkf::kernels
