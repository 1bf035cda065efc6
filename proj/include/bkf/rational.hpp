#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace bkf {

using Rational = mpq_class;
using BigInt = mpz_class;

/// Error raised by any bkf computation. The message is prefixed with the
/// module that raised it, e.g. "roots: invalid rank 0 for type A".
class Error : public std::runtime_error {
public:
    Error(const std::string& module, const std::string& what)
        : std::runtime_error(module + ": " + what), module_(module) {}
    const std::string& module() const noexcept { return module_; }

private:
    std::string module_;
};

/// A configured size limit was exceeded; the computation was refused.
class CapExceeded : public Error {
public:
    using Error::Error;
};

// n/d in lowest terms; mpq_class(n, d) alone leaves it uncanonicalized.
inline Rational ratio(long n, long d) {
    Rational q(n, d);
    q.canonicalize();
    return q;
}

inline long long to_integer(const Rational& q, const char* module = "rational") {
    if (q.get_den() != 1) throw Error(module, "expected an integer, got " + q.get_str());
    if (!q.get_num().fits_slong_p()) throw Error(module, "integer overflow: " + q.get_str());
    return q.get_num().get_si();
}

}  // namespace bkf
