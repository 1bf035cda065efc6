#include "bkf/qpoly.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace bkf {

namespace {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r)) throw Error("qpoly", "coefficient overflow");
    return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r)) throw Error("qpoly", "coefficient overflow");
    return r;
}

}  // namespace

QPolynomial::QPolynomial(std::int64_t constant) {
    if (constant != 0) c_.push_back(constant);
}

QPolynomial QPolynomial::monomial(int degree, std::int64_t coeff) {
    if (degree < 0) throw Error("qpoly", "negative degree");
    QPolynomial p;
    if (coeff == 0) return p;
    p.c_.assign(static_cast<std::size_t>(degree) + 1, 0);
    p.c_.back() = coeff;
    return p;
}

QPolynomial QPolynomial::from_coefficients(std::vector<std::int64_t> c) {
    QPolynomial p;
    p.c_ = std::move(c);
    p.trim();
    return p;
}

void QPolynomial::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

bool QPolynomial::has_nonnegative_coefficients() const {
    return std::all_of(c_.begin(), c_.end(), [](std::int64_t x) { return x >= 0; });
}

BigInt QPolynomial::eval(long q) const {
    BigInt acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
        acc *= q;
        acc += BigInt(static_cast<long>(*it));
    }
    return acc;
}

void QPolynomial::add_shifted(const QPolynomial& o, int shift, int sign) {
    if (o.is_zero()) return;
    const std::size_t need = o.c_.size() + static_cast<std::size_t>(shift);
    if (c_.size() < need) c_.resize(need, 0);
    for (std::size_t d = 0; d < o.c_.size(); ++d) {
        auto& slot = c_[d + static_cast<std::size_t>(shift)];
        slot = checked_add(slot, sign > 0 ? o.c_[d] : -o.c_[d]);
    }
    trim();
}

QPolynomial& QPolynomial::operator+=(const QPolynomial& o) {
    add_shifted(o, 0, 1);
    return *this;
}

QPolynomial& QPolynomial::operator-=(const QPolynomial& o) {
    add_shifted(o, 0, -1);
    return *this;
}

QPolynomial QPolynomial::shifted(int k) const {
    QPolynomial p;
    p.add_shifted(*this, k, 1);
    return p;
}

QPolynomial operator*(const QPolynomial& a, const QPolynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<std::int64_t> c(a.c_.size() + b.c_.size() - 1, 0);
    for (std::size_t i = 0; i < a.c_.size(); ++i)
        for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] = checked_add(c[i + j], checked_mul(a.c_[i], b.c_[j]));
    return QPolynomial::from_coefficients(std::move(c));
}

std::string QPolynomial::to_string() const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t d = 0; d < c_.size(); ++d) {
        std::int64_t c = c_[d];
        if (c == 0) continue;
        if (first) {
            if (c < 0) os << '-';
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        first = false;
        std::int64_t mag = c < 0 ? -c : c;
        if (d == 0) {
            os << mag;
            continue;
        }
        if (mag != 1) os << mag << '*';
        os << 'q';
        if (d > 1) os << '^' << d;
    }
    return os.str();
}

QPolynomial QPolynomial::parse(const std::string& text) {
    std::string s;
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
    if (s.empty()) throw Error("qpoly", "empty polynomial string");
    QPolynomial out;
    std::size_t pos = 0;
    auto fail = [&] { return Error("qpoly", "cannot parse polynomial '" + text + "'"); };
    while (pos < s.size()) {
        int sign = 1;
        if (s[pos] == '+' || s[pos] == '-') {
            sign = s[pos] == '-' ? -1 : 1;
            ++pos;
        } else if (pos != 0) {
            throw fail();
        }
        std::int64_t coeff = 1;
        bool have_coeff = false;
        std::size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos > start) {
            coeff = std::stoll(s.substr(start, pos - start));
            have_coeff = true;
        }
        int degree = 0;
        if (pos < s.size() && s[pos] == '*') {
            if (!have_coeff) throw fail();
            ++pos;
            if (pos >= s.size() || s[pos] != 'q') throw fail();
        }
        if (pos < s.size() && s[pos] == 'q') {
            ++pos;
            degree = 1;
            if (pos < s.size() && s[pos] == '^') {
                ++pos;
                start = pos;
                while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
                if (pos == start) throw fail();
                degree = std::stoi(s.substr(start, pos - start));
            }
        } else if (!have_coeff) {
            throw fail();
        }
        out += monomial(degree, sign * coeff);
    }
    return out;
}

}  // namespace bkf
