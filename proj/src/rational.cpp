#include "sheafkit/rational.hpp"

#include <algorithm>
#include <ostream>
#include <stdexcept>

namespace sheafkit {

namespace {

bool all_digits(std::string_view s) {
    return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; });
}

[[noreturn]] void bad(std::string_view text) {
    throw std::invalid_argument("not a rational literal: '" + std::string(text) + "'");
}

}  // namespace

Rational::Rational(long num, long den) : value_(mpz_class(num), mpz_class(den)) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    value_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
    std::string_view body = text;
    bool negative = false;
    if (!body.empty() && (body.front() == '+' || body.front() == '-')) {
        negative = body.front() == '-';
        body.remove_prefix(1);
    }
    if (body.empty()) bad(text);

    mpz_class num, den;
    if (auto slash = body.find('/'); slash != std::string_view::npos) {
        std::string_view p = body.substr(0, slash);
        std::string_view q = body.substr(slash + 1);
        if (!all_digits(p) || !all_digits(q)) bad(text);
        num = mpz_class(std::string(p), 10);
        den = mpz_class(std::string(q), 10);
        if (den == 0) throw std::invalid_argument("rational with zero denominator: '" + std::string(text) + "'");
    } else if (auto dot = body.find('.'); dot != std::string_view::npos) {
        std::string_view whole = body.substr(0, dot);
        std::string_view frac = body.substr(dot + 1);
        if (whole.empty() && frac.empty()) bad(text);
        if (!whole.empty() && !all_digits(whole)) bad(text);
        if (!frac.empty() && !all_digits(frac)) bad(text);
        std::string digits = std::string(whole) + std::string(frac);
        num = mpz_class(digits.empty() ? "0" : digits, 10);
        den = 1;
        mpz_ui_pow_ui(den.get_mpz_t(), 10, frac.size());
    } else {
        if (!all_digits(body)) bad(text);
        num = mpz_class(std::string(body), 10);
        den = 1;
    }
    if (negative) num = -num;
    mpq_class value(num, den);
    value.canonicalize();
    return Rational(std::move(value));
}

std::string Rational::str() const {
    if (is_integer()) return num().get_str();
    return num().get_str() + "/" + den().get_str();
}

Rational Rational::reciprocal() const {
    if (is_zero()) throw std::domain_error("reciprocal of zero");
    mpq_class inv(den(), num());
    inv.canonicalize();
    return Rational(std::move(inv));
}

Rational Rational::operator-() const { return Rational(mpq_class(-value_)); }

Rational& Rational::operator+=(const Rational& o) {
    value_ += o.value_;
    return *this;
}

Rational& Rational::operator-=(const Rational& o) {
    value_ -= o.value_;
    return *this;
}

Rational& Rational::operator*=(const Rational& o) {
    value_ *= o.value_;
    return *this;
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw std::domain_error("division by zero");
    value_ /= o.value_;
    return *this;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace sheafkit
