#pragma once

// Exact rational scalar used for every coordinate, radius and width.

#include <gmpxx.h>

#include <cctype>
#include <stdexcept>
#include <string>
#include <string_view>

namespace cubeshell {

using Scalar = mpq_class;

/// Invalid input or arguments supplied by a caller (CLI exit code 2).
class UsageError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Malformed point-file text. Carries the 1-based line number when known.
class ParseError : public UsageError {
public:
    ParseError(const std::string& msg, std::size_t line = 0)
        : UsageError(line ? "line " + std::to_string(line) + ": " + msg : msg), line_(line) {}
    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

class UnsupportedDimension : public UsageError {
public:
    explicit UnsupportedDimension(std::size_t d)
        : UsageError("unsupported dimension " + std::to_string(d) +
                     ": only d = 1, 2, 3 are solved; the d >= 4 algorithm is out of scope"),
          dim_(d) {}
    std::size_t dimension() const noexcept { return dim_; }

private:
    std::size_t dim_;
};

/// A documented precondition of an operation does not hold.
class PreconditionError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

inline Scalar abs_of(const Scalar& q) {
    return sgn(q) < 0 ? Scalar(-q) : q;
}

inline Scalar half(const Scalar& q) {
    Scalar r = q;
    mpq_div_2exp(r.get_mpq_t(), r.get_mpq_t(), 1);
    return r;
}

namespace detail {

inline bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char ch : s)
        if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
    return true;
}

inline mpz_class parse_integer(std::string_view s, std::string_view whole) {
    bool neg = false;
    if (!s.empty() && (s.front() == '+' || s.front() == '-')) {
        neg = s.front() == '-';
        s.remove_prefix(1);
    }
    if (!all_digits(s)) throw ParseError("malformed number '" + std::string(whole) + "'");
    mpz_class z(std::string(s), 10);
    return neg ? mpz_class(-z) : z;
}

inline mpz_class pow10(unsigned long e) {
    mpz_class r;
    mpz_ui_pow_ui(r.get_mpz_t(), 10, e);
    return r;
}

}  // namespace detail

/// Parses "12", "-3.25", "1e-3", "2.5E+2" or "a/b" into an exact rational.
inline Scalar parse_scalar(std::string_view text) {
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
    if (text.empty()) throw ParseError("empty number");

    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        mpz_class num = detail::parse_integer(text.substr(0, slash), text);
        mpz_class den = detail::parse_integer(text.substr(slash + 1), text);
        if (den == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
        Scalar q(num, den);
        q.canonicalize();
        return q;
    }

    std::string_view s = text;
    bool neg = false;
    if (s.front() == '+' || s.front() == '-') {
        neg = s.front() == '-';
        s.remove_prefix(1);
    }
    long exponent = 0;
    if (auto e = s.find_first_of("eE"); e != std::string_view::npos) {
        std::string_view ex = s.substr(e + 1);
        bool eneg = false;
        if (!ex.empty() && (ex.front() == '+' || ex.front() == '-')) {
            eneg = ex.front() == '-';
            ex.remove_prefix(1);
        }
        if (!detail::all_digits(ex) || ex.size() > 6)
            throw ParseError("malformed exponent in '" + std::string(text) + "'");
        exponent = std::stol(std::string(ex));
        if (eneg) exponent = -exponent;
        s = s.substr(0, e);
    }
    std::string_view ip = s, fp;
    if (auto dot = s.find('.'); dot != std::string_view::npos) {
        ip = s.substr(0, dot);
        fp = s.substr(dot + 1);
    }
    if ((ip.empty() && fp.empty()) || (!ip.empty() && !detail::all_digits(ip)) ||
        (!fp.empty() && !detail::all_digits(fp)))
        throw ParseError("malformed number '" + std::string(text) + "'");

    std::string digits = std::string(ip) + std::string(fp);
    mpz_class num(digits.empty() ? std::string("0") : digits, 10);
    long scale = static_cast<long>(fp.size()) - exponent;
    Scalar q;
    if (scale >= 0)
        q = Scalar(num, detail::pow10(static_cast<unsigned long>(scale)));
    else
        q = Scalar(num * detail::pow10(static_cast<unsigned long>(-scale)));
    q.canonicalize();
    return neg ? Scalar(-q) : q;
}

/// Exact "a/b" rendering; integers keep the "/1".
inline std::string to_exact(const Scalar& q) {
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

/// Decimal rendering rounded half away from zero to `precision` places,
/// with trailing zeros trimmed down to a single fractional digit.
inline std::string to_decimal(const Scalar& q, int precision = 6) {
    if (precision < 0) precision = 0;
    mpz_class num = abs(q.get_num());
    mpz_class scaled = num * detail::pow10(static_cast<unsigned long>(precision));
    mpz_class quot, rem;
    mpz_fdiv_qr(quot.get_mpz_t(), rem.get_mpz_t(), scaled.get_mpz_t(), q.get_den_mpz_t());
    if (2 * rem >= q.get_den()) ++quot;

    std::string digits = quot.get_str();
    if (digits.size() <= static_cast<std::size_t>(precision))
        digits.insert(0, static_cast<std::size_t>(precision) + 1 - digits.size(), '0');
    std::string out = digits.substr(0, digits.size() - precision);
    std::string frac = digits.substr(digits.size() - precision);
    while (frac.size() > 1 && frac.back() == '0') frac.pop_back();
    if (frac.empty()) frac = "0";
    out += "." + frac;
    bool zero = quot == 0;
    return (sgn(q) < 0 && !zero) ? "-" + out : out;
}

inline double to_double(const Scalar& q) {
    return q.get_d();
}

}  // namespace cubeshell
