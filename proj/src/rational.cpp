#include "mvbell/rational.hpp"

#include "mvbell/errors.hpp"

#include <cctype>

namespace mvbell {

Int int_factorial(long long n) {
    if (n < 0) throw DomainError("factorial of negative integer");
    Int out = 1;
    for (long long i = 2; i <= n; ++i) out *= i;
    return out;
}

Int binomial(long long n, long long m) {
    if (m < 0 || m > n) return 0;
    m = std::min(m, n - m);
    Int out = 1;
    for (long long i = 1; i <= m; ++i) {
        out *= n - m + i;
        out /= i;  // exact: product of i consecutive integers is divisible by i!
    }
    return out;
}

Rational rational_pow(const Rational& base, long long exp) {
    if (exp < 0) throw DomainError("rational_pow: negative exponent");
    Rational out = 1;
    Rational b = base;
    while (exp > 0) {
        if (exp & 1) out *= b;
        b *= b;
        exp >>= 1;
    }
    return out;
}

std::string to_string(const Rational& r) {
    std::string out = numerator(r).str();
    if (denominator(r) != 1) {
        out += '/';
        out += denominator(r).str();
    }
    return out;
}

namespace {

bool valid_integer_token(std::string_view s) {
    if (s.empty()) return false;
    std::size_t i = (s[0] == '+' || s[0] == '-') ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    }
    return true;
}

// cpp_int's string constructor rejects a leading '+', so strip it here.
Int parse_integer_token(std::string_view s) {
    const bool negative = s[0] == '-';
    if (s[0] == '+' || s[0] == '-') s.remove_prefix(1);
    Int value{std::string(s)};
    return negative ? Int(-value) : value;
}

}  // namespace

Rational parse_rational(std::string_view text) {
    const auto slash = text.find('/');
    std::string_view num = text.substr(0, slash);
    if (!valid_integer_token(num)) {
        throw ParseError("invalid rational '" + std::string(text) + "'");
    }
    const Int p = parse_integer_token(num);
    if (slash == std::string_view::npos) return Rational(p);

    std::string_view den = text.substr(slash + 1);
    if (!valid_integer_token(den)) {
        throw ParseError("invalid rational '" + std::string(text) + "'");
    }
    const Int q = parse_integer_token(den);
    if (q == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
    return Rational(p, q);
}

}  // namespace mvbell
