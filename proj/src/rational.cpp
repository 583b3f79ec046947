#include "cdc/rational.hpp"

#include <charconv>
#include <numeric>
#include <ostream>

#include "cdc/errors.hpp"

namespace cdc {
namespace {

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
    std::int64_t out = 0;
    if (__builtin_mul_overflow(a, b, &out)) throw std::overflow_error("rational overflow (mul)");
    return out;
}

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
    std::int64_t out = 0;
    if (__builtin_add_overflow(a, b, &out)) throw std::overflow_error("rational overflow (add)");
    return out;
}

std::int64_t parse_int(std::string_view text) {
    std::int64_t value = 0;
    const char* first = text.data();
    const char* last = first + text.size();
    if (first != last && *first == '+') ++first;
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || ptr != last || first == last)
        throw ParseError("malformed rational: '" + std::string(text) + "'");
    return value;
}

}  // namespace

Rational::Rational(std::int64_t num, std::int64_t den) {
    if (den == 0) throw std::domain_error("rational with zero denominator");
    if (den < 0) {
        num = checked_mul(num, -1);
        den = checked_mul(den, -1);
    }
    const std::int64_t g = std::gcd(num, den);
    num_ = num / g;
    den_ = den / g;
}

Rational Rational::parse(std::string_view text) {
    while (!text.empty() && text.front() == ' ') text.remove_prefix(1);
    while (!text.empty() && text.back() == ' ') text.remove_suffix(1);
    if (text.empty()) throw ParseError("empty rational");

    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        const std::int64_t den = parse_int(text.substr(slash + 1));
        if (den == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
        return {parse_int(text.substr(0, slash)), den};
    }

    auto dot = text.find('.');
    if (dot == std::string_view::npos) return {parse_int(text)};

    bool negative = text.front() == '-';
    std::string_view int_part = text.substr(0, dot);
    std::string_view frac_part = text.substr(dot + 1);
    if (frac_part.empty() || frac_part.find_first_not_of("0123456789") != std::string_view::npos)
        throw ParseError("malformed decimal: '" + std::string(text) + "'");
    if (int_part == "-" || int_part == "+" || int_part.empty()) int_part = "0";

    std::int64_t scale = 1;
    for (std::size_t i = 0; i < frac_part.size(); ++i) scale = checked_mul(scale, 10);
    std::int64_t whole = parse_int(int_part);
    std::int64_t frac = parse_int(frac_part);
    std::int64_t magnitude = checked_add(checked_mul(whole < 0 ? -whole : whole, scale), frac);
    return {negative ? -magnitude : magnitude, scale};
}

std::string Rational::str() const {
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
}

std::string Rational::decimal_str() const {
    std::int64_t d = den_;
    int twos = 0, fives = 0;
    while (d % 2 == 0) { d /= 2; ++twos; }
    while (d % 5 == 0) { d /= 5; ++fives; }
    if (d != 1) return str();
    if (den_ == 1) return std::to_string(num_);

    const int digits = std::max(twos, fives);
    std::int64_t scale = 1;
    for (int i = 0; i < digits; ++i) scale = checked_mul(scale, 10);
    const std::int64_t scaled = checked_mul(num_, scale / den_);
    const std::int64_t mag = scaled < 0 ? -scaled : scaled;
    std::string frac = std::to_string(mag % scale);
    frac.insert(0, static_cast<std::size_t>(digits) - frac.size(), '0');
    while (!frac.empty() && frac.back() == '0') frac.pop_back();
    return (scaled < 0 ? "-" : "") + std::to_string(mag / scale) + "." + frac;
}

Rational operator+(const Rational& a, const Rational& b) {
    const std::int64_t g = std::gcd(a.den_, b.den_);
    const std::int64_t lhs = checked_mul(a.num_, b.den_ / g);
    const std::int64_t rhs = checked_mul(b.num_, a.den_ / g);
    return {checked_add(lhs, rhs), checked_mul(a.den_ / g, b.den_)};
}

Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }

Rational operator*(const Rational& a, const Rational& b) {
    const std::int64_t g1 = std::gcd(a.num_, b.den_);
    const std::int64_t g2 = std::gcd(b.num_, a.den_);
    return {checked_mul(a.num_ / (g1 ? g1 : 1), b.num_ / (g2 ? g2 : 1)),
            checked_mul(a.den_ / (g2 ? g2 : 1), b.den_ / (g1 ? g1 : 1))};
}

Rational operator/(const Rational& a, const Rational& b) {
    if (b.num_ == 0) throw std::domain_error("rational division by zero");
    return a * Rational(b.den_, b.num_);
}

Rational Rational::operator-() const {
    Rational r;
    r.num_ = checked_mul(num_, -1);
    r.den_ = den_;
    return r;
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    if (a.den_ == b.den_) return a.num_ <=> b.num_;
    __int128 lhs = static_cast<__int128>(a.num_) * b.den_;
    __int128 rhs = static_cast<__int128>(b.num_) * a.den_;
    return lhs < rhs ? std::strong_ordering::less
                     : (lhs > rhs ? std::strong_ordering::greater : std::strong_ordering::equal);
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

Rational min(const Rational& a, const Rational& b) { return b < a ? b : a; }
Rational max(const Rational& a, const Rational& b) { return a < b ? b : a; }

}  // namespace cdc
