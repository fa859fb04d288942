#include "tangentlab/rational.hpp"

#include <array>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdint>

#include "tangentlab/error.hpp"

namespace tangentlab {

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

[[noreturn]] void malformed(std::string_view text) {
    throw Error(ErrorKind::Validation, "malformed number: '" + std::string(text) + "'");
}

BigInt parse_integer(std::string_view s, std::string_view whole) {
    bool negative = false;
    if (!s.empty() && (s.front() == '+' || s.front() == '-')) {
        negative = s.front() == '-';
        s.remove_prefix(1);
    }
    if (s.empty()) malformed(whole);
    BigInt value = 0;
    for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c))) malformed(whole);
        value = value * 10 + (c - '0');
    }
    return negative ? BigInt(-value) : value;
}

BigInt pow10(long exponent) {
    BigInt p = 1;
    for (long i = 0; i < exponent; ++i) p *= 10;
    return p;
}

Rational parse_decimal(std::string_view s, std::string_view whole) {
    bool negative = false;
    if (!s.empty() && (s.front() == '+' || s.front() == '-')) {
        negative = s.front() == '-';
        s.remove_prefix(1);
    }
    long exponent = 0;
    if (auto e = s.find_first_of("eE"); e != std::string_view::npos) {
        auto exp_text = s.substr(e + 1);
        BigInt exp_value = parse_integer(exp_text, whole);
        if (exp_value > 4000 || exp_value < -4000) malformed(whole);
        exponent = exp_value.convert_to<long>();
        s = s.substr(0, e);
    }
    BigInt digits = 0;
    bool any_digit = false;
    bool seen_point = false;
    for (char c : s) {
        if (c == '.') {
            if (seen_point) malformed(whole);
            seen_point = true;
            continue;
        }
        if (!std::isdigit(static_cast<unsigned char>(c))) malformed(whole);
        any_digit = true;
        digits = digits * 10 + (c - '0');
        if (seen_point) --exponent;
    }
    if (!any_digit) malformed(whole);
    Rational value = exponent >= 0 ? Rational(digits * pow10(exponent))
                                   : Rational(digits, pow10(-exponent));
    return negative ? Rational(-value) : value;
}

}  // namespace

const char* to_string(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::Validation: return "validation";
        case ErrorKind::Alphabet: return "alphabet";
        case ErrorKind::Precondition: return "precondition";
        case ErrorKind::Shape: return "shape";
        case ErrorKind::DepthCap: return "depth-cap";
        case ErrorKind::EnumerationCap: return "enumeration-cap";
        case ErrorKind::Enclosure: return "enclosure";
        case ErrorKind::Emptiness: return "emptiness";
        case ErrorKind::Hypothesis: return "hypothesis";
    }
    return "unknown";
}

Rational parse_rational(std::string_view text) {
    auto s = trim(text);
    if (s.empty()) malformed(text);
    if (auto slash = s.find('/'); slash != std::string_view::npos) {
        BigInt num = parse_integer(trim(s.substr(0, slash)), text);
        BigInt den = parse_integer(trim(s.substr(slash + 1)), text);
        if (den == 0) throw Error(ErrorKind::Validation, "zero denominator in '" + std::string(text) + "'");
        return Rational(num, den);
    }
    return parse_decimal(s, text);
}

Rational rational_from_double(double value) {
    if (!std::isfinite(value)) throw Error(ErrorKind::Validation, "non-finite number");
    if (value == 0.0) return Rational(0);
    int exponent = 0;
    double fraction = std::frexp(value, &exponent);
    auto mantissa = static_cast<std::int64_t>(std::ldexp(fraction, 53));
    exponent -= 53;
    BigInt num = mantissa;
    if (exponent >= 0) return Rational(num << exponent);
    return Rational(num, BigInt(1) << -exponent);
}

Rational rational_from_decimal_double(double value) {
    if (!std::isfinite(value)) throw Error(ErrorKind::Validation, "non-finite number");
    std::array<char, 64> buf{};
    auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), value);
    if (ec != std::errc{}) throw Error(ErrorKind::Validation, "cannot format number");
    return parse_rational(std::string_view(buf.data(), static_cast<std::size_t>(end - buf.data())));
}

std::string to_string(const Rational& value) {
    const BigInt& num = boost::multiprecision::numerator(value);
    const BigInt& den = boost::multiprecision::denominator(value);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

// Correctly rounded (round-half-even) for normal-range values.
double to_double(const Rational& value) {
    BigInt num = boost::multiprecision::numerator(value);
    BigInt den = boost::multiprecision::denominator(value);
    if (num == 0) return 0.0;
    bool negative = num < 0;
    if (negative) num = -num;

    long e = static_cast<long>(boost::multiprecision::msb(num)) -
             static_cast<long>(boost::multiprecision::msb(den));
    long shift = 54 - e;
    BigInt scaled_num = shift >= 0 ? BigInt(num << shift) : num;
    BigInt scaled_den = shift >= 0 ? den : BigInt(den << -shift);
    BigInt q, r;
    boost::multiprecision::divide_qr(scaled_num, scaled_den, q, r);

    unsigned extra = static_cast<unsigned>(boost::multiprecision::msb(q)) - 52;
    BigInt mask = (BigInt(1) << extra) - 1;
    BigInt dropped = q & mask;
    BigInt half = BigInt(1) << (extra - 1);
    auto mantissa = static_cast<std::uint64_t>(q >> extra);
    if (dropped > half || (dropped == half && (r != 0 || (mantissa & 1U) != 0))) ++mantissa;

    double result = std::ldexp(static_cast<double>(mantissa), static_cast<int>(extra) - static_cast<int>(shift));
    return negative ? -result : result;
}

std::optional<Rational> exact_sqrt(const Rational& value) {
    if (value < 0) return std::nullopt;
    const BigInt& num = boost::multiprecision::numerator(value);
    const BigInt& den = boost::multiprecision::denominator(value);
    BigInt sn = boost::multiprecision::sqrt(num);
    BigInt sd = boost::multiprecision::sqrt(den);
    if (sn * sn != num || sd * sd != den) return std::nullopt;
    return Rational(sn, sd);
}

long long floor_to_int(const Rational& value) {
    const BigInt& num = boost::multiprecision::numerator(value);
    const BigInt& den = boost::multiprecision::denominator(value);
    BigInt q, r;
    boost::multiprecision::divide_qr(num, den, q, r);
    if (r != 0 && num < 0) q -= 1;
    return q.convert_to<long long>();
}

}  // namespace tangentlab
