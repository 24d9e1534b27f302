#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <string>

#include "errors.hpp"

namespace pmod {

// Exact rational scalar used throughout. Coordinates, weights and distances
// are never floats: ties between candidate heights are meaningful.
using Rat = boost::multiprecision::cpp_rational;
using Int = boost::multiprecision::cpp_int;

inline Int rat_num(const Rat& r) { return boost::multiprecision::numerator(r); }
inline Int rat_den(const Rat& r) { return boost::multiprecision::denominator(r); }

inline Rat rat_abs(const Rat& r) { return r < 0 ? Rat(-r) : r; }

// Parses a plain decimal string ("3", "-0.25", "+10.") exactly.
inline std::optional<Rat> try_parse_decimal(const std::string& s) {
    if (s.empty()) return std::nullopt;
    std::size_t i = 0;
    bool neg = false;
    if (s[i] == '+' || s[i] == '-') {
        neg = s[i] == '-';
        ++i;
    }
    Int num = 0;
    Int den = 1;
    bool any_digit = false, seen_dot = false;
    for (; i < s.size(); ++i) {
        char c = s[i];
        if (c == '.') {
            if (seen_dot) return std::nullopt;
            seen_dot = true;
        } else if (c >= '0' && c <= '9') {
            num = num * 10 + (c - '0');
            if (seen_dot) den *= 10;
            any_digit = true;
        } else {
            return std::nullopt;
        }
    }
    if (!any_digit) return std::nullopt;
    Rat r(num, den);
    return neg ? Rat(-r) : r;
}

// Accepts "p/q" as well as decimals, so printed values round-trip.
inline std::optional<Rat> try_parse_rational(const std::string& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos) return try_parse_decimal(s);
    auto p = try_parse_decimal(s.substr(0, slash));
    auto q = try_parse_decimal(s.substr(slash + 1));
    if (!p || !q || rat_den(*p) != 1 || rat_den(*q) != 1 || *q == 0) return std::nullopt;
    return Rat(rat_num(*p), rat_num(*q));
}

inline Rat parse_rational(const std::string& s) {
    auto r = try_parse_rational(s);
    if (!r) throw ValidationError("not a rational literal: '" + s + "'");
    return *r;
}

// Prints as a finite decimal when the denominator is 2^a 5^b, else as "p/q".
inline std::string format_rational(const Rat& r) {
    Int num = rat_num(r), den = rat_den(r);
    bool neg = num < 0;
    if (neg) num = -num;
    int twos = 0, fives = 0;
    Int d = den;
    while (d % 2 == 0) { d /= 2; ++twos; }
    while (d % 5 == 0) { d /= 5; ++fives; }
    if (d != 1) return (neg ? "-" : "") + num.str() + "/" + den.str();
    int digits = std::max(twos, fives);
    for (int i = twos; i < digits; ++i) num *= 2;
    for (int i = fives; i < digits; ++i) num *= 5;
    std::string s = num.str();
    std::string out = neg ? "-" : "";
    if (digits == 0) return out + s;
    if (static_cast<int>(s.size()) <= digits) s.insert(0, digits + 1 - s.size(), '0');
    s.insert(s.size() - digits, ".");
    while (s.back() == '0') s.pop_back();
    if (s.back() == '.') s.pop_back();
    return out + s;
}

}  // namespace pmod
