#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>
#include <string_view>

namespace starcalc {

// Exact rational arithmetic everywhere; no floating point in this library.
using Rat = boost::multiprecision::cpp_rational;

// Parses "p", "-p", "p/q" or "-p/q". Anything else throws std::invalid_argument.
inline Rat parse_rational(std::string_view text)
{
    if (text.empty())
        throw std::invalid_argument("empty rational");
    std::string s(text);
    for (char c : s)
        if (!(std::isdigit(static_cast<unsigned char>(c)) || c == '-' || c == '/'))
            throw std::invalid_argument("bad rational: '" + s + "'");
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos)
            return Rat(boost::multiprecision::cpp_int(s));
        boost::multiprecision::cpp_int num(s.substr(0, slash));
        boost::multiprecision::cpp_int den(s.substr(slash + 1));
        if (den == 0)
            throw std::invalid_argument("zero denominator: '" + s + "'");
        return Rat(num, den);
    } catch (const std::runtime_error&) {
        throw std::invalid_argument("bad rational: '" + s + "'");
    }
}

// Prints "p" or "p/q" with the sign on the numerator.
inline std::string to_string(const Rat& r)
{
    if (denominator(r) == 1)
        return numerator(r).str();
    return numerator(r).str() + "/" + denominator(r).str();
}

} // namespace starcalc
