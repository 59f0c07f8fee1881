#pragma once

#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace piflag {

using Int = boost::multiprecision::cpp_int;
// Exact rationals: always reduced, denominator > 0.
using Rational = boost::multiprecision::cpp_rational;

inline std::string rational_str(const Rational& r) {
    if (denominator(r) == 1) return numerator(r).str();
    return numerator(r).str() + "/" + denominator(r).str();
}

struct NotInvertible : std::runtime_error {
    explicit NotInvertible(const std::string& what) : std::runtime_error(what) {}
};

struct VarError : std::invalid_argument {
    explicit VarError(const std::string& what) : std::invalid_argument(what) {}
};

}  // namespace piflag
