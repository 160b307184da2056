#ifndef COOPGAME_RATIONAL_HPP
#define COOPGAME_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>
#include <vector>

#include "coopgame/errors.hpp"

namespace coopgame {

// All arithmetic in this library is exact. Rational is an
// arbitrary-precision fraction kept in lowest terms with a positive
// denominator; there is no floating point anywhere in a decision procedure.
using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Parses "p/q" or "p" with optional leading sign on p. The denominator must
// be a positive integer literal. Floating-point forms are rejected.
Rational parse_rational(std::string_view text);

// Renders as "p/q", or just "p" when the denominator is 1.
std::string to_string(const Rational& r);

// "a,b,c" with each component rendered by to_string.
std::string format_rational_vector(const std::vector<Rational>& v);

// Parses "a,b,c"; expected_size < 0 skips the length check.
std::vector<Rational> parse_rational_vector(std::string_view text, int expected_size = -1);

// Componentwise vector comparison, used wherever the library promises
// lexicographically sorted output.
bool lex_less(const std::vector<Rational>& a, const std::vector<Rational>& b);

} // namespace coopgame

#endif
