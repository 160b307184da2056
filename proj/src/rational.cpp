#include "coopgame/rational.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace coopgame {

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    return std::all_of(s.begin(), s.end(),
                       [](unsigned char c) { return std::isdigit(c) != 0; });
}

} // namespace

Rational parse_rational(std::string_view text) {
    std::string_view s = text;
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    if (s.empty()) throw ParseError("empty rational literal");

    bool negative = false;
    if (s.front() == '+' || s.front() == '-') {
        negative = s.front() == '-';
        s.remove_prefix(1);
    }

    std::string_view num_part = s;
    std::string_view den_part;
    if (auto slash = s.find('/'); slash != std::string_view::npos) {
        num_part = s.substr(0, slash);
        den_part = s.substr(slash + 1);
    }

    if (!all_digits(num_part))
        throw ParseError("invalid rational literal '" + std::string(text) + "'");
    Integer num{std::string(num_part)};

    Integer den = 1;
    if (!den_part.empty() || s.find('/') != std::string_view::npos) {
        if (!all_digits(den_part))
            throw ParseError("invalid rational literal '" + std::string(text) + "'");
        den = Integer{std::string(den_part)};
        if (den == 0)
            throw ParseError("zero denominator in '" + std::string(text) + "'");
    }

    if (negative) num = -num;
    return Rational(num, den);
}

std::string to_string(const Rational& r) {
    std::ostringstream os;
    os << r;
    return os.str();
}

std::string format_rational_vector(const std::vector<Rational>& v) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ',';
        out += to_string(v[i]);
    }
    return out;
}

std::vector<Rational> parse_rational_vector(std::string_view text, int expected_size) {
    std::vector<Rational> out;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t comma = text.find(',', start);
        std::string_view piece = comma == std::string_view::npos
                                     ? text.substr(start)
                                     : text.substr(start, comma - start);
        out.push_back(parse_rational(piece));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    if (expected_size >= 0 && out.size() != static_cast<std::size_t>(expected_size))
        throw ParseError("expected " + std::to_string(expected_size) + " components, got " +
                         std::to_string(out.size()));
    return out;
}

bool lex_less(const std::vector<Rational>& a, const std::vector<Rational>& b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

} // namespace coopgame
