#include "wordrep/rational.hpp"

#include <charconv>
#include <numeric>
#include <ostream>
#include <stdexcept>

namespace wordrep {

Rational::Rational(std::int64_t numerator, std::int64_t denominator)
    : num_(numerator), den_(denominator) {
    if (numerator < 0)
        throw std::invalid_argument("rational: numerator must be nonnegative");
    if (denominator < 1)
        throw std::invalid_argument("rational: denominator must be positive");
    const std::int64_t g = std::gcd(num_, den_);
    if (g > 1) {
        num_ /= g;
        den_ /= g;
    }
}

std::strong_ordering Rational::operator<=>(const Rational &other) const noexcept {
    const __int128 lhs = static_cast<__int128>(num_) * other.den_;
    const __int128 rhs = static_cast<__int128>(other.num_) * den_;
    if (lhs < rhs)
        return std::strong_ordering::less;
    if (lhs > rhs)
        return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

namespace {

std::int64_t parse_int(std::string_view text) {
    std::int64_t value = 0;
    const char *first = text.data();
    const char *last = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || ptr != last)
        throw std::invalid_argument("rational: cannot parse integer from '" +
                                    std::string(text) + "'");
    return value;
}

} // namespace

Rational Rational::parse(std::string_view text) {
    const auto slash = text.find('/');
    if (slash == std::string_view::npos)
        return Rational(parse_int(text), 1);
    return Rational(parse_int(text.substr(0, slash)), parse_int(text.substr(slash + 1)));
}

std::string Rational::str() const {
    if (den_ == 1)
        return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
}

std::ostream &operator<<(std::ostream &os, const Rational &r) { return os << r.str(); }

} // namespace wordrep
