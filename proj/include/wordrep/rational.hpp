#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace wordrep {

/// Exact nonnegative rational, stored in lowest terms.
///
/// Exponents and thresholds (2, 7/3, 7/4, ...) live here. Comparisons are
/// done by integer cross-multiplication; no floating point is involved at
/// any point, so equality-sensitive thresholds behave exactly.
class Rational {
public:
    constexpr Rational() noexcept : num_(0), den_(1) {}

    /// Throws std::invalid_argument unless numerator >= 0 and denominator >= 1.
    Rational(std::int64_t numerator, std::int64_t denominator);

    /// Parses "p/q" or a bare integer "p".
    static Rational parse(std::string_view text);

    std::int64_t numerator() const noexcept { return num_; }
    std::int64_t denominator() const noexcept { return den_; }

    /// "7/3" for proper fractions, "2" for integers.
    std::string str() const;

    friend bool operator==(const Rational &, const Rational &) noexcept = default;
    std::strong_ordering operator<=>(const Rational &other) const noexcept;

    friend std::ostream &operator<<(std::ostream &os, const Rational &r);

private:
    std::int64_t num_;
    std::int64_t den_;
};

} // namespace wordrep
