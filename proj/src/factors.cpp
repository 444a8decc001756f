#include "wordrep/factors.hpp"

#include <algorithm>
#include <stdexcept>

namespace wordrep {

namespace {

void require_nonempty(std::span<const Letter> w, const char *what) {
    if (w.empty())
        throw std::invalid_argument(std::string(what) + ": empty word");
}

std::string key_of(std::span<const Letter> w, std::size_t start, std::size_t length) {
    return std::string(reinterpret_cast<const char *>(w.data() + start), length);
}

void min_insert(std::map<std::string, std::size_t> &out, std::string key, std::size_t pos) {
    auto [it, inserted] = out.try_emplace(std::move(key), pos);
    if (!inserted && pos < it->second)
        it->second = pos;
}

/// Distinct factors whose exponent compares to num/den; strict selects ">"
/// over ">=". Each factor maps to its first occurrence start.
std::map<std::string, std::size_t> collect_threshold_factors(std::span<const Letter> w,
                                                             std::int64_t num,
                                                             std::int64_t den,
                                                             bool strict) {
    std::map<std::string, std::size_t> out;
    scan_repetition_runs(
        w,
        [&](std::size_t p) -> std::size_t {
            // smallest match count x making (x+p)/p qualify
            const std::int64_t t = (num - den) * static_cast<std::int64_t>(p);
            const std::int64_t x = strict ? t / den + 1 : (t + den - 1) / den;
            return x < 1 ? std::size_t{1} : static_cast<std::size_t>(x);
        },
        [&](std::size_t p, std::size_t s, std::size_t x) {
            const std::size_t fragment = x + p;
            const std::int64_t np = num * static_cast<std::int64_t>(p);
            const std::int64_t lm = strict ? np / den + 1 : (np + den - 1) / den;
            const std::size_t lmin =
                std::max<std::size_t>(static_cast<std::size_t>(lm), p + 1);
            for (std::size_t len = lmin; len <= fragment; ++len) {
                // starts repeat with period p inside the fragment
                const std::size_t reps = std::min(p, fragment - len + 1);
                for (std::size_t k = s; k < s + reps; ++k)
                    min_insert(out, key_of(w, k, len), k);
            }
            return true;
        });
    return out;
}

} // namespace

std::size_t smallest_period(std::span<const Letter> w) {
    require_nonempty(w, "smallest_period");
    const std::size_t n = w.size();
    // border[i] = length of the longest proper border of w[0, i)
    std::vector<std::size_t> border(n + 1, 0);
    for (std::size_t i = 1; i < n; ++i) {
        std::size_t k = border[i];
        while (k > 0 && w[i] != w[k])
            k = border[k];
        border[i + 1] = (w[i] == w[k]) ? k + 1 : 0;
    }
    return n - border[n];
}

std::size_t smallest_period(const Word &w) { return smallest_period(w.letters()); }

Rational exponent(std::span<const Letter> w) {
    return Rational(static_cast<std::int64_t>(w.size()),
                    static_cast<std::int64_t>(smallest_period(w)));
}

Rational exponent(const Word &w) { return exponent(w.letters()); }

std::pair<Rational, FactorOccurrence> max_factor_exponent(std::span<const Letter> w) {
    require_nonempty(w, "max_factor_exponent");
    Rational best(1, 1);
    FactorOccurrence witness{0, 1};
    scan_repetition_runs(
        w,
        [&](std::size_t p) -> std::size_t {
            // smallest x with (x+p)/p >= best, so ties stay visible for the
            // witness tie-break
            const std::int64_t bn = best.numerator();
            const std::int64_t bd = best.denominator();
            const std::int64_t need =
                ((bn - bd) * static_cast<std::int64_t>(p) + bd - 1) / bd;
            return need < 1 ? std::size_t{1} : static_cast<std::size_t>(need);
        },
        [&](std::size_t p, std::size_t s, std::size_t x) {
            const std::size_t len = x + p;
            const __int128 lhs = static_cast<__int128>(len) * best.denominator();
            const __int128 rhs = static_cast<__int128>(best.numerator()) * p;
            if (lhs > rhs) {
                best = Rational(static_cast<std::int64_t>(len),
                                static_cast<std::int64_t>(p));
                witness = {s, len};
            } else if (lhs == rhs && std::pair(s, len) < std::pair(witness.start,
                                                                   witness.length)) {
                witness = {s, len};
            }
            return true;
        });
    return {best, witness};
}

std::pair<Rational, FactorOccurrence> max_factor_exponent(const Word &w) {
    return max_factor_exponent(w.letters());
}

std::map<std::string, std::size_t> square_census(std::span<const Letter> w) {
    std::map<std::string, std::size_t> roots;
    scan_repetition_runs(
        w, [](std::size_t p) { return p; },
        [&](std::size_t p, std::size_t s, std::size_t x) {
            const std::size_t fragment = x + p; // >= 2p
            const std::size_t reps = std::min(p, fragment - 2 * p + 1);
            for (std::size_t k = s; k < s + reps; ++k)
                min_insert(roots, key_of(w, k, p), k);
            return true;
        });
    return roots;
}

std::set<Word> distinct_squares(const Word &w) {
    std::set<Word> out;
    for (const auto &[root, first] : square_census(w.letters()))
        out.insert(w.factor(first, root.size()));
    return out;
}

std::map<std::string, std::size_t> factors_exceeding(std::span<const Letter> w,
                                                     const Rational &threshold) {
    if (threshold < Rational(1, 1))
        throw std::invalid_argument("factors_exceeding: threshold must be >= 1");
    return collect_threshold_factors(w, threshold.numerator(), threshold.denominator(),
                                     /*strict=*/true);
}

std::map<std::string, std::size_t> factors_reaching(std::span<const Letter> w,
                                                    const Rational &threshold) {
    if (threshold <= Rational(1, 1))
        throw std::invalid_argument("factors_reaching: threshold must be > 1");
    return collect_threshold_factors(w, threshold.numerator(), threshold.denominator(),
                                     /*strict=*/false);
}

std::vector<std::size_t> occurrences(const Word &pattern, const Word &host) {
    if (pattern.empty())
        throw std::invalid_argument("occurrences: empty pattern");
    std::vector<std::size_t> out;
    const std::string h = host.str();
    const std::string p = pattern.str();
    for (std::size_t i = h.find(p); i != std::string::npos; i = h.find(p, i + 1))
        out.push_back(i);
    return out;
}

} // namespace wordrep
