#pragma once

#include <cstddef>
#include <map>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "wordrep/rational.hpp"
#include "wordrep/word.hpp"

namespace wordrep {

/// Smallest p >= 1 such that w[i] == w[i+p] for all valid i.
/// Computed from the border array; throws std::invalid_argument on the empty word.
std::size_t smallest_period(std::span<const Letter> w);
std::size_t smallest_period(const Word &w);

/// |w| / smallest_period(w) as an exact rational (>= 1).
Rational exponent(std::span<const Letter> w);
Rational exponent(const Word &w);

/// Enumerates, for every period distance p in [1, |w|), the maximal intervals
/// of positions matching at distance p whose match count is at least
/// max(min_x(p), 1). A reported run (p, start, x) means
/// w[i] == w[i+p] for all i in [start, start+x), maximally, so the factor
/// w[start, start+x+p) has period p.
///
/// Runs shorter than min_x(p) are skipped without being enumerated: positions
/// are probed on a stride-min_x(p) grid and extended only around hits, which
/// keeps the scan near-linear when min_x grows with p.
///
/// on_run returns false to abort; the function returns false in that case.
template <class MinX, class OnRun>
bool scan_repetition_runs(std::span<const Letter> w, MinX &&min_x, OnRun &&on_run) {
    const std::size_t n = w.size();
    const Letter *a = w.data();
    for (std::size_t p = 1; p < n; ++p) {
        const std::size_t m = n - p; // candidate match positions
        std::size_t lo = min_x(p);
        if (lo < 1)
            lo = 1;
        if (lo > m)
            continue;
        std::size_t i = lo - 1; // probe grid with stride lo covers every run of >= lo matches
        while (i < m) {
            if (a[i] != a[i + p]) {
                i += lo;
                continue;
            }
            std::size_t s = i;
            while (s > 0 && a[s - 1] == a[s - 1 + p])
                --s;
            std::size_t e = i + 1;
            while (e < m && a[e] == a[e + p])
                ++e;
            if (e - s >= lo && !on_run(p, s, e - s))
                return false;
            i = e + lo; // next run starts at e+1 or later; keep the grid covering
        }
    }
    return true;
}

/// Maximum of exponent(v) over all nonempty factors v of w, with one witness
/// occurrence; ties broken by smallest start, then smallest length.
/// Throws std::invalid_argument on the empty word.
std::pair<Rational, FactorOccurrence> max_factor_exponent(std::span<const Letter> w);
std::pair<Rational, FactorOccurrence> max_factor_exponent(const Word &w);

/// Distinct square roots of w keyed by raw letters, each mapped to the start
/// of the first occurrence of the square uu.
std::map<std::string, std::size_t> square_census(std::span<const Letter> w);

/// The set { u : uu is a factor of w }, as words over w's alphabet.
std::set<Word> distinct_squares(const Word &w);

/// Distinct factors whose exponent exceeds `threshold` (strictly), keyed by
/// raw letters, mapped to their first occurrence start. threshold >= 1.
std::map<std::string, std::size_t> factors_exceeding(std::span<const Letter> w,
                                                     const Rational &threshold);

/// Distinct factors of exponent >= threshold (threshold > 1 required).
std::map<std::string, std::size_t> factors_reaching(std::span<const Letter> w,
                                                    const Rational &threshold);

/// All start positions of `pattern` in `host`, ascending, overlaps included.
/// Comparison is by symbol characters, so the pattern may be over a different
/// alphabet (in which case absent symbols simply never match).
/// Throws std::invalid_argument on an empty pattern.
std::vector<std::size_t> occurrences(const Word &pattern, const Word &host);

} // namespace wordrep
