#pragma once

#include <compare>
#include <cstddef>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "wordrep/alphabet.hpp"

namespace wordrep {

/// A finite word: a sequence of letter indices over a shared alphabet.
/// Immutable after construction; copies share the alphabet.
class Word {
public:
    /// The empty word over `alphabet`.
    explicit Word(AlphabetRef alphabet);

    /// Throws std::invalid_argument if any index is out of range.
    Word(AlphabetRef alphabet, std::vector<Letter> letters);

    /// Parses `text` symbol by symbol; throws on characters outside the alphabet.
    static Word parse(AlphabetRef alphabet, std::string_view text);

    const AlphabetRef &alphabet() const noexcept { return alphabet_; }
    std::span<const Letter> letters() const noexcept { return letters_; }

    std::size_t size() const noexcept { return letters_.size(); }
    bool empty() const noexcept { return letters_.empty(); }
    Letter operator[](std::size_t i) const { return letters_[i]; }

    /// The factor starting at `start` of length `length` (bounds-checked).
    Word factor(std::size_t start, std::size_t length) const;

    /// Concatenation; both operands must share equal alphabets.
    Word operator+(const Word &other) const;

    /// Plain-text rendering over the alphabet's symbols.
    std::string str() const;

    bool operator==(const Word &other) const noexcept;

    /// Lexicographic by letter indices, then by alphabet symbols.
    std::strong_ordering operator<=>(const Word &other) const noexcept;

    friend std::ostream &operator<<(std::ostream &os, const Word &w);

private:
    AlphabetRef alphabet_;
    std::vector<Letter> letters_;
};

/// A concrete occurrence of a factor inside a host word.
struct FactorOccurrence {
    std::size_t start = 0;
    std::size_t length = 0;

    friend bool operator==(const FactorOccurrence &, const FactorOccurrence &) = default;
    friend auto operator<=>(const FactorOccurrence &, const FactorOccurrence &) = default;
};

} // namespace wordrep
