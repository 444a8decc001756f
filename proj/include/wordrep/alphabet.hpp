#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <string>
#include <string_view>

namespace wordrep {

/// Index of a symbol within its alphabet.
using Letter = std::uint8_t;

/// An ordered set of at most 16 distinct printable symbols.
///
/// The symbol order is fixed at construction and defines the lexicographic
/// order on words. Alphabets are shared between words via AlphabetRef.
class Alphabet {
public:
    static constexpr std::size_t kMaxSize = 16;

    /// Throws std::invalid_argument if symbols are empty, repeated,
    /// non-printable, or more than kMaxSize.
    explicit Alphabet(std::string_view symbols);

    std::size_t size() const noexcept { return symbols_.size(); }
    char symbol(Letter i) const { return symbols_.at(i); }
    std::string_view symbols() const noexcept { return symbols_; }

    /// Index of c, or -1 if c is not a symbol of this alphabet.
    int index_of(char c) const noexcept {
        return index_[static_cast<unsigned char>(c)];
    }

    bool operator==(const Alphabet &other) const noexcept {
        return symbols_ == other.symbols_;
    }

private:
    std::string symbols_;
    std::array<std::int8_t, 256> index_{};
};

using AlphabetRef = std::shared_ptr<const Alphabet>;

AlphabetRef make_alphabet(std::string_view symbols);

/// Shared built-in alphabets: "01", "abc", "abcdef".
const AlphabetRef &binary_alphabet();
const AlphabetRef &ternary_alphabet();
const AlphabetRef &senary_alphabet();

} // namespace wordrep
