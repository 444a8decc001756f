#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "wordrep/word.hpp"

namespace wordrep {

/// A word morphism: one nonempty codeword over the target alphabet per
/// source letter, extended homomorphically to words.
class Morphism {
public:
    /// Throws std::invalid_argument unless there is exactly one nonempty
    /// codeword (over `target`) per source letter.
    Morphism(AlphabetRef source, AlphabetRef target, std::vector<Word> codewords);

    const AlphabetRef &source() const noexcept { return source_; }
    const AlphabetRef &target() const noexcept { return target_; }

    const Word &codeword(Letter l) const { return codewords_.at(l); }
    const std::vector<Word> &codewords() const noexcept { return codewords_; }

    /// True iff source == target, |codeword(seed)| >= 2 and codeword(seed)
    /// starts with seed, so iterating from seed converges to a fixed point.
    bool prolongable_on(Letter seed) const;

    /// Resolves a seed symbol through the source alphabet.
    Letter letter_of(char seed_symbol) const;

    /// Parses the plain-text definition format, one line per letter:
    ///   a -> abac
    /// Blank lines and lines starting with '#' are ignored. The source
    /// alphabet is the left-hand letters in file order; the target alphabet
    /// is the source if every codeword symbol belongs to it, otherwise the
    /// codeword symbols in order of first appearance.
    static Morphism parse(std::string_view text);

    /// Built-in morphisms shipped with the library: "f", "h0", "g", "h".
    static const Morphism &builtin(std::string_view name);
    static const std::vector<std::string> &builtin_names();

private:
    AlphabetRef source_;
    AlphabetRef target_;
    std::vector<Word> codewords_;
};

/// Homomorphic image of w (which must be over m.source()).
Word apply(const Morphism &m, const Word &w);

/// The length-n prefix of the fixed point obtained by iterating m from seed.
/// Throws std::invalid_argument unless m is prolongable on the seed.
Word fixed_point_prefix(const Morphism &m, char seed, std::size_t n);

/// Grow-only generator for a morphism fixed point; snapshots are plain words.
class FixedPointStream {
public:
    FixedPointStream(Morphism m, char seed);

    /// The length-n prefix of the fixed point.
    Word take(std::size_t n);

    const Morphism &morphism() const noexcept { return morphism_; }

private:
    void grow_to(std::size_t n);

    Morphism morphism_;
    Letter seed_;
    Word generated_;
};

} // namespace wordrep
