#include "wordrep/word.hpp"

#include <algorithm>
#include <ostream>
#include <stdexcept>
#include <utility>

namespace wordrep {

namespace {

const AlphabetRef &require_alphabet(const AlphabetRef &alphabet) {
    if (!alphabet)
        throw std::invalid_argument("word: null alphabet");
    return alphabet;
}

} // namespace

Word::Word(AlphabetRef alphabet) : alphabet_(std::move(alphabet)) {
    require_alphabet(alphabet_);
}

Word::Word(AlphabetRef alphabet, std::vector<Letter> letters)
    : alphabet_(std::move(alphabet)), letters_(std::move(letters)) {
    require_alphabet(alphabet_);
    for (const Letter l : letters_)
        if (l >= alphabet_->size())
            throw std::invalid_argument("word: letter index out of range");
}

Word Word::parse(AlphabetRef alphabet, std::string_view text) {
    require_alphabet(alphabet);
    std::vector<Letter> letters;
    letters.reserve(text.size());
    for (const char c : text) {
        const int i = alphabet->index_of(c);
        if (i < 0)
            throw std::invalid_argument(std::string("word: character '") + c +
                                        "' is not in alphabet \"" +
                                        std::string(alphabet->symbols()) + "\"");
        letters.push_back(static_cast<Letter>(i));
    }
    return Word(std::move(alphabet), std::move(letters));
}

Word Word::factor(std::size_t start, std::size_t length) const {
    if (start > size() || length > size() - start)
        throw std::out_of_range("word: factor out of range");
    return Word(alphabet_, std::vector<Letter>(letters_.begin() + start,
                                               letters_.begin() + start + length));
}

Word Word::operator+(const Word &other) const {
    if (!(*alphabet_ == *other.alphabet_))
        throw std::invalid_argument("word: cannot concatenate over different alphabets");
    std::vector<Letter> joined = letters_;
    joined.insert(joined.end(), other.letters_.begin(), other.letters_.end());
    return Word(alphabet_, std::move(joined));
}

std::string Word::str() const {
    std::string out;
    out.reserve(size());
    for (const Letter l : letters_)
        out.push_back(alphabet_->symbol(l));
    return out;
}

bool Word::operator==(const Word &other) const noexcept {
    return letters_ == other.letters_ && *alphabet_ == *other.alphabet_;
}

std::strong_ordering Word::operator<=>(const Word &other) const noexcept {
    const auto cmp = std::lexicographical_compare_three_way(
        letters_.begin(), letters_.end(), other.letters_.begin(), other.letters_.end());
    if (cmp != std::strong_ordering::equal)
        return cmp;
    const auto a = alphabet_->symbols();
    const auto b = other.alphabet_->symbols();
    return std::lexicographical_compare_three_way(a.begin(), a.end(), b.begin(), b.end());
}

std::ostream &operator<<(std::ostream &os, const Word &w) { return os << w.str(); }

} // namespace wordrep
