#include "wordrep/alphabet.hpp"

#include <cctype>
#include <stdexcept>

namespace wordrep {

Alphabet::Alphabet(std::string_view symbols) : symbols_(symbols) {
    if (symbols_.empty())
        throw std::invalid_argument("alphabet: must not be empty");
    if (symbols_.size() > kMaxSize)
        throw std::invalid_argument("alphabet: at most 16 symbols supported");
    index_.fill(-1);
    for (std::size_t i = 0; i < symbols_.size(); ++i) {
        const unsigned char c = static_cast<unsigned char>(symbols_[i]);
        if (!std::isprint(c))
            throw std::invalid_argument("alphabet: symbols must be printable");
        if (index_[c] != -1)
            throw std::invalid_argument("alphabet: symbols must be distinct");
        index_[c] = static_cast<std::int8_t>(i);
    }
}

AlphabetRef make_alphabet(std::string_view symbols) {
    return std::make_shared<const Alphabet>(symbols);
}

const AlphabetRef &binary_alphabet() {
    static const AlphabetRef a = make_alphabet("01");
    return a;
}

const AlphabetRef &ternary_alphabet() {
    static const AlphabetRef a = make_alphabet("abc");
    return a;
}

const AlphabetRef &senary_alphabet() {
    static const AlphabetRef a = make_alphabet("abcdef");
    return a;
}

} // namespace wordrep
