#include "wordrep/morphism.hpp"

#include <map>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace wordrep {

Morphism::Morphism(AlphabetRef source, AlphabetRef target, std::vector<Word> codewords)
    : source_(std::move(source)), target_(std::move(target)),
      codewords_(std::move(codewords)) {
    if (!source_ || !target_)
        throw std::invalid_argument("morphism: null alphabet");
    if (codewords_.size() != source_->size())
        throw std::invalid_argument("morphism: need one codeword per source letter");
    for (const Word &cw : codewords_) {
        if (cw.empty())
            throw std::invalid_argument("morphism: codewords must be nonempty");
        if (!(*cw.alphabet() == *target_))
            throw std::invalid_argument("morphism: codeword over wrong alphabet");
    }
}

bool Morphism::prolongable_on(Letter seed) const {
    if (seed >= source_->size() || !(*source_ == *target_))
        return false;
    const Word &cw = codewords_[seed];
    return cw.size() >= 2 && cw[0] == seed;
}

Letter Morphism::letter_of(char seed_symbol) const {
    const int i = source_->index_of(seed_symbol);
    if (i < 0)
        throw std::invalid_argument(std::string("morphism: '") + seed_symbol +
                                    "' is not a source letter");
    return static_cast<Letter>(i);
}

Word apply(const Morphism &m, const Word &w) {
    if (!(*w.alphabet() == *m.source()))
        throw std::invalid_argument("apply: word is not over the source alphabet");
    std::size_t total = 0;
    for (const Letter l : w.letters())
        total += m.codeword(l).size();
    std::vector<Letter> image;
    image.reserve(total);
    for (const Letter l : w.letters()) {
        const auto cw = m.codeword(l).letters();
        image.insert(image.end(), cw.begin(), cw.end());
    }
    return Word(m.target(), std::move(image));
}

FixedPointStream::FixedPointStream(Morphism m, char seed)
    : morphism_(std::move(m)), seed_(morphism_.letter_of(seed)),
      generated_(morphism_.source(), std::vector<Letter>{seed_}) {
    if (!morphism_.prolongable_on(seed_))
        throw std::invalid_argument("fixed point: morphism is not prolongable on seed");
}

void FixedPointStream::grow_to(std::size_t n) {
    // applying to a prefix of the fixed point yields a longer prefix
    while (generated_.size() < n)
        generated_ = apply(morphism_, generated_);
}

Word FixedPointStream::take(std::size_t n) {
    grow_to(n);
    return generated_.factor(0, n);
}

Word fixed_point_prefix(const Morphism &m, char seed, std::size_t n) {
    return FixedPointStream(m, seed).take(n);
}

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r'))
        s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r'))
        s.remove_suffix(1);
    return s;
}

} // namespace

Morphism Morphism::parse(std::string_view text) {
    std::string source_symbols;
    std::vector<std::string> images;
    std::istringstream in{std::string(text)};
    std::string line;
    while (std::getline(in, line)) {
        const std::string_view t = trim(line);
        if (t.empty() || t.front() == '#')
            continue;
        const auto arrow = t.find("->");
        if (arrow == std::string_view::npos)
            throw std::invalid_argument("morphism file: expected 'letter -> codeword' in \"" +
                                        std::string(t) + "\"");
        const std::string_view lhs = trim(t.substr(0, arrow));
        const std::string_view rhs = trim(t.substr(arrow + 2));
        if (lhs.size() != 1)
            throw std::invalid_argument("morphism file: left side must be a single letter");
        if (rhs.empty())
            throw std::invalid_argument("morphism file: empty codeword");
        if (source_symbols.find(lhs[0]) != std::string::npos)
            throw std::invalid_argument("morphism file: duplicate letter");
        source_symbols.push_back(lhs[0]);
        images.emplace_back(rhs);
    }
    if (source_symbols.empty())
        throw std::invalid_argument("morphism file: no definitions found");

    const AlphabetRef source = make_alphabet(source_symbols);
    bool endo = true;
    std::string target_symbols;
    for (const std::string &img : images)
        for (const char c : img) {
            if (source->index_of(c) < 0)
                endo = false;
            if (target_symbols.find(c) == std::string::npos)
                target_symbols.push_back(c);
        }
    const AlphabetRef target = endo ? source : make_alphabet(target_symbols);

    std::vector<Word> codewords;
    codewords.reserve(images.size());
    for (const std::string &img : images)
        codewords.push_back(Word::parse(target, img));
    return Morphism(source, target, std::move(codewords));
}

namespace {

Morphism make_builtin(const AlphabetRef &source, const AlphabetRef &target,
                      std::initializer_list<std::string_view> images) {
    std::vector<Word> codewords;
    for (const auto img : images)
        codewords.push_back(Word::parse(target, img));
    return Morphism(source, target, std::move(codewords));
}

const std::map<std::string, Morphism, std::less<>> &builtin_table() {
    static const std::map<std::string, Morphism, std::less<>> table = [] {
        std::map<std::string, Morphism, std::less<>> t;
        t.emplace("f", make_builtin(ternary_alphabet(), ternary_alphabet(),
                                    {"abc", "ac", "b"}));
        t.emplace("h0", make_builtin(ternary_alphabet(), binary_alphabet(),
                                     {"01001110001101", "0011", "000111"}));
        t.emplace("g", make_builtin(senary_alphabet(), senary_alphabet(),
                                    {"abac", "babd", "eabdf", "fbace", "bace", "abdf"}));
        t.emplace("h", make_builtin(senary_alphabet(), binary_alphabet(),
                                    {"10011", "01100", "01001", "10110", "0110", "1001"}));
        return t;
    }();
    return table;
}

} // namespace

const Morphism &Morphism::builtin(std::string_view name) {
    const auto &table = builtin_table();
    const auto it = table.find(name);
    if (it == table.end())
        throw std::invalid_argument("unknown built-in morphism '" + std::string(name) +
                                    "' (available: f, g, h, h0)");
    return it->second;
}

const std::vector<std::string> &Morphism::builtin_names() {
    static const std::vector<std::string> names = {"f", "g", "h", "h0"};
    return names;
}

} // namespace wordrep
