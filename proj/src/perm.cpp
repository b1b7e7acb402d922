#include "autgram/perm.hpp"

#include <algorithm>
#include <charconv>
#include <stdexcept>

#include "autgram/error.hpp"

namespace autgram {

Permutation::Permutation(std::vector<int> image) : image_(std::move(image)) {
    const int n = size();
    std::vector<char> seen(n + 1, 0);
    for (int v : image_) {
        if (v < 1 || v > n || seen[v])
            throw std::invalid_argument("not a permutation of 1.." + std::to_string(n) + ": " +
                                        format(Word{image_}));
        seen[v] = 1;
    }
}

Permutation Permutation::identity(int n) {
    std::vector<int> img(n);
    for (int i = 0; i < n; ++i) img[i] = i + 1;
    return Permutation(std::move(img));
}

bool Permutation::is_identity() const {
    for (int i = 0; i < size(); ++i)
        if (image_[i] != i + 1) return false;
    return true;
}

Permutation compose(const Permutation& b, const Permutation& g) {
    if (b.size() != g.size())
        throw std::invalid_argument("compose: size mismatch " + std::to_string(b.size()) + " vs " +
                                    std::to_string(g.size()));
    std::vector<int> img(b.size());
    for (int i = 1; i <= g.size(); ++i) img[i - 1] = b(g(i));
    return Permutation(std::move(img));
}

Permutation inverse(const Permutation& a) {
    std::vector<int> img(a.size());
    for (int i = 1; i <= a.size(); ++i) img[a(i) - 1] = i;
    return Permutation(std::move(img));
}

Word to_string_word(const Permutation& a) { return Word{a.image()}; }

Permutation word_to_permutation(const Word& w) { return Permutation(w.symbols); }

Word permute_word(const Word& w, const Permutation& a) {
    if (static_cast<int>(w.length()) != a.size())
        throw std::invalid_argument("permute_word: word length " + std::to_string(w.length()) +
                                    " != permutation size " + std::to_string(a.size()));
    Word out;
    out.symbols.resize(w.length());
    for (int i = 1; i <= a.size(); ++i) out.symbols[i - 1] = w.symbols[a(i) - 1];
    return out;
}

Word parse_word(std::string_view text) {
    Word w;
    std::size_t i = 0;
    while (i < text.size()) {
        while (i < text.size() && (text[i] == ' ' || text[i] == ',' || text[i] == '\t')) ++i;
        if (i >= text.size()) break;
        int value = 0;
        auto [ptr, ec] = std::from_chars(text.data() + i, text.data() + text.size(), value);
        if (ec != std::errc{} || ptr == text.data() + i)
            throw ParseError(ParseError::Kind::Malformed, "malformed word: '" + std::string(text) + "'");
        w.symbols.push_back(value);
        i = static_cast<std::size_t>(ptr - text.data());
        if (i < text.size() && text[i] != ' ' && text[i] != ',' && text[i] != '\t')
            throw ParseError(ParseError::Kind::Malformed, "malformed word: '" + std::string(text) + "'");
    }
    return w;
}

Permutation parse_permutation(std::string_view text) {
    try {
        return word_to_permutation(parse_word(text));
    } catch (const std::invalid_argument& e) {
        throw ParseError(ParseError::Kind::Malformed, e.what());
    }
}

std::string format(const Word& w) {
    std::string out;
    for (std::size_t i = 0; i < w.symbols.size(); ++i) {
        if (i) out += ' ';
        out += std::to_string(w.symbols[i]);
    }
    return out;
}

std::string format(const Permutation& a) { return format(to_string_word(a)); }

}  // namespace autgram
