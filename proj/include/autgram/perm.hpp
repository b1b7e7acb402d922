#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace autgram {

/// A permutation of {1..n} in one-line form: image[i-1] = α(i).
class Permutation {
public:
    /// Validates that `image` is a bijection of {1..n}; throws std::invalid_argument otherwise.
    explicit Permutation(std::vector<int> image);

    static Permutation identity(int n);

    int size() const noexcept { return static_cast<int>(image_.size()); }
    /// α(i) for 1 ≤ i ≤ n.
    int operator()(int i) const { return image_.at(static_cast<std::size_t>(i - 1)); }
    const std::vector<int>& image() const noexcept { return image_; }
    bool is_identity() const;

    friend bool operator==(const Permutation&, const Permutation&) = default;
    friend auto operator<=>(const Permutation&, const Permutation&) = default;

private:
    std::vector<int> image_;
};

/// A string over an integer alphabet. Distinct from Permutation even when it encodes one.
struct Word {
    std::vector<int> symbols;

    std::size_t length() const noexcept { return symbols.size(); }
    friend bool operator==(const Word&, const Word&) = default;
    friend auto operator<=>(const Word&, const Word&) = default;
};

/// (b ∘ g)(i) = b(g(i)).
Permutation compose(const Permutation& b, const Permutation& g);
Permutation inverse(const Permutation& a);

/// str(α) = α(1)α(2)…α(n).
Word to_string_word(const Permutation& a);
/// Reads a word as a permutation; throws std::invalid_argument if it is not one.
Permutation word_to_permutation(const Word& w);

/// Perm(w, α): result_i = w_{α(i)}.
Word permute_word(const Word& w, const Permutation& a);

/// "2 1 4 3" style parsing/formatting shared by permutations and words.
Word parse_word(std::string_view text);
Permutation parse_permutation(std::string_view text);
std::string format(const Word& w);
std::string format(const Permutation& a);

}  // namespace autgram
