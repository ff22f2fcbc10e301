#include "fo2/alphabet.hpp"

#include <algorithm>
#include <stdexcept>

namespace fo2 {

Alphabet::Alphabet(std::string_view letters) : letters_(letters) {
    std::sort(letters_.begin(), letters_.end());
    letters_.erase(std::unique(letters_.begin(), letters_.end()), letters_.end());
}

Alphabet Alphabet::of_word(std::string_view word) {
    return Alphabet(word);
}

bool Alphabet::contains(char a) const {
    return std::binary_search(letters_.begin(), letters_.end(), a);
}

std::size_t Alphabet::index_of(char a) const {
    auto it = std::lower_bound(letters_.begin(), letters_.end(), a);
    if (it == letters_.end() || *it != a)
        throw std::invalid_argument(std::string("letter '") + a + "' not in alphabet \"" + letters_ + "\"");
    return static_cast<std::size_t>(it - letters_.begin());
}

Alphabet Alphabet::unioned(const Alphabet& other) const {
    return Alphabet(letters_ + other.letters_);
}

Alphabet alph(std::string_view u) {
    return Alphabet(u);
}

Word reversed_word(std::string_view u) {
    return Word(u.rbegin(), u.rend());
}

bool is_subword(std::string_view pattern, std::string_view text) {
    std::size_t i = 0;
    for (char c : text) {
        if (i < pattern.size() && pattern[i] == c) ++i;
    }
    return i == pattern.size();
}

void require_over(const Alphabet& alphabet, std::string_view word) {
    for (char c : word) {
        if (!alphabet.contains(c))
            throw std::invalid_argument(std::string("word letter '") + c + "' not in alphabet \"" +
                                        alphabet.letters() + "\"");
    }
}

}
