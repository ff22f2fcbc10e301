#pragma once

#include <cstddef>
#include <string>
#include <string_view>

namespace fo2 {

// Words are plain strings over a declared alphabet.  Positions are 1-based
// throughout; 0 and |u|+1 serve as virtual boundary positions.
using Word = std::string;

class Alphabet {
public:
    Alphabet() = default;
    explicit Alphabet(std::string_view letters);
    static Alphabet of_word(std::string_view word);

    bool contains(char a) const;
    // Index of a letter in sorted order; throws std::invalid_argument if absent.
    std::size_t index_of(char a) const;
    std::size_t size() const { return letters_.size(); }
    bool empty() const { return letters_.empty(); }
    const std::string& letters() const { return letters_; }
    Alphabet unioned(const Alphabet& other) const;

    bool operator==(const Alphabet&) const = default;

private:
    std::string letters_;   // sorted, duplicate-free
};

Alphabet alph(std::string_view u);
Word reversed_word(std::string_view u);

// Scattered-subsequence test (greedy left-to-right embedding).
bool is_subword(std::string_view pattern, std::string_view text);

// Throws std::invalid_argument naming the first offending letter.
void require_over(const Alphabet& alphabet, std::string_view word);

}
