// word.hpp -- letters, finite words and factor occurrences over small alphabets

#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace avoidance {

/// A letter is an index into the alphabet {0, ..., k-1}.
using Letter = std::uint8_t;

inline constexpr int kDefaultAlphabetSize = 3;

/// Largest supported alphabet; letters render as the digits '0'..'9'.
inline constexpr int kMaxAlphabetSize = 10;

/// A finite word over a k-letter alphabet.  Words are immutable values:
/// every operation that "changes" a word returns a new one.  Ordering and
/// equality are lexicographic on the letters alone, so words over different
/// alphabet sizes compare by content.
class Word {
public:
    /// The empty ternary word.
    Word() = default;

    /// The empty word over a k-letter alphabet.
    explicit Word(int alphabet_size)
      : alphabet_size_(checked_alphabet(alphabet_size))
    {
    }

    Word(std::vector<Letter> letters, int alphabet_size)
      : letters_(std::move(letters)),
        alphabet_size_(checked_alphabet(alphabet_size))
    {
        for (Letter c : letters_)
            if (c >= alphabet_size_)
                throw std::invalid_argument(
                    "letter " + std::to_string(int(c)) +
                    " out of range for alphabet size " +
                    std::to_string(alphabet_size_));
    }

    /// Parses a digit string such as "0120"; the empty string denotes the
    /// empty word.  Throws std::invalid_argument naming the offending
    /// character if the string contains anything but digits below k.
    static Word parse(std::string_view digits,
                      int alphabet_size = kDefaultAlphabetSize)
    {
        checked_alphabet(alphabet_size);
        std::vector<Letter> letters;
        letters.reserve(digits.size());
        for (char ch : digits) {
            if (ch < '0' || ch > '9')
                throw std::invalid_argument(
                    std::string("invalid character '") + ch + "' in word \"" +
                    std::string(digits) + "\"");
            letters.push_back(static_cast<Letter>(ch - '0'));
        }
        return Word(std::move(letters), alphabet_size);
    }

    int alphabet_size() const noexcept { return alphabet_size_; }
    std::size_t size() const noexcept { return letters_.size(); }
    bool empty() const noexcept { return letters_.empty(); }

    Letter operator[](std::size_t i) const { return letters_[i]; }

    std::span<const Letter> letters() const noexcept { return letters_; }

    std::vector<Letter>::const_iterator begin() const noexcept { return letters_.begin(); }
    std::vector<Letter>::const_iterator end() const noexcept { return letters_.end(); }

    /// The factor of length `len` starting at `pos`; [pos, pos+len) must
    /// lie inside the word.
    Word factor(std::size_t pos, std::size_t len) const
    {
        if (pos + len > letters_.size())
            throw std::out_of_range("factor range outside word");
        return Word(std::vector<Letter>(letters_.begin() + pos,
                                        letters_.begin() + pos + len),
                    alphabet_size_);
    }

    /// The first min(n, size()) letters.
    Word prefix(std::size_t n) const
    {
        return factor(0, std::min(n, letters_.size()));
    }

    bool starts_with(const Word& other) const noexcept
    {
        return other.size() <= size() &&
               std::equal(other.begin(), other.end(), begin());
    }

    bool ends_with(const Word& other) const noexcept
    {
        return other.size() <= size() &&
               std::equal(other.begin(), other.end(), end() - other.size());
    }

    /// Concatenation; the result lives over the larger of the two alphabets.
    friend Word operator+(const Word& a, const Word& b)
    {
        std::vector<Letter> letters;
        letters.reserve(a.size() + b.size());
        letters.insert(letters.end(), a.begin(), a.end());
        letters.insert(letters.end(), b.begin(), b.end());
        return Word(std::move(letters),
                    std::max(a.alphabet_size_, b.alphabet_size_));
    }

    /// Digit-string rendering; the empty word renders as "".
    std::string str() const
    {
        std::string s;
        s.reserve(letters_.size());
        for (Letter c : letters_)
            s.push_back(static_cast<char>('0' + c));
        return s;
    }

    bool operator==(const Word& other) const noexcept
    {
        return letters_ == other.letters_;
    }

    std::strong_ordering operator<=>(const Word& other) const noexcept
    {
        return letters_ <=> other.letters_;
    }

private:
    static int checked_alphabet(int k)
    {
        if (k < 1 || k > kMaxAlphabetSize)
            throw std::invalid_argument("alphabet size must be between 1 and " +
                                        std::to_string(kMaxAlphabetSize));
        return k;
    }

    std::vector<Letter> letters_;
    int alphabet_size_ = kDefaultAlphabetSize;
};

inline std::ostream& operator<<(std::ostream& os, const Word& w)
{
    return os << w.str();
}

/// An occurrence of `factor` inside some host word, starting at `position`.
struct Occurrence {
    std::size_t position = 0;
    Word factor;

    bool operator==(const Occurrence&) const = default;
};

inline std::ostream& operator<<(std::ostream& os, const Occurrence& occ)
{
    return os << occ.factor << "@" << occ.position;
}

} // namespace avoidance
