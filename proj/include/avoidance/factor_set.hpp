// factor_set.hpp -- finite sets of factors, used both as forbidden lists
// and as required lists.

#pragma once

#include <algorithm>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "search.hpp"
#include "word.hpp"

namespace avoidance {

/// An immutable, deduplicated, lexicographically sorted set of nonempty
/// words over a common alphabet.
class FactorSet {
public:
    /// The empty set (over the ternary alphabet by default).
    FactorSet() = default;

    explicit FactorSet(int alphabet_size)
      : alphabet_size_(alphabet_size)
    {
        if (alphabet_size < 1 || alphabet_size > kMaxAlphabetSize)
            throw std::invalid_argument("alphabet size out of range");
    }

    explicit FactorSet(std::vector<Word> factors,
                       int alphabet_size = kDefaultAlphabetSize)
      : FactorSet(alphabet_size)
    {
        for (const Word& f : factors) {
            if (f.empty())
                throw std::invalid_argument(
                    "factor sets may not contain the empty word");
            if (f.alphabet_size() > alphabet_size_)
                throw std::invalid_argument(
                    "factor \"" + f.str() + "\" lives over a larger alphabet "
                    "than the set");
        }
        std::sort(factors.begin(), factors.end());
        factors.erase(std::unique(factors.begin(), factors.end()),
                      factors.end());
        factors_ = std::move(factors);
    }

    /// Parses a comma-separated list of digit strings, e.g. "0120,0210".
    /// The empty string denotes the empty set.
    static FactorSet parse(std::string_view text,
                           int alphabet_size = kDefaultAlphabetSize)
    {
        std::vector<Word> factors;
        if (!text.empty()) {
            std::size_t start = 0;
            while (true) {
                std::size_t comma = text.find(',', start);
                std::string_view item = text.substr(
                    start, comma == std::string_view::npos ? std::string_view::npos
                                                           : comma - start);
                factors.push_back(Word::parse(item, alphabet_size));
                if (comma == std::string_view::npos)
                    break;
                start = comma + 1;
            }
        }
        return FactorSet(std::move(factors), alphabet_size);
    }

    int alphabet_size() const noexcept { return alphabet_size_; }
    std::size_t size() const noexcept { return factors_.size(); }
    bool empty() const noexcept { return factors_.empty(); }

    std::vector<Word>::const_iterator begin() const noexcept { return factors_.begin(); }
    std::vector<Word>::const_iterator end() const noexcept { return factors_.end(); }

    const Word& operator[](std::size_t i) const { return factors_[i]; }

    bool member(const Word& w) const
    {
        return std::binary_search(factors_.begin(), factors_.end(), w);
    }

    /// Length of the longest factor in the set; 0 for the empty set.
    std::size_t max_length() const noexcept
    {
        std::size_t m = 0;
        for (const Word& f : factors_)
            m = std::max(m, f.size());
        return m;
    }

    /// Comma-joined digit strings in sorted order.
    std::string str() const
    {
        std::string s;
        for (std::size_t i = 0; i < factors_.size(); ++i) {
            if (i > 0)
                s.push_back(',');
            s += factors_[i].str();
        }
        return s;
    }

    bool operator==(const FactorSet& other) const noexcept
    {
        return factors_ == other.factors_;
    }

private:
    std::vector<Word> factors_;
    int alphabet_size_ = kDefaultAlphabetSize;
};

/// True iff some member of `set` occurs in `host`.  The empty set matches
/// nothing, so any host (even the empty word) yields false.
inline bool contains_any(const Word& host, const FactorSet& set)
{
    for (const Word& f : set)
        if (f.size() <= host.size() && contains(host, f))
            return true;
    return false;
}

namespace detail {

/// True iff some member of `set` is a suffix of `w`: the check a
/// letter-by-letter search needs after appending one letter.
inline bool ends_with_any(std::span<const Letter> w, const FactorSet& set)
{
    for (const Word& f : set) {
        const std::size_t m = f.size();
        if (m > w.size())
            continue;
        bool match = true;
        for (std::size_t i = 0; i < m; ++i) {
            if (w[w.size() - m + i] != f[i]) {
                match = false;
                break;
            }
        }
        if (match)
            return true;
    }
    return false;
}

} // namespace detail
} // namespace avoidance
