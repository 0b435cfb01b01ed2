// permutation.hpp -- letter permutations (alphabet renamings) acting on
// words and morphisms.

#pragma once

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "morphism.hpp"
#include "word.hpp"

namespace avoidance {

/// A bijection of the k-letter alphabet.  Serialized as "012→102",
/// i.e. the identity arrangement, an arrow, and the image arrangement.
class Permutation {
public:
    /// images[a] is where letter a goes; must be a bijection.
    explicit Permutation(std::vector<Letter> images)
      : images_(std::move(images))
    {
        const std::size_t k = images_.size();
        if (k < 1 || k > static_cast<std::size_t>(kMaxAlphabetSize))
            throw std::invalid_argument("permutation degree out of range");
        std::vector<bool> seen(k, false);
        for (Letter c : images_) {
            if (c >= k || seen[c])
                throw std::invalid_argument(
                    "not a permutation of the " + std::to_string(k) +
                    "-letter alphabet");
            seen[c] = true;
        }
    }

    static Permutation identity(int alphabet_size = kDefaultAlphabetSize)
    {
        std::vector<Letter> images(alphabet_size);
        std::iota(images.begin(), images.end(), Letter{0});
        return Permutation(std::move(images));
    }

    /// Parses "012→102" (the arrow is U+2192); the left side must be
    /// the identity arrangement 01...k-1.
    static Permutation parse(std::string_view text)
    {
        static constexpr std::string_view kArrow = "→";
        const std::size_t pos = text.find(kArrow);
        if (pos == std::string_view::npos)
            throw std::invalid_argument(
                "malformed permutation \"" + std::string(text) +
                "\": expected identity→images");
        const Word lhs = Word::parse(text.substr(0, pos), kMaxAlphabetSize);
        const Word rhs =
            Word::parse(text.substr(pos + kArrow.size()), kMaxAlphabetSize);
        for (std::size_t i = 0; i < lhs.size(); ++i)
            if (lhs[i] != i)
                throw std::invalid_argument(
                    "malformed permutation: left side must be the identity "
                    "arrangement");
        if (lhs.size() != rhs.size())
            throw std::invalid_argument(
                "malformed permutation: sides have different lengths");
        return Permutation(std::vector<Letter>(rhs.begin(), rhs.end()));
    }

    int alphabet_size() const noexcept
    {
        return static_cast<int>(images_.size());
    }

    Letter operator()(Letter a) const
    {
        if (a >= images_.size())
            throw std::invalid_argument("letter " + std::to_string(int(a)) +
                                        " outside the permutation's alphabet");
        return images_[a];
    }

    Permutation inverse() const
    {
        std::vector<Letter> inv(images_.size());
        for (std::size_t a = 0; a < images_.size(); ++a)
            inv[images_[a]] = static_cast<Letter>(a);
        return Permutation(std::move(inv));
    }

    /// (p.after(q))(a) = p(q(a)).
    Permutation after(const Permutation& q) const
    {
        if (alphabet_size() != q.alphabet_size())
            throw std::invalid_argument("cannot compose permutations of "
                                        "different degrees");
        std::vector<Letter> comp(images_.size());
        for (std::size_t a = 0; a < images_.size(); ++a)
            comp[a] = images_[q.images_[a]];
        return Permutation(std::move(comp));
    }

    /// All k! permutations, ordered lexicographically by image arrangement.
    static std::vector<Permutation> all(int alphabet_size = kDefaultAlphabetSize)
    {
        std::vector<Letter> images(alphabet_size);
        std::iota(images.begin(), images.end(), Letter{0});
        std::vector<Permutation> perms;
        do {
            perms.push_back(Permutation(images));
        } while (std::next_permutation(images.begin(), images.end()));
        return perms;
    }

    std::string str() const
    {
        std::string s;
        for (std::size_t a = 0; a < images_.size(); ++a)
            s.push_back(static_cast<char>('0' + a));
        s += "→";
        for (Letter c : images_)
            s.push_back(static_cast<char>('0' + c));
        return s;
    }

    bool operator==(const Permutation& other) const noexcept
    {
        return images_ == other.images_;
    }

private:
    std::vector<Letter> images_;
};

/// Renames every letter of w through p.
inline Word permute(const Word& w, const Permutation& p)
{
    if (w.alphabet_size() > p.alphabet_size())
        throw std::invalid_argument("word alphabet exceeds permutation degree");
    std::vector<Letter> letters;
    letters.reserve(w.size());
    for (Letter a : w)
        letters.push_back(p(a));
    return Word(std::move(letters), p.alphabet_size());
}

/// Conjugates h by p: the renamed morphism maps p(a) to p(h(a)), so its
/// limit words are the letterwise renamings of h's.
inline Morphism permute(const Morphism& h, const Permutation& p)
{
    if (h.alphabet_size() != p.alphabet_size())
        throw std::invalid_argument(
            "morphism and permutation act on different alphabets");
    const int k = h.alphabet_size();
    std::vector<Word> images(static_cast<std::size_t>(k), Word(k));
    for (Letter a = 0; a < k; ++a)
        images[p(a)] = permute(h.image(a), p);
    return Morphism(std::move(images));
}

} // namespace avoidance
