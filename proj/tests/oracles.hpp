// oracles.hpp -- deliberately naive reference implementations the tests
// compare against.  Everything here is direct-definition brute force with
// no pruning and no shared code with the library algorithms.

#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include <avoidance/word.hpp>

namespace oracles {

using avoidance::Letter;
using avoidance::Word;

/// Direct-definition square test over all O(n^2) factor ranges.
inline bool brute_has_square(const std::vector<Letter>& w)
{
    const std::size_t n = w.size();
    for (std::size_t start = 0; start < n; ++start)
        for (std::size_t p = 1; start + 2 * p <= n; ++p) {
            bool square = true;
            for (std::size_t i = 0; i < p; ++i)
                if (w[start + i] != w[start + p + i]) {
                    square = false;
                    break;
                }
            if (square)
                return true;
        }
    return false;
}

inline bool brute_has_square(const Word& w)
{
    return brute_has_square(std::vector<Letter>(w.begin(), w.end()));
}

/// Canonical first square by direct scan: smallest end position, then
/// shortest.  Returns (start, period) or nullopt.
inline std::optional<std::pair<std::size_t, std::size_t>>
brute_first_square(const std::vector<Letter>& w)
{
    const std::size_t n = w.size();
    for (std::size_t end = 2; end <= n; ++end)         // square ends at end-1
        for (std::size_t p = 1; 2 * p <= end; ++p) {   // shortest period first
            const std::size_t start = end - 2 * p;
            bool square = true;
            for (std::size_t i = 0; i < p; ++i)
                if (w[start + i] != w[start + p + i]) {
                    square = false;
                    break;
                }
            if (square)
                return std::make_pair(start, p);
        }
    return std::nullopt;
}

/// All start positions of `pattern` in `host` by direct comparison.
inline std::vector<std::size_t> brute_positions(const std::vector<Letter>& host,
                                                const std::vector<Letter>& pattern)
{
    std::vector<std::size_t> out;
    if (pattern.empty() || pattern.size() > host.size())
        return out;
    for (std::size_t s = 0; s + pattern.size() <= host.size(); ++s) {
        bool match = true;
        for (std::size_t i = 0; i < pattern.size(); ++i)
            if (host[s + i] != pattern[i]) {
                match = false;
                break;
            }
        if (match)
            out.push_back(s);
    }
    return out;
}

inline bool brute_contains(const std::vector<Letter>& host,
                           const std::vector<Letter>& pattern)
{
    return !brute_positions(host, pattern).empty();
}

inline bool brute_contains(const Word& host, const Word& pattern)
{
    return brute_contains(std::vector<Letter>(host.begin(), host.end()),
                          std::vector<Letter>(pattern.begin(), pattern.end()));
}

/// Calls fn on every one of the k^n words of length n, in lexicographic
/// order (an odometer, no pruning at all).
template <typename Fn>
void for_every_word(std::size_t n, int k, Fn&& fn)
{
    std::vector<Letter> w(n, 0);
    while (true) {
        fn(w);
        std::size_t i = n;
        while (i > 0 && w[i - 1] == k - 1)
            w[--i] = 0;
        if (i == 0)
            return;
        ++w[i - 1];
    }
}

/// Counts squarefree words of length n avoiding every pattern in `avoid`,
/// by filtering the full k^n space.
inline std::uint64_t unpruned_count(std::size_t n, int k,
                                    const std::vector<std::vector<Letter>>& avoid = {})
{
    if (n == 0)
        return 1;
    std::uint64_t count = 0;
    for_every_word(n, k, [&](const std::vector<Letter>& w) {
        if (brute_has_square(w))
            return;
        for (const auto& f : avoid)
            if (brute_contains(w, f))
                return;
        ++count;
    });
    return count;
}

/// Longest length reachable by squarefree words avoiding `avoid`, found by
/// breadth-first frontier growth (keep every valid word of each length).
/// Returns the first length with an empty frontier minus one, or `cap` if
/// the frontier is still alive there.
inline std::size_t frontier_max_length(const std::vector<std::vector<Letter>>& avoid,
                                       std::size_t cap, int k)
{
    std::vector<std::vector<Letter>> frontier{{}};
    for (std::size_t len = 1; len <= cap; ++len) {
        std::vector<std::vector<Letter>> next;
        for (const auto& w : frontier)
            for (Letter c = 0; c < k; ++c) {
                std::vector<Letter> e = w;
                e.push_back(c);
                if (brute_has_square(e))
                    continue;
                bool forbidden = false;
                for (const auto& f : avoid)
                    if (brute_contains(e, f)) {
                        forbidden = true;
                        break;
                    }
                if (!forbidden)
                    next.push_back(std::move(e));
            }
        if (next.empty())
            return len - 1;
        frontier = std::move(next);
    }
    return cap;
}

/// Every (source, offset) pair with |source| <= max_len whose image under
/// the rules contains `factor` at `offset`, where the occurrence starts in
/// the first letter's image and ends in the last letter's image.  Blind
/// generate-and-scan, no alignment reasoning.
inline std::vector<std::pair<std::vector<Letter>, std::size_t>>
brute_preimages(const std::vector<std::vector<Letter>>& images,
                const std::vector<Letter>& factor, std::size_t max_len)
{
    const int k = static_cast<int>(images.size());
    std::vector<std::pair<std::vector<Letter>, std::size_t>> out;
    std::vector<std::vector<Letter>> sources{{}};
    for (std::size_t len = 1; len <= max_len; ++len) {
        std::vector<std::vector<Letter>> next;
        for (const auto& u : sources)
            for (Letter c = 0; c < k; ++c) {
                std::vector<Letter> v = u;
                v.push_back(c);
                next.push_back(v);
            }
        for (const auto& u : next) {
            std::vector<Letter> img;
            std::vector<std::size_t> boundaries; // image start of each letter
            for (Letter c : u) {
                boundaries.push_back(img.size());
                img.insert(img.end(), images[c].begin(), images[c].end());
            }
            const std::size_t first_img_end =
                u.size() == 1 ? img.size() : boundaries[1];
            const std::size_t last_img_start = boundaries.back();
            for (std::size_t off : brute_positions(img, factor)) {
                // spanning: starts inside the first image, ends inside the last
                if (off < first_img_end &&
                    off + factor.size() > last_img_start)
                    out.emplace_back(u, off);
            }
        }
        sources = std::move(next);
    }
    return out;
}

/// Deterministic random words for property tests.
class WordGen {
public:
    explicit WordGen(std::uint32_t seed) : rng_(seed) {}

    Word word(std::size_t max_len, int k)
    {
        std::uniform_int_distribution<std::size_t> len_dist(0, max_len);
        std::uniform_int_distribution<int> letter_dist(0, k - 1);
        const std::size_t n = len_dist(rng_);
        std::vector<Letter> letters;
        letters.reserve(n);
        for (std::size_t i = 0; i < n; ++i)
            letters.push_back(static_cast<Letter>(letter_dist(rng_)));
        return Word(std::move(letters), k);
    }

    std::size_t index(std::size_t bound) // uniform in [0, bound)
    {
        std::uniform_int_distribution<std::size_t> dist(0, bound - 1);
        return dist(rng_);
    }

private:
    std::mt19937 rng_;
};

} // namespace oracles
