// enumerate.hpp -- pruned backtracking over squarefree words avoiding a
// forbidden factor set.
//
// All operations share one depth-first walker that visits, in lexicographic
// order, exactly the nonempty words that are squarefree and contain no
// forbidden factor.  Appending a letter can only create a square or a
// forbidden occurrence ending at that letter, so validity is rechecked
// only at the suffix: the tree of valid words is pruned the moment a
// branch dies, never below it.

#pragma once

#include <atomic>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <thread>
#include <vector>

#include "factor_set.hpp"
#include "squares.hpp"
#include "word.hpp"

namespace avoidance {

/// Counters describing one exhaustive search.  nodes_visited counts the
/// root plus every valid partial word the walker entered; it is a
/// machine-checkable fingerprint of the pruned tree.
struct EnumerationStats {
    std::size_t target_length = 0;
    std::uint64_t count = 0;
    std::uint64_t nodes_visited = 0;
    std::size_t max_depth = 0;

    bool operator==(const EnumerationStats&) const = default;
};

/// Result of searching for the longest valid word under a length cap.
struct SearchOutcome {
    enum class Kind { Finite, ExceedsCap };

    Kind kind = Kind::Finite;
    std::size_t longest_length = 0;
    /// Lexicographically least valid word of longest_length.
    Word witness;

    bool operator==(const SearchOutcome&) const = default;
};

/// Result of testing whether every valid word of a given length contains
/// all required factors.
struct AllContainResult {
    bool all_contain = false;
    /// On failure: the lexicographically first valid word missing a factor,
    /// and the first (in sorted order) factor it misses.
    std::optional<Word> counterexample;
    std::optional<Word> missing_factor;
    /// Full-search stats on success; stats up to the counterexample on
    /// failure.
    EnumerationStats stats;
};

namespace detail {

enum class Walk { Descend, Prune, Stop };

/// Visits every valid word that properly extends `stem`, in lexicographic
/// order, never deeper than depth_limit letters total.  `stem` itself must
/// already be valid (the empty stem trivially is).  The visitor is called
/// with the whole buffer (stem included) and steers the walk.
template <typename Visitor>
void walk_valid_words(std::span<const Letter> stem, int alphabet_size,
                      const FactorSet& avoid, std::size_t depth_limit,
                      Visitor&& visit)
{
    const std::size_t base = stem.size();
    if (depth_limit <= base)
        return;
    std::vector<Letter> w(stem.begin(), stem.end());
    w.reserve(depth_limit);
    std::vector<Letter> next_try{0}; // next letter to try at each level
    while (!next_try.empty()) {
        Letter c = next_try.back();
        if (c >= alphabet_size) {
            next_try.pop_back();
            if (w.size() > base)
                w.pop_back();
            if (!next_try.empty())
                ++next_try.back();
            continue;
        }
        w.push_back(c);
        const std::span<const Letter> view(w);
        if (square_closes_at_back(view) || ends_with_any(view, avoid)) {
            w.pop_back();
            ++next_try.back();
            continue;
        }
        Walk ctl = visit(view);
        if (ctl == Walk::Stop)
            return;
        if (ctl == Walk::Descend && w.size() < depth_limit) {
            next_try.push_back(0);
        } else {
            w.pop_back();
            ++next_try.back();
        }
    }
}

inline EnumerationStats count_below(std::span<const Letter> stem,
                                    int alphabet_size, const FactorSet& avoid,
                                    std::size_t n)
{
    EnumerationStats stats;
    stats.target_length = n;
    walk_valid_words(stem, alphabet_size, avoid, n,
                     [&](std::span<const Letter> w) {
                         ++stats.nodes_visited;
                         stats.max_depth = std::max(stats.max_depth, w.size());
                         if (w.size() == n) {
                             ++stats.count;
                             return Walk::Prune;
                         }
                         return Walk::Descend;
                     });
    return stats;
}

} // namespace detail

/// Calls `sink` once for each squarefree word of length n over the given
/// alphabet that avoids every factor in `avoid`, in lexicographic order.
/// The sink returns false to stop early.  n = 0 yields the empty word.
template <typename Sink>
void for_each_squarefree(std::size_t n, const FactorSet& avoid, Sink&& sink,
                         int alphabet_size = kDefaultAlphabetSize)
{
    if (n == 0) {
        sink(Word(alphabet_size));
        return;
    }
    detail::walk_valid_words(
        {}, alphabet_size, avoid, n, [&](std::span<const Letter> w) {
            if (w.size() < n)
                return detail::Walk::Descend;
            bool keep_going = sink(Word(std::vector<Letter>(w.begin(), w.end()),
                                        alphabet_size));
            return keep_going ? detail::Walk::Prune : detail::Walk::Stop;
        });
}

/// All squarefree words of length n avoiding `avoid`, in lexicographic
/// order.  Materializes the whole list; prefer for_each_squarefree or
/// count_squarefree for large n.
inline std::vector<Word> enumerate_squarefree(
    std::size_t n, const FactorSet& avoid = FactorSet(),
    int alphabet_size = kDefaultAlphabetSize)
{
    std::vector<Word> words;
    for_each_squarefree(
        n, avoid,
        [&](const Word& w) {
            words.push_back(w);
            return true;
        },
        alphabet_size);
    return words;
}

/// Counts the squarefree words of length n avoiding `avoid`, with search
/// statistics.  `threads` > 1 splits the search tree by prefix; the result
/// is identical to the sequential count, field for field.
inline EnumerationStats count_squarefree(std::size_t n,
                                         const FactorSet& avoid = FactorSet(),
                                         int alphabet_size = kDefaultAlphabetSize,
                                         unsigned threads = 1)
{
    if (n == 0)
        return EnumerationStats{0, 1, 1, 0};

    constexpr std::size_t kSplitDepth = 4;
    if (threads <= 1 || n <= kSplitDepth) {
        EnumerationStats stats = detail::count_below({}, alphabet_size, avoid, n);
        ++stats.nodes_visited; // the root
        return stats;
    }

    // Phase 1: walk the shallow tree, collecting every valid word of length
    // kSplitDepth as an independent work item.
    EnumerationStats shallow;
    shallow.target_length = n;
    shallow.nodes_visited = 1;
    std::vector<std::vector<Letter>> stems;
    detail::walk_valid_words({}, alphabet_size, avoid, kSplitDepth,
                             [&](std::span<const Letter> w) {
                                 ++shallow.nodes_visited;
                                 shallow.max_depth =
                                     std::max(shallow.max_depth, w.size());
                                 if (w.size() == kSplitDepth) {
                                     stems.emplace_back(w.begin(), w.end());
                                     return detail::Walk::Prune;
                                 }
                                 return detail::Walk::Descend;
                             });

    // Phase 2: each worker exhausts whole subtrees.
    const unsigned workers =
        std::min<unsigned>(threads, static_cast<unsigned>(stems.size()));
    std::vector<EnumerationStats> partial(stems.size());
    std::atomic<std::size_t> cursor{0};
    auto drain = [&]() {
        while (true) {
            std::size_t i = cursor.fetch_add(1);
            if (i >= stems.size())
                return;
            partial[i] = detail::count_below(stems[i], alphabet_size, avoid, n);
        }
    };
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < workers; ++t)
        pool.emplace_back(drain);
    drain();
    for (std::thread& t : pool)
        t.join();

    EnumerationStats stats = shallow;
    for (const EnumerationStats& p : partial) {
        stats.count += p.count;
        stats.nodes_visited += p.nodes_visited;
        stats.max_depth = std::max(stats.max_depth, p.max_depth);
    }
    return stats;
}

/// Tests whether every squarefree word of length n (avoiding nothing)
/// contains every factor in `required`.  Stops at the first
/// counterexample.  n must be positive and `required` nonempty.
inline AllContainResult all_contain(std::size_t n, const FactorSet& required,
                                    int alphabet_size = kDefaultAlphabetSize)
{
    if (n == 0)
        throw std::invalid_argument("all_contain requires a positive length");
    if (required.empty())
        throw std::invalid_argument("all_contain requires at least one factor");

    AllContainResult result;
    result.stats.target_length = n;
    result.stats.nodes_visited = 1;
    const FactorSet no_avoid;
    detail::walk_valid_words(
        {}, alphabet_size, no_avoid, n, [&](std::span<const Letter> w) {
            ++result.stats.nodes_visited;
            result.stats.max_depth = std::max(result.stats.max_depth, w.size());
            if (w.size() < n)
                return detail::Walk::Descend;
            ++result.stats.count;
            Word word(std::vector<Letter>(w.begin(), w.end()), alphabet_size);
            for (const Word& f : required) {
                if (!contains(word, f)) {
                    result.counterexample = word;
                    result.missing_factor = f;
                    return detail::Walk::Stop;
                }
            }
            return detail::Walk::Prune;
        });
    result.all_contain = !result.counterexample.has_value();
    return result;
}

/// Finds the longest squarefree word avoiding `avoid`, giving up at length
/// `cap`.  Kind::Finite means the search tree was exhausted: no valid word
/// of longest_length + 1 exists at all.  Kind::ExceedsCap means a valid
/// word of length cap exists.  Either way the witness is the
/// lexicographically least valid word of longest_length.
inline SearchOutcome max_length_avoiding(const FactorSet& avoid,
                                         std::size_t cap,
                                         int alphabet_size = kDefaultAlphabetSize)
{
    if (cap == 0)
        throw std::invalid_argument("max_length_avoiding requires cap >= 1");
    SearchOutcome outcome;
    outcome.witness = Word(alphabet_size);
    detail::walk_valid_words(
        {}, alphabet_size, avoid, cap, [&](std::span<const Letter> w) {
            if (w.size() > outcome.longest_length) {
                // lexicographic visiting order makes the first word of each
                // new length the least one
                outcome.longest_length = w.size();
                outcome.witness = Word(std::vector<Letter>(w.begin(), w.end()),
                                       alphabet_size);
                if (w.size() == cap)
                    return detail::Walk::Stop;
            }
            return detail::Walk::Descend;
        });
    outcome.kind = outcome.longest_length == cap ? SearchOutcome::Kind::ExceedsCap
                                                 : SearchOutcome::Kind::Finite;
    return outcome;
}

} // namespace avoidance
