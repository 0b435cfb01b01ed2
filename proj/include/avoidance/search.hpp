// search.hpp -- exact factor search (Knuth-Morris-Pratt)

#pragma once

#include <span>
#include <stdexcept>
#include <vector>

#include "word.hpp"

namespace avoidance {
namespace detail {

/// KMP failure function: fail[i] = length of the longest proper border of
/// pattern[0..i].
inline std::vector<std::size_t> failure_function(std::span<const Letter> pattern)
{
    std::vector<std::size_t> fail(pattern.size(), 0);
    std::size_t k = 0;
    for (std::size_t i = 1; i < pattern.size(); ++i) {
        while (k > 0 && pattern[i] != pattern[k])
            k = fail[k - 1];
        if (pattern[i] == pattern[k])
            ++k;
        fail[i] = k;
    }
    return fail;
}

/// All start positions of `pattern` in `host`, ascending.  `pattern` must
/// be nonempty.  If `first_only` is set, stops after one match.
inline std::vector<std::size_t> match_positions(std::span<const Letter> host,
                                                std::span<const Letter> pattern,
                                                bool first_only = false)
{
    std::vector<std::size_t> positions;
    if (pattern.empty() || pattern.size() > host.size())
        return positions;
    const std::vector<std::size_t> fail = failure_function(pattern);
    std::size_t k = 0;
    for (std::size_t i = 0; i < host.size(); ++i) {
        while (k > 0 && host[i] != pattern[k])
            k = fail[k - 1];
        if (host[i] == pattern[k])
            ++k;
        if (k == pattern.size()) {
            positions.push_back(i + 1 - pattern.size());
            if (first_only)
                return positions;
            k = fail[k - 1];
        }
    }
    return positions;
}

} // namespace detail

/// All occurrences of `factor` in `host`, in ascending position order.
/// Occurrences may overlap.  Throws std::invalid_argument on an empty
/// factor: the empty word occurs everywhere and asking for it is a bug.
inline std::vector<Occurrence> occurrences(const Word& host, const Word& factor)
{
    if (factor.empty())
        throw std::invalid_argument("factor search requires a nonempty factor");
    std::vector<Occurrence> result;
    for (std::size_t pos : detail::match_positions(host.letters(), factor.letters()))
        result.push_back(Occurrence{pos, factor});
    return result;
}

/// True iff `factor` occurs in `host`.  Same nonempty-factor contract as
/// occurrences().
inline bool contains(const Word& host, const Word& factor)
{
    if (factor.empty())
        throw std::invalid_argument("factor search requires a nonempty factor");
    return !detail::match_positions(host.letters(), factor.letters(), true).empty();
}

} // namespace avoidance
