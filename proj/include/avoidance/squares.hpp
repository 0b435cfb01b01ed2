// squares.hpp -- square detection: exact tests, canonical first square,
// suffix squares.  A square is a nonempty word of the form xx.

#pragma once

#include <algorithm>
#include <optional>
#include <span>
#include <vector>

#include "word.hpp"

namespace avoidance {
namespace detail {

/// Z-array: z[i] = length of the longest common prefix of s and s[i..).
/// By convention z[0] = |s|.
inline std::vector<std::size_t> z_function(std::span<const Letter> s)
{
    const std::size_t n = s.size();
    std::vector<std::size_t> z(n, 0);
    if (n == 0)
        return z;
    z[0] = n;
    std::size_t l = 0, r = 0; // rightmost match window [l, r)
    for (std::size_t i = 1; i < n; ++i) {
        if (i < r)
            z[i] = std::min(r - i, z[i - l]);
        while (i + z[i] < n && s[z[i]] == s[i + z[i]])
            ++z[i];
        if (i + z[i] > r) {
            l = i;
            r = i + z[i];
        }
    }
    return z;
}

/// Smallest period p such that the last 2p letters of `s` form a square,
/// or 0 if no square ends at the last position.  O(n) via the z-array of
/// the reversal: a square of period p ends at the back iff the reversed
/// word matches itself with shift p for at least p letters.
inline std::size_t shortest_square_suffix_period(std::span<const Letter> s)
{
    const std::size_t n = s.size();
    if (n < 2)
        return 0;
    std::vector<Letter> rev(s.rbegin(), s.rend());
    std::vector<std::size_t> z = z_function(rev);
    for (std::size_t p = 1; 2 * p <= n; ++p)
        if (z[p] >= p)
            return p;
    return 0;
}

/// True iff some square ends exactly at the last letter of `w`.  Naive
/// period scan with early exit; meant for the short, incrementally grown
/// buffers of a backtracking search, where candidate periods almost always
/// die on the first comparison.
inline bool square_closes_at_back(std::span<const Letter> w)
{
    const std::size_t n = w.size();
    for (std::size_t p = 1; 2 * p <= n; ++p) {
        std::size_t i = 1;
        // compare the last p letters with the p letters before them,
        // starting from the back where a mismatch is most likely
        while (i <= p && w[n - i] == w[n - i - p])
            ++i;
        if (i > p)
            return true;
    }
    return false;
}

bool has_square(std::span<const Letter> s);

/// Divide-and-conquer square existence in O(n log n): split s = uv, recurse,
/// then look for squares crossing the split.  A crossing square has a
/// "centre" letter in u (left pass) or v (right pass); for each centre the
/// maximal extensions are read off four z-arrays, and a square exists iff
/// the two extensions overlap.
inline bool has_crossing_square(std::span<const Letter> u,
                                std::span<const Letter> v)
{
    const std::size_t nu = u.size(), nv = v.size();
    // separator outside the alphabet so z-values cannot bleed across
    constexpr Letter kSep = 255;

    std::vector<Letter> ru(u.rbegin(), u.rend());
    std::vector<Letter> rv(v.rbegin(), v.rend());

    std::vector<Letter> v_sep_u;
    v_sep_u.reserve(nu + nv + 1);
    v_sep_u.insert(v_sep_u.end(), v.begin(), v.end());
    v_sep_u.push_back(kSep);
    v_sep_u.insert(v_sep_u.end(), u.begin(), u.end());

    std::vector<Letter> ru_sep_rv;
    ru_sep_rv.reserve(nu + nv + 1);
    ru_sep_rv.insert(ru_sep_rv.end(), ru.begin(), ru.end());
    ru_sep_rv.push_back(kSep);
    ru_sep_rv.insert(ru_sep_rv.end(), rv.begin(), rv.end());

    const std::vector<std::size_t> z1 = z_function(ru);
    const std::vector<std::size_t> z2 = z_function(v_sep_u);
    const std::vector<std::size_t> z3 = z_function(ru_sep_rv);
    const std::vector<std::size_t> z4 = z_function(v);

    auto at = [](const std::vector<std::size_t>& z, std::size_t i) {
        return i < z.size() ? z[i] : std::size_t{0};
    };

    for (std::size_t centre = 0; centre < nu + nv; ++centre) {
        const bool left = centre < nu;
        std::size_t len, back, fwd;
        if (left) {
            len = nu - centre;
            back = at(z1, len);
            fwd = at(z2, nv + 1 + centre);
        } else {
            len = centre - nu + 1;
            back = at(z3, nu + 1 + nv - len);
            fwd = at(z4, len);
        }
        if (back + fwd < len)
            continue;
        std::size_t lo = len > fwd ? len - fwd : 1;
        lo = std::max<std::size_t>(lo, 1);
        std::size_t hi = std::min(len, back);
        if (left && hi == len)
            --hi; // squares lying wholly in u were found by recursion
        if (lo <= hi)
            return true;
    }
    return false;
}

inline bool has_square(std::span<const Letter> s)
{
    const std::size_t n = s.size();
    if (n < 2)
        return false;
    if (n <= 8)
        return square_closes_at_back(s) ||
               has_square(s.first(n - 1)); // tiny inputs: direct scan
    const std::size_t nu = n / 2;
    std::span<const Letter> u = s.first(nu);
    std::span<const Letter> v = s.subspan(nu);
    return has_square(u) || has_square(v) || has_crossing_square(u, v);
}

} // namespace detail

/// True iff w = xx for some nonempty x.
inline bool is_square(const Word& w)
{
    const std::size_t n = w.size();
    if (n == 0 || n % 2 != 0)
        return false;
    std::span<const Letter> s = w.letters();
    return std::equal(s.begin(), s.begin() + n / 2, s.begin() + n / 2);
}

/// True iff no factor of w is a square.  The empty word and all
/// one-letter words are squarefree.
inline bool is_squarefree(const Word& w)
{
    return !detail::has_square(w.letters());
}

/// The shortest square ending at the last letter of w, or nullopt.
inline std::optional<Occurrence> square_suffix(const Word& w)
{
    std::size_t p = detail::shortest_square_suffix_period(w.letters());
    if (p == 0)
        return std::nullopt;
    return Occurrence{w.size() - 2 * p, w.factor(w.size() - 2 * p, 2 * p)};
}

/// The canonical first square of w: among all square factors, the one with
/// the smallest end position, and the shortest such.  Found by binary
/// search for the shortest prefix containing a square, then reading off the
/// shortest square ending at its last letter.
inline std::optional<Occurrence> find_square(const Word& w)
{
    std::span<const Letter> s = w.letters();
    if (!detail::has_square(s))
        return std::nullopt;
    std::size_t lo = 2, hi = s.size();
    while (lo < hi) {
        std::size_t mid = lo + (hi - lo) / 2;
        if (detail::has_square(s.first(mid)))
            hi = mid;
        else
            lo = mid + 1;
    }
    std::size_t p = detail::shortest_square_suffix_period(s.first(lo));
    return Occurrence{lo - 2 * p, w.factor(lo - 2 * p, 2 * p)};
}

} // namespace avoidance
