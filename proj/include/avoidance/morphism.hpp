// morphism.hpp -- nonerasing endomorphisms of a free monoid, fixed-point
// prefixes, and preimage-based avoidance certificates.
//
// The central proof pattern: to show an infinite word h^inf(seed) avoids a
// factor f, enumerate every way f can arise as the image of a short word
// (its "preimage witnesses") and exhibit a defect in each -- the source
// contains a square, contains a factor already being avoided, or has no
// preimage itself.  Grounded induction over these defects proves f never
// appears.  certify_avoidance builds such arguments; verify_certificate
// rechecks them from scratch.

#pragma once

#include <algorithm>
#include <deque>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "enumerate.hpp"
#include "factor_set.hpp"
#include "search.hpp"
#include "squares.hpp"
#include "word.hpp"

namespace avoidance {

/// Iteration budget for limit_prefix before giving up.
inline constexpr std::size_t kLimitIterationBudget = 64;

class LimitError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Iterating the morphism stopped producing new letters before the
/// requested prefix length was reached.
class NonGrowingError : public LimitError {
public:
    using LimitError::LimitError;
};

/// The iterates failed to stabilize within the iteration budget.
class NonConvergingError : public LimitError {
public:
    using LimitError::LimitError;
};

/// A nonerasing endomorphism of the k-letter free monoid: each letter maps
/// to a nonempty word over the same alphabet.
class Morphism {
public:
    /// images[a] is the image of letter a; the alphabet size is the number
    /// of images.  Every image must be nonempty and stay inside the
    /// alphabet.
    explicit Morphism(std::vector<Word> images)
      : images_(std::move(images))
    {
        const std::size_t k = images_.size();
        if (k < 1 || k > static_cast<std::size_t>(kMaxAlphabetSize))
            throw std::invalid_argument("morphism must have between 1 and " +
                                        std::to_string(kMaxAlphabetSize) +
                                        " rules");
        for (std::size_t a = 0; a < k; ++a) {
            if (images_[a].empty())
                throw std::invalid_argument("image of letter " +
                                            std::to_string(a) +
                                            " is empty; morphisms must be "
                                            "nonerasing");
            for (Letter c : images_[a])
                if (c >= k)
                    throw std::invalid_argument(
                        "image of letter " + std::to_string(a) +
                        " uses letter " + std::to_string(int(c)) +
                        " outside the " + std::to_string(k) +
                        "-letter alphabet");
        }
    }

    /// Parses rule text such as "0:12,1:102,2:0".  Every letter of the
    /// alphabet {0..k-1}, where k is the number of rules, must get exactly
    /// one rule.
    static Morphism parse(std::string_view text)
    {
        std::vector<std::optional<Word>> slots;
        std::size_t start = 0;
        std::size_t rules = 0;
        while (start <= text.size()) {
            std::size_t comma = text.find(',', start);
            std::string_view rule = text.substr(
                start, comma == std::string_view::npos ? std::string_view::npos
                                                       : comma - start);
            std::size_t colon = rule.find(':');
            if (colon == std::string_view::npos)
                throw std::invalid_argument("malformed rule \"" +
                                            std::string(rule) +
                                            "\": expected letter:image");
            std::string_view lhs = rule.substr(0, colon);
            std::string_view rhs = rule.substr(colon + 1);
            if (lhs.size() != 1 || lhs[0] < '0' || lhs[0] > '9')
                throw std::invalid_argument("malformed rule \"" +
                                            std::string(rule) +
                                            "\": left side must be a single "
                                            "digit");
            std::size_t a = static_cast<std::size_t>(lhs[0] - '0');
            if (slots.size() <= a)
                slots.resize(a + 1);
            if (slots[a].has_value())
                throw std::invalid_argument("duplicate rule for letter " +
                                            std::string(lhs));
            slots[a] = Word::parse(rhs, kMaxAlphabetSize);
            ++rules;
            if (comma == std::string_view::npos)
                break;
            start = comma + 1;
        }
        if (slots.size() != rules)
            throw std::invalid_argument("missing rule: every letter below the "
                                        "largest must have one");
        const int k = static_cast<int>(slots.size());
        std::vector<Word> images;
        images.reserve(slots.size());
        for (std::size_t a = 0; a < slots.size(); ++a) {
            for (Letter c : *slots[a])
                if (c >= k)
                    throw std::invalid_argument(
                        "image of letter " + std::to_string(a) +
                        " uses letter " + std::to_string(int(c)) +
                        " outside the " + std::to_string(k) +
                        "-letter alphabet");
            images.emplace_back(std::vector<Letter>(slots[a]->begin(),
                                                    slots[a]->end()),
                                k);
        }
        return Morphism(std::move(images));
    }

    static Morphism identity(int alphabet_size)
    {
        std::vector<Word> images;
        for (int a = 0; a < alphabet_size; ++a)
            images.push_back(Word({static_cast<Letter>(a)}, alphabet_size));
        return Morphism(std::move(images));
    }

    int alphabet_size() const noexcept
    {
        return static_cast<int>(images_.size());
    }

    const Word& image(Letter a) const
    {
        if (a >= images_.size())
            throw std::invalid_argument("letter " + std::to_string(int(a)) +
                                        " outside the morphism's alphabet");
        return images_[a];
    }

    std::size_t min_image_length() const noexcept
    {
        std::size_t m = images_[0].size();
        for (const Word& img : images_)
            m = std::min(m, img.size());
        return m;
    }

    std::size_t max_image_length() const noexcept
    {
        std::size_t m = 0;
        for (const Word& img : images_)
            m = std::max(m, img.size());
        return m;
    }

    Word apply(const Word& w) const
    {
        std::vector<Letter> out;
        for (Letter a : w) {
            const Word& img = image(a); // bounds-checks a
            out.insert(out.end(), img.begin(), img.end());
        }
        return Word(std::move(out), alphabet_size());
    }

    /// True iff image(a) starts with a and is longer than one letter, so
    /// that iterating from a extends its own prefix.
    bool prolongable_on(Letter a) const
    {
        const Word& img = image(a);
        return img.size() >= 2 && img[0] == a;
    }

    /// First n letters of the limit of seed, h(seed), h(h(seed)), ...
    /// Iterates on truncated prefixes, returning as soon as the first n
    /// letters agree between consecutive iterates (they are then stable
    /// forever, since the morphism maps agreeing prefixes to agreeing
    /// prefixes).  Throws NonGrowingError if the iterates stop gaining
    /// length before reaching n, NonConvergingError if no stable prefix
    /// emerges within the iteration budget.
    Word limit_prefix(const Word& seed, std::size_t n) const
    {
        if (seed.empty())
            throw NonGrowingError("limit of an empty seed is empty");
        for (Letter a : seed)
            image(a); // validate
        if (n == 0)
            return Word(alphabet_size());

        std::vector<Letter> cur(seed.begin(), seed.end());
        if (cur.size() > n)
            cur.resize(n);
        for (std::size_t iter = 0; iter < kLimitIterationBudget; ++iter) {
            std::uint64_t true_len = 0;
            for (Letter a : cur)
                true_len += images_[a].size();
            std::vector<Letter> next;
            next.reserve(std::min<std::uint64_t>(n, true_len));
            for (Letter a : cur) {
                const Word& img = images_[a];
                for (Letter c : img) {
                    next.push_back(c);
                    if (next.size() == n)
                        break;
                }
                if (next.size() == n)
                    break;
            }
            std::size_t agree = 0;
            const std::size_t limit = std::min(cur.size(), next.size());
            while (agree < limit && cur[agree] == next[agree])
                ++agree;
            if (agree >= n)
                return Word(std::vector<Letter>(next.begin(), next.begin() + n),
                            alphabet_size());
            if (true_len <= cur.size() && agree == limit)
                throw NonGrowingError(
                    "iterates stall at length " + std::to_string(true_len) +
                    " before reaching the requested prefix length " +
                    std::to_string(n));
            cur = std::move(next);
        }
        throw NonConvergingError(
            "no stable prefix of length " + std::to_string(n) + " after " +
            std::to_string(kLimitIterationBudget) + " iterations");
    }

    /// Rule text in the same format parse() accepts.
    std::string str() const
    {
        std::string s;
        for (std::size_t a = 0; a < images_.size(); ++a) {
            if (a > 0)
                s.push_back(',');
            s.push_back(static_cast<char>('0' + a));
            s.push_back(':');
            s += images_[a].str();
        }
        return s;
    }

    bool operator==(const Morphism& other) const
    {
        return images_ == other.images_;
    }

private:
    std::vector<Word> images_;
};

/// Result of checking that a morphism maps short squarefree words to
/// squarefree words.
struct BoundedSquarefreeResult {
    bool ok = false;
    /// Shortest (then lexicographically least) squarefree source whose
    /// image contains a square.
    std::optional<Word> counterexample;
};

/// Checks h on every squarefree source of length 1..max_source_length.
inline BoundedSquarefreeResult squarefree_on_bounded(const Morphism& h,
                                                     std::size_t max_source_length)
{
    if (max_source_length == 0)
        throw std::invalid_argument("max_source_length must be positive");
    for (std::size_t len = 1; len <= max_source_length; ++len) {
        std::optional<Word> bad;
        for_each_squarefree(
            len, FactorSet(),
            [&](const Word& u) {
                if (!is_squarefree(h.apply(u))) {
                    bad = u;
                    return false;
                }
                return true;
            },
            h.alphabet_size());
        if (bad)
            return BoundedSquarefreeResult{false, bad};
    }
    return BoundedSquarefreeResult{true, std::nullopt};
}

/// One way a factor can arise inside an image: h(source) contains the
/// factor starting at `offset`, with the occurrence spanning from the first
/// letter's image into the last letter's image (so no letter of the source
/// is superfluous).
struct PreimageWitness {
    Word source;
    std::size_t offset = 0;

    bool operator==(const PreimageWitness&) const = default;
};

/// Smallest exhaustive search bound for preimages of `factor` under h: a
/// spanning occurrence touches at most ceil(|factor| / min_image) + 2
/// source letters, so searching up to that length finds every witness.
inline std::size_t preimage_search_bound(const Morphism& h, const Word& factor)
{
    const std::size_t m = h.min_image_length();
    return (factor.size() + m - 1) / m + 2;
}

/// All spanning preimage witnesses of `factor` under h with source length
/// at most max_source_length, sorted by source then offset.  Requires
/// max_source_length >= preimage_search_bound(h, factor), so the answer is
/// provably complete; throws std::invalid_argument otherwise.
inline std::vector<PreimageWitness> preimage_factors(const Morphism& h,
                                                     const Word& factor,
                                                     std::size_t max_source_length)
{
    if (factor.empty())
        throw std::invalid_argument("preimage search requires a nonempty factor");
    for (Letter c : factor)
        if (c >= h.alphabet_size())
            throw std::invalid_argument("factor \"" + factor.str() +
                                        "\" uses letters outside the "
                                        "morphism's alphabet");
    const std::size_t bound = preimage_search_bound(h, factor);
    if (max_source_length < bound)
        throw std::invalid_argument(
            "max_source_length " + std::to_string(max_source_length) +
            " cannot be exhaustive for factor \"" + factor.str() +
            "\"; need at least " + std::to_string(bound));

    const int k = h.alphabet_size();
    const std::span<const Letter> f = factor.letters();
    std::vector<PreimageWitness> out;
    std::vector<Letter> source;

    // Extends the current source, having already matched `consumed` letters
    // of f, until f is exhausted inside some final image.
    auto extend = [&](auto&& self, std::size_t consumed) -> void {
        const std::size_t remaining = f.size() - consumed;
        for (Letter b = 0; b < k; ++b) {
            const Word& img = h.image(b);
            if (img.size() >= remaining) {
                if (std::equal(f.begin() + consumed, f.end(), img.begin())) {
                    source.push_back(b);
                    // offset is fixed up by the caller once it is known
                    out.push_back(PreimageWitness{Word(source, k), 0});
                    source.pop_back();
                }
            } else if (source.size() < max_source_length &&
                       std::equal(img.begin(), img.end(),
                                  f.begin() + consumed)) {
                source.push_back(b);
                self(self, consumed + img.size());
                source.pop_back();
            }
        }
    };

    for (Letter a = 0; a < k; ++a) {
        const Word& img = h.image(a);
        for (std::size_t t = 0; t < img.size(); ++t) {
            const std::size_t avail = img.size() - t;
            if (avail >= f.size()) {
                // the whole factor fits inside this one image
                if (std::equal(f.begin(), f.end(), img.begin() + t))
                    out.push_back(
                        PreimageWitness{Word({a}, k), t});
            } else if (std::equal(img.begin() + t, img.end(), f.begin())) {
                source.assign(1, a);
                const std::size_t before = out.size();
                extend(extend, avail);
                // every witness found below starts at offset t
                for (std::size_t i = before; i < out.size(); ++i)
                    out[i].offset = t;
                source.clear();
            }
        }
    }
    std::sort(out.begin(), out.end(),
              [](const PreimageWitness& x, const PreimageWitness& y) {
                  if (x.source != y.source)
                      return x.source < y.source;
                  return x.offset < y.offset;
              });
    return out;
}

/// Why a preimage witness cannot actually occur in the limit word.
enum class WitnessDefect {
    ContainsSquare,       // the source is not squarefree
    ContainsAvoidedFactor, // the source contains a factor of the argument
    NoPreimage,           // the source itself has no preimage witnesses
};

inline std::string_view to_string(WitnessDefect d)
{
    switch (d) {
    case WitnessDefect::ContainsSquare: return "contains-square";
    case WitnessDefect::ContainsAvoidedFactor:
        return "contains-already-avoided-factor";
    case WitnessDefect::NoPreimage: return "no-preimage-exists";
    }
    return "?";
}

/// A preimage witness together with its defect.  For ContainsSquare the
/// evidence is the square; for ContainsAvoidedFactor it is the cited
/// factor; for NoPreimage it is empty.
struct AnnotatedWitness {
    PreimageWitness witness;
    WitnessDefect defect = WitnessDefect::NoPreimage;
    Word evidence;

    bool operator==(const AnnotatedWitness&) const = default;
};

/// The complete preimage analysis of one factor: every witness, each with
/// a defect.  An empty witness list is itself a proof (no preimage at all).
struct FactorArgument {
    Word factor;
    std::vector<AnnotatedWitness> witnesses;
};

/// A machine-checkable proof that the limit word of (morphism, seed)
/// avoids every factor of `avoided`.  `argument` covers the avoided
/// factors (in sorted order) followed by any supporting factors the
/// analysis pulled in, in discovery order.  checked_prefix_length is the
/// length of the limit prefix that was scanned directly.
struct AvoidanceCertificate {
    Morphism morphism;
    Word seed;
    FactorSet avoided;
    std::vector<FactorArgument> argument;
    std::size_t checked_prefix_length = 0;
};

/// Certification failed: some factors could not be given a grounded
/// argument (or already occur in the checked prefix).
class CertificationError : public std::runtime_error {
public:
    CertificationError(const std::string& msg, std::vector<Word> factors)
      : std::runtime_error(msg), failed_factors(std::move(factors))
    {
    }

    std::vector<Word> failed_factors;
};

namespace detail {

inline std::string join_words(const std::vector<Word>& words)
{
    std::string s;
    for (std::size_t i = 0; i < words.size(); ++i) {
        if (i > 0)
            s += ", ";
        s += words[i].str();
    }
    return s;
}

/// True iff every witness of every argument is grounded: defects that cite
/// another factor only count once the cited factor's own argument is
/// grounded.  Rejects circular support.
inline bool argument_is_grounded(const std::vector<FactorArgument>& argument,
                                 std::vector<Word>* ungrounded = nullptr)
{
    std::map<Word, bool> grounded;
    for (const FactorArgument& arg : argument)
        grounded[arg.factor] = false;
    bool changed = true;
    while (changed) {
        changed = false;
        for (const FactorArgument& arg : argument) {
            if (grounded[arg.factor])
                continue;
            bool all = true;
            for (const AnnotatedWitness& aw : arg.witnesses) {
                if (aw.defect == WitnessDefect::ContainsAvoidedFactor) {
                    auto it = grounded.find(aw.evidence);
                    if (it == grounded.end() || !it->second) {
                        all = false;
                        break;
                    }
                }
            }
            if (all) {
                grounded[arg.factor] = true;
                changed = true;
            }
        }
    }
    bool ok = true;
    for (const auto& [factor, g] : grounded) {
        if (!g) {
            ok = false;
            if (ungrounded)
                ungrounded->push_back(factor);
        }
    }
    return ok;
}

} // namespace detail

/// Builds an avoidance certificate for (h, seed) and the given factors.
///
/// First the limit prefix of length prefix_check is scanned: it must be
/// squarefree and avoid every requested factor outright.  Then each factor
/// receives a preimage analysis; witness sources that are squarefree and
/// contain no already-known factor are added to the argument themselves
/// (closure), unless they in turn have no preimages.  Finally the whole
/// argument must be grounded -- circular support is rejected.  Throws
/// CertificationError when any factor cannot be certified, LimitError when
/// the limit prefix itself cannot be produced.
inline AvoidanceCertificate certify_avoidance(const Morphism& h,
                                              const Word& seed,
                                              const FactorSet& avoided,
                                              std::size_t prefix_check)
{
    if (avoided.empty())
        throw std::invalid_argument("nothing to certify: empty factor set");
    constexpr std::size_t kClosureCap = 64;

    const Word prefix = h.limit_prefix(seed, prefix_check);
    if (auto sq = find_square(prefix))
        throw CertificationError("limit prefix contains the square " +
                                     sq->factor.str() + " at position " +
                                     std::to_string(sq->position),
                                 {});
    {
        std::vector<Word> present;
        for (const Word& f : avoided)
            if (contains(prefix, f))
                present.push_back(f);
        if (!present.empty())
            throw CertificationError(
                "factors occur in the limit prefix: " +
                    detail::join_words(present),
                present);
    }

    std::vector<Word> closure(avoided.begin(), avoided.end());
    std::set<Word> known(closure.begin(), closure.end());
    std::deque<Word> queue(closure.begin(), closure.end());
    std::vector<FactorArgument> argument;
    std::vector<Word> failed;

    while (!queue.empty()) {
        const Word f = queue.front();
        queue.pop_front();
        FactorArgument arg{f, {}};
        const auto witnesses =
            preimage_factors(h, f, preimage_search_bound(h, f));
        for (const PreimageWitness& pw : witnesses) {
            if (auto sq = find_square(pw.source)) {
                arg.witnesses.push_back(AnnotatedWitness{
                    pw, WitnessDefect::ContainsSquare, sq->factor});
                continue;
            }
            std::optional<Word> cited;
            for (const Word& g : known) { // sorted: cites the least member
                if (g.size() <= pw.source.size() && contains(pw.source, g)) {
                    cited = g;
                    break;
                }
            }
            if (cited) {
                arg.witnesses.push_back(AnnotatedWitness{
                    pw, WitnessDefect::ContainsAvoidedFactor, *cited});
                continue;
            }
            if (preimage_factors(h, pw.source,
                                 preimage_search_bound(h, pw.source))
                    .empty()) {
                arg.witnesses.push_back(
                    AnnotatedWitness{pw, WitnessDefect::NoPreimage, Word(h.alphabet_size())});
                continue;
            }
            // The source has no defect yet: avoid it too, citing it.  It
            // must be absent from the checked prefix for that to have any
            // chance of succeeding.
            if (known.size() >= kClosureCap || contains(prefix, pw.source)) {
                failed.push_back(f);
                break;
            }
            known.insert(pw.source);
            queue.push_back(pw.source);
            arg.witnesses.push_back(AnnotatedWitness{
                pw, WitnessDefect::ContainsAvoidedFactor, pw.source});
        }
        argument.push_back(std::move(arg));
    }

    if (failed.empty()) {
        std::vector<Word> ungrounded;
        if (!detail::argument_is_grounded(argument, &ungrounded))
            failed = std::move(ungrounded);
    }
    if (!failed.empty()) {
        std::sort(failed.begin(), failed.end());
        failed.erase(std::unique(failed.begin(), failed.end()), failed.end());
        throw CertificationError("cannot certify avoidance of: " +
                                     detail::join_words(failed),
                                 failed);
    }

    return AvoidanceCertificate{h, seed, avoided, std::move(argument),
                                prefix_check};
}

/// Rechecks a certificate from first principles: the limit prefix is
/// squarefree and misses every argument factor, every argument's witness
/// list is exactly the exhaustive preimage analysis, every defect claim is
/// true, every avoided factor has an argument, and the whole argument is
/// grounded.  On failure, stores a reason in *why if given.
inline bool verify_certificate(const AvoidanceCertificate& cert,
                               std::string* why = nullptr)
{
    auto fail = [&](const std::string& reason) {
        if (why)
            *why = reason;
        return false;
    };

    Word prefix;
    try {
        prefix = cert.morphism.limit_prefix(cert.seed,
                                            cert.checked_prefix_length);
    } catch (const LimitError& e) {
        return fail(std::string("limit prefix unavailable: ") + e.what());
    }
    if (!is_squarefree(prefix))
        return fail("limit prefix is not squarefree");

    std::set<Word> argued;
    for (const FactorArgument& arg : cert.argument) {
        if (!argued.insert(arg.factor).second)
            return fail("duplicate argument for factor " + arg.factor.str());
        if (contains(prefix, arg.factor))
            return fail("factor " + arg.factor.str() +
                        " occurs in the checked prefix");
    }
    for (const Word& f : cert.avoided)
        if (!argued.count(f))
            return fail("avoided factor " + f.str() + " has no argument");

    for (const FactorArgument& arg : cert.argument) {
        std::vector<PreimageWitness> expected;
        try {
            expected = preimage_factors(
                cert.morphism, arg.factor,
                preimage_search_bound(cert.morphism, arg.factor));
        } catch (const std::invalid_argument& e) {
            return fail(std::string("preimage analysis failed: ") + e.what());
        }
        if (expected.size() != arg.witnesses.size())
            return fail("witness list for " + arg.factor.str() +
                        " is not exhaustive");
        for (std::size_t i = 0; i < expected.size(); ++i) {
            const AnnotatedWitness& aw = arg.witnesses[i];
            if (!(aw.witness == expected[i]))
                return fail("witness list for " + arg.factor.str() +
                            " differs from the exhaustive analysis");
            switch (aw.defect) {
            case WitnessDefect::ContainsSquare:
                if (is_squarefree(aw.witness.source))
                    return fail("source " + aw.witness.source.str() +
                                " is squarefree but claimed to contain a "
                                "square");
                break;
            case WitnessDefect::ContainsAvoidedFactor:
                if (!argued.count(aw.evidence) ||
                    !contains(aw.witness.source, aw.evidence))
                    return fail("cited factor " + aw.evidence.str() +
                                " does not defeat source " +
                                aw.witness.source.str());
                break;
            case WitnessDefect::NoPreimage:
                if (!preimage_factors(
                         cert.morphism, aw.witness.source,
                         preimage_search_bound(cert.morphism,
                                               aw.witness.source))
                         .empty())
                    return fail("source " + aw.witness.source.str() +
                                " does have preimages");
                break;
            }
        }
    }

    std::vector<Word> ungrounded;
    if (!detail::argument_is_grounded(cert.argument, &ungrounded))
        return fail("argument is circular for: " +
                    detail::join_words(ungrounded));
    return true;
}

} // namespace avoidance
