// classify.hpp -- avoidability verdicts for ternary words.
//
// A ternary word x is unavoidable if every infinite squarefree ternary
// word contains it, avoidable if some infinite squarefree ternary word
// does not.  classify() decides this for every x and returns evidence:
//
//   * x contains a square          -> TriviallyAvoidable.  Every infinite
//     squarefree word avoids x; the square is the evidence.
//   * |x| <= 2, or x is squarefree of length 3 -> Unavoidable.  An
//     exhaustive search shows every squarefree word of length 30 already
//     contains x, and infinite squarefree words have arbitrarily long
//     squarefree factors.
//   * x squarefree, |x| >= 3 otherwise -> Avoidable.  A renamed copy of
//     one fixed morphism gives an infinite squarefree word avoiding x,
//     with a preimage certificate for a short factor of x:
//       - if x contains aba (a != b), the fixed point avoiding {aba, cbc}
//         works, c being the third letter (the length-3 core case);
//       - else x starts abca with a, b, c distinct, and the fixed point
//         avoiding {abca, acba} works.

#pragma once

#include <cassert>
#include <optional>
#include <stdexcept>
#include <variant>
#include <vector>

#include "enumerate.hpp"
#include "morphism.hpp"
#include "permutation.hpp"
#include "search.hpp"
#include "squares.hpp"
#include "word.hpp"

namespace avoidance {

/// Shortest prefix length considered meaningful for witness verification.
inline constexpr std::size_t kMinClassifyDepth = 30;

/// Exhaustive-search length at which every unavoidable word has appeared
/// in every squarefree word.
inline constexpr std::size_t kContainmentLength = 30;

/// The fixed base morphism 0:12, 1:102, 2:0.  Iterating it from seed 1
/// yields an infinite squarefree word (its limit word) that avoids 101 and
/// 202; renaming letters moves the avoided pair around the alphabet.
inline const Morphism& witness_morphism()
{
    static const Morphism h = Morphism::parse("0:12,1:102,2:0");
    return h;
}

/// The seed whose iterates under witness_morphism() converge.
inline const Word& witness_seed()
{
    static const Word seed = Word::parse("1");
    return seed;
}

/// A recipe for an infinite squarefree word avoiding specific factors:
/// iterate `morphism` from `seed`; `permutation` records how the base
/// morphism was renamed, and `avoided` lists the factors the limit word
/// provably avoids.
struct WitnessConstruction {
    Morphism morphism;
    Word seed;
    Permutation permutation;
    FactorSet avoided;
};

/// The avoider for words containing aba: renames the base construction so
/// that its avoided pair {aba, cbc} has the requested a and b (c being the
/// third letter; the two avoided words share the middle letter b).
/// Requires a != b, both ternary letters.
inline WitnessConstruction aba_witness(Letter a, Letter b)
{
    if (a >= 3 || b >= 3 || a == b)
        throw std::invalid_argument(
            "aba pattern needs two distinct ternary letters");
    // The base pair is {101, 202}: it has a = 1, b = 0.  Send 1 to a and
    // 0 to b; the third letter follows.
    const Letter c = static_cast<Letter>(3 - a - b);
    std::vector<Letter> images(3);
    images[1] = a;
    images[0] = b;
    images[2] = c;
    Permutation p{std::move(images)};
    Morphism renamed = permute(witness_morphism(), p);
    Word seed = permute(witness_seed(), p);
    FactorSet avoided(
        {permute(Word::parse("101"), p), permute(Word::parse("202"), p)});
    return WitnessConstruction{std::move(renamed), std::move(seed),
                               std::move(p), std::move(avoided)};
}

/// The avoider for squarefree words starting abca (all three letters
/// distinct): renames the base construction so that its avoided pair
/// {0120, 0210} becomes {abca, acba}.
inline WitnessConstruction abca_witness(Letter a, Letter b, Letter c)
{
    if (a >= 3 || b >= 3 || c >= 3 || a == b || a == c || b == c)
        throw std::invalid_argument(
            "abca pattern needs three distinct ternary letters");
    std::vector<Letter> images(3);
    images[0] = a;
    images[1] = b;
    images[2] = c;
    Permutation p{std::move(images)};
    Morphism renamed = permute(witness_morphism(), p);
    Word seed = permute(witness_seed(), p);
    FactorSet avoided(
        {permute(Word::parse("0120"), p), permute(Word::parse("0210"), p)});
    return WitnessConstruction{std::move(renamed), std::move(seed),
                               std::move(p), std::move(avoided)};
}

enum class Avoidability {
    Avoidable,
    Unavoidable,
    TriviallyAvoidable,
};

inline std::string_view to_string(Avoidability kind)
{
    switch (kind) {
    case Avoidability::Avoidable: return "avoidable";
    case Avoidability::Unavoidable: return "unavoidable";
    case Avoidability::TriviallyAvoidable: return "trivially-avoidable";
    }
    return "?";
}

/// How a verdict's avoidance witness was built and how far it was checked.
struct WitnessSpec {
    Morphism morphism;
    Word seed;
    Permutation permutation;
    std::size_t checked_prefix = 0;
};

/// Evidence backing a verdict: exhaustive containment statistics for
/// unavoidable words, an avoidance certificate for avoidable ones, or the
/// first square for trivially avoidable ones.
using VerdictEvidence =
    std::variant<EnumerationStats, AvoidanceCertificate, Occurrence>;

struct Verdict {
    Word word;
    Avoidability kind = Avoidability::Unavoidable;
    /// Present for the two avoidable kinds; absent for unavoidable words.
    std::optional<WitnessSpec> witness;
    VerdictEvidence evidence;
};

/// Decides avoidability of x.  `depth` is the limit-prefix length at which
/// every avoidance witness is verified (the prefix is checked to be
/// squarefree and to miss x); it must be at least kMinClassifyDepth.
inline Verdict classify(const Word& input, std::size_t depth = 10000)
{
    if (depth < kMinClassifyDepth)
        throw std::invalid_argument(
            "depth " + std::to_string(depth) + " below the minimum of " +
            std::to_string(kMinClassifyDepth));
    Word x = input;
    if (input.alphabet_size() > 3) {
        for (Letter c : input)
            if (c >= 3)
                throw std::invalid_argument("classification works over the "
                                            "ternary alphabet");
        x = Word(std::vector<Letter>(input.begin(), input.end()), 3);
    }

    Verdict verdict;
    verdict.word = x;

    // Words with a square are avoided by every infinite squarefree word.
    if (auto sq = find_square(x)) {
        verdict.kind = Avoidability::TriviallyAvoidable;
        verdict.witness = WitnessSpec{witness_morphism(), witness_seed(),
                                      Permutation::identity(3), depth};
        verdict.evidence = *sq;
        const Word prefix = witness_morphism().limit_prefix(witness_seed(), depth);
        if (contains(prefix, x))
            throw std::logic_error("witness prefix unexpectedly contains " +
                                   x.str());
        return verdict;
    }

    // Squarefree words of length <= 2, and the six squarefree words of
    // length 3, occur in every sufficiently long squarefree word; the
    // exhaustive length-30 search is the proof.  The empty word occurs
    // everywhere outright.
    const bool short_unavoidable = x.size() <= 2;
    bool is_three_distinct = x.size() == 3 && x[0] != x[1] &&
                             x[1] != x[2] && x[0] != x[2];
    if (short_unavoidable || is_three_distinct) {
        verdict.kind = Avoidability::Unavoidable;
        if (x.empty()) {
            verdict.evidence = count_squarefree(kContainmentLength);
        } else {
            AllContainResult r =
                all_contain(kContainmentLength, FactorSet({x}));
            if (!r.all_contain)
                throw std::logic_error("containment search unexpectedly "
                                       "found a counterexample for " +
                                       x.str());
            verdict.evidence = r.stats;
        }
        return verdict;
    }

    // Remaining: squarefree of length >= 3, not three distinct letters.
    // The length-(at most 4) prefix pins down a renamed avoider: either it
    // contains aba, or it is a full length-4 prefix abca with a, b, c
    // distinct (a squarefree length-4 word with no aba must close its
    // first letter: x = abca).
    assert(x.size() >= 3);
    const Word head = x.prefix(4);
    std::optional<WitnessConstruction> wc;
    for (std::size_t j = 0; j + 2 < head.size() && !wc; ++j)
        if (head[j] == head[j + 2] && head[j] != head[j + 1])
            wc = aba_witness(head[j], head[j + 1]);
    if (!wc) {
        assert(head.size() == 4 && head[0] == head[3]);
        wc = abca_witness(head[0], head[1], head[2]);
    }

    AvoidanceCertificate cert =
        certify_avoidance(wc->morphism, wc->seed, wc->avoided, depth);
    const Word prefix = wc->morphism.limit_prefix(wc->seed, depth);
    if (contains(prefix, x))
        throw std::logic_error("witness prefix unexpectedly contains " +
                               x.str());

    verdict.kind = Avoidability::Avoidable;
    verdict.witness =
        WitnessSpec{wc->morphism, wc->seed, wc->permutation, depth};
    verdict.evidence = std::move(cert);
    return verdict;
}

/// The sixteen unavoidable ternary words: the empty word, the letters, the
/// six squarefree two-letter words and the six squarefree three-letter
/// words, in length-then-lexicographic order.  Everything else is
/// avoidable.
inline std::vector<Word> unavoidable_set()
{
    std::vector<Word> words{Word()};
    for (std::size_t len = 1; len <= 3; ++len)
        for_each_squarefree(len, FactorSet(), [&](const Word& w) {
            bool distinct = true;
            for (std::size_t i = 0; i < w.size(); ++i)
                for (std::size_t j = i + 1; j < w.size(); ++j)
                    if (w[i] == w[j])
                        distinct = false;
            if (distinct)
                words.push_back(w);
            return true;
        });
    return words;
}

} // namespace avoidance
