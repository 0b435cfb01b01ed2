// avoidkit -- command-line front end for the avoidance-kit library.
//
// Exit codes: 0 success (and "yes" answers), 1 usage or input errors,
// 2 negative domain answers (a square found, certification refused,
// reproduction failures).

#include <CLI11.hpp>

#include <chrono>
#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include <avoidance/avoidance.hpp>

namespace {

using namespace avoidance;

/// Parallelism cap from the environment; malformed values fall back to 1
/// with a warning.
unsigned env_threads()
{
    const char* s = std::getenv("AVOIDANCE_KIT_THREADS");
    if (!s || !*s)
        return 1;
    char* end = nullptr;
    const long v = std::strtol(s, &end, 10);
    if (*end != '\0' || v < 1 || v > 1024) {
        std::cerr << "warning: ignoring invalid AVOIDANCE_KIT_THREADS value \""
                  << s << "\"\n";
        return 1;
    }
    return static_cast<unsigned>(v);
}

void emit(const json& j)
{
    std::cout << j.dump() << "\n";
}

struct Options {
    bool as_json = false;
    int alphabet = kDefaultAlphabetSize;
    int exit_code = 0;
};

int do_check(Options& opt, const std::string& word_text)
{
    const Word w = Word::parse(word_text, opt.alphabet);
    const auto sq = find_square(w);
    if (opt.as_json) {
        json j{{"word", w.str()}, {"squarefree", !sq.has_value()}};
        if (sq)
            j["square"] = to_json(*sq);
        emit(j);
    } else if (sq) {
        std::cout << "not squarefree: square " << sq->factor << " at position "
                  << sq->position << "\n";
    } else {
        std::cout << "squarefree\n";
    }
    return sq ? 2 : 0;
}

int do_count(Options& opt, std::size_t n, const std::string& avoid_text)
{
    const FactorSet avoid = FactorSet::parse(avoid_text, opt.alphabet);
    const EnumerationStats stats =
        count_squarefree(n, avoid, opt.alphabet, env_threads());
    emit(to_json(stats));
    return 0;
}

int do_enum(Options& opt, std::size_t n, const std::string& avoid_text,
            std::size_t limit)
{
    const FactorSet avoid = FactorSet::parse(avoid_text, opt.alphabet);
    std::vector<Word> words;
    bool truncated = false;
    for_each_squarefree(
        n, avoid,
        [&](const Word& w) {
            if (limit > 0 && words.size() == limit) {
                truncated = true;
                return false;
            }
            words.push_back(w);
            return true;
        },
        opt.alphabet);
    if (opt.as_json) {
        json list = json::array();
        for (const Word& w : words)
            list.push_back(w.str());
        emit(json{{"target_length", n},
                  {"words", list},
                  {"truncated", truncated}});
    } else {
        for (const Word& w : words)
            std::cout << w.str() << "\n";
    }
    return 0;
}

int do_maxlen(Options& opt, const std::string& avoid_text, std::size_t cap)
{
    const FactorSet avoid = FactorSet::parse(avoid_text, opt.alphabet);
    const SearchOutcome outcome = max_length_avoiding(avoid, cap, opt.alphabet);
    if (opt.as_json) {
        emit(to_json(outcome));
    } else {
        std::cout << (outcome.kind == SearchOutcome::Kind::Finite
                          ? "finite"
                          : "exceeds-cap")
                  << " longest=" << outcome.longest_length
                  << " witness=" << outcome.witness << "\n";
    }
    return 0;
}

int do_allcontain(Options& opt, std::size_t n, const std::string& require_text)
{
    const FactorSet required = FactorSet::parse(require_text, opt.alphabet);
    const AllContainResult r = all_contain(n, required, opt.alphabet);
    if (opt.as_json) {
        emit(to_json(r));
    } else if (r.all_contain) {
        std::cout << "all-contain true checked=" << r.stats.count << "\n";
    } else {
        std::cout << "all-contain false counterexample=" << *r.counterexample
                  << " missing=" << *r.missing_factor << "\n";
    }
    return r.all_contain ? 0 : 2;
}

int do_morphism_apply(Options& opt, const std::string& spec,
                      const std::string& word_text)
{
    const Morphism h = Morphism::parse(spec);
    const Word w = Word::parse(word_text, h.alphabet_size());
    const Word image = h.apply(w);
    if (opt.as_json)
        emit(json{{"word", w.str()}, {"image", image.str()}});
    else
        std::cout << image.str() << "\n";
    return 0;
}

int do_morphism_prolongable(Options& opt, const std::string& spec,
                            const std::string& letter_text)
{
    const Morphism h = Morphism::parse(spec);
    const Word l = Word::parse(letter_text, h.alphabet_size());
    if (l.size() != 1)
        throw std::invalid_argument("expected a single letter, got \"" +
                                    letter_text + "\"");
    const bool p = h.prolongable_on(l[0]);
    if (opt.as_json)
        emit(json{{"letter", l.str()}, {"prolongable", p}});
    else
        std::cout << (p ? "true" : "false") << "\n";
    return 0;
}

int do_morphism_prefix(Options& opt, const std::string& spec,
                       const std::string& seed_text, std::size_t length)
{
    const Morphism h = Morphism::parse(spec);
    const Word seed = Word::parse(seed_text, h.alphabet_size());
    const Word prefix = h.limit_prefix(seed, length);
    if (opt.as_json)
        emit(json{{"morphism", h.str()},
                  {"seed", seed.str()},
                  {"length", length},
                  {"prefix", prefix.str()}});
    else
        std::cout << prefix.str() << "\n";
    return 0;
}

int do_morphism_sqfree_test(Options& opt, const std::string& spec,
                            std::size_t max_length)
{
    const Morphism h = Morphism::parse(spec);
    const BoundedSquarefreeResult r = squarefree_on_bounded(h, max_length);
    if (opt.as_json) {
        json j{{"ok", r.ok}, {"max_length", max_length}};
        if (r.counterexample) {
            j["counterexample"] = r.counterexample->str();
            j["image"] = h.apply(*r.counterexample).str();
        }
        emit(j);
    } else if (r.ok) {
        std::cout << "ok\n";
    } else {
        std::cout << "counterexample " << *r.counterexample << " image "
                  << h.apply(*r.counterexample) << "\n";
    }
    return r.ok ? 0 : 2;
}

int do_morphism_preimages(Options& opt, const std::string& spec,
                          const std::string& factor_text,
                          std::size_t max_source_length)
{
    const Morphism h = Morphism::parse(spec);
    const Word factor = Word::parse(factor_text, h.alphabet_size());
    if (max_source_length == 0)
        max_source_length = preimage_search_bound(h, factor);
    const auto witnesses = preimage_factors(h, factor, max_source_length);
    if (opt.as_json) {
        json list = json::array();
        for (const PreimageWitness& pw : witnesses)
            list.push_back(to_json(pw));
        emit(json{{"factor", factor.str()}, {"witnesses", list}});
    } else {
        for (const PreimageWitness& pw : witnesses)
            std::cout << "source=" << pw.source << " offset=" << pw.offset
                      << "\n";
    }
    return 0;
}

int do_morphism_certify(Options& opt, const std::string& spec,
                        const std::string& seed_text,
                        const std::string& avoid_text, std::size_t depth)
{
    const Morphism h = Morphism::parse(spec);
    const Word seed = Word::parse(seed_text, h.alphabet_size());
    const FactorSet avoided = FactorSet::parse(avoid_text, h.alphabet_size());
    try {
        const AvoidanceCertificate cert =
            certify_avoidance(h, seed, avoided, depth);
        if (opt.as_json) {
            emit(to_json(cert));
        } else {
            std::cout << "certified " << cert.avoided.str()
                      << " checked_prefix=" << cert.checked_prefix_length
                      << "\n";
            for (const FactorArgument& arg : cert.argument)
                for (const AnnotatedWitness& aw : arg.witnesses)
                    std::cout << arg.factor << " <- " << aw.witness.source
                              << "@" << aw.witness.offset << " "
                              << to_string(aw.defect) << "\n";
        }
        return 0;
    } catch (const CertificationError& e) {
        std::cerr << "certification refused: " << e.what() << "\n";
        return 2;
    }
}

int do_classify(Options& opt, const std::string& word_text, std::size_t depth)
{
    const Word w = Word::parse(word_text, 3);
    const Verdict verdict = classify(w, depth);
    if (opt.as_json) {
        emit(to_json(verdict));
        return 0;
    }
    std::cout << "word: " << w.str() << "\n";
    std::cout << "kind: " << to_string(verdict.kind) << "\n";
    switch (verdict.kind) {
    case Avoidability::Unavoidable: {
        const auto& stats = std::get<EnumerationStats>(verdict.evidence);
        std::cout << "contained in all " << stats.count
                  << " squarefree words of length " << stats.target_length
                  << "\n";
        break;
    }
    case Avoidability::TriviallyAvoidable: {
        const auto& sq = std::get<Occurrence>(verdict.evidence);
        std::cout << "square: " << sq.factor << " at position " << sq.position
                  << "\n";
        break;
    }
    case Avoidability::Avoidable: {
        const auto& cert = std::get<AvoidanceCertificate>(verdict.evidence);
        std::cout << "avoids: " << cert.avoided.str() << "\n";
        break;
    }
    }
    if (verdict.witness) {
        const WitnessSpec& ws = *verdict.witness;
        std::cout << "witness: morphism=" << ws.morphism.str()
                  << " seed=" << ws.seed << " permutation="
                  << ws.permutation.str()
                  << " checked_prefix=" << ws.checked_prefix << "\n";
    }
    return 0;
}

int do_unavoidable_set(Options& opt)
{
    const std::vector<Word> words = unavoidable_set();
    if (opt.as_json) {
        json list = json::array();
        for (const Word& w : words)
            list.push_back(w.str());
        emit(json{{"words", list}});
    } else {
        for (const Word& w : words)
            std::cout << w.str() << "\n";
    }
    return 0;
}

int do_reproduce()
{
    struct Row {
        std::string name;
        bool ok;
    };
    std::vector<Row> rows;
    auto record = [&](std::string name, bool ok) {
        rows.push_back(Row{std::move(name), ok});
        std::cout << (ok ? "[PASS] " : "[FAIL] ") << rows.back().name << "\n";
    };

    {
        const EnumerationStats stats = count_squarefree(30);
        record("34422 squarefree ternary words of length 30",
               stats.count == 34422);
    }
    {
        const FactorSet six = FactorSet::parse("012,021,102,120,201,210");
        bool ok = all_contain(30, six).all_contain;
        for (const Word& f : six) {
            const SearchOutcome o =
                max_length_avoiding(FactorSet({f}), 100);
            ok = ok && o.kind == SearchOutcome::Kind::Finite &&
                 o.longest_length < 30;
        }
        record("every squarefree word of length 30 contains all six "
               "three-letter squarefree words",
               ok);
    }
    {
        const Morphism& h = witness_morphism();
        const Word prefix = h.limit_prefix(witness_seed(), 100000);
        bool ok = is_squarefree(prefix);
        for (const char* f : {"101", "202", "0120", "0210"})
            ok = ok && !contains(prefix, Word::parse(f));
        const AvoidanceCertificate cert = certify_avoidance(
            h, witness_seed(), FactorSet::parse("0120,0210"), 100000);
        ok = ok && verify_certificate(cert);
        record("limit word avoids 101, 202, 0120, 0210 with a verified "
               "certificate",
               ok);
    }
    {
        bool ok = true;
        std::size_t avoidable = 0;
        for_each_squarefree(4, FactorSet(), [&](const Word& w) {
            const Verdict v = classify(w, 10000);
            if (v.kind == Avoidability::Avoidable && v.witness) {
                const Word prefix = v.witness->morphism.limit_prefix(
                    v.witness->seed, v.witness->checked_prefix);
                if (is_squarefree(prefix) && !contains(prefix, w))
                    ++avoidable;
                else
                    ok = false;
            } else {
                ok = false;
            }
            return true;
        });
        record("all 18 squarefree words of length 4 are avoidable",
               ok && avoidable == 18);
    }
    {
        const SearchOutcome binary = max_length_avoiding(FactorSet(), 100, 2);
        const SearchOutcome ternary = max_length_avoiding(FactorSet(), 100, 3);
        record("binary squarefree words stop at length 3; ternary exceed any "
               "cap",
               binary.kind == SearchOutcome::Kind::Finite &&
                   binary.longest_length == 3 &&
                   ternary.kind == SearchOutcome::Kind::ExceedsCap);
    }

    std::size_t failures = 0;
    for (const Row& r : rows)
        if (!r.ok)
            ++failures;
    if (failures == 0) {
        std::cout << "all " << rows.size() << " checks passed\n";
        return 0;
    }
    std::cout << failures << " of " << rows.size() << " checks failed\n";
    return 2;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"decide and certify factor avoidability in infinite "
                 "squarefree ternary words"};
    app.require_subcommand(1);
    app.fallthrough(true);

    Options opt;
    app.add_flag("--json", opt.as_json, "emit machine-readable JSON");

    std::string word_text, avoid_text, require_text, spec_text, seed_text,
        letter_text, factor_text;
    std::size_t n = 0, limit = 0, cap = 100, depth = 10000, length = 30,
                max_length = 5, max_source_length = 0;

    auto* check = app.add_subcommand("check", "test a word for squarefreeness");
    check->add_option("word", word_text, "digit-string word")->required();
    check->add_option("--alphabet", opt.alphabet, "alphabet size")
        ->check(CLI::Range(2, kMaxAlphabetSize));
    check->callback([&] { opt.exit_code = do_check(opt, word_text); });

    auto* count =
        app.add_subcommand("count", "count squarefree words of a length");
    count->add_option("length", n, "word length")->required();
    count->add_option("--avoid", avoid_text, "comma-separated forbidden factors");
    count->add_option("--alphabet", opt.alphabet, "alphabet size")
        ->check(CLI::Range(2, kMaxAlphabetSize));
    count->callback([&] { opt.exit_code = do_count(opt, n, avoid_text); });

    auto* enumerate =
        app.add_subcommand("enum", "list squarefree words of a length");
    enumerate->add_option("length", n, "word length")->required();
    enumerate->add_option("--avoid", avoid_text,
                          "comma-separated forbidden factors");
    enumerate->add_option("--limit", limit, "stop after this many words");
    enumerate->add_option("--alphabet", opt.alphabet, "alphabet size")
        ->check(CLI::Range(2, kMaxAlphabetSize));
    enumerate->callback(
        [&] { opt.exit_code = do_enum(opt, n, avoid_text, limit); });

    auto* maxlen = app.add_subcommand(
        "maxlen", "longest squarefree word avoiding the given factors");
    maxlen->add_option("--avoid", avoid_text,
                       "comma-separated forbidden factors");
    maxlen->add_option("--cap", cap, "give up at this length")
        ->check(CLI::PositiveNumber);
    maxlen->add_option("--alphabet", opt.alphabet, "alphabet size")
        ->check(CLI::Range(2, kMaxAlphabetSize));
    maxlen->callback([&] { opt.exit_code = do_maxlen(opt, avoid_text, cap); });

    auto* allcontain = app.add_subcommand(
        "allcontain",
        "test whether every squarefree word of a length contains all "
        "required factors");
    allcontain->add_option("length", n, "word length")->required();
    allcontain
        ->add_option("--require", require_text,
                     "comma-separated required factors")
        ->required();
    allcontain->add_option("--alphabet", opt.alphabet, "alphabet size")
        ->check(CLI::Range(2, kMaxAlphabetSize));
    allcontain->callback(
        [&] { opt.exit_code = do_allcontain(opt, n, require_text); });

    auto* morphism =
        app.add_subcommand("morphism", "morphism and limit-word operations");
    morphism->require_subcommand(1);
    morphism->fallthrough(true);
    morphism
        ->add_option("--spec", spec_text,
                     "morphism rules, e.g. 0:12,1:102,2:0")
        ->required();

    auto* apply = morphism->add_subcommand("apply", "image of a word");
    apply->add_option("--word", word_text, "digit-string word")->required();
    apply->callback(
        [&] { opt.exit_code = do_morphism_apply(opt, spec_text, word_text); });

    auto* prolongable = morphism->add_subcommand(
        "prolongable", "does iteration from this letter extend its prefix?");
    prolongable->add_option("--letter", letter_text, "single letter")
        ->required();
    prolongable->callback([&] {
        opt.exit_code = do_morphism_prolongable(opt, spec_text, letter_text);
    });

    auto* prefix =
        morphism->add_subcommand("prefix", "prefix of the limit word");
    prefix->add_option("--seed", seed_text, "seed word")->required();
    prefix->add_option("--length", length, "prefix length")->required();
    prefix->callback([&] {
        opt.exit_code = do_morphism_prefix(opt, spec_text, seed_text, length);
    });

    auto* sqfree = morphism->add_subcommand(
        "sqfree-test",
        "do all short squarefree sources have squarefree images?");
    sqfree->add_option("--max-length", max_length, "largest source length")
        ->check(CLI::PositiveNumber);
    sqfree->callback([&] {
        opt.exit_code = do_morphism_sqfree_test(opt, spec_text, max_length);
    });

    auto* preimages = morphism->add_subcommand(
        "preimages", "spanning preimage witnesses of a factor");
    preimages->add_option("--factor", factor_text, "digit-string factor")
        ->required();
    preimages->add_option("--max-source-length", max_source_length,
                          "search bound (default: provably exhaustive)");
    preimages->callback([&] {
        opt.exit_code = do_morphism_preimages(opt, spec_text, factor_text,
                                              max_source_length);
    });

    auto* certify = morphism->add_subcommand(
        "certify", "build an avoidance certificate for the limit word");
    certify->add_option("--seed", seed_text, "seed word")->required();
    certify->add_option("--avoid", avoid_text, "factors to certify")
        ->required();
    certify->add_option("--depth", depth, "checked prefix length")
        ->check(CLI::Range(std::size_t{30}, std::size_t{100000000}));
    certify->callback([&] {
        opt.exit_code =
            do_morphism_certify(opt, spec_text, seed_text, avoid_text, depth);
    });

    auto* classify_cmd =
        app.add_subcommand("classify", "avoidability verdict for a word");
    classify_cmd->add_option("word", word_text, "digit-string ternary word");
    classify_cmd->add_option("--depth", depth, "witness verification length")
        ->check(CLI::Range(std::size_t{30}, std::size_t{100000000}));
    classify_cmd->callback(
        [&] { opt.exit_code = do_classify(opt, word_text, depth); });

    auto* unavoid = app.add_subcommand(
        "unavoidable-set", "the sixteen unavoidable ternary words");
    unavoid->callback([&] { opt.exit_code = do_unavoidable_set(opt); });

    auto* reproduce = app.add_subcommand(
        "reproduce", "re-run the built-in exhaustive checks");
    reproduce->callback([&] { opt.exit_code = do_reproduce(); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 1;
    } catch (const LimitError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return opt.exit_code;
}
