// json_io.hpp -- JSON views of results and certificates.
//
// Key order is part of the output contract (identical invocations must
// produce identical bytes), so everything goes through nlohmann's
// ordered_json.  Certificate witnesses serialize as {source, offset,
// defect}; the parser reconstructs the supporting evidence (the square or
// the cited factor), which is derivable, when reading a certificate back.

#pragma once

#include <json.hpp>

#include <optional>
#include <stdexcept>
#include <string>

#include "classify.hpp"
#include "enumerate.hpp"
#include "morphism.hpp"
#include "permutation.hpp"
#include "word.hpp"

namespace avoidance {

using json = nlohmann::ordered_json;

inline json to_json(const Word& w)
{
    return w.str();
}

inline json to_json(const EnumerationStats& stats)
{
    return json{{"target_length", stats.target_length},
                {"count", stats.count},
                {"nodes_visited", stats.nodes_visited},
                {"max_depth", stats.max_depth}};
}

inline EnumerationStats stats_from_json(const json& j)
{
    EnumerationStats stats;
    stats.target_length = j.at("target_length").get<std::size_t>();
    stats.count = j.at("count").get<std::uint64_t>();
    stats.nodes_visited = j.at("nodes_visited").get<std::uint64_t>();
    stats.max_depth = j.at("max_depth").get<std::size_t>();
    return stats;
}

inline json to_json(const Occurrence& occ)
{
    return json{{"position", occ.position}, {"factor", occ.factor.str()}};
}

inline Occurrence occurrence_from_json(const json& j, int alphabet_size = 3)
{
    return Occurrence{
        j.at("position").get<std::size_t>(),
        Word::parse(j.at("factor").get<std::string>(), alphabet_size)};
}

inline json to_json(const SearchOutcome& outcome)
{
    return json{{"kind", outcome.kind == SearchOutcome::Kind::Finite
                             ? "finite"
                             : "exceeds-cap"},
                {"longest_length", outcome.longest_length},
                {"witness", outcome.witness.str()}};
}

inline json to_json(const AllContainResult& r)
{
    json j{{"all_contain", r.all_contain}};
    if (r.counterexample)
        j["counterexample"] = r.counterexample->str();
    if (r.missing_factor)
        j["missing_factor"] = r.missing_factor->str();
    j["stats"] = to_json(r.stats);
    return j;
}

inline json to_json(const PreimageWitness& pw)
{
    return json{{"source", pw.source.str()}, {"offset", pw.offset}};
}

inline json to_json(const AvoidanceCertificate& cert)
{
    json argument = json::array();
    for (const FactorArgument& arg : cert.argument) {
        json witnesses = json::array();
        for (const AnnotatedWitness& aw : arg.witnesses)
            witnesses.push_back(json{{"source", aw.witness.source.str()},
                                     {"offset", aw.witness.offset},
                                     {"defect", to_string(aw.defect)}});
        argument.push_back(
            json{{"factor", arg.factor.str()}, {"witnesses", witnesses}});
    }
    json avoided = json::array();
    for (const Word& f : cert.avoided)
        avoided.push_back(f.str());
    return json{{"morphism", cert.morphism.str()},
                {"seed", cert.seed.str()},
                {"avoided", avoided},
                {"argument", argument},
                {"checked_prefix_length", cert.checked_prefix_length}};
}

inline WitnessDefect defect_from_string(const std::string& s)
{
    if (s == "contains-square")
        return WitnessDefect::ContainsSquare;
    if (s == "contains-already-avoided-factor")
        return WitnessDefect::ContainsAvoidedFactor;
    if (s == "no-preimage-exists")
        return WitnessDefect::NoPreimage;
    throw std::invalid_argument("unknown witness defect \"" + s + "\"");
}

inline AvoidanceCertificate certificate_from_json(const json& j)
{
    Morphism h = Morphism::parse(j.at("morphism").get<std::string>());
    const int k = h.alphabet_size();
    Word seed = Word::parse(j.at("seed").get<std::string>(), k);
    std::vector<Word> avoided;
    for (const json& f : j.at("avoided"))
        avoided.push_back(Word::parse(f.get<std::string>(), k));

    // Factors of the whole argument, for reconstructing cited evidence.
    std::vector<Word> argued;
    for (const json& arg : j.at("argument"))
        argued.push_back(Word::parse(arg.at("factor").get<std::string>(), k));
    std::sort(argued.begin(), argued.end());

    std::vector<FactorArgument> argument;
    for (const json& arg : j.at("argument")) {
        FactorArgument fa;
        fa.factor = Word::parse(arg.at("factor").get<std::string>(), k);
        for (const json& w : arg.at("witnesses")) {
            AnnotatedWitness aw;
            aw.witness.source =
                Word::parse(w.at("source").get<std::string>(), k);
            aw.witness.offset = w.at("offset").get<std::size_t>();
            aw.defect = defect_from_string(w.at("defect").get<std::string>());
            aw.evidence = Word(k);
            switch (aw.defect) {
            case WitnessDefect::ContainsSquare:
                if (auto sq = find_square(aw.witness.source))
                    aw.evidence = sq->factor;
                break;
            case WitnessDefect::ContainsAvoidedFactor:
                for (const Word& g : argued) {
                    if (g.size() <= aw.witness.source.size() &&
                        contains(aw.witness.source, g)) {
                        aw.evidence = g;
                        break;
                    }
                }
                break;
            case WitnessDefect::NoPreimage:
                break;
            }
            fa.witnesses.push_back(std::move(aw));
        }
        argument.push_back(std::move(fa));
    }
    return AvoidanceCertificate{
        std::move(h), std::move(seed), FactorSet(std::move(avoided), k),
        std::move(argument),
        j.at("checked_prefix_length").get<std::size_t>()};
}

inline json to_json(const WitnessSpec& spec)
{
    return json{{"morphism", spec.morphism.str()},
                {"seed", spec.seed.str()},
                {"permutation", spec.permutation.str()},
                {"checked_prefix", spec.checked_prefix}};
}

inline json to_json(const Verdict& verdict)
{
    json j{{"word", verdict.word.str()},
           {"kind", std::string(to_string(verdict.kind))}};
    if (verdict.witness)
        j["witness"] = to_json(*verdict.witness);
    switch (verdict.kind) {
    case Avoidability::Unavoidable:
        j["stats"] = to_json(std::get<EnumerationStats>(verdict.evidence));
        break;
    case Avoidability::Avoidable:
        j["certificate"] =
            to_json(std::get<AvoidanceCertificate>(verdict.evidence));
        break;
    case Avoidability::TriviallyAvoidable:
        j["square"] = to_json(std::get<Occurrence>(verdict.evidence));
        break;
    }
    return j;
}

inline Verdict verdict_from_json(const json& j)
{
    Verdict verdict;
    verdict.word = Word::parse(j.at("word").get<std::string>(), 3);
    const std::string kind = j.at("kind").get<std::string>();
    if (j.contains("witness")) {
        const json& w = j.at("witness");
        verdict.witness = WitnessSpec{
            Morphism::parse(w.at("morphism").get<std::string>()),
            Word::parse(w.at("seed").get<std::string>(), 3),
            Permutation::parse(w.at("permutation").get<std::string>()),
            w.at("checked_prefix").get<std::size_t>()};
    }
    if (kind == "unavoidable") {
        verdict.kind = Avoidability::Unavoidable;
        verdict.evidence = stats_from_json(j.at("stats"));
    } else if (kind == "avoidable") {
        verdict.kind = Avoidability::Avoidable;
        verdict.evidence = certificate_from_json(j.at("certificate"));
    } else if (kind == "trivially-avoidable") {
        verdict.kind = Avoidability::TriviallyAvoidable;
        verdict.evidence = occurrence_from_json(j.at("square"));
    } else {
        throw std::invalid_argument("unknown verdict kind \"" + kind + "\"");
    }
    return verdict;
}

} // namespace avoidance
