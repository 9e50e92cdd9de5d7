#pragma once

// Command dispatch and the JSON document shared by every command. All keys
// are always present, in a fixed order; sections a command does not compute
// are null. Indices (onFacet, indices, members, facet) are 0-based and refer
// to "generators" or "facets"; axes in partial terms are 1-based.

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "monores/current.hpp"
#include "monores/general.hpp"
#include "monores/io/parse.hpp"
#include "monores/io/staircase.hpp"
#include "monores/newton.hpp"
#include "monores/residue.hpp"

namespace monores::io {

using Json = nlohmann::ordered_json;

enum class Format { json, ascii, svg };

struct CommandOptions {
    bool stripRedundant = false;
    bool oracle = false;
    Format format = Format::json;
    Int power = 1;  // closure
};

namespace exit_code {
inline constexpr int ok = 0;
inline constexpr int oracleMismatch = 1;
inline constexpr int parse = 2;
inline constexpr int precondition = 3;
}  // namespace exit_code

struct CommandResult {
    Json document;
    std::string picture;  // ascii or svg text for render
    int exitCode = exit_code::ok;
};

namespace detail {

inline Json exponentJson(const Exponent& e) { return Json(e.vec()); }

inline Json pointsJson(std::span<const Exponent> pts) {
    Json a = Json::array();
    for (const auto& p : pts) a.push_back(exponentJson(p));
    return a;
}

inline Json idealJson(const MonomialIdeal& I) { return pointsJson(I.generators()); }

inline Json facetsJson(const NewtonPolyhedron& P) {
    Json a = Json::array();
    for (const auto& f : P.facets)
        a.push_back({{"normal", f.normal}, {"offset", f.offset}, {"compact", f.compact}, {"onFacet", f.onFacet}});
    return a;
}

inline Json essentialJson(const std::vector<EssentialSet>& E) {
    Json a = Json::array();
    for (const auto& e : E)
        a.push_back({{"indices", e.indices}, {"alpha", exponentJson(e.alpha)}, {"det", e.determinant}, {"facet", e.facetIndex}});
    return a;
}

inline Json chainJson(const ChainReport& c) {
    Json j{{"closurePowerMu", idealJson(c.closurePowerMu)},
           {"annihilator", idealJson(c.annihilator)},
           {"ideal", idealJson(c.ideal)},
           {"leftStrict", c.leftStrict},
           {"rightStrict", c.rightStrict},
           {"mu", c.mu},
           {"witness", nullptr}};
    if (c.witness) j["witness"] = exponentJson(*c.witness);
    return j;
}

inline Json partialJson(const PartialAnnihilatorReport& r) {
    Json terms = Json::array();
    for (const auto& t : r.terms) {
        std::vector<std::size_t> axes;
        for (std::size_t a : t.axes) axes.push_back(a + 1);
        terms.push_back({{"axes", axes},
                         {"members", t.members},
                         {"status", toString(t.status)},
                         {"alpha", exponentJson(t.alphaRestricted)},
                         {"annihilator", t.annContribution ? idealJson(*t.annContribution) : Json(nullptr)}});
    }
    return {{"terms", terms},
            {"partialAnnihilator", idealJson(r.partialAnnihilator)},
            {"complete", r.complete},
            {"unknownCount", r.unknownCount},
            {"codim", r.codim},
            {"mu", r.mu}};
}

// Every generator of `ann` must pass the oracle and every g - eᵢ outside
// `ann` must fail it; that pins down a monomial ideal completely.
inline Json oracleCheck(std::span<const Exponent> A, const MonomialIdeal& ann) {
    std::size_t checked = 0, mismatches = 0;
    auto probe = [&](const Exponent& h) {
        ++checked;
        if (annihilatorMembershipOracle(A, Polynomial::monomial(h)) != contains(ann, h)) ++mismatches;
    };
    for (const auto& g : ann.generators()) {
        probe(g);
        for (std::size_t i = 0; i < g.dimension(); ++i) {
            if (g[i] == 0) continue;
            auto v = g.vec();
            --v[i];
            probe(Exponent(v));
        }
    }
    return {{"checked", checked}, {"mismatches", mismatches}};
}

}  // namespace detail

inline const std::vector<std::string>& commandNames() {
    static const std::vector<std::string> names{"facets", "essential", "annihilator", "closure", "chain", "partial", "render"};
    return names;
}

/// Throws PreconditionError and InvalidInput from the library unchanged.
inline CommandResult runCommand(const std::string& command, const CommandOptions& opts, const IdealSource& src) {
    using namespace detail;
    const auto& A = src.exponents;
    const std::size_t n = validateGenerators(A);

    CommandResult res;
    Json& doc = res.document;
    doc["dimension"] = n;
    doc["generators"] = pointsJson(A);
    doc["facets"] = nullptr;
    doc["essentialSets"] = nullptr;
    doc["annihilator"] = nullptr;
    doc["chain"] = nullptr;
    doc["partial"] = nullptr;
    Json warnings = Json(src.warnings);

    auto oracle = [&](const MonomialIdeal& ann) {
        if (!opts.oracle) return;
        Json o = oracleCheck(A, ann);
        if (o["mismatches"].get<std::size_t>() != 0) res.exitCode = exit_code::oracleMismatch;
        doc["oracle"] = o;
    };

    if (command == "facets") {
        doc["facets"] = facetsJson(computeNewtonPolyhedron(A));
    } else if (command == "essential" || command == "annihilator") {
        const auto P = computeNewtonPolyhedron(A);
        requireArtinian(A, command.c_str());
        doc["facets"] = facetsJson(P);
        const auto rep = annihilator(A);
        doc["essentialSets"] = essentialJson(rep.essentialSets);
        if (command == "annihilator") {
            doc["annihilator"] = idealJson(rep.annihilator);
            oracle(rep.annihilator);
        }
    } else if (command == "closure") {
        if (opts.power < 1) throw InvalidInput("closure power must be at least 1");
        const auto P = computeNewtonPolyhedron(A);
        doc["facets"] = facetsJson(P);
        doc["closure"] = {{"power", opts.power}, {"generators", idealJson(integralClosureOfPower(P, opts.power))}};
    } else if (command == "chain") {
        const auto c = verifyChain(A);
        const auto rep = annihilator(A);
        doc["facets"] = facetsJson(computeNewtonPolyhedron(A));
        doc["essentialSets"] = essentialJson(rep.essentialSets);
        doc["annihilator"] = idealJson(rep.annihilator);
        doc["chain"] = chainJson(c);
        oracle(rep.annihilator);
    } else if (command == "partial") {
        const auto r = partialAnnihilator(A, {.stripRedundant = opts.stripRedundant});
        for (const auto& w : r.warnings) warnings.push_back(w);
        doc["partial"] = partialJson(r);
        if (opts.oracle) {
            if (varietyIsOrigin(A))
                oracle(r.partialAnnihilator);
            else
                warnings.push_back("oracle check skipped: the zero set is not the origin");
        }
    } else if (command == "render") {
        if (n != 2) throw PreconditionError("render needs two variables, got " + std::to_string(n));
        const MonomialIdeal I = minimalize(n, A);
        const Int mu = static_cast<Int>(std::min<std::size_t>(A.size(), n));
        std::vector<LabeledIdeal> layers{{"(z^A)", I}};
        if (varietyIsOrigin(A)) {
            const auto ann = annihilator(A).annihilator;
            doc["annihilator"] = idealJson(ann);
            layers.push_back({"Ann", ann});
            oracle(ann);
        } else {
            const auto r = partialAnnihilator(A, {.stripRedundant = opts.stripRedundant});
            for (const auto& w : r.warnings) warnings.push_back(w);
            doc["partial"] = partialJson(r);
            layers.push_back({"partial Ann", r.partialAnnihilator});
        }
        layers.push_back({"closure of power " + std::to_string(mu), integralClosureOfPower(A, mu)});
        const auto pic = renderStaircase(layers);
        Json ls = Json::array();
        for (const auto& l : pic.layers) ls.push_back({{"label", l.label}, {"generators", pointsJson(l.generators)}});
        doc["layers"] = ls;
        if (opts.format == Format::ascii) res.picture = toAscii(pic);
        if (opts.format == Format::svg) res.picture = toSvg(pic);
    } else {
        throw InvalidInput("unknown command '" + command + "'");
    }
    doc["warnings"] = warnings;
    return res;
}

}  // namespace monores::io
