#include <catch_amalgamated.hpp>

#include "monores/io/report.hpp"
#include "support.hpp"

using namespace monores;
using namespace monores::io;
using namespace monores::testing;

namespace {

IdealSource source(std::string_view text) { return parseAny(text); }

const std::vector<std::string> kStableKeys{"dimension", "generators", "facets",  "essentialSets",
                                           "annihilator", "chain",     "partial", "warnings"};

void checkKeys(const Json& doc) {
    std::vector<std::string> keys;
    for (const auto& [k, v] : doc.items()) keys.push_back(k);
    std::vector<std::string> stable;
    std::copy_if(keys.begin(), keys.end(), std::back_inserter(stable),
                 [](const std::string& k) { return std::find(kStableKeys.begin(), kStableKeys.end(), k) != kStableKeys.end(); });
    CHECK(stable == kStableKeys);
    CHECK(keys.back() == "warnings");
}

}  // namespace

TEST_CASE("annihilator report", "[report]") {
    const auto res = runCommand("annihilator", {}, source("z1^8, z1^6 z2, z1^2 z2^3, z1 z2^5, z2^6"));
    const Json& doc = res.document;
    CHECK(res.exitCode == 0);
    checkKeys(doc);
    CHECK(doc["dimension"] == 2);
    CHECK(doc["essentialSets"].size() == 4);
    CHECK(doc["annihilator"].size() == 5);
    CHECK(doc["annihilator"][0] == Json::array({0, 9}));
    CHECK(doc["essentialSets"][0]["indices"] == Json::array({0, 1}));
    CHECK(doc["essentialSets"][0]["alpha"] == Json::array({14, 1}));
    CHECK(doc["essentialSets"][0]["det"] == 8);
    const auto facet = doc["essentialSets"][3]["facet"].get<std::size_t>();
    CHECK(doc["facets"][facet]["normal"] == Json::array({3, 2}));
    CHECK(doc["chain"].is_null());
    CHECK(doc["partial"].is_null());
}

TEST_CASE("output is deterministic", "[report]") {
    const auto src = source("z1^8, z1^6 z2, z1^2 z2^3, z1 z2^5, z2^6");
    for (const auto& cmd : commandNames()) {
        const auto a = runCommand(cmd, {}, src).document.dump(2);
        const auto b = runCommand(cmd, {}, src).document.dump(2);
        CHECK(a == b);
    }
}

TEST_CASE("chain on one variable", "[report]") {
    const auto doc = runCommand("chain", {}, source("z1^3, z1^5")).document;
    checkKeys(doc);
    CHECK(doc["chain"]["ideal"] == Json::array({Json::array({3})}));
    CHECK(doc["chain"]["annihilator"] == doc["chain"]["ideal"]);
    CHECK(doc["chain"]["closurePowerMu"] == doc["chain"]["ideal"]);
    CHECK_FALSE(doc["chain"]["leftStrict"].get<bool>());
    CHECK_FALSE(doc["chain"]["rightStrict"].get<bool>());
    CHECK(doc["chain"]["witness"].is_null());
}

TEST_CASE("partial on the line example", "[report]") {
    const auto doc = runCommand("partial", {}, source("z1 z3, z2 z3")).document;
    checkKeys(doc);
    CHECK(doc["partial"]["unknownCount"] == 2);
    CHECK_FALSE(doc["partial"]["complete"].get<bool>());
    CHECK(doc["partial"]["partialAnnihilator"] == Json::array({Json::array({0, 1, 1}), Json::array({1, 0, 1})}));
    const auto& terms = doc["partial"]["terms"];
    const auto known = std::find_if(terms.begin(), terms.end(), [](const Json& t) { return t["status"] == "known"; });
    REQUIRE(known != terms.end());
    CHECK((*known)["axes"] == Json::array({3}));
    CHECK((*known)["annihilator"] == Json::array({Json::array({0, 0, 1})}));
}

TEST_CASE("redundant generators", "[report]") {
    const auto src = source("z1^6 z2, z1^3 z2^2, z1^2 z2^4, z1^8 z2");
    const auto kept = runCommand("partial", {}, src).document;
    CHECK(kept["partial"]["unknownCount"] == 1);
    CHECK(kept["warnings"].size() == 1);
    const auto stripped = runCommand("partial", {.stripRedundant = true}, src).document;
    CHECK(stripped["partial"]["unknownCount"] == 0);
    CHECK(stripped["partial"]["complete"].get<bool>());
}

TEST_CASE("closure and facets", "[report]") {
    const auto doc = runCommand("closure", {.power = 2}, source("z1, z2")).document;
    checkKeys(doc);
    CHECK(doc["closure"]["power"] == 2);
    CHECK(doc["closure"]["generators"].size() == 3);
    CHECK(runCommand("facets", {}, source("z1 z3, z2 z3")).document["facets"].size() == 4);
}

TEST_CASE("oracle cross-check", "[report]") {
    CommandOptions opts;
    opts.oracle = true;
    for (const char* text : {"z1^8, z1^6 z2, z1^2 z2^3, z1 z2^5, z2^6", "z1^3, z2^2 z3, z3^4, z2^5, z1 z2 z3"}) {
        const auto res = runCommand("annihilator", opts, source(text));
        CHECK(res.exitCode == exit_code::ok);
        CHECK(res.document["oracle"]["mismatches"] == 0);
        CHECK(res.document["oracle"]["checked"].get<std::size_t>() > 0);
    }
    const auto partial = runCommand("partial", opts, source("z1 z3, z2 z3")).document;
    CHECK(partial["warnings"].size() == 1);
}

TEST_CASE("preconditions propagate", "[report]") {
    const auto line = source("z1 z3, z2 z3");
    CHECK_THROWS_AS(runCommand("annihilator", {}, line), PreconditionError);
    CHECK_THROWS_AS(runCommand("essential", {}, line), PreconditionError);
    CHECK_THROWS_AS(runCommand("chain", {}, line), PreconditionError);
    CHECK_THROWS_AS(runCommand("render", {}, line), PreconditionError);
    CHECK_THROWS_AS(runCommand("bogus", {}, line), InvalidInput);
}

TEST_CASE("render", "[report]") {
    CommandOptions opts;
    opts.format = Format::ascii;
    const auto res = runCommand("render", opts, source("z1^8, z1^6 z2, z1^2 z2^3, z1 z2^5, z2^6"));
    CHECK(res.document["layers"].size() == 3);
    CHECK(res.picture.find("# closure of power 2") != std::string::npos);

    opts.format = Format::svg;
    CHECK(runCommand("render", opts, source("z1^6 z2, z1^3 z2^2, z1^2 z2^4")).picture.rfind("<svg", 0) == 0);
}
