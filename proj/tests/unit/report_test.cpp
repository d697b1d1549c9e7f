#include "doctest.h"

#include "lgkit/catalog.hpp"
#include "lgkit/error.hpp"
#include "lgkit/report.hpp"

#include <sstream>

using namespace lgkit;

TEST_CASE("analyze fermat cubic") {
    auto doc = analyze(parse_polynomial("x1^3+x2^3+x3^3"));
    CHECK(doc["milnor_number"] == 8);
    CHECK(doc["central_charge"] == "1");
    CHECK(doc["group"]["order"] == 27);
    CHECK(doc["state_space"]["total_dimension"] == 8);
    CHECK(doc["mirror"]["equal"] == true);
    CHECK(doc["mirror"]["weight_half_chain"] == false);
    CHECK(doc["weights"] == Json::array({"1/3", "1/3", "1/3"}));
    CHECK_FALSE(doc.contains("residue_pairing"));
}

TEST_CASE("analyze flags the half weight chain") {
    auto doc = analyze(parse_polynomial("x1^2*x2+x2^3"));
    CHECK(doc["mirror"]["weight_half_chain"] == true);
    CHECK(doc["transpose"] == "x1^2 + x1*x2^3");
    CHECK(doc["classification"]["ade_label"] == "D4");
}

TEST_CASE("analyze with pairing") {
    AnalyzeOptions opts;
    opts.pairing = true;
    auto doc = analyze(parse_polynomial("x^3"), opts);
    REQUIRE(doc.contains("residue_pairing"));
    CHECK(doc["residue_pairing"]["matrix"] == Json::parse(R"([["0","1/3"],["1/3","0"]])"));
}

TEST_CASE("exit codes") {
    CHECK(exit_code(ErrorKind::Parse) == 1);
    CHECK(exit_code(ErrorKind::NotInvertible) == 2);
    CHECK(exit_code(ErrorKind::BoundExceeded) == 3);
    CHECK(exit_code(ErrorKind::Consistency) == 4);
}

TEST_CASE("error documents") {
    try {
        parse_polynomial("x^2 +");
    } catch (const Error& e) {
        auto doc = error_document(e);
        CHECK(doc["error"]["kind"] == "parse_error");
        CHECK(doc["error"]["exit_code"] == 1);
    }
}

TEST_CASE("bound is enforced through analyze") {
    AnalyzeOptions opts;
    opts.max_group_order = 10;
    CHECK_THROWS_AS(analyze(parse_polynomial("x1^3+x2^3+x3^3"), opts), Error);
}

TEST_CASE("catalog parsing") {
    std::istringstream in("# comment\n\nA2\tx^3\t{\"mu\":2}\nfoo\tx^2\n");
    auto entries = parse_catalog(in);
    REQUIRE(entries.size() == 2);
    CHECK(entries[0].name == "A2");
    CHECK(entries[0].line == 3);
    REQUIRE(entries[0].expected.has_value());
    CHECK((*entries[0].expected)["mu"] == 2);
    CHECK_FALSE(entries[1].expected.has_value());

    std::istringstream broken("A2 x^3\n");
    CHECK_THROWS(parse_catalog(broken));
}

TEST_CASE("catalog filter") {
    CatalogEntry ade{"ADE-E7", "x^3+x*y^3", std::nullopt, 1};
    CatalogEntry other{"unimodular-E12", "x^3+y^7", std::nullopt, 2};
    CHECK(matches_filter(ade, "ADE"));
    CHECK_FALSE(matches_filter(other, "ADE"));
    CHECK(matches_filter(other, ""));
}

TEST_CASE("catalog runs are independent of job count") {
    std::istringstream in("a\tx^3\t{\"mu\":2}\nb\tx^2*y+y^3\t{\"mu\":4,\"state_dim\":5}\nc\tx^3+y^3+z^3\n");
    auto entries = parse_catalog(in);
    auto one = run_catalog(entries, 1, kDefaultElementBound);
    auto four = run_catalog(entries, 4, kDefaultElementBound);
    CHECK(one.document.dump() == four.document.dump());
    CHECK(one.document["summary"]["passed"] == 3);
}

TEST_CASE("catalog mismatch names the entry") {
    std::istringstream in("good\tx^3\t{\"mu\":2}\nbroken\tx^2*y+y^3\t{\"mu\":5}\n");
    auto run = run_catalog(parse_catalog(in), 2, kDefaultElementBound);
    CHECK(run.document["summary"]["failed"] == 1);
    CHECK(run.document["summary"]["failing"] == Json::array({"broken"}));
}
