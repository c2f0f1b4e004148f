#include <doctest.h>

#include <filesystem>

#include "urd/catalog.hpp"
#include "urd/format.hpp"
#include "urd/verifier.hpp"

using namespace urd;

TEST_CASE("catalog certificates re-serialize byte-identically") {
    for (const auto& e : catalog()) {
        const std::string text = write_certificate(e.certificate);
        const Certificate back = read_certificate(text);
        CHECK(write_certificate(back) == text);
        CHECK(content_hash(back) == content_hash(e.certificate));
        CHECK(verify(back).passed);
    }
}

TEST_CASE("fixed key order and compact form") {
    const std::string text = write_certificate(lookup("URD(4;0,4)"));
    CHECK(text.rfind("{\"version\":1,\"target\":{\"variant\":\"complete\",\"v\":4,\"lambda\":2}", 0) == 0);
    CHECK(text.find('\n') == std::string::npos);
    CHECK(text.substr(0, text.find("\"provenance\"")).find(' ') == std::string::npos);
    const auto order = {"\"version\"", "\"target\"", "\"classes\"", "\"claimed\"", "\"provenance\""};
    std::size_t last = 0;
    for (const char* key : order) {
        const auto at = text.find(key);
        REQUIRE(at != std::string::npos);
        CHECK(at >= last);
        last = at;
    }
}

TEST_CASE("canonical form sorts only where order is free") {
    Certificate c = make_certificate(TargetGraph::complete(8, 2),
                                     {{BlockKind::Star3, {Block::star(4, 7, 5, 6), Block::star(0, 3, 2, 1)}, std::nullopt},
                                      {BlockKind::Cycle4, {Block::cycle(3, 2, 1, 0), Block::cycle(7, 4, 5, 6)}, std::nullopt}});
    const Certificate k = canonicalize(c);
    CHECK(k.classes[0].kind == BlockKind::Star3);  // class order kept
    CHECK(k.classes[0].blocks[0] == Block::star(0, 1, 2, 3));
    CHECK(k.classes[1].blocks[0] == Block::cycle(0, 1, 2, 3));
    CHECK(canonicalize(k).classes[1].blocks == k.classes[1].blocks);
}

TEST_CASE("partial classes and hole targets round-trip") {
    const auto& c = lookup(iurd20_designator({4, 4}, {9, 4}));
    const auto back = read_certificate(write_certificate(c));
    CHECK(back.target == c.target);
    CHECK(back.claimed == c.claimed);
    CHECK(back.provenance == c.provenance);
    REQUIRE(back.classes.size() == c.classes.size());
    for (std::size_t i = 0; i < c.classes.size(); ++i) CHECK(back.classes[i].missing == c.classes[i].missing);
}

TEST_CASE("parse errors") {
    CHECK_THROWS_AS(read_certificate(""), ParseError);
    CHECK_THROWS_AS(read_certificate("{"), ParseError);
    CHECK_THROWS_AS(read_certificate("[]"), ParseError);
    const std::string good = write_certificate(lookup("URD(4;3,0)"));
    auto broken = good;
    broken.replace(broken.find("\"C4\""), 4, "\"C5\"");
    CHECK_THROWS_AS(read_certificate(broken), ParseError);
    broken = good;
    broken.replace(broken.find("\"version\":1"), 11, "\"version\":9");
    CHECK_THROWS_AS(read_certificate(broken), ParseError);
    broken = good;
    broken.replace(broken.find("\"lambda\":2"), 10, "\"lambda\":-2");
    CHECK_THROWS_AS(read_certificate(broken), ParseError);
    CHECK_THROWS_AS(load_certificate("/nonexistent/urd.json"), ParseError);
}

TEST_CASE("file save and load") {
    const auto dir = std::filesystem::temp_directory_path() / "urd-format-test";
    std::filesystem::remove_all(dir);
    const auto path = dir / "x.json";
    save_certificate(lookup("URD(8;1,8)"), path);
    CHECK(write_certificate(load_certificate(path)) == write_certificate(lookup("URD(8;1,8)")));
    std::filesystem::remove_all(dir);
}
