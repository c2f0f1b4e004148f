#include <doctest.h>

#include <filesystem>
#include <map>

#include "urd/format.hpp"
#include "urd/ingredients.hpp"
#include "urd/verifier.hpp"

using namespace urd;

namespace {

struct TempDir {
    std::filesystem::path path;
    explicit TempDir(const char* name) : path(std::filesystem::temp_directory_path() / name) {
        std::filesystem::remove_all(path);
    }
    ~TempDir() { std::filesystem::remove_all(path); }
};

// Pair multiplicities counted directly from block vertex lists.
std::map<std::pair<Point, Point>, int> pair_counts(const std::vector<BlockClass>& classes) {
    std::map<std::pair<Point, Point>, int> m;
    const auto add = [&](Point a, Point b) { ++m[{std::min(a, b), std::max(a, b)}]; };
    for (const auto& c : classes)
        for (const auto& b : c.blocks) {
            if (b.kind == BlockKind::Edge2) add(b.v[0], b.v[1]);
            if (b.kind == BlockKind::Cycle4)
                for (int i = 0; i < 4; ++i) add(b.v[i], b.v[(i + 1) % 4]);
            if (b.kind == BlockKind::Star3)
                for (int i = 1; i < 4; ++i) add(b.v[0], b.v[i]);
            if (b.kind == BlockKind::Complete4)
                for (int i = 0; i < 4; ++i)
                    for (int j = i + 1; j < 4; ++j) add(b.v[i], b.v[j]);
        }
    return m;
}

}  // namespace

TEST_CASE("near-one-factorizations for odd n up to 25") {
    const auto n3 = near_one_factorization(3);
    REQUIRE(n3.size() == 3);
    CHECK(n3[0].blocks == std::vector<Block>{Block::edge(2, 1)});
    CHECK(canonical_block(n3[0].blocks[0]) == Block::edge(1, 2));
    CHECK(*n3[1].missing == std::vector<Point>{1});

    for (std::uint32_t n = 3; n <= 25; n += 2) {
        const auto classes = near_one_factorization(n);
        REQUIRE(classes.size() == n);
        const auto m = pair_counts(classes);
        CHECK(m.size() == n * (n - 1) / 2);
        for (const auto& [e, k] : m) CHECK(k == 1);
        std::vector<int> degree(n, 0);
        for (Point i = 0; i < n; ++i) {
            REQUIRE(classes[i].missing);
            CHECK(*classes[i].missing == std::vector<Point>{i});
            for (const auto& b : classes[i].blocks) {
                CHECK(b.v[0] != i);
                CHECK(b.v[1] != i);
                ++degree[b.v[0]];
                ++degree[b.v[1]];
            }
        }
        for (int d : degree) CHECK(d == static_cast<int>(n - 1));
        const auto cert = make_certificate(IngredientKey::frame2(n).target(), classes);
        CHECK(verify(cert).passed);
    }
    CHECK_THROWS_AS(near_one_factorization(4), std::invalid_argument);
    CHECK_THROWS_AS(near_one_factorization(1), std::invalid_argument);
}

TEST_CASE("bipartite C4-factorizations") {
    for (std::uint32_t n : {4u, 8u, 12u, 16u})
        for (std::uint32_t lambda : {1u, 2u}) {
            const auto c = c4_factorization_bipartite(n, lambda);
            CHECK(verify(c).passed);
            CHECK(c.claimed.full() == ClassPair{lambda * n / 2, 0});
            const auto m = pair_counts(c.classes);
            CHECK(m.size() == n * n);
            for (const auto& [e, k] : m) {
                CHECK((e.first + e.second) % 2 == 1);  // never inside a group
                CHECK(k == static_cast<int>(lambda));
            }
        }
    CHECK_THROWS_AS(c4_factorization_bipartite(5, 1), std::invalid_argument);
}

TEST_CASE("star factorizations and weighting") {
    const auto s2 = star_factorization_12x2();
    CHECK(verify(s2).passed);
    CHECK(s2.claimed.full() == ClassPair{0, 8});
    const auto s3 = star_factorization_12x3();
    CHECK(verify(s3).passed);
    CHECK(s3.claimed.full() == ClassPair{0, 16});

    Ingredients ing(nullptr);
    const auto small = ing.provide(IngredientKey::urgdd(4, 3, 2, {8, 0}));
    const auto big = weight_by_three(small);
    CHECK(verify(big).passed);
    CHECK(big.claimed.full() == ClassPair{24, 0});
    CHECK(big.target == IngredientKey::urgdd(12, 3, 2, {24, 0}).target());

    const auto twice = repeat_classes(s2, 2);
    CHECK(twice.target.lambda == 2);
    CHECK(twice.classes.size() == 16);
    CHECK(verify(twice).passed);
}

TEST_CASE("key signatures") {
    const std::vector<IngredientKey> keys{IngredientKey::rgdd4(4, 7), IngredientKey::rgdd4(12, 4, 2),
                                          IngredientKey::urgdd(12, 2, 2, {6, 8}), IngredientKey::frame2(5),
                                          IngredientKey::near_one(5)};
    CHECK(keys[0].signature() == "rgdd4-4^7-l1");
    CHECK(keys[2].signature() == "urgdd-12^2-l2-6,8");
    CHECK(keys[3].signature() == "frame2-1^5-l1");
    CHECK(keys[4].signature() == "nof-5");
    for (const auto& k : keys) CHECK(IngredientKey::parse(k.signature()) == k);
    for (const char* bad : {"", "rgdd4", "rgdd4-4^7", "rgdd4-04^7-l1", "urgdd-12^2-l2", "nof-x", "rgdd5-4^7-l1"})
        CHECK_THROWS_AS(IngredientKey::parse(bad), std::invalid_argument);
    CHECK(IngredientKey::urgdd(12, 2, 2, {6, 7}).malformation());
    CHECK(IngredientKey::near_one(4).malformation());
}

TEST_CASE("every provided 4-RGDD has g(u-1)/3 classes") {
    Ingredients ing(nullptr);
    const std::uint32_t types[][2] = {{4, 4}, {4, 7}, {4, 10}, {8, 4}, {12, 4}};
    for (const auto& t : types) {
        const auto key = IngredientKey::rgdd4(t[0], t[1]);
        const auto c = ing.provide(key);
        INFO(key.signature());
        CHECK(c.classes.size() == t[0] * (t[1] - 1) / 3);
        CHECK(key.expected_classes() == t[0] * (t[1] - 1) / 3);
        CHECK(verify(c).passed);
        CHECK(c.target == key.target());
        for (const auto& cl : c.classes) CHECK(cl.blocks.size() == t[0] * t[1] / 4);
    }
}

TEST_CASE("provide failure modes") {
    Ingredients ing(nullptr);
    CHECK_THROWS_AS(ing.provide(IngredientKey::rgdd4(4, 3)), NotAvailable);
    Ingredients offline(nullptr, {}, false);
    CHECK_THROWS_AS(offline.provide(IngredientKey::rgdd4(4, 7)), NotAvailable);
    try {
        offline.provide(IngredientKey::rgdd4(4, 7));
    } catch (const NotAvailable& e) {
        CHECK(e.key() == IngredientKey::rgdd4(4, 7));
        CHECK(std::string(e.what()).find("rgdd4-4^7-l1") != std::string::npos);
    }
    // Generators need no search.
    CHECK(offline.provide(IngredientKey::urgdd(12, 2, 2, {12, 0})).classes.size() == 12);
    CHECK(offline.provide(IngredientKey::near_one(5)).classes.size() == 5);
}

TEST_CASE("store round trip, import and rejection") {
    TempDir dir("urd-store-test");
    IngredientStore store(dir.path);
    Ingredients ing(&store);
    const auto key = IngredientKey::rgdd4(4, 7);
    const auto c = ing.provide(key);
    REQUIRE(store.get(key));  // searched designs are stored
    CHECK(write_certificate(*store.get(key)) == write_certificate(c));
    const auto listed = store.list();
    REQUIRE(listed.size() == 1);
    CHECK(listed[0].first == key);
    CHECK(listed[0].second == content_hash(c));

    Ingredients offline(&store, {}, false);
    CHECK(write_certificate(offline.provide(key)) == write_certificate(c));

    const auto file = dir.path / "in.json";
    save_certificate(c, file);
    offline.import_file(file, key);
    offline.import_file(file, key);
    CHECK(store.list().size() == 1);

    auto twice = c;
    twice.classes[0].blocks[0] = twice.classes[1].blocks[0];
    save_certificate(twice, file);
    CHECK_THROWS_AS(offline.import_file(file, key), Error);
    save_certificate(c, file);
    CHECK_THROWS_AS(offline.import_file(file, IngredientKey::rgdd4(8, 4)), Error);
    std::filesystem::resize_file(file, 10);
    CHECK_THROWS_AS(offline.import_file(file, key), ParseError);
}
