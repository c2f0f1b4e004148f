#include "urd/ingredients.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <set>
#include <sstream>
#include <stdexcept>

#include "urd/format.hpp"
#include "urd/verifier.hpp"

namespace urd {

namespace {

std::string pair_text(const ClassPair& p) { return std::to_string(p.r) + "," + std::to_string(p.s); }

std::uint32_t parse_u32(std::string_view s, std::string_view whole) {
    std::uint32_t x = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), x);
    if (ec != std::errc() || ptr != s.data() + s.size() || s.empty())
        throw std::invalid_argument("bad ingredient key '" + std::string(whole) + "'");
    return x;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
    std::vector<std::string_view> out;
    std::size_t start = 0;
    for (;;) {
        const auto pos = s.find(sep, start);
        out.push_back(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
        if (pos == std::string_view::npos) return out;
        start = pos + 1;
    }
}

// Block built from four points with the kind's vertex order.
Block make_block(BlockKind k, std::array<Point, 4> v) {
    Block b;
    b.kind = k;
    b.v = v;
    return b;
}

// Classes of a base class list developed by p -> p + step (mod n), `times` images each.
std::vector<BlockClass> develop_by_shift(const std::vector<std::vector<std::array<Point, 4>>>& base, Point n,
                                         Point step, std::uint32_t times) {
    std::vector<BlockClass> out;
    for (const auto& cls : base)
        for (std::uint32_t j = 0; j < times; ++j) {
            BlockClass c;
            c.kind = BlockKind::Star3;
            for (const auto& b : cls) {
                std::array<Point, 4> v{};
                for (std::size_t i = 0; i < 4; ++i) v[i] = (b[i] + step * j) % n;
                c.blocks.push_back(make_block(BlockKind::Star3, v));
            }
            out.push_back(std::move(c));
        }
    return out;
}

}  // namespace

IngredientKey IngredientKey::rgdd4(std::uint32_t g, std::uint32_t u, std::uint32_t lambda) {
    return {Family::RGDD4, g, u, lambda, std::nullopt};
}
IngredientKey IngredientKey::urgdd(std::uint32_t g, std::uint32_t u, std::uint32_t lambda, ClassPair profile) {
    return {Family::URGDD_C4K13, g, u, lambda, profile};
}
IngredientKey IngredientKey::frame2(std::uint32_t n) { return {Family::Frame2, 1, n, 1, std::nullopt}; }
IngredientKey IngredientKey::near_one(std::uint32_t n) {
    return {Family::NearOneFactorization, 1, n, 1, std::nullopt};
}

std::string IngredientKey::signature() const {
    const std::string type = std::to_string(g) + "^" + std::to_string(u);
    const std::string lam = "-l" + std::to_string(lambda);
    switch (family) {
        case Family::RGDD4: return "rgdd4-" + type + lam;
        case Family::URGDD_C4K13: return "urgdd-" + type + lam + "-" + (profile ? pair_text(*profile) : "?");
        case Family::Frame2: return "frame2-" + type + lam;
        case Family::NearOneFactorization: return "nof-" + std::to_string(u);
    }
    return "?";
}

IngredientKey IngredientKey::parse(std::string_view text) {
    const auto parts = split(text, '-');
    auto type = [&](std::string_view t, IngredientKey& k) {
        const auto gu = split(t, '^');
        if (gu.size() != 2) throw std::invalid_argument("bad ingredient key '" + std::string(text) + "'");
        k.g = parse_u32(gu[0], text);
        k.u = parse_u32(gu[1], text);
    };
    auto lam = [&](std::string_view t) {
        if (t.size() < 2 || t[0] != 'l') throw std::invalid_argument("bad ingredient key '" + std::string(text) + "'");
        return parse_u32(t.substr(1), text);
    };
    IngredientKey k;
    if (parts.size() == 3 && parts[0] == "rgdd4") {
        k.family = Family::RGDD4;
        type(parts[1], k);
        k.lambda = lam(parts[2]);
    } else if (parts.size() == 4 && parts[0] == "urgdd") {
        k.family = Family::URGDD_C4K13;
        type(parts[1], k);
        k.lambda = lam(parts[2]);
        const auto rs = split(parts[3], ',');
        if (rs.size() != 2) throw std::invalid_argument("bad ingredient key '" + std::string(text) + "'");
        k.profile = ClassPair{parse_u32(rs[0], text), parse_u32(rs[1], text)};
    } else if (parts.size() == 3 && parts[0] == "frame2") {
        k.family = Family::Frame2;
        type(parts[1], k);
        k.lambda = lam(parts[2]);
    } else if (parts.size() == 2 && parts[0] == "nof") {
        k = near_one(parse_u32(parts[1], text));
    } else {
        throw std::invalid_argument("bad ingredient key '" + std::string(text) + "'");
    }
    if (k.signature() != text) throw std::invalid_argument("non-canonical ingredient key '" + std::string(text) + "'");
    return k;
}

std::optional<std::string> IngredientKey::malformation() const {
    if (lambda < 1 || lambda > 2) return "index must be 1 or 2";
    if (g == 0 || u == 0) return "empty type";
    switch (family) {
        case Family::RGDD4:
            if ((g * u) % 4 != 0) return "g*u must be divisible by 4";
            if ((lambda * g * (u - 1)) % 3 != 0) return "lambda*g(u-1)/3 must be an integer";
            return std::nullopt;
        case Family::URGDD_C4K13: {
            if (!profile) return "a URGDD key needs a profile";
            if (u < 2) return "a URGDD needs at least two groups";
            if ((g * u) % 4 != 0) return "g*u must be divisible by 4";
            // edges: lambda*g^2*u(u-1)/2 = r*gu + s*3gu/4
            const std::uint64_t edges = std::uint64_t(lambda) * g * g * u * (u - 1) / 2;
            const std::uint64_t used = std::uint64_t(profile->r) * g * u + std::uint64_t(profile->s) * 3 * g * u / 4;
            if (edges != used) return "profile does not match the edge count";
            return std::nullopt;
        }
        case Family::Frame2:
        case Family::NearOneFactorization:
            if (g != 1 || lambda != 1) return "only type 1^n with index 1 is supported";
            if (u < 3 || u % 2 == 0) return "n must be odd and at least 3";
            return std::nullopt;
    }
    return "unknown family";
}

TargetGraph IngredientKey::target() const {
    if (auto why = malformation()) throw std::invalid_argument(signature() + ": " + *why);
    return search::residue_groups(g, u, lambda);
}

std::size_t IngredientKey::expected_classes() const {
    switch (family) {
        case Family::RGDD4: return lambda * g * (u - 1) / 3;
        case Family::URGDD_C4K13: return profile ? profile->r + profile->s : 0;
        case Family::Frame2:
        case Family::NearOneFactorization: return u;
    }
    return 0;
}

NotAvailable::NotAvailable(IngredientKey key, const std::string& why)
    : Error("ingredient " + key.signature() + " not available: " + why), key_(std::move(key)) {}

std::vector<BlockClass> near_one_factorization(std::uint32_t n) {
    if (n < 3 || n % 2 == 0) throw std::invalid_argument("near_one_factorization: n must be odd and at least 3");
    std::vector<BlockClass> out;
    for (Point i = 0; i < n; ++i) {
        BlockClass c;
        c.kind = BlockKind::Edge2;
        c.missing = std::vector<Point>{i};
        for (Point k = 1; k <= (n - 1) / 2; ++k) c.blocks.push_back(Block::edge((i + n - k) % n, (i + k) % n));
        out.push_back(std::move(c));
    }
    return out;
}

Certificate c4_factorization_bipartite(std::uint32_t n, std::uint32_t lambda) {
    if (n == 0 || n % 2 != 0) throw std::invalid_argument("c4_factorization_bipartite: n must be even");
    if (lambda < 1 || lambda > 2) throw std::invalid_argument("c4_factorization_bipartite: lambda must be 1 or 2");
    const auto A = [](Point x) { return 2 * x; };
    const auto B = [n](Point y) { return 2 * (y % n) + 1; };
    const Point h = n / 2;
    std::vector<BlockClass> classes;
    // One-factors x -> x+a and x -> x+a+n/2 together form n/2 four-cycles.
    for (Point a = 0; a < h; ++a) {
        BlockClass c;
        c.kind = BlockKind::Cycle4;
        for (Point x = 0; x < h; ++x) c.blocks.push_back(Block::cycle(A(x), B(x + a), A(x + h), B(x + a + h)));
        classes.push_back(std::move(c));
    }
    const auto once = classes;
    if (lambda == 2) classes.insert(classes.end(), once.begin(), once.end());
    return make_certificate(search::residue_groups(n, 2, lambda), std::move(classes),
                            {"C4-factorization of K_{n,n} pairing the one-factors x->x+a and x->x+a+n/2, n=" +
                             std::to_string(n) + (lambda == 2 ? ", classes listed twice" : "")});
}

Certificate star_factorization_12x2() {
    // Two base classes, developed by p -> p+6 (mod 24).
    static const std::vector<std::vector<std::array<Point, 4>>> base{
        {{0, 1, 3, 5}, {2, 7, 9, 11}, {4, 13, 15, 19}, {17, 6, 14, 18}, {23, 8, 10, 16}, {21, 12, 20, 22}},
        {{0, 7, 13, 17}, {1, 6, 8, 14}, {2, 15, 21, 23}, {10, 3, 5, 11}, {9, 4, 12, 18}, {19, 16, 20, 22}},
    };
    return make_certificate(search::residue_groups(12, 2, 1), develop_by_shift(base, 24, 6, 4),
                            {"K13-factorization of K_{12,12}: 2 base classes developed by p->p+6 (mod 24)",
                             "base classes found by exact-cover search under that shift"});
}

Certificate star_factorization_12x3() {
    // Four base classes, developed by p -> p+9 (mod 36).
    static const std::vector<std::vector<std::array<Point, 4>>> base{
        {{0, 1, 2, 4}, {3, 5, 7, 8}, {6, 10, 11, 13}, {9, 14, 16, 17}, {12, 19, 20, 22}, {15, 23, 25, 28},
         {18, 29, 31, 32}, {34, 21, 33, 35}, {26, 24, 27, 30}},
        {{0, 10, 16, 17}, {1, 2, 3, 5}, {4, 6, 8, 9}, {7, 11, 12, 15}, {13, 20, 21, 23}, {14, 18, 19, 24},
         {33, 22, 26, 28}, {25, 27, 32, 35}, {29, 30, 31, 34}},
        {{19, 0, 2, 3}, {1, 8, 9, 11}, {4, 5, 17, 18}, {6, 20, 22, 23}, {21, 7, 10, 32}, {26, 12, 28, 31},
         {35, 13, 15, 24}, {14, 25, 30, 34}, {16, 27, 29, 33}},
        {{20, 0, 4, 27}, {29, 1, 7, 33}, {2, 12, 15, 21}, {22, 3, 11, 14}, {5, 6, 19, 28}, {8, 16, 18, 25},
         {32, 9, 13, 34}, {10, 24, 26, 35}, {30, 17, 23, 31}},
    };
    return make_certificate(search::residue_groups(12, 3, 1), develop_by_shift(base, 36, 9, 4),
                            {"K13-factorization of K_{12,12,12}: 4 base classes developed by p->p+9 (mod 36)",
                             "base classes found by exact-cover search under that shift"});
}

namespace {

// Points of PG(3,3) as normalized vectors (first nonzero coordinate 1), in
// lexicographic order; lines as sorted point quadruples, in lexicographic order.
std::vector<std::array<Point, 4>> pg33_lines() {
    std::vector<std::array<int, 4>> pts;
    for (int c = 0; c < 81; ++c) {
        std::array<int, 4> x{c / 27, c / 9 % 3, c / 3 % 3, c % 3};
        const auto lead = std::find_if(x.begin(), x.end(), [](int t) { return t != 0; });
        if (lead != x.end() && *lead == 1) pts.push_back(x);
    }
    const auto index_of = [&](std::array<int, 4> x) {
        const auto lead = std::find_if(x.begin(), x.end(), [](int t) { return t != 0; });
        if (*lead == 2)
            for (int& t : x) t = (2 * t) % 3;
        return static_cast<Point>(std::lower_bound(pts.begin(), pts.end(), x) - pts.begin());
    };
    std::set<std::array<Point, 4>> lines;
    for (std::size_t i = 0; i < pts.size(); ++i)
        for (std::size_t j = i + 1; j < pts.size(); ++j) {
            std::array<Point, 4> l{};
            std::size_t k = 0;
            for (int b : {1, 2}) {
                l[k++] = index_of({(pts[i][0] + b * pts[j][0]) % 3, (pts[i][1] + b * pts[j][1]) % 3,
                                   (pts[i][2] + b * pts[j][2]) % 3, (pts[i][3] + b * pts[j][3]) % 3});
            }
            l[2] = static_cast<Point>(i);
            l[3] = static_cast<Point>(j);
            std::sort(l.begin(), l.end());
            lines.insert(l);
        }
    return {lines.begin(), lines.end()};
}

// Spreads are filled one after another; inside a spread the lowest uncovered
// point branches over its unused lines.
class PackingSearch {
public:
    explicit PackingSearch(std::vector<std::array<Point, 4>> lines) : lines_(std::move(lines)), used_(lines_.size()) {
        for (std::size_t k = 0; k < lines_.size(); ++k)
            for (Point p : lines_[k]) on_[p].push_back(k);
    }
    bool run() { return next_spread(); }
    const std::vector<std::vector<std::size_t>>& spreads() const { return spreads_; }
    const std::array<Point, 4>& line(std::size_t k) const { return lines_[k]; }

private:
    bool next_spread() {
        if (spreads_.size() == 13) return true;
        spreads_.emplace_back();
        covered_.fill(false);
        if (fill()) return true;
        spreads_.pop_back();
        return false;
    }
    bool fill() {
        const auto it = std::find(covered_.begin(), covered_.end(), false);
        if (it == covered_.end()) {
            const auto saved = covered_;
            if (next_spread()) return true;
            covered_ = saved;
            return false;
        }
        for (std::size_t k : on_[it - covered_.begin()]) {
            if (used_[k] || std::any_of(lines_[k].begin(), lines_[k].end(), [&](Point q) { return covered_[q]; }))
                continue;
            used_[k] = true;
            for (Point q : lines_[k]) covered_[q] = true;
            spreads_.back().push_back(k);
            if (fill()) return true;
            spreads_.back().pop_back();
            for (Point q : lines_[k]) covered_[q] = false;
            used_[k] = false;
        }
        return false;
    }

    std::vector<std::array<Point, 4>> lines_;
    std::array<std::vector<std::size_t>, 40> on_;
    std::vector<bool> used_;
    std::array<bool, 40> covered_{};
    std::vector<std::vector<std::size_t>> spreads_;
};

}  // namespace

Certificate rgdd4_4x10_from_pg33() {
    static const Certificate built = [] {
        PackingSearch ps(pg33_lines());
        if (!ps.run()) throw Error("no packing of PG(3,3) found");
        // Spread 0 becomes the groups: its j-th line is sent to {j, j+10, j+20, j+30}.
        std::array<Point, 40> to{};
        const auto& groups = ps.spreads()[0];
        for (std::size_t j = 0; j < groups.size(); ++j)
            for (std::size_t i = 0; i < 4; ++i) to[ps.line(groups[j])[i]] = static_cast<Point>(j + 10 * i);
        std::vector<BlockClass> classes;
        for (std::size_t c = 1; c < ps.spreads().size(); ++c) {
            BlockClass cls;
            cls.kind = BlockKind::Complete4;
            for (std::size_t k : ps.spreads()[c]) {
                const auto& l = ps.line(k);
                cls.blocks.push_back(Block::k4(to[l[0]], to[l[1]], to[l[2]], to[l[3]]));
            }
            classes.push_back(std::move(cls));
        }
        return make_certificate(search::residue_groups(4, 10, 1), std::move(classes),
                                {"packing of PG(3,3) into 13 spreads; the first spread taken as the groups"});
    }();
    return built;
}

Certificate weight_by_three(const Certificate& in) {
    const auto& t = in.target;
    if (t.variant != GraphVariant::Multipartite || t.groups.empty())
        throw std::invalid_argument("weight_by_three: needs a multipartite design");
    const auto u = static_cast<std::uint32_t>(t.groups.size());
    const std::uint32_t g = t.groups[0].size();
    if (!(t == search::residue_groups(g, u, t.lambda)))
        throw std::invalid_argument("weight_by_three: groups must be residue classes");
    const Point n = t.v;
    const auto copy = [n](Point p, std::uint32_t k) { return p + n * (k % 3); };
    std::vector<BlockClass> out;
    for (const auto& cl : in.classes) {
        if (!cl.full()) throw std::invalid_argument("weight_by_three: partial classes are not supported");
        if (cl.kind != BlockKind::Cycle4 && cl.kind != BlockKind::Star3)
            throw std::invalid_argument("weight_by_three: only C4 and K13 classes");
        // Image j: cycle (p0_k, p1_{k+j}, p2_k, p3_{k+j}); star (c_k; l_{k+j}, ...).
        for (std::uint32_t j = 0; j < 3; ++j) {
            BlockClass c;
            c.kind = cl.kind;
            for (const auto& b : cl.blocks)
                for (std::uint32_t k = 0; k < 3; ++k) {
                    Block w = b;
                    for (std::size_t i = 0; i < 4; ++i) {
                        const bool shifted = cl.kind == BlockKind::Cycle4 ? i % 2 == 1 : i > 0;
                        w.v[i] = copy(b.v[i], shifted ? k + j : k);
                    }
                    c.blocks.push_back(w);
                }
            out.push_back(std::move(c));
        }
    }
    auto prov = in.provenance;
    prov.push_back("every point p inflated to p, p+" + std::to_string(n) + ", p+" + std::to_string(2 * n) +
                   "; each class split into 3");
    return make_certificate(search::residue_groups(3 * g, u, t.lambda), std::move(out), std::move(prov));
}

Certificate repeat_classes(const Certificate& c, std::uint32_t times) {
    if (times == 0) throw std::invalid_argument("repeat_classes: times must be positive");
    TargetGraph t = c.target;
    t.lambda *= times;
    std::vector<BlockClass> classes;
    for (std::uint32_t i = 0; i < times; ++i) classes.insert(classes.end(), c.classes.begin(), c.classes.end());
    auto prov = c.provenance;
    if (times > 1) prov.push_back("classes listed " + std::to_string(times) + " times");
    return make_certificate(std::move(t), std::move(classes), std::move(prov));
}

void check_against_key(const IngredientKey& key, const Certificate& c) {
    if (auto why = key.malformation()) throw Error(key.signature() + ": " + *why);
    if (!(c.target == key.target())) throw Error(key.signature() + ": certificate target does not match the key");
    const auto report = verify(c);
    if (!report.passed) throw Error(key.signature() + ": " + report.text());
    if (c.classes.size() != key.expected_classes())
        throw Error(key.signature() + ": expected " + std::to_string(key.expected_classes()) + " classes, found " +
                    std::to_string(c.classes.size()));
    for (const auto& cl : c.classes) {
        const bool ok = [&] {
            switch (key.family) {
                case Family::RGDD4: return cl.kind == BlockKind::Complete4 && cl.full();
                case Family::URGDD_C4K13:
                    return (cl.kind == BlockKind::Cycle4 || cl.kind == BlockKind::Star3) && cl.full();
                case Family::Frame2:
                case Family::NearOneFactorization: return cl.kind == BlockKind::Edge2 && !cl.full();
            }
            return false;
        }();
        if (!ok) throw Error(key.signature() + ": class of the wrong kind or coverage");
    }
    if (key.profile) {
        const ClassPair got{c.claimed.r, c.claimed.s};
        if (!(got == *key.profile)) throw Error(key.signature() + ": profile is " + got.str());
    }
}

IngredientStore::IngredientStore(std::filesystem::path dir) : dir_(std::move(dir)) {}

std::filesystem::path IngredientStore::default_dir() {
    if (const char* env = std::getenv("URD_STORE"); env && *env) return env;
    return "urd-store";
}

std::filesystem::path IngredientStore::path_for(const IngredientKey& key) const {
    return dir_ / (key.signature() + ".json");
}

std::optional<Certificate> IngredientStore::get(const IngredientKey& key) const {
    const auto p = path_for(key);
    if (!std::filesystem::exists(p)) return std::nullopt;
    return load_certificate(p);
}

void IngredientStore::put(const IngredientKey& key, const Certificate& c) {
    check_against_key(key, c);
    save_certificate(c, path_for(key));
}

std::vector<std::pair<IngredientKey, std::string>> IngredientStore::list() const {
    std::vector<std::pair<IngredientKey, std::string>> out;
    if (!std::filesystem::is_directory(dir_)) return out;
    for (const auto& entry : std::filesystem::directory_iterator(dir_)) {
        if (entry.path().extension() != ".json") continue;
        IngredientKey key;
        try {
            key = IngredientKey::parse(entry.path().stem().string());
        } catch (const std::invalid_argument&) {
            continue;
        }
        out.emplace_back(key, content_hash(load_certificate(entry.path())));
    }
    std::sort(out.begin(), out.end());
    return out;
}

Ingredients::Ingredients(IngredientStore* store, search::Options opt, bool allow_search)
    : store_(store), opt_(opt), allow_search_(allow_search) {}

std::optional<Certificate> Ingredients::generate(const IngredientKey& key) {
    switch (key.family) {
        case Family::Frame2:
        case Family::NearOneFactorization:
            return make_certificate(key.target(), near_one_factorization(key.u),
                                    {"near-one-factorization of K_" + std::to_string(key.u) +
                                     ": class i holds the pairs {i-k, i+k}"});
        case Family::RGDD4:
            if (key.g == 4 && key.u == 10) return repeat_classes(rgdd4_4x10_from_pg33(), key.lambda);
            return std::nullopt;
        case Family::URGDD_C4K13: break;
    }
    const ClassPair p = *key.profile;
    if (key.u == 2 && p.s == 0) return c4_factorization_bipartite(key.g, key.lambda);
    if (key.g == 12 && key.u == 2 && p.r == 0) return repeat_classes(star_factorization_12x2(), key.lambda);
    if (key.g == 12 && key.u == 2 && key.lambda == 2 && p == ClassPair{6, 8}) {
        Certificate c = c4_factorization_bipartite(12, 1);
        Certificate s = star_factorization_12x2();
        auto classes = c.classes;
        classes.insert(classes.end(), s.classes.begin(), s.classes.end());
        auto prov = c.provenance;
        prov.insert(prov.end(), s.provenance.begin(), s.provenance.end());
        return make_certificate(key.target(), std::move(classes), std::move(prov));
    }
    if (key.g == 12 && key.u == 3 && p.r == 0) return repeat_classes(star_factorization_12x3(), key.lambda);
    if (key.g % 3 == 0 && p.r % 3 == 0 && p.s % 3 == 0) {
        const auto small = IngredientKey::urgdd(key.g / 3, key.u, key.lambda, {p.r / 3, p.s / 3});
        if (small.malformation()) return std::nullopt;
        try {
            return weight_by_three(provide(small));
        } catch (const NotAvailable&) {
            return std::nullopt;
        }
    }
    return std::nullopt;
}

std::optional<Certificate> Ingredients::search_for(const IngredientKey& key) {
    if (!allow_search_) return std::nullopt;
    if (key.target().v > 64) return std::nullopt;
    if (key.family == Family::RGDD4) {
        auto r = search::find_resolvable_gdd(key.g, key.u, key.lambda, opt_);
        if (r.found()) return std::move(*r.value);
        return std::nullopt;
    }
    if (key.family == Family::URGDD_C4K13) {
        std::vector<BlockKind> kinds(key.profile->r, BlockKind::Cycle4);
        kinds.insert(kinds.end(), key.profile->s, BlockKind::Star3);
        auto r = search::find_uniform_factorization(key.target(), kinds, opt_);
        if (r.found()) return std::move(*r.value);
    }
    return std::nullopt;
}

Certificate Ingredients::provide(const IngredientKey& key) {
    if (auto why = key.malformation()) throw NotAvailable(key, *why);
    if (key.family == Family::RGDD4 && key.u < 4) throw NotAvailable(key, "a K4 block needs four groups");
    std::optional<Certificate> c = generate(key);
    if (!c && store_) c = store_->get(key);
    if (!c && !searched_in_vain_.contains(key.signature())) {
        c = search_for(key);
        if (c && store_) store_->put(key, *c);
        if (!c) searched_in_vain_.insert(key.signature());
    }
    if (!c)
        throw NotAvailable(key, allow_search_ ? "no generator, not in the store, and search found nothing within budget"
                                              : "no generator and not in the store (search disabled)");
    check_against_key(key, *c);
    return std::move(*c);
}

void Ingredients::import_file(const std::filesystem::path& path, const IngredientKey& key) {
    const Certificate c = load_certificate(path);
    check_against_key(key, c);
    if (!store_) throw Error("no ingredient store configured");
    store_->put(key, c);
}

}  // namespace urd
