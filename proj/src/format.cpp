#include "urd/format.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace urd {

using ojson = nlohmann::ordered_json;

namespace {

const char* variant_name(GraphVariant v) {
    switch (v) {
        case GraphVariant::Complete: return "complete";
        case GraphVariant::Multipartite: return "multipartite";
        case GraphVariant::CompleteMinusHole: return "complete_minus_hole";
    }
    return "?";
}

[[noreturn]] void bad(const std::string& what) { throw ParseError("certificate: " + what); }

const ojson& field(const ojson& obj, const char* key) {
    if (!obj.is_object()) bad(std::string("expected an object holding '") + key + "'");
    auto it = obj.find(key);
    if (it == obj.end()) bad(std::string("missing key '") + key + "'");
    return *it;
}

void only_keys(const ojson& obj, std::initializer_list<const char*> keys, const char* where) {
    for (auto it = obj.begin(); it != obj.end(); ++it)
        if (std::none_of(keys.begin(), keys.end(), [&](const char* k) { return it.key() == k; }))
            bad(std::string("unexpected key '") + it.key() + "' in " + where);
}

std::uint32_t as_u32(const ojson& j, const char* what) {
    if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<std::int64_t>() >= 0))
        bad(std::string(what) + " must be a non-negative integer");
    const auto x = j.get<std::uint64_t>();
    if (x > 0xFFFFFFFFull) bad(std::string(what) + " out of range");
    return static_cast<std::uint32_t>(x);
}

std::vector<Point> as_points(const ojson& j, const char* what) {
    if (!j.is_array()) bad(std::string(what) + " must be an array");
    std::vector<Point> out;
    out.reserve(j.size());
    for (const auto& x : j) out.push_back(as_u32(x, what));
    return out;
}

ojson points_json(std::vector<Point> pts) {
    std::sort(pts.begin(), pts.end());
    ojson a = ojson::array();
    for (Point p : pts) a.push_back(p);
    return a;
}

}  // namespace

Certificate canonicalize(Certificate c) {
    for (auto& g : c.target.groups) std::sort(g.begin(), g.end());
    std::sort(c.target.groups.begin(), c.target.groups.end());
    std::sort(c.target.hole.begin(), c.target.hole.end());
    for (auto& cl : c.classes) {
        for (auto& b : cl.blocks) b = canonical_block(b);
        std::sort(cl.blocks.begin(), cl.blocks.end());
        if (cl.missing) std::sort(cl.missing->begin(), cl.missing->end());
    }
    return c;
}

std::string write_certificate(const Certificate& input) {
    const Certificate c = canonicalize(input);
    ojson j;
    j["version"] = kFormatVersion;

    ojson t;
    t["variant"] = variant_name(c.target.variant);
    t["v"] = c.target.v;
    t["lambda"] = c.target.lambda;
    if (c.target.variant == GraphVariant::Multipartite) {
        ojson gs = ojson::array();
        for (const auto& g : c.target.groups) gs.push_back(points_json(g));
        t["groups"] = std::move(gs);
    }
    if (c.target.variant == GraphVariant::CompleteMinusHole) t["hole"] = points_json(c.target.hole);
    j["target"] = std::move(t);

    ojson classes = ojson::array();
    for (const auto& cl : c.classes) {
        ojson jc;
        jc["kind"] = kind_name(cl.kind);
        if (cl.full()) {
            jc["coverage"] = "full";
        } else {
            ojson m;
            m["missing"] = points_json(*cl.missing);
            jc["coverage"] = std::move(m);
        }
        ojson blocks = ojson::array();
        for (const auto& b : cl.blocks) {
            ojson jb = ojson::array();
            for (Point p : b) jb.push_back(p);
            blocks.push_back(std::move(jb));
        }
        jc["blocks"] = std::move(blocks);
        classes.push_back(std::move(jc));
    }
    j["classes"] = std::move(classes);

    ojson cl;
    cl["r"] = c.claimed.r;
    cl["s"] = c.claimed.s;
    cl["partial_r"] = c.claimed.partial_r;
    cl["partial_s"] = c.claimed.partial_s;
    j["claimed"] = std::move(cl);

    ojson prov = ojson::array();
    for (const auto& line : c.provenance) prov.push_back(line);
    j["provenance"] = std::move(prov);
    return j.dump();
}

Certificate read_certificate(std::string_view text) {
    ojson j;
    try {
        j = ojson::parse(text.begin(), text.end());
    } catch (const nlohmann::json::exception& e) {
        bad(std::string("invalid JSON: ") + e.what());
    }
    if (!j.is_object()) bad("top level must be an object");
    only_keys(j, {"version", "target", "classes", "claimed", "provenance"}, "certificate");
    if (as_u32(field(j, "version"), "version") != kFormatVersion) bad("unsupported version");

    Certificate c;
    const auto& t = field(j, "target");
    only_keys(t, {"variant", "v", "lambda", "groups", "hole"}, "target");
    const auto& var = field(t, "variant");
    if (!var.is_string()) bad("target.variant must be a string");
    const auto v = as_u32(field(t, "v"), "target.v");
    const auto lambda = as_u32(field(t, "lambda"), "target.lambda");
    const auto vname = var.get<std::string>();
    if (vname == "complete") {
        if (t.contains("groups") || t.contains("hole")) bad("complete target with groups or hole");
        c.target = TargetGraph::complete(v, lambda);
    } else if (vname == "multipartite") {
        if (t.contains("hole")) bad("multipartite target with hole");
        const auto& gs = field(t, "groups");
        if (!gs.is_array()) bad("target.groups must be an array");
        std::vector<std::vector<Point>> groups;
        for (const auto& g : gs) groups.push_back(as_points(g, "group point"));
        c.target = TargetGraph::multipartite(std::move(groups), lambda);
        if (c.target.v != v) bad("target.v disagrees with the groups");
    } else if (vname == "complete_minus_hole") {
        if (t.contains("groups")) bad("holed target with groups");
        c.target = TargetGraph::complete_minus_hole(v, as_points(field(t, "hole"), "hole point"), lambda);
    } else {
        bad("unknown target variant '" + vname + "'");
    }

    const auto& classes = field(j, "classes");
    if (!classes.is_array()) bad("classes must be an array");
    for (const auto& jc : classes) {
        only_keys(jc, {"kind", "coverage", "blocks"}, "class");
        BlockClass cl;
        const auto& k = field(jc, "kind");
        if (!k.is_string()) bad("class kind must be a string");
        const auto kind = kind_from_name(k.get<std::string>());
        if (!kind) bad("unknown block kind '" + k.get<std::string>() + "'");
        cl.kind = *kind;
        const auto& cov = field(jc, "coverage");
        if (cov.is_string()) {
            if (cov.get<std::string>() != "full") bad("coverage must be \"full\" or {\"missing\":[...]}");
        } else {
            only_keys(cov, {"missing"}, "coverage");
            cl.missing = as_points(field(cov, "missing"), "missing point");
        }
        const auto& blocks = field(jc, "blocks");
        if (!blocks.is_array()) bad("blocks must be an array");
        for (const auto& jb : blocks) {
            const auto pts = as_points(jb, "block vertex");
            if (pts.size() != arity(cl.kind))
                bad(std::string("a ") + kind_name(cl.kind) + " block needs " + std::to_string(arity(cl.kind)) +
                    " vertices");
            Block b;
            b.kind = cl.kind;
            std::copy(pts.begin(), pts.end(), b.v.begin());
            cl.blocks.push_back(b);
        }
        c.classes.push_back(std::move(cl));
    }

    const auto& cl = field(j, "claimed");
    only_keys(cl, {"r", "s", "partial_r", "partial_s"}, "claimed");
    c.claimed.r = as_u32(field(cl, "r"), "claimed.r");
    c.claimed.s = as_u32(field(cl, "s"), "claimed.s");
    c.claimed.partial_r = as_u32(field(cl, "partial_r"), "claimed.partial_r");
    c.claimed.partial_s = as_u32(field(cl, "partial_s"), "claimed.partial_s");

    const auto& prov = field(j, "provenance");
    if (!prov.is_array()) bad("provenance must be an array");
    for (const auto& line : prov) {
        if (!line.is_string()) bad("provenance entries must be strings");
        c.provenance.push_back(line.get<std::string>());
    }
    return c;
}

Certificate load_certificate(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open " + path.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return read_certificate(ss.str());
}

void save_certificate(const Certificate& c, const std::filesystem::path& path) {
    if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
    const auto tmp = path.string() + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw Error("cannot write " + tmp);
        out << write_certificate(c);
    }
    std::filesystem::rename(tmp, path);
}

std::string content_hash(const Certificate& c) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char ch : write_certificate(c)) {
        h ^= ch;
        h *= 1099511628211ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

}  // namespace urd
