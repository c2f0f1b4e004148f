// urd: command-line front end.
//
//   urd spectrum V [--json]
//   urd construct V R S -o FILE [--plan] [--no-search] [budget flags]
//   urd verify FILE [--json]
//   urd ingredient search FAMILY G U [--lambda L] [--profile R,S] [budget flags]
//   urd ingredient import FILE KEY
//   urd ingredient list
//   urd catalog list | show DESIGNATOR | dump DIR
//
// Exit codes: 0 ok, 2 inadmissible, 3 verification failure, 4 ingredient
// missing, 5 parse error. The store directory is --store, else $URD_STORE,
// else ./urd-store.

#include <CLI11.hpp>

#include <cstdio>
#include <filesystem>
#include <iostream>
#include <string>

#include "urd/catalog.hpp"
#include "urd/constructor.hpp"
#include "urd/format.hpp"
#include "urd/ingredients.hpp"
#include "urd/spectrum.hpp"
#include "urd/verifier.hpp"

namespace {

enum Exit : int { kOk = 0, kFailure = 1, kInadmissible = 2, kVerifyFailed = 3, kMissing = 4, kParse = 5 };

struct Common {
    std::string store;
    std::uint64_t max_nodes = urd::search::Budget{}.max_nodes;
    double max_seconds = urd::search::Budget{}.max_seconds;
    std::uint64_t seed = 0;

    urd::search::Options options() const {
        urd::search::Options o;
        o.budget.max_nodes = max_nodes;
        o.budget.max_seconds = max_seconds;
        o.seed = seed;
        return o;
    }
    std::filesystem::path store_dir() const {
        return store.empty() ? urd::IngredientStore::default_dir() : std::filesystem::path(store);
    }
};

void add_budget(CLI::App* cmd, Common& c) {
    cmd->add_option("--max-nodes", c.max_nodes, "search node budget");
    cmd->add_option("--max-seconds", c.max_seconds, "search wall-clock budget");
    cmd->add_option("--seed", c.seed, "candidate order seed (0: canonical)");
}

// "URGDD(12^2;6,8)" -> "URGDD-12^2-6,8"
std::string file_stem(const std::string& designator) {
    std::string out;
    for (char ch : designator) {
        if (ch == '(' || ch == ';') out += '-';
        else if (ch != ')') out += ch;
    }
    return out;
}

int report_verify(const urd::Certificate& c, bool json) {
    const auto rep = urd::verify(c);
    std::cout << (json ? rep.json() : rep.text()) << "\n";
    return rep.passed ? kOk : kVerifyFailed;
}

int cmd_spectrum(std::uint32_t v, bool json) {
    const auto set = urd::spectrum_set(v);
    if (json) {
        std::cout << "{\"v\":" << v << ",\"pairs\":[";
        for (std::size_t i = 0; i < set.pairs.size(); ++i)
            std::cout << (i ? "," : "") << "[" << set.pairs[i].r << "," << set.pairs[i].s << "]";
        std::cout << "]}\n";
    } else {
        for (const auto& p : set.pairs) std::cout << p.str() << "\n";
    }
    if (set.empty()) {
        std::cerr << "I(" << v << ") is empty\n";
        return kInadmissible;
    }
    return kOk;
}

int cmd_construct(std::uint32_t v, std::uint32_t r, std::uint32_t s, const std::string& out, bool show_plan,
                  bool no_search, const Common& common) {
    urd::IngredientStore store(common.store_dir());
    urd::Ingredients ingredients(&store, common.options(), !no_search);
    urd::Engine engine(ingredients);
    const urd::Plan plan = urd::solve_plan(v, {r, s});
    if (show_plan) std::cerr << plan.describe() << "\n";
    const urd::Certificate c = engine.build(plan);
    // build() verifies; checked again so nothing unverified is ever written.
    const auto rep = urd::verify(c);
    if (!rep.passed) {
        std::cerr << rep.text() << "\n";
        return kVerifyFailed;
    }
    urd::save_certificate(c, out);
    std::cout << out << " " << urd::content_hash(c) << " " << rep.text() << "\n";
    return kOk;
}

int cmd_ingredient_search(const std::string& family, std::uint32_t g, std::uint32_t u, std::uint32_t lambda,
                          const std::string& profile, const Common& common) {
    std::string sig;
    if (family == "rgdd4") sig = "rgdd4-" + std::to_string(g) + "^" + std::to_string(u) + "-l" + std::to_string(lambda);
    else if (family == "urgdd") {
        if (profile.empty()) throw urd::ParseError("urgdd needs --profile R,S");
        sig = "urgdd-" + std::to_string(g) + "^" + std::to_string(u) + "-l" + std::to_string(lambda) + "-" + profile;
    } else if (family == "nof") sig = "nof-" + std::to_string(u);
    else throw urd::ParseError("unknown family '" + family + "' (rgdd4, urgdd, nof)");
    urd::IngredientKey key;
    try {
        key = urd::IngredientKey::parse(sig);
    } catch (const std::invalid_argument& e) {
        throw urd::ParseError(e.what());
    }
    urd::IngredientStore store(common.store_dir());
    urd::Ingredients ingredients(&store, common.options(), true);
    const urd::Certificate c = ingredients.provide(key);
    store.put(key, c);
    std::cout << key.signature() << " " << urd::content_hash(c) << " -> " << store.path_for(key).string() << "\n";
    return kOk;
}

int cmd_ingredient_import(const std::string& path, const std::string& key_text, const Common& common) {
    urd::IngredientKey key;
    try {
        key = urd::IngredientKey::parse(key_text);
    } catch (const std::invalid_argument& e) {
        throw urd::ParseError(e.what());
    }
    urd::IngredientStore store(common.store_dir());
    urd::Ingredients ingredients(&store, common.options(), false);
    ingredients.import_file(path, key);
    std::cout << key.signature() << " imported\n";
    return kOk;
}

int cmd_ingredient_list(const Common& common) {
    urd::IngredientStore store(common.store_dir());
    for (const auto& [key, hash] : store.list()) std::cout << key.signature() << " " << hash << "\n";
    return kOk;
}

int cmd_catalog_dump(const std::string& dir) {
    int status = kOk;
    for (const auto& e : urd::catalog()) {
        const auto path = std::filesystem::path(dir) / (file_stem(e.designator) + ".json");
        urd::save_certificate(e.certificate, path);
        const auto rep = urd::verify(e.certificate);
        std::cout << e.designator << " " << urd::content_hash(e.certificate) << " " << rep.text() << "\n";
        if (!rep.passed) status = kVerifyFailed;
    }
    return status;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Uniformly resolvable decompositions of 2K_v into 4-cycles and 3-stars"};
    app.require_subcommand(1);
    Common common;
    app.add_option("--store", common.store, "ingredient store directory");

    std::uint32_t v = 0, r = 0, s = 0;
    bool json = false;

    auto* spectrum = app.add_subcommand("spectrum", "list I(v) in decreasing r");
    spectrum->add_option("v", v)->required();
    spectrum->add_flag("--json", json);

    std::string out;
    bool show_plan = false, no_search = false;
    auto* construct = app.add_subcommand("construct", "build and verify a URD(v;r,s)");
    construct->add_option("v", v)->required();
    construct->add_option("r", r)->required();
    construct->add_option("s", s)->required();
    construct->add_option("-o,--output", out, "certificate file")->required();
    construct->add_flag("--plan", show_plan, "print the construction plan on stderr");
    construct->add_flag("--no-search", no_search, "use generators and the store only");
    add_budget(construct, common);

    std::string path;
    auto* verify = app.add_subcommand("verify", "check a certificate file");
    verify->add_option("file", path)->required();
    verify->add_flag("--json", json);

    auto* ingredient = app.add_subcommand("ingredient", "auxiliary designs");
    ingredient->require_subcommand(1);
    std::string family, profile, key_text;
    std::uint32_t g = 0, u = 0, lambda = 1;
    auto* isearch = ingredient->add_subcommand("search", "generate or search, then store");
    isearch->add_option("family", family, "rgdd4 | urgdd | nof")->required();
    isearch->add_option("g", g)->required();
    isearch->add_option("u", u)->required();
    isearch->add_option("--lambda", lambda);
    isearch->add_option("--profile", profile, "R,S for urgdd");
    add_budget(isearch, common);
    auto* iimport = ingredient->add_subcommand("import", "verify a design file and store it");
    iimport->add_option("file", path)->required();
    iimport->add_option("key", key_text, "signature, e.g. rgdd4-4^7-l1")->required();
    auto* ilist = ingredient->add_subcommand("list", "stored keys with content hashes");

    auto* cat = app.add_subcommand("catalog", "explicit small designs");
    cat->require_subcommand(1);
    std::string designator, dir;
    auto* clist = cat->add_subcommand("list", "designators");
    auto* cshow = cat->add_subcommand("show", "print one certificate");
    cshow->add_option("designator", designator)->required();
    auto* cdump = cat->add_subcommand("dump", "write every entry to a directory");
    cdump->add_option("dir", dir)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kParse;
    }

    try {
        if (*spectrum) return cmd_spectrum(v, json);
        if (*construct) return cmd_construct(v, r, s, out, show_plan, no_search, common);
        if (*verify) return report_verify(urd::load_certificate(path), json);
        if (*isearch) return cmd_ingredient_search(family, g, u, lambda, profile, common);
        if (*iimport) return cmd_ingredient_import(path, key_text, common);
        if (*ilist) return cmd_ingredient_list(common);
        if (*clist) {
            for (const auto& d : urd::designators()) std::cout << d << "\n";
            return kOk;
        }
        if (*cshow) {
            std::cout << urd::write_certificate(urd::lookup(designator)) << "\n";
            return kOk;
        }
        if (*cdump) return cmd_catalog_dump(dir);
    } catch (const urd::Inadmissible& e) {
        std::cerr << "inadmissible: " << e.what() << "\n";
        return kInadmissible;
    } catch (const urd::NotAvailable& e) {
        std::cerr << e.what() << "\n";
        return kMissing;
    } catch (const urd::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kParse;
    } catch (const urd::UnknownDesignator& e) {
        std::cerr << e.what() << "\n";
        return kFailure;
    } catch (const urd::Error& e) {
        std::cerr << e.what() << "\n";
        return kVerifyFailed;
    } catch (const std::exception& e) {
        std::cerr << e.what() << "\n";
        return kFailure;
    }
    return kFailure;
}
