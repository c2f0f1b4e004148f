#pragma once

// Auxiliary designs consumed by the recursive constructions: 4-RGDDs,
// (C4,K13)-URGDDs of small multipartite types, and 2-frames of type 1^n.
//
// All multipartite ingredients use residue-class groups: on g*u points,
// point p lies in group p mod u (see search::residue_groups).

#include <filesystem>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "urd/model.hpp"
#include "urd/search.hpp"
#include "urd/spectrum.hpp"

namespace urd {

enum class Family { RGDD4, URGDD_C4K13, Frame2, NearOneFactorization };

struct IngredientKey {
    Family family = Family::RGDD4;
    std::uint32_t g = 0;  // group size
    std::uint32_t u = 0;  // group count
    std::uint32_t lambda = 1;
    std::optional<ClassPair> profile;  // URGDD only

    static IngredientKey rgdd4(std::uint32_t g, std::uint32_t u, std::uint32_t lambda = 1);
    static IngredientKey urgdd(std::uint32_t g, std::uint32_t u, std::uint32_t lambda, ClassPair profile);
    static IngredientKey frame2(std::uint32_t n);
    static IngredientKey near_one(std::uint32_t n);

    // File-name-safe text form, e.g. "rgdd4-4^7-l1", "urgdd-12^2-l2-6,8", "frame2-1^5-l1", "nof-5".
    std::string signature() const;
    // Inverse of signature(); throws std::invalid_argument.
    static IngredientKey parse(std::string_view text);

    // Empty when the key is well formed.
    std::optional<std::string> malformation() const;
    TargetGraph target() const;
    // Number of classes a design for this key must have.
    std::size_t expected_classes() const;

    auto operator<=>(const IngredientKey&) const = default;
};

class NotAvailable : public Error {
public:
    NotAvailable(IngredientKey key, const std::string& why);
    const IngredientKey& key() const { return key_; }

private:
    IngredientKey key_;
};

// Class i holds the pairs {i-k, i+k} (mod n), k = 1..(n-1)/2, and misses i.
std::vector<BlockClass> near_one_factorization(std::uint32_t n);

// lambda*n/2 cycle classes decomposing lambda*K_{n,n}; groups are the even
// and the odd points of 0..2n-1.
Certificate c4_factorization_bipartite(std::uint32_t n, std::uint32_t lambda);

// 8 star classes decomposing K_{12,12} (groups: even / odd points).
Certificate star_factorization_12x2();

// 16 star classes decomposing K_{12,12,12} (groups: residues mod 3).
Certificate star_factorization_12x3();

// 4-RGDD of type 4^10 (residue groups): a packing of the 130 lines of
// PG(3,3) into 13 spreads; one spread becomes the groups, the other 12 the
// classes.
Certificate rgdd4_4x10_from_pg33();

// Inflates every point of a (C4,K13)-URGDD of type g^u into 3 copies
// (p -> p + g*u*k, k = 0,1,2), giving type (3g)^u with profile (3r, 3s).
Certificate weight_by_three(const Certificate& urgdd);

// A design whose classes are listed `times` times over, at `times` the index.
Certificate repeat_classes(const Certificate& c, std::uint32_t times);

// Directory of certificate files named <signature>.json.
class IngredientStore {
public:
    explicit IngredientStore(std::filesystem::path dir);
    // $URD_STORE, or ./urd-store when unset.
    static std::filesystem::path default_dir();

    const std::filesystem::path& dir() const { return dir_; }
    std::filesystem::path path_for(const IngredientKey& key) const;
    std::optional<Certificate> get(const IngredientKey& key) const;
    // Verifies against the key before writing; throws Error on rejection.
    void put(const IngredientKey& key, const Certificate& c);
    // Stored keys with the content hash of each file.
    std::vector<std::pair<IngredientKey, std::string>> list() const;

private:
    std::filesystem::path dir_;
};

// Throws Error unless `c` is a verified design for `key`.
void check_against_key(const IngredientKey& key, const Certificate& c);

class Ingredients {
public:
    // `store` may be null; searching may be switched off entirely.
    explicit Ingredients(IngredientStore* store = nullptr, search::Options opt = {}, bool allow_search = true);

    // Constructive generator, then store, then search. Throws NotAvailable.
    Certificate provide(const IngredientKey& key);
    // Loads, verifies and stores a design; re-importing the same file is a no-op.
    void import_file(const std::filesystem::path& path, const IngredientKey& key);

private:
    std::optional<Certificate> generate(const IngredientKey& key);
    std::optional<Certificate> search_for(const IngredientKey& key);

    IngredientStore* store_;
    search::Options opt_;
    bool allow_search_;
    std::set<std::string> searched_in_vain_;  // signatures; a failed search is not retried
};

}  // namespace urd
