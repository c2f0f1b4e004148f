#pragma once

// Backtracking exact-cover search for small resolvable designs.
//
// Classes are built one at a time. Inside a class the search branches on the
// lowest-indexed uncovered point and tries every block of the class's kind
// that contains it, in canonical order, subject to the remaining pair
// capacities. A search never claims nonexistence: running out of budget and
// exhausting the (possibly symmetry-restricted) tree both yield NotFound.

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "urd/model.hpp"

namespace urd::search {

struct Budget {
    std::uint64_t max_nodes = 200'000'000;
    double max_seconds = 120.0;
};

struct Options {
    Budget budget;
    std::uint64_t seed = 0;  // 0 keeps canonical candidate order
    bool pruning = true;     // degree-parity and dead-point pruning
};

struct Stats {
    std::uint64_t nodes = 0;
    double seconds = 0.0;
    bool tree_exhausted = false;  // explored everything without hitting the budget
};

enum class Outcome { Found, NotFound };

template <class T>
struct Result {
    Outcome outcome = Outcome::NotFound;
    std::optional<T> value;
    Stats stats;

    bool found() const { return outcome == Outcome::Found; }
};

// One class to be built: its block kind and the points it must cover (all
// points for a full class).
struct ClassSpec {
    BlockKind kind = BlockKind::Cycle4;
    std::optional<std::vector<Point>> missing;
};

// Finds classes matching `specs` whose blocks use every unit of `capacity`
// exactly once. capacity.points() must not exceed 64.
Result<std::vector<BlockClass>> find_classes(const PairCounts& capacity, std::span<const ClassSpec> specs,
                                             const Options& opt = {});

// Like find_classes, but every base class is developed under the powers of
// the permutation `sigma`: the result lists, per base class, its images under
// sigma^0, sigma^1, ... in that order. Classes fixed by a power of sigma are
// not supported; every development has the full order of sigma.
Result<std::vector<BlockClass>> find_developed_classes(const PairCounts& capacity, std::span<const ClassSpec> base,
                                                       const std::vector<Point>& sigma, const Options& opt = {});

// URGDD-style factorization of `target` whose i-th class has kind kinds[i].
// The returned certificate has passed verify.
Result<Certificate> find_uniform_factorization(const TargetGraph& target, std::span<const BlockKind> kinds,
                                               const Options& opt = {});

enum class GddMode {
    Auto,              // difference matrix for u = 4, cyclic otherwise, plain as fallback
    Plain,             // class-by-class exact cover
    Cyclic,            // base classes developed under x -> x+1 on the group index
    DifferenceMatrix,  // u = 4 only: resolvable TD(4, g) from a (g,5,1) difference matrix
};

// 4-RGDD of type g^u with index lambda. Groups are residue classes mod u:
// point p belongs to group p mod u. On success the design has exactly
// lambda * g(u-1)/3 parallel classes of K4 blocks and has passed verify.
Result<Certificate> find_resolvable_gdd(std::uint32_t g, std::uint32_t u, std::uint32_t lambda,
                                        const Options& opt = {}, GddMode mode = GddMode::Auto);

// The target of a 4-RGDD of type g^u with residue-class groups.
TargetGraph residue_groups(std::uint32_t g, std::uint32_t u, std::uint32_t lambda);

// (g,k,1) difference matrix over Z_2^a x Z_m (g = 2^a m, m odd): k rows of
// group elements, encoded as integers 0..g-1 in the group's mixed-radix
// order, whose pairwise row differences are each a permutation of the group.
// Row 0 is all zeros.
Result<std::vector<std::vector<std::uint32_t>>> find_difference_matrix(std::uint32_t g, std::uint32_t rows,
                                                                       const Options& opt = {});

}  // namespace urd::search
