#include "urd/search.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <chrono>
#include <numeric>
#include <random>
#include <sstream>
#include <stdexcept>

#include "urd/verifier.hpp"

namespace urd::search {

namespace {

using Mask = std::uint64_t;
using Clock = std::chrono::steady_clock;

constexpr Mask bit(Point p) { return Mask{1} << p; }

template <class F>
void for_bits(Mask m, F&& f) {
    while (m) {
        const auto p = static_cast<Point>(std::countr_zero(m));
        m &= m - 1;
        f(p);
    }
}

// Node and wall-clock accounting shared by every search in this file.
class Meter {
public:
    explicit Meter(const Budget& b) : budget_(b), start_(Clock::now()) {}

    // False once the budget is spent.
    bool tick() {
        ++nodes_;
        if (nodes_ > budget_.max_nodes) return out_ = false;
        if ((nodes_ & 0x3FFF) == 0 && seconds() > budget_.max_seconds) return out_ = false;
        return true;
    }
    bool out_of_budget() const { return !out_; }
    double seconds() const { return std::chrono::duration<double>(Clock::now() - start_).count(); }
    Stats stats(bool exhausted) const { return {nodes_, seconds(), exhausted && out_}; }

private:
    Budget budget_;
    Clock::time_point start_;
    std::uint64_t nodes_ = 0;
    bool out_ = true;
};

// Pair capacities plus neighbour masks (y in nbr[x] iff cap(x,y) > 0).
class Capacity {
public:
    explicit Capacity(const PairCounts& pc) : n_(pc.points()), cap_(std::size_t(n_) * n_, 0), nbr_(n_, 0), deg_(n_, 0) {
        for (Point a = 0; a < n_; ++a)
            for (Point b = a + 1; b < n_; ++b)
                if (auto c = pc.get(a, b)) {
                    at(a, b) = at(b, a) = c;
                    nbr_[a] |= bit(b);
                    nbr_[b] |= bit(a);
                    deg_[a] += c;
                    deg_[b] += c;
                }
    }

    Point points() const { return n_; }
    std::uint8_t get(Point a, Point b) const { return cap_[std::size_t(a) * n_ + b]; }
    Mask nbr(Point a) const { return nbr_[a]; }
    int degree(Point a) const { return deg_[a]; }

    bool use(Point a, Point b) {
        auto& c = at(a, b);
        if (c == 0) return false;
        --c;
        at(b, a) = c;
        --deg_[a];
        --deg_[b];
        if (c == 0) {
            nbr_[a] &= ~bit(b);
            nbr_[b] &= ~bit(a);
        }
        return true;
    }
    void release(Point a, Point b) {
        auto& c = at(a, b);
        ++c;
        at(b, a) = c;
        ++deg_[a];
        ++deg_[b];
        nbr_[a] |= bit(b);
        nbr_[b] |= bit(a);
    }

private:
    std::uint8_t& at(Point a, Point b) { return cap_[std::size_t(a) * n_ + b]; }
    Point n_;
    std::vector<std::uint8_t> cap_;
    std::vector<Mask> nbr_;
    std::vector<int> deg_;
};

// Edges of a block as vertex index pairs.
std::span<const std::array<int, 2>> edge_pattern(BlockKind k) {
    static constexpr std::array<std::array<int, 2>, 4> cyc{{{0, 1}, {1, 2}, {2, 3}, {3, 0}}};
    static constexpr std::array<std::array<int, 2>, 3> star{{{0, 1}, {0, 2}, {0, 3}}};
    static constexpr std::array<std::array<int, 2>, 6> k4{{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}};
    static constexpr std::array<std::array<int, 2>, 1> k2{{{0, 1}}};
    switch (k) {
        case BlockKind::Cycle4: return cyc;
        case BlockKind::Star3: return star;
        case BlockKind::Complete4: return k4;
        case BlockKind::Edge2: return k2;
    }
    return {};
}

// Degree a vertex at position i receives from one block.
int vertex_degree(BlockKind k, std::size_t i) {
    switch (k) {
        case BlockKind::Cycle4: return 2;
        case BlockKind::Star3: return i == 0 ? 3 : 1;
        case BlockKind::Complete4: return 3;
        case BlockKind::Edge2: return 1;
    }
    return 0;
}

int min_partners(BlockKind k) {
    switch (k) {
        case BlockKind::Cycle4: return 2;
        case BlockKind::Complete4: return 3;
        default: return 1;
    }
}

std::uint64_t block_key(const Block& b) {
    const Block c = canonical_block(b);
    return (std::uint64_t(c.v[0]) << 48) | (std::uint64_t(c.v[1]) << 32) | (std::uint64_t(c.v[2]) << 16) |
           std::uint64_t(c.v[3]);
}

class ClassSearcher {
public:
    // Each entry is a base class; its blocks are also placed under every power
    // of `sigma` (identity when empty), so one base class stands for |sigma|
    // classes.
    ClassSearcher(const PairCounts& capacity, std::span<const ClassSpec> specs, const Options& opt,
                  const std::vector<Point>& sigma = {})
        : cap_(capacity), specs_(specs.begin(), specs.end()), opt_(opt), meter_(opt.budget), rng_(opt.seed) {
        const Point n = cap_.points();
        if (n > 64) throw std::invalid_argument("search: at most 64 points");
        powers_.push_back(std::vector<Point>(n));
        std::iota(powers_[0].begin(), powers_[0].end(), 0u);
        if (!sigma.empty()) {
            if (sigma.size() != n) throw std::invalid_argument("search: automorphism size differs from point count");
            for (;;) {
                std::vector<Point> next(n);
                for (Point p = 0; p < n; ++p) next[p] = sigma[powers_.back()[p]];
                if (next == powers_[0]) break;
                powers_.push_back(std::move(next));
                if (powers_.size() > n * n) throw std::invalid_argument("search: automorphism is not a permutation");
            }
        }
        const Mask all = n == 64 ? ~Mask{0} : bit(n) - 1;
        fixed_.assign(n, 0);
        stars_.assign(n, 0);
        for (const auto& s : specs_) {
            Mask m = all;
            if (s.missing)
                for (Point p : *s.missing) m &= ~bit(p);
            required_.push_back(m);
            for (const auto& pw : powers_)
                for_bits(m, [&](Point p) {
                    if (s.kind == BlockKind::Star3)
                        ++stars_[pw[p]];
                    else
                        fixed_[pw[p]] += vertex_degree(s.kind, 0);
                });
        }
        for (std::size_t i = 0; i < specs_.size(); ++i) {
            const bool same = i > 0 && specs_[i].kind == specs_[i - 1].kind && required_[i] == required_[i - 1];
            twin_.push_back(same);
        }
    }

    Result<std::vector<BlockClass>> run() {
        Result<std::vector<BlockClass>> res;
        bool ok = true;
        for (Point p = 0; p < cap_.points(); ++p) ok = ok && degree_ok(p);
        for (std::size_t i = 0; i < specs_.size(); ++i)
            ok = ok && std::popcount(required_[i]) % int(arity(specs_[i].kind)) == 0;
        first_key_.assign(specs_.size(), 0);
        current_.assign(specs_.size(), {});
        bool found = false;
        if (ok) {
            if (specs_.empty())
                found = std::all_of(range().begin(), range().end(), [&](Point p) { return cap_.degree(p) == 0; });
            else
                found = solve(0, required_[0]);
        }
        res.stats = meter_.stats(!found);
        if (found) {
            res.outcome = Outcome::Found;
            std::vector<BlockClass> out;
            for (std::size_t i = 0; i < specs_.size(); ++i) {
                BlockClass cl;
                cl.kind = specs_[i].kind;
                cl.blocks = current_[i];
                if (specs_[i].missing) {
                    auto miss = *specs_[i].missing;
                    std::sort(miss.begin(), miss.end());
                    cl.missing = std::move(miss);
                }
                for (const auto& pw : powers_) out.push_back(relabel(cl, pw));
            }
            res.value = std::move(out);
        }
        return res;
    }

private:
    std::vector<Point> range() const {
        std::vector<Point> r(cap_.points());
        std::iota(r.begin(), r.end(), 0u);
        return r;
    }

    bool degree_ok(Point p) const {
        if (!opt_.pruning) return true;
        const int rest = cap_.degree(p) - fixed_[p] - stars_[p];
        return rest >= 0 && rest % 2 == 0 && rest <= 2 * stars_[p];
    }

    void candidates(BlockKind kind, Point p, Mask avail, std::vector<Block>& out) const {
        const Mask np = cap_.nbr(p) & avail;
        switch (kind) {
            case BlockKind::Edge2:
                for_bits(np, [&](Point q) { out.push_back(Block::edge(p, q)); });
                break;
            case BlockKind::Complete4:
                for_bits(np, [&](Point q) {
                    const Mask nq = np & cap_.nbr(q) & ~((bit(q) << 1) - 1);
                    for_bits(nq, [&](Point r) {
                        const Mask nr = nq & cap_.nbr(r) & ~((bit(r) << 1) - 1);
                        for_bits(nr, [&](Point s) { out.push_back(Block::k4(p, q, r, s)); });
                    });
                });
                break;
            case BlockKind::Cycle4:
                // p-a-b-c-p with a < c; b adjacent to both a and c.
                for_bits(np, [&](Point a) {
                    const Mask cs = np & ~((bit(a) << 1) - 1);
                    for_bits(cs, [&](Point c) {
                        const Mask bs = cap_.nbr(a) & cap_.nbr(c) & avail & ~bit(a) & ~bit(c);
                        for_bits(bs, [&](Point b) { out.push_back(Block::cycle(p, a, b, c)); });
                    });
                });
                break;
            case BlockKind::Star3:
                for_bits(np, [&](Point q) {
                    const Mask nq = np & ~((bit(q) << 1) - 1);
                    for_bits(nq, [&](Point r) {
                        const Mask nr = nq & ~((bit(r) << 1) - 1);
                        for_bits(nr, [&](Point s) { out.push_back(Block::star(p, q, r, s)); });
                    });
                });
                for_bits(np, [&](Point c) {
                    const Mask leaves = cap_.nbr(c) & avail & ~bit(c);
                    for_bits(leaves, [&](Point q) {
                        const Mask rest = leaves & ~((bit(q) << 1) - 1);
                        for_bits(rest, [&](Point r) { out.push_back(Block::star(c, p, q, r)); });
                    });
                });
                break;
        }
    }

    bool place(const Block& b, std::size_t ci) {
        const auto pattern = edge_pattern(b.kind);
        taken_.clear();
        for (const auto& pw : powers_)
            for (const auto& e : pattern) {
                const Point x = pw[b.v[e[0]]], y = pw[b.v[e[1]]];
                if (!cap_.use(x, y)) {
                    for (const auto& t : taken_) cap_.release(t[0], t[1]);
                    return false;
                }
                taken_.push_back({x, y});
            }
        consume(b, ci, -1);
        return true;
    }

    void unplace(const Block& b, std::size_t ci) {
        for (const auto& pw : powers_)
            for (const auto& e : edge_pattern(b.kind)) cap_.release(pw[b.v[e[0]]], pw[b.v[e[1]]]);
        consume(b, ci, +1);
    }

    void consume(const Block& b, std::size_t ci, int sign) {
        for (const auto& pw : powers_)
            for (std::size_t i = 0; i < b.size(); ++i) {
                const Point x = pw[b.v[i]];
                if (specs_[ci].kind == BlockKind::Star3)
                    stars_[x] += sign;
                else
                    fixed_[x] += sign * vertex_degree(b.kind, i);
            }
    }

    bool feasible(const Block& b, std::size_t ci, Mask uncovered) const {
        if (!opt_.pruning) return true;
        for (const auto& pw : powers_)
            for (Point x : b)
                if (!degree_ok(pw[x])) return false;
        const int need = min_partners(specs_[ci].kind);
        bool ok = true;
        for_bits(uncovered, [&](Point x) {
            if (ok && std::popcount(cap_.nbr(x) & uncovered) < need) ok = false;
        });
        return ok;
    }

    bool solve(std::size_t ci, Mask uncovered) {
        if (uncovered == 0) {
            if (ci + 1 == specs_.size()) return true;
            return solve(ci + 1, required_[ci + 1]);
        }
        const auto p = static_cast<Point>(std::countr_zero(uncovered));
        const BlockKind kind = specs_[ci].kind;
        const bool first = uncovered == required_[ci];
        std::vector<Block> cand;
        candidates(kind, p, uncovered & ~bit(p), cand);
        if (opt_.seed != 0) std::shuffle(cand.begin(), cand.end(), rng_);
        for (const auto& b : cand) {
            std::uint64_t key = 0;
            if (first) {
                key = block_key(b);
                // Interchangeable neighbouring classes are kept in key order.
                if (twin_[ci] && key < first_key_[ci - 1]) continue;
            }
            if (!meter_.tick()) return false;
            if (!place(b, ci)) continue;
            Mask next = uncovered;
            for (Point x : b) next &= ~bit(x);
            if (feasible(b, ci, next)) {
                current_[ci].push_back(b);
                if (first) first_key_[ci] = key;
                if (solve(ci, next)) return true;
                current_[ci].pop_back();
            }
            unplace(b, ci);
            if (meter_.out_of_budget()) return false;
        }
        return false;
    }

    Capacity cap_;
    std::vector<ClassSpec> specs_;
    Options opt_;
    Meter meter_;
    std::mt19937_64 rng_;
    std::vector<std::vector<Point>> powers_;  // sigma^0, sigma^1, ...
    std::vector<std::array<Point, 2>> taken_;
    std::vector<Mask> required_;
    std::vector<bool> twin_;
    std::vector<int> fixed_;  // remaining exact degree demand from non-star classes
    std::vector<int> stars_;  // remaining star classes that must still cover the point
    std::vector<std::uint64_t> first_key_;
    std::vector<std::vector<Block>> current_;
};

std::string params(const Options& opt) {
    std::ostringstream os;
    os << "seed=" << opt.seed << " max_nodes=" << opt.budget.max_nodes << " max_seconds=" << opt.budget.max_seconds
       << " pruning=" << (opt.pruning ? "on" : "off");
    return os.str();
}

std::string outcome_note(const Stats& s) {
    std::ostringstream os;
    os << "nodes=" << s.nodes;
    return os.str();
}

// ---- abelian group Z_2^a x Z_m for difference matrices -----------------

class SmallAbelian {
public:
    explicit SmallAbelian(std::uint32_t order) : g_(order) {
        while (order % 2 == 0) {
            order /= 2;
            ++twos_;
        }
        m_ = order;
        add_.resize(std::size_t(g_) * g_);
        neg_.resize(g_);
        const std::uint32_t w = 1u << twos_;
        for (std::uint32_t x = 0; x < g_; ++x) {
            for (std::uint32_t y = 0; y < g_; ++y) {
                const std::uint32_t z = ((x / w + y / w) % m_) * w + ((x % w) ^ (y % w));
                add_[std::size_t(x) * g_ + y] = z;
            }
            neg_[x] = ((m_ - (x / w) % m_) % m_) * w + (x % w);
        }
    }
    std::uint32_t order() const { return g_; }
    // Hall-Paige: complete mappings exist iff the Sylow 2-subgroup is trivial or non-cyclic.
    bool has_orthomorphisms() const { return twos_ != 1; }
    std::uint32_t add(std::uint32_t x, std::uint32_t y) const { return add_[std::size_t(x) * g_ + y]; }
    std::uint32_t sub(std::uint32_t x, std::uint32_t y) const { return add(x, neg_[y]); }

private:
    std::uint32_t g_;
    std::uint32_t twos_ = 0;
    std::uint32_t m_ = 1;
    std::vector<std::uint32_t> add_;
    std::vector<std::uint32_t> neg_;
};

class DifferenceMatrixSearch {
public:
    DifferenceMatrixSearch(std::uint32_t g, std::uint32_t rows, const Options& opt)
        : grp_(g), rows_(rows), opt_(opt), meter_(opt.budget), rng_(opt.seed) {}

    Result<std::vector<std::vector<std::uint32_t>>> run() {
        Result<std::vector<std::vector<std::uint32_t>>> res;
        const std::uint32_t g = grp_.order();
        m_.assign(rows_, std::vector<std::uint32_t>(g, 0));
        bool found = false;
        if (rows_ <= 2) {
            if (rows_ == 2) std::iota(m_[1].begin(), m_[1].end(), 0u);
            found = true;
        } else if (grp_.has_orthomorphisms() && g >= 2) {
            std::iota(m_[1].begin(), m_[1].end(), 0u);
            found = fill_row(2);
        }
        res.stats = meter_.stats(!found);
        if (found) {
            res.outcome = Outcome::Found;
            res.value = m_;
        }
        return res;
    }

private:
    bool fill_row(std::uint32_t r) {
        if (r == rows_) return true;
        const std::uint32_t g = grp_.order();
        used_.assign(r, std::vector<char>(g, 0));  // used differences against each earlier row
        for (std::uint32_t i = 0; i < r; ++i) used_[i][0] = 1;  // column 0 is all zeros
        return fill_cell(r, 1);
    }

    bool fill_cell(std::uint32_t r, std::uint32_t c) {
        const std::uint32_t g = grp_.order();
        if (c == g) {
            auto saved = used_;
            if (fill_row(r + 1)) return true;
            used_ = std::move(saved);
            return false;
        }
        std::vector<std::uint32_t> vals(g);
        std::iota(vals.begin(), vals.end(), 0u);
        if (opt_.seed != 0) std::shuffle(vals.begin(), vals.end(), rng_);
        for (std::uint32_t x : vals) {
            // Rows 2.. are interchangeable: order them by their column-1 entry.
            if (c == 1 && r > 2 && x <= m_[r - 1][1]) continue;
            bool ok = true;
            for (std::uint32_t i = 0; i < r && ok; ++i) ok = !used_[i][grp_.sub(x, m_[i][c])];
            if (!ok) continue;
            if (!meter_.tick()) return false;
            for (std::uint32_t i = 0; i < r; ++i) used_[i][grp_.sub(x, m_[i][c])] = 1;
            m_[r][c] = x;
            if (fill_cell(r, c + 1)) return true;
            for (std::uint32_t i = 0; i < r; ++i) used_[i][grp_.sub(x, m_[i][c])] = 0;
            if (meter_.out_of_budget()) return false;
        }
        return false;
    }

    SmallAbelian grp_;
    std::uint32_t rows_;
    Options opt_;
    Meter meter_;
    std::mt19937_64 rng_;
    std::vector<std::vector<std::uint32_t>> m_;
    std::vector<std::vector<char>> used_;
};

// ---- cyclic 4-RGDD search ------------------------------------------------

// Points p = k*u + x carry group x = p mod u; the action shifts x by one.
class CyclicGddSearch {
public:
    CyclicGddSearch(std::uint32_t g, std::uint32_t u, std::uint32_t lambda, const Options& opt)
        : g_(g), u_(u), n_(g * u), cap_(target_edge_multiset(residue_groups(g, u, lambda))), opt_(opt),
          meter_(opt.budget), rng_(opt.seed) {
        const std::uint32_t t = lambda * g * (u - 1) / 3;
        base_ = t / u;
        fixed_ = t % u;
    }

    Result<std::vector<BlockClass>> run() {
        Result<std::vector<BlockClass>> res;
        fixed_classes_.assign(fixed_, {});
        base_classes_.assign(base_, {});
        const Mask all = n_ == 64 ? ~Mask{0} : bit(n_) - 1;
        const bool found = n_ <= 64 && (fixed_ + base_ == 0 || step(0, all));
        res.stats = meter_.stats(!found);
        if (!found) return res;
        std::vector<BlockClass> out;
        for (const auto& orbit_blocks : fixed_classes_) {
            BlockClass cl;
            cl.kind = BlockKind::Complete4;
            for (const auto& b : orbit_blocks)
                for (const auto& t : orbit(b)) cl.blocks.push_back(t);
            out.push_back(std::move(cl));
        }
        for (const auto& base : base_classes_)
            for (std::uint32_t d = 0; d < u_; ++d) {
                BlockClass cl;
                cl.kind = BlockKind::Complete4;
                for (const auto& b : base) cl.blocks.push_back(shift(b, d));
                out.push_back(std::move(cl));
            }
        res.outcome = Outcome::Found;
        res.value = std::move(out);
        return res;
    }

private:
    Point shift(Point p, std::uint32_t d) const { return (p / u_) * u_ + (p % u_ + d) % u_; }
    Block shift(const Block& b, std::uint32_t d) const {
        Block o = b;
        for (std::size_t i = 0; i < 4; ++i) o.v[i] = shift(b.v[i], d);
        return o;
    }
    Mask mask(const Block& b) const {
        Mask m = 0;
        for (Point p : b) m |= bit(p);
        return m;
    }
    // Distinct translates of b.
    std::vector<Block> orbit(const Block& b) const {
        std::vector<Block> out;
        std::vector<Mask> seen;
        for (std::uint32_t d = 0; d < u_; ++d) {
            const Block t = shift(b, d);
            const Mask m = mask(t);
            if (std::find(seen.begin(), seen.end(), m) != seen.end()) continue;
            seen.push_back(m);
            out.push_back(t);
        }
        return out;
    }

    bool apply(const std::vector<Block>& blocks, std::vector<std::array<Point, 2>>& taken) {
        for (const auto& b : blocks)
            for (const auto& e : edge_pattern(BlockKind::Complete4)) {
                if (!cap_.use(b.v[e[0]], b.v[e[1]])) return false;
                taken.push_back({b.v[e[0]], b.v[e[1]]});
            }
        return true;
    }
    void undo(std::vector<std::array<Point, 2>>& taken) {
        for (const auto& e : taken) cap_.release(e[0], e[1]);
        taken.clear();
    }

    // Classes 0..fixed_-1 are invariant; the rest are base classes.
    bool step(std::size_t ci, Mask uncovered) {
        const Mask all = n_ == 64 ? ~Mask{0} : bit(n_) - 1;
        if (uncovered == 0) {
            if (ci + 1 == fixed_ + base_) return true;
            return step(ci + 1, all);
        }
        const bool invariant = ci < fixed_;
        const auto p = static_cast<Point>(std::countr_zero(uncovered));
        const Mask avail = uncovered & ~bit(p);
        std::vector<Block> cand;
        const Mask np = cap_.nbr(p) & avail;
        for_bits(np, [&](Point q) {
            const Mask nq = np & cap_.nbr(q) & ~((bit(q) << 1) - 1);
            for_bits(nq, [&](Point r) {
                const Mask nr = nq & cap_.nbr(r) & ~((bit(r) << 1) - 1);
                for_bits(nr, [&](Point s) { cand.push_back(Block::k4(p, q, r, s)); });
            });
        });
        if (opt_.seed != 0) std::shuffle(cand.begin(), cand.end(), rng_);
        for (const auto& b : cand) {
            if (!meter_.tick()) return false;
            std::vector<Block> placed;
            Mask cover = mask(b);
            if (invariant) {
                placed = orbit(b);
                Mask acc = 0;
                bool disjoint = true;
                for (const auto& t : placed) {
                    const Mask m = mask(t);
                    disjoint = disjoint && (acc & m) == 0;
                    acc |= m;
                }
                if (!disjoint || (acc & ~uncovered) != 0) continue;
                cover = acc;
            } else {
                for (std::uint32_t d = 0; d < u_; ++d) placed.push_back(shift(b, d));
            }
            std::vector<std::array<Point, 2>> taken;
            if (apply(placed, taken)) {
                auto& slot = invariant ? fixed_classes_[ci] : base_classes_[ci - fixed_];
                slot.push_back(b);
                if (step(ci, uncovered & ~cover)) return true;
                slot.pop_back();
            }
            undo(taken);
            if (meter_.out_of_budget()) return false;
        }
        return false;
    }

    std::uint32_t g_, u_, n_;
    Capacity cap_;
    Options opt_;
    Meter meter_;
    std::mt19937_64 rng_;
    std::uint32_t base_ = 0;
    std::uint32_t fixed_ = 0;
    std::vector<std::vector<Block>> fixed_classes_;
    std::vector<std::vector<Block>> base_classes_;
};

Certificate gdd_certificate(std::uint32_t g, std::uint32_t u, std::uint32_t lambda, std::vector<BlockClass> classes,
                            std::string how) {
    std::vector<std::string> prov{"4-RGDD of type " + std::to_string(g) + "^" + std::to_string(u) +
                                      " lambda=" + std::to_string(lambda),
                                  std::move(how)};
    return make_certificate(residue_groups(g, u, lambda), std::move(classes), std::move(prov));
}

}  // namespace

TargetGraph residue_groups(std::uint32_t g, std::uint32_t u, std::uint32_t lambda) {
    std::vector<std::vector<Point>> groups(u);
    for (Point p = 0; p < g * u; ++p) groups[p % u].push_back(p);
    return TargetGraph::multipartite(std::move(groups), lambda);
}

Result<std::vector<BlockClass>> find_classes(const PairCounts& capacity, std::span<const ClassSpec> specs,
                                             const Options& opt) {
    return ClassSearcher(capacity, specs, opt).run();
}

Result<std::vector<BlockClass>> find_developed_classes(const PairCounts& capacity, std::span<const ClassSpec> base,
                                                       const std::vector<Point>& sigma, const Options& opt) {
    return ClassSearcher(capacity, base, opt, sigma).run();
}

Result<Certificate> find_uniform_factorization(const TargetGraph& target, std::span<const BlockKind> kinds,
                                               const Options& opt) {
    Result<Certificate> res;
    if (target.v > 64) return res;
    std::vector<ClassSpec> specs;
    for (auto k : kinds) specs.push_back({k, std::nullopt});
    auto found = find_classes(target_edge_multiset(target), specs, opt);
    res.stats = found.stats;
    if (!found.found()) return res;
    Certificate c = make_certificate(target, std::move(*found.value),
                                     {"search: uniform factorization, class-by-class exact cover",
                                      "search parameters: " + params(opt), "search stats: " + outcome_note(res.stats)});
    if (!verify(c).passed) throw std::logic_error("search produced an invalid factorization");
    res.outcome = Outcome::Found;
    res.value = std::move(c);
    return res;
}

Result<std::vector<std::vector<std::uint32_t>>> find_difference_matrix(std::uint32_t g, std::uint32_t rows,
                                                                       const Options& opt) {
    if (g == 0) throw std::invalid_argument("difference matrix over the empty group");
    return DifferenceMatrixSearch(g, rows, opt).run();
}

Result<Certificate> find_resolvable_gdd(std::uint32_t g, std::uint32_t u, std::uint32_t lambda, const Options& opt,
                                        GddMode mode) {
    Result<Certificate> res;
    if (lambda < 1 || lambda > 2) throw std::invalid_argument("find_resolvable_gdd: lambda must be 1 or 2");
    // A K4 needs four groups; the class count must be integral.
    if (u < 4 || g == 0 || (g * (u - 1)) % 3 != 0 || g * u > 64) return res;
    const std::uint32_t t1 = g * (u - 1) / 3;

    if (mode == GddMode::Auto) {
        // A (g,5,1) difference matrix needs g >= 5, so small g goes straight to the fallback.
        auto first = find_resolvable_gdd(g, u, lambda, opt, u == 4 ? GddMode::DifferenceMatrix : GddMode::Cyclic);
        if (first.found()) return first;
        auto second = find_resolvable_gdd(g, u, lambda, opt, GddMode::Plain);
        second.stats.nodes += first.stats.nodes;
        second.stats.seconds += first.stats.seconds;
        return second;
    }

    std::vector<BlockClass> classes;
    std::string how;
    if (mode == GddMode::DifferenceMatrix) {
        if (u != 4) return res;
        auto dm = find_difference_matrix(g, 5, opt);
        res.stats = dm.stats;
        if (!dm.found()) return res;
        const auto& m = *dm.value;
        SmallAbelian grp(g);
        // Row 0 resolves; rows 1..4 become the groups. Point (group i, element e) is e*4 + i.
        for (std::uint32_t h = 0; h < g; ++h) {
            BlockClass cl;
            cl.kind = BlockKind::Complete4;
            for (std::uint32_t c = 0; c < g; ++c) {
                Block b;
                b.kind = BlockKind::Complete4;
                for (std::uint32_t i = 0; i < 4; ++i) b.v[i] = grp.add(m[i + 1][c], h) * 4 + i;
                cl.blocks.push_back(b);
            }
            classes.push_back(std::move(cl));
        }
        const auto once = classes;
        for (std::uint32_t rep = 1; rep < lambda; ++rep)
            classes.insert(classes.end(), once.begin(), once.end());
        how = "search: resolvable TD(4," + std::to_string(g) + ") from a difference matrix; " + params(opt);
    } else if (mode == GddMode::Cyclic) {
        auto found = CyclicGddSearch(g, u, lambda, opt).run();
        res.stats = found.stats;
        if (!found.found()) return res;
        classes = std::move(*found.value);
        how = "search: cyclic mode, base classes developed under the group shift; " + params(opt);
    } else {
        std::vector<ClassSpec> specs(lambda * t1, ClassSpec{BlockKind::Complete4, std::nullopt});
        auto found = find_classes(target_edge_multiset(residue_groups(g, u, lambda)), specs, opt);
        res.stats = found.stats;
        if (!found.found()) return res;
        classes = std::move(*found.value);
        how = "search: plain class-by-class exact cover; " + params(opt);
    }
    Certificate c = gdd_certificate(g, u, lambda, std::move(classes), how);
    c.provenance.push_back("search stats: " + outcome_note(res.stats));
    if (c.classes.size() != lambda * t1) throw std::logic_error("RGDD class count differs from lambda*g(u-1)/3");
    if (!verify(c).passed) throw std::logic_error("search produced an invalid RGDD");
    res.outcome = Outcome::Found;
    res.value = std::move(c);
    return res;
}

}  // namespace urd::search
