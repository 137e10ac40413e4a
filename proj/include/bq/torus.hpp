#pragma once
// Exact points on products of complex tori and finite groups acting on them
// by block permutations composed with finite-order translations.
//
// A point of (C^x)^N is a vector of Coord values (angle, radial exponent).
// Group elements are stored as (g.x)_i = x[src[i]] + t[i]; translations of
// finite order are angle-only, which is enforced at construction.

#include "bq/charactertable.hpp"
#include "bq/group.hpp"
#include "bq/partition.hpp"
#include "bq/rational.hpp"
#include "bq/twisted.hpp"

#include <map>

namespace bq {

using TorusPoint = std::vector<Coord>;

inline std::string point_str(const TorusPoint& x) {
    std::string s = "(";
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (i) s += " ";
        s += x[i].str();
    }
    return s + ")";
}

struct PermTrans {
    std::vector<int> src;
    std::vector<Coord> t;

    static PermTrans identity(int n) {
        PermTrans e;
        e.src.resize(n);
        std::iota(e.src.begin(), e.src.end(), 0);
        e.t.assign(n, Coord{});
        return e;
    }
    static PermTrans translation(const std::vector<Coord>& by) {
        PermTrans e = identity((int)by.size());
        e.t = by;
        return e;
    }
    static PermTrans permutation(const std::vector<int>& perm) {
        // (g.x)_{perm[i]} = x_i, i.e. src[perm[i]] = i
        PermTrans e = identity((int)perm.size());
        for (std::size_t i = 0; i < perm.size(); ++i) e.src[perm[i]] = (int)i;
        return e;
    }

    TorusPoint apply(const TorusPoint& x) const {
        TorusPoint y(x.size());
        for (std::size_t i = 0; i < x.size(); ++i) y[i] = x[src[i]] + t[i];
        return y;
    }
    PermTrans compose(const PermTrans& o) const {
        // (this o o)(x) = this(o(x))
        PermTrans c;
        c.src.resize(src.size());
        c.t.resize(src.size());
        for (std::size_t i = 0; i < src.size(); ++i) {
            c.src[i] = o.src[src[i]];
            c.t[i] = o.t[src[i]] + t[i];
        }
        return c;
    }
    PermTrans inverse() const {
        PermTrans inv;
        inv.src = invert_perm(src);
        inv.t.resize(src.size());
        for (std::size_t k = 0; k < src.size(); ++k) inv.t[k] = Coord{} - t[inv.src[k]];
        return inv;
    }
    bool operator==(const PermTrans& o) const { return src == o.src && t == o.t; }
    bool operator<(const PermTrans& o) const {
        if (src != o.src) return src < o.src;
        return t < o.t;
    }
    bool is_pure_permutation() const {
        return std::all_of(t.begin(), t.end(),
                           [](const Coord& c) { return c == Coord{}; });
    }
};

// A finite group of permutation-translation symmetries, materialized from
// generators, with its abstract multiplication table.
class TorusGroup {
public:
    TorusGroup() : rank_(0) { init({}); }
    TorusGroup(int rank, const std::vector<PermTrans>& generators, std::size_t max_order = 40000)
        : rank_(rank) {
        for (const auto& g : generators) {
            if ((int)g.src.size() != rank) throw std::invalid_argument("generator rank mismatch");
            for (const auto& c : g.t)
                if (c.radial != Rat(0))
                    throw std::invalid_argument(
                        "finite-order torus symmetries must have unitary translations");
        }
        init(generators, max_order);
    }

    int rank() const { return rank_; }
    const FiniteGroup& group() const { return abstract_; }
    int order() const { return (int)elems_.size(); }
    const PermTrans& element(int i) const { return elems_[i]; }
    int index_of(const PermTrans& p) const {
        auto it = index_.find(p);
        return it == index_.end() ? -1 : it->second;
    }
    TorusPoint apply(int g, const TorusPoint& x) const { return elems_[g].apply(x); }

    std::vector<int> isotropy(const TorusPoint& x) const {
        std::vector<int> out;
        for (int g = 0; g < order(); ++g)
            if (apply(g, x) == x) out.push_back(g);
        return out;
    }

private:
    void init(const std::vector<PermTrans>& generators, std::size_t max_order = 40000) {
        PermTrans id = PermTrans::identity(rank_);
        elems_ = {id};
        index_[id] = 0;
        std::vector<int> genidx;
        for (std::size_t i = 0; i < elems_.size(); ++i) {
            for (const auto& s : generators) {
                PermTrans next = s.compose(elems_[i]);
                auto [it, fresh] = index_.emplace(next, (int)elems_.size());
                if (fresh) {
                    elems_.push_back(next);
                    if (elems_.size() > max_order)
                        throw std::invalid_argument("torus symmetry group exceeds the size bound");
                }
                if (i == 0) genidx.push_back(it->second);
            }
        }
        std::sort(genidx.begin(), genidx.end());
        genidx.erase(std::unique(genidx.begin(), genidx.end()), genidx.end());
        if (genidx.empty()) genidx.push_back(0);
        auto elems = elems_; // copy captured by the multiplication closure
        auto index = index_;
        abstract_ = FiniteGroup::from_function(
            (int)elems_.size(),
            [elems, index](int a, int b) { return index.at(elems[a].compose(elems[b])); }, 0,
            genidx);
    }

    int rank_;
    std::vector<PermTrans> elems_;
    std::map<PermTrans, int> index_;
    FiniteGroup abstract_;
};

struct TorusBlock {
    long long m = 1;
    long long e = 1;
    long long d = 1;
    int offset = 0; // first coordinate of the block
};

// T_s = prod_i (T_i)^{e_i} with its block structure; symmetries must map
// blocks onto blocks with the same invariants (m, e, d).
class StratifiedTorus {
public:
    StratifiedTorus(std::vector<TorusBlock> blocks, TorusGroup grp)
        : blocks_(std::move(blocks)), group_(std::move(grp)) {
        int off = 0;
        for (auto& b : blocks_) {
            b.offset = off;
            off += (int)b.e;
        }
        rank_ = off;
        if (group_.rank() != rank_) throw std::invalid_argument("group rank differs from the torus rank");
        for (int g = 0; g < group_.order(); ++g) {
            const auto& el = group_.element(g);
            for (std::size_t b = 0; b < blocks_.size(); ++b) {
                int target = -1;
                for (long long j = 0; j < blocks_[b].e; ++j) {
                    int image_coord = coord_block(find_image(el, blocks_[b].offset + (int)j));
                    if (target < 0) target = image_coord;
                    if (image_coord != target)
                        throw std::invalid_argument("symmetry tears block " + std::to_string(b) +
                                                    " apart");
                }
                if (blocks_[target].m != blocks_[b].m || blocks_[target].e != blocks_[b].e ||
                    blocks_[target].d != blocks_[b].d)
                    throw std::invalid_argument("symmetry maps block " + std::to_string(b) +
                                                " to a block with different invariants");
            }
        }
    }

    int rank() const { return rank_; }
    const std::vector<TorusBlock>& blocks() const { return blocks_; }
    const TorusGroup& group() const { return group_; }
    int coord_block(int coord) const {
        for (std::size_t b = 0; b < blocks_.size(); ++b)
            if (coord >= blocks_[b].offset && coord < blocks_[b].offset + blocks_[b].e)
                return (int)b;
        throw std::logic_error("coordinate outside all blocks");
    }

private:
    static int find_image(const PermTrans& el, int coord) {
        // coordinate i of the output reads from src[i]; the image of input
        // coordinate c is the i with src[i] = c
        for (std::size_t i = 0; i < el.src.size(); ++i)
            if (el.src[i] == coord) return (int)i;
        throw std::logic_error("not a permutation");
    }

    std::vector<TorusBlock> blocks_;
    TorusGroup group_;
    int rank_ = 0;
};

// All points with angles in (1/denominator)Z/Z and radial part from the
// given grid, in lexicographic order.
inline std::vector<TorusPoint> grid_sample(int rank, long long denominator,
                                           const std::vector<Rat>& radial_grid,
                                           std::size_t max_points = 200000) {
    std::vector<Rat> radials = radial_grid.empty() ? std::vector<Rat>{Rat(0)} : radial_grid;
    std::sort(radials.begin(), radials.end());
    radials.erase(std::unique(radials.begin(), radials.end()), radials.end());
    std::vector<Coord> axis;
    for (long long k = 0; k < denominator; ++k)
        for (const auto& r : radials) axis.push_back(Coord{Angle(k, denominator), r});
    std::sort(axis.begin(), axis.end());
    double size = 1;
    for (int i = 0; i < rank; ++i) {
        size *= (double)axis.size();
        if (size > (double)max_points)
            throw std::invalid_argument("sample grid exceeds the point bound");
    }
    std::vector<TorusPoint> out{{}};
    for (int i = 0; i < rank; ++i) {
        std::vector<TorusPoint> next;
        for (const auto& p : out)
            for (const auto& c : axis) {
                auto q = p;
                q.push_back(c);
                next.push_back(std::move(q));
            }
        out = std::move(next);
    }
    std::sort(out.begin(), out.end());
    return out;
}

// union of orbits of the seeds
inline std::vector<TorusPoint> orbit_sample(const TorusGroup& grp,
                                            const std::vector<TorusPoint>& seeds) {
    std::vector<TorusPoint> out;
    for (const auto& s : seeds)
        for (int g = 0; g < grp.order(); ++g) out.push_back(grp.apply(g, s));
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

inline void validate_sample_stable(const TorusGroup& grp, const std::vector<TorusPoint>& sample) {
    for (const auto& x : sample)
        for (int g = 0; g < grp.order(); ++g) {
            auto y = grp.apply(g, x);
            if (!std::binary_search(sample.begin(), sample.end(), y))
                throw std::invalid_argument("sample not group-stable at point " + point_str(x));
        }
}

// ---------------------------------------------------------------------------
// strata
// ---------------------------------------------------------------------------

struct Stratum {
    std::string isotropy_label;
    long long isotropy_order = 1;
    long long parameter_dim = 0;
    long long fiber_count = 1;
    long long sample_points = 0; // 0 for the combinatorial path
};

// dimension of the locus fixed by every element of the subgroup: coordinates
// modulo the equalities x_i = x[src[i]] + t_i, by union-find with offsets
inline long long fixed_locus_dimension(int rank, const std::vector<const PermTrans*>& elems) {
    std::vector<int> parent(rank);
    std::vector<Coord> offset(rank); // value relative to the root: x_i = x_root + offset_i
    std::iota(parent.begin(), parent.end(), 0);
    std::function<std::pair<int, Coord>(int)> find = [&](int i) -> std::pair<int, Coord> {
        if (parent[i] == i) return {i, Coord{}};
        auto [r, off] = find(parent[i]);
        parent[i] = r;
        offset[i] = offset[i] + off;
        return {r, offset[i]};
    };
    for (const auto* el : elems)
        for (int i = 0; i < rank; ++i) {
            int j = el->src[i];
            // x_i = x_j + t_i
            auto [ri, oi] = find(i);
            auto [rj, oj] = find(j);
            if (ri == rj) {
                if (!(oi == oj + el->t[i])) return -1; // inconsistent: empty locus
            } else {
                parent[rj] = ri;
                offset[rj] = oi - el->t[i] - oj;
            }
        }
    long long dim = 0;
    for (int i = 0; i < rank; ++i)
        if (find(i).first == i) ++dim;
    return dim;
}

// Strata of the torus under its symmetry group.  For the pure within-block
// permutation action of prod_i S_{e_i} the strata are coincidence patterns
// (one partition per block); otherwise they are computed from a stable
// sample, one stratum per conjugacy class of isotropy subgroups.
inline std::vector<Stratum> torus_strata(const StratifiedTorus& torus,
                                         const std::vector<TorusPoint>& sample = {},
                                         const Cocycle* twist = nullptr) {
    const auto& grp = torus.group();
    bool pure = true;
    for (int g = 0; g < grp.order() && pure; ++g)
        pure = grp.element(g).is_pure_permutation();
    bool full_symmetric = pure;
    if (pure) {
        long long expected = 1;
        for (const auto& b : torus.blocks())
            for (long long i = 2; i <= b.e; ++i) expected *= i;
        full_symmetric = (grp.order() == expected) && sample.empty() && twist == nullptr;
    }

    std::vector<Stratum> out;
    if (full_symmetric) {
        std::vector<int> esizes;
        for (const auto& b : torus.blocks()) esizes.push_back((int)b.e);
        for (const auto& pattern : all_partition_tuples(esizes)) {
            Stratum s;
            s.isotropy_label = tuple_str(pattern);
            s.parameter_dim = 0;
            s.fiber_count = 1;
            s.isotropy_order = 1;
            for (const auto& p : pattern) {
                s.parameter_dim += p.length();
                for (int part : p.parts()) {
                    long long fact = 1, irr = (long long)all_partitions(part).size();
                    for (int i = 2; i <= part; ++i) fact *= i;
                    s.isotropy_order *= fact;
                    s.fiber_count *= irr;
                }
            }
            out.push_back(std::move(s));
        }
        return out;
    }

    if (sample.empty()) throw std::invalid_argument("strata of a twisted action need a sample");
    validate_sample_stable(grp, sample);

    // orbit representatives
    std::map<TorusPoint, char> seen;
    struct ClassInfo {
        std::vector<int> iso;
        Stratum s;
    };
    std::vector<ClassInfo> classes;
    for (const auto& x : sample) {
        if (seen.count(x)) continue;
        TorusPoint least = x;
        std::vector<TorusPoint> orbit;
        for (int g = 0; g < grp.order(); ++g) {
            auto y = grp.apply(g, x);
            if (!seen.count(y)) orbit.push_back(y);
            if (y < least) least = y;
        }
        for (auto& y : orbit) seen[y] = 1;
        auto iso = grp.isotropy(least);
        // conjugate to an existing class?
        bool merged = false;
        for (auto& ci : classes) {
            if (ci.iso.size() != iso.size()) continue;
            for (int g = 0; g < grp.order() && !merged; ++g) {
                std::vector<int> conj;
                for (int h : iso) conj.push_back(grp.group().conjugate(g, h));
                std::sort(conj.begin(), conj.end());
                if (conj == ci.iso) merged = true;
            }
            if (merged) {
                ci.s.sample_points += 1;
                break;
            }
        }
        if (merged) continue;
        ClassInfo ci;
        ci.iso = iso;
        std::sort(ci.iso.begin(), ci.iso.end());
        ci.s.isotropy_order = (long long)iso.size();
        ci.s.isotropy_label = "H" + std::to_string(classes.size()) + "(order " +
                              std::to_string(iso.size()) + ")";
        std::vector<const PermTrans*> els;
        for (int h : iso) els.push_back(&grp.element(h));
        ci.s.parameter_dim = fixed_locus_dimension(torus.rank(), els);
        auto sub = make_subgroup(grp.group(), iso);
        if (twist) {
            Cocycle rk = twist->restrict_to(sub);
            ci.s.fiber_count = (long long)twisted_irreps(sub.group, rk).size();
        } else {
            ci.s.fiber_count = (long long)sub.group.conjugacy_classes().size();
        }
        ci.s.sample_points = 1;
        classes.push_back(std::move(ci));
    }
    for (auto& ci : classes) out.push_back(ci.s);
    return out;
}

} // namespace bq
