#pragma once
// Finite groups on elements {0, ..., n-1}.
//
// Three backends share one interface: an explicit multiplication table, a
// permutation group (elements materialized by closure from generators), or a
// caller-supplied multiplication function (used for crossed constructions
// such as central extensions).  Group axioms are validated at construction:
// identity and inverses always, associativity on all triples for small
// groups and on a deterministic sample above that.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

namespace bq {

namespace detail {
struct VecHash {
    std::size_t operator()(const std::vector<int>& v) const {
        std::size_t h = 1469598103934665603ull;
        for (int x : v) {
            h ^= (std::size_t)(x + 0x9e3779b9);
            h *= 1099511628211ull;
        }
        return h;
    }
};
} // namespace detail

inline std::vector<int> compose_perm(const std::vector<int>& a, const std::vector<int>& b) {
    // (a*b)(i) = a(b(i))
    std::vector<int> c(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[b[i]];
    return c;
}

inline std::vector<int> invert_perm(const std::vector<int>& a) {
    std::vector<int> c(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) c[a[i]] = (int)i;
    return c;
}

class FiniteGroup {
public:
    // Structure tag set by the named constructors for S_{d1} x ... x S_{dk}
    // acting on consecutive blocks of points; enables partition-labelled
    // character tables.
    struct SymmetricProduct {
        std::vector<int> degrees;
    };

    FiniteGroup() : n_(1), id_(0), inv_(1, 0) {}

    static FiniteGroup from_table(std::vector<std::vector<int>> table,
                                  std::vector<int> gens = {}) {
        FiniteGroup g;
        int n = (int)table.size();
        for (auto& row : table)
            if ((int)row.size() != n) throw std::invalid_argument("multiplication table not square");
        for (auto& row : table)
            for (int x : row)
                if (x < 0 || x >= n) throw std::invalid_argument("multiplication table entry out of range");
        g.n_ = n;
        auto tbl = std::make_shared<std::vector<std::vector<int>>>(std::move(table));
        g.mul_ = [tbl](int a, int b) { return (*tbl)[a][b]; };
        g.gens_ = gens.empty() ? default_gens(n) : std::move(gens);
        g.finish(/*assoc_check=*/true);
        return g;
    }

    static FiniteGroup from_permutations(const std::vector<std::vector<int>>& gen_perms,
                                         std::size_t max_order = 2000000) {
        if (gen_perms.empty()) return trivial();
        std::size_t npts = gen_perms[0].size();
        for (const auto& p : gen_perms) {
            if (p.size() != npts) throw std::invalid_argument("permutation degrees differ");
            std::vector<int> seen(npts, 0);
            for (int x : p) {
                if (x < 0 || x >= (int)npts || seen[x]++)
                    throw std::invalid_argument("not a permutation");
            }
        }
        std::vector<std::vector<int>> elems;
        std::unordered_map<std::vector<int>, int, detail::VecHash> index;
        std::vector<int> id(npts);
        std::iota(id.begin(), id.end(), 0);
        elems.push_back(id);
        index.emplace(id, 0);
        std::vector<int> gens;
        for (std::size_t i = 0; i < elems.size(); ++i) {
            for (const auto& s : gen_perms) {
                auto next = compose_perm(s, elems[i]);
                auto [it, fresh] = index.emplace(next, (int)elems.size());
                if (fresh) {
                    elems.push_back(std::move(next));
                    if (elems.size() > max_order)
                        throw std::invalid_argument("permutation group exceeds size bound");
                }
                if (i == 0) gens.push_back(it->second);
            }
        }
        return from_elements(std::move(elems), std::move(index), std::move(gens));
    }

    static FiniteGroup trivial() { return FiniteGroup(); }

    static FiniteGroup cyclic(int n) {
        std::vector<std::vector<int>> t(n, std::vector<int>(n));
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b) t[a][b] = (a + b) % n;
        return from_table(std::move(t), n > 1 ? std::vector<int>{1} : std::vector<int>{});
    }

    static FiniteGroup symmetric(int n) {
        if (n <= 0) throw std::invalid_argument("symmetric group degree must be positive");
        std::vector<std::vector<int>> gens;
        if (n >= 2) {
            std::vector<int> cycle(n), tr(n);
            for (int i = 0; i < n; ++i) cycle[i] = (i + 1) % n;
            std::iota(tr.begin(), tr.end(), 0);
            std::swap(tr[0], tr[1]);
            gens = {tr, cycle};
        } else {
            gens = {std::vector<int>{0}};
        }
        FiniteGroup g = from_permutations(gens);
        g.sym_tag_ = SymmetricProduct{{n}};
        return g;
    }

    // S_{d1} x ... x S_{dk} on consecutive blocks of points.
    static FiniteGroup symmetric_product(const std::vector<int>& degrees) {
        int total = std::accumulate(degrees.begin(), degrees.end(), 0);
        std::vector<std::vector<int>> gens;
        int off = 0;
        for (int d : degrees) {
            if (d >= 2) {
                std::vector<int> tr(total), cyc(total);
                std::iota(tr.begin(), tr.end(), 0);
                std::iota(cyc.begin(), cyc.end(), 0);
                std::swap(tr[off], tr[off + 1]);
                for (int i = 0; i < d; ++i) cyc[off + i] = off + (i + 1) % d;
                gens.push_back(tr);
                gens.push_back(cyc);
            }
            off += d;
        }
        if (gens.empty()) {
            std::vector<int> id(std::max(total, 1));
            std::iota(id.begin(), id.end(), 0);
            gens.push_back(id);
        }
        FiniteGroup g = from_permutations(gens);
        g.sym_tag_ = SymmetricProduct{degrees};
        return g;
    }

    static FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b) {
        int na = a.n_, nb = b.n_;
        FiniteGroup g;
        g.n_ = na * nb;
        FiniteGroup ac = a, bc = b;
        g.mul_ = [ac, bc, nb](int x, int y) {
            int xa = x / nb, xb = x % nb, ya = y / nb, yb = y % nb;
            return ac.mul(xa, ya) * nb + bc.mul(xb, yb);
        };
        g.gens_.clear();
        for (int s : a.gens_) g.gens_.push_back(s * nb + b.id_);
        for (int s : b.gens_) g.gens_.push_back(a.id_ * nb + s);
        g.id_hint_ = a.id_ * nb + b.id_;
        g.finish(/*assoc_check=*/false);
        if (a.sym_tag_ && b.sym_tag_) {
            SymmetricProduct t = *a.sym_tag_;
            t.degrees.insert(t.degrees.end(), b.sym_tag_->degrees.begin(),
                             b.sym_tag_->degrees.end());
            g.sym_tag_ = t;
        }
        return g;
    }

    // Group from an arbitrary total multiplication function.
    static FiniteGroup from_function(int n, std::function<int(int, int)> mul, int id,
                                     std::vector<int> gens) {
        FiniteGroup g;
        g.n_ = n;
        g.mul_ = std::move(mul);
        g.id_hint_ = id;
        g.gens_ = std::move(gens);
        g.finish(/*assoc_check=*/true);
        return g;
    }

    int order() const { return n_; }
    int identity() const { return id_; }
    int mul(int a, int b) const { return mul_(a, b); }
    int inverse(int a) const { return inv_[a]; }
    int conjugate(int g, int x) const { return mul(mul(g, x), inv_[g]); }
    const std::vector<int>& generators() const { return gens_; }
    const std::optional<SymmetricProduct>& symmetric_tag() const { return sym_tag_; }
    const std::vector<std::vector<int>>* permutations() const {
        return perms_.empty() ? nullptr : &perms_;
    }

    int power(int g, long long k) const {
        long long o = element_order(g);
        k %= o;
        if (k < 0) k += o;
        int acc = id_;
        for (long long i = 0; i < k; ++i) acc = mul(acc, g);
        return acc;
    }

    int element_order(int g) const {
        int x = g, o = 1;
        while (x != id_) {
            x = mul(x, g);
            ++o;
            if (o > n_) throw std::logic_error("element order exceeds group order");
        }
        return o;
    }

    long long exponent() const {
        long long e = 1;
        for (int g = 0; g < n_; ++g) e = std::lcm(e, (long long)element_order(g));
        return e;
    }

    bool is_abelian() const {
        for (int a : gens_)
            for (int b : gens_)
                if (mul(a, b) != mul(b, a)) return false;
        return true;
    }

    // Conjugacy classes, sorted by least member; the identity class comes first.
    const std::vector<std::vector<int>>& conjugacy_classes() const {
        if (classes_.empty()) {
            std::vector<int> cls(n_, -1);
            std::vector<std::vector<int>> classes;
            const std::vector<int>& conjugators = gens_.empty() ? all_elements() : gens_;
            for (int g = 0; g < n_; ++g) {
                if (cls[g] >= 0) continue;
                std::vector<int> orbit{g};
                cls[g] = (int)classes.size();
                for (std::size_t i = 0; i < orbit.size(); ++i) {
                    for (int s : conjugators) {
                        int h = conjugate(s, orbit[i]);
                        if (cls[h] < 0) {
                            cls[h] = (int)classes.size();
                            orbit.push_back(h);
                        }
                    }
                }
                std::sort(orbit.begin(), orbit.end());
                classes.push_back(std::move(orbit));
            }
            classes_ = std::move(classes);
            class_of_ = std::move(cls);
        }
        return classes_;
    }
    int class_of(int g) const {
        conjugacy_classes();
        return class_of_[g];
    }

    std::vector<int> closure(std::vector<int> seed) const {
        std::vector<char> in(n_, 0);
        std::vector<int> out;
        auto add = [&](int x) {
            if (!in[x]) {
                in[x] = 1;
                out.push_back(x);
            }
        };
        add(id_);
        for (int s : seed) add(s);
        for (std::size_t i = 0; i < out.size(); ++i)
            for (std::size_t j = 0; j < out.size(); ++j) {
                add(mul(out[i], out[j]));
                if (out.size() == (std::size_t)n_) break;
            }
        std::sort(out.begin(), out.end());
        return out;
    }

    bool is_subgroup(const std::vector<int>& elems) const {
        std::vector<char> in(n_, 0);
        for (int x : elems) in[x] = 1;
        if (!in[id_]) return false;
        for (int a : elems)
            for (int b : elems)
                if (!in[mul(a, b)]) return false;
        return true;
    }

    bool is_normal(const std::vector<int>& elems) const {
        std::vector<char> in(n_, 0);
        for (int x : elems) in[x] = 1;
        for (int g : gens_.empty() ? all_elements() : gens_)
            for (int x : elems)
                if (!in[conjugate(g, x)]) return false;
        return true;
    }

private:
    static std::vector<int> default_gens(int n) {
        std::vector<int> g(n);
        std::iota(g.begin(), g.end(), 0);
        return g;
    }

    static FiniteGroup from_elements(std::vector<std::vector<int>> elems,
                                     std::unordered_map<std::vector<int>, int, detail::VecHash> index,
                                     std::vector<int> gens) {
        FiniteGroup g;
        g.n_ = (int)elems.size();
        g.perms_ = std::move(elems);
        auto perms = std::make_shared<std::vector<std::vector<int>>>(g.perms_);
        auto idx = std::make_shared<std::unordered_map<std::vector<int>, int, detail::VecHash>>(
            std::move(index));
        g.mul_ = [perms, idx](int a, int b) {
            return idx->at(compose_perm((*perms)[a], (*perms)[b]));
        };
        std::sort(gens.begin(), gens.end());
        gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
        g.gens_ = std::move(gens);
        g.id_hint_ = 0;
        g.finish(/*assoc_check=*/false);
        return g;
    }

    std::vector<int> all_elements() const { return default_gens(n_); }

    void finish(bool assoc_check) {
        // identity
        if (id_hint_ >= 0) {
            id_ = id_hint_;
            if (mul_(id_, id_) != id_) throw std::invalid_argument("stated identity is not idempotent");
        } else {
            id_ = -1;
            for (int e = 0; e < n_ && id_ < 0; ++e) {
                bool ok = true;
                for (int x = 0; x < n_ && ok; ++x) ok = mul_(e, x) == x && mul_(x, e) == x;
                if (ok) id_ = e;
            }
            if (id_ < 0) throw std::invalid_argument("group has no identity element");
        }
        // inverses
        inv_.assign(n_, -1);
        for (int a = 0; a < n_; ++a) {
            for (int b = 0; b < n_; ++b) {
                if (mul_(a, b) == id_) {
                    if (mul_(b, a) != id_) throw std::invalid_argument("one-sided inverse found");
                    inv_[a] = b;
                    break;
                }
            }
            if (inv_[a] < 0) throw std::invalid_argument("element without inverse");
        }
        if (id_hint_ >= 0) {
            for (int x = 0; x < n_; ++x)
                if (mul_(id_, x) != x || mul_(x, id_) != x)
                    throw std::invalid_argument("stated identity fails");
        }
        if (assoc_check) {
            if (n_ <= 64) {
                for (int a = 0; a < n_; ++a)
                    for (int b = 0; b < n_; ++b)
                        for (int c = 0; c < n_; ++c)
                            if (mul_(mul_(a, b), c) != mul_(a, mul_(b, c)))
                                throw std::invalid_argument("associativity fails");
            } else {
                int stride = std::max(1, n_ / 17);
                for (int a = 0; a < n_; a += stride)
                    for (int b = 0; b < n_; b += stride)
                        for (int c = 0; c < n_; c += stride)
                            if (mul_(mul_(a, b), c) != mul_(a, mul_(b, c)))
                                throw std::invalid_argument("associativity fails (sampled)");
            }
        }
        if (gens_.empty()) gens_ = default_gens(n_);
    }

    int n_ = 1;
    std::function<int(int, int)> mul_ = [](int, int) { return 0; };
    int id_ = 0;
    int id_hint_ = -1;
    std::vector<int> inv_;
    std::vector<int> gens_;
    std::vector<std::vector<int>> perms_;
    std::optional<SymmetricProduct> sym_tag_;
    mutable std::vector<std::vector<int>> classes_;
    mutable std::vector<int> class_of_;
};

// A subgroup materialized as its own FiniteGroup plus the embedding.
struct EmbeddedGroup {
    FiniteGroup group;
    std::vector<int> to_parent;              // subgroup index -> parent index
    std::unordered_map<int, int> from_parent; // parent index -> subgroup index

    int pull(int parent_elem) const {
        auto it = from_parent.find(parent_elem);
        if (it == from_parent.end()) throw std::invalid_argument("element not in subgroup");
        return it->second;
    }
};

inline EmbeddedGroup make_subgroup(const FiniteGroup& g, std::vector<int> elems) {
    std::sort(elems.begin(), elems.end());
    elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
    if (!g.is_subgroup(elems)) throw std::invalid_argument("element set is not closed under multiplication");
    int k = (int)elems.size();
    std::unordered_map<int, int> from;
    for (int i = 0; i < k; ++i) from[elems[i]] = i;
    std::vector<std::vector<int>> table(k, std::vector<int>(k));
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) table[i][j] = from.at(g.mul(elems[i], elems[j]));
    EmbeddedGroup out;
    out.group = FiniteGroup::from_table(std::move(table));
    out.to_parent = std::move(elems);
    out.from_parent = std::move(from);
    return out;
}

} // namespace bq
