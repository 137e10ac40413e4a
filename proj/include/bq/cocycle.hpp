#pragma once
// 2-cocycles on finite groups with values in Q/Z (written additively; the
// value k/N stands for the root of unity exp(2*pi*i*k/N)).  All cocycles are
// kept normalized: c(e,g) = c(g,e) = 0.

#include "bq/group.hpp"
#include "bq/rational.hpp"

#include <optional>

namespace bq {

class Cocycle {
public:
    Cocycle() = default;
    explicit Cocycle(int n) : n_(n), table_(n * n) {}

    static Cocycle trivial(const FiniteGroup& g) { return Cocycle(g.order()); }

    int group_order() const { return n_; }
    const Angle& operator()(int g, int h) const { return table_[g * n_ + h]; }
    void set(int g, int h, const Angle& v) { table_[g * n_ + h] = v; }

    bool is_trivial() const {
        return std::all_of(table_.begin(), table_.end(), [](const Angle& a) { return a.is_zero(); });
    }

    // lcm of the orders of all values; the cocycle takes values in mu_M.
    long long value_group_order() const {
        long long m = 1;
        for (const auto& a : table_) m = std::lcm(m, a.order());
        return m;
    }

    Cocycle restrict_to(const EmbeddedGroup& sub) const {
        const int k = sub.group.order();
        Cocycle out(k);
        for (int a = 0; a < k; ++a)
            for (int b = 0; b < k; ++b)
                out.set(a, b, (*this)(sub.to_parent[a], sub.to_parent[b]));
        return out;
    }

    // Pullback along a surjection pi: G -> Q given elementwise.
    static Cocycle inflate(const std::vector<int>& pi, const Cocycle& on_quotient, int n) {
        Cocycle out(n);
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b) out.set(a, b, on_quotient(pi[a], pi[b]));
        return out;
    }

    // Coboundary of a 1-cochain c: (dc)(g,h) = c(g) + c(h) - c(gh).
    static Cocycle coboundary(const FiniteGroup& g, const std::vector<Angle>& c) {
        Cocycle out(g.order());
        for (int a = 0; a < g.order(); ++a)
            for (int b = 0; b < g.order(); ++b)
                out.set(a, b, c[a] + c[b] - c[g.mul(a, b)]);
        return out;
    }

    Cocycle operator-(const Cocycle& o) const {
        Cocycle out(n_);
        for (int i = 0; i < n_ * n_; ++i) out.table_[i] = table_[i] - o.table_[i];
        return out;
    }

    bool operator==(const Cocycle& o) const { return n_ == o.n_ && table_ == o.table_; }

private:
    int n_ = 0;
    std::vector<Angle> table_;
};

// Throws with the offending pair/triple if c is not a normalized 2-cocycle.
inline void validate_cocycle(const FiniteGroup& g, const Cocycle& c) {
    const int n = g.order();
    if (c.group_order() != n) throw std::invalid_argument("cocycle table size does not match group");
    for (int x = 0; x < n; ++x) {
        if (!c(g.identity(), x).is_zero() || !c(x, g.identity()).is_zero())
            throw std::invalid_argument("cocycle not normalized at element " + std::to_string(x));
    }
    auto check = [&](int a, int b, int x) {
        Angle lhs = c(a, b) + c(g.mul(a, b), x);
        Angle rhs = c(b, x) + c(a, g.mul(b, x));
        if (lhs != rhs)
            throw std::invalid_argument("cocycle identity fails at triple (" + std::to_string(a) +
                                        "," + std::to_string(b) + "," + std::to_string(x) + ")");
    };
    if (n <= 100) {
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
                for (int x = 0; x < n; ++x) check(a, b, x);
    } else {
        int stride = std::max(1, n / 23);
        for (int a = 0; a < n; a += stride)
            for (int b = 0; b < n; b += stride)
                for (int x = 0; x < n; x += stride) check(a, b, x);
    }
}

// Bilinear form on an abelian group presented as a product of cyclic groups:
// kappa(x, y) = sum_{i,j} x_i y_j B_ij with x, y canonical exponent vectors.
// The form is a cocycle exactly when each entry B_ij is killed by both
// cyclic orders (otherwise the exponent wraparound breaks the identity), so
// that is enforced here.
inline Cocycle cocycle_from_bilinear(const std::vector<int>& cyclic_orders,
                                     const std::vector<std::vector<Angle>>& form,
                                     const std::vector<std::vector<int>>& exponents) {
    const int n = (int)exponents.size();
    const int k = (int)cyclic_orders.size();
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) {
            long long g = std::gcd((long long)cyclic_orders[i], (long long)cyclic_orders[j]);
            if (!(form[i][j] * g).is_zero())
                throw std::invalid_argument(
                    "bilinear cocycle entry (" + std::to_string(i) + "," + std::to_string(j) +
                    ") is not killed by the cyclic orders");
        }
    Cocycle out(n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            Angle v;
            for (int i = 0; i < k; ++i)
                for (int j = 0; j < k; ++j)
                    v = v + form[i][j] * (long long)(exponents[a][i] * exponents[b][j]);
            out.set(a, b, v);
        }
    return out;
}

// Searches for a 1-cochain c with c1 - c2 = dc.  If the difference d takes
// values in mu_N and equals a coboundary over C^x, then summing the cochain
// along the cyclic group of any element shows ord(g)*c(g) lies in mu_N, so a
// witness exists with values in mu_{N * exp(G)}.  Generator values are
// enumerated over that group and propagated through the Cayley graph, then
// verified on all pairs.
inline std::optional<std::vector<Angle>> cocycle_cohomologous(const FiniteGroup& g,
                                                              const Cocycle& c1,
                                                              const Cocycle& c2) {
    if (c1.group_order() != g.order() || c2.group_order() != g.order())
        throw std::invalid_argument("cocycles live on different groups");
    const int n = g.order();
    Cocycle d = c1 - c2;
    long long big = d.value_group_order() * g.exponent();

    std::vector<int> gens = g.generators();
    // trim generators to an irredundant list to keep the enumeration small
    {
        std::vector<int> trimmed;
        for (int s : gens) {
            if ((int)g.closure(trimmed).size() == n) break;
            auto with = trimmed;
            with.push_back(s);
            if (g.closure(with).size() > g.closure(trimmed).size()) trimmed.push_back(s);
        }
        if ((int)g.closure(trimmed).size() == n) gens = trimmed;
    }

    long long total = 1;
    for (std::size_t i = 0; i < gens.size(); ++i) {
        total *= big;
        if (total > 2000000) throw std::invalid_argument("cohomology search space too large");
    }

    std::vector<long long> choice(gens.size(), 0);
    std::vector<Angle> c(n);
    std::vector<char> known(n, 0);
    for (long long iter = 0; iter < total; ++iter) {
        long long t = iter;
        std::fill(known.begin(), known.end(), 0);
        c.assign(n, Angle());
        known[g.identity()] = 1;
        bool ok = true;
        for (std::size_t i = 0; i < gens.size(); ++i) {
            long long v = t % big;
            t /= big;
            Angle a(v, big);
            if (known[gens[i]]) {
                if (c[gens[i]] != a) ok = false;
            } else {
                c[gens[i]] = a;
                known[gens[i]] = 1;
            }
        }
        if (!ok) continue;
        // propagate: c(s*x) = c(s) + c(x) - d(s,x)
        std::vector<int> frontier;
        for (int x = 0; x < n; ++x)
            if (known[x]) frontier.push_back(x);
        for (std::size_t fi = 0; fi < frontier.size() && ok; ++fi) {
            for (int s : gens) {
                int y = g.mul(s, frontier[fi]);
                Angle v = c[s] + c[frontier[fi]] - d(s, frontier[fi]);
                if (known[y]) {
                    if (c[y] != v) {
                        ok = false;
                        break;
                    }
                } else {
                    c[y] = v;
                    known[y] = 1;
                    frontier.push_back(y);
                }
            }
        }
        if (!ok || !std::all_of(known.begin(), known.end(), [](char k) { return k; })) continue;
        for (int a = 0; a < n && ok; ++a)
            for (int b = 0; b < n && ok; ++b)
                if (d(a, b) != c[a] + c[b] - c[g.mul(a, b)]) ok = false;
        if (ok) return c;
    }
    return std::nullopt;
}

// Antisymmetrization kappa(g,h) - kappa(h,g).  On an abelian group this is a
// bicharacter; the map g -> pairing(g, .) sends each g to a character of the
// group, the twisting character by which conjugation by g acts on the
// twisted group algebra.
inline Angle commutator_pairing(const Cocycle& c, int g, int h) { return c(g, h) - c(h, g); }

} // namespace bq
