#pragma once
// Exact character tables of finite groups.
//
// Three construction paths, chosen by structure:
//   * products of symmetric groups: Murnaghan-Nakayama rule, rows labelled by
//     tuples of partitions (the convention is chi^{(n)} = trivial and
//     chi^{(1^n)} = sign);
//   * abelian groups: enumeration of homomorphisms into Q/Z;
//   * everything else: the Dixon-Schneider class-matrix method over a prime
//     field F_p with p = 1 mod exp(G), with exact lifting of the values to
//     cyclotomic integers.
// All returned values are exact cyclotomics; row orthogonality and the
// degree identity are verified before a table is returned.

#include "bq/cocycle.hpp"
#include "bq/cyclotomic.hpp"
#include "bq/group.hpp"
#include "bq/partition.hpp"

#include <cstdlib>
#include <map>

namespace bq {

inline long long max_group_order() {
    if (const char* env = std::getenv("BQ_MAX_GROUP_ORDER")) {
        long long v = std::atoll(env);
        if (v > 0) return v;
    }
    return 5040;
}

struct CharacterTable {
    long long group_order = 1;
    std::vector<int> class_reps;
    std::vector<long long> class_sizes;
    std::vector<int> class_of; // element index -> class index
    std::vector<std::string> labels;
    std::vector<std::vector<Partition>> partition_labels; // nonempty iff symmetric product
    std::vector<std::vector<Cyc>> rows;                   // rows[r][class]
    std::vector<long long> dims;

    int num_classes() const { return (int)class_reps.size(); }
    int num_rows() const { return (int)rows.size(); }
    const Cyc& value(int row, int element) const { return rows[row][class_of[element]]; }

    Rat inner(int r1, int r2) const {
        Cyc s;
        for (int c = 0; c < num_classes(); ++c)
            s += rows[r1][c] * rows[r2][c].conjugate() * Rat(class_sizes[c]);
        Cyc avg = s * Rat(1, group_order);
        if (!avg.is_rational())
            throw std::logic_error("character inner product is not rational");
        return avg.rational_value();
    }
};

inline void validate_character_table(const CharacterTable& t) {
    if (t.num_rows() != t.num_classes())
        throw std::logic_error("character table is not square");
    long long sq = 0;
    for (long long d : t.dims) sq += d * d;
    if (sq != t.group_order)
        throw std::logic_error("sum of squared degrees differs from the group order");
    for (int i = 0; i < t.num_rows(); ++i)
        for (int j = i; j < t.num_rows(); ++j) {
            Rat ip = t.inner(i, j);
            if (ip != Rat(i == j ? 1 : 0))
                throw std::logic_error("character rows " + std::to_string(i) + "," +
                                       std::to_string(j) + " fail orthogonality");
        }
}

// ---------------------------------------------------------------------------
// Murnaghan-Nakayama
// ---------------------------------------------------------------------------

namespace detail {

// chi^lambda at cycle type mu, by border-strip removal on beta-numbers.
inline long long mn_value(const std::vector<int>& lambda, const std::vector<int>& mu,
                          std::map<std::pair<std::vector<int>, std::vector<int>>, long long>& memo) {
    if (lambda.empty() && mu.empty()) return 1;
    auto key = std::make_pair(lambda, mu);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;

    int m = mu[0];
    std::vector<int> rest(mu.begin() + 1, mu.end());
    int len = (int)lambda.size();
    std::vector<int> beta(len);
    for (int i = 0; i < len; ++i) beta[i] = lambda[i] + (len - 1 - i);

    long long total = 0;
    for (int i = 0; i < len; ++i) {
        int b = beta[i];
        if (b < m) continue;
        int target = b - m;
        bool occupied = false;
        int height = 0;
        for (int j = 0; j < len; ++j) {
            if (beta[j] == target) occupied = true;
            if (beta[j] > target && beta[j] < b) ++height;
        }
        if (occupied) continue;
        std::vector<int> nb = beta;
        nb[i] = target;
        std::sort(nb.begin(), nb.end(), std::greater<int>());
        int L = (int)nb.size();
        std::vector<int> nl;
        for (int j = 0; j < L; ++j) {
            int part = nb[j] - (L - 1 - j);
            if (part > 0) nl.push_back(part);
        }
        long long sub = mn_value(nl, rest, memo);
        total += (height % 2 == 0) ? sub : -sub;
    }
    memo[key] = total;
    return total;
}

inline std::vector<int> cycle_type_in_block(const std::vector<int>& perm, int off, int d) {
    std::vector<char> seen(d, 0);
    std::vector<int> type;
    for (int i = 0; i < d; ++i) {
        if (seen[i]) continue;
        int len = 0, j = i;
        while (!seen[j]) {
            seen[j] = 1;
            j = perm[off + j] - off;
            ++len;
        }
        type.push_back(len);
    }
    std::sort(type.begin(), type.end(), std::greater<int>());
    return type;
}

} // namespace detail

inline long long murnaghan_nakayama(const Partition& lambda, const Partition& mu) {
    if (lambda.size() != mu.size())
        throw std::invalid_argument("partition sizes differ in character evaluation");
    static thread_local std::map<std::pair<std::vector<int>, std::vector<int>>, long long> memo;
    return detail::mn_value(lambda.parts(), mu.parts(), memo);
}

namespace detail {

inline CharacterTable table_symmetric_product(const FiniteGroup& g) {
    const auto& tag = *g.symmetric_tag();
    const auto* perms = g.permutations();
    if (!perms) throw std::logic_error("symmetric product group lost its permutations");

    CharacterTable t;
    t.group_order = g.order();
    const auto& classes = g.conjugacy_classes();
    t.class_of.assign(g.order(), -1);
    std::vector<std::vector<Partition>> class_types;
    for (const auto& cls : classes) {
        t.class_reps.push_back(cls[0]);
        t.class_sizes.push_back((long long)cls.size());
        for (int x : cls) t.class_of[x] = (int)t.class_reps.size() - 1;
        std::vector<Partition> type;
        int off = 0;
        for (int d : tag.degrees) {
            type.emplace_back(cycle_type_in_block((*perms)[cls[0]], off, d));
            off += d;
        }
        class_types.push_back(std::move(type));
    }

    for (const auto& tuple : all_partition_tuples(tag.degrees)) {
        std::vector<Cyc> row;
        for (const auto& type : class_types) {
            long long v = 1;
            for (std::size_t b = 0; b < tuple.size(); ++b)
                v *= murnaghan_nakayama(tuple[b], type[b]);
            row.emplace_back(Rat(v));
        }
        t.dims.push_back(row[t.class_of[g.identity()]].rational_value().numerator());
        t.labels.push_back(tuple_str(tuple));
        t.partition_labels.push_back(tuple);
        t.rows.push_back(std::move(row));
    }
    return t;
}

inline CharacterTable table_abelian(const FiniteGroup& g) {
    const int n = g.order();
    // irredundant generating list, largest orders first
    std::vector<int> by_order(n);
    std::iota(by_order.begin(), by_order.end(), 0);
    std::sort(by_order.begin(), by_order.end(),
              [&](int a, int b) { return g.element_order(a) > g.element_order(b); });
    std::vector<int> gens;
    std::vector<int> span{g.identity()};
    for (int x : by_order) {
        if ((int)span.size() == n) break;
        if (std::binary_search(span.begin(), span.end(), x)) continue;
        gens.push_back(x);
        span = g.closure(gens);
    }

    long long total = 1;
    for (int s : gens) total *= g.element_order(s);
    if (total > 1000000) throw std::invalid_argument("abelian character enumeration too large");

    std::vector<std::vector<Angle>> chars;
    std::vector<Angle> c(n);
    std::vector<char> known(n, 0);
    for (long long iter = 0; iter < total; ++iter) {
        long long t = iter;
        std::fill(known.begin(), known.end(), 0);
        c.assign(n, Angle());
        known[g.identity()] = 1;
        bool ok = true;
        for (int s : gens) {
            long long o = g.element_order(s);
            long long v = t % o;
            t /= o;
            Angle a(v, o);
            if (known[s]) {
                ok = ok && c[s] == a;
            } else {
                c[s] = a;
                known[s] = 1;
            }
        }
        if (!ok) continue;
        std::vector<int> frontier;
        for (int x = 0; x < n; ++x)
            if (known[x]) frontier.push_back(x);
        for (std::size_t fi = 0; fi < frontier.size() && ok; ++fi)
            for (int s : gens) {
                int y = g.mul(s, frontier[fi]);
                Angle v = c[s] + c[frontier[fi]];
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
        if (ok) chars.push_back(c);
    }
    std::sort(chars.begin(), chars.end(), [](const auto& a, const auto& b) {
        for (std::size_t i = 0; i < a.size(); ++i)
            if (a[i] != b[i]) return a[i] < b[i];
        return false;
    });
    chars.erase(std::unique(chars.begin(), chars.end()), chars.end());
    if ((int)chars.size() != n)
        throw std::logic_error("abelian group yielded " + std::to_string(chars.size()) +
                               " characters instead of " + std::to_string(n));

    CharacterTable t;
    t.group_order = n;
    const auto& classes = g.conjugacy_classes();
    t.class_of.assign(n, -1);
    for (const auto& cls : classes) {
        t.class_reps.push_back(cls[0]);
        t.class_sizes.push_back((long long)cls.size());
        for (int x : cls) t.class_of[x] = (int)t.class_reps.size() - 1;
    }
    for (std::size_t i = 0; i < chars.size(); ++i) {
        std::vector<Cyc> row;
        for (int rep : t.class_reps) row.push_back(Cyc::root_of_unity(chars[i][rep]));
        t.labels.push_back("chi" + std::to_string(i));
        t.dims.push_back(1);
        t.rows.push_back(std::move(row));
    }
    return t;
}

// ---- F_p linear algebra for the Dixon-Schneider path ----

inline long long powmod(long long b, long long e, long long p) {
    long long r = 1;
    b %= p;
    while (e > 0) {
        if (e & 1) r = r * b % p;
        b = b * b % p;
        e >>= 1;
    }
    return r;
}
inline long long invmod(long long a, long long p) { return powmod((a % p + p) % p, p - 2, p); }

using FpMat = std::vector<std::vector<long long>>;

// reduced row echelon form in place; returns pivot columns
inline std::vector<int> rref(FpMat& m, long long p) {
    std::vector<int> pivots;
    int rows = (int)m.size();
    if (rows == 0) return pivots;
    int cols = (int)m[0].size();
    int rank = 0;
    for (int c = 0; c < cols && rank < rows; ++c) {
        int pr = -1;
        for (int r = rank; r < rows; ++r)
            if (m[r][c] % p != 0) {
                pr = r;
                break;
            }
        if (pr < 0) continue;
        std::swap(m[rank], m[pr]);
        long long inv = invmod(m[rank][c], p);
        for (int cc = 0; cc < cols; ++cc) m[rank][cc] = m[rank][cc] * inv % p;
        for (int r = 0; r < rows; ++r) {
            if (r == rank || m[r][c] == 0) continue;
            long long f = m[r][c];
            for (int cc = 0; cc < cols; ++cc)
                m[r][cc] = ((m[r][cc] - f * m[rank][cc]) % p + p) % p;
        }
        pivots.push_back(c);
        ++rank;
    }
    m.resize(rank);
    return pivots;
}

// nullspace basis of a square matrix over F_p
inline FpMat nullspace(FpMat a, long long p) {
    int n = (int)a.size();
    auto pivots = rref(a, p);
    std::vector<char> is_pivot(n, 0);
    for (int c : pivots) is_pivot[c] = 1;
    FpMat basis;
    for (int c = 0; c < n; ++c) {
        if (is_pivot[c]) continue;
        std::vector<long long> v(n, 0);
        v[c] = 1;
        for (std::size_t r = 0; r < pivots.size(); ++r)
            v[pivots[r]] = (p - a[r][c]) % p;
        basis.push_back(std::move(v));
    }
    return basis;
}

// characteristic polynomial via Hessenberg reduction, low coefficient first
inline std::vector<long long> char_poly(FpMat a, long long p) {
    int n = (int)a.size();
    // similarity reduction to upper Hessenberg
    for (int j = 0; j < n - 2; ++j) {
        int piv = -1;
        for (int i = j + 1; i < n; ++i)
            if (a[i][j] != 0) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        if (piv != j + 1) {
            std::swap(a[piv], a[j + 1]);
            for (int r = 0; r < n; ++r) std::swap(a[r][piv], a[r][j + 1]);
        }
        long long inv = invmod(a[j + 1][j], p);
        for (int i = j + 2; i < n; ++i) {
            if (a[i][j] == 0) continue;
            long long f = a[i][j] * inv % p;
            for (int c = 0; c < n; ++c) a[i][c] = ((a[i][c] - f * a[j + 1][c]) % p + p) % p;
            for (int r = 0; r < n; ++r) a[r][j + 1] = (a[r][j + 1] + f * a[r][i]) % p;
        }
    }
    // p_m recurrence for Hessenberg matrices
    std::vector<std::vector<long long>> polys(n + 1);
    polys[0] = {1};
    for (int m = 1; m <= n; ++m) {
        std::vector<long long> cur(m + 1, 0);
        // (x - a[m-1][m-1]) * polys[m-1]
        for (std::size_t i = 0; i < polys[m - 1].size(); ++i) {
            cur[i + 1] = (cur[i + 1] + polys[m - 1][i]) % p;
            cur[i] = ((cur[i] - a[m - 1][m - 1] * polys[m - 1][i]) % p + p) % p;
        }
        long long prod = 1;
        for (int j = 1; j < m; ++j) {
            prod = prod * a[m - j][m - j - 1] % p;
            if (prod == 0) break;
            long long coef = a[m - 1 - j][m - 1] * prod % p;
            if (coef == 0) continue;
            for (std::size_t i = 0; i < polys[m - 1 - j].size(); ++i)
                cur[i] = ((cur[i] - coef * polys[m - 1 - j][i]) % p + p) % p;
        }
        polys[m] = std::move(cur);
    }
    return polys[n];
}

inline std::vector<long long> poly_roots(const std::vector<long long>& poly, long long p) {
    std::vector<long long> roots;
    for (long long x = 0; x < p; ++x) {
        long long v = 0;
        for (auto it = poly.rbegin(); it != poly.rend(); ++it) v = (v * x + *it) % p;
        if (v == 0) roots.push_back(x);
    }
    return roots;
}

inline CharacterTable table_dixon(const FiniteGroup& g) {
    const long long n = g.order();
    const auto& classes = g.conjugacy_classes();
    const int r = (int)classes.size();

    CharacterTable t;
    t.group_order = n;
    t.class_of.assign((std::size_t)n, -1);
    for (const auto& cls : classes) {
        t.class_reps.push_back(cls[0]);
        t.class_sizes.push_back((long long)cls.size());
        for (int x : cls) t.class_of[x] = (int)t.class_reps.size() - 1;
    }
    const int id_class = t.class_of[g.identity()];

    long long e = g.exponent();
    long long sqrt_n = 1;
    while ((sqrt_n + 1) * (sqrt_n + 1) <= n) ++sqrt_n;
    long long p = e + 1;
    auto is_prime = [](long long x) {
        if (x < 2) return false;
        for (long long d = 2; d * d <= x; ++d)
            if (x % d == 0) return false;
        return true;
    };
    while (!(is_prime(p) && p > 2 * sqrt_n && p > 2 * r)) p += e;

    // class sum structure constants: a[i][j][k] with c_i c_j = sum_k a_ijk c_k
    std::vector<FpMat> mats(r, FpMat(r, std::vector<long long>(r, 0)));
    for (int k = 0; k < r; ++k) {
        int zk = t.class_reps[k];
        for (int i = 0; i < r; ++i)
            for (int x : classes[i]) {
                int j = t.class_of[g.mul(g.inverse(x), zk)];
                // mats[i] acts on the class-sum basis: output coefficient on
                // c_k from input c_j
                mats[i][k][j] += 1;
            }
    }
    for (auto& m : mats)
        for (auto& row : m)
            for (auto& v : row) v %= p;

    // split F_p^r into common eigenspaces of the class matrices
    struct Space {
        FpMat basis; // rows are vectors in F_p^r, reduced echelon
        std::vector<int> pivots;
    };
    Space start;
    start.basis = FpMat(r, std::vector<long long>(r, 0));
    for (int i = 0; i < r; ++i) start.basis[i][i] = 1;
    start.pivots.resize(r);
    std::iota(start.pivots.begin(), start.pivots.end(), 0);
    std::vector<Space> spaces{start};

    for (int i = 0; i < r; ++i) {
        if (i == id_class) continue;
        std::vector<Space> next;
        for (auto& sp : spaces) {
            int k = (int)sp.basis.size();
            if (k == 1) {
                next.push_back(std::move(sp));
                continue;
            }
            // action of mats[i] on the subspace, in subspace coordinates
            FpMat action(k, std::vector<long long>(k, 0));
            for (int bcol = 0; bcol < k; ++bcol) {
                std::vector<long long> w(r, 0);
                for (int row = 0; row < r; ++row) {
                    long long acc = 0;
                    for (int c = 0; c < r; ++c) acc = (acc + mats[i][row][c] * sp.basis[bcol][c]) % p;
                    w[row] = acc;
                }
                // express w in the echelon basis via pivot columns
                for (int b = 0; b < k; ++b) {
                    long long coef = w[sp.pivots[b]] % p;
                    action[b][bcol] = coef;
                    if (coef == 0) continue;
                    for (int c = 0; c < r; ++c)
                        w[c] = ((w[c] - coef * sp.basis[b][c]) % p + p) % p;
                }
                for (int c = 0; c < r; ++c)
                    if (w[c] % p != 0) throw std::logic_error("class matrix does not preserve subspace");
            }
            auto roots = poly_roots(char_poly(action, p), p);
            if (roots.size() <= 1) {
                next.push_back(std::move(sp));
                continue;
            }
            for (long long lam : roots) {
                FpMat shifted = action;
                for (int d = 0; d < k; ++d) shifted[d][d] = ((shifted[d][d] - lam) % p + p) % p;
                FpMat null = nullspace(shifted, p);
                if (null.empty()) continue;
                Space child;
                for (auto& coords : null) {
                    std::vector<long long> v(r, 0);
                    for (int b = 0; b < k; ++b)
                        for (int c = 0; c < r; ++c) v[c] = (v[c] + coords[b] * sp.basis[b][c]) % p;
                    child.basis.push_back(std::move(v));
                }
                child.pivots = rref(child.basis, p);
                next.push_back(std::move(child));
            }
        }
        spaces = std::move(next);
    }
    if ((int)spaces.size() != r)
        throw std::logic_error("class matrix splitting produced " + std::to_string(spaces.size()) +
                               " spaces for " + std::to_string(r) + " classes");

    // primitive e-th root of unity mod p
    std::vector<long long> prime_divs;
    for (long long q = 2, ee = e; q <= ee; ++q)
        if (ee % q == 0) {
            prime_divs.push_back(q);
            while (ee % q == 0) ee /= q;
        }
    long long theta = 0;
    for (long long cand = 2; cand < p && theta == 0; ++cand) {
        long long u = powmod(cand, (p - 1) / e, p);
        bool primitive = true;
        for (long long q : prime_divs)
            if (powmod(u, e / q, p) == 1) primitive = false;
        if (primitive) theta = u;
    }
    if (theta == 0 && e > 1) throw std::logic_error("no primitive root found");
    if (e == 1) theta = 1;

    // power-map classes and element orders per class
    std::vector<int> ords(r);
    std::vector<std::vector<int>> power_class(r);
    for (int j = 0; j < r; ++j) {
        int rep = t.class_reps[j];
        ords[j] = g.element_order(rep);
        int x = g.identity();
        for (int k = 0; k < ords[j]; ++k) {
            power_class[j].push_back(t.class_of[x]);
            x = g.mul(x, rep);
        }
    }

    struct RowTmp {
        long long dim;
        std::vector<Cyc> vals;
    };
    std::vector<RowTmp> rows;
    for (auto& sp : spaces) {
        const auto& v = sp.basis[0];
        long long v0 = v[id_class] % p;
        if (v0 == 0) throw std::logic_error("eigenvector vanishes on the identity class");
        long long inv0 = invmod(v0, p);
        // vprime[j] = chi(g_j^{-1}) / chi(1) mod p
        std::vector<long long> vprime(r);
        for (int j = 0; j < r; ++j) vprime[j] = v[j] * inv0 % p;
        // inverse-class map
        std::vector<int> inv_class(r);
        for (int j = 0; j < r; ++j) inv_class[j] = t.class_of[g.inverse(t.class_reps[j])];
        long long denom = 0;
        for (int j = 0; j < r; ++j)
            denom = (denom + t.class_sizes[j] % p * vprime[j] % p * vprime[inv_class[j]]) % p;
        long long d2 = n % p * invmod(denom, p) % p;
        long long dim = 0;
        for (long long d = 1; d <= sqrt_n; ++d)
            if (d * d % p == d2) {
                dim = d;
                break;
            }
        if (dim == 0) throw std::logic_error("no valid degree for eigenvector");
        // chi(g_j) mod p
        std::vector<long long> chi_mod(r);
        for (int j = 0; j < r; ++j) chi_mod[j] = dim % p * vprime[inv_class[j]] % p;

        std::vector<Cyc> vals(r);
        for (int j = 0; j < r; ++j) {
            long long m = ords[j];
            long long theta_m = powmod(theta, e / m, p);
            long long inv_m = invmod(m % p, p);
            Cyc val;
            for (long long tt = 0; tt < m; ++tt) {
                long long c = 0;
                for (long long k = 0; k < m; ++k)
                    c = (c + chi_mod[power_class[j][k]] * powmod(theta_m, ((m - tt) * k) % m, p)) % p;
                c = c * inv_m % p;
                if (c > 2 * sqrt_n)
                    throw std::logic_error("cyclotomic multiplicity out of range in lifting");
                if (c != 0) val += Cyc(Rat(c)) * Cyc::zeta(tt, m);
            }
            vals[j] = std::move(val);
        }
        rows.push_back({dim, std::move(vals)});
    }
    std::sort(rows.begin(), rows.end(), [](const RowTmp& a, const RowTmp& b) {
        if (a.dim != b.dim) return a.dim < b.dim;
        for (std::size_t i = 0; i < a.vals.size(); ++i) {
            std::string sa = a.vals[i].str(), sb = b.vals[i].str();
            if (sa != sb) return sa < sb;
        }
        return false;
    });
    for (std::size_t i = 0; i < rows.size(); ++i) {
        t.labels.push_back("X" + std::to_string(i));
        t.dims.push_back(rows[i].dim);
        t.rows.push_back(std::move(rows[i].vals));
    }
    return t;
}

} // namespace detail

// Dixon-Schneider on any group; exposed for differential testing against the
// structured constructions.
inline CharacterTable character_table_dixon(const FiniteGroup& g) {
    if (g.order() > max_group_order())
        throw std::invalid_argument("group order " + std::to_string(g.order()) +
                                    " exceeds the character table bound");
    auto t = detail::table_dixon(g);
    validate_character_table(t);
    return t;
}

inline CharacterTable character_table(const FiniteGroup& g) {
    if (g.order() > max_group_order())
        throw std::invalid_argument("group order " + std::to_string(g.order()) +
                                    " exceeds the character table bound");
    CharacterTable t;
    if (g.symmetric_tag())
        t = detail::table_symmetric_product(g);
    else if (g.is_abelian())
        t = detail::table_abelian(g);
    else
        t = detail::table_dixon(g);
    validate_character_table(t);
    return t;
}

} // namespace bq
