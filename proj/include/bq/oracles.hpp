#pragma once
// Independent brute-force oracles used by the verification suites.
//
// The main oracle decomposes the twisted groupoid algebra of a finite group
// action (the crossed product C(X) x| Gamma with a 2-cocycle on Gamma) into
// its matrix blocks, by explicit computation of the algebra's center over a
// prime field F_p that splits it: center basis from phase-consistent orbit
// sums, primitive idempotents by minimal-polynomial splitting, block sizes
// from regular traces.  Nothing here touches the character-theoretic or
// Clifford-theoretic primary paths; the code is deliberately self-contained.

#include "bq/cocycle.hpp"
#include "bq/group.hpp"

#include <string>

namespace bq {

struct OracleResult {
    std::string label;
    std::string value;
    std::string method;
};

namespace oracle_detail {

inline long long opow(long long b, long long e, long long p) {
    long long r = 1;
    b %= p;
    while (e > 0) {
        if (e & 1) r = r * b % p;
        b = b * b % p;
        e >>= 1;
    }
    return r;
}
inline long long oinv(long long a, long long p) { return opow((a % p + p) % p, p - 2, p); }

inline bool oprime(long long x) {
    if (x < 2) return false;
    for (long long d = 2; d * d <= x; ++d)
        if (x % d == 0) return false;
    return true;
}

} // namespace oracle_detail

// Block dimensions of the twisted crossed product of the action of `gamma`
// on `npoints` points.  `act[g][x]` is the action, `natural` a 2-cocycle on
// gamma.  Returns the sorted multiset of matrix block sizes.
inline std::vector<long long> oracle_crossed_block_dims(const FiniteGroup& gamma,
                                                        const std::vector<std::vector<int>>& act,
                                                        const Cocycle& natural, int npoints) {
    using namespace oracle_detail;
    const int ng = gamma.order();
    const long long dim = (long long)ng * npoints;
    if (dim > 2000)
        throw std::invalid_argument("crossed product dimension " + std::to_string(dim) +
                                    " exceeds the oracle bound 2000");
    long long m = natural.value_group_order();
    if (m > 12) throw std::invalid_argument("cocycle order exceeds the oracle bound 12");

    long long p = m + 1;
    while (!(oprime(p) && p > dim && p > 50)) p += m;
    // primitive m-th root of unity in F_p
    long long theta = 1;
    if (m > 1) {
        std::vector<long long> qs;
        for (long long q = 2, mm = m; q <= mm; ++q)
            if (mm % q == 0) {
                qs.push_back(q);
                while (mm % q == 0) mm /= q;
            }
        for (long long cand = 2;; ++cand) {
            long long u = opow(cand, (p - 1) / m, p);
            bool prim = true;
            for (long long q : qs)
                if (opow(u, m / q, p) == 1) prim = false;
            if (prim) {
                theta = u;
                break;
            }
        }
    }
    auto phase = [&](const Angle& a) {
        long long k = (a.value() * m).numerator() % m;
        return opow(theta, k, p);
    };

    // basis of potential central support: pairs (x, g) with g x = x
    std::vector<std::pair<int, int>> supp;
    std::vector<std::vector<int>> supp_index(npoints, std::vector<int>(ng, -1));
    for (int x = 0; x < npoints; ++x)
        for (int g = 0; g < ng; ++g)
            if (act[g][x] == x) {
                supp_index[x][g] = (int)supp.size();
                supp.emplace_back(x, g);
            }
    const int ns = (int)supp.size();

    // orbit sums under twisted conjugation by the group generators
    std::vector<int> orbit_of(ns, -1);
    std::vector<long long> rel(ns, 0); // phase relative to the orbit root
    std::vector<int> roots;
    std::vector<char> alive;
    for (int s0 = 0; s0 < ns; ++s0) {
        if (orbit_of[s0] >= 0) continue;
        int oid = (int)roots.size();
        roots.push_back(s0);
        alive.push_back(1);
        std::vector<int> frontier{s0};
        orbit_of[s0] = oid;
        rel[s0] = 1;
        for (std::size_t fi = 0; fi < frontier.size(); ++fi) {
            int s = frontier[fi];
            auto [x, g] = supp[s];
            for (int d : gamma.generators()) {
                int dx = act[d][x];
                int dgd = gamma.conjugate(d, g);
                int t = supp_index[dx][dgd];
                long long ph = phase(natural(d, g)) * phase(natural(gamma.mul(d, g), gamma.inverse(d))) % p *
                               oinv(phase(natural(d, gamma.inverse(d))), p) % p;
                long long val = rel[s] * ph % p;
                if (orbit_of[t] < 0) {
                    orbit_of[t] = oid;
                    rel[t] = val;
                    frontier.push_back(t);
                } else if (rel[t] != val) {
                    alive[oid] = 0; // inconsistent phases around a loop: no central sum
                }
            }
        }
    }
    std::vector<int> basis_ids;
    for (std::size_t i = 0; i < roots.size(); ++i)
        if (alive[i]) basis_ids.push_back((int)i);
    const int r = (int)basis_ids.size();
    std::vector<int> basis_pos(roots.size(), -1);
    for (int i = 0; i < r; ++i) basis_pos[basis_ids[i]] = i;

    // a center element as a support vector
    auto expand = [&](const std::vector<long long>& coords) {
        std::vector<long long> v(ns, 0);
        for (int i = 0; i < r; ++i) {
            if (coords[i] == 0) continue;
            int oid = basis_ids[i];
            for (int s = 0; s < ns; ++s)
                if (orbit_of[s] == oid) v[s] = (v[s] + coords[i] * rel[s]) % p;
        }
        return v;
    };
    // expand back into orbit-sum coordinates, verifying membership
    auto collapse = [&](const std::vector<long long>& v) {
        std::vector<long long> coords(r, 0);
        for (int i = 0; i < r; ++i) coords[i] = v[roots[basis_ids[i]]] % p;
        auto check = expand(coords);
        if (check != v) throw std::logic_error("center product left the span of orbit sums");
        return coords;
    };

    // structure constants on demand: product of two center elements
    auto zmul = [&](const std::vector<long long>& a, const std::vector<long long>& b) {
        std::vector<long long> va = expand(a), vb = expand(b), out(ns, 0);
        for (int sa = 0; sa < ns; ++sa) {
            if (va[sa] == 0) continue;
            auto [x, g] = supp[sa];
            for (int sb = 0; sb < ns; ++sb) {
                if (vb[sb] == 0) continue;
                auto [y, h] = supp[sb];
                if (x != act[g][y]) continue;
                int t = supp_index[x][gamma.mul(g, h)];
                if (t < 0) throw std::logic_error("product left the central support");
                out[t] = (out[t] + va[sa] * vb[sb] % p * phase(natural(g, h))) % p;
            }
        }
        return collapse(out);
    };

    // identity = sum over x of (x, e)
    std::vector<long long> unit_supp(ns, 0);
    for (int x = 0; x < npoints; ++x) unit_supp[supp_index[x][gamma.identity()]] = 1;
    std::vector<long long> unit = collapse(unit_supp);

    // split the identity into primitive idempotents
    std::vector<std::vector<long long>> idems{unit};
    for (int b = 0; b < r; ++b) {
        std::vector<long long> zb(r, 0);
        zb[b] = 1;
        std::vector<std::vector<long long>> next;
        for (const auto& E : idems) {
            // powers of z_b * E inside Z*E
            std::vector<std::vector<long long>> pows{E};
            std::vector<long long> zbE = zmul(zb, E);
            // find minimal dependence via Gaussian elimination
            std::vector<std::vector<long long>> echelon; // rows over F_p length r
            std::vector<int> pivots;
            std::vector<std::vector<long long>> reduced_in_pow; // representation in power basis
            std::vector<long long> minpoly;
            for (int k = 0;; ++k) {
                std::vector<long long> vec = pows.back();
                std::vector<long long> combo(pows.size(), 0);
                combo[k] = 1;
                for (std::size_t e = 0; e < echelon.size(); ++e) {
                    long long c = vec[pivots[e]] % p;
                    if (c == 0) continue;
                    for (int i = 0; i < r; ++i)
                        vec[i] = ((vec[i] - c * echelon[e][i]) % p + p) % p;
                    for (std::size_t i = 0; i < reduced_in_pow[e].size() && i < combo.size(); ++i)
                        combo[i] = ((combo[i] - c * reduced_in_pow[e][i]) % p + p) % p;
                }
                int piv = -1;
                for (int i = 0; i < r; ++i)
                    if (vec[i] % p != 0) {
                        piv = i;
                        break;
                    }
                if (piv < 0) {
                    minpoly = combo; // monic of degree k
                    break;
                }
                long long inv = oinv(vec[piv], p);
                for (int i = 0; i < r; ++i) vec[i] = vec[i] * inv % p;
                for (auto& c : combo) c = c * inv % p;
                echelon.push_back(vec);
                pivots.push_back(piv);
                reduced_in_pow.push_back(combo);
                pows.push_back(zmul(zbE, pows.back()));
            }
            int deg = (int)minpoly.size() - 1;
            if (deg <= 1) {
                next.push_back(E);
                continue;
            }
            std::vector<long long> roots_found;
            for (long long lam = 0; lam < p; ++lam) {
                long long v = 0;
                for (int i = deg; i >= 0; --i) v = (v * lam + minpoly[i]) % p;
                if (v == 0) roots_found.push_back(lam);
            }
            if ((int)roots_found.size() != deg)
                throw std::logic_error("center minimal polynomial does not split simply");
            for (long long lam : roots_found) {
                // Lagrange projector onto the lam-eigenspace
                std::vector<long long> proj = E;
                long long denom = 1;
                for (long long mu : roots_found) {
                    if (mu == lam) continue;
                    // proj *= (z_b E - mu E)
                    std::vector<long long> shifted = zbE;
                    for (int i = 0; i < r; ++i)
                        shifted[i] = ((shifted[i] - mu * E[i]) % p + p) % p;
                    proj = zmul(proj, shifted);
                    denom = denom * ((lam - mu) % p + p) % p;
                }
                long long dinv = oinv(denom, p);
                for (auto& c : proj) c = c * dinv % p;
                next.push_back(proj);
            }
        }
        idems = std::move(next);
    }
    if ((int)idems.size() != r)
        throw std::logic_error("idempotent splitting found " + std::to_string(idems.size()) +
                               " blocks for a center of dimension " + std::to_string(r));

    std::vector<long long> dims;
    for (const auto& E : idems) {
        auto v = expand(E);
        long long tr = 0;
        for (int x = 0; x < npoints; ++x)
            tr = (tr + v[supp_index[x][gamma.identity()]]) % p;
        tr = tr * (ng % p) % p;
        long long d = -1;
        for (long long c = 1; c * c <= dim; ++c)
            if (c * c % p == tr) {
                d = c;
                break;
            }
        if (d < 0) throw std::logic_error("block trace is not a square");
        dims.push_back(d);
    }
    std::sort(dims.begin(), dims.end());
    return dims;
}

// Dimensions of the simple modules of the twisted group algebra C[Gamma, natural].
inline std::vector<long long> oracle_twisted_dims(const FiniteGroup& gamma,
                                                  const Cocycle& natural) {
    if (gamma.order() > 256)
        throw std::invalid_argument("twisted-dimension oracle bound is order 256");
    std::vector<std::vector<int>> act(gamma.order(), std::vector<int>(1, 0));
    return oracle_crossed_block_dims(gamma, act, natural, 1);
}

inline std::string dims_to_string(const std::vector<long long>& dims) {
    std::string s = "{";
    for (std::size_t i = 0; i < dims.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(dims[i]);
    }
    return s + "}";
}

} // namespace bq
