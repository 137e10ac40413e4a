#pragma once
// Irreducible modules of twisted group algebras C[G, kappa].
//
// The twisted algebra is realized through the central extension of G by the
// cyclic group mu_M generated by the cocycle values; ordinary character
// theory of the extension applies, and the modules of C[G, kappa] are the
// irreducibles on which the central mu_M acts by the tautological character.
// Each module is carried around as its projective character, a function
// G -> Q(zeta) attached to the standard section g -> (g, 0).

#include "bq/charactertable.hpp"
#include "bq/cocycle.hpp"

namespace bq {

struct TwistedIrrep {
    std::string label;
    long long dim = 0;
    std::vector<Cyc> character; // indexed by group element

    bool operator==(const TwistedIrrep& o) const {
        return dim == o.dim && character == o.character;
    }
};

// Inner product of two kappa-projective characters (same cocycle); equals the
// ordinary inner product of the corresponding central-extension characters.
inline Rat projective_inner(const FiniteGroup& g, const std::vector<Cyc>& a,
                            const std::vector<Cyc>& b) {
    Cyc s;
    for (int x = 0; x < g.order(); ++x) s += a[x] * b[x].conjugate();
    Cyc avg = s * Rat(1, g.order());
    if (!avg.is_rational()) throw std::logic_error("projective inner product is not rational");
    return avg.rational_value();
}

inline std::vector<Cyc> twist_character(const std::vector<Cyc>& chi,
                                        const std::vector<Angle>& linear) {
    std::vector<Cyc> out(chi.size());
    for (std::size_t i = 0; i < chi.size(); ++i)
        out[i] = chi[i] * Cyc::root_of_unity(linear[i]);
    return out;
}

inline std::vector<TwistedIrrep> twisted_irreps(const FiniteGroup& g, const Cocycle& kappa) {
    validate_cocycle(g, kappa);
    const int n = g.order();
    std::vector<TwistedIrrep> out;

    long long m = kappa.value_group_order();
    if (m == 1) {
        CharacterTable t = character_table(g);
        for (int r = 0; r < t.num_rows(); ++r) {
            TwistedIrrep ti;
            ti.label = t.labels[r];
            ti.dim = t.dims[r];
            ti.character.resize(n);
            for (int x = 0; x < n; ++x) ti.character[x] = t.value(r, x);
            out.push_back(std::move(ti));
        }
        return out;
    }

    // central extension on pairs (g, j), j in Z/m
    std::vector<long long> phase(n * (std::size_t)n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            phase[a * (std::size_t)n + b] = (kappa(a, b).value() * m).numerator() % m;
    FiniteGroup gc = g;
    auto mul = [gc, phase, m, n](int x, int y) {
        int ga = x / (int)m, ja = x % (int)m, gb = y / (int)m, jb = y % (int)m;
        long long j = (ja + jb + phase[ga * (std::size_t)n + gb]) % m;
        return gc.mul(ga, gb) * (int)m + (int)j;
    };
    std::vector<int> gens;
    for (int s : g.generators()) gens.push_back(s * (int)m);
    gens.push_back(g.identity() * (int)m + 1);
    FiniteGroup ext = FiniteGroup::from_function(n * (int)m, mul, g.identity() * (int)m, gens);

    CharacterTable t = character_table(ext);
    const int z = g.identity() * (int)m + 1; // central generator of mu_m
    const Cyc zeta = Cyc::zeta(1, m);
    long long dimsq = 0;
    for (int r = 0; r < t.num_rows(); ++r) {
        if (t.value(r, z) != Cyc(Rat(t.dims[r])) * zeta) continue;
        TwistedIrrep ti;
        ti.dim = t.dims[r];
        ti.character.resize(n);
        for (int x = 0; x < n; ++x) ti.character[x] = t.value(r, x * (int)m);
        out.push_back(std::move(ti));
        dimsq += t.dims[r] * t.dims[r];
    }
    if (dimsq != n)
        throw std::logic_error("twisted module dimensions violate the squared-degree identity");
    std::sort(out.begin(), out.end(), [](const TwistedIrrep& a, const TwistedIrrep& b) {
        if (a.dim != b.dim) return a.dim < b.dim;
        for (std::size_t i = 0; i < a.character.size(); ++i) {
            std::string sa = a.character[i].str(), sb = b.character[i].str();
            if (sa != sb) return sa < sb;
        }
        return false;
    });
    for (std::size_t i = 0; i < out.size(); ++i) out[i].label = "rho" + std::to_string(i);
    return out;
}

inline std::vector<long long> twisted_dims(const FiniteGroup& g, const Cocycle& kappa) {
    std::vector<long long> d;
    for (const auto& ti : twisted_irreps(g, kappa)) d.push_back(ti.dim);
    std::sort(d.begin(), d.end());
    return d;
}

// Locates chi among the given irreps (exact character equality).
inline int find_twisted_irrep(const std::vector<TwistedIrrep>& irreps,
                              const std::vector<Cyc>& chi) {
    for (std::size_t i = 0; i < irreps.size(); ++i)
        if (irreps[i].character == chi) return (int)i;
    return -1;
}

// Multiplicities of each irrep in a (possibly reducible) projective character.
inline std::vector<long long> decompose_character(const FiniteGroup& g,
                                                  const std::vector<TwistedIrrep>& irreps,
                                                  const std::vector<Cyc>& chi) {
    std::vector<long long> mult;
    for (const auto& ti : irreps) {
        Rat ip = projective_inner(g, chi, ti.character);
        if (ip.denominator() != 1 || ip.numerator() < 0)
            throw std::logic_error("character decomposes with non-integral multiplicity");
        mult.push_back(ip.numerator());
    }
    return mult;
}

// ---------------------------------------------------------------------------
// Projective representations by explicit matrices
// ---------------------------------------------------------------------------

struct CycMatrix {
    int n = 0;
    std::vector<std::vector<Cyc>> a;

    static CycMatrix identity(int n) {
        CycMatrix m;
        m.n = n;
        m.a.assign(n, std::vector<Cyc>(n));
        for (int i = 0; i < n; ++i) m.a[i][i] = Cyc::one();
        return m;
    }
    CycMatrix mul(const CycMatrix& o) const {
        CycMatrix out;
        out.n = n;
        out.a.assign(n, std::vector<Cyc>(n));
        for (int i = 0; i < n; ++i)
            for (int k = 0; k < n; ++k) {
                if (a[i][k].is_zero()) continue;
                for (int j = 0; j < n; ++j) out.a[i][j] += a[i][k] * o.a[k][j];
            }
        return out;
    }
    CycMatrix scale(const Cyc& c) const {
        CycMatrix out = *this;
        for (auto& row : out.a)
            for (auto& x : row) x = x * c;
        return out;
    }
    Cyc trace() const {
        Cyc t;
        for (int i = 0; i < n; ++i) t += a[i][i];
        return t;
    }
    bool operator==(const CycMatrix& o) const { return a == o.a; }
    Cyc det() const {
        if (n > 6) throw std::invalid_argument("determinant restricted to dimension <= 6");
        std::vector<int> idx(n);
        std::iota(idx.begin(), idx.end(), 0);
        Cyc d;
        int sign;
        do {
            sign = 1;
            std::vector<int> v = idx;
            for (int i = 0; i < n; ++i)
                for (int j = i + 1; j < n; ++j)
                    if (v[i] > v[j]) {
                        std::swap(v[i], v[j]);
                        sign = -sign;
                    }
            Cyc term = Cyc::one();
            for (int i = 0; i < n; ++i) term *= a[i][idx[i]];
            d += (sign > 0) ? term : Cyc() - term;
        } while (std::next_permutation(idx.begin(), idx.end()));
        return d;
    }
};

// mu(g) mu(h) = zeta^{kappa(g,h)} mu(gh), extended from generator matrices,
// with the defining relation verified on all pairs.
struct ProjectiveRep {
    int dim = 0;
    Cocycle cocycle;
    std::vector<CycMatrix> matrices; // per group element
    std::vector<Cyc> character;

    static ProjectiveRep from_generators(const FiniteGroup& g, const Cocycle& kappa,
                                         const std::vector<std::pair<int, CycMatrix>>& gen_mats) {
        validate_cocycle(g, kappa);
        ProjectiveRep rep;
        rep.cocycle = kappa;
        if (gen_mats.empty()) throw std::invalid_argument("projective representation needs matrices");
        rep.dim = gen_mats[0].second.n;
        const int n = g.order();
        std::vector<char> known(n, 0);
        rep.matrices.assign(n, CycMatrix());
        rep.matrices[g.identity()] = CycMatrix::identity(rep.dim);
        known[g.identity()] = 1;
        std::vector<int> gen_elems;
        for (const auto& [s, m] : gen_mats) {
            if (m.n != rep.dim) throw std::invalid_argument("generator matrix dimensions differ");
            if (m.det().is_zero()) throw std::invalid_argument("generator matrix is singular");
            if (known[s]) {
                if (!(rep.matrices[s] == m))
                    throw std::invalid_argument("conflicting matrix for a generator");
            } else {
                rep.matrices[s] = m;
                known[s] = 1;
            }
            gen_elems.push_back(s);
        }
        std::vector<int> frontier;
        for (int x = 0; x < n; ++x)
            if (known[x]) frontier.push_back(x);
        for (std::size_t fi = 0; fi < frontier.size(); ++fi)
            for (int s : gen_elems) {
                int y = g.mul(s, frontier[fi]);
                if (known[y]) continue;
                // mu(sx) = zeta^{-kappa(s,x)} mu(s) mu(x)
                rep.matrices[y] = rep.matrices[s]
                                      .mul(rep.matrices[frontier[fi]])
                                      .scale(Cyc::root_of_unity(-kappa(s, frontier[fi])));
                known[y] = 1;
                frontier.push_back(y);
            }
        if (!std::all_of(known.begin(), known.end(), [](char c) { return c; }))
            throw std::invalid_argument("generator matrices do not cover the group");
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b) {
                CycMatrix lhs = rep.matrices[a].mul(rep.matrices[b]);
                CycMatrix rhs = rep.matrices[g.mul(a, b)].scale(Cyc::root_of_unity(kappa(a, b)));
                if (!(lhs == rhs))
                    throw std::invalid_argument("projective relation fails at pair (" +
                                                std::to_string(a) + "," + std::to_string(b) + ")");
            }
        rep.character.resize(n);
        for (int x = 0; x < n; ++x) rep.character[x] = rep.matrices[x].trace();
        return rep;
    }

    // twisted regular representation: N_g on the standard basis of C[G,kappa]
    static ProjectiveRep regular(const FiniteGroup& g, const Cocycle& kappa) {
        validate_cocycle(g, kappa);
        ProjectiveRep rep;
        rep.cocycle = kappa;
        rep.dim = g.order();
        const int n = g.order();
        rep.matrices.assign(n, CycMatrix());
        for (int x = 0; x < n; ++x) {
            CycMatrix m;
            m.n = n;
            m.a.assign(n, std::vector<Cyc>(n));
            for (int h = 0; h < n; ++h)
                m.a[g.mul(x, h)][h] = Cyc::root_of_unity(kappa(x, h));
            rep.matrices[x] = std::move(m);
        }
        rep.character.resize(n);
        for (int x = 0; x < n; ++x) rep.character[x] = rep.matrices[x].trace();
        return rep;
    }
};

} // namespace bq
