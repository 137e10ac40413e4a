#pragma once
// Twisted extended quotients of finite group actions.
//
// A GammaSet is a finite Gamma-set together with a 2-cocycle at each point
// (on the isotropy group) and connecting homomorphisms between the twisted
// isotropy algebras along the action.  The quotient collects pairs
// [x, rho] with rho a simple module of C[Gamma_x, natural(x)], one fiber per
// orbit; connectors identify fibers over points of the same orbit.
//
// Two construction modes:
//   * a single group cocycle on Gamma: point cocycles are restrictions and
//     connector phases come from twisted conjugation, which automatically
//     satisfies the homomorphism, composition and innerness laws;
//   * raw per-point cocycles and explicit connector phases, fully validated
//     (the choice of intertwiners is not canonical, so callers must supply a
//     consistent family; we check every law and name the first violation).

#include "bq/cocycle.hpp"
#include "bq/twisted.hpp"

namespace bq {

struct ExtQuotPoint {
    int orbit_rep = 0;
    int orbit_size = 1;
    int rho_index = 0;
    std::string rho_label;
    long long rho_dim = 1;
    std::vector<Cyc> rho_character; // on stabilizer(orbit_rep), local element order

    std::string str() const {
        return "[x" + std::to_string(orbit_rep) + "," + rho_label + " dim " +
               std::to_string(rho_dim) + "]";
    }
};

class GammaSet {
public:
    GammaSet(FiniteGroup gamma, std::vector<std::vector<int>> action, Cocycle global)
        : gamma_(std::move(gamma)), act_(std::move(action)), global_(std::move(global)),
          global_mode_(true) {
        validate_action();
        validate_cocycle(gamma_, global_);
        build_stabilizers();
        for (int x = 0; x < npoints(); ++x)
            point_cocycles_.push_back(global_.restrict_to(stabs_[x]));
    }

    struct RawData {
        std::vector<Cocycle> point_cocycles;                    // on stabilizer groups
        std::vector<std::vector<std::vector<Angle>>> connector; // [g][x][local elem of stab(x)]
    };

    GammaSet(FiniteGroup gamma, std::vector<std::vector<int>> action, RawData raw)
        : gamma_(std::move(gamma)), act_(std::move(action)), global_mode_(false),
          raw_(std::move(raw)) {
        validate_action();
        build_stabilizers();
        point_cocycles_ = raw_.point_cocycles;
        validate_raw();
    }

    const FiniteGroup& gamma() const { return gamma_; }
    int npoints() const { return act_.empty() ? 0 : (int)act_[0].size(); }
    int act(int g, int x) const { return act_[g][x]; }
    const EmbeddedGroup& stabilizer(int x) const { return stabs_[x]; }
    const Cocycle& point_cocycle(int x) const { return point_cocycles_[x]; }
    bool global_mode() const { return global_mode_; }
    const Cocycle& global_cocycle() const {
        if (!global_mode_) throw std::logic_error("no global cocycle in raw mode");
        return global_;
    }

    // twisted-conjugation phase for any g in Gamma and a in a stabilizer,
    // both as parent indices (group-cocycle mode only)
    Angle global_connector_phase(int g, int a) const {
        if (!global_mode_) throw std::logic_error("no global cocycle in raw mode");
        return global_(g, a) - global_(gamma_.conjugate(g, a), g);
    }

    // phase of phi_{g,x}(N_a) = zeta^{lambda} N_{gag^{-1}}, a given by its
    // local index in stabilizer(x)
    Angle connector_phase(int g, int x, int a_local) const {
        if (global_mode_) {
            int a = stabs_[x].to_parent[a_local];
            return global_(g, a) - global_(gamma_.conjugate(g, a), g);
        }
        return raw_.connector[g][x][a_local];
    }

    // Transports a projective character from the fiber at x to the fiber at
    // g x through the connecting homomorphism: chi' = chi o phi_{g,x}^{-1}.
    std::vector<Cyc> transport(int g, int x, const std::vector<Cyc>& chi) const {
        int y = act_[g][x];
        const auto& sy = stabs_[y];
        std::vector<Cyc> out(sy.group.order());
        for (int b_local = 0; b_local < sy.group.order(); ++b_local) {
            int b = sy.to_parent[b_local];
            int a = gamma_.conjugate(gamma_.inverse(g), b);
            int a_local = stabs_[x].pull(a);
            out[b_local] =
                chi[a_local] * Cyc::root_of_unity(-connector_phase(g, x, a_local));
        }
        return out;
    }

    std::vector<int> orbit_of_point() const {
        std::vector<int> rep(npoints(), -1);
        for (int x = 0; x < npoints(); ++x) {
            if (rep[x] >= 0) continue;
            std::vector<int> orbit{x};
            rep[x] = x;
            for (std::size_t i = 0; i < orbit.size(); ++i)
                for (int s : gamma_.generators()) {
                    int y = act_[s][orbit[i]];
                    if (rep[y] < 0) {
                        rep[y] = x;
                        orbit.push_back(y);
                    }
                }
            // canonical representative: least point index
            int least = *std::min_element(orbit.begin(), orbit.end());
            for (int y : orbit) rep[y] = least;
        }
        return rep;
    }

    // an element of Gamma carrying x to y (they must be in one orbit)
    int transporter(int x, int y) const {
        std::vector<int> how(npoints(), -1);
        how[x] = gamma_.identity();
        std::vector<int> frontier{x};
        for (std::size_t i = 0; i < frontier.size(); ++i) {
            int z = frontier[i];
            if (z == y) return how[z];
            for (int s : gamma_.generators()) {
                int w = act_[s][z];
                if (how[w] < 0) {
                    how[w] = gamma_.mul(s, how[z]);
                    frontier.push_back(w);
                }
            }
        }
        if (how[y] < 0) throw std::invalid_argument("points lie in different orbits");
        return how[y];
    }

    std::vector<TwistedIrrep> fiber_at(int x) const {
        return twisted_irreps(stabs_[x].group, point_cocycles_[x]);
    }

private:
    void validate_action() {
        const int n = gamma_.order();
        if ((int)act_.size() != n) throw std::invalid_argument("action table has wrong group size");
        const int np = npoints();
        for (const auto& row : act_)
            for (int y : row)
                if (y < 0 || y >= np) throw std::invalid_argument("action image out of range");
        for (int x = 0; x < np; ++x)
            if (act_[gamma_.identity()][x] != x)
                throw std::invalid_argument("identity fails to act trivially at point " +
                                            std::to_string(x));
        const bool full = (long long)n * n * np <= 2000000;
        const auto& lhs_set = full ? all_indices(n) : gamma_.generators();
        for (int g : lhs_set)
            for (int h = 0; h < n; ++h) {
                int gh = gamma_.mul(g, h);
                for (int x = 0; x < np; ++x)
                    if (act_[g][act_[h][x]] != act_[gh][x])
                        throw std::invalid_argument("action is not a homomorphism at pair (" +
                                                    std::to_string(g) + "," + std::to_string(h) +
                                                    ")");
            }
    }

    static std::vector<int> all_indices(int n) {
        std::vector<int> v(n);
        std::iota(v.begin(), v.end(), 0);
        return v;
    }

    void build_stabilizers() {
        for (int x = 0; x < npoints(); ++x) {
            std::vector<int> elems;
            for (int g = 0; g < gamma_.order(); ++g)
                if (act_[g][x] == x) elems.push_back(g);
            stabs_.push_back(make_subgroup(gamma_, std::move(elems)));
        }
    }

    void validate_raw() {
        const int n = gamma_.order();
        const int np = npoints();
        if ((int)raw_.point_cocycles.size() != np)
            throw std::invalid_argument("one cocycle per point required");
        if ((int)raw_.connector.size() != n)
            throw std::invalid_argument("connector table needs one row per group element");
        for (int x = 0; x < np; ++x) {
            if (raw_.point_cocycles[x].group_order() != stabs_[x].group.order())
                throw std::invalid_argument("point cocycle size differs from the isotropy group");
            validate_cocycle(stabs_[x].group, raw_.point_cocycles[x]);
        }
        // transported cocycle classes agree
        for (int g = 0; g < n; ++g)
            for (int x = 0; x < np; ++x) {
                int y = act_[g][x];
                const auto& sy = stabs_[y];
                Cocycle pushed(sy.group.order());
                for (int a = 0; a < sy.group.order(); ++a)
                    for (int b = 0; b < sy.group.order(); ++b) {
                        int pa = stabs_[x].pull(gamma_.conjugate(gamma_.inverse(g), sy.to_parent[a]));
                        int pb = stabs_[x].pull(gamma_.conjugate(gamma_.inverse(g), sy.to_parent[b]));
                        pushed.set(a, b, raw_.point_cocycles[x](pa, pb));
                    }
                if (!cocycle_cohomologous(sy.group, raw_.point_cocycles[y], pushed))
                    throw std::invalid_argument(
                        "transported cocycle class differs at (g,x)=(" + std::to_string(g) + "," +
                        std::to_string(x) + ")");
            }
        // connectors are algebra homomorphisms
        for (int g = 0; g < n; ++g)
            for (int x = 0; x < np; ++x) {
                const auto& sx = stabs_[x];
                int y = act_[g][x];
                const auto& ky = raw_.point_cocycles[y];
                const auto& kx = raw_.point_cocycles[x];
                for (int a = 0; a < sx.group.order(); ++a)
                    for (int b = 0; b < sx.group.order(); ++b) {
                        int ga = stabs_[y].pull(gamma_.conjugate(g, sx.to_parent[a]));
                        int gb = stabs_[y].pull(gamma_.conjugate(g, sx.to_parent[b]));
                        Angle lhs = raw_.connector[g][x][a] + raw_.connector[g][x][b] + ky(ga, gb);
                        Angle rhs = kx(a, b) + raw_.connector[g][x][sx.group.mul(a, b)];
                        if (lhs != rhs)
                            throw std::invalid_argument(
                                "connector at (g,x)=(" + std::to_string(g) + "," +
                                std::to_string(x) + ") is not an algebra homomorphism");
                    }
            }
        // composition law phi_{g',gx} o phi_{g,x} = phi_{g'g,x}
        for (int g = 0; g < n; ++g)
            for (int gp = 0; gp < n; ++gp)
                for (int x = 0; x < np; ++x) {
                    int y = act_[g][x];
                    int gg = gamma_.mul(gp, g);
                    const auto& sx = stabs_[x];
                    for (int a = 0; a < sx.group.order(); ++a) {
                        int ga_local = stabs_[y].pull(gamma_.conjugate(g, sx.to_parent[a]));
                        Angle lhs = raw_.connector[g][x][a] + raw_.connector[gp][y][ga_local];
                        if (lhs != raw_.connector[gg][x][a])
                            throw std::invalid_argument("connector composition fails at (g',g,x)=(" +
                                                        std::to_string(gp) + "," + std::to_string(g) +
                                                        "," + std::to_string(x) + ")");
                    }
                }
        // innerness: for g in the isotropy group the induced map on simple
        // modules must be trivial
        for (int x = 0; x < np; ++x) {
            auto irreps = fiber_at(x);
            const auto& sx = stabs_[x];
            for (int g_local = 0; g_local < sx.group.order(); ++g_local) {
                int g = sx.to_parent[g_local];
                for (const auto& ti : irreps) {
                    auto moved = transport(g, x, ti.character);
                    if (!(moved == ti.character))
                        throw std::invalid_argument(
                            "stabilizing connector is not inner at (g,x)=(" + std::to_string(g) +
                            "," + std::to_string(x) + ")");
                }
            }
        }
    }

    FiniteGroup gamma_;
    std::vector<std::vector<int>> act_;
    Cocycle global_;
    bool global_mode_ = true;
    RawData raw_;
    std::vector<EmbeddedGroup> stabs_;
    std::vector<Cocycle> point_cocycles_;
};

inline std::vector<ExtQuotPoint> extended_quotient(const GammaSet& xs) {
    auto rep = xs.orbit_of_point();
    std::vector<int> orbit_size(xs.npoints(), 0);
    for (int x = 0; x < xs.npoints(); ++x) ++orbit_size[rep[x]];
    std::vector<ExtQuotPoint> out;
    for (int x = 0; x < xs.npoints(); ++x) {
        if (rep[x] != x) continue;
        auto irreps = xs.fiber_at(x);
        for (std::size_t i = 0; i < irreps.size(); ++i) {
            ExtQuotPoint p;
            p.orbit_rep = x;
            p.orbit_size = orbit_size[x];
            p.rho_index = (int)i;
            p.rho_label = irreps[i].label;
            p.rho_dim = irreps[i].dim;
            p.rho_character = irreps[i].character;
            out.push_back(std::move(p));
        }
    }
    return out;
}

// Dimensions of the simple modules of the crossed product C(X) x| Gamma,
// one per extended-quotient point: induced dimension [Gamma:Gamma_x] dim rho.
inline std::vector<long long> crossed_product_spectrum(const GammaSet& xs) {
    std::vector<long long> dims;
    for (const auto& p : extended_quotient(xs)) {
        long long index = xs.gamma().order() / xs.stabilizer(p.orbit_rep).group.order();
        dims.push_back(index * p.rho_dim);
    }
    std::sort(dims.begin(), dims.end());
    return dims;
}

// The points [x, rho] whose rho appears in the restriction of mu to the
// isotropy group; by Frobenius reciprocity these are the simple modules of
// the invariant subalgebra (A tensor End V_mu)^Gamma.
inline std::vector<ExtQuotPoint> invariant_spectrum(const GammaSet& xs, const ProjectiveRep& mu) {
    std::vector<ExtQuotPoint> out;
    for (const auto& p : extended_quotient(xs)) {
        const auto& sx = xs.stabilizer(p.orbit_rep);
        Cocycle restricted = mu.cocycle.restrict_to(sx);
        std::vector<Cyc> mu_char(sx.group.order());
        for (int a = 0; a < sx.group.order(); ++a) mu_char[a] = mu.character[sx.to_parent[a]];
        const Cocycle& kx = xs.point_cocycle(p.orbit_rep);
        if (!(restricted == kx)) {
            auto witness = cocycle_cohomologous(sx.group, kx, restricted);
            if (!witness)
                throw std::invalid_argument(
                    "cocycle mismatch between the representation and point " +
                    std::to_string(p.orbit_rep));
            for (int a = 0; a < sx.group.order(); ++a)
                mu_char[a] = mu_char[a] * Cyc::root_of_unity((*witness)[a]);
        }
        Rat m = projective_inner(sx.group, p.rho_character, mu_char);
        if (m != Rat(0)) out.push_back(p);
    }
    return out;
}

// Matching of the one-step quotient (X // Gamma) with the iterated quotient
// ((X // Gamma1) // Gamma2) for a semidirect decomposition Gamma1 x| Gamma2.
struct SemidirectCertificate {
    long long direct_count = 0;
    long long iterated_count = 0;
    // (direct index, iterated index) pairs matched on (orbit, induced dim)
    std::vector<std::pair<int, int>> matching;
    bool counts_agree() const { return direct_count == iterated_count; }
};

inline SemidirectCertificate iterate_semidirect(const GammaSet& xs,
                                                const std::vector<int>& normal_elems,
                                                const std::vector<int>& complement_elems) {
    if (!xs.global_mode())
        throw std::invalid_argument("iterated quotients require a group-level cocycle");
    const FiniteGroup& g = xs.gamma();
    if (!g.is_normal(normal_elems))
        throw std::invalid_argument("first factor of the semidirect product is not normal");
    EmbeddedGroup n1 = make_subgroup(g, normal_elems);
    EmbeddedGroup n2 = make_subgroup(g, complement_elems);
    if ((long long)n1.group.order() * n2.group.order() != g.order())
        throw std::invalid_argument("semidirect factors do not multiply to the group order");
    for (int a : normal_elems)
        for (int b : complement_elems)
            if (a == b && a != g.identity())
                throw std::invalid_argument("semidirect factors intersect nontrivially");

    auto direct = extended_quotient(xs);

    // the Gamma1-set
    std::vector<std::vector<int>> act1(n1.group.order(), std::vector<int>(xs.npoints()));
    for (int a = 0; a < n1.group.order(); ++a)
        for (int x = 0; x < xs.npoints(); ++x) act1[a][x] = xs.act(n1.to_parent[a], x);
    GammaSet x1(n1.group, act1, xs.global_cocycle().restrict_to(n1));
    auto inner = extended_quotient(x1);

    // index of inner points by (rep, irrep index within the fiber)
    auto rep1 = x1.orbit_of_point();
    std::map<std::pair<int, int>, int> inner_index;
    std::vector<std::vector<TwistedIrrep>> fibers(xs.npoints());
    for (std::size_t i = 0; i < inner.size(); ++i) {
        inner_index[{inner[i].orbit_rep, inner[i].rho_index}] = (int)i;
        if (fibers[inner[i].orbit_rep].empty())
            fibers[inner[i].orbit_rep] = x1.fiber_at(inner[i].orbit_rep);
    }

    // Gamma2 action on the inner quotient: move the base point, then carry
    // the module back to the canonical Gamma1-orbit representative
    std::vector<std::vector<int>> act2(n2.group.order(), std::vector<int>((int)inner.size()));
    for (int b = 0; b < n2.group.order(); ++b) {
        int g2 = n2.to_parent[b];
        for (std::size_t i = 0; i < inner.size(); ++i) {
            int x = inner[i].orbit_rep;
            int y = xs.act(g2, x);
            int yrep = rep1[y];
            int t1 = n1.to_parent[x1.transporter(y, yrep)];
            int move = g.mul(t1, g2); // carries x to yrep
            const auto& s1x = x1.stabilizer(x);
            const auto& s1y = x1.stabilizer(yrep);
            std::vector<Cyc> chi1(s1y.group.order());
            int move_inv = g.inverse(move);
            for (int bl = 0; bl < s1y.group.order(); ++bl) {
                int b_parent = n1.to_parent[s1y.to_parent[bl]];
                int a_parent = g.conjugate(move_inv, b_parent);
                int a_local = s1x.pull(n1.pull(a_parent));
                chi1[bl] = inner[i].rho_character[a_local] *
                           Cyc::root_of_unity(-xs.global_connector_phase(move, a_parent));
            }
            int idx = find_twisted_irrep(fibers[yrep], chi1);
            if (idx < 0) throw std::logic_error("transported module missing from the target fiber");
            act2[b][i] = inner_index.at({yrep, idx});
        }
    }
    GammaSet x2(n2.group, act2, xs.global_cocycle().restrict_to(n2));
    auto outer = extended_quotient(x2);

    SemidirectCertificate cert;
    cert.direct_count = (long long)direct.size();
    cert.iterated_count = (long long)outer.size();

    // invariants for the matching: full-orbit representative and induced dim
    auto full_rep = xs.orbit_of_point();
    std::map<std::pair<int, long long>, std::vector<int>> buckets;
    for (std::size_t i = 0; i < direct.size(); ++i) {
        long long dim =
            (long long)g.order() / xs.stabilizer(direct[i].orbit_rep).group.order() *
            direct[i].rho_dim;
        buckets[{full_rep[direct[i].orbit_rep], dim}].push_back((int)i);
    }
    bool matched = true;
    for (std::size_t j = 0; j < outer.size() && matched; ++j) {
        const auto& innerpt = inner[outer[j].orbit_rep];
        int x = innerpt.orbit_rep;
        long long dim = (long long)n1.group.order() / x1.stabilizer(x).group.order() *
                        innerpt.rho_dim *
                        ((long long)n2.group.order() / x2.stabilizer(outer[j].orbit_rep).group.order()) *
                        outer[j].rho_dim;
        auto it = buckets.find({full_rep[x], dim});
        if (it == buckets.end() || it->second.empty()) {
            matched = false;
            break;
        }
        cert.matching.emplace_back(it->second.back(), (int)j);
        it->second.pop_back();
    }
    if (!matched || cert.direct_count != cert.iterated_count) cert.matching.clear();
    return cert;
}

} // namespace bq
