#pragma once
// Inertial-class data: the finite symmetry package attached to one Bernstein
// block.  The torus T_s carries within-block coordinate permutations (the
// group W_s, a product of symmetric groups), an abelian character group
// X^G(s) acting through block permutations w(gamma) and unitary translations
// chi_gamma, a 2-cocycle kappa on X^G(s) restricting to kappa_omega on the
// subgroup X^L(omega), and the chain X^L(omega,V_mu) < X^L(omega) < X^L(s) <
// X^G(s).  Everything the construction consumes is validated here, and every
// violated law is reported by name.

#include "bq/cocycle.hpp"
#include "bq/torus.hpp"
#include "bq/twisted.hpp"

#include <set>

namespace bq {

struct BernsteinBlock {
    long long m = 1;
    long long e = 1;
    long long d = 1;
};

struct InertialClassData {
    std::vector<BernsteinBlock> blocks;
    std::vector<long long> xg_orders;              // X^G(s) = prod Z/n_i
    std::vector<std::string> xg_names;             // one per cyclic factor
    std::vector<std::vector<int>> xl_s_gens;       // exponent vectors
    std::vector<std::vector<int>> xl_omega_gens;   // exponent vectors
    std::vector<std::vector<int>> xl_omega_vmu_gens;
    Cocycle kappa;                                 // on X^G(s) element indices; empty = trivial
    std::vector<std::vector<Angle>> chi_gen;       // per generator: one angle per block
    std::vector<std::vector<int>> w_gen;           // per generator: permutation of block indices
    std::vector<std::vector<Angle>> sharp_translations; // per generator: one angle per block
};

class InertialClass {
public:
    explicit InertialClass(InertialClassData data) : d_(std::move(data)) { build(); }

    const std::vector<BernsteinBlock>& blocks() const { return d_.blocks; }
    int rank() const { return rank_; }
    int block_offset(int b) const { return offsets_[b]; }
    int coord_block(int c) const { return coord_block_[c]; }

    const FiniteGroup& xg() const { return xg_; }
    const std::vector<int>& xl_s() const { return xl_s_; }
    const std::vector<int>& xl_omega() const { return xl_omega_; }
    const std::vector<int>& xl_omega_vmu() const { return xl_omega_vmu_; }
    const Cocycle& kappa() const { return kappa_; }

    // unitary translation of T_s attached to a character group element
    const std::vector<Coord>& chi(int gamma) const { return chi_[gamma]; }
    // block permutation attached to a character group element
    const std::vector<int>& wpart(int gamma) const { return w_[gamma]; }
    // the twisting character phi_gamma on X^L(omega) (by local index)
    std::vector<Angle> phi(int gamma) const {
        std::vector<Angle> out(xlomega_sub_.group.order());
        for (int j = 0; j < xlomega_sub_.group.order(); ++j)
            out[j] = commutator_pairing(kappa_, gamma, xlomega_sub_.to_parent[j]);
        return out;
    }
    const EmbeddedGroup& xl_omega_subgroup() const { return xlomega_sub_; }
    Cocycle kappa_omega() const { return kappa_.restrict_to(xlomega_sub_); }

    // coordinate permutation induced by a block permutation
    std::vector<int> block_perm_to_coords(const std::vector<int>& bp) const {
        std::vector<int> perm(rank_);
        for (std::size_t b = 0; b < d_.blocks.size(); ++b) {
            if (d_.blocks[bp[b]].e != d_.blocks[b].e)
                throw std::logic_error("block permutation between different block sizes");
            for (long long j = 0; j < d_.blocks[b].e; ++j)
                perm[offsets_[b] + j] = offsets_[bp[b]] + (int)j;
        }
        return perm;
    }
    std::vector<Coord> expand_block_angles(const std::vector<Angle>& per_block) const {
        std::vector<Coord> out(rank_);
        for (std::size_t b = 0; b < d_.blocks.size(); ++b)
            for (long long j = 0; j < d_.blocks[b].e; ++j)
                out[offsets_[b] + j] = Coord{per_block[b], Rat(0)};
        return out;
    }

    // the torus element by which gamma acts on T_s: block permutation
    // composed with the translation chi_gamma
    PermTrans action_of(int gamma) const {
        PermTrans p = PermTrans::permutation(block_perm_to_coords(w_[gamma]));
        PermTrans t = PermTrans::translation(chi_[gamma]);
        return t.compose(p);
    }

    std::vector<PermTrans> ws_generators() const {
        std::vector<PermTrans> gens;
        for (std::size_t b = 0; b < d_.blocks.size(); ++b)
            for (long long j = 0; j + 1 < d_.blocks[b].e; ++j) {
                std::vector<int> perm(rank_);
                std::iota(perm.begin(), perm.end(), 0);
                std::swap(perm[offsets_[b] + j], perm[offsets_[b] + j + 1]);
                gens.push_back(PermTrans::permutation(perm));
            }
        return gens;
    }

    std::vector<PermTrans> sharp_generators() const {
        std::vector<PermTrans> gens;
        for (const auto& v : d_.sharp_translations)
            gens.push_back(PermTrans::translation(expand_block_angles(v)));
        return gens;
    }

    // distinct block permutations arising from X^G(s); index 0 is trivial
    const std::vector<std::vector<int>>& rsharp() const { return rsharp_; }
    int rsharp_of(int gamma) const { return rsharp_index_.at(w_[gamma]); }
    // least character-group element inducing the given block permutation
    int rsharp_lift(int r) const { return rsharp_lift_[r]; }

    long long ws_order() const {
        long long o = 1;
        for (const auto& b : d_.blocks)
            for (long long i = 2; i <= b.e; ++i) o *= i;
        return o;
    }

private:
    void build() {
        if (d_.blocks.empty()) throw std::invalid_argument("an inertial class needs blocks");
        for (const auto& b : d_.blocks)
            if (b.m <= 0 || b.e <= 0 || b.d <= 0)
                throw std::invalid_argument("block invariants must be positive");
        auto same = [&](std::size_t a, std::size_t b) {
            return d_.blocks[a].m == d_.blocks[b].m && d_.blocks[a].e == d_.blocks[b].e &&
                   d_.blocks[a].d == d_.blocks[b].d;
        };
        for (std::size_t b = 0; b < d_.blocks.size(); ++b)
            for (std::size_t c = b + 1; c < d_.blocks.size(); ++c)
                if (same(b, c))
                    for (std::size_t mid = b + 1; mid < c; ++mid)
                        if (!same(b, mid))
                            throw std::invalid_argument(
                                "blocks with equal invariants must occupy subsequent positions");
        int off = 0;
        for (const auto& b : d_.blocks) {
            offsets_.push_back(off);
            for (long long j = 0; j < b.e; ++j) coord_block_.push_back((int)offsets_.size() - 1);
            off += (int)b.e;
        }
        rank_ = off;

        // the abelian character group
        const int k = (int)d_.xg_orders.size();
        if ((int)d_.xg_names.size() != k)
            throw std::invalid_argument("one name per cyclic factor of the character group");
        long long total = 1;
        for (long long n : d_.xg_orders) {
            if (n <= 0) throw std::invalid_argument("cyclic orders must be positive");
            total *= n;
            if (total > 4096) throw std::invalid_argument("character group too large");
        }
        nxg_ = total;
        strides_.assign(k, 1);
        for (int i = k - 2; i >= 0; --i) strides_[i] = strides_[i + 1] * d_.xg_orders[i + 1];
        std::vector<long long> orders = d_.xg_orders;
        auto strides = strides_;
        xg_ = FiniteGroup::from_function(
            (int)total,
            [orders, strides](int a, int b) {
                long long out = 0;
                for (std::size_t i = 0; i < orders.size(); ++i) {
                    long long ea = (a / strides[i]) % orders[i];
                    long long eb = (b / strides[i]) % orders[i];
                    out += ((ea + eb) % orders[i]) * strides[i];
                }
                return (int)out;
            },
            0, generator_indices());

        if ((int)d_.chi_gen.size() != k || (int)d_.w_gen.size() != k)
            throw std::invalid_argument("chi and w data must cover every character generator");
        for (int i = 0; i < k; ++i) {
            if ((int)d_.chi_gen[i].size() != (int)d_.blocks.size())
                throw std::invalid_argument("chi vector has one angle per block");
            if ((int)d_.w_gen[i].size() != (int)d_.blocks.size() ||
                !is_block_perm(d_.w_gen[i]))
                throw std::invalid_argument("w data must be a permutation of equal blocks");
            for (const auto& a : d_.chi_gen[i])
                if (!(a * d_.xg_orders[i]).is_zero())
                    throw std::invalid_argument(
                        "chi of generator '" + d_.xg_names[i] +
                        "' is not killed by the generator order (chi must be a homomorphism)");
            if (block_perm_power(d_.w_gen[i], d_.xg_orders[i]) != identity_block_perm())
                throw std::invalid_argument(
                    "w of generator '" + d_.xg_names[i] +
                    "' has order not dividing the generator order");
        }
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < k; ++j)
                if (compose_block_perm(d_.w_gen[i], d_.w_gen[j]) !=
                    compose_block_perm(d_.w_gen[j], d_.w_gen[i]))
                    throw std::invalid_argument(
                        "block permutations of an abelian character group must commute");

        // per-element chi and w
        chi_.resize(nxg_);
        w_.resize(nxg_);
        for (long long g = 0; g < nxg_; ++g) {
            std::vector<Angle> per_block(d_.blocks.size());
            std::vector<int> bp = identity_block_perm();
            for (int i = 0; i < k; ++i) {
                long long e = (g / strides_[i]) % d_.xg_orders[i];
                for (std::size_t b = 0; b < d_.blocks.size(); ++b)
                    per_block[b] = per_block[b] + d_.chi_gen[i][b] * e;
                bp = compose_block_perm(bp, block_perm_power(d_.w_gen[i], e));
            }
            chi_[g] = expand_block_angles(per_block);
            w_[g] = bp;
        }

        // subgroup chain
        xl_s_ = subgroup_from_exponents(d_.xl_s_gens);
        xl_omega_ = subgroup_from_exponents(d_.xl_omega_gens);
        xl_omega_vmu_ = subgroup_from_exponents(d_.xl_omega_vmu_gens);
        require_contained(xl_omega_vmu_, xl_omega_, "X^L(omega,V_mu) inside X^L(omega)");
        require_contained(xl_omega_, xl_s_, "X^L(omega) inside X^L(s)");

        // X^L(s) is exactly the kernel of the block-permutation part
        for (long long g = 0; g < nxg_; ++g) {
            bool in_xls = std::binary_search(xl_s_.begin(), xl_s_.end(), (int)g);
            bool trivial_w = w_[g] == identity_block_perm();
            if (in_xls && !trivial_w)
                throw std::invalid_argument(
                    "X^L(s) element with nontrivial block permutation "
                    "(the quotient by X^L(s) must realize the block-permutation part)");
            if (!in_xls && trivial_w)
                throw std::invalid_argument(
                    "block-permutation kernel exceeds X^L(s) "
                    "(the quotient by X^L(s) must realize the block-permutation part)");
        }
        // X^L(omega) is exactly the kernel of chi inside X^L(s)
        for (int g : xl_s_) {
            bool zero = std::all_of(chi_[g].begin(), chi_[g].end(),
                                    [](const Coord& c) { return c == Coord{}; });
            bool in_om = std::binary_search(xl_omega_.begin(), xl_omega_.end(), g);
            if (zero != in_om)
                throw std::invalid_argument(
                    "X^L(omega) must be exactly the translation kernel inside X^L(s)");
        }

        // cocycle
        if (d_.kappa.group_order() == 0)
            kappa_ = Cocycle((int)nxg_);
        else
            kappa_ = d_.kappa;
        validate_cocycle(xg_, kappa_);

        xlomega_sub_ = make_subgroup(xg_, xl_omega_);

        // the fixed subgroup pairs trivially with all of X^L(omega) and the
        // cocycle is inflated from the quotient by it
        for (int v : xl_omega_vmu_) {
            for (int del : xl_omega_)
                if (!commutator_pairing(kappa_, v, del).is_zero())
                    throw std::invalid_argument(
                        "X^L(omega,V_mu) must pair trivially with X^L(omega) under kappa");
        }
        for (int a : xl_omega_)
            for (int b : xl_omega_)
                for (int v : xl_omega_vmu_)
                    for (int vp : xl_omega_vmu_)
                        if (!(kappa_(xg_.mul(a, v), xg_.mul(b, vp)) == kappa_(a, b)))
                            throw std::invalid_argument(
                                "kappa_omega must be inflated from X^L(omega)/X^L(omega,V_mu)");

        // the sharp-translation generators must form a finite subgroup
        for (const auto& v : d_.sharp_translations)
            if ((int)v.size() != (int)d_.blocks.size())
                throw std::invalid_argument("sharp translation has one angle per block");

        // distinct block permutations: the image group R_s#
        std::map<std::vector<int>, int> seen;
        for (long long g = 0; g < nxg_; ++g) {
            if (seen.emplace(w_[g], (int)rsharp_.size()).second) {
                rsharp_.push_back(w_[g]);
                rsharp_lift_.push_back((int)g);
            }
        }
        rsharp_index_ = std::move(seen);
    }

    std::vector<int> generator_indices() const {
        std::vector<int> gens;
        for (std::size_t i = 0; i < strides_.size(); ++i)
            if (d_.xg_orders[i] > 1) gens.push_back((int)strides_[i]);
        if (gens.empty()) gens.push_back(0);
        return gens;
    }

    std::vector<int> identity_block_perm() const {
        std::vector<int> id(d_.blocks.size());
        std::iota(id.begin(), id.end(), 0);
        return id;
    }
    static std::vector<int> compose_block_perm(const std::vector<int>& a,
                                               const std::vector<int>& b) {
        std::vector<int> c(a.size());
        for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[b[i]];
        return c;
    }
    std::vector<int> block_perm_power(const std::vector<int>& a, long long e) const {
        std::vector<int> r = identity_block_perm();
        for (long long i = 0; i < e; ++i) r = compose_block_perm(a, r);
        return r;
    }
    bool is_block_perm(const std::vector<int>& bp) const {
        std::vector<char> hit(d_.blocks.size(), 0);
        for (std::size_t b = 0; b < bp.size(); ++b) {
            if (bp[b] < 0 || bp[b] >= (int)d_.blocks.size() || hit[bp[b]]++) return false;
            if (d_.blocks[bp[b]].m != d_.blocks[b].m || d_.blocks[bp[b]].e != d_.blocks[b].e ||
                d_.blocks[bp[b]].d != d_.blocks[b].d)
                return false;
        }
        return true;
    }

    std::vector<int> subgroup_from_exponents(const std::vector<std::vector<int>>& gens) const {
        std::vector<int> seed;
        for (const auto& ev : gens) {
            if ((int)ev.size() != (int)d_.xg_orders.size())
                throw std::invalid_argument("subgroup generator exponent vector has wrong length");
            long long idx = 0;
            for (std::size_t i = 0; i < ev.size(); ++i)
                idx += (((long long)ev[i] % d_.xg_orders[i] + d_.xg_orders[i]) % d_.xg_orders[i]) *
                       strides_[i];
            seed.push_back((int)idx);
        }
        return xg_.closure(seed);
    }

    static void require_contained(const std::vector<int>& small, const std::vector<int>& big,
                                  const std::string& what) {
        for (int x : small)
            if (!std::binary_search(big.begin(), big.end(), x))
                throw std::invalid_argument("subgroup chain violated: " + what);
    }

    InertialClassData d_;
    int rank_ = 0;
    std::vector<int> offsets_;
    std::vector<int> coord_block_;
    long long nxg_ = 1;
    std::vector<long long> strides_;
    FiniteGroup xg_;
    std::vector<int> xl_s_, xl_omega_, xl_omega_vmu_;
    Cocycle kappa_;
    EmbeddedGroup xlomega_sub_;
    std::vector<std::vector<Coord>> chi_;
    std::vector<std::vector<int>> w_;
    std::vector<std::vector<int>> rsharp_;
    std::vector<int> rsharp_lift_;
    std::map<std::vector<int>, int> rsharp_index_;
};

inline InertialClass build_inertial_class(InertialClassData data) {
    return InertialClass(std::move(data));
}

// ---------------------------------------------------------------------------
// stabilizer tower
// ---------------------------------------------------------------------------

struct StabilizerTower {
    TorusGroup ws;      // W_s
    TorusGroup wsharp;  // W_s x| R_s#
    long long rsharp_order = 1;
    long long stab_plus_order = 1; // |X^G(s)|
};

inline StabilizerTower stabilizer_tower(const InertialClass& s) {
    StabilizerTower t;
    t.ws = TorusGroup(s.rank(), s.ws_generators());
    auto gens = s.ws_generators();
    for (std::size_t r = 1; r < s.rsharp().size(); ++r)
        gens.push_back(PermTrans::permutation(s.block_perm_to_coords(s.rsharp()[r])));
    t.wsharp = TorusGroup(s.rank(), gens);
    t.rsharp_order = (long long)s.rsharp().size();
    t.stab_plus_order = s.xg().order();
    if (t.wsharp.order() != t.ws.order() * t.rsharp_order)
        throw std::logic_error(
            "W_s# does not decompose as W_s x| R_s# (order product violated)");
    return t;
}

// ---------------------------------------------------------------------------
// component tori and subordinate components
// ---------------------------------------------------------------------------

struct ComponentTorus {
    int rank = 0;
    std::vector<std::vector<Coord>> quotient_translations; // the subgroup {chi_gamma}
    bool sharp_flag = false;
    std::vector<std::vector<Coord>> sharp_extra; // extra translations when sharp

    // canonical representative of a point modulo the quotient translations
    TorusPoint reduce(const TorusPoint& x) const {
        TorusPoint best = x;
        for (const auto& tr : all_translations_) {
            TorusPoint y(x.size());
            for (std::size_t i = 0; i < x.size(); ++i) y[i] = x[i] + tr[i];
            if (y < best) best = y;
        }
        return best;
    }
    std::vector<std::vector<Coord>> all_translations_; // closure, includes zero
};

namespace detail {
inline std::vector<std::vector<Coord>> close_translations(
    int rank, const std::vector<std::vector<Coord>>& gens, const char* what) {
    std::map<std::vector<Coord>, char> seen;
    std::vector<Coord> zero(rank);
    std::vector<std::vector<Coord>> out{zero};
    seen[zero] = 1;
    for (std::size_t i = 0; i < out.size(); ++i)
        for (const auto& g : gens) {
            std::vector<Coord> next(rank);
            for (int c = 0; c < rank; ++c) next[c] = out[i][c] + g[c];
            if (seen.emplace(next, 1).second) {
                out.push_back(next);
                if (out.size() > 4096)
                    throw std::invalid_argument(std::string(what) + " does not close into a "
                                                                    "finite translation subgroup");
            }
        }
    return out;
}
} // namespace detail

struct SubordinateComponent {
    std::vector<int> orbit;        // irrep indices of C[X^L(omega), kappa_omega]
    std::vector<int> xl_s_sigma;   // X^L(s, sigma#): element indices in X^G(s)
    std::vector<int> r_t_sharp;    // indices into s.rsharp()
    ComponentTorus torus;
    TorusGroup w_t_sharp;          // W_s x| R_t#
    Cocycle kappa_sigma;           // on w_t_sharp.group(), inflated from R_t#
    std::vector<TwistedIrrep> omega_irreps; // the fiber the orbit lives in

    std::string str() const {
        std::string s = "component{orbit=";
        for (std::size_t i = 0; i < orbit.size(); ++i) {
            if (i) s += ",";
            s += std::to_string(orbit[i]);
        }
        return s + "}";
    }
};

// the R_t#-part of a torus symmetry, as an index into s.rsharp()
inline int block_perm_index_of(const InertialClass& s, const PermTrans& el) {
    std::vector<int> bp(s.blocks().size(), -1);
    for (int c = 0; c < s.rank(); ++c) {
        // coordinate el.src[i] feeds output i: block of src goes to block of i
        int from = s.coord_block(el.src[c]);
        int to = s.coord_block(c);
        if (bp[from] >= 0 && bp[from] != to) return -1;
        bp[from] = to;
    }
    auto it = std::find(s.rsharp().begin(), s.rsharp().end(), bp);
    if (it == s.rsharp().end()) return -1;
    return (int)(it - s.rsharp().begin());
}

inline std::vector<SubordinateComponent> enumerate_subordinate(const InertialClass& s,
                                                               bool sharp_flag = true) {
    const auto& sub = s.xl_omega_subgroup();
    Cocycle kom = s.kappa_omega();
    auto irreps = twisted_irreps(sub.group, kom);

    // the twisting action of a character-group element on the fiber
    auto act_on = [&](int gamma, int irrep_idx) {
        auto chi = twist_character(irreps[irrep_idx].character, s.phi(gamma));
        int out = find_twisted_irrep(irreps, chi);
        if (out < 0)
            throw std::invalid_argument(
                "the twisting characters do not permute the modules of "
                "C[X^L(omega),kappa_omega] (phi is not a homomorphism into the right group)");
        return out;
    };

    // orbits under X^L(s)
    std::vector<int> orbit_id(irreps.size(), -1);
    std::vector<std::vector<int>> orbits;
    for (std::size_t i = 0; i < irreps.size(); ++i) {
        if (orbit_id[i] >= 0) continue;
        std::vector<int> orb{(int)i};
        orbit_id[i] = (int)orbits.size();
        for (std::size_t k = 0; k < orb.size(); ++k)
            for (int gamma : s.xl_s()) {
                int j = act_on(gamma, orb[k]);
                if (orbit_id[j] < 0) {
                    orbit_id[j] = (int)orbits.size();
                    orb.push_back(j);
                }
            }
        std::sort(orb.begin(), orb.end());
        orbits.push_back(std::move(orb));
    }

    std::vector<SubordinateComponent> out;
    for (const auto& orb : orbits) {
        SubordinateComponent comp;
        comp.orbit = orb;
        comp.omega_irreps = irreps;

        // stabilizer of a module, which must not depend on the module chosen
        std::vector<int> stab0;
        for (std::size_t mi = 0; mi < orb.size(); ++mi) {
            std::vector<int> stab;
            for (int gamma : s.xl_s())
                if (act_on(gamma, orb[mi]) == orb[mi]) stab.push_back(gamma);
            if (mi == 0)
                stab0 = stab;
            else if (stab != stab0)
                throw std::invalid_argument(
                    "component stabilizer X^L(s,sigma#) depends on the module chosen "
                    "within its orbit");
        }
        comp.xl_s_sigma = stab0;

        // component torus: quotient by the chi translations of the stabilizer
        comp.torus.rank = s.rank();
        comp.torus.sharp_flag = sharp_flag;
        std::vector<std::vector<Coord>> gens;
        for (int gamma : stab0) gens.push_back(s.chi(gamma));
        comp.torus.quotient_translations =
            detail::close_translations(s.rank(), gens, "the chi translation set");
        auto all = comp.torus.quotient_translations;
        if (sharp_flag) {
            for (const auto& v : s.sharp_generators()) {
                comp.torus.sharp_extra.push_back(v.t);
                gens.push_back(v.t);
            }
            all = detail::close_translations(s.rank(), gens,
                                             "the chi + sharp translation set");
        }
        comp.torus.all_translations_ = std::move(all);

        // R_t#: block permutations whose lifts fix the orbit
        comp.r_t_sharp.push_back(0);
        for (std::size_t r = 1; r < s.rsharp().size(); ++r) {
            int lift = s.rsharp_lift((int)r);
            int moved = act_on(lift, orb[0]);
            if (std::binary_search(orb.begin(), orb.end(), moved))
                comp.r_t_sharp.push_back((int)r);
        }

        // W_t# = W_s x| R_t#
        auto gens_w = s.ws_generators();
        for (int r : comp.r_t_sharp)
            if (r != 0)
                gens_w.push_back(PermTrans::permutation(s.block_perm_to_coords(s.rsharp()[r])));
        comp.w_t_sharp = TorusGroup(s.rank(), gens_w);
        if (comp.w_t_sharp.order() != s.ws_order() * (long long)comp.r_t_sharp.size())
            throw std::invalid_argument(
                "W_t# does not decompose as W_s x| R_t# (order product violated)");

        // kappa_sigma#: inflation along W_t# -> R_t# of kappa on canonical lifts
        const auto& wt = comp.w_t_sharp;
        Cocycle ks(wt.order());
        std::vector<int> lift_of(wt.order());
        for (int u = 0; u < wt.order(); ++u) {
            int r = block_perm_index_of(s, wt.element(u));
            if (r < 0) throw std::logic_error("element of W_t# without a block-permutation part");
            lift_of[u] = s.rsharp_lift(r);
        }
        for (int u = 0; u < wt.order(); ++u)
            for (int v = 0; v < wt.order(); ++v)
                ks.set(u, v, s.kappa()(lift_of[u], lift_of[v]));
        try {
            validate_cocycle(wt.group(), ks);
        } catch (const std::invalid_argument& e) {
            throw std::invalid_argument(
                std::string("component cocycle kappa_sigma# is inconsistent (the canonical "
                            "lifts do not produce a cocycle): ") +
                e.what());
        }
        // triviality on the W_s side
        for (int u = 0; u < wt.order(); ++u)
            for (int v = 0; v < wt.order(); ++v) {
                bool u_in_ws = block_perm_index_of(s, wt.element(u)) == 0;
                bool v_in_ws = block_perm_index_of(s, wt.element(v)) == 0;
                if ((u_in_ws || v_in_ws) && !ks(u, v).is_zero())
                    throw std::logic_error("kappa_sigma# fails to vanish on the W_s side");
            }
        comp.kappa_sigma = std::move(ks);
        out.push_back(std::move(comp));
    }
    return out;
}

} // namespace bq
