#pragma once
// Multisegment combinatorics for type-A parameter sets.
//
// A segment is a string of torus coordinates with a fixed angle and radial
// exponents r, r+1, ..., r+len-1 (the radial unit is one power of q; its
// numeric value never enters).  A multisegment with total length e_i per
// block encodes a pair (t_q, u) with t_q u t_q^{-1} = u^q.  The matching
// commuting pair (t, u) replaces each string by its center value: per block
// and per distinct (angle, center) the segment lengths form the Jordan type
// of u on that eigenvalue of t.  Centering retains the radial start, so the
// correspondence is a bijection with an exact inverse; on tempered
// parameters the center is zero and t is the unitary part of t_q.

#include "bq/bernstein.hpp"
#include "bq/springer.hpp"

namespace bq {

struct Segment {
    int block = 0;
    Angle angle;
    Rat radial_start{0};
    int length = 1;

    Rat center() const { return radial_start + Rat(length - 1, 2); }
    bool balanced() const { return center() == Rat(0); }
    bool operator==(const Segment& o) const {
        return block == o.block && angle == o.angle && radial_start == o.radial_start &&
               length == o.length;
    }
    bool operator<(const Segment& o) const {
        if (block != o.block) return block < o.block;
        if (angle != o.angle) return angle < o.angle;
        if (radial_start != o.radial_start) return radial_start < o.radial_start;
        return length < o.length;
    }
    std::string str() const {
        return "seg(b" + std::to_string(block) + ",ang " + angle.str() + ",r " +
               to_string(radial_start) + ",len " + std::to_string(length) + ")";
    }
};

struct MultiSegment {
    std::vector<int> block_lengths; // the e_i
    std::vector<Segment> segments;  // kept sorted

    void canonicalize() { std::sort(segments.begin(), segments.end()); }
    bool operator==(const MultiSegment& o) const {
        return block_lengths == o.block_lengths && segments == o.segments;
    }
    std::string str() const {
        std::string s = "{";
        for (std::size_t i = 0; i < segments.size(); ++i) {
            if (i) s += " ";
            s += segments[i].str();
        }
        return s + "}";
    }
};

inline void validate_multisegment(const MultiSegment& ms) {
    std::vector<int> totals(ms.block_lengths.size(), 0);
    for (const auto& seg : ms.segments) {
        if (seg.block < 0 || seg.block >= (int)ms.block_lengths.size())
            throw std::invalid_argument("segment block index out of range");
        if (seg.length <= 0) throw std::invalid_argument("segment length must be positive");
        totals[seg.block] += seg.length;
    }
    for (std::size_t b = 0; b < totals.size(); ++b)
        if (totals[b] != ms.block_lengths[b])
            throw std::invalid_argument("segment lengths in block " + std::to_string(b) +
                                        " sum to " + std::to_string(totals[b]) + ", expected " +
                                        std::to_string(ms.block_lengths[b]));
}

struct AffineSpringerParam {
    struct Entry {
        int block = 0;
        Coord eigenvalue;   // angle plus center exponent
        Partition jordan;   // segment lengths at this eigenvalue
        bool operator<(const Entry& o) const {
            if (block != o.block) return block < o.block;
            return eigenvalue < o.eigenvalue;
        }
        bool operator==(const Entry& o) const {
            return block == o.block && eigenvalue == o.eigenvalue && jordan == o.jordan;
        }
    };
    std::vector<int> block_lengths;
    std::vector<Entry> entries; // sorted by (block, eigenvalue)
    // the component-group slot: always the trivial representation in type A
    std::string rho = "triv";

    bool operator==(const AffineSpringerParam& o) const {
        return block_lengths == o.block_lengths && entries == o.entries;
    }
    std::string str() const {
        std::string s = "{";
        for (std::size_t i = 0; i < entries.size(); ++i) {
            if (i) s += " ";
            s += "b" + std::to_string(entries[i].block) + "@" + entries[i].eigenvalue.str() +
                 entries[i].jordan.str();
        }
        return s + "}";
    }
};

inline AffineSpringerParam kl_to_affine(const MultiSegment& ms) {
    validate_multisegment(ms);
    std::map<std::pair<int, Coord>, std::vector<int>> groups;
    for (const auto& seg : ms.segments)
        groups[{seg.block, Coord{seg.angle, seg.center()}}].push_back(seg.length);
    AffineSpringerParam p;
    p.block_lengths = ms.block_lengths;
    for (auto& [key, lens] : groups) {
        AffineSpringerParam::Entry e;
        e.block = key.first;
        e.eigenvalue = key.second;
        e.jordan = Partition(lens);
        p.entries.push_back(std::move(e));
    }
    std::sort(p.entries.begin(), p.entries.end());
    return p;
}

inline MultiSegment affine_to_kl(const AffineSpringerParam& p) {
    MultiSegment ms;
    ms.block_lengths = p.block_lengths;
    for (const auto& e : p.entries)
        for (int len : e.jordan.parts()) {
            Segment seg;
            seg.block = e.block;
            seg.angle = e.eigenvalue.angle;
            seg.radial_start = e.eigenvalue.radial - Rat(len - 1, 2);
            seg.length = len;
            ms.segments.push_back(seg);
        }
    ms.canonicalize();
    validate_multisegment(ms);
    return ms;
}

inline bool is_tempered(const AffineSpringerParam& p) {
    return std::all_of(p.entries.begin(), p.entries.end(),
                       [](const auto& e) { return e.eigenvalue.is_unitary(); });
}

inline bool is_tempered(const MultiSegment& ms) {
    bool balanced = std::all_of(ms.segments.begin(), ms.segments.end(),
                                [](const Segment& s) { return s.balanced(); });
    return balanced && is_tempered(kl_to_affine(ms));
}

inline long long a_weight(const AffineSpringerParam& p) {
    long long a = 0;
    for (const auto& e : p.entries) a += a_value(e.jordan);
    return a;
}
inline long long a_weight(const MultiSegment& ms) { return a_weight(kl_to_affine(ms)); }

// Action of a character-group element of the inertial class: permute blocks
// by its w-part and translate angles by its chi translation.  An out-of-range
// element is rejected; a-weights are preserved by construction and the tests
// recompute them independently.
inline MultiSegment stab_action(const InertialClass& s, int gamma, const MultiSegment& ms) {
    if (gamma < 0 || gamma >= s.xg().order())
        throw std::invalid_argument("element outside the declared stabilizer group");
    if ((int)ms.block_lengths.size() != (int)s.blocks().size())
        throw std::invalid_argument("multisegment block count differs from the inertial class");
    const auto& w = s.wpart(gamma);
    MultiSegment out;
    out.block_lengths = ms.block_lengths;
    for (const auto& seg : ms.segments) {
        Segment t = seg;
        t.block = w[seg.block];
        t.angle = seg.angle + s.chi(gamma)[s.block_offset(t.block)].angle;
        out.segments.push_back(t);
    }
    out.canonicalize();
    validate_multisegment(out);
    return out;
}

// unitary translation by a declared sharp generator
inline MultiSegment sharp_translate(const InertialClass& s, int gen_index,
                                    const MultiSegment& ms) {
    auto gens = s.sharp_generators();
    if (gen_index < 0 || gen_index >= (int)gens.size())
        throw std::invalid_argument("element outside the declared stabilizer group");
    MultiSegment out = ms;
    for (auto& seg : out.segments)
        seg.angle = seg.angle + gens[gen_index].t[s.block_offset(seg.block)].angle;
    out.canonicalize();
    return out;
}

// ---------------------------------------------------------------------------
// enumeration (for tests and the command line)
// ---------------------------------------------------------------------------

// All canonical multisegments for the given block lengths whose segment
// decorations come from angles in mu_{angle_denominator} and radial starts in
// the given list.  The count explodes with many segments over a large
// decoration grid, so callers choose the grid; max_segments <= 0 means
// unbounded.
inline std::vector<MultiSegment> enumerate_multisegments(
    const std::vector<int>& block_lengths, long long angle_denominator,
    const std::vector<Rat>& radial_starts, int max_segments = -1,
    std::size_t limit = 20000000) {
    struct Deco {
        Angle a;
        Rat r;
    };
    std::vector<Deco> decos;
    for (long long k = 0; k < angle_denominator; ++k)
        for (const auto& r : radial_starts) decos.push_back({Angle(k, angle_denominator), r});

    // per block: all canonical segment multisets of the given total length
    auto block_options = [&](int block, int total) {
        std::vector<std::vector<Segment>> out;
        std::vector<Segment> cur;
        // parts weakly decreasing in (length, decoration index) to build each
        // multiset exactly once
        auto rec = [&](auto&& self, int rem, int max_len, int max_deco) -> void {
            if (rem == 0) {
                out.push_back(cur);
                return;
            }
            if (max_segments > 0 && (int)cur.size() >= max_segments) return;
            for (int len = std::min(rem, max_len); len >= 1; --len) {
                int dstart = (len == max_len) ? max_deco : (int)decos.size() - 1;
                for (int d = dstart; d >= 0; --d) {
                    Segment s;
                    s.block = block;
                    s.angle = decos[d].a;
                    s.radial_start = decos[d].r;
                    s.length = len;
                    cur.push_back(s);
                    self(self, rem - len, len, d);
                    cur.pop_back();
                }
            }
        };
        rec(rec, total, total, (int)decos.size() - 1);
        return out;
    };

    std::vector<MultiSegment> result{MultiSegment{block_lengths, {}}};
    for (std::size_t b = 0; b < block_lengths.size(); ++b) {
        auto opts = block_options((int)b, block_lengths[b]);
        std::vector<MultiSegment> next;
        for (const auto& base : result)
            for (const auto& opt : opts) {
                MultiSegment ms = base;
                ms.segments.insert(ms.segments.end(), opt.begin(), opt.end());
                next.push_back(std::move(ms));
                if (next.size() > limit)
                    throw std::invalid_argument("multisegment enumeration exceeds the limit");
            }
        result = std::move(next);
    }
    for (auto& ms : result) ms.canonicalize();
    return result;
}

} // namespace bq
