#pragma once
// Type-A Springer data: Jordan types, symmetric group irreps, flag-variety
// fiber dimensions and distinguished Levi shapes.
//
// Convention (fixed globally, recorded in report metadata): the regular
// class (n) corresponds to the trivial representation and (1^n) to sign.
// In the partition labelling of symmetric group characters used throughout,
// the correspondence is then the identity on partitions.

#include "bq/charactertable.hpp"
#include "bq/partition.hpp"

namespace bq {

inline const char* springer_convention() { return "regular->trivial (identity on partitions)"; }

inline Partition springer_irrep_of_class(const Partition& jordan_type) { return jordan_type; }
inline Partition springer_class_of_irrep(const Partition& irrep_label) { return irrep_label; }

// dim of the fixed-flag variety of a unipotent with Jordan type lambda:
// n(lambda) = sum_j binom(lambda'_j, 2)
inline long long a_value(const Partition& lambda) {
    long long a = 0;
    const Partition conj = lambda.conjugate();
    for (int c : conj.parts()) a += (long long)c * (c - 1) / 2;
    return a;
}

// the same quantity by the row formula sum_i (i-1) lambda_i
inline long long a_value_alt(const Partition& lambda) {
    long long a = 0;
    const auto& parts = lambda.parts();
    for (std::size_t i = 0; i < parts.size(); ++i) a += (long long)i * parts[i];
    return a;
}

struct UnipotentClass {
    std::vector<Partition> blocks;

    bool operator==(const UnipotentClass& o) const { return blocks == o.blocks; }
    bool operator!=(const UnipotentClass& o) const { return blocks != o.blocks; }
    bool operator<(const UnipotentClass& o) const { return blocks < o.blocks; }
    std::string str() const { return tuple_str(blocks); }
};

inline long long a_value(const UnipotentClass& u) {
    long long a = 0;
    for (const auto& p : u.blocks) a += a_value(p);
    return a;
}

// Standard Levi shape in which a class is distinguished (regular in every
// factor): one GL_{part} factor per part, collected with multiplicities.
struct LeviShape {
    std::vector<std::vector<std::pair<int, int>>> factors; // per block: (size, count), size desc

    bool operator==(const LeviShape& o) const { return factors == o.factors; }
    std::string str() const {
        std::string s;
        for (std::size_t b = 0; b < factors.size(); ++b) {
            if (b) s += " x ";
            for (std::size_t i = 0; i < factors[b].size(); ++i) {
                if (i) s += "*";
                s += "GL" + std::to_string(factors[b][i].first);
                if (factors[b][i].second > 1) s += "^" + std::to_string(factors[b][i].second);
            }
        }
        return s;
    }
};

inline LeviShape distinguished_levi(const UnipotentClass& u) {
    LeviShape shape;
    for (const auto& p : u.blocks) {
        std::vector<std::pair<int, int>> fac;
        for (int part : p.parts()) {
            if (!fac.empty() && fac.back().first == part)
                ++fac.back().second;
            else
                fac.emplace_back(part, 1);
        }
        shape.factors.push_back(std::move(fac));
    }
    return shape;
}

// inverse of distinguished_levi: the class regular in each factor
inline UnipotentClass levi_regular_class(const LeviShape& shape) {
    UnipotentClass u;
    for (const auto& fac : shape.factors) {
        std::vector<int> parts;
        for (auto [b, c] : fac)
            for (int i = 0; i < c; ++i) parts.push_back(b);
        u.blocks.emplace_back(std::move(parts));
    }
    return u;
}

namespace detail {
// cycle type of a permutation restricted to an invariant coordinate set
inline Partition cycle_type_on(const std::vector<int>& perm, const std::vector<int>& coords) {
    std::map<int, int> pos;
    for (std::size_t i = 0; i < coords.size(); ++i) pos[coords[i]] = (int)i;
    std::vector<char> seen(coords.size(), 0);
    std::vector<int> type;
    for (std::size_t i = 0; i < coords.size(); ++i) {
        if (seen[i]) continue;
        int len = 0, j = (int)i;
        while (!seen[j]) {
            seen[j] = 1;
            int image = perm[coords[j]];
            auto it = pos.find(image);
            if (it == pos.end())
                throw std::invalid_argument("permutation does not preserve the factor");
            j = it->second;
            ++len;
        }
        type.push_back(len);
    }
    return Partition(std::move(type));
}
} // namespace detail

// Decomposes the restriction of a character of W to the product of symmetric
// groups on the given coordinate factors, checks that the constituents form
// a single orbit under the factor-permutation action of W, and returns the
// canonical (least) partition tuple of that orbit as a unipotent class.
//
// W must be a permutation group, rho a character on its elements which is a
// genuine linear character on the factor subgroup.
inline UnipotentClass restrict_and_identify(const FiniteGroup& w, const std::vector<Cyc>& rho,
                                            const std::vector<std::vector<int>>& factors) {
    const auto* perms = w.permutations();
    if (!perms) throw std::invalid_argument("restriction needs a permutation group");

    // the reflection subgroup: elements preserving every factor setwise
    std::vector<int> wr_elems;
    for (int e = 0; e < w.order(); ++e) {
        bool keeps = true;
        for (const auto& f : factors) {
            for (int c : f) {
                bool inside = false;
                for (int c2 : f) inside |= (*perms)[e][c] == c2;
                if (!inside) {
                    keeps = false;
                    break;
                }
            }
            if (!keeps) break;
        }
        if (keeps) wr_elems.push_back(e);
    }

    std::vector<int> sizes;
    for (const auto& f : factors) sizes.push_back((int)f.size());
    long long expected = 1;
    for (int s : sizes)
        for (int i = 2; i <= s; ++i) expected *= i;
    if ((long long)wr_elems.size() != expected)
        throw std::invalid_argument("factor subgroup has order " +
                                    std::to_string(wr_elems.size()) + ", expected " +
                                    std::to_string(expected));

    // inner products against the partition-tuple characters
    std::vector<std::vector<Partition>> constituents;
    for (const auto& tuple : all_partition_tuples(sizes)) {
        Cyc acc;
        for (int e : wr_elems) {
            long long v = 1;
            for (std::size_t b = 0; b < factors.size(); ++b)
                v *= murnaghan_nakayama(tuple[b], detail::cycle_type_on((*perms)[e], factors[b]));
            acc += rho[e] * Cyc(Rat(v));
        }
        Cyc avg = acc * Rat(1, (long long)wr_elems.size());
        if (!avg.is_rational())
            throw std::invalid_argument("restriction has irrational multiplicities");
        Rat m = avg.rational_value();
        if (m.denominator() != 1 || m.numerator() < 0)
            throw std::invalid_argument("restriction multiplicity is not a nonnegative integer");
        if (m.numerator() > 0) constituents.push_back(tuple);
    }
    if (constituents.empty()) throw std::invalid_argument("restriction has no constituents");

    // factor-permutation action of W on partition tuples
    auto factor_perm_of = [&](int e) -> std::optional<std::vector<int>> {
        std::vector<int> image(factors.size(), -1);
        for (std::size_t i = 0; i < factors.size(); ++i) {
            std::vector<int> moved;
            for (int c : factors[i]) moved.push_back((*perms)[e][c]);
            std::sort(moved.begin(), moved.end());
            for (std::size_t j = 0; j < factors.size(); ++j) {
                auto sorted = factors[j];
                std::sort(sorted.begin(), sorted.end());
                if (sorted == moved) {
                    image[i] = (int)j;
                    break;
                }
            }
            if (image[i] < 0) return std::nullopt;
        }
        return image;
    };

    std::vector<std::vector<Partition>> orbit{constituents[0]};
    for (std::size_t i = 0; i < orbit.size(); ++i) {
        for (int e = 0; e < w.order(); ++e) {
            auto fp = factor_perm_of(e);
            if (!fp) continue;
            std::vector<Partition> moved(factors.size());
            for (std::size_t j = 0; j < factors.size(); ++j) moved[(*fp)[j]] = orbit[i][j];
            if (std::find(orbit.begin(), orbit.end(), moved) == orbit.end())
                orbit.push_back(std::move(moved));
        }
    }
    for (const auto& c : constituents)
        if (std::find(orbit.begin(), orbit.end(), c) == orbit.end())
            throw std::invalid_argument(
                "restriction constituents are not conjugate under the factor action");

    UnipotentClass out;
    out.blocks = *std::min_element(orbit.begin(), orbit.end());
    return out;
}

} // namespace bq
