#pragma once
// Integer partitions: the labels for symmetric group irreps, Jordan types of
// unipotent matrices, and cycle types of permutations.

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

namespace bq {

class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
        std::sort(parts_.begin(), parts_.end(), std::greater<int>());
        while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
        for (int p : parts_)
            if (p < 0) throw std::invalid_argument("negative part in partition");
    }
    Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

    const std::vector<int>& parts() const { return parts_; }
    int size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }
    int length() const { return (int)parts_.size(); }
    bool empty() const { return parts_.empty(); }
    int part(int i) const { return i < (int)parts_.size() ? parts_[i] : 0; }

    Partition conjugate() const {
        std::vector<int> t;
        for (int i = 0; !parts_.empty() && i < parts_[0]; ++i) {
            int cnt = 0;
            for (int p : parts_)
                if (p > i) ++cnt;
            t.push_back(cnt);
        }
        return Partition(std::move(t));
    }

    bool operator==(const Partition& o) const { return parts_ == o.parts_; }
    bool operator!=(const Partition& o) const { return parts_ != o.parts_; }
    bool operator<(const Partition& o) const { return parts_ < o.parts_; }

    std::string str() const {
        std::string s = "[";
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (i) s += ",";
            s += std::to_string(parts_[i]);
        }
        return s + "]";
    }

private:
    std::vector<int> parts_;
};

// lambda <= mu in dominance order (both partitions of the same n).
inline bool dominated_by(const Partition& a, const Partition& b) {
    if (a.size() != b.size()) throw std::invalid_argument("dominance needs equal sizes");
    int sa = 0, sb = 0;
    int len = std::max(a.length(), b.length());
    for (int i = 0; i < len; ++i) {
        sa += a.part(i);
        sb += b.part(i);
        if (sa > sb) return false;
    }
    return true;
}

inline std::vector<Partition> all_partitions(int n) {
    std::vector<Partition> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int rem, int maxpart) -> void {
        if (rem == 0) {
            out.emplace_back(cur);
            return;
        }
        for (int p = std::min(rem, maxpart); p >= 1; --p) {
            cur.push_back(p);
            self(self, rem - p, p);
            cur.pop_back();
        }
    };
    rec(rec, n, n);
    return out;
}

// Tuples of partitions, one per entry of sizes.
inline std::vector<std::vector<Partition>> all_partition_tuples(const std::vector<int>& sizes) {
    std::vector<std::vector<Partition>> out{{}};
    for (int n : sizes) {
        auto ps = all_partitions(n);
        std::vector<std::vector<Partition>> next;
        for (const auto& tup : out)
            for (const auto& p : ps) {
                auto t = tup;
                t.push_back(p);
                next.push_back(std::move(t));
            }
        out = std::move(next);
    }
    return out;
}

inline std::string tuple_str(const std::vector<Partition>& t) {
    std::string s = "(";
    for (std::size_t i = 0; i < t.size(); ++i) {
        if (i) s += ",";
        s += t[i].str();
    }
    return s + ")";
}

} // namespace bq
