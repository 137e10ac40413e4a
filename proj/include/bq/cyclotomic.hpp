#pragma once
// Exact arithmetic in cyclotomic fields Q(zeta_N).
//
// A value is stored at an explicit conductor N as its canonical representative
// in Q[x]/(Phi_N(x)), i.e. a coefficient vector of degree < phi(N) in the
// basis 1, zeta, ..., zeta^{phi(N)-1}.  Binary operations lift both operands
// to the lcm of the conductors, so equality of reduced vectors is equality of
// the numbers they represent.

#include "bq/rational.hpp"

#include <algorithm>
#include <map>
#include <vector>

namespace bq {

namespace detail {

// Cyclotomic polynomials Phi_N as integer coefficient vectors, low degree
// first. Computed by dividing x^N - 1 by all Phi_d with d | N, d < N.
inline const std::vector<long long>& cyclotomic_poly(long long n) {
    static std::map<long long, std::vector<long long>> cache;
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;

    std::vector<long long> num(n + 1, 0);
    num[0] = -1;
    num[n] = 1;
    for (long long d = 1; d < n; ++d) {
        if (n % d != 0) continue;
        const auto& phi_d = cyclotomic_poly(d);
        // exact division num /= phi_d (phi_d is monic)
        std::vector<long long> q(num.size() - phi_d.size() + 1, 0);
        std::vector<long long> rem = num;
        for (long long i = (long long)q.size() - 1; i >= 0; --i) {
            long long c = rem[i + phi_d.size() - 1];
            q[i] = c;
            if (c == 0) continue;
            for (std::size_t j = 0; j < phi_d.size(); ++j) rem[i + j] -= c * phi_d[j];
        }
        num = q;
    }
    return cache.emplace(n, std::move(num)).first->second;
}

} // namespace detail

class Cyc {
public:
    Cyc() : n_(1), c_(1, Rat(0)) {}
    explicit Cyc(const Rat& r) : n_(1), c_(1, r) {}
    Cyc(long long num, long long den) : Cyc(Rat(num, den)) {}

    // exp(2 pi i a): a root of unity given by its angle.
    static Cyc root_of_unity(const Angle& a) {
        long long n = a.order();
        std::vector<Rat> v(n, Rat(0));
        v[(a.value() * n).numerator() % n] = Rat(1);
        return Cyc(n, std::move(v));
    }
    static Cyc zeta(long long k, long long n) { return root_of_unity(Angle(k, n)); }
    static Cyc one() { return Cyc(Rat(1)); }
    static Cyc zero() { return Cyc(); }

    long long conductor() const { return n_; }
    bool is_zero() const {
        return std::all_of(c_.begin(), c_.end(), [](const Rat& r) { return r.numerator() == 0; });
    }
    bool is_rational() const {
        for (std::size_t i = 1; i < c_.size(); ++i)
            if (c_[i].numerator() != 0) return false;
        return true;
    }
    Rat rational_value() const {
        if (!is_rational()) throw std::domain_error("cyclotomic value is not rational");
        return c_[0];
    }

    Cyc operator+(const Cyc& o) const {
        return combine(o, [](std::vector<Rat>& a, const std::vector<Rat>& b) {
            for (std::size_t i = 0; i < b.size(); ++i) a[i] += b[i];
        });
    }
    Cyc operator-(const Cyc& o) const {
        return combine(o, [](std::vector<Rat>& a, const std::vector<Rat>& b) {
            for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
        });
    }
    Cyc operator*(const Cyc& o) const {
        long long n = lcm_ll(n_, o.n_);
        std::vector<Rat> a = lift_coeffs(n), b = o.lift_coeffs(n);
        std::vector<Rat> prod(n, Rat(0));
        for (long long i = 0; i < n; ++i) {
            if (a[i].numerator() == 0) continue;
            for (long long j = 0; j < n; ++j) {
                if (b[j].numerator() == 0) continue;
                prod[(i + j) % n] += a[i] * b[j];
            }
        }
        return Cyc(n, std::move(prod));
    }
    Cyc operator*(const Rat& r) const {
        Cyc out = *this;
        for (auto& x : out.c_) x *= r;
        return out;
    }
    Cyc& operator+=(const Cyc& o) { return *this = *this + o; }
    Cyc& operator-=(const Cyc& o) { return *this = *this - o; }
    Cyc& operator*=(const Cyc& o) { return *this = *this * o; }

    bool operator==(const Cyc& o) const {
        long long n = lcm_ll(n_, o.n_);
        return lift_reduced(n) == o.lift_reduced(n);
    }
    bool operator!=(const Cyc& o) const { return !(*this == o); }

    // Complex conjugation: zeta -> zeta^{-1}.
    Cyc conjugate() const { return galois(n_ - 1 == 0 ? 1 : n_ - 1); }

    // Galois twist zeta -> zeta^k (k need not be coprime to the conductor;
    // for k not coprime this is the multiplicative power substitution).
    Cyc galois(long long k) const {
        std::vector<Rat> v(n_, Rat(0));
        for (long long i = 0; i < (long long)c_.size(); ++i) {
            if (c_[i].numerator() == 0) continue;
            long long e = ((i * k) % n_ + n_) % n_;
            v[e] += c_[i];
        }
        return Cyc(n_, std::move(v));
    }

    std::string str() const {
        if (is_zero()) return "0";
        std::string out;
        for (std::size_t i = 0; i < c_.size(); ++i) {
            if (c_[i].numerator() == 0) continue;
            if (!out.empty()) out += " + ";
            out += to_string(c_[i]);
            if (i > 0) out += "*z" + std::to_string(n_) + "^" + std::to_string(i);
        }
        return out;
    }

private:
    // v is a coefficient vector on powers zeta^0..zeta^{n-1}; reduce mod Phi_n.
    Cyc(long long n, std::vector<Rat> v) : n_(n), c_(reduce(n, std::move(v))) {}

    static std::vector<Rat> reduce(long long n, std::vector<Rat> v) {
        const auto& phi = detail::cyclotomic_poly(n);
        long long deg = (long long)phi.size() - 1;
        v.resize(std::max<std::size_t>(v.size(), deg), Rat(0));
        for (long long i = (long long)v.size() - 1; i >= deg; --i) {
            Rat c = v[i];
            if (c.numerator() == 0) continue;
            v[i] = Rat(0);
            for (long long j = 0; j < deg; ++j) v[i - deg + j] -= c * Rat(phi[j]);
        }
        v.resize(deg);
        return v;
    }

    std::vector<Rat> lift_coeffs(long long n) const {
        std::vector<Rat> v(n, Rat(0));
        long long step = n / n_;
        for (std::size_t i = 0; i < c_.size(); ++i) v[i * step] = c_[i];
        return v;
    }
    std::vector<Rat> lift_reduced(long long n) const { return reduce(n, lift_coeffs(n)); }

    template <typename F>
    Cyc combine(const Cyc& o, F merge) const {
        long long n = lcm_ll(n_, o.n_);
        std::vector<Rat> a = lift_coeffs(n), b = o.lift_coeffs(n);
        merge(a, b);
        return Cyc(n, std::move(a));
    }

    long long n_;
    std::vector<Rat> c_;
};

inline Cyc operator*(const Rat& r, const Cyc& c) { return c * r; }

} // namespace bq
