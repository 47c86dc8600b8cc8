#pragma once

#include <algorithm>
#include <numeric>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include <boost/rational.hpp>

#include "steinberg/coxfaces.hpp"
#include "steinberg/error.hpp"
#include "steinberg/torusfaces.hpp"
#include "steinberg/weyl.hpp"

namespace steinberg {

using Rational = boost::rational<long long>;

/// Compact sign vector of an affine face of type A_{n-1}.  For each pair
/// i < j (lexicographic) the entry (k, s) says k <= x_j - x_i < k + 1, with
/// s = 0 exactly when x_j - x_i = k.
class CompactSignVector {
public:
    struct Entry {
        long long level = 0;
        Sign sign = Sign::Zero;
        friend bool operator==(const Entry&, const Entry&) = default;
    };

    CompactSignVector(int n, std::vector<Entry> entries) : n_(n), entries_(std::move(entries)) {
        Family::A(n);
        if (entries_.size() != static_cast<std::size_t>(n * (n - 1) / 2)) {
            throw InvalidValue("compact sign vector: expected one entry per pair i < j");
        }
        for (const auto& e : entries_)
            if (e.sign == Sign::Minus) throw InvalidValue("compact sign vector: signs lie in {0,+}");
    }

    int rank() const { return n_; }
    const std::vector<Entry>& entries() const { return entries_; }

    static std::size_t index(int n, int i, int j) {
        // pairs (1,2),(1,3),...,(1,n),(2,3),...
        return static_cast<std::size_t>((i - 1) * (2 * n - i) / 2 + (j - i - 1));
    }
    const Entry& at(int i, int j) const { return entries_[index(n_, i, j)]; }
    Entry& at(int i, int j) { return entries_[index(n_, i, j)]; }

    std::string to_string() const {
        std::string s;
        for (int i = 1; i <= n_; ++i)
            for (int j = i + 1; j <= n_; ++j) {
                const auto& e = at(i, j);
                s += "(" + std::to_string(i) + std::to_string(j) + ":" + std::to_string(e.level) +
                     static_cast<char>(e.sign) + ")";
            }
        return s;
    }

    friend bool operator==(const CompactSignVector&, const CompactSignVector&) = default;

private:
    int n_;
    std::vector<Entry> entries_;
};

/// An element of the type A coroot lattice: integer coordinates summing to 0.
class CorootVector {
public:
    explicit CorootVector(std::vector<long long> coords) : coords_(std::move(coords)) {
        if (std::accumulate(coords_.begin(), coords_.end(), 0LL) != 0) {
            throw InvalidValue("coroot vector: coordinates must sum to 0");
        }
    }
    static CorootVector zero(int n) { return CorootVector(std::vector<long long>(n, 0)); }

    int rank() const { return static_cast<int>(coords_.size()); }
    const std::vector<long long>& coords() const { return coords_; }
    long long operator[](int i) const { return coords_[i - 1]; }

    CorootVector operator-() const {
        auto c = coords_;
        for (auto& v : c) v = -v;
        return CorootVector(std::move(c));
    }
    CorootVector operator+(const CorootVector& o) const {
        auto c = coords_;
        for (std::size_t i = 0; i < c.size(); ++i) c[i] += o.coords_[i];
        return CorootVector(std::move(c));
    }

    std::string to_string() const {
        std::string s = "(";
        for (std::size_t i = 0; i < coords_.size(); ++i) s += (i ? "," : "") + std::to_string(coords_[i]);
        return s + ")";
    }

    friend bool operator==(const CorootVector&, const CorootVector&) = default;

private:
    std::vector<long long> coords_;
};

namespace detail {

inline long long floor_of(const Rational& r) {
    long long q = r.numerator() / r.denominator();
    if (r.numerator() < 0 && q * r.denominator() != r.numerator()) --q;
    return q;
}

inline CompactSignVector compact_of_point(const std::vector<Rational>& x) {
    const int n = static_cast<int>(x.size());
    std::vector<CompactSignVector::Entry> entries;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            const Rational d = x[j] - x[i];
            const long long k = floor_of(d);
            entries.push_back({k, d == Rational(k) ? Sign::Zero : Sign::Plus});
        }
    return CompactSignVector(n, std::move(entries));
}

/// A point of the face described by v (with x_1 = 0), or NonRealizable.
inline std::vector<Rational> realize(const CompactSignVector& v) {
    const int n = v.rank();
    std::vector<long long> a(n + 1, 0);
    std::vector<bool> frac_zero(n + 1, true);
    for (int i = 2; i <= n; ++i) {
        a[i] = v.at(1, i).level;
        frac_zero[i] = v.at(1, i).sign == Sign::Zero;
    }
    // cmp[i][j] = -1, 0, 1 as f_i <, =, > f_j
    std::vector<std::vector<int>> cmp(n + 1, std::vector<int>(n + 1, 0));
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) {
            const auto& e = v.at(i, j);
            const long long base = a[j] - a[i];
            int c;
            if (e.sign == Sign::Zero) {
                if (e.level != base) throw NonRealizable("compact sign vector: inconsistent levels");
                c = 0;
            } else if (e.level == base) {
                c = -1;
            } else if (e.level == base - 1) {
                c = 1;
            } else {
                throw NonRealizable("compact sign vector: inconsistent levels");
            }
            cmp[i][j] = c;
            cmp[j][i] = -c;
        }
    // rank of f_i = number of distinct classes strictly below it
    std::vector<int> rank(n + 1, 0);
    int classes = 0;
    for (int i = 1; i <= n; ++i) {
        std::vector<int> below;
        for (int j = 1; j <= n; ++j)
            if (cmp[j][i] < 0) {
                bool fresh = true;
                for (int b : below)
                    if (cmp[b][j] == 0) fresh = false;
                if (fresh) below.push_back(j);
            }
        rank[i] = static_cast<int>(below.size());
        classes = std::max(classes, rank[i] + 1);
    }
    std::vector<Rational> x(n);
    for (int i = 1; i <= n; ++i) x[i - 1] = Rational(a[i]) + Rational(rank[i], classes);
    if (compact_of_point(x) != v) throw NonRealizable("compact sign vector: no face satisfies these constraints");
    return x;
}

struct Canonical {
    std::vector<Rational> z;     // representative in a window of width <= 1
    std::vector<long long> q;    // floors of the input point
    std::vector<long long> r;    // 0/1 raises used for z
};

/// Moves x by the coroot lattice and multiples of (1,...,1) into the window
/// used by lift: values in [min, min + 1], ties at min + 1 only for the
/// smallest labels of the lowest class.
inline Canonical canonicalize(const std::vector<Rational>& x) {
    const int n = static_cast<int>(x.size());
    Canonical c{std::vector<Rational>(n), std::vector<long long>(n), std::vector<long long>(n, 0)};
    std::vector<Rational> phi(n);
    long long total = 0;
    for (int i = 0; i < n; ++i) {
        c.q[i] = floor_of(x[i]);
        phi[i] = x[i] - Rational(c.q[i]);
        total += c.q[i];
    }
    const long long t = ((total % n) + n) % n;
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int i, int j) {
        return phi[i] != phi[j] ? phi[i] < phi[j] : i < j;
    });
    for (long long k = 0; k < t; ++k) c.r[order[k]] = 1;
    for (int i = 0; i < n; ++i) c.z[i] = phi[i] + Rational(c.r[i]);
    return c;
}

inline SpinNecklace necklace_of_window(const std::vector<Rational>& z) {
    const int n = static_cast<int>(z.size());
    std::vector<Rational> values(z);
    std::sort(values.begin(), values.end());
    values.erase(std::unique(values.begin(), values.end()), values.end());
    SplitNecklace s{n, {}, {}};
    for (const auto& val : values) {
        Block b;
        for (int i = 0; i < n; ++i)
            if (z[i] == val) b.push_back(i + 1);
        s.blocks.push_back(std::move(b));
    }
    if (values.size() >= 2 && values.back() == values.front() + Rational(1)) {
        s.tail = std::move(s.blocks.back());
        s.blocks.pop_back();
    }
    return SpinNecklace::from_split(s);
}

}  // namespace detail

/// Compact sign vector of the affine face with coordinates (p-1)/m on the
/// p-th block of split(N) (m blocks) and 1 on the tail.
inline CompactSignVector lift(const SpinNecklace& nk) {
    const auto s = split(nk);
    const long long m = static_cast<long long>(s.blocks.size());
    std::vector<Rational> x(nk.rank());
    for (std::size_t p = 0; p < s.blocks.size(); ++p)
        for (int e : s.blocks[p]) x[e - 1] = Rational(static_cast<long long>(p), m);
    for (int e : s.tail) x[e - 1] = Rational(1);
    return detail::compact_of_point(x);
}

inline CompactSignVector translate(const CompactSignVector& v, const CorootVector& mu) {
    if (mu.rank() != v.rank()) throw FamilyMismatch("translate: rank mismatch");
    CompactSignVector out = v;
    for (int i = 1; i <= v.rank(); ++i)
        for (int j = i + 1; j <= v.rank(); ++j) out.at(i, j).level += mu[j] - mu[i];
    return out;
}

/// Tits product of an affine face with the celestial face of G, entrywise.
inline CompactSignVector oracle_act(const CompactSignVector& v, const SetComposition& g) {
    if (g.rank() != v.rank()) throw FamilyMismatch("oracle_act: rank mismatch");
    const int n = v.rank();
    const auto pos = detail::block_index(g.blocks(), n);
    CompactSignVector out = v;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) {
            auto& e = out.at(i, j);
            if (e.sign != Sign::Zero) continue;
            const int d = pos[j + n] - pos[i + n];
            if (d > 0) {
                e.sign = Sign::Plus;
            } else if (d < 0) {
                e.level -= 1;
                e.sign = Sign::Plus;
            }
        }
    return out;
}

/// The torus face of an affine face.
inline SpinNecklace project(const CompactSignVector& v) {
    return detail::necklace_of_window(detail::canonicalize(detail::realize(v)).z);
}

/// The unique (mu, w) with the face equal to mu + w A_J and affine descents of w inside J.
inline std::pair<CorootVector, WeylElement> w_of_affine_face(const CompactSignVector& v) {
    const int n = v.rank();
    const auto alcove = oracle_act(v, SetComposition::fundamental_chamber(n));
    const auto c = detail::canonicalize(detail::realize(alcove));
    std::vector<int> w(n);
    std::iota(w.begin(), w.end(), 1);
    std::sort(w.begin(), w.end(), [&](int i, int j) { return c.z[i - 1] < c.z[j - 1]; });
    std::vector<long long> mu(n);
    long long total = 0;
    for (int i = 0; i < n; ++i) {
        mu[i] = c.q[i] - c.r[i];
        total += mu[i];
    }
    for (auto& m : mu) m -= total / n;
    return {CorootVector(std::move(mu)), WeylElement(Family::A(n), std::move(w))};
}

inline std::ostream& operator<<(std::ostream& os, const CompactSignVector& x) { return os << x.to_string(); }
inline std::ostream& operator<<(std::ostream& os, const CorootVector& x) { return os << x.to_string(); }

}  // namespace steinberg
