#pragma once

#include <algorithm>
#include <compare>
#include <cstdlib>
#include <functional>
#include <ostream>
#include <string>
#include <vector>

#include "steinberg/error.hpp"
#include "steinberg/family.hpp"

namespace steinberg {

/// An element of the Weyl group of type A_{n-1} or C_n in one-line notation.
///
/// Type A stores the permutation w_1 ... w_n of [n].  Type C stores only the
/// positive half w_1 ... w_n of a signed permutation of [-n, n]; the values
/// w(-i) = -w(i) and w(0) = 0 are implied.
class WeylElement {
public:
    /// Validates the one-line notation against the family.
    WeylElement(Family family, std::vector<int> values) : family_(family), values_(std::move(values)) {
        validate();
    }

    static WeylElement identity(Family family) {
        std::vector<int> v(family.rank);
        for (int i = 0; i < family.rank; ++i) v[i] = i + 1;
        return WeylElement(family, std::move(v), trusted{});
    }

    const Family& family() const { return family_; }
    int rank() const { return family_.rank; }
    const std::vector<int>& values() const { return values_; }

    /// w(i) for i in [1, n] (type A) or [-n, n] (type C).
    int operator()(int i) const {
        if (i > 0) return values_[i - 1];
        if (i == 0) return 0;
        return -values_[-i - 1];
    }

    bool is_identity() const {
        for (int i = 0; i < rank(); ++i)
            if (values_[i] != i + 1) return false;
        return true;
    }

    std::string to_string() const {
        std::string s;
        for (int v : values_) {
            if (!s.empty() && rank() >= 10) s += ' ';
            if (v < 0) s += '-';
            s += std::to_string(std::abs(v));
        }
        return s;
    }

    friend bool operator==(const WeylElement&, const WeylElement&) = default;
    /// Lexicographic on the stored value sequence (family first).
    friend auto operator<=>(const WeylElement&, const WeylElement&) = default;

private:
    struct trusted {};
    WeylElement(Family family, std::vector<int> values, trusted)
        : family_(family), values_(std::move(values)) {}

    friend WeylElement multiply(const WeylElement&, const WeylElement&);
    friend WeylElement inverse(const WeylElement&);

    void validate() const {
        const int n = family_.rank;
        if (static_cast<int>(values_.size()) != n) {
            throw InvalidValue("one-line notation of length " + std::to_string(values_.size()) +
                               " for " + family_.name());
        }
        std::vector<bool> seen(n + 1, false);
        for (int v : values_) {
            const int a = std::abs(v);
            if (a < 1 || a > n || (family_.is_a() && v < 0) || seen[a]) {
                throw InvalidValue("not a " + std::string(family_.is_a() ? "" : "signed ") +
                                   "permutation of " + std::to_string(n));
            }
            seen[a] = true;
        }
    }

    Family family_;
    std::vector<int> values_;
};

/// Composition (uv)(i) = u(v(i)).
inline WeylElement multiply(const WeylElement& u, const WeylElement& v) {
    require_same(u.family(), v.family(), "multiply");
    std::vector<int> out(u.rank());
    for (int i = 0; i < u.rank(); ++i) out[i] = u(v.values_[i]);
    return WeylElement(u.family(), std::move(out), WeylElement::trusted{});
}

inline WeylElement operator*(const WeylElement& u, const WeylElement& v) { return multiply(u, v); }

inline WeylElement inverse(const WeylElement& u) {
    std::vector<int> out(u.rank());
    for (int i = 1; i <= u.rank(); ++i) {
        const int v = u.values_[i - 1];
        out[std::abs(v) - 1] = v > 0 ? i : -i;
    }
    return WeylElement(u.family(), std::move(out), WeylElement::trusted{});
}

namespace detail {

// w_i under the boundary conventions: type A reads subscripts modulo n,
// type C sets w_0 = w_{n+1} = 0.
inline int boundary_value(const WeylElement& w, int i) {
    const int n = w.rank();
    if (w.family().is_a()) {
        const int k = ((i - 1) % n + n) % n;
        return w.values()[k];
    }
    if (i <= 0 || i > n) return 0;
    return w.values()[i - 1];
}

}  // namespace detail

/// Right descents {i in Delta : w_i > w_{i+1}}.
inline ColorSet descent_set(const WeylElement& w) {
    ColorSet out(w.family());
    for (int i : w.family().finite_indices()) {
        if (detail::boundary_value(w, i) > detail::boundary_value(w, i + 1)) out.insert(i);
    }
    return out;
}

/// Affine descents: descents together with the test at the affine index n.
inline ColorSet affine_descent_set(const WeylElement& w) {
    ColorSet out = descent_set(w);
    const int n = w.rank();
    if (detail::boundary_value(w, n) > detail::boundary_value(w, n + 1)) out.insert(n);
    return out;
}

/// |W|: n! for type A, 2^n n! for type C.
inline std::size_t group_order(Family family) {
    std::size_t order = 1;
    for (int i = 2; i <= family.rank; ++i) order *= static_cast<std::size_t>(i);
    if (family.is_c()) order <<= family.rank;
    return order;
}

/// Visits every group element once in lexicographic order of the one-line notation.
inline void for_each_element(Family family, const std::function<void(const WeylElement&)>& visit,
                             std::size_t budget = enumeration_budget()) {
    const std::size_t order = group_order(family);
    if (order > budget) throw BudgetExceeded("group " + family.name() + " of order " +
                                             std::to_string(order), budget);
    const int n = family.rank;
    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i) perm[i] = i + 1;
    if (family.is_a()) {
        do {
            visit(WeylElement(family, perm));
        } while (std::next_permutation(perm.begin(), perm.end()));
        return;
    }
    // Signed case: lexicographic order over signed sequences.  Collect then sort.
    std::vector<WeylElement> all;
    all.reserve(order);
    do {
        for (unsigned signs = 0; signs < (1U << n); ++signs) {
            std::vector<int> v(perm);
            for (int i = 0; i < n; ++i)
                if ((signs >> i) & 1U) v[i] = -v[i];
            all.emplace_back(family, std::move(v));
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    std::sort(all.begin(), all.end());
    for (const auto& w : all) visit(w);
}

inline std::vector<WeylElement> enumerate_group(Family family, std::size_t budget = enumeration_budget()) {
    std::vector<WeylElement> out;
    for_each_element(family, [&](const WeylElement& w) { out.push_back(w); }, budget);
    return out;
}

/// The simple reflections, one per index of Delta.
inline std::vector<WeylElement> simple_reflections(Family family) {
    std::vector<WeylElement> out;
    const int n = family.rank;
    for (int i : family.finite_indices()) {
        std::vector<int> v(n);
        for (int k = 0; k < n; ++k) v[k] = k + 1;
        if (family.is_a()) {
            std::swap(v[i - 1], v[i]);           // transposition (i, i+1)
        } else if (i == 0) {
            v[0] = -1;                           // reflection in 2 eps_1
        } else {
            std::swap(v[i - 1], v[i]);           // reflection in eps_{i+1} - eps_i
        }
        out.emplace_back(family, std::move(v));
    }
    return out;
}

inline std::ostream& operator<<(std::ostream& os, const WeylElement& x) { return os << x.to_string(); }

}  // namespace steinberg
