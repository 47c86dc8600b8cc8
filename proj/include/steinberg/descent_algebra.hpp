#pragma once

#include <algorithm>
#include <bit>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "steinberg/coxfaces.hpp"
#include "steinberg/error.hpp"
#include "steinberg/family.hpp"
#include "steinberg/torusfaces.hpp"
#include "steinberg/weyl.hpp"

namespace steinberg {

using Integer = boost::multiprecision::cpp_int;

/// A group ring element that is not constant on the relevant descent classes.
class NotInSpan : public Error {
public:
    NotInSpan(const std::string& what, WeylElement first, WeylElement second)
        : Error(what), first_(std::move(first)), second_(std::move(second)) {}
    const WeylElement& first() const { return first_; }
    const WeylElement& second() const { return second_; }

private:
    WeylElement first_;
    WeylElement second_;
};

/// A formal face sum that is not invariant under W.
class NotInvariant : public Error {
public:
    using Error::Error;
};

/// Finitely supported map W -> Z; zero coefficients are never stored.
class GroupRingElement {
public:
    explicit GroupRingElement(Family family) : family_(family) {}

    static GroupRingElement of(const WeylElement& w, Integer c = 1) {
        GroupRingElement out(w.family());
        out.add(w, std::move(c));
        return out;
    }
    static GroupRingElement one(Family family) { return of(WeylElement::identity(family)); }

    const Family& family() const { return family_; }
    const std::map<WeylElement, Integer>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t support_size() const { return terms_.size(); }

    Integer coefficient(const WeylElement& w) const {
        auto it = terms_.find(w);
        return it == terms_.end() ? Integer(0) : it->second;
    }

    void add(const WeylElement& w, const Integer& c) {
        require_same(family_, w.family(), "group ring");
        if (c == 0) return;
        auto [it, inserted] = terms_.try_emplace(w, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    GroupRingElement& operator+=(const GroupRingElement& o) {
        require_same(family_, o.family_, "group ring");
        for (const auto& [w, c] : o.terms_) add(w, c);
        return *this;
    }
    GroupRingElement& operator-=(const GroupRingElement& o) {
        require_same(family_, o.family_, "group ring");
        for (const auto& [w, c] : o.terms_) add(w, -c);
        return *this;
    }
    friend GroupRingElement operator+(GroupRingElement a, const GroupRingElement& b) { return a += b; }
    friend GroupRingElement operator-(GroupRingElement a, const GroupRingElement& b) { return a -= b; }
    friend GroupRingElement operator*(const Integer& k, const GroupRingElement& a) {
        GroupRingElement out(a.family_);
        if (k != 0)
            for (const auto& [w, c] : a.terms_) out.terms_.emplace(w, k * c);
        return out;
    }

    std::string to_string() const {
        if (terms_.empty()) return "0";
        std::string s;
        for (const auto& [w, c] : terms_) {
            if (!s.empty()) s += " + ";
            if (c != 1) s += c.str() + "*";
            s += w.to_string();
        }
        return s;
    }

    friend bool operator==(const GroupRingElement&, const GroupRingElement&) = default;

private:
    Family family_;
    std::map<WeylElement, Integer> terms_;
};

/// Convolution product in ZW.
inline GroupRingElement multiply(const GroupRingElement& a, const GroupRingElement& b) {
    require_same(a.family(), b.family(), "multiply");
    std::map<WeylElement, Integer> acc;
    for (const auto& [u, cu] : a.terms())
        for (const auto& [v, cv] : b.terms()) acc[u * v] += cu * cv;
    GroupRingElement out(a.family());
    for (const auto& [w, c] : acc) out.add(w, c);
    return out;
}

inline GroupRingElement operator*(const GroupRingElement& a, const GroupRingElement& b) { return multiply(a, b); }

// ---------------------------------------------------------------------------
// Descent bases

/// x_J, y_J over subsets of Delta.  x~_J runs over nonempty subsets of the
/// affine index set (the full set gives the sum of all elements); y~_J over
/// nonempty proper subsets, the only nonempty affine descent classes.
enum class BasisKind { X, Y, AffineX, AffineY };

inline bool is_affine(BasisKind k) { return k == BasisKind::AffineX || k == BasisKind::AffineY; }

inline std::string basis_name(BasisKind k) {
    switch (k) {
        case BasisKind::X: return "x";
        case BasisKind::Y: return "y";
        case BasisKind::AffineX: return "x~";
        case BasisKind::AffineY: return "y~";
    }
    return "?";
}

inline void check_basis_index(BasisKind kind, const ColorSet& j) {
    switch (kind) {
        case BasisKind::X:
        case BasisKind::Y:
            if (!j.is_finite()) throw InvalidValue(basis_name(kind) + " index must avoid the affine index, got " + j.to_string());
            return;
        case BasisKind::AffineX:
            if (j.empty()) throw InvalidValue("x~ index must be nonempty");
            return;
        case BasisKind::AffineY:
            if (!j.is_proper_affine()) throw InvalidValue("y~ index must be a nonempty proper subset, got " + j.to_string());
            return;
    }
}

/// The descent class key of w for the given basis kind.
inline ColorSet descent_key(const WeylElement& w, BasisKind kind) {
    return is_affine(kind) ? affine_descent_set(w) : descent_set(w);
}

inline GroupRingElement basis_element(BasisKind kind, const ColorSet& j) {
    check_basis_index(kind, j);
    const bool exact = kind == BasisKind::Y || kind == BasisKind::AffineY;
    GroupRingElement out(j.family());
    for_each_element(j.family(), [&](const WeylElement& w) {
        const ColorSet d = descent_key(w, kind);
        if (exact ? d == j : d.is_subset_of(j)) out.add(w, 1);
    });
    return out;
}

/// Legal indices for a basis kind, in ColorSet order.
inline std::vector<ColorSet> basis_indices(BasisKind kind, Family family) {
    switch (kind) {
        case BasisKind::X:
        case BasisKind::Y: return all_finite_color_sets(family);
        case BasisKind::AffineY: return all_affine_color_sets(family);
        case BasisKind::AffineX: {
            auto out = all_affine_color_sets(family);
            out.push_back(ColorSet::affine_full(family));
            std::sort(out.begin(), out.end());
            return out;
        }
    }
    return {};
}

using Expansion = std::map<ColorSet, Integer>;

namespace detail {
inline BasisKind partner(BasisKind k) {
    switch (k) {
        case BasisKind::X: return BasisKind::Y;
        case BasisKind::Y: return BasisKind::X;
        case BasisKind::AffineX: return BasisKind::AffineY;
        case BasisKind::AffineY: return BasisKind::AffineX;
    }
    return k;
}
}  // namespace detail

/// x_J as a sum of y_I over I contained in J (x~ likewise, skipping the empty y~ classes).
inline Expansion x_in_y(BasisKind x_kind, const ColorSet& j) {
    if (x_kind != BasisKind::X && x_kind != BasisKind::AffineX) throw InvalidValue("x_in_y: expected an x kind");
    check_basis_index(x_kind, j);
    const BasisKind y_kind = detail::partner(x_kind);
    Expansion out;
    const auto full = j.bits();
    for (std::uint64_t s = full;; s = (s - 1) & full) {
        const auto i = ColorSet::from_bits(j.family(), s);
        if (!is_affine(y_kind) || i.is_proper_affine()) out[i] = 1;
        if (s == 0) break;
    }
    return out;
}

/// y_J = sum over I contained in J of (-1)^{|J \ I|} x_I (Moebius inversion).
inline Expansion y_in_x(BasisKind y_kind, const ColorSet& j) {
    if (y_kind != BasisKind::Y && y_kind != BasisKind::AffineY) throw InvalidValue("y_in_x: expected a y kind");
    check_basis_index(y_kind, j);
    Expansion out;
    const auto full = j.bits();
    for (std::uint64_t s = full;; s = (s - 1) & full) {
        if (s != 0 || !is_affine(y_kind)) {
            out[ColorSet::from_bits(j.family(), s)] = (std::popcount(full & ~s) % 2 == 0) ? 1 : -1;
        }
        if (s == 0) break;
    }
    return out;
}

inline GroupRingElement combine(BasisKind kind, const Expansion& e, Family family) {
    GroupRingElement out(family);
    for (const auto& [j, c] : e) out += c * basis_element(kind, j);
    return out;
}

/// Coefficients of `a` in {x_J} (kind X) or {x~_J} (kind AffineX).
///
/// The x~_J are linearly dependent: x~ of the full set is the sum of the
/// proper y~ classes.  The expansion is made unique by giving x~ of the full
/// set the least class coefficient over the maximal proper subsets, so at
/// least one of those x~_L has coefficient 0.
///
/// Throws NotInSpan with two elements of one class carrying different coefficients.
inline Expansion express_in_basis(const GroupRingElement& a, BasisKind kind) {
    if (kind != BasisKind::X && kind != BasisKind::AffineX) {
        throw InvalidValue("express_in_basis: expected the x or x~ basis");
    }
    const Family family = a.family();
    std::map<ColorSet, std::pair<WeylElement, Integer>> classes;
    for_each_element(family, [&](const WeylElement& w) {
        const ColorSet d = descent_key(w, kind);
        const Integer c = a.coefficient(w);
        auto [it, inserted] = classes.try_emplace(d, w, c);
        if (!inserted && it->second.second != c) {
            throw NotInSpan("not constant on the descent class " + d.to_string() + ": " +
                                it->second.first.to_string() + " has " + it->second.second.str() + ", " +
                                w.to_string() + " has " + c.str(),
                            it->second.first, w);
        }
    });
    std::map<ColorSet, Integer> c;  // y / y~ coordinates
    for (const auto& [j, entry] : classes) c[j] = entry.second;
    if (kind == BasisKind::AffineX) {
        const auto full = ColorSet::affine_full(family);
        std::optional<Integer> top;
        for (int i : family.affine_indices()) {
            const auto it = c.find(full.without(i));
            const Integer v = it == c.end() ? Integer(0) : it->second;
            if (!top || v < *top) top = v;
        }
        c[full] = *top;
    }
    Expansion out;
    for (const ColorSet& i : basis_indices(kind, family)) {
        Integer sum = 0;
        for (const auto& [j, cj] : c) {
            if (!i.is_subset_of(j)) continue;
            sum += ((j.size() - i.size()) % 2 == 0) ? cj : Integer(-cj);
        }
        if (sum != 0) out[i] = sum;
    }
    return out;
}

// ---------------------------------------------------------------------------
// Formal face sums

template <class Face>
using FaceSum = std::map<Face, Integer>;

template <class Face>
struct FaceTraits;

template <>
struct FaceTraits<SetComposition> {
    static constexpr CoxeterType type = CoxeterType::A;
    static constexpr bool torus = false;
    static std::vector<SetComposition> enumerate(int n, std::optional<ColorSet> c = {}) {
        return enumerate_set_compositions(n, c);
    }
    static WeylElement w_of(const SetComposition& f) { return w_of_face(f); }
};

template <>
struct FaceTraits<SymComposition> {
    static constexpr CoxeterType type = CoxeterType::C;
    static constexpr bool torus = false;
    static std::vector<SymComposition> enumerate(int n, std::optional<ColorSet> c = {}) {
        return enumerate_sym_compositions(n, c);
    }
    static WeylElement w_of(const SymComposition& f) { return w_of_face(f); }
};

template <>
struct FaceTraits<SpinNecklace> {
    static constexpr CoxeterType type = CoxeterType::A;
    static constexpr bool torus = true;
    static std::vector<SpinNecklace> enumerate(int n, std::optional<ColorSet> c = {}) {
        return enumerate_spin_necklaces(n, c);
    }
    static WeylElement w_of(const SpinNecklace& f) { return w_of_torus_face(f); }
};

template <>
struct FaceTraits<SymNecklace> {
    static constexpr CoxeterType type = CoxeterType::C;
    static constexpr bool torus = true;
    static std::vector<SymNecklace> enumerate(int n, std::optional<ColorSet> c = {}) {
        return enumerate_sym_necklaces(n, c);
    }
    static WeylElement w_of(const SymNecklace& f) { return w_of_torus_face(f); }
};

/// sigma_J (finite faces, J inside Delta) or sigma~_J (torus faces, J nonempty).
template <class Face>
FaceSum<Face> orbit_sum(const ColorSet& j) {
    using T = FaceTraits<Face>;
    if (j.family().type != T::type) throw FamilyMismatch("orbit_sum: wrong type for " + j.family().name());
    if (T::torus ? j.empty() : !j.is_finite()) {
        throw InvalidValue("orbit_sum: illegal color set " + j.to_string());
    }
    FaceSum<Face> out;
    for (auto& f : T::enumerate(j.family().rank, j)) out.emplace(std::move(f), 1);
    return out;
}

template <class Face>
void add_term(FaceSum<Face>& s, const Face& f, const Integer& c) {
    if (c == 0) return;
    auto [it, inserted] = s.try_emplace(f, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) s.erase(it);
    }
}

template <class Face>
FaceSum<Face> operator+(FaceSum<Face> a, const FaceSum<Face>& b) {
    for (const auto& [f, c] : b) add_term(a, f, c);
    return a;
}

/// Bilinear extension of the Tits product or the module action.
template <class Face, class Finite>
FaceSum<Face> face_sum_product(const FaceSum<Face>& s, const FaceSum<Finite>& t) {
    FaceSum<Face> out;
    for (const auto& [f, a] : s)
        for (const auto& [g, b] : t) add_term(out, f * g, a * b);
    return out;
}

template <class Face>
bool is_invariant(const FaceSum<Face>& s, Family family) {
    for (const auto& r : simple_reflections(family))
        for (const auto& [f, c] : s) {
            auto it = s.find(act(r, f));
            if (it == s.end() || it->second != c) return false;
        }
    return true;
}

/// Psi: sum a_F F -> sum a_F w_F, defined on W-invariant sums.
template <class Face>
GroupRingElement psi(const FaceSum<Face>& s, Family family) {
    if (!is_invariant(s, family)) throw NotInvariant("psi: face sum is not W-invariant");
    GroupRingElement out(family);
    for (const auto& [f, c] : s) out.add(FaceTraits<Face>::w_of(f), c);
    return out;
}

/// Expands an invariant face sum in orbit sums: color set -> coefficient.
template <class Face>
Expansion orbit_expansion(const FaceSum<Face>& s) {
    Expansion out;
    for (const auto& [f, c] : s) {
        const ColorSet j = color_set(f);
        auto [it, inserted] = out.try_emplace(j, c);
        if (!inserted && it->second != c) throw NotInvariant("orbit_expansion: coefficients differ within an orbit");
    }
    return out;
}

// ---------------------------------------------------------------------------
// Structure tables

struct StructureTable {
    struct Entry {
        ColorSet i;
        ColorSet j;
        Expansion coeffs;
    };
    std::string kind;  // "solomon" or "module"
    Family family;
    std::vector<Entry> entries;
};

/// solomon: x_I x_J in {x_K}; module: x_I x~_J in {x~_K}.  Non-closure throws NotInSpan.
inline StructureTable structure_table(Family family, const std::string& kind) {
    if (kind != "solomon" && kind != "module") throw InvalidValue("structure table kind must be solomon or module");
    const BasisKind right = kind == "solomon" ? BasisKind::X : BasisKind::AffineX;
    StructureTable table{kind, family, {}};
    const auto left_idx = basis_indices(BasisKind::X, family);
    const auto right_idx = basis_indices(right, family);
    std::vector<GroupRingElement> left_el, right_el;
    for (const auto& i : left_idx) left_el.push_back(basis_element(BasisKind::X, i));
    for (const auto& j : right_idx) right_el.push_back(basis_element(right, j));
    for (std::size_t a = 0; a < left_idx.size(); ++a)
        for (std::size_t b = 0; b < right_idx.size(); ++b) {
            table.entries.push_back({left_idx[a], right_idx[b], express_in_basis(left_el[a] * right_el[b], right)});
        }
    return table;
}

inline std::ostream& operator<<(std::ostream& os, const GroupRingElement& x) { return os << x.to_string(); }

}  // namespace steinberg
