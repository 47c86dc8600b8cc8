#pragma once

#include <algorithm>
#include <bit>
#include <compare>
#include <cstdint>
#include <cstdlib>
#include <ostream>
#include <string>
#include <vector>

#include "steinberg/error.hpp"

namespace steinberg {

enum class CoxeterType { A, C };

/// A root system of type A_{n-1} (permutations of [n]) or C_n (signed
/// permutations of [-n,n]).  `rank` is always the n of the underlying
/// (signed) permutation group.
struct Family {
    CoxeterType type = CoxeterType::A;
    int rank = 1;

    static constexpr int max_rank = 20;

    static Family A(int n) { return make(CoxeterType::A, n); }
    static Family C(int n) { return make(CoxeterType::C, n); }

    static Family make(CoxeterType type, int n) {
        if (n < 1 || n > max_rank) {
            throw InvalidValue("rank must lie in [1, " + std::to_string(max_rank) + "], got " +
                               std::to_string(n));
        }
        return Family{type, n};
    }

    bool is_a() const { return type == CoxeterType::A; }
    bool is_c() const { return type == CoxeterType::C; }

    /// Lowest index of a simple root: 1 for type A, 0 for type C.
    int first_index() const { return is_a() ? 1 : 0; }
    /// The index standing for the lowest root alpha_0.
    int affine_index() const { return rank; }

    /// Indices of the simple roots Delta.
    std::vector<int> finite_indices() const {
        std::vector<int> out;
        for (int i = first_index(); i < rank; ++i) out.push_back(i);
        return out;
    }
    /// Indices of Delta together with the affine index.
    std::vector<int> affine_indices() const {
        auto out = finite_indices();
        out.push_back(affine_index());
        return out;
    }

    std::string name() const { return std::string(is_a() ? "A" : "C") + std::to_string(rank); }

    friend bool operator==(const Family&, const Family&) = default;
    friend auto operator<=>(const Family&, const Family&) = default;
};

inline void require_same(const Family& a, const Family& b, const char* what) {
    if (a != b) {
        throw FamilyMismatch(std::string(what) + ": " + a.name() + " vs " + b.name());
    }
}

/// A set of simple-root indices under the integer identifications
/// A: alpha_i <-> i (1 <= i < n), alpha_0 <-> n;
/// C: alpha_i <-> i-1 (1 <= i <= n), alpha_0 <-> n.
/// Stored as a bit mask with bit i standing for index i.
class ColorSet {
public:
    ColorSet() = default;
    explicit ColorSet(Family family) : family_(family) {}

    ColorSet(Family family, const std::vector<int>& indices) : family_(family) {
        for (int i : indices) insert(i);
    }

    static ColorSet from_bits(Family family, std::uint64_t bits) {
        ColorSet s(family);
        if ((bits & ~affine_mask(family)) != 0) throw InvalidValue("color bits out of range");
        s.bits_ = bits;
        return s;
    }

    /// All of Delta (the finite indices).
    static ColorSet finite_full(Family family) { return from_bits(family, finite_mask(family)); }
    /// All of Delta together with the affine index.
    static ColorSet affine_full(Family family) { return from_bits(family, affine_mask(family)); }

    static std::uint64_t finite_mask(Family family) {
        std::uint64_t m = 0;
        for (int i : family.finite_indices()) m |= std::uint64_t{1} << i;
        return m;
    }
    static std::uint64_t affine_mask(Family family) {
        return finite_mask(family) | (std::uint64_t{1} << family.affine_index());
    }

    void insert(int index) {
        if (index < family_.first_index() || index > family_.affine_index()) {
            throw InvalidValue("color index " + std::to_string(index) + " out of range for " +
                               family_.name());
        }
        bits_ |= std::uint64_t{1} << index;
    }

    bool contains(int index) const {
        return index >= 0 && index < 64 && ((bits_ >> index) & 1U) != 0;
    }
    bool empty() const { return bits_ == 0; }
    int size() const { return std::popcount(bits_); }
    std::uint64_t bits() const { return bits_; }
    const Family& family() const { return family_; }

    bool contains_affine() const { return contains(family_.affine_index()); }
    bool is_finite() const { return (bits_ & ~finite_mask(family_)) == 0; }
    /// Nonempty and different from the whole affine index set.
    bool is_proper_affine() const { return bits_ != 0 && bits_ != affine_mask(family_); }

    bool is_subset_of(const ColorSet& other) const { return (bits_ & ~other.bits_) == 0; }

    ColorSet operator|(const ColorSet& o) const { return from_bits(family_, bits_ | o.bits_); }
    ColorSet operator&(const ColorSet& o) const { return from_bits(family_, bits_ & o.bits_); }
    ColorSet without(int index) const {
        ColorSet s = *this;
        if (index >= 0 && index < 64) s.bits_ &= ~(std::uint64_t{1} << index);
        return s;
    }

    std::vector<int> indices() const {
        std::vector<int> out;
        for (int i = 0; i < 64; ++i)
            if (contains(i)) out.push_back(i);
        return out;
    }

    std::string to_string() const {
        std::string s = "{";
        bool first = true;
        for (int i : indices()) {
            if (!first) s += ",";
            s += std::to_string(i);
            first = false;
        }
        return s + "}";
    }

    friend bool operator==(const ColorSet& a, const ColorSet& b) {
        return a.family_ == b.family_ && a.bits_ == b.bits_;
    }
    /// Lexicographic on the sorted index lists.
    friend std::strong_ordering operator<=>(const ColorSet& a, const ColorSet& b) {
        if (auto c = a.family_ <=> b.family_; c != 0) return c;
        auto ia = a.indices();
        auto ib = b.indices();
        return std::lexicographical_compare_three_way(ia.begin(), ia.end(), ib.begin(), ib.end());
    }

private:
    Family family_;
    std::uint64_t bits_ = 0;
};

/// Every subset of Delta, in ColorSet order.
inline std::vector<ColorSet> all_finite_color_sets(Family family) {
    std::vector<ColorSet> out;
    const auto full = ColorSet::finite_mask(family);
    for (std::uint64_t s = full;; s = (s - 1) & full) {
        out.push_back(ColorSet::from_bits(family, s));
        if (s == 0) break;
    }
    std::sort(out.begin(), out.end());
    return out;
}

/// Every nonempty proper subset of the affine index set, in ColorSet order.
inline std::vector<ColorSet> all_affine_color_sets(Family family) {
    std::vector<ColorSet> out;
    const auto full = ColorSet::affine_mask(family);
    for (std::uint64_t s = (full - 1) & full; s != 0; s = (s - 1) & full) {
        out.push_back(ColorSet::from_bits(family, s));
    }
    std::sort(out.begin(), out.end());
    return out;
}

inline constexpr std::size_t default_enumeration_budget = 1'000'000;

/// Enumeration budget: STEINBERG_BUDGET from the environment, else 10^6 items.
inline std::size_t enumeration_budget() {
    if (const char* env = std::getenv("STEINBERG_BUDGET")) {
        char* end = nullptr;
        const unsigned long long v = std::strtoull(env, &end, 10);
        if (end != env && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
    }
    return default_enumeration_budget;
}

inline std::ostream& operator<<(std::ostream& os, const ColorSet& x) { return os << x.to_string(); }

}  // namespace steinberg
