#pragma once

#include <algorithm>
#include <compare>
#include <cstdlib>
#include <functional>
#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "steinberg/error.hpp"
#include "steinberg/family.hpp"
#include "steinberg/weyl.hpp"

namespace steinberg {

using Block = std::vector<int>;
using BlockList = std::vector<Block>;

enum class Sign : char { Minus = '-', Zero = '0', Plus = '+' };

inline Sign sign_of(long long v) { return v > 0 ? Sign::Plus : (v < 0 ? Sign::Minus : Sign::Zero); }

namespace detail {

inline std::string block_string(const Block& b) {
    std::string s;
    for (int v : b) {
        if (!s.empty() && (v < 0 || std::abs(v) >= 10 || s.back() != '-')) s += ' ';
        s += std::to_string(v);
    }
    return s;
}

inline std::string blocks_string(const BlockList& blocks) {
    std::string s = "(";
    for (std::size_t i = 0; i < blocks.size(); ++i) {
        if (i) s += "|";
        s += block_string(blocks[i]);
    }
    return s + ")";
}

/// Position of every element of [-n, n] in a block list (offset by n).
/// Elements not covered map to -1.
inline std::vector<int> block_index(const BlockList& blocks, int n) {
    std::vector<int> idx(2 * n + 1, -1);
    for (std::size_t b = 0; b < blocks.size(); ++b)
        for (int e : blocks[b]) idx[e + n] = static_cast<int>(b);
    return idx;
}

/// The nonempty pieces (B cap S_1, ..., B cap S_k) of `block`, where S_j is
/// given through `g_index` (element + n -> j).  Pieces keep ascending order.
inline BlockList split_block(const Block& block, const std::vector<int>& g_index, int n) {
    std::vector<std::pair<int, int>> keyed;
    keyed.reserve(block.size());
    for (int e : block) keyed.emplace_back(g_index[e + n], e);
    std::sort(keyed.begin(), keyed.end());
    BlockList pieces;
    for (std::size_t i = 0; i < keyed.size(); ++i) {
        if (i == 0 || keyed[i].first != keyed[i - 1].first) pieces.emplace_back();
        pieces.back().push_back(keyed[i].second);
    }
    return pieces;
}

/// Lexicographically ordered nonempty intersections S_i cap T_j.
inline BlockList refine(const BlockList& f, const BlockList& g, int n) {
    const auto g_index = block_index(g, n);
    BlockList out;
    for (const auto& b : f) {
        auto pieces = split_block(b, g_index, n);
        for (auto& p : pieces) out.push_back(std::move(p));
    }
    return out;
}

/// Checks that `blocks` are nonempty, pairwise disjoint and cover exactly `universe`.
inline void check_partition(const BlockList& blocks, int lo, int hi, const char* what) {
    std::vector<bool> seen(hi - lo + 1, false);
    std::size_t count = 0;
    for (const auto& b : blocks) {
        if (b.empty()) throw InvalidValue(std::string(what) + ": empty block");
        for (int e : b) {
            if (e < lo || e > hi || seen[e - lo]) {
                throw InvalidValue(std::string(what) + ": element " + std::to_string(e) +
                                   " repeated or out of range");
            }
            seen[e - lo] = true;
            ++count;
        }
    }
    if (count != static_cast<std::size_t>(hi - lo + 1)) {
        throw InvalidValue(std::string(what) + ": blocks do not cover the ground set");
    }
}

inline Block negated(const Block& b) {
    Block out;
    out.reserve(b.size());
    for (auto it = b.rbegin(); it != b.rend(); ++it) out.push_back(-*it);
    return out;
}

inline Block sorted(Block b) {
    std::sort(b.begin(), b.end());
    return b;
}

/// Visits every ordered set partition of `items` (ascending input), each once.
inline void for_each_ordered_partition(const std::vector<int>& items,
                                       const std::function<void(const BlockList&)>& visit) {
    BlockList current;
    std::function<void(std::size_t)> place = [&](std::size_t k) {
        if (k == items.size()) {
            visit(current);
            return;
        }
        const int e = items[k];
        for (std::size_t b = 0; b < current.size(); ++b) {
            current[b].push_back(e);
            place(k + 1);
            current[b].pop_back();
        }
        for (std::size_t pos = 0; pos <= current.size(); ++pos) {
            current.insert(current.begin() + static_cast<std::ptrdiff_t>(pos), Block{e});
            place(k + 1);
            current.erase(current.begin() + static_cast<std::ptrdiff_t>(pos));
        }
    };
    place(0);
}

class Counter {
public:
    Counter(std::size_t budget, std::string what) : budget_(budget), what_(std::move(what)) {}
    void tick() {
        if (++count_ > budget_) throw BudgetExceeded(what_, budget_);
    }

private:
    std::size_t budget_;
    std::size_t count_ = 0;
    std::string what_;
};

}  // namespace detail

/// A face of the Coxeter complex of type A_{n-1}: a composition
/// (S_1 | ... | S_k) of [n], each block sorted ascending.
class SetComposition {
public:
    SetComposition(int n, BlockList blocks) : n_(n), blocks_(std::move(blocks)) {
        Family::A(n);
        detail::check_partition(blocks_, 1, n_, "set composition");
        for (auto& b : blocks_) std::sort(b.begin(), b.end());
    }

    /// The central face: a single block [n].
    static SetComposition single_block(int n) {
        Block all(n);
        for (int i = 0; i < n; ++i) all[i] = i + 1;
        return SetComposition(n, BlockList{all});
    }

    /// The chamber w C_emptyset, i.e. (w_1 | w_2 | ... | w_n).
    static SetComposition chamber(const WeylElement& w) {
        if (!w.family().is_a()) throw FamilyMismatch("chamber: expected type A element");
        BlockList blocks;
        for (int v : w.values()) blocks.push_back(Block{v});
        return SetComposition(w.rank(), std::move(blocks));
    }

    static SetComposition fundamental_chamber(int n) { return chamber(WeylElement::identity(Family::A(n))); }

    Family family() const { return Family{CoxeterType::A, n_}; }
    int rank() const { return n_; }
    const BlockList& blocks() const { return blocks_; }
    std::size_t num_blocks() const { return blocks_.size(); }
    bool is_chamber() const { return blocks_.size() == static_cast<std::size_t>(n_); }

    std::string to_string() const { return detail::blocks_string(blocks_); }

    friend bool operator==(const SetComposition&, const SetComposition&) = default;
    friend auto operator<=>(const SetComposition&, const SetComposition&) = default;

private:
    int n_;
    BlockList blocks_;
};

/// A face of the Coxeter complex of type C_n: a composition of [-n, n]
/// (B_{-m} | ... | B_0 | ... | B_m) with B_{-i} = -B_i and 0 in B_0.
/// Only the positive part of B_0 and the blocks B_1 ... B_m are stored.
class SymComposition {
public:
    SymComposition(int n, Block zero_positive, BlockList right)
        : n_(n), zero_positive_(std::move(zero_positive)), right_(std::move(right)) {
        Family::C(n);
        std::sort(zero_positive_.begin(), zero_positive_.end());
        for (auto& b : right_) std::sort(b.begin(), b.end());
        for (int z : zero_positive_)
            if (z <= 0) throw InvalidValue("symmetric composition: zero block part must be positive");
        detail::check_partition(full_blocks(), -n_, n_, "symmetric composition");
    }

    /// Builds from the full mirror-symmetric block list.
    static SymComposition from_blocks(int n, const BlockList& full) {
        const std::size_t k = full.size();
        if (k % 2 == 0) throw InvalidValue("symmetric composition: even number of blocks");
        const std::size_t mid = k / 2;
        for (std::size_t i = 0; i < k; ++i) {
            if (detail::sorted(detail::negated(full[i])) != detail::sorted(full[k - 1 - i])) {
                throw InvalidValue("symmetric composition: blocks are not mirror symmetric");
            }
        }
        const auto& zero = full[mid];
        if (std::find(zero.begin(), zero.end(), 0) == zero.end()) {
            throw InvalidValue("symmetric composition: middle block must contain 0");
        }
        Block zp;
        for (int e : zero)
            if (e > 0) zp.push_back(e);
        BlockList right(full.begin() + static_cast<std::ptrdiff_t>(mid) + 1, full.end());
        return SymComposition(n, std::move(zp), std::move(right));
    }

    static SymComposition single_block(int n) {
        Block zp(n);
        for (int i = 0; i < n; ++i) zp[i] = i + 1;
        return SymComposition(n, std::move(zp), {});
    }

    static SymComposition chamber(const WeylElement& w) {
        if (!w.family().is_c()) throw FamilyMismatch("chamber: expected type C element");
        BlockList right;
        for (int v : w.values()) right.push_back(Block{v});
        return SymComposition(w.rank(), {}, std::move(right));
    }

    static SymComposition fundamental_chamber(int n) { return chamber(WeylElement::identity(Family::C(n))); }

    Family family() const { return Family{CoxeterType::C, n_}; }
    int rank() const { return n_; }
    const Block& zero_positive() const { return zero_positive_; }
    const BlockList& right_blocks() const { return right_; }
    bool is_chamber() const { return zero_positive_.empty() && right_.size() == static_cast<std::size_t>(n_); }

    Block zero_block() const {
        Block z = detail::negated(zero_positive_);
        z.push_back(0);
        z.insert(z.end(), zero_positive_.begin(), zero_positive_.end());
        return z;
    }

    /// B_{-m}, ..., B_0, ..., B_m.
    BlockList full_blocks() const {
        BlockList out;
        out.reserve(2 * right_.size() + 1);
        for (auto it = right_.rbegin(); it != right_.rend(); ++it) out.push_back(detail::negated(*it));
        out.push_back(zero_block());
        out.insert(out.end(), right_.begin(), right_.end());
        return out;
    }

    std::size_t num_blocks() const { return 2 * right_.size() + 1; }

    std::string to_string() const { return detail::blocks_string(full_blocks()); }

    friend bool operator==(const SymComposition&, const SymComposition&) = default;
    friend auto operator<=>(const SymComposition&, const SymComposition&) = default;

private:
    int n_;
    Block zero_positive_;
    BlockList right_;
};

// ---------------------------------------------------------------------------
// Tits product

inline SetComposition tits_product(const SetComposition& f, const SetComposition& g) {
    require_same(f.family(), g.family(), "tits_product");
    return SetComposition(f.rank(), detail::refine(f.blocks(), g.blocks(), f.rank()));
}

inline SymComposition tits_product(const SymComposition& f, const SymComposition& g) {
    require_same(f.family(), g.family(), "tits_product");
    return SymComposition::from_blocks(f.rank(), detail::refine(f.full_blocks(), g.full_blocks(), f.rank()));
}

inline SetComposition operator*(const SetComposition& f, const SetComposition& g) { return tits_product(f, g); }
inline SymComposition operator*(const SymComposition& f, const SymComposition& g) { return tits_product(f, g); }

// ---------------------------------------------------------------------------
// Sign vectors

/// Sign vector over the positive roots in a fixed order:
/// type A: pairs (i, j), i < j, lexicographic (root eps_j - eps_i);
/// type C: 2eps_1..2eps_n, then eps_i - eps_j, then eps_i + eps_j (i > j),
/// each lexicographic in (i, j).
struct FiniteSignVector {
    Family family;
    std::vector<Sign> signs;

    std::string to_string() const {
        std::string s;
        for (Sign x : signs) s += static_cast<char>(x);
        return s;
    }

    friend bool operator==(const FiniteSignVector&, const FiniteSignVector&) = default;
};

/// Human-readable names of the positive roots in sign-vector order.
inline std::vector<std::string> positive_root_names(Family family) {
    std::vector<std::string> out;
    const int n = family.rank;
    if (family.is_a()) {
        for (int i = 1; i <= n; ++i)
            for (int j = i + 1; j <= n; ++j) out.push_back("e" + std::to_string(j) + "-e" + std::to_string(i));
        return out;
    }
    for (int i = 1; i <= n; ++i) out.push_back("2e" + std::to_string(i));
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j < i; ++j) out.push_back("e" + std::to_string(i) + "-e" + std::to_string(j));
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j < i; ++j) out.push_back("e" + std::to_string(i) + "+e" + std::to_string(j));
    return out;
}

inline FiniteSignVector sign_vector(const SetComposition& f) {
    const int n = f.rank();
    const auto pos = detail::block_index(f.blocks(), n);
    FiniteSignVector out{f.family(), {}};
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) out.signs.push_back(sign_of(pos[j + n] - pos[i + n]));
    return out;
}

inline FiniteSignVector sign_vector(const SymComposition& f) {
    const int n = f.rank();
    const auto full = f.full_blocks();
    const int mid = static_cast<int>(full.size() / 2);
    auto raw = detail::block_index(full, n);
    auto pos = [&](int e) { return raw[e + n] - mid; };
    FiniteSignVector out{f.family(), {}};
    for (int i = 1; i <= n; ++i) out.signs.push_back(sign_of(pos(i)));
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j < i; ++j) out.signs.push_back(sign_of(pos(i) - pos(j)));
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j < i; ++j) out.signs.push_back(sign_of(pos(i) - pos(-j)));
    return out;
}

/// The sign-vector form of the Tits product: sigma(F) where nonzero, else sigma(G).
inline FiniteSignVector combine_sign_vectors(const FiniteSignVector& f, const FiniteSignVector& g) {
    require_same(f.family, g.family, "combine_sign_vectors");
    FiniteSignVector out = f;
    for (std::size_t k = 0; k < out.signs.size(); ++k)
        if (out.signs[k] == Sign::Zero) out.signs[k] = g.signs[k];
    return out;
}

// ---------------------------------------------------------------------------
// w_F, colors, order, W-action

/// The unique w with F = w C_{Delta \ J} and D(w) contained in col(F).
inline WeylElement w_of_face(const SetComposition& f) {
    std::vector<int> v;
    for (const auto& b : f.blocks()) v.insert(v.end(), b.begin(), b.end());
    return WeylElement(f.family(), std::move(v));
}

inline WeylElement w_of_face(const SymComposition& f) {
    std::vector<int> v(f.zero_positive());
    for (const auto& b : f.right_blocks()) v.insert(v.end(), b.begin(), b.end());
    return WeylElement(f.family(), std::move(v));
}

inline ColorSet color_set(const SetComposition& f) {
    ColorSet out(f.family());
    int sum = 0;
    for (std::size_t i = 0; i + 1 < f.blocks().size(); ++i) {
        sum += static_cast<int>(f.blocks()[i].size());
        out.insert(sum);
    }
    return out;
}

inline ColorSet color_set(const SymComposition& f) {
    ColorSet out(f.family());
    int sum = static_cast<int>(f.zero_positive().size());
    const auto& right = f.right_blocks();
    for (std::size_t i = 0; i < right.size(); ++i) {
        out.insert(sum);
        sum += static_cast<int>(right[i].size());
    }
    return out;
}

namespace detail {

inline bool refines(const BlockList& coarse, const BlockList& fine) {
    std::size_t j = 0;
    for (const auto& b : coarse) {
        Block acc;
        while (acc.size() < b.size() && j < fine.size()) {
            acc.insert(acc.end(), fine[j].begin(), fine[j].end());
            ++j;
        }
        std::sort(acc.begin(), acc.end());
        if (acc != b) return false;
    }
    return j == fine.size();
}

}  // namespace detail

/// F <= G in the face order: G is obtained from F by splitting blocks in place.
inline bool is_subface(const SetComposition& f, const SetComposition& g) {
    require_same(f.family(), g.family(), "is_subface");
    return detail::refines(f.blocks(), g.blocks());
}

inline bool is_subface(const SymComposition& f, const SymComposition& g) {
    require_same(f.family(), g.family(), "is_subface");
    return detail::refines(f.full_blocks(), g.full_blocks());
}

namespace detail {

inline Block image(const WeylElement& w, const Block& b) {
    Block out;
    out.reserve(b.size());
    for (int e : b) out.push_back(w(e));
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace detail

inline SetComposition act(const WeylElement& w, const SetComposition& f) {
    require_same(w.family(), f.family(), "act");
    BlockList out;
    for (const auto& b : f.blocks()) out.push_back(detail::image(w, b));
    return SetComposition(f.rank(), std::move(out));
}

inline SymComposition act(const WeylElement& w, const SymComposition& f) {
    require_same(w.family(), f.family(), "act");
    Block zp;
    for (int e : f.zero_positive()) zp.push_back(std::abs(w(e)));
    BlockList right;
    for (const auto& b : f.right_blocks()) right.push_back(detail::image(w, b));
    return SymComposition(f.rank(), std::move(zp), std::move(right));
}

// ---------------------------------------------------------------------------
// Enumeration

/// Every face of Sigma(A_{n-1}) (or only those of color set `color`), sorted.
inline std::vector<SetComposition> enumerate_set_compositions(int n, std::optional<ColorSet> color = {},
                                                              std::size_t budget = enumeration_budget()) {
    Family::A(n);
    std::vector<int> items(n);
    for (int i = 0; i < n; ++i) items[i] = i + 1;
    std::vector<SetComposition> out;
    detail::Counter counter(budget, "faces of " + Family::A(n).name());
    detail::for_each_ordered_partition(items, [&](const BlockList& blocks) {
        counter.tick();
        SetComposition f(n, blocks);
        if (!color || color_set(f) == *color) out.push_back(std::move(f));
    });
    std::sort(out.begin(), out.end());
    return out;
}

/// Every face of Sigma(C_n) (or only those of color set `color`), sorted.
inline std::vector<SymComposition> enumerate_sym_compositions(int n, std::optional<ColorSet> color = {},
                                                              std::size_t budget = enumeration_budget()) {
    Family::C(n);
    std::vector<SymComposition> out;
    detail::Counter counter(budget, "faces of " + Family::C(n).name());
    for (unsigned zmask = 0; zmask < (1U << n); ++zmask) {
        Block zp;
        std::vector<int> rest;
        for (int i = 1; i <= n; ++i) ((zmask >> (i - 1)) & 1U ? zp : rest).push_back(i);
        const int r = static_cast<int>(rest.size());
        detail::for_each_ordered_partition(rest, [&](const BlockList& blocks) {
            for (unsigned signs = 0; signs < (1U << r); ++signs) {
                counter.tick();
                BlockList right = blocks;
                for (auto& b : right)
                    for (auto& e : b) {
                        const auto k = std::find(rest.begin(), rest.end(), e) - rest.begin();
                        if ((signs >> k) & 1U) e = -e;
                    }
                SymComposition f(n, zp, std::move(right));
                if (!color || color_set(f) == *color) out.push_back(std::move(f));
            }
        });
    }
    std::sort(out.begin(), out.end());
    return out;
}

inline std::ostream& operator<<(std::ostream& os, const SetComposition& x) { return os << x.to_string(); }
inline std::ostream& operator<<(std::ostream& os, const SymComposition& x) { return os << x.to_string(); }

}  // namespace steinberg
