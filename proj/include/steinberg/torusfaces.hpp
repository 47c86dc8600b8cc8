#pragma once

#include <algorithm>
#include <compare>
#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "steinberg/coxfaces.hpp"
#include "steinberg/error.hpp"
#include "steinberg/family.hpp"
#include "steinberg/weyl.hpp"

namespace steinberg {

namespace detail {
inline BlockList sorted_blocks(BlockList b) {
    for (auto& x : b) std::sort(x.begin(), x.end());
    return b;
}
}  // namespace detail

/// Linear form of a spin necklace: (C2, R, ..., L) followed by the tail C1.
struct SplitNecklace {
    int n = 1;
    BlockList blocks;
    Block tail;  // empty when absent

    /// blocks then (if nonempty) the tail.
    BlockList as_list() const {
        BlockList out = blocks;
        if (!tail.empty()) out.push_back(tail);
        return out;
    }

    std::string to_string() const {
        auto s = detail::blocks_string(blocks);
        s.pop_back();
        s += "|" + detail::block_string(tail) + ")";
        return s;
    }

    friend bool operator==(const SplitNecklace&, const SplitNecklace&) = default;
};

/// A face of the Steinberg torus of type A_{n-1}: a spin necklace stored
/// clasp-first.  labels[p] labels the edge blocks[p] -> blocks[p+1 mod k].
class SpinNecklace {
public:
    SpinNecklace(int n, BlockList blocks, std::vector<int> labels)
        : n_(n), blocks_(std::move(blocks)), labels_(std::move(labels)) {
        Family::A(n);
        detail::check_partition(blocks_, 1, n_, "spin necklace");
        for (auto& b : blocks_) std::sort(b.begin(), b.end());
        if (labels_.size() != blocks_.size()) throw InvalidValue("spin necklace: one label per block required");
        const std::size_t k = blocks_.size();
        for (std::size_t p = 0; p < k; ++p) {
            if (labels_[p] < 1 || labels_[p] > n_) throw InvalidValue("spin necklace: label out of range");
            const int in = labels_[(p + k - 1) % k];
            if (wrap(in + static_cast<int>(blocks_[p].size())) != labels_[p]) {
                throw InvalidValue("spin necklace: labels violate the cyclic rule");
            }
        }
        if (labels_.back() != *std::max_element(labels_.begin(), labels_.end()) ||
            labels_.front() != *std::min_element(labels_.begin(), labels_.end())) {
            throw InvalidValue("spin necklace: first block is not the clasp");
        }
    }

    /// Any rotation of a cyclic arrangement; labels taken modulo n.
    static SpinNecklace from_cycle(int n, BlockList blocks, std::vector<int> labels) {
        if (blocks.empty() || labels.size() != blocks.size()) throw InvalidValue("spin necklace: bad cycle");
        for (int& l : labels) l = wrap_n(l, n);
        const std::size_t k = blocks.size();
        const std::size_t last = static_cast<std::size_t>(std::max_element(labels.begin(), labels.end()) - labels.begin());
        const std::size_t start = (last + 1) % k;
        std::rotate(blocks.begin(), blocks.begin() + static_cast<std::ptrdiff_t>(start), blocks.end());
        std::rotate(labels.begin(), labels.begin() + static_cast<std::ptrdiff_t>(start), labels.end());
        return SpinNecklace(n, std::move(blocks), std::move(labels));
    }

    static SpinNecklace from_split(const SplitNecklace& s) {
        if (s.blocks.empty()) throw InvalidValue("split necklace: no blocks");
        if (!s.tail.empty() && *std::max_element(s.tail.begin(), s.tail.end()) >=
                                   *std::min_element(s.blocks[0].begin(), s.blocks[0].end())) {
            throw InvalidValue("split necklace: tail must precede the first block");
        }
        detail::check_partition(s.as_list(), 1, s.n, "split necklace");
        BlockList blocks = s.blocks;
        blocks[0].insert(blocks[0].end(), s.tail.begin(), s.tail.end());
        std::vector<int> labels;
        int l = 0;
        for (const auto& b : s.blocks) {
            l += static_cast<int>(b.size());
            labels.push_back(l);
        }
        return SpinNecklace(s.n, std::move(blocks), std::move(labels));
    }

    /// The one-block necklace on [n] with label l.
    static SpinNecklace single_block(int n, int label) {
        Block all(n);
        for (int i = 0; i < n; ++i) all[i] = i + 1;
        return SpinNecklace(n, BlockList{all}, {label});
    }

    Family family() const { return Family{CoxeterType::A, n_}; }
    int rank() const { return n_; }
    const BlockList& blocks() const { return blocks_; }
    const std::vector<int>& labels() const { return labels_; }
    std::size_t num_blocks() const { return blocks_.size(); }
    bool is_maximal() const { return blocks_.size() == static_cast<std::size_t>(n_); }

    /// Label of the edge entering block p.
    int incoming(std::size_t p) const { return labels_[(p + blocks_.size() - 1) % blocks_.size()]; }

    std::string to_string() const {
        std::string s;
        for (std::size_t p = 0; p < blocks_.size(); ++p) {
            s += detail::block_string(blocks_[p]) + " -(" + std::to_string(labels_[p]) + ")-> ";
        }
        return s + "*";
    }

    friend bool operator==(const SpinNecklace&, const SpinNecklace&) = default;
    friend auto operator<=>(const SpinNecklace&, const SpinNecklace&) = default;

private:
    static int wrap_n(int l, int n) {
        const int r = ((l % n) + n) % n;
        return r == 0 ? n : r;
    }
    int wrap(int l) const { return wrap_n(l, n_); }

    int n_;
    BlockList blocks_;
    std::vector<int> labels_;
};

/// A face of the Steinberg torus of type C_n: a flip-symmetric necklace
/// (B_0, B_1, ..., B_m, [A], -B_m, ..., -B_1) on [-n, n] read clockwise
/// from the block of 0.  The zero block and the antipodal block A are
/// self-negating and stored by their positive parts.
class SymNecklace {
public:
    SymNecklace(int n, Block zero_positive, BlockList clockwise, Block antipodal_positive = {})
        : n_(n),
          zero_positive_(std::move(zero_positive)),
          clockwise_(std::move(clockwise)),
          antipodal_positive_(std::move(antipodal_positive)) {
        Family::C(n);
        std::sort(zero_positive_.begin(), zero_positive_.end());
        std::sort(antipodal_positive_.begin(), antipodal_positive_.end());
        for (auto& b : clockwise_) std::sort(b.begin(), b.end());
        for (int e : zero_positive_)
            if (e <= 0) throw InvalidValue("symmetric necklace: zero block part must be positive");
        for (int e : antipodal_positive_)
            if (e <= 0) throw InvalidValue("symmetric necklace: antipodal part must be positive");
        detail::check_partition(cycle(), -n_, n_, "symmetric necklace");
    }

    /// From a full clockwise cycle of blocks, in any rotation.
    static SymNecklace from_cycle(int n, BlockList cycle) {
        const auto zero_at = std::find_if(cycle.begin(), cycle.end(), [](const Block& b) {
            return std::find(b.begin(), b.end(), 0) != b.end();
        });
        if (zero_at == cycle.end()) throw InvalidValue("symmetric necklace: no block contains 0");
        std::rotate(cycle.begin(), zero_at, cycle.end());
        const std::size_t len = cycle.size();
        const std::size_t m = (len - 1) / 2;
        Block zp;
        for (int e : cycle[0])
            if (e > 0) zp.push_back(e);
        BlockList cw(cycle.begin() + 1, cycle.begin() + 1 + static_cast<std::ptrdiff_t>(m));
        Block ap;
        if (len % 2 == 0)
            for (int e : cycle[len / 2])
                if (e > 0) ap.push_back(e);
        SymNecklace out(n, std::move(zp), std::move(cw), std::move(ap));
        if (detail::sorted_blocks(out.cycle()) != detail::sorted_blocks(cycle)) {
            throw InvalidValue("symmetric necklace: cycle is not flip symmetric");
        }
        return out;
    }

    Family family() const { return Family{CoxeterType::C, n_}; }
    int rank() const { return n_; }
    const Block& zero_positive() const { return zero_positive_; }
    const BlockList& clockwise() const { return clockwise_; }
    bool has_antipodal() const { return !antipodal_positive_.empty(); }
    const Block& antipodal_positive() const { return antipodal_positive_; }

    Block zero_block() const {
        Block z = detail::negated(zero_positive_);
        z.push_back(0);
        z.insert(z.end(), zero_positive_.begin(), zero_positive_.end());
        return z;
    }

    std::optional<Block> antipodal() const {
        if (!has_antipodal()) return std::nullopt;
        Block a = detail::negated(antipodal_positive_);
        a.insert(a.end(), antipodal_positive_.begin(), antipodal_positive_.end());
        return a;
    }

    /// The full clockwise cycle starting at the block of 0.
    BlockList cycle() const {
        BlockList out{zero_block()};
        out.insert(out.end(), clockwise_.begin(), clockwise_.end());
        if (auto a = antipodal()) out.push_back(*a);
        for (auto it = clockwise_.rbegin(); it != clockwise_.rend(); ++it) out.push_back(detail::negated(*it));
        return out;
    }

    std::size_t num_blocks() const { return 2 * clockwise_.size() + 1 + (has_antipodal() ? 1 : 0); }
    bool is_maximal() const { return zero_positive_.empty() && clockwise_.size() == static_cast<std::size_t>(n_); }

    std::string to_string() const { return detail::blocks_string(cycle()); }

    friend bool operator==(const SymNecklace&, const SymNecklace&) = default;
    friend auto operator<=>(const SymNecklace&, const SymNecklace&) = default;

private:
    int n_;
    Block zero_positive_;
    BlockList clockwise_;
    Block antipodal_positive_;
};

// ---------------------------------------------------------------------------
// Clasp and split form

inline const Block& clasp(const SpinNecklace& nk) { return nk.blocks().front(); }

inline SplitNecklace split(const SpinNecklace& nk) {
    const int n = nk.rank();
    const Block& c = clasp(nk);
    const std::size_t tail_size = static_cast<std::size_t>(n - nk.incoming(0));
    SplitNecklace s{n, {}, {}};
    s.tail.assign(c.begin(), c.begin() + static_cast<std::ptrdiff_t>(tail_size));
    s.blocks.emplace_back(c.begin() + static_cast<std::ptrdiff_t>(tail_size), c.end());
    for (std::size_t p = 1; p < nk.num_blocks(); ++p) s.blocks.push_back(nk.blocks()[p]);
    return s;
}

/// Merges blocks p and p+1 (cyclically) and drops the label between them.
inline SpinNecklace contract_edge(const SpinNecklace& nk, std::size_t p) {
    const std::size_t k = nk.num_blocks();
    if (k < 2) throw InvalidValue("contract_edge: a one-block necklace has no contractible edge");
    if (p >= k) throw InvalidValue("contract_edge: edge index out of range");
    BlockList blocks;
    std::vector<int> labels;
    const std::size_t q = (p + 1) % k;
    for (std::size_t i = 0; i < k; ++i) {
        if (i == q) continue;
        Block b = nk.blocks()[i];
        int l = nk.labels()[i];
        if (i == p) {
            b.insert(b.end(), nk.blocks()[q].begin(), nk.blocks()[q].end());
            l = nk.labels()[q];
        }
        blocks.push_back(std::move(b));
        labels.push_back(l);
    }
    return SpinNecklace::from_cycle(nk.rank(), std::move(blocks), std::move(labels));
}

/// The face below nk keeping exactly the labels in `keep` (a nonempty subset of its labels).
inline SpinNecklace restrict_labels(const SpinNecklace& nk, const std::vector<int>& keep) {
    std::vector<bool> kept(nk.num_blocks(), false);
    bool any = false;
    for (std::size_t p = 0; p < nk.num_blocks(); ++p) {
        kept[p] = std::find(keep.begin(), keep.end(), nk.labels()[p]) != keep.end();
        any = any || kept[p];
    }
    if (!any) throw InvalidValue("restrict_labels: at least one label must be kept");
    const std::size_t k = nk.num_blocks();
    std::size_t start = 0;
    while (!kept[(start + k - 1) % k]) ++start;
    BlockList blocks;
    std::vector<int> labels;
    Block acc;
    for (std::size_t i = 0; i < k; ++i) {
        const std::size_t p = (start + i) % k;
        acc.insert(acc.end(), nk.blocks()[p].begin(), nk.blocks()[p].end());
        if (kept[p]) {
            blocks.push_back(std::move(acc));
            labels.push_back(nk.labels()[p]);
            acc.clear();
        }
    }
    return SpinNecklace::from_cycle(nk.rank(), std::move(blocks), std::move(labels));
}

// ---------------------------------------------------------------------------
// Right module action of finite faces

inline SpinNecklace module_action(const SpinNecklace& nk, const SetComposition& g) {
    require_same(nk.family(), g.family(), "module_action");
    const int n = nk.rank();
    const auto g_index = detail::block_index(g.blocks(), n);
    BlockList blocks;
    std::vector<int> labels;
    for (std::size_t p = 0; p < nk.num_blocks(); ++p) {
        int l = nk.incoming(p);
        for (auto& piece : detail::split_block(nk.blocks()[p], g_index, n)) {
            l += static_cast<int>(piece.size());
            blocks.push_back(std::move(piece));
            labels.push_back(l);
        }
    }
    return SpinNecklace::from_cycle(n, std::move(blocks), std::move(labels));
}

inline SymNecklace module_action(const SymNecklace& nk, const SymComposition& g) {
    require_same(nk.family(), g.family(), "module_action");
    return SymNecklace::from_cycle(nk.rank(), detail::refine(nk.cycle(), g.full_blocks(), nk.rank()));
}

inline SpinNecklace operator*(const SpinNecklace& nk, const SetComposition& g) { return module_action(nk, g); }
inline SymNecklace operator*(const SymNecklace& nk, const SymComposition& g) { return module_action(nk, g); }

// ---------------------------------------------------------------------------
// w_F, colors, W-action

inline WeylElement w_of_torus_face(const SpinNecklace& nk) {
    std::vector<int> v;
    for (const auto& b : split(nk).as_list()) v.insert(v.end(), b.begin(), b.end());
    return WeylElement(nk.family(), std::move(v));
}

inline WeylElement w_of_torus_face(const SymNecklace& nk) {
    std::vector<int> v(nk.zero_positive());
    for (const auto& b : nk.clockwise()) v.insert(v.end(), b.begin(), b.end());
    for (auto it = nk.antipodal_positive().rbegin(); it != nk.antipodal_positive().rend(); ++it) v.push_back(-*it);
    return WeylElement(nk.family(), std::move(v));
}

inline ColorSet color_set(const SpinNecklace& nk) { return ColorSet(nk.family(), nk.labels()); }

inline ColorSet color_set(const SymNecklace& nk) {
    ColorSet out(nk.family());
    int sum = static_cast<int>(nk.zero_positive().size());
    out.insert(sum);
    for (const auto& b : nk.clockwise()) {
        sum += static_cast<int>(b.size());
        out.insert(sum);
    }
    return out;
}

inline SpinNecklace act(const WeylElement& w, const SpinNecklace& nk) {
    require_same(w.family(), nk.family(), "act");
    BlockList blocks;
    for (const auto& b : nk.blocks()) blocks.push_back(detail::image(w, b));
    return SpinNecklace(nk.rank(), std::move(blocks), nk.labels());
}

inline SymNecklace act(const WeylElement& w, const SymNecklace& nk) {
    require_same(w.family(), nk.family(), "act");
    Block zp, ap;
    for (int e : nk.zero_positive()) zp.push_back(std::abs(w(e)));
    for (int e : nk.antipodal_positive()) ap.push_back(std::abs(w(e)));
    BlockList cw;
    for (const auto& b : nk.clockwise()) cw.push_back(detail::image(w, b));
    return SymNecklace(nk.rank(), std::move(zp), std::move(cw), std::move(ap));
}

// ---------------------------------------------------------------------------
// Maximal faces <-> group elements

/// The alcove w A_emptyset: singletons w_1, ..., w_n with the edge w_p -> w_{p+1} labeled p.
inline SpinNecklace maximal_from_perm_a(const WeylElement& w) {
    if (!w.family().is_a()) throw FamilyMismatch("maximal_from_perm: expected type A element");
    BlockList blocks;
    std::vector<int> labels;
    for (int p = 1; p <= w.rank(); ++p) {
        blocks.push_back(Block{w(p)});
        labels.push_back(p);
    }
    return SpinNecklace(w.rank(), std::move(blocks), std::move(labels));
}

inline SymNecklace maximal_from_perm_c(const WeylElement& w) {
    if (!w.family().is_c()) throw FamilyMismatch("maximal_from_perm: expected type C element");
    BlockList cw;
    for (int v : w.values()) cw.push_back(Block{v});
    return SymNecklace(w.rank(), {}, std::move(cw));
}

inline WeylElement perm_from_maximal(const SpinNecklace& nk) {
    if (!nk.is_maximal()) throw InvalidValue("perm_from_maximal: face is not maximal");
    return w_of_torus_face(nk);
}

inline WeylElement perm_from_maximal(const SymNecklace& nk) {
    if (!nk.is_maximal()) throw InvalidValue("perm_from_maximal: face is not maximal");
    return w_of_torus_face(nk);
}

// ---------------------------------------------------------------------------
// Enumeration

/// Every torus face of type A_{n-1} (or those of color set `color`), sorted.
inline std::vector<SpinNecklace> enumerate_spin_necklaces(int n, std::optional<ColorSet> color = {},
                                                          std::size_t budget = enumeration_budget()) {
    Family::A(n);
    std::vector<int> items(n);
    for (int i = 0; i < n; ++i) items[i] = i + 1;
    std::vector<SpinNecklace> out;
    detail::Counter counter(budget, "torus faces of " + Family::A(n).name());
    detail::for_each_ordered_partition(items, [&](const BlockList& blocks) {
        const int first = static_cast<int>(blocks[0].size());
        for (int in = n - first + 1; in <= n; ++in) {
            counter.tick();
            std::vector<int> labels;
            int l = in;
            for (const auto& b : blocks) {
                l += static_cast<int>(b.size());
                labels.push_back(l > n ? l - n : l);
                if (l > n) l -= n;
            }
            SpinNecklace nk(n, blocks, std::move(labels));
            if (!color || color_set(nk) == *color) out.push_back(std::move(nk));
        }
    });
    std::sort(out.begin(), out.end());
    return out;
}

/// Every torus face of type C_n (or those of color set `color`), sorted.
inline std::vector<SymNecklace> enumerate_sym_necklaces(int n, std::optional<ColorSet> color = {},
                                                        std::size_t budget = enumeration_budget()) {
    Family::C(n);
    std::vector<SymNecklace> out;
    detail::Counter counter(budget, "torus faces of " + Family::C(n).name());
    unsigned pow3 = 1;
    for (int i = 0; i < n; ++i) pow3 *= 3;
    for (unsigned code = 0; code < pow3; ++code) {
        Block zp, ap;
        std::vector<int> rest;
        unsigned c = code;
        for (int i = 1; i <= n; ++i, c /= 3) {
            const unsigned where = c % 3;
            (where == 0 ? rest : where == 1 ? zp : ap).push_back(i);
        }
        const int r = static_cast<int>(rest.size());
        auto emit = [&](BlockList cw) {
            counter.tick();
            SymNecklace nk(n, zp, std::move(cw), ap);
            if (!color || color_set(nk) == *color) out.push_back(std::move(nk));
        };
        if (r == 0) {
            emit({});
            continue;
        }
        detail::for_each_ordered_partition(rest, [&](const BlockList& blocks) {
            for (unsigned signs = 0; signs < (1U << r); ++signs) {
                BlockList cw = blocks;
                for (auto& b : cw)
                    for (auto& e : b) {
                        const auto k = std::find(rest.begin(), rest.end(), e) - rest.begin();
                        if ((signs >> k) & 1U) e = -e;
                    }
                emit(std::move(cw));
            }
        });
    }
    std::sort(out.begin(), out.end());
    return out;
}

inline std::ostream& operator<<(std::ostream& os, const SpinNecklace& x) { return os << x.to_string(); }
inline std::ostream& operator<<(std::ostream& os, const SymNecklace& x) { return os << x.to_string(); }

}  // namespace steinberg
