#pragma once

#include <limits>
#include <string>
#include <vector>

#include <json.hpp>

#include "steinberg/affine_oracle.hpp"
#include "steinberg/descent_algebra.hpp"
#include "steinberg/verify.hpp"

// JSON wire forms.  Keys keep insertion order so that output is byte-stable.
namespace steinberg::wire {

using Json = nlohmann::ordered_json;

namespace detail {

inline void expect(bool ok, const std::string& what) {
    if (!ok) throw ParseError(what);
}

inline int as_int(const Json& j, const std::string& what) {
    expect(j.is_number_integer(), what + ": expected an integer");
    const auto v = j.get<long long>();
    expect(v >= std::numeric_limits<int>::min() && v <= std::numeric_limits<int>::max(), what + ": out of range");
    return static_cast<int>(v);
}

inline Block as_block(const Json& j, const std::string& what) {
    expect(j.is_array(), what + ": expected an array of integers");
    Block out;
    for (const auto& e : j) out.push_back(as_int(e, what));
    return out;
}

inline BlockList as_blocks(const Json& j, const std::string& what) {
    expect(j.is_array(), what + ": expected an array of blocks");
    BlockList out;
    for (const auto& b : j) out.push_back(as_block(b, what));
    return out;
}

inline const Json& field(const Json& j, const char* key, const std::string& what) {
    expect(j.is_object(), what + ": expected an object");
    auto it = j.find(key);
    expect(it != j.end(), what + ": missing \"" + key + "\"");
    return *it;
}

inline Json blocks_json(const BlockList& blocks) {
    Json out = Json::array();
    for (const auto& b : blocks) out.push_back(b);
    return out;
}

inline Json integer_json(const Integer& c) {
    if (c >= std::numeric_limits<long long>::min() && c <= std::numeric_limits<long long>::max()) {
        return c.convert_to<long long>();
    }
    return c.str();
}

}  // namespace detail

inline Json parse_text(const std::string& text) {
    try {
        return Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
}

// ---------------------------------------------------------------------------
// Output

inline Json to_json(const WeylElement& w) { return w.values(); }
inline Json to_json(const ColorSet& c) { return c.indices(); }
inline std::string key_of(const ColorSet& c) { return to_json(c).dump(); }

inline Json to_json(const SetComposition& f) { return Json{{"blocks", detail::blocks_json(f.blocks())}}; }
inline Json to_json(const SymComposition& f) { return Json{{"blocks", detail::blocks_json(f.full_blocks())}}; }
inline Json to_json(const FiniteSignVector& v) { return Json{{"order", "lex"}, {"signs", v.to_string()}}; }

inline Json to_json(const SpinNecklace& nk) {
    return Json{{"blocks", detail::blocks_json(nk.blocks())}, {"labels", nk.labels()}};
}

inline Json to_json(const SymNecklace& nk) {
    Json out{{"zero_block", nk.zero_block()}, {"clockwise", detail::blocks_json(nk.clockwise())}};
    if (auto a = nk.antipodal()) {
        out["antipodal"] = *a;
    } else {
        out["antipodal"] = nullptr;
    }
    return out;
}

inline Json to_json(const CompactSignVector& v) {
    Json entries = Json::array();
    const int n = v.rank();
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) {
            const auto& e = v.at(i, j);
            entries.push_back(Json{{"i", i}, {"j", j}, {"k", e.level}, {"s", std::string(1, static_cast<char>(e.sign))}});
        }
    return Json{{"n", n}, {"entries", entries}};
}

inline Json to_json(const Expansion& e) {
    Json out = Json::object();
    for (const auto& [k, c] : e) out[key_of(k)] = detail::integer_json(c);
    return out;
}

inline Json to_json(const GroupRingElement& a) {
    Json out = Json::array();
    for (const auto& [w, c] : a.terms()) out.push_back(Json{{"w", to_json(w)}, {"c", detail::integer_json(c)}});
    return out;
}

inline std::string family_letter(Family f) { return f.is_a() ? "A" : "C"; }

inline Json to_json(const StructureTable& t) {
    Json entries = Json::array();
    for (const auto& e : t.entries)
        entries.push_back(Json{{"I", to_json(e.i)}, {"J", to_json(e.j)}, {"coeffs", to_json(e.coeffs)}});
    return Json{{"kind", t.kind}, {"family", family_letter(t.family)}, {"rank", t.family.rank}, {"entries", entries}};
}

inline Json to_json(const SuiteReport& r) {
    Json out{{"name", r.name}};
    if (!r.applicable) {
        out["status"] = "skipped";
    } else {
        out["status"] = r.passed() ? "pass" : "fail";
    }
    out["checked"] = r.checked;
    out["failed"] = r.failed;
    out["witnesses"] = r.witnesses;
    return out;
}

inline Json to_json(const VerifyReport& r) {
    Json suites = Json::array();
    for (const auto& s : r.suites) suites.push_back(to_json(s));
    return Json{{"family", family_letter(r.family)},
                {"rank", r.family.rank},
                {"suite", r.suite},
                {"passed", r.passed()},
                {"suites", suites}};
}

/// Every group element with its descent set (or affine descent set), in lexicographic order.
inline Json descent_table(Family family, bool affine) {
    Json rows = Json::array();
    for_each_element(family, [&](const WeylElement& w) {
        rows.push_back(Json{{"w", to_json(w)}, {"descents", to_json(affine ? affine_descent_set(w) : descent_set(w))}});
    });
    return Json{{"family", family_letter(family)}, {"rank", family.rank}, {"affine", affine}, {"rows", rows}};
}

// ---------------------------------------------------------------------------
// Input.  Shape errors raise ParseError; model invariant violations raise InvalidValue.

template <class T>
T from_json(const Json& j, Family family);

template <>
inline WeylElement from_json<WeylElement>(const Json& j, Family family) {
    return WeylElement(family, detail::as_block(j, "group element"));
}

template <>
inline ColorSet from_json<ColorSet>(const Json& j, Family family) {
    return ColorSet(family, detail::as_block(j, "color set"));
}

template <>
inline SetComposition from_json<SetComposition>(const Json& j, Family family) {
    if (!family.is_a()) throw FamilyMismatch("set composition given for " + family.name());
    return SetComposition(family.rank, detail::as_blocks(detail::field(j, "blocks", "face"), "face blocks"));
}

template <>
inline SymComposition from_json<SymComposition>(const Json& j, Family family) {
    if (!family.is_c()) throw FamilyMismatch("symmetric composition given for " + family.name());
    return SymComposition::from_blocks(family.rank, detail::as_blocks(detail::field(j, "blocks", "face"), "face blocks"));
}

template <>
inline FiniteSignVector from_json<FiniteSignVector>(const Json& j, Family family) {
    const auto& order = detail::field(j, "order", "sign vector");
    detail::expect(order.is_string() && order.get<std::string>() == "lex", "sign vector: order must be \"lex\"");
    const auto& s = detail::field(j, "signs", "sign vector");
    detail::expect(s.is_string(), "sign vector: signs must be a string");
    FiniteSignVector out{family, {}};
    for (char c : s.get<std::string>()) {
        if (c != '-' && c != '0' && c != '+') throw InvalidValue(std::string("sign vector: bad sign '") + c + "'");
        out.signs.push_back(static_cast<Sign>(c));
    }
    if (out.signs.size() != positive_root_names(family).size()) throw InvalidValue("sign vector: wrong length");
    return out;
}

/// Accepts any rotation of the cycle; labels are read mod n.
template <>
inline SpinNecklace from_json<SpinNecklace>(const Json& j, Family family) {
    if (!family.is_a()) throw FamilyMismatch("spin necklace given for " + family.name());
    return SpinNecklace::from_cycle(family.rank, detail::as_blocks(detail::field(j, "blocks", "necklace"), "necklace blocks"),
                                    detail::as_block(detail::field(j, "labels", "necklace"), "necklace labels"));
}

template <>
inline SymNecklace from_json<SymNecklace>(const Json& j, Family family) {
    if (!family.is_c()) throw FamilyMismatch("symmetric necklace given for " + family.name());
    const Block zero = detail::as_block(detail::field(j, "zero_block", "necklace"), "zero block");
    const BlockList cw = detail::as_blocks(detail::field(j, "clockwise", "necklace"), "clockwise blocks");
    std::optional<Block> anti;
    if (auto it = j.find("antipodal"); it != j.end() && !it->is_null()) anti = detail::as_block(*it, "antipodal block");
    auto positive = [](const Block& b) {
        Block p;
        for (int e : b)
            if (e > 0) p.push_back(e);
        return p;
    };
    SymNecklace out(family.rank, positive(zero), cw, anti ? positive(*anti) : Block{});
    if (::steinberg::detail::sorted(zero) != out.zero_block()) throw InvalidValue("symmetric necklace: bad zero block");
    if (anti && (anti->empty() || ::steinberg::detail::sorted(*anti) != *out.antipodal())) {
        throw InvalidValue("symmetric necklace: bad antipodal block");
    }
    return out;
}

template <>
inline CompactSignVector from_json<CompactSignVector>(const Json& j, Family family) {
    if (!family.is_a()) throw FamilyMismatch("compact sign vectors are type A only");
    const int n = detail::as_int(detail::field(j, "n", "compact sign vector"), "n");
    if (n != family.rank) throw FamilyMismatch("compact sign vector rank differs from " + family.name());
    const auto& entries = detail::field(j, "entries", "compact sign vector");
    detail::expect(entries.is_array(), "compact sign vector: entries must be an array");
    std::vector<CompactSignVector::Entry> out(static_cast<std::size_t>(n) * (n - 1) / 2);
    std::vector<bool> seen(out.size(), false);
    for (const auto& e : entries) {
        const int i = detail::as_int(detail::field(e, "i", "entry"), "i");
        const int k = detail::as_int(detail::field(e, "j", "entry"), "j");
        if (i < 1 || k <= i || k > n) throw InvalidValue("compact sign vector: bad pair");
        const auto& s = detail::field(e, "s", "entry");
        detail::expect(s.is_string() && s.get<std::string>().size() == 1, "entry: s must be one character");
        const char c = s.get<std::string>()[0];
        if (c != '-' && c != '0' && c != '+') throw InvalidValue(std::string("compact sign vector: bad sign '") + c + "'");
        const auto idx = CompactSignVector::index(n, i, k);
        if (seen[idx]) throw InvalidValue("compact sign vector: repeated pair");
        seen[idx] = true;
        detail::expect(detail::field(e, "k", "entry").is_number_integer(), "entry: k must be an integer");
        out[idx] = {detail::field(e, "k", "entry").get<long long>(), static_cast<Sign>(c)};
    }
    for (bool b : seen)
        if (!b) throw InvalidValue("compact sign vector: missing pair");
    return CompactSignVector(n, std::move(out));
}

}  // namespace steinberg::wire
