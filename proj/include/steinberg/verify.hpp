#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "steinberg/affine_oracle.hpp"
#include "steinberg/descent_algebra.hpp"

namespace steinberg {

struct SuiteReport {
    std::string name;
    bool applicable = true;
    std::size_t checked = 0;
    std::size_t failed = 0;
    std::vector<std::string> witnesses;  // first few failures
    bool passed() const { return failed == 0; }
};

struct VerifyReport {
    Family family;
    std::string suite;
    std::vector<SuiteReport> suites;
    bool passed() const {
        return std::all_of(suites.begin(), suites.end(), [](const SuiteReport& s) { return s.passed(); });
    }
};

inline const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names{"solomon", "module", "psi", "lrb", "euler", "counts", "oracle"};
    return names;
}

namespace detail {

constexpr std::size_t max_witnesses = 5;

inline SuiteReport skipped(std::string name) {
    SuiteReport r;
    r.name = std::move(name);
    r.applicable = false;
    return r;
}

class Checker {
public:
    explicit Checker(std::string name) { report_.name = std::move(name); }

    void check(bool ok, const std::function<std::string()>& witness) {
        ++report_.checked;
        if (ok) return;
        ++report_.failed;
        if (report_.witnesses.size() < max_witnesses) report_.witnesses.push_back(witness());
    }
    SuiteReport done() { return std::move(report_); }

private:
    SuiteReport report_;
};

inline std::string pair_label(const char* a, const ColorSet& i, const char* b, const ColorSet& j) {
    return std::string(a) + "=" + i.to_string() + " " + b + "=" + j.to_string();
}

inline bool all_nonnegative(const Expansion& e) {
    return std::all_of(e.begin(), e.end(), [](const auto& kv) { return kv.second >= 0; });
}

inline SuiteReport closure_suite(Family family, BasisKind right, const char* name) {
    Checker c(name);
    const auto left_idx = basis_indices(BasisKind::X, family);
    const auto right_idx = basis_indices(right, family);
    std::vector<GroupRingElement> right_el;
    for (const auto& j : right_idx) right_el.push_back(basis_element(right, j));
    for (const auto& i : left_idx) {
        const auto xi = basis_element(BasisKind::X, i);
        for (std::size_t b = 0; b < right_idx.size(); ++b) {
            const auto prod = xi * right_el[b];
            try {
                const auto e = express_in_basis(prod, right);
                c.check(combine(right, e, family) == prod && all_nonnegative(e), [&] {
                    return pair_label("I", i, "J", right_idx[b]) + ": expansion does not reproduce the product";
                });
            } catch (const NotInSpan& err) {
                c.check(false, [&] { return pair_label("I", i, "J", right_idx[b]) + ": " + err.what(); });
            }
        }
    }
    return c.done();
}

template <class Fin, class Tor>
SuiteReport psi_suite(Family family) {
    Checker c("psi");
    const auto fin_idx = basis_indices(BasisKind::X, family);
    const auto tor_idx = basis_indices(BasisKind::AffineX, family);
    std::vector<FaceSum<Fin>> sigma;
    std::vector<GroupRingElement> x;
    for (const auto& j : fin_idx) {
        sigma.push_back(orbit_sum<Fin>(j));
        x.push_back(basis_element(BasisKind::X, j));
        c.check(psi(sigma.back(), family) == x.back(), [&] { return "Psi(sigma_" + j.to_string() + ") != x_J"; });
    }
    for (std::size_t a = 0; a < fin_idx.size(); ++a)
        for (std::size_t b = 0; b < fin_idx.size(); ++b) {
            const auto lhs = psi(face_sum_product(sigma[a], sigma[b]), family);
            c.check(lhs == x[b] * x[a], [&] {
                return pair_label("J", fin_idx[a], "K", fin_idx[b]) + ": Psi(sigma_J sigma_K) != x_K x_J";
            });
        }
    for (const auto& k : tor_idx) {
        const auto tk = orbit_sum<Tor>(k);
        const auto xk = basis_element(BasisKind::AffineX, k);
        c.check(psi(tk, family) == xk, [&] { return "Psi(sigma~_" + k.to_string() + ") != x~_K"; });
        for (std::size_t a = 0; a < fin_idx.size(); ++a) {
            const auto prod = face_sum_product(tk, sigma[a]);
            const auto rhs = x[a] * xk;
            c.check(psi(prod, family) == rhs, [&] {
                return pair_label("K", k, "J", fin_idx[a]) + ": Psi(sigma~_K sigma_J) != x_J x~_K";
            });
            c.check(orbit_expansion(prod) == express_in_basis(rhs, BasisKind::AffineX), [&] {
                return pair_label("K", k, "J", fin_idx[a]) + ": orbit expansion differs from the x~ expansion";
            });
        }
    }
    return c.done();
}

template <class Fin, class Tor>
SuiteReport lrb_suite(Family family, std::uint64_t seed) {
    Checker c("lrb");
    const int n = family.rank;
    const auto faces = FaceTraits<Fin>::enumerate(n);
    const auto torus = FaceTraits<Tor>::enumerate(n);
    const auto unit = Fin::single_block(n);
    for (const auto& x : faces) {
        c.check(x * x == x && unit * x == x && x * unit == x, [&] { return "idempotence/unit fails at " + x.to_string(); });
        for (const auto& y : faces) {
            const auto xy = x * y;
            c.check(xy * x == xy, [&] { return "xyx != xy at x=" + x.to_string() + " y=" + y.to_string(); });
        }
    }
    // associativity on all triples when small, else with the middle face drawn from a seeded sample
    std::vector<Fin> middles = faces;
    if (faces.size() > 80) {
        middles = {Fin::fundamental_chamber(n), unit};
        std::mt19937_64 rng(seed);
        for (int k = 0; k < 16; ++k) middles.push_back(faces[rng() % faces.size()]);
    }
    for (const auto& x : faces)
        for (const auto& y : middles)
            for (const auto& z : faces)
                c.check((x * y) * z == x * (y * z), [&] {
                    return "associativity fails at " + x.to_string() + ", " + y.to_string() + ", " + z.to_string();
                });
    // right module axioms on the torus
    for (const auto& f : torus) {
        c.check(f * unit == f, [&] { return "unit action fails at " + f.to_string(); });
        for (const auto& g : middles)
            for (const auto& h : faces)
                c.check((f * g) * h == f * (g * h), [&] {
                    return "module associativity fails at " + f.to_string() + ", " + g.to_string() + ", " + h.to_string();
                });
    }
    return c.done();
}

template <class Fin, class Tor>
SuiteReport euler_suite(Family family) {
    if (family.is_a() && family.rank < 2) return skipped("euler");
    Checker c("euler");
    long long chi = 0;
    for (const auto& f : FaceTraits<Tor>::enumerate(family.rank)) chi += (color_set(f).size() % 2 == 1) ? 1 : -1;
    c.check(chi == 0, [&] { return "torus Euler characteristic is " + std::to_string(chi); });
    return c.done();
}

template <class Face>
void check_class_bijection(Checker& c, Family family, const ColorSet& j, BasisKind kind) {
    std::set<WeylElement> image;
    std::size_t faces = 0;
    for (const auto& f : FaceTraits<Face>::enumerate(family.rank, j)) {
        ++faces;
        image.insert(FaceTraits<Face>::w_of(f));
    }
    std::set<WeylElement> expected;
    for_each_element(family, [&](const WeylElement& w) {
        if (descent_key(w, kind).is_subset_of(j)) expected.insert(w);
    });
    c.check(faces == image.size() && image == expected, [&] {
        return "color " + j.to_string() + ": w_F is not a bijection onto the descent class";
    });
}

template <class Fin, class Tor>
SuiteReport counts_suite(Family family) {
    Checker c("counts");
    const int n = family.rank;
    const std::size_t order = group_order(family);
    const auto chambers = FaceTraits<Fin>::enumerate(n, ColorSet::finite_full(family)).size();
    c.check(chambers == order, [&] { return "chamber count " + std::to_string(chambers) + " != |W|"; });
    if (family.is_c() || n >= 2) {
        const auto maximal = FaceTraits<Tor>::enumerate(n, ColorSet::affine_full(family)).size();
        c.check(maximal == order, [&] { return "maximal torus face count " + std::to_string(maximal) + " != |W|"; });
        std::size_t total = 0;
        for (const auto& j : basis_indices(BasisKind::AffineX, family)) {
            total += FaceTraits<Tor>::enumerate(n, j).size();
            check_class_bijection<Tor>(c, family, j, BasisKind::AffineX);
        }
        const auto all = FaceTraits<Tor>::enumerate(n).size();
        c.check(total == all, [&] { return "torus orbits do not partition the faces"; });
    }
    std::size_t total = 0;
    for (const auto& j : basis_indices(BasisKind::X, family)) {
        total += FaceTraits<Fin>::enumerate(n, j).size();
        check_class_bijection<Fin>(c, family, j, BasisKind::X);
    }
    const auto all = FaceTraits<Fin>::enumerate(n).size();
    c.check(total == all, [&] { return "finite orbits do not partition the faces"; });
    return c.done();
}

inline std::vector<CorootVector> coroots_in_box(int n, long long r) {
    std::vector<CorootVector> out;
    std::vector<long long> v(n, -r);
    while (true) {
        long long s = 0;
        for (auto x : v) s += x;
        if (s == 0) out.emplace_back(v);
        int p = 0;
        while (p < n && ++v[p] > r) v[p++] = -r;
        if (p == n) break;
    }
    return out;
}

/// Necklace action against the affine coordinate oracle, plus translation equivariance.
inline SuiteReport oracle_suite(Family family) {
    if (!family.is_a() || family.rank < 2) return skipped("oracle");
    Checker c("oracle");
    const int n = family.rank;
    const auto faces = enumerate_set_compositions(n);
    const auto mus = coroots_in_box(n, 2);
    for (const auto& nk : enumerate_spin_necklaces(n)) {
        const auto v = lift(nk);
        c.check(project(v) == nk, [&] { return "project(lift) != id at " + nk.to_string(); });
        for (const auto& g : faces) {
            const auto acted = oracle_act(v, g);
            c.check(project(acted) == module_action(nk, g),
                    [&] { return "oracle disagrees at " + nk.to_string() + " . " + g.to_string(); });
            for (const auto& mu : mus)
                c.check(oracle_act(translate(v, mu), g) == translate(acted, mu), [&] {
                    return "translation equivariance fails at " + nk.to_string() + " . " + g.to_string() +
                           " mu=" + mu.to_string();
                });
        }
    }
    return c.done();
}

template <class Fin, class Tor>
SuiteReport run_suite(Family family, const std::string& name, std::uint64_t seed) {
    if (name == "solomon") return closure_suite(family, BasisKind::X, "solomon");
    if (name == "module") return closure_suite(family, BasisKind::AffineX, "module");
    if (name == "psi") return psi_suite<Fin, Tor>(family);
    if (name == "lrb") return lrb_suite<Fin, Tor>(family, seed);
    if (name == "euler") return euler_suite<Fin, Tor>(family);
    if (name == "counts") return counts_suite<Fin, Tor>(family);
    if (name == "oracle") return oracle_suite(family);
    throw InvalidValue("unknown suite " + name);
}

}  // namespace detail

/// Runs one suite, or every suite for "all".  The seed drives sampling in large
/// lrb runs.  Budget overruns propagate as BudgetExceeded.
inline VerifyReport verify(Family family, const std::string& suite, std::uint64_t seed = 0) {
    const auto& names = suite_names();
    if (suite != "all" && std::find(names.begin(), names.end(), suite) == names.end()) {
        throw InvalidValue("unknown suite " + suite);
    }
    VerifyReport report{family, suite, {}};
    for (const auto& name : names) {
        if (suite != "all" && suite != name) continue;
        report.suites.push_back(family.is_a() ? detail::run_suite<SetComposition, SpinNecklace>(family, name, seed)
                                              : detail::run_suite<SymComposition, SymNecklace>(family, name, seed));
    }
    return report;
}

}  // namespace steinberg
