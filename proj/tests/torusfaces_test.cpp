#include <gtest/gtest.h>

#include <map>
#include <set>

#include "steinberg/torusfaces.hpp"

using namespace steinberg;

namespace {

// The two necklaces on [6] with blocks 46 -> 135 -> 2 -> 46.
SpinNecklace spin1() { return SpinNecklace::from_cycle(6, {{4, 6}, {1, 3, 5}, {2}}, {4, 1, 2}); }
SpinNecklace spin2() { return SpinNecklace::from_cycle(6, {{4, 6}, {1, 3, 5}, {2}}, {3, 6, 1}); }
SymNecklace spin_c() { return SymNecklace(5, {2}, {{4}, {-3, 1, 5}}); }

ColorSet colors(Family f, std::vector<int> idx) { return ColorSet(f, idx); }

// Euler characteristic of the torus from a face list.
template <class Face>
int euler(const std::vector<Face>& faces) {
    int chi = 0;
    for (const auto& f : faces) chi += (color_set(f).size() % 2 == 1) ? 1 : -1;
    return chi;
}

long long factorial(int n) { return n <= 1 ? 1 : n * factorial(n - 1); }

}  // namespace

TEST(Torusfaces, ClaspAndSplit) {
    EXPECT_EQ(clasp(spin1()), (Block{1, 3, 5}));
    EXPECT_EQ(clasp(spin2()), (Block{2}));
    EXPECT_EQ(split(spin1()).as_list(), (BlockList{{5}, {2}, {4, 6}, {1, 3}}));
    EXPECT_EQ(split(spin2()).as_list(), (BlockList{{2}, {4, 6}, {1, 3, 5}}));
    EXPECT_TRUE(split(spin2()).tail.empty());
    const auto one = SpinNecklace::single_block(4, 4);
    EXPECT_EQ(clasp(one), (Block{1, 2, 3, 4}));
    EXPECT_TRUE(split(one).tail.empty());
    EXPECT_EQ(split(one).blocks, (BlockList{{1, 2, 3, 4}}));
}

TEST(Torusfaces, SplitRoundTrip) {
    for (int n = 1; n <= 5; ++n)
        for (const auto& nk : enumerate_spin_necklaces(n)) EXPECT_EQ(SpinNecklace::from_split(split(nk)), nk);
}

TEST(Torusfaces, Validation) {
    EXPECT_THROW(SpinNecklace(3, {{1}, {2, 3}}, {1, 1}), InvalidValue);
    EXPECT_THROW(SpinNecklace(3, {{1}, {2, 3}}, {3, 2}), InvalidValue);  // clasp not first
    EXPECT_THROW(SpinNecklace(3, {{1}, {2}}, {1, 2}), InvalidValue);
    EXPECT_THROW(SymNecklace(2, {1}, {{1}}), InvalidValue);
    EXPECT_THROW(SymNecklace::from_cycle(2, {{-1, 0, 1}, {2}, {2}}), InvalidValue);
    EXPECT_THROW(SymNecklace::from_cycle(2, {{0}, {1}, {2}, {-1}, {-2}}), InvalidValue);  // not flip symmetric
    EXPECT_NO_THROW(SymNecklace::from_cycle(2, {{-1, 0, 1}, {-2, 2}}));
}

TEST(Torusfaces, Contraction) {
    // contracting the edge labelled 1 of spin2 merges 2 into 46
    const auto nk = spin2();
    std::size_t edge = 0;
    while (nk.labels()[edge] != 1) ++edge;
    const auto c = contract_edge(nk, edge);
    EXPECT_EQ(c, SpinNecklace::from_cycle(6, {{1, 3, 5}, {2, 4, 6}}, {6, 3}));
    EXPECT_EQ(color_set(c), colors(Family::A(6), {3, 6}));
    EXPECT_THROW(contract_edge(SpinNecklace::single_block(3, 2), 0), InvalidValue);
}

TEST(Torusfaces, ContractionPosetIsSubsetLattice) {
    for (int n = 2; n <= 4; ++n)
        for (const auto& nk : enumerate_spin_necklaces(n)) {
            const auto labels = nk.labels();
            const std::size_t k = labels.size();
            std::set<SpinNecklace> below;
            for (unsigned mask = 1; mask < (1U << k); ++mask) {
                std::vector<int> keep;
                for (std::size_t p = 0; p < k; ++p)
                    if ((mask >> p) & 1U) keep.push_back(labels[p]);
                const auto f = restrict_labels(nk, keep);
                EXPECT_EQ(color_set(f), ColorSet(nk.family(), keep));
                below.insert(f);
            }
            EXPECT_EQ(below.size(), (1U << k) - 1);
            // single contractions are the faces with one label removed
            if (k >= 2)
                for (std::size_t p = 0; p < k; ++p) {
                    auto keep = labels;
                    keep.erase(keep.begin() + static_cast<std::ptrdiff_t>(p));
                    EXPECT_EQ(contract_edge(nk, p), restrict_labels(nk, keep));
                }
        }
}

TEST(Torusfaces, A2EdgesFromContractions) {
    std::set<SpinNecklace> edges;
    for (const auto& m : enumerate_spin_necklaces(3, ColorSet::affine_full(Family::A(3))))
        for (std::size_t p = 0; p < 3; ++p) edges.insert(contract_edge(m, p));
    EXPECT_EQ(edges.size(), 9u);
}

TEST(Torusfaces, ModuleActionExamples) {
    // spin1 acted on by (256|13|4)
    const auto r = module_action(spin1(), SetComposition(6, {{2, 5, 6}, {1, 3}, {4}}));
    EXPECT_EQ(r, SpinNecklace::from_cycle(6, {{2}, {6}, {4}, {5}, {1, 3}}, {2, 3, 4, 5, 1}));
    // Steinberg torus of A_2: {23} -1-> {1} -2-> acted on by (12|3)
    const auto a2 = SpinNecklace::from_cycle(3, {{2, 3}, {1}}, {1, 2});
    EXPECT_EQ(module_action(a2, SetComposition(3, {{1, 2}, {3}})),
              SpinNecklace::from_cycle(3, {{2}, {3}, {1}}, {3, 1, 2}));
    // type C
    const auto g = SymComposition::from_blocks(5, {{-5, 3}, {-4, 1}, {-2, 0, 2}, {-1, 4}, {-3, 5}});
    EXPECT_EQ(module_action(spin_c(), g),
              SymNecklace::from_cycle(5, {{-2, 0, 2}, {4}, {1}, {-3, 5}, {-5, 3}, {-1}, {-4}}));
}

TEST(Torusfaces, UnitAndMaximalFaces) {
    for (const auto& nk : enumerate_spin_necklaces(4)) {
        EXPECT_EQ(module_action(nk, SetComposition::single_block(4)), nk);
        for (const auto& c : enumerate_set_compositions(4, ColorSet::finite_full(Family::A(4)))) {
            EXPECT_TRUE(module_action(nk, c).is_maximal());
        }
        if (nk.is_maximal())
            for (const auto& g : enumerate_set_compositions(4)) {
                EXPECT_EQ(module_action(nk, g), nk);
            }
    }
    for (const auto& nk : enumerate_sym_necklaces(2)) {
        EXPECT_EQ(module_action(nk, SymComposition::single_block(2)), nk);
        for (const auto& c : enumerate_sym_compositions(2, ColorSet::finite_full(Family::C(2)))) {
            EXPECT_TRUE(module_action(nk, c).is_maximal());
        }
        if (nk.is_maximal())
            for (const auto& g : enumerate_sym_compositions(2)) {
                EXPECT_EQ(module_action(nk, g), nk);
            }
    }
}

TEST(Torusfaces, ModuleAxioms) {
    for (int n = 1; n <= 4; ++n) {
        const auto faces = enumerate_set_compositions(n);
        for (const auto& nk : enumerate_spin_necklaces(n))
            for (const auto& g1 : faces) {
                const auto once = module_action(nk, g1);
                ASSERT_EQ(module_action(once, g1), once);
                for (const auto& g2 : faces) ASSERT_EQ(module_action(nk, g1 * g2), module_action(once, g2));
            }
    }
    for (int n = 1; n <= 2; ++n) {
        const auto faces = enumerate_sym_compositions(n);
        for (const auto& nk : enumerate_sym_necklaces(n))
            for (const auto& g1 : faces) {
                const auto once = module_action(nk, g1);
                ASSERT_EQ(module_action(once, g1), once);
                for (const auto& g2 : faces) ASSERT_EQ(module_action(nk, g1 * g2), module_action(once, g2));
            }
    }
}

TEST(Torusfaces, WAndColorSet) {
    EXPECT_EQ(w_of_torus_face(spin1()), WeylElement(Family::A(6), {5, 2, 4, 6, 1, 3}));
    EXPECT_EQ(w_of_torus_face(spin2()), WeylElement(Family::A(6), {2, 4, 6, 1, 3, 5}));
    EXPECT_EQ(w_of_torus_face(spin_c()), WeylElement(Family::C(5), {2, 4, -3, 1, 5}));
    EXPECT_EQ(color_set(spin1()), colors(Family::A(6), {1, 2, 4}));
    // the recipe gives {1, 2, 5}; it must contain the affine descents {2, 5} of 2 4 -3 1 5
    EXPECT_EQ(color_set(spin_c()), colors(Family::C(5), {1, 2, 5}));
    EXPECT_EQ(affine_descent_set(w_of_torus_face(spin_c())), colors(Family::C(5), {2, 5}));
}

TEST(Torusfaces, C2Orbits) {
    const Family f = Family::C(2);
    const auto red = enumerate_sym_necklaces(2, colors(f, {1, 2}));
    const auto green = enumerate_sym_necklaces(2, colors(f, {0, 2}));
    EXPECT_EQ(red.size(), 4u);
    EXPECT_EQ(green.size(), 4u);
    EXPECT_TRUE(std::find(red.begin(), red.end(), SymNecklace(2, {1}, {{2}})) != red.end());
    EXPECT_TRUE(std::find(green.begin(), green.end(), SymNecklace(2, {}, {{1, 2}})) != green.end());
}

TEST(Torusfaces, A2RedEdges) {
    const auto red = enumerate_spin_necklaces(3, colors(Family::A(3), {2, 3}));
    EXPECT_EQ(red.size(), 3u);
    for (const auto& e : red) EXPECT_EQ(e.num_blocks(), 2u);
}

TEST(Torusfaces, Action) {
    for (const auto& nk : enumerate_spin_necklaces(3)) EXPECT_EQ(act(WeylElement::identity(Family::A(3)), nk), nk);
    for (const auto& u : enumerate_group(Family::A(3)))
        for (const auto& nk : enumerate_spin_necklaces(3))
            for (const auto& g : enumerate_set_compositions(3))
                EXPECT_EQ(act(u, module_action(nk, g)), module_action(act(u, nk), act(u, g)));
    for (const auto& u : enumerate_group(Family::C(2)))
        for (const auto& nk : enumerate_sym_necklaces(2))
            for (const auto& g : enumerate_sym_compositions(2))
                EXPECT_EQ(act(u, module_action(nk, g)), module_action(act(u, nk), act(u, g)));
    std::set<SpinNecklace> orbit;
    const auto m = maximal_from_perm_a(WeylElement::identity(Family::A(3)));
    for (const auto& u : enumerate_group(Family::A(3))) orbit.insert(act(u, m));
    EXPECT_EQ(orbit.size(), 6u);
}

TEST(Torusfaces, MaximalFacesAndPermutations) {
    const WeylElement w(Family::A(6), {2, 6, 4, 1, 3, 5});
    const auto m = maximal_from_perm_a(w);
    EXPECT_EQ(m, SpinNecklace(6, {{2}, {6}, {4}, {1}, {3}, {5}}, {1, 2, 3, 4, 5, 6}));
    EXPECT_EQ(perm_from_maximal(m), w);
    EXPECT_EQ(clasp(maximal_from_perm_a(WeylElement::identity(Family::A(4)))), (Block{1}));
    for_each_element(Family::A(4), [](const WeylElement& u) {
        EXPECT_EQ(perm_from_maximal(maximal_from_perm_a(u)), u);
        EXPECT_EQ(w_of_torus_face(maximal_from_perm_a(u)), u);
    });
    for_each_element(Family::C(3), [](const WeylElement& u) {
        EXPECT_EQ(perm_from_maximal(maximal_from_perm_c(u)), u);
    });
    EXPECT_THROW(perm_from_maximal(spin1()), InvalidValue);
}

TEST(Torusfaces, Counts) {
    const auto a2 = enumerate_spin_necklaces(3);
    EXPECT_EQ(a2.size(), 18u);
    std::map<std::size_t, int> census;
    for (const auto& f : a2) ++census[f.num_blocks()];
    EXPECT_EQ(census[1], 3);
    EXPECT_EQ(census[2], 9);
    EXPECT_EQ(census[3], 6);
    EXPECT_EQ(enumerate_spin_necklaces(3, ColorSet::affine_full(Family::A(3))).size(), 6u);

    const auto c2 = enumerate_sym_necklaces(2);
    EXPECT_EQ(c2.size(), 24u);
    std::map<int, int> c_census;
    for (const auto& f : c2) ++c_census[color_set(f).size()];
    EXPECT_EQ(c_census[1], 4);
    EXPECT_EQ(c_census[2], 12);
    EXPECT_EQ(c_census[3], 8);
    EXPECT_EQ(enumerate_sym_necklaces(1).size(), 4u);

    for (int n = 1; n <= 5; ++n) {
        EXPECT_EQ(enumerate_spin_necklaces(n, ColorSet::affine_full(Family::A(n))).size(),
                  static_cast<std::size_t>(factorial(n)));
    }
    for (int n = 1; n <= 3; ++n) {
        EXPECT_EQ(enumerate_sym_necklaces(n, ColorSet::affine_full(Family::C(n))).size(),
                  static_cast<std::size_t>(factorial(n) << n));
    }
}

TEST(Torusfaces, EulerCharacteristicVanishes) {
    for (int n = 2; n <= 6; ++n) EXPECT_EQ(euler(enumerate_spin_necklaces(n)), 0) << n;
    for (int n = 1; n <= 4; ++n) EXPECT_EQ(euler(enumerate_sym_necklaces(n)), 0) << n;
}

template <class Face>
void check_sdcol_bijection(Family fam, const std::vector<Face>& faces) {
    std::map<ColorSet, std::set<WeylElement>> images;
    std::map<ColorSet, std::size_t> sizes;
    for (const auto& f : faces) {
        const auto w = w_of_torus_face(f);
        EXPECT_TRUE(affine_descent_set(w).is_subset_of(color_set(f)));
        images[color_set(f)].insert(w);
        ++sizes[color_set(f)];
    }
    for (const auto& j : all_affine_color_sets(fam)) {
        std::set<WeylElement> expect;
        for_each_element(fam, [&](const WeylElement& w) {
            if (affine_descent_set(w).is_subset_of(j)) expect.insert(w);
        });
        EXPECT_EQ(images[j], expect) << j.to_string();
        EXPECT_EQ(sizes[j], expect.size());
    }
}

TEST(Torusfaces, AffineDescentColorBijection) {
    for (int n = 2; n <= 5; ++n) check_sdcol_bijection(Family::A(n), enumerate_spin_necklaces(n));
    for (int n = 1; n <= 3; ++n) check_sdcol_bijection(Family::C(n), enumerate_sym_necklaces(n));
}

TEST(Torusfaces, LabelsStayConsistentUnderOperations) {
    // the constructor re-validates the cyclic rule and the clasp; reaching here means it held
    for (const auto& nk : enumerate_spin_necklaces(4))
        for (const auto& g : enumerate_set_compositions(4)) {
            const auto r = module_action(nk, g);
            EXPECT_NO_THROW(SpinNecklace(r.rank(), r.blocks(), r.labels()));
        }
}
