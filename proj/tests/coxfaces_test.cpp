#include <gtest/gtest.h>

#include <map>
#include <set>

#include "steinberg/coxfaces.hpp"

using namespace steinberg;

namespace {

SetComposition SA(int n, BlockList b) { return SetComposition(n, std::move(b)); }
SymComposition SC(int n, BlockList b) { return SymComposition::from_blocks(n, b); }

// Faces of A_{n-1} straight from the definition: surjections [n] -> [k].
std::set<SetComposition> faces_by_surjection(int n) {
    std::set<SetComposition> out;
    std::vector<int> f(n, 0);
    for (int k = 1; k <= n; ++k) {
        std::vector<int> code(n, 0);
        while (true) {
            std::vector<bool> hit(k, false);
            for (int c : code) hit[c] = true;
            if (std::all_of(hit.begin(), hit.end(), [](bool b) { return b; })) {
                BlockList blocks(k);
                for (int i = 0; i < n; ++i) blocks[code[i]].push_back(i + 1);
                out.insert(SetComposition(n, blocks));
            }
            int p = 0;
            while (p < n && ++code[p] == k) code[p++] = 0;
            if (p == n) break;
        }
    }
    return out;
}

long long factorial(int n) { return n <= 1 ? 1 : n * factorial(n - 1); }

}  // namespace

TEST(Coxfaces, TitsProductExamples) {
    EXPECT_EQ(SA(7, {{3, 5, 6, 7}, {4}, {1, 2}}) * SA(7, {{2, 6}, {3, 5}, {1, 7}, {4}}),
              SA(7, {{6}, {3, 5}, {7}, {4}, {2}, {1}}));
    EXPECT_EQ(SA(3, {{1}, {2, 3}}) * SA(3, {{3}, {1, 2}}), SA(3, {{1}, {3}, {2}}));
    const auto f = SC(5, {{-2, 1, 3, 5}, {-4, 0, 4}, {-5, -3, -1, 2}});
    const auto g = SC(5, {{1, -3, 5}, {-4, -2, 0, 2, 4}, {-5, 3, -1}});
    EXPECT_EQ(f * g, SC(5, {{1, 5}, {-2}, {3}, {-4, 0, 4}, {-3}, {2}, {-5, -1}}));
}

TEST(Coxfaces, UnitFace) {
    for (const auto& f : enumerate_set_compositions(4)) {
        EXPECT_EQ(f * SetComposition::single_block(4), f);
        EXPECT_EQ(SetComposition::single_block(4) * f, f);
    }
    for (const auto& f : enumerate_sym_compositions(2)) {
        EXPECT_EQ(f * SymComposition::single_block(2), f);
        EXPECT_EQ(SymComposition::single_block(2) * f, f);
    }
}

TEST(Coxfaces, SymmetricValidation) {
    EXPECT_THROW(SC(2, {{-1, 0, 1}, {2}}), InvalidValue);
    EXPECT_THROW(SC(2, {{1}, {-2, 0, 2}, {1}}), InvalidValue);
    EXPECT_THROW(SC(2, {{-2}, {-1, 1}, {2}}), InvalidValue);
    EXPECT_THROW(SA(3, {{1, 2}, {}, {3}}), InvalidValue);
    EXPECT_THROW(SA(3, {{1, 2}, {2, 3}}), InvalidValue);
    EXPECT_NO_THROW(SC(2, {{-2}, {-1, 0, 1}, {2}}));
}

TEST(Coxfaces, SignVectors) {
    EXPECT_EQ(sign_vector(SA(3, {{2}, {1, 3}})).to_string(), "-0+");
    EXPECT_EQ(sign_vector(SetComposition::single_block(4)).to_string(), "000000");
    EXPECT_EQ(sign_vector(SetComposition::fundamental_chamber(4)).to_string(), "++++++");
    EXPECT_EQ(sign_vector(SymComposition::fundamental_chamber(2)).to_string(), "++++");
    // (-2 | -1 0 1 | 2): 2e1, 2e2, e2-e1, e2+e1
    EXPECT_EQ(sign_vector(SC(2, {{-2}, {-1, 0, 1}, {2}})).to_string(), "0+++");
}

TEST(Coxfaces, WAndColorSet) {
    EXPECT_EQ(w_of_face(SA(5, {{1, 3, 4}, {5}, {2}})), WeylElement(Family::A(5), {1, 3, 4, 5, 2}));
    EXPECT_TRUE(w_of_face(SetComposition::fundamental_chamber(4)).is_identity());
    const auto c = SC(5, {{-5, -1, 3}, {-4}, {-2, 0, 2}, {4}, {-3, 1, 5}});
    EXPECT_EQ(w_of_face(c), WeylElement(Family::C(5), {2, 4, -3, 1, 5}));
    EXPECT_EQ(color_set(c), ColorSet(Family::C(5), {1, 2}));
    EXPECT_EQ(color_set(SA(3, {{1, 2}, {3}})), ColorSet(Family::A(3), {2}));
    EXPECT_TRUE(color_set(SetComposition::single_block(3)).empty());
    EXPECT_TRUE(color_set(SymComposition::single_block(3)).empty());
    EXPECT_EQ(color_set(SA(5, {{1, 3, 4}, {5}, {2}})), ColorSet(Family::A(5), {3, 4}));
}

TEST(Coxfaces, TypeCColorSetIsTheSameReadEitherWay) {
    for (int n = 1; n <= 3; ++n)
        for (const auto& f : enumerate_sym_compositions(n)) {
            const auto full = f.full_blocks();
            const int mid = static_cast<int>(full.size() / 2);
            ColorSet right(f.family()), left(f.family());
            int r = static_cast<int>(f.zero_positive().size()), l = r;
            for (int p = 0; p < mid; ++p) {
                right.insert(r);
                left.insert(l);
                r += static_cast<int>(full[mid + 1 + p].size());
                l += static_cast<int>(full[mid - 1 - p].size());
            }
            EXPECT_EQ(right, left);
            EXPECT_EQ(right, color_set(f));
        }
}

TEST(Coxfaces, Subfaces) {
    EXPECT_TRUE(is_subface(SA(3, {{1, 2, 3}}), SA(3, {{1}, {3}, {2}})));
    EXPECT_TRUE(is_subface(SA(3, {{1, 3}, {2}}), SA(3, {{1}, {3}, {2}})));
    EXPECT_TRUE(is_subface(SA(3, {{1, 3}, {2}}), SA(3, {{3}, {1}, {2}})));
    EXPECT_FALSE(is_subface(SA(3, {{1, 3}, {2}}), SA(3, {{1}, {2}, {3}})));
    EXPECT_FALSE(is_subface(SA(3, {{1}, {3}, {2}}), SA(3, {{1, 3}, {2}})));
    // F <= G iff F G = G
    for (const auto& f : enumerate_set_compositions(3))
        for (const auto& g : enumerate_set_compositions(3)) EXPECT_EQ(is_subface(f, g), f * g == g);
    for (const auto& f : enumerate_sym_compositions(2))
        for (const auto& g : enumerate_sym_compositions(2)) EXPECT_EQ(is_subface(f, g), f * g == g);
}

TEST(Coxfaces, Action) {
    const WeylElement w(Family::A(3), {2, 3, 1});
    EXPECT_EQ(act(w, SA(3, {{1}, {2, 3}})), SA(3, {{2}, {1, 3}}));
    for (const auto& f : enumerate_sym_compositions(2)) {
        EXPECT_EQ(act(WeylElement::identity(Family::C(2)), f), f);
    }
    for (const auto& u : enumerate_group(Family::A(3)))
        for (const auto& f : enumerate_set_compositions(3))
            for (const auto& g : enumerate_set_compositions(3)) EXPECT_EQ(act(u, f * g), act(u, f) * act(u, g));
    for (const auto& u : enumerate_group(Family::C(2)))
        for (const auto& f : enumerate_sym_compositions(2))
            for (const auto& g : enumerate_sym_compositions(2)) EXPECT_EQ(act(u, f * g), act(u, f) * act(u, g));
}

TEST(Coxfaces, Counts) {
    EXPECT_EQ(enumerate_set_compositions(3).size(), 13u);
    EXPECT_EQ(enumerate_set_compositions(3, ColorSet(Family::A(3), {2})).size(), 3u);
    EXPECT_EQ(enumerate_sym_compositions(2).size(), 17u);
    EXPECT_EQ(enumerate_set_compositions(1).size(), 1u);
    for (int n = 1; n <= 5; ++n) {
        EXPECT_EQ(enumerate_set_compositions(n, ColorSet::finite_full(Family::A(n))).size(),
                  static_cast<std::size_t>(factorial(n)));
        const auto brute = faces_by_surjection(n);
        const auto all = enumerate_set_compositions(n);
        EXPECT_EQ(std::set<SetComposition>(all.begin(), all.end()), brute);
    }
    for (int n = 1; n <= 3; ++n) {
        EXPECT_EQ(enumerate_sym_compositions(n, ColorSet::finite_full(Family::C(n))).size(),
                  static_cast<std::size_t>(factorial(n) << n));
    }
    EXPECT_THROW(enumerate_set_compositions(6, {}, 100), BudgetExceeded);
}

TEST(Coxfaces, OrbitSizesAreMultinomial) {
    for (int n = 1; n <= 5; ++n) {
        const Family f = Family::A(n);
        for (const auto& j : all_finite_color_sets(f)) {
            long long expect = factorial(n);
            int prev = 0;
            auto idx = j.indices();
            idx.push_back(n);
            for (int i : idx) {
                expect /= factorial(i - prev);
                prev = i;
            }
            EXPECT_EQ(enumerate_set_compositions(n, j).size(), static_cast<std::size_t>(expect));
        }
    }
}

TEST(Coxfaces, LeftRegularBandAndAssociativity) {
    for (int n = 1; n <= 4; ++n) {
        const auto all = enumerate_set_compositions(n);
        for (const auto& f : all)
            for (const auto& g : all) {
                ASSERT_EQ(f * f, f);
                ASSERT_EQ(f * g * f, f * g);
                ASSERT_EQ(sign_vector(f * g), combine_sign_vectors(sign_vector(f), sign_vector(g)));
            }
        if (n <= 3)
            for (const auto& f : all)
                for (const auto& g : all)
                    for (const auto& h : all) {
                        ASSERT_EQ((f * g) * h, f * (g * h));
                    }
    }
    for (int n = 1; n <= 3; ++n) {
        const auto all = enumerate_sym_compositions(n);
        for (const auto& f : all)
            for (const auto& g : all) {
                ASSERT_EQ(f * f, f);
                ASSERT_EQ(f * g * f, f * g);
                ASSERT_EQ(sign_vector(f * g), combine_sign_vectors(sign_vector(f), sign_vector(g)));
            }
        if (n <= 2)
            for (const auto& f : all)
                for (const auto& g : all)
                    for (const auto& h : all) {
                        ASSERT_EQ((f * g) * h, f * (g * h));
                    }
    }
}

TEST(Coxfaces, ChamberAbsorption) {
    const auto all = enumerate_set_compositions(4);
    for (const auto& c : enumerate_set_compositions(4, ColorSet::finite_full(Family::A(4))))
        for (const auto& f : all) EXPECT_EQ(c * f, c);
    const auto allc = enumerate_sym_compositions(3);
    for (const auto& c : enumerate_sym_compositions(3, ColorSet::finite_full(Family::C(3))))
        for (const auto& f : allc) EXPECT_EQ(c * f, c);
}

template <class Face>
void check_dcol_bijection(Family fam, const std::vector<Face>& faces) {
    std::map<ColorSet, std::set<WeylElement>> images;
    std::map<ColorSet, std::size_t> sizes;
    for (const auto& f : faces) {
        const auto w = w_of_face(f);
        EXPECT_TRUE(descent_set(w).is_subset_of(color_set(f)));
        images[color_set(f)].insert(w);
        ++sizes[color_set(f)];
    }
    for (const auto& j : all_finite_color_sets(fam)) {
        std::set<WeylElement> expect;
        for_each_element(fam, [&](const WeylElement& w) {
            if (descent_set(w).is_subset_of(j)) expect.insert(w);
        });
        EXPECT_EQ(images[j], expect) << j.to_string();
        EXPECT_EQ(sizes[j], expect.size());
    }
}

TEST(Coxfaces, DescentColorBijection) {
    for (int n = 1; n <= 5; ++n) check_dcol_bijection(Family::A(n), enumerate_set_compositions(n));
    for (int n = 1; n <= 3; ++n) check_dcol_bijection(Family::C(n), enumerate_sym_compositions(n));
}

TEST(Coxfaces, FaceIsWTimesStandardFace) {
    // F = w_F C_{Delta \ J}: acting on the standard face of color J recovers F
    for (const auto& f : enumerate_set_compositions(4)) {
        const auto j = color_set(f);
        BlockList std_blocks;
        int start = 1;
        auto idx = j.indices();
        idx.push_back(4);
        for (int i : idx) {
            Block b;
            for (int e = start; e <= i; ++e) b.push_back(e);
            std_blocks.push_back(b);
            start = i + 1;
        }
        EXPECT_EQ(act(w_of_face(f), SetComposition(4, std_blocks)), f);
    }
}
