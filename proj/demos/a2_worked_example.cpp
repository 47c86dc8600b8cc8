// The A_2 example end to end: rays of color {2}, edges of color {1,2}, their
// product on the torus, and the matching product in the group ring.
#include <iostream>

#include "steinberg/descent_algebra.hpp"

using namespace steinberg;

int main() {
    const Family f = Family::A(3);
    const ColorSet two(f, {2}), one_two(f, {1, 2}), full = ColorSet::affine_full(f);

    std::cout << "w      D~(w)\n";
    for (const auto& w : enumerate_group(f)) std::cout << w << "    " << affine_descent_set(w) << "\n";

    const auto rays = orbit_sum<SetComposition>(two);
    const auto edges = orbit_sum<SpinNecklace>(one_two);
    std::cout << "\nrays of color " << two << ":\n";
    for (const auto& [r, c] : rays) std::cout << "  " << r << "  w_F = " << w_of_face(r) << "\n";
    std::cout << "torus edges of color " << one_two << ":\n";
    for (const auto& [e, c] : edges) std::cout << "  " << e << "  w_F = " << w_of_torus_face(e) << "\n";

    const auto prod = face_sum_product(edges, rays);
    std::cout << "\nedges . rays, by color:\n";
    for (const auto& [j, c] : orbit_expansion(prod)) std::cout << "  " << c << " x orbit " << j << "\n";

    const auto x2 = basis_element(BasisKind::X, two);
    const auto xt = basis_element(BasisKind::AffineX, one_two);
    std::cout << "\nx_{2}    = " << x2 << "\nx~_{1,2} = " << xt << "\n";
    const auto alg = x2 * xt;
    std::cout << "x_{2} x~_{1,2} = " << alg << "\n";
    for (const auto& [j, c] : express_in_basis(alg, BasisKind::AffineX)) std::cout << "  " << c << " x~_" << j << "\n";

    std::cout << "\nPsi(edges . rays) == x_{2} x~_{1,2}: " << (psi(prod, f) == alg ? "yes" : "no") << "\n";
    std::cout << "x~_" << full << " is every element once: "
              << (basis_element(BasisKind::AffineX, full).support_size() == group_order(f) ? "yes" : "no") << "\n";
}
