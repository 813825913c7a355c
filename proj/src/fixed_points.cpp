#include "bimoebius/fixed_points.hpp"

#include <cmath>

namespace bimo {

namespace {

constexpr double kDoubleRootRelTol = 1e-12;  // on the discriminant
constexpr double kDedupRelTol = 1e-9;        // between computed roots

ExtendedComplex guarded(Complex v) {
    return detail::finite(v) ? ExtendedComplex(v) : ExtendedComplex::infinity();
}

// Roots of A w^2 + B w + C = 0 with A != 0, using the q-form so the
// small-magnitude root is not lost to cancellation.
ComponentSolution solve_quadratic(Complex A, Complex B, Complex C) {
    ComponentSolution sol;
    const Complex disc = B * B - 4.0 * A * C;
    const double disc_scale = std::norm(B) + 4.0 * std::abs(A) * std::abs(C);
    if (std::abs(disc) <= kDoubleRootRelTol * disc_scale) {
        sol.roots.push_back({guarded(-B / (2.0 * A)), 2});
        return sol;
    }
    const Complex s = std::sqrt(disc);
    const Complex q = std::abs(B + s) >= std::abs(B - s) ? -(B + s) / 2.0 : -(B - s) / 2.0;
    const Complex r1 = q / A;
    const Complex r2 = C / q;
    if (!detail::finite(r1) || !detail::finite(r2)) {
        // A root left the double range; keep the representable one.
        if (!detail::finite(r1) && !detail::finite(r2)) {
            sol.roots.push_back({ExtendedComplex::infinity(), 2});
        } else {
            sol.roots.push_back({ExtendedComplex::infinity(), 1});
            sol.roots.push_back({ExtendedComplex(detail::finite(r1) ? r1 : r2), 1});
        }
        return sol;
    }
    if (std::abs(r1 - r2) <= kDedupRelTol * std::max(std::abs(r1), std::abs(r2))) {
        sol.roots.push_back({guarded((r1 + r2) / 2.0), 2});
    } else {
        sol.roots.push_back({guarded(r1), 1});
        sol.roots.push_back({guarded(r2), 1});
    }
    return sol;
}

}  // namespace

ComponentSolution solve_component(const ComponentMobius& m) {
    const Complex zero(0.0, 0.0);
    if (m.c != zero) return solve_quadratic(m.c, m.d - m.a, -m.b);

    ComponentSolution sol;
    if (m.a != m.d) {
        sol.roots.push_back({ExtendedComplex::infinity(), 1});
        const ExtendedComplex fix = guarded(m.b / (m.d - m.a));
        if (fix.is_infinity())
            sol.roots.back().multiplicity = 2;  // finite root overflowed into inf
        else
            sol.roots.push_back({fix, 1});
        return sol;
    }
    if (m.b != zero) {
        sol.roots.push_back({ExtendedComplex::infinity(), 2});  // parabolic translation
        return sol;
    }
    sol.all_points = true;
    return sol;
}

FixedPointSet fixed_points(const MobiusTransform& s) {
    FixedPointSet set;
    set.sol1 = solve_component(s.component1());
    set.sol2 = solve_component(s.component2());
    set.is_identity = set.sol1.all_points && set.sol2.all_points;
    if (set.sol1.all_points || set.sol2.all_points) return set;

    // A component's infinite root stands for the strong infinity of the
    // whole map (the affine cases fix no weak infinity in the enumerated
    // sense), so roots pair only within the same finiteness tag.  With c
    // invertible every root is finite and this is the full product.
    for (const ComponentRoot& r1 : set.sol1.roots)
        for (const ComponentRoot& r2 : set.sol2.roots) {
            if (r1.point.is_infinity() != r2.point.is_infinity()) continue;
            set.enumerated.push_back(
                {ExtendedBicomplex(r1.point, r2.point), r1.multiplicity * r2.multiplicity});
        }
    return set;
}

namespace {

bool component_fixed(const ExtendedComplex& image, const ExtendedComplex& w, double tol) {
    if (image.is_infinity() || w.is_infinity())
        return image.is_infinity() && w.is_infinity();
    const double scale = std::max(std::abs(image.value()), std::abs(w.value()));
    return std::abs(image.value() - w.value()) <= tol * std::max(1.0, scale);
}

}  // namespace

bool verify_fixed_point(const MobiusTransform& s, const ExtendedBicomplex& w, double tol) {
    const ExtendedBicomplex image = eval(s, w);
    return component_fixed(image.p1(), w.p1(), tol) && component_fixed(image.p2(), w.p2(), tol);
}

}  // namespace bimo
