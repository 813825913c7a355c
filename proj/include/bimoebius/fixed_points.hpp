#pragma once

#include <vector>

#include "bimoebius/mobius.hpp"

namespace bimo {

struct ComponentRoot {
    ExtendedComplex point;
    int multiplicity = 1;  // 2 for a merged double root
};

// Fixed points of one component map: either every point (the component is
// the identity) or one or two deduplicated roots.
struct ComponentSolution {
    bool all_points = false;
    std::vector<ComponentRoot> roots;
};

struct FixedPoint {
    ExtendedBicomplex point;
    int multiplicity = 1;
};

// Product structure of the per-component solutions.  `enumerated` pairs
// roots of equal finiteness: with c invertible all roots are finite and
// this is the full cartesian product (1, 2 or 4 points); in the affine
// cases the infinite roots merge into the strong infinity.  A mix of an
// identity component with a non-identity one is an infinite family and
// stays unenumerated.
struct FixedPointSet {
    ComponentSolution sol1;
    ComponentSolution sol2;
    std::vector<FixedPoint> enumerated;
    bool is_identity = false;
};

// Roots of the component fixed-point equation c w^2 + (d - a) w - b = 0,
// with the affine branches: c = 0, a != d gives {inf, b/(d - a)}; c = 0,
// a = d, b != 0 gives the parabolic {inf}; c = 0, a = d, b = 0 is the
// identity component.
ComponentSolution solve_component(const ComponentMobius& m);

FixedPointSet fixed_points(const MobiusTransform& s);

// S(w) = w with mixed relative/absolute tolerance on finite components and
// exact tags on infinite ones.
bool verify_fixed_point(const MobiusTransform& s, const ExtendedBicomplex& w, double tol);

}  // namespace bimo
