#pragma once

#include <vector>

#include "bimoebius/extended.hpp"

namespace bimo {

// One idempotent component of a transform: a complex Moebius map with
// nonzero determinant.
struct ComponentMobius {
    Complex a, b, c, d;
};

// w -> (aw + b)/(cw + d) on the extended bicomplex plane, acting as a pair
// of complex Moebius maps on the idempotent components.  Coefficients are
// stored unnormalized; equality of transforms is always projective.
class MobiusTransform {
  public:
    // Validates det = ad - bc against the null cone at tolerance eps.
    // Strict mode additionally rejects coefficients that are proper zero
    // divisors (exactly one idempotent component zero); plain zeros stay
    // legal since the affine cases need c = 0.
    static MobiusTransform make(const Bicomplex& a, const Bicomplex& b, const Bicomplex& c,
                                const Bicomplex& d, double eps = kSingularEps,
                                bool strict = false);

    static MobiusTransform identity() { return make(1.0, 0.0, 0.0, 1.0); }
    static MobiusTransform inversion() { return make(0.0, 1.0, 1.0, 0.0); }
    static MobiusTransform translation(const Bicomplex& by) { return make(1.0, by, 0.0, 1.0); }
    static MobiusTransform dilation(const Bicomplex& factor) {
        return make(factor, 0.0, 0.0, 1.0);
    }

    const Bicomplex& a() const { return a_; }
    const Bicomplex& b() const { return b_; }
    const Bicomplex& c() const { return c_; }
    const Bicomplex& d() const { return d_; }

    Bicomplex det() const { return a_ * d_ - b_ * c_; }

    ComponentMobius component1() const { return {a_.p1(), b_.p1(), c_.p1(), d_.p1()}; }
    ComponentMobius component2() const { return {a_.p2(), b_.p2(), c_.p2(), d_.p2()}; }

  private:
    struct Unchecked {};
    MobiusTransform(Unchecked, const Bicomplex& a, const Bicomplex& b, const Bicomplex& c,
                    const Bicomplex& d)
        : a_(a), b_(b), c_(c), d_(d) {}

    friend MobiusTransform compose(const MobiusTransform&, const MobiusTransform&);
    friend MobiusTransform invert_transform(const MobiusTransform&);

    Bicomplex a_, b_, c_, d_;
};

// Evaluation of one component map on the compactified component plane,
// honoring S(inf) = a/c and S(-d/c) = inf.
ExtendedComplex eval_component(const ComponentMobius& m, const ExtendedComplex& w);

ExtendedBicomplex eval(const MobiusTransform& s, const ExtendedBicomplex& w);
inline ExtendedBicomplex eval(const MobiusTransform& s, const Bicomplex& w) {
    return eval(s, ExtendedBicomplex(w));
}

// Coefficient-matrix product; det multiplies, so closure needs no recheck.
MobiusTransform compose(const MobiusTransform& s1, const MobiusTransform& s2);

// (d, -b, -c, a): the group inverse up to a scalar.
MobiusTransform invert_transform(const MobiusTransform& s);

// True when the coefficient quadruples are component-wise proportional.
bool projectively_equal(const MobiusTransform& s1, const MobiusTransform& s2,
                        double tol = 1e-9);

// Translation/inversion/dilation factorization, in application order.
// For invertible c the four generators are w + d/c, 1/w, ((bc - ad)/c^2) * w,
// w + a/c.  For c = 0 exactly the transform is affine and the two-generator
// path (a/d) * w, w + b/d is returned with `affine` set.  A c with exactly
// one zero component admits neither path.
struct GeneratorDecomposition {
    std::vector<MobiusTransform> generators;
    bool affine = false;
};

GeneratorDecomposition decompose_generators(const MobiusTransform& s);

// trace[0] = w0, trace[k+1] = S(trace[k]); stops early once both components
// move by less than tol (an infinite component counts as unchanged only when
// its tag repeats).
struct OrbitTrace {
    std::vector<ExtendedBicomplex> points;
    bool converged = false;

    int steps() const { return static_cast<int>(points.size()) - 1; }
};

OrbitTrace orbit(const MobiusTransform& s, const ExtendedBicomplex& w0, int max_steps,
                 double tol);

}  // namespace bimo
