#include "bimoebius/mobius.hpp"

#include <algorithm>
#include <array>
#include <cmath>

namespace bimo {

namespace {

bool proper_zero_divisor(const Bicomplex& w) {
    const bool z1 = w.p1() == Complex(0.0, 0.0);
    const bool z2 = w.p2() == Complex(0.0, 0.0);
    return z1 != z2;
}

}  // namespace

MobiusTransform MobiusTransform::make(const Bicomplex& a, const Bicomplex& b,
                                      const Bicomplex& c, const Bicomplex& d, double eps,
                                      bool strict) {
    if (strict) {
        for (const Bicomplex* w : {&a, &b, &c, &d}) {
            if (proper_zero_divisor(*w))
                throw DegenerateDeterminant("strict mode: coefficient is a zero divisor");
        }
    }
    if (is_singular(a * d - b * c, eps))
        throw DegenerateDeterminant("ad - bc lies in the null cone");
    return MobiusTransform(Unchecked{}, a, b, c, d);
}

ExtendedComplex eval_component(const ComponentMobius& m, const ExtendedComplex& w) {
    const Complex zero(0.0, 0.0);
    if (w.is_infinity()) {
        if (m.c == zero) return ExtendedComplex::infinity();
        return ExtendedComplex(m.a / m.c);
    }
    const Complex z = w.value();
    const Complex den = m.c * z + m.d;
    if (den == zero) return ExtendedComplex::infinity();
    const Complex r = (m.a * z + m.b) / den;
    if (!detail::finite(r)) return ExtendedComplex::infinity();  // denominator underflow
    return ExtendedComplex(r);
}

ExtendedBicomplex eval(const MobiusTransform& s, const ExtendedBicomplex& w) {
    return {eval_component(s.component1(), w.p1()), eval_component(s.component2(), w.p2())};
}

MobiusTransform compose(const MobiusTransform& s1, const MobiusTransform& s2) {
    return MobiusTransform(MobiusTransform::Unchecked{},
                           s1.a_ * s2.a_ + s1.b_ * s2.c_, s1.a_ * s2.b_ + s1.b_ * s2.d_,
                           s1.c_ * s2.a_ + s1.d_ * s2.c_, s1.c_ * s2.b_ + s1.d_ * s2.d_);
}

MobiusTransform invert_transform(const MobiusTransform& s) {
    return MobiusTransform(MobiusTransform::Unchecked{}, s.d_, -s.b_, -s.c_, s.a_);
}

namespace {

// Proportionality of two complex quadruples via the six 2x2 cross
// differences, scaled by the largest coefficient magnitudes.
bool component_proportional(const std::array<Complex, 4>& u, const std::array<Complex, 4>& v,
                            double tol) {
    double mu = 0.0, mv = 0.0;
    for (int k = 0; k < 4; ++k) {
        mu = std::max(mu, std::abs(u[k]));
        mv = std::max(mv, std::abs(v[k]));
    }
    const double scale = std::max(mu * mv, 1e-300);
    for (int k = 0; k < 4; ++k)
        for (int l = k + 1; l < 4; ++l)
            if (std::abs(u[k] * v[l] - u[l] * v[k]) > tol * scale) return false;
    return true;
}

std::array<Complex, 4> quad(const ComponentMobius& m) { return {m.a, m.b, m.c, m.d}; }

}  // namespace

bool projectively_equal(const MobiusTransform& s1, const MobiusTransform& s2, double tol) {
    return component_proportional(quad(s1.component1()), quad(s2.component1()), tol) &&
           component_proportional(quad(s1.component2()), quad(s2.component2()), tol);
}

GeneratorDecomposition decompose_generators(const MobiusTransform& s) {
    const Bicomplex zero(0.0);
    if (s.c() == zero) {
        // Affine: (aw + b)/d with a, d invertible because det = ad.
        const Bicomplex inv_d = invert(s.d(), 0.0);
        GeneratorDecomposition out;
        out.affine = true;
        out.generators.push_back(MobiusTransform::dilation(s.a() * inv_d));
        out.generators.push_back(MobiusTransform::translation(s.b() * inv_d));
        return out;
    }
    if (is_singular(s.c(), 0.0))
        throw CNotInvertible("c has a zero idempotent component; d/c is undefined");

    const Bicomplex inv_c = invert(s.c(), 0.0);
    const Bicomplex ratio = (s.b() * s.c() - s.a() * s.d()) * inv_c * inv_c;
    GeneratorDecomposition out;
    out.generators.push_back(MobiusTransform::translation(s.d() * inv_c));
    out.generators.push_back(MobiusTransform::inversion());
    out.generators.push_back(MobiusTransform::dilation(ratio));
    out.generators.push_back(MobiusTransform::translation(s.a() * inv_c));
    return out;
}

namespace {

bool component_settled(const ExtendedComplex& prev, const ExtendedComplex& next, double tol) {
    if (prev.is_infinity() || next.is_infinity())
        return prev.is_infinity() && next.is_infinity();
    return std::abs(next.value() - prev.value()) < tol;
}

}  // namespace

OrbitTrace orbit(const MobiusTransform& s, const ExtendedBicomplex& w0, int max_steps,
                 double tol) {
    OrbitTrace trace;
    trace.points.push_back(w0);
    for (int k = 0; k < max_steps; ++k) {
        const ExtendedBicomplex next = eval(s, trace.points.back());
        const ExtendedBicomplex& prev = trace.points.back();
        const bool settled = component_settled(prev.p1(), next.p1(), tol) &&
                             component_settled(prev.p2(), next.p2(), tol);
        trace.points.push_back(next);
        if (settled) {
            trace.converged = true;
            break;
        }
    }
    return trace;
}

}  // namespace bimo
