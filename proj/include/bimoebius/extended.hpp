#pragma once

#include <cstdlib>

#include "bimoebius/bicomplex.hpp"

// The extended bicomplex plane: each idempotent component lives on its own
// one-point compactification of C(i1).  Elements with at least one infinite
// component form the infinity set; no general arithmetic is defined between
// extended elements, only inversion and Moebius evaluation consume them.

namespace bimo {

class ExtendedComplex {
  public:
    ExtendedComplex() = default;
    ExtendedComplex(Complex value) : value_(detail::canon(value)) {
        if (!detail::finite(value_))
            throw NonFiniteValue("finite extended-complex payload must be finite");
    }
    ExtendedComplex(double value) : ExtendedComplex(Complex(value)) {}

    static ExtendedComplex infinity() {
        ExtendedComplex e;
        e.finite_ = false;
        return e;
    }

    bool is_finite() const { return finite_; }
    bool is_infinity() const { return !finite_; }

    // Only meaningful for finite values.
    Complex value() const { return value_; }

    friend bool operator==(const ExtendedComplex& u, const ExtendedComplex& v) {
        if (u.finite_ != v.finite_) return false;
        return !u.finite_ || u.value_ == v.value_;
    }
    friend bool operator!=(const ExtendedComplex& u, const ExtendedComplex& v) {
        return !(u == v);
    }

  private:
    Complex value_{0.0, 0.0};
    bool finite_ = true;
};

class ExtendedBicomplex {
  public:
    ExtendedBicomplex() = default;
    ExtendedBicomplex(ExtendedComplex p1, ExtendedComplex p2) : p1_(p1), p2_(p2) {}
    ExtendedBicomplex(const Bicomplex& w) : p1_(w.p1()), p2_(w.p2()) {}

    static ExtendedBicomplex strong_infinity() {
        return {ExtendedComplex::infinity(), ExtendedComplex::infinity()};
    }

    const ExtendedComplex& p1() const { return p1_; }
    const ExtendedComplex& p2() const { return p2_; }

    bool is_finite() const { return p1_.is_finite() && p2_.is_finite(); }

    // Only meaningful when both components are finite.
    Bicomplex finite_value() const {
        return Bicomplex::from_idempotent(p1_.value(), p2_.value());
    }

    friend bool operator==(const ExtendedBicomplex& u, const ExtendedBicomplex& v) {
        return u.p1_ == v.p1_ && u.p2_ == v.p2_;
    }
    friend bool operator!=(const ExtendedBicomplex& u, const ExtendedBicomplex& v) {
        return !(u == v);
    }

  private:
    ExtendedComplex p1_;
    ExtendedComplex p2_;
};

enum class ElementClass {
    FiniteNonsingular,
    Zero,
    P1Zero,
    P2Zero,
    P1Infinity,
    P2Infinity,
    StrongInfinity,
};

inline const char* to_string(ElementClass c) {
    switch (c) {
        case ElementClass::FiniteNonsingular: return "FiniteNonsingular";
        case ElementClass::Zero: return "Zero";
        case ElementClass::P1Zero: return "P1Zero";
        case ElementClass::P2Zero: return "P2Zero";
        case ElementClass::P1Infinity: return "P1Infinity";
        case ElementClass::P2Infinity: return "P2Infinity";
        case ElementClass::StrongInfinity: return "StrongInfinity";
    }
    std::abort();
}

// Mutually exclusive, exhaustive taxonomy of the extended plane.  Finite
// values use the same scale-aware eps as is_singular; large finite values
// are never promoted to infinity.
inline ElementClass classify(const ExtendedBicomplex& w, double eps = kSingularEps) {
    if (w.p1().is_infinity() && w.p2().is_infinity()) return ElementClass::StrongInfinity;
    if (w.p1().is_infinity()) return ElementClass::P1Infinity;
    if (w.p2().is_infinity()) return ElementClass::P2Infinity;

    const double a1 = std::abs(w.p1().value());
    const double a2 = std::abs(w.p2().value());
    const double thr = eps * std::max(1.0, euclid_norm(w.finite_value()));
    if (a1 <= thr && a2 <= thr) return ElementClass::Zero;
    if (a1 <= thr) return ElementClass::P1Zero;
    if (a2 <= thr) return ElementClass::P2Zero;
    return ElementClass::FiniteNonsingular;
}

namespace detail {

inline ExtendedComplex reciprocal(const ExtendedComplex& p) {
    if (p.is_infinity()) return ExtendedComplex(Complex(0.0, 0.0));
    if (p.value() == Complex(0.0, 0.0)) return ExtendedComplex::infinity();
    const Complex r = 1.0 / p.value();
    if (!finite(r)) return ExtendedComplex::infinity();  // reciprocal of a subnormal
    return ExtendedComplex(r);
}

}  // namespace detail

// Total inversion on the extended plane: 1/0 = inf and 1/inf = 0 per
// component.  Restricted to nonsingular finite values it is the ring inverse;
// it carries the null cone onto the infinity set and back.
inline ExtendedBicomplex extended_invert(const ExtendedBicomplex& w) {
    return {detail::reciprocal(w.p1()), detail::reciprocal(w.p2())};
}

}  // namespace bimo
