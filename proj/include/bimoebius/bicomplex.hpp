#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <cstdlib>
#include <string>

#include "bimoebius/errors.hpp"

// Bicomplex numbers T = {z1 + z2*i2 : z1, z2 in C(i1)} with the unit rules
// i1^2 = i2^2 = -1, j = i1*i2, j^2 = 1.  Values are stored canonically as
// the idempotent pair (P1(w), P2(w)) with P1 = z1 - z2*i1, P2 = z1 + z2*i1,
// so every ring operation is two independent complex operations.

namespace bimo {

using Complex = std::complex<double>;

// Default scale-aware tolerance for null-cone tests (0 means exact).
inline constexpr double kSingularEps = 1e-12;

namespace detail {

// Negative zero would leak into formatted output and hashes; fold it.
inline double canon(double x) { return x == 0.0 ? 0.0 : x; }

inline Complex canon(Complex z) { return {canon(z.real()), canon(z.imag())}; }

inline bool finite(Complex z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

}  // namespace detail

class Bicomplex {
  public:
    Bicomplex() = default;

    // Embeddings of R and of C(i1) (diagonal in the idempotent basis).
    Bicomplex(double x) : p1_(x), p2_(x) { check(); }
    Bicomplex(Complex z) : p1_(detail::canon(z)), p2_(p1_) { check(); }

    static Bicomplex from_idempotent(Complex p1, Complex p2) {
        return Bicomplex(detail::canon(p1), detail::canon(p2));
    }

    // w = z1 + z2*i2
    static Bicomplex from_cartesian(Complex z1, Complex z2) {
        const Complex i(0.0, 1.0);
        return from_idempotent(z1 - z2 * i, z1 + z2 * i);
    }

    // w = x1 + x2*i1 + x3*i2 + x4*j
    static Bicomplex from_reals(double x1, double x2, double x3, double x4) {
        return from_idempotent({x1 + x4, x2 - x3}, {x1 - x4, x2 + x3});
    }

    Complex p1() const { return p1_; }
    Complex p2() const { return p2_; }

    Complex z1() const { return (p1_ + p2_) / 2.0; }
    Complex z2() const { return Complex(0.0, 1.0) * (p1_ - p2_) / 2.0; }

    // Coordinates (x1, x2, x3, x4) in the basis 1, i1, i2, j.
    std::array<double, 4> reals() const {
        const Complex a = z1(), b = z2();
        return {a.real(), a.imag(), b.real(), b.imag()};
    }

    friend bool operator==(const Bicomplex& u, const Bicomplex& v) {
        return u.p1_ == v.p1_ && u.p2_ == v.p2_;
    }
    friend bool operator!=(const Bicomplex& u, const Bicomplex& v) { return !(u == v); }

    friend Bicomplex operator+(const Bicomplex& u, const Bicomplex& v) {
        return from_idempotent(u.p1_ + v.p1_, u.p2_ + v.p2_);
    }
    friend Bicomplex operator-(const Bicomplex& u, const Bicomplex& v) {
        return from_idempotent(u.p1_ - v.p1_, u.p2_ - v.p2_);
    }
    friend Bicomplex operator*(const Bicomplex& u, const Bicomplex& v) {
        return from_idempotent(u.p1_ * v.p1_, u.p2_ * v.p2_);
    }
    friend Bicomplex operator-(const Bicomplex& u) {
        return from_idempotent(-u.p1_, -u.p2_);
    }

  private:
    Bicomplex(Complex p1, Complex p2) : p1_(p1), p2_(p2) { check(); }

    void check() const {
        if (!detail::finite(p1_) || !detail::finite(p2_))
            throw NonFiniteValue("bicomplex coordinates must be finite");
    }

    Complex p1_{0.0, 0.0};
    Complex p2_{0.0, 0.0};
};

inline Bicomplex unit_i1() { return Bicomplex::from_reals(0, 1, 0, 0); }
inline Bicomplex unit_i2() { return Bicomplex::from_reals(0, 0, 1, 0); }
inline Bicomplex unit_j() { return Bicomplex::from_reals(0, 0, 0, 1); }
inline Bicomplex idem_e1() { return Bicomplex::from_idempotent(1.0, 0.0); }
inline Bicomplex idem_e2() { return Bicomplex::from_idempotent(0.0, 1.0); }

// w^(+1) = conj(z1) + conj(z2)*i2, which swaps and conjugates the idempotent pair.
inline Bicomplex conj1(const Bicomplex& w) {
    return Bicomplex::from_idempotent(std::conj(w.p2()), std::conj(w.p1()));
}

// w^(+2) = z1 - z2*i2, a plain swap of the idempotent pair.
inline Bicomplex conj2(const Bicomplex& w) {
    return Bicomplex::from_idempotent(w.p2(), w.p1());
}

// w^(+3) = conj(z1) - conj(z2)*i2 = conj1(conj2(w)), component-wise conjugate.
inline Bicomplex conj3(const Bicomplex& w) {
    return Bicomplex::from_idempotent(std::conj(w.p1()), std::conj(w.p2()));
}

// Complex square norm CN(w) = z1^2 + z2^2 = P1(w)*P2(w) = w*conj2(w).
inline Complex cn(const Bicomplex& w) { return w.p1() * w.p2(); }

inline double euclid_norm(const Bicomplex& w) {
    // hypot keeps coordinates near the double range from overflowing.
    return std::hypot(std::abs(w.z1()), std::abs(w.z2()));
}

// The three square moduli.  |w|^2_{i1} lies in C(i1), |w|^2_{i2} in C(i2)
// (stored as {real, i2 coefficient}) and |w|^2_j in the duplex plane
// (stored as {real, j coefficient}); Re(|w|^2_j) is the squared Euclidean norm.
struct SquareModuli {
    Complex mod_i1_sq;
    std::array<double, 2> mod_i2_sq;
    std::array<double, 2> mod_j_sq;
};

inline SquareModuli square_moduli(const Bicomplex& w) {
    const auto ri2 = (w * conj1(w)).reals();
    const auto rj = (w * conj3(w)).reals();
    return {cn(w), {ri2[0], ri2[2]}, {rj[0], rj[3]}};
}

// Scale-aware null-cone membership: min component modulus against
// eps * max(1, ||w||).  eps = 0 is the exact test CN(w) = 0.
inline bool is_singular(const Bicomplex& w, double eps = kSingularEps) {
    const double lo = std::min(std::abs(w.p1()), std::abs(w.p2()));
    return lo <= eps * std::max(1.0, euclid_norm(w));
}

// Ring inverse w^(-1) = conj2(w)/CN(w), i.e. component reciprocals.
inline Bicomplex invert(const Bicomplex& w, double eps = kSingularEps) {
    if (is_singular(w, eps))
        throw SingularOperand("null-cone element has no ring inverse");
    return Bicomplex::from_idempotent(1.0 / w.p1(), 1.0 / w.p2());
}

enum class Subalgebra { Real, C_i1, C_i2, Duplex, GeneralT };

inline const char* to_string(Subalgebra s) {
    switch (s) {
        case Subalgebra::Real: return "Real";
        case Subalgebra::C_i1: return "C_i1";
        case Subalgebra::C_i2: return "C_i2";
        case Subalgebra::Duplex: return "Duplex";
        case Subalgebra::GeneralT: return "GeneralT";
    }
    std::abort();
}

// Classification of constructed values, so the zero tests are exact.
inline Subalgebra subalgebra_of(const Bicomplex& w) {
    const auto x = w.reals();
    if (x[1] == 0.0 && x[2] == 0.0 && x[3] == 0.0) return Subalgebra::Real;
    if (x[2] == 0.0 && x[3] == 0.0) return Subalgebra::C_i1;
    if (x[1] == 0.0 && x[3] == 0.0) return Subalgebra::C_i2;
    if (x[1] == 0.0 && x[2] == 0.0) return Subalgebra::Duplex;
    return Subalgebra::GeneralT;
}

inline bool approx_equal(Complex u, Complex v, double rel = 1e-12, double abs = 1e-15) {
    return std::abs(u - v) <= std::max(abs, rel * std::max(std::abs(u), std::abs(v)));
}

inline bool approx_equal(const Bicomplex& u, const Bicomplex& v, double rel = 1e-12,
                         double abs = 1e-15) {
    return approx_equal(u.p1(), v.p1(), rel, abs) && approx_equal(u.p2(), v.p2(), rel, abs);
}

}  // namespace bimo
