#pragma once

#include <optional>
#include <string>
#include <vector>

#include "orbicy/algebra/param_poly.hpp"
#include "orbicy/algebra/rational.hpp"

namespace orbicy {

namespace detail {

inline Rational coeff_div(const Rational& a, const Rational& b) {
    if (b == 0) throw DivisionByZero();
    return a / b;
}

inline ParamPoly coeff_div(const ParamPoly& a, const ParamPoly& b) {
    if (b.is_zero()) throw DivisionByZero();
    if (!b.is_constant()) throw PreconditionViolated("division by a non-constant parameter polynomial");
    return a / b.constant_term();
}

inline bool coeff_is_zero(const Rational& a) { return a == 0; }
inline bool coeff_is_zero(const ParamPoly& a) { return a.is_zero(); }

inline std::string coeff_string(const Rational& a) { return to_string(a); }
inline std::string coeff_string(const ParamPoly& a) { return a.to_string(); }

}  // namespace detail

// Element c0 + c1*z of Q(z), z a primitive d-th root of unity, d in {2,3,4,6}.
// Every such z satisfies z^2 = t*z - 1 with t = z + conj(z) in {-1, 0, 1};
// for d = 2 the field is Q itself and c1 is kept at zero.
template <class Coeff>
class Cyclotomic {
   public:
    explicit Cyclotomic(int d = 6) : d_(check_order(d)), c0_(0), c1_(0) {}
    Cyclotomic(int d, Coeff c0, Coeff c1 = Coeff(0)) : d_(check_order(d)), c0_(std::move(c0)), c1_(std::move(c1)) {
        normalize();
    }

    static Cyclotomic zeta(int d) { return Cyclotomic(d, Coeff(0), Coeff(1)); }

    // z^k for any integer k.
    static Cyclotomic zeta_pow(int d, long long k) {
        long long e = ((k % d) + d) % d;
        Cyclotomic z = zeta(d), out(d, Coeff(1));
        for (long long i = 0; i < e; ++i) out = out * z;
        return out;
    }

    int order() const { return d_; }
    int phi() const { return d_ == 2 ? 1 : 2; }
    const Coeff& c0() const { return c0_; }
    const Coeff& c1() const { return c1_; }

    std::vector<Coeff> coords() const {
        if (d_ == 2) return {c0_};
        return {c0_, c1_};
    }

    bool is_zero() const { return detail::coeff_is_zero(c0_) && detail::coeff_is_zero(c1_); }
    bool is_rational() const { return detail::coeff_is_zero(c1_); }

    Cyclotomic conj() const {
        // conj(z) = t - z
        return Cyclotomic(d_, c0_ + c1_ * Coeff(trace()), -c1_);
    }

    Coeff norm() const { return c0_ * c0_ + Coeff(trace()) * c0_ * c1_ + c1_ * c1_; }

    Cyclotomic inverse() const {
        if (is_zero()) throw DivisionByZero();
        Coeff n = norm();
        Cyclotomic c = conj();
        return Cyclotomic(d_, detail::coeff_div(c.c0_, n), detail::coeff_div(c.c1_, n));
    }

    friend Cyclotomic operator+(const Cyclotomic& a, const Cyclotomic& b) {
        same_order(a, b);
        return Cyclotomic(a.d_, a.c0_ + b.c0_, a.c1_ + b.c1_);
    }
    friend Cyclotomic operator-(const Cyclotomic& a, const Cyclotomic& b) {
        same_order(a, b);
        return Cyclotomic(a.d_, a.c0_ - b.c0_, a.c1_ - b.c1_);
    }
    friend Cyclotomic operator-(const Cyclotomic& a) { return Cyclotomic(a.d_, -a.c0_, -a.c1_); }
    friend Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b) {
        same_order(a, b);
        // (a0 + a1 z)(b0 + b1 z) with z^2 = t z - 1
        Coeff sq = a.c1_ * b.c1_;
        return Cyclotomic(a.d_, a.c0_ * b.c0_ - sq, a.c0_ * b.c1_ + a.c1_ * b.c0_ + Coeff(a.trace()) * sq);
    }
    friend Cyclotomic operator/(const Cyclotomic& a, const Cyclotomic& b) { return a * b.inverse(); }
    friend Cyclotomic operator*(const Coeff& s, const Cyclotomic& a) { return Cyclotomic(a.d_, s * a.c0_, s * a.c1_); }

    friend bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
        return a.d_ == b.d_ && a.c0_ == b.c0_ && a.c1_ == b.c1_;
    }

    std::string to_string() const {
        std::string z = "zeta" + std::to_string(d_);
        if (detail::coeff_is_zero(c1_)) return detail::coeff_string(c0_);
        std::string c1 = detail::coeff_string(c1_);
        std::string lin = c1 == "1" ? z : c1 == "-1" ? "-" + z : "(" + c1 + ")*" + z;
        if (detail::coeff_is_zero(c0_)) return lin;
        return detail::coeff_string(c0_) + " + " + lin;
    }

   private:
    static int check_order(int d) {
        if (d != 2 && d != 3 && d != 4 && d != 6)
            throw OutOfRange("cyclotomic order must be 2, 3, 4 or 6, got " + std::to_string(d));
        return d;
    }

    static void same_order(const Cyclotomic& a, const Cyclotomic& b) {
        if (a.d_ != b.d_) throw PreconditionViolated("mixed cyclotomic orders");
    }

    int trace() const {
        switch (d_) {
            case 3: return -1;
            case 4: return 0;
            case 6: return 1;
            default: return -2;
        }
    }

    void normalize() {
        if (d_ == 2) {
            c0_ = c0_ - c1_;
            c1_ = Coeff(0);
        }
    }

    int d_;
    Coeff c0_;
    Coeff c1_;
};

using CyclotomicNumber = Cyclotomic<Rational>;
using CyclotomicPoly = Cyclotomic<ParamPoly>;

}  // namespace orbicy
