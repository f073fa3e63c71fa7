#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "orbicy/algebra/param_poly.hpp"

namespace orbicy {

// Sum of c * X^(x/D) * Y^(y/D) with a single shared denominator D.
class PuiseuxPoly {
   public:
    using Exponent = std::pair<std::uint32_t, std::uint32_t>;
    using Terms = std::map<Exponent, ParamPoly>;

    PuiseuxPoly() = default;
    PuiseuxPoly(int c) : PuiseuxPoly(ParamPoly(c)) {}
    PuiseuxPoly(const ParamPoly& c) {
        if (!c.is_zero()) terms_.emplace(Exponent{0, 0}, c);
    }

    static PuiseuxPoly term(const ParamPoly& c, std::uint32_t x, std::uint32_t y, std::uint32_t denom = 1) {
        if (denom == 0) throw DivisionByZero();
        PuiseuxPoly p;
        p.denom_ = denom;
        if (!c.is_zero()) p.terms_.emplace(Exponent{x, y}, c);
        return p;
    }
    static PuiseuxPoly X(std::uint32_t e = 1) { return term(ParamPoly(1), e, 0); }
    static PuiseuxPoly Y(std::uint32_t e = 1) { return term(ParamPoly(1), 0, e); }
    // (XY)^(m/d)
    static PuiseuxPoly xy(std::uint32_t m, std::uint32_t d = 1) { return term(ParamPoly(1), m, m, d); }

    std::uint32_t denom() const { return denom_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    bool is_integral() const {
        for (auto& [e, c] : terms_)
            if (e.first % denom_ || e.second % denom_) return false;
        return true;
    }

    // Same value over denominator D, which must be a multiple of denom().
    PuiseuxPoly rescaled(std::uint32_t D) const {
        if (D % denom_) throw PreconditionViolated("denominator " + std::to_string(D) +
                                                   " is not a multiple of " + std::to_string(denom_));
        std::uint32_t f = D / denom_;
        PuiseuxPoly out;
        out.denom_ = D;
        for (auto& [e, c] : terms_) out.terms_.emplace(Exponent{e.first * f, e.second * f}, c);
        return out;
    }

    // Smallest denominator representing the same value.
    PuiseuxPoly reduced() const {
        std::uint32_t g = denom_;
        for (auto& [e, c] : terms_) g = std::gcd(g, std::gcd(e.first, e.second));
        PuiseuxPoly out;
        out.denom_ = denom_ / g;
        for (auto& [e, c] : terms_) out.terms_.emplace(Exponent{e.first / g, e.second / g}, c);
        return out;
    }

    PuiseuxPoly& operator+=(const PuiseuxPoly& o) {
        std::uint32_t D = std::lcm(denom_, o.denom_);
        if (D != denom_) *this = rescaled(D);
        if (D == o.denom_) {
            for (auto& [e, c] : o.terms_) add_term(e, c);
        } else {
            for (auto& [e, c] : o.rescaled(D).terms_) add_term(e, c);
        }
        return *this;
    }
    PuiseuxPoly& operator-=(const PuiseuxPoly& o) { return *this += -o; }
    PuiseuxPoly& operator*=(const PuiseuxPoly& o) { return *this = *this * o; }

    friend PuiseuxPoly operator+(PuiseuxPoly a, const PuiseuxPoly& b) { return a += b; }
    friend PuiseuxPoly operator-(PuiseuxPoly a, const PuiseuxPoly& b) { return a -= b; }
    friend PuiseuxPoly operator-(PuiseuxPoly a) {
        for (auto& [e, c] : a.terms_) c = -c;
        return a;
    }
    friend PuiseuxPoly operator*(const PuiseuxPoly& a, const PuiseuxPoly& b) {
        std::uint32_t D = std::lcm(a.denom_, b.denom_);
        PuiseuxPoly lhs = a.rescaled(D), rhs = b.rescaled(D), out;
        out.denom_ = D;
        for (auto& [ea, ca] : lhs.terms_)
            for (auto& [eb, cb] : rhs.terms_)
                out.add_term(Exponent{ea.first + eb.first, ea.second + eb.second}, ca * cb);
        return out;
    }

    // Equal as values, regardless of the stored denominators.
    friend bool operator==(const PuiseuxPoly& a, const PuiseuxPoly& b) {
        std::uint32_t D = std::lcm(a.denom_, b.denom_);
        return a.rescaled(D).terms_ == b.rescaled(D).terms_;
    }

    PuiseuxPoly pow(unsigned n) const {
        PuiseuxPoly result(1), base = *this;
        result.denom_ = denom_;
        while (n) {
            if (n & 1) result *= base;
            n >>= 1;
            if (n) base *= base;
        }
        return result;
    }

    // Keeps the terms whose exponents are both integers; the result has D = 1.
    PuiseuxPoly integral_part() const {
        PuiseuxPoly out;
        for (auto& [e, c] : terms_)
            if (e.first % denom_ == 0 && e.second % denom_ == 0)
                out.terms_.emplace(Exponent{e.first / denom_, e.second / denom_}, c);
        return out;
    }

    ParamPoly coefficient(std::uint32_t p, std::uint32_t q) const {
        auto it = terms_.find(Exponent{p * denom_, q * denom_});
        return it == terms_.end() ? ParamPoly() : it->second;
    }

    // X <-> Y
    PuiseuxPoly swapped() const {
        PuiseuxPoly out;
        out.denom_ = denom_;
        for (auto& [e, c] : terms_) out.terms_.emplace(Exponent{e.second, e.first}, c);
        return out;
    }

    PuiseuxPoly map_coefficients(const std::function<ParamPoly(const ParamPoly&)>& f) const {
        PuiseuxPoly out;
        out.denom_ = denom_;
        for (auto& [e, c] : terms_) out.add_term(e, f(c));
        return out;
    }

    std::string to_string() const {
        if (terms_.empty()) return "0";
        auto exponent = [&](const char* var, std::uint32_t n) -> std::string {
            if (n == 0) return "";
            Rational q = make_rational(n, denom_);
            if (q == 1) return var;
            if (is_integer(q)) return std::string(var) + "^" + orbicy::to_string(q);
            return std::string(var) + "^(" + orbicy::to_string(q) + ")";
        };
        std::string out;
        bool first = true;
        for (auto& [e, c] : ordered()) {
            std::string mono = exponent("X", e.first);
            std::string y = exponent("Y", e.second);
            if (!mono.empty() && !y.empty()) mono += "*";
            mono += y;
            std::string coeff = c.to_string();
            bool compound = c.terms().size() > 1;
            if (!first) out += " + ";
            first = false;
            if (mono.empty())
                out += compound ? "(" + coeff + ")" : coeff;
            else if (coeff == "1")
                out += mono;
            else
                out += (compound ? "(" + coeff + ")" : coeff) + "*" + mono;
        }
        return out;
    }

   private:
    std::vector<std::pair<Exponent, ParamPoly>> ordered() const {
        std::vector<std::pair<Exponent, ParamPoly>> v(terms_.begin(), terms_.end());
        std::stable_sort(v.begin(), v.end(), [](auto& a, auto& b) {
            auto da = a.first.first + a.first.second, db = b.first.first + b.first.second;
            if (da != db) return da < db;
            return a.first.first > b.first.first;
        });
        return v;
    }

    void add_term(const Exponent& e, const ParamPoly& c) {
        if (c.is_zero()) return;
        auto [it, inserted] = terms_.emplace(e, c);
        if (inserted) return;
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }

    std::uint32_t denom_ = 1;
    Terms terms_;
};

}  // namespace orbicy
