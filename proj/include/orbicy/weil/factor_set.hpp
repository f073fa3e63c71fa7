#pragma once

#include <cstdint>
#include <map>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "orbicy/algebra/param_poly.hpp"
#include "orbicy/algebra/rational.hpp"
#include "orbicy/weil/registry.hpp"

namespace orbicy {

// q^{q_exp} * prod s^e over registry symbols, kept in canonical form: symbols sorted by
// registry id, root-of-unity exponents reduced mod their order, and s * conj(s) folded
// into q^{weight}.
class WeilMonomial {
   public:
    using Syms = std::vector<std::pair<std::uint32_t, int>>;

    WeilMonomial() = default;
    explicit WeilMonomial(Rational q_exp, Syms syms = {}) : q_exp_(std::move(q_exp)), syms_(std::move(syms)) {
        normalize();
    }
    static WeilMonomial named(Rational q_exp, const std::map<std::string, int>& syms) {
        Syms s;
        for (auto& [n, e] : syms) s.emplace_back(WeilRegistry::instance().id(n), e);
        return WeilMonomial(std::move(q_exp), std::move(s));
    }

    const Rational& q_exp() const { return q_exp_; }
    const Syms& syms() const { return syms_; }
    bool is_rational_power() const { return syms_.empty(); }

    int exponent(std::uint32_t id) const {
        for (auto& [s, e] : syms_)
            if (s == id) return e;
        return 0;
    }

    Rational weight() const {
        Rational w = 2 * q_exp_;
        for (auto& [s, e] : syms_) w += WeilRegistry::instance().at(s).weight * e;
        return w;
    }

    WeilMonomial conj() const {
        auto& reg = WeilRegistry::instance();
        Syms out;
        for (auto& [s, e] : syms_) {
            const WeilSymbol& sym = reg.at(s);
            if (sym.self_conjugate())
                out.emplace_back(s, sym.order ? -e : e);
            else
                out.emplace_back(reg.conjugate(s), e);
        }
        return WeilMonomial(q_exp_, std::move(out));
    }

    WeilMonomial scaled(const Rational& e) const { return WeilMonomial(q_exp_ + e, syms_); }

    friend WeilMonomial operator*(const WeilMonomial& a, const WeilMonomial& b) {
        Syms s = a.syms_;
        s.insert(s.end(), b.syms_.begin(), b.syms_.end());
        return WeilMonomial(a.q_exp_ + b.q_exp_, std::move(s));
    }

    friend bool operator==(const WeilMonomial& a, const WeilMonomial& b) {
        return a.q_exp_ == b.q_exp_ && a.syms_ == b.syms_;
    }
    friend bool operator<(const WeilMonomial& a, const WeilMonomial& b) {
        if (a.q_exp_ != b.q_exp_) return a.q_exp_ < b.q_exp_;
        return a.syms_ < b.syms_;
    }

    // The eigenvalue as a polynomial once every symbol is assigned a value; q stays the
    // parameter symbol "q". Root-of-unity and pair relations must hold in the assignment
    // for the result to be meaningful.
    ParamPoly to_param_poly(const std::map<std::string, ParamPoly>& values) const {
        if (!is_integer(q_exp_) || q_exp_ < 0) throw PreconditionViolated("eigenvalue has a non-integral power of q");
        ParamPoly out = ParamPoly::symbol("q").pow(static_cast<unsigned>(to_int64(num(q_exp_))));
        for (auto& [s, e] : syms_) {
            const std::string& n = WeilRegistry::instance().at(s).name;
            auto it = values.find(n);
            if (it == values.end()) throw MissingSymbol(n);
            out *= it->second.pow(static_cast<unsigned>(e));
        }
        return out;
    }

    std::string key() const {
        std::string out = "q^" + to_string(q_exp_);
        for (auto& [s, e] : syms_) out += " " + WeilRegistry::instance().at(s).name + "^" + std::to_string(e);
        return out;
    }

   private:
    void normalize() {
        auto& reg = WeilRegistry::instance();
        std::map<std::uint32_t, long long> acc;
        for (auto& [s, e] : syms_) acc[s] += e;
        for (auto& [s, e] : acc) {
            const WeilSymbol& sym = reg.at(s);
            if (sym.order) e = ((e % *sym.order) + *sym.order) % *sym.order;
        }
        for (auto& [s, e] : acc) {
            const WeilSymbol& sym = reg.at(s);
            if (sym.self_conjugate() || e <= 0) continue;
            auto c = reg.conjugate(s);
            auto it = acc.find(c);
            if (it == acc.end() || it->second <= 0) continue;
            long long k = std::min(e, it->second);
            e -= k;
            it->second -= k;
            q_exp_ += Rational(sym.weight) * k;
        }
        syms_.clear();
        for (auto& [s, e] : acc) {
            if (e < 0) throw PreconditionViolated("negative exponent on Weil symbol " + reg.at(s).name);
            if (e != 0) syms_.emplace_back(s, static_cast<int>(e));
        }
    }

    Rational q_exp_ = 0;
    Syms syms_;
};

// prod over eigenvalues lambda of (1 - lambda T)^{mult(lambda)}; positive multiplicity is
// a numerator factor. denom is the common denominator D of all q exponents.
class ZetaFactorSet {
   public:
    using Mults = std::map<WeilMonomial, long long>;

    ZetaFactorSet() = default;

    static ZetaFactorSet factor(const WeilMonomial& m, long long mult) {
        ZetaFactorSet f;
        f.add(m, mult);
        return f;
    }
    // (1 - q^e T)^mult
    static ZetaFactorSet q_power(const Rational& e, long long mult) { return factor(WeilMonomial(e), mult); }

    std::int64_t denom() const { return denom_; }
    void set_denom(std::int64_t d) {
        for (auto& [m, _] : mults_)
            if (d % to_int64(den(m.q_exp())) != 0)
                throw PreconditionViolated("denominator " + std::to_string(d) + " does not cover q^" +
                                           to_string(m.q_exp()));
        denom_ = d;
    }
    const Mults& mults() const { return mults_; }
    bool is_one() const { return mults_.empty(); }

    long long mult(const WeilMonomial& m) const {
        auto it = mults_.find(m);
        return it == mults_.end() ? 0 : it->second;
    }

    void add(const WeilMonomial& m, long long k) {
        if (k == 0) return;
        denom_ = std::lcm(denom_, to_int64(den(m.q_exp())));
        auto& v = mults_[m];
        v += k;
        if (v == 0) mults_.erase(m);
    }

    long long signed_degree() const {
        long long s = 0;
        for (auto& [_, k] : mults_) s += k;
        return s;
    }

    // Alternating sum of Betti numbers: numerator factors come from odd degrees.
    long long euler_characteristic() const { return -signed_degree(); }

    ZetaFactorSet conj() const {
        ZetaFactorSet out;
        out.denom_ = denom_;
        for (auto& [m, k] : mults_) out.add(m.conj(), k);
        return out;
    }

    bool is_conjugation_closed() const {
        for (auto& [m, k] : mults_)
            if (mult(m.conj()) != k) return false;
        return true;
    }

    friend bool operator==(const ZetaFactorSet& a, const ZetaFactorSet& b) { return a.mults_ == b.mults_; }

    // Multiplication of rational functions: multiplicities add.
    friend ZetaFactorSet operator*(ZetaFactorSet a, const ZetaFactorSet& b) {
        a.denom_ = std::lcm(a.denom_, b.denom_);
        for (auto& [m, k] : b.mults_) a.add(m, k);
        return a;
    }
    ZetaFactorSet& operator*=(const ZetaFactorSet& b) { return *this = *this * b; }

   private:
    std::int64_t denom_ = 1;
    Mults mults_;
};

// m(lambda mu) += m(lambda) m(mu); the sign rule reproduces a/b (x) c/d = (ac)(bd)/((ad)(bc)).
inline ZetaFactorSet zf_tensor(const ZetaFactorSet& f, const ZetaFactorSet& g) {
    ZetaFactorSet out;
    for (auto& [a, ka] : f.mults())
        for (auto& [b, kb] : g.mults()) out.add(a * b, ka * kb);
    out.set_denom(std::lcm(f.denom(), g.denom()));
    return out;
}

// Substitutes q^e T for T: every eigenvalue picks up q^e.
inline ZetaFactorSet zf_scale(const ZetaFactorSet& f, const Rational& e) {
    if (e < 0) throw PreconditionViolated("twist exponent must be non-negative");
    ZetaFactorSet out;
    for (auto& [m, k] : f.mults()) out.add(m.scaled(e), k);
    out.set_denom(std::lcm(f.denom(), to_int64(den(e))));
    return out;
}

inline ZetaFactorSet zf_pow(const ZetaFactorSet& f, long long s) {
    ZetaFactorSet out;
    for (auto& [m, k] : f.mults()) out.add(m, k * s);
    out.set_denom(f.denom());
    return out;
}

// Keeps the factors whose explicit power of q is integral.
inline ZetaFactorSet zf_integral_filter(const ZetaFactorSet& f) {
    ZetaFactorSet out;
    for (auto& [m, k] : f.mults())
        if (is_integer(m.q_exp())) out.add(m, k);
    return out;
}

// Expands prod (1 - lambda T)^{mult} into (numerator, denominator) coefficient lists in T.
inline std::pair<std::vector<ParamPoly>, std::vector<ParamPoly>> zf_expand(
    const ZetaFactorSet& f, const std::map<std::string, ParamPoly>& values) {
    std::vector<ParamPoly> num{ParamPoly(1)}, den{ParamPoly(1)};
    auto mul_linear = [](std::vector<ParamPoly>& p, const ParamPoly& lambda) {
        std::vector<ParamPoly> out(p.size() + 1);
        for (std::size_t i = 0; i < p.size(); ++i) {
            out[i] += p[i];
            out[i + 1] -= lambda * p[i];
        }
        p = std::move(out);
    };
    for (auto& [m, k] : f.mults()) {
        ParamPoly lambda = m.to_param_poly(values);
        auto& target = k > 0 ? num : den;
        for (long long i = 0; i < (k > 0 ? k : -k); ++i) mul_linear(target, lambda);
    }
    return {num, den};
}

}  // namespace orbicy
