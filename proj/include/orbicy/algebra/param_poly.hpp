#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "orbicy/algebra/rational.hpp"
#include "orbicy/algebra/symbols.hpp"

namespace orbicy {

// Sparse exponent vector: (symbol id, exponent > 0), sorted by id.
using Monomial = std::vector<std::pair<std::uint32_t, std::uint32_t>>;

inline std::uint32_t degree(const Monomial& m) {
    std::uint32_t d = 0;
    for (auto& [id, e] : m) d += e;
    return d;
}

// Graded order: lower total degree first; within a degree, the monomial with
// the larger exponent on the earliest registered symbol comes first.
struct MonomialOrder {
    bool operator()(const Monomial& a, const Monomial& b) const {
        auto da = degree(a), db = degree(b);
        if (da != db) return da < db;
        std::size_t i = 0, j = 0;
        while (i < a.size() && j < b.size()) {
            if (a[i] == b[j]) {
                ++i, ++j;
                continue;
            }
            if (a[i].first != b[j].first) return a[i].first < b[j].first;
            return a[i].second > b[j].second;
        }
        return i < a.size() && j == b.size();
    }
};

inline Monomial monomial_mul(const Monomial& a, const Monomial& b) {
    Monomial out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && a[i].first < b[j].first))
            out.push_back(a[i++]);
        else if (i == a.size() || b[j].first < a[i].first)
            out.push_back(b[j++]);
        else {
            out.emplace_back(a[i].first, a[i].second + b[j].second);
            ++i, ++j;
        }
    }
    return out;
}

using Env = std::map<std::string, Rational>;

class ParamPoly {
   public:
    using Terms = std::map<Monomial, Rational, MonomialOrder>;

    ParamPoly() = default;
    ParamPoly(int c) : ParamPoly(Rational(c)) {}
    ParamPoly(const Rational& c) {
        if (c != 0) terms_.emplace(Monomial{}, c);
    }

    static ParamPoly symbol(std::string_view name) {
        return from_id(SymbolTable::instance().intern(name));
    }

    static ParamPoly from_id(std::uint32_t id, std::uint32_t exp = 1) {
        ParamPoly p;
        if (exp == 0) return ParamPoly(1);
        p.terms_.emplace(Monomial{{id, exp}}, Rational(1));
        return p;
    }

    static ParamPoly from_monomial(const Monomial& m, const Rational& c = 1) {
        ParamPoly p;
        if (c != 0) p.terms_.emplace(m, c);
        return p;
    }

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const {
        return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty());
    }

    Rational constant_term() const { return coefficient(Monomial{}); }

    Rational coefficient(const Monomial& m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    ParamPoly& operator+=(const ParamPoly& o) {
        for (auto& [m, c] : o.terms_) add_term(m, c);
        return *this;
    }
    ParamPoly& operator-=(const ParamPoly& o) {
        for (auto& [m, c] : o.terms_) add_term(m, -c);
        return *this;
    }
    ParamPoly& operator*=(const ParamPoly& o) { return *this = *this * o; }

    friend ParamPoly operator+(ParamPoly a, const ParamPoly& b) { return a += b; }
    friend ParamPoly operator-(ParamPoly a, const ParamPoly& b) { return a -= b; }
    friend ParamPoly operator-(ParamPoly a) {
        for (auto& [m, c] : a.terms_) c = -c;
        return a;
    }
    friend ParamPoly operator*(const ParamPoly& a, const ParamPoly& b) {
        ParamPoly out;
        if (a.is_zero() || b.is_zero()) return out;
        for (auto& [ma, ca] : a.terms_)
            for (auto& [mb, cb] : b.terms_) out.add_term(monomial_mul(ma, mb), ca * cb);
        return out;
    }
    friend bool operator==(const ParamPoly& a, const ParamPoly& b) { return a.terms_ == b.terms_; }

    // Divides every coefficient; the divisor must be nonzero.
    ParamPoly operator/(const Rational& c) const {
        if (c == 0) throw DivisionByZero();
        ParamPoly out = *this;
        for (auto& [m, v] : out.terms_) v /= c;
        return out;
    }

    ParamPoly pow(unsigned n) const {
        ParamPoly result(1), base = *this;
        while (n) {
            if (n & 1) result *= base;
            n >>= 1;
            if (n) base *= base;
        }
        return result;
    }

    std::set<std::string> symbols() const {
        std::set<std::string> out;
        auto& table = SymbolTable::instance();
        for (auto& [m, c] : terms_)
            for (auto& [id, e] : m) out.insert(table.name(id));
        return out;
    }

    Rational eval(const Env& env) const {
        auto& table = SymbolTable::instance();
        Rational total = 0;
        for (auto& [m, c] : terms_) {
            Rational t = c;
            for (auto& [id, e] : m) {
                const std::string& name = table.name(id);
                auto it = env.find(name);
                if (it == env.end()) throw MissingSymbol(name);
                for (std::uint32_t i = 0; i < e; ++i) t *= it->second;
            }
            total += t;
        }
        return total;
    }

    // Replaces the listed symbols; symbols without an entry are left in place.
    ParamPoly substitute(const std::map<std::string, ParamPoly>& subs) const {
        auto& table = SymbolTable::instance();
        ParamPoly out;
        for (auto& [m, c] : terms_) {
            ParamPoly t(c);
            for (auto& [id, e] : m) {
                auto it = subs.find(table.name(id));
                t *= it == subs.end() ? from_id(id, e) : it->second.pow(e);
            }
            out += t;
        }
        return out;
    }

    ParamPoly partial_eval(const Env& env) const {
        std::map<std::string, ParamPoly> subs;
        for (auto& [k, v] : env) subs.emplace(k, ParamPoly(v));
        return substitute(subs);
    }

    std::string to_string() const { return render(false); }
    std::string to_latex() const { return render(true); }

   private:
    void add_term(const Monomial& m, const Rational& c) {
        if (c == 0) return;
        auto [it, inserted] = terms_.emplace(m, c);
        if (inserted) return;
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }

    static std::string latex_rational(const Rational& q) {
        if (is_integer(q)) return num(q).str();
        return "\\frac{" + num(q).str() + "}{" + den(q).str() + "}";
    }

    std::string render(bool latex) const {
        if (terms_.empty()) return "0";
        auto& table = SymbolTable::instance();
        std::string out;
        bool first = true;
        for (auto& [m, c] : terms_) {
            Rational mag = c < 0 ? Rational(-c) : c;
            if (first)
                out += c < 0 ? "-" : "";
            else
                out += c < 0 ? " - " : " + ";
            first = false;
            std::string body;
            for (auto& [id, e] : m) {
                if (!body.empty()) body += latex ? " " : "*";
                body += latex ? table.latex(id) : table.name(id);
                if (e > 1) body += latex ? "^{" + std::to_string(e) + "}" : "^" + std::to_string(e);
            }
            if (body.empty())
                out += latex ? latex_rational(mag) : orbicy::to_string(mag);
            else if (mag == 1)
                out += body;
            else
                out += latex ? latex_rational(mag) + " " + body : orbicy::to_string(mag) + "*" + body;
        }
        return out;
    }

    Terms terms_;
};

inline ParamPoly sym(std::string_view name) { return ParamPoly::symbol(name); }

}  // namespace orbicy
