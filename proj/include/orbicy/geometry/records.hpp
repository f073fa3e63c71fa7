#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "orbicy/algebra/param_poly.hpp"

namespace orbicy {

enum class Mode { numeric, symbolic };

inline const char* to_string(Mode m) { return m == Mode::numeric ? "numeric" : "symbolic"; }

inline void check_order(int d) {
    if (d != 2 && d != 3 && d != 4 && d != 6)
        throw InvalidRecord("order must be one of 2, 3, 4, 6; got " + std::to_string(d));
}

// gcd(g, h, d) with exponents read modulo d; gcd(0, 0, d) = d.
inline int fix_index(int g, int h, int d) { return std::gcd(std::gcd(((g % d) + d) % d, ((h % d) + d) % d), d); }

// (E_d, alpha_d): only the number of points fixed by each power matters.
struct EllipticRecord {
    int d = 2;
    std::map<int, int> fix_counts;

    static EllipticRecord standard(int d) {
        check_order(d);
        EllipticRecord e{d, {}};
        switch (d) {
            case 2: e.fix_counts = {{1, 4}}; break;
            case 3: e.fix_counts = {{1, 3}, {2, 3}}; break;
            case 4: e.fix_counts = {{1, 2}, {2, 4}, {3, 2}}; break;
            case 6: e.fix_counts = {{1, 1}, {2, 3}, {3, 4}, {4, 3}, {5, 1}}; break;
        }
        return e;
    }

    void validate() const {
        check_order(d);
        if (fix_counts != standard(d).fix_counts)
            throw InvalidRecord("fixed point counts do not match the order-" + std::to_string(d) +
                                " elliptic curve");
    }

    int fix_euler(int k) const {
        if (k < 1 || k >= d) throw OutOfRange("power must lie in 1.." + std::to_string(d - 1));
        return fix_counts.at(k);
    }

    // e(Fix(a^g) n Fix(a^h)); the whole curve when both powers are trivial.
    int euler_pair(int g, int h) const {
        int k = fix_index(g, h, d);
        return k == d ? 0 : fix_counts.at(k);
    }
};

// (S_d, gamma_d) described by eigenspace dimensions of H^2 and fixed-locus data.
// Absent invariants stay symbolic; numeric mode requires every required one.
class K3Record {
   public:
    using Values = std::map<std::string, std::optional<Rational>>;

    K3Record() = default;
    K3Record(int d, Mode mode, Values values) : d_(d), mode_(mode), values_(std::move(values)) { validate(); }

    static const std::vector<std::string>& required(int d) {
        static const std::map<int, std::vector<std::string>> names = {
            {2, {"r", "m", "N", "Nprime"}},
            {3, {"r", "m", "k", "gC", "h"}},
            {4, {"r", "m", "k", "gG", "n1", "n2", "N", "a", "gD", "gDq"}},
            {6, {"r", "m", "alpha", "beta", "ell", "gD", "p25", "p34", "k", "b", "nprime", "gG", "gGq",
                 "a", "N", "gF1", "gF2", "gF1q", "gF2q"}},
        };
        check_order(d);
        return names.at(d);
    }

    // Accepted but never needed by the tables.
    static const std::vector<std::string>& optional(int d) {
        static const std::map<int, std::vector<std::string>> names = {
            {2, {}}, {3, {}}, {4, {"alpha", "b"}}, {6, {"n", "w"}}};
        check_order(d);
        return names.at(d);
    }

    int d() const { return d_; }
    Mode mode() const { return mode_; }
    const Values& values() const { return values_; }

    bool has_value(std::string_view name) const {
        auto it = values_.find(std::string(name));
        return it != values_.end() && it->second.has_value();
    }

    // The invariant as a polynomial: its value, a derived expression, or the bare symbol.
    ParamPoly get(std::string_view name) const {
        std::string key(name);
        if (key == "w" && d_ == 6 && !has_value("w")) key = "nprime";
        if (key == "alpha" && d_ == 4 && !has_value("alpha")) return 22 - get("r") - 2 * get("m");
        auto it = values_.find(key);
        if (it != values_.end() && it->second) return ParamPoly(*it->second);
        return ParamPoly::symbol(key);
    }

    Env env() const {
        Env out;
        for (auto& [k, v] : values_)
            if (v) out.emplace(k, *v);
        return out;
    }

    void validate() const {
        check_order(d_);
        auto& req = required(d_);
        auto& opt = optional(d_);
        for (auto& [name, value] : values_) {
            bool known = std::find(req.begin(), req.end(), name) != req.end() ||
                         std::find(opt.begin(), opt.end(), name) != opt.end();
            if (!known) throw InvalidRecord("unknown invariant '" + name + "' for order " + std::to_string(d_));
            if (!value) continue;
            if (!is_integer(*value) || *value < 0)
                throw InvalidRecord("invariant '" + name + "' must be a non-negative integer, got " +
                                    orbicy::to_string(*value));
        }
        if (mode_ == Mode::numeric)
            for (auto& name : req)
                if (!has_value(name)) throw InvalidRecord("numeric record is missing invariant '" + name + "'");
        if (d_ == 4 && has_value("alpha") && has_value("r") && has_value("m") &&
            *values_.at("alpha") != 22 - *values_.at("r") - 2 * *values_.at("m"))
            throw InvalidRecord("alpha must equal 22 - r - 2m for order 4");
        if (d_ == 6 && has_value("w") && has_value("nprime") && *values_.at("w") != *values_.at("nprime"))
            throw InvalidRecord("w is an alias of nprime and must agree with it");
    }

    // Eigenspace dimensions of H^2: entry j is the dimension for eigenvalue zeta_d^j.
    std::vector<ParamPoly> eigendims() const {
        ParamPoly r = get("r"), m = get("m");
        switch (d_) {
            case 2: return {r, m};
            case 3: return {r, m, m};
            case 4: return {r, m, get("alpha"), m};
            default: return {r, m, get("alpha"), get("beta"), get("alpha"), m};
        }
    }

    // e(Fix(gamma^k)) from the full locus decomposition.
    ParamPoly fix_euler(int k) const {
        if (k < 1 || k >= d_) throw OutOfRange("power must lie in 1.." + std::to_string(d_ - 1));
        int g = std::gcd(k, d_);
        switch (d_) {
            case 2: return 2 * get("N") - 2 * get("Nprime");
            case 3: return 2 * get("k") - 2 * get("gC") + get("h");
            case 4:
                if (g == 1) return 2 * get("k") - 2 * get("gG") + get("n1") + get("n2");
                return 2 * get("N") - 2 * get("gD");
            default:
                if (g == 1) return 2 * get("ell") - 2 * get("gD") + get("p25") + get("p34");
                if (g == 2) return 2 * get("k") - 2 * get("gG") + 2 * get("nprime") + get("p25");
                return 2 * get("N") - 2 * get("gF1") - 2 * get("gF2");
        }
    }

    // e(Fix(g^a) n Fix(g^b)); 24 for the whole surface.
    ParamPoly euler_pair(int a, int b) const {
        int k = fix_index(a, b, d_);
        return k == d_ ? ParamPoly(24) : fix_euler(k);
    }

    // Relation forced by dim H^2 = 22, as a substitution eliminating one eigendimension.
    std::map<std::string, ParamPoly> dimension_substitution() const {
        switch (d_) {
            case 2: return {{"m", 22 - get("r")}};
            case 3: return {{"r", 22 - 2 * get("m")}};
            case 4: return {};
            default: return {{"beta", 22 - get("r") - 2 * get("m") - 2 * get("alpha")}};
        }
    }

   private:
    int d_ = 2;
    Mode mode_ = Mode::symbolic;
    Values values_;
};

}  // namespace orbicy
