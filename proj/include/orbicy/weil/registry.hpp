#pragma once

#include <cstdint>
#include <deque>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "orbicy/errors.hpp"

namespace orbicy {

// A formal Weil number appearing as (part of) a Frobenius eigenvalue.
//   conjugate == name and order set     -> root of unity, conjugation negates the exponent
//   conjugate == name and no order      -> declared self-conjugate (a unit of weight 0)
//   conjugate != name                   -> a conjugate pair with s * conj(s) = q^weight
struct WeilSymbol {
    std::string name;
    std::string conjugate;
    int weight = 0;
    std::optional<std::string> trace;        // display name of s + conj(s), text style
    std::optional<std::string> trace_latex;
    std::optional<int> order;
    std::string text;                        // display, text style
    std::string latex;                       // display, latex style
    bool declared_self_conjugate = false;    // self-conjugacy is a modelling assumption

    bool self_conjugate() const { return conjugate == name; }
    bool is_root_of_unity() const { return order.has_value() && self_conjugate() && name.rfind("mu", 0) == 0; }

    friend bool operator==(const WeilSymbol&, const WeilSymbol&) = default;
};

class WeilRegistry {
   public:
    static WeilRegistry& instance() {
        static WeilRegistry reg;
        return reg;
    }

    // Registers a symbol or returns the id of an identical existing entry.
    std::uint32_t add(const WeilSymbol& s) {
        std::lock_guard lock(mutex_);
        return add_locked(s);
    }

    std::optional<std::uint32_t> find(const std::string& name) const {
        std::lock_guard lock(mutex_);
        auto it = ids_.find(name);
        if (it == ids_.end()) return std::nullopt;
        return it->second;
    }

    // Resolves a name, creating mu<a> roots of unity on demand.
    std::uint32_t id(const std::string& name) {
        if (auto i = find(name)) return *i;
        if (auto a = root_order(name)) return root_of_unity(*a);
        throw RegistryConflict("unregistered Weil symbol: " + name);
    }

    const WeilSymbol& at(std::uint32_t id) const {
        std::lock_guard lock(mutex_);
        return symbols_.at(id);
    }

    std::uint32_t conjugate(std::uint32_t id) {
        const WeilSymbol& s = at(id);
        if (s.self_conjugate()) return id;
        std::uint32_t c = this->id(s.conjugate);
        if (at(c).conjugate != s.name || at(c).weight != s.weight)
            throw RegistryConflict("conjugation is not an involution on " + s.name + " / " + s.conjugate);
        return c;
    }

    std::uint32_t root_of_unity(int a) {
        if (a < 2) throw RegistryConflict("roots of unity need order >= 2");
        std::string n = "mu" + std::to_string(a);
        WeilSymbol s{n, n, 0, std::nullopt, std::nullopt, a,
                     a == 2 ? "(-1)" : "ζ_" + std::to_string(a), a == 2 ? "(-1)" : "\\zeta_{" + std::to_string(a) + "}"};
        return add(s);
    }

    std::vector<WeilSymbol> all() const {
        std::lock_guard lock(mutex_);
        return {symbols_.begin(), symbols_.end()};
    }

    static std::optional<int> root_order(const std::string& name) {
        if (name.size() < 3 || name.rfind("mu", 0) != 0) return std::nullopt;
        int a = 0;
        for (std::size_t i = 2; i < name.size(); ++i) {
            if (name[i] < '0' || name[i] > '9' || a > 100000) return std::nullopt;
            a = a * 10 + (name[i] - '0');
        }
        if (a < 2) return std::nullopt;
        return a;
    }

   private:
    WeilRegistry() {
        auto pair = [&](const char* n, const char* c, int w, const char* text, const char* ctext, const char* latex,
                        const char* clatex, std::optional<std::string> tr = {},
                        std::optional<std::string> trl = {}) {
            add_locked({n, c, w, tr, trl, std::nullopt, text, latex});
            add_locked({c, n, w, tr, trl, std::nullopt, ctext, clatex});
        };
        pair("alpha_q", "alphabar_q", 1, "α_q", "ᾱ_q", "\\alpha_q", "\\bar{\\alpha}_q", "a_q", "a_q");
        pair("beta_q", "betabar_q", 2, "β_q", "β̄_q", "\\beta_q", "\\bar{\\beta}_q");
        pair("delta_q", "deltabar_q", 1, "δ_q", "δ̄_q", "\\delta_q", "\\bar{\\delta}_q");
        pair("pi", "pibar", 1, "π", "π̄", "\\pi", "\\bar{\\pi}");
        add_locked({"gamma_q", "gamma_q", 0, std::nullopt, std::nullopt, 2, "y_q", "y_q"});
        add_locked({"c_q", "c_q", 0, std::nullopt, std::nullopt, 2, "c_q", "c_q", true});
    }

    std::uint32_t add_locked(const WeilSymbol& s) {
        auto it = ids_.find(s.name);
        if (it != ids_.end()) {
            if (symbols_[it->second] == s) return it->second;
            throw RegistryConflict("Weil symbol " + s.name + " is already registered with different attributes");
        }
        if (s.self_conjugate() && s.weight != 0)
            throw RegistryConflict("self-conjugate Weil symbol " + s.name + " must have weight 0");
        auto id = static_cast<std::uint32_t>(symbols_.size());
        symbols_.push_back(s);
        ids_.emplace(s.name, id);
        return id;
    }

    mutable std::mutex mutex_;
    std::deque<WeilSymbol> symbols_;
    std::map<std::string, std::uint32_t> ids_;
};

}  // namespace orbicy
