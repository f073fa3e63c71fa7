#pragma once

#include <cstdint>
#include <deque>
#include <initializer_list>
#include <map>
#include <mutex>
#include <string>
#include <string_view>

namespace orbicy {

// Process-wide intern table for parameter symbols. Ids are handed out in
// registration order and that order is the display order of ParamPoly.
// Entries are never removed or renamed.
class SymbolTable {
   public:
    static SymbolTable& instance() {
        static SymbolTable table;
        return table;
    }

    std::uint32_t intern(std::string_view name) {
        std::lock_guard lock(mutex_);
        auto it = ids_.find(std::string(name));
        if (it != ids_.end()) return it->second;
        auto id = static_cast<std::uint32_t>(names_.size());
        names_.emplace_back(name);
        ids_.emplace(names_.back(), id);
        return id;
    }

    bool contains(std::string_view name) const {
        std::lock_guard lock(mutex_);
        return ids_.count(std::string(name)) != 0;
    }

    // std::deque keeps references stable while other threads intern.
    const std::string& name(std::uint32_t id) const {
        std::lock_guard lock(mutex_);
        return names_.at(id);
    }

    std::string latex(std::uint32_t id) const {
        const std::string& n = name(id);
        static const std::map<std::string, std::string> table = {
            {"alpha", "\\alpha"},         {"beta", "\\beta"},           {"ell", "\\ell"},
            {"p25", "p_{(2,5)}"},         {"p34", "p_{(3,4)}"},         {"nprime", "n'"},
            {"Nprime", "N'"},             {"gD", "g(D)"},               {"gDq", "g(D/\\gamma)"},
            {"gG", "g(G)"},               {"gGq", "g(G/\\gamma)"},      {"gF1", "g(F_1)"},
            {"gF2", "g(F_2)"},            {"gF1q", "g(F_1/\\gamma)"},   {"gF2q", "g(F_2/\\gamma)"},
            {"gC", "g(C)"},               {"n1", "n_1"},                {"n2", "n_2"},
        };
        auto it = table.find(n);
        return it == table.end() ? n : it->second;
    }

   private:
    SymbolTable() {
        for (const char* s : {"r",    "m",    "alpha", "beta", "ell",  "p25",  "p34",
                              "k",    "b",    "nprime", "a",   "N",    "Nprime", "gD",
                              "gDq",  "gG",   "gGq",   "gF1",  "gF2",  "gF1q", "gF2q",
                              "gC",   "h",    "n1",    "n2",   "n",    "w"}) {
            ids_.emplace(s, static_cast<std::uint32_t>(names_.size()));
            names_.emplace_back(s);
        }
    }

    mutable std::mutex mutex_;
    std::deque<std::string> names_;
    std::map<std::string, std::uint32_t> ids_;
};

}  // namespace orbicy
