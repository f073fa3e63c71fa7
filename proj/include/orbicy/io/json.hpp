#pragma once

#include <fstream>
#include <set>
#include <sstream>
#include <string>
#include <variant>

#include <json.hpp>

#include "orbicy/arith/relations.hpp"
#include "orbicy/arith/stringy.hpp"
#include "orbicy/hodge/engine.hpp"
#include "orbicy/weil/ztable.hpp"

namespace orbicy {

using json = nlohmann::ordered_json;

inline constexpr const char* kSchema = "cy/1";

namespace detail {

inline void check_schema(const json& j) {
    if (!j.is_object()) throw InvalidRecord("expected a JSON object");
    if (j.contains("schema") && j.at("schema") != kSchema)
        throw InvalidRecord("unsupported schema " + j.at("schema").dump() + ", expected \"cy/1\"");
}

inline json rational_json(const Rational& q) {
    if (is_integer(q) && abs(num(q)) < Integer(1) << 53) return to_int64(num(q));
    return to_string(q);
}

inline Rational rational_from_json(const json& j, const std::string& what) {
    if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
    if (j.is_string()) {
        try {
            return parse_rational(j.get<std::string>());
        } catch (const std::exception&) {
        }
    }
    throw InvalidRecord(what + " must be an integer or a rational string, got " + j.dump());
}

inline json poly_json(const ParamPoly& p) {
    if (p.is_constant()) return rational_json(p.constant_term());
    return p.to_string();
}

template <class T>
T get_field(const json& j, const char* key) {
    if (!j.contains(key)) throw InvalidRecord(std::string("missing field \"") + key + "\"");
    try {
        return j.at(key).get<T>();
    } catch (const json::exception&) {
        throw InvalidRecord(std::string("field \"") + key + "\" has the wrong type");
    }
}

}  // namespace detail

// ---- records ----------------------------------------------------------------------------

inline json to_json(const K3Record& rec) {
    json inv = json::object();
    for (auto& [k, v] : rec.values()) inv[k] = v ? detail::rational_json(*v) : json(nullptr);
    return {{"schema", kSchema}, {"kind", "k3"}, {"d", rec.d()}, {"mode", to_string(rec.mode())}, {"invariants", inv}};
}

inline json to_json(const EllipticRecord& rec) {
    json fix = json::object();
    for (auto& [k, c] : rec.fix_counts) fix[std::to_string(k)] = c;
    return {{"schema", kSchema}, {"kind", "elliptic"}, {"d", rec.d}, {"fix_counts", fix}};
}

inline json to_json(const Factor& f) {
    return std::visit([](auto& r) { return to_json(r); }, f);
}

inline K3Record k3_from_json(const json& j) {
    detail::check_schema(j);
    if (detail::get_field<std::string>(j, "kind") != "k3") throw InvalidRecord("expected a record of kind \"k3\"");
    int d = detail::get_field<int>(j, "d");
    check_order(d);
    std::string mode = j.contains("mode") ? detail::get_field<std::string>(j, "mode") : "numeric";
    if (mode != "numeric" && mode != "symbolic") throw InvalidRecord("mode must be \"numeric\" or \"symbolic\"");
    K3Record::Values values;
    if (j.contains("invariants")) {
        if (!j.at("invariants").is_object()) throw InvalidRecord("\"invariants\" must be an object");
        for (auto& [k, v] : j.at("invariants").items())
            values[k] = v.is_null() ? std::nullopt : std::optional<Rational>(detail::rational_from_json(v, k));
    }
    return K3Record(d, mode == "numeric" ? Mode::numeric : Mode::symbolic, std::move(values));
}

inline EllipticRecord elliptic_from_json(const json& j) {
    detail::check_schema(j);
    if (detail::get_field<std::string>(j, "kind") != "elliptic")
        throw InvalidRecord("expected a record of kind \"elliptic\"");
    int d = detail::get_field<int>(j, "d");
    check_order(d);
    EllipticRecord rec = EllipticRecord::standard(d);
    if (j.contains("fix_counts")) {
        rec.fix_counts.clear();
        for (auto& [k, v] : j.at("fix_counts").items()) {
            if (!v.is_number_integer() || k.empty() || k.find_first_not_of("0123456789") != std::string::npos)
                throw InvalidRecord("fix_counts must map powers to integer counts");
            rec.fix_counts[std::stoi(k)] = v.get<int>();
        }
    }
    rec.validate();
    return rec;
}

inline Factor record_from_json(const json& j) {
    detail::check_schema(j);
    std::string kind = detail::get_field<std::string>(j, "kind");
    if (kind == "k3") return k3_from_json(j);
    if (kind == "elliptic") return elliptic_from_json(j);
    throw InvalidRecord("unknown record kind \"" + kind + "\"");
}

// ---- Weil data --------------------------------------------------------------------------

inline json to_json(const WeilSymbol& s) {
    json j = {{"name", s.name}, {"conjugate", s.conjugate}, {"weight", s.weight}};
    if (s.trace) j["trace"] = *s.trace;
    if (s.trace_latex) j["trace_latex"] = *s.trace_latex;
    if (s.order) j["order"] = *s.order;
    j["text"] = s.text;
    j["latex"] = s.latex;
    if (s.declared_self_conjugate) j["declared_self_conjugate"] = true;
    return j;
}

inline WeilSymbol symbol_from_json(const json& j) {
    WeilSymbol s;
    s.name = detail::get_field<std::string>(j, "name");
    s.conjugate = j.contains("conjugate") ? detail::get_field<std::string>(j, "conjugate") : s.name;
    s.weight = j.contains("weight") ? detail::get_field<int>(j, "weight") : 0;
    if (j.contains("trace")) s.trace = detail::get_field<std::string>(j, "trace");
    if (j.contains("trace_latex")) s.trace_latex = detail::get_field<std::string>(j, "trace_latex");
    if (j.contains("order")) s.order = detail::get_field<int>(j, "order");
    s.text = j.contains("text") ? detail::get_field<std::string>(j, "text") : s.name;
    s.latex = j.contains("latex") ? detail::get_field<std::string>(j, "latex") : s.name;
    s.declared_self_conjugate = j.contains("declared_self_conjugate") && j.at("declared_self_conjugate") == true;
    return s;
}

inline json to_json(const ZetaFactorSet& f) {
    json factors = json::array();
    for (auto& [m, k] : f.mults()) {
        json syms = json::object();
        for (auto& [s, e] : m.syms()) syms[WeilRegistry::instance().at(s).name] = e;
        Integer scaled = num(m.q_exp()) * (f.denom() / to_int64(den(m.q_exp())));
        std::string q = f.denom() == 1 ? scaled.str() : scaled.str() + "/" + std::to_string(f.denom());
        factors.push_back({{"q_exp", q}, {"syms", syms}, {"mult", k}});
    }
    return {{"denom", f.denom()}, {"factors", factors}};
}

inline ZetaFactorSet factor_set_from_json(const json& j) {
    if (!j.is_object()) throw InvalidRecord("factor set must be a JSON object");
    ZetaFactorSet f;
    for (auto& fj : detail::get_field<json>(j, "factors")) {
        std::map<std::string, int> syms;
        if (fj.contains("syms"))
            for (auto& [n, e] : fj.at("syms").items()) {
                if (!e.is_number_integer() || e.get<int>() < 0)
                    throw InvalidRecord("symbol exponents must be non-negative integers");
                syms[n] = e.get<int>();
            }
        Rational q = detail::rational_from_json(detail::get_field<json>(fj, "q_exp"), "q_exp");
        f.add(WeilMonomial::named(q, syms), detail::get_field<long long>(fj, "mult"));
    }
    if (j.contains("denom")) {
        auto d = detail::get_field<std::int64_t>(j, "denom");
        if (d < 1) throw InvalidRecord("denom must be positive");
        f.set_denom(std::lcm(f.denom(), d));
    }
    return f;
}

inline std::vector<WeilSymbol> symbols_used(const ZTable& t) {
    std::set<std::uint32_t> ids;
    auto& reg = WeilRegistry::instance();
    for (auto& row : t.entries)
        for (auto& c : row)
            for (auto& [m, _] : c.mults())
                for (auto& [s, e] : m.syms()) {
                    ids.insert(s);
                    ids.insert(reg.conjugate(s));
                }
    std::vector<WeilSymbol> out;
    for (auto id : ids) out.push_back(reg.at(id));
    return out;
}

inline json to_json(const ZTable& t, const std::string& name = {}) {
    json j = {{"schema", kSchema}, {"kind", "ztable"}};
    if (!name.empty()) j["name"] = name;
    j["d"] = t.d;
    json reg = json::array();
    for (auto& s : symbols_used(t)) reg.push_back(to_json(s));
    j["registry"] = reg;
    json rows = json::array();
    for (auto& row : t.entries) {
        json r = json::array();
        for (auto& c : row) r.push_back(to_json(c));
        rows.push_back(r);
    }
    j["entries"] = rows;
    return j;
}

// Registers the table's symbols first; a clash with an existing entry raises RegistryConflict.
inline ZTable ztable_from_json(const json& j) {
    detail::check_schema(j);
    if (detail::get_field<std::string>(j, "kind") != "ztable") throw InvalidRecord("expected a record of kind \"ztable\"");
    if (j.contains("registry"))
        for (auto& s : j.at("registry")) WeilRegistry::instance().add(symbol_from_json(s));
    int d = detail::get_field<int>(j, "d");
    ZTable t(d);
    auto rows = detail::get_field<json>(j, "entries");
    if (!rows.is_array() || rows.size() != static_cast<std::size_t>(d))
        throw InvalidRecord("entries must be a d x d array");
    for (int k = 0; k < d; ++k) {
        if (!rows[k].is_array() || rows[k].size() != static_cast<std::size_t>(d))
            throw InvalidRecord("entries must be a d x d array");
        for (int jj = 0; jj < d; ++jj) t(k, jj) = factor_set_from_json(rows[k][jj]);
    }
    return t;
}

// ---- reports ----------------------------------------------------------------------------

inline json to_json(const HodgeDiamond& hd) {
    json rows = json::array();
    for (int p = 0; p <= hd.dim; ++p) {
        json r = json::array();
        for (int q = 0; q <= hd.dim; ++q) r.push_back(detail::poly_json(hd(p, q)));
        rows.push_back(r);
    }
    return {{"schema", kSchema}, {"kind", "hodge"}, {"dim", hd.dim}, {"h", rows}, {"euler", detail::poly_json(hd.euler())}};
}

inline json to_json(const RelationReport& rep) {
    json rel = json::array();
    for (auto& e : rep.entries) {
        json r = {{"id", e.id}, {"lhs", e.lhs.to_string()}, {"verdict", to_string(e.verdict)}};
        if (!e.note.empty()) r["note"] = e.note;
        rel.push_back(r);
    }
    return {{"schema", kSchema}, {"kind", "relations"}, {"d", rep.d}, {"relations", rel}};
}

inline json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot open " + path);
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw InvalidRecord(path + ": " + e.what());
    }
}

}  // namespace orbicy
