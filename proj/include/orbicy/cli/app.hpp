#pragma once

#include <algorithm>
#include <iomanip>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "orbicy/arith/relations.hpp"
#include "orbicy/arith/stringy.hpp"
#include "orbicy/hodge/recurrence.hpp"
#include "orbicy/hodge/render.hpp"
#include "orbicy/io/json.hpp"
#include "orbicy/presets/catalog.hpp"
#include "orbicy/weil/render.hpp"

namespace orbicy::cli {

enum Exit { ok = 0, failure = 1, usage = 2, validation = 3, registry = 4 };

struct FactorSpec {
    enum Source { preset, file } source;
    std::string target;
};

// "preset:NAME" or "file:PATH", comma separated, each optionally followed by "*k".
inline std::vector<FactorSpec> parse_factor_specs(const std::string& text) {
    std::vector<FactorSpec> out;
    std::size_t pos = 0;
    while (true) {
        auto comma = text.find(',', pos);
        std::string item = text.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
        int reps = 1;
        if (auto star = item.rfind('*'); star != std::string::npos) {
            std::string k = item.substr(star + 1);
            if (k.empty() || k.size() > 3 || k.find_first_not_of("0123456789") != std::string::npos || std::stoi(k) < 1)
                throw UsageError("bad repetition count in factor spec '" + item + "'");
            reps = std::stoi(k);
            item = item.substr(0, star);
        }
        FactorSpec spec;
        if (item.rfind("preset:", 0) == 0)
            spec = {FactorSpec::preset, item.substr(7)};
        else if (item.rfind("file:", 0) == 0)
            spec = {FactorSpec::file, item.substr(5)};
        else
            throw UsageError("factor spec must start with preset: or file:, got '" + item + "'");
        if (spec.target.empty()) throw UsageError("empty factor spec '" + item + "'");
        for (int i = 0; i < reps; ++i) out.push_back(spec);
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return out;
}

inline Factor load_record(const FactorSpec& s) {
    if (s.source == FactorSpec::file) return record_from_json(read_json_file(s.target));
    bool known = false;
    for (auto& p : record_presets()) known = known || p.name == s.target;
    if (!known) throw UnknownPreset(s.target);
    return record_from_json(load_preset_json(s.target));
}

inline ZTable load_ztable(const FactorSpec& s) {
    if (s.source == FactorSpec::file) return ztable_from_json(read_json_file(s.target));
    auto path = data_dir() / preset_file_name(s.target);
    if (std::filesystem::exists(path)) return ztable_from_json(read_json_file(path.string()));
    return ztable_preset(s.target);
}

inline FTable factor_table(const Factor& f) {
    return std::visit(
        [](auto& r) {
            if constexpr (std::is_same_v<std::decay_t<decltype(r)>, K3Record>)
                return ftable_k3(r);
            else
                return ftable_elliptic(r);
        },
        f);
}

inline void check_format(const std::string& f) {
    if (f != "text" && f != "json" && f != "latex") throw UsageError("format must be text, json or latex");
}

inline void check_d(int d) {
    if (d != 2 && d != 3 && d != 4 && d != 6) throw UsageError("--d must be one of 2, 3, 4, 6");
}

inline int cmd_hodge(int d, const std::string& factors, const std::string& format, std::ostream& out) {
    check_d(d);
    check_format(format);
    std::vector<FTable> tables;
    for (auto& s : parse_factor_specs(factors)) {
        Factor f = load_record(s);
        if (factor_order(f) != d) throw UsageError("factor " + s.target + " has order " + std::to_string(factor_order(f)));
        tables.push_back(factor_table(f));
    }
    HodgeDiamond hd = hodge_diamond(tables);
    if (format == "json")
        out << to_json(hd).dump(2) << "\n";
    else if (format == "latex")
        out << latex_document(diamond_latex(hd) + "\n\\qquad e = " + hd.euler().to_latex());
    else
        out << "Hodge diamond (dimension " << hd.dim << ")\n"
            << diamond_text(hd) << "Euler characteristic: " << hd.euler().to_string() << "\n";
    return ok;
}

inline ParamPoly surface_euler(const K3Record& rec) {
    FTable t = ftable_k3(rec);
    ParamPoly e;
    for (int j = 0; j < t.d; ++j)
        for (auto& [ex, c] : t(0, j).terms()) {
            auto p = ex.first / t(0, j).denom(), q = ex.second / t(0, j).denom();
            e += (p + q) % 2 ? -c : c;
        }
    return e.substitute(rec.dimension_substitution());
}

inline int cmd_euler(int d, const std::string& k3spec, int nmax, const std::string& method,
                     const std::string& format, std::ostream& out) {
    check_d(d);
    if (format != "text" && format != "json") throw UsageError("euler supports text or json output");
    if (method != "diamond" && method != "stringy" && method != "both")
        throw UsageError("method must be diamond, stringy or both");
    if (nmax < 1 || nmax > 8) throw UsageError("--nmax must lie in 1..8");
    std::optional<K3Record> k3;
    if (!k3spec.empty()) {
        auto specs = parse_factor_specs(k3spec);
        if (specs.size() != 1) throw UsageError("--k3 takes exactly one record");
        Factor f = load_record(specs[0]);
        if (!std::holds_alternative<K3Record>(f)) throw UsageError("--k3 needs a K3 record");
        k3 = std::get<K3Record>(f);
        if (k3->d() != d) throw UsageError("K3 record has order " + std::to_string(k3->d()));
    }
    std::map<std::string, ParamPoly> subs = k3 ? k3->dimension_substitution() : std::map<std::string, ParamPoly>{};
    bool diamond = method != "stringy", stringy = method != "diamond";
    struct Row {
        int n;
        std::optional<ParamPoly> dia, str;
    };
    std::vector<Row> rows;
    bool agree = true;
    for (int n = k3 ? 1 : 2; n <= nmax; ++n) {
        Row row{n, {}, {}};
        if (diamond)
            row.dia = n == 1 ? surface_euler(*k3)
                             : euler_characteristic(hodge_diamond(product_tables(d, k3, n))).substitute(subs);
        if (stringy) {
            std::vector<Factor> fs;
            if (k3) fs.push_back(*k3);
            while (int(fs.size()) < n) fs.push_back(EllipticRecord::standard(d));
            row.str = stringy_euler(fs, d).substitute(subs);
        }
        if (row.dia && row.str && !(*row.dia == *row.str)) agree = false;
        rows.push_back(row);
    }
    std::string verdict = "not available";
    if (d != 2) {
        int need = (k3 ? 1 : 2) + int(euler_recurrence(d).size());
        if (nmax >= need)
            verdict = recurrence_check(d, k3, nmax).holds() ? "holds" : "fails";
        else
            verdict = "needs nmax >= " + std::to_string(need);
    }
    std::string space = k3 ? "Y" : "X";
    if (format == "json") {
        json arr = json::array();
        for (auto& r : rows) {
            json j = {{"n", r.n}};
            if (r.dia) j["diamond"] = detail::poly_json(*r.dia);
            if (r.str) j["stringy"] = detail::poly_json(*r.str);
            arr.push_back(j);
        }
        json j = {{"schema", kSchema}, {"kind", "euler"}, {"d", d}, {"space", space}, {"values", arr},
                  {"recurrence", verdict}};
        if (diamond && stringy) j["methods_agree"] = agree;
        out << j.dump(2) << "\n";
        return ok;
    }
    for (auto& r : rows) {
        out << "e(" << space << "_{" << d << "," << r.n << "})";
        if (r.dia) out << "  diamond: " << r.dia->to_string();
        if (r.str) out << "  stringy: " << r.str->to_string();
        out << "\n";
    }
    out << "recurrence: " << verdict << "\n";
    if (diamond && stringy) out << "methods agree: " << (agree ? "yes" : "no") << "\n";
    return ok;
}

inline int cmd_zeta(int d, const std::string& factors, const std::string& format, const std::string& style,
                    std::ostream& out) {
    check_d(d);
    check_format(format);
    if (style != "linear" && style != "paired") throw UsageError("style must be linear or paired");
    std::vector<ZTable> tables;
    for (auto& s : parse_factor_specs(factors)) {
        ZTable t = load_ztable(s);
        if (t.d != d) throw UsageError("zeta table " + s.target + " has order " + std::to_string(t.d));
        tables.push_back(std::move(t));
    }
    ZetaFactorSet z = orbifold_zeta(tables);
    ZetaStyle st = style == "linear" ? ZetaStyle::linear : ZetaStyle::paired;
    if (format == "json") {
        json j = {{"schema", kSchema}, {"kind", "zeta"}, {"d", d}, {"zeta", to_json(z)},
                  {"rendered", zf_render(z, st)}, {"euler", z.euler_characteristic()}};
        out << j.dump(2) << "\n";
    } else if (format == "latex") {
        std::string body = zf_render(z, ZetaStyle::latex);
        std::string note;
        if (auto nl = body.find('\n'); nl != std::string::npos) {
            note = body.substr(nl + 1) + "\n";
            body = body.substr(0, nl);
        }
        out << note << latex_document("Z_q(T) = " + body);
    } else {
        out << "Z_q(T) = " << zf_render(z, st) << "\n";
    }
    return ok;
}

inline int cmd_relations(const std::string& k3spec, const std::string& format, std::ostream& out) {
    if (format != "text" && format != "json") throw UsageError("relations supports text or json output");
    auto specs = parse_factor_specs(k3spec);
    if (specs.size() != 1) throw UsageError("--k3 takes exactly one record");
    Factor f = load_record(specs[0]);
    if (!std::holds_alternative<K3Record>(f)) throw UsageError("--k3 needs a K3 record");
    RelationReport rep = check_relations(std::get<K3Record>(f));
    if (format == "json") {
        out << to_json(rep).dump(2) << "\n";
        return ok;
    }
    std::size_t w = 0;
    for (auto& e : rep.entries) w = std::max(w, e.lhs.to_string().size());
    for (auto& e : rep.entries) {
        out << "(" << e.id << ")" << std::string(e.id.size() < 5 ? 5 - e.id.size() : 0, ' ') << std::left
            << std::setw(static_cast<int>(w)) << e.lhs.to_string() << "  " << to_string(e.verdict);
        if (!e.note.empty()) out << "  [" << e.note << "]";
        out << "\n";
    }
    return ok;
}

inline int cmd_presets(const std::string& export_dir, std::ostream& out) {
    if (!export_dir.empty()) {
        for (auto& f : export_presets(export_dir)) out << f << "\n";
        return ok;
    }
    for (auto& p : list_presets())
        out << std::left << std::setw(22) << p.name << std::setw(10) << p.kind << "d=" << p.d << "  " << p.summary
            << "\n";
    return ok;
}

// In-process entry point; args excludes the program name.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Hodge numbers, Euler characteristics, invariant relations and zeta functions of Borcea-Voisin "
                 "type quotients",
                 "orbicy"};
    app.require_subcommand(1);

    int d = 0, nmax = 4;
    std::string factors, format = "text", style = "paired", k3spec, method = "both", export_dir;

    auto* hodge = app.add_subcommand("hodge", "Hodge diamond of the crepant resolution");
    hodge->add_option("--d", d, "order of the automorphism")->required();
    hodge->add_option("--factors", factors, "comma list of preset:NAME / file:PATH, each optionally *k")->required();
    hodge->add_option("--format", format, "text, json or latex");

    auto* euler = app.add_subcommand("euler", "Euler characteristics and the printed recurrences");
    euler->add_option("--d", d, "order of the automorphism")->required();
    euler->add_option("--k3", k3spec, "K3 factor (omit for products of elliptic curves)");
    euler->add_option("--nmax", nmax, "largest number of factors");
    euler->add_option("--method", method, "diamond, stringy or both");
    euler->add_option("--format", format, "text or json");

    auto* zeta = app.add_subcommand("zeta", "zeta function of the crepant resolution");
    zeta->add_option("--d", d, "order of the automorphism")->required();
    zeta->add_option("--factors", factors, "comma list of Z-table specs")->required();
    zeta->add_option("--format", format, "text, json or latex");
    zeta->add_option("--style", style, "linear or paired");

    auto* rel = app.add_subcommand("relations", "relations between the invariants of a K3 record");
    rel->add_option("--k3", k3spec, "K3 record")->required();
    rel->add_option("--format", format, "text or json");

    auto* presets = app.add_subcommand("presets", "list bundled presets or export them as JSON");
    presets->add_option("--export", export_dir, "write every preset into this directory");

    try {
        std::vector<std::string> rev(args.rbegin(), args.rend());
        app.parse(rev);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return ok;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return ok;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return usage;
    }

    try {
        if (hodge->parsed()) return cmd_hodge(d, factors, format, out);
        if (euler->parsed()) return cmd_euler(d, k3spec, nmax, method, format, out);
        if (zeta->parsed()) return cmd_zeta(d, factors, format, style, out);
        if (rel->parsed()) return cmd_relations(k3spec, format, out);
        return cmd_presets(export_dir, out);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        return usage;
    } catch (const RegistryConflict& e) {
        err << "error: " << e.what() << "\n";
        return registry;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return validation;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return failure;
    }
}

}  // namespace orbicy::cli
