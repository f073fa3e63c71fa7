#pragma once

#include <cstdlib>
#include <filesystem>
#include <string>
#include <vector>

#include "orbicy/io/json.hpp"
#include "orbicy/presets/records.hpp"
#include "orbicy/presets/zeta.hpp"

#ifndef ORBICY_DATA_DIR
#define ORBICY_DATA_DIR "data"
#endif

namespace orbicy {

struct PresetInfo {
    std::string name;
    std::string kind;  // "k3", "elliptic" or "ztable"
    int d;
    std::string summary;
};

inline std::vector<PresetInfo> list_presets() {
    std::vector<PresetInfo> out;
    for (auto& p : record_presets()) out.push_back({p.name, p.is_k3() ? "k3" : "elliptic", p.d(), p.summary});
    for (auto& p : ztable_presets()) {
        int d = p.name == "zeta-s6-18" || p.name == "zeta-e6" ? 6 : 2;
        out.push_back({p.name, "ztable", d, p.summary});
    }
    return out;
}

// Directory holding exported presets: CY_DATA_DIR, else the source tree's data/.
inline std::filesystem::path data_dir() {
    if (const char* env = std::getenv("CY_DATA_DIR"); env && *env) return env;
    return ORBICY_DATA_DIR;
}

inline std::string preset_file_name(const std::string& name) {
    std::string f = name;
    std::replace(f.begin(), f.end(), ':', '_');
    return f + ".json";
}

inline json preset_json(const std::string& name) {
    for (auto& p : record_presets())
        if (p.name == name) {
            json j = std::visit([](auto& r) { return to_json(r); }, p.record);
            j["name"] = p.name;
            json prov = json::array();
            for (auto& pr : p.provenance)
                prov.push_back({{"field", pr.field}, {"tag", to_string(pr.tag)}, {"citation", pr.citation}});
            j["provenance"] = prov;
            return j;
        }
    for (auto& p : ztable_presets())
        if (p.name == name && p.name != "zeta-s2-generic") {
            json j = to_json(ztable_preset(name), name);
            json prov = json::array();
            for (auto& pr : p.provenance)
                prov.push_back({{"field", pr.field}, {"tag", to_string(pr.tag)}, {"citation", pr.citation}});
            j["provenance"] = prov;
            return j;
        }
    throw UnknownPreset(name);
}

// Looks in the data directory first and falls back to the compiled-in tables.
inline json load_preset_json(const std::string& name) {
    auto path = data_dir() / preset_file_name(name);
    if (std::filesystem::exists(path)) return read_json_file(path.string());
    return preset_json(name);
}

// Writes every exportable preset as <dir>/<name>.json; returns the file names.
inline std::vector<std::string> export_presets(const std::filesystem::path& dir) {
    std::filesystem::create_directories(dir);
    std::vector<std::string> written;
    for (auto& p : list_presets()) {
        if (p.name == "zeta-s2-generic") continue;
        std::string f = preset_file_name(p.name);
        std::ofstream out(dir / f);
        if (!out) throw UsageError("cannot write " + (dir / f).string());
        out << preset_json(p.name).dump(2) << "\n";
        written.push_back(f);
    }
    return written;
}

}  // namespace orbicy
