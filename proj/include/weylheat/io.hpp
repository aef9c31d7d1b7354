#pragma once

#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "weylheat/characters.hpp"
#include "weylheat/grid.hpp"
#include "weylheat/reflection_group.hpp"
#include "weylheat/root_system.hpp"

namespace weylheat {

using json = nlohmann::ordered_json;

/// Root-system config:
///   { "dimension": d, "roots": [[...],...], "check_vector": [...] }   (optional check_vector)
///   { "family": "dihedral", "n": 5 }
///   { "family": "orthogonal", "d": 3, "J": [1,2,3] }
inline RootSystem load_system_json(const json& j) {
    if (j.contains("family")) {
        std::string fam = j.at("family").get<std::string>();
        if (fam == "dihedral") return dihedral_roots(j.at("n").get<int>());
        if (fam == "orthogonal")
            return orthogonal_roots(j.at("d").get<int>(), j.at("J").get<std::vector<int>>());
        throw std::invalid_argument("unknown root-system family: " + fam);
    }
    std::vector<Vec> roots;
    for (const auto& r : j.at("roots")) roots.push_back(r.get<Vec>());
    if (j.contains("check_vector")) return build_root_system(std::move(roots), j.at("check_vector").get<Vec>());
    return build_root_system(std::move(roots));
}

inline std::string word_string(const std::vector<int>& word) {
    if (word.empty()) return "e";
    std::string s;
    for (std::size_t i = 0; i < word.size(); ++i) {
        if (i) s += "-";
        s += std::to_string(word[i]);
    }
    return s;
}

/// CSV dump of a generated group: element_index, det, word, then the d^2
/// row-major matrix entries at full precision.
inline void dump_group_csv(std::ostream& os, const ReflectionGroup& w) {
    const int d = w.dimension();
    os << "element_index,det,word";
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) os << ",m" << i << j;
    os << "\n";
    for (int g = 0; g < w.size(); ++g) {
        const GroupElement& e = w.element(g);
        os << g << "," << (e.det > 0 ? 1 : -1) << "," << word_string(e.word);
        for (int i = 0; i < d; ++i)
            for (int j = 0; j < d; ++j) os << "," << format_double(e.matrix(i, j));
        os << "\n";
    }
}

inline json group_to_json(const ReflectionGroup& w) {
    json arr = json::array();
    for (int g = 0; g < w.size(); ++g) {
        const GroupElement& e = w.element(g);
        json rec;
        rec["element_index"] = g;
        rec["det"] = (e.det > 0 ? 1 : -1);
        rec["word"] = e.word;
        json rows = json::array();
        for (int i = 0; i < w.dimension(); ++i) {
            json row = json::array();
            for (int j = 0; j < w.dimension(); ++j) row.push_back(e.matrix(i, j));
            rows.push_back(std::move(row));
        }
        rec["matrix"] = std::move(rows);
        arr.push_back(std::move(rec));
    }
    return arr;
}

inline json grid_to_json(const GridField& g) {
    json out;
    out["metadata"] = g.metadata;
    out["nodes"] = g.nodes;
    out["values"] = g.values;
    return out;
}

/// Resolve a character by CLI name: canonical names assigned at enumeration
/// ("trivial", "sgn", "eta1", "eta2", "hom<k>", orthogonal bit strings), or a
/// comma-separated bit vector over the simple roots for any system.
inline const TwoCharacter* resolve_character(const ReflectionGroup& w,
                                             const std::vector<TwoCharacter>& chars,
                                             const std::string& name) {
    for (const TwoCharacter& c : chars)
        if (c.name == name) return &c;
    // bit-vector form: one bit per simple root, 1 = value -1 on that reflection
    std::vector<int> bits;
    {
        std::istringstream is(name);
        std::string tok;
        bool ok = !name.empty();
        while (std::getline(is, tok, ',')) {
            if (tok == "0")
                bits.push_back(0);
            else if (tok == "1")
                bits.push_back(1);
            else {
                ok = false;
                break;
            }
        }
        if (!ok || bits.size() != w.root_system().simple.size()) return nullptr;
    }
    for (const TwoCharacter& c : chars) {
        bool match = true;
        for (std::size_t k = 0; k < bits.size(); ++k) {
            int v = c.values[static_cast<std::size_t>(w.simple_reflection(static_cast<int>(k)))];
            if (v != (bits[k] ? -1 : 1)) match = false;
        }
        if (match) return &c;
    }
    return nullptr;
}

/// One verification record, and the JSON report the CLI suites emit.
struct CheckRecord {
    std::string check;
    json config;
    double statistic = 0.0;
    double tolerance = 0.0;
    bool pass = false;
};

struct Report {
    std::string suite;
    std::vector<CheckRecord> records;

    bool all_pass() const {
        for (const CheckRecord& r : records)
            if (!r.pass) return false;
        return true;
    }

    void add(std::string check, json config, double statistic, double tolerance, bool pass) {
        records.push_back(CheckRecord{std::move(check), std::move(config), statistic, tolerance, pass});
    }

    /// statistic <= tolerance convenience form
    void add_le(std::string check, json config, double statistic, double tolerance) {
        bool ok = statistic <= tolerance;
        add(std::move(check), std::move(config), statistic, tolerance, ok);
    }

    json to_json() const {
        json out;
        out["suite"] = suite;
        out["all_pass"] = all_pass();
        json arr = json::array();
        for (const CheckRecord& r : records) {
            json rec;
            rec["check"] = r.check;
            rec["config"] = r.config;
            rec["statistic"] = r.statistic;
            rec["tolerance"] = r.tolerance;
            rec["pass"] = r.pass;
            arr.push_back(std::move(rec));
        }
        out["checks"] = std::move(arr);
        return out;
    }
};

}  // namespace weylheat
