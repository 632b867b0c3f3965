#pragma once

#include <bott/character.hpp>
#include <bott/poly.hpp>
#include <bott/rational.hpp>

#include <json.hpp>

#include <cstddef>
#include <string>
#include <vector>

namespace bott {

// What a CLI invocation reports.  Scalar results hold one decimal string;
// polynomial results hold the coefficients by ascending power.
struct RunReport {
    std::string command;
    std::vector<std::string> result;
    bool polynomial = false;
    std::size_t fixpoints = 0;
    WeightVector weights;
    long elapsed_ms = 0;

    struct Check {
        std::string name;
        bool pass = false;
        std::string detail;
    };
    std::vector<Check> checks;
};

inline std::string poly_text(const Poly& p, const std::string& var) {
    if (p.zero()) return "0";
    std::string s;
    for (long k = p.degree(); k >= 0; --k) {
        Rat c = p.coeff(static_cast<std::size_t>(k));
        if (c == 0) continue;
        const bool neg = c < 0;
        if (s.empty()) {
            if (neg) s += "-";
        } else {
            s += neg ? " - " : " + ";
        }
        Rat a = abs(c);
        const bool unit = a == 1 && k > 0;
        if (!unit) s += to_string(a);
        if (k > 0) {
            if (!unit) s += "*";
            s += var;
            if (k > 1) s += "^" + std::to_string(k);
        }
    }
    return s;
}

inline std::vector<std::string> poly_coefficients(const Poly& p) {
    std::vector<std::string> out;
    out.reserve(p.c.size());
    for (const Rat& c : p.c) out.push_back(to_string(c));
    if (out.empty()) out.push_back("0");
    return out;
}

inline std::string render_text(const RunReport& r) {
    std::string s;
    s += "command: " + r.command + "\n";
    if (r.polynomial) {
        Poly p;
        for (const auto& c : r.result) {
            Rat q(c);
            q.canonicalize();
            p.c.push_back(q);
        }
        p.trim();
        s += "result: " + poly_text(p, "n") + "\n";
    } else if (!r.result.empty()) {
        s += "result: " + r.result.front() + "\n";
    }
    s += "fixpoints: " + std::to_string(r.fixpoints) + "\n";
    s += "weights:";
    for (Weight w : r.weights) s += " " + std::to_string(w);
    s += "\n";
    for (const auto& c : r.checks) {
        s += std::string(c.pass ? "PASS" : "FAIL") + " " + c.name;
        if (!c.detail.empty()) s += " (" + c.detail + ")";
        s += "\n";
    }
    s += "elapsed_ms: " + std::to_string(r.elapsed_ms) + "\n";
    return s;
}

inline std::string render_json(const RunReport& r) {
    nlohmann::ordered_json j;
    j["command"] = r.command;
    if (r.polynomial) {
        j["result"] = r.result;
    } else {
        j["result"] = r.result.empty() ? "" : r.result.front();
    }
    j["fixpoints"] = r.fixpoints;
    j["weights"] = r.weights;
    j["elapsed_ms"] = r.elapsed_ms;
    nlohmann::ordered_json checks = nlohmann::ordered_json::array();
    for (const auto& c : r.checks) {
        nlohmann::ordered_json jc;
        jc["name"] = c.name;
        jc["pass"] = c.pass;
        jc["detail"] = c.detail;
        checks.push_back(jc);
    }
    j["checks"] = checks;
    return j.dump(2) + "\n";
}

}  // namespace bott
