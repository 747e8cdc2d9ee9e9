// Residual reports emitted by the verification drivers.  Rendering uses
// fixed printf formatting so that a given configuration produces
// byte-identical output.
#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "io.hpp"

namespace varjet {

struct CheckLine {
    std::string name;
    long samples = 0;
    double max_abs = 0.0;
    double mean_abs = 0.0;
    double threshold = 0.0;
    bool pass = false;
    std::string note;  // skips, exclusions
    std::string worst; // offending sample coordinates when failing
};

struct ResidualReport {
    std::string title;
    std::vector<std::pair<std::string, std::string>> meta;
    std::vector<CheckLine> checks;

    bool pass() const {
        for (const CheckLine& c : checks)
            if (!c.pass) return false;
        return true;
    }

    std::string render_text() const {
        std::string out = "varjet " + title + "\n";
        for (const auto& [k, v] : meta) out += k + " = " + v + "\n";
        for (const CheckLine& c : checks) {
            out += (c.pass ? "[PASS] " : "[FAIL] ") + c.name + ": samples=" +
                   std::to_string(c.samples) + " max_abs=" + format_double(c.max_abs) +
                   " mean_abs=" + format_double(c.mean_abs) +
                   " threshold=" + format_double(c.threshold) + "\n";
            if (!c.note.empty()) out += "       note: " + c.note + "\n";
            if (!c.pass && !c.worst.empty()) out += "       worst sample: " + c.worst + "\n";
        }
        out += pass() ? "RESULT: PASS\n" : "RESULT: FAIL\n";
        return out;
    }

    std::string render_json() const {
        nlohmann::ordered_json o;
        o["title"] = title;
        for (const auto& [k, v] : meta) o["meta"][k] = v;
        o["checks"] = nlohmann::ordered_json::array();
        for (const CheckLine& c : checks) {
            nlohmann::ordered_json l;
            l["name"] = c.name;
            l["samples"] = c.samples;
            l["max_abs"] = c.max_abs;
            l["mean_abs"] = c.mean_abs;
            l["threshold"] = c.threshold;
            l["pass"] = c.pass;
            if (!c.note.empty()) l["note"] = c.note;
            if (!c.pass && !c.worst.empty()) l["worst"] = c.worst;
            o["checks"].push_back(l);
        }
        o["pass"] = pass();
        return o.dump(2) + "\n";
    }

    std::string render_csv() const {
        std::string out = "name,samples,max_abs,mean_abs,threshold,pass\n";
        for (const CheckLine& c : checks)
            out += c.name + "," + std::to_string(c.samples) + "," + format_double(c.max_abs) +
                   "," + format_double(c.mean_abs) + "," + format_double(c.threshold) + "," +
                   (c.pass ? "true" : "false") + "\n";
        return out;
    }

    std::string render(const std::string& format) const {
        if (format == "json") return render_json();
        if (format == "csv") return render_csv();
        return render_text();
    }
};

// Accumulates |residual| statistics plus the argmax sample description.
struct ResidualStat {
    long n = 0;
    double max_abs = 0.0;
    double sum_abs = 0.0;
    std::string worst;

    void add(double value, const std::string& where) {
        double a = std::abs(value);
        ++n;
        sum_abs += a;
        if (a >= max_abs) {
            max_abs = a;
            worst = where;
        }
    }

    CheckLine line(const std::string& name, double threshold) const {
        CheckLine c;
        c.name = name;
        c.samples = n;
        c.max_abs = max_abs;
        c.mean_abs = n ? sum_abs / double(n) : 0.0;
        c.threshold = threshold;
        c.pass = max_abs <= threshold;
        c.worst = worst;
        return c;
    }
};

inline std::string describe(const ContactJet& j) {
    std::string s = "t=" + format_double(j.t) + " x=[";
    for (int i = 0; i < j.dim; ++i) s += (i ? "," : "") + format_double(j.x[i]);
    s += "] derivs=[";
    for (int r = 0; r < j.order; ++r) {
        s += r ? ",[" : "[";
        for (int i = 0; i < j.dim; ++i) s += (i ? "," : "") + format_double(j.derivs[r][i]);
        s += "]";
    }
    return s + "]";
}

inline std::string describe(const VelocityJet& w) {
    std::string s = "coords=[";
    for (size_t r = 0; r < w.coords.size(); ++r) {
        s += r ? ",[" : "[";
        for (int a = 0; a < w.dim; ++a) s += (a ? "," : "") + format_double(w.coords[r][a]);
        s += "]";
    }
    return s + "]";
}

} // namespace varjet
