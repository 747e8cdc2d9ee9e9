// File formats: jet points as JSON objects, trajectories and Frenet data
// as CSV with full double precision.
#pragma once

#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "flow.hpp"
#include "jet_point.hpp"

namespace varjet {

inline std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

// --- jet point JSON ----------------------------------------------------------

inline nlohmann::ordered_json to_json(const ContactJet& j) {
    nlohmann::ordered_json o;
    o["order"] = j.order;
    o["dim"] = j.dim;
    o["t"] = j.t;
    o["x"] = j.x;
    o["derivs"] = j.derivs;
    return o;
}

inline ContactJet contact_jet_from_json(const nlohmann::json& o) {
    ContactJet j;
    j.order = o.at("order").get<int>();
    j.dim = o.at("dim").get<int>();
    j.t = o.at("t").get<double>();
    j.x = o.at("x").get<std::vector<double>>();
    j.derivs = o.at("derivs").get<std::vector<std::vector<double>>>();
    if (int(j.x.size()) != j.dim || int(j.derivs.size()) != j.order)
        throw Error("contact jet: inconsistent dimensions");
    for (const auto& row : j.derivs)
        if (int(row.size()) != j.dim) throw Error("contact jet: inconsistent row width");
    return j;
}

inline nlohmann::ordered_json to_json(const VelocityJet& w) {
    nlohmann::ordered_json o;
    o["order"] = w.order;
    o["coords"] = w.coords;
    return o;
}

inline VelocityJet velocity_jet_from_json(const nlohmann::json& o) {
    VelocityJet w;
    w.order = o.at("order").get<int>();
    w.coords = o.at("coords").get<std::vector<std::vector<double>>>();
    if (int(w.coords.size()) != w.order + 1) throw Error("velocity jet: row count != order + 1");
    w.dim = w.coords.empty() ? 0 : int(w.coords[0].size());
    for (const auto& row : w.coords)
        if (int(row.size()) != w.dim) throw Error("velocity jet: inconsistent row width");
    return w;
}

inline nlohmann::json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open " + path);
    nlohmann::json o;
    in >> o;
    return o;
}

template <class J>
void save_json(const J& obj, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw Error("cannot write " + path);
    out << to_json(obj).dump(2) << "\n";
}

// --- trajectory CSV ----------------------------------------------------------

inline std::string trajectory_csv(const Trajectory& tr) {
    std::ostringstream out;
    out << "t,x1,x2,v1,v2,a1,a2\n";
    for (const TrajectorySample& s : tr.samples) {
        out << format_double(s.t) << ',' << format_double(s.x[0]) << ','
            << format_double(s.x[1]) << ',' << format_double(s.v[0]) << ','
            << format_double(s.v[1]) << ',' << format_double(s.vp[0]) << ','
            << format_double(s.vp[1]) << "\n";
    }
    return out.str();
}

inline void save_trajectory_csv(const Trajectory& tr, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw Error("cannot write " + path);
    out << trajectory_csv(tr);
}

// Reads samples back; v'' is re-solved from the affine system so the
// result satisfies the Trajectory invariant.
inline Trajectory load_trajectory_csv(const std::string& path, const MetricConfig& m,
                                      const GeometryParams& gp) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open " + path);
    std::string line;
    if (!std::getline(in, line) || line.rfind("t,x1,x2,v1,v2,a1,a2", 0) != 0)
        throw Error("trajectory csv: bad header in " + path);
    Trajectory tr;
    tr.metric = m;
    tr.params = gp;
    auto fld = invariant_abc(m, gp);
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        TrajectorySample s;
        double vals[7];
        std::istringstream ls(line);
        std::string cell;
        for (int k = 0; k < 7; ++k) {
            if (!std::getline(ls, cell, ',')) throw Error("trajectory csv: short row");
            vals[k] = std::stod(cell);
        }
        s.t = vals[0];
        s.x = {vals[1], vals[2]};
        s.v = {vals[3], vals[4]};
        s.vp = {vals[5], vals[6]};
        s.vpp = solve_top_order(fld, s.t, s.x, s.v, s.vp);
        tr.samples.push_back(s);
    }
    return tr;
}

inline std::string frenet_csv(const FrenetData& fd) {
    std::ostringstream out;
    out << "s,kappa1,kappa2\n";
    for (size_t k = 0; k < fd.s.size(); ++k)
        out << format_double(fd.s[k]) << ',' << format_double(fd.kappa1[k]) << ','
            << format_double(fd.kappa2[k]) << "\n";
    return out.str();
}

inline void save_frenet_csv(const FrenetData& fd, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw Error("cannot write " + path);
    out << frenet_csv(fd);
}

} // namespace varjet
