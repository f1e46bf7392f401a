#include "gliosim/config.hpp"

#include <cctype>
#include <cstdio>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>

#include "gliosim/errors.hpp"

namespace gliosim {

namespace {

std::string trim(const std::string& s) {
    std::size_t b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    std::size_t e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

double parse_double(const std::string& key, const std::string& value) {
    try {
        std::size_t pos = 0;
        double v = std::stod(value, &pos);
        if (pos != value.size()) throw std::invalid_argument("trailing junk");
        return v;
    } catch (const std::exception&) {
        throw data_error("config: key '" + key + "' has non-numeric value '" + value + "'");
    }
}

int parse_int(const std::string& key, const std::string& value) {
    try {
        std::size_t pos = 0;
        long v = std::stol(value, &pos);
        if (pos != value.size()) throw std::invalid_argument("trailing junk");
        return static_cast<int>(v);
    } catch (const std::exception&) {
        throw data_error("config: key '" + key + "' has non-integer value '" + value + "'");
    }
}

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

}  // namespace

void SimConfig::validate() const {
    auto fail = [](const std::string& key, const std::string& why) {
        throw data_error("config: key '" + key + "' " + why);
    };
    if (rho < 0.0) fail("rho", "must be >= 0");
    if (d_gray < 0.0) fail("d_gray", "must be >= 0");
    if (d_white < d_gray) fail("d_white", "must be >= d_gray");
    if (!(exp_tol > 0.0 && exp_tol < 1.0)) fail("exp_tol", "must lie in (0,1)");
    if (nx < 1) fail("nx", "must be >= 1");
    if (ny < 1) fail("ny", "must be >= 1");
    if (nz < 1) fail("nz", "must be >= 1");
    if (!(h > 0.0)) fail("h", "must be positive");
    if (!(t_end > t0)) fail("t_end", "must be greater than t0");
    if (num_steps < 1) fail("num_steps", "must be >= 1");
    if (!(seed_amplitude >= 0.0)) fail("amplitude", "must be >= 0");
    if (!(seed_width >= 0.0)) fail("width", "must be >= 0");
    if (threshold_air < 0) fail("threshold_air", "must be >= 0");
    if (threshold_white <= threshold_air) fail("threshold_white", "must exceed threshold_air");
    if (threshold_gray <= threshold_white) fail("threshold_gray", "must exceed threshold_white");
    if (threshold_max < threshold_gray || threshold_max > 255)
        fail("threshold_max", "must lie in [threshold_gray, 255]");
    if (slice_thickness < 0.0) fail("slice_thickness", "must be >= 0");
    if (snapshot_every < 1) fail("snapshot_every", "must be >= 1");
    if (!(front_threshold > 0.0 && front_threshold < 1.0)) fail("front_threshold", "must lie in (0,1)");
}

SimConfig parse_config(const std::string& text, const std::string& origin_name) {
    SimConfig cfg;

    // (section, key) -> setter
    std::map<std::pair<std::string, std::string>, std::function<void(const std::string&, const std::string&)>> keys;
    auto dbl = [&](const char* sec, const char* key, double& slot) {
        keys[{sec, key}] = [&slot](const std::string& k, const std::string& v) { slot = parse_double(k, v); };
    };
    auto intk = [&](const char* sec, const char* key, int& slot) {
        keys[{sec, key}] = [&slot](const std::string& k, const std::string& v) { slot = parse_int(k, v); };
    };
    dbl("model", "rho", cfg.rho);
    dbl("model", "d_white", cfg.d_white);
    dbl("model", "d_gray", cfg.d_gray);
    dbl("model", "exp_tol", cfg.exp_tol);
    intk("grid", "nx", cfg.nx);
    intk("grid", "ny", cfg.ny);
    intk("grid", "nz", cfg.nz);
    dbl("grid", "h", cfg.h);
    dbl("grid", "origin_x", cfg.origin[0]);
    dbl("grid", "origin_y", cfg.origin[1]);
    dbl("grid", "origin_z", cfg.origin[2]);
    dbl("time", "t0", cfg.t0);
    dbl("time", "t_end", cfg.t_end);
    intk("time", "num_steps", cfg.num_steps);
    dbl("seed", "center_x", cfg.seed_center[0]);
    dbl("seed", "center_y", cfg.seed_center[1]);
    dbl("seed", "center_z", cfg.seed_center[2]);
    dbl("seed", "amplitude", cfg.seed_amplitude);
    dbl("seed", "width", cfg.seed_width);
    intk("imaging", "threshold_air", cfg.threshold_air);
    intk("imaging", "threshold_white", cfg.threshold_white);
    intk("imaging", "threshold_gray", cfg.threshold_gray);
    intk("imaging", "threshold_max", cfg.threshold_max);
    dbl("imaging", "slice_thickness", cfg.slice_thickness);
    intk("output", "snapshot_every", cfg.snapshot_every);
    dbl("output", "front_threshold", cfg.front_threshold);

    std::istringstream in(text);
    std::string line;
    std::string section;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::size_t hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        if (line.front() == '[') {
            if (line.back() != ']')
                throw data_error(origin_name + ":" + std::to_string(lineno) +
                                 ": unterminated section header '" + line + "'");
            section = trim(line.substr(1, line.size() - 2));
            continue;
        }
        std::size_t eq = line.find('=');
        if (eq == std::string::npos)
            throw data_error(origin_name + ":" + std::to_string(lineno) +
                             ": expected 'key = value', got '" + line + "'");
        std::string key = trim(line.substr(0, eq));
        std::string value = trim(line.substr(eq + 1));
        if (key.empty())
            throw data_error(origin_name + ":" + std::to_string(lineno) + ": empty key");
        auto it = keys.find({section, key});
        if (it == keys.end())
            throw data_error(origin_name + ":" + std::to_string(lineno) + ": unknown key '" + key +
                             "' in section [" + section + "]");
        it->second(key, value);
    }

    cfg.validate();
    return cfg;
}

SimConfig load_config(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw data_error("config: cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_config(buf.str(), path);
}

std::string serialize_config(const SimConfig& cfg) {
    std::ostringstream out;
    out << "[model]\n";
    out << "rho = " << fmt(cfg.rho) << "\n";
    out << "d_white = " << fmt(cfg.d_white) << "\n";
    out << "d_gray = " << fmt(cfg.d_gray) << "\n";
    out << "exp_tol = " << fmt(cfg.exp_tol) << "\n";
    out << "\n[grid]\n";
    out << "nx = " << cfg.nx << "\n";
    out << "ny = " << cfg.ny << "\n";
    out << "nz = " << cfg.nz << "\n";
    out << "h = " << fmt(cfg.h) << "\n";
    out << "origin_x = " << fmt(cfg.origin[0]) << "\n";
    out << "origin_y = " << fmt(cfg.origin[1]) << "\n";
    out << "origin_z = " << fmt(cfg.origin[2]) << "\n";
    out << "\n[time]\n";
    out << "t0 = " << fmt(cfg.t0) << "\n";
    out << "t_end = " << fmt(cfg.t_end) << "\n";
    out << "num_steps = " << cfg.num_steps << "\n";
    out << "\n[seed]\n";
    out << "center_x = " << fmt(cfg.seed_center[0]) << "\n";
    out << "center_y = " << fmt(cfg.seed_center[1]) << "\n";
    out << "center_z = " << fmt(cfg.seed_center[2]) << "\n";
    out << "amplitude = " << fmt(cfg.seed_amplitude) << "\n";
    out << "width = " << fmt(cfg.seed_width) << "\n";
    out << "\n[imaging]\n";
    out << "threshold_air = " << cfg.threshold_air << "\n";
    out << "threshold_white = " << cfg.threshold_white << "\n";
    out << "threshold_gray = " << cfg.threshold_gray << "\n";
    out << "threshold_max = " << cfg.threshold_max << "\n";
    out << "slice_thickness = " << fmt(cfg.slice_thickness) << "\n";
    out << "\n[output]\n";
    out << "snapshot_every = " << cfg.snapshot_every << "\n";
    out << "front_threshold = " << fmt(cfg.front_threshold) << "\n";
    return out.str();
}

SimConfig preset_config(const std::string& name) {
    SimConfig cfg;  // defaults are the 3D reference run
    if (name == "paper-3d") {
        return cfg;
    }
    if (name == "paper-2d") {
        cfg.nx = 193;
        cfg.ny = 193;
        cfg.nz = 1;
        cfg.h = 200.0 / 192.0;
        cfg.seed_center = {110.0, 140.0, 0.0};
        return cfg;
    }
    if (name == "bench-32") {
        cfg.nx = 32;
        cfg.ny = 32;
        cfg.nz = 32;
        cfg.h = 200.0 / 31.0;
        return cfg;
    }
    throw data_error("unknown preset '" + name + "' (expected paper-2d, paper-3d, or bench-32)");
}

}  // namespace gliosim
