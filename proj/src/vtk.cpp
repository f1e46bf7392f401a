#include "gliosim/vtk.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "gliosim/errors.hpp"

namespace gliosim {

namespace {

std::string fmt(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

std::string next_token(std::istream& in, const std::string& path) {
    std::string tok;
    if (!(in >> tok))
        throw data_error(path + ": unexpected end of file");
    return tok;
}

void expect_token(std::istream& in, const std::string& want, const std::string& path) {
    const std::string got = next_token(in, path);
    if (got != want)
        throw data_error(path + ": expected '" + want + "', found '" + got + "'");
}

int parse_count(std::istream& in, const std::string& path) {
    const std::string tok = next_token(in, path);
    try {
        std::size_t used = 0;
        const int v = std::stoi(tok, &used);
        if (used != tok.size() || v < 1) throw std::invalid_argument(tok);
        return v;
    } catch (const std::exception&) {
        throw data_error(path + ": expected a positive integer, found '" + tok + "'");
    }
}

double parse_value(std::istream& in, const std::string& path) {
    const std::string tok = next_token(in, path);
    try {
        std::size_t used = 0;
        const double v = std::stod(tok, &used);
        if (used != tok.size()) throw std::invalid_argument(tok);
        return v;
    } catch (const std::exception&) {
        throw data_error(path + ": expected a number, found '" + tok + "'");
    }
}

}  // namespace

void write_vtk(const ScalarField& u, const std::string& path, const MaterialVolume* materials) {
    const Grid& g = u.grid;
    if (u.values.size() != static_cast<std::size_t>(g.num_points()))
        throw std::invalid_argument("write_vtk: field length does not match its grid");
    if (materials && materials->labels.size() != u.values.size())
        throw std::invalid_argument("write_vtk: material volume does not match the field grid");

    std::ofstream out(path);
    if (!out)
        throw data_error("cannot open " + path + " for writing");

    out << "# vtk DataFile Version 3.0\n"
        << "tumor density snapshot\n"
        << "ASCII\n"
        << "DATASET STRUCTURED_POINTS\n"
        << "DIMENSIONS " << g.nx << ' ' << g.ny << ' ' << g.nz << '\n'
        << "SPACING " << fmt(g.h) << ' ' << fmt(g.h) << ' ' << fmt(g.h) << '\n'
        << "ORIGIN " << fmt(g.origin[0]) << ' ' << fmt(g.origin[1]) << ' ' << fmt(g.origin[2])
        << '\n'
        << "POINT_DATA " << g.num_points() << '\n'
        << "SCALARS tumor_density float 1\n"
        << "LOOKUP_TABLE default\n";
    for (double v : u.values) out << fmt(v) << '\n';

    if (materials) {
        out << "SCALARS material int 1\n"
            << "LOOKUP_TABLE default\n";
        for (Material m : materials->labels) out << static_cast<int>(m) << '\n';
    }

    out.flush();
    if (!out)
        throw data_error("write failed: " + path);
}

ScalarField read_vtk(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw data_error("cannot open " + path);

    std::string line;
    if (!std::getline(in, line) || line.rfind("# vtk DataFile", 0) != 0)
        throw data_error(path + ": missing '# vtk DataFile' header");
    if (!std::getline(in, line))
        throw data_error(path + ": missing title line");

    expect_token(in, "ASCII", path);
    expect_token(in, "DATASET", path);
    expect_token(in, "STRUCTURED_POINTS", path);

    expect_token(in, "DIMENSIONS", path);
    const int nx = parse_count(in, path);
    const int ny = parse_count(in, path);
    const int nz = parse_count(in, path);

    expect_token(in, "SPACING", path);
    const double hx = parse_value(in, path);
    const double hy = parse_value(in, path);
    const double hz = parse_value(in, path);
    if (!(hx > 0.0) || hx != hy || hy != hz)
        throw data_error(path + ": spacing must be positive and isotropic");

    expect_token(in, "ORIGIN", path);
    std::array<double, 3> origin{};
    for (double& o : origin) o = parse_value(in, path);

    expect_token(in, "POINT_DATA", path);
    const int n = parse_count(in, path);
    if (static_cast<std::int64_t>(n) != static_cast<std::int64_t>(nx) * ny * nz)
        throw data_error(path + ": POINT_DATA count disagrees with DIMENSIONS");

    expect_token(in, "SCALARS", path);
    expect_token(in, "tumor_density", path);
    next_token(in, path);  // declared type
    next_token(in, path);  // component count
    expect_token(in, "LOOKUP_TABLE", path);
    next_token(in, path);  // table name

    ScalarField field;
    field.grid = Grid(nx, ny, nz, hx, origin);
    field.values.resize(static_cast<std::size_t>(n));
    for (double& v : field.values) v = parse_value(in, path);
    return field;
}

void write_metrics_csv(const std::vector<StepMetrics>& series, const std::string& path) {
    std::ofstream out(path);
    if (!out)
        throw data_error("cannot open " + path + " for writing");

    out << "step,time_days,total_mass,max_density,radius_mm\n";
    for (const StepMetrics& m : series)
        out << m.step << ',' << fmt(m.time) << ',' << fmt(m.total_mass) << ',' << fmt(m.max_density)
            << ',' << fmt(m.radius) << '\n';

    out.flush();
    if (!out)
        throw data_error("write failed: " + path);
}

}  // namespace gliosim
