#include "gliosim/imaging.hpp"

#include <cctype>
#include <cmath>
#include <fstream>
#include <sstream>

#include "gliosim/errors.hpp"

namespace gliosim {

namespace {

// Reads one PGM header token, skipping whitespace and '#' comment lines.
std::string pgm_token(std::istream& in, const std::string& path) {
    std::string tok;
    int c;
    while ((c = in.get()) != EOF) {
        if (c == '#') {
            while ((c = in.get()) != EOF && c != '\n') {}
            continue;
        }
        if (std::isspace(c)) continue;
        tok.push_back(static_cast<char>(c));
        while ((c = in.peek()) != EOF && !std::isspace(c) && c != '#')
            tok.push_back(static_cast<char>(in.get()));
        return tok;
    }
    throw data_error("pgm: '" + path + "': truncated header");
}

int pgm_int(std::istream& in, const std::string& path, const char* what) {
    std::string tok = pgm_token(in, path);
    try {
        std::size_t pos = 0;
        int v = std::stoi(tok, &pos);
        if (pos != tok.size() || v < 0) throw std::invalid_argument("bad");
        return v;
    } catch (const std::exception&) {
        throw data_error("pgm: '" + path + "': bad " + what + " '" + tok + "'");
    }
}

void load_pgm(const std::string& path, int& width, int& height, std::vector<std::uint8_t>& out) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw data_error("pgm: cannot open '" + path + "'");
    std::string magic = pgm_token(in, path);
    if (magic != "P5") throw data_error("pgm: '" + path + "': magic is '" + magic + "', expected P5");
    width = pgm_int(in, path, "width");
    height = pgm_int(in, path, "height");
    int maxval = pgm_int(in, path, "maxval");
    if (maxval != 255)
        throw data_error("pgm: '" + path + "': maxval " + std::to_string(maxval) + ", expected 255");
    in.get();  // single whitespace byte after maxval
    std::size_t n = static_cast<std::size_t>(width) * height;
    std::size_t base = out.size();
    out.resize(base + n);
    in.read(reinterpret_cast<char*>(out.data() + base), static_cast<std::streamsize>(n));
    if (static_cast<std::size_t>(in.gcount()) != n)
        throw data_error("pgm: '" + path + "': truncated pixel data");
}

// Nearest source index for grid index i of n points over src points,
// rounding exact halves down.
int nearest_source(int i, int n, int src) {
    if (n <= 1 || src <= 1) return 0;
    double f = static_cast<double>(i) * (src - 1) / (n - 1);
    int s = static_cast<int>(std::ceil(f - 0.5));
    if (s < 0) s = 0;
    if (s > src - 1) s = src - 1;
    return s;
}

}  // namespace

ImageStack load_stack(const std::vector<std::string>& paths) {
    if (paths.empty()) throw data_error("load_stack: no slice files given");
    ImageStack stack;
    for (const auto& path : paths) {
        int w = 0, h = 0;
        load_pgm(path, w, h, stack.intensities);
        if (stack.num_slices == 0) {
            stack.width = w;
            stack.height = h;
        } else if (w != stack.width || h != stack.height) {
            throw data_error("load_stack: '" + path + "' is " + std::to_string(w) + "x" +
                             std::to_string(h) + ", previous slices are " +
                             std::to_string(stack.width) + "x" + std::to_string(stack.height));
        }
        ++stack.num_slices;
    }
    return stack;
}

ImageStack load_raw_volume(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw data_error("raw volume: cannot open '" + path + "'");
    std::string header;
    if (!std::getline(in, header)) throw data_error("raw volume: '" + path + "': missing header");
    ImageStack stack;
    {
        std::istringstream hs(header);
        if (!(hs >> stack.width >> stack.height >> stack.num_slices) || stack.width < 1 ||
            stack.height < 1 || stack.num_slices < 1)
            throw data_error("raw volume: '" + path + "': bad header '" + header + "'");
        std::string rest;
        if (hs >> rest)
            throw data_error("raw volume: '" + path + "': trailing header token '" + rest + "'");
    }
    std::size_t n = static_cast<std::size_t>(stack.width) * stack.height * stack.num_slices;
    stack.intensities.resize(n);
    in.read(reinterpret_cast<char*>(stack.intensities.data()), static_cast<std::streamsize>(n));
    if (static_cast<std::size_t>(in.gcount()) != n)
        throw data_error("raw volume: '" + path + "': truncated voxel data");
    return stack;
}

Material classify(int intensity, const SimConfig& cfg) {
    if (intensity <= cfg.threshold_air) return Material::Air;
    if (intensity <= cfg.threshold_white) return Material::WhiteMatter;
    if (intensity <= cfg.threshold_gray) return Material::GrayMatter;
    return Material::Skull;
}

MaterialVolume resample(const ImageStack& stack, const Grid& grid, const SimConfig& cfg) {
    if (stack.num_slices < 1 || stack.width < 1 || stack.height < 1)
        throw data_error("resample: degenerate stack");
    MaterialVolume mv(grid);
    for (int k = 0; k < grid.nz; ++k) {
        int sz = nearest_source(k, grid.nz, stack.num_slices);
        for (int j = 0; j < grid.ny; ++j) {
            int sy = nearest_source(j, grid.ny, stack.height);
            for (int i = 0; i < grid.nx; ++i) {
                int sx = nearest_source(i, grid.nx, stack.width);
                std::size_t v = static_cast<std::size_t>(global_index(i + 1, j + 1, k + 1, grid));
                mv.labels[v] = classify(stack.at(sx, sy, sz), cfg);
            }
        }
    }
    return mv;
}

DiffusionField diffusion_from_materials(const MaterialVolume& mv, const SimConfig& cfg) {
    DiffusionField df(mv.grid);
    for (std::size_t v = 0; v < mv.labels.size(); ++v) {
        switch (mv.labels[v]) {
            case Material::WhiteMatter: df.d[v] = cfg.d_white; break;
            case Material::GrayMatter: df.d[v] = cfg.d_gray; break;
            default: df.d[v] = 0.0; break;
        }
    }
    return df;
}

MatterFractions matter_fractions(const MaterialVolume& mv) {
    std::int64_t white = 0, gray = 0;
    for (Material m : mv.labels) {
        if (m == Material::WhiteMatter) ++white;
        if (m == Material::GrayMatter) ++gray;
    }
    std::int64_t tissue = white + gray;
    if (tissue == 0) throw data_error("matter_fractions: volume contains no tissue voxels");
    return {static_cast<double>(white) / tissue, static_cast<double>(gray) / tissue};
}

void write_label_volume(const MaterialVolume& mv, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw data_error("label volume: cannot open '" + path + "'");
    out << mv.grid.nx << ' ' << mv.grid.ny << ' ' << mv.grid.nz << '\n';
    for (Material m : mv.labels) out.put(static_cast<char>(m));
    if (!out) throw data_error("label volume: write failure on '" + path + "'");
}

MaterialVolume read_label_volume(const std::string& path, const Grid& grid) {
    ImageStack raw = load_raw_volume(path);
    if (raw.width != grid.nx || raw.height != grid.ny || raw.num_slices != grid.nz)
        throw data_error("label volume: '" + path + "' is " + std::to_string(raw.width) + "x" +
                         std::to_string(raw.height) + "x" + std::to_string(raw.num_slices) +
                         ", grid wants " + std::to_string(grid.nx) + "x" + std::to_string(grid.ny) +
                         "x" + std::to_string(grid.nz));
    MaterialVolume mv(grid);
    for (std::size_t v = 0; v < raw.intensities.size(); ++v) {
        std::uint8_t b = raw.intensities[v];
        if (b > 3)
            throw data_error("label volume: '" + path + "': byte " + std::to_string(b) +
                             " is not a material label");
        mv.labels[v] = static_cast<Material>(b);
    }
    return mv;
}

}  // namespace gliosim
