#include "doctest.h"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#include "gliosim/errors.hpp"
#include "gliosim/imaging.hpp"

using gliosim::Grid;
using gliosim::ImageStack;
using gliosim::Material;
using gliosim::MaterialVolume;
using gliosim::SimConfig;
using gliosim::data_error;

namespace {

std::string tmp_path(const std::string& name) {
    return (std::filesystem::temp_directory_path() / name).string();
}

void write_pgm(const std::string& path, int w, int h, const std::vector<std::uint8_t>& px,
               bool with_comment = false) {
    std::ofstream out(path, std::ios::binary);
    REQUIRE(static_cast<bool>(out));
    out << "P5\n";
    if (with_comment) out << "# synthetic slice\n";
    out << w << ' ' << h << "\n255\n";
    out.write(reinterpret_cast<const char*>(px.data()), static_cast<std::streamsize>(px.size()));
}

void write_bytes(const std::string& path, const std::string& header,
                 const std::vector<std::uint8_t>& bytes) {
    std::ofstream out(path, std::ios::binary);
    REQUIRE(static_cast<bool>(out));
    out << header;
    out.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
}

}  // namespace

TEST_SUITE("imaging") {

TEST_CASE("classify follows the intensity bands") {
    const SimConfig cfg;  // air <= 1 < white <= 230 < gray <= 240 < skull
    CHECK(gliosim::classify(0, cfg) == Material::Air);
    CHECK(gliosim::classify(1, cfg) == Material::Air);
    CHECK(gliosim::classify(2, cfg) == Material::WhiteMatter);
    CHECK(gliosim::classify(230, cfg) == Material::WhiteMatter);
    CHECK(gliosim::classify(231, cfg) == Material::GrayMatter);
    CHECK(gliosim::classify(240, cfg) == Material::GrayMatter);
    CHECK(gliosim::classify(241, cfg) == Material::Skull);
    CHECK(gliosim::classify(255, cfg) == Material::Skull);
}

TEST_CASE("PGM slices load with comments and exact pixel order") {
    const std::string path = tmp_path("gliosim_t_slice.pgm");
    write_pgm(path, 3, 2, {10, 20, 30, 40, 50, 60}, true);
    const ImageStack s = gliosim::load_stack({path});
    CHECK(s.width == 3);
    CHECK(s.height == 2);
    CHECK(s.num_slices == 1);
    CHECK(s.at(0, 0, 0) == 10);
    CHECK(s.at(2, 0, 0) == 30);
    CHECK(s.at(0, 1, 0) == 40);
    CHECK(s.at(2, 1, 0) == 60);
    std::remove(path.c_str());
}

TEST_CASE("PGM rejects wrong magic, maxval, and truncation") {
    const std::string path = tmp_path("gliosim_t_bad.pgm");

    write_bytes(path, "P2\n2 2\n255\n", {1, 2, 3, 4});
    CHECK_THROWS_WITH(gliosim::load_stack({path}), doctest::Contains("P5"));

    write_bytes(path, "P5\n2 2\n65535\n", {1, 2, 3, 4});
    CHECK_THROWS_WITH(gliosim::load_stack({path}), doctest::Contains("maxval"));

    write_bytes(path, "P5\n2 2\n255\n", {1, 2, 3});  // one pixel short
    CHECK_THROWS_WITH(gliosim::load_stack({path}), doctest::Contains("truncated"));

    write_bytes(path, "P5\n2\n", {});
    CHECK_THROWS_WITH(gliosim::load_stack({path}), doctest::Contains("truncated header"));

    CHECK_THROWS_WITH(gliosim::load_stack({tmp_path("gliosim_t_missing.pgm")}),
                      doctest::Contains("cannot open"));
    CHECK_THROWS_AS(gliosim::load_stack({}), data_error);
    std::remove(path.c_str());
}

TEST_CASE("stacks require uniform slice dimensions and stack bottom-first") {
    const std::string a = tmp_path("gliosim_t_a.pgm");
    const std::string b = tmp_path("gliosim_t_b.pgm");
    write_pgm(a, 2, 1, {11, 12});
    write_pgm(b, 2, 1, {21, 22});
    const ImageStack s = gliosim::load_stack({a, b});
    CHECK(s.num_slices == 2);
    CHECK(s.at(0, 0, 0) == 11);
    CHECK(s.at(1, 0, 1) == 22);

    write_pgm(b, 3, 1, {1, 2, 3});
    CHECK_THROWS_WITH(gliosim::load_stack({a, b}), doctest::Contains("previous slices"));
    std::remove(a.c_str());
    std::remove(b.c_str());
}

TEST_CASE("raw volumes parse their header strictly") {
    const std::string path = tmp_path("gliosim_t_vol.raw");

    write_bytes(path, "2 2 2\n", {1, 2, 3, 4, 5, 6, 7, 8});
    const ImageStack s = gliosim::load_raw_volume(path);
    CHECK(s.width == 2);
    CHECK(s.num_slices == 2);
    CHECK(s.at(1, 1, 1) == 8);

    write_bytes(path, "2 2\n", {1, 2, 3, 4});
    CHECK_THROWS_WITH(gliosim::load_raw_volume(path), doctest::Contains("bad header"));

    write_bytes(path, "2 2 1 9\n", {1, 2, 3, 4});
    CHECK_THROWS_WITH(gliosim::load_raw_volume(path), doctest::Contains("trailing"));

    write_bytes(path, "2 2 2\n", {1, 2, 3});
    CHECK_THROWS_WITH(gliosim::load_raw_volume(path), doctest::Contains("truncated"));
    std::remove(path.c_str());
}

TEST_CASE("resampling picks the brute-force nearest source, halves rounding down") {
    SimConfig cfg;
    // 0 -> Air, 100 -> WhiteMatter alternating, so adjacent source indices
    // are distinguishable and tie direction is observable.
    for (int src = 1; src <= 7; ++src) {
        std::vector<std::uint8_t> px(static_cast<std::size_t>(src));
        for (int s = 0; s < src; ++s) px[static_cast<std::size_t>(s)] = (s % 2 == 0) ? 0 : 100;
        ImageStack stack;
        stack.width = src;
        stack.height = 1;
        stack.num_slices = 1;
        stack.intensities = px;
        for (int n = 1; n <= 7; ++n) {
            const Grid g(n, 1, 1, 1.0);
            const MaterialVolume mv = gliosim::resample(stack, g, cfg);
            for (int i = 0; i < n; ++i) {
                int best = 0;
                if (n > 1 && src > 1) {
                    const double f = static_cast<double>(i) * (src - 1) / (n - 1);
                    double dist = 1e300;
                    for (int s = 0; s < src; ++s)
                        if (std::abs(f - s) < dist - 1e-12) {  // strict: ties keep the lower index
                            dist = std::abs(f - s);
                            best = s;
                        }
                }
                const Material want = (best % 2 == 0) ? Material::Air : Material::WhiteMatter;
                CHECK(mv.labels[static_cast<std::size_t>(i)] == want);
            }
        }
    }
}

TEST_CASE("resampling at identical dimensions is the identity") {
    SimConfig cfg;
    ImageStack stack;
    stack.width = 3;
    stack.height = 2;
    stack.num_slices = 2;
    stack.intensities = {0, 100, 235, 255, 0, 100, 235, 255, 0, 100, 235, 255};
    const Grid g(3, 2, 2, 1.0);
    const MaterialVolume mv = gliosim::resample(stack, g, cfg);
    for (int k = 0; k < 2; ++k)
        for (int j = 0; j < 2; ++j)
            for (int i = 0; i < 3; ++i) {
                const auto v = static_cast<std::size_t>(gliosim::global_index(i + 1, j + 1, k + 1, g));
                CHECK(mv.labels[v] == gliosim::classify(stack.at(i, j, k), cfg));
            }
}

TEST_CASE("diffusion coefficients follow the material map") {
    SimConfig cfg;
    const Grid g(4, 1, 1, 1.0);
    MaterialVolume mv(g);
    mv.labels = {Material::Air, Material::WhiteMatter, Material::GrayMatter, Material::Skull};
    const gliosim::DiffusionField d = gliosim::diffusion_from_materials(mv, cfg);
    CHECK(d.d[0] == 0.0);
    CHECK(d.d[1] == cfg.d_white);
    CHECK(d.d[2] == cfg.d_gray);
    CHECK(d.d[3] == 0.0);
}

TEST_CASE("matter fractions cover tissue only") {
    const Grid g(5, 1, 1, 1.0);
    MaterialVolume mv(g);
    mv.labels = {Material::Air, Material::WhiteMatter, Material::GrayMatter, Material::GrayMatter,
                 Material::Skull};
    const gliosim::MatterFractions f = gliosim::matter_fractions(mv);
    CHECK(f.white == doctest::Approx(1.0 / 3.0));
    CHECK(f.gray == doctest::Approx(2.0 / 3.0));

    MaterialVolume empty(g);  // all Air
    CHECK_THROWS_WITH(gliosim::matter_fractions(empty), doctest::Contains("no tissue"));
}

TEST_CASE("label volumes round-trip and validate on read") {
    const std::string path = tmp_path("gliosim_t_labels.vol");
    const Grid g(3, 2, 2, 1.0);
    MaterialVolume mv(g);
    for (std::size_t v = 0; v < mv.labels.size(); ++v)
        mv.labels[v] = static_cast<Material>(v % 4);
    gliosim::write_label_volume(mv, path);

    const MaterialVolume back = gliosim::read_label_volume(path, g);
    CHECK(back.labels == mv.labels);

    CHECK_THROWS_WITH(gliosim::read_label_volume(path, Grid(2, 2, 2, 1.0)),
                      doctest::Contains("grid wants"));

    write_bytes(path, "2 1 1\n", {1, 7});
    CHECK_THROWS_WITH(gliosim::read_label_volume(path, Grid(2, 1, 1, 1.0)),
                      doctest::Contains("not a material label"));
    std::remove(path.c_str());
}

}  // TEST_SUITE
