#include <doctest.h>

#include <filesystem>
#include <fstream>

#include "gridhfk/error.hpp"
#include "gridhfk/io.hpp"

using namespace gridhfk;
namespace fs = std::filesystem;

namespace {

std::string error_text(auto&& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.what();
    }
    return "";
}

fs::path temp_dir() {
    auto d = fs::temp_directory_path() / "gridhfk_io_test";
    fs::create_directories(d);
    return d;
}

}  // namespace

TEST_SUITE("io") {

TEST_CASE("grid files") {
    auto g = parse_grid("# trefoil\n5\n1 0 4 3 2   # xs\n4 3 2 1 0\n");
    CHECK(g.n() == 5);
    CHECK(g.xs() == std::vector<int>{1, 0, 4, 3, 2});
    CHECK(parse_grid(format_grid(g)).same_markers(g));

    auto msg = error_text([] { parse_grid("2\n0 x\n1 0\n"); });
    CHECK(msg.find("ParseError") != std::string::npos);
    CHECK(msg.find("2:3") != std::string::npos);
    CHECK(error_text([] { parse_grid("3\n0 1 2\n"); }).find("ParseError") != std::string::npos);
    CHECK(error_text([] { parse_grid("3\n0 1\n1 0\n"); }).find("ParseError") != std::string::npos);
    CHECK(error_text([] { parse_grid("2\n0 1\n0 1\n"); }).find("SharedCell") != std::string::npos);
    CHECK(error_text([] { parse_grid("2\n0 1\n1 0\n5\n"); }).find("ParseError") != std::string::npos);
}

TEST_CASE("script files") {
    auto s = parse_script("start library E(1,1)\n# comment\nT col 1\n\nR\n", ".");
    CHECK(s.start.same_markers(builtin_library("E(1,1)")));
    REQUIRE(s.moves.size() == 2);
    CHECK(s.moves[1] == GridMove::rotation());

    auto dir = temp_dir();
    {
        std::ofstream(dir / "u.grid") << format_grid(builtin_library("unknot2"));
        std::ofstream(dir / "u.script") << "start u.grid\nS X 0 NW\n";
    }
    auto t = read_script_file(dir / "u.script");
    CHECK(t.end().n() == 3);
    CHECK(error_text([] { parse_script("C col 0\n", "."); }).find("ParseError") != std::string::npos);
    // illegal moves are caught at parse time
    CHECK(error_text([] { parse_script("start library unknot2\nC col 0\n", "."); }).find("IllegalMove") !=
          std::string::npos);
}

TEST_CASE("bigraded dims json") {
    BigradedDims d;
    d.add({0, 1}, 1);
    d.add({-2, -1}, 1);
    d.add({-1, 0}, 1);
    auto j = to_json(d);
    CHECK(j.dump() == R"({"ranks":[[-2,-1,1],[-1,0,1],[0,1,1]]})");
    CHECK(dims_from_json(j) == d);
    auto m = to_json(en_tables(5, 1).second);
    CHECK(m["tail"]["step"] == nlohmann::json::array({-2, -1}));
    CHECK(m["tail"]["from"] == nlohmann::json::array({0, 0}));
}

TEST_CASE("legendrian report json") {
    auto g = builtin_library("unknot2");
    auto r = check_grading_theorem(g);
    auto j = legendrian_report_json(g, r, true, true);
    for (const char* key : {"grid", "tb", "rot", "sl", "x_plus", "x_minus", "identities"}) CHECK(j.contains(key));
    CHECK(j["x_plus"]["alexander"] == 0);
    CHECK(j["identities"].size() == r.identities.size());
}

TEST_CASE("slice cache round trip") {
    auto g = builtin_library("figure8");
    BuildOptions opt;
    opt.alexander = {0, 1};
    auto c = build_slices(g, opt);
    auto file = temp_dir() / "fig8.slices";
    write_slice_cache(c, file);
    auto back = read_slice_cache(g, opt.alexander, file);
    REQUIRE(back.has_value());
    REQUIRE(back->slices().size() == c.slices().size());
    for (auto& [b, s] : c.slices()) {
        CHECK(back->slice(b)->states == s.states);
        CHECK(back->slice(b)->boundary_out == s.boundary_out);
    }
    CHECK_FALSE(read_slice_cache(builtin_library("trefoil_rh"), opt.alexander, file).has_value());
    CHECK_FALSE(read_slice_cache(g, {0}, file).has_value());

    auto cached = build_slices_cached(g, opt, temp_dir() / "cache");
    auto again = build_slices_cached(g, opt, temp_dir() / "cache");
    CHECK(again.num_states() == cached.num_states());
}

}  // TEST_SUITE
