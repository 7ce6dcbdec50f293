#include <doctest.h>
#include <json.hpp>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sys/wait.h>

#include "bookcross/constructions.hpp"
#include "bookcross/drawing_io.hpp"
#include "bookcross/error.hpp"
#include "bookcross/render.hpp"

using namespace bookcross;
using nlohmann::json;

namespace {

struct Run {
    int code;
    std::string out;
};

Run run(const std::string& args) {
    const std::string command = std::string(BOOKCROSS_CLI) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(command.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    std::array<char, 4096> buf{};
    for (std::size_t got; (got = std::fread(buf.data(), 1, buf.size(), pipe)) > 0;) out.append(buf.data(), got);
    const int status = pclose(pipe);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::filesystem::path scratch(const std::string& name) {
    const auto dir = std::filesystem::temp_directory_path() / "bookcross_cli_test";
    std::filesystem::create_directories(dir);
    return dir / name;
}

int count_of(const std::string& text, const std::string& needle) {
    int c = 0;
    for (auto pos = text.find(needle); pos != std::string::npos; pos = text.find(needle, pos + 1)) ++c;
    return c;
}

}  // namespace

TEST_CASE("render produces one panel per page") {
    const auto svg = render_svg(balanced_embedding(5));
    CHECK(svg.rfind("<?xml", 0) == 0);
    CHECK(count_of(svg, "<g id=\"page") == 5);
    CHECK(count_of(svg, "class=\"spine\"") == 5);
    CHECK(count_of(svg, ": 0 crossings") == 5);
    CHECK(count_of(svg, "edge crossed") == 0);

    const auto star = render_svg(BookDrawing(CircularLayout::from_bits("1000"), 1, {0, 0, 0}));
    CHECK(count_of(star, "<g id=\"page") == 1);

    const auto cyclic = render_svg(block_cyclic(4, 5, 3));
    CHECK(count_of(cyclic, "<g id=\"page") == 3);
    CHECK(cyclic.find(", 2 crossings</text>") != std::string::npos);
    CHECK(count_of(cyclic, "class=\"black\"") == 3 * 4);
    CHECK(count_of(cyclic, "class=\"white\"") == 3 * 5);
}

TEST_CASE("render output is deterministic") {
    const auto d = blowup(balanced_embedding(4), 9);
    CHECK(render_svg(d) == render_svg(d));
    CHECK(render_svg(parse_drawing(dump_drawing(d))) == render_svg(d));
    RenderSpec bad;
    bad.columns = 0;
    CHECK_THROWS_AS(render_svg(d, bad), InputError);
}

TEST_CASE("cli count and enumerate") {
    auto r = run("count-drawings 5 7");
    CHECK(r.code == 0);
    CHECK(r.out == "38\n");
    r = run("enumerate 4 5 --emit json");
    CHECK(r.code == 0);
    CHECK(json::parse(r.out).size() == 10);
    r = run("enumerate 2 2");
    CHECK(r.out == "0011\n0101\n");
}

TEST_CASE("cli construct and crossings") {
    auto r = run("construct blowup 3 5 | " + std::string(BOOKCROSS_CLI) + " crossings -");
    CHECK(r.code == 0);
    CHECK(json::parse(r.out)["total"] == 1);

    const auto file = scratch("k45.json");
    r = run("construct block-cyclic 4 5 3 -o " + file.string());
    CHECK(r.code == 0);
    r = run("crossings " + file.string());
    CHECK(json::parse(r.out)["total"] == 2);

    r = run("render " + file.string() + " -o " + scratch("k45.svg").string());
    CHECK(r.code == 0);
    std::ifstream svg(scratch("k45.svg"));
    const std::string text((std::istreambuf_iterator<char>(svg)), std::istreambuf_iterator<char>());
    CHECK(text == render_svg(block_cyclic(4, 5, 3)));

    CHECK(run("construct riskin 3 5").code == 0);
    CHECK(parse_drawing(run("construct balanced 6").out) == balanced_embedding(6));
}

TEST_CASE("cli verify-pagenumber") {
    const auto log = scratch("k45.log");
    std::filesystem::remove(log);
    const auto cnf_dir = scratch("cnf");
    std::filesystem::remove_all(cnf_dir);
    auto r = run("verify-pagenumber 4 5 3 --jobs 2 --log " + log.string() + " --export-cnf " + cnf_dir.string());
    CHECK(r.code == 0);
    const auto doc = json::parse(r.out);
    CHECK(doc["verdict"] == "proven");
    CHECK(doc["log"].size() == 10);
    for (const auto& rec : doc["log"]) CHECK(rec["verdict"] == "not_colorable");
    CHECK(std::distance(std::filesystem::directory_iterator(cnf_dir), std::filesystem::directory_iterator()) == 10);

    std::ifstream in(log);
    int lines = 0;
    for (std::string line; std::getline(in, line);) {
        const auto rec = json::parse(line);
        CHECK(rec.contains("canonical_string"));
        CHECK(rec.contains("millis"));
        ++lines;
    }
    CHECK(lines == 10);

    // resuming appends nothing new
    r = run("verify-pagenumber 4 5 3 --resume --log " + log.string());
    CHECK(r.code == 0);
    std::ifstream again(log);
    lines = 0;
    for (std::string line; std::getline(again, line);) ++lines;
    CHECK(lines == 10);

    r = run("verify-pagenumber 4 4 3 --witness " + scratch("w.json").string());
    CHECK(r.code == 1);
    CHECK(json::parse(r.out)["verdict"] == "refuted");
    CHECK(json::parse(run("crossings " + scratch("w.json").string()).out)["total"] == 0);
}

TEST_CASE("cli bounds and oracle") {
    auto r = run("bounds 3 5");
    CHECK(r.code == 0);
    bool saw_main1 = false;
    for (const auto& row : json::parse(r.out)) {
        CHECK(row.contains("valid"));
        if (row["formula"] == "main1") {
            saw_main1 = true;
            CHECK(row["value"] == "1");
            CHECK(row["m"] == 4);
        }
    }
    CHECK(saw_main1);
    r = run("bounds 4 30 --scan");
    CHECK(r.code == 0);
    CHECK_FALSE(json::parse(r.out)["violations"].empty());

    r = run("oracle 3 3 2");
    CHECK(r.code == 0);
    const auto doc = json::parse(r.out);
    CHECK(doc["value"] == 1);
    for (const char* key : {"m", "n", "k", "nodes", "millis"}) CHECK(doc.contains(key));
    CHECK(run("oracle 6 6 2").code == 65);
}

TEST_CASE("cli errors") {
    CHECK(run("").code == 64);
    CHECK(run("count-drawings").code == 64);
    CHECK(run("count-drawings x 3").code == 64);
    CHECK(run("frobnicate").code == 64);
    CHECK(run("--help").code == 0);
    const auto bad = scratch("bad.json");
    std::ofstream(bad) << "{\"m\": 2, \"n\": ";
    CHECK(run("crossings " + bad.string()).code == 65);
    std::ofstream(bad) << R"({"m":1,"n":1,"k":1,"order":["b0","w0"],"edges":[[0,0,3]]})";
    CHECK(run("crossings " + bad.string()).code == 65);
    CHECK(run("crossings /nonexistent/file.json").code == 65);
}
