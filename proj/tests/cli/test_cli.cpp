#include <doctest.h>

#include "freedist/report.hpp"
#include "support/frames.hpp"

#include <cstdio>
#include <fstream>
#include <random>
#include <sys/wait.h>

using namespace freedist;

namespace {

struct Run {
    int code = -1;
    std::string out;
};

std::string quote(const std::string& s)
{
    std::string q = "'";
    for (char c : s) q += c == '\'' ? std::string("'\\''") : std::string(1, c);
    return q + "'";
}

Run run(const std::string& args)
{
    Run r;
    FILE* pipe = popen((quote(FREEDIST_CLI) + " " + args + " 2>&1").c_str(), "r");
    REQUIRE(pipe != nullptr);
    char buffer[4096];
    std::size_t n = 0;
    while ((n = fread(buffer, 1, sizeof buffer, pipe)) > 0) r.out.append(buffer, n);
    const int status = pclose(pipe);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

std::string fixture(const std::string& name)
{
    return quote(std::string(FIXTURE_DIR) + "/" + name);
}

std::string temp_file(const std::string& name, const std::string& text)
{
    const std::string path = std::string(TEST_TMP_DIR) + "/" + name;
    std::ofstream(path) << text;
    return quote(path);
}

}  // namespace

TEST_CASE("analyze the shipped fixtures")
{
    for (int l = 4; l <= 6; ++l) {
        Run r = run("analyze " + fixture("armstrong_l" + std::to_string(l) + ".frame"));
        REQUIRE(r.code == 0);
        auto j = nlohmann::json::parse(r.out);
        CHECK(j["flat"] == false);
        CHECK(j["kappa11_deg2_zero"] == true);
        CHECK(j["extension_verdict"] == "NormalAtComputedOrder");
        Analysis a = parse_report(j);
        REQUIRE(a.curvature.P.entries().size() == 1);
        CHECK(a.curvature.P({3, 4, 1, 1, 2}) == Polynomial(1));
        CHECK(report_json(a) == j);
    }
    for (int l = 4; l <= 5; ++l) {
        Run r = run("analyze " + fixture("flat_l" + std::to_string(l) + ".frame"));
        REQUIRE(r.code == 0);
        auto j = nlohmann::json::parse(r.out);
        CHECK(j["flat"] == true);
        CHECK(j["P"].empty());
        CHECK(j["structure_functions"].empty());
    }
    Run text = run("analyze --format text " + fixture("armstrong_l4.frame"));
    CHECK(text.code == 0);
    CHECK(text.out.find("P^[34]_1[12] = 1") != std::string::npos);
}

TEST_CASE("analyze exit codes")
{
    Run truncated = run("analyze " + temp_file("truncated.frame", "l: 4\nX1: Dx1 - x2*Dy[1,2\n"));
    CHECK(truncated.code == 1);
    CHECK(truncated.out.find("line 2") != std::string::npos);
    CHECK(run("analyze " + temp_file("missing.frame", "")).code == 1);
    CHECK(run("analyze /nonexistent/frame").code == 1);

    auto text = testsupport::flat_field_text(4);
    text[1] = text[0];
    CHECK(run("analyze " + temp_file("degenerate.frame", testsupport::frame_file_text(text))).code == 2);
    CHECK(run("analyze " + temp_file("rank3.frame", testsupport::frame_file_text(testsupport::flat_field_text(3)))).code == 3);
}

TEST_CASE("algebra-check")
{
    Run r = run("algebra-check --l 4");
    CHECK(r.code == 0);
    CHECK(r.out.find("PASS") != std::string::npos);
    CHECK(r.out.find("FAIL") == std::string::npos);
    Run small = run("algebra-check --l 3");
    CHECK(small.code == 0);
    CHECK(small.out.find("FAIL") == std::string::npos);
    CHECK(run("algebra-check --l 7").code == 3);
}

TEST_CASE("cohomology")
{
    Run r = run("cohomology --l 4 --k 2 --h 1..3");
    REQUIRE(r.code == 0);
    auto j = nlohmann::json::parse(r.out);
    REQUIRE(j["rows"].size() == 3);
    CHECK(j["rows"][0]["dim"] == 60);
    CHECK(j["rows"][1]["dim"] == 0);
    CHECK(j["rows"][2]["dim"] == 0);
    Run one = run("cohomology --l 4 --k 1 --h 0..3");
    REQUIRE(one.code == 0);
    for (const auto& row : nlohmann::json::parse(one.out)["rows"]) CHECK(row["dim"] == 0);
    CHECK(run("cohomology --l 6 --k 2 --h 1..1").code == 3);
}

TEST_CASE("spinor and inclusions")
{
    Run r = run("spinor --l 3 --vector " + quote(R"({"v": {"1": "1", "[2,3]": "1"}})"));
    REQUIRE(r.code == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["pfaffian"] == "1/2*sqrt2");
    CHECK(j["null_cone"] == false);
    CHECK(j["skew"][0][1] == "1/2*sqrt2");
    Run cone = run("spinor --l 3 --vector " + quote(R"({"v": {"1": "2", "2": "-1/3"}})"));
    REQUIRE(cone.code == 0);
    CHECK(nlohmann::json::parse(cone.out)["null_cone"] == true);
    CHECK(run("spinor --l 4 --vector " + quote(R"({"v": {}})")).code == 3);
    CHECK(run("spinor --l 3 --vector " + quote(R"({"v": {"[3,2]": "1"}})")).code == 1);

    Run inc = run("inclusions");
    REQUIRE(inc.code == 0);
    auto rows = nlohmann::json::parse(inc.out);
    REQUIRE(rows.size() == 3);
    CHECK(rows[1]["model"] == "Q5");
}

TEST_CASE("reports round-trip on random frames")
{
    std::mt19937 rng(71);
    for (int n = 0; n < 3; ++n) {
        Analysis a = analyze(build_frame(testsupport::parse_fields(testsupport::random_field_text(4, rng))));
        nlohmann::json j = report_json(a);
        Analysis back = parse_report(nlohmann::json::parse(j.dump()));
        CHECK(back.f.entries() == a.f.entries());
        CHECK(back.connection.A == a.connection.A);
        CHECK(back.connection.E == a.connection.E);
        CHECK(back.connection.F == a.connection.F);
        CHECK(back.curvature.P == a.curvature.P);
        CHECK(back.curvature.R == a.curvature.R);
        CHECK(back.curvature.S == a.curvature.S);
        CHECK(back.curvature.T == a.curvature.T);
        CHECK(back.verdict == a.verdict);
        CHECK(report_json(back) == j);
    }
}
