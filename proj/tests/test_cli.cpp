#include "doctest.h"
#include "zeta4/cli.hpp"
#include "zeta4/json_io.hpp"

#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

using namespace zeta4;
using json_io::Json;

namespace {

struct Run {
    int code;
    std::string out, err;
    Json doc() const { return Json::parse(out); }
};

Run run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

const char* kSymEta = "3 3 1 1 1 1 1 1";
const char* kBaseEta = "68 57 22 23 24 25 26 27";

std::filesystem::path temp_dir(const std::string& tag) {
    auto p = std::filesystem::temp_directory_path() / ("zeta4_test_" + tag + "_" + std::to_string(::getpid()));
    std::filesystem::remove_all(p);
    std::filesystem::create_directories(p);
    return p;
}

// Every emitted document is already in canonical form.
void check_canonical(const std::string& text) { CHECK(json_io::dump(Json::parse(text)) == text); }

}  // namespace

TEST_CASE("form: symmetric n = 1 with oracle match") {
    const Run r = run({"form", "--eta", kSymEta, "--n", "1"});
    REQUIRE(r.code == 0);
    check_canonical(r.out);
    const Json f = r.doc()["forms"].at(0);
    CHECK(f["oracle"] == "match");
    CHECK(f["u"] == "-72");
    CHECK(f["v_num"] == "-78");
    CHECK(f["v_den"] == "1");
    CHECK(f["family"] == "symmetric");
    CHECK(f["value"].get<std::string>().rfind("0.07272717279805021084773", 0) == 0);
}

TEST_CASE("form: 68/57 family n = 1..2") {
    const Run r = run({"form", "--eta", kBaseEta, "--n-max", "2"});
    REQUIRE(r.code == 0);
    const Json forms = r.doc()["forms"];
    REQUIRE(forms.size() == 2);
    for (const auto& f : forms) {
        const long n = f["n"].get<long>();
        CHECK(f["oracle"] == "match");
        CHECK(f["m1"] == 21 * n);
        CHECK(f["m2"] == 23 * n);
    }
    const LinearForm f1 = json_io::form_from_json(forms[0]);
    const LinearForm direct = assemble_form(directions_to_ab(default_reps().base, 1));
    CHECK(f1.u == direct.u);
    CHECK(f1.v == direct.v);
}

TEST_CASE("form: oracle skipped above --oracle-max") {
    const Run r = run({"form", "--eta", kSymEta, "--n", "3", "--oracle-max", "2"});
    REQUIRE(r.code == 0);
    CHECK(r.doc()["forms"][0]["oracle"] == "skipped");
}

TEST_CASE("invalid input exits with status 2") {
    SUBCASE("an eta violating a validity inequality names it") {
        const Run r = run({"form", "--eta", "3 3 1 1 1 1 1 9", "--n", "1"});
        CHECK(r.code == 2);
        CHECK(r.err.find("2*h6 <= h0") != std::string::npos);
        CHECK(r.out.empty());
    }
    SUBCASE("malformed eta") {
        CHECK(run({"form", "--eta", "3 3 1 1"}).code == 2);
        CHECK(run({"form", "--eta", "3 3 1 1 1 1 1 x"}).code == 2);
    }
    SUBCASE("bad arguments") {
        CHECK(run({}).code == 2);
        CHECK(run({"bogus"}).code == 2);
        CHECK(run({"form", "--n", "0", "--eta", kSymEta}).code == 2);
        CHECK(run({"form", "--n", "abc"}).code == 2);
    }
    SUBCASE("too few forms for growth estimates") {
        CHECK(run({"measure", "--eta", kSymEta, "--n-max", "7"}).code == 2);
    }
    SUBCASE("help is not an error") {
        const Run r = run({"--help"});
        CHECK(r.code == 0);
        CHECK(r.out.find("verify") != std::string::npos);
    }
}

TEST_CASE("omega: 68/57 family has 31 contributing representatives") {
    const Run r = run({"omega", "--eta", kBaseEta});
    REQUIRE(r.code == 0);
    check_canonical(r.out);
    const Json d = r.doc();
    CHECK(d["contributing"].size() == 31);
    CHECK(d["representatives"] == 120);
    CHECK(d["max_value"] == 5);
    const Json first = d["cells"][0];
    CHECK(first["lo"] == "0");
    CHECK(first["hi"] == "2/57");
    CHECK(first["value"] == 0);
    CHECK(d["cells"].back()["hi"] == "1");
}

TEST_CASE("omega: symmetric family is at least 1 on [2/3, 1)") {
    const Json d = run({"omega", "--eta", kSymEta}).doc();
    REQUIRE(d["cells"].size() == 2);
    for (const auto& c : d["cells"]) {
        const ExactRat hi = parse_rational(c["hi"].get<std::string>());
        if (hi > ExactRat(2, 3)) CHECK(c["value"].get<int>() >= 1);
    }
}

TEST_CASE("omega: unbalanced directions are rejected") {
    // valid for n = 1 but beta0 - alpha0 differs from the slot sum
    const Run r = run({"omega", "--eta", "4 3 1 1 1 1 1 1"});
    CHECK(r.code == 2);
}

TEST_CASE("group: orders 51840 / 432 / 120") {
    const Run r = run({"group"});
    REQUIRE(r.code == 0);
    const Json d = r.doc();
    CHECK(d["group_order"] == 51840);
    CHECK(d["trivial_subgroup_order"] == 432);
    CHECK(d["representatives"] == 120);
    CHECK(d["reps"].size() == 120);
    CHECK(d["reps"][0]["word"] == "id");
}

TEST_CASE("verify: fast suite passes and is independent of --jobs") {
    const Run a = run({"verify", "--fast", "--jobs", "1"});
    const Run b = run({"--jobs", "3", "verify", "--fast"});
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    check_canonical(a.out);
    CHECK(a.err.find(" s)") != std::string::npos);  // timings go to stderr only
    CHECK(a.out.find("seconds") == std::string::npos);
}

TEST_CASE("verify: an injected off-by-one in the A_k range is flagged") {
    const Run r = run({"verify", "--fast", "--inject-fault"});
    CHECK(r.code == 1);
    bool flagged = false;
    const Json doc = r.doc();
    for (const auto& c : doc["checks"])
        if (c["name"].get<std::string>() == "partial_fraction_sum") flagged = !c["passed"].get<bool>();
    CHECK(flagged);
    CHECK_FALSE(fault_injection());
    CHECK(run({"verify", "--fast"}).code == 0);
}

TEST_CASE("measure: C2 and reference bound from the computed omega") {
    const Run r = run({"measure", "--eta", kBaseEta, "--n-max", "8"});
    REQUIRE(r.code == 0);
    check_canonical(r.out);
    const Json d = r.doc();
    CHECK(d["m1"] == 21);
    CHECK(d["m2"] == 23);
    CHECK(d["C2"].get<std::string>().rfind("19.03569587764", 0) == 0);
    CHECK(d["reference"]["bound"].get<std::string>().rfind("8.191719584", 0) == 0);
    CHECK(d["reference"]["published_bound"] == "12.51085940");
    CHECK(d["growth"]["n_max"] == 8);
    CHECK(d["growth"]["F_decreasing"] == true);
}

TEST_CASE("measure: no empirical bound when C0 does not exceed C2") {
    const Json d = run({"measure", "--eta", kSymEta, "--n-max", "8"}).doc();
    CHECK(d["bound_empirical"].is_null());
    CHECK(d["reference"].is_null());
}

TEST_CASE("--out and --omega-cache") {
    const auto dir = temp_dir("cli");
    const std::string out = (dir / "omega.json").string(), cache = (dir / "cache").string();
    const Run plain = run({"omega", "--eta", kBaseEta});
    const Run first = run({"omega", "--eta", kBaseEta, "--omega-cache", cache, "--out", out});
    REQUIRE(first.code == 0);
    CHECK(first.out.empty());
    std::ifstream in(out);
    const std::string written((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    CHECK(written == plain.out);
    CHECK(std::filesystem::exists(omega_cache_file(cache, default_reps().base)));
    const Run cached = run({"omega", "--eta", kBaseEta, "--omega-cache", cache});
    CHECK(cached.out == plain.out);
    std::filesystem::remove_all(dir);
}

TEST_CASE("json_io: parse_eta round trip on random input") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<long> x(-1000, 1000);
    for (int t = 0; t < 200; ++t) {
        std::vector<long> v(8);
        std::string text;
        for (auto& e : v) {
            e = x(rng);
            text += (t % 2 ? "  " : " ") + std::to_string(e);
        }
        const Eta eta = json_io::parse_eta(text);
        CHECK(json_io::eta_json(eta) == Json(v));
    }
    CHECK_THROWS_AS(json_io::parse_eta("1 2 3 4 5 6 7 8 9"), Error);
    CHECK_THROWS_AS(json_io::parse_eta("1 2 3 4 5 6 7 8.5"), Error);
}

TEST_CASE("json_io: linear forms round trip exactly") {
    std::mt19937 rng(11);
    auto big = [&](int digits) -> ExactInt {
        std::string s = std::to_string(1 + rng() % 9);
        for (int i = 1; i < digits; ++i) s += static_cast<char>('0' + rng() % 10);
        return ExactInt(s, 10) * ((rng() % 2) ? 1 : -1);
    };
    for (int t = 0; t < 100; ++t) {
        LinearForm f;
        f.n = 1 + static_cast<long>(rng() % 40);
        f.u = big(1 + static_cast<int>(rng() % 200));
        f.v = ExactRat(big(1 + static_cast<int>(rng() % 200)), ExactInt(abs(big(1 + static_cast<int>(rng() % 80)))));
        f.v.canonicalize();
        f.m1 = static_cast<long>(rng() % 30);
        f.m2 = static_cast<long>(rng() % 30);
        f.family = t % 3 == 0 ? FormFamily::Symmetric : FormFamily::General;
        const std::string text = json_io::dump(json_io::form_json(f));
        check_canonical(text);
        const LinearForm g = json_io::form_from_json(Json::parse(text));
        CHECK(g.n == f.n);
        CHECK(g.u == f.u);
        CHECK(g.v == f.v);
        CHECK(g.m1 == f.m1);
        CHECK(g.m2 == f.m2);
        CHECK(g.family == f.family);
    }
    CHECK_THROWS_AS(json_io::form_from_json(Json{{"n", 1}}), Error);
}

TEST_CASE("json_io: decimal formatting") {
    CHECK(json_io::decimal(ExactRat(6, 4)) == "3/2");
    CHECK(json_io::decimal(ExactRat(-4, 2)) == "-2");
    CHECK(json_io::decimal(1.5, 3) == "1.500");
    CHECK(json_io::decimal(ExactInt("123456789012345678901234567890", 10)) == "123456789012345678901234567890");
}
