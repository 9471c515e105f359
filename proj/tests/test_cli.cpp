#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

#include "doctest.h"
#include "json.hpp"
#include "morsewig/io.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

#ifndef MORSEWIG_CLI_PATH
#error "MORSEWIG_CLI_PATH must be defined by the build"
#endif

static fs::path work_dir() {
    fs::path d = fs::temp_directory_path() / "morsewig_cli_test";
    fs::create_directories(d);
    return d;
}

struct RunResult {
    int code = -1;
    std::string out;
};

static RunResult run(const std::string& args) {
    fs::path cap = work_dir() / "stdout.txt";
    std::string cmd = std::string("\"") + MORSEWIG_CLI_PATH + "\" " + args +
                      " > \"" + cap.string() + "\" 2> /dev/null";
    int st = std::system(cmd.c_str());
    RunResult r;
    r.code = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
    std::ifstream in(cap);
    std::stringstream ss;
    ss << in.rdbuf();
    r.out = ss.str();
    return r;
}

TEST_CASE("usage and exit codes") {
    CHECK(run("--help").code == 0);
    CHECK(run("").code == 2);              // a subcommand is required
    CHECK(run("frobnicate").code == 2);    // unknown subcommand
    CHECK(run("eval --source nonsense").code == 2);
    CHECK(run("spectrum --b -3").code == 2);  // invalid configuration
    CHECK(run("specfun eval nosuchfn 1 2").code == 2);
}

TEST_CASE("spectrum lists the bound levels") {
    RunResult r = run("spectrum --b 4");
    REQUIRE(r.code == 0);
    json j = json::parse(r.out);
    REQUIRE(j["bound"].size() == 2);
    CHECK(j["bound"][0]["nu"] == 0);
    CHECK(j["bound"][0]["energy"].get<double>() == doctest::Approx(-1.125));
    CHECK(j["bound"][1]["energy"].get<double>() == doctest::Approx(-0.125));

    json j0 = json::parse(run("spectrum --b 0").out);
    CHECK(j0["bound"].empty());
    json j2 = json::parse(run("spectrum --b 2").out);
    REQUIRE(j2["bound"].size() == 1);
    CHECK(j2["bound"][0]["energy"].get<double>() == doctest::Approx(-0.125));
}

TEST_CASE("eval: deterministic files with the documented schema") {
    fs::path d1 = work_dir() / "run1", d2 = work_dir() / "run2";
    std::string flags = "eval --b 2.5 --kL 0.7 --kR 1.3 --nx 3 --np 3 ";
    REQUIRE(run(flags + "--out \"" + d1.string() + "\"").code == 0);
    REQUIRE(run(flags + "--out \"" + d2.string() + "\"").code == 0);
    // identical invocation -> byte-identical CSV
    CHECK(morsewig::file_digest((d1 / "field.csv").string()) ==
          morsewig::file_digest((d2 / "field.csv").string()));

    std::ifstream in(d1 / "field.json");
    json j = json::parse(in);
    CHECK(j["schema"] == "moyal-morse/1");
    CHECK(j["source"] == "closed");
    CHECK(j["convention"] == "exp(-i y p)");
    CHECK(j["values"].size() == 9);
    CHECK(j["left"]["k"].get<double>() == 0.7);
    CHECK(j["right"]["k"].get<double>() == 1.3);

    std::ifstream min(d1 / "manifest.json");
    json m = json::parse(min);
    CHECK(m["schema"] == "moyal-morse/manifest/1");
    bool found_csv = false;
    for (const auto& o : m["outputs"]) {
        if (o["path"].get<std::string>().find("field.csv") != std::string::npos) {
            found_csv = true;
            CHECK(o["digest"] ==
                  morsewig::file_digest((d1 / "field.csv").string()));
        }
    }
    CHECK(found_csv);

    std::ifstream cin(d1 / "field.csv");
    std::string header;
    std::getline(cin, header);
    CHECK(header == "x,p,re,im,err");
}

TEST_CASE("eval: pure-exponential diagonal field is real") {
    fs::path d = work_dir() / "liouville";
    REQUIRE(run("eval --b 0 --kL 1 --nx 3 --np 5 --out \"" + d.string() + "\"")
                .code == 0);
    std::ifstream in(d / "field.json");
    json j = json::parse(in);
    double remax = 0.0, immax = 0.0;
    for (const auto& v : j["values"]) {
        remax = std::max(remax, std::abs(v[0].get<double>()));
        immax = std::max(immax, std::abs(v[1].get<double>()));
    }
    CHECK(immax < 1e-6 * remax);
}

TEST_CASE("eval: oracle and series sources share the schema") {
    fs::path d = work_dir() / "oracle";
    REQUIRE(run("eval --b 4 --nu 0 --nx 2 --np 2 --source oracle --out \"" +
                d.string() + "\"")
                .code == 0);
    std::ifstream in(d / "field.json");
    json j = json::parse(in);
    CHECK(j["schema"] == "moyal-morse/1");
    CHECK(j["source"] == "oracle");
    CHECK(j["left"]["kind"] == "bound");

    fs::path ds = work_dir() / "series";
    REQUIRE(run("eval --b 2.5 --kL 0.9 --nx 2 --np 2 --xmin 0 --xmax 0.4 "
                "--pmin 0 --pmax 1 --source series --out \"" +
                ds.string() + "\"")
                .code == 0);
    std::ifstream sin(ds / "field.json");
    json js = json::parse(sin);
    CHECK(js["source"] == "series");
    // series evaluation is refused for bound labels
    CHECK(run("eval --b 4 --nu 0 --nx 2 --np 2 --source series --out \"" +
              ds.string() + "\"")
              .code == 2);

    // the brute-force path is also exposed as its own subcommand
    fs::path dw = work_dir() / "oracle2";
    REQUIRE(run("oracle wigner --b 4 --nu 0 --nx 2 --np 2 --out \"" +
                dw.string() + "\"")
                .code == 0);
    std::ifstream win(dw / "field.json");
    CHECK(json::parse(win)["source"] == "oracle");
}

TEST_CASE("verify: suites pass and the negative control fails") {
    RunResult ok = run("verify --suite difference --b 3.7");
    CHECK(ok.code == 0);
    json j = json::parse(ok.out);
    CHECK(j["pass"] == true);
    CHECK(j["difference"]["checks"][0]["max_residual"].get<double>() < 1e-7);

    RunResult st = run("verify --suite star --b 2");
    CHECK(st.code == 0);
    CHECK(json::parse(st.out)["star"]["max_residual"].get<double>() < 1e-6);

    RunResult bad = run("verify --suite star --b 2 --perturb");
    CHECK(bad.code == 1);
    json jb = json::parse(bad.out);
    CHECK(jb["pass"] == false);
    CHECK(jb["star"]["max_residual"].get<double>() > 1e-2);
}

TEST_CASE("specfun eval prints 17-digit values") {
    RunResult r = run("specfun eval gamma 0.5 1.0");
    REQUIRE(r.code == 0);
    std::stringstream ss(r.out);
    double re, im;
    ss >> re >> im;
    CHECK(re == doctest::Approx(0.30069461726065582).epsilon(1e-13));
    CHECK(im == doctest::Approx(-0.42496787943312381).epsilon(1e-13));
    CHECK(run("specfun eval gamma 1").code == 2);  // wrong arity
}

TEST_CASE("factor tools") {
    RunResult e = run("factor eval --b 2.5 --k 1.2 --tre -0.25 --tim 0.4");
    REQUIRE(e.code == 0);
    json je = json::parse(e.out);
    CHECK(je["b"].get<double>() == 2.5);
    CHECK(je["value"].size() == 2);

    RunResult v = run("factor verify --b 2.5 --k 1.2");
    REQUIRE(v.code == 0);
    json jv = json::parse(v.out);
    CHECK(jv["pass"] == true);
    CHECK(jv["max_residual"].get<double>() < 1e-7);
    CHECK(jv["samples"].size() == 20);
}

TEST_CASE("oracle wavefn emits the field schema on an x grid") {
    fs::path d = work_dir() / "wavefn";
    REQUIRE(run("oracle wavefn --b 4 --nu 0 --nx 7 --xmin -1 --xmax 3 --out \"" +
                d.string() + "\"")
                .code == 0);
    std::ifstream in(d / "wavefn.json");
    json j = json::parse(in);
    CHECK(j["schema"] == "moyal-morse/1");
    CHECK(j["source"] == "oracle");
    CHECK(j["x"].size() == 7);
    CHECK(j["p"].size() == 1);
    // bound wavefunctions are real
    for (const auto& v : j["values"]) CHECK(v[1].get<double>() == 0.0);
}
