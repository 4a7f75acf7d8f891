#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include "geoflow/tdl.hpp"

namespace {

struct RunResult {
    int code = -1;
    std::string out;
};

RunResult run(const std::string& args, bool keep_stderr = false) {
    const std::string cmd =
        std::string(GEOFLOW_CLI_BIN) + " " + args + (keep_stderr ? " 2>&1" : " 2>/dev/null");
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult r;
    char buf[4096];
    size_t got;
    while ((got = fread(buf, 1, sizeof(buf), pipe)) > 0) r.out.append(buf, got);
    const int status = pclose(pipe);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

int count_lines(const std::string& s) {
    int n = 0;
    for (char c : s) n += c == '\n';
    return n;
}

int count_occurrences(const std::string& s, const std::string& needle) {
    int n = 0;
    for (size_t pos = s.find(needle); pos != std::string::npos; pos = s.find(needle, pos + 1))
        ++n;
    return n;
}

std::string temp_path(const std::string& name) {
    return std::string("/tmp/geoflow_test_") + std::to_string(getpid()) + "_" + name;
}

}  // namespace

TEST_CASE("lens command") {
    const RunResult s3 = run("lens --n 2 --k 3 --c 1");
    CHECK(s3.code == 0);
    CHECK(s3.out.find("S3") != std::string::npos);

    const RunResult l31 = run("lens --n 2 --k 5 --c 1 --format jsonl");
    CHECK(l31.code == 0);
    CHECK(l31.out.find("\"name\":\"L(3,1)\"") != std::string::npos);

    const RunResult range = run("lens --n 2 --k 5 --c -2..3 --format jsonl");
    CHECK(range.code == 0);
    CHECK(count_lines(range.out) == 6);
    // b column tracks c - 1.
    CHECK(range.out.find("\"b\":-3,\"c\":-2") != std::string::npos);
    CHECK(range.out.find("\"b\":2,\"c\":3") != std::string::npos);

    CHECK(run("lens --n 2 --k 3 --c banana").code == 2);
}

TEST_CASE("orbits command") {
    const RunResult k3 = run("orbits --k 3 --max-len 2");
    CHECK(k3.code == 0);
    CHECK(count_lines(k3.out) == 3);
    CHECK(count_occurrences(k3.out, "\"class\":\"hyperbolic\"") == 1);

    const RunResult k5 = run("orbits --k 5 --max-len 1");
    CHECK(k5.code == 0);
    CHECK(count_lines(k5.out) == 4);

    // Deterministic bytes across runs.
    const RunResult again = run("orbits --k 3 --max-len 2");
    CHECK(again.out == k3.out);

    CHECK(run("orbits --k 4 --max-len 2").code == 2);
    CHECK(run("orbits --k 3 --max-len 0").code == 2);
    CHECK(run("orbits --k 3 --max-len 99").code == 2);
}

TEST_CASE("invariants command") {
    const RunResult lr = run("invariants --k 3 --word 1,2");
    CHECK(lr.code == 0);
    CHECK(lr.out.find("\"positive\":true") != std::string::npos);
    CHECK(lr.out.find("\"components\":1") != std::string::npos);
    CHECK(lr.out.find("\"genus\":0") != std::string::npos);

    // Non-hyperbolic words need the template-only escape hatch.
    CHECK(run("invariants --k 3 --word 1").code == 2);
    const RunResult cores = run("invariants --k 3 --template-only --word 1 --word 2");
    CHECK(cores.code == 0);
    CHECK(cores.out.find("\"linking_matrix\":[[null,0],[0,null]]") != std::string::npos);

    CHECK(run("invariants --k 3 --template-only --geodesics --word 1").code == 2);
    CHECK(run("invariants --k 3").code == 2);  // no words
    CHECK(run("invariants --k 3 --word 9").code == 2);
}

TEST_CASE("invariants rejects words beyond the long-ear bound") {
    geoflow::tdl::TemplateDescription desc = geoflow::tdl::hecke_description(5);
    desc.ears[1].long_ear_passes = 3;
    const std::string path = temp_path("over.tdl");
    {
        std::ofstream out(path);
        out << geoflow::tdl::serialize(desc);
    }
    const RunResult r = run("invariants --k 5 --template " + path + " --word 2", true);
    CHECK(r.code == 3);
    CHECK(r.out.find("long-ear") != std::string::npos);
    std::remove(path.c_str());
}

TEST_CASE("svg command") {
    const std::string path = temp_path("lr.svg");
    const RunResult r = run("svg --k 3 --word 1,2 --out " + path);
    CHECK(r.code == 0);
    std::ifstream in(path, std::ios::binary);
    std::stringstream buf;
    buf << in.rdbuf();
    const std::string svg = buf.str();
    CHECK(svg.find("<svg") != std::string::npos);
    CHECK(count_occurrences(svg, "class=\"crossing\"") == 1);

    // Identical bytes on a second run.
    const std::string path2 = temp_path("lr2.svg");
    CHECK(run("svg --k 3 --word 1,2 --out " + path2).code == 0);
    std::ifstream in2(path2, std::ios::binary);
    std::stringstream buf2;
    buf2 << in2.rdbuf();
    CHECK(buf2.str() == svg);
    std::remove(path.c_str());
    std::remove(path2.c_str());

    // The two unlinked cores render with no crossing glyphs.
    const std::string cores_path = temp_path("cores.svg");
    CHECK(run("svg --k 3 --template-only --word 1 --word 2 --out " + cores_path).code == 0);
    std::ifstream in3(cores_path, std::ios::binary);
    std::stringstream buf3;
    buf3 << in3.rdbuf();
    CHECK(count_occurrences(buf3.str(), "class=\"crossing\"") == 0);
    std::remove(cores_path.c_str());

    CHECK(run("svg --k 3 --out /tmp/geoflow_empty.svg").code == 2);  // no words
    CHECK(run("svg --k 3 --word 1,2 --out /nonexistent-dir/x.svg").code == 3);
}

TEST_CASE("template dump and validate") {
    const RunResult dump5 = run("template dump --k 5");
    CHECK(dump5.code == 0);
    CHECK(dump5.out.find("template hecke-2-5 k 5 lens L(3,1)") != std::string::npos);
    CHECK(count_occurrences(dump5.out, "\near ") == 4);

    const RunResult dump3 = run("template dump --k 3");
    CHECK(count_occurrences(dump3.out, "ear ") == 2);

    const std::string path = temp_path("dump.tdl");
    CHECK(run("template dump --k 7 --out " + path).code == 0);
    CHECK(run("template validate " + path).code == 0);

    {
        std::ofstream out(path);
        out << "tdl 1\ntemplate x k 3 lens S3\nbranch B0 0 1\n"
               "ear 1 source B9 0 0.5 target B0 0 1 orient + twists 0 passes 0 xi 1 layer 1\n";
    }
    const RunResult bad = run("template validate " + path, true);
    CHECK(bad.code == 2);
    CHECK(bad.out.find("line 4") != std::string::npos);
    std::remove(path.c_str());

    CHECK(run("template validate /nonexistent.tdl").code == 3);
}

TEST_CASE("config file feeds subcommand options") {
    const std::string path = temp_path("cfg.ini");
    {
        std::ofstream out(path);
        out << "[orbits]\nk=5\nmax-len=1\n";
    }
    const RunResult r = run("--config " + path + " orbits");
    CHECK(r.code == 0);
    CHECK(count_lines(r.out) == 4);
    std::remove(path.c_str());
}

TEST_CASE("help exits cleanly") {
    CHECK(run("--help").code == 0);
    CHECK(run("").code == 2);  // a subcommand is required
}
