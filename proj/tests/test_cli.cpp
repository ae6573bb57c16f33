#include <catch2/catch_amalgamated.hpp>

#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include <json.hpp>

namespace fs = std::filesystem;

namespace {

struct RunResult {
    int status = -1;
    std::string out;
};

// Runs the CLI with stderr folded into stdout.
RunResult run_qf(const std::string& args, const std::string& env_prefix = "") {
    std::string cmd = env_prefix + " " + std::string(QF_CLI_PATH) + " " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult r;
    char buf[4096];
    while (std::size_t n = std::fread(buf, 1, sizeof buf, pipe)) r.out.append(buf, n);
    int rc = pclose(pipe);
    r.status = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
    return r;
}

std::string read_file(const fs::path& p) {
    std::ifstream in(p);
    REQUIRE(in.good());
    return std::string(std::istreambuf_iterator<char>(in), {});
}

fs::path temp_dir() {
    fs::path dir = fs::temp_directory_path() / "qf_cli_test";
    fs::create_directories(dir);
    return dir;
}

}  // namespace

TEST_CASE("quandle verify: bundled P3 asset") {
    RunResult r = run_qf("quandle verify p3.json");
    CHECK(r.status == 0);
    CHECK(r.out.find("valid quandle; good involution valid") != std::string::npos);
}

TEST_CASE("quandle verify: violations exit 1, parse problems exit 2") {
    RunResult broken = run_qf("quandle verify broken.json");
    CHECK(broken.status == 1);
    CHECK(broken.out.find("axiom") != std::string::npos);

    CHECK(run_qf("quandle verify no_such_file.json").status == 2);

    fs::path garbage = temp_dir() / "garbage.json";
    std::ofstream(garbage) << "{not json";
    CHECK(run_qf("quandle verify " + garbage.string()).status == 2);

    fs::path malformed = temp_dir() / "malformed.json";
    std::ofstream(malformed) << R"({"n": 2, "table": [[0,0],[1]]})";
    CHECK(run_qf("quandle verify " + malformed.string()).status == 2);
}

TEST_CASE("quandle involutions") {
    RunResult r3 = run_qf("quandle involutions r3.json --json");
    CHECK(r3.status == 0);
    auto j = nlohmann::json::parse(r3.out);
    CHECK(j["count"] == 1);
    CHECK(j["involutions"][0] == nlohmann::json::array({0, 1, 2}));

    RunResult none = run_qf("quandle involutions galois4.json");
    CHECK(none.status == 0);
    CHECK(none.out.find("0 good involutions") != std::string::npos);
}

TEST_CASE("cocycle verify") {
    RunResult theta = run_qf("cocycle verify theta.json --quandle p3.json");
    CHECK(theta.status == 0);
    CHECK(theta.out.find("valid symmetric 3-cocycle; Lemma-admissible: yes") != std::string::npos);

    RunResult zero = run_qf("cocycle verify zero.json --quandle p3.json");
    CHECK(zero.status == 0);

    CHECK(run_qf("cocycle verify theta.json").status == 2);  // missing --quandle

    // corrupt one entry: domain violation
    fs::path bad = temp_dir() / "bad_theta.json";
    std::ofstream(bad) << R"({"signature":{"s":1,"t":1},
        "entries":[{"triple":[0,1,0],"alphas":[1],"betas":[0]}]})";
    RunResult r = run_qf("cocycle verify " + bad.string() + " --quandle p3.json");
    CHECK(r.status == 1);
    CHECK(r.out.find("NOT a symmetric 3-cocycle") != std::string::npos);
}

TEST_CASE("cocycle solve") {
    RunResult a = run_qf("cocycle solve --quandle p3.json -p 2");
    CHECK(a.status == 0);
    CHECK(a.out.find("kernel dimension over Z_2:") != std::string::npos);
    RunResult b = run_qf("cocycle solve --quandle p3.json -p 2");
    CHECK(a.out == b.out);  // deterministic basis dump

    CHECK(run_qf("cocycle solve --quandle p3.json -p 4").status == 2);
}

TEST_CASE("color count and enum") {
    CHECK(run_qf("color count trefoil.json --quandle r3_id.json").out == "9\n");
    CHECK(run_qf("color count unknot.json --quandle p3.json").out == "2\n");

    RunResult hopf = run_qf("color enum hopf.json --quandle t2_id.json --json");
    CHECK(hopf.status == 0);
    auto j = nlohmann::json::parse(hopf.out);
    CHECK(j["count"] == 4);
    CHECK(j["colorings"].size() == 4);
}

TEST_CASE("weight of the bundled movie") {
    RunResult r = run_qf("weight movie_k0_m2.json --cocycle theta.json");
    CHECK(r.status == 0);
    CHECK(r.out.find("weight = 0⊕6") != std::string::npos);
    CHECK(r.out.find("lower bound on triple point number = 6") != std::string::npos);
}

TEST_CASE("family reports") {
    RunResult a = run_qf("family -k 0 -m 1 --gprime 2");
    CHECK(a.status == 0);
    CHECK(a.out.find("weight = 0⊕2") != std::string::npos);
    CHECK(a.out.find("t(F) = 2") != std::string::npos);

    RunResult b = run_qf("family -k 2 -m 0 --g 1,3");
    CHECK(b.status == 0);
    CHECK(b.out.find("weight = 0⊕0") != std::string::npos);
    CHECK(b.out.find("t(F) = 0") != std::string::npos);

    RunResult bad = run_qf("family -k 0 -m 1 --gprime 3");
    CHECK(bad.status == 1);
    CHECK(bad.out.find("even") != std::string::npos);

    // byte-identical across runs
    RunResult c1 = run_qf("family -k 3 -m 2 --g 1,2,3 --gprime 4,6");
    RunResult c2 = run_qf("family -k 3 -m 2 --g 1,2,3 --gprime 4,6");
    CHECK(c1.out == c2.out);
    CHECK(c1.out.find("t(F) = 10") != std::string::npos);
}

TEST_CASE("machine JSON round-trips byte-identically") {
    fs::path out = temp_dir() / "family.json";
    RunResult r = run_qf("family -k 1 -m 1 --g 2 --gprime 4 --json -o " + out.string());
    REQUIRE(r.status == 0);
    std::string first = read_file(out);
    auto parsed = nlohmann::json::parse(first);
    std::string rewritten = parsed.dump(2) + "\n";
    CHECK(first == rewritten);
    CHECK(parsed["t"] == 4);
    CHECK(parsed["display"] == "0⊕4");

    for (const std::string& cmd :
         {std::string("quandle verify p3.json"), std::string("color enum hopf.json --quandle t2_id.json"),
          std::string("cocycle solve --quandle p3.json -p 2"),
          std::string("weight movie_k0_m2.json --cocycle theta.json")}) {
        RunResult j = run_qf(cmd + " --json");
        REQUIRE(j.status == 0);
        auto doc = nlohmann::json::parse(j.out);
        CHECK(doc.dump(2) + "\n" == j.out);
    }
}

TEST_CASE("QF_ASSETS overrides the bundled asset path") {
    fs::path dir = temp_dir() / "assets_override";
    fs::create_directories(dir);
    fs::copy_file(fs::path(QF_ASSET_DIR) / "p3.json", dir / "custom_p3.json",
                  fs::copy_options::overwrite_existing);
    RunResult r = run_qf("quandle verify custom_p3.json", "QF_ASSETS=" + dir.string());
    CHECK(r.status == 0);
    CHECK(run_qf("quandle verify custom_p3.json").status == 2);  // not bundled
}
