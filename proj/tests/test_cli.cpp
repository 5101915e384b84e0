// Exit-code and determinism contract of the command-line tool, driven
// through the real binary.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#ifndef PFRAME_CLI_PATH
#error "PFRAME_CLI_PATH must point at the built binary"
#endif

namespace fs = std::filesystem;

namespace {

struct RunResult {
    int code = -1;
    std::string out;
};

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

struct Cli {
    fs::path dir;
    int counter = 0;

    Cli() {
        dir = fs::temp_directory_path() / "pframe_cli_test";
        fs::remove_all(dir);
        fs::create_directories(dir);
    }
    ~Cli() {
        std::error_code ec;
        fs::remove_all(dir, ec);
    }

    RunResult run(const std::string& args) {
        const fs::path out = dir / ("stdout" + std::to_string(counter++) + ".txt");
        const std::string cmd = std::string(PFRAME_CLI_PATH) + " " + args + " > " +
                                out.string() + " 2>/dev/null";
        const int status = std::system(cmd.c_str());
        RunResult r;
        r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
        r.out = slurp(out);
        return r;
    }

    fs::path file(const std::string& name) const { return dir / name; }
};

} // namespace

TEST_CASE("gen + check round trip exits 0 and reports a tiny defect") {
    Cli cli;
    const auto f = cli.file("f4.json");
    CHECK(cli.run("gen --kind fourier --n 4 --out " + f.string()).code == 0);
    const auto res = cli.run("check " + f.string());
    CHECK(res.code == 0);
    CHECK(res.out.find("\"defect_ok\": true") != std::string::npos);
}

TEST_CASE("certify: clean pair exits 0, broken frame exits 1, bad input exits 2") {
    Cli cli;
    const auto std2 = cli.file("std2.json");
    const auto four2 = cli.file("fourier2.json");
    CHECK(cli.run("gen --kind standard --dim 2 --out " + std2.string()).code == 0);
    CHECK(cli.run("gen --kind fourier --n 2 --out " + four2.string()).code == 0);

    const auto ok = cli.run("certify --f " + std2.string() + " --g " + four2.string() +
                            " --samples 50 --seed 1");
    CHECK(ok.code == 0);

    // corrupt a copy of the frame file: shrink one functional
    auto j = slurp(std2);
    const auto broken = cli.file("broken.json");
    {
        std::ofstream out(broken);
        const auto pos = j.find("1.0");
        j.replace(pos, 3, "0.4");
        out << j;
    }
    const auto fail = cli.run("certify --f " + broken.string() + " --g " + four2.string() +
                              " --samples 50 --seed 1");
    CHECK(fail.code == 1);

    CHECK(cli.run("certify --f missing.json --g " + four2.string()).code == 2);
    CHECK(cli.run("certify --f " + std2.string()).code == 2); // missing required --g
    CHECK(cli.run("frobnicate").code == 2);
}

TEST_CASE("single-point certificate with an explicit --x") {
    Cli cli;
    const auto std2 = cli.file("std2.json");
    const auto four2 = cli.file("fourier2.json");
    cli.run("gen --kind standard --dim 2 --out " + std2.string());
    cli.run("gen --kind fourier --n 2 --out " + four2.string());
    const auto res = cli.run("certify --f " + std2.string() + " --g " + four2.string() +
                             " --x 0.92387953,0.38268343 --seed 3");
    CHECK(res.code == 0);
    CHECK(res.out.find("\"type\": \"certificate\"") != std::string::npos);
    CHECK(res.out.find("\"rhs_point\": 0.3166") != std::string::npos);
}

TEST_CASE("deutsch report matches the frozen dim-2 constants") {
    Cli cli;
    const auto std2 = cli.file("std2.json");
    const auto four2 = cli.file("fourier2.json");
    cli.run("gen --kind standard --dim 2 --out " + std2.string());
    cli.run("gen --kind fourier --n 2 --out " + four2.string());
    const auto res = cli.run("deutsch --tau " + std2.string() + " --omega " + four2.string() +
                             " --samples 100 --seed 5");
    CHECK(res.code == 0);
    CHECK(res.out.find("\"mu\": 0.7071067811865") != std::string::npos);
    CHECK(res.out.find("\"buzano_bound\": 0.85355339059327") != std::string::npos);
    CHECK(res.out.find("\"deutsch_rhs\": 0.3166943676") != std::string::npos);
    CHECK(res.out.find("\"chain_violations\": 0") != std::string::npos);
}

TEST_CASE("dual-certify on vector frames") {
    Cli cli;
    const auto tau = cli.file("tau.json");
    const auto omega = cli.file("omega.json");
    CHECK(cli.run("gen --kind standard --dim 2 --role vector --out " + tau.string()).code == 0);
    CHECK(cli.run("gen --kind fourier --n 2 --role vector --out " + omega.string()).code == 0);
    const auto res = cli.run("dual-certify --tau " + tau.string() + " --omega " + omega.string() +
                             " --samples 50 --seed 2");
    CHECK(res.code == 0);

    // analysis frame where a vector frame is expected -> input error
    const auto std2 = cli.file("std2.json");
    cli.run("gen --kind standard --dim 2 --out " + std2.string());
    CHECK(cli.run("dual-certify --tau " + std2.string() + " --omega " + omega.string()).code == 2);
}

TEST_CASE("reports are byte-identical across repeated runs") {
    Cli cli;
    const auto std3 = cli.file("std3.json");
    const auto four3 = cli.file("fourier3.json");
    cli.run("gen --kind standard --dim 3 --out " + std3.string());
    cli.run("gen --kind fourier --n 3 --out " + four3.string());

    const auto a = cli.file("a.json");
    const auto b = cli.file("b.json");
    const std::string args = "certify --f " + std3.string() + " --g " + four3.string() +
                             " --samples 40 --seed 9 --out ";
    CHECK(cli.run(args + a.string()).code == 0);
    CHECK(cli.run(args + b.string()).code == 0);
    const auto ja = slurp(a);
    CHECK_FALSE(ja.empty());
    CHECK(ja == slurp(b));

    // different seed, different report
    const auto c = cli.file("c.json");
    CHECK(cli.run("certify --f " + std3.string() + " --g " + four3.string() +
                  " --samples 40 --seed 10 --out " + c.string())
              .code == 0);
    CHECK(ja != slurp(c));
}

TEST_CASE("csv scan output") {
    Cli cli;
    const auto std2 = cli.file("std2.json");
    const auto four2 = cli.file("fourier2.json");
    cli.run("gen --kind standard --dim 2 --out " + std2.string());
    cli.run("gen --kind fourier --n 2 --out " + four2.string());
    const auto res = cli.run("certify --f " + std2.string() + " --g " + four2.string() +
                             " --samples 10 --seed 1 --format csv");
    CHECK(res.code == 0);
    CHECK(res.out.rfind("sample_index,", 0) == 0);
}

TEST_CASE("sweep and search emit data and exit 0") {
    Cli cli;
    const auto std2 = cli.file("std2.json");
    const auto four2 = cli.file("fourier2.json");
    cli.run("gen --kind standard --dim 2 --out " + std2.string());
    cli.run("gen --kind fourier --n 2 --out " + four2.string());
    const auto sw = cli.run("sweep --f " + std2.string() + " --g " + four2.string() +
                            " --x 0.6,0.8 --alphas 0.5,0.999,1.001,2");
    CHECK(sw.code == 0);
    CHECK(sw.out.find("\"curve\"") != std::string::npos);

    const auto se =
        cli.run("search --family weighted_coordinate --dim 2 --runs 2 --seed 4 --starts 8");
    CHECK(se.code == 0);
    CHECK(se.out.find("\"gap_record\"") != std::string::npos);

    CHECK(cli.run("sweep --f " + std2.string() + " --g " + four2.string() +
                  " --x 0.6,0.8 --alphas 1.0")
              .code == 2);
}

TEST_CASE("version flag") {
    Cli cli;
    const auto res = cli.run("--version");
    CHECK(res.code == 0);
    CHECK(res.out.find("0.1.0") != std::string::npos);
}
