// End-to-end checks of the installed CLI: exit codes and byte determinism.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <string>

#ifndef WEIGHTLAB_CLI_PATH
#error "WEIGHTLAB_CLI_PATH must be defined by the build"
#endif

namespace {

struct RunResult {
    int exit_code = -1;
    std::string output;
};

RunResult run_cli(const std::string& args) {
    std::string cmd = std::string(WEIGHTLAB_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult r;
    std::array<char, 4096> buf;
    size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.output.append(buf.data(), got);
    int st = pclose(pipe);
    r.exit_code = WEXITSTATUS(st);
    return r;
}

}  // namespace

TEST_CASE("count exit codes") {
    RunResult ok = run_cli("count --n 2 --q 3 --group sl --ell 2 --check");
    CHECK(ok.exit_code == 0);
    CHECK(ok.output.find("\"ibr\":3") != std::string::npos);
    CHECK(ok.output.find("\"oracle\":3") != std::string::npos);

    RunResult plain = run_cli("count --n 2 --q 3 --group gl --ell 2");
    CHECK(plain.exit_code == 0);
    CHECK(plain.output.find("\"ibr\":2") != std::string::npos);

    RunResult gu = run_cli("count --n 2 --q 2 --group gu --ell 3 --check");
    CHECK(gu.exit_code == 0);
    CHECK(gu.output.find("\"oracle\":2") != std::string::npos);

    // explicit eta overrides the group name
    RunResult eta_form = run_cli("count --n 2 --q 2 --group gl --eta -1 --ell 3 --check");
    CHECK(eta_form.exit_code == 0);
    CHECK(eta_form.output.find("\"group\":\"gu\"") != std::string::npos);

    RunResult invalid = run_cli("count --n 2 --q 3 --group gl --ell 3");
    CHECK(invalid.exit_code == 2);

    RunResult missing = run_cli("count --n 2");
    CHECK(missing.exit_code != 0);
}

TEST_CASE("radical exit codes") {
    RunResult r1 = run_cli("radical --ell 3 --q 4 --m 1 --alpha 1 --gamma 0");
    CHECK(r1.exit_code == 0);
    CHECK(r1.output.find("\"is_special\":false") != std::string::npos);
    RunResult r2 = run_cli("radical --ell 5 --q 11 --m 1 --alpha 0 --gamma 1");
    CHECK(r2.exit_code == 0);
    CHECK(r2.output.find("\"splitting\":5") != std::string::npos);
    RunResult bad = run_cli("radical --ell 2 --q 5 --kind S --m 1 --gamma 1");
    CHECK(bad.exit_code == 2);  // S-kind needs 4 | q + eta
}

TEST_CASE("labels determinism") {
    RunResult a = run_cli("labels --n 3 --q 3 --group gl --ell 2");
    RunResult b = run_cli("labels --n 3 --q 3 --group gl --ell 2");
    CHECK(a.exit_code == 0);
    CHECK(a.output == b.output);
    CHECK(!a.output.empty());
    RunResult tsv = run_cli("labels --n 2 --q 3 --group gl --ell 2 --format tsv");
    CHECK(tsv.exit_code == 0);
    CHECK(tsv.output.find('\t') != std::string::npos);
}

TEST_CASE("verify-section3 exit codes") {
    RunResult ok = run_cli("verify-section3 --m-max 1 --alpha-max 0 --gamma-max 1");
    CHECK(ok.exit_code == 0);
    CHECK(ok.output.find("\"failures\":0") != std::string::npos);
    RunResult flip =
        run_cli("verify-section3 --m-max 1 --alpha-max 0 --gamma-max 1 --inject-sign-flip");
    CHECK(flip.exit_code == 1);
    CHECK(flip.output.find("\"pass\":false") != std::string::npos);
}

TEST_CASE("bruteforce subcommands and caps") {
    RunResult classes = run_cli("bruteforce classes --n 2 --q 3 --group gl --ell 2");
    CHECK(classes.exit_code == 0);
    CHECK(classes.output.find("\"classes\":8") != std::string::npos);
    RunResult rads = run_cli("bruteforce radical --n 2 --q 3 --group sl --ell 2");
    CHECK(rads.exit_code == 0);
    CHECK(rads.output.find("\"radical_classes\":[{\"order\":8") != std::string::npos);
}

TEST_CASE("WEIGHTLAB_CAP env var") {
    std::string cmd = "WEIGHTLAB_CAP=10 " + std::string(WEIGHTLAB_CLI_PATH) +
                      " bruteforce classes --n 2 --q 3 --group gl --ell 2 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::array<char, 4096> buf;
    while (fread(buf.data(), 1, buf.size(), pipe) > 0) {}
    CHECK(WEXITSTATUS(pclose(pipe)) == 2);
}
