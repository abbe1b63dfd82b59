#include <doctest.h>

#include <sys/wait.h>
#include <unistd.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>

#include <json.hpp>

namespace fs = std::filesystem;

namespace {

struct CliRun {
    int exit_code = -1;
    std::string out;
    std::string err;
};

struct CliDir {
    CliDir() {
        path = fs::temp_directory_path()
             / ("rsciex-cli-" + std::to_string(::getpid()) + "-" + std::to_string(counter++));
        fs::create_directories(path);
    }
    ~CliDir() { fs::remove_all(path); }
    fs::path path;
    static inline int counter = 0;
};

std::string slurp(const fs::path& file) {
    std::ifstream in(file);
    return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>{});
}

CliRun run_cli(const CliDir& dir, const std::string& args) {
    const auto out_file = dir.path / "stdout.txt";
    const auto err_file = dir.path / "stderr.txt";
    const auto command = std::string(RSCIEX_CLI_PATH) + " " + args + " >" + out_file.string()
        + " 2>" + err_file.string();
    const int status = std::system(command.c_str());
    CliRun run;
    run.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    run.out = slurp(out_file);
    run.err = slurp(err_file);
    return run;
}

fs::path write_file(const CliDir& dir, const std::string& name, const std::string& text) {
    const auto file = dir.path / name;
    std::ofstream out(file);
    out << text;
    return file;
}

const std::string kFixture = std::string(FIXTURES_DIR) + "/ladone_issue.json";

const char* kMissingPages = R"({
  "journal": {"issn": "0317-8471", "titles": [{"lang": "ENG", "value": "J"}]},
  "issue": {"number": "1", "date_uni": "201801"},
  "articles": [{"authors": [{"surname": "Doe"}], "titles": [{"lang": "ENG", "value": "T"}]}]
})";

} // namespace

TEST_CASE("validate: clean fixture exits 0 and reports zero errors") {
    CliDir dir;
    const auto run = run_cli(dir, "validate " + kFixture);
    CHECK(run.exit_code == 0);
    CHECK(run.out.find("0 errors") != std::string::npos);
}

TEST_CASE("validate: missing pages exits 1 and names the field") {
    CliDir dir;
    const auto file = write_file(dir, "broken.json", kMissingPages);
    const auto run = run_cli(dir, "validate " + file.string());
    CHECK(run.exit_code == 1);
    CHECK(run.out.find("issue.pages") != std::string::npos);
}

TEST_CASE("validate: nonexistent path exits 2") {
    CliDir dir;
    const auto run = run_cli(dir, "validate /nonexistent/nowhere.json");
    CHECK(run.exit_code == 2);
}

TEST_CASE("validate: machine-readable report is one JSON document") {
    CliDir dir;
    const auto run = run_cli(dir, "--format json validate " + kFixture);
    CHECK(run.exit_code == 0);
    const auto doc = nlohmann::json::parse(run.out);
    CHECK(doc["command"] == "validate");
    CHECK(doc["results"][0]["exportable"] == true);
    CHECK(doc["results"][0]["errors"] == 0);
}

TEST_CASE("export: writes the named archive and prints the entry count") {
    CliDir dir;
    const auto out_dir = dir.path / "out";
    const auto run = run_cli(dir, "export " + kFixture + " --out " + out_dir.string()
                                      + " --date 2018-01-12");
    CHECK(run.exit_code == 0);
    CHECK(run.out.find("03178471_2018_01_12(1)_unicode.zip") != std::string::npos);
    CHECK(run.out.find("3 entries") != std::string::npos);
    CHECK(fs::exists(out_dir / "03178471_2018_01_12(1)_unicode.zip"));
}

TEST_CASE("export: invalid bundle exits 1 and writes nothing") {
    CliDir dir;
    const auto file = write_file(dir, "broken.json", kMissingPages);
    const auto out_dir = dir.path / "out";
    const auto run = run_cli(dir, "export " + file.string() + " --out " + out_dir.string()
                                      + " --date 2018-01-12");
    CHECK(run.exit_code == 1);
    CHECK(run.out.find("issue.pages") != std::string::npos);
    CHECK(fs::is_empty(out_dir));
}

TEST_CASE("export: bad --date exits 2") {
    CliDir dir;
    const auto run = run_cli(dir, "export " + kFixture + " --out " + dir.path.string()
                                      + " --date 12.01.2018");
    CHECK(run.exit_code == 2);
}

TEST_CASE("export: several inputs are summarized in argument order") {
    CliDir dir;
    const auto second = write_file(dir, "second.json", kMissingPages);
    const auto out_dir = dir.path / "out";
    const auto run = run_cli(dir, "export " + kFixture + " " + second.string() + " --out "
                                      + out_dir.string() + " --date 2018-01-12");
    CHECK(run.exit_code == 1); // worst outcome wins
    CHECK(run.out.find("3 entries") != std::string::npos);
    CHECK(run.out.find("unicode.zip") < run.out.find("issue.pages"));
}

TEST_CASE("metrics: profile table matches the module values") {
    CliDir dir;
    const auto profile = write_file(dir, "profile.txt", "10\n8\n5\n4\n3\n");
    const auto run = run_cli(dir, "metrics " + profile.string());
    CHECK(run.exit_code == 0);
    CHECK(run.out.find("h-index           4") != std::string::npos);
    CHECK(run.out.find("g-index           5") != std::string::npos);
    CHECK(run.out.find("i10-index         1") != std::string::npos);
    CHECK(run.out.find("N_c,tot           30") != std::string::npos);
}

TEST_CASE("metrics: empty profile renders n/a rows") {
    CliDir dir;
    const auto profile = write_file(dir, "empty.txt", "");
    const auto run = run_cli(dir, "metrics " + profile.string());
    CHECK(run.exit_code == 0);
    CHECK(run.out.find("N_p               0") != std::string::npos);
    CHECK(run.out.find("h-index           0") != std::string::npos);
    CHECK(run.out.find("n/a") != std::string::npos);
}

TEST_CASE("metrics: a non-integer line exits 2 with the line number") {
    CliDir dir;
    const auto profile = write_file(dir, "bad.txt", "3\nseven\n1\n");
    const auto run = run_cli(dir, "metrics " + profile.string());
    CHECK(run.exit_code == 2);
    CHECK(run.err.find("line 2") != std::string::npos);
}

TEST_CASE("metrics: csv input with a citations column") {
    CliDir dir;
    const auto profile =
        write_file(dir, "profile.csv", "paper,citations\nalpha,12\nbeta,10\ngamma,9\n");
    const auto run = run_cli(dir, "metrics " + profile.string());
    CHECK(run.exit_code == 0);
    CHECK(run.out.find("i10-index         2") != std::string::npos);
}

TEST_CASE("metrics: json output carries the optional rows") {
    CliDir dir;
    const auto profile = write_file(dir, "profile.txt", "10\n8\n5\n4\n3\n");
    const auto run = run_cli(dir, "--format json metrics " + profile.string()
                                      + " --significant-y 5 --top-q 2 "
                                        "--journal-stats 100 50 30 20");
    CHECK(run.exit_code == 0);
    const auto doc = nlohmann::json::parse(run.out);
    CHECK(doc["h"] == 4);
    CHECK(doc["g"] == 5);
    CHECK(doc["significant_papers"] == 2);
    CHECK(doc["top_q"] == nlohmann::json::array({10, 8}));
    CHECK(doc["impact_factor"] == "3.00");
    CHECK(doc["a_within_range"] == false);
}

TEST_CASE("harvest: unreachable endpoint exits 2") {
    CliDir dir;
    const auto run = run_cli(dir, "harvest http://127.0.0.1:1/oai --out "
                                      + (dir.path / "x.json").string() + " --timeout 2");
    CHECK(run.exit_code == 2);
}

TEST_CASE("usage errors exit 2, --help exits 0") {
    CliDir dir;
    CHECK(run_cli(dir, "no-such-command").exit_code == 2);
    CHECK(run_cli(dir, "").exit_code == 2);
    CHECK(run_cli(dir, "--help").exit_code == 0);
    CHECK(run_cli(dir, "export --help").exit_code == 0);
}

TEST_CASE("config file supplies defaults, flags win") {
    CliDir dir;
    const auto config = write_file(dir, "rsciex.toml", "format=\"json\"\n");

    const auto from_config =
        run_cli(dir, "--config " + config.string() + " validate " + kFixture);
    CHECK(from_config.exit_code == 0);
    CHECK(nlohmann::json::parse(from_config.out)["command"] == "validate");

    const auto overridden = run_cli(dir, "--config " + config.string()
                                             + " --format text validate " + kFixture);
    CHECK(overridden.exit_code == 0);
    CHECK(overridden.out.find("0 errors") != std::string::npos);
}
