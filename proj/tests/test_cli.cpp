#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>
#include <unistd.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "lingloop/cli.hpp"
#include "lingloop/report.hpp"

namespace fs = std::filesystem;
using namespace lingloop;

namespace {

struct RunResult {
  int exit_code;
  std::string out;
  std::string err;
};

fs::path scratch_dir() {
  static const fs::path dir = [] {
    fs::path d = fs::temp_directory_path() / ("lingloop_cli_test_" + std::to_string(getpid()));
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

std::string slurp(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void spit(const fs::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  out << content;
}

RunResult run_cli(const std::string& args, const std::string& env_prefix = "") {
  static int counter = 0;
  const fs::path out_file = scratch_dir() / ("out" + std::to_string(counter));
  const fs::path err_file = scratch_dir() / ("err" + std::to_string(counter));
  ++counter;
  const std::string command = env_prefix + std::string(LINGLOOP_CLI_PATH) + " " + args +
                              " >" + out_file.string() + " 2>" + err_file.string();
  const int status = std::system(command.c_str());
  RunResult result;
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  result.out = slurp(out_file);
  result.err = slurp(err_file);
  return result;
}

std::string data_path(const std::string& rel) {
  return std::string(LINGLOOP_DATA_DIR) + "/" + rel;
}

std::string first_line(const std::string& text) {
  return text.substr(0, text.find('\n'));
}

}  // namespace

TEST_CASE("classify text output for bundled tables") {
  const RunResult en = run_cli("classify --table " + data_path("tables/en.tsv"));
  CHECK(en.exit_code == 0);
  CHECK(en.out.find("label: Positive(4)") != std::string::npos);
  CHECK(en.out.find("fixed points: 4") != std::string::npos);
  CHECK(en.out.find("cycles: -") != std::string::npos);
  CHECK(en.out.find("\x1b") == std::string::npos);  // piped output carries no colors

  const RunResult sv = run_cli("classify --table " + data_path("tables/sv.tsv"));
  CHECK(sv.out.find("label: BiPositive(3,4)") != std::string::npos);

  const RunResult id = run_cli("classify --table " + data_path("tables/id.tsv"));
  CHECK(id.out.find("label: Negative; cycles: (4 5)") != std::string::npos);
}

TEST_CASE("classify csv and json output") {
  const RunResult csv =
      run_cli("classify --table " + data_path("tables/en.tsv") + " --format csv");
  CHECK(csv.exit_code == 0);
  CHECK(first_line(csv.out) == "language,nmax,label,constants,fixed_points,cycles,basins");
  CHECK(csv.out.find("en,100,Positive,4,4,,4:100") != std::string::npos);

  const RunResult json =
      run_cli("classify --table " + data_path("tables/es.tsv") + " --format json");
  CHECK(json.exit_code == 0);
  CHECK(json.out.find("\"label\": \"Negative\"") != std::string::npos);
  CHECK(json.out.find("\"fixed_points\": [") != std::string::npos);
  CHECK(json.out.find("\"states\": [") != std::string::npos);
}

TEST_CASE("classify exit codes: io=1 validation=2") {
  CHECK(run_cli("classify --table /nonexistent/zz.tsv").exit_code == 1);

  const fs::path bad = scratch_dir() / "gap.tsv";
  spit(bad, "1\tone\n2\ttwo\n4\tfour\n");
  const RunResult gap = run_cli("classify --table " + bad.string());
  CHECK(gap.exit_code == 2);
  CHECK(gap.err.find("gap at n=3") != std::string::npos);

  const fs::path closure = scratch_dir() / "closure.tsv";
  spit(closure, "1\tone\n2\tabcdefghi\n3\tsix\n4\tfour\n5\tfive\n");
  const RunResult broken = run_cli("classify --table " + closure.string());
  CHECK(broken.exit_code == 2);
  CHECK(broken.err.find("closure violation") != std::string::npos);
  CHECK(broken.err.find("n=2") != std::string::npos);
}

TEST_CASE("trajectory renders the orbit with spellings") {
  const std::string en = data_path("tables/en.tsv");
  const RunResult t13 = run_cli("trajectory --table " + en + " 13");
  CHECK(t13.exit_code == 0);
  CHECK(first_line(t13.out) ==
        "13 → thirteen(8) → eight(5) → five(4) → four(4) [fixed point 4]");
  CHECK(t13.out.find("tail: step 3") != std::string::npos);

  const RunResult t4 = run_cli("trajectory --table " + en + " 4");
  CHECK(first_line(t4.out) == "4 → four(4) [fixed point 4]");
  CHECK(t4.out.find("tail: step 0") != std::string::npos);

  const RunResult id3 = run_cli("trajectory --table " + data_path("tables/id.tsv") + " 3");
  CHECK(first_line(id3.out) == "3 → tiga(4) → empat(5) → lima(4) [cycle 4↔5]");

  CHECK(run_cli("trajectory --table " + en + " 0").exit_code == 2);
  CHECK(run_cli("trajectory --table " + en + " 101").exit_code == 2);
}

TEST_CASE("trajectory honors policy flags") {
  const std::string en = data_path("tables/en.tsv");
  const RunResult t21 = run_cli("trajectory --table " + en + " 21 --count-hyphens");
  CHECK(first_line(t21.out) ==
        "21 → twenty-one(10) → ten(3) → three(5) → five(4) → four(4) [fixed point 4]");

  const std::string id = data_path("tables/id.tsv");
  CHECK(first_line(run_cli("trajectory --table " + id + " 12").out)
            .find("dua belas(8)") != std::string::npos);
  CHECK(first_line(run_cli("trajectory --table " + id + " 12 --count-spaces").out)
            .find("dua belas(9)") != std::string::npos);
}

TEST_CASE("iterate writes the csv series") {
  const fs::path words = scratch_dir() / "four.txt";
  spit(words, "one\nfour\nseven\nthirteen\n");  // lengths 3, 4, 5, 8
  const std::string base =
      "iterate --table " + data_path("tables/en.tsv") + " --words " + words.string();

  const RunResult csv = run_cli(base + " --rounds 3");
  CHECK(csv.exit_code == 0);
  CHECK(first_line(csv.out) == "iteration,length,count,proportion");
  // after three rounds everything sits on length 4
  CHECK(csv.out.find("3,4,4,1.000000000000") != std::string::npos);
  CHECK(csv.err.find("converged_at=2") != std::string::npos);

  const RunResult zero = run_cli(base + " --rounds 0");
  CHECK(zero.exit_code == 0);
  std::istringstream lines(zero.out);
  std::string line;
  int rows = 0;
  while (std::getline(lines, line)) {
    ++rows;
    if (rows > 1) CHECK(line.substr(0, 2) == "0,");
  }
  CHECK(rows == 1 + 4);  // header + one row per initial length
}

TEST_CASE("iterate --out and --svg write files and the summary lands on stdout") {
  const fs::path words = scratch_dir() / "mix.txt";
  spit(words, "one\nfour\nseven\nthirteen\n");
  const fs::path csv_path = scratch_dir() / "series.csv";
  const fs::path svg_path = scratch_dir() / "series.svg";
  const RunResult run = run_cli("iterate --table " + data_path("tables/en.tsv") +
                                " --words " + words.string() + " --out " + csv_path.string() +
                                " --svg " + svg_path.string());
  CHECK(run.exit_code == 0);
  CHECK(run.out == "converged_at=2\n");
  const std::string csv = slurp(csv_path);
  CHECK(first_line(csv) == "iteration,length,count,proportion");
  const std::string svg = slurp(svg_path);
  CHECK(svg.substr(0, 4) == "<svg");
  CHECK(svg.find("<rect") != std::string::npos);
  CHECK(svg.find("</svg>") != std::string::npos);
}

TEST_CASE("iterate on a cycle never converges") {
  const fs::path words = scratch_dir() / "id_words.txt";
  spit(words, "satu\ndua\ntiga\nempat\nlima\n");
  const RunResult run = run_cli("iterate --table " + data_path("tables/id.tsv") + " --words " +
                                words.string() + " --rounds 8");
  CHECK(run.exit_code == 0);
  CHECK(run.err.find("converged_at=-") != std::string::npos);
}

TEST_CASE("iterate rejects words longer than the table domain") {
  const fs::path table = scratch_dir() / "tiny.tsv";
  spit(table, "1\ta\n2\tab\n3\tabc\n4\tabcd\n5\tcinco\n");
  const fs::path words = scratch_dir() / "long.txt";
  spit(words, "four\nextraordinarily\n");
  const RunResult run =
      run_cli("iterate --table " + table.string() + " --words " + words.string());
  CHECK(run.exit_code == 2);
  CHECK(run.err.find("extraordinarily") != std::string::npos);
  CHECK(run.err.find("15 letters") != std::string::npos);
}

TEST_CASE("iterate --dedup drops duplicate words") {
  const fs::path words = scratch_dir() / "dups.txt";
  spit(words, "four\nfour\nFOUR\nfive\n");
  const std::string base =
      "iterate --table " + data_path("tables/en.tsv") + " --words " + words.string();
  const RunResult keep = run_cli(base + " --rounds 0");
  CHECK(keep.out.find("0,4,4,1.000000000000") != std::string::npos);
  const RunResult dedup = run_cli(base + " --rounds 0 --dedup");
  CHECK(dedup.out.find("0,4,2,1.000000000000") != std::string::npos);
}

TEST_CASE("iterate rejects zero-letter wordlist lines") {
  const fs::path words = scratch_dir() / "zero.txt";
  spit(words, "four\n123\n");
  const RunResult run =
      run_cli("iterate --table " + data_path("tables/en.tsv") + " --words " + words.string());
  CHECK(run.exit_code == 2);
  CHECK(run.err.find("zero letters at line 2") != std::string::npos);
}

TEST_CASE("report groups the bundled reference set") {
  const RunResult text = run_cli("report --tables " + data_path("tables"));
  CHECK(text.exit_code == 0);
  CHECK(text.out.find("Positive(3) [1]") != std::string::npos);
  CHECK(text.out.find("Positive(4) [2]") != std::string::npos);
  CHECK(text.out.find("BiPositive(3,4) [1]") != std::string::npos);
  CHECK(text.out.find("TriPositive(2,3,4) [1]") != std::string::npos);
  CHECK(text.out.find("Negative [2]") != std::string::npos);
  CHECK(text.out.find("total: 7 languages") != std::string::npos);

  const RunResult csv = run_cli("report --tables " + data_path("tables") + " --format csv");
  std::vector<std::string> tags;
  std::istringstream lines(csv.out);
  std::string line;
  std::getline(lines, line);  // header
  while (std::getline(lines, line)) tags.push_back(line.substr(0, line.find(',')));
  CHECK(tags == std::vector<std::string>{"de", "en", "es", "id", "it", "no", "sv"});

  const RunResult json = run_cli("report --tables " + data_path("tables") + " --format json");
  CHECK(json.out.find("\"groups\"") != std::string::npos);
  CHECK(json.out.find("\"label\": \"TriPositive(2,3,4)\"") != std::string::npos);
}

TEST_CASE("report error contract") {
  const fs::path empty = scratch_dir() / "empty_tables";
  fs::create_directories(empty);
  const RunResult none = run_cli("report --tables " + empty.string());
  CHECK(none.exit_code == 2);
  CHECK(none.err.find("no tables found") != std::string::npos);

  const fs::path mixed = scratch_dir() / "mixed_tables";
  fs::create_directories(mixed);
  spit(mixed / "good.tsv", "1\ta\n2\tab\n3\tabc\n");
  spit(mixed / "bad.tsv", "1\tone\n3\tthree\n");
  const RunResult partial = run_cli("report --tables " + mixed.string());
  CHECK(partial.exit_code == 2);
  CHECK(partial.err.find("gap at n=2") != std::string::npos);
  CHECK(partial.out.find("good") != std::string::npos);  // valid row still reported

  CHECK(run_cli("report --tables /nonexistent_dir_zz").exit_code == 1);
}

TEST_CASE("outputs are byte-identical across runs") {
  const std::string base = "classify --table " + data_path("tables/sv.tsv");
  CHECK(run_cli(base + " --format json").out == run_cli(base + " --format json").out);
  CHECK(run_cli(base + " --format csv").out == run_cli(base + " --format csv").out);

  const std::string report_cmd = "report --tables " + data_path("tables") + " --format csv";
  CHECK(run_cli(report_cmd).out == run_cli(report_cmd).out);

  const fs::path words = scratch_dir() / "stable.txt";
  spit(words, "one\nfour\nseven\nthirteen\n");
  const fs::path svg_a = scratch_dir() / "a.svg";
  const fs::path svg_b = scratch_dir() / "b.svg";
  const std::string iterate_cmd = "iterate --table " + data_path("tables/en.tsv") +
                                  " --words " + words.string();
  const std::string csv_a = run_cli(iterate_cmd + " --svg " + svg_a.string()).out;
  const std::string csv_b = run_cli(iterate_cmd + " --svg " + svg_b.string()).out;
  CHECK(csv_a == csv_b);
  CHECK(slurp(svg_a) == slurp(svg_b));
}

TEST_CASE("csv proportions re-sum to one per iteration row group") {
  const fs::path words = scratch_dir() / "sum.txt";
  spit(words, "a\nto\nthe\nfour\nseven\nthirteen\nseventeen\n");
  const RunResult run = run_cli("iterate --table " + data_path("tables/en.tsv") + " --words " +
                                words.string() + " --rounds 6");
  std::istringstream lines(run.out);
  std::string line;
  std::getline(lines, line);
  std::map<int, double> sums;
  while (std::getline(lines, line)) {
    std::istringstream fields(line);
    std::string iteration, length, count, proportion;
    std::getline(fields, iteration, ',');
    std::getline(fields, length, ',');
    std::getline(fields, count, ',');
    std::getline(fields, proportion, ',');
    sums[std::stoi(iteration)] += std::stod(proportion);
  }
  CHECK(sums.size() == 7);
  for (const auto& [iteration, sum] : sums) CHECK(sum == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("NO_COLOR and non-tty output stay plain") {
  const std::string base = "classify --table " + data_path("tables/en.tsv");
  CHECK(run_cli(base).out.find('\x1b') == std::string::npos);
  CHECK(run_cli(base, "NO_COLOR=1 ").out.find('\x1b') == std::string::npos);
  // use_color itself honors the convention
  setenv("NO_COLOR", "1", 1);
  CHECK(!cli::use_color(true));
  unsetenv("NO_COLOR");
  CHECK(cli::use_color(true));
  CHECK(!cli::use_color(false));
}

TEST_CASE("language tag defaults to the filename stem and --language overrides") {
  const RunResult stem = run_cli("classify --table " + data_path("tables/no.tsv"));
  CHECK(stem.out.find("language: no") != std::string::npos);
  const RunResult tagged =
      run_cli("classify --table " + data_path("tables/no.tsv") + " --language nb");
  CHECK(tagged.out.find("language: nb") != std::string::npos);
}

TEST_CASE("usage errors exit with the validation code") {
  CHECK(run_cli("classify").exit_code == 2);          // missing --table
  CHECK(run_cli("explode").exit_code == 2);           // unknown subcommand
  CHECK(run_cli("").exit_code == 2);                  // subcommand required
  CHECK(run_cli("--help").exit_code == 0);
}
