#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <sys/wait.h>

#include "golod/cli.hpp"
#include "golod/golod.hpp"
#include <json.hpp>

using namespace golod;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run_command(args, out, err);
  return {code, out.str(), err.str()};
}

class Scratch {
 public:
  Scratch() : dir_(fs::temp_directory_path() / ("golod_cli_test_" + std::to_string(::getpid()))) {
    fs::create_directories(dir_);
  }
  ~Scratch() { fs::remove_all(dir_); }
  std::string write(const std::string& name, const std::string& text) const {
    const auto path = dir_ / name;
    std::ofstream(path) << text;
    return path.string();
  }
  std::string path(const std::string& name) const { return (dir_ / name).string(); }

 private:
  fs::path dir_;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

const char* kGrid = "ring n=4\nx1*x3\nx1*x4\nx2*x3\nx2*x4\n";
const char* kCi = "ring n=4\nx1*x2\nx3*x4\n";
const char* kTriangle = "ring n=3\nx1*x2\nx1*x3\nx2*x3\n";
const char* kCycle = "vertices 4\nfacet 1 2\nfacet 2 3\nfacet 3 4\nfacet 1 4\n";
const char* kTwoPoints = "vertices 2\nfacet 1\nfacet 2\n";

}  // namespace

TEST_CASE("ideal arithmetic commands") {
  Scratch s;
  const auto a = s.write("a.ideal", "ring n=2\nx1\nx2^2\n");
  const auto b = s.write("b.ideal", "ring n=2\nx1\nx2\n");
  auto r = run({"product", a, b});
  CHECK(r.code == cli::kSuccess);
  CHECK(parse_ideal(r.out) == MonomialIdeal(2, {Monomial({2, 0}), Monomial({1, 1}), Monomial({0, 3})}));
  CHECK(parse_ideal(run({"intersect", a, b}).out) == parse_ideal(slurp(a)));
  CHECK(parse_ideal(run({"power", b, "-k", "2"}).out).size() == 3);

  const auto t = s.write("t.ideal", kTriangle);
  CHECK(parse_ideal(run({"sympow", t, "-k", "2"}).out).size() == 4);
  CHECK(run({"probe-sympow", t, "--kmax", "3"}).out == "k=1: none\nk=2: none\nk=3: 1\n");
  CHECK(parse_ideal(run({"polarize", a}).out).is_squarefree());

  auto bad = run({"power", b, "-k", "-1"});
  CHECK(bad.code == cli::kError);
  CHECK(bad.err.rfind("error: ", 0) == 0);
  CHECK(run({"product", a, s.path("missing.ideal")}).code == cli::kError);
  CHECK(run({"sympow", a, "-k", "2"}).code == cli::kError);
  CHECK(run({}).code == cli::kError);
}

TEST_CASE("check-gcd and certificates") {
  Scratch s;
  const auto grid = s.write("grid.ideal", kGrid);
  auto r = run({"check-gcd", grid, "--order", "prop21"});
  CHECK(r.code == cli::kSuccess);
  CHECK(r.out.find("order: x2*x4 ≺ x2*x3 ≺ x1*x4 ≺ x1*x3") != std::string::npos);
  const auto cert = s.write("grid.cert", r.out);
  CHECK(run({"verify-cert", cert}).code == cli::kSuccess);

  // an order file with an explicit order
  const auto order = s.write("order.txt", "order: x1*x3 ≺ x1*x4 ≺ x2*x3 ≺ x2*x4\n");
  CHECK(run({"check-gcd", grid, "--order", order}).code == cli::kSuccess);
  const auto bad_order = s.write("bad.txt", "order: x1*x4 ≺ x2*x3 ≺ x1*x3 ≺ x2*x4\n");
  auto fail = run({"check-gcd", grid, "--order", bad_order});
  CHECK(fail.code == cli::kNegative);
  CHECK(fail.out.rfind("fail:", 0) == 0);

  const auto ci = s.write("ci.ideal", kCi);
  auto none = run({"check-gcd", ci, "--order", "search"});
  CHECK(none.code == cli::kNegative);
  CHECK(none.out.find("no order exists") != std::string::npos);
  CHECK(run({"check-gcd", ci, "--order", "search", "--search-mode", "greedy"}).code == cli::kError);
  CHECK(run({"check-gcd", grid, "--order", "search"}).code == cli::kSuccess);

  // a tampered certificate is rejected
  auto text = slurp(cert);
  const auto pos = text.rfind("witness");
  const auto tampered = s.write("tampered.cert", text.substr(0, pos));
  CHECK(run({"verify-cert", tampered}).code == cli::kNegative);

  // grlex order is recorded
  auto g = run({"--monomial-order", "grlex", "check-gcd", grid, "--order", "prop21"});
  CHECK(g.out.find("# monomial-order: grlex") != std::string::npos);
}

TEST_CASE("betti, series and json output") {
  Scratch s;
  const auto t = s.write("t.ideal", kTriangle);
  auto r = run({"betti", t, "--engine", "both"});
  CHECK(r.code == cli::kSuccess);
  auto j = run({"--json", "--field", "2", "betti", t, "--engine", "taylor"});
  REQUIRE(j.code == cli::kSuccess);
  auto parsed = nlohmann::json::parse(j.out);
  std::size_t total = 0;
  for (const auto& row : parsed["taylor"]) total += row["dim"].get<std::size_t>();
  CHECK(total == 6);

  auto series = run({"series", t, "-d", "6"});
  CHECK(series.code == cli::kSuccess);
  CHECK(series.out.find("96") != std::string::npos);
  const auto zero = s.write("zero.ideal", "ring n=3\n");
  CHECK(run({"series", zero, "-d", "3"}).code == cli::kSuccess);
  CHECK(run({"--field", "4", "betti", t}).code == cli::kError);
}

TEST_CASE("complex commands and moment-angle verdicts") {
  Scratch s;
  const auto cycle = s.write("cycle.complex", kCycle);
  auto sr = run({"sr-ideal", cycle});
  CHECK(parse_ideal(sr.out) == MonomialIdeal(4, {Monomial({1, 0, 1, 0}), Monomial({0, 1, 0, 1})}));
  const auto sr_file = s.write("cycle.ideal", sr.out);
  CHECK(parse_complex(run({"sr-complex", sr_file}).out) == parse_complex(kCycle));
  auto dual = parse_complex(run({"dual", cycle}).out);
  CHECK(dual.facets().size() == 2);

  auto nt = run({"ma-trivial", cycle});
  CHECK(nt.code == cli::kNegative);
  auto js = nlohmann::json::parse(run({"--json", "ma-trivial", cycle}).out);
  CHECK(js["verdict"] == "nontrivial");
  CHECK(js["witness"]["p_a"] == 0);

  const auto pts = s.write("pts.complex", kTwoPoints);
  CHECK(run({"ma-trivial", pts}).code == cli::kSuccess);
  CHECK(parse_complex(run({"join", pts, pts}).out).facets().size() == 4);
  CHECK(run({"join-dual-pipeline", pts, cycle}).code == cli::kSuccess);
  CHECK(run({"--vertex-cap", "3", "ma-trivial", cycle}).code == cli::kError);
}

TEST_CASE("corpus generation is deterministic and writes files") {
  Scratch s;
  auto a = run({"gen-corpus", "--seed", "7", "--count", "5", "--kind", "ideal"});
  auto b = run({"gen-corpus", "--seed", "7", "--count", "5", "--kind", "ideal"});
  CHECK(a.code == cli::kSuccess);
  CHECK(a.out == b.out);
  CHECK(a.out != run({"gen-corpus", "--seed", "8", "--count", "5", "--kind", "ideal"}).out);
  auto files = run({"gen-corpus", "--seed", "1", "--count", "3", "--kind", "complex", "--out", s.path("corpus")});
  CHECK(files.code == cli::kSuccess);
  CHECK(fs::exists(s.path("corpus") + "/item_0002.complex"));
  CHECK(run({"-o", s.path("out.txt"), "gen-corpus", "--seed", "7", "--count", "5", "--kind", "ideal"}).out.empty());
  CHECK(slurp(s.path("out.txt")) == a.out);
}

TEST_CASE("the installed binary reports exit codes") {
  Scratch s;
  const auto ci = s.write("ci.ideal", kCi);
  const auto grid = s.write("grid.ideal", kGrid);
  auto status = [](const std::string& cmd) {
    const int raw = std::system((cmd + " >/dev/null 2>&1").c_str());
    return WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  };
  const std::string bin = GOLOD_CLI_PATH;
  CHECK(status(bin + " check-gcd " + grid + " --order prop21") == 0);
  CHECK(status(bin + " check-gcd " + ci + " --order search") == 2);
  CHECK(status(bin + " check-gcd " + s.path("nope.ideal")) == 1);
  CHECK(status("GOLOD_FIELD=banana " + bin + " betti " + grid) == 1);
  CHECK(status("GOLOD_FIELD=2 " + bin + " betti " + grid) == 0);
}
