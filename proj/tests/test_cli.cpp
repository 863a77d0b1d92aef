// End-to-end checks of the command line binary: exit codes, file outputs,
// manifests, and rerun reproducibility.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>
#include <unistd.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

namespace fs = std::filesystem;

namespace {

struct RunResult {
  int exit_code;
  std::string out;
};

RunResult run_cli(const std::string& args) {
  fs::path out_file = fs::temp_directory_path() / "ssne_cli_out.txt";
  std::string cmd = std::string(SSNE_CLI_PATH) + " " + args + " > " +
                    out_file.string() + " 2>&1";
  int rc = std::system(cmd.c_str());
  std::ifstream in(out_file);
  std::stringstream ss;
  ss << in.rdbuf();
  return {WEXITSTATUS(rc), ss.str()};
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() / ("ssne_cli_test_" + std::to_string(::getpid()));
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
  std::string file(const std::string& name) const { return (path / name).string(); }
};

}  // namespace

TEST_CASE("missing input file exits 2 with a message on stderr") {
  RunResult r = run_cli("stats /no/such/file.edges");
  CHECK(r.exit_code == 2);
  CHECK(r.out.find("no such file") != std::string::npos);
}

TEST_CASE("stats on a tiny graph") {
  TempDir tmp;
  std::ofstream(tmp.file("two.edges")) << "0 1\n";
  RunResult r = run_cli("stats " + tmp.file("two.edges"));
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("n=2 m=1 <k>=1.0000") != std::string::npos);
}

TEST_CASE("generate ws writes the exact edge count and a manifest") {
  TempDir tmp;
  RunResult r = run_cli("generate ws --nodes 500 --ring-k 2 --seed 1 --out " +
                        tmp.file("ws.edges"));
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("m=500") != std::string::npos);
  std::string manifest = slurp(tmp.file("ws.edges.manifest"));
  CHECK(manifest.find("model=ws") != std::string::npos);
  CHECK(manifest.find("seed=1") != std::string::npos);

  // byte-identical regeneration
  RunResult r2 = run_cli("generate ws --nodes 500 --ring-k 2 --seed 1 --out " +
                         tmp.file("ws2.edges"));
  CHECK(r2.exit_code == 0);
  CHECK(slurp(tmp.file("ws.edges")) == slurp(tmp.file("ws2.edges")));
}

TEST_CASE("generate ba edge count follows the construction rule") {
  TempDir tmp;
  RunResult r = run_cli("generate ba --nodes 500 --m-attach 1 --seed 1 --out " +
                        tmp.file("ba.edges"));
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("m=499") != std::string::npos);
}

TEST_CASE("invalid generator parameters exit 2") {
  TempDir tmp;
  RunResult r = run_cli("generate ws --nodes 100 --ring-k 3 --seed 1 --out " +
                        tmp.file("bad.edges"));
  CHECK(r.exit_code == 2);
}

TEST_CASE("split emits train/test/meta and respects the seed") {
  TempDir tmp;
  run_cli("generate ws --nodes 400 --ring-k 4 --seed 2 --out " + tmp.file("g.edges"));
  RunResult r = run_cli("split " + tmp.file("g.edges") +
                        " --fraction 0.2 --seed 7 --out-prefix " + tmp.file("s"));
  CHECK(r.exit_code == 0);
  CHECK(fs::exists(tmp.file("s.train.edges")));
  CHECK(fs::exists(tmp.file("s.test.edges")));
  std::string meta = slurp(tmp.file("s.meta"));
  CHECK(meta.find("hidden=160") != std::string::npos);
  CHECK(meta.find("shortfall=0") != std::string::npos);

  run_cli("split " + tmp.file("g.edges") + " --fraction 0.2 --seed 7 --out-prefix " +
          tmp.file("s2"));
  CHECK(slurp(tmp.file("s.train.edges")) == slurp(tmp.file("s2.train.edges")));
  CHECK(slurp(tmp.file("s.test.edges")) == slurp(tmp.file("s2.test.edges")));
}

TEST_CASE("embed then eval equals single-shot compare for the same seed") {
  TempDir tmp;
  run_cli("generate ws --nodes 300 --ring-k 4 --seed 3 --out " + tmp.file("g.edges"));

  // compare with one seed
  RunResult cmp = run_cli("compare " + tmp.file("g.edges") +
                          " --scorers ssne --fraction 0.2 --seeds 1 --seed 5"
                          " --order 4 --proportion 0.1 --samples 50000 --out " +
                          tmp.file("cmp.csv"));
  CHECK(cmp.exit_code == 0);

  // the same split, embedding, and evaluation through separate commands
  run_cli("split " + tmp.file("g.edges") + " --fraction 0.2 --seed 5 --out-prefix " +
          tmp.file("s"));
  RunResult emb = run_cli("embed " + tmp.file("s.train.edges") +
                          " --order 4 --proportion 0.1 --seed 5 --out " +
                          tmp.file("emb.bin"));
  CHECK(emb.exit_code == 0);
  RunResult ev = run_cli("eval --train " + tmp.file("s.train.edges") + " --test " +
                         tmp.file("s.test.edges") + " --scorer ssne --embedding " +
                         tmp.file("emb.bin") + " --samples 50000 --seed 5 --out " +
                         tmp.file("eval.csv"));
  CHECK(ev.exit_code == 0);

  // compare CSV: scorer,mean_auc,sd,params; eval CSV: scorer,auc,...
  std::string cmp_csv = slurp(tmp.file("cmp.csv"));
  std::string eval_csv = slurp(tmp.file("eval.csv"));
  auto second_field = [](const std::string& csv) {
    std::size_t nl = csv.find('\n');
    std::size_t c1 = csv.find(',', nl + 1);
    std::size_t c2 = csv.find(',', c1 + 1);
    return csv.substr(c1 + 1, c2 - c1 - 1);
  };
  CHECK(second_field(cmp_csv) == second_field(eval_csv));
}

TEST_CASE("embedding cache via the matrix dump gives the same result") {
  TempDir tmp;
  run_cli("generate ba --nodes 200 --m-attach 2 --seed 4 --out " + tmp.file("g.edges"));
  RunResult a = run_cli("embed " + tmp.file("g.edges") +
                        " --order 3 --proportion 0.2 --snham-out " + tmp.file("m.bin") +
                        " --out " + tmp.file("e1.bin"));
  CHECK(a.exit_code == 0);
  RunResult b = run_cli("embed " + tmp.file("g.edges") +
                        " --order 3 --proportion 0.2 --snham-in " + tmp.file("m.bin") +
                        " --out " + tmp.file("e2.bin"));
  CHECK(b.exit_code == 0);
  CHECK(slurp(tmp.file("e1.bin")) == slurp(tmp.file("e2.bin")));

  // mismatched order must be refused
  RunResult c = run_cli("embed " + tmp.file("g.edges") +
                        " --order 4 --proportion 0.2 --snham-in " + tmp.file("m.bin") +
                        " --out " + tmp.file("e3.bin"));
  CHECK(c.exit_code == 2);
}

TEST_CASE("grid emits one row per cell") {
  TempDir tmp;
  run_cli("generate ws --nodes 200 --ring-k 4 --seed 5 --out " + tmp.file("g.edges"));
  RunResult r = run_cli("grid " + tmp.file("g.edges") +
                        " --orders 2,3 --proportions 0.1,0.2 --seeds 1 --seed 1"
                        " --samples 2000 --out " + tmp.file("grid.csv"));
  CHECK(r.exit_code == 0);
  std::string csv = slurp(tmp.file("grid.csv"));
  int rows = 0;
  for (char ch : csv)
    if (ch == '\n') ++rows;
  CHECK(rows == 5);  // header + 4 cells
  CHECK(csv.rfind("h,p,mean_auc,sd,error", 0) == 0);
}

TEST_CASE("identical compare runs produce byte-identical CSV") {
  TempDir tmp;
  run_cli("generate ws --nodes 200 --ring-k 4 --seed 6 --out " + tmp.file("g.edges"));
  std::string args = "compare " + tmp.file("g.edges") +
                     " --scorers cn,ra,jaccard --fraction 0.2 --seeds 2 --seed 3"
                     " --samples 20000 --out ";
  CHECK(run_cli(args + tmp.file("a.csv")).exit_code == 0);
  CHECK(run_cli(args + tmp.file("b.csv")).exit_code == 0);
  CHECK(slurp(tmp.file("a.csv")) == slurp(tmp.file("b.csv")));
  CHECK(slurp(tmp.file("a.csv")).rfind("scorer,mean_auc,sd,params", 0) == 0);
}

TEST_CASE("unknown scorer name exits 2 before computing") {
  TempDir tmp;
  run_cli("generate ws --nodes 100 --ring-k 4 --seed 1 --out " + tmp.file("g.edges"));
  RunResult r = run_cli("compare " + tmp.file("g.edges") +
                        " --scorers cn,deepwalk --out " + tmp.file("x.csv"));
  CHECK(r.exit_code == 2);
  CHECK(!fs::exists(tmp.file("x.csv")));
}
