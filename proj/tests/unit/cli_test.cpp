#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "defcol/commands.hpp"
#include "defcol/corpus.hpp"
#include "defcol/error.hpp"
#include "defcol/gadgets.hpp"
#include "defcol/graph_io.hpp"

namespace defcol::cli {
namespace {

namespace fs = std::filesystem;

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("defcol-cli-" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string write(const std::string& name, const PlaneGraph& g) {
    const auto path = (dir_ / name).string();
    std::ofstream(path) << write_rotation(g);
    return path;
  }
  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  static std::string slurp(const std::string& p) {
    std::ifstream in(p);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
  }

  fs::path dir_;
  Common common_;
};

TEST_F(Cli, Crc32MatchesCheckValue) { EXPECT_EQ(crc32_digest("123456789"), "crc32:cbf43926"); }

TEST_F(Cli, GadgetWritesRotationAndSidecar) {
  GadgetArgs a;
  a.family = "X";
  a.D = 1;
  a.out = path("x1.rot");
  std::ostringstream out;
  ASSERT_EQ(run_gadget(a, common_, out), kOk);
  EXPECT_EQ(parse_rotation(slurp(a.out)), gen_X(1).graph);
  const json sidecar = json::parse(slurp(a.out + ".json"));
  EXPECT_EQ(sidecar["schema"], kSchema);
  EXPECT_EQ(sidecar["verification"]["status"], "pass");
  EXPECT_EQ(json::parse(out.str()), sidecar);

  GadgetArgs to_stdout;
  to_stdout.family = "T";
  to_stdout.D = 0;
  std::ostringstream rot;
  ASSERT_EQ(run_gadget(to_stdout, common_, rot), kOk);
  EXPECT_EQ(parse_rotation(rot.str()), gen_T(0).graph);
}

TEST_F(Cli, SolveExpectations) {
  SolveArgs a;
  a.graph = write("x1.rot", gen_X(1).graph);
  a.spec = "0,0,1";
  a.expect = "infeasible";
  std::ostringstream out;
  EXPECT_EQ(run_solve(a, common_, out), kOk);
  const json r = json::parse(out.str());
  EXPECT_EQ(r["status"], "infeasible");
  EXPECT_FALSE(r.contains("millis"));

  a.expect = "feasible";
  std::ostringstream wrong;
  EXPECT_EQ(run_solve(a, common_, wrong), kCheckFailed);

  Common tiny = common_;
  tiny.budget.nodes = 3;
  a.expect = "infeasible";
  std::ostringstream unknown;
  EXPECT_EQ(run_solve(a, tiny, unknown), kCheckFailed);
  EXPECT_EQ(json::parse(unknown.str())["status"], "unknown");
  EXPECT_EQ(json::parse(unknown.str())["check"], "unverified-budget");

  a.spec = "0,0,2";
  a.expect.reset();
  std::ostringstream feasible;
  EXPECT_EQ(run_solve(a, common_, feasible), kOk);
  EXPECT_EQ(json::parse(feasible.str())["coloring"].size(), 21u);
}

TEST_F(Cli, CheckCycles) {
  CheckCyclesArgs a;
  a.forbid = "3,4,6";
  a.graphs = {write("c8.rot", corpus::cycle_graph(8))};
  a.spectrum = true;
  std::ostringstream out;
  EXPECT_EQ(run_check_cycles(a, common_, out), kOk);
  EXPECT_EQ(json::parse(out.str())["results"][0]["spectrum"], json::array({8}));
  a.graphs = {write("c4.rot", corpus::cycle_graph(4))};
  std::ostringstream bad;
  EXPECT_EQ(run_check_cycles(a, common_, bad), kCheckFailed);
  EXPECT_EQ(json::parse(bad.str())["results"][0]["present"], json::array({4}));
}

TEST_F(Cli, DischargeAndCsv) {
  DischargeArgs a;
  a.section = "unbal2";
  a.graphs = {write("c8.rot", corpus::cycle_graph(8))};
  a.csv = path("t.csv");
  a.ledger = true;
  std::ostringstream out;
  ASSERT_EQ(run_discharge(a, common_, out), kOk);
  const std::string csv = slurp(a.csv);
  EXPECT_EQ(csv.rfind("graph,source,target,amount,rule\n", 0), 0u);
  EXPECT_NE(csv.find("R3A"), std::string::npos);

  a.section = "bal2";
  a.graphs = {write("c4.rot", corpus::cycle_graph(4))};
  a.csv.clear();
  std::ostringstream rejected;
  EXPECT_EQ(run_discharge(a, common_, rejected), kUsage);
  EXPECT_EQ(json::parse(rejected.str())["results"][0]["status"], "rejected");
}

TEST_F(Cli, Color55MinDAndCnf) {
  Color55Args c;
  c.graph = write("f.rot", gen_F(1, 3).graph);
  std::ostringstream out;
  ASSERT_EQ(run_color55(c, common_, out), kOk);
  const json r = json::parse(out.str());
  EXPECT_EQ(r["status"], "pass");
  EXPECT_EQ(r["coloring"].size(), 30u);

  MinDArgs m;
  m.graph = write("c5.rot", corpus::cycle_graph(5));
  std::ostringstream md;
  ASSERT_EQ(run_min_d(m, common_, md), kOk);
  EXPECT_EQ(json::parse(md.str())["D"], 1);

  CnfArgs cnf;
  cnf.graph = m.graph;
  cnf.spec = "0,0";
  std::ostringstream dimacs;
  ASSERT_EQ(run_cnf(cnf, common_, dimacs), kOk);
  EXPECT_NE(dimacs.str().find("p cnf 10 "), std::string::npos);
}

TEST_F(Cli, VerifyGadgetAndCorpusAuditAreDeterministic) {
  VerifyGadgetArgs v;
  v.families = {"T", "H"};
  v.D = 1;
  std::ostringstream one, four;
  Common c1 = common_, c4 = common_;
  c4.jobs = 4;
  ASSERT_EQ(run_verify_gadget(v, c1, one), kOk);
  ASSERT_EQ(run_verify_gadget(v, c4, four), kOk);
  EXPECT_EQ(one.str(), four.str());
  EXPECT_EQ(json::parse(one.str())["results"].size(), 4u);

  CorpusAuditArgs a;
  a.c4_free_count = 10;
  std::ostringstream s1, s4;
  ASSERT_EQ(run_corpus_audit(a, c1, s1), kOk);
  ASSERT_EQ(run_corpus_audit(a, c4, s4), kOk);
  EXPECT_EQ(s1.str(), s4.str());
  EXPECT_EQ(json::parse(s1.str())["failures"], 0);
}

TEST_F(Cli, InputErrors) {
  EXPECT_THROW(load_graph(path("missing.rot")), Error);
  std::ofstream(path("bad.rot")) << "planar-rot 1\n0: 1\n1: 2\n";
  SolveArgs a;
  a.graph = path("bad.rot");
  a.spec = "0,0";
  std::ostringstream out;
  EXPECT_THROW(run_solve(a, common_, out), Error);
  GadgetArgs g;
  g.family = "F";
  g.D = 1;
  g.l = 4;
  EXPECT_THROW(run_gadget(g, common_, out), Error);
}

}  // namespace
}  // namespace defcol::cli
