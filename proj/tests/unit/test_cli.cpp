#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli/cli.hpp"
#include "cli/manifest.hpp"

namespace tworoot::cli {
namespace {

struct Outcome {
  int code = -1;
  std::string out;
  std::string err;
};

Outcome run_cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  Outcome o;
  o.code = run(args, out, err);
  o.out = out.str();
  o.err = err.str();
  return o;
}

bool contains(const std::string& haystack, const std::string& needle) {
  return haystack.find(needle) != std::string::npos;
}

TEST(Cli, UsageErrorsExitTwo) {
  EXPECT_EQ(run_cli({}).code, kExitUsage);
  EXPECT_EQ(run_cli({"frobnicate"}).code, kExitUsage);
  EXPECT_EQ(run_cli({"search"}).code, kExitUsage);
  EXPECT_EQ(run_cli({"search", "--group", "x7"}).code, kExitUsage);
  EXPECT_EQ(run_cli({"search", "--group", "3", "--jobs", "0"}).code, kExitUsage);
  EXPECT_EQ(run_cli({"classify", "--group", "5", "--char", "1,2"}).code, kExitUsage);
  EXPECT_EQ(run_cli({"sumenum", "--weight", "4", "--format", "xml"}).code, kExitUsage);
  EXPECT_EQ(run_cli({"verify-paper", "--claim", "no.such-claim"}).code, kExitUsage);
  EXPECT_EQ(run_cli({"table", "check", "/nonexistent/table.tbl"}).code, kExitUsage);
}

TEST(Cli, HelpExitsZero) {
  const Outcome o = run_cli({"--help"});
  EXPECT_EQ(o.code, kExitOk);
  EXPECT_TRUE(contains(o.out, "verify-paper"));
  EXPECT_EQ(run_cli({"search", "--help"}).code, kExitOk);
}

TEST(Cli, ClassifyOutlierRecords) {
  const Outcome o = run_cli({"classify", "--group", "12", "--char", "1,0,0,1,0,0,1,0,0,-1,0,0", "--format", "records"});
  ASSERT_EQ(o.code, kExitOk) << o.err;
  EXPECT_EQ(o.out,
            "record=classification group=12 coefficients=1,0,0,1,0,0,1,0,0,-1,0,0 degree=2 two_root=yes "
            "form=OutlierIV k=3 base=0 sign=1 plus=0,3,6 minus=9\n");
}

TEST(Cli, ClassifyNonTwoRootIsNotAnError) {
  const Outcome o = run_cli({"classify", "--group", "5", "--char", "3,0,0,0,0", "--format", "records"});
  EXPECT_EQ(o.code, kExitOk);
  EXPECT_TRUE(contains(o.out, "two_root=no form=NotTwoRoot"));
}

TEST(Cli, HumanOutputIsAligned) {
  const Outcome o = run_cli({"classify", "--group", "12", "--char", "1,0,0,1,0,0,1,0,0,-1,0,0"});
  ASSERT_EQ(o.code, kExitOk);
  EXPECT_TRUE(contains(o.out, "form:         OutlierIV\n"));
}

TEST(Cli, SumenumWeightFourIsEmpty) {
  const Outcome o = run_cli({"sumenum", "--weight", "4", "--order-bound", "60", "--format", "records"});
  EXPECT_EQ(o.code, kExitOk);
  EXPECT_EQ(o.out, "record=enumeration weight=4 order_bound=60 classes=0\n");
}

TEST(Cli, SumenumWeightSixHasOneClass) {
  const Outcome o = run_cli({"sumenum", "--weight", "6", "--order-bound", "30", "--format", "records"});
  EXPECT_EQ(o.code, kExitOk);
  EXPECT_TRUE(contains(o.out, "classes=1\n"));
  EXPECT_TRUE(contains(o.out, "record=class index=0 terms="));
}

TEST(Cli, Sumdecomp) {
  const Outcome ok = run_cli({"sumdecomp", "--sum", "E(5),E(5)^2,E(5)^3,E(5)^4,1,1,-1", "--format", "records"});
  EXPECT_EQ(ok.code, kExitOk);
  EXPECT_TRUE(contains(ok.out, "record=decomposition weight=7 parts=2 minimal=no\n"));
  EXPECT_TRUE(contains(ok.out, "prime=5"));
  const Outcome bad = run_cli({"sumdecomp", "--sum", "E(5),1"});
  EXPECT_EQ(bad.code, kExitFailure);
  EXPECT_TRUE(contains(bad.err, "does not vanish"));
  EXPECT_EQ(run_cli({"sumdecomp", "--sum", "E(5) +"}).code, kExitUsage);
}

TEST(Cli, SearchRecords) {
  const Outcome o = run_cli({"search", "--group", "3", "--format", "records"});
  ASSERT_EQ(o.code, kExitOk);
  EXPECT_EQ(o.out.rfind("record=search group=3 order=3 solutions=19 ", 0), 0U);
  std::size_t lines = 0;
  for (char ch : o.out) lines += ch == '\n' ? 1 : 0;
  EXPECT_EQ(lines, 20U);
  EXPECT_FALSE(contains(o.out, "elapsed"));
  EXPECT_TRUE(contains(run_cli({"search", "--group", "3", "--timing"}).out, "elapsed"));
}

TEST(Cli, SearchRespectsMaxOrder) {
  EXPECT_NE(run_cli({"search", "--group", "25"}).code, kExitOk);
  EXPECT_EQ(run_cli({"search", "--group", "5", "--max-order", "4"}).code == kExitOk, false);
}

TEST(Cli, OutputIsIndependentOfJobs) {
  for (const auto& base : std::vector<std::vector<std::string>>{
           {"search", "--group", "2x6", "--format", "records"},
           {"sumenum", "--weight", "6", "--order-bound", "30", "--format", "records"},
           {"verify-paper", "--claim", "vanishing.weight-six", "--claim", "search.forbidden-types", "--format",
            "records"}}) {
    auto one = base;
    one.insert(one.end(), {"--jobs", "1"});
    auto three = base;
    three.insert(three.end(), {"--jobs", "3"});
    const Outcome a = run_cli(one);
    const Outcome b = run_cli(three);
    EXPECT_EQ(a.code, b.code);
    EXPECT_EQ(a.out, b.out) << base.front();
  }
}

TEST(Cli, TableCommands) {
  const Outcome check = run_cli({"table", "check", "d30", "--format", "records"});
  EXPECT_EQ(check.code, kExitOk);
  EXPECT_TRUE(contains(check.out, "spectrum=1,2,3,5,15"));
  EXPECT_TRUE(contains(check.out, "status=valid"));

  const Outcome g16 = run_cli({"table", "genchar", "d30", "--fun", "chi16", "--format", "records"});
  EXPECT_EQ(g16.code, kExitOk);
  EXPECT_TRUE(contains(g16.out, "generalized_character=yes"));
  const Outcome g15 = run_cli({"table", "genchar", "d30", "--fun", "chi15", "--format", "records"});
  EXPECT_EQ(g15.code, kExitOk);
  EXPECT_TRUE(contains(g15.out, "generalized_character=no"));

  const Outcome tr = run_cli({"table", "tworoot", "sl23", "--fun", "chi7", "--format", "records"});
  EXPECT_EQ(tr.code, kExitOk);
  EXPECT_TRUE(contains(tr.out, "two_root=yes"));

  EXPECT_NE(run_cli({"table", "genchar", "d30", "--fun", "chi99"}).code, kExitOk);
}

TEST(Cli, TableCheckFailsOnBrokenFile) {
  const auto path = std::filesystem::temp_directory_path() / "tworoot_cli_broken.tbl";
  {
    std::ofstream f(path);
    f << "group B\norder 2\nclasses 2\nclass 0 size 1 elemorder 1 inverse 0\nclass 1 size 1 elemorder 2 inverse 1\n"
         "irr 0: 1, 1\nirr 1: 1, 1\n";
  }
  const Outcome bad = run_cli({"table", "check", path.string()});
  EXPECT_EQ(bad.code, kExitFailure);
  EXPECT_TRUE(contains(bad.err, "row orthogonality"));
  {
    std::ofstream f(path);
    f << "group B\norder 2\nclasses two\n";
  }
  const Outcome parse = run_cli({"table", "check", path.string()});
  EXPECT_EQ(parse.code, kExitFailure);
  EXPECT_TRUE(contains(parse.err, "line 3:"));
  std::filesystem::remove(path);
}

TEST(Cli, Primegraph) {
  const Outcome d30 = run_cli({"primegraph", "--table", "d30", "--function", "chi16", "--format", "records"});
  EXPECT_EQ(d30.code, kExitOk);
  EXPECT_TRUE(contains(d30.out, "record=graph vertices=2,3,5 edges=3-5 components=\"{2} {3,5}\"\n"));
  EXPECT_TRUE(contains(d30.out, "pi[1]=5"));
  EXPECT_TRUE(contains(d30.out, "component_unions=true"));

  const Outcome crossing = run_cli({"primegraph", "--spectrum", "1,5,7,35", "--degree", "12", "--format", "records"});
  EXPECT_EQ(crossing.code, kExitFailure);
  EXPECT_TRUE(contains(crossing.out, "crossing_edges=5-7"));

  const Outcome removed = run_cli({"primegraph", "--spectrum", "1,2,3,5,6,10,15,30", "--remove", "2", "--format", "records"});
  EXPECT_EQ(removed.code, kExitOk);
  EXPECT_TRUE(contains(removed.out, "vertices=3,5 edges=3-5"));

  EXPECT_EQ(run_cli({"primegraph", "--spectrum", "2,3"}).code, kExitUsage);
}

// Ids and anchors are part of the command-line contract; changes must be deliberate.
TEST(Cli, VerifyListMatchesTheManifest) {
  const std::vector<std::pair<std::string, std::string>> expected{
      {"vanishing.two-prime-cycles", "vanishing sums of p^a q^b-th roots split into rotated prime cycles"},
      {"vanishing.weight-four", "no minimal vanishing sum of weight four"},
      {"vanishing.weight-six", "one rotation class of minimal vanishing sums of weight six"},
      {"genchar.degree-congruence", "root-of-unity values on p-elements force degree congruences"},
      {"abelian.separating-element", "three distinct characters of an odd-order abelian group are separated"},
      {"search.norm-inequalities", "coefficient spread and count-triple inequality"},
      {"search.classification", "two-root characters of abelian groups take one of four forms"},
      {"search.explicit-examples", "computer-found outlier and small exceptional examples"},
      {"search.large-form-bounds", "six or seven summands force small groups and doubled roots"},
      {"search.twenty-types", "twenty possible types (k,l) on abelian groups"},
      {"search.forbidden-types", "cyclic groups of order 3p avoid the forbidden types"},
      {"prime_graph.residue-labels", "degree within 2 of a multiple of each prime at least 5"},
      {"prime_graph.component-unions", "residue classes are unions of components without 2 and 3"},
      {"prime_graph.disconnection", "three nonempty residue classes disconnect the graph without 2"},
      {"prime_graph.crt-construction", "component-constant values glued by the Chinese remainder theorem"},
      {"chartable.dihedral-example", "dihedral group of order 30 with values 0, 1 and -2"},
      {"chartable.sl23-example", "SL(2,3) permutation constituent with values +-1 off the identity"},
  };
  std::string text;
  for (const auto& [id, anchor] : expected) text += id + "\t" + anchor + "\n";
  const Outcome o = run_cli({"verify-paper", "--list"});
  EXPECT_EQ(o.code, kExitOk);
  EXPECT_EQ(o.out, text);

  ASSERT_EQ(manifest_claims().size(), expected.size());
  for (std::size_t i = 0; i < expected.size(); ++i) {
    EXPECT_EQ(manifest_claims()[i].id, expected[i].first);
    EXPECT_EQ(manifest_claims()[i].anchor, expected[i].second);
  }
}

TEST(Cli, VerifySelectedClaims) {
  const Outcome o = run_cli({"verify-paper", "--claim", "vanishing.weight-four", "--claim",
                             "chartable.sl23-example", "--format", "records"});
  EXPECT_EQ(o.code, kExitOk);
  EXPECT_TRUE(contains(o.out, "record=claim claim=vanishing.weight-four status=pass"));
  EXPECT_TRUE(contains(o.out, "record=claim claim=chartable.sl23-example status=pass"));
  EXPECT_TRUE(contains(o.out, "record=claim claim=search.classification status=skipped"));
  EXPECT_TRUE(contains(o.out, "record=summary pass=2 fail=0 skipped=15\n"));
}

TEST(Cli, VerifyWritesDetailFiles) {
  const auto dir = std::filesystem::temp_directory_path() / "tworoot_cli_details";
  std::filesystem::remove_all(dir);
  const Outcome o = run_cli({"verify-paper", "--claim", "vanishing.weight-six", "--details", dir.string()});
  EXPECT_EQ(o.code, kExitOk);
  EXPECT_TRUE(std::filesystem::exists(dir / "vanishing.weight-six.txt"));
  std::filesystem::remove_all(dir);
}

TEST(Manifest, RunManifestReportsSkipsAndRejectsUnknownIds) {
  const auto results = run_manifest({.jobs = 1, .only = {"vanishing.weight-four"}});
  ASSERT_EQ(results.size(), manifest_claims().size());
  for (const auto& r : results) {
    EXPECT_EQ(r.status, r.info.id == "vanishing.weight-four" ? ClaimStatus::kPass : ClaimStatus::kSkipped);
  }
  EXPECT_THROW(run_manifest({.jobs = 1, .only = {"nope"}}), std::invalid_argument);
  EXPECT_NE(to_string(ClaimStatus::kPass), to_string(ClaimStatus::kFail));
}

}  // namespace
}  // namespace tworoot::cli
