#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <unistd.h>

#include "doctest.h"
#include "json.hpp"
#include "thermoid/cli/app.hpp"

namespace {

struct Outcome {
  int status;
  std::string out;
  std::string err;
};

Outcome run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int status = thermoid::cli::run(args, out, err);
  return {status, out.str(), err.str()};
}

bool contains(const std::string& haystack, const std::string& needle) {
  return haystack.find(needle) != std::string::npos;
}

class TempFile {
 public:
  explicit TempFile(const std::string& content) {
    static int counter = 0;
    path_ = (std::filesystem::temp_directory_path() /
             ("thermoid_test_" + std::to_string(::getpid()) + "_" + std::to_string(counter++) + ".txt"))
                .string();
    std::ofstream(path_) << content;
  }
  ~TempFile() { std::filesystem::remove(path_); }
  const std::string& path() const { return path_; }

 private:
  std::string path_;
};

}  // namespace

TEST_CASE("expand") {
  CHECK(run({"expand", "D(2,1,4)"}).out == "-g1 / g2\n");
  CHECK(run({"expand", "--reduce", "J(3,4;1,2)"}).out == "1\n");
  CHECK(run({"expand", "DD(3,1,2;2,1)"}).out == "f12\n");
  CHECK(run({"expand", "D(T,p,V)"}).out == "f1\n");
  CHECK(run({"expand", "--reduce", "D(3,1,4)"}).out == "1 / g2\n");
  const auto j = nlohmann::json::parse(run({"expand", "--json", "cp"}).out);
  CHECK(j["numerator"] == "f*g2");
  CHECK(j["denominator"] == "f2");
}

TEST_CASE("eval") {
  const Outcome r = run({"eval", "--model", "ideal", "--gamma", "5/3", "--at", "2,3", "cp - cv"});
  CHECK(r.status == 0);
  CHECK(r.out == "1\n");
  CHECK(run({"eval", "--at", "2,3", "J(3,4;1,2)"}).out == "1\n");
  CHECK(run({"eval", "--model", "vdw", "--at", "2,3", "J(3,4;1,2)"}).out == "1\n");
  CHECK(run({"eval", "--at", "2,3", "cp"}).out == "2.5\n");
  CHECK(run({"eval", "--at", "2,3", "E"}).status == 2);
  CHECK(run({"eval", "--at", "-1,3", "cp"}).status == 2);
  CHECK(run({"eval", "--model", "steam", "--at", "2,3", "cp"}).status == 2);
}

TEST_CASE("verify exit status follows the batch") {
  CHECK(run({"verify", "cp - cv = T*D(1,3,2)*D(2,3,1)"}).status == 0);
  const Outcome bad = run({"verify", "cp = cv"});
  CHECK(bad.status == 1);
  CHECK(contains(bad.out, "status: refuted"));
  CHECK(contains(bad.out, "summary: 0/1 proved"));
  CHECK(run({"verify", "D(3,1,4) = D(2,4,1)", "cp = cv"}).status == 1);
  CHECK(run({"verify", "--no-constraints", "D(3,1,4) = D(2,4,1)"}).status == 1);

  TempFile file("# Maxwell relations\nD(3,1,4) = D(2,4,1)\nD(3,2,4) = -D(1,4,2)\n");
  const Outcome r = run({"verify", "--file", file.path(), "--grid", "1:2:2,1:2:2"});
  CHECK(r.status == 0);
  CHECK(contains(r.out, "summary: 2/2 proved"));

  const auto j = nlohmann::json::parse(run({"verify", "--json", "cp = cv"}).out);
  CHECK(j["proved"] == 0);
  CHECK(j["reports"][0]["status"] == "refuted");
}

TEST_CASE("maxwell, discover, enumerate, selftest") {
  const Outcome m = run({"maxwell"});
  CHECK(m.status == 0);
  CHECK(contains(m.out, "summary: 4/4 proved"));

  const Outcome d = run({"discover"});
  CHECK(d.status == 0);
  CHECK(contains(d.out, "failures: 0\n"));
  CHECK(contains(d.out, "identical_reduced_bases: true\n"));
  CHECK(contains(d.out, "  x521 - x621 - x721 + x821\n"));

  CHECK(run({"enumerate", "triples"}).out == "336\n");
  CHECK(run({"enumerate", "jacobians"}).out == "1680\n");
  CHECK(run({"enumerate", "seconds"}).out == "18816\n");
  CHECK(run({"enumerate", "seconds", "--list", "--limit", "2"}).out == "((1,2,3),1,2)\n((1,2,3),1,3)\n");

  const Outcome s = run({"selftest"});
  CHECK(s.status == 0);
  CHECK(contains(s.out, "selftest passed"));
}

TEST_CASE("groebner on a relation file") {
  TempFile file("vars: x y\n# circle and line\nx^2 + y^2 - 1\nx - y\n");
  const Outcome r = run({"groebner", "--file", file.path()});
  CHECK(r.status == 0);
  CHECK(contains(r.out, "  x - y\n"));
  CHECK(contains(r.out, "  y^2 - 1/2\n"));
  CHECK(run({"groebner", "--file", file.path(), "--order", "revlex"}).status == 2);
  CHECK(run({"groebner", "--file", "/nonexistent/relations.txt"}).status == 2);
}

TEST_CASE("errors give a diagnostic and exit 2") {
  const Outcome r = run({"expand", "D(3,1,1)"});
  CHECK(r.status == 2);
  CHECK(contains(r.err, "position 7"));
  CHECK(run({}).status == 2);
  CHECK(run({"bogus"}).status == 2);
  CHECK(run({"expand"}).status == 2);
  CHECK(run({"verify"}).status == 2);
  CHECK(run({"enumerate", "quads"}).status == 2);
  CHECK(run({"--help"}).status == 0);
}
