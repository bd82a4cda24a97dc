// End-to-end tests of the polarbox command line tool.
// Usage: polarbox_cli_tests <path-to-polarbox> <data-dir>

#include <cstdio>
#include <unistd.h>
#include <fstream>
#include <iostream>
#include <string>

#include "cliutil.hpp"
#include "polarbox/rep_io.hpp"
#include "testutil.hpp"

using namespace polarbox;
using namespace polarbox::test;

namespace {

int failures = 0;

void check(bool ok, const std::string& what) {
  if (!ok) {
    ++failures;
    std::cerr << "FAILED: " << what << "\n";
  }
}

std::string write_temp(const std::string& name, const std::string& content) {
  std::string path = "/tmp/polarbox_cli_" + std::to_string(getpid()) + "_" + name;
  std::ofstream out(path);
  out << content;
  return path;
}

}  // namespace

int main(int argc, char** argv) {
  if (argc != 3) {
    std::cerr << "usage: polarbox_cli_tests <polarbox> <data-dir>\n";
    return 2;
  }
  const std::string cli = argv[1];
  const std::string data = argv[2];

  // conversion H -> V reproduces the wedge generators
  {
    CmdResult r = run_cmd(cli + " convert " + data + "/ex1.ine");
    check(r.code == 0, "convert ex1.ine exits 0");
    Rep rep = parse_rep(r.out);
    check(std::holds_alternative<VRep>(rep) && reps_equal(std::get<VRep>(rep), example1_v()),
          "convert ex1.ine emits V(P)");
  }

  // default V -> H route is the lifted one
  {
    CmdResult r = run_cmd(cli + " convert " + data + "/ex1.ext");
    check(r.code == 0, "convert ex1.ext exits 0");
    Rep rep = parse_rep(r.out);
    check(std::holds_alternative<HRep>(rep) && reps_equal(std::get<HRep>(rep), example1_h()),
          "convert ex1.ext emits H(P)");
  }

  // direct route on the pyramid
  {
    CmdResult r = run_cmd(cli + " convert --direct " + data + "/ex2.ext");
    check(r.code == 0, "convert --direct ex2.ext exits 0");
    Rep rep = parse_rep(r.out);
    check(std::holds_alternative<HRep>(rep) && reps_equal(std::get<HRep>(rep), example2_h()),
          "convert --direct ex2.ext emits H(P)");
  }

  // polar then convert chains through a pipe-friendly file
  {
    std::string qfile = write_temp("q.ine", run_cmd(cli + " polar " + data + "/ex1.ext").out);
    CmdResult r = run_cmd(cli + " convert " + qfile);
    Rep rep = parse_rep(r.out);
    check(std::holds_alternative<VRep>(rep) &&
              reps_equal(std::get<VRep>(rep), vrep({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}})),
          "polar | convert yields V(Q)");
    std::remove(qfile.c_str());
  }

  // output to file leaves stdout empty
  {
    std::string out = "/tmp/polarbox_cli_" + std::to_string(getpid()) + "_o.ext";
    CmdResult r = run_cmd(cli + " convert -o " + out + " " + data + "/ex1.ine");
    check(r.code == 0 && r.out.empty(), "convert -o writes no result to stdout");
    std::ifstream in(out);
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    check(reps_equal(std::get<VRep>(parse_rep(text)), example1_v()), "convert -o file content");
    std::remove(out.c_str());
  }

  // symcheck verdicts and exit codes
  {
    CmdResult yes = run_cmd(cli + " symcheck " + data + "/ex2.ext");
    check(yes.code == 0 && contains(yes.out, "HV-symmetric: yes") &&
              contains(yes.out, "(true,true,true,true)"),
          "symcheck ex2.ext: yes, all-true tuple, exit 0");
    CmdResult no = run_cmd(cli + " symcheck " + data + "/ex1.ext");
    check(no.code == 1 && contains(no.out, "HV-symmetric: no") &&
              contains(no.out, "origin-outside") &&
              contains(no.out, "(false,false,false,false)"),
          "symcheck ex1.ext: no, all-false tuple, exit 1");
    CmdResult cone = run_cmd(cli + " symcheck " + data + "/cone2.ext");
    check(cone.code == 0 && contains(cone.out, "HV-symmetric: yes"),
          "symcheck cone2.ext: pointed cones are symmetric");
    std::string pt = write_temp("origin.ext", "V-representation\nbegin\n1 3 rational\n1 0 0\nend\n");
    CmdResult unp = run_cmd(cli + " symcheck " + pt);
    check(unp.code == 1 && contains(unp.out, "polar-not-pointed"),
          "symcheck on {0}: polar not pointed verdict");
    std::remove(pt.c_str());
  }

  // certificates
  {
    CmdResult member = run_cmd(cli + " certify " + data + "/ex2.ext -- 0 0 0");
    check(member.code == 0 && contains(member.out, "member") &&
              contains(member.out, "lambda: 0 1/2 1/2 0"),
          "certify pyramid origin: midpoint certificate");
    CmdResult vertex = run_cmd(cli + " certify " + data + "/ex1.ext -- 1 1");
    check(vertex.code == 0 && contains(vertex.out, "lambda: 1") &&
              contains(vertex.out, "mu: 0 0"),
          "certify wedge vertex: unit lambda, zero mu");
    CmdResult non = run_cmd(cli + " certify " + data + "/ex1.ext -- 0 0");
    check(non.code == 1 && contains(non.out, "not a member"), "certify outside point");
  }

  // liftcompare table and CSV agree
  {
    std::string csv = "/tmp/polarbox_cli_" + std::to_string(getpid()) + "_lc.csv";
    CmdResult r = run_cmd(cli + " liftcompare --csv " + csv + " " + data + "/ex2.ext");
    check(r.code == 0 && contains(r.out, "route output_rows feasible_bases max_intermediate_rays"),
          "liftcompare prints the table header");
    std::ifstream in(csv);
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    check(contains(text, "route,output_rows,feasible_bases,max_intermediate_rays"),
          "liftcompare CSV header");
    check(contains(text, "lifted,4,") && contains(text, "direct,4,"),
          "liftcompare CSV rows carry the output counts");
    std::remove(csv.c_str());
  }

  // exit code 2: parse and usage errors
  {
    check(run_cmd(cli + " convert /nonexistent.ine").code == 2, "missing input file exits 2");
    std::string bad = write_temp("bad.ine", "H-representation\nbegin\n1 3 rational\n-1 x 0\nend\n");
    check(run_cmd(cli + " convert " + bad).code == 2, "non-rational token exits 2");
    std::remove(bad.c_str());
    check(run_cmd(cli + " polar " + data + "/ex1.ine").code == 2, "polar of an H-file exits 2");
    check(run_cmd(cli + " badcommand").code == 2, "unknown subcommand exits 2");
  }

  // exit code 3: infeasible
  {
    std::string inf = write_temp("inf.ine", "H-representation\nbegin\n2 2 rational\n-1 1\n0 -1\nend\n");
    check(run_cmd(cli + " convert " + inf).code == 3, "infeasible input exits 3");
    std::remove(inf.c_str());
  }

  // exit code 4: not pointed
  {
    std::string half = write_temp("half.ine", "H-representation\nbegin\n1 3 rational\n0 1 1\nend\n");
    check(run_cmd(cli + " convert " + half).code == 4, "half-plane exits 4");
    std::remove(half.c_str());
    std::string pt = write_temp("origin.ext", "V-representation\nbegin\n1 3 rational\n1 0 0\nend\n");
    check(run_cmd(cli + " convert --direct " + pt).code == 4, "unpointed polar exits 4");
    std::remove(pt.c_str());
  }

  // exit code 5: direct route without the origin
  {
    check(run_cmd(cli + " convert --direct " + data + "/ex1.ext").code == 5,
          "direct route without the origin exits 5");
    check(run_cmd(cli + " liftcompare " + data + "/ex1.ext").code == 5,
          "liftcompare without the origin exits 5");
  }

  // exit code 6: brute-force cap, flag and environment variable
  {
    check(run_cmd(cli + " --cap 2 liftcompare " + data + "/cube3.ext").code == 6,
          "--cap 2 liftcompare exits 6");
    check(run_cmd("POLARBOX_CAP=2 " + cli + " liftcompare " + data + "/cube3.ext").code == 6,
          "POLARBOX_CAP=2 liftcompare exits 6");
  }

  // determinism: identical invocations produce identical bytes
  {
    CmdResult a = run_cmd(cli + " convert " + data + "/ex2.ext");
    CmdResult b = run_cmd(cli + " convert " + data + "/ex2.ext");
    check(a.out == b.out, "repeated conversion is byte-identical");
    CmdResult c = run_cmd(cli + " --seed 7 symcheck " + data + "/ex2.ext");
    CmdResult d = run_cmd(cli + " --seed 7 symcheck " + data + "/ex2.ext");
    check(c.out == d.out, "repeated symcheck is byte-identical");
  }

  // emitted files re-parse to the canonical representation (bit-exact round trip)
  {
    CmdResult r = run_cmd(cli + " convert " + data + "/ex2.ine");
    VRep v = std::get<VRep>(parse_rep(r.out));
    check(emit_rep(canonicalize(v)) == r.out, "CLI output is canonical and re-emits identically");
  }

  if (failures == 0) {
    std::cout << "cli tests: all passed\n";
    return 0;
  }
  std::cerr << "cli tests: " << failures << " failure(s)\n";
  return 1;
}
