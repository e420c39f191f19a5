#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "helpers.hpp"
#include "oracle.hpp"
#include "sp2brst/cli.hpp"
#include "sp2brst/omega_file.hpp"
#include "sp2brst/solver.hpp"

using namespace sp2brst;
using testutil::parse;
using testutil::theory_path;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::filesystem::path scratch(const std::string& name) {
  const auto dir = std::filesystem::temp_directory_path() / "sp2brst_tests";
  std::filesystem::create_directories(dir);
  return dir / name;
}

void write(const std::filesystem::path& p, const std::string& text) {
  std::ofstream f(p, std::ios::binary);
  f << text;
}

InputError theory_error(const std::string& text) {
  try {
    parse_theory(text);
  } catch (const InputError& e) {
    return e;
  }
  FAIL("expected an input error");
  return InputError("");
}

ParseError parse_error(const std::string& text, const TheorySpec& spec) {
  try {
    parse_expression(text, spec);
  } catch (const ParseError& e) {
    return e;
  }
  FAIL("expected a parse error");
  return ParseError("", 0, 0);
}

}  // namespace

TEST_SUITE("cli_io") {

TEST_CASE("theory files") {
  const TheoryFile so3 = testutil::load("so3.json");
  CHECK(so3.spec.m() == 3);
  CHECK(so3.order == 6);
  CHECK(so3.spec.structure(1, 2, 3) == GradedPoly::constant(1));
  CHECK(so3.spec.structure(2, 1, 3) == GradedPoly::constant(-1));
  CHECK(so3.spec.structure(3, 1, 2) == GradedPoly::constant(1));
  CHECK(so3.observables.size() == 3);
  CHECK(so3.find_observable("casimir")->value ==
        parse("xi[1]^2 + xi[2]^2 + xi[3]^2", so3.spec));

  const TheoryFile empty = parse_theory(R"({"format": 1, "constraints": []})");
  CHECK(empty.spec.m() == 0);
  CHECK(MasterSolver(empty.spec, 3).omega1().is_zero());

  CHECK(std::string(theory_error(R"({"constraints": [{"parity": 0}],
      "U": {"1,1,1": "1"}})").what()).find("U[1,1,1]") != std::string::npos);
  theory_error(R"({"constraints": [{"parity": 0}, {"parity": 0}],
      "U": {"1,2,1": "1", "2,1,1": "1"}})");
  theory_error(R"({"constraints": [{"parity": 0}], "U": {"1,2,1": "1"}})");
  theory_error(R"({"format": 2})");
  theory_error(R"({"constraints": [{"parity": 2}]})");
  theory_error(R"({"constraints": [{"name": "xi"}]})");
  theory_error(R"({"constraints": [{"name": "a"}, {"name": "a"}]})");
  theory_error(R"({"colour": 1})");
  theory_error(R"({"constraints": [], "order": 1})");
  theory_error(R"({"constraints": [{"parity": 0}], "U": {"1,1": "1"}})");
  theory_error(R"({"constraints": [{"parity": 0}],
      "U": {"1,1,1": "xi[2]"}})");
  theory_error(R"({"constraints": [{"parity": 0}], "physical": [{}],
      "U": {"1,1,1": "xip[1]"}})");

  const std::string broken = "{\n  \"constraints\": [\n    {\"parity\": 0},,\n  ]\n}";
  const std::string msg = theory_error(broken).what();
  CHECK(msg.find("3:") != std::string::npos);

  const std::string bad_expr =
      R"({"constraints": [{"parity": 1}], "observables": ["xi[1]^2"]})";
  const std::string m2 = theory_error(bad_expr).what();
  CHECK(m2.find("observables[0]") != std::string::npos);
  CHECK(m2.find("1:1") != std::string::npos);
}

TEST_CASE("physical dependence of structure functions") {
  const std::string base =
      R"({"constraints": [{"parity": 0}, {"parity": 0}], "physical": [{}],
          "U": {"1,2,2": "xip[1]"})";
  theory_error(base + "}");
  const TheoryFile ok =
      parse_theory(base + R"(, "structure_may_depend_on_physical": true})");
  CHECK(ok.spec.structure(1, 2, 2) == parse("xip[1]", ok.spec));
}

TEST_CASE("expression parser") {
  const TheorySpec s({0, 1}, {0});
  CHECK(parse("2/4*xi[1] - (xi[1] + 1)^2", s) ==
        parse("-1 - 3/2*xi[1] - xi[1]^2", s));
  CHECK(parse("P[2,1]*P[2,1]", s) == parse("P[2,1]^2", s));
  CHECK(parse("C[1,1]*C[1,1]", s).is_zero());
  CHECK(parse("--xi[1]", s) == parse("xi[1]", s));

  ParseError e = parse_error("xi[1] + C[1,1]^2", s);
  CHECK(e.line() == 1);
  CHECK(e.column() == 9);
  e = parse_error("xi[1] +\n  xi[3]", s);
  CHECK(e.line() == 2);
  CHECK(e.column() == 3);
  e = parse_error("xi[1] * (2", s);
  CHECK(e.column() == 11);
  e = parse_error("1/0", s);
  CHECK(e.column() == 3);
  e = parse_error("P[1,3]", s);
  CHECK(e.column() == 1);
  e = parse_error("foo", s);
  CHECK(e.message().find("foo") != std::string::npos);
  parse_error("", s);
  parse_error("xi[1] xi[2]", s);
  parse_error("xip[2]", s);
  parse_error("xi[1]^-1", s);
}

TEST_CASE("serialization") {
  const TheorySpec s({0});
  const SymTensor o = MasterSolver(s, 3).omega1();
  CHECK(serialize(o({1})) == "xi[1]*C[1,1] + P[1,2]*pi[1]");
  CHECK(serialize(GradedPoly()) == "0");
  CHECK(serialize(parse("-1/2*xi[1]^2 + 3", s)) == "3 - 1/2*xi[1]^2");
}

TEST_CASE("serialization round trip") {
  for (const TheorySpec& s :
       {TheorySpec({0, 1}, {1}), so3_theory(), TheorySpec({1, 1})}) {
    RandomElements rng(s, 19);
    RandomOptions o;
    o.terms = 6;
    o.min_n = 0;
    o.physical = true;
    o.max_coefficient = 40;
    for (int i = 0; i < 100; ++i) {
      const GradedPoly x = rng.poly(o);
      CHECK(parse(serialize(x), s) == x);
    }
  }
}

TEST_CASE("Jacobi validation") {
  CHECK(validate_jacobi(so3_theory(), 6).ok());
  CHECK(validate_jacobi(abelian_theory({0, 1, 0}), 6).ok());
  CHECK(validate_jacobi(testutil::load("mixed.json").spec, 4).ok());
  CHECK(validate_jacobi(testutil::load("so3_vector.json").spec, 4).ok());

  const TheorySpec broken = testutil::load("broken_jacobi.json").spec;
  const JacobiReport rep = validate_jacobi(broken, 4);
  CHECK_FALSE(rep.ok());
  // Brute force over the constraint triples with the naive bracket.
  const oracle::Algebra alg(broken);
  int violated = 0;
  for (int i = 1; i <= 3; ++i) {
    for (int j = i; j <= 3; ++j) {
      for (int k = j; k <= 3; ++k) {
        const auto a = alg.var(broken.xi(i)), b = alg.var(broken.xi(j)),
                   c = alg.var(broken.xi(k));
        oracle::Poly jac = alg.bracket(a, alg.bracket(b, c));
        jac = oracle::Algebra::plus(jac, alg.bracket(b, alg.bracket(c, a)));
        jac = oracle::Algebra::plus(jac, alg.bracket(c, alg.bracket(a, b)));
        if (!jac.empty()) ++violated;
      }
    }
  }
  CHECK(violated == static_cast<int>(rep.violations.size()));
  REQUIRE(rep.violations.size() == 1);
  CHECK(rep.violations[0].value == parse("xi[2]*xi[3]", broken));
  CHECK(validate_jacobi(broken, 1).ok());
}

TEST_CASE("omega file round trip") {
  const TheoryFile so3 = testutil::load("so3.json");
  const MasterSolver solver(so3.spec, 4);
  SolverConfig cfg;
  cfg.order = 4;
  const SolverResult r = solver.solve(cfg);
  const std::string text = write_omega(r.omega, 4);
  const OmegaFile back = parse_omega("# emitted\n\n" + text, so3);
  CHECK(back.order == 4);
  CHECK(back.omega == r.omega);

  try {
    parse_omega("order = 4\nOmega[1] = xi[1] +\nOmega[2] = 0\n", so3);
    FAIL("expected an error");
  } catch (const InputError& e) {
    CHECK(std::string(e.what()).find("2:") != std::string::npos);
  }
  CHECK_THROWS_AS(parse_omega("Omega[3] = 0\n", so3), InputError);
  CHECK_THROWS_AS(parse_omega("Omega[1] = 0\n", so3), InputError);
}

TEST_CASE("solve pipeline") {
  const Run so3 = cli({"solve", theory_path("so3.json"), "--order", "4"});
  CHECK(so3.code == kExitPass);
  CHECK(so3.out.find("residual vanishes: yes") != std::string::npos);
  CHECK(so3.out.find("status: PASS") != std::string::npos);

  const Run again = cli({"solve", theory_path("so3.json"), "--order", "4"});
  CHECK(again.out == so3.out);

  const Run ab = cli({"solve", theory_path("abelian.json")});
  CHECK(ab.code == kExitPass);
  CHECK(ab.out.find("[Pi]\n(empty)") != std::string::npos);
  CHECK(ab.out.find("Omega[1] = xi[1]*C[1,1] + xi[2]*C[2,1] + xi[3]*C[3,1] + "
                    "P[1,2]*pi[1] + P[2,2]*pi[2] + P[3,2]*pi[3]") !=
        std::string::npos);

  const Run broken = cli({"solve", theory_path("broken_jacobi.json")});
  CHECK(broken.code == kExitInputError);
  CHECK(broken.out.find("jacobi: FAIL") != std::string::npos);
}

TEST_CASE("verify pipeline") {
  const auto good = scratch("so3_omega.txt");
  CHECK(cli({"solve", theory_path("so3.json"), "-k", "4", "--out",
             good.string()})
            .code == kExitPass);
  CHECK(cli({"verify", theory_path("so3.json"), good.string()}).code ==
        kExitPass);

  // Perturb one coefficient of Omega[1].
  const TheoryFile so3 = testutil::load("so3.json");
  OmegaFile f = parse_omega(sp2brst::read_text_file(good), so3);
  const auto& terms = f.omega({1}).terms();
  const auto target = std::next(terms.begin(), 3);
  f.omega.at({1}).add_term(target->first, Rational(1, 7));
  const auto bad = scratch("so3_omega_bad.txt");
  write(bad, write_omega(f.omega, 4));
  const Run v = cli({"verify", theory_path("so3.json"), bad.string()});
  CHECK(v.code == kExitVerificationFailure);
  CHECK(v.out.find("residual vanishes: no") != std::string::npos);

  const auto garbage = scratch("garbage.txt");
  write(garbage, "Omega[1] = xi[1] +* 2\n");
  CHECK(cli({"verify", theory_path("so3.json"), garbage.string()}).code ==
        kExitInputError);
}

TEST_CASE("lift pipeline") {
  const Run c = cli({"lift", theory_path("so3.json"), "--observable",
                     "casimir", "--order", "4"});
  CHECK(c.code == kExitPass);
  const Run x1 = cli({"lift", theory_path("so3_vector.json"), "--observable",
                      "x1"});
  CHECK(x1.code == kExitVerificationFailure);
  CHECK(x1.out.find("first class: no") != std::string::npos);
  CHECK(x1.out.find("xip[3]") != std::string::npos);
  CHECK(cli({"lift", theory_path("so3.json"), "--observable", "nope"}).code ==
        kExitInputError);
}

TEST_CASE("identity pipeline") {
  const Run r = cli({"check-identities", "--degree", "3", "--samples", "20",
                     "--seed", "7"});
  CHECK(r.code == kExitPass);
  const Run again = cli({"check-identities", "--degree", "3", "--samples",
                         "20", "--seed", "7"});
  CHECK(again.out == r.out);
}

TEST_CASE("input errors") {
  CHECK(cli({"solve", "/nonexistent/theory.json"}).code == kExitInputError);
  CHECK(cli({"frobnicate"}).code == kExitInputError);
  CHECK(cli({}).code == kExitInputError);
  CHECK(cli({"solve", theory_path("so3.json"), "--order", "1"}).code ==
        kExitInputError);
  CHECK(cli({"solve", theory_path("so3.json"), "--method", "magic"}).code ==
        kExitInputError);

  const auto bad = scratch("bad.json");
  write(bad, "{\"constraints\": [{\"parity\": 0}],\n \"U\": {\"1,1,1\": 1}}");
  const Run r = cli({"solve", bad.string()});
  CHECK(r.code == kExitInputError);
  CHECK_FALSE(r.err.empty());

  ::setenv("SP2_BRST_MAX_TERMS", "50", 1);
  const Run capped = cli({"solve", theory_path("so3.json"), "--order", "4"});
  ::unsetenv("SP2_BRST_MAX_TERMS");
  set_term_limit(1000000);
  CHECK(capped.code == kExitInputError);
  CHECK(capped.err.find("term") != std::string::npos);
}

}  // TEST_SUITE
