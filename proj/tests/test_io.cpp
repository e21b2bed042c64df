#include <doctest.h>

#include <string>

#include "xpoincare/errors.hpp"
#include "xpoincare/io.hpp"
#include "xpoincare/sampling.hpp"

using namespace xpoincare;

namespace {

std::size_t parse_error_position(const std::string& text) {
  try {
    io::parse_element(text);
  } catch (const ParseError& e) {
    return e.position();
  }
  return static_cast<std::size_t>(-2);
}

}  // namespace

TEST_CASE("element documents") {
  const GroupParams z = io::parse_element("{}");
  CHECK(z.to_vector().isZero());

  const GroupParams g = io::parse_element(
      R"({"alpha": 1.5, "a": [1, 2, 3, 4], "omega": [0.1, 0, 0, -0.2], "u": [0, 1, 0], "theta": [0, 0, 3]})");
  CHECK(g.alpha == 1.5);
  CHECK(g.a == Vec4(1, 2, 3, 4));
  CHECK(g.xl.omega.lower() == Vec4(0.1, 0, 0, -0.2));
  CHECK(g.xl.u.spatial() == Vec3(0, 1, 0));
  CHECK(g.xl.theta.vector() == Vec3(0, 0, 3));

  CHECK(io::format_element(GroupParams::identity()) ==
        R"({"alpha":0,"a":[0,0,0,0],"omega":[0,0,0,0],"u":[0,0,0],"theta":[0,0,0]})");
}

TEST_CASE("element round trip is exact") {
  Rng rng(51);
  for (int i = 0; i < 500; ++i) {
    const GroupParams g = random_element(rng, SamplingDomain::wide());
    const std::string text = io::format_element(g);
    const GroupParams back = io::parse_element(text);
    CHECK(back.to_vector() == g.to_vector());
    CHECK(io::format_element(back) == text);
  }
}

TEST_CASE("element parse errors") {
  CHECK_THROWS_AS(io::parse_element("[1,2]"), ParseError);
  CHECK_THROWS_AS(io::parse_element(R"({"a": [1, 2, 3]})"), ParseError);
  CHECK_THROWS_AS(io::parse_element(R"({"u": [1, 2, 3, 4]})"), ParseError);
  CHECK_THROWS_AS(io::parse_element(R"({"alpha": "x"})"), ParseError);
  CHECK_THROWS_AS(io::parse_element(R"({"alpha": 1e999})"), ParseError);
  CHECK_THROWS_AS(io::parse_element(R"({"alpha": NaN})"), ParseError);
  CHECK_THROWS_AS(io::parse_element(R"({"beta": 1})"), ParseError);
  CHECK(parse_error_position(R"({"alpha": 1, "beta": 1})") == 13);
  CHECK(parse_error_position(R"({"a": [1, 2,)") == 12);
}

TEST_CASE("number formatting") {
  CHECK(io::format_number(0.1) == "0.10000000000000001");
  CHECK(io::format_number(-0.0) == "0");
  CHECK(io::format_number(2.0) == "2");
  CHECK(io::format_number(1.0 / 0.0) == "null");
}

TEST_CASE("matrix output") {
  Eigen::MatrixXd m(2, 2);
  m << 1, 0.5, -2, 0;
  CHECK(io::format_matrix(m, io::MatrixFormat::Json) == "[[1,0.5],[-2,0]]\n");
  CHECK(io::format_matrix(m, io::MatrixFormat::Csv) == "1,0.5\n-2,0\n");
  CHECK(io::format_matrix(m, io::MatrixFormat::Csv, {"x", "y"}) == ",x,y\nx,1,0.5\ny,-2,0\n");
  CHECK(io::format_matrix(m, io::MatrixFormat::Json, {"x", "y"}) ==
        "{\"rows\":[\"x\",\"y\"],\"columns\":[\"x\",\"y\"],\"matrix\":[[1,0.5],[-2,0]]}\n");
  Eigen::Matrix<bool, Eigen::Dynamic, Eigen::Dynamic> mask(2, 2);
  mask << true, false, true, true;
  CHECK(io::format_matrix(m, io::MatrixFormat::Json, {}, &mask) == "[[1,null],[-2,0]]\n");
  CHECK(io::format_matrix(m, io::MatrixFormat::Csv, {}, &mask) == "1,\n-2,0\n");
  CHECK(io::generator_labels().size() == 15);
  CHECK(io::generator_labels()[14] == "Gs");
}

TEST_CASE("matrix input") {
  CHECK(std::holds_alternative<Mat4>(io::parse_matrix("[[1,0,0,0],[0,1,0,0],[0,0,1,0],[0,0,0,1]]")));
  CHECK(std::holds_alternative<Mat5>(
      io::parse_matrix("[[1,0,0,0,0],[0,1,0,0,0],[0,0,1,0,0],[0,0,0,1,0],[0,0,0,0,1]]")));
  const auto affine = io::parse_matrix(
      R"({"M": [[1,0,0,0,0],[0,1,0,0,0],[0,0,1,0,0],[0,0,0,1,0],[0,0,0,0,1]], "t": [1,2,3,4,5]})");
  REQUIRE(std::holds_alternative<AffineRep>(affine));
  CHECK(std::get<AffineRep>(affine).t == (Vec5() << 1, 2, 3, 4, 5).finished());

  Rng rng(52);
  const GroupParams g = random_element(rng);
  const Mat6 full = to_affine(g).matrix();
  const auto six = io::parse_matrix(io::format_matrix(full, io::MatrixFormat::Json));
  REQUIRE(std::holds_alternative<AffineRep>(six));
  CHECK((std::get<AffineRep>(six).M - to_affine(g).M).cwiseAbs().maxCoeff() < 1e-14);

  CHECK_THROWS_AS(io::parse_matrix("[[1,0],[0,1]]"), ParseError);
  CHECK_THROWS_AS(io::parse_matrix("[[1,0,0],[0,1]]"), ParseError);
  CHECK_THROWS_AS(io::parse_matrix(R"({"M": [[1]]})"), ParseError);
  CHECK_THROWS_AS(io::parse_matrix(R"({"M": [], "t": [], "x": 1})"), ParseError);
}

TEST_CASE("constants table") {
  const auto& f = StructureConstants::extended_poincare();
  const std::string csv = io::format_constants_csv(f, false);
  CHECK(csv.rfind("a,b,c,f\n", 0) == 0);
  CHECK(csv.find("\nGam1,P1,Gs,-1\n") != std::string::npos);
  CHECK(csv.find("\nJ1,J2,J3,1\n") != std::string::npos);
  CHECK(io::parse_constants_csv(csv) == f);
  CHECK(io::parse_constants_csv(io::format_constants_csv(f, true)) == f);

  // Row count equals the number of nonzero (a < b) constants of the table.
  std::size_t rows = 0;
  for (char c : csv) rows += c == '\n';
  CHECK(rows - 1 == f.entries(true).size());
  std::size_t both = 0;
  for (char c : io::format_constants_csv(f, true)) both += c == '\n';
  CHECK(both - 1 == 2 * (rows - 1));

  const std::string json = io::format_constants_json(f, false);
  CHECK(json.find(R"({"a":"Gam1","b":"P1","c":"Gs","f":-1})") != std::string::npos);

  CHECK(io::format_rational(Rational(-3, 4)) == "-3/4");
  CHECK_THROWS_AS(io::parse_constants_csv("a,b,c,f\nJ1,J2,J9,1\n"), ParseError);
  CHECK_THROWS_AS(io::parse_constants_csv("J1,J2,J3,x\n"), ParseError);
  CHECK_THROWS_AS(io::parse_constants_csv("J1,J2,J3\n"), ParseError);
  const StructureConstants half = io::parse_constants_csv("J1,J2,J3,1/2\n");
  CHECK(half(Generator::J2, Generator::J1, Generator::J3) == Rational(-1, 2));
}
