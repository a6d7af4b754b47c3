#include "doctest.h"

#include <sstream>

#include "mplab/io.hpp"

using namespace mplab;

namespace {
using G = GaussianRational;
}

TEST_CASE("rational literals") {
  CHECK(parse_rational("3") == 3);
  CHECK(parse_rational("-4/6") == Rational(-2, 3));
  CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
  CHECK_THROWS_AS(parse_rational("x"), ParseError);
  CHECK_THROWS_AS(parse_rational(""), ParseError);
  CHECK_THROWS_AS(parse_rational("1/"), ParseError);
}

TEST_CASE("polytope JSON") {
  CHECK(polytope_to_json(RationalPolytope::interval(1, 3)).dump() == R"({"dim":1,"vertices":[["1","1"],["3","1"]]})");
  CHECK(polytope_to_json(RationalPolytope::empty(1)).dump() == R"({"dim":1,"vertices":[]})");
  CHECK(polytope_to_json(RationalPolytope::point({Rational(-5, 2)})).dump() == R"({"dim":1,"vertices":[["-5","2"]]})");
}

TEST_CASE("polytope JSON round trip") {
  const std::vector<RationalPolytope> cases{
      RationalPolytope::empty(1),
      RationalPolytope::interval(Rational(-7, 3), Rational(12345678901234567, 2)),
      hull({RatVector{0, 0}, RatVector{1, Rational(1, 2)}, RatVector{0, 3}}),
      hull({RatVector{0, 0, 0}, RatVector{1, 0, 0}, RatVector{0, 1, 0}, RatVector{0, 0, Rational(1, 7)}}),
      RationalPolytope::empty(3)};
  for (const auto& p : cases) {
    const auto text = polytope_to_json(p).dump();
    CHECK(polytope_from_json(nlohmann::json::parse(text)) == p);
  }
  // Unsorted, redundant input is canonicalized.
  const auto j = nlohmann::json::parse(R"({"dim":1,"vertices":[["3","1"],["2","1"],["2","2"]]})");
  CHECK(polytope_from_json(j) == RationalPolytope::interval(1, 3));
  CHECK_THROWS_AS(polytope_from_json(nlohmann::json::parse(R"({"dim":1})")), ParseError);
  CHECK_THROWS_AS(polytope_from_json(nlohmann::json::parse(R"({"dim":1,"vertices":[["1","0"]]})")), ParseError);
}

TEST_CASE("flag point literals") {
  CHECK(parse_flag_point("0/1,1/1;1/1,1/1") == FlagPoint(G(0), G(1), G(1), G(1)));
  const FlagPoint p = parse_flag_point(" 1+1/2i, 3 ; 1, -i ");
  CHECK(p.a1() == G(1, Rational(1, 2)));
  CHECK(p.c1() == G(3));
  CHECK(p.c2() == G(0, -1));
  CHECK(parse_flag_point("2*i,-3/4-i;i,1").a1() == G(0, 2));
  CHECK(parse_flag_point("2*i,-3/4-i;i,1").c1() == G(Rational(-3, 4), -1));
  CHECK_THROWS_AS(parse_flag_point("1,1"), ParseError);
  CHECK_THROWS_AS(parse_flag_point("1,1;1"), ParseError);
  CHECK_THROWS_AS(parse_flag_point("1,1;1,1;"), ParseError);
  CHECK_THROWS_AS(parse_flag_point("a,1;1,1"), ParseError);
  CHECK_THROWS_AS(parse_flag_point("0,0;1,1"), std::invalid_argument);
}

TEST_CASE("involution tags") {
  CHECK(parse_involution("negation").action().matrix() == RatMatrix{{-1}});
  CHECK(parse_involution("identity").action().matrix() == RatMatrix{{1}});
  CHECK(parse_involution("swap", 2).action().matrix() == RatMatrix{{0, 1}, {1, 0}});
  CHECK(parse_involution("[[-1]]").action().matrix() == RatMatrix{{-1}});
  CHECK_THROWS_AS(parse_involution("[[2]]"), std::invalid_argument);
  CHECK_THROWS_AS(parse_involution("rotate"), std::invalid_argument);
}

TEST_CASE("sample CSV round trip") {
  const SampleSet s = sample_orbit(to_float(parse_flag_point("0,1;1,1")), Subgroup::G, 50, 4, 2, 1);
  std::stringstream ss;
  write_samples_csv(ss, s);
  std::string header;
  std::getline(std::stringstream(ss.str()), header);
  CHECK(header == kSampleCsvHeader);
  const auto back = read_samples_csv(ss);
  REQUIRE(back.size() == 50);
  for (std::size_t i = 0; i < 50; ++i) CHECK(back[i] == s.samples[i].phi);
  std::stringstream bad("x,y\n1,2\n");
  CHECK_THROWS_AS(read_samples_csv(bad), ParseError);
}

TEST_CASE("SVG rendering") {
  const std::string svg = render_polytopes_svg({{"dense", RationalPolytope::interval(1, 3)},
                                                {"point", RationalPolytope::point({Rational(3)})},
                                                {"empty", RationalPolytope::empty(1)}});
  CHECK(svg.find("<svg") != std::string::npos);
  CHECK(svg.find("version=\"1.1\"") != std::string::npos);
  CHECK(svg.find("dense") != std::string::npos);
  CHECK_THROWS_AS(render_polytopes_svg({{"square", hull({RatVector{0, 0}, RatVector{1, 1}})}}),
                  std::invalid_argument);
  const std::string scatter = render_samples_svg({{0, 0, 1}, {1, 0, 0}});
  CHECK(scatter.find("<circle") != std::string::npos);
}
