#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <string>

#include "cokahler/error.hpp"
#include "cokahler/model_file.hpp"
#include "helpers.hpp"

using namespace cokahler;

namespace {

std::size_t error_line(const std::string& text) {
  try {
    parse_model(text);
  } catch (const ParseError& e) {
    return e.line();
  }
  FAIL("expected a parse error");
  return 0;
}

}  // namespace

TEST_CASE("corpus files load and round-trip") {
  for (const auto& entry : std::filesystem::directory_iterator(COKAHLER_MODELS_DIR)) {
    if (entry.path().extension() != ".model") continue;
    CAPTURE(entry.path().string());
    LieModel m = load_model(entry.path());
    CHECK(m.name == entry.path().stem().string());
    std::string text = serialize_model(m);
    LieModel again = parse_model(text);
    CHECK(same_model(m, again));
    CHECK(serialize_model(again) == text);
  }
}

TEST_CASE("antisymmetry is completed by the loader") {
  LieModel h = testing::corpus("heisenberg");
  CHECK(h.c(2, 0, 1) == 1);
  CHECK(h.c(2, 1, 0) == -1);
  CHECK(h.metric == Matrix::identity(3));
  REQUIRE(h.omega.has_value());
  CHECK((*h.omega)(1, 2) == 1);
  CHECK((*h.omega)(2, 1) == -1);

  LieModel r = testing::corpus("t2-rot4-mapping-torus");
  REQUIRE(r.automorphism.has_value());
  CHECK(r.automorphism->order == 4);
  CHECK_FALSE(r.has_contact_structure());
}

TEST_CASE("rational entries") {
  LieModel m = parse_model("name: q\ndimension: 2\n[brackets]\n1 2 1 -3/4\n[metric]\n2 1/2\n1/2 1\n");
  CHECK(m.c(0, 0, 1) == Rational(-3, 4));
  CHECK(m.metric(0, 1) == Rational(1, 2));
}

TEST_CASE("parse errors carry line numbers") {
  CHECK(error_line("name: x\ndimension: 3\n[brackets]\n1 2\n") == 4);
  CHECK(error_line("name: x\ndimension: 3\n[brackets]\n2 1 3 1\n") == 4);       // i > j
  CHECK(error_line("name: x\ndimension: 3\n[brackets]\n1 4 3 1\n") == 4);       // out of range
  CHECK(error_line("name: x\ndimension: 3\n[brackets]\n1 2 3 1/0\n") == 4);     // bad rational
  CHECK(error_line("name: x\ndimension: 3\n[wat]\n") == 3);
  CHECK(error_line("name: x\ndimension: 3\n[metric]\n1 0 0\n0 1\n0 0 1\n") == 5);
  CHECK(error_line("name: x\ndimension: three\n") == 2);
  CHECK(error_line("name: x\n1 2 3\n") == 2);                                   // data outside a section
  CHECK(error_line("name: x\ncolour: red\ndimension: 3\n") == 2);
  CHECK(error_line("name: x\ndimension: 3\n[xi]\n1 0 0\n[xi]\n1 0 0\n") == 5);
  CHECK(error_line("name: x\ndimension: 2\n[automorphism]\n0 -1\n1 0\n") == 3);  // missing order
  CHECK(error_line("name: x\ndimension: 3\n[brackets\n") == 3);
  CHECK(error_line("name: x\n") == 0);                                          // no dimension at all
  // validation problems are reported as parse errors too
  CHECK_THROWS_AS(parse_model("name: x\ndimension: 2\n[metric]\n1 0\n0 -1\n"), ParseError);
  CHECK_THROWS_AS(parse_model("name: x\ndimension: 3\n[brackets]\n1 2 1 1\n2 3 2 1\n1 3 3 1\n"), ParseError);
  CHECK_THROWS_AS(load_model("/nonexistent/file.model"), ParseError);
}

TEST_CASE("file errors name the file") {
  auto path = std::filesystem::temp_directory_path() / "cokahler_bad.model";
  {
    std::ofstream out(path);
    out << "name: bad\ndimension: 2\n[brackets]\n1 1 2 1\n";
  }
  try {
    load_model(path);
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 4);
    CHECK(std::string(e.what()).find("cokahler_bad.model") != std::string::npos);
  }
  std::filesystem::remove(path);
}
