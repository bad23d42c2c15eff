#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "finalg/catalogue.hpp"
#include "finalg/cli.hpp"
#include "finalg/io.hpp"

using namespace finalg;

namespace {

struct TempDir {
  std::filesystem::path path;
  TempDir() {
    path = std::filesystem::temp_directory_path() /
           ("finalg_test_" + std::to_string(::getpid()));
    std::filesystem::create_directories(path);
  }
  ~TempDir() { std::filesystem::remove_all(path); }
  std::string write(const std::string& name, const std::string& content) const {
    auto p = (path / name).string();
    std::ofstream out(p);
    out << content;
    return p;
  }
};

}  // namespace

TEST_CASE("round-trip is the identity on every builtin catalogue document") {
  for (const auto& nm : builtin_monoids()) {
    AlgebraDoc doc = doc_from_monoid(nm.name, nm.monoid);
    CHECK(parse_algebra_text(serialize_algebra(doc)) == doc);
  }
  for (const auto& nl : builtin_lie()) {
    AlgebraDoc doc = doc_from_lie(nl.name, nl.algebra);
    CHECK(parse_algebra_text(serialize_algebra(doc)) == doc);
  }
}

TEST_CASE("pointed set documents round-trip") {
  AlgebraDoc doc;
  doc.kind = AlgebraKind::PointedSet;
  doc.name = "P4";
  doc.pointed_set = validate_pointed_set(4, 1, {"p", "base", "q", "r"});
  CHECK(parse_algebra_text(serialize_algebra(doc)) == doc);
}

TEST_CASE("group documents with a presentation instantiate and round-trip") {
  std::string text = R"({"kind":"group","name":"D10",
    "presentation":{"generators":["a","b"],"relators":["a^5","b^2","abab"]}})";
  AlgebraDoc doc = parse_algebra_text(text);
  REQUIRE(doc.monoid.has_value());
  CHECK(doc.monoid->size == 10);
  CHECK(doc.group.has_value());
  REQUIRE(doc.presentation.has_value());
  AlgebraDoc again = parse_algebra_text(serialize_algebra(doc));
  CHECK(again == doc);
}

TEST_CASE("parse errors carry context") {
  CHECK_THROWS_AS(parse_algebra_text("not json"), ParseError);
  CHECK_THROWS_AS(parse_algebra_text(R"({"kind":"widget"})"), ParseError);
  CHECK_THROWS_AS(parse_algebra_text(R"({"kind":"monoid","size":2,"identity":0})"), ParseError);
  // A semilattice is not a group.
  std::string sl = R"({"kind":"group","size":2,"identity":0,"table":[[0,1],[1,1]]})";
  try {
    parse_algebra_text(sl);
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("no inverse") != std::string::npos);
  }
  // Size disagreement with the table.
  CHECK_THROWS_AS(
      parse_algebra_text(R"({"kind":"monoid","size":3,"identity":0,"table":[[0,1],[1,0]]})"),
      ParseError);
}

TEST_CASE("lie documents parse rational strings and reject conflicts") {
  std::string text = R"({"kind":"lie","name":"half","dim":3,
    "bracket":[{"pair":[0,1],"value":["0","0","1/2"]}]})";
  AlgebraDoc doc = parse_algebra_text(text);
  REQUIRE(doc.lie.has_value());
  CHECK(doc.lie->basis_bracket(0, 1)[2] == Rat(1, 2));
  CHECK(doc.lie->basis_bracket(1, 0)[2] == Rat(-1, 2));
  CHECK(parse_algebra_text(serialize_algebra(doc)) == doc);

  std::string conflict = R"({"kind":"lie","dim":2,
    "bracket":[{"pair":[0,1],"value":["0","1"]},{"pair":[1,0],"value":["0","1"]}]})";
  CHECK_THROWS_AS(parse_algebra_text(conflict), ParseError);
}

TEST_CASE("extension descriptors load endpoints relative to their directory") {
  TempDir dir;
  FiniteMonoid s3 = symmetric3();
  dir.write("s3.json", serialize_algebra(doc_from_monoid("S3", s3)));
  dir.write("c2.json", serialize_algebra(doc_from_monoid("C2", cyclic_group(2))));
  std::string ext = dir.write("ext.json", R"({"kind":"extension",
    "middle":"s3.json","base":"c2.json",
    "f":[0,1,1,1,0,0],"s":[0,1]})");
  SplitExtension e = parse_extension_file(ext);
  CHECK(e.X().size == 6);
  CHECK(e.K.size() == 3);

  std::string bad = dir.write("bad.json", R"({"kind":"extension",
    "middle":"s3.json","base":"c2.json",
    "f":[0,1,1,1,0,0],"s":[0,4]})");
  CHECK_THROWS_AS(parse_extension_file(bad), AlgebraError);
}

TEST_CASE("digests are deterministic with a pinned empty-string value") {
  CHECK(digest_hex("") == "cbf29ce484222325");
  CHECK(digest_hex("abc") == digest_hex("abc"));
  CHECK(digest_hex("abc") != digest_hex("abd"));
}

TEST_CASE("cli validate and engel run end to end") {
  TempDir dir;
  std::string d10 = dir.write("d10.json",
                              serialize_algebra(doc_from_monoid("D10", dihedral_group(5))));

  std::ostringstream out, err;
  int code = cli::run({"validate", d10}, out, err);
  CHECK(code == 0);
  CHECK(out.str().find("ok=true") != std::string::npos);

  out.str("");
  code = cli::run({"--format", "structured", "engel", d10}, out, err);
  CHECK(code == 0);
  CHECK(out.str().find("two_engel=false") != std::string::npos);
  CHECK(out.str().find("witness_x=") != std::string::npos);

  CHECK(cli::run({"validate", (dir.path / "missing.json").string()}, out, err) == 1);
  CHECK(cli::run({"bogus-subcommand"}, out, err) != 0);
}

TEST_CASE("cli sweep is deterministic in structured format") {
  std::ostringstream a, b, err;
  CHECK(cli::run({"sweep", "--format", "structured", "--bounds", "3,2"}, a, err) == 0);
  CHECK(cli::run({"sweep", "--format", "structured", "--bounds", "3,2"}, b, err) == 0);
  CHECK(a.str() == b.str());
  CHECK(a.str().find("elapsed") == std::string::npos);
}

TEST_CASE("cli templates honors the template literal flag") {
  TempDir dir;
  std::string q8 =
      dir.write("q8.json", serialize_algebra(doc_from_monoid("Q8", quaternion_group())));
  std::ostringstream out, err;
  int code = cli::run({"templates", q8, "--template", "x^-1 y x^2", "--format", "structured"},
                      out, err);
  CHECK(code == 0);
  CHECK(out.str().find("special=true") != std::string::npos);
  CHECK(out.str().find("uniform_k=0") != std::string::npos);
}

TEST_CASE("unreadable directories and files surface as errors, not crashes") {
  std::ostringstream out, err;
  CHECK(cli::run({"sweep", "--catalogue", "/nonexistent_dir_xyz"}, out, err) == 1);
}
