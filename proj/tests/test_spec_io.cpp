#include <gtest/gtest.h>

#include <filesystem>

#include "support.hpp"

using namespace endok;
using namespace endok::testing;

namespace {

std::vector<std::string> corpus_files() {
  std::vector<std::string> out;
  for (const auto& e : std::filesystem::directory_iterator(ENDOK_CORPUS_DIR))
    if (e.path().extension() == ".alg") out.push_back(e.path().string());
  std::sort(out.begin(), out.end());
  return out;
}

const char* kDualNumbers = R"({
  "endok": 1,
  "field": "Q",
  "objects": [
    {"name": "R", "type": "algebra", "kind": "polynomial", "coefficients": ["0", "0", "1"]},
    {"name": "x", "type": "element", "algebra": "R", "terms": {"x": "%X%"}},
    {"name": "J", "type": "ideal", "kind": "generated", "algebra": "%ALG%", "generators": ["x"]}
  ]
}
)";

std::string instantiate(std::string text, const std::string& x, const std::string& alg) {
  text.replace(text.find("%X%"), 3, x);
  text.replace(text.find("%ALG%"), 5, alg);
  return text;
}

}  // namespace

TEST(SpecIo, ParsesTheCorpus) {
  auto files = corpus_files();
  ASSERT_GE(files.size(), 5u);
  for (const auto& f : files) {
    Workspace w = parse_spec(f);
    EXPECT_FALSE(w.default_algebra.empty()) << f;
    EXPECT_NO_THROW(w.main_algebra()) << f;
  }
  Workspace r = parse_spec(std::string(ENDOK_CORPUS_DIR) + "/example1_R.alg");
  EXPECT_EQ(r.algebra("R")->dim(), 2u);
  EXPECT_EQ(r.module("R+soc R").dim(), 3u);
  EXPECT_EQ(r.algebra("End(R+soc R)")->dim(), 5u);
}

TEST(SpecIo, EmitThenParseIsAFixedPoint) {
  for (const auto& f : corpus_files()) {
    Workspace w = parse_spec(f);
    std::string once = emit_spec(w);
    Workspace w2 = parse_spec_text(once);
    EXPECT_EQ(emit_spec(w2), once) << f;
    EXPECT_EQ(w2.default_algebra, w.default_algebra);
    ASSERT_EQ(w2.algebras.size(), w.algebras.size());
    for (const auto& [name, a] : w.algebras) {
      const AlgebraPtr& b = w2.algebra(name);
      ASSERT_EQ(a->dim(), b->dim()) << name;
      for (std::size_t i = 0; i < a->dim(); ++i)
        for (std::size_t j = 0; j < a->dim(); ++j) EXPECT_EQ(a->mul_basis(i, j), b->mul_basis(i, j)) << name;
    }
  }
}

TEST(SpecIo, StructureConstantsReproduceTheAlgebra) {
  Rng rng(701);
  for (int t = 0; t < 30; ++t) {
    AlgebraPtr a = random_algebra(rng, 8);
    Workspace w = parse_spec_text(structure_constants_spec(*a, "S").dump());
    EXPECT_EQ(w.default_algebra, "S");
    const AlgebraPtr& b = w.algebra("S");
    ASSERT_EQ(b->dim(), a->dim());
    EXPECT_EQ(b->unit(), a->unit());
    for (std::size_t i = 0; i < a->dim(); ++i)
      for (std::size_t j = 0; j < a->dim(); ++j) EXPECT_EQ(b->mul_basis(i, j), a->mul_basis(i, j));
  }
}

TEST(SpecIo, RationalLiteralsAreExact) {
  Workspace w = parse_spec_text(instantiate(kDualNumbers, "-4/6", "R"));
  EXPECT_EQ(w.element("x").coords[1], mpq_class(-2, 3));
  EXPECT_EQ(w.ideal("J").dim(), 1u);
  try {
    parse_spec_text(instantiate(kDualNumbers, "0.5", "R"));
    FAIL() << "decimal literal accepted";
  } catch (const NonRationalLiteral& e) {
    EXPECT_EQ(e.text, "0.5");
    EXPECT_EQ(e.line, 6u);
  }
  std::string as_number = instantiate(kDualNumbers, "1", "R");
  as_number.replace(as_number.find("\"1\"}}"), 3, "0.25");
  EXPECT_THROW(parse_spec_text(as_number), NonRationalLiteral);
}

TEST(SpecIo, UnresolvedReferencesReportTheirLine) {
  try {
    parse_spec_text(instantiate(kDualNumbers, "1", "S"));
    FAIL() << "unknown algebra accepted";
  } catch (const UnresolvedReference& e) {
    EXPECT_EQ(e.name, "S");
    EXPECT_EQ(e.line, 7u);
  }
  Workspace w = parse_spec_text(instantiate(kDualNumbers, "1", "R"));
  EXPECT_THROW(w.module("missing"), UnresolvedReference);
}

TEST(SpecIo, MalformedDocuments) {
  try {
    parse_spec_text("{\n  \"endok\": 1,\n  \"objects\": [,]\n}\n");
    FAIL();
  } catch (const SchemaError& e) {
    EXPECT_EQ(e.line, 3u);
  }
  EXPECT_THROW(parse_spec_text("[]"), SchemaError);
  EXPECT_THROW(parse_spec_text(R"({"endok": 2, "objects": []})"), SchemaError);
  EXPECT_THROW(parse_spec_text(R"({"endok": 1})"), SchemaError);
  EXPECT_THROW(parse_spec_text(R"({"endok": 1, "field": "R", "objects": []})"), SchemaError);
  EXPECT_THROW(parse_spec_text(R"({"endok": 1, "field": {"prime": 6}, "objects": []})"), NotPrime);
  EXPECT_THROW(parse_spec("/nonexistent/file.alg"), SchemaError);
}

TEST(SpecIo, DefaultAlgebraIsTheLastOneDefined) {
  Workspace w = parse_spec_text(R"({"endok": 1, "objects": [
    {"name": "k", "type": "algebra", "kind": "ground_field"},
    {"name": "k[x]/x^3", "type": "algebra", "kind": "polynomial", "coefficients": ["0", "0", "0", "1"]}
  ]})");
  EXPECT_EQ(w.default_algebra, "k[x]/x^3");
  EXPECT_EQ(w.main_algebra()->dim(), 3u);
}

TEST(SpecIo, PrimeFieldDocuments) {
  Workspace w = parse_spec_text(R"({"endok": 1, "field": {"prime": 5}, "objects": [
    {"name": "R", "type": "algebra", "kind": "polynomial", "coefficients": ["1", "0", "1"]},
    {"name": "h", "type": "element", "algebra": "R", "terms": {"x": "1/2"}}
  ]})");
  EXPECT_FALSE(w.field.is_rationals());
  EXPECT_EQ(w.element("h").coords[1], 3);
}
