// Copyright 2026 The profrisk Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include "profrisk/proficiency.hpp"
#include "profrisk/syntax.hpp"
#include "test_util.hpp"

namespace profrisk {
namespace {

std::vector<ProficiencyOccurrence> classify(const std::string& src) {
  return classify_constructs(parse_source(src), ConstructRegistry::builtin(), {"p", ".", "m.py"});
}

std::vector<std::string> classes_of(const std::vector<ProficiencyOccurrence>& occs) {
  std::vector<std::string> out;
  for (const auto& o : occs) out.push_back(o.construct_class);
  return out;
}

TEST(Levels, CategoryMapping) {
  EXPECT_EQ(category_of(CompetencyLevel::C1), LevelCategory::Advance);
  EXPECT_EQ(category_of(CompetencyLevel::C2), LevelCategory::Mastery);
  EXPECT_EQ(category_of(CompetencyLevel::A1), LevelCategory::Basic);
  EXPECT_EQ(category_of(CompetencyLevel::A2), LevelCategory::Basic);
  EXPECT_EQ(category_of(CompetencyLevel::B1), LevelCategory::Intermediate);
  EXPECT_EQ(category_of(CompetencyLevel::B2), LevelCategory::Intermediate);
}

TEST(Levels, ParseRoundTrip) {
  for (auto l : {CompetencyLevel::A1, CompetencyLevel::A2, CompetencyLevel::B1,
                 CompetencyLevel::B2, CompetencyLevel::C1, CompetencyLevel::C2}) {
    EXPECT_EQ(parse_level(to_string(l)), l);
  }
  EXPECT_FALSE(parse_level("C3").has_value());
  EXPECT_FALSE(parse_level("c1").has_value());
}

TEST(Registry, BuiltinHoldsTheSevenAttestedClasses) {
  const auto& r = ConstructRegistry::builtin();
  const std::map<std::string, CompetencyLevel> attested = {
      {"Simple List Comprehension", CompetencyLevel::C1},
      {"Generator Expression", CompetencyLevel::C1},
      {"Generator Function (yield)", CompetencyLevel::C1},
      {"Simple Dictionary Comprehension", CompetencyLevel::C1},
      {"'enumerate' call function", CompetencyLevel::C2},
      {"'zip' call function", CompetencyLevel::C2},
      {"Super Function", CompetencyLevel::C2},
  };
  for (const auto& [cls, level] : attested) {
    const auto* e = r.find(cls);
    ASSERT_NE(e, nullptr) << cls;
    EXPECT_EQ(e->level, level) << cls;
  }
  EXPECT_EQ(r.find("Nested/Multi-clause List Comprehension")->level, CompetencyLevel::C2);
  EXPECT_EQ(r.find("Nested/Multi-clause Dictionary Comprehension")->level, CompetencyLevel::C2);
}

TEST(Registry, TextRoundTripAndDigest) {
  const auto& r = ConstructRegistry::builtin();
  const ConstructRegistry again = ConstructRegistry::parse(r.to_text());
  EXPECT_EQ(again.to_text(), r.to_text());
  EXPECT_EQ(again.digest(), r.digest());
  EXPECT_EQ(r.digest().rfind("fnv1a64:", 0), 0u);
  EXPECT_EQ(r.digest().size(), 8u + 16u);
  const ConstructRegistry changed =
      ConstructRegistry::parse("Simple List Comprehension | simple-list-comprehension | C2\n");
  EXPECT_NE(changed.digest(), r.digest());
}

TEST(Registry, ParseErrorsCarryLineNumbers) {
  auto line_of = [](const char* text) {
    try {
      ConstructRegistry::parse(text);
    } catch (const RegistryError& e) {
      return e.line();
    }
    return -1;
  };
  EXPECT_EQ(line_of("# c\nA | yield | C1\nA | yield | C2\n"), 3);  // duplicate
  EXPECT_EQ(line_of("A | no-such-detector | C1\n"), 1);
  EXPECT_EQ(line_of("A | yield\n"), 1);
  EXPECT_EQ(line_of("\nA | yield | Z9\n"), 2);
  EXPECT_EQ(line_of("A | call: | C1\n"), 1);
}

TEST(Registry, CommentsAndBlankLinesIgnored) {
  const auto r = ConstructRegistry::parse("# header\n\n  X | node:Lambda | B2  \n");
  ASSERT_EQ(r.entries().size(), 1u);
  EXPECT_EQ(r.entries()[0].construct_class, "X");
  EXPECT_EQ(r.entries()[0].detector, "node:Lambda");
  EXPECT_EQ(r.entries()[0].level, CompetencyLevel::B2);
}

TEST(Registry, LoadMissingFileThrows) {
  EXPECT_THROW(ConstructRegistry::load("/nonexistent/registry.txt"), RegistryError);
}

TEST(Classify, SimpleListComprehension) {
  const auto occs = classify("ys = [x*2 for x in xs]\n");
  ASSERT_EQ(occs.size(), 1u);
  EXPECT_EQ(occs[0].construct_class, "Simple List Comprehension");
  EXPECT_EQ(occs[0].level, CompetencyLevel::C1);
  EXPECT_EQ(occs[0].start_line, 1);
  EXPECT_EQ(occs[0].end_line, 1);
  EXPECT_EQ(occs[0].project, "p");
  EXPECT_EQ(occs[0].file, "m.py");
}

TEST(Classify, EnumerateLoop) {
  const auto occs = classify("for i, v in enumerate(xs):\n    pass\n");
  ASSERT_EQ(occs.size(), 1u);
  EXPECT_EQ(occs[0].construct_class, "'enumerate' call function");
  EXPECT_EQ(occs[0].level, CompetencyLevel::C2);
}

TEST(Classify, PlainAssignmentYieldsNothing) { EXPECT_TRUE(classify("x = 1\n").empty()); }

TEST(Classify, GeneratorExpression) {
  const auto occs = classify("total = sum(x for x in xs)\n");
  ASSERT_EQ(occs.size(), 1u);
  EXPECT_EQ(occs[0].construct_class, "Generator Expression");
  EXPECT_EQ(occs[0].level, CompetencyLevel::C1);
}

TEST(Classify, ZipInsideComprehensionYieldsTwo) {
  EXPECT_EQ(classes_of(classify("s = [a + b for a, b in zip(x, y)]\n")),
            (std::vector<std::string>{"Simple List Comprehension", "'zip' call function"}));
}

TEST(Classify, NestedAndMultiClauseComprehensions) {
  EXPECT_EQ(classes_of(classify("m = [[c for c in r] for r in rows]\n")),
            (std::vector<std::string>{"Nested/Multi-clause List Comprehension",
                                      "Simple List Comprehension"}));
  EXPECT_EQ(classes_of(classify("m = [a for a in x for b in a]\n")),
            (std::vector<std::string>{"Nested/Multi-clause List Comprehension"}));
  EXPECT_EQ(classes_of(classify("d = {k: {v: 1 for v in k} for k in x}\n")),
            (std::vector<std::string>{"Nested/Multi-clause Dictionary Comprehension",
                                      "Simple Dictionary Comprehension"}));
  EXPECT_EQ(classes_of(classify("d = {k: v for k in x if k for v in k}\n")),
            (std::vector<std::string>{"Nested/Multi-clause Dictionary Comprehension"}));
  // A filter clause does not make a comprehension nested.
  EXPECT_EQ(classes_of(classify("v = [a for a in x if a if a > 2]\n")),
            (std::vector<std::string>{"Simple List Comprehension"}));
}

TEST(Classify, SetComprehensionIsNotInTheTaxonomy) {
  EXPECT_TRUE(classify("s = {a for a in x}\n").empty());
}

TEST(Classify, YieldAndYieldFrom) {
  const auto occs = classify("def g():\n    yield 1\n    yield from h()\n");
  EXPECT_EQ(classes_of(occs), (std::vector<std::string>{"Generator Function (yield)",
                                                         "Generator Function (yield)"}));
  EXPECT_EQ(occs[0].start_line, 2);
  EXPECT_EQ(occs[1].start_line, 3);
}

TEST(Classify, SuperCallsOnlyByBareName) {
  EXPECT_EQ(classes_of(classify("class A(B):\n    def f(self):\n        super().f()\n")),
            (std::vector<std::string>{"Super Function"}));
  EXPECT_TRUE(classify("obj.super()\nobj.zip(a)\nmod.enumerate(x)\n").empty());
}

TEST(Classify, MultiLineSpan) {
  const auto occs = classify("x = [\n    a\n    for a in b\n]\n");
  ASSERT_EQ(occs.size(), 1u);
  EXPECT_EQ(occs[0].start_line, 1);
  EXPECT_EQ(occs[0].end_line, 4);
}

TEST(Classify, SourceOrderAcrossNesting) {
  const auto occs = classify(
      "def f(xs):\n"
      "    for i, (a, b) in enumerate(zip(xs, xs)):\n"
      "        yield (c for c in a)\n");
  EXPECT_EQ(classes_of(occs),
            (std::vector<std::string>{"'enumerate' call function", "'zip' call function",
                                      "Generator Function (yield)", "Generator Expression"}));
}

TEST(Classify, FStringExpressionsAreScanned) {
  EXPECT_EQ(classes_of(classify("s = f\"{', '.join(str(i) for i in x)}\"\n")),
            (std::vector<std::string>{"Generator Expression"}));
}

TEST(Classify, CustomRegistryWithNodeDetector) {
  const auto r = ConstructRegistry::parse(
      "Lambda Expression | node:Lambda | B1\nWalrus | node:NamedExpr | B2\n");
  const auto occs =
      classify_constructs(parse_source("f = lambda: 0\nif (n := 3):\n    pass\n"), r);
  ASSERT_EQ(occs.size(), 2u);
  EXPECT_EQ(occs[0].construct_class, "Lambda Expression");
  EXPECT_EQ(occs[0].level, CompetencyLevel::B1);
  EXPECT_EQ(occs[1].construct_class, "Walrus");
  EXPECT_EQ(occs[1].start_line, 2);
}

TEST(FilterByLevel, KeepsOrderAndLevels) {
  const std::vector<ProficiencyOccurrence> occs = {
      {"p", ".", "a.py", "X", 1, 1, CompetencyLevel::A2},
      {"p", ".", "a.py", "Y", 2, 2, CompetencyLevel::C1},
      {"p", ".", "a.py", "Z", 3, 3, CompetencyLevel::C2},
  };
  const auto kept = filter_by_level(occs, {CompetencyLevel::C1, CompetencyLevel::C2});
  ASSERT_EQ(kept.size(), 2u);
  EXPECT_EQ(kept[0], occs[1]);
  EXPECT_EQ(kept[1], occs[2]);
  EXPECT_TRUE(filter_by_level(occs, {}).empty());
}

TEST(FilterByLevel, MixedGoldenFileHasFiveOccurrences) {
  const std::string src = testutil::read_file(testutil::data_dir() / "golden/snippets/mixed.py");
  const auto occs = filter_by_level(classify(src), {CompetencyLevel::C1, CompetencyLevel::C2});
  EXPECT_EQ(occs.size(), 5u);
  EXPECT_EQ(std::count_if(occs.begin(), occs.end(),
                          [](const auto& o) { return o.construct_class == "'enumerate' call function"; }),
            2);
}

class ClassifierProperties : public ::testing::TestWithParam<std::string> {};

TEST_P(ClassifierProperties, OccurrencesAreConsistentAndStable) {
  const std::string bytes = testutil::read_file(GetParam());
  const SyntaxTree tree = parse_source(bytes);
  const auto& reg = ConstructRegistry::builtin();
  const auto a = classify_constructs(tree, reg);
  EXPECT_EQ(a, classify_constructs(parse_source(bytes), reg));
  for (const auto& o : a) {
    const auto* e = reg.find(o.construct_class);
    ASSERT_NE(e, nullptr);
    EXPECT_EQ(e->level, o.level);
    EXPECT_GE(o.start_line, 1);
    EXPECT_LE(o.start_line, o.end_line);
    EXPECT_LE(o.end_line, tree.line_count());
  }
}

// Classifying two files separately equals classifying their concatenation
// once line numbers are shifted, since detection is purely local.
TEST_P(ClassifierProperties, ConcatenationIsMonotone) {
  const std::string a = testutil::read_file(GetParam());
  const std::string b = "xs = [i for i in range(3)]\nys = list(zip(xs, xs))\n";
  const auto& reg = ConstructRegistry::builtin();
  const SyntaxTree ta = parse_source(a);
  auto separate = classify_constructs(ta, reg);
  for (auto o : classify_constructs(parse_source(b), reg)) {
    o.start_line += ta.line_count();
    o.end_line += ta.line_count();
    separate.push_back(o);
  }
  const std::string joined = a + (a.empty() || a.back() == '\n' ? "" : "\n") + b;
  EXPECT_EQ(classify_constructs(parse_source(joined), reg), separate);
}

INSTANTIATE_TEST_SUITE_P(Fixtures, ClassifierProperties,
                         ::testing::ValuesIn(testutil::fixture_sources()));

}  // namespace
}  // namespace profrisk
