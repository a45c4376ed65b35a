#include <gtest/gtest.h>

#include "msop/formats.hpp"
#include "msop/generators.hpp"
#include "msop/problem.hpp"
#include "msop/table.hpp"

using namespace msop;

namespace {

ErrorCode code_of(const std::string& text) {
  try {
    parse_instance(text);
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "accepted: " << text;
  return ErrorCode::kInvalidArgument;
}

}  // namespace

TEST(Formats, ParsesEveryKind) {
  const auto mssc = std::get<MsscInstance>(parse_instance(
      "msop mssc v1\n# a comment\nelements 3\ncost 1 2\nedge 1 0 1\nedge 1/2 2   # trailing\n"));
  EXPECT_EQ(mssc.costs, (std::vector<Rational>{1, 2, 1}));
  ASSERT_EQ(mssc.edges.size(), 2u);
  EXPECT_EQ(mssc.edges[1].weight, Rational(1, 2));

  const auto dag = std::get<OrDag>(parse_instance("msop orsched v1\njob 0 1 2\njob 1 3 0\narc 0 1\n"));
  EXPECT_EQ(dag.size(), 2);
  EXPECT_EQ(dag.job(1).processing, Rational(3));

  const auto phi = std::get<ReadOnceFormula>(
      parse_instance("msop rof v1\nvar 1 1/2 1\nvar 2 1/3 2\nformula (or x2 x1)\n"));
  EXPECT_EQ(phi.str(), "(or x2 x1)");
  EXPECT_EQ(phi.test(1).cost, 2);

  const auto graph = std::get<SearchGraph>(
      parse_instance("msop xsearch v1\nroot 0\nvertex 0 0\nvertex 1 1\nedge 0 1 5\n"));
  EXPECT_EQ(graph.edges.size(), 1u);

  const auto table = std::get<TableInstance>(parse_instance(
      "msop table v1\nelements 1\nflags f_modular\nvalue 0 0 0\nvalue 1 2 1\n"));
  EXPECT_TRUE(table.flags.f_modular);
  EXPECT_TRUE(table.free_family());
  EXPECT_EQ(kind_name(TypedInstance(table)), "table");
}

TEST(Formats, ValidationErrors) {
  EXPECT_EQ(code_of("msop mssc v1\nelements 2\nedge 1 0 7\n"), ErrorCode::kValidationError);
  EXPECT_EQ(code_of("msop mssc v1\nelements 2\ncost 0 0\nedge 1 0\n"), ErrorCode::kValidationError);
  EXPECT_EQ(code_of("msop orsched v1\njob 0 1 1\njob 2 1 1\n"), ErrorCode::kValidationError);
  EXPECT_EQ(code_of("msop orsched v1\njob 0 1 1\njob 1 1 1\narc 0 1\narc 1 0\n"), ErrorCode::kCyclicInput);
  EXPECT_EQ(code_of("msop rof v1\nvar 1 1/2 1\nformula (and x1)\n"),
            ErrorCode::kValidationError);
  EXPECT_EQ(code_of("msop xsearch v1\nroot 0\nvertex 0 0\nvertex 1 1\nvertex 2 0\nedge 0 1 1\n"),
            ErrorCode::kDisconnectedInput);
  EXPECT_EQ(code_of("msop table v1\nelements 1\nvalue 0 0 0\n"), ErrorCode::kValidationError);
  EXPECT_EQ(code_of("msop table v1\nelements 1\nvalue 0 0 0\nvalue 1 2 -1\n"), ErrorCode::kValidationError);
}

TEST(Formats, ParseErrorsCarryPosition) {
  try {
    parse_instance("msop mssc v1\nelements 2\nedge 1 zero\n");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 3);
    EXPECT_EQ(e.column(), 8);
  }
  try {
    parse_instance("\n\nmsop mssc v2\n");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 3);
    EXPECT_EQ(e.column(), 11);
  }
  try {
    parse_instance("msop rof v1\nvar 1 1/2 1\nformula (and x1\n");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 3);
  }
  EXPECT_EQ(code_of(""), ErrorCode::kParseError);
  EXPECT_EQ(code_of("msop widget v1\n"), ErrorCode::kParseError);
  EXPECT_EQ(code_of("msop mssc v1\nelements 2\nbogus 1\n"), ErrorCode::kParseError);
  EXPECT_EQ(code_of("msop mssc v1\nelements 2 3\n"), ErrorCode::kParseError);
  EXPECT_EQ(code_of("msop rof v1\nvar 1 0.5 1\nformula x1\n"), ErrorCode::kParseError);
}

TEST(Formats, RoundTrip) {
  Rng rng(81);
  const std::vector<std::string>& kinds = generator_kinds();
  for (int trial = 0; trial < 1000; ++trial) {
    const std::string& kind = kinds[static_cast<std::size_t>(trial) % kinds.size()];
    const TypedInstance x = gen_instance(kind, {rng.uniform(1, 8), -1, rng.next()});
    const std::string text = serialize(x);
    const TypedInstance y = parse_instance(text);
    ASSERT_EQ(x.index(), y.index());
    ASSERT_EQ(serialize(y), text) << kind;
    // Same instance: the lowered oracles agree everywhere.
    const MsopInstance a = make_problem(x).instance, b = make_problem(y).instance;
    if (a.size() > 10) continue;
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << a.size()); ++m) {
      const Subset s = Subset::from_mask(m);
      ASSERT_EQ(a.cost(s), b.cost(s));
      ASSERT_EQ(a.weight(s), b.weight(s));
      ASSERT_EQ(a.in_family(s), b.in_family(s));
    }
  }
}

TEST(Generators, Deterministic) {
  for (const std::string& kind : generator_kinds()) {
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
      EXPECT_EQ(serialize(gen_instance(kind, {6, -1, seed})), serialize(gen_instance(kind, {6, -1, seed})));
    }
    EXPECT_NE(serialize(gen_instance(kind, {6, -1, 1})), serialize(gen_instance(kind, {6, -1, 2}))) << kind;
  }
}

TEST(Generators, MsscInstancesAreValid) {
  for (std::uint64_t seed = 1; seed <= 10000; ++seed) {
    const MsscInstance m = std::get<MsscInstance>(gen_instance(seed % 2 ? "mssc" : "pipelined", {8, -1, seed}));
    ASSERT_NO_THROW(validate(m));
    ASSERT_EQ(m.size(), 8);
    ASSERT_GE(m.edges.size(), 1u);
    ASSERT_LE(m.edges.size(), 10u);
    for (const Rational& c : m.costs) ASSERT_LE(c, 5);
    for (const Hyperedge& e : m.edges) ASSERT_LE(e.weight, 5);
  }
}

TEST(Generators, SizesAndErrors) {
  EXPECT_EQ(std::get<ReadOnceFormula>(gen_instance("rof", {5, -1, 7})).size(), 5);
  EXPECT_EQ(std::get<OrDag>(gen_instance("inforest", {7, -1, 3})).size(), 7);
  EXPECT_EQ(std::get<SearchGraph>(gen_instance("xsearch", {6, -1, 3})).edges.size(), 6u);
  EXPECT_EQ(std::get<TableInstance>(gen_instance("generic", {4, -1, 3})).n, 4);
  EXPECT_THROW(gen_instance("nope", {}), Error);
  EXPECT_THROW(gen_instance("mssc", {0, -1, 1}), Error);
  for (std::uint64_t seed = 1; seed <= 200; ++seed) {
    const TableInstance t = std::get<TableInstance>(gen_instance("generic", {5, -1, seed}));
    ASSERT_NO_THROW(validate(t));
    EXPECT_TRUE(t.flags.union_closed);
    EXPECT_TRUE(t.flags.f_subadditive);
    std::mt19937_64 rng(seed);
    EXPECT_TRUE(spot_check_flags(to_msop(t), rng, 200).empty());
    const TableInstance s = std::get<TableInstance>(gen_instance("supermodular", {5, -1, seed}));
    EXPECT_TRUE(s.flags.f_supermodular && s.flags.g_modular && s.flags.free_family);
    EXPECT_TRUE(spot_check_flags(to_msop(s), rng, 200).empty());
  }
}
