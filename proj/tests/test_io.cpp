#include <gtest/gtest.h>

#include "oneplane/generators.hpp"
#include "oneplane/io.hpp"
#include "oneplane/planarize.hpp"
#include "support.hpp"

using namespace oneplane;
using namespace testing_support;

namespace {

void expect_parse_error(const std::string& text) {
  try {
    parse_drawing(text);
    FAIL() << "accepted:\n" << text;
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), "parse-error");
  }
}

const char* kK5 =
    "oneplane 1\n"
    "n 5\n";

}  // namespace

TEST(Io, RoundTripIsByteIdentical) {
  std::vector<Drawing> all{k4(), k5(), octahedron(), gen_max1p(6).drawing, gen_max1p(10).drawing,
                           gen_double_stellation(8).drawing, gen_wall(1).drawing, gen_wall(2).drawing};
  for (std::uint64_t seed = 1; seed <= 5; ++seed) all.push_back(gen_kite_augmented(seed, 200, 50));
  for (const Drawing& d : all) {
    std::string text = serialize_drawing(d);
    Drawing back = parse_drawing(text);
    EXPECT_EQ(back, d);
    EXPECT_EQ(serialize_drawing(back), text);
  }
}

TEST(Io, Format) {
  std::string text = serialize_drawing(k5());
  EXPECT_EQ(text.rfind(kK5, 0), 0u);
  EXPECT_NE(text.find("\ne 9 4 2\n"), std::string::npos);
  EXPECT_NE(text.find("\nx 0 0 9\n"), std::string::npos);
  EXPECT_NE(text.find("\nr 5 0.1@0 9.0@0 0.0@0 9.1@0\n"), std::string::npos);
}

TEST(Io, MissingFinalNewlineTolerated) {
  std::string text = serialize_drawing(k4());
  text.pop_back();
  EXPECT_EQ(parse_drawing(text), k4());
}

TEST(Io, StrictRejections) {
  const std::string good = serialize_drawing(k5());
  auto replace = [&](const std::string& from, const std::string& to) {
    std::string t = good;
    auto at = t.find(from);
    EXPECT_NE(at, std::string::npos) << from;
    t.replace(at, from.size(), to);
    return t;
  };
  expect_parse_error("");
  expect_parse_error(replace("oneplane 1", "oneplane 2"));
  expect_parse_error(replace("n 5\n", "n 5\nz 1\n"));            // unknown line
  expect_parse_error(replace("e 1 ", "e 2 "));                    // ids not dense
  expect_parse_error(replace("e 1 ", "e 01 "));                   // non-canonical number
  expect_parse_error(replace("e 1 ", "e -1 "));
  expect_parse_error(replace("x 0 0 9", "x 0 0 10"));             // unknown edge
  expect_parse_error(replace("x 0 0 9", "x 0 0 9 7"));
  expect_parse_error(replace("9.0@0", "9.2@0"));                  // bad side
  expect_parse_error(replace("9.0@0", "9.0@1"));                  // unknown crossing
  expect_parse_error(replace("9.0@0", "9.0#0"));
  expect_parse_error(replace("r 5 ", "r 4 "));                    // node repeated
  expect_parse_error(good + "r 6\n");                             // extra node
  expect_parse_error(good + "\n");                                 // blank line
  expect_parse_error(replace("n 5", "n  5"));
  expect_parse_error(good.substr(0, good.rfind("r 5")));          // missing node
  expect_parse_error(replace("e 0 0 1\n", ""));                   // first edge missing
}

TEST(Io, ParseDoesNotValidateGeometry) {
  // an edge crossed twice parses but is not a valid drawing
  Drawing d = with_kites(octahedron(), {{0, 1}});
  std::string text = serialize_drawing(d);
  auto at = text.find("r ");
  text.insert(at, "x 1 " + std::to_string(d.crossings[0].a) + " 3\n");
  text += "r 7\n";
  Drawing back = parse_drawing(text);
  EXPECT_FALSE(validate_drawing(back).empty());
}

TEST(Io, ManifestRoundTrip) {
  for (const Manifest& m : {gen_max1p(6).manifest, gen_wall(2).manifest, gen_double_stellation(12).manifest}) {
    std::string text = serialize_manifest(m);
    Manifest back = parse_manifest(text);
    EXPECT_EQ(back.family, m.family);
    EXPECT_EQ(back.values, m.values);
    EXPECT_EQ(back.sets, m.sets);
    EXPECT_EQ(serialize_manifest(back), text);
  }
  Manifest neg{"x", {{"k", -3}}, {{"empty", {}}}};
  EXPECT_EQ(parse_manifest(serialize_manifest(neg)).values.at("k"), -3);
  EXPECT_TRUE(parse_manifest(serialize_manifest(neg)).sets.at("empty").empty());
  EXPECT_THROW(parse_manifest("manifest 1\nfamily x\nvalue k 1\nvalue k 2\n"), Error);
  EXPECT_THROW(parse_manifest("manifest 1\nfamily x\nother k 1\n"), Error);
  EXPECT_THROW(parse_manifest("manifest 2\nfamily x\n"), Error);
}

TEST(Io, TraceLines) {
  auto r = planarize(with_kites(octahedron(), {{0, 1}}));
  EXPECT_EQ(serialize_trace(r.trace), "0 case-1 12 -\n");
  std::vector<DeletionRecord> t{{3, {7, 8, Rule::case2, std::array<int, 3>{1, 4, 9}}}};
  EXPECT_EQ(serialize_trace(t), "3 case-2 7 1 4 9\n");
}
