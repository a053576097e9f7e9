#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

#include "semiheap/formats.hpp"
#include "support.hpp"

namespace semiheap {
namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

template <class F>
ParseError parse_error(F&& f) {
  try {
    f();
  } catch (const ParseError& e) {
    return e;
  }
  ADD_FAILURE() << "no ParseError";
  return ParseError(0, 0, "");
}

TEST(Shf, RoundTrip) {
  testing::Gen g(4);
  for (std::size_t n : {0u, 1u, 2u, 3u}) {
    const auto t = testing::random_table(g, n);
    const auto doc = parse_shf(write_shf(t));
    EXPECT_EQ(doc.table, t);
    EXPECT_FALSE(doc.basepoint);
  }
  const auto h = heapify(bundled_group("S3"));
  const auto doc = parse_shf(write_shf(h.semiheap().table(), h.basepoint()));
  EXPECT_EQ(doc.table, h.semiheap().table());
  EXPECT_EQ(doc.basepoint, std::optional<Index>(0));
}

TEST(Shf, ExactText) {
  const auto t = heapify(bundled_group("Z2")).semiheap().table();
  EXPECT_EQ(write_shf(t, 0), "semiheap n=2 pt=0\n0 1\n1 0\n1 0\n0 1\n");
}

TEST(Shf, StreamOfDocuments) {
  const auto a = heapify(bundled_group("Z2")).semiheap().table();
  const auto b = TernaryTable(1);
  const auto docs = parse_shf_stream(write_shf(a) + write_shf(b, 0));
  ASSERT_EQ(docs.size(), 2u);
  EXPECT_EQ(docs[0].table, a);
  EXPECT_EQ(docs[1].table, b);
  EXPECT_TRUE(parse_shf_stream("").empty());
}

TEST(Shf, ErrorsCarryPosition) {
  auto e = parse_error([] { parse_shf("semiheap n=2\n0 1 1 0\n1 0 2 1\n"); });
  EXPECT_EQ(e.line(), 3u);
  EXPECT_EQ(e.column(), 5u);

  e = parse_error([] { parse_shf("semiheap n=1\n0\nextra"); });
  EXPECT_EQ(e.line(), 3u);
  EXPECT_EQ(e.column(), 1u);
  EXPECT_NE(std::string(e.what()).find("trailing garbage"), std::string::npos);

  e = parse_error([] { parse_shf("semiheap n=2\n0 1 1 0"); });
  EXPECT_NE(std::string(e.what()).find("unexpected end of input"), std::string::npos);

  e = parse_error([] { parse_shf("semiheap n=1 colour=red\n0\n"); });
  EXPECT_EQ(e.line(), 1u);
  EXPECT_EQ(e.column(), 14u);

  EXPECT_THROW(parse_shf("semiheap\n"), ParseError);
  EXPECT_THROW(parse_shf("semiheap n=1 n=1\n0\n"), ParseError);
  EXPECT_THROW(parse_shf("semiheap n=1 pt=1\n0\n"), ParseError);
  EXPECT_THROW(parse_shf("group n=1 e=0\n0\n"), ParseError);
  EXPECT_THROW(parse_shf("semiheap n=1\n-1\n"), ParseError);
  EXPECT_THROW(parse_shf("semiheap n=1\n0x0\n"), ParseError);
  EXPECT_THROW(parse_shf("semiheap n=99999\n"), ParseError);
}

TEST(Grp, RoundTripAndCorpusFiles) {
  for (const auto& named : bundled_groups()) {
    SCOPED_TRACE(std::string(named.name));
    EXPECT_EQ(parse_grp(write_grp(named.group)), named.group);
    const auto text = read_file(std::string(SEMIHEAP_DATA_DIR) + "/groups/" + std::string(named.name) + ".grp");
    ASSERT_FALSE(text.empty());
    EXPECT_EQ(parse_grp(text), named.group);
  }
}

TEST(Grp, RejectsNonGroups) {
  EXPECT_THROW(parse_grp("group n=2 e=0\n0 1\n1 1\n"), InvalidGroup);
  EXPECT_THROW(parse_grp("group n=2 e=2\n0 1\n1 0\n"), ParseError);
  EXPECT_THROW(parse_grp("group n=2\n0 1\n1 0\n"), ParseError);
}

TEST(Hom, RoundTrip) {
  const IndexMap f{0, 2, 1, 2};
  const auto doc = parse_hom(write_hom(f, 3));
  EXPECT_EQ(doc.map, f);
  EXPECT_EQ(doc.source_size, 4u);
  EXPECT_EQ(doc.target_size, 3u);
  EXPECT_THROW(parse_hom("hom n=2 m=2\n0 2\n"), ParseError);
}

TEST(Act, RoundTrip) {
  const auto a = translation_action(heapify(bundled_group("Z3")).semiheap()).table();
  EXPECT_EQ(parse_act(write_act(a)), a);
  EXPECT_THROW(parse_act("action m=1 n=1\n1\n"), ParseError);
}

TEST(Bnd, RoundTrip) {
  const auto b = heapify_principal(twisted_principal_bundle(2, bundled_group("Z2"), 1));
  const auto text = write_bnd(b);
  const auto back = parse_bnd(text);
  EXPECT_EQ(back, b);
  EXPECT_TRUE(verify_bundle(back));
  EXPECT_EQ(write_bnd(back), text);
}

TEST(Bnd, RejectsMalformedCharts) {
  const auto b = trivial_bundle(1, heapify(bundled_group("Z2")).semiheap());
  auto text = write_bnd(b);
  const auto pos = text.find("1:1");
  ASSERT_NE(pos, std::string::npos);
  auto broken = text;
  broken.replace(pos, 3, "1-1");
  EXPECT_THROW(parse_bnd(broken), ParseError);
  broken = text;
  broken.replace(pos, 3, "1:7");
  EXPECT_THROW(parse_bnd(broken), ParseError);
  EXPECT_THROW(parse_bnd(text + "0\n"), ParseError);
}

}  // namespace
}  // namespace semiheap
