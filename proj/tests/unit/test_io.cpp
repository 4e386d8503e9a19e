#include <gtest/gtest.h>

#include <sstream>

#include "chromadist/error.hpp"
#include "chromadist/generators.hpp"
#include "chromadist/io.hpp"
#include "chromadist/verify.hpp"
#include "chromadist/vizing.hpp"

using namespace chromadist;

namespace {

ErrorCode parse_error(const std::string& text) {
  std::istringstream in(text);
  try {
    read_edge_list(in);
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "accepted: " << text;
  return ErrorCode::InvalidArgument;
}

}  // namespace

TEST(EdgeList, RoundTrip) {
  const Graph g = gen_classic(ClassicKind::RandomRegular, 30, 4, 9);
  std::stringstream io;
  write_edge_list(io, g);
  const Graph h = read_edge_list(io);
  EXPECT_EQ(h.vertex_count(), g.vertex_count());
  EXPECT_EQ(h.edges(), g.edges());
}

TEST(EdgeList, CommentsAndBlankLinesAreSkipped) {
  std::istringstream in("# triangle\n3 3\n\n0 1\n# middle\n1 2\n0 2\n");
  EXPECT_EQ(read_edge_list(in).edge_count(), 3u);
}

TEST(EdgeList, MalformedInputIsAParseError) {
  EXPECT_EQ(parse_error(""), ErrorCode::Parse);
  EXPECT_EQ(parse_error("3 2\n0 1\n"), ErrorCode::Parse);
  EXPECT_EQ(parse_error("3 1\n1 0\n"), ErrorCode::Parse);
  EXPECT_EQ(parse_error("3 1\n0 3\n"), ErrorCode::Parse);
  EXPECT_EQ(parse_error("3 2\n0 1\n0 1\n"), ErrorCode::Parse);
  EXPECT_EQ(parse_error("3 1\n1 1\n"), ErrorCode::Parse);
  EXPECT_EQ(parse_error("3 1\n0 x\n"), ErrorCode::Parse);
  EXPECT_EQ(parse_error("3 1\n0 1\n1 2\n"), ErrorCode::Parse);
}

TEST(GraphStream, ReadsConsecutiveBlocks) {
  std::istringstream in("2 1\n0 1\n# next\n3 2\n0 1\n1 2\n");
  const auto graphs = read_graph_stream(in);
  ASSERT_EQ(graphs.size(), 2u);
  EXPECT_EQ(graphs[1].edge_count(), 2u);
}

TEST(GraphStream, CorpusFileHasAllConnectedGraphsUpToSix) {
  const auto graphs = read_graph_stream(std::filesystem::path(CHROMADIST_TEST_DATA_DIR) / "connected_le6.edges");
  // 1 + 2 + 6 + 21 + 112 connected graphs on 2..6 vertices.
  EXPECT_EQ(graphs.size(), 142u);
}

TEST(Colouring, RoundTripVerifiesIdentically) {
  const Graph g = gen_classic(ClassicKind::RandomRegular, 40, 5, 3);
  const auto c = vizing_colour(g, ColourBlock::range(1, 6));
  std::stringstream io;
  write_colouring(io, c);
  const auto back = read_colouring(io, g);
  EXPECT_EQ(back, c);
  const auto a = verify_distinguishing(g, c, 2);
  const auto b = verify_distinguishing(g, back, 2);
  EXPECT_EQ(a.conflicts, b.conflicts);
  EXPECT_EQ(a.conflict_count, b.conflict_count);
}

TEST(Colouring, RejectsIncompleteOrDuplicatedEntries) {
  const Graph g = gen_classic(ClassicKind::Path, 3);
  for (const char* text : {"0 1\n", "0 1\n0 2\n1 2\n", "0 1\n1 0\n", "0 1\n5 2\n"}) {
    std::istringstream in(text);
    EXPECT_THROW(read_colouring(in, g), Error) << text;
  }
}
