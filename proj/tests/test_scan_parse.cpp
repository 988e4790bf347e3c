#include <gtest/gtest.h>

#include "kleinian/parse.hpp"
#include "kleinian/scan.hpp"

using namespace kleinian;

TEST(ParseComplex, Grammar) {
  EXPECT_EQ(parse_complex("-3"), Cplx(-3.0, 0.0));
  EXPECT_EQ(parse_complex("0.5+0.8660254i"), Cplx(0.5, 0.8660254));
  EXPECT_EQ(parse_complex("2i"), Cplx(0.0, 2.0));
  EXPECT_EQ(parse_complex("-i"), Cplx(0.0, -1.0));
  EXPECT_EQ(parse_complex("i"), Cplx(0.0, 1.0));
  EXPECT_EQ(parse_complex("1-2i"), Cplx(1.0, -2.0));
  EXPECT_EQ(parse_complex("1e-3"), Cplx(0.001, 0.0));
  EXPECT_EQ(parse_complex("1.5e2+2e-1i"), Cplx(150.0, 0.2));
  EXPECT_EQ(parse_complex("+4"), Cplx(4.0, 0.0));
  // unicode minus sign
  EXPECT_EQ(parse_complex("\xe2\x88\x92" "3"), Cplx(-3.0, 0.0));
}

TEST(ParseComplex, Rejections) {
  EXPECT_FALSE(parse_complex(""));
  EXPECT_FALSE(parse_complex("abc"));
  EXPECT_FALSE(parse_complex("1+2"));
  EXPECT_FALSE(parse_complex("1i+2i"));
  EXPECT_FALSE(parse_complex("1+2i+3"));
  EXPECT_FALSE(parse_complex("(1+i*sqrt3)/2"));
  EXPECT_FALSE(parse_complex("1..2"));
}

namespace {
ScanSpec small_spec() {
  ScanSpec spec;
  spec.beta = 0.0;
  spec.gamma_min = {-0.2, -0.2};
  spec.gamma_max = {0.2, 0.2};
  spec.nx = 2;
  spec.ny = 2;
  spec.depth = 4;
  return spec;
}
} // namespace

TEST(Scan, NearOriginExclusion) {
  // all four points violate jorgensen: |gamma| + |beta| < 1 near the origin
  auto cells = scan_grid(small_spec());
  ASSERT_EQ(cells.size(), 4u);
  for (const auto& c : cells) {
    EXPECT_EQ(c.verdict_code, 2);
    EXPECT_EQ(c.first_violated, "jorgensen");
    EXPECT_EQ(c.first_index, 1u);
  }
}

TEST(Scan, Fig8PointPasses) {
  ScanSpec spec;
  spec.beta = 0.0;
  // grid whose max corner is the figure-eight gamma = (1 + i sqrt 3)/2
  spec.gamma_min = {0.0, 0.0};
  spec.gamma_max = {0.5, std::sqrt(3.0) / 2.0};
  spec.nx = 2;
  spec.ny = 2;
  auto cells = scan_grid(spec);
  EXPECT_EQ(cells.back().verdict_code, 0);
  EXPECT_TRUE(cells.back().first_violated.empty());
}

TEST(Scan, CsvShapeAndDeterminism) {
  ScanSpec spec;
  spec.beta = -3.0;
  spec.gamma_min = {-1.0, -1.0};
  spec.gamma_max = {2.0, 1.0};
  spec.nx = 16;
  spec.ny = 8;
  spec.depth = 8;
  std::string one = scan_csv(spec, 1);
  std::string two = scan_csv(spec, 1);
  std::string eight = scan_csv(spec, 8);
  EXPECT_EQ(one, two);
  EXPECT_EQ(one, eight);

  // header + nx*ny rows, CRLF endings
  EXPECT_EQ(one.rfind("re_gamma,im_gamma,verdict_code,first_violated_name\r\n", 0), 0u);
  std::size_t rows = 0;
  for (std::size_t pos = 0; (pos = one.find("\r\n", pos)) != std::string::npos; pos += 2)
    ++rows;
  EXPECT_EQ(rows, 1u + 16u * 8u);
}

TEST(Scan, PgmHeaderAndPayload) {
  ScanSpec spec = small_spec();
  spec.nx = 5;
  spec.ny = 3;
  std::string pgm = scan_pgm(spec, 2);
  std::string header = "P5\n5 3\n255\n";
  ASSERT_EQ(pgm.rfind(header, 0), 0u);
  EXPECT_EQ(pgm.size(), header.size() + 5u * 3u);
  // near the origin everything violates jorgensen (index 1), except the exact
  // grid center gamma = 0 which is degenerate (255)
  for (std::size_t k = header.size(); k < pgm.size(); ++k) {
    std::size_t cell = k - header.size();
    unsigned expected = (cell == 7) ? 255u : 1u; // row 1, column 2
    EXPECT_EQ(static_cast<unsigned char>(pgm[k]), expected) << "cell " << cell;
  }
}

TEST(Scan, DegeneratePixel) {
  ScanSpec spec;
  spec.beta = 1.0;
  spec.gamma_min = {0.0, 0.0}; // gamma = 0 on the grid: degenerate
  spec.gamma_max = {1.0, 1.0};
  spec.nx = 2;
  spec.ny = 2;
  std::string pgm = scan_pgm(spec);
  std::string header = "P5\n2 2\n255\n";
  EXPECT_EQ(static_cast<unsigned char>(pgm[header.size()]), 255);
  auto cells = scan_grid(spec);
  EXPECT_EQ(cells[0].verdict_code, 4);
}
