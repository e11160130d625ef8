#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

#include "idforge/oeis.hpp"

using namespace idforge;

namespace {

std::string read_fixture(std::string_view a_number) {
    std::ifstream in(std::string(IDFORGE_FIXTURES_DIR) + "/" + std::string(a_number) + ".txt");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

}  // namespace

TEST(BFile, ParsesWithCommentsAndBlanks) {
    BFile b = parse_bfile("# A000045\n\n0 0\n1 1   # trailing\n2 1\n3 2\n");
    EXPECT_EQ(b.first_index, 0);
    ASSERT_EQ(b.values.size(), 4U);
    EXPECT_EQ(b.values[3], 2);
}

TEST(BFile, Rejects) {
    EXPECT_THROW(parse_bfile("0 0\n2 1\n"), ParseError);
    EXPECT_THROW(parse_bfile("0 x\n"), ParseError);
    EXPECT_THROW(parse_bfile("0\n"), ParseError);
    EXPECT_THROW(parse_bfile("0 1 2\n"), ParseError);
    EXPECT_THROW(parse_bfile("a 1\n"), ParseError);
}

TEST(BFile, NonZeroOffset) {
    BFile b = parse_bfile("1 1\n2 1\n3 2\n");
    EXPECT_EQ(b.first_index, 1);
    OeisComparison c = compare_with_bfile(named_def(Family::Fibonacci), b, 3);
    EXPECT_FALSE(c.first_mismatch.has_value());
}

TEST(Compare, ReportsFirstMismatch) {
    BFile b = parse_bfile("0 0\n1 1\n2 1\n3 3\n4 3\n");
    OeisComparison c = compare_with_bfile(named_def(Family::Fibonacci), b, 5);
    ASSERT_TRUE(c.first_mismatch.has_value());
    EXPECT_EQ(*c.first_mismatch, 3);
    EXPECT_EQ(c.expected, 3);
    EXPECT_EQ(c.actual, Rational(2));
    EXPECT_THROW(compare_with_bfile(named_def(Family::Fibonacci), b, 6), RangeError);
    EXPECT_EQ(compare_with_bfile(named_def(Family::Fibonacci), b, 0).compared, 0U);
}

TEST(Fixtures, AllSixFamiliesMatch) {
    for (const auto& f : kOeisFamilies) {
        BFile b = parse_bfile(read_fixture(f.a_number));
        ASSERT_GE(b.values.size(), 40U) << f.a_number;
        OeisComparison c = compare_with_bfile(named_def(f.kind), b, b.values.size());
        EXPECT_FALSE(c.first_mismatch.has_value()) << f.a_number << " at " << *c.first_mismatch;
        EXPECT_EQ(oeis_id(f.kind), f.a_number);
    }
}

TEST(Fixtures, PellPrefix) {
    BFile b = parse_bfile(read_fixture("A000129"));
    std::vector<int> expected{0, 1, 2, 5, 12, 29, 70, 169, 408, 985};
    for (std::size_t i = 0; i < expected.size(); ++i) {
        EXPECT_EQ(b.values[i], expected[i]);
    }
    BFile q = parse_bfile(read_fixture("A001333"));
    std::vector<int> expected_q{1, 1, 3, 7, 17};
    for (std::size_t i = 0; i < expected_q.size(); ++i) {
        EXPECT_EQ(q.values[i], expected_q[i]);
    }
}
