#pragma once

// OEIS b-file parsing and comparison against the built-in families.

#include <cstdint>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "idforge/errors.hpp"
#include "idforge/numeric.hpp"
#include "idforge/sequences.hpp"

namespace idforge {

struct BFile {
    std::int64_t first_index = 0;
    std::vector<BigInt> values;
};

// Lines are "index value"; '#' comments and blank lines are skipped. Indices must be consecutive.
inline BFile parse_bfile(std::string_view text) {
    BFile out;
    std::istringstream in{std::string(text)};
    std::string line;
    std::size_t line_no = 0;
    std::optional<std::int64_t> expected;
    while (std::getline(in, line)) {
        ++line_no;
        auto hash = line.find('#');
        if (hash != std::string::npos) {
            line.erase(hash);
        }
        std::istringstream fields(line);
        std::string index_text, value_text, extra;
        if (!(fields >> index_text)) {
            continue;
        }
        if (!(fields >> value_text) || (fields >> extra)) {
            throw ParseError("b-file line " + std::to_string(line_no) + ": expected 'index value'");
        }
        std::int64_t index = 0;
        try {
            std::size_t used = 0;
            index = std::stoll(index_text, &used);
            if (used != index_text.size()) {
                throw ParseError("");
            }
        } catch (const std::exception&) {
            throw ParseError("b-file line " + std::to_string(line_no) + ": bad index '" + index_text + "'");
        }
        if (expected && index != *expected) {
            throw ParseError("b-file line " + std::to_string(line_no) + ": index " + std::to_string(index) +
                             " does not follow " + std::to_string(*expected - 1));
        }
        if (!expected) {
            out.first_index = index;
        }
        expected = index + 1;
        try {
            out.values.push_back(parse_bigint(value_text));
        } catch (const ParseError&) {
            throw ParseError("b-file line " + std::to_string(line_no) + ": bad value '" + value_text + "'");
        }
    }
    return out;
}

struct OeisFamily {
    std::string_view name;
    Family kind;
    std::string_view a_number;
};

inline constexpr OeisFamily kOeisFamilies[] = {
    {"fibonacci", Family::Fibonacci, "A000045"}, {"lucas", Family::Lucas, "A000032"},
    {"pell", Family::Pell, "A000129"},           {"pelllucas", Family::PellLucas, "A001333"},
    {"bronze", Family::Bronze, "A006190"},       {"a015530", Family::A015530, "A015530"},
};

inline std::string_view oeis_id(Family kind) {
    for (const auto& f : kOeisFamilies) {
        if (f.kind == kind) {
            return f.a_number;
        }
    }
    throw UsageError("family has no OEIS reference");
}

struct OeisComparison {
    std::size_t compared = 0;
    std::optional<std::int64_t> first_mismatch;  // OEIS index
    BigInt expected;                             // b-file value at the mismatch
    Rational actual;                             // computed value at the mismatch
};

// Compares the first `count` b-file terms with the family. Fewer terms than `count` is a RangeError.
inline OeisComparison compare_with_bfile(const SequenceDef& def, const BFile& bfile, std::size_t count) {
    if (bfile.values.size() < count) {
        throw RangeError("b-file has " + std::to_string(bfile.values.size()) + " terms, " + std::to_string(count) +
                         " requested");
    }
    OeisComparison out;
    Sequence seq(def);
    for (std::size_t i = 0; i < count; ++i) {
        std::int64_t n = bfile.first_index + static_cast<std::int64_t>(i);
        Rational actual = seq.term(n);
        ++out.compared;
        if (actual != Rational(bfile.values[i])) {
            out.first_mismatch = n;
            out.expected = bfile.values[i];
            out.actual = actual;
            break;
        }
    }
    return out;
}

}  // namespace idforge
