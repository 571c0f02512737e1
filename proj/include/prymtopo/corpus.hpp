#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "prymtopo/topology.hpp"

namespace prymtopo {

// One row of an invariants table. The Euler characteristic is stored as a
// reduced integer pair.
struct CorpusRow {
    std::int64_t D = 0;
    std::int64_t g = 0;
    std::int64_t chi_num = 0;
    std::int64_t chi_den = 1;
    std::int64_t C = 0;
    std::int64_t e2 = 0;
    std::int64_t e3 = 0;
    std::int64_t e5 = 0;
    std::int64_t e6 = 0;

    friend bool operator==(const CorpusRow&, const CorpusRow&) = default;
};

inline constexpr std::string_view kCsvHeader = "D,g,chi_num,chi_den,C,e2,e3,e5,e6";

CorpusRow to_row(const InvariantRecord& rec);

// Parses a CSV corpus with the exact header line. Throws CorpusParseError on
// malformed lines, unreduced fractions, duplicate D or an empty table.
std::vector<CorpusRow> parse_corpus_csv(std::string_view text);

std::string to_csv(const std::vector<CorpusRow>& rows);
std::string to_markdown(const std::vector<CorpusRow>& rows);
nlohmann::ordered_json to_json(const CorpusRow& row);
std::string to_json_text(const std::vector<CorpusRow>& rows);

struct ColumnDiff {
    std::string column;
    std::string expected;
    std::string actual;
};

// Column-level differences between an expected and a recomputed row.
std::vector<ColumnDiff> diff_rows(const CorpusRow& expected, const CorpusRow& actual);

struct VerifyMismatch {
    std::int64_t D = 0;
    std::vector<ColumnDiff> diffs;
    std::string error;  // set when recomputation itself failed
};

struct VerifyResult {
    std::size_t rows = 0;
    std::vector<VerifyMismatch> mismatches;
    bool ok() const { return mismatches.empty(); }
};

// Recomputes every row of the corpus and compares it exactly.
VerifyResult verify_corpus(const std::vector<CorpusRow>& rows, unsigned jobs = 1);

// The checked-in transcriptions of the genus zero table and the D <= 200 table.
std::string_view embedded_table1_csv();
std::string_view embedded_table3_csv();

} // namespace prymtopo
