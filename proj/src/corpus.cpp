#include "prymtopo/corpus.hpp"

#include <charconv>
#include <numeric>
#include <set>
#include <sstream>

#include "prymtopo/errors.hpp"
#include "prymtopo/parallel.hpp"
#include "embedded_corpus.hpp"

namespace prymtopo {

namespace {

std::int64_t parse_field(std::string_view s, std::size_t line, const char* column) {
    std::int64_t v = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) {
        throw CorpusParseError("line " + std::to_string(line) + ": bad value '" + std::string(s) +
                               "' in column " + column);
    }
    return v;
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.back() == '\r' || s.back() == ' ' || s.back() == '\t')) {
        s.remove_suffix(1);
    }
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) {
        s.remove_prefix(1);
    }
    return s;
}

} // namespace

CorpusRow to_row(const InvariantRecord& rec) {
    CorpusRow row;
    row.D = rec.D;
    row.g = rec.genus;
    row.chi_num = rec.chi.num().get_si();
    row.chi_den = rec.chi.den().get_si();
    row.C = rec.C;
    row.e2 = rec.e2;
    row.e3 = rec.e3;
    row.e5 = rec.e5;
    row.e6 = rec.e6;
    return row;
}

std::vector<CorpusRow> parse_corpus_csv(std::string_view text) {
    static constexpr const char* kColumns[] = {"D", "g", "chi_num", "chi_den", "C",
                                               "e2", "e3", "e5", "e6"};
    std::vector<CorpusRow> rows;
    std::set<std::int64_t> keys;
    bool have_header = false;
    std::size_t line_no = 0;
    while (!text.empty()) {
        const std::size_t nl = text.find('\n');
        std::string_view line = trim(text.substr(0, nl));
        text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
        ++line_no;
        if (line.empty()) {
            continue;
        }
        if (!have_header) {
            if (line != kCsvHeader) {
                throw CorpusParseError("line " + std::to_string(line_no) + ": expected header '" +
                                       std::string(kCsvHeader) + "'");
            }
            have_header = true;
            continue;
        }
        std::int64_t f[9];
        std::size_t col = 0;
        while (true) {
            const std::size_t comma = line.find(',');
            if (col == 9) {
                throw CorpusParseError("line " + std::to_string(line_no) + ": too many columns");
            }
            f[col] = parse_field(trim(line.substr(0, comma)), line_no, kColumns[col]);
            ++col;
            if (comma == std::string_view::npos) {
                break;
            }
            line.remove_prefix(comma + 1);
        }
        if (col != 9) {
            throw CorpusParseError("line " + std::to_string(line_no) + ": expected 9 columns, got " +
                                   std::to_string(col));
        }
        CorpusRow row{f[0], f[1], f[2], f[3], f[4], f[5], f[6], f[7], f[8]};
        if (row.chi_den <= 0 || std::gcd(row.chi_num, row.chi_den) != 1) {
            throw CorpusParseError("line " + std::to_string(line_no) +
                                   ": chi must be a reduced fraction with positive denominator");
        }
        if (!keys.insert(row.D).second) {
            throw CorpusParseError("line " + std::to_string(line_no) + ": duplicate D = " +
                                   std::to_string(row.D));
        }
        rows.push_back(row);
    }
    if (rows.empty()) {
        throw CorpusParseError("corpus contains no rows");
    }
    return rows;
}

std::string to_csv(const std::vector<CorpusRow>& rows) {
    std::ostringstream out;
    out << kCsvHeader << '\n';
    for (const CorpusRow& r : rows) {
        out << r.D << ',' << r.g << ',' << r.chi_num << ',' << r.chi_den << ',' << r.C << ','
            << r.e2 << ',' << r.e3 << ',' << r.e5 << ',' << r.e6 << '\n';
    }
    return out.str();
}

std::string to_markdown(const std::vector<CorpusRow>& rows) {
    std::ostringstream out;
    out << "| D | g | chi | C | e2 | e3 | e5 | e6 |\n";
    out << "|---:|---:|---:|---:|---:|---:|---:|---:|\n";
    for (const CorpusRow& r : rows) {
        out << "| " << r.D << " | " << r.g << " | " << r.chi_num;
        if (r.chi_den != 1) {
            out << '/' << r.chi_den;
        }
        out << " | " << r.C << " | " << r.e2 << " | " << r.e3 << " | " << r.e5 << " | " << r.e6
            << " |\n";
    }
    return out.str();
}

nlohmann::ordered_json to_json(const CorpusRow& r) {
    nlohmann::ordered_json j;
    j["D"] = r.D;
    j["g"] = r.g;
    j["chi_num"] = r.chi_num;
    j["chi_den"] = r.chi_den;
    j["C"] = r.C;
    j["e2"] = r.e2;
    j["e3"] = r.e3;
    j["e5"] = r.e5;
    j["e6"] = r.e6;
    return j;
}

std::string to_json_text(const std::vector<CorpusRow>& rows) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const CorpusRow& r : rows) {
        arr.push_back(to_json(r));
    }
    return arr.dump(2) + "\n";
}

std::vector<ColumnDiff> diff_rows(const CorpusRow& expected, const CorpusRow& actual) {
    std::vector<ColumnDiff> out;
    auto cmp = [&](const char* name, std::int64_t e, std::int64_t a) {
        if (e != a) {
            out.push_back({name, std::to_string(e), std::to_string(a)});
        }
    };
    cmp("D", expected.D, actual.D);
    cmp("g", expected.g, actual.g);
    if (expected.chi_num != actual.chi_num || expected.chi_den != actual.chi_den) {
        out.push_back({"chi",
                       std::to_string(expected.chi_num) + "/" + std::to_string(expected.chi_den),
                       std::to_string(actual.chi_num) + "/" + std::to_string(actual.chi_den)});
    }
    cmp("C", expected.C, actual.C);
    cmp("e2", expected.e2, actual.e2);
    cmp("e3", expected.e3, actual.e3);
    cmp("e5", expected.e5, actual.e5);
    cmp("e6", expected.e6, actual.e6);
    return out;
}

VerifyResult verify_corpus(const std::vector<CorpusRow>& rows, unsigned jobs) {
    std::vector<VerifyMismatch> per_row(rows.size());
    parallel_for(rows.size(), jobs, [&](std::size_t k) {
        const CorpusRow& expected = rows[k];
        per_row[k].D = expected.D;
        try {
            const CorpusRow actual = to_row(invariants(parse_discriminant(expected.D)));
            per_row[k].diffs = diff_rows(expected, actual);
        } catch (const Error& e) {
            per_row[k].error = e.what();
        }
    });
    VerifyResult result;
    result.rows = rows.size();
    for (VerifyMismatch& m : per_row) {
        if (!m.diffs.empty() || !m.error.empty()) {
            result.mismatches.push_back(std::move(m));
        }
    }
    return result;
}

std::string_view embedded_table1_csv() {
    return detail::kTable1Csv;
}

std::string_view embedded_table3_csv() {
    return detail::kTable3Csv;
}

} // namespace prymtopo
