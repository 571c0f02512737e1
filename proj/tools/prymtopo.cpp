// Command line front end: invariants of W_D(6), sweeps, corpus
// verification, bound audits, form and prototype listings, polygon output.
//
// Exit codes: 0 ok, 1 verification or bound failure, 2 bad input,
// 3 I/O or corpus parse failure.

#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <numbers>
#include <sstream>
#include <string>
#include <thread>

#include <CLI11.hpp>

#include "prymtopo/class_numbers.hpp"
#include "prymtopo/corpus.hpp"
#include "prymtopo/cusps.hpp"
#include "prymtopo/errors.hpp"
#include "prymtopo/euler.hpp"
#include "prymtopo/flat.hpp"
#include "prymtopo/flat_io.hpp"
#include "prymtopo/topology.hpp"

namespace {

using namespace prymtopo;

enum ExitCode : int { kOk = 0, kFailed = 1, kBadInput = 2, kIoError = 3 };

unsigned default_jobs() {
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : hw;
}

void write_output(const std::string& text, const std::string& path) {
    if (path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) {
        throw IoError("cannot open " + path + " for writing");
    }
    f << text;
    if (!f) {
        throw IoError("failed writing " + path);
    }
}

std::string read_file(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) {
        throw IoError("cannot read " + path);
    }
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

int cmd_invariants(std::int64_t d, const std::string& format) {
    const Discriminant D = parse_discriminant(d);
    ChiBreakdown chi;
    const InvariantRecord rec = invariants(D, chi);
    const CorpusRow row = to_row(rec);

    if (format == "json") {
        nlohmann::ordered_json j = to_json(row);
        j["h0"] = rec.h0;
        j["f"] = D.conductor();
        j["D0"] = D.fundamental();
        j["zeta_D0_m1"] = chi.zeta_m1.str();
        j["F"] = chi.F.str();
        j["chi_X"] = chi.chi_X.str();
        std::cout << j.dump(2) << "\n";
    } else if (format == "csv") {
        std::cout << kCsvHeader << ",f,D0,zeta_D0_m1,F\n";
        std::string line = to_csv({row}).substr(kCsvHeader.size() + 1);
        line.pop_back();
        std::cout << line << ',' << D.conductor() << ',' << D.fundamental() << ','
                  << chi.zeta_m1 << ',' << chi.F << "\n";
    } else {
        std::cout << "D          = " << rec.D << "  (f = " << D.conductor()
                  << ", D0 = " << D.fundamental() << ")\n"
                  << "zeta_D0(-1) = " << chi.zeta_m1 << "\n"
                  << "F(D)       = " << chi.F << "\n"
                  << "chi(X_D)   = " << chi.chi_X << "\n"
                  << "chi(W_D)   = " << rec.chi << "\n"
                  << "h0         = " << rec.h0 << "\n"
                  << "cusps      = " << rec.C << "\n"
                  << "e2         = " << rec.e2 << "\n"
                  << "e3         = " << rec.e3 << "\n"
                  << "e5         = " << rec.e5 << "\n"
                  << "e6         = " << rec.e6 << "\n"
                  << "genus      = " << rec.genus << "\n";
    }
    return kOk;
}

int cmd_sweep(std::int64_t from, std::int64_t to, const std::string& format,
              const std::string& out, unsigned jobs) {
    if (from < 5 || from > to) {
        std::cerr << "error: sweep range must satisfy 5 <= from <= to\n";
        return kBadInput;
    }
    std::vector<CorpusRow> rows;
    for (const InvariantRecord& rec : sweep(from, to, jobs)) {
        rows.push_back(to_row(rec));
    }
    if (format == "json") {
        write_output(to_json_text(rows), out);
    } else if (format == "md") {
        write_output(to_markdown(rows), out);
    } else {
        write_output(to_csv(rows), out);
    }
    return kOk;
}

int cmd_verify(const std::string& corpus_path, unsigned jobs) {
    std::vector<std::pair<std::string, std::vector<CorpusRow>>> corpora;
    if (corpus_path.empty()) {
        corpora.emplace_back("embedded table 1", parse_corpus_csv(embedded_table1_csv()));
        corpora.emplace_back("embedded table 3", parse_corpus_csv(embedded_table3_csv()));
    } else {
        corpora.emplace_back(corpus_path, parse_corpus_csv(read_file(corpus_path)));
    }

    bool all_ok = true;
    for (const auto& [name, rows] : corpora) {
        const VerifyResult result = verify_corpus(rows, jobs);
        if (result.ok()) {
            std::cout << name << ": " << result.rows << " rows, all match\n";
            continue;
        }
        all_ok = false;
        std::cout << name << ": " << result.mismatches.size() << " of " << result.rows
                  << " rows differ\n";
        const VerifyMismatch& first = result.mismatches.front();
        std::cout << "first mismatch at D = " << first.D << "\n";
        if (!first.error.empty()) {
            std::cout << "  recomputation failed: " << first.error << "\n";
        }
        for (const ColumnDiff& c : first.diffs) {
            std::cout << "  column " << c.column << ": expected " << c.expected << ", computed "
                      << c.actual << "\n";
        }
    }
    return all_ok ? kOk : kFailed;
}

int cmd_bounds(std::int64_t to, unsigned jobs) {
    if (to < 5) {
        std::cerr << "error: --to must be at least 5\n";
        return kBadInput;
    }
    std::size_t checked = 0;
    std::size_t failures = 0;
    for (const InvariantRecord& rec : sweep(5, to, jobs)) {
        ++checked;
        const BoundsReport r = check_bounds(parse_discriminant(rec.D), rec);
        if (r.all_ok()) {
            continue;
        }
        ++failures;
        std::cout << "D = " << rec.D << ":";
        if (!r.upper_ok) {
            std::cout << " genus upper bound (" << rec.genus << " >= " << r.genus_upper << ")";
        }
        if (!r.lower_ok) {
            std::cout << " genus lower bound (" << rec.genus << " < " << r.genus_lower << ")";
        }
        if (!r.cusp_ok) {
            std::cout << " cusp bound";
        }
        if (!r.e2_ok) {
            std::cout << " e2 < D/2";
        }
        if (!r.e3_ok) {
            std::cout << " e3 < D/6";
        }
        std::cout << "\n";
    }
    std::cout << checked << " discriminants checked, " << failures << " with bound violations\n";
    return failures == 0 ? kOk : kFailed;
}

int cmd_cusps(std::int64_t d, bool list) {
    const Discriminant D = parse_discriminant(d);
    const std::vector<Prototype> protos = list_prototypes(D);
    std::cout << "D = " << d << ": " << protos.size() << " cusps\n";
    if (list) {
        std::cout << "a,b,c,e\n";
        for (const Prototype& p : protos) {
            std::cout << p.a << ',' << p.b << ',' << p.c << ',' << p.e << "\n";
        }
    }
    return kOk;
}

int cmd_forms(std::int64_t C, bool list) {
    const std::vector<ReducedForm> forms = list_reduced_forms(C);
    std::cout << "h(-" << C << ") = " << forms.size() << "\n";
    if (list) {
        std::cout << "a,b,c\n";
        for (const ReducedForm& f : forms) {
            std::cout << f.a << ',' << f.b << ',' << f.c << "\n";
        }
    }
    return kOk;
}

flat::Vec2 parse_param(const std::string& text) {
    const std::size_t comma = text.find(',');
    try {
        std::size_t used = 0;
        const double re = std::stod(text.substr(0, comma), &used);
        double im = 0;
        if (comma != std::string::npos) {
            im = std::stod(text.substr(comma + 1));
        }
        return {re, im};
    } catch (const std::exception&) {
        throw DomainError("parameter must be 're,im', got '" + text + "'");
    }
}

int cmd_polygon(const std::string& family, const std::string& param, const std::string& svg,
                const std::string& unfolded_svg, const std::string& json) {
    flat::KPolygon p;
    if (family == "turtle") {
        p = flat::turtle_base(parse_param(param.empty() ? "1,0.3" : param));
    } else if (family == "hurricane") {
        p = flat::hurricane_base(parse_param(param.empty() ? "0.5,0.3" : param));
    } else if (family == "c10") {
        p = flat::c10_base();
    } else {
        p = flat::c12_base();
    }
    const flat::TranslationSurface base = flat::unfold(p, 1);
    const flat::TranslationSurface cover = flat::unfold(p, p.k);

    std::cout << p.family << ": " << p.k << "-differential, " << p.size() << " edges, genus "
              << base.genus << " quotient\n";
    for (const flat::VertexClass& vc : base.vertex_classes) {
        std::cout << "  vertex class angle " << vc.angle * p.k / (2 * std::numbers::pi)
                  << " * 2pi/" << p.k << "\n";
    }
    std::cout << "canonical cover: genus " << cover.genus << ", " << cover.cone_points().size()
              << " cone point(s)";
    for (const int i : cover.cone_points()) {
        std::cout << ", angle " << cover.vertex_classes[static_cast<std::size_t>(i)].angle /
                                       std::numbers::pi
                  << " pi";
    }
    std::cout << "\n";

    if (!svg.empty()) {
        flat::emit_svg(p, svg);
    }
    if (!unfolded_svg.empty()) {
        flat::emit_svg(cover, unfolded_svg);
    }
    if (!json.empty()) {
        write_output(flat::to_json(p).dump(2) + "\n", json);
    }
    return kOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Topological invariants of the Prym-Teichmueller curves W_D(6)"};
    app.require_subcommand(1);

    unsigned jobs = default_jobs();
    auto add_jobs = [&](CLI::App* sub) {
        sub->add_option("--jobs,-j", jobs, "Worker threads")
            ->envname("PRYM_TOPO_JOBS")
            ->check(CLI::PositiveNumber);
    };

    std::int64_t d = 0;
    std::string format;
    auto* inv = app.add_subcommand("invariants", "Invariants of W_D(6) for one discriminant");
    inv->add_option("D", d, "Discriminant")->required();
    inv->add_option("--format", format, "Output format")
        ->check(CLI::IsMember({"text", "json", "csv"}))
        ->default_val("text");

    std::int64_t from = 5;
    std::int64_t to = 200;
    std::string out;
    std::string sweep_format;
    auto* sw = app.add_subcommand("sweep", "Invariant table for a range of discriminants");
    sw->add_option("--from", from, "First discriminant")->required();
    sw->add_option("--to", to, "Last discriminant")->required();
    sw->add_option("--format", sweep_format, "Output format")
        ->check(CLI::IsMember({"csv", "json", "md"}))
        ->default_val("csv");
    sw->add_option("--out", out, "Output file (default: stdout)");
    add_jobs(sw);

    std::string corpus;
    auto* ver = app.add_subcommand("verify", "Recompute a corpus of invariant rows");
    ver->add_option("--corpus", corpus, "CSV corpus (default: embedded tables)");
    add_jobs(ver);

    std::int64_t bound_to = 2000;
    auto* bnd = app.add_subcommand("bounds", "Audit the genus, cusp and orbifold point bounds");
    bnd->add_option("--to", bound_to, "Largest discriminant")->required();
    add_jobs(bnd);

    bool list = false;
    auto* cus = app.add_subcommand("cusps", "Cusp prototypes for one discriminant");
    cus->add_option("D", d, "Discriminant")->required();
    cus->add_flag("--list", list, "Print every prototype");

    std::int64_t C = 0;
    auto* frm = app.add_subcommand("forms", "Reduced forms of discriminant -C");
    frm->add_option("C", C, "Absolute value of the discriminant")->required();
    frm->add_flag("--list", list, "Print every form");

    std::string family;
    std::string param;
    std::string svg;
    std::string unfolded_svg;
    std::string json;
    auto* poly = app.add_subcommand("polygon", "Polygon models and their canonical covers");
    poly->add_option("family", family, "turtle, hurricane, c10 or c12")
        ->required()
        ->check(CLI::IsMember({"turtle", "hurricane", "c10", "c12"}));
    poly->add_option("--param", param, "Complex side parameter as re,im");
    poly->add_option("--svg", svg, "Write the polygon as SVG");
    poly->add_option("--unfolded-svg", unfolded_svg, "Write the canonical cover as SVG");
    poly->add_option("--json", json, "Write the polygon data as JSON");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kOk : kBadInput;
    }

    try {
        if (*inv) {
            return cmd_invariants(d, format);
        }
        if (*sw) {
            return cmd_sweep(from, to, sweep_format, out, jobs);
        }
        if (*ver) {
            return cmd_verify(corpus, jobs);
        }
        if (*bnd) {
            return cmd_bounds(bound_to, jobs);
        }
        if (*cus) {
            return cmd_cusps(d, list);
        }
        if (*frm) {
            return cmd_forms(C, list);
        }
        if (*poly) {
            return cmd_polygon(family, param, svg, unfolded_svg, json);
        }
    } catch (const NotADiscriminant& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kBadInput;
    } catch (const SquareDiscriminant& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kBadInput;
    } catch (const DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kBadInput;
    } catch (const DegenerateParameter& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kBadInput;
    } catch (const CorpusParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kIoError;
    } catch (const IoError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kIoError;
    } catch (const Error& e) {
        // NonIntegralGenus, InternalError, GluingError: modules disagree.
        std::cerr << "error: " << e.what() << "\n";
        return kFailed;
    }
    return kOk;
}
