#include "prymtopo/flat_io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <vector>

#include "prymtopo/errors.hpp"

namespace prymtopo::flat {

namespace {

constexpr double kCell = 360.0;
constexpr double kPad = 30.0;

std::string num(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.4f", x);
    // Avoid "-0.0000" so output is stable across platforms.
    if (std::string(buf) == "-0.0000") {
        return "0.0000";
    }
    return buf;
}

std::string pair_label(std::size_t i) {
    std::string s;
    do {
        s.insert(s.begin(), static_cast<char>('a' + i % 26));
        i /= 26;
    } while (i-- > 0);
    return s;
}

struct Box {
    double xmin, xmax, ymin, ymax;
};

Box bounds(const std::vector<Vec2>& pts) {
    Box b{pts[0].real(), pts[0].real(), pts[0].imag(), pts[0].imag()};
    for (const Vec2& p : pts) {
        b.xmin = std::min(b.xmin, p.real());
        b.xmax = std::max(b.xmax, p.real());
        b.ymin = std::min(b.ymin, p.imag());
        b.ymax = std::max(b.ymax, p.imag());
    }
    return b;
}

std::vector<Vec2> walk(const std::vector<Vec2>& edges) {
    std::vector<Vec2> out;
    Vec2 at{0, 0};
    for (const Vec2& e : edges) {
        out.push_back(at);
        at += e;
    }
    return out;
}

// Draws one face into the square cell whose top-left corner is (ox, oy).
// labels[i] is written next to edge i.
void draw_face(std::ostringstream& out, const std::vector<Vec2>& edges,
               const std::vector<std::string>& labels, double ox, double oy,
               const std::string& caption) {
    const std::vector<Vec2> pts = walk(edges);
    const Box b = bounds(pts);
    const double span = std::max(b.xmax - b.xmin, b.ymax - b.ymin);
    const double s = (kCell - 2 * kPad) / span;
    const double cx = (b.xmin + b.xmax) / 2;
    const double cy = (b.ymin + b.ymax) / 2;
    auto X = [&](Vec2 p) { return ox + kCell / 2 + (p.real() - cx) * s; };
    auto Y = [&](Vec2 p) { return oy + kCell / 2 - (p.imag() - cy) * s; };

    out << "  <polygon points=\"";
    for (std::size_t i = 0; i < pts.size(); ++i) {
        out << (i ? " " : "") << num(X(pts[i])) << "," << num(Y(pts[i]));
    }
    out << "\" fill=\"#e8eef7\" stroke=\"#203050\" stroke-width=\"1.5\"/>\n";

    for (std::size_t i = 0; i < edges.size(); ++i) {
        const Vec2 mid = pts[i] + edges[i] / 2.0;
        // Interior lies to the left of a counterclockwise edge.
        const Vec2 inward = edges[i] * Vec2(0, 1) / std::abs(edges[i]);
        const Vec2 at = mid + inward * (12.0 / s);
        out << "  <text x=\"" << num(X(at)) << "\" y=\"" << num(Y(at))
            << "\" font-size=\"12\" text-anchor=\"middle\" dominant-baseline=\"middle\">"
            << labels[i] << "</text>\n";
    }
    if (!caption.empty()) {
        out << "  <text x=\"" << num(ox + kCell / 2) << "\" y=\"" << num(oy + kCell - 8)
            << "\" font-size=\"12\" text-anchor=\"middle\">" << caption << "</text>\n";
    }
}

std::string header(double width, double height) {
    std::ostringstream out;
    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
        << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << num(width) << "\" height=\""
        << num(height) << "\" viewBox=\"0 0 " << num(width) << " " << num(height) << "\">\n";
    return out.str();
}

void write_file(const std::string& text, const std::filesystem::path& path) {
    std::ofstream f(path, std::ios::binary);
    if (!f) {
        throw IoError("cannot open " + path.string() + " for writing");
    }
    f << text;
    if (!f) {
        throw IoError("failed writing " + path.string());
    }
}

} // namespace

nlohmann::ordered_json to_json(const KPolygon& p) {
    nlohmann::ordered_json j;
    j["family"] = p.family;
    j["k"] = p.k;
    j["edges"] = nlohmann::ordered_json::array();
    for (const Vec2& e : p.edges) {
        j["edges"].push_back({e.real(), e.imag()});
    }
    j["pairings"] = nlohmann::ordered_json::array();
    for (const EdgePair& pr : p.pairing) {
        j["pairings"].push_back({pr.first, pr.second, pr.rotation});
    }
    j["cone_spec"] = nlohmann::ordered_json::array();
    for (const ConeSpec& c : p.cone_spec) {
        nlohmann::ordered_json cj;
        cj["label"] = c.label;
        cj["multiple"] = c.multiple;
        j["cone_spec"].push_back(cj);
    }
    return j;
}

std::string render_svg(const KPolygon& p) {
    std::vector<std::string> labels(p.size());
    for (std::size_t i = 0; i < p.pairing.size(); ++i) {
        const std::string l = pair_label(i);
        labels[static_cast<std::size_t>(p.pairing[i].first)] = l;
        labels[static_cast<std::size_t>(p.pairing[i].second)] = l;
    }
    std::ostringstream out;
    out << header(kCell, kCell);
    out << "  <!-- " << p.family << " " << p.k << "-differential, " << p.pairing.size()
        << " side pairs -->\n";
    draw_face(out, p.edges, labels, 0, 0, p.family + ", k = " + std::to_string(p.k));
    out << "</svg>\n";
    return out.str();
}

std::string render_svg(const TranslationSurface& s) {
    const int d = s.sheets;
    const int cols = static_cast<int>(std::ceil(std::sqrt(static_cast<double>(d))));
    const int rows = (d + cols - 1) / cols;

    std::vector<std::vector<std::string>> labels(static_cast<std::size_t>(d));
    for (std::size_t r = 0; r < labels.size(); ++r) {
        labels[r].resize(s.faces[r].size());
    }
    for (std::size_t g = 0; g < s.gluings.size(); ++g) {
        const Gluing& gl = s.gluings[g];
        const std::string l = std::to_string(g + 1);
        labels[static_cast<std::size_t>(gl.face)][static_cast<std::size_t>(gl.edge)] = l;
        labels[static_cast<std::size_t>(gl.other_face)][static_cast<std::size_t>(gl.other_edge)] = l;
    }

    std::ostringstream out;
    out << header(cols * kCell, rows * kCell);
    out << "  <!-- " << d << " sheets, genus " << s.genus << " -->\n";
    for (int r = 0; r < d; ++r) {
        draw_face(out, s.faces[static_cast<std::size_t>(r)], labels[static_cast<std::size_t>(r)],
                  (r % cols) * kCell, (r / cols) * kCell, "sheet " + std::to_string(r));
    }
    out << "</svg>\n";
    return out.str();
}

void emit_svg(const KPolygon& p, const std::filesystem::path& path) {
    write_file(render_svg(p), path);
}

void emit_svg(const TranslationSurface& s, const std::filesystem::path& path) {
    write_file(render_svg(s), path);
}

} // namespace prymtopo::flat
