#include "prymtopo/flat.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <numeric>
#include <sstream>

#include "prymtopo/errors.hpp"

namespace prymtopo::flat {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

Vec2 root_of_unity(int k, int m) {
    return std::polar(1.0, kTwoPi * static_cast<double>(m) / static_cast<double>(k));
}

int mod(int a, int n) {
    return ((a % n) + n) % n;
}

double cross(Vec2 a, Vec2 b) {
    return a.real() * b.imag() - a.imag() * b.real();
}

double scale_of(const KPolygon& p) {
    double s = 0;
    for (const Vec2& e : p.edges) {
        s = std::max(s, std::abs(e));
    }
    return s;
}

// Closed segment intersection, touching counts.
bool segments_meet(Vec2 p1, Vec2 p2, Vec2 q1, Vec2 q2, double eps) {
    const double d1 = cross(q2 - q1, p1 - q1);
    const double d2 = cross(q2 - q1, p2 - q1);
    const double d3 = cross(p2 - p1, q1 - p1);
    const double d4 = cross(p2 - p1, q2 - p1);
    if (((d1 > eps && d2 < -eps) || (d1 < -eps && d2 > eps)) &&
        ((d3 > eps && d4 < -eps) || (d3 < -eps && d4 > eps))) {
        return true;
    }
    auto on_segment = [eps](Vec2 a, Vec2 b, Vec2 x, double d) {
        return std::abs(d) <= eps && std::min(a.real(), b.real()) - eps <= x.real() &&
               x.real() <= std::max(a.real(), b.real()) + eps &&
               std::min(a.imag(), b.imag()) - eps <= x.imag() &&
               x.imag() <= std::max(a.imag(), b.imag()) + eps;
    };
    return on_segment(q1, q2, p1, d1) || on_segment(q1, q2, p2, d2) ||
           on_segment(p1, p2, q1, d3) || on_segment(p1, p2, q2, d4);
}

// Sets the edge paired with `first` from the pairing rule.
Vec2 partner(int k, int rotation, Vec2 first) {
    return -root_of_unity(k, rotation) * first;
}

KPolygon checked(KPolygon p) {
    const std::vector<std::string> bad = invariant_violations(p);
    if (!bad.empty()) {
        throw DegenerateParameter(p.family + " polygon: " + bad.front());
    }
    if (!is_simple(p)) {
        throw DegenerateParameter(p.family + " polygon is not embedded for this parameter");
    }
    return p;
}

struct UnionFind {
    explicit UnionFind(int n) : parent(static_cast<std::size_t>(n)) {
        std::iota(parent.begin(), parent.end(), 0);
    }
    int find(int x) {
        while (parent[static_cast<std::size_t>(x)] != x) {
            parent[static_cast<std::size_t>(x)] =
                parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
            x = parent[static_cast<std::size_t>(x)];
        }
        return x;
    }
    void unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a != b) {
            parent[static_cast<std::size_t>(std::max(a, b))] = std::min(a, b);
        }
    }
    std::vector<int> parent;
};

} // namespace

std::vector<Vec2> KPolygon::vertices() const {
    std::vector<Vec2> out;
    out.reserve(edges.size());
    Vec2 at{0, 0};
    for (const Vec2& e : edges) {
        out.push_back(at);
        at += e;
    }
    return out;
}

std::vector<double> KPolygon::interior_angles() const {
    const std::size_t n = edges.size();
    std::vector<double> out(n);
    for (std::size_t i = 0; i < n; ++i) {
        const Vec2 in = edges[(i + n - 1) % n];
        const Vec2 turn = edges[i] / in;
        out[i] = std::numbers::pi - std::arg(turn);
    }
    return out;
}

std::vector<std::string> invariant_violations(const KPolygon& p) {
    std::vector<std::string> out;
    const int n = static_cast<int>(p.size());
    if (p.k < 1) {
        out.push_back("k must be positive");
        return out;
    }
    if (n < 3) {
        out.push_back("polygon needs at least three edges");
        return out;
    }
    const double scale = scale_of(p);
    const double tol = kTolerance * std::max(1.0, scale);

    for (const Vec2& e : p.edges) {
        if (std::abs(e) <= tol) {
            out.push_back("polygon has a zero length edge");
            return out;
        }
    }

    Vec2 sum{0, 0};
    for (const Vec2& e : p.edges) {
        sum += e;
    }
    if (std::abs(sum) > tol) {
        out.push_back("edge vectors do not sum to zero");
    }

    std::vector<int> seen(static_cast<std::size_t>(n), 0);
    for (const EdgePair& pr : p.pairing) {
        if (pr.first < 0 || pr.first >= n || pr.second < 0 || pr.second >= n) {
            out.push_back("pairing refers to a missing edge");
            return out;
        }
        ++seen[static_cast<std::size_t>(pr.first)];
        ++seen[static_cast<std::size_t>(pr.second)];
        const Vec2 a = p.edges[static_cast<std::size_t>(pr.first)];
        const Vec2 b = p.edges[static_cast<std::size_t>(pr.second)];
        std::ostringstream where;
        where << "edges " << pr.first << " and " << pr.second;
        if (std::abs(std::abs(a) - std::abs(b)) > tol) {
            out.push_back(where.str() + " differ in length");
        } else if (std::abs(b - partner(p.k, pr.rotation, a)) > tol) {
            out.push_back(where.str() + " are not related by rotation " +
                          std::to_string(pr.rotation) + " * 2pi/" + std::to_string(p.k));
        }
    }
    for (int i = 0; i < n; ++i) {
        if (seen[static_cast<std::size_t>(i)] != 1) {
            out.push_back("edge " + std::to_string(i) + " appears in " +
                          std::to_string(seen[static_cast<std::size_t>(i)]) +
                          " pairings instead of one");
        }
    }

    const std::vector<double> angles = p.interior_angles();
    const double total = std::accumulate(angles.begin(), angles.end(), 0.0);
    if (std::abs(total - static_cast<double>(n - 2) * std::numbers::pi) > kTolerance) {
        out.push_back("interior angles do not sum to (n - 2) pi");
    }
    return out;
}

bool is_simple(const KPolygon& p) {
    const std::size_t n = p.size();
    if (n < 3) {
        return false;
    }
    const double eps = 1e-12 * std::max(1.0, scale_of(p) * scale_of(p));
    const std::vector<Vec2> v = p.vertices();
    for (const Vec2& e : p.edges) {
        if (std::abs(e) <= 1e-12) {
            return false;
        }
    }
    // Adjacent edges may not fold back onto each other.
    for (const double a : p.interior_angles()) {
        if (a <= kTolerance || a >= kTwoPi - kTolerance) {
            return false;
        }
    }
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 2; j < n; ++j) {
            if (i == 0 && j == n - 1) {
                continue;
            }
            if (segments_meet(v[i], v[(i + 1) % n], v[j], v[(j + 1) % n], eps)) {
                return false;
            }
        }
    }
    double area2 = 0;
    for (std::size_t i = 0; i < n; ++i) {
        area2 += cross(v[i], v[(i + 1) % n]);
    }
    return area2 > 0;
}

KPolygon turtle_base(Vec2 c) {
    if (std::abs(c) == 0.0) {
        throw DegenerateParameter("turtle parameter c must be nonzero");
    }
    constexpr int k = 4;
    constexpr int m = 3;
    const Vec2 w = root_of_unity(k, m);
    KPolygon p;
    p.family = "turtle";
    p.k = k;
    // Edges 0 and 1 meet at the pole; edges 2, 3 are paired with 4, 5.
    const Vec2 v0{1, 0};
    const Vec2 v1 = partner(k, m, v0);
    const Vec2 v2 = c;
    const Vec2 v3 = -(v0 + v1 + v2 * (1.0 - w)) / (1.0 - w);
    p.edges = {v0, v1, v2, v3, partner(k, m, v2), partner(k, m, v3)};
    p.pairing = {{0, 1, m}, {2, 4, m}, {3, 5, m}};
    p.cone_spec = {{"pole of order 3", 1}, {"zero of order 3", 7}};
    return checked(std::move(p));
}

KPolygon hurricane_base(Vec2 b) {
    if (std::abs(b) == 0.0) {
        throw DegenerateParameter("hurricane parameter b must be nonzero");
    }
    constexpr int k = 6;
    KPolygon p;
    p.family = "hurricane";
    p.k = k;
    // Three adjacent pairs, each folding around one pole.
    const Vec2 v0{1, 0};
    const Vec2 v1 = partner(k, 5, v0);
    const Vec2 v2 = b;
    const Vec2 v3 = partner(k, 4, v2);
    const Vec2 v4 = -(v0 + v1 + v2 + v3) / (1.0 - root_of_unity(k, 4));
    p.edges = {v0, v1, v2, v3, v4, partner(k, 4, v4)};
    p.pairing = {{0, 1, 5}, {2, 3, 4}, {4, 5, 4}};
    p.cone_spec = {{"pole of order 5", 1},
                   {"pole of order 4", 2},
                   {"pole of order 4", 2},
                   {"zero of order 1", 7}};
    return checked(std::move(p));
}

namespace {

// Kite with a pole of angle 2 pi / k at vertex 1 and a pole of angle
// 2 pi pole_multiple / k at vertex 3; vertices 0 and 2 form one class.
KPolygon kite(std::string family, int k, int pole_multiple, std::vector<ConeSpec> spec) {
    KPolygon p;
    p.family = std::move(family);
    p.k = k;
    const int r0 = k - 1;
    const int r1 = k - pole_multiple;
    const Vec2 v0{1, 0};
    const Vec2 v1 = partner(k, r0, v0);
    const Vec2 v2 = -(v0 + v1) / (1.0 - root_of_unity(k, r1));
    p.edges = {v0, v1, v2, partner(k, r1, v2)};
    p.pairing = {{0, 1, r0}, {2, 3, r1}};
    p.cone_spec = std::move(spec);
    return checked(std::move(p));
}

} // namespace

KPolygon c10_base() {
    return kite("c10", 10, 2,
                {{"pole of order 3", 7}, {"pole of order 9", 1}, {"pole of order 8", 2}});
}

KPolygon c12_base() {
    return kite("c12", 12, 4,
                {{"pole of order 5", 7}, {"pole of order 11", 1}, {"pole of order 8", 4}});
}

std::vector<int> TranslationSurface::cone_points() const {
    std::vector<int> out;
    for (std::size_t i = 0; i < vertex_classes.size(); ++i) {
        if (std::abs(vertex_classes[i].angle - kTwoPi) > kTolerance) {
            out.push_back(static_cast<int>(i));
        }
    }
    return out;
}

double TranslationSurface::gauss_bonnet_total() const {
    double total = 0;
    for (const VertexClass& vc : vertex_classes) {
        total += vc.angle - kTwoPi;
    }
    return total;
}

int TranslationSurface::vertex_class_of(Corner c) const {
    for (std::size_t i = 0; i < vertex_classes.size(); ++i) {
        for (const Corner& x : vertex_classes[i].corners) {
            if (x.face == c.face && x.vertex == c.vertex) {
                return static_cast<int>(i);
            }
        }
    }
    return -1;
}

TranslationSurface unfold(const KPolygon& p, int sheets) {
    if (p.k < 1 || sheets < 1 || p.k % sheets != 0) {
        throw GluingError("cover degree " + std::to_string(sheets) + " must divide k = " +
                          std::to_string(p.k));
    }
    const int n = static_cast<int>(p.size());
    if (n < 3) {
        throw GluingError("polygon needs at least three edges");
    }
    std::vector<int> seen(static_cast<std::size_t>(n), 0);
    for (const EdgePair& pr : p.pairing) {
        if (pr.first < 0 || pr.first >= n || pr.second < 0 || pr.second >= n) {
            throw GluingError("pairing refers to a missing edge");
        }
        ++seen[static_cast<std::size_t>(pr.first)];
        ++seen[static_cast<std::size_t>(pr.second)];
    }
    if (std::any_of(seen.begin(), seen.end(), [](int s) { return s != 1; })) {
        throw GluingError("every edge must appear in exactly one pair");
    }

    TranslationSurface s;
    s.k = p.k;
    s.sheets = sheets;
    for (int r = 0; r < sheets; ++r) {
        std::vector<Vec2> face;
        const Vec2 w = root_of_unity(p.k, r);
        for (const Vec2& e : p.edges) {
            face.push_back(w * e);
        }
        s.faces.push_back(std::move(face));
    }

    const double tol = kTolerance * std::max(1.0, scale_of(p));
    UnionFind corners(sheets * n);
    UnionFind faces(sheets);
    for (int r = 0; r < sheets; ++r) {
        for (const EdgePair& pr : p.pairing) {
            const int other = mod(r - pr.rotation, sheets);
            const int residual = mod(other + pr.rotation - r, p.k);
            const Vec2 a = s.faces[static_cast<std::size_t>(r)][static_cast<std::size_t>(pr.first)];
            const Vec2 b =
                s.faces[static_cast<std::size_t>(other)][static_cast<std::size_t>(pr.second)];
            if (std::abs(b + root_of_unity(p.k, residual) * a) > tol) {
                throw GluingError("edge " + std::to_string(pr.first) + " of sheet " +
                                  std::to_string(r) + " does not match edge " +
                                  std::to_string(pr.second) + " of sheet " + std::to_string(other));
            }
            s.gluings.push_back({r, pr.first, other, pr.second, residual});
            // Edge i runs from vertex i to i + 1; the partner is traversed backwards.
            corners.unite(r * n + pr.first, other * n + (pr.second + 1) % n);
            corners.unite(r * n + (pr.first + 1) % n, other * n + pr.second);
            faces.unite(r, other);
        }
    }
    for (int r = 1; r < sheets; ++r) {
        if (faces.find(r) != faces.find(0)) {
            throw GluingError("cover of degree " + std::to_string(sheets) + " is disconnected");
        }
    }

    const std::vector<double> angles = p.interior_angles();
    std::map<int, std::size_t> class_index;
    for (int r = 0; r < sheets; ++r) {
        for (int v = 0; v < n; ++v) {
            const int root = corners.find(r * n + v);
            auto [it, inserted] = class_index.try_emplace(root, s.vertex_classes.size());
            if (inserted) {
                s.vertex_classes.emplace_back();
            }
            VertexClass& vc = s.vertex_classes[it->second];
            vc.corners.push_back({r, v});
            vc.angle += angles[static_cast<std::size_t>(v)];
        }
    }

    const int V = static_cast<int>(s.vertex_classes.size());
    const int E = sheets * n / 2;
    const int F = sheets;
    const int euler = V - E + F;
    if ((2 - euler) % 2 != 0 || euler > 2) {
        throw GluingError("glued complex has Euler characteristic " + std::to_string(euler));
    }
    s.genus = (2 - euler) / 2;
    return s;
}

RotationAction rotation_action(const TranslationSurface& s) {
    RotationAction act;
    const int d = s.sheets;
    for (int r = 0; r < d; ++r) {
        act.face_permutation.push_back((r + 1) % d);
    }
    act.equivariant = true;
    for (const Gluing& g : s.gluings) {
        const int f = (g.face + 1) % d;
        const int o = (g.other_face + 1) % d;
        const bool found = std::any_of(s.gluings.begin(), s.gluings.end(), [&](const Gluing& h) {
            return h.face == f && h.edge == g.edge && h.other_face == o &&
                   h.other_edge == g.other_edge;
        });
        if (!found) {
            act.equivariant = false;
        }
    }
    for (const VertexClass& vc : s.vertex_classes) {
        int image = -1;
        for (const Corner& c : vc.corners) {
            const int target = s.vertex_class_of({(c.face + 1) % d, c.vertex});
            if (image == -1) {
                image = target;
            } else if (image != target) {
                act.equivariant = false;
            }
        }
        act.class_permutation.push_back(image);
    }
    return act;
}

} // namespace prymtopo::flat
