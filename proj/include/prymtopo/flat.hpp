#pragma once

#include <complex>
#include <string>
#include <vector>

namespace prymtopo::flat {

using Vec2 = std::complex<double>;

inline constexpr double kTolerance = 1e-9;

// Edge `second` is glued to edge `first` by a translation composed with the
// rotation by 2 pi rotation / k:  v[second] = -exp(2 pi i rotation / k) v[first].
struct EdgePair {
    int first = 0;
    int second = 0;
    int rotation = 0;
};

// Intended total angle at one vertex class of the base polygon, in units of
// 2 pi / k.
struct ConeSpec {
    std::string label;
    int multiple = 0;
};

/**
 * Planar polygon of a k-differential. Edges are listed counterclockwise;
 * vertex i is the start of edge i and vertex 0 sits at the origin.
 */
struct KPolygon {
    std::string family;
    int k = 0;
    std::vector<Vec2> edges;
    std::vector<EdgePair> pairing;
    std::vector<ConeSpec> cone_spec;

    std::size_t size() const { return edges.size(); }
    std::vector<Vec2> vertices() const;
    // Interior angle at each vertex, in (0, 2 pi) for a simple polygon.
    std::vector<double> interior_angles() const;
};

// Human readable descriptions of every violated polygon invariant: closure,
// complete pairing, matching lengths and rotations, interior angle sum.
std::vector<std::string> invariant_violations(const KPolygon& p);

// No two non-adjacent edges meet, no edge is degenerate and the boundary is
// counterclockwise.
bool is_simple(const KPolygon& p);

// Genus one 4-differential with a zero and a pole of order 3. The complex
// parameter c is the free side; throws DegenerateParameter if c = 0 or the
// polygon does not embed.
KPolygon turtle_base(Vec2 c);

// Genus zero 6-differential with a zero of order 1, a pole of order 5 and
// two poles of order 4, with free side b.
KPolygon hurricane_base(Vec2 b);

// Genus zero 10-differential with poles of order 3, 8 and 9.
KPolygon c10_base();

// Genus zero 12-differential with poles of order 5, 8 and 11.
KPolygon c12_base();

struct Corner {
    int face = 0;
    int vertex = 0;
};

// Edge `edge` of face `face` is glued to edge `other_edge` of `other_face`.
// `residual` is the leftover rotation in units of 2 pi / k; it is zero for
// every gluing of the full canonical cover.
struct Gluing {
    int face = 0;
    int edge = 0;
    int other_face = 0;
    int other_edge = 0;
    int residual = 0;
};

struct VertexClass {
    std::vector<Corner> corners;
    double angle = 0;
};

struct TranslationSurface {
    int k = 0;
    int sheets = 0;
    // Edge vectors of each sheet; sheet r is the base polygon rotated by
    // 2 pi r / k.
    std::vector<std::vector<Vec2>> faces;
    std::vector<Gluing> gluings;
    std::vector<VertexClass> vertex_classes;
    int genus = 0;

    bool is_translation_surface() const { return sheets == k; }
    // Indices of vertex classes whose total angle differs from 2 pi.
    std::vector<int> cone_points() const;
    // Sum over all vertex classes of (angle - 2 pi).
    double gauss_bonnet_total() const;
    int vertex_class_of(Corner c) const;
};

// Glues `sheets` rotated copies of p, where sheets divides p.k. With
// sheets = p.k this is the canonical cover and every gluing is a pure
// translation. Throws GluingError on inconsistent pairing data or a
// disconnected cover.
TranslationSurface unfold(const KPolygon& p, int sheets);

// Action of the rotation by 2 pi / k, which sends sheet r to sheet r + 1.
struct RotationAction {
    std::vector<int> face_permutation;
    std::vector<int> class_permutation;
    // False if the rotation does not respect the gluings.
    bool equivariant = false;
};

RotationAction rotation_action(const TranslationSurface& s);

} // namespace prymtopo::flat
