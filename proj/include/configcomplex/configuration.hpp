#pragma once

#include <optional>
#include <string>
#include <vector>

#include "configcomplex/abelian_group.hpp"
#include "configcomplex/report.hpp"

namespace configcomplex {

enum class Side { point, line };

// A vertex of the incidence graph G(C).
struct Vertex {
    Side side = Side::point;
    int index = 0;

    friend bool operator==(const Vertex&, const Vertex&) = default;
};

// Colors run from 1 to k.
struct Incidence {
    int point = 0;
    int line = 0;
    int color = 1;

    friend bool operator==(const Incidence&, const Incidence&) = default;
};

// Incidence structure with a k-edge coloring. Construction only checks that
// ids and colors are in range; the configuration axioms are checked by
// validate_configuration / validate_coloring so that broken inputs can be
// reported instead of rejected.
class ColoredConfiguration {
public:
    ColoredConfiguration(int k, std::vector<std::string> point_names, std::vector<std::string> line_names,
                         std::vector<Incidence> incidences);

    int k() const { return k_; }
    int num_points() const { return static_cast<int>(point_names_.size()); }
    int num_lines() const { return static_cast<int>(line_names_.size()); }
    const std::vector<std::string>& point_names() const { return point_names_; }
    const std::vector<std::string>& line_names() const { return line_names_; }
    const std::vector<Incidence>& incidences() const { return incidences_; }

    // The line through `point` with the given color, if exactly one exists.
    std::optional<int> line_of(int point, int color) const;
    std::optional<int> point_of(int line, int color) const;
    // True when every vertex has exactly one incidence of every color.
    bool has_complete_coloring() const { return complete_; }

    // phi_c: the color-c neighbor. Throws InvalidInput when undefined.
    Vertex phi(Vertex v, int color) const;
    int point_phi_line(int point, int color) const { return phi({Side::point, point}, color).index; }
    int line_phi_point(int line, int color) const { return phi({Side::line, line}, color).index; }

    std::vector<int> points_on_line(int line) const;
    std::vector<int> lines_through_point(int point) const;

    friend bool operator==(const ColoredConfiguration&, const ColoredConfiguration&) = default;

private:
    static constexpr int kMissing = -1;
    static constexpr int kConflict = -2;

    int k_ = 0;
    std::vector<std::string> point_names_;
    std::vector<std::string> line_names_;
    std::vector<Incidence> incidences_;
    std::vector<int> point_table_;  // point * k + (color - 1) -> line
    std::vector<int> line_table_;   // line * k + (color - 1) -> point
    bool complete_ = false;
};

Vertex phi(const ColoredConfiguration& c, Vertex v, int color);

// Regularity, no 4-cycle, connectivity.
Report validate_configuration(const ColoredConfiguration& c);
// Proper k-edge coloring plus the 6-cycle property at every vertex for every
// ordered triple of distinct colors.
Report validate_coloring(const ColoredConfiguration& c);
// Both of the above.
Report validate_colored_configuration(const ColoredConfiguration& c);

// Every two points share exactly one line and every two lines exactly one
// point. For k >= 3 this is a finite projective plane of order k - 1.
bool is_projective_plane(const ColoredConfiguration& c);

ColoredConfiguration dual(const ColoredConfiguration& c);

struct Isomorphism {
    std::vector<int> point_map;
    std::vector<int> line_map;
    std::vector<int> color_map;  // color_map[c - 1] is the image of color c

    bool identity_colors() const;
};

// Searches color permutations (identity first, then lexicographic) and the
// image of point 0, propagating along phi maps. Throws InvalidInput for
// k > 8 or for inputs without a complete proper coloring.
std::optional<Isomorphism> is_isomorphic(const ColoredConfiguration& a, const ColoredConfiguration& b);

// Checks that `iso` really is a color-class preserving isomorphism a -> b.
bool is_isomorphism(const ColoredConfiguration& a, const ColoredConfiguration& b, const Isomorphism& iso);

// Action of a finite abelian group, one permutation per element (indexed by
// FiniteAbelianGroup::index_of).
struct ConfigAction {
    FiniteAbelianGroup group;
    std::vector<std::vector<int>> point_perm;
    std::vector<std::vector<int>> line_perm;
    std::vector<std::vector<int>> color_perm;  // [g][c - 1] -> image color

    static ConfigAction trivial(const ColoredConfiguration& c);
};

// Automorphism and homomorphism checks plus freeness on points. Lines may
// have fixed points.
Report verify_free_action(const ColoredConfiguration& c, const ConfigAction& action);

}  // namespace configcomplex
