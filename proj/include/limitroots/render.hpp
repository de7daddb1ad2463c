#pragma once

#include <array>
#include <string>
#include <variant>
#include <vector>

#include <Eigen/Dense>

#include "limitroots/gasket.hpp"
#include "limitroots/models.hpp"
#include "limitroots/projective.hpp"

namespace limitroots {

/// An ordered stack of styled 2-d layers.  Styling is by CSS class only;
/// the embedded stylesheet defines appearance.
struct Scene2D {
    struct PointsLayer {
        std::vector<Eigen::Vector2d> points;
    };
    struct CirclesLayer {
        std::vector<Circle> circles;
    };
    struct SegmentsLayer {
        std::vector<std::array<Eigen::Vector2d, 2>> segments;
    };
    struct PolygonLayer {
        std::vector<Eigen::Vector2d> vertices;
    };

    struct Layer {
        std::string css_class;
        std::variant<PointsLayer, CirclesLayer, SegmentsLayer, PolygonLayer> shape;
    };

    std::vector<Layer> layers;
};

struct SceneOptions {
    bool k_region = false;
    bool hyperplanes = false;
    int hyperplane_depth = 1; // trace hyperplanes of roots up to this depth
    std::size_t budget = kDefaultBudget;
};

/// Deterministic SVG for the world window [-1.2, 1.2]^2 with the pixel map
/// x_px = (x + 1.2)/2.4 * size.  Numbers carry 6 decimals; identical scenes
/// render byte-identically.
std::string render_svg(const Scene2D& scene, int size_px);

/// Chart picture of a root system: unit circle, simplex edges, normalized
/// roots in the depth window, optional K region and hyperplane traces.
/// Rank 3 renders natively; rank 2 degenerates to a marked segment; rank 4
/// is projected orthographically.
Scene2D scene_from_system(const GramMatrix& G, int depth_lo, int depth_hi,
                          const SceneOptions& options = {});

Scene2D scene_from_gasket(const GasketScene& scene);

} // namespace limitroots
