#pragma once

#include "json.hpp"

#include "limitroots/classify.hpp"
#include "limitroots/gasket.hpp"
#include "limitroots/limits.hpp"
#include "limitroots/projective.hpp"

namespace limitroots {

using ordered_json = nlohmann::ordered_json;

// {"kind":..., "dim":..., "window":[lo,hi], "points":[[...],...]}
ordered_json point_cloud_json(const PointCloud& cloud);

// {"kind":..., "signature":[p,m,z], "irreducible":..., "hyperbolic":...,
//  "compact_hyperbolic":...}  (flags only for the weakly hyperbolic kind)
ordered_json classification_json(const Classification& c);

// {"levels":[{"root_window":..,"orbit_window":..,"hausdorff":..,
//   "root_residual":..,"orbit_residual":..}], "verdict":...}
ordered_json comparison_report_json(const ComparisonReport& r);

// {"center":[x,y],"r":r,"gen":g} or {"line":{"point":..,"normal":..},"gen":g}
ordered_json circle_json(const CircleOrLine& c);

// {"circles":[...], "generators":[...]}
ordered_json gasket_scene_json(const GasketScene& scene);

ordered_json roots_json(const GramMatrix& G, int max_depth,
                        const std::vector<Root>& roots);

} // namespace limitroots
