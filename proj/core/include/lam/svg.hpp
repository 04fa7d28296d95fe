#pragma once

#include <map>
#include <string>
#include <vector>

#include "lam/io.hpp"

namespace lam {

struct RenderOptions {
    int width_px = 600;
    bool draw_labels = false;
    bool fill_polygons = true;
    std::vector<std::string> highlight;  // leaf "(a,b)" or polygon "{a,b,c}" ids
    // Keys: circle, generator, pullback, critical, fill, highlight, label.
    std::map<std::string, std::string> style;
};

/// Straight chords in the unit circle, 0 at the right, counterclockwise.
/// Depth-0 leaves are generators; portrait chords are dashed.
std::string render_svg(const LamDocument& doc, const RenderOptions& opts = {});
std::string render_svg(const Lamination& l, const RenderOptions& opts = {});

} // namespace lam
