#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "origami/foldscript.hpp"

namespace origami {

struct WorldWindow {
    double x_min = -0.1;
    double x_max = 1.1;
    double y_min = -0.1;
    double y_max = 1.1;
};

struct RenderLayers {
    bool square = true;
    bool creases = true;
    bool points = true;
    bool labels = true;
    bool highlights = true;
};

struct RenderSpec {
    int width = 600;
    int height = 600;
    WorldWindow window;
    RenderLayers layers;
    int precision = 4;  // decimals in coordinates
    /// Point-name pairs drawn as fat segments.
    std::vector<std::pair<std::string, std::string>> highlights;
    /// Side of the paper square with corner at the origin; none draws no outline.
    std::optional<double> square;

    /// Throws DomainError for a non-positive viewport, an empty window or a
    /// precision outside 0..12.
    void validate() const;
};

Point to_screen(Point world, const RenderSpec& spec);
Point to_world(Point screen, const RenderSpec& spec);

/// SVG 1.1 text. Lines and creases are clipped to the window and drawn in
/// definition order, then highlights, then points. Throws UnknownName when
/// a highlighted point is missing.
std::string render(const fold::FoldState& state, const RenderSpec& spec = {});

}  // namespace origami
