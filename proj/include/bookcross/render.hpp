#pragma once

#include <string>

#include "bookcross/drawing.hpp"

namespace bookcross {

/// Visual conventions for the circular model: one circle per page, black
/// vertices as filled discs, white vertices as open circles.
struct RenderSpec {
    double radius = 120.0;
    double margin = 40.0;
    double vertex_radius = 5.0;
    int columns = 2;
    bool labels = true;
};

/// SVG 1.1 document with one panel per page and identical vertex placement
/// in every panel. Edges are straight chords; an edge involved in a
/// crossing on its page gets the "crossed" stroke class. Output is
/// byte-identical for identical inputs.
std::string render_svg(const BookDrawing& drawing, const RenderSpec& spec = {});

}  // namespace bookcross
