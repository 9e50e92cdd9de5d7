#pragma once

// Staircase diagrams of monomial ideals in two variables. Layers are drawn in
// the given order, each over the previous ones, so list the largest ideal
// first.

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "monores/error.hpp"
#include "monores/ideal.hpp"

namespace monores::io {

struct StaircaseLayer {
    std::string label;
    std::vector<Exponent> generators;  // minimal, lex order
    char glyph;
    std::string shade;
};

struct StaircasePicture {
    std::vector<StaircaseLayer> layers;
    Int width = 0;   // cells along z₁
    Int height = 0;  // cells along z₂
};

struct LabeledIdeal {
    std::string label;
    MonomialIdeal ideal;
};

namespace detail {

inline constexpr char kGlyphs[] = {'.', ':', '#'};
inline const char* const kShades[] = {"#d9d9d9", "#a6a6a6", "#6e6e6e"};

inline bool covers(const std::vector<Exponent>& gens, Int x, Int y) {
    return std::any_of(gens.begin(), gens.end(), [&](const Exponent& g) { return g[0] <= x && g[1] <= y; });
}

// Cell (x, y) is the unit square [x, x+1] × [y, y+1].
inline std::vector<bool> raster(const StaircaseLayer& l, Int w, Int h) {
    std::vector<bool> cells(static_cast<std::size_t>(w * h));
    for (Int y = 0; y < h; ++y)
        for (Int x = 0; x < w; ++x) cells[static_cast<std::size_t>(y * w + x)] = covers(l.generators, x, y);
    return cells;
}

}  // namespace detail

inline StaircasePicture renderStaircase(const std::vector<LabeledIdeal>& layers) {
    if (layers.empty()) throw InvalidInput("nothing to draw");
    StaircasePicture pic;
    Int reach = 0;
    for (std::size_t i = 0; i < layers.size(); ++i) {
        const auto& ideal = layers[i].ideal;
        if (ideal.dimension() != 2)
            throw PreconditionError("staircase diagrams need two variables, got " + std::to_string(ideal.dimension()));
        for (const auto& g : ideal.generators()) reach = std::max({reach, g[0], g[1]});
        pic.layers.push_back({layers[i].label, ideal.generators(), detail::kGlyphs[i % 3], detail::kShades[i % 3]});
    }
    pic.width = pic.height = reach + 2;

    // A contained ideal must be drawn inside its container.
    for (std::size_t i = 0; i < layers.size(); ++i)
        for (std::size_t j = 0; j < layers.size(); ++j) {
            if (i == j || !isSubideal(layers[i].ideal, layers[j].ideal)) continue;
            const auto a = detail::raster(pic.layers[i], pic.width, pic.height);
            const auto b = detail::raster(pic.layers[j], pic.width, pic.height);
            for (std::size_t c = 0; c < a.size(); ++c)
                if (a[c] && !b[c]) throw std::logic_error("staircase raster is not nested");
        }
    return pic;
}

/// One character per cell, z₂ upwards, followed by a legend.
inline std::string toAscii(const StaircasePicture& pic) {
    std::vector<std::string> rows(static_cast<std::size_t>(pic.height), std::string(static_cast<std::size_t>(pic.width), ' '));
    for (const auto& l : pic.layers) {
        const auto cells = detail::raster(l, pic.width, pic.height);
        for (Int y = 0; y < pic.height; ++y)
            for (Int x = 0; x < pic.width; ++x)
                if (cells[static_cast<std::size_t>(y * pic.width + x)])
                    rows[static_cast<std::size_t>(y)][static_cast<std::size_t>(x)] = l.glyph;
    }
    std::string out;
    for (Int y = pic.height - 1; y >= 0; --y) out += "|" + rows[static_cast<std::size_t>(y)] + "\n";
    out += "+" + std::string(static_cast<std::size_t>(pic.width), '-') + "\n";
    for (const auto& l : pic.layers) out += std::string(1, l.glyph) + " " + l.label + "\n";
    return out;
}

/// 20 units per cell; each layer is one filled staircase polygon.
inline std::string toSvg(const StaircasePicture& pic) {
    constexpr Int cell = 20;
    constexpr Int margin = 20;
    constexpr Int legendRow = 18;
    const Int W = pic.width * cell, H = pic.height * cell;
    const Int legend = static_cast<Int>(pic.layers.size()) * legendRow + 10;
    auto X = [&](Int x) { return margin + x * cell; };
    auto Y = [&](Int y) { return margin + H - y * cell; };

    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << W + 2 * margin << "\" height=\""
       << H + 2 * margin + legend << "\">\n";
    os << "<rect x=\"0\" y=\"0\" width=\"" << W + 2 * margin << "\" height=\"" << H + 2 * margin + legend
       << "\" fill=\"white\"/>\n";
    for (const auto& l : pic.layers) {
        // Generators sorted by z₁ ascending have z₂ descending.
        os << "<path fill=\"" << l.shade << "\" stroke=\"black\" stroke-width=\"1\" d=\"M " << X(l.generators[0][0])
           << " " << Y(pic.height);
        for (std::size_t i = 0; i < l.generators.size(); ++i) {
            const auto& g = l.generators[i];
            os << " L " << X(g[0]) << " " << Y(g[1]);
            if (i + 1 < l.generators.size()) os << " L " << X(l.generators[i + 1][0]) << " " << Y(g[1]);
        }
        os << " L " << X(pic.width) << " " << Y(l.generators.back()[1]) << " L " << X(pic.width) << " "
           << Y(pic.height) << " Z\"/>\n";
    }
    for (Int x = 0; x <= pic.width; ++x)
        os << "<line x1=\"" << X(x) << "\" y1=\"" << Y(0) << "\" x2=\"" << X(x) << "\" y2=\"" << Y(pic.height)
           << "\" stroke=\"#cccccc\" stroke-width=\"0.5\"/>\n";
    for (Int y = 0; y <= pic.height; ++y)
        os << "<line x1=\"" << X(0) << "\" y1=\"" << Y(y) << "\" x2=\"" << X(pic.width) << "\" y2=\"" << Y(y)
           << "\" stroke=\"#cccccc\" stroke-width=\"0.5\"/>\n";
    for (std::size_t i = 0; i < pic.layers.size(); ++i) {
        const Int top = margin + H + margin + static_cast<Int>(i) * legendRow;
        os << "<rect x=\"" << margin << "\" y=\"" << top << "\" width=\"12\" height=\"12\" fill=\""
           << pic.layers[i].shade << "\" stroke=\"black\"/>\n";
        os << "<text x=\"" << margin + 18 << "\" y=\"" << top + 11
           << "\" font-family=\"monospace\" font-size=\"12\">" << pic.layers[i].label << "</text>\n";
    }
    os << "</svg>\n";
    return os.str();
}

}  // namespace monores::io
