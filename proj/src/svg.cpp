#include "origami/svg.hpp"

#include <algorithm>
#include <fmt/format.h>

#include "origami/errors.hpp"

namespace origami {

namespace {

constexpr const char* kStyle =
    "  <style>\n"
    "    .frame { fill: none; stroke: #999; stroke-width: 0.5; }\n"
    "    .square { fill: #fbf8ef; stroke: #000; stroke-width: 1.5; }\n"
    "    .line { stroke: #888; stroke-width: 0.75; stroke-dasharray: 4 3; }\n"
    "    .crease { stroke: #c0392b; stroke-width: 1.25; }\n"
    "    .highlight { stroke: #1f4e9c; stroke-width: 4; stroke-linecap: round; }\n"
    "    .point { fill: #000; }\n"
    "    .label { font-family: sans-serif; font-size: 12px; fill: #000; }\n"
    "  </style>\n";

class Fmt {
public:
    explicit Fmt(int precision) : prec_(precision) {}
    std::string operator()(double v) const {
        std::string s = fmt::format("{:.{}f}", v, prec_);
        if (s.find_first_not_of("-0.") == std::string::npos && s.front() == '-') s.erase(0, 1);
        return s;
    }

private:
    int prec_;
};

std::string escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        switch (c) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '"': out += "&quot;"; break;
            default: out += c;
        }
    }
    return out;
}

std::string label_text(std::string name) {
    for (const auto& [suffix, mark] : {std::pair{"_dblprime", "″"}, std::pair{"_prime", "′"}}) {
        const std::string suf = suffix;
        if (name.size() > suf.size() && name.compare(name.size() - suf.size(), suf.size(), suf) == 0) {
            return name.substr(0, name.size() - suf.size()) + mark;
        }
    }
    return name;
}

// Portion of an infinite line inside the window, if any.
std::optional<std::pair<Point, Point>> clip(const Line& l, const WorldWindow& w) {
    const Point centre{0.5 * (w.x_min + w.x_max), 0.5 * (w.y_min + w.y_max)};
    const Point p = l.foot(centre);
    const Point d = l.direction();
    double lo = -1e300;
    double hi = 1e300;
    auto slab = [&](double p0, double dv, double mn, double mx) {
        if (std::abs(dv) < 1e-15) return p0 >= mn && p0 <= mx;
        double t0 = (mn - p0) / dv;
        double t1 = (mx - p0) / dv;
        if (t0 > t1) std::swap(t0, t1);
        lo = std::max(lo, t0);
        hi = std::min(hi, t1);
        return true;
    };
    if (!slab(p.x, d.x, w.x_min, w.x_max) || !slab(p.y, d.y, w.y_min, w.y_max) || lo >= hi) {
        return std::nullopt;
    }
    return std::pair{p + lo * d, p + hi * d};
}

}  // namespace

void RenderSpec::validate() const {
    if (width <= 0 || height <= 0) {
        throw DomainError(fmt::format("viewport must be positive (got {}x{})", width, height));
    }
    if (!(window.x_max > window.x_min) || !(window.y_max > window.y_min)) {
        throw DomainError("world window is empty");
    }
    if (precision < 0 || precision > 12) {
        throw DomainError(fmt::format("precision must lie in 0..12 (got {})", precision));
    }
    if (square && !(*square > 0.0)) {
        throw DomainError("square side must be positive");
    }
}

Point to_screen(Point world, const RenderSpec& spec) {
    const auto& w = spec.window;
    return {(world.x - w.x_min) / (w.x_max - w.x_min) * spec.width,
            (w.y_max - world.y) / (w.y_max - w.y_min) * spec.height};
}

Point to_world(Point screen, const RenderSpec& spec) {
    const auto& w = spec.window;
    return {w.x_min + screen.x / spec.width * (w.x_max - w.x_min),
            w.y_max - screen.y / spec.height * (w.y_max - w.y_min)};
}

std::string render(const fold::FoldState& state, const RenderSpec& spec) {
    spec.validate();
    for (const auto& [a, b] : spec.highlights) {
        for (const auto& n : {a, b}) {
            if (!state.points.count(n)) throw UnknownName(fmt::format("cannot highlight unknown point '{}'", n));
        }
    }
    const Fmt f(spec.precision);
    std::string out;
    out += "<?xml version=\"1.0\" encoding=\"UTF-8\" standalone=\"no\"?>\n";
    out += fmt::format(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"{0}\" height=\"{1}\" "
        "viewBox=\"0 0 {0} {1}\">\n",
        spec.width, spec.height);
    out += kStyle;
    out += fmt::format("  <rect id=\"frame\" class=\"frame\" x=\"0\" y=\"0\" width=\"{}\" height=\"{}\"/>\n",
                       spec.width, spec.height);

    if (spec.layers.square && spec.square) {
        const double s = *spec.square;
        std::string pts;
        for (Point c : {Point{0, 0}, Point{s, 0}, Point{s, s}, Point{0, s}}) {
            const Point q = to_screen(c, spec);
            if (!pts.empty()) pts += ' ';
            pts += f(q.x) + "," + f(q.y);
        }
        out += fmt::format("  <polygon id=\"square\" class=\"square\" points=\"{}\"/>\n", pts);
    }

    if (spec.layers.creases) {
        std::string body;
        for (const auto& [kind, name] : state.order) {
            if (kind == fold::EntityKind::Point) continue;
            const bool is_crease = kind == fold::EntityKind::Crease;
            const Line& l = is_crease ? state.creases.at(name).line() : state.lines.at(name);
            const auto seg = clip(l, spec.window);
            if (!seg) continue;
            const Point a = to_screen(seg->first, spec);
            const Point b = to_screen(seg->second, spec);
            body += fmt::format("    <line id=\"{}-{}\" class=\"{}\" x1=\"{}\" y1=\"{}\" x2=\"{}\" y2=\"{}\"/>\n",
                               is_crease ? "crease" : "line", escape(name), is_crease ? "crease" : "line",
                               f(a.x), f(a.y), f(b.x), f(b.y));
        }
        if (!body.empty()) out += "  <g id=\"lines\">\n" + body + "  </g>\n";
    }

    if (spec.layers.highlights && !spec.highlights.empty()) {
        out += "  <g id=\"highlights\">\n";
        for (const auto& [na, nb] : spec.highlights) {
            const Point a = to_screen(state.points.at(na), spec);
            const Point b = to_screen(state.points.at(nb), spec);
            out += fmt::format(
                "    <line id=\"hl-{}-{}\" class=\"highlight\" x1=\"{}\" y1=\"{}\" x2=\"{}\" y2=\"{}\"/>\n",
                escape(na), escape(nb), f(a.x), f(a.y), f(b.x), f(b.y));
        }
        out += "  </g>\n";
    }

    if (spec.layers.points || spec.layers.labels) {
        std::string body;
        for (const auto& [kind, name] : state.order) {
            if (kind != fold::EntityKind::Point) continue;
            const Point p = to_screen(state.points.at(name), spec);
            if (spec.layers.points) {
                body += fmt::format("    <circle id=\"pt-{}\" class=\"point\" cx=\"{}\" cy=\"{}\" r=\"3\"/>\n",
                                   escape(name), f(p.x), f(p.y));
            }
            if (spec.layers.labels) {
                body += fmt::format("    <text id=\"label-{}\" class=\"label\" x=\"{}\" y=\"{}\">{}</text>\n",
                                   escape(name), f(p.x + 5.0), f(p.y - 5.0), escape(label_text(name)));
            }
        }
        if (!body.empty()) out += "  <g id=\"points\">\n" + body + "  </g>\n";
    }
    out += "</svg>\n";
    return out;
}

}  // namespace origami
