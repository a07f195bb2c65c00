#include "origami/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <fmt/format.h>
#include <fstream>
#include <json.hpp>
#include <optional>
#include <ostream>
#include <sstream>

#include "origami/beloch.hpp"
#include "origami/classics.hpp"
#include "origami/errors.hpp"
#include "origami/foldscript.hpp"
#include "origami/haga.hpp"
#include "origami/lill.hpp"
#include "origami/svg.hpp"

namespace origami::cli {

namespace {

using json = nlohmann::ordered_json;

constexpr int kSchema = 1;

std::string num(double v) {
    std::string s = fmt::format("{:.10g}", v);
    if (s == "-0") s = "0";
    return s;
}

json jnum(double v) {
    if (!std::isfinite(v)) return nullptr;
    const double r = std::strtod(num(v).c_str(), nullptr);
    return r == 0.0 ? 0.0 : r;
}

json jpoint(Point p) { return json::array({jnum(p.x), jnum(p.y)}); }

json jline(const Line& l) {
    return {{"nx", jnum(l.nx())}, {"ny", jnum(l.ny())}, {"c", jnum(l.offset())},
            {"angle_deg", jnum(rad_to_deg(angle_of(l)))}};
}

std::string show(Point p) { return fmt::format("({}, {})", num(p.x), num(p.y)); }
std::string show(const Line& l) {
    return fmt::format("{}·x + {}·y = {}", num(l.nx()), num(l.ny()), num(l.offset()));
}

/// One command's output: a JSON record and the equivalent table rows.
class Report {
public:
    Report(std::string command, double limit) : limit_(limit) {
        rec_["schema"] = kSchema;
        rec_["command"] = std::move(command);
        rec_["inputs"] = json::object();
    }

    json& rec() { return rec_; }
    json& inputs() { return rec_["inputs"]; }
    void row(std::string label, std::string value) { rows_.emplace_back(std::move(label), std::move(value)); }
    void blank() { rows_.emplace_back("", ""); }

    /// Records a residual and fails the report when it exceeds the limit.
    void residual(const std::string& name, double v) {
        rec_["residuals"][name] = jnum(v);
        if (!(std::abs(v) <= limit_)) {
            ok_ = false;
            failed_.push_back(name);
        }
        row("residual " + name, num(v));
    }
    void fail(const std::string& why) {
        ok_ = false;
        failed_.push_back(why);
    }

    int emit(bool as_json, std::ostream& out, std::ostream& err) {
        rec_["ok"] = ok_;
        if (as_json) {
            out << rec_.dump() << '\n';
        } else {
            size_t w = 0;
            for (const auto& [k, v] : rows_) w = std::max(w, k.size());
            for (const auto& [k, v] : rows_) {
                if (k.empty() && v.empty()) {
                    out << '\n';
                    continue;
                }
                out << fmt::format("{:<{}}  {}\n", k, w, v);
            }
        }
        if (!ok_) {
            err << "origami: check failed: ";
            for (size_t i = 0; i < failed_.size(); ++i) err << (i ? ", " : "") << failed_[i];
            err << '\n';
            return kCheck;
        }
        return kOk;
    }

private:
    json rec_;
    std::vector<std::pair<std::string, std::string>> rows_;
    std::vector<std::string> failed_;
    double limit_;
    bool ok_ = true;
};

json jfold(const FoldConfig& cfg, const FoldSolution& s) {
    json j;
    j["X"] = jnum(s.X);
    j["r"] = s.r ? jnum(*s.r) : json(nullptr);
    j["y_tilde"] = jnum(s.y_tilde);
    j["crease"] = jline(s.crease);
    j["A_image"] = jpoint(s.a_image);
    j["B_image"] = jpoint(s.b_image);
    j["P_A"] = jpoint(midpoint(cfg.a, s.a_image));
    j["P_B"] = jpoint(midpoint(cfg.b, s.b_image));
    return j;
}

void fold_rows(Report& rep, const std::string& prefix, const FoldConfig& cfg, const FoldSolution& s) {
    rep.row(prefix + " X", num(s.X));
    rep.row(prefix + " r", s.r ? num(*s.r) : "none (horizontal crease)");
    rep.row(prefix + " y_tilde", num(s.y_tilde));
    rep.row(prefix + " crease", show(s.crease));
    rep.row(prefix + " A'", show(s.a_image));
    rep.row(prefix + " B'", show(s.b_image));
    rep.row(prefix + " P_A", show(midpoint(cfg.a, s.a_image)));
    rep.row(prefix + " P_B", show(midpoint(cfg.b, s.b_image)));
}

json jclass(const CubicClassification& c) {
    return {{"p", jnum(c.p)}, {"q", jnum(c.q)}, {"disc", jnum(c.disc)}, {"root_count", c.root_count}};
}

void class_rows(Report& rep, const CubicClassification& c) {
    rep.row("p", num(c.p));
    rep.row("q", num(c.q));
    rep.row("disc", num(c.disc));
    rep.row("real roots", std::to_string(c.root_count));
}

std::string show(const Cubic& c) {
    return fmt::format("{} X^3 + {} X^2 + {} X + {}", num(c.c3), num(c.c2), num(c.c1), num(c.c0));
}

json jcubic(const Cubic& c) { return json::array({jnum(c.c3), jnum(c.c2), jnum(c.c1), jnum(c.c0)}); }

// ---- commands ----------------------------------------------------------------

struct Options {
    bool as_json = false;
    Tolerance tol;
    double limit = 1e-8;
};

int cmd_solve_cubic(const Options& o, const std::vector<double>& c, std::ostream& out, std::ostream& err) {
    Report rep("solve-cubic", o.limit);
    rep.inputs()["coefficients"] = json::array({jnum(c[0]), jnum(c[1]), jnum(c[2]), jnum(c[3])});
    const Cubic cubic(c[0], c[1], c[2], c[3]);
    const CubicClassification cls = classify(cubic);
    const auto roots = solve_cubic_real(cubic);
    rep.rec()["classification"] = jclass(cls);
    rep.row("cubic", show(cubic));
    class_rows(rep, cls);

    std::vector<FoldedRoot> folds;
    FoldConfig chain_cfg;
    if (cubic.monic().c0 != 0.0) {
        const LillChain ch = lill_chain({c[0], c[1], c[2], c[3]});
        chain_cfg = FoldConfig{ch.a_anchor, ch.b_anchor, Vertical{}, 1.0};
        folds = solve_cubic_by_folding({c[0], c[1], c[2], c[3]});
        rep.rec()["anchors"] = {{"A", jpoint(ch.a_anchor)}, {"B", jpoint(ch.b_anchor)}};
        std::string turns;
        for (Turn t : ch.turns) turns += t == Turn::Left ? 'l' : 'r';
        rep.rec()["turns"] = turns;
        rep.row("anchors", fmt::format("A = {}, B = {}", show(ch.a_anchor), show(ch.b_anchor)));
        rep.row("turns", turns);
    } else {
        rep.row("folding", "skipped: x = 0 is a root, the chain needs a nonzero constant term");
    }

    json jr = json::array();
    double worst_cubic = 0.0;
    double worst_fold = 0.0;
    int k = 0;
    for (double x : roots) {
        ++k;
        json r;
        r["x"] = jnum(x);
        const std::string tag = fmt::format("root {}", k);
        rep.blank();
        rep.row(tag, num(x));
        worst_cubic = std::max(worst_cubic, relative_residual(cubic, x));
        const FoldedRoot* best = nullptr;
        for (const auto& f : folds) {
            if (!best || std::abs(f.x - x) < std::abs(best->x - x)) best = &f;
        }
        if (best) {
            r["fold"] = jfold(chain_cfg, best->fold);
            fold_rows(rep, tag, chain_cfg, best->fold);
            worst_fold = std::max({worst_fold, best->fold.residual_a, best->fold.residual_b,
                                   std::abs(best->x - x) / std::max(1.0, std::abs(x))});
        }
        jr.push_back(r);
    }
    rep.rec()["roots"] = jr;
    rep.blank();
    rep.residual("cubic", worst_cubic);
    if (!folds.empty()) {
        rep.residual("fold", worst_fold);
        if (folds.size() != roots.size()) rep.fail("fold count differs from root count");
    }
    return rep.emit(o.as_json, out, err);
}

struct FoldArgs {
    double ax = 0, ay = 0, bx = 0, by = 0;
    std::optional<double> alpha;
    bool vertical = false;
    bool horizontal = false;
    std::optional<double> parallel;
    double R = 1.0;
};

int cmd_fold(const Options& o, const FoldArgs& a, std::ostream& out, std::ostream& err) {
    const int modes = int(a.alpha.has_value()) + int(a.vertical) + int(a.horizontal) + int(a.parallel.has_value());
    if (modes != 1) {
        err << "origami fold: give exactly one of --alpha, --vertical, --horizontal, --parallel\n";
        return kUsage;
    }
    FoldConfig cfg{{a.ax, a.ay}, {a.bx, a.by}, Vertical{}, a.R};
    std::string mode = "vertical";
    if (a.alpha) {
        cfg.mode = Oblique{*a.alpha};
        mode = "oblique";
    } else if (a.horizontal) {
        cfg.mode = Horizontal{};
        mode = "horizontal";
    } else if (a.parallel) {
        cfg.mode = ParallelLines{*a.parallel};
        mode = "parallel";
    }
    Report rep("fold", o.limit);
    auto& in = rep.inputs();
    in["A"] = jpoint(cfg.a);
    in["B"] = jpoint(cfg.b);
    in["mode"] = mode;
    if (a.alpha) in["alpha"] = jnum(*a.alpha);
    if (a.parallel) in["d"] = jnum(*a.parallel);
    in["R"] = jnum(a.R);
    rep.row("mode", mode);

    std::vector<FoldSolution> sols;
    if (a.alpha || a.vertical) {
        const Cubic cubic = fold_cubic(cfg);
        rep.rec()["cubic"] = jcubic(cubic);
        rep.rec()["classification"] = jclass(classify(cubic));
        rep.row("cubic", show(cubic));
        sols = solve_fold(cfg);
    } else if (a.horizontal) {
        sols.push_back(alpha0_solve(cfg));
        if (std::abs(a.ay - a.by) > 0.0) {
            double sigma = std::atan2(a.ay - a.by, a.ax - a.bx);
            if (sigma > kPi / 2) sigma -= kPi;
            if (sigma <= -kPi / 2) sigma += kPi;
            rep.rec()["sigma_deg"] = jnum(rad_to_deg(sigma));
            rep.row("sigma (deg)", num(rad_to_deg(sigma)));
        }
    } else {
        const auto res = parallel_solve(cfg);
        if (const auto* inf = std::get_if<Infeasible>(&res)) {
            rep.rec()["infeasible"] = {{"excess", jnum(inf->excess)}};
            rep.rec()["solutions"] = json::array();
            rep.rec()["ok"] = false;
            if (o.as_json) out << rep.rec().dump() << '\n';
            err << fmt::format("origami fold: no fold exists: d exceeds |A - B| (excess {})\n", num(inf->excess));
            return kDomain;
        }
        sols.push_back(std::get<FoldSolution>(res));
    }
    json js = json::array();
    double worst = 0.0;
    int k = 0;
    for (const auto& s : sols) {
        ++k;
        json j = jfold(cfg, s);
        if (a.parallel) {
            j["b_image_x"] = jnum(s.b_image.x / a.R);
            rep.row(fmt::format("solution {} b'_x", k), num(s.b_image.x / a.R));
        }
        js.push_back(j);
        rep.blank();
        fold_rows(rep, fmt::format("solution {}", k), cfg, s);
        worst = std::max({worst, s.residual_a, s.residual_b});
    }
    rep.rec()["solutions"] = js;
    rep.blank();
    rep.residual("incidence", worst);
    return rep.emit(o.as_json, out, err);
}

int cmd_trisect(const Options& o, double alpha_deg, double h, bool all, std::ostream& out, std::ostream& err) {
    if (!(alpha_deg > 0.0 && alpha_deg < 90.0)) {
        throw DomainError(fmt::format("--alpha must lie strictly between 0 and 90 degrees (got {})", alpha_deg));
    }
    const double alpha = deg_to_rad(alpha_deg);
    const TrisectionResult res = trisect(alpha, h);
    const Cubic cubic = trisection_cubic(alpha, h);
    Report rep("trisect", o.limit);
    rep.inputs()["alpha_deg"] = jnum(alpha_deg);
    rep.inputs()["h"] = jnum(h);
    rep.inputs()["all"] = all;
    rep.rec()["cubic"] = jcubic(cubic);
    rep.rec()["disc"] = jnum(trisection_discriminant(alpha, h));
    rep.row("cubic", show(cubic));
    rep.row("disc", num(trisection_discriminant(alpha, h)));
    json js = json::array();
    double worst_cubic = 0.0, worst_angle = 0.0, worst_geom = 0.0;
    for (const auto& s : res.solutions) {
        if (!all && s.which != TrisectionBranch::Alpha) continue;
        const std::string tag(to_string(s.which));
        js.push_back({{"which", tag},
                      {"X_hat", jnum(s.X_hat)},
                      {"theta_deg", jnum(rad_to_deg(s.theta))},
                      {"crease", jline(s.g.line())},
                      {"g4", jline(s.g4)},
                      {"g5", jline(s.g5)},
                      {"B_prime", jpoint(s.B_prime)},
                      {"E_prime", jpoint(s.E_prime)}});
        rep.blank();
        rep.row(tag + " X_hat", num(s.X_hat));
        rep.row(tag + " theta (deg)", num(rad_to_deg(s.theta)));
        rep.row(tag + " crease", show(s.g.line()));
        rep.row(tag + " B'", show(s.B_prime));
        rep.row(tag + " E'", show(s.E_prime));
        worst_cubic = std::max(worst_cubic, relative_residual(cubic, s.X_hat));
        worst_angle = std::max(worst_angle, std::abs(std::tan(3.0 * s.theta) - std::tan(alpha)));
        worst_geom = std::max({worst_geom, distance_point_line(s.E_prime, res.g1),
                               distance_point_line(s.B_prime, res.g3), distance_point_line(s.G_prime, s.g5)});
    }
    rep.rec()["solutions"] = js;
    rep.blank();
    rep.residual("cubic", worst_cubic);
    rep.residual("triple_angle", worst_angle);
    rep.residual("incidence", worst_geom);
    return rep.emit(o.as_json, out, err);
}

int cmd_double_cube(const Options& o, double side, std::ostream& out, std::ostream& err) {
    const DoublingResult d = double_cube(side);
    Report rep("double-cube", o.limit);
    rep.inputs()["side"] = jnum(side);
    rep.rec()["s"] = jnum(d.s);
    rep.rec()["ratio"] = jnum(d.ratio);
    rep.rec()["inv_s"] = jnum(d.inv_s);
    rep.rec()["M"] = jnum(d.M);
    rep.rec()["disc"] = jnum(d.classification.disc);
    rep.rec()["crease"] = jline(d.crease);
    rep.rec()["rescaled_side"] = jnum(d.rescaled_side);
    rep.rec()["rescaled_M"] = jnum(d.rescaled_M);
    json pts = json::object();
    for (const auto& [k, p] : d.points) pts[k] = jpoint(p);
    rep.rec()["points"] = pts;
    rep.row("s", num(d.s));
    rep.row("ratio (1-s)/s", num(d.ratio));
    rep.row("1/s", num(d.inv_s));
    rep.row("M", num(d.M));
    rep.row("disc", num(d.classification.disc));
    rep.row("crease Y-Z", show(d.crease));
    rep.row("rescaled side L/s", num(d.rescaled_side));
    rep.row("rescaled M = |C'A|", num(d.rescaled_M));
    for (const auto& [k, p] : d.points) rep.row(k, show(p));
    rep.blank();
    rep.residual("ratio_cubed", d.ratio * d.ratio * d.ratio - 2.0);
    rep.residual("cubic", relative_residual(Cubic(1.0, -1.0, 1.0, -1.0 / 3.0), d.s));
    rep.residual("M", (d.M - std::cbrt(2.0) * side) / side);
    return rep.emit(o.as_json, out, err);
}

int cmd_heptagon(const Options& o, std::ostream& out, std::ostream& err) {
    const HeptagonResult h = heptagon();
    Report rep("heptagon", o.limit);
    rep.rec()["polynomial"] = jcubic(h.polynomial);
    rep.rec()["classification"] = jclass(h.classification);
    rep.rec()["anchors"] = {{"A", jpoint(h.a_anchor)}, {"B", jpoint(h.b_anchor)}};
    rep.row("polynomial", show(h.polynomial));
    class_rows(rep, h.classification);
    rep.row("anchors", fmt::format("A = {}, B = {}", show(h.a_anchor), show(h.b_anchor)));
    json js = json::array();
    double worst_cubic = 0.0, worst_fold = 0.0, worst_prod = 0.0;
    int k = 0;
    for (const auto& r : h.roots) {
        ++k;
        js.push_back({{"x", jnum(r.x)}, {"X_hat", jnum(r.X_hat)}, {"crease", jline(r.crease)}});
        rep.blank();
        rep.row(fmt::format("root {} x", k), num(r.x));
        rep.row(fmt::format("root {} X_hat", k), num(r.X_hat));
        rep.row(fmt::format("root {} crease", k), show(r.crease));
        worst_cubic = std::max(worst_cubic, relative_residual(h.polynomial, r.x));
        worst_fold = std::max({worst_fold, r.fold.residual_a, r.fold.residual_b});
        worst_prod = std::max(worst_prod, std::abs(r.x * r.X_hat - 2.0));
    }
    rep.rec()["roots"] = js;
    rep.blank();
    rep.residual("cubic", worst_cubic);
    rep.residual("fold", worst_fold);
    rep.residual("x_times_X_hat", worst_prod);
    return rep.emit(o.as_json, out, err);
}

int cmd_haga(const Options& o, double x, double R, bool second, bool egyptian, std::ostream& out,
             std::ostream& err) {
    Report rep("haga", o.limit);
    rep.inputs()["R"] = jnum(R);
    auto put_points = [&](const std::map<std::string, Point>& pts) {
        json j = json::object();
        for (const auto& [k, p] : pts) {
            j[k] = jpoint(p);
            rep.row(k, show(p));
        }
        rep.rec()["points"] = j;
    };
    if (egyptian) {
        rep.inputs()["mode"] = "egyptian";
        const EgyptianTriangles e = egyptian_triangles(R);
        double worst = 0.0;
        json tj = json::object();
        const std::pair<const char*, std::array<double, 3>> tris[] = {{"T1", e.T1}, {"T2", e.T2}, {"T3", e.T3}};
        for (const auto& [name, t] : tris) {
            tj[name] = json::array({jnum(t[0]), jnum(t[1]), jnum(t[2])});
            rep.row(name, fmt::format("({}, {}, {})", num(t[0]), num(t[1]), num(t[2])));
            worst = std::max(worst, std::abs(t[0] * t[0] + t[1] * t[1] - t[2] * t[2]) / (R * R));
        }
        rep.rec()["triangles"] = tj;
        rep.rec()["sin_2alpha"] = jnum(e.sin_2alpha);
        rep.rec()["cos_2alpha"] = jnum(e.cos_2alpha);
        rep.row("sin 2alpha", num(e.sin_2alpha));
        rep.row("cos 2alpha", num(e.cos_2alpha));
        put_points(e.points);
        rep.blank();
        rep.residual("pythagoras", worst);
        return rep.emit(o.as_json, out, err);
    }
    rep.inputs()["x"] = jnum(x);
    if (second) {
        rep.inputs()["mode"] = "second-theorem";
        const HagaSecondTheorem t = haga_second_theorem(x, R);
        rep.rec()["S"] = jpoint(t.S);
        rep.rec()["PC"] = jpoint(t.PC);
        rep.rec()["PB"] = jpoint(t.PB);
        rep.rec()["common_length"] = jnum(t.common_length);
        rep.row("S", show(t.S));
        rep.row("PC", show(t.PC));
        rep.row("PB", show(t.PB));
        rep.row("common length", num(t.common_length));
        put_points(t.construction.points);
        const auto& L = t.construction.lengths;
        rep.blank();
        rep.residual("median", (t.S.x - R / 2) / R);
        rep.residual("equal_lengths",
                     (std::max({L.at("SB"), L.at("SC"), L.at("SC_prime")}) -
                      std::min({L.at("SB"), L.at("SC"), L.at("SC_prime")})) / R);
        rep.residual("PC_PB", (L.at("PC_PB") - R / 2) / R);
        return rep.emit(o.as_json, out, err);
    }
    rep.inputs()["mode"] = "corner-C";
    const HagaConstruction h = fold_corner_C(x, R);
    rep.rec()["crease"] = jline(h.crease("g").line());
    rep.row("crease g", show(h.crease("g").line()));
    put_points(h.points);
    json lj = json::object();
    for (const auto& [k, v] : h.lengths) {
        lj[k] = jnum(v);
        rep.row(k, num(v));
    }
    rep.rec()["lengths"] = lj;
    rep.blank();
    rep.residual("P_height", (h.point("P").y - R / 2) / R);
    return rep.emit(o.as_json, out, err);
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::invalid_argument(fmt::format("cannot read '{}'", path));
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out || !(out << text)) throw std::invalid_argument(fmt::format("cannot write '{}'", path));
}

json jstate(const fold::FoldState& st) {
    json pts = json::object(), lines = json::object(), creases = json::object();
    for (const auto& [kind, name] : st.order) {
        switch (kind) {
            case fold::EntityKind::Point: pts[name] = jpoint(st.points.at(name)); break;
            case fold::EntityKind::Line: lines[name] = jline(st.lines.at(name)); break;
            case fold::EntityKind::Crease: {
                json c = jline(st.creases.at(name).line());
                c["kind"] = std::string(to_string(st.creases.at(name).kind()));
                creases[name] = c;
                break;
            }
        }
    }
    return {{"points", pts}, {"lines", lines}, {"creases", creases}, {"emitted", st.emitted}};
}

void state_rows(Report& rep, const fold::FoldState& st) {
    auto row_for = [&](const std::string& name) {
        if (st.points.count(name)) rep.row(name, "point " + show(st.points.at(name)));
        if (st.lines.count(name)) rep.row(name, "line " + show(st.lines.at(name)));
        if (st.creases.count(name)) {
            const Crease& c = st.creases.at(name);
            rep.row(name, fmt::format("crease {} {}", to_string(c.kind()), show(c.line())));
        }
    };
    if (!st.emitted.empty()) {
        for (const auto& n : st.emitted) row_for(n);
    } else {
        for (const auto& [kind, n] : st.order) row_for(n);
    }
}

struct RenderArgs {
    std::vector<double> window;
    std::vector<std::string> highlights;
    int width = 600;
    int height = 600;
    int precision = 4;
    bool no_square = false;
};

RenderSpec make_spec(const RenderArgs& a) {
    RenderSpec spec;
    spec.width = a.width;
    spec.height = a.height;
    spec.precision = a.precision;
    if (!a.window.empty()) spec.window = {a.window[0], a.window[1], a.window[2], a.window[3]};
    if (!a.no_square) spec.square = 1.0;
    for (const auto& h : a.highlights) {
        const auto colon = h.find(':');
        if (colon == std::string::npos || colon == 0 || colon + 1 == h.size()) {
            throw CLI::ValidationError("--highlight", fmt::format("expected P:Q, got '{}'", h));
        }
        spec.highlights.emplace_back(h.substr(0, colon), h.substr(colon + 1));
    }
    return spec;
}

int cmd_run(const Options& o, const std::string& script, const std::string& render_to, const RenderArgs& ra,
            std::ostream& out, std::ostream& err) {
    const std::string text = read_file(script);
    const fold::FoldState st = fold::run(text, o.tol);
    Report rep("run", o.limit);
    rep.inputs()["script"] = script;
    rep.rec()["state"] = jstate(st);
    rep.rec()["assertions"] = st.assertions_checked;
    state_rows(rep, st);
    rep.row("assertions passed", std::to_string(st.assertions_checked));
    if (!render_to.empty()) {
        write_file(render_to, render(st, make_spec(ra)));
        rep.rec()["svg"] = render_to;
        rep.row("svg", render_to);
    }
    return rep.emit(o.as_json, out, err);
}

int cmd_render(const Options& o, const std::string& script, const std::string& target, const RenderArgs& ra,
               std::ostream& out, std::ostream& err) {
    const fold::FoldState st = fold::run(read_file(script), o.tol);
    const std::string svg = render(st, make_spec(ra));
    write_file(target, svg);
    Report rep("render", o.limit);
    rep.inputs()["script"] = script;
    rep.rec()["svg"] = target;
    rep.rec()["bytes"] = svg.size();
    rep.row("svg", target);
    rep.row("bytes", std::to_string(svg.size()));
    return rep.emit(o.as_json, out, err);
}

std::optional<double> env_eps(std::ostream& err, bool& bad) {
    const char* raw = std::getenv("ORIGAMI_EPS");
    if (raw == nullptr || *raw == '\0') return std::nullopt;
    const std::string_view s(raw);
    double v = 0.0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size() || !(v > 0.0) || !std::isfinite(v)) {
        err << fmt::format("origami: ORIGAMI_EPS must be a positive decimal literal (got '{}')\n", s);
        bad = true;
        return std::nullopt;
    }
    return v;
}

void error_record(bool as_json, std::ostream& out, const std::string& command, const char* kind,
                  const std::string& msg) {
    if (!as_json) return;
    json j;
    j["schema"] = kSchema;
    j["command"] = command;
    j["ok"] = false;
    j["error"] = {{"kind", kind}, {"message", msg}};
    out << j.dump() << '\n';
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Origami constructions: cubic folds, Haga's theorems, classical problems, FoldScript."};
    app.name("origami");
    app.require_subcommand(1);
    Options o;
    app.add_flag("--json", o.as_json, "Emit one JSON record instead of a table");

    auto* solve = app.add_subcommand("solve-cubic", "Real roots of c3 X^3 + c2 X^2 + c1 X + c0 and their folds");
    std::vector<double> coeffs;
    solve->add_option("coefficients", coeffs, "c3 c2 c1 c0")->required()->expected(4);

    auto* fold_cmd = app.add_subcommand("fold", "Fold A onto the x-axis and B onto a second line");
    FoldArgs fa;
    fold_cmd->add_option("--ax", fa.ax)->required();
    fold_cmd->add_option("--ay", fa.ay)->required();
    fold_cmd->add_option("--bx", fa.bx)->required();
    fold_cmd->add_option("--by", fa.by)->required();
    fold_cmd->add_option("--alpha", fa.alpha, "Angle of the second axis, radians");
    fold_cmd->add_flag("--vertical", fa.vertical, "B onto the y-axis");
    fold_cmd->add_flag("--horizontal", fa.horizontal, "B onto the x-axis too");
    fold_cmd->add_option("--parallel", fa.parallel, "B onto the line y = D");
    fold_cmd->add_option("--R", fa.R, "Length unit")->capture_default_str();

    auto* tri = app.add_subcommand("trisect", "Trisect an angle by folding");
    double alpha_deg = 0.0, h = 0.0;
    bool all = false;
    tri->add_option("--alpha", alpha_deg, "Angle in degrees, inside (0, 90)")->required();
    tri->set_help_flag("--help", "Print this help message and exit");  // -h would clash with --h
    tri->add_option("--h", h, "Strip height, inside (0, 0.5)")->required();
    tri->add_flag("--all", all, "Also show the pi - alpha and pi + alpha solutions");

    auto* dbl = app.add_subcommand("double-cube", "Side of the doubled cube");
    double side = 1.0;
    dbl->add_option("--side", side, "Side L of the given cube")->capture_default_str();

    auto* hept = app.add_subcommand("heptagon", "Roots of x^3 - x^2 - 2x + 1 by three folds");

    auto* haga = app.add_subcommand("haga", "Haga's corner folds");
    double hx = 0.5, hR = 1.0;
    bool second = false, egyptian = false;
    haga->add_option("--x", hx, "Position of C' on AD, units of R")->capture_default_str();
    haga->add_option("--R", hR, "Side of the square")->capture_default_str();
    auto* f2 = haga->add_flag("--second-theorem", second, "Fold B and C onto the same point");
    auto* f3 = haga->add_flag("--egyptian", egyptian, "C onto the midpoint of AD");
    f2->excludes(f3);

    RenderArgs ra;
    auto add_render_opts = [&](CLI::App* sub) {
        sub->add_option("--window", ra.window, "x_min x_max y_min y_max")->expected(4);
        sub->add_option("--highlight", ra.highlights, "Fat segment P:Q (repeatable)");
        sub->add_option("--width", ra.width)->capture_default_str();
        sub->add_option("--height", ra.height)->capture_default_str();
        sub->add_option("--precision", ra.precision)->capture_default_str();
        sub->add_flag("--no-square", ra.no_square, "Do not outline the unit square");
    };
    auto* run_cmd = app.add_subcommand("run", "Evaluate a FoldScript file");
    std::string script, render_to, target;
    run_cmd->add_option("script", script)->required();
    run_cmd->add_option("--render", render_to, "Also write an SVG");
    add_render_opts(run_cmd);

    auto* rend = app.add_subcommand("render", "Evaluate a FoldScript file and write an SVG");
    rend->add_option("script", script)->required();
    rend->add_option("out", target)->required();
    add_render_opts(rend);

    std::string command = args.empty() ? "" : args.front();
    try {
        std::vector<std::string> rev(args.rbegin(), args.rend());
        app.parse(rev);
    } catch (const CLI::CallForHelp& e) {
        app.exit(e, out, err);
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "origami: " << e.what() << '\n';
        err << "Run 'origami --help' for usage.\n";
        return kUsage;
    }
    for (auto* sub : app.get_subcommands()) command = sub->get_name();

    bool bad_env = false;
    if (const auto eps = env_eps(err, bad_env)) {
        o.tol = Tolerance(*eps, o.tol.eps_rel);
    }
    if (bad_env) return kUsage;
    o.limit = 10.0 * o.tol.eps_abs;

    try {
        if (solve->parsed()) return cmd_solve_cubic(o, coeffs, out, err);
        if (fold_cmd->parsed()) return cmd_fold(o, fa, out, err);
        if (tri->parsed()) return cmd_trisect(o, alpha_deg, h, all, out, err);
        if (dbl->parsed()) return cmd_double_cube(o, side, out, err);
        if (hept->parsed()) return cmd_heptagon(o, out, err);
        if (haga->parsed()) return cmd_haga(o, hx, hR, second, egyptian, out, err);
        if (run_cmd->parsed()) return cmd_run(o, script, render_to, ra, out, err);
        if (rend->parsed()) return cmd_render(o, script, target, ra, out, err);
    } catch (const fold::AssertionFailure& e) {
        error_record(o.as_json, out, command, "assertion", e.what());
        err << "origami: " << e.what() << '\n';
        return kCheck;
    } catch (const ResidualFailure& e) {
        error_record(o.as_json, out, command, "residual", e.what());
        err << "origami: " << e.what() << '\n';
        return kCheck;
    } catch (const fold::ParseError& e) {
        error_record(o.as_json, out, command, "parse", e.what());
        err << "origami: " << e.what() << '\n';
        return kDomain;
    } catch (const fold::EvalError& e) {
        error_record(o.as_json, out, command, "script", e.what());
        err << "origami: " << e.what() << '\n';
        return kDomain;
    } catch (const Error& e) {
        error_record(o.as_json, out, command, "domain", e.what());
        err << "origami: " << e.what() << '\n';
        return kDomain;
    } catch (const CLI::ValidationError& e) {
        err << "origami: " << e.what() << '\n';
        return kUsage;
    } catch (const std::invalid_argument& e) {
        error_record(o.as_json, out, command, "usage", e.what());
        err << "origami: " << e.what() << '\n';
        return kUsage;
    } catch (const std::exception& e) {
        error_record(o.as_json, out, command, "internal", e.what());
        err << "origami: internal error: " << e.what() << '\n';
        return kInternal;
    }
    err << "origami: no command given\n";
    return kUsage;
}

}  // namespace origami::cli
