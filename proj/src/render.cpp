#include "isosum/render.hpp"

#include "isosum/error.hpp"

#include <algorithm>
#include <array>
#include <cmath>

#include <fmt/format.h>

namespace isosum {

namespace {

constexpr int kGrid = 64;
constexpr std::array<const char*, 6> kPalette = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#17becf"};

// Values that would print as -0.000000000 are shown as zero.
std::string num(double v) { return fmt::format("{:.9f}", std::abs(v) < 5e-10 ? 0.0 : v); }

class SvgCanvas {
public:
    explicit SvgCanvas(const Polygon& outline) {
        const auto box = bounding_box(outline);
        const double w = box.max.x - box.min.x;
        const double h = box.max.y - box.min.y;
        margin_x_ = 0.05 * w;
        margin_y_ = 0.05 * h;
        min_ = box.min;
        max_ = box.max;
        scale_ = std::max(w, h);
    }

    double stroke() const { return 0.004 * scale_; }
    double font() const { return 0.03 * scale_; }

    void polygon(const Polygon& p, const std::string& cls, const std::string& stroke_color, double width,
                 const std::string& extra = {}) {
        std::string pts;
        for (std::size_t i = 0; i < p.size(); ++i) {
            if (i) pts += ' ';
            pts += num(p[i].x) + "," + num(p[i].y);
        }
        shapes_ += fmt::format(R"(<polygon class="{}" points="{}" fill="none" stroke="{}" stroke-width="{}"{}/>)",
                               cls, pts, stroke_color, num(width), extra);
        shapes_ += '\n';
    }

    void segment(const Segment2& s, double level, const std::string& color) {
        shapes_ += fmt::format(
            R"(<line class="isosum" x1="{}" y1="{}" x2="{}" y2="{}" data-level="{}" stroke="{}" stroke-width="{}"/>)",
            num(s.a.x), num(s.a.y), num(s.b.x), num(s.b.y), num(level), color, num(stroke()));
        shapes_ += '\n';
        const Point2 mid = 0.5 * (s.a + s.b);
        label(mid, fmt::format("V={}", num(level)), "level", font() * 0.6);
    }

    // Text is placed outside the flipped group so glyphs stay upright.
    void label(Point2 at, const std::string& text, const std::string& cls, double size) {
        labels_ += fmt::format(R"(<text class="{}" x="{}" y="{}" font-size="{}" font-family="sans-serif">{}</text>)",
                               cls, num(at.x), num(min_.y + max_.y - at.y), num(size), text);
        labels_ += '\n';
    }

    void annotation(const std::string& text) {
        const Point2 at{min_.x, max_.y + 0.5 * margin_y_};
        label(at, text, "annotation", font());
    }

    std::string str() const {
        const double vx = min_.x - margin_x_;
        const double vy = min_.y - margin_y_;
        const double vw = max_.x - min_.x + 2.0 * margin_x_;
        const double vh = max_.y - min_.y + 2.0 * margin_y_;
        const double px_w = 800.0;
        const double px_h = px_w * vh / vw;
        std::string out;
        out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
        out += fmt::format(
            R"(<svg xmlns="http://www.w3.org/2000/svg" version="1.1" viewBox="{} {} {} {}" width="{}" height="{}">)",
            num(vx), num(vy), num(vw), num(vh), num(px_w), num(px_h));
        out += '\n';
        // Model coordinates inside the group; y is flipped about the box.
        out += fmt::format(R"svg(<g transform="matrix(1 0 0 -1 0 {})">)svg", num(min_.y + max_.y));
        out += '\n';
        out += shapes_;
        out += "</g>\n";
        out += labels_;
        out += "</svg>\n";
        return out;
    }

private:
    Point2 min_;
    Point2 max_;
    double margin_x_ = 0.0;
    double margin_y_ = 0.0;
    double scale_ = 1.0;
    std::string shapes_;
    std::string labels_;
};

void draw_levels(SvgCanvas& canvas, const Polygon& region, const AffineFunctional2& f, int levels,
                 const std::string& color) {
    for (double level : choose_levels(region, f, levels)) {
        if (const auto seg = isosum_segment(region, f, level)) canvas.segment(*seg, level, color);
    }
}

void require_levels(int levels) {
    if (levels < 1) throw Error(ErrorKind::ValidationError, "level count must be at least 1");
}

}  // namespace

std::vector<double> choose_levels(const Polygon& region, const AffineFunctional2& f, int count) {
    double lo = f(region[0]);
    double hi = lo;
    for (const auto& v : region.vertices()) {
        lo = std::min(lo, f(v));
        hi = std::max(hi, f(v));
    }
    const auto box = bounding_box(region);
    std::vector<double> values;
    for (int i = 0; i < kGrid; ++i) {
        for (int j = 0; j < kGrid; ++j) {
            const Point2 p{box.min.x + (i + 0.5) * (box.max.x - box.min.x) / kGrid,
                           box.min.y + (j + 0.5) * (box.max.y - box.min.y) / kGrid};
            if (contains(region, p) == Location::Inside) values.push_back(f(p));
        }
    }
    std::sort(values.begin(), values.end());
    std::vector<double> levels;
    for (int k = 0; k < count; ++k) {
        double level = 0.0;
        if (values.empty()) {
            level = lo + (hi - lo) * (k + 1.0) / (count + 1.0);
        } else {
            const double q = (k + 0.5) / count;
            level = values[static_cast<std::size_t>(q * static_cast<double>(values.size() - 1))];
        }
        levels.push_back(std::clamp(level, lo, hi));
    }
    return levels;
}

std::string render_svg(const Polygon& convex, const AffineFunctional2& f, int levels) {
    require_levels(levels);
    SvgCanvas canvas(convex);
    canvas.polygon(convex, "outline", "black", canvas.stroke() * 1.5);
    const auto c = classify(f);
    if (c.verdict == Verdict::CVS) {
        canvas.annotation(fmt::format("CVS, V={}", num(c.value)));
    } else {
        draw_levels(canvas, convex, f, levels, kPalette[0]);
    }
    return canvas.str();
}

std::string render_svg(const Polygon& concave, const Partition& partition, int levels) {
    require_levels(levels);
    SvgCanvas canvas(concave);
    for (std::size_t i = 0; i < partition.cells.size(); ++i) {
        const auto& cell = partition.cells[i];
        const std::string color = kPalette[i % kPalette.size()];
        canvas.polygon(cell.shape, "cell", "#888888", canvas.stroke() * 0.5,
                       fmt::format(R"( stroke-dasharray="{} {}" data-cell="{}")", num(canvas.stroke() * 3),
                                   num(canvas.stroke() * 2), i));
        if (classify(cell.functional).verdict == Verdict::CVS) {
            canvas.label(centroid(cell.shape), fmt::format("CVS, V={}", num(cell.functional.constant)), "annotation",
                         canvas.font());
        } else {
            draw_levels(canvas, cell.shape, cell.functional, levels, color);
        }
    }
    canvas.polygon(concave, "outline", "black", canvas.stroke() * 1.5);
    return canvas.str();
}

std::string render_svg(const Scene& scene, int levels) {
    if (scene.kind != SceneKind::Polygon2) {
        throw Error(ErrorKind::ValidationError, "rendering is available for polygon scenes only");
    }
    const Polygon& polygon = *scene.polygon;
    if (is_convex(polygon).verdict == Convexity::Concave) {
        return render_svg(polygon, partition(polygon), levels);
    }
    return render_svg(polygon, functional2(polygon), levels);
}

}  // namespace isosum
