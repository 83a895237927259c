#include "cores/toolkit/render.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <numeric>
#include <sstream>

#include "cores/toolkit/text.hpp"

namespace cores::render {

namespace {

constexpr double kUnit = 20.0;  // screen length of one coordinate step
constexpr double kMargin = 20.0;

struct Vec {
    double x;
    double y;
};

std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    std::string s = buf;
    if (s == "-0.00") s = "0.00";
    return s;
}

// (a, b) = (p2 - p1, p3 - p2); a+b constant is horizontal and the
// fundamental alcove sits at the apex.
Vec screen(double a, double b, double centre_x) {
    const double h = std::sqrt(3.0) / 2.0;
    return {centre_x + (a - b) * h * kUnit, kMargin + (a + b) * 0.5 * kUnit};
}

std::array<std::array<std::int64_t, 2>, 3> triangle(const SPoint& p) {
    const std::int64_t a = p[2] - p[1];
    const std::int64_t b = p[3] - p[2];
    const std::int64_t i = floor_div(a, 3);
    const std::int64_t j = floor_div(b, 3);
    if (floor_div(a + b, 3) == i + j)
        return {{{3 * i, 3 * j}, {3 * i + 3, 3 * j}, {3 * i, 3 * j + 3}}};
    return {{{3 * i + 3, 3 * j}, {3 * i, 3 * j + 3}, {3 * i + 3, 3 * j + 3}}};
}

}  // namespace

void RenderSpec::validate() const {
    if (s != 3) throw DomainError("rendering is only supported for s = 3");
    if (depth < 1) throw DomainError("depth must be at least 1");
    if (t < 1) throw DomainError("t must be positive");
    if (mode == Mode::tcores && std::gcd(s, t) != 1) throw DomainError("t must be coprime to 3");
}

std::vector<RenderedAlcove> layout(const RenderSpec& spec) {
    spec.validate();
    const SPoint base = origin(3);
    std::vector<RenderedAlcove> out;
    // distance >= max(a, b)/3 - 1, so a, b <= 3 depth + 3 covers everything
    const std::int64_t bound = 3 * spec.depth + 3;
    for (std::int64_t a = 1; a <= bound; ++a) {
        for (std::int64_t b = 1; b <= bound; ++b) {
            if ((3 - 2 * a - b) % 3 != 0 || a % 3 == 0 || b % 3 == 0 || (a + b) % 3 == 0) continue;
            const std::int64_t first = (3 - 2 * a - b) / 3;
            SPoint p({first, first + a, first + a + b});
            const auto distance = static_cast<std::int64_t>(separating_hyperplanes(base, p).size());
            if (distance >= spec.depth) continue;
            Partition lambda = core_from_s_set(p.to_s_set());
            if (spec.mode == Mode::tcores) lambda = core(lambda, spec.t);
            out.push_back({std::move(p), distance, std::move(lambda)});
        }
    }
    std::sort(out.begin(), out.end(), [](const RenderedAlcove& x, const RenderedAlcove& y) {
        if (x.distance != y.distance) return x.distance < y.distance;
        // left to right on screen
        return (2 * x.point[2] - x.point[1] - x.point[3]) < (2 * y.point[2] - y.point[1] - y.point[3]);
    });
    return out;
}

std::string svg(const RenderSpec& spec) {
    const auto alcoves = layout(spec);
    std::int64_t reach = 3;
    for (const auto& al : alcoves)
        for (const auto& v : triangle(al.point)) reach = std::max(reach, v[0] + v[1]);
    const double h = std::sqrt(3.0) / 2.0;
    const double width = 2 * kMargin + 2 * reach * h * kUnit;
    const double height = 2 * kMargin + reach * 0.5 * kUnit;
    const double cx = width / 2;

    std::ostringstream os;
    os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
       << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << num(width) << "\" height=\""
       << num(height) << "\" viewBox=\"0 0 " << num(width) << ' ' << num(height) << "\">\n"
       << "<desc>dominant alcoves of P^3, mode=" << (spec.mode == Mode::cores ? "cores" : "tcores")
       << " t=" << spec.t << " depth=" << spec.depth << "</desc>\n"
       << "<rect x=\"0\" y=\"0\" width=\"" << num(width) << "\" height=\"" << num(height) << "\" fill=\"white\"/>\n";

    for (const auto& al : alcoves) {
        const auto tri = triangle(al.point);
        std::array<Vec, 3> v{};
        for (std::size_t n = 0; n < 3; ++n)
            v[n] = screen(static_cast<double>(tri[n][0]), static_cast<double>(tri[n][1]), cx);
        os << "<g class=\"alcove\" data-point=\"" << text::format(al.point) << "\" data-depth=\"" << al.distance
           << "\" data-partition=\"" << text::format(al.label) << "\">\n"
           << "<polygon points=\"";
        for (std::size_t n = 0; n < 3; ++n) os << (n ? " " : "") << num(v[n].x) << ',' << num(v[n].y);
        os << "\" fill=\"none\" stroke=\"black\" stroke-width=\"1\"/>\n";

        const auto& parts = al.label.parts();
        if (!parts.empty()) {
            const double ccx = (v[0].x + v[1].x + v[2].x) / 3;
            const double ccy = (v[0].y + v[1].y + v[2].y) / 3;
            const auto rows = static_cast<double>(parts.size());
            const auto cols = static_cast<double>(parts.front());
            const double box = 3 * kUnit * 0.4 / std::max(rows, cols);
            const double x0 = ccx - cols * box / 2;
            const double y0 = ccy - rows * box / 2;
            for (std::size_t r = 0; r < parts.size(); ++r)
                for (std::int64_t c = 0; c < parts[r]; ++c)
                    os << "<rect x=\"" << num(x0 + static_cast<double>(c) * box) << "\" y=\""
                       << num(y0 + static_cast<double>(r) * box) << "\" width=\"" << num(box) << "\" height=\""
                       << num(box) << "\" fill=\"none\" stroke=\"black\" stroke-width=\"0.5\"/>\n";
        }
        os << "</g>\n";
    }

    if (spec.mode == Mode::tcores) {
        // wall H_13^t of the t-dilated fundamental alcove, clipped to the drawing
        const double level = static_cast<double>(3 * spec.t);
        if (level <= static_cast<double>(reach)) {
            const Vec l = screen(level, 0, cx);
            const Vec r = screen(0, level, cx);
            os << "<line x1=\"" << num(l.x) << "\" y1=\"" << num(l.y) << "\" x2=\"" << num(r.x) << "\" y2=\""
               << num(r.y) << "\" stroke=\"black\" stroke-width=\"3\"/>\n";
        }
    }
    os << "</svg>\n";
    return os.str();
}

}  // namespace cores::render
