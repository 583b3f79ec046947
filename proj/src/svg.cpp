#include "cdc/svg.hpp"

#include <algorithm>
#include <cstdio>
#include <set>

#include "cdc/errors.hpp"

namespace cdc {
namespace {

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    std::string s = buf;
    while (s.back() == '0') s.pop_back();
    if (s.back() == '.') s.pop_back();
    return s == "-0" ? "0" : s;
}

std::string escape(std::string_view s) {
    std::string out;
    for (char ch : s) {
        switch (ch) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '"': out += "&quot;"; break;
            default: out += ch;
        }
    }
    return out;
}

// Golden-angle hue walk; stable per drawing position.
std::string colour(std::size_t i) {
    const int hue = static_cast<int>((i * 137) % 360);
    return "hsl(" + std::to_string(hue) + ",60%,55%)";
}

}  // namespace

std::string render_svg(const Configuration& c, const SvgOptions& opts, const Network* network) {
    if (c.empty()) throw PreconditionViolation("nothing to render");
    if (!(opts.scale > 0)) throw PreconditionViolation("scale must be positive");

    std::vector<std::string> order;
    std::set<std::string, std::less<>> seen;
    if (network)
        for (const std::string& v : network->variables())
            if (c.contains(v) && seen.insert(v).second) order.push_back(v);
    for (const auto& [name, region] : c)
        if (seen.insert(name).second) order.push_back(name);

    Rational x0 = c.begin()->second.boxes()[0].x.lo(), x1 = x0;
    Rational y0 = c.begin()->second.boxes()[0].y.lo(), y1 = y0;
    for (const auto& [name, region] : c) {
        const Box b = mbr(region);
        x0 = min(x0, b.x.lo());
        x1 = max(x1, b.x.hi());
        y0 = min(y0, b.y.lo());
        y1 = max(y1, b.y.hi());
    }
    const double s = opts.scale, m = opts.margin;
    const double width = (x1 - x0).to_double() * s + 2 * m;
    const double height = (y1 - y0).to_double() * s + 2 * m;
    auto px = [&](const Rational& x) { return (x - x0).to_double() * s + m; };
    auto py = [&](const Rational& y) { return (y1 - y).to_double() * s + m; };

    std::string out;
    out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + fmt(width) + "\" height=\"" + fmt(height) +
           "\" viewBox=\"0 0 " + fmt(width) + " " + fmt(height) + "\">\n";
    if (network) {
        out += "  <desc>mode " + std::string(to_string(network->mode())) + "\n";
        for (const Constraint& k : network->constraints())
            out += escape(k.from) + " " + k.relation.str() + " " + escape(k.to) + "\n";
        out += "  </desc>\n";
    }
    for (std::size_t i = 0; i < order.size(); ++i) {
        const std::string& name = order[i];
        const Region& region = c.find(name)->second;
        const std::string col = colour(i);
        out += "  <g id=\"var-" + escape(name) + "\" fill=\"" + col + "\" fill-opacity=\"0.35\" stroke=\"" + col +
               "\">\n";
        out += "    <title>" + escape(name) + "</title>\n";
        for (const Box& b : canonical_boxes(region))
            out += "    <rect x=\"" + fmt(px(b.x.lo())) + "\" y=\"" + fmt(py(b.y.hi())) + "\" width=\"" +
                   fmt(b.x.length().to_double() * s) + "\" height=\"" + fmt(b.y.length().to_double() * s) + "\"/>\n";
        const Box box = mbr(region);
        if (opts.mbr_outlines)
            out += "    <rect class=\"mbr\" fill=\"none\" stroke-dasharray=\"4 2\" x=\"" + fmt(px(box.x.lo())) +
                   "\" y=\"" + fmt(py(box.y.hi())) + "\" width=\"" + fmt(box.x.length().to_double() * s) +
                   "\" height=\"" + fmt(box.y.length().to_double() * s) + "\"/>\n";
        out += "    <text x=\"" + fmt(px(box.x.lo()) + 2) + "\" y=\"" + fmt(py(box.y.hi()) + 12) +
               "\" font-size=\"10\" fill=\"black\" stroke=\"none\">" + escape(name) + "</text>\n";
        out += "  </g>\n";
    }
    out += "</svg>\n";
    return out;
}

}  // namespace cdc
