#pragma once

#include <cmath>
#include <cstdio>

#include "okounkov/io/json.hpp"
#include "okounkov/series/base_locus.hpp"

namespace okounkov::cli {

using io::Json;

struct Check
{
    std::string name;
    bool hard = true;
    bool pass = false;
    std::string detail;
};

/// Verdicts plus data for one run. Soft checks are informational and never
/// change the exit status.
struct RunReport
{
    std::string command;
    std::string instance;
    Json options = Json::object();
    std::vector<Check> checks;
    std::vector<std::string> artifacts;
    Json data = Json::object();

    void check(std::string name, bool pass, std::string detail = {})
    {
        checks.push_back({std::move(name), true, pass, std::move(detail)});
    }

    void note(std::string name, bool pass, std::string detail = {})
    {
        checks.push_back({std::move(name), false, pass, std::move(detail)});
    }

    bool ok() const
    {
        return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return !c.hard || c.pass; });
    }

    Json to_json() const
    {
        Json cs = Json::array();
        for (const auto& c : checks)
            cs.push_back(Json{{"name", c.name}, {"hard", c.hard}, {"pass", c.pass}, {"detail", c.detail}});
        return Json{{"command", command}, {"instance", instance}, {"options", options}, {"ok", ok()},
                    {"checks", cs},       {"artifacts", artifacts}, {"data", data}};
    }
};

// ---------------------------------------------------------------- CSV

class Csv
{
public:
    explicit Csv(std::vector<std::string> header) : width_(header.size()) { line(header); }

    void row(const std::vector<std::string>& cells)
    {
        if (cells.size() != width_)
            throw std::logic_error("csv: row width mismatch");
        line(cells);
    }

    const std::string& str() const { return text_; }

private:
    void line(const std::vector<std::string>& cells)
    {
        for (std::size_t i = 0; i < cells.size(); ++i)
        {
            if (i)
                text_ += ',';
            text_ += cells[i];
        }
        text_ += '\n';
    }

    std::size_t width_;
    std::string text_;
};

inline std::string cell(const Rational& r) { return io::fraction_string(r); }
inline std::string cell_decimal(const Rational& r) { return io::decimal_string(r); }

// ---------------------------------------------------------------- flats

/// Flats as 1-based coordinate lists; [] is the empty locus and [[]] all of U.
inline Json flats_json(const series::CoordinateFlatSet& s)
{
    Json out = Json::array();
    for (const auto& f : s.flats())
    {
        Json one = Json::array();
        for (auto i : f)
            one.push_back(i + 1);
        out.push_back(one);
    }
    return out;
}

inline std::string flats_text(const series::CoordinateFlatSet& s)
{
    if (s.is_empty())
        return "empty";
    if (s.is_whole())
        return "U";
    std::string out;
    for (const auto& f : s.flats())
    {
        if (!out.empty())
            out += " u ";
        out += "V(";
        bool first = true;
        for (auto i : f)
        {
            out += (first ? "x" : ",x") + std::to_string(i + 1);
            first = false;
        }
        out += ")";
    }
    return out;
}

// ---------------------------------------------------------------- SVG

struct PlotLayer
{
    std::string label;
    geom::RatPolytope body;
};

namespace detail {

inline std::string fmt(double x)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3f", x);
    return buf;
}

inline std::vector<std::pair<double, double>> ordered_polygon(const geom::RatPolytope& p)
{
    std::vector<std::pair<double, double>> pts;
    for (const auto& v : p.vertices())
        pts.emplace_back(v[0].get_d(), v[1].get_d());
    double cx = 0, cy = 0;
    for (auto [x, y] : pts)
        cx += x, cy += y;
    cx /= static_cast<double>(pts.size());
    cy /= static_cast<double>(pts.size());
    std::sort(pts.begin(), pts.end(), [&](auto a, auto b) {
        return std::atan2(a.second - cy, a.first - cx) < std::atan2(b.second - cy, b.first - cx);
    });
    return pts;
}

} // namespace detail

/// Nested bodies in dimension 1 or 2; later layers drawn on top.
inline std::string render_svg(const std::vector<PlotLayer>& layers)
{
    const int size = 400, margin = 30;
    double lo_x = 0, hi_x = 1, lo_y = 0, hi_y = 1;
    bool first = true;
    std::size_t dim = 0;
    for (const auto& l : layers)
    {
        dim = l.body.ambient_dim();
        for (const auto& v : l.body.vertices())
        {
            const double x = v[0].get_d(), y = dim > 1 ? v[1].get_d() : 0.0;
            if (first)
                lo_x = hi_x = x, lo_y = hi_y = y, first = false;
            lo_x = std::min(lo_x, x), hi_x = std::max(hi_x, x);
            lo_y = std::min(lo_y, y), hi_y = std::max(hi_y, y);
        }
    }
    if (dim == 0 || dim > 2)
        throw std::logic_error("svg: only dimensions 1 and 2 are rendered");
    const double span = std::max({hi_x - lo_x, hi_y - lo_y, 1e-9});
    const double unit = (size - 2.0 * margin) / span;
    auto px = [&](double x) { return detail::fmt(margin + (x - lo_x) * unit); };
    auto py = [&](double y) { return detail::fmt(size - margin - (y - lo_y) * unit); };

    std::string out = "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + std::to_string(size) + "\" height=\"" +
                      std::to_string(size) + "\" viewBox=\"0 0 " + std::to_string(size) + " " +
                      std::to_string(size) + "\">\n";
    out += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    const std::size_t n = layers.size();
    for (std::size_t i = 0; i < n; ++i)
    {
        const auto& l = layers[i];
        if (l.body.is_empty())
            continue;
        const int shade = n > 1 ? static_cast<int>(200 - 200 * i / (n - 1)) : 0;
        const std::string colour = "rgb(" + std::to_string(shade) + "," + std::to_string(shade) + ",255)";
        if (dim == 1)
        {
            double a = l.body.vertices().front()[0].get_d(), b = l.body.vertices().back()[0].get_d();
            const double y = static_cast<double>(i) * span / std::max<std::size_t>(n, 1);
            out += "<line x1=\"" + px(a) + "\" y1=\"" + py(y) + "\" x2=\"" + px(b) + "\" y2=\"" + py(y) +
                   "\" stroke=\"" + colour + "\" stroke-width=\"3\"><title>" + l.label + "</title></line>\n";
            continue;
        }
        std::string pts;
        for (auto [x, y] : detail::ordered_polygon(l.body))
            pts += px(x) + "," + py(y) + " ";
        if (!pts.empty())
            pts.pop_back();
        out += "<polygon points=\"" + pts + "\" fill=\"" + colour + "\" fill-opacity=\"0.25\" stroke=\"" + colour +
               "\"><title>" + l.label + "</title></polygon>\n";
    }
    out += "</svg>\n";
    return out;
}

} // namespace okounkov::cli
