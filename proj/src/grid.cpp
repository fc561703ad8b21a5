#include "intermute/grid.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "intermute/error.hpp"

namespace intermute {

std::string to_string(const Rational& r) {
    if (r.denominator() == 1) return std::to_string(r.numerator());
    return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

std::string to_string(const IndexSet& s) {
    std::string out = "{";
    const char* names[] = {"down", "up", "right", "left"};
    bool first = true;
    for (unsigned d = 0; d < 4; ++d) {
        if (!s.has(static_cast<Direction>(d))) continue;
        if (!first) out += ',';
        out += names[d];
        first = false;
    }
    return out + "}";
}

bool is_admissible(const IndexSet& s) {
    const bool vertical = s.has(Direction::Down) || s.has(Direction::Up);
    const bool horizontal = s.has(Direction::Right) || s.has(Direction::Left);
    return !(vertical && horizontal);
}

namespace {

void build(const FormSequence& x, Point tl, Point br, std::vector<std::size_t>& path, Grid& g) {
    if (x.is_leaf()) {
        g.cells.push_back({x.letter(), tl, br});
        return;
    }
    const auto& kids = x.children();
    const auto k = static_cast<std::int64_t>(kids.size());
    for (std::int64_t i = 0; i < k; ++i) {
        Point a = tl, b = br;
        if (x.conn() == Conn::And) {
            a.x = tl.x + (br.x - tl.x) * Rational(i, k);
            b.x = tl.x + (br.x - tl.x) * Rational(i + 1, k);
        } else {
            a.y = tl.y + (br.y - tl.y) * Rational(i, k);
            b.y = tl.y + (br.y - tl.y) * Rational(i + 1, k);
        }
        path.push_back(static_cast<std::size_t>(i));
        build(kids[static_cast<std::size_t>(i)], a, b, path, g);
        path.pop_back();
        if (i + 1 == k) continue;
        ConnOccurrence tag{x.conn(), path, static_cast<std::size_t>(i)};
        if (x.conn() == Conn::And) {
            Point top{b.x, tl.y}, bottom{b.x, br.y};
            g.segments.push_back({Orientation::Vertical, top, bottom, tag});
            g.crossings[top].add(Direction::Down);
            g.crossings[bottom].add(Direction::Up);
        } else {
            Point left{tl.x, b.y}, right{br.x, b.y};
            g.segments.push_back({Orientation::Horizontal, left, right, tag});
            g.crossings[left].add(Direction::Right);
            g.crossings[right].add(Direction::Left);
        }
    }
}

std::string render_text(const Grid& g) {
    std::ostringstream out;
    out << "grid\n";
    out << "outer " << to_string(g.top_left.x) << ' ' << to_string(g.top_left.y) << ' ' << to_string(g.bottom_right.x)
        << ' ' << to_string(g.bottom_right.y) << '\n';
    for (const auto& s : g.segments)
        out << "segment " << (s.orientation == Orientation::Vertical ? "vertical" : "horizontal") << ' '
            << to_string(s.from.x) << ' ' << to_string(s.from.y) << ' ' << to_string(s.to.x) << ' '
            << to_string(s.to.y) << ' ' << to_string(s.tag) << '\n';
    for (const auto& [p, idx] : g.crossings)
        out << "crossing " << to_string(p.x) << ' ' << to_string(p.y) << ' ' << to_string(idx) << '\n';
    for (const auto& c : g.cells)
        out << "cell " << c.letter << ' ' << to_string(c.top_left.x) << ' ' << to_string(c.top_left.y) << ' '
            << to_string(c.bottom_right.x) << ' ' << to_string(c.bottom_right.y) << '\n';
    return out.str();
}

// Assigns character positions to coordinates so that every cell fits its letter.
std::map<Rational, int> layout(const Grid& g, bool horizontal) {
    std::set<Rational> coords;
    for (const auto& c : g.cells) {
        coords.insert(horizontal ? c.top_left.x : c.top_left.y);
        coords.insert(horizontal ? c.bottom_right.x : c.bottom_right.y);
    }
    std::map<Rational, int> pos;
    for (const auto& v : coords) {
        int at = 0;
        if (!pos.empty()) at = pos.rbegin()->second + 2;
        for (const auto& c : g.cells) {
            const Rational lo = horizontal ? c.top_left.x : c.top_left.y;
            const Rational hi = horizontal ? c.bottom_right.x : c.bottom_right.y;
            if (hi != v) continue;
            const int need = horizontal ? static_cast<int>(c.letter.size()) + 3 : 2;
            at = std::max(at, pos.at(lo) + need);
        }
        pos[v] = at;
    }
    return pos;
}

std::string render_ascii(const Grid& g) {
    const auto cols = layout(g, true);
    const auto rows = layout(g, false);
    const int width = cols.rbegin()->second + 1;
    const int height = rows.rbegin()->second + 1;
    std::vector<std::vector<std::string>> canvas(static_cast<std::size_t>(height),
                                                 std::vector<std::string>(static_cast<std::size_t>(width), " "));
    auto put = [&](int r, int c, const std::string& s) { canvas[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = s; };

    auto hline = [&](int r, int c0, int c1) {
        for (int c = c0; c <= c1; ++c) put(r, c, "─");
    };
    auto vline = [&](int c, int r0, int r1) {
        for (int r = r0; r <= r1; ++r) put(r, c, "│");
    };
    const int x0 = cols.at(g.top_left.x), x1 = cols.at(g.bottom_right.x);
    const int y0 = rows.at(g.top_left.y), y1 = rows.at(g.bottom_right.y);
    hline(y0, x0, x1);
    hline(y1, x0, x1);
    vline(x0, y0, y1);
    vline(x1, y0, y1);
    for (const auto& s : g.segments) {
        if (s.orientation == Orientation::Horizontal)
            hline(rows.at(s.from.y), cols.at(s.from.x), cols.at(s.to.x));
        else
            vline(cols.at(s.from.x), rows.at(s.from.y), rows.at(s.to.y));
    }
    put(y0, x0, "┌");
    put(y0, x1, "┐");
    put(y1, x0, "└");
    put(y1, x1, "┘");
    for (const auto& [p, idx] : g.crossings) {
        std::string ch;
        const bool down = idx.has(Direction::Down), up = idx.has(Direction::Up);
        const bool right = idx.has(Direction::Right), left = idx.has(Direction::Left);
        if (down && up)
            ch = "─";
        else if (right && left)
            ch = "│";
        else if (down)
            ch = "┬";
        else if (up)
            ch = "┴";
        else if (right)
            ch = "├";
        else if (left)
            ch = "┤";
        if (!ch.empty()) put(rows.at(p.y), cols.at(p.x), ch);
    }
    for (const auto& c : g.cells) {
        const int l = cols.at(c.top_left.x), r = cols.at(c.bottom_right.x);
        const int t = rows.at(c.top_left.y), b = rows.at(c.bottom_right.y);
        const int row = (t + b) / 2;
        const int start = l + 1 + (r - l - 1 - static_cast<int>(c.letter.size())) / 2;
        for (std::size_t i = 0; i < c.letter.size(); ++i) put(row, start + static_cast<int>(i), std::string(1, c.letter[i]));
    }
    std::string out;
    for (const auto& line : canvas) {
        std::string s;
        for (const auto& ch : line) s += ch;
        while (!s.empty() && s.back() == ' ') s.pop_back();
        out += s + '\n';
    }
    return out;
}

std::string render_svg(const Grid& g) {
    constexpr double scale = 400.0;
    constexpr double margin = 10.0;
    constexpr double gap = 4.0;
    auto coord = [&](const Rational& r) { return margin + scale * boost::rational_cast<double>(r); };
    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << scale + 2 * margin << "\" height=\""
        << scale + 2 * margin << "\">\n";
    out << "  <rect x=\"" << margin << "\" y=\"" << margin << "\" width=\"" << scale << "\" height=\"" << scale
        << "\" fill=\"none\" stroke=\"black\"/>\n";
    auto joined = [&](const Point& p, Orientation o) {
        auto it = g.crossings.find(p);
        if (it == g.crossings.end()) return true;
        const IndexSet& s = it->second;
        if (o == Orientation::Vertical) return !(s.has(Direction::Down) && s.has(Direction::Up));
        return !(s.has(Direction::Right) && s.has(Direction::Left));
    };
    for (const auto& s : g.segments) {
        double ax = coord(s.from.x), ay = coord(s.from.y), bx = coord(s.to.x), by = coord(s.to.y);
        const bool vertical = s.orientation == Orientation::Vertical;
        if (!joined(s.from, s.orientation)) (vertical ? ay : ax) += gap;
        if (!joined(s.to, s.orientation)) (vertical ? by : bx) -= gap;
        out << "  <line x1=\"" << ax << "\" y1=\"" << ay << "\" x2=\"" << bx << "\" y2=\"" << by
            << "\" stroke=\"black\"/>\n";
    }
    out << "</svg>\n";
    return out.str();
}

}  // namespace

Grid grid(const FormSequence& x) {
    Grid g;
    std::vector<std::size_t> path;
    build(x, g.top_left, g.bottom_right, path, g);
    for (const auto& [p, idx] : g.crossings)
        if (!is_admissible(idx)) throw Error("grid crossing with index set " + to_string(idx));
    return g;
}

std::string render_grid(const Grid& g, GridStyle style) {
    switch (style) {
        case GridStyle::Ascii: return render_ascii(g);
        case GridStyle::Svg: return render_svg(g);
        case GridStyle::Text: return render_text(g);
    }
    return {};
}

}  // namespace intermute
