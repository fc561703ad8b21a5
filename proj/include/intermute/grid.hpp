#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include <boost/rational.hpp>

#include "intermute/form_sequence.hpp"

namespace intermute {

using Rational = boost::rational<std::int64_t>;

// y grows downwards: the top side of the outer rectangle has y = 0.
struct Point {
    Rational x, y;
    friend bool operator==(const Point&, const Point&) = default;
    friend bool operator<(const Point& a, const Point& b) { return a.x < b.x || (a.x == b.x && a.y < b.y); }
};

enum class Direction : unsigned char { Down, Up, Right, Left };

class IndexSet {
public:
    void add(Direction d) { bits_ |= mask(d); }
    bool has(Direction d) const { return bits_ & mask(d); }
    bool empty() const { return bits_ == 0; }
    unsigned bits() const { return bits_; }
    friend bool operator==(const IndexSet&, const IndexSet&) = default;

private:
    static unsigned mask(Direction d) { return 1u << static_cast<unsigned>(d); }
    unsigned bits_ = 0;
};

std::string to_string(const IndexSet& s);
// One of the seven index sets a crossing may carry.
bool is_admissible(const IndexSet& s);

enum class Orientation : unsigned char { Horizontal, Vertical };

struct Segment {
    Orientation orientation;
    Point from, to;
    ConnOccurrence tag;
};

struct Cell {
    std::string letter;
    Point top_left, bottom_right;
};

struct Grid {
    Point top_left{0, 0};
    Point bottom_right{1, 1};
    std::vector<Segment> segments;
    std::map<Point, IndexSet> crossings;
    std::vector<Cell> cells;
};

Grid grid(const FormSequence& x);

enum class GridStyle : unsigned char { Ascii, Svg, Text };
std::string render_grid(const Grid& g, GridStyle style);

std::string to_string(const Rational& r);

}  // namespace intermute
