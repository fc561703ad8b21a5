#include "intermute/serialize.hpp"

namespace intermute {

namespace {

Json letters(const LetterSeq& s) { return Json(s); }

Json point(const Point& p) { return Json::array({to_string(p.x), to_string(p.y)}); }

Json type(const Type& t) { return {{"source", to_string(t.source)}, {"target", to_string(t.target)}}; }

Json entry(const Natural& n) {
    if (n <= std::numeric_limits<std::uint64_t>::max()) return n.convert_to<std::uint64_t>();
    return n.str();
}

}  // namespace

Json to_json(const ConnOccurrence& x) {
    return {{"conn", std::string(1, symbol(x.conn))}, {"node", x.node_path}, {"gap", x.gap}, {"name", to_string(x)}};
}

Json to_json(const LegitimacyWitness& w) {
    Json merge = Json::array(), split = Json::array();
    for (const auto& [from, to] : w.merge) merge.push_back({{"from", to_json(from)}, {"to", to_json(to)}});
    for (const auto& [from, to] : w.split) split.push_back({{"from", to_json(from)}, {"to", to_json(to)}});
    return {{"merge", merge}, {"split", split}};
}

Json to_json(const Relation& r) {
    Json pairs = Json::array();
    for (const auto& [i, j] : r.pairs) pairs.push_back({i, j});
    return {{"sourceSize", r.source_size}, {"targetSize", r.target_size}, {"pairs", pairs}};
}

Json to_json(const IntMatrix& m) {
    Json rows = Json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        Json row = Json::array();
        for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(entry(m.at(r, c)));
        rows.push_back(row);
    }
    return {{"rows", m.rows()}, {"cols", m.cols()}, {"entries", rows}};
}

Json to_json(const Verdict& v) {
    Json out{{"tag", std::string(to_string(v.tag))}, {"reason", v.reason}};
    if (v.left_type) out["types"] = {type(*v.left_type), type(*v.right_type)};
    if (v.left_relation) out["relations"] = {to_json(*v.left_relation), to_json(*v.right_relation)};
    return out;
}

Json to_json(const ExistsAnswer& a) {
    Json out{{"tag", std::string(to_string(a.tag))}, {"reason", a.reason}};
    if (a.witness) out["witness"] = to_string(*a.witness);
    if (a.depth_cap) out["depthCap"] = *a.depth_cap;
    return out;
}

Json to_json(const PurityReport& r) {
    Json steps = Json::array();
    for (const auto& s : r.steps)
        steps.push_back({{"source", to_string(s.source)},
                         {"target", to_string(s.target)},
                         {"letterless", s.letterless},
                         {"botPure", {s.source_bot_pure, s.target_bot_pure}},
                         {"topPure", {s.source_top_pure, s.target_top_pure}},
                         {"violation", s.violation}});
    return {{"steps", steps}, {"violations", r.violations}};
}

Json to_json(const TBLR& t) {
    return {{"top", letters(t.top)}, {"bottom", letters(t.bottom)}, {"left", letters(t.left)}, {"right", letters(t.right)}};
}

Json to_json(const Grid& g) {
    Json segments = Json::array(), crossings = Json::array(), cells = Json::array();
    for (const auto& s : g.segments)
        segments.push_back({{"orientation", s.orientation == Orientation::Horizontal ? "horizontal" : "vertical"},
                            {"from", point(s.from)},
                            {"to", point(s.to)},
                            {"tag", to_string(s.tag)}});
    for (const auto& [p, set] : g.crossings) crossings.push_back({{"point", point(p)}, {"indexSet", to_string(set)}});
    for (const auto& c : g.cells)
        cells.push_back({{"letter", c.letter}, {"topLeft", point(c.top_left)}, {"bottomRight", point(c.bottom_right)}});
    return {{"outer", {{"topLeft", point(g.top_left)}, {"bottomRight", point(g.bottom_right)}}},
            {"segments", segments},
            {"crossings", crossings},
            {"cells", cells}};
}

}  // namespace intermute
