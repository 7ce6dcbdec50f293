#include "bookcross/drawing_io.hpp"

#include "bookcross/error.hpp"

namespace bookcross {

using nlohmann::json;

json drawing_to_json(const BookDrawing& drawing) {
    json order = json::array();
    for (const auto& v : drawing.layout().sequence()) order.push_back(v.token());
    json edges = json::array();
    for (int i = 0; i < drawing.m(); ++i)
        for (int j = 0; j < drawing.n(); ++j) edges.push_back({i, j, drawing.page({i, j})});
    return json{{"m", drawing.m()}, {"n", drawing.n()}, {"k", drawing.k()}, {"order", std::move(order)},
                {"edges", std::move(edges)}};
}

namespace {

int require_int(const json& doc, const char* key) {
    if (!doc.contains(key)) throw InputError(std::string("drawing is missing field '") + key + "'");
    const auto& v = doc.at(key);
    if (!v.is_number_integer()) throw InputError(std::string("field '") + key + "' must be an integer");
    const auto value = v.get<std::int64_t>();
    if (value < 1 || value > 1'000'000) throw InputError(std::string("field '") + key + "' out of range");
    return static_cast<int>(value);
}

}  // namespace

BookDrawing drawing_from_json(const json& doc) {
    if (!doc.is_object()) throw InputError("drawing must be a JSON object");
    const int m = require_int(doc, "m");
    const int n = require_int(doc, "n");
    const int k = require_int(doc, "k");

    if (!doc.contains("order") || !doc.at("order").is_array()) throw InputError("drawing needs an 'order' array");
    std::vector<Vertex> seq;
    for (const auto& tok : doc.at("order")) {
        if (!tok.is_string()) throw InputError("'order' entries must be strings");
        seq.push_back(Vertex::from_token(tok.get<std::string>()));
    }
    CircularLayout layout(m, n, std::move(seq));

    if (!doc.contains("edges") || !doc.at("edges").is_array()) throw InputError("drawing needs an 'edges' array");
    const auto edge_count = static_cast<std::size_t>(m) * static_cast<std::size_t>(n);
    std::vector<int> pages(edge_count, -1);
    for (const auto& e : doc.at("edges")) {
        if (!e.is_array() || e.size() != 3 || !e[0].is_number_integer() || !e[1].is_number_integer() ||
            !e[2].is_number_integer())
            throw InputError("each edge must be an [i, j, page] integer triple");
        const auto i = e[0].get<std::int64_t>();
        const auto j = e[1].get<std::int64_t>();
        const auto p = e[2].get<std::int64_t>();
        if (i < 0 || i >= m || j < 0 || j >= n)
            throw InputError("edge [" + std::to_string(i) + ", " + std::to_string(j) + "] out of range");
        if (p < 0 || p >= k) throw InputError("edge page " + std::to_string(p) + " out of range");
        auto& slot = pages[static_cast<std::size_t>(i * n + j)];
        if (slot != -1) throw InputError("duplicate edge [" + std::to_string(i) + ", " + std::to_string(j) + "]");
        slot = static_cast<int>(p);
    }
    for (std::size_t idx = 0; idx < edge_count; ++idx)
        if (pages[idx] == -1)
            throw InputError("missing edge [" + std::to_string(idx / static_cast<std::size_t>(n)) + ", " +
                             std::to_string(idx % static_cast<std::size_t>(n)) + "]");
    return BookDrawing(std::move(layout), k, std::move(pages));
}

std::string dump_drawing(const BookDrawing& drawing) { return drawing_to_json(drawing).dump() + "\n"; }

BookDrawing parse_drawing(std::string_view text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw InputError(std::string("malformed JSON: ") + e.what());
    }
    return drawing_from_json(doc);
}

}  // namespace bookcross
