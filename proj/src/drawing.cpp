#include "bookcross/drawing.hpp"

#include <algorithm>
#include <charconv>

#include "bookcross/error.hpp"

namespace bookcross {

std::string Vertex::token() const {
    return (color == Color::black ? "b" : "w") + std::to_string(index);
}

Vertex Vertex::from_token(std::string_view token) {
    if (token.size() < 2 || (token[0] != 'b' && token[0] != 'w'))
        throw InputError("bad vertex token '" + std::string(token) + "'");
    int index = 0;
    auto digits = token.substr(1);
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), index);
    if (ec != std::errc{} || ptr != digits.data() + digits.size() || index < 0)
        throw InputError("bad vertex token '" + std::string(token) + "'");
    return {token[0] == 'b' ? Color::black : Color::white, index};
}

CircularLayout::CircularLayout(int m, int n, std::vector<Vertex> sequence)
    : m_(m), n_(n), sequence_(std::move(sequence)) {
    if (m < 1 || n < 1) throw InputError("layout needs m >= 1 and n >= 1");
    if (sequence_.size() != static_cast<std::size_t>(m) + static_cast<std::size_t>(n))
        throw InputError("layout must list exactly m+n vertices");
    black_pos_.assign(static_cast<std::size_t>(m), -1);
    white_pos_.assign(static_cast<std::size_t>(n), -1);
    for (int p = 0; p < size(); ++p) {
        const Vertex& v = sequence_[static_cast<std::size_t>(p)];
        auto& slots = v.color == Color::black ? black_pos_ : white_pos_;
        if (v.index < 0 || v.index >= static_cast<int>(slots.size()))
            throw InputError("layout vertex " + v.token() + " out of range");
        if (slots[static_cast<std::size_t>(v.index)] != -1)
            throw InputError("layout repeats vertex " + v.token());
        slots[static_cast<std::size_t>(v.index)] = p;
    }
}

CircularLayout CircularLayout::from_bits(std::string_view bits) {
    std::vector<Vertex> seq;
    seq.reserve(bits.size());
    int blacks = 0;
    int whites = 0;
    for (char c : bits) {
        if (c == '1')
            seq.push_back(Vertex::black(blacks++));
        else if (c == '0')
            seq.push_back(Vertex::white(whites++));
        else
            throw InputError("layout string must contain only '0' and '1'");
    }
    return CircularLayout(blacks, whites, std::move(seq));
}

int CircularLayout::black_position(int i) const {
    if (i < 0 || i >= m_) throw InputError("black index " + std::to_string(i) + " out of range");
    return black_pos_[static_cast<std::size_t>(i)];
}

int CircularLayout::white_position(int j) const {
    if (j < 0 || j >= n_) throw InputError("white index " + std::to_string(j) + " out of range");
    return white_pos_[static_cast<std::size_t>(j)];
}

int CircularLayout::position(Vertex v) const {
    return v.color == Color::black ? black_position(v.index) : white_position(v.index);
}

std::string CircularLayout::bits() const {
    std::string s;
    s.reserve(sequence_.size());
    for (const auto& v : sequence_) s.push_back(v.color == Color::black ? '1' : '0');
    return s;
}

BookDrawing::BookDrawing(CircularLayout layout, int k, std::vector<int> pages)
    : layout_(std::move(layout)), k_(k), pages_(std::move(pages)) {
    if (k_ < 1) throw InputError("page count k must be >= 1");
    const auto expected = static_cast<std::size_t>(layout_.m()) * static_cast<std::size_t>(layout_.n());
    if (pages_.size() != expected) throw InputError("page assignment must cover all m*n edges");
    for (int p : pages_)
        if (p < 0 || p >= k_) throw InputError("page index " + std::to_string(p) + " out of range");
}

int BookDrawing::page(Edge e) const {
    if (e.black < 0 || e.black >= m() || e.white < 0 || e.white >= n())
        throw InputError("edge (b" + std::to_string(e.black) + ", w" + std::to_string(e.white) + ") out of range");
    return pages_[static_cast<std::size_t>(e.black) * static_cast<std::size_t>(n()) + static_cast<std::size_t>(e.white)];
}

bool edges_cross(const CircularLayout& layout, Edge e1, Edge e2) {
    int a = layout.black_position(e1.black);
    int b = layout.white_position(e1.white);
    int c = layout.black_position(e2.black);
    int d = layout.white_position(e2.white);
    if (e1.black == e2.black || e1.white == e2.white) return false;
    if (a > b) std::swap(a, b);
    const bool c_inside = a < c && c < b;
    const bool d_inside = a < d && d < b;
    return c_inside != d_inside;
}

namespace {

class FenwickTree {
public:
    explicit FenwickTree(int size) : tree_(static_cast<std::size_t>(size) + 1, 0) {}

    void add(int index) {
        for (auto i = static_cast<std::size_t>(index) + 1; i < tree_.size(); i += i & (~i + 1)) ++tree_[i];
    }

    // number of inserted indices < index
    std::int64_t prefix(int index) const {
        std::int64_t sum = 0;
        for (auto i = static_cast<std::size_t>(index); i > 0; i -= i & (~i + 1)) sum += tree_[i];
        return sum;
    }

private:
    std::vector<std::int64_t> tree_;
};

}  // namespace

std::int64_t count_chord_crossings(std::span<const std::pair<int, int>> chords, int ring_size) {
    std::vector<std::pair<int, int>> sorted;
    sorted.reserve(chords.size());
    for (auto [a, b] : chords) {
        if (a < 0 || b < 0 || a >= ring_size || b >= ring_size) throw InputError("chord endpoint out of range");
        sorted.emplace_back(std::min(a, b), std::max(a, b));
    }
    std::sort(sorted.begin(), sorted.end());

    // A pair (a,b), (c,d) with a < c crosses iff c < b < d. Chords are
    // queried before any chord with the same left endpoint is inserted, so
    // shared endpoints never count.
    FenwickTree right_ends(ring_size);
    std::int64_t total = 0;
    std::size_t i = 0;
    while (i < sorted.size()) {
        std::size_t j = i;
        while (j < sorted.size() && sorted[j].first == sorted[i].first) ++j;
        for (std::size_t t = i; t < j; ++t) {
            const auto [c, d] = sorted[t];
            total = checked::add(total, right_ends.prefix(d) - right_ends.prefix(c + 1));
        }
        for (std::size_t t = i; t < j; ++t) right_ends.add(sorted[t].second);
        i = j;
    }
    return total;
}

CrossingReport count_crossings(const BookDrawing& drawing) {
    const auto& layout = drawing.layout();
    std::vector<std::vector<std::pair<int, int>>> by_page(static_cast<std::size_t>(drawing.k()));
    for (int i = 0; i < drawing.m(); ++i) {
        const int bp = layout.black_position(i);
        for (int j = 0; j < drawing.n(); ++j)
            by_page[static_cast<std::size_t>(drawing.page({i, j}))].emplace_back(bp, layout.white_position(j));
    }
    CrossingReport report;
    report.per_page.reserve(by_page.size());
    for (const auto& chords : by_page) {
        report.per_page.push_back(count_chord_crossings(chords, layout.size()));
        report.total = checked::add(report.total, report.per_page.back());
    }
    return report;
}

std::vector<int> page_loads(const BookDrawing& drawing, int white) {
    if (white < 0 || white >= drawing.n()) throw InputError("white index " + std::to_string(white) + " out of range");
    std::vector<int> loads(static_cast<std::size_t>(drawing.k()), 0);
    for (int i = 0; i < drawing.m(); ++i) ++loads[static_cast<std::size_t>(drawing.page({i, white}))];
    return loads;
}

bool is_balanced_embedding(const BookDrawing& drawing) {
    if (drawing.m() != drawing.k() + 1)
        throw InputError("balanced embeddings are defined for K_{k+1,s}; got m=" + std::to_string(drawing.m()) +
                         ", k=" + std::to_string(drawing.k()));
    for (int j = 0; j < drawing.n(); ++j) {
        const auto loads = page_loads(drawing, j);
        if (std::count(loads.begin(), loads.end(), 1) != drawing.k() - 1) return false;
        if (std::count(loads.begin(), loads.end(), 2) != 1) return false;
    }
    return count_crossings(drawing).total == 0;
}

}  // namespace bookcross
