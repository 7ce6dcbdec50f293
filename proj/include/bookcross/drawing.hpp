#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace bookcross {

enum class Color : std::uint8_t { black, white };

/// A vertex of K_{m,n}: Black(i) for i < m, White(j) for j < n.
struct Vertex {
    Color color = Color::black;
    int index = 0;

    static constexpr Vertex black(int i) { return {Color::black, i}; }
    static constexpr Vertex white(int j) { return {Color::white, j}; }

    /// "b<i>" or "w<j>".
    std::string token() const;
    static Vertex from_token(std::string_view token);

    friend bool operator==(const Vertex&, const Vertex&) = default;
};

/// Edge (Black(black), White(white)) of K_{m,n}.
struct Edge {
    int black = 0;
    int white = 0;

    friend bool operator==(const Edge&, const Edge&) = default;
};

/// Cyclic order of the m black and n white vertices on the spine.
/// Position m+n-1 is adjacent to position 0.
class CircularLayout {
public:
    CircularLayout(int m, int n, std::vector<Vertex> sequence);

    /// Layout from a 0/1 string ('1' = black). Indices are handed out
    /// clockwise from position 0 within each color.
    static CircularLayout from_bits(std::string_view bits);

    int m() const { return m_; }
    int n() const { return n_; }
    int size() const { return m_ + n_; }

    std::span<const Vertex> sequence() const { return sequence_; }
    const Vertex& at(int position) const { return sequence_.at(static_cast<std::size_t>(position)); }

    int position(Vertex v) const;
    int black_position(int i) const;
    int white_position(int j) const;

    /// 0/1 string of the color pattern ('1' = black).
    std::string bits() const;

    friend bool operator==(const CircularLayout& a, const CircularLayout& b) {
        return a.m_ == b.m_ && a.n_ == b.n_ && a.sequence_ == b.sequence_;
    }

private:
    int m_;
    int n_;
    std::vector<Vertex> sequence_;
    std::vector<int> black_pos_;
    std::vector<int> white_pos_;
};

/// A k-page drawing of K_{m,n}: a layout plus a page for every edge.
/// Pages are stored row-major, edge (i, j) at index i*n + j.
class BookDrawing {
public:
    BookDrawing(CircularLayout layout, int k, std::vector<int> pages);

    const CircularLayout& layout() const { return layout_; }
    int m() const { return layout_.m(); }
    int n() const { return layout_.n(); }
    int k() const { return k_; }

    int page(Edge e) const;
    std::span<const int> pages() const { return pages_; }
    std::size_t edge_count() const { return pages_.size(); }

    friend bool operator==(const BookDrawing&, const BookDrawing&) = default;

private:
    CircularLayout layout_;
    int k_;
    std::vector<int> pages_;
};

struct CrossingReport {
    std::int64_t total = 0;
    std::vector<std::int64_t> per_page;

    friend bool operator==(const CrossingReport&, const CrossingReport&) = default;
};

/// Two chords cross iff their four endpoints are distinct and interleave
/// around the circle. Edges that share an endpoint never cross.
bool edges_cross(const CircularLayout& layout, Edge e1, Edge e2);

/// Number of interleaving pairs among chords given as position pairs on a
/// circle with ring_size positions.
std::int64_t count_chord_crossings(std::span<const std::pair<int, int>> chords, int ring_size);

CrossingReport count_crossings(const BookDrawing& drawing);

/// Load of White(white) on each page; entries sum to m.
std::vector<int> page_loads(const BookDrawing& drawing, int white);

/// Zero crossings and every white vertex has load 2 on one page and 1 on
/// all others. Requires m == k + 1.
bool is_balanced_embedding(const BookDrawing& drawing);

}  // namespace bookcross
