#include "bookcross/constructions.hpp"

#include <stdexcept>
#include <string>

#include "bookcross/error.hpp"

namespace bookcross {

namespace {

int mod(int a, int b) {
    const int r = a % b;
    return r < 0 ? r + b : r;
}

// Sizes of `groups` consecutive groups covering `total` items, smaller
// groups first.
std::vector<int> group_sizes(int total, int groups) {
    const int base = total / groups;
    const int larger = total % groups;
    std::vector<int> sizes(static_cast<std::size_t>(groups), base);
    for (int g = groups - larger; g < groups; ++g) ++sizes[static_cast<std::size_t>(g)];
    return sizes;
}

}  // namespace

BalancedParams BalancedParams::for_pages(int k) {
    if (k < 1) throw InputError("page count k must be >= 1");
    return {k, (k + 1) / 2, (k + 2) / 2};
}

BookDrawing riskin_drawing(int m, int n) {
    if (m < 1 || n < 1) throw InputError("riskin_drawing needs m >= 1 and n >= 1");
    // gap g (after black g) gets n/m whites, the first n%m gaps one more
    std::vector<Vertex> seq;
    seq.reserve(static_cast<std::size_t>(m + n));
    int white = 0;
    for (int g = 0; g < m; ++g) {
        seq.push_back(Vertex::black(g));
        const int gap = n / m + (g < n % m ? 1 : 0);
        for (int x = 0; x < gap; ++x) seq.push_back(Vertex::white(white++));
    }
    return BookDrawing(CircularLayout(m, n, std::move(seq)), 1,
                       std::vector<int>(static_cast<std::size_t>(m) * static_cast<std::size_t>(n), 0));
}

// Vertex arrangement: b_0, ..., b_{s+t-1} clockwise, with white block W_i
// (w_{is} .. w_{is+s-1}) between b_{s+i} and b_{s+i+1}; W_{t-1} closes the
// circle before b_0.
//
// Edge placement, with page numbers mod s+t-1, block indices mod t, black
// indices mod s+t and white indices mod st. W[a:b] is the run
// w_a, w_{a+1}, ..., w_b with a <= b taken before reduction, so a window
// may wrap past w_{st-1}.
//
//   page r, 0 <= r < s:
//     I    b_{s+i} -- W_{t+r-i}                       i = r+1 .. t
//     II   b_i     -- W[rs-i(s-1) : rs-(i-1)(s-1)]    i = 1 .. r
//     III  b_{r+1} -- W[0 : r]
//   page r, s <= r <= s+t-2:
//     IV   b_{s+i} -- W_{r-s-i+1}                     i = 0 .. r-s+1
//     V    b_{s-i} -- W[a : a+s-1], a = (i+r-s+1)s-i  i = 1 .. s-r+t-2
//     VI   b_{r-t+1} -- W[st-t+r-s+1 : st-1]
//
// Windows of adjacent Type II/V edges share one endpoint white vertex; the
// shared vertex is served by two different black vertices, so nothing is
// placed twice. This is checked below for every construction.
BookDrawing balanced_embedding(int k) {
    const auto params = BalancedParams::for_pages(k);
    const int s = params.s;
    const int t = params.t;
    const int blacks = params.black_count();
    const int whites = params.white_count();
    const int page_count = s + t - 1;

    std::vector<Vertex> seq;
    seq.reserve(static_cast<std::size_t>(blacks + whites));
    for (int b = 0; b < blacks; ++b) {
        seq.push_back(Vertex::black(b));
        const int block = b - s;
        if (block >= 0 && block < t)
            for (int x = 0; x < s; ++x) seq.push_back(Vertex::white(block * s + x));
    }

    std::vector<int> pages(static_cast<std::size_t>(blacks) * static_cast<std::size_t>(whites), -1);
    auto place = [&](int black, int white, int page) {
        black = mod(black, blacks);
        white = mod(white, whites);
        page = mod(page, page_count);
        auto& slot = pages[static_cast<std::size_t>(black) * static_cast<std::size_t>(whites) +
                           static_cast<std::size_t>(white)];
        if (slot != -1)
            throw std::logic_error("balanced_embedding(" + std::to_string(k) + "): edge (b" + std::to_string(black) +
                                   ", w" + std::to_string(white) + ") placed twice");
        slot = page;
    };
    auto place_block = [&](int black, int block, int page) {
        const int first = mod(block, t) * s;
        for (int x = 0; x < s; ++x) place(black, first + x, page);
    };
    auto place_window = [&](int black, int from, int to, int page) {
        for (int w = from; w <= to; ++w) place(black, w, page);
    };

    for (int r = 0; r < s; ++r) {
        for (int i = r + 1; i <= t; ++i) place_block(s + i, t + r - i, r);
        for (int i = 1; i <= r; ++i) place_window(i, r * s - i * (s - 1), r * s - (i - 1) * (s - 1), r);
        place_window(r + 1, 0, r, r);
    }
    for (int r = s; r <= s + t - 2; ++r) {
        for (int i = 0; i <= r - s + 1; ++i) place_block(s + i, r - s - i + 1, r);
        for (int i = 1; i < s - r + t - 1; ++i) {
            const int from = (i + r - s + 1) * s - i;
            place_window(s - i, from, from + s - 1, r);
        }
        place_window(r - t + 1, s * t - t + r - s + 1, s * t - 1, r);
    }

    for (std::size_t idx = 0; idx < pages.size(); ++idx)
        if (pages[idx] == -1)
            throw std::logic_error("balanced_embedding(" + std::to_string(k) + "): edge (b" +
                                   std::to_string(idx / static_cast<std::size_t>(whites)) + ", w" +
                                   std::to_string(idx % static_cast<std::size_t>(whites)) + ") never placed");

    BookDrawing drawing(CircularLayout(blacks, whites, std::move(seq)), page_count, std::move(pages));
    if (!is_balanced_embedding(drawing))
        throw std::logic_error("balanced_embedding(" + std::to_string(k) + ") is not a balanced embedding");
    return drawing;
}

BookDrawing blowup(const BookDrawing& base, int n) {
    if (base.m() != base.k() + 1 || !is_balanced_embedding(base))
        throw InputError("blowup needs a balanced embedding as its base");
    const int ell = base.n();
    if (n < ell) throw InputError("blowup target n=" + std::to_string(n) + " is below the base size " + std::to_string(ell));

    const int q = n % ell;
    const int cluster = (n - q) / ell;
    std::vector<int> first_copy(static_cast<std::size_t>(ell) + 1, 0);
    for (int j = 0; j < ell; ++j)
        first_copy[static_cast<std::size_t>(j) + 1] = first_copy[static_cast<std::size_t>(j)] + cluster + (j < q ? 1 : 0);

    std::vector<Vertex> seq;
    seq.reserve(static_cast<std::size_t>(base.m() + n));
    for (const auto& v : base.layout().sequence()) {
        if (v.color == Color::black) {
            seq.push_back(v);
            continue;
        }
        const auto j = static_cast<std::size_t>(v.index);
        for (int w = first_copy[j]; w < first_copy[j + 1]; ++w) seq.push_back(Vertex::white(w));
    }

    std::vector<int> pages(static_cast<std::size_t>(base.m()) * static_cast<std::size_t>(n));
    for (int i = 0; i < base.m(); ++i)
        for (int j = 0; j < ell; ++j) {
            const int p = base.page({i, j});
            for (int w = first_copy[static_cast<std::size_t>(j)]; w < first_copy[static_cast<std::size_t>(j) + 1]; ++w)
                pages[static_cast<std::size_t>(i) * static_cast<std::size_t>(n) + static_cast<std::size_t>(w)] = p;
        }
    return BookDrawing(CircularLayout(base.m(), n, std::move(seq)), base.k(), std::move(pages));
}

BookDrawing block_cyclic(int m, int n, int k) {
    if (m < 1 || n < 1) throw InputError("block_cyclic needs m >= 1 and n >= 1");
    if (k < 1) throw InputError("page count k must be >= 1");
    const auto black_sizes = group_sizes(m, k);
    const auto white_sizes = group_sizes(n, k);

    std::vector<Vertex> seq;
    seq.reserve(static_cast<std::size_t>(m + n));
    std::vector<int> black_group(static_cast<std::size_t>(m));
    std::vector<int> white_group(static_cast<std::size_t>(n));
    int next_black = 0;
    int next_white = 0;
    for (int g = 0; g < k; ++g) {
        for (int x = 0; x < black_sizes[static_cast<std::size_t>(g)]; ++x) {
            black_group[static_cast<std::size_t>(next_black)] = g;
            seq.push_back(Vertex::black(next_black++));
        }
        for (int x = 0; x < white_sizes[static_cast<std::size_t>(g)]; ++x) {
            white_group[static_cast<std::size_t>(next_white)] = g;
            seq.push_back(Vertex::white(next_white++));
        }
    }

    std::vector<int> pages(static_cast<std::size_t>(m) * static_cast<std::size_t>(n));
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < n; ++j)
            pages[static_cast<std::size_t>(i) * static_cast<std::size_t>(n) + static_cast<std::size_t>(j)] =
                (black_group[static_cast<std::size_t>(i)] + white_group[static_cast<std::size_t>(j)]) % k;
    return BookDrawing(CircularLayout(m, n, std::move(seq)), k, std::move(pages));
}

}  // namespace bookcross
