#pragma once

#include "bookcross/drawing.hpp"

namespace bookcross {

/// Block structure of the balanced k-page embedding of K_{s+t, st}:
/// s = floor((k+1)/2), t = ceil((k+1)/2), white blocks W_0..W_{t-1} of
/// size s.
struct BalancedParams {
    int k;
    int s;
    int t;

    static BalancedParams for_pages(int k);

    int black_count() const { return s + t; }
    int white_count() const { return s * t; }
};

/// One-page drawing with the m black vertices spread evenly among the n
/// white ones. When m does not divide n the gaps differ by at most one.
BookDrawing riskin_drawing(int m, int n);

/// Balanced k-page embedding of K_{k+1, floor((k+1)^2/4)}. The result is
/// validated (every edge placed once, no crossings, balanced loads); a
/// violation throws std::logic_error.
BookDrawing balanced_embedding(int k);

/// Replaces each white vertex of a balanced embedding of K_{k+1,l} by a
/// cluster of copies so that the result has n white vertices. The q = n mod l
/// lowest-indexed whites get one copy more than the others. Copies sit
/// contiguously (original first, clockwise) and keep the source's pages.
BookDrawing blowup(const BookDrawing& base, int n);

/// Black groups B_0..B_{k-1} and white groups W_0..W_{k-1} placed
/// alternately; page i holds B_j x W_t for j + t = i (mod k). Lower-indexed
/// groups get the smaller size.
BookDrawing block_cyclic(int m, int n, int k);

}  // namespace bookcross
