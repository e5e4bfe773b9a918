// The four bands T = <d, e, x, y, h> whose embedding into S characterises
// failure of the quasiidentity lambda.
//
// Every such band consists of the top part {h, x, e, xe, y} and a bottom
// J-class of the form rows x columns. The columns are always
// {d, dx, de, dxe}; the rows are a quotient of {d, xd, yd}:
//
//   T9    d = xd = yd          rows {d}
//   T13a  d = xd != yd         rows {d, yd}
//   T13b  d != xd = yd         rows {d, xd}
//   T17   d, xd, yd distinct   rows {d, xd, yd}
//
// Element order: h, x, e, xe, y, then the bottom class row by row with
// columns in the order d, dx, de, dxe. With this order T9 is literally S9.

#ifndef BANDSMP_FORBIDDEN_HPP_
#define BANDSMP_FORBIDDEN_HPP_

#include <array>    // for array
#include <cstddef>  // for size_t
#include <string>   // for string
#include <vector>   // for vector

#include "band.hpp"

namespace bandsmp {

  enum class ForbiddenCase { T9, T13a, T13b, T17 };

  inline constexpr std::array<ForbiddenCase, 4> all_forbidden_cases
      = {ForbiddenCase::T9,
         ForbiddenCase::T13a,
         ForbiddenCase::T13b,
         ForbiddenCase::T17};

  inline char const* to_string(ForbiddenCase which) noexcept {
    switch (which) {
      case ForbiddenCase::T9: return "T9";
      case ForbiddenCase::T13a: return "T13a";
      case ForbiddenCase::T13b: return "T13b";
      case ForbiddenCase::T17: return "T17";
    }
    return "?";
  }

  //! 0-based positions of the canonical witness in a synthesized band.
  struct ForbiddenLayout {
    static constexpr std::size_t h  = 0;
    static constexpr std::size_t x  = 1;
    static constexpr std::size_t e  = 2;
    static constexpr std::size_t xe = 3;
    static constexpr std::size_t y  = 4;
    static constexpr std::size_t d  = 5;
  };

  namespace detail {
    // Indices into the top part.
    enum Top : std::size_t { H = 0, X = 1, E = 2, XE = 3, Y = 4 };

    // Product of two top elements (h is the identity).
    inline constexpr std::array<std::array<std::size_t, 5>, 5> top_table = {{
        //       h   x   e   xe  y
        /* h */ {H, X, E, XE, Y},
        /* x */ {X, X, XE, XE, Y},
        /* e */ {E, E, E, E, E},
        /* xe */ {XE, XE, XE, XE, XE},
        /* y */ {Y, Y, Y, Y, Y},
    }};

    // Left factor l of a bottom element l*d*r, reduced to a row of
    // {d, xd, yd}: e*d = d and xe*d = x*d.
    enum Row : std::size_t { RowD = 0, RowXD = 1, RowYD = 2 };
    inline constexpr std::array<std::size_t, 5> row_of_top
        = {RowD, RowXD, RowD, RowXD, RowYD};

    // Right factor r of d*r, reduced to a column of {d, dx, de, dxe}:
    // d*y = de.
    enum Col : std::size_t { ColD = 0, ColDX = 1, ColDE = 2, ColDXE = 3 };
    inline constexpr std::array<std::size_t, 5> col_of_top
        = {ColD, ColDX, ColDE, ColDXE, ColDE};
    // The top element representing each column.
    inline constexpr std::array<std::size_t, 4> top_of_col = {H, X, E, XE};
    // The top element representing each row.
    inline constexpr std::array<std::size_t, 3> top_of_row = {H, X, Y};
  }  // namespace detail

  inline Band construct_forbidden_band(ForbiddenCase which) {
    using namespace detail;
    // Which abstract row {d, xd, yd} lands on which concrete row.
    std::array<std::size_t, 3> row_class{};
    std::size_t                rows = 0;
    switch (which) {
      case ForbiddenCase::T9:
        row_class = {0, 0, 0};
        rows      = 1;
        break;
      case ForbiddenCase::T13a:
        row_class = {0, 0, 1};
        rows      = 2;
        break;
      case ForbiddenCase::T13b:
        row_class = {0, 1, 1};
        rows      = 2;
        break;
      case ForbiddenCase::T17:
        row_class = {0, 1, 2};
        rows      = 3;
        break;
    }
    // A concrete row is represented by the first abstract row mapping to it.
    std::vector<std::size_t> row_rep(rows);
    for (std::size_t r = 3; r-- > 0;) {
      row_rep[row_class[r]] = r;
    }

    std::size_t const m = 5 + 4 * rows;
    auto bottom = [](std::size_t row, std::size_t col) {
      return 5 + 4 * row + col;
    };
    std::vector<std::vector<std::size_t>> table(m, std::vector<std::size_t>(m));
    for (std::size_t a = 0; a < m; ++a) {
      for (std::size_t b = 0; b < m; ++b) {
        bool const a_top = a < 5;
        bool const b_top = b < 5;
        if (a_top && b_top) {
          table[a][b] = top_table[a][b];
        } else if (!a_top && !b_top) {
          // Rectangular band: row of the left factor, column of the right.
          table[a][b] = bottom((a - 5) / 4, (b - 5) % 4);
        } else if (a_top) {
          // t * (l d r) = (t l) d r
          std::size_t const row = (b - 5) / 4, col = (b - 5) % 4;
          std::size_t const l   = top_of_row[row_rep[row]];
          table[a][b] = bottom(row_class[row_of_top[top_table[a][l]]], col);
        } else {
          // (l d r) * t = l d (r t)
          std::size_t const row = (a - 5) / 4, col = (a - 5) % 4;
          std::size_t const r   = top_of_col[col];
          table[a][b]           = bottom(row, col_of_top[top_table[r][b]]);
        }
      }
    }
    return Band::from_rows(table, to_string(which));
  }

}  // namespace bandsmp

#endif  // BANDSMP_FORBIDDEN_HPP_
