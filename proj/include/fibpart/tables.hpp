#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "fibpart/zeckendorf.hpp"

namespace fibpart {

/// Sparse grid of text cells with labelled rows and columns.
struct TableGrid {
    std::vector<std::string> row_labels;
    std::vector<std::string> col_labels;
    std::map<std::pair<std::size_t, std::size_t>, std::string> cells;

    std::size_t rows() const noexcept { return row_labels.size(); }
    std::size_t cols() const noexcept { return col_labels.size(); }

    /// Cell text, or nullptr when the cell is empty.
    const std::string* find(std::size_t row, std::size_t col) const;
    /// All cells of one row, empty strings for absent cells.
    std::vector<std::string> row(std::size_t row) const;

    /// Header line of column labels, then one line per row, cells padded to
    /// the column width and joined by " | ". Trailing blanks are trimmed.
    std::string to_text() const;
    /// Comma-separated header and rows; absent cells are empty fields.
    std::string to_csv() const;
};

/// Deepest Phi table that render_phi_table will build.
inline constexpr unsigned kMaxTableDepth = 30;
/// Upper bound on the cell count of an odd-number array.
inline constexpr natural kMaxArrayCells = natural{1} << 24;

/// Table of Phi_k (k = 0: the fibbinary table) with one row per Fibonacci
/// subset 1..depth. Every column holds a doubling chain j, 2j, 4j, ... under
/// an odd head j. Columns are ordered by the dyadic fraction j / 2^bitlen(j)
/// over all heads from subsets 1..depth+1, so heads of the next subset leave
/// empty columns between the ones shown.
TableGrid render_phi_table(natural k, unsigned depth);

/// First odd-number array: cell (n, k) = psi(k, n), n = 0..max_row,
/// k = 0..max_k.
TableGrid render_ona1(natural max_row, natural max_k);

/// Second odd-number array: the same cells written "PP:OP" in binary, with
/// PP = "0" for the odfib column.
TableGrid render_ona2(natural max_row, natural max_k);

} // namespace fibpart
