#include "fibpart/tables.hpp"

#include <algorithm>
#include <bit>
#include <sstream>
#include <unordered_map>

#include "fibpart/complement.hpp"
#include "fibpart/errors.hpp"
#include "fibpart/fibbinary.hpp"

namespace fibpart {

namespace {

std::string to_binary(natural m) {
    if (m == 0) return "0";
    std::string s;
    for (unsigned i = bit_length(m); i-- > 0;) s.push_back((m >> i) & 1 ? '1' : '0');
    return s;
}

// Left-aligned mantissa; orders odd numbers by j / 2^bitlen(j).
natural dyadic_key(natural odd) { return odd << (64 - bit_length(odd)); }

std::vector<std::string> index_labels(std::size_t first, std::size_t count) {
    std::vector<std::string> labels;
    labels.reserve(count);
    for (std::size_t i = 0; i < count; ++i) labels.push_back(std::to_string(first + i));
    return labels;
}

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string quoted = "\"";
    for (char c : s) {
        if (c == '"') quoted.push_back('"');
        quoted.push_back(c);
    }
    quoted.push_back('"');
    return quoted;
}

void check_array_size(natural max_row, natural max_k) {
    if (max_row >= kMaxArrayCells || max_k >= kMaxArrayCells ||
        (max_row + 1) * (max_k + 1) > kMaxArrayCells) {
        throw invalid_domain("odd-number array: " + std::to_string(max_row + 1) + "x" +
                             std::to_string(max_k + 1) + " cells is too large to render");
    }
}

template <typename CellText>
TableGrid render_odd_array(natural max_row, natural max_k, CellText cell_text) {
    check_array_size(max_row, max_k);
    TableGrid grid;
    grid.row_labels = index_labels(0, max_row + 1);
    grid.col_labels = index_labels(0, max_k + 1);
    for (natural n = 0; n <= max_row; ++n) {
        for (natural k = 0; k <= max_k; ++k) {
            grid.cells.emplace(std::pair{n, k}, cell_text(psi(k, n)));
        }
    }
    return grid;
}

} // namespace

const std::string* TableGrid::find(std::size_t r, std::size_t c) const {
    const auto it = cells.find({r, c});
    return it == cells.end() ? nullptr : &it->second;
}

std::vector<std::string> TableGrid::row(std::size_t r) const {
    std::vector<std::string> out(cols());
    for (auto it = cells.lower_bound({r, 0}); it != cells.end() && it->first.first == r; ++it) {
        out[it->first.second] = it->second;
    }
    return out;
}

std::string TableGrid::to_text() const {
    std::vector<std::size_t> width(cols());
    for (std::size_t c = 0; c < cols(); ++c) width[c] = col_labels[c].size();
    for (const auto& [pos, text] : cells) width[pos.second] = std::max(width[pos.second], text.size());

    std::ostringstream os;
    auto emit = [&](const std::vector<std::string>& line) {
        std::string s;
        for (std::size_t c = 0; c < line.size(); ++c) {
            if (c > 0) s += " | ";
            s += line[c];
            s.append(width[c] - line[c].size(), ' ');
        }
        s.erase(s.find_last_not_of(' ') + 1);
        os << s << '\n';
    };
    emit(col_labels);
    for (std::size_t r = 0; r < rows(); ++r) emit(row(r));
    return os.str();
}

std::string TableGrid::to_csv() const {
    std::ostringstream os;
    auto emit = [&](const std::vector<std::string>& line) {
        for (std::size_t c = 0; c < line.size(); ++c) {
            if (c > 0) os << ',';
            os << csv_field(line[c]);
        }
        os << '\n';
    };
    emit(col_labels);
    for (std::size_t r = 0; r < rows(); ++r) emit(row(r));
    return os.str();
}

TableGrid render_phi_table(natural k, unsigned depth) {
    if (depth == 0) throw invalid_domain("phi table: depth must be >= 1");
    if (depth > kMaxTableDepth) {
        throw invalid_domain("phi table: depth " + std::to_string(depth) + " exceeds " +
                             std::to_string(kMaxTableDepth));
    }
    if (k > kMaxSetIndex) throw width_overflow("phi table: k exceeds 2^62");
    const unsigned head_rows = depth + 1;
    const unsigned pp_bits = k == 0 ? 0 : bit_length(2 * k - 1);
    if (pp_bits + head_rows > 64) {
        throw width_overflow("phi table: Phi_" + std::to_string(k) + " at depth " +
                             std::to_string(depth) + " exceeds 64 bits");
    }

    struct Member {
        natural value;
        unsigned row;
    };
    std::vector<Member> members;
    FibbinaryStream stream;
    for (FibbinaryEntry e = stream.next(); e.subset <= head_rows; e = stream.next()) {
        const natural value = k == 0 ? e.value : ((2 * k - 1) << e.subset) | e.value;
        members.push_back(Member{value, e.subset});
    }

    std::vector<natural> heads;
    for (const Member& m : members) {
        if (m.value % 2 == 1) heads.push_back(m.value);
    }
    std::sort(heads.begin(), heads.end(),
              [](natural a, natural b) { return dyadic_key(a) < dyadic_key(b); });
    std::unordered_map<natural, std::size_t> column_of;
    for (std::size_t c = 0; c < heads.size(); ++c) column_of.emplace(heads[c], c);

    TableGrid grid;
    grid.row_labels = index_labels(1, depth);
    grid.col_labels = index_labels(0, heads.size());
    for (const Member& m : members) {
        if (m.row > depth) continue;
        const natural head = m.value >> std::countr_zero(m.value);
        grid.cells.emplace(std::pair{std::size_t{m.row - 1}, column_of.at(head)},
                           std::to_string(m.value));
    }
    return grid;
}

TableGrid render_ona1(natural max_row, natural max_k) {
    return render_odd_array(max_row, max_k, [](natural v) { return std::to_string(v); });
}

TableGrid render_ona2(natural max_row, natural max_k) {
    return render_odd_array(max_row, max_k, [](natural v) {
        const OddSplit split = decompose_odd(v);
        return to_binary(split.pp) + ":" + to_binary(split.op);
    });
}

} // namespace fibpart
