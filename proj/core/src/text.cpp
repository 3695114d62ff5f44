#include "trop/text.hpp"

#include <fstream>
#include <map>
#include <sstream>

namespace trop {
namespace {

struct Line {
    int number;
    std::string text;
};

bool is_blank_or_comment(const std::string& s) {
    for (char c : s) {
        if (c == '#') return true;
        if (!std::isspace(static_cast<unsigned char>(c))) return false;
    }
    return true;
}

std::vector<Line> content_lines(std::string_view text) {
    std::vector<Line> out;
    int number = 0;
    size_t pos = 0;
    while (pos <= text.size()) {
        size_t nl = text.find('\n', pos);
        std::string line(text.substr(pos, nl == std::string_view::npos ? std::string_view::npos
                                                                       : nl - pos));
        ++number;
        if (!is_blank_or_comment(line)) out.push_back({number, std::move(line)});
        if (nl == std::string_view::npos) break;
        pos = nl + 1;
    }
    return out;
}

TropMatrix matrix_from_lines(const std::vector<Line>& lines, const std::string& source) {
    if (lines.empty()) throw ParseError(source + ": no matrix rows found");
    std::vector<std::vector<TropScalar>> rows;
    for (const auto& line : lines) {
        std::istringstream in(line.text);
        std::vector<TropScalar> row;
        std::string tok;
        while (in >> tok) {
            try {
                row.push_back(TropScalar::parse(tok));
            } catch (const ParseError& e) {
                throw ParseError(source + ":" + std::to_string(line.number) + ": " + e.what());
            }
        }
        if (!rows.empty() && row.size() != rows.front().size())
            throw ParseError(source + ":" + std::to_string(line.number) + ": row has " +
                             std::to_string(row.size()) + " entries, expected " +
                             std::to_string(rows.front().size()));
        rows.push_back(std::move(row));
    }
    if (rows.front().empty()) throw ParseError(source + ": empty matrix row");
    TropMatrix m(static_cast<int>(rows.size()), static_cast<int>(rows.front().size()));
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j)
            m.at(i, j) = rows[static_cast<size_t>(i)][static_cast<size_t>(j)];
    return m;
}

} // namespace

TropMatrix parse_matrix(std::string_view text, const std::string& source) {
    return matrix_from_lines(content_lines(text), source);
}

std::string format_matrix(const TropMatrix& m) {
    std::string out;
    for (int i = 0; i < m.rows(); ++i) {
        for (int j = 0; j < m.cols(); ++j) {
            if (j > 0) out.push_back(' ');
            out += m.at(i, j).token();
        }
        out.push_back('\n');
    }
    return out;
}

MatrixEquation parse_equation(std::string_view text, const std::string& source) {
    std::map<int, std::vector<Line>> a_blocks, b_blocks;
    std::vector<Line> c_block;
    std::vector<Line>* current = nullptr;

    for (auto& line : content_lines(text)) {
        std::istringstream in(line.text);
        std::string head;
        in >> head;
        if (head == "%A" || head == "%B") {
            int index = 0;
            std::string trailing;
            if (!(in >> index) || index < 1 || (in >> trailing))
                throw ParseError(source + ":" + std::to_string(line.number) +
                                 ": expected '" + head + " <index>'");
            auto& blocks = head == "%A" ? a_blocks : b_blocks;
            if (blocks.count(index))
                throw ParseError(source + ":" + std::to_string(line.number) + ": duplicate " +
                                 head + " " + std::to_string(index));
            current = &blocks[index];
        } else if (head == "%C") {
            if (!c_block.empty() || current == &c_block)
                throw ParseError(source + ":" + std::to_string(line.number) + ": duplicate %C");
            current = &c_block;
        } else if (!head.empty() && head[0] == '%') {
            throw ParseError(source + ":" + std::to_string(line.number) +
                             ": unknown section '" + head + "'");
        } else {
            if (current == nullptr)
                throw ParseError(source + ":" + std::to_string(line.number) +
                                 ": matrix row before any %A/%B/%C section");
            current->push_back(std::move(line));
        }
    }

    if (a_blocks.empty()) throw ParseError(source + ": no %A sections");
    int r = static_cast<int>(a_blocks.size());
    std::vector<std::pair<TropMatrix, TropMatrix>> terms;
    for (int i = 1; i <= r; ++i) {
        if (!a_blocks.count(i))
            throw ParseError(source + ": %A indices must be contiguous from 1; missing %A " +
                             std::to_string(i));
        if (!b_blocks.count(i))
            throw ParseError(source + ": missing %B " + std::to_string(i));
        terms.emplace_back(matrix_from_lines(a_blocks[i], source + " (%A " + std::to_string(i) + ")"),
                           matrix_from_lines(b_blocks[i], source + " (%B " + std::to_string(i) + ")"));
    }
    if (static_cast<int>(b_blocks.size()) != r)
        throw ParseError(source + ": more %B sections than %A sections");
    if (c_block.empty()) throw ParseError(source + ": missing %C section");
    return MatrixEquation(std::move(terms), matrix_from_lines(c_block, source + " (%C)"));
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError(path + ": cannot open file");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

} // namespace trop
