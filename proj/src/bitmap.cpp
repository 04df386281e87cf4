#include "swarm/bitmap.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

namespace swarm {

int Bitmap::count_ones() const {
    return static_cast<int>(std::count(bits.begin(), bits.end(), std::uint8_t{1}));
}

namespace {

std::vector<std::string> significant_lines(std::string_view source) {
    std::vector<std::string> lines;
    std::string line;
    std::istringstream in{std::string(source)};
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        const auto first = line.find_first_not_of(" \t");
        if (first == std::string::npos) continue;
        if (line[first] == '#') continue;
        lines.push_back(line);
    }
    return lines;
}

std::vector<std::uint8_t> parse_row(const std::string& line) {
    std::vector<std::uint8_t> row;
    for (std::size_t i = 0; i < line.size(); ++i) {
        const char c = line[i];
        if (c == ' ' || c == '\t') continue;
        if (c == '0' || c == '1') {
            row.push_back(static_cast<std::uint8_t>(c - '0'));
        } else {
            throw ParseError("bitmap: non-binary token '" + std::string(1, c) + "'");
        }
    }
    return row;
}

Bitmap parse_p1(const std::vector<std::string>& lines) {
    // header already verified; tokens after "P1" are cols, rows, then bits
    std::string joined;
    for (const auto& l : lines) {
        joined += l;
        joined += ' ';
    }
    std::istringstream in(joined);
    std::string magic;
    in >> magic;
    long cols = 0, rows = 0;
    if (!(in >> cols >> rows) || cols <= 0 || rows <= 0)
        throw ParseError("bitmap: bad P1 dimensions");
    Bitmap bm;
    bm.rows = static_cast<int>(rows);
    bm.cols = static_cast<int>(cols);
    bm.bits.reserve(static_cast<std::size_t>(rows * cols));
    std::string tok;
    while (in >> tok) {
        for (char c : tok) {
            if (c != '0' && c != '1')
                throw ParseError("bitmap: non-binary token '" + std::string(1, c) + "'");
            bm.bits.push_back(static_cast<std::uint8_t>(c - '0'));
        }
    }
    if (bm.bits.size() != static_cast<std::size_t>(rows * cols))
        throw ParseError("bitmap: P1 payload does not match declared dimensions");
    return bm;
}

}  // namespace

Bitmap parse_bitmap(std::string_view source) {
    const auto lines = significant_lines(source);
    if (lines.empty()) throw ParseError("bitmap: empty input");

    {
        std::istringstream head(lines.front());
        std::string magic;
        head >> magic;
        if (magic == "P1") return parse_p1(lines);
    }

    Bitmap bm;
    for (const auto& line : lines) {
        auto row = parse_row(line);
        if (row.empty()) throw ParseError("bitmap: blank row");
        if (bm.cols == 0) {
            bm.cols = static_cast<int>(row.size());
        } else if (static_cast<int>(row.size()) != bm.cols) {
            throw ParseError("bitmap: ragged rows");
        }
        bm.bits.insert(bm.bits.end(), row.begin(), row.end());
        ++bm.rows;
    }
    return bm;
}

Bitmap load_bitmap(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("bitmap: cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_bitmap(buf.str());
}

}  // namespace swarm
