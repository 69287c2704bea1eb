#include "riesz/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>

namespace riesz {

std::string CsvWriter::format(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

void CsvWriter::meta(const std::string& key, const std::string& value) {
    os_ << "# " << key << ": " << value << "\n";
}

void CsvWriter::header(const std::vector<std::string>& columns) {
    for (std::size_t i = 0; i < columns.size(); ++i)
        os_ << (i ? "," : "") << columns[i];
    os_ << "\n";
}

void CsvWriter::row(const std::vector<double>& values) {
    for (std::size_t i = 0; i < values.size(); ++i)
        os_ << (i ? "," : "") << format(values[i]);
    os_ << "\n";
}

void CsvWriter::row_mixed(const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) os_ << (i ? "," : "") << cells[i];
    os_ << "\n";
}

namespace {

const char* heat_color(int v) {
    // 1 center: pale; 2: orange; 3+: red
    if (v <= 0) return "#dddddd";
    if (v == 1) return "#c6dbef";
    if (v == 2) return "#fd8d3c";
    return "#bd0026";
}

} // namespace

void write_svg_heatmap(std::ostream& os, const std::vector<std::string>& col_labels,
                       const std::vector<std::string>& row_labels,
                       const std::vector<SvgHeatmapCell>& cells, const std::string& title) {
    const int cell = 48, left = 90, top = 50, bottom = 30;
    const std::size_t nc = col_labels.size(), nr = row_labels.size();
    const std::size_t width = left + nc * cell + 20;
    const std::size_t height = top + nr * cell + bottom;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\""
       << height << "\">\n";
    os << "<text x=\"" << left << "\" y=\"24\" font-size=\"16\" font-family=\"sans-serif\">"
       << title << "</text>\n";
    for (const auto& c : cells) {
        if (c.col >= nc || c.row >= nr) continue;
        std::size_t x = left + c.col * cell;
        std::size_t y = top + c.row * cell;
        os << "<rect x=\"" << x << "\" y=\"" << y << "\" width=\"" << cell << "\" height=\""
           << cell << "\" fill=\"" << heat_color(c.value)
           << "\" stroke=\"#555555\" stroke-width=\"1\"/>\n";
        os << "<text x=\"" << x + cell / 2 << "\" y=\"" << y + cell / 2 + 5
           << "\" text-anchor=\"middle\" font-size=\"14\" font-family=\"sans-serif\">"
           << c.value << "</text>\n";
    }
    for (std::size_t i = 0; i < nc; ++i)
        os << "<text x=\"" << left + i * cell + cell / 2 << "\" y=\"" << top + nr * cell + 18
           << "\" text-anchor=\"middle\" font-size=\"12\" font-family=\"sans-serif\">"
           << col_labels[i] << "</text>\n";
    for (std::size_t i = 0; i < nr; ++i)
        os << "<text x=\"" << left - 8 << "\" y=\"" << top + i * cell + cell / 2 + 5
           << "\" text-anchor=\"end\" font-size=\"12\" font-family=\"sans-serif\">"
           << row_labels[i] << "</text>\n";
    os << "</svg>\n";
}

void write_svg_lines(std::ostream& os, const std::vector<SvgSeries>& series,
                     const std::string& title) {
    const int width = 640, height = 420, left = 70, right = 20, top = 40, bottom = 50;
    double xmin = std::numeric_limits<double>::infinity(), xmax = -xmin;
    double ymin = xmin, ymax = -xmin;
    for (const auto& s : series)
        for (std::size_t i = 0; i < s.x.size(); ++i) {
            xmin = std::min(xmin, s.x[i]);
            xmax = std::max(xmax, s.x[i]);
            ymin = std::min(ymin, s.y[i]);
            ymax = std::max(ymax, s.y[i]);
        }
    if (!(xmax > xmin)) xmax = xmin + 1.0;
    if (!(ymax > ymin)) ymax = ymin + 1.0;
    auto px = [&](double x) { return left + (x - xmin) / (xmax - xmin) * (width - left - right); };
    auto py = [&](double y) {
        return height - bottom - (y - ymin) / (ymax - ymin) * (height - top - bottom);
    };
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\""
       << height << "\">\n";
    os << "<text x=\"" << left << "\" y=\"22\" font-size=\"15\" font-family=\"sans-serif\">"
       << title << "</text>\n";
    os << "<rect x=\"" << left << "\" y=\"" << top << "\" width=\"" << width - left - right
       << "\" height=\"" << height - top - bottom
       << "\" fill=\"none\" stroke=\"#333333\"/>\n";
    int li = 0;
    for (const auto& s : series) {
        os << "<polyline fill=\"none\" stroke=\"" << s.color << "\" stroke-width=\"1.5\" points=\"";
        for (std::size_t i = 0; i < s.x.size(); ++i)
            os << px(s.x[i]) << "," << py(s.y[i]) << " ";
        os << "\"/>\n";
        os << "<text x=\"" << width - right - 150 << "\" y=\"" << top + 18 + 16 * li
           << "\" font-size=\"12\" font-family=\"sans-serif\" fill=\"" << s.color << "\">"
           << s.label << "</text>\n";
        ++li;
    }
    // axis extremes
    os << "<text x=\"" << left << "\" y=\"" << height - bottom + 16
       << "\" font-size=\"11\" font-family=\"sans-serif\">" << CsvWriter::format(xmin)
       << "</text>\n";
    os << "<text x=\"" << width - right << "\" y=\"" << height - bottom + 16
       << "\" text-anchor=\"end\" font-size=\"11\" font-family=\"sans-serif\">"
       << CsvWriter::format(xmax) << "</text>\n";
    os << "<text x=\"" << left - 6 << "\" y=\"" << py(ymin)
       << "\" text-anchor=\"end\" font-size=\"11\" font-family=\"sans-serif\">"
       << CsvWriter::format(ymin) << "</text>\n";
    os << "<text x=\"" << left - 6 << "\" y=\"" << py(ymax) + 10
       << "\" text-anchor=\"end\" font-size=\"11\" font-family=\"sans-serif\">"
       << CsvWriter::format(ymax) << "</text>\n";
    os << "</svg>\n";
}

} // namespace riesz
