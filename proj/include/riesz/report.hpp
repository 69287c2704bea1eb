#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

namespace riesz {

// CSV emission with full-precision floats (17 significant digits) and
// '#'-prefixed metadata lines, so runs diff cleanly and regressions can be
// pinned byte-for-byte.  No timestamps unless the caller adds one.
class CsvWriter {
public:
    explicit CsvWriter(std::ostream& os) : os_(os) {}

    void meta(const std::string& key, const std::string& value);
    void header(const std::vector<std::string>& columns);
    void row(const std::vector<double>& values);
    void row_mixed(const std::vector<std::string>& cells);

    static std::string format(double v);

private:
    std::ostream& os_;
};

// Minimal self-contained SVG output: enough for a multiplicity heatmap over
// a (parameter, lambda) grid and simple polyline plots.
struct SvgHeatmapCell {
    std::size_t col = 0;
    std::size_t row = 0;
    int value = 0;
};

void write_svg_heatmap(std::ostream& os, const std::vector<std::string>& col_labels,
                       const std::vector<std::string>& row_labels,
                       const std::vector<SvgHeatmapCell>& cells, const std::string& title);

struct SvgSeries {
    std::string label;
    std::string color; // e.g. "#1f77b4"
    std::vector<double> x;
    std::vector<double> y;
};

void write_svg_lines(std::ostream& os, const std::vector<SvgSeries>& series,
                     const std::string& title);

} // namespace riesz
