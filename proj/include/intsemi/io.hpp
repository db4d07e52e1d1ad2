#pragma once

#include <filesystem>
#include <fstream>
#include <iomanip>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "intsemi/core.hpp"
#include "intsemi/trace.hpp"

namespace intsemi {

/// Full round-trip precision for data files.
inline std::string fmt_full(double v) {
    std::ostringstream os;
    os << std::setprecision(17) << v;
    return os.str();
}

/// Display precision for summaries.
inline std::string fmt_short(double v) {
    std::ostringstream os;
    os << std::setprecision(6) << v;
    return os.str();
}

struct CsvColumn {
    std::string name;
    std::vector<double> data;
};

inline void write_csv(const std::filesystem::path& path, const std::vector<CsvColumn>& cols) {
    if (cols.empty()) throw std::invalid_argument("write_csv: no columns");
    std::ofstream out(path);
    if (!out) throw std::runtime_error("write_csv: cannot open " + path.string());
    for (std::size_t c = 0; c < cols.size(); ++c) out << (c ? "," : "") << cols[c].name;
    out << "\n";
    const std::size_t rows = cols.front().data.size();
    for (const auto& c : cols)
        if (c.data.size() != rows) throw std::invalid_argument("write_csv: ragged columns");
    for (std::size_t r = 0; r < rows; ++r) {
        for (std::size_t c = 0; c < cols.size(); ++c)
            out << (c ? "," : "") << fmt_full(cols[c].data[r]);
        out << "\n";
    }
}

/// Two-column plot data with a gnuplot-compatible comment header.
inline void write_plot_data(const std::filesystem::path& path, const std::string& title,
                            const std::string& xlabel, const std::string& ylabel,
                            const std::vector<double>& x, const std::vector<double>& y) {
    if (x.size() != y.size()) throw std::invalid_argument("write_plot_data: size mismatch");
    std::ofstream out(path);
    if (!out) throw std::runtime_error("write_plot_data: cannot open " + path.string());
    out << "# " << title << "\n# x: " << xlabel << "\n# y: " << ylabel << "\n";
    out << "# gnuplot: plot '" << path.filename().string() << "' using 1:2 with linespoints\n";
    for (std::size_t i = 0; i < x.size(); ++i)
        out << fmt_full(x[i]) << " " << fmt_full(y[i]) << "\n";
}

/// Trace CSV: (re_t, im_t, value...) rows; scalar traces carry one value
/// column, complex traces two.
inline void write_trace_csv(const std::filesystem::path& path, const NormTrace& trace) {
    std::vector<CsvColumn> cols(3);
    cols[0].name = "re_t";
    cols[1].name = "im_t";
    cols[2].name = "value";
    for (std::size_t i = 0; i < trace.times.size(); ++i) {
        const Complex t = trace.times[i] * trace.direction;
        cols[0].data.push_back(t.real());
        cols[1].data.push_back(t.imag());
        cols[2].data.push_back(trace.values[i]);
    }
    write_csv(path, cols);
}

inline void write_trace_sidecar(const std::filesystem::path& path, const NormTrace& trace) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("write_trace_sidecar: cannot open " + path.string());
    out << "{\n  \"sigma\": " << fmt_full(trace.order) << ",\n  \"omega\": "
        << fmt_full(trace.omega) << ",\n  \"mesh\": \"" << mesh_kind_name(trace.mesh)
        << "\",\n  \"n_samples\": " << trace.times.size() << "\n}\n";
}

}  // namespace intsemi
