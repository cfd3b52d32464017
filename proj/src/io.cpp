#include "simule/io.hpp"

#include <cctype>
#include <cstdio>
#include <fstream>
#include <functional>
#include <sstream>

namespace simule::io {

std::string format_value(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.10g", v);
    return buf;
}

namespace {

void write_rows(const std::string& path, int rows, int cols,
                const std::function<double(int, int)>& at,
                const std::optional<std::vector<std::string>>& header) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw DataError("cannot open for writing: " + path);
    if (header) {
        if (static_cast<int>(header->size()) != cols) {
            throw UsageError("write_matrix_csv: header length does not match columns");
        }
        for (int j = 0; j < cols; ++j) {
            if (j) out << ',';
            out << (*header)[j];
        }
        out << '\n';
    }
    for (int i = 0; i < rows; ++i) {
        for (int j = 0; j < cols; ++j) {
            if (j) out << ',';
            out << format_value(at(i, j));
        }
        out << '\n';
    }
    if (!out) throw DataError("write failed: " + path);
}

}  // namespace

void write_matrix_csv(const std::string& path, const DenseMatrix& m,
                      const std::optional<std::vector<std::string>>& header) {
    write_rows(path, m.rows(), m.cols(), [&](int i, int j) { return m(i, j); }, header);
}

void write_matrix_csv(const std::string& path, const SymmetricMatrix& m,
                      const std::optional<std::vector<std::string>>& header) {
    write_rows(path, m.dim(), m.dim(), [&](int i, int j) { return m(i, j); }, header);
}

void write_support_csv(const std::string& path, const BoolMatrix& m) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw DataError("cannot open for writing: " + path);
    for (int i = 0; i < m.dim(); ++i) {
        for (int j = 0; j < m.dim(); ++j) {
            if (j) out << ',';
            out << (m.at(i, j) ? '1' : '0');
        }
        out << '\n';
    }
}

namespace {

bool parse_numeric_row(const std::string& line, std::vector<double>* out) {
    out->clear();
    size_t pos = 0;
    while (pos <= line.size()) {
        size_t comma = line.find(',', pos);
        const std::string field =
            line.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
        size_t consumed = 0;
        double v;
        try {
            v = std::stod(field, &consumed);
        } catch (const std::exception&) {
            return false;
        }
        while (consumed < field.size() && std::isspace(static_cast<unsigned char>(field[consumed]))) {
            ++consumed;
        }
        if (consumed != field.size()) return false;
        out->push_back(v);
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return true;
}

}  // namespace

DenseMatrix read_matrix_csv(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw DataError("cannot open for reading: " + path);
    std::vector<double> values;
    std::vector<double> row;
    std::string line;
    int cols = -1;
    int rows = 0;
    bool first_content_line = true;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        if (!parse_numeric_row(line, &row)) {
            // A non-numeric first line is treated as a header row.
            if (first_content_line) {
                first_content_line = false;
                continue;
            }
            throw DataError(path + ": non-numeric row " + std::to_string(rows + 1));
        }
        first_content_line = false;
        if (cols < 0) {
            cols = static_cast<int>(row.size());
        } else if (cols != static_cast<int>(row.size())) {
            throw DataError(path + ": ragged CSV (row " + std::to_string(rows + 1) + ")");
        }
        values.insert(values.end(), row.begin(), row.end());
        ++rows;
    }
    if (rows == 0 || cols <= 0) throw DataError(path + ": empty CSV");
    return DenseMatrix::from_data(rows, cols, std::move(values));
}

BoolMatrix read_support_csv(const std::string& path) {
    const DenseMatrix m = read_matrix_csv(path);
    if (m.rows() != m.cols()) throw DataError(path + ": support matrix must be square");
    BoolMatrix b(m.rows());
    for (int i = 0; i < m.rows(); ++i) {
        for (int j = 0; j < m.cols(); ++j) {
            if (m(i, j) != 0.0) b.set(i, j, true);
        }
    }
    return b;
}

void write_text_file(const std::string& path, const std::string& contents) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw DataError("cannot open for writing: " + path);
    out << contents;
    if (!out) throw DataError("write failed: " + path);
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw DataError("cannot open for reading: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace simule::io
