#ifndef SIMULE_IO_HPP
#define SIMULE_IO_HPP

#include <optional>
#include <string>
#include <vector>

#include "simule/matrix.hpp"

namespace simule::io {

// Formats a double with 10 significant digits (the on-disk precision).
std::string format_value(double v);

// Writes comma-separated rows, LF line endings, no trailing separator.
// An optional header row of column names can be prepended.
void write_matrix_csv(const std::string& path, const DenseMatrix& m,
                      const std::optional<std::vector<std::string>>& header = std::nullopt);
void write_matrix_csv(const std::string& path, const SymmetricMatrix& m,
                      const std::optional<std::vector<std::string>>& header = std::nullopt);
void write_support_csv(const std::string& path, const BoolMatrix& m);

// Reads a numeric CSV. Ragged rows or non-numeric fields raise DataError;
// missing files raise DataError as well.
DenseMatrix read_matrix_csv(const std::string& path);
BoolMatrix read_support_csv(const std::string& path);

void write_text_file(const std::string& path, const std::string& contents);
std::string read_text_file(const std::string& path);

}  // namespace simule::io

#endif
