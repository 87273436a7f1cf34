#ifndef AVE_IO_HPP
#define AVE_IO_HPP

#include <stdexcept>
#include <string>

#include "ave/linalg.hpp"

namespace ave {

/// Parse failure; the message names the file and line.
struct ParseError : std::runtime_error {
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

// Matrix files: a "rows cols" header line, then one whitespace-separated
// row per line. Vector files: a length header line, then the entries in
// order, one or more per line. Decimal separator is always '.'; values are
// written with 17 significant digits so binary64 round-trips exactly.

Matrix read_matrix_file(const std::string& path);
Vector read_vector_file(const std::string& path);

void write_matrix_file(const std::string& path, const Matrix& a);
void write_vector_file(const std::string& path, const Vector& v);

std::string format_double(double v);

}  // namespace ave

#endif
