#include "ave/io.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <vector>

namespace ave {

namespace {

std::vector<std::string> read_lines(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(path + ": cannot open file");
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in, line)) lines.push_back(line);
  return lines;
}

struct TokenCursor {
  const std::string& path;
  const std::vector<std::string>& lines;
  size_t line = 0;
  size_t pos = 0;

  [[noreturn]] void fail(const std::string& what) const {
    std::ostringstream os;
    os << path << ":" << (line + 1) << ": " << what;
    throw ParseError(os.str());
  }

  bool next_token(std::string& out) {
    while (line < lines.size()) {
      const std::string& s = lines[line];
      while (pos < s.size() && (s[pos] == ' ' || s[pos] == '\t' || s[pos] == '\r')) ++pos;
      if (pos >= s.size()) {
        ++line;
        pos = 0;
        continue;
      }
      size_t end = pos;
      while (end < s.size() && s[end] != ' ' && s[end] != '\t' && s[end] != '\r') ++end;
      out = s.substr(pos, end - pos);
      pos = end;
      return true;
    }
    return false;
  }

  long expect_int(const std::string& what) {
    std::string tok;
    if (!next_token(tok)) fail("expected " + what + ", got end of file");
    long value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc{} || ptr != tok.data() + tok.size())
      fail("expected " + what + ", got '" + tok + "'");
    return value;
  }

  double expect_double(const std::string& what) {
    std::string tok;
    if (!next_token(tok)) fail("expected " + what + ", got end of file");
    double value = 0.0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc{} || ptr != tok.data() + tok.size() || !std::isfinite(value))
      fail("expected " + what + ", got '" + tok + "'");
    return value;
  }
};

}  // namespace

std::string format_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

Matrix read_matrix_file(const std::string& path) {
  const std::vector<std::string> lines = read_lines(path);
  TokenCursor cur{path, lines};
  const long rows = cur.expect_int("row count");
  const long cols = cur.expect_int("column count");
  if (rows < 1 || cols < 1 || rows > 10000 || cols > 10000)
    cur.fail("matrix dimensions out of range");
  std::vector<double> data;
  data.reserve(static_cast<size_t>(rows) * cols);
  for (long i = 0; i < rows * cols; ++i) data.push_back(cur.expect_double("matrix entry"));
  std::string extra;
  if (cur.next_token(extra)) cur.fail("unexpected trailing token '" + extra + "'");
  return Matrix::from_data(static_cast<int>(rows), static_cast<int>(cols), std::move(data));
}

Vector read_vector_file(const std::string& path) {
  const std::vector<std::string> lines = read_lines(path);
  TokenCursor cur{path, lines};
  const long n = cur.expect_int("vector length");
  if (n < 1 || n > 10000) cur.fail("vector length out of range");
  Vector v;
  v.reserve(static_cast<size_t>(n));
  for (long i = 0; i < n; ++i) v.push_back(cur.expect_double("vector entry"));
  std::string extra;
  if (cur.next_token(extra)) cur.fail("unexpected trailing token '" + extra + "'");
  return v;
}

void write_matrix_file(const std::string& path, const Matrix& a) {
  std::ofstream out(path);
  if (!out) throw ParseError(path + ": cannot open file for writing");
  out << a.rows() << " " << a.cols() << "\n";
  for (int i = 0; i < a.rows(); ++i) {
    for (int j = 0; j < a.cols(); ++j) {
      if (j) out << " ";
      out << format_double(a(i, j));
    }
    out << "\n";
  }
  if (!out) throw ParseError(path + ": write failed");
}

void write_vector_file(const std::string& path, const Vector& v) {
  std::ofstream out(path);
  if (!out) throw ParseError(path + ": cannot open file for writing");
  out << v.size() << "\n";
  for (double e : v) out << format_double(e) << "\n";
  if (!out) throw ParseError(path + ": write failed");
}

}  // namespace ave
