#include "loewner_lab_cli/matrix_file.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "loewner_lab/format.hpp"

namespace loewner_lab::cli {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

bool take_key(std::string_view line, std::string_view key, std::string_view& rest) {
  if (!line.starts_with(key)) return false;
  rest = trim(line.substr(key.size()));
  return true;
}

[[noreturn]] void fail(const std::string& source, std::size_t line_no, const std::string& what) {
  throw InputError(source + ":" + std::to_string(line_no) + ": " + what);
}

}  // namespace

MatrixFile parse_matrix_file(std::istream& in, const std::string& source) {
  MatrixFile file;
  bool have_dim = false;
  std::size_t rows = 0;
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    const std::string_view line = trim(raw);
    if (line.empty() || line.front() == '#') continue;
    std::string_view rest;
    if (take_key(line, "label:", rest)) {
      if (have_dim) fail(source, line_no, "label must precede dim");
      if (file.label) fail(source, line_no, "duplicate label");
      file.label = std::string(rest);
      continue;
    }
    if (take_key(line, "dim:", rest)) {
      if (have_dim) fail(source, line_no, "duplicate dim");
      std::size_t dim = 0;
      const auto parsed = parse_double(rest);
      if (!parsed || *parsed < 1 || *parsed != std::floor(*parsed) || *parsed > 4096) {
        fail(source, line_no, "dim must be a positive integer, got '" + std::string(rest) + "'");
      }
      dim = static_cast<std::size_t>(*parsed);
      file.dim = dim;
      file.entries.reserve(dim * dim);
      have_dim = true;
      continue;
    }
    if (!have_dim) fail(source, line_no, "expected 'dim: N' before matrix rows");
    if (rows == file.dim) fail(source, line_no, "more than " + std::to_string(file.dim) + " rows");
    std::size_t count = 0;
    std::size_t pos = 0;
    while (pos < line.size()) {
      const auto end = std::min(line.find_first_of(" \t", pos), line.size());
      const std::string_view token = line.substr(pos, end - pos);
      if (!token.empty()) {
        const auto value = parse_double(token);
        if (!value || !std::isfinite(*value)) {
          fail(source, line_no, "not a finite number: '" + std::string(token) + "'");
        }
        file.entries.push_back(*value);
        ++count;
      }
      pos = end + 1;
    }
    if (count != file.dim) {
      fail(source, line_no,
           "row has " + std::to_string(count) + " entries, expected " + std::to_string(file.dim));
    }
    ++rows;
  }
  if (!have_dim) throw InputError(source + ": missing 'dim: N'");
  if (rows != file.dim) {
    throw InputError(source + ": expected " + std::to_string(file.dim) + " rows, found " +
                     std::to_string(rows));
  }
  return file;
}

MatrixFile read_matrix_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open matrix file '" + path + "'");
  return parse_matrix_file(in, path);
}

double relative_asymmetry(const MatrixFile& file) {
  const std::size_t n = file.dim;
  double worst = 0.0;
  double sq = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const double v = file.entries[i * n + j];
      sq += v * v;
      worst = std::max(worst, std::abs(v - file.entries[j * n + i]));
    }
  }
  return worst / std::max(1.0, std::sqrt(sq));
}

SymMatrix to_sym_matrix(const MatrixFile& file, std::vector<std::string>* warnings) {
  const double asym = relative_asymmetry(file);
  if (asym > kAsymmetryWarning && warnings) {
    warnings->push_back("matrix" + (file.label ? " '" + *file.label + "'" : std::string()) +
                        " is not symmetric (relative asymmetry " + format_double(asym) +
                        "); using (M + Mᵀ)/2");
  }
  return SymMatrix(Matrix(file.dim, file.entries));
}

void write_matrix_file(std::ostream& out, const SymMatrix& m, const std::optional<std::string>& label) {
  if (label) out << "label: " << *label << '\n';
  const std::size_t n = m.dim();
  out << "dim: " << n << '\n';
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) out << (j ? " " : "") << format_double(m(i, j));
    out << '\n';
  }
}

void save_matrix_file(const std::string& path, const SymMatrix& m,
                      const std::optional<std::string>& label) {
  std::ofstream out(path);
  if (!out) throw InputError("cannot write '" + path + "'");
  write_matrix_file(out, m, label);
  if (!out) throw InputError("write failed for '" + path + "'");
}

}  // namespace loewner_lab::cli
