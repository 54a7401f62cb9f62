#pragma once

#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "loewner_lab/matrix.hpp"

namespace loewner_lab::cli {

/// Raised for malformed files and bad command-line input; maps to exit code 1.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct MatrixFile {
  std::optional<std::string> label;
  std::size_t dim = 0;
  std::vector<double> entries;  // row-major, dim²
};

/// Relative asymmetry above which loading warns.
inline constexpr double kAsymmetryWarning = 1e-9;

MatrixFile parse_matrix_file(std::istream& in, const std::string& source = "<input>");
MatrixFile read_matrix_file(const std::string& path);

/// max |m_ij − m_ji| / max(1, ‖M‖_F).
double relative_asymmetry(const MatrixFile& file);

/// Symmetrizes; appends a warning when the asymmetry exceeds kAsymmetryWarning.
SymMatrix to_sym_matrix(const MatrixFile& file, std::vector<std::string>* warnings = nullptr);

/// Shortest round-trip formatting, so re-reading yields identical values.
void write_matrix_file(std::ostream& out, const SymMatrix& m,
                       const std::optional<std::string>& label = std::nullopt);
void save_matrix_file(const std::string& path, const SymMatrix& m,
                      const std::optional<std::string>& label = std::nullopt);

}  // namespace loewner_lab::cli
