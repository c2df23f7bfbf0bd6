#include "kzrat/format.hpp"

#include <algorithm>
#include <cstdlib>
#include <optional>
#include <sstream>
#include <vector>

namespace kzrat {

namespace {

std::string grid(const std::vector<std::string>& cells, std::size_t rows, std::size_t cols, std::string_view indent) {
  std::vector<std::size_t> width(cols, 0);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) width[j] = std::max(width[j], cells[i * cols + j].size());
  std::ostringstream os;
  for (std::size_t i = 0; i < rows; ++i) {
    os << indent << "[";
    for (std::size_t j = 0; j < cols; ++j) {
      const std::string& c = cells[i * cols + j];
      os << " " << std::string(width[j] - c.size(), ' ') << c;
    }
    os << " ]\n";
  }
  return os.str();
}

// Common exponent k and scale s with every entry = (integer / s) * var^k.
std::optional<std::pair<long, mpz_class>> common_factor(const Matrix<RatFunc>& m) {
  std::optional<long> exponent;
  mpz_class scale = 1;
  for (const auto& e : m.data()) {
    if (e.is_zero()) continue;
    const auto mono = e.as_monomial();
    if (!mono) return std::nullopt;
    if (exponent && *exponent != mono->exponent) return std::nullopt;
    exponent = mono->exponent;
    mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), mono->coefficient.denominator().get_mpz_t());
  }
  if (!exponent) return std::nullopt;
  return std::make_pair(*exponent, scale);
}

}  // namespace

std::string format_matrix(const Matrix<Scalar>& m, std::string_view indent) {
  std::vector<std::string> cells;
  for (const auto& e : m.data()) cells.push_back(e.to_string());
  return grid(cells, m.rows(), m.cols(), indent);
}

std::string format_matrix(const Matrix<RatFunc>& m, std::string_view var, std::string_view indent) {
  if (m.is_zero()) return grid(std::vector<std::string>(m.rows() * m.cols(), "0"), m.rows(), m.cols(), indent);
  bool constant = true;
  for (const auto& e : m.data()) constant = constant && e.is_constant();
  if (constant) return format_matrix(m.map([](const RatFunc& e) { return e.constant_value(); }), indent);

  if (const auto factor = common_factor(m)) {
    const auto [k, scale] = *factor;
    std::vector<std::string> cells;
    for (const auto& e : m.data()) {
      cells.push_back(e.is_zero() ? "0" : (e.as_monomial()->coefficient * Scalar(scale, 1)).to_string());
    }
    std::ostringstream head;
    const std::string power = std::string(var) + (std::abs(k) == 1 ? "" : "^" + std::to_string(std::abs(k)));
    if (k < 0) {
      head << "1/(" << (scale == 1 ? "" : scale.get_str() + "*") << power << ")";
    } else {
      head << power << (scale == 1 ? "" : "/" + scale.get_str());
    }
    return std::string(indent) + head.str() + " *\n" + grid(cells, m.rows(), m.cols(), indent);
  }
  std::vector<std::string> cells;
  for (const auto& e : m.data()) cells.push_back(e.to_string(var));
  return grid(cells, m.rows(), m.cols(), indent);
}

std::string format_matrix(const Matrix<Poly>& m, std::string_view var, std::string_view indent) {
  std::vector<std::string> cells;
  for (const auto& e : m.data()) cells.push_back(e.to_string(var));
  return grid(cells, m.rows(), m.cols(), indent);
}

}  // namespace kzrat
