#include "petrie/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace petrie {

std::string format_matrix(const IntMatrix& a) {
  std::size_t width = 1;
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j) width = std::max(width, a(i, j).str().size());
  std::ostringstream out;
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      const std::string s = a(i, j).str();
      out << (j ? " " : "") << std::string(width - s.size(), ' ') << s;
    }
    out << '\n';
  }
  return out.str();
}

std::string format_matrix(const RatMatrix& a) {
  Integer scale(1);
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j) scale = lcm(scale, Integer(denominator(a(i, j))));
  IntMatrix scaled(a.rows(), a.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j) scaled(i, j) = Integer(numerator(a(i, j) * Rational(scale)));
  if (scale == 1) return format_matrix(scaled);
  return "1/" + scale.str() + " *\n" + format_matrix(scaled);
}

nlohmann::json matrix_json(const IntMatrix& a) {
  nlohmann::json rows = nlohmann::json::array();
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (Eigen::Index j = 0; j < a.cols(); ++j) row.push_back(a(i, j).convert_to<long long>());
    rows.push_back(row);
  }
  return rows;
}

std::string read_text_file(const std::filesystem::path& file) {
  std::ifstream in(file);
  if (!in) throw Error("cannot read " + file.string());
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

void write_text_file(const std::filesystem::path& file, const std::string& text) {
  if (file.has_parent_path()) std::filesystem::create_directories(file.parent_path());
  const std::string tmp = file.string() + ".tmp";
  {
    std::ofstream out(tmp);
    if (!out) throw Error("cannot write " + tmp);
    out << text;
  }
  std::filesystem::rename(tmp, file);
}

}  // namespace petrie
