#include "mbg/sector_io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace mbg {

void save_matrix_market(const SectorOperator& op, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << "%%MatrixMarket matrix coordinate complex general\n";
  out << "% hermitian_flag " << (op.hermitian ? 1 : 0) << "\n";
  out << op.dim << " " << op.dim << " " << op.entries.size() << "\n";
  out.precision(17);
  for (const auto& [r, c, v] : op.entries)
    out << r + 1 << " " << c + 1 << " " << v.real() << " " << v.imag() << "\n";
}

SectorOperator load_matrix_market(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::string line;
  SectorOperator op;
  bool have_size = false;
  bool complex_field = true;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    if (line[0] == '%') {
      if (line.find("hermitian_flag 1") != std::string::npos) op.hermitian = true;
      if (line.rfind("%%MatrixMarket", 0) == 0 &&
          line.find("complex") == std::string::npos)
        complex_field = false;
      continue;
    }
    std::istringstream ls(line);
    if (!have_size) {
      int rows, cols;
      std::size_t nnz;
      ls >> rows >> cols >> nnz;
      if (rows != cols) throw std::runtime_error("expected a square operator in " + path);
      op.dim = rows;
      have_size = true;
      continue;
    }
    int r, c;
    double re, im = 0.0;
    ls >> r >> c >> re;
    if (complex_field) ls >> im;
    op.add(r - 1, c - 1, Complex(re, im));
  }
  op.compress();
  return op;
}

void save_basis_csv(const SectorBasis& basis, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  for (const auto& state : basis.states) {
    for (std::size_t i = 0; i < state.size(); ++i)
      out << state[i] << (i + 1 < state.size() ? "," : "");
    out << "\n";
  }
}

}  // namespace mbg
