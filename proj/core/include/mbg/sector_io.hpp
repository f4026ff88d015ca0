#ifndef MBG_SECTOR_IO_HPP
#define MBG_SECTOR_IO_HPP

#include <string>

#include "mbg/fock.hpp"

namespace mbg {

/// Matrix Market coordinate format (complex general / hermitian flagged).
void save_matrix_market(const SectorOperator& op, const std::string& path);
SectorOperator load_matrix_market(const std::string& path);

/// One subset per row, comma-separated site indices.
void save_basis_csv(const SectorBasis& basis, const std::string& path);

}  // namespace mbg

#endif
