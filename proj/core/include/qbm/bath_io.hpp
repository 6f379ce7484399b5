// bath_io.hpp: line-oriented bath description files
//
//   # comment
//   M 1
//   omega0 1
//   1 2 1        <- m_j omega_j c_j, one oscillator per line, omega_j strictly increasing

#pragma once

#include <string>
#include <string_view>

#include "qbm/discrete_bath.hpp"

namespace qbm {

/// Throws ParseError carrying the 1-based line (and column where known).
DiscreteBath parse_bath(std::string_view text);

DiscreteBath load_bath(const std::string& path);

/// Inverse of parse_bath, 17 significant digits.
std::string format_bath(const DiscreteBath& bath);

}  // namespace qbm
