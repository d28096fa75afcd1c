#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "cokahler/lie_model.hpp"

namespace cokahler {

/// Model files are line-oriented text:
///
///   name: heisenberg
///   dimension: 3
///   [brackets]        i j k c   meaning [X_i, X_j] = c X_k, with i < j
///   [metric]          D rows (identity when absent)
///   [xi] / [eta]      one row of D entries
///   [J]               D rows; column j holds J X_j
///   [omega]           i j c     meaning omega(X_i, X_j) = c, with i < j
///   [automorphism]    "order: m" then D rows; column j is the image of e^j
///
/// '#' starts a comment. Indices are 1-based; entries are integers or p/q.
/// Every error is reported as a ParseError carrying the line number.
LieModel parse_model(std::string_view text);
LieModel load_model(const std::filesystem::path& path);

/// Canonical text form; parse_model(serialize_model(m)) reproduces m.
std::string serialize_model(const LieModel& model);

bool same_model(const LieModel& a, const LieModel& b);

}  // namespace cokahler
