#pragma once

#include <optional>
#include <string>

#include "swfusion/harness/suite.hpp"

namespace swf::harness {

enum class TableKind { maj_dist, kostka_foulkes, graded_char, q_binomial, gensegal_matrix };

std::string to_string(TableKind k);
/// Throws UsageError for an unknown kind.
TableKind table_kind_from_string(const std::string& s);

struct TableParams {
  std::optional<int> N;  ///< maj-dist, kostka-foulkes, graded-char
  std::optional<int> k;  ///< q-binomial, gensegal-matrix
  std::optional<int> m;  ///< q-binomial top entry, defaults to 2k
  ZPoints z_points = ZPoints::consecutive;
  Format format = Format::tsv;
};

/// Table contents; identical bytes for identical params. Throws UsageError
/// naming the flag when a parameter is missing or out of range.
std::string emit_table(TableKind kind, const TableParams& params);

}  // namespace swf::harness
