#pragma once

#include <string>

#include "record.hpp"
#include "report.hpp"

namespace bihom {

/// Canonical JSON rendering: format_version 1, "kind" discriminator, scalars
/// as decimal-free "p" / "p/q" strings, tensors as nested arrays in the
/// documented index order, matrices as row arrays (column j = image of e_j).
/// Output is byte-deterministic (sorted keys, 2-space indent).
std::string serialize(const Record& rec);

/// Inverse of serialize; rejects malformed input with a ParseError whose
/// message names the offending JSON path.
Record deserialize(const std::string& text);

std::string report_to_json(const ViolationReport<R>& rep);
std::string report_to_text(const ViolationReport<R>& rep);

/// Flat triple-tensor residual (abhYBe / coabhYBe) rendered as JSON.
std::string residual_to_json(const Vec<R>& residual, int dim);

}  // namespace bihom
