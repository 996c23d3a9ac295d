// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <filesystem>
#include <string>

#include "evalharness/protocol.hpp"

namespace ami::eval {

/// Writes means.csv, ecdf_<population>.csv (one per population with scores),
/// efficiency.csv, and summary.json under out_dir. Deterministic: rerunning on
/// the same result is byte-identical.
void emit_outputs(const EvalResult& result, const std::filesystem::path& out_dir);

/// The means table in model-row layout, for terminal display.
std::string format_means_table(const EvalResult& result);

}  // namespace ami::eval
