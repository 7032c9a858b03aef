// Copyright 2026 The nctk Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <complex>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace nctk::cli {

enum ExitCode : int { kSuccess = 0, kDomainFailure = 1, kInputError = 2 };

/// Runs the command line `nctk <args...>`; never throws.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Parses "a", "bi", "a+bi", "a-bi" (also with 'j'); throws
/// std::invalid_argument on anything else.
std::complex<double> parse_complex(std::string_view text);

/// One RFC 4180 record (no trailing newline).
std::string csv_record(const std::vector<std::string>& fields);

}  // namespace nctk::cli
