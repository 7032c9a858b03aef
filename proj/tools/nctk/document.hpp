// Copyright 2026 The nctk Authors
// SPDX-License-Identifier: Apache-2.0

/// JSON documents for triples and standard-model mass parameters.
///
/// Triple document:
///   {
///     "algebra": [{"label": "M2", "kind": "Mn", "n": 2}, ...],
///     "hilbert_dim": 3,
///     "representation": [[matrix, ...], ...],   // per component, images of
///                                              // the real basis or of the
///                                              // self-adjoint basis only
///     "dirac": matrix,
///     "grading": matrix | "odd",
///     "real_structure": {"unitary": matrix},    // optional
///     "kr_dim": 0,
///     "projectors": [{"component": "C", "matrix": matrix}, ...]  // optional
///   }
/// A matrix is a list of rows; entries are [re, im] pairs or plain numbers.
#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "nctk/standard_model.hpp"
#include "nctk/triple.hpp"

namespace nctk::doc {

/// Malformed or invalid input; the message names the JSON location
/// (line/column for syntax errors, a JSON pointer for content errors).
class DocumentError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct TripleDocument {
  FiniteSpectralTriple triple;
  std::vector<Projector> projectors;
};

TripleDocument parse_triple(std::string_view text, const std::string& source = "<input>");
TripleDocument load_triple(const std::filesystem::path& path);
std::string serialize_triple(const TripleDocument& doc, int indent = 2);

/// {"generations": N, "up": [...], "down": [...], "lepton": [...],
///  "ckm": matrix | {"theta12_deg": .., "theta13_deg": .., "theta23_deg": .., "delta_rad": ..}}
/// Missing keys take the library defaults.
SMParams parse_masses(std::string_view text, const std::string& source = "<input>");
SMParams load_masses(const std::filesystem::path& path);

/// Reads a whole file; throws DocumentError if it cannot be opened.
std::string read_file(const std::filesystem::path& path);

}  // namespace nctk::doc
