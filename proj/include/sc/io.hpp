// Versioned JSON document formats (complexes, certificates, embeddings,
// paths) and the built-in example complexes.
#pragma once

#include <optional>

#include "sc/planner.hpp"

namespace sc {

inline constexpr const char* kFormatVersion = "sc-v1";

std::string write_complex(const Complex& k);
Complex read_complex(const std::string& text);

/// Certificates embed their base complex and reference tower vertices by
/// canonical labels, which must match a deterministic tower rebuild.
/// Round-trips are byte-exact for documents this library writes.
std::string write_certificate(const CoverCertificate& cert);
CoverCertificate read_certificate(const std::string& text,
                                  long long size_budget = kDefaultSizeBudget);

std::string write_embedding(const Embedding& e, const Complex& k);
Embedding read_embedding(const std::string& text, const Complex& k);

std::string write_path(const PLPath& path);

std::string read_text_file(const std::string& filename);
void write_text_file(const std::string& filename, const std::string& contents);

/// Built-in generators: "circle" (1-skeleton of the 2-simplex), "interval",
/// "simplex(n)" (also accepted as "simplexN"), and "torus" (the product of
/// two circles, flattened to a standalone complex).
Complex example_complex(const std::string& name);
std::optional<Embedding> example_embedding(const std::string& name);

}  // namespace sc
