#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "hadaq/hadamard.hpp"
#include "hadaq/quantizer.hpp"

namespace hadaq {

// Matrix spec grammar: "sylvester:<k>" | "kron:<spec>x<spec>" | file path.
// Kronecker operands must themselves be sylvester or kron specs; a file of
// whitespace-separated ±1 rows covers everything else.
HadamardMatrix parse_matrix_spec(const std::string& spec, const SizeLimits& limits = {});

// Order of the matrix a spec would produce, without building it.
i64 matrix_spec_order(const std::string& spec);

// Vectors: a JSON array (one vector), a JSON array of arrays (batch), or
// whitespace-separated integers with one vector per nonempty line.
std::vector<Vec> read_vectors(std::istream& in);
std::vector<Vec> read_vectors_file(const std::string& path);

// Bank format: {"n":…, "delta":[…], "Delta":[…], "gamma":[…], "Gamma":[…]}
// or {"n":…, "uniform":{"Delta":…, "Gamma":…, "delta":…, "gamma":…}}.
// Accepts inline JSON (starts with '{') or a file path.
QuantizerBank parse_bank(const std::string& inline_json_or_path);
QuantizerBank bank_from_json_text(const std::string& text);
std::string bank_to_json_text(const QuantizerBank& bank);

std::vector<Vec> read_matrix_rows_file(const std::string& path);

}  // namespace hadaq
