#include "hadaq/io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace hadaq {

namespace {

using nlohmann::json;

// Recursive descent over the spec grammar. `pos` advances past the parsed
// spec; kron operands cannot be file paths (a path may contain 'x').
struct SpecParser {
  const std::string& text;
  size_t pos = 0;

  bool consume(const std::string& token) {
    if (text.compare(pos, token.size(), token) == 0) {
      pos += token.size();
      return true;
    }
    return false;
  }

  int parse_int() {
    size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (start == pos) throw usage_error("expected an integer in matrix spec at position " +
                                        std::to_string(start));
    return std::stoi(text.substr(start, pos - start));
  }
};

i64 spec_order_rec(SpecParser& p) {
  if (p.consume("sylvester:")) return i64(1) << p.parse_int();
  if (p.consume("kron:")) {
    i64 a = spec_order_rec(p);
    if (!p.consume("x")) throw usage_error("kron spec needs '<a>x<b>'");
    i64 b = spec_order_rec(p);
    return a * b;
  }
  throw usage_error("cannot determine order of matrix spec without reading the file");
}

HadamardMatrix parse_spec_rec(SpecParser& p, const SizeLimits& limits, bool allow_path) {
  if (p.consume("sylvester:")) return HadamardMatrix::sylvester(p.parse_int(), limits);
  if (p.consume("kron:")) {
    HadamardMatrix a = parse_spec_rec(p, limits, false);
    if (!p.consume("x")) throw usage_error("kron spec needs '<a>x<b>'");
    HadamardMatrix b = parse_spec_rec(p, limits, false);
    return HadamardMatrix::kronecker(a, b, limits);
  }
  if (!allow_path)
    throw usage_error("kron operands must be sylvester:<k> or kron:<a>x<b> specs");
  std::string path = p.text.substr(p.pos);
  p.pos = p.text.size();
  return HadamardMatrix::validate(read_matrix_rows_file(path), limits);
}

std::vector<Vec> parse_vectors_json(const std::string& text) {
  json j = json::parse(text);
  if (!j.is_array()) throw usage_error("vector JSON must be an array");
  std::vector<Vec> out;
  if (!j.empty() && j.front().is_array()) {
    for (const auto& row : j) {
      Vec v;
      for (const auto& e : row) v.push_back(e.get<i64>());
      out.push_back(std::move(v));
    }
  } else {
    Vec v;
    for (const auto& e : j) v.push_back(e.get<i64>());
    out.push_back(std::move(v));
  }
  return out;
}

Vec json_to_vec(const json& j, size_t expect, const char* name) {
  if (!j.is_array() || j.size() != expect)
    throw usage_error(std::string("bank field '") + name + "' must be an array of length " +
                      std::to_string(expect));
  Vec v;
  for (const auto& e : j) v.push_back(e.get<i64>());
  return v;
}

}  // namespace

HadamardMatrix parse_matrix_spec(const std::string& spec, const SizeLimits& limits) {
  SpecParser p{spec};
  HadamardMatrix h = parse_spec_rec(p, limits, true);
  if (p.pos != spec.size()) throw usage_error("trailing characters in matrix spec: '" +
                                              spec.substr(p.pos) + "'");
  return h;
}

i64 matrix_spec_order(const std::string& spec) {
  SpecParser p{spec};
  i64 n = spec_order_rec(p);
  if (p.pos != spec.size()) throw usage_error("trailing characters in matrix spec");
  return n;
}

std::vector<Vec> read_vectors(std::istream& in) {
  std::string content((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  size_t first = content.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) throw usage_error("empty vector input");
  if (content[first] == '[') return parse_vectors_json(content);
  std::vector<Vec> out;
  std::istringstream lines(content);
  std::string line;
  while (std::getline(lines, line)) {
    std::istringstream ls(line);
    Vec v;
    i64 value;
    while (ls >> value) v.push_back(value);
    if (!ls.eof()) throw usage_error("non-integer token in vector input: '" + line + "'");
    if (!v.empty()) out.push_back(std::move(v));
  }
  if (out.empty()) throw usage_error("empty vector input");
  return out;
}

std::vector<Vec> read_vectors_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw usage_error("cannot open vector file '" + path + "'");
  return read_vectors(in);
}

std::vector<Vec> read_matrix_rows_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw usage_error("cannot open matrix file '" + path + "'");
  std::vector<Vec> rows;
  std::string line;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    Vec v;
    i64 value;
    while (ls >> value) v.push_back(value);
    if (!ls.eof()) throw usage_error("non-integer token in matrix file: '" + line + "'");
    if (!v.empty()) rows.push_back(std::move(v));
  }
  if (rows.empty()) throw usage_error("empty matrix file '" + path + "'");
  return rows;
}

QuantizerBank bank_from_json_text(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw usage_error(std::string("bank JSON parse error: ") + e.what());
  }
  if (!j.is_object() || !j.contains("n")) throw usage_error("bank JSON needs an object with 'n'");
  const int n = j.at("n").get<int>();
  if (n < 1) throw usage_error("bank size must be positive");
  if (j.contains("uniform")) {
    const json& u = j.at("uniform");
    return QuantizerBank::uniform(n, u.at("Delta").get<i64>(), u.at("Gamma").get<i64>(),
                                  u.at("delta").get<i64>(), u.at("gamma").get<i64>());
  }
  return QuantizerBank(json_to_vec(j.at("Delta"), static_cast<size_t>(n), "Delta"),
                       json_to_vec(j.at("Gamma"), static_cast<size_t>(n), "Gamma"),
                       json_to_vec(j.at("delta"), static_cast<size_t>(n), "delta"),
                       json_to_vec(j.at("gamma"), static_cast<size_t>(n), "gamma"));
}

QuantizerBank parse_bank(const std::string& inline_json_or_path) {
  size_t first = inline_json_or_path.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && inline_json_or_path[first] == '{')
    return bank_from_json_text(inline_json_or_path);
  std::ifstream in(inline_json_or_path);
  if (!in) throw usage_error("cannot open bank file '" + inline_json_or_path + "'");
  std::string content((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  return bank_from_json_text(content);
}

std::string bank_to_json_text(const QuantizerBank& bank) {
  json j;
  j["n"] = bank.size();
  j["Delta"] = bank.step;
  j["Gamma"] = bank.recon;
  j["delta"] = bank.dead_off;
  j["gamma"] = bank.recon_off;
  return j.dump();
}

}  // namespace hadaq
