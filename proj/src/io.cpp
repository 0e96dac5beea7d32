#include "nilsem/io.hpp"

#include <cctype>
#include <optional>

#include "json.hpp"

namespace nilsem {

namespace {

struct TokenReader {
  const std::string& text;
  std::size_t pos = 0;

  void skip_space() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }
  bool done() {
    skip_space();
    return pos >= text.size();
  }
  std::string word() {
    skip_space();
    std::size_t start = pos;
    while (pos < text.size() && !std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    if (start == pos) throw ParseError("expected a token", start);
    return text.substr(start, pos - start);
  }
  int integer() {
    skip_space();
    std::size_t start = pos;
    std::string w = word();
    try {
      std::size_t used = 0;
      int v = std::stoi(w, &used);
      if (used != w.size()) throw std::invalid_argument("");
      return v;
    } catch (const std::exception&) {
      throw ParseError("expected an integer, got '" + w + "'", start);
    }
  }
};

Semiring from_parts(std::optional<int> order, std::optional<int> zero,
                    std::optional<std::vector<int>>& add, std::optional<std::vector<int>>& mul,
                    const Limits& limits) {
  if (!order) throw ParseError("missing field: order", 0);
  if (!zero) throw ParseError("missing field: zero", 0);
  if (!add) throw ParseError("missing field: add", 0);
  if (!mul) throw ParseError("missing field: mul", 0);
  auto r = validate_semiring(semiring_algebra(*order, *zero, *add, *mul), *zero, limits);
  if (auto* v = std::get_if<AxiomViolation>(&r)) throw AxiomError(*v);
  return std::get<Semiring>(std::move(r));
}

Semiring parse_whitespace(const std::string& text, const Limits& limits) {
  TokenReader in{text};
  std::optional<int> order, zero;
  std::optional<std::vector<int>> add, mul;
  while (!in.done()) {
    std::size_t at = in.pos;
    std::string key = in.word();
    if (key == "order") {
      if (order) throw ParseError("duplicate field: order", at);
      order = in.integer();
      if (*order < 1) throw ParseError("order must be positive", at);
    } else if (key == "zero") {
      if (zero) throw ParseError("duplicate field: zero", at);
      zero = in.integer();
    } else if (key == "add" || key == "mul") {
      auto& slot = key == "add" ? add : mul;
      if (slot) throw ParseError("duplicate field: " + key, at);
      if (!order) throw ParseError("order must be declared before " + key, at);
      std::vector<int> cells;
      cells.reserve(static_cast<std::size_t>(*order) * *order);
      for (int i = 0; i < *order * *order; ++i) cells.push_back(in.integer());
      slot = std::move(cells);
    } else {
      throw ParseError("unknown field '" + key + "'", at);
    }
  }
  return from_parts(order, zero, add, mul, limits);
}

std::vector<int> matrix_cells(const nlohmann::json& m, int order, const char* key) {
  if (!m.is_array() || static_cast<int>(m.size()) != order)
    throw ParseError(std::string("field ") + key + " must be an order x order matrix", 0);
  std::vector<int> cells;
  for (const auto& row : m) {
    if (!row.is_array() || static_cast<int>(row.size()) != order)
      throw ParseError(std::string("field ") + key + " must be an order x order matrix", 0);
    for (const auto& v : row) {
      if (!v.is_number_integer())
        throw ParseError(std::string("field ") + key + " must contain integers", 0);
      cells.push_back(v.get<int>());
    }
  }
  return cells;
}

Semiring parse_json(const std::string& text, const Limits& limits) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what(), e.byte);
  }
  if (!j.is_object()) throw ParseError("top-level JSON value must be an object", 0);
  for (const auto& [key, value] : j.items())
    if (key != "order" && key != "zero" && key != "add" && key != "mul")
      throw ParseError("unknown field '" + key + "'", 0);
  std::optional<int> order, zero;
  std::optional<std::vector<int>> add, mul;
  if (j.contains("order")) {
    if (!j["order"].is_number_integer() || j["order"].get<int>() < 1)
      throw ParseError("order must be a positive integer", 0);
    order = j["order"].get<int>();
  }
  if (j.contains("zero")) {
    if (!j["zero"].is_number_integer()) throw ParseError("zero must be an integer", 0);
    zero = j["zero"].get<int>();
  }
  if (j.contains("add")) {
    if (!order) throw ParseError("missing field: order", 0);
    add = matrix_cells(j["add"], *order, "add");
  }
  if (j.contains("mul")) {
    if (!order) throw ParseError("missing field: order", 0);
    mul = matrix_cells(j["mul"], *order, "mul");
  }
  return from_parts(order, zero, add, mul, limits);
}

void append_matrix(std::string& out, const std::vector<int>& cells, int n) {
  for (int r = 0; r < n; ++r) {
    for (int c = 0; c < n; ++c) {
      out += c ? " " : "";
      out += std::to_string(cells[r * n + c]);
    }
    out += "\n";
  }
}

}  // namespace

Semiring parse_semiring(const std::string& text, const Limits& limits) {
  std::size_t i = 0;
  while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  if (i == text.size()) throw ParseError("empty input", 0);
  if (text[i] == '{') return parse_json(text, limits);
  return parse_whitespace(text, limits);
}

std::string emit_semiring(const Semiring& s) {
  std::string out;
  out += "order " + std::to_string(s.order()) + "\n";
  out += "zero " + std::to_string(s.zero()) + "\n";
  out += "add\n";
  append_matrix(out, s.add_table(), s.order());
  out += "mul\n";
  append_matrix(out, s.mul_table(), s.order());
  return out;
}

std::string emit_semiring_json(const Semiring& s) {
  nlohmann::ordered_json j;
  j["order"] = s.order();
  j["zero"] = s.zero();
  auto rows = [&](const std::vector<int>& cells) {
    nlohmann::ordered_json m = nlohmann::ordered_json::array();
    for (int r = 0; r < s.order(); ++r) {
      nlohmann::ordered_json row = nlohmann::ordered_json::array();
      for (int c = 0; c < s.order(); ++c) row.push_back(cells[r * s.order() + c]);
      m.push_back(row);
    }
    return m;
  };
  j["add"] = rows(s.add_table());
  j["mul"] = rows(s.mul_table());
  return j.dump();
}

}  // namespace nilsem
