#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace tabqa {

// Raised when a caller breaks a documented precondition or an input violates
// a structural invariant.
class ContractError : public std::runtime_error {
 public:
  explicit ContractError(const std::string& what) : std::runtime_error(what) {}
};

class DataError : public std::runtime_error {
 public:
  explicit DataError(const std::string& what) : std::runtime_error(what) {}
};

// A cell value: 64-bit integer or a short lower-case token.
class Value {
 public:
  Value() : v_(int64_t{0}) {}
  static Value num(int64_t n) { return Value(n); }
  static Value str(std::string s);

  bool is_num() const { return std::holds_alternative<int64_t>(v_); }
  bool is_str() const { return !is_num(); }
  int64_t as_num() const { return std::get<int64_t>(v_); }
  const std::string& as_str() const { return std::get<std::string>(v_); }

  bool operator==(const Value& o) const { return v_ == o.v_; }
  bool operator!=(const Value& o) const { return !(*this == o); }

  // Token form as it would appear in a query (decimal digits for numbers).
  std::string token() const;

  // Parses a query token: integer if it is all digits (optional leading '-'),
  // otherwise the token itself as a string value.
  static Value from_token(const std::string& tok);

 private:
  explicit Value(int64_t n) : v_(n) {}
  explicit Value(std::string s) : v_(std::move(s)) {}
  std::variant<int64_t, std::string> v_;
};

constexpr int kTableRows = 10;
constexpr int kTableFields = 10;

// Ordered set of row indices, backed by a bitmask (rows are always < 10).
class RowSet {
 public:
  RowSet() : mask_(0) {}
  static RowSet all(int n_rows);
  static RowSet single(int row);

  void add(int row);
  bool contains(int row) const { return (mask_ >> row) & 1u; }
  int size() const;
  bool empty() const { return mask_ == 0; }
  // Ascending row indices.
  std::vector<int> indices() const;
  // The only element; caller must ensure size()==1.
  int sole() const;

  bool operator==(const RowSet& o) const { return mask_ == o.mask_; }

 private:
  uint16_t mask_;
};

// Final answer of executing a program; empty only on failed execution.
struct Denotation {
  std::optional<Value> value;

  static Denotation none() { return Denotation{}; }
  static Denotation of(Value v) { return Denotation{std::move(v)}; }
  bool has() const { return value.has_value(); }
  bool operator==(const Denotation& o) const { return value == o.value; }
  bool operator!=(const Denotation& o) const { return !(*this == o); }
};

// A 10x10 knowledge base: named fields over homogeneous columns.
// Immutable after construction; construction validates every invariant.
class Table {
 public:
  Table(std::vector<std::string> field_names,
        std::vector<std::vector<Value>> rows);

  const std::vector<std::string>& field_names() const { return field_names_; }
  const Value& cell_at(int row, int field) const;
  std::vector<Value> column_values(int field) const;
  bool field_is_numeric(int field) const;
  const std::vector<int>& numeric_fields() const { return numeric_fields_; }
  int field_index(const std::string& name) const;  // -1 if absent

  bool operator==(const Table& o) const {
    return field_names_ == o.field_names_ && rows_ == o.rows_;
  }

 private:
  std::vector<std::string> field_names_;
  std::vector<std::vector<Value>> rows_;
  std::vector<int> numeric_fields_;
};

// First query token (left to right) that, parsed as a value, equals some cell
// of the given column. nullopt when nothing matches.
std::optional<Value> find_query_value(const Table& table, int field,
                                      const std::vector<std::string>& tokens);

}  // namespace tabqa
