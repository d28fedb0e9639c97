#include "tabqa/table.hpp"

#include <algorithm>
#include <cctype>
#include <set>

namespace tabqa {

Value Value::str(std::string s) {
  if (s.empty() || s.size() > 20) {
    throw ContractError("string value must have 1-20 chars: '" + s + "'");
  }
  for (char c : s) {
    if (std::isspace(static_cast<unsigned char>(c))) {
      throw ContractError("string value contains whitespace: '" + s + "'");
    }
    if (std::isupper(static_cast<unsigned char>(c))) {
      throw ContractError("string value must be lower-case: '" + s + "'");
    }
  }
  return Value(std::move(s));
}

std::string Value::token() const {
  return is_num() ? std::to_string(as_num()) : as_str();
}

Value Value::from_token(const std::string& tok) {
  if (tok.empty()) return Value(std::string(tok));
  size_t start = tok[0] == '-' ? 1 : 0;
  if (start == tok.size()) return Value(std::string(tok));
  for (size_t i = start; i < tok.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(tok[i]))) {
      return Value(std::string(tok));
    }
  }
  // All digits; reject overflow by length (int64 max has 19 digits).
  if (tok.size() - start > 18) return Value(std::string(tok));
  return Value(static_cast<int64_t>(std::stoll(tok)));
}

RowSet RowSet::all(int n_rows) {
  RowSet s;
  s.mask_ = static_cast<uint16_t>((1u << n_rows) - 1u);
  return s;
}

RowSet RowSet::single(int row) {
  RowSet s;
  s.add(row);
  return s;
}

void RowSet::add(int row) {
  if (row < 0 || row >= kTableRows) {
    throw ContractError("row index out of range: " + std::to_string(row));
  }
  mask_ |= static_cast<uint16_t>(1u << row);
}

int RowSet::size() const { return __builtin_popcount(mask_); }

std::vector<int> RowSet::indices() const {
  std::vector<int> out;
  for (int i = 0; i < kTableRows; ++i) {
    if (contains(i)) out.push_back(i);
  }
  return out;
}

int RowSet::sole() const {
  if (size() != 1) throw ContractError("RowSet::sole on non-singleton set");
  return __builtin_ctz(mask_);
}

Table::Table(std::vector<std::string> field_names,
             std::vector<std::vector<Value>> rows)
    : field_names_(std::move(field_names)), rows_(std::move(rows)) {
  if (static_cast<int>(field_names_.size()) != kTableFields) {
    throw ContractError("table must have exactly 10 fields, got " +
                        std::to_string(field_names_.size()));
  }
  if (static_cast<int>(rows_.size()) != kTableRows) {
    throw ContractError("table must have exactly 10 rows, got " +
                        std::to_string(rows_.size()));
  }
  for (const auto& r : rows_) {
    if (static_cast<int>(r.size()) != kTableFields) {
      throw ContractError("every row must have exactly 10 cells");
    }
  }
  {
    std::set<std::string> names(field_names_.begin(), field_names_.end());
    if (static_cast<int>(names.size()) != kTableFields) {
      throw ContractError("field names must be pairwise distinct");
    }
  }
  for (int f = 0; f < kTableFields; ++f) {
    bool num = rows_[0][f].is_num();
    for (int r = 1; r < kTableRows; ++r) {
      if (rows_[r][f].is_num() != num) {
        throw ContractError("column '" + field_names_[f] +
                            "' mixes numeric and string cells");
      }
    }
    if (num) {
      std::set<int64_t> seen;
      for (int r = 0; r < kTableRows; ++r) {
        if (!seen.insert(rows_[r][f].as_num()).second) {
          throw ContractError("numeric column '" + field_names_[f] +
                              "' has repeated value " +
                              std::to_string(rows_[r][f].as_num()));
        }
      }
      numeric_fields_.push_back(f);
    }
  }
}

const Value& Table::cell_at(int row, int field) const {
  if (row < 0 || row >= kTableRows || field < 0 || field >= kTableFields) {
    throw ContractError("cell_at(" + std::to_string(row) + "," +
                        std::to_string(field) + ") out of range");
  }
  return rows_[row][field];
}

std::vector<Value> Table::column_values(int field) const {
  if (field < 0 || field >= kTableFields) {
    throw ContractError("column_values: field out of range");
  }
  std::vector<Value> out;
  out.reserve(kTableRows);
  for (int r = 0; r < kTableRows; ++r) out.push_back(rows_[r][field]);
  return out;
}

bool Table::field_is_numeric(int field) const {
  if (field < 0 || field >= kTableFields) {
    throw ContractError("field_is_numeric: field out of range");
  }
  return rows_[0][field].is_num();
}

int Table::field_index(const std::string& name) const {
  for (int f = 0; f < kTableFields; ++f) {
    if (field_names_[f] == name) return f;
  }
  return -1;
}

std::optional<Value> find_query_value(const Table& table, int field,
                                      const std::vector<std::string>& tokens) {
  if (field < 0 || field >= kTableFields) {
    throw ContractError("find_query_value: field out of range");
  }
  bool numeric = table.field_is_numeric(field);
  for (const auto& tok : tokens) {
    Value v = Value::from_token(tok);
    if (v.is_num() != numeric) continue;
    for (int r = 0; r < kTableRows; ++r) {
      if (table.cell_at(r, field) == v) return v;
    }
  }
  return std::nullopt;
}

}  // namespace tabqa
