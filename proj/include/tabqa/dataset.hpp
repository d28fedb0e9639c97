#pragma once

#include <string>
#include <vector>

#include "tabqa/symexec.hpp"
#include "tabqa/table.hpp"

namespace tabqa {

enum class QueryType : int {
  kSelectWhere = 0,
  kSuperlative = 1,
  kWhereSuperlative = 2,
  kNestQuery = 3,
};

constexpr int kQueryTypes = 4;

const char* query_type_name(QueryType t);
QueryType query_type_from_name(const std::string& name);

// Gold program length (EOE excluded) per query family.
int gold_program_length(QueryType t);

struct QuerySample {
  std::string id;
  QueryType query_type = QueryType::kSelectWhere;
  std::vector<std::string> tokens;
  Table table;
  Program gold_program;
  Denotation denotation;

  QuerySample() : table(dummy_table()) {}

  // Placeholder used before deserialization fills the real table.
  static Table dummy_table();
};

struct DatasetSplit {
  std::vector<QuerySample> train;
  std::vector<QuerySample> valid;
  std::vector<QuerySample> test;
};

// JSON object form of a table: {"fields": [...], "rows": [[...] x10]}.
std::string table_to_json(const Table& table);
Table table_from_json(const std::string& json_text);

std::string sample_to_jsonl_line(const QuerySample& sample);
QuerySample sample_from_jsonl_line(const std::string& line);

// One sample per line, stable field order. Read errors carry line numbers.
void write_jsonl(const std::vector<QuerySample>& samples, const std::string& path);
std::vector<QuerySample> read_jsonl(const std::string& path);

void write_split(const DatasetSplit& split, const std::string& dir);
DatasetSplit read_split(const std::string& dir);

}  // namespace tabqa
