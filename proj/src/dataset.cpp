#include "tabqa/dataset.hpp"

#include <filesystem>
#include <fstream>

#include <json.hpp>

namespace tabqa {

using ordered_json = nlohmann::ordered_json;

namespace {

const char* kTypeNames[kQueryTypes] = {"SelectWhere", "Superlative",
                                       "WhereSuperlative", "NestQuery"};

ordered_json value_to_json(const Value& v) {
  if (v.is_num()) return ordered_json(v.as_num());
  return ordered_json(v.as_str());
}

Value value_from_json(const ordered_json& j) {
  if (j.is_number_integer()) return Value::num(j.get<int64_t>());
  if (j.is_string()) return Value::str(j.get<std::string>());
  throw DataError("cell must be an integer or a string");
}

ordered_json table_to_json_obj(const Table& table) {
  ordered_json j;
  j["fields"] = table.field_names();
  ordered_json rows = ordered_json::array();
  for (int r = 0; r < kTableRows; ++r) {
    ordered_json row = ordered_json::array();
    for (int f = 0; f < kTableFields; ++f) {
      row.push_back(value_to_json(table.cell_at(r, f)));
    }
    rows.push_back(std::move(row));
  }
  j["rows"] = std::move(rows);
  return j;
}

Table table_from_json_obj(const ordered_json& j) {
  std::vector<std::string> fields = j.at("fields").get<std::vector<std::string>>();
  std::vector<std::vector<Value>> rows;
  for (const auto& jrow : j.at("rows")) {
    std::vector<Value> row;
    for (const auto& jcell : jrow) row.push_back(value_from_json(jcell));
    rows.push_back(std::move(row));
  }
  return Table(std::move(fields), std::move(rows));
}

}  // namespace

const char* query_type_name(QueryType t) { return kTypeNames[static_cast<int>(t)]; }

QueryType query_type_from_name(const std::string& name) {
  for (int i = 0; i < kQueryTypes; ++i) {
    if (name == kTypeNames[i]) return static_cast<QueryType>(i);
  }
  throw DataError("unknown query type '" + name + "'");
}

int gold_program_length(QueryType t) {
  switch (t) {
    case QueryType::kSelectWhere: return 2;
    case QueryType::kSuperlative: return 2;
    case QueryType::kWhereSuperlative: return 3;
    case QueryType::kNestQuery: return 4;
  }
  return 0;
}

Table QuerySample::dummy_table() {
  std::vector<std::string> names;
  std::vector<std::vector<Value>> rows(kTableRows, std::vector<Value>(kTableFields));
  for (int f = 0; f < kTableFields; ++f) {
    names.push_back("f" + std::to_string(f));
    for (int r = 0; r < kTableRows; ++r) rows[r][f] = Value::num(r * 100 + f);
  }
  return Table(std::move(names), std::move(rows));
}

std::string table_to_json(const Table& table) {
  return table_to_json_obj(table).dump();
}

Table table_from_json(const std::string& json_text) {
  return table_from_json_obj(ordered_json::parse(json_text));
}

std::string sample_to_jsonl_line(const QuerySample& sample) {
  ordered_json j;
  j["id"] = sample.id;
  j["type"] = query_type_name(sample.query_type);
  j["tokens"] = sample.tokens;
  j["table"] = table_to_json_obj(sample.table);
  ordered_json prog = ordered_json::array();
  for (const auto& a : sample.gold_program.actions) {
    prog.push_back(ordered_json::array({operator_name(a.op), a.field}));
  }
  j["gold_program"] = std::move(prog);
  j["denotation"] = sample.denotation.has() ? value_to_json(*sample.denotation.value)
                                            : ordered_json(nullptr);
  return j.dump();
}

QuerySample sample_from_jsonl_line(const std::string& line) {
  ordered_json j = ordered_json::parse(line);
  QuerySample s;
  s.id = j.at("id").get<std::string>();
  s.query_type = query_type_from_name(j.at("type").get<std::string>());
  s.tokens = j.at("tokens").get<std::vector<std::string>>();
  s.table = table_from_json_obj(j.at("table"));
  for (const auto& ja : j.at("gold_program")) {
    Action a;
    a.op = operator_from_name(ja.at(0).get<std::string>());
    a.field = ja.at(1).get<int>();
    s.gold_program.actions.push_back(a);
  }
  s.gold_program.validate();
  const auto& jd = j.at("denotation");
  s.denotation = jd.is_null() ? Denotation::none() : Denotation::of(value_from_json(jd));
  return s;
}

void write_jsonl(const std::vector<QuerySample>& samples, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw DataError("cannot open for writing: " + path);
  for (const auto& s : samples) out << sample_to_jsonl_line(s) << "\n";
  if (!out) throw DataError("write failed: " + path);
}

std::vector<QuerySample> read_jsonl(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("cannot open: " + path);
  std::vector<QuerySample> out;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    try {
      out.push_back(sample_from_jsonl_line(line));
    } catch (const std::exception& e) {
      throw DataError(path + ":" + std::to_string(line_no) +
                      ": malformed sample line: " + e.what());
    }
  }
  return out;
}

void write_split(const DatasetSplit& split, const std::string& dir) {
  std::filesystem::create_directories(dir);
  write_jsonl(split.train, dir + "/train.jsonl");
  write_jsonl(split.valid, dir + "/valid.jsonl");
  write_jsonl(split.test, dir + "/test.jsonl");
}

DatasetSplit read_split(const std::string& dir) {
  DatasetSplit s;
  s.train = read_jsonl(dir + "/train.jsonl");
  s.valid = read_jsonl(dir + "/valid.jsonl");
  s.test = read_jsonl(dir + "/test.jsonl");
  return s;
}

}  // namespace tabqa
