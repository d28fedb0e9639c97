#include "tabqa/datagen.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "tabqa/parallel.hpp"

namespace tabqa {

namespace {

const char* kMaxWords[] = {"largest", "biggest", "highest"};
const char* kMinWords[] = {"smallest", "lowest"};
const char* kGtWords[] = {"greater", "bigger", "larger"};
const char* kLtWords[] = {"less", "smaller", "lower"};

// {f1}..{f4}: field names; {v}: value literal; {sup}: superlative word;
// {cmp}: comparative word.
const char* kSelectWhereTemplates[] = {
    "what is the {f1} of the game whose {f2} is {v}",
    "find the {f1} of the row whose {f2} equals {v}",
    "tell me the {f1} for the game with {f2} {v}",
    "show the {f1} of the game that has {f2} {v}",
    "which {f1} belongs to the game whose {f2} is {v}",
};

const char* kSuperlativeTemplates[] = {
    "what is the {f1} of the game with the {sup} {f2}",
    "find the {f1} of the row with the {sup} {f2}",
    "tell me the {f1} of the game whose {f2} is the {sup}",
    "which {f1} does the game with the {sup} {f2} have",
};
// Only meaningful when the answer field is a duration.
const char* kSuperlativeDurationTemplate =
    "how long is the game with the {sup} {f2}";

const char* kWhereSuperlativeTemplates[] = {
    "among the games whose {f2} is {cmp} than {v} what is the {f1} of the one "
    "with the {sup} {f3}",
    "for games with {f2} {cmp} than {v} find the {f1} of the row with the "
    "{sup} {f3}",
    "considering games whose {f2} is {cmp} than {v} tell me the {f1} of the "
    "game with the {sup} {f3}",
    "what is the {f1} of the game with the {sup} {f3} among those whose {f2} "
    "is {cmp} than {v}",
};

const char* kNestQueryTemplates[] = {
    "what is the {f1} of the game with the {sup} {f4} among games whose {f3} "
    "is {cmp} than that of the game whose {f2} is {v}",
    "find the {f1} of the row with the {sup} {f4} whose {f3} is {cmp} than "
    "the game with {f2} {v}",
    "tell me the {f1} of the game having the {sup} {f4} and {f3} {cmp} than "
    "that of the game whose {f2} is {v}",
    "among games whose {f3} is {cmp} than the one whose {f2} is {v} what is "
    "the {f1} of the game with the {sup} {f4}",
};

struct Slots {
  std::string f1, f2, f3, f4, v, sup, cmp;
};

std::vector<std::string> split_words(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream is(text);
  std::string w;
  while (is >> w) out.push_back(w);
  return out;
}

std::vector<std::string> realize(const char* tmpl, const Slots& s) {
  std::vector<std::string> out;
  for (auto& w : split_words(tmpl)) {
    if (w == "{f1}") out.push_back(s.f1);
    else if (w == "{f2}") out.push_back(s.f2);
    else if (w == "{f3}") out.push_back(s.f3);
    else if (w == "{f4}") out.push_back(s.f4);
    else if (w == "{v}") out.push_back(s.v);
    else if (w == "{sup}") out.push_back(s.sup);
    else if (w == "{cmp}") out.push_back(s.cmp);
    else out.push_back(w);
  }
  return out;
}

template <size_t N>
const char* pick(Rng& rng, const char* (&arr)[N]) {
  return arr[rng.index(static_cast<int>(N))];
}

bool value_unique_in_column(const Table& table, int field, const Value& v) {
  int count = 0;
  for (int r = 0; r < kTableRows; ++r) {
    if (table.cell_at(r, field) == v) ++count;
  }
  return count == 1;
}

// Distinct field indices for the roles a family needs. `numeric_roles` marks
// which picks must come from numeric columns.
std::vector<int> pick_fields(Rng& rng, const Table& table, int count,
                             const std::vector<bool>& numeric_roles) {
  std::vector<int> chosen;
  for (int k = 0; k < count; ++k) {
    std::vector<int> candidates;
    for (int f = 0; f < kTableFields; ++f) {
      if (numeric_roles[k] && !table.field_is_numeric(f)) continue;
      if (std::find(chosen.begin(), chosen.end(), f) != chosen.end()) continue;
      candidates.push_back(f);
    }
    if (candidates.empty()) throw DataError("not enough fields for query roles");
    chosen.push_back(candidates[rng.index(static_cast<int>(candidates.size()))]);
  }
  return chosen;
}

QuerySample try_gen_query(Rng& rng, const Table& table, QueryType qtype) {
  QuerySample sample;
  sample.table = table;
  sample.query_type = qtype;
  Slots slots;
  const auto& names = table.field_names();

  switch (qtype) {
    case QueryType::kSelectWhere: {
      auto fs = pick_fields(rng, table, 2, {false, false});
      int f1 = fs[0], f2 = fs[1];
      int row = rng.index(kTableRows);
      Value v = table.cell_at(row, f2);
      if (!value_unique_in_column(table, f2, v)) throw DataError("ambiguous value");
      slots.f1 = names[f1];
      slots.f2 = names[f2];
      slots.v = v.token();
      sample.tokens = realize(pick(rng, kSelectWhereTemplates), slots);
      sample.gold_program.actions = {{Operator::kSelectRow, f2},
                                     {Operator::kSelectValue, f1}};
      break;
    }
    case QueryType::kSuperlative: {
      auto fs = pick_fields(rng, table, 2, {false, true});
      int f1 = fs[0], f2 = fs[1];
      bool use_max = rng.coin();
      slots.f1 = names[f1];
      slots.f2 = names[f2];
      slots.sup = use_max ? pick(rng, kMaxWords) : pick(rng, kMinWords);
      const char* tmpl;
      if (names[f1] == "duration" && rng.index(5) == 0) {
        tmpl = kSuperlativeDurationTemplate;
      } else {
        tmpl = pick(rng, kSuperlativeTemplates);
      }
      sample.tokens = realize(tmpl, slots);
      sample.gold_program.actions = {
          {use_max ? Operator::kArgmax : Operator::kArgmin, f2},
          {Operator::kSelectValue, f1}};
      break;
    }
    case QueryType::kWhereSuperlative: {
      auto fs = pick_fields(rng, table, 3, {false, true, true});
      int f1 = fs[0], f2 = fs[1], f3 = fs[2];
      bool greater = rng.coin();
      bool use_max = rng.coin();
      // Threshold literal comes from the compared column itself; avoid the
      // extreme so at least one row survives the comparison.
      auto col = table.column_values(f2);
      std::vector<int64_t> nums;
      for (auto& v : col) nums.push_back(v.as_num());
      int64_t edge = greater ? *std::max_element(nums.begin(), nums.end())
                             : *std::min_element(nums.begin(), nums.end());
      std::vector<int64_t> pool;
      for (int64_t n : nums) {
        if (n != edge) pool.push_back(n);
      }
      int64_t threshold = pool[rng.index(static_cast<int>(pool.size()))];
      slots.f1 = names[f1];
      slots.f2 = names[f2];
      slots.f3 = names[f3];
      slots.v = std::to_string(threshold);
      slots.cmp = greater ? pick(rng, kGtWords) : pick(rng, kLtWords);
      slots.sup = use_max ? pick(rng, kMaxWords) : pick(rng, kMinWords);
      sample.tokens = realize(pick(rng, kWhereSuperlativeTemplates), slots);
      sample.gold_program.actions = {
          {greater ? Operator::kGreaterThan : Operator::kLessThan, f2},
          {use_max ? Operator::kArgmax : Operator::kArgmin, f3},
          {Operator::kSelectValue, f1}};
      break;
    }
    case QueryType::kNestQuery: {
      auto fs = pick_fields(rng, table, 4, {false, false, true, true});
      int f1 = fs[0], f2 = fs[1], f3 = fs[2], f4 = fs[3];
      int row = rng.index(kTableRows);
      Value v = table.cell_at(row, f2);
      if (!value_unique_in_column(table, f2, v)) throw DataError("ambiguous value");
      bool greater = rng.coin();
      bool use_max = rng.coin();
      slots.f1 = names[f1];
      slots.f2 = names[f2];
      slots.f3 = names[f3];
      slots.f4 = names[f4];
      slots.v = v.token();
      slots.cmp = greater ? pick(rng, kGtWords) : pick(rng, kLtWords);
      slots.sup = use_max ? pick(rng, kMaxWords) : pick(rng, kMinWords);
      sample.tokens = realize(pick(rng, kNestQueryTemplates), slots);
      sample.gold_program.actions = {
          {Operator::kSelectRow, f2},
          {greater ? Operator::kGreaterThan : Operator::kLessThan, f3},
          {use_max ? Operator::kArgmax : Operator::kArgmin, f4},
          {Operator::kSelectValue, f1}};
      break;
    }
  }

  sample.gold_program.validate();
  ExecResult result = execute(sample.gold_program, table, sample.tokens);
  if (!result.denotation.has()) {
    throw DataError("empty intermediate row set");  // caller retries
  }
  sample.denotation = result.denotation;
  return sample;
}

}  // namespace

const Schema& Schema::default_pool() {
  static const Schema pool = {
      {"year", "duration", "area", "gdp", "population", "medals", "athletes",
       "budget"},
      {"city", "country", "continent", "mascot", "sport", "stadium"}};
  return pool;
}

const std::vector<std::string>& cell_lexicon() {
  static const std::vector<std::string> lexicon = [] {
    // Synthetic proper-noun-like tokens from a fixed internal seed: CVCV(CV)
    // syllables, no digits, so they never collide with numbers or templates.
    static const char* consonants = "bdfgklmnprstvz";
    static const char* vowels = "aeiou";
    std::set<std::string> reserved;
    for (auto& w : template_words()) reserved.insert(w);
    for (auto& w : Schema::default_pool().numeric_names) reserved.insert(w);
    for (auto& w : Schema::default_pool().string_names) reserved.insert(w);
    Rng rng(0x5eed1e51c0ull);
    std::set<std::string> seen;
    std::vector<std::string> out;
    while (static_cast<int>(out.size()) < 200) {
      int syllables = 2 + rng.index(2);
      std::string w;
      for (int s = 0; s < syllables; ++s) {
        w += consonants[rng.index(14)];
        w += vowels[rng.index(5)];
      }
      if (reserved.count(w) || !seen.insert(w).second) continue;
      out.push_back(w);
    }
    return out;
  }();
  return lexicon;
}

const std::vector<std::string>& template_words() {
  static const std::vector<std::string> words = [] {
    std::set<std::string> set;
    auto absorb = [&set](const char* tmpl) {
      for (auto& w : split_words(tmpl)) {
        if (w.front() != '{') set.insert(w);
      }
    };
    for (auto* t : kSelectWhereTemplates) absorb(t);
    for (auto* t : kSuperlativeTemplates) absorb(t);
    absorb(kSuperlativeDurationTemplate);
    for (auto* t : kWhereSuperlativeTemplates) absorb(t);
    for (auto* t : kNestQueryTemplates) absorb(t);
    for (auto* w : kMaxWords) set.insert(w);
    for (auto* w : kMinWords) set.insert(w);
    for (auto* w : kGtWords) set.insert(w);
    for (auto* w : kLtWords) set.insert(w);
    return std::vector<std::string>(set.begin(), set.end());
  }();
  return words;
}

Table gen_table(Rng& rng, const Schema& schema, int numeric_fields) {
  int string_fields = kTableFields - numeric_fields;
  if (static_cast<int>(schema.numeric_names.size()) < numeric_fields ||
      static_cast<int>(schema.string_names.size()) < string_fields) {
    throw DataError("schema pool too small for requested field mix");
  }

  auto sample_names = [&rng](const std::vector<std::string>& pool, int n) {
    std::vector<std::string> copy = pool;
    rng.shuffle(copy);
    copy.resize(n);
    return copy;
  };
  auto numeric = sample_names(schema.numeric_names, numeric_fields);
  auto strings = sample_names(schema.string_names, string_fields);

  struct FieldSpec {
    std::string name;
    bool is_numeric;
  };
  std::vector<FieldSpec> specs;
  for (auto& n : numeric) specs.push_back({n, true});
  for (auto& n : strings) specs.push_back({n, false});
  rng.shuffle(specs);

  const auto& lexicon = cell_lexicon();
  std::vector<std::string> names;
  std::vector<std::vector<Value>> rows(kTableRows, std::vector<Value>(kTableFields));
  for (int f = 0; f < kTableFields; ++f) {
    names.push_back(specs[f].name);
    if (specs[f].is_numeric) {
      std::set<int64_t> drawn;
      for (int r = 0; r < kTableRows; ++r) {
        int64_t v;
        do {
          v = kValueMin + static_cast<int64_t>(rng.below(kValueMax - kValueMin + 1));
        } while (!drawn.insert(v).second);
        rows[r][f] = Value::num(v);
      }
    } else {
      for (int r = 0; r < kTableRows; ++r) {
        rows[r][f] = Value::str(lexicon[rng.index(static_cast<int>(lexicon.size()))]);
      }
    }
  }
  return Table(std::move(names), std::move(rows));
}

QuerySample gen_query(Rng& rng, const Table& table, QueryType qtype,
                      int max_retries) {
  for (int attempt = 0; attempt < max_retries; ++attempt) {
    try {
      return try_gen_query(rng, table, qtype);
    } catch (const DataError&) {
      continue;
    }
  }
  throw DataError(std::string("gen_query: no valid configuration for ") +
                  query_type_name(qtype) + " after " +
                  std::to_string(max_retries) + " retries");
}

DatasetSplit gen_split(const GenConfig& config, int train_size, int valid_size,
                       int test_size) {
  DatasetSplit split;
  split.train.resize(train_size);
  split.valid.resize(valid_size);
  split.test.resize(test_size);

  struct Part {
    std::vector<QuerySample>* samples;
    const char* name;
    int base;
  };
  Part parts[3] = {{&split.train, "train", 0},
                   {&split.valid, "valid", train_size},
                   {&split.test, "test", train_size + valid_size}};

  Rng master(config.seed);
  for (auto& part : parts) {
    int n = static_cast<int>(part.samples->size());
    parallel_chunks(n, config.jobs, [&](int begin, int end, int) {
      for (int i = begin; i < end; ++i) {
        // Per-sample stream keyed by global index: parallel == serial output.
        Rng rng = master.fork(static_cast<uint64_t>(part.base + i));
        QueryType qtype = static_cast<QueryType>(i % kQueryTypes);
        QuerySample sample;
        bool done = false;
        for (int t = 0; t < 8 && !done; ++t) {
          Table table = gen_table(rng, Schema::default_pool(), config.numeric_fields);
          try {
            sample = gen_query(rng, table, qtype, config.max_retries);
            done = true;
          } catch (const DataError&) {
            continue;  // fresh table
          }
        }
        if (!done) throw DataError("gen_split: sample generation failed");
        char id[32];
        std::snprintf(id, sizeof(id), "%s-%06d", part.name, i);
        sample.id = id;
        (*part.samples)[i] = std::move(sample);
      }
    });
  }
  return split;
}

}  // namespace tabqa
