#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "tabqa/dataset.hpp"
#include "tabqa/rng.hpp"

namespace tabqa {

constexpr int64_t kValueMin = 1;
constexpr int64_t kValueMax = 10000;

// Field-name pool tables are drawn from. Names are single lower-case tokens
// so they can appear verbatim inside query surface forms.
struct Schema {
  std::vector<std::string> numeric_names;
  std::vector<std::string> string_names;
  static const Schema& default_pool();
};

struct GenConfig {
  uint64_t seed = 0;
  int numeric_fields = 6;  // remaining fields hold string cells
  int max_retries = 64;
  int jobs = 0;  // 0 = all hardware threads
};

// String-cell lexicon: fixed 200 synthetic tokens, disjoint from field names
// and template words. Independent of the corpus seed so the token universe is
// stable across datasets.
const std::vector<std::string>& cell_lexicon();

// Every non-value word that can appear in a query template.
const std::vector<std::string>& template_words();

Table gen_table(Rng& rng, const Schema& schema, int numeric_fields = 6);

QuerySample gen_query(Rng& rng, const Table& table, QueryType qtype,
                      int max_retries = 64);

DatasetSplit gen_split(const GenConfig& config, int train_size, int valid_size,
                       int test_size);

}  // namespace tabqa
