#pragma once

#include <string>
#include <vector>

#include "tabqa/table.hpp"

namespace tabqa {

// Six content operators plus the end-of-execution terminator.
enum class Operator : int {
  kSelectRow = 0,
  kArgmax = 1,
  kArgmin = 2,
  kGreaterThan = 3,
  kLessThan = 4,
  kSelectValue = 5,
  kEoe = 6,
};

constexpr int kContentOperators = 6;
constexpr int kOperatorSymbols = 7;  // content operators + EOE
constexpr int kMaxProgramSteps = 4;  // EOE excluded

const char* operator_name(Operator op);
Operator operator_from_name(const std::string& name);

struct Action {
  Operator op;
  int field = 0;  // ignored for EOE

  bool operator==(const Action& o) const {
    return op == o.op && (op == Operator::kEoe || field == o.field);
  }
};

// Content actions only; the EOE terminator is implicit at the end.
struct Program {
  std::vector<Action> actions;

  bool operator==(const Program& o) const { return actions == o.actions; }
  // Checks length <= 4 and select_value-last; throws ContractError otherwise.
  void validate() const;

  std::string to_text(const Table& table) const;
  static Program from_text(const std::string& text, const Table& table);
};

enum class ExecPhase { kSelecting, kAnswered, kFailed };

// Discrete intermediate execution result. Once Answered or Failed the state
// is frozen; step() refuses further transitions.
struct ExecState {
  RowSet selection;
  ExecPhase phase = ExecPhase::kSelecting;
  Denotation denotation;  // meaningful when phase == kAnswered

  static ExecState initial();
  bool terminal() const { return phase != ExecPhase::kSelecting; }
};

// Applies one action. All failure modes fold into phase=kFailed so that
// sampled episodes always terminate with a well-defined reward.
ExecState step(const ExecState& state, const Action& action,
               const Table& table, const std::vector<std::string>& query_tokens);

struct ExecResult {
  Denotation denotation;
  std::vector<ExecState> trace;  // state after each action, initial state first
};

// Folds step over the program starting from the full row set. Total: never
// throws for any action sequence.
ExecResult execute(const Program& program, const Table& table,
                   const std::vector<std::string>& query_tokens);

}  // namespace tabqa
