#include "tabqa/symexec.hpp"

#include <sstream>

namespace tabqa {

namespace {

const char* kOpNames[kOperatorSymbols] = {
    "select_row", "argmax", "argmin", "greater_than", "less_than",
    "select_value", "eoe"};

ExecState failed(const ExecState& prev) {
  ExecState s = prev;
  s.phase = ExecPhase::kFailed;
  s.denotation = Denotation::none();
  return s;
}

// Row of the extreme value of `field` within `within`; ties (possible only in
// hand-built tables) go to the lowest row index.
int extreme_row(const Table& table, int field, const RowSet& within, bool max) {
  int best = -1;
  int64_t best_v = 0;
  for (int r : within.indices()) {
    int64_t v = table.cell_at(r, field).as_num();
    if (best < 0 || (max ? v > best_v : v < best_v)) {
      best = r;
      best_v = v;
    }
  }
  return best;
}

}  // namespace

const char* operator_name(Operator op) { return kOpNames[static_cast<int>(op)]; }

Operator operator_from_name(const std::string& name) {
  for (int i = 0; i < kOperatorSymbols; ++i) {
    if (name == kOpNames[i]) return static_cast<Operator>(i);
  }
  throw DataError("unknown operator '" + name + "'");
}

void Program::validate() const {
  if (static_cast<int>(actions.size()) > kMaxProgramSteps) {
    throw ContractError("program exceeds 4 content steps");
  }
  for (size_t i = 0; i < actions.size(); ++i) {
    if (actions[i].op == Operator::kEoe) {
      throw ContractError("EOE is implicit and may not appear as a content action");
    }
    if (actions[i].field < 0 || actions[i].field >= kTableFields) {
      throw ContractError("action field index out of range");
    }
    if (actions[i].op == Operator::kSelectValue && i + 1 != actions.size()) {
      throw ContractError("select_value must be the last action");
    }
  }
}

std::string Program::to_text(const Table& table) const {
  std::ostringstream os;
  for (size_t i = 0; i < actions.size(); ++i) {
    if (i) os << ",";
    os << operator_name(actions[i].op) << "("
       << table.field_names()[actions[i].field] << ")";
  }
  return os.str();
}

Program Program::from_text(const std::string& text, const Table& table) {
  Program p;
  std::string tok;
  std::istringstream is(text);
  while (std::getline(is, tok, ',')) {
    auto open = tok.find('(');
    auto close = tok.rfind(')');
    if (open == std::string::npos || close == std::string::npos || close < open) {
      throw DataError("malformed program step '" + tok + "'");
    }
    std::string op_name = tok.substr(0, open);
    std::string field_name = tok.substr(open + 1, close - open - 1);
    int field = table.field_index(field_name);
    if (field < 0) throw DataError("unknown field '" + field_name + "'");
    p.actions.push_back({operator_from_name(op_name), field});
  }
  p.validate();
  return p;
}

ExecState ExecState::initial() {
  ExecState s;
  s.selection = RowSet::all(kTableRows);
  return s;
}

ExecState step(const ExecState& state, const Action& action, const Table& table,
               const std::vector<std::string>& query_tokens) {
  if (state.terminal()) {
    throw ContractError("step() on a terminal execution state");
  }
  ExecState next = state;
  switch (action.op) {
    case Operator::kSelectRow: {
      auto v = find_query_value(table, action.field, query_tokens);
      if (!v) return failed(state);
      RowSet sel;
      for (int r = 0; r < kTableRows; ++r) {
        if (table.cell_at(r, action.field) == *v) sel.add(r);
      }
      if (sel.empty()) return failed(state);
      next.selection = sel;
      return next;
    }
    case Operator::kGreaterThan:
    case Operator::kLessThan: {
      if (!table.field_is_numeric(action.field)) return failed(state);
      int64_t ref;
      if (state.selection.size() == 1) {
        ref = table.cell_at(state.selection.sole(), action.field).as_num();
      } else {
        auto v = find_query_value(table, action.field, query_tokens);
        if (!v || !v->is_num()) return failed(state);
        ref = v->as_num();
      }
      // Comparisons re-scan the whole table, not just the current selection.
      RowSet sel;
      bool greater = action.op == Operator::kGreaterThan;
      for (int r = 0; r < kTableRows; ++r) {
        int64_t v = table.cell_at(r, action.field).as_num();
        if (greater ? v > ref : v < ref) sel.add(r);
      }
      if (sel.empty()) return failed(state);
      next.selection = sel;
      return next;
    }
    case Operator::kArgmax:
    case Operator::kArgmin: {
      if (!table.field_is_numeric(action.field)) return failed(state);
      int row = extreme_row(table, action.field, state.selection,
                            action.op == Operator::kArgmax);
      if (row < 0) return failed(state);
      next.selection = RowSet::single(row);
      return next;
    }
    case Operator::kSelectValue: {
      if (state.selection.size() != 1) return failed(state);
      next.phase = ExecPhase::kAnswered;
      next.denotation =
          Denotation::of(table.cell_at(state.selection.sole(), action.field));
      return next;
    }
    case Operator::kEoe: {
      // Early stop without select_value: answered with no denotation, which
      // counts as reward 0 downstream.
      next.phase = ExecPhase::kAnswered;
      next.denotation = Denotation::none();
      return next;
    }
  }
  return failed(state);
}

ExecResult execute(const Program& program, const Table& table,
                   const std::vector<std::string>& query_tokens) {
  ExecResult result;
  ExecState state = ExecState::initial();
  result.trace.push_back(state);
  for (const auto& action : program.actions) {
    if (state.terminal()) break;
    state = step(state, action, table, query_tokens);
    result.trace.push_back(state);
  }
  result.denotation = state.phase == ExecPhase::kAnswered
                          ? state.denotation
                          : Denotation::none();
  return result;
}

}  // namespace tabqa
