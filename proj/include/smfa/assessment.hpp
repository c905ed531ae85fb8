#pragma once

#include <optional>
#include <string>
#include <vector>

#include "smfa/indicators.hpp"

namespace smfa {

enum class MarketFunction { accumulation, redistribution };
const char* market_function_name(MarketFunction f);

enum class RequiredMove {
  strictly_up,      // delta > 0
  strictly_down,    // delta < 0
  above_inflation,  // delta > pi
};
const char* required_move_token(RequiredMove m);

enum class VerdictStatus { performed, not_performed, indeterminate };
const char* verdict_status_token(VerdictStatus s);

/// One condition of a function verdict. `observed` is absent when the
/// underlying series cannot be computed for the pair, which makes the
/// whole verdict indeterminate.
struct ClauseResult {
  std::string id;     // stable ASCII token, e.g. "s_pop_down"
  std::string label;  // display form, e.g. "S_pop↓"
  RequiredMove required;
  std::optional<TrendAssessment> observed;
  bool satisfied = false;
};

struct FunctionVerdict {
  MarketFunction function;
  VerdictStatus status = VerdictStatus::indeterminate;
  std::vector<ClauseResult> clauses;
  std::vector<std::string> missing_inputs;
  std::string narrative;

  bool performed() const { return status == VerdictStatus::performed; }
};

/// Accumulation condition over a pair of consecutive years. Four clauses:
/// the money multiplier must rise, market volume must grow faster than
/// inflation, population savings must fall, and M3 must grow faster than
/// inflation. The savings clause is directional only; its trend still
/// records the significance class against inflation.
FunctionVerdict assess_accumulation(const PeriodPair& pair);

/// Redistribution condition. Six clauses: trading/M3, the investment share
/// of GDP, the high-tech output share and the inventive activity ratio must
/// all rise, and both trading volume and GDP must grow faster than
/// inflation. Missing structural indicators make the verdict indeterminate
/// with the gaps named.
FunctionVerdict assess_redistribution(const PeriodPair& pair);

struct AssessmentBundle {
  PeriodPair pair;
  IndicatorSet prior_indicators;
  IndicatorSet current_indicators;
  std::vector<TrendAssessment> trends;
  FunctionVerdict accumulation;
  FunctionVerdict redistribution;
};

/// Full evaluation of one pair: both verdicts plus the indicator tables and
/// trend list backing them.
AssessmentBundle assess_all(const PeriodPair& pair);

}  // namespace smfa
