#pragma once

// Verification harness: the catalog of structural checks, per-algebra
// reports, and the exhaustive sweep over an enumeration window.

#include <array>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "nakayama/algebra.hpp"
#include "nakayama/filtration.hpp"
#include "nakayama/invariants.hpp"

namespace nakayama {

enum class CheckId {
  ThmMain,
  Prop1Reduction,
  Prop2Dichotomy,
  Findim1Equiv,
  PhiEven,
  PhiFindimGap,
  DelLePhi,
  BFiltrationSyz2,
  OpInvolution,
  ProjInjId,
  EpsSelfinjAtPhi2,
  EpsIsNakayama,
  TowerConsistent,
  PhiSubsetOracle,
  RoundtripRelations,
};

inline constexpr std::array<CheckId, 15> kAllChecks = {
    CheckId::ThmMain,          CheckId::Prop1Reduction,  CheckId::Prop2Dichotomy,
    CheckId::Findim1Equiv,     CheckId::PhiEven,         CheckId::PhiFindimGap,
    CheckId::DelLePhi,         CheckId::BFiltrationSyz2, CheckId::OpInvolution,
    CheckId::ProjInjId,        CheckId::EpsSelfinjAtPhi2, CheckId::EpsIsNakayama,
    CheckId::TowerConsistent,  CheckId::PhiSubsetOracle, CheckId::RoundtripRelations,
};

std::string_view check_name(CheckId id);         // e.g. "THM_MAIN"
std::string_view check_description(CheckId id);  // the statement it verifies
std::optional<CheckId> check_from_name(std::string_view name);

enum class CheckStatus { Pass, Fail, Skip };

struct CheckOutcome {
  CheckStatus status = CheckStatus::Pass;
  std::string note;  // skip reason, or failure witness payload (JSON text)
};

struct CheckReport {
  std::vector<int> kupisch;  // canonical series
  std::vector<std::pair<CheckId, CheckOutcome>> results;

  bool all_passed_or_skipped() const;
  const CheckOutcome* outcome(CheckId id) const;
};

CheckReport run_checks(const Algebra& a, const std::vector<CheckId>& checks);

// One CSV row worth of data per algebra.
struct AlgebraRow {
  std::vector<int> kupisch;
  int rank = 0;
  Dim gldim;
  int findim = 0;
  Dim del;
  int phi = 0;
  int findim_op = 0;
  Dim del_op;
  std::vector<int> eps_kupisch;  // empty when epsilon is undefined (selfinjective)
  std::vector<CheckId> failed;
};

struct CheckTotals {
  long long pass = 0;
  long long fail = 0;
  long long skip = 0;
};

struct SweepFailure {
  std::vector<int> kupisch;
  CheckId check = CheckId::ThmMain;
  std::string payload;
};

struct SweepReport {
  EnumerationSpec spec;
  std::vector<CheckId> checks;
  long long algebra_count = 0;
  std::map<CheckId, CheckTotals> totals;
  std::vector<SweepFailure> failures;
  // Distribution tables keyed by rendered value ("0", "1", ..., "inf").
  std::map<std::string, long long> findim_hist;
  std::map<std::string, long long> del_hist;
  std::map<std::string, long long> phi_hist;
  std::vector<AlgebraRow> rows;
  double wall_seconds = 0;  // console reporting only; never serialized

  long long failure_count() const { return static_cast<long long>(failures.size()); }
};

// Runs run_checks over the enumeration, distributing algebras across
// workers. The report is identical for any worker count: results are merged
// in enumeration (canonical) order.
SweepReport sweep(const EnumerationSpec& spec, const std::vector<CheckId>& checks,
                  int workers = 1);

}  // namespace nakayama
