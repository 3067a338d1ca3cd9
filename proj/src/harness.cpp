#include "nakayama/harness.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <set>
#include <sstream>
#include <thread>

namespace nakayama {

namespace {

struct CheckMeta {
  CheckId id;
  std::string_view name;
  std::string_view description;
};

constexpr CheckMeta kCheckMeta[] = {
    {CheckId::ThmMain, "THM_MAIN",
     "findim and delooping level coincide and equal those of the opposite algebra"},
    {CheckId::Prop1Reduction, "PROP1_REDUCTION",
     "epsilon lowers phi, findim and del by exactly two (infinite gldim, phi >= 3)"},
    {CheckId::Prop2Dichotomy, "PROP2_DICHOTOMY",
     "at phi = 2: findim = 1 iff del = 1, and findim = 2 iff del = 2"},
    {CheckId::Findim1Equiv, "FINDIM1_EQUIV",
     "findim = 1 iff relation starts equal projective socles iff delta and nabla blocks agree"},
    {CheckId::PhiEven, "PHI_EVEN", "phi is even when the global dimension is infinite"},
    {CheckId::PhiFindimGap, "PHI_FINDIM_GAP",
     "0 <= phi - findim <= 1, and findim in {1,2} forces phi = 2"},
    {CheckId::DelLePhi, "DEL_LE_PHI", "the delooping level is at most phi"},
    {CheckId::BFiltrationSyz2, "B_FILTRATION_SYZ2",
     "every nonzero second syzygy has a delta-block filtration reproducing it"},
    {CheckId::OpInvolution, "OP_INVOLUTION",
     "opposite is an involution up to rotation and preserves rank and relation count"},
    {CheckId::ProjInjId, "PROJ_INJ_ID",
     "the projective after each relation start is injective with the next relation's socle"},
    {CheckId::EpsSelfinjAtPhi2, "EPS_SELFINJ_AT_PHI2",
     "phi = 2 forces the epsilon series to be constant (selfinjective)"},
    {CheckId::EpsIsNakayama, "EPS_IS_NAKAYAMA",
     "epsilon of an infinite-gldim algebra is again a valid cyclic Nakayama algebra"},
    {CheckId::TowerConsistent, "TOWER_CONSISTENT",
     "tower-based invariants agree with the direct computations"},
    {CheckId::PhiSubsetOracle, "PHI_SUBSET_ORACLE",
     "no subset of indecomposables exceeds the phi of the full set"},
    {CheckId::RoundtripRelations, "ROUNDTRIP_RELATIONS",
     "the Kupisch series round-trips through its defining relations"},
};

const CheckMeta& meta(CheckId id) {
  for (const CheckMeta& m : kCheckMeta) {
    if (m.id == id) return m;
  }
  throw InternalError("unknown check id");
}

std::string series_text(const std::vector<int>& c) {
  std::string out;
  for (size_t i = 0; i < c.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(c[i]);
  }
  return out;
}

std::string module_text(UniserialModule m) {
  return "(" + std::to_string(m.top) + "," + std::to_string(m.len) + ")";
}

// Everything the checks and the CSV row need, computed once per algebra.
struct Profile {
  Algebra a;
  RelationSystem rels;
  DimensionReport direct;
  Algebra op;
  DimensionReport op_direct;
  std::optional<EpsilonResult> eps;           // unset for selfinjective input
  std::optional<DimensionReport> eps_direct;  // set when eps validates
  DimensionReport tower;
  std::string tower_error;  // nonempty if invariants_via_tower threw

  explicit Profile(const Algebra& alg)
      : a(alg), rels(relations_from_kupisch(alg)), direct(direct_report(alg)),
        op(opposite(alg)), op_direct(direct_report(op)) {
    if (!is_selfinjective(a)) {
      eps = epsilon(a);
      if (eps->algebra) eps_direct = direct_report(*eps->algebra);
    }
    try {
      tower = invariants_via_tower(a);
    } catch (const Error& e) {
      tower_error = e.what();
    }
  }
};

CheckOutcome pass() { return {CheckStatus::Pass, ""}; }
CheckOutcome skip(std::string reason) { return {CheckStatus::Skip, std::move(reason)}; }
CheckOutcome fail(std::string payload) { return {CheckStatus::Fail, std::move(payload)}; }

std::string invariant_payload(const Profile& p) {
  std::ostringstream os;
  os << "kupisch=[" << series_text(p.a.kupisch()) << "] gldim=" << to_string(p.direct.gldim)
     << " findim=" << p.direct.findim << " phi=" << p.direct.phi_dim
     << " del=" << to_string(p.direct.del);
  return os.str();
}

CheckOutcome check_thm_main(const Profile& p) {
  const bool ok = p.direct.del == Dim(p.direct.findim) &&
                  p.op_direct.del == Dim(p.op_direct.findim) &&
                  p.direct.findim == p.op_direct.findim;
  if (ok) return pass();
  std::ostringstream os;
  os << invariant_payload(p) << " op_kupisch=[" << series_text(p.op.kupisch())
     << "] findim_op=" << p.op_direct.findim << " del_op=" << to_string(p.op_direct.del);
  return fail(os.str());
}

CheckOutcome check_prop1_reduction(const Profile& p) {
  if (is_selfinjective(p.a)) return skip("selfinjective");
  if (p.direct.gldim.is_finite()) return skip("finite global dimension");
  if (p.direct.phi_dim < 3) return skip("phi_dim < 3");
  if (!p.eps_direct) {
    return fail(invariant_payload(p) + " eps_series=[" + series_text(p.eps->kupisch) +
                "] does not validate");
  }
  const DimensionReport& e = *p.eps_direct;
  const bool ok = e.phi_dim == p.direct.phi_dim - 2 && e.findim == p.direct.findim - 2 &&
                  p.direct.del.is_finite() && e.del == Dim(p.direct.del.value() - 2);
  if (ok) return pass();
  std::ostringstream os;
  os << invariant_payload(p) << " eps=[" << series_text(p.eps->kupisch)
     << "] eps_phi=" << e.phi_dim << " eps_findim=" << e.findim
     << " eps_del=" << to_string(e.del);
  return fail(os.str());
}

CheckOutcome check_prop2_dichotomy(const Profile& p) {
  if (p.direct.phi_dim != 2) return skip("phi_dim != 2");
  const bool f1 = p.direct.findim == 1, d1 = p.direct.del == Dim(1);
  const bool f2 = p.direct.findim == 2, d2 = p.direct.del == Dim(2);
  if (f1 == d1 && f2 == d2) return pass();
  return fail(invariant_payload(p));
}

CheckOutcome check_findim1_equiv(const Profile& p) {
  if (is_selfinjective(p.a)) return skip("selfinjective");
  if (p.direct.gldim.is_finite()) return skip("finite global dimension");
  const bool sets_equal = findim_one_test(p.a);  // also cross-checks the block sets
  const bool findim_one = p.direct.findim == 1;
  if (sets_equal == findim_one) return pass();
  std::ostringstream os;
  os << invariant_payload(p) << " starts_equal_socles=" << sets_equal;
  return fail(os.str());
}

CheckOutcome check_phi_even(const Profile& p) {
  if (p.direct.gldim.is_finite()) return skip("finite global dimension");
  if (p.direct.phi_dim % 2 == 0) return pass();
  return fail(invariant_payload(p));
}

CheckOutcome check_phi_findim_gap(const Profile& p) {
  const int gap = p.direct.phi_dim - p.direct.findim;
  bool ok = gap >= 0 && gap <= 1;
  if (p.direct.findim == 1 || p.direct.findim == 2) ok = ok && p.direct.phi_dim == 2;
  if (ok) return pass();
  return fail(invariant_payload(p));
}

CheckOutcome check_del_le_phi(const Profile& p) {
  if (p.direct.del <= Dim(p.direct.phi_dim)) return pass();
  return fail(invariant_payload(p));
}

CheckOutcome check_b_filtration_syz2(const Profile& p) {
  const std::vector<DeltaBlock> blocks = delta_blocks(p.a);
  for (UniserialModule m : indecomposables(p.a)) {
    SyzygyResult s1 = syzygy(p.a, m);
    if (!s1) continue;
    SyzygyResult s2 = syzygy(p.a, *s1);
    if (!s2) continue;
    std::optional<Filtration> f = try_b_filtration(blocks, *s2);
    bool ok = f.has_value() && f->block_count() >= 1;
    if (ok) {
      // The filtration must reproduce the module: matching top, total length.
      int total = 0;
      for (int ord : f->ordinals) total += blocks[static_cast<size_t>(ord - 1)].len;
      ok = total == s2->len && blocks[static_cast<size_t>(f->ordinals.front() - 1)].top == s2->top;
    }
    if (!ok) {
      return fail("kupisch=[" + series_text(p.a.kupisch()) + "] module=" + module_text(m) +
                  " syz2=" + module_text(*s2) + " not filterable");
    }
  }
  return pass();
}

CheckOutcome check_op_involution(const Profile& p) {
  const Algebra opop = opposite(p.op);
  bool ok = canonicalize(opop) == canonicalize(p.a);
  ok = ok && p.op.rank() == p.a.rank();
  ok = ok && relations_from_kupisch(p.op).r() == p.rels.r();
  if (ok) return pass();
  return fail("kupisch=[" + series_text(p.a.kupisch()) + "] op=[" + series_text(p.op.kupisch()) +
              "] opop=[" + series_text(opop.kupisch()) + "]");
}

CheckOutcome check_proj_inj_id(const Profile& p) {
  // P at start_j + 1 is injective, with socle equal to relation j+1's socle.
  const int r = p.rels.r();
  for (int j = 1; j <= r; ++j) {
    const Vertex top = p.a.next(p.rels.rels[static_cast<size_t>(j - 1)].start);
    const UniserialModule proj = make_module(p.a, top, p.a.c(top));
    const Vertex expected_socle = p.rels.socle(j % r + 1);
    if (!is_injective(p.a, proj) || socle_vertex(p.a, proj) != expected_socle) {
      return fail("kupisch=[" + series_text(p.a.kupisch()) + "] start=" +
                  std::to_string(p.rels.rels[static_cast<size_t>(j - 1)].start) +
                  " projective=" + module_text(proj) + " expected_socle=" +
                  std::to_string(expected_socle));
    }
  }
  return pass();
}

CheckOutcome check_eps_selfinj_at_phi2(const Profile& p) {
  if (p.direct.phi_dim != 2) return skip("phi_dim != 2");
  const std::vector<int>& k = p.eps->kupisch;  // phi = 2 implies non-selfinjective
  const bool constant = std::all_of(k.begin(), k.end(), [&](int v) { return v == k.front(); });
  if (constant) return pass();
  return fail(invariant_payload(p) + " eps_series=[" + series_text(k) + "]");
}

CheckOutcome check_eps_is_nakayama(const Profile& p) {
  if (is_selfinjective(p.a)) return skip("selfinjective (epsilon undefined)");
  if (p.direct.gldim.is_finite()) {
    return skip("finite global dimension (epsilon may be degenerate)");
  }
  if (p.eps->algebra) return pass();
  return fail("kupisch=[" + series_text(p.a.kupisch()) + "] eps_series=[" +
              series_text(p.eps->kupisch) + "] does not validate");
}

CheckOutcome check_tower_consistent(const Profile& p) {
  if (!p.tower_error.empty()) {
    return fail(invariant_payload(p) + " tower_error=" + p.tower_error);
  }
  const bool ok = p.tower.gldim == p.direct.gldim && p.tower.findim == p.direct.findim &&
                  p.tower.phi_dim == p.direct.phi_dim && p.tower.del == p.direct.del;
  if (ok) return pass();
  std::ostringstream os;
  os << invariant_payload(p) << " tower: gldim=" << to_string(p.tower.gldim)
     << " findim=" << p.tower.findim << " phi=" << p.tower.phi_dim
     << " del=" << to_string(p.tower.del);
  return fail(os.str());
}

CheckOutcome check_phi_subset_oracle(const Profile& p) {
  if (p.a.rank() > 3 || p.a.max_length() > 4) {
    return skip("gated to rank <= 3 and entries <= 4");
  }
  std::vector<UniserialModule> nonproj;
  for (UniserialModule m : indecomposables(p.a)) {
    if (!is_projective(p.a, m)) nonproj.push_back(m);
  }
  const size_t k = nonproj.size();
  int best = 0;
  for (size_t mask = 1; mask < (size_t{1} << k); ++mask) {
    std::vector<UniserialModule> subset;
    for (size_t i = 0; i < k; ++i) {
      if (mask & (size_t{1} << i)) subset.push_back(nonproj[i]);
    }
    best = std::max(best, phi_of_set(p.a, subset));
  }
  if (best == p.direct.phi_dim) return pass();
  std::ostringstream os;
  os << invariant_payload(p) << " subset_max=" << best;
  return fail(os.str());
}

CheckOutcome check_roundtrip_relations(const Profile& p) {
  Algebra back = kupisch_from_relations(p.rels);
  if (back == p.a) return pass();
  return fail("kupisch=[" + series_text(p.a.kupisch()) + "] roundtrip=[" +
              series_text(back.kupisch()) + "]");
}

CheckOutcome evaluate(const Profile& p, CheckId id) {
  switch (id) {
    case CheckId::ThmMain: return check_thm_main(p);
    case CheckId::Prop1Reduction: return check_prop1_reduction(p);
    case CheckId::Prop2Dichotomy: return check_prop2_dichotomy(p);
    case CheckId::Findim1Equiv: return check_findim1_equiv(p);
    case CheckId::PhiEven: return check_phi_even(p);
    case CheckId::PhiFindimGap: return check_phi_findim_gap(p);
    case CheckId::DelLePhi: return check_del_le_phi(p);
    case CheckId::BFiltrationSyz2: return check_b_filtration_syz2(p);
    case CheckId::OpInvolution: return check_op_involution(p);
    case CheckId::ProjInjId: return check_proj_inj_id(p);
    case CheckId::EpsSelfinjAtPhi2: return check_eps_selfinj_at_phi2(p);
    case CheckId::EpsIsNakayama: return check_eps_is_nakayama(p);
    case CheckId::TowerConsistent: return check_tower_consistent(p);
    case CheckId::PhiSubsetOracle: return check_phi_subset_oracle(p);
    case CheckId::RoundtripRelations: return check_roundtrip_relations(p);
  }
  throw InternalError("unknown check id");
}

std::pair<CheckReport, AlgebraRow> evaluate_algebra(const Algebra& a,
                                                    const std::vector<CheckId>& checks) {
  const Profile profile(a);

  CheckReport report;
  report.kupisch = canonicalize(a).kupisch();
  for (CheckId id : checks) {
    CheckOutcome outcome;
    try {
      outcome = evaluate(profile, id);
    } catch (const Error& e) {
      outcome = fail(std::string("exception: ") + e.what());
    }
    report.results.emplace_back(id, std::move(outcome));
  }

  AlgebraRow row;
  row.kupisch = report.kupisch;
  row.rank = a.rank();
  row.gldim = profile.direct.gldim;
  row.findim = profile.direct.findim;
  row.del = profile.direct.del;
  row.phi = profile.direct.phi_dim;
  row.findim_op = profile.op_direct.findim;
  row.del_op = profile.op_direct.del;
  if (profile.eps) row.eps_kupisch = profile.eps->kupisch;
  for (const auto& [id, outcome] : report.results) {
    if (outcome.status == CheckStatus::Fail) row.failed.push_back(id);
  }
  return {std::move(report), std::move(row)};
}

std::vector<CheckId> normalize_checks(const std::vector<CheckId>& checks) {
  // Evaluate in catalog order, dropping duplicates.
  std::vector<CheckId> out;
  for (CheckId id : kAllChecks) {
    if (std::find(checks.begin(), checks.end(), id) != checks.end()) out.push_back(id);
  }
  return out;
}

}  // namespace

std::string_view check_name(CheckId id) { return meta(id).name; }
std::string_view check_description(CheckId id) { return meta(id).description; }

std::optional<CheckId> check_from_name(std::string_view name) {
  for (const CheckMeta& m : kCheckMeta) {
    if (m.name == name) return m.id;
  }
  return std::nullopt;
}

bool CheckReport::all_passed_or_skipped() const {
  return std::all_of(results.begin(), results.end(), [](const auto& entry) {
    return entry.second.status != CheckStatus::Fail;
  });
}

const CheckOutcome* CheckReport::outcome(CheckId id) const {
  for (const auto& [check, out] : results) {
    if (check == id) return &out;
  }
  return nullptr;
}

CheckReport run_checks(const Algebra& a, const std::vector<CheckId>& checks) {
  return evaluate_algebra(a, normalize_checks(checks)).first;
}

SweepReport sweep(const EnumerationSpec& spec, const std::vector<CheckId>& checks,
                  int workers) {
  const auto start = std::chrono::steady_clock::now();

  SweepReport report;
  report.spec = spec;
  report.checks = normalize_checks(checks);

  const std::vector<Algebra> algebras = enumerate_kupisch(spec);
  report.algebra_count = static_cast<long long>(algebras.size());
  for (CheckId id : report.checks) report.totals[id] = {};

  std::vector<std::pair<CheckReport, AlgebraRow>> results(algebras.size());
  const int thread_count =
      std::max(1, std::min<int>(workers, static_cast<int>(algebras.size())));
  if (thread_count == 1) {
    for (size_t i = 0; i < algebras.size(); ++i) {
      results[i] = evaluate_algebra(algebras[i], report.checks);
    }
  } else {
    std::atomic<size_t> cursor{0};
    std::vector<std::thread> pool;
    pool.reserve(static_cast<size_t>(thread_count));
    for (int t = 0; t < thread_count; ++t) {
      pool.emplace_back([&] {
        while (true) {
          const size_t i = cursor.fetch_add(1);
          if (i >= algebras.size()) return;
          results[i] = evaluate_algebra(algebras[i], report.checks);
        }
      });
    }
    for (std::thread& t : pool) t.join();
  }

  // Merge in enumeration order: identical output for any worker count.
  for (auto& [check_report, row] : results) {
    for (const auto& [id, outcome] : check_report.results) {
      CheckTotals& totals = report.totals[id];
      switch (outcome.status) {
        case CheckStatus::Pass: ++totals.pass; break;
        case CheckStatus::Fail:
          ++totals.fail;
          report.failures.push_back({check_report.kupisch, id, outcome.note});
          break;
        case CheckStatus::Skip: ++totals.skip; break;
      }
    }
    ++report.findim_hist[std::to_string(row.findim)];
    ++report.del_hist[to_string(row.del)];
    ++report.phi_hist[std::to_string(row.phi)];
    report.rows.push_back(std::move(row));
  }

  report.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

}  // namespace nakayama
