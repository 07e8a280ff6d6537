// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "generators.hpp"
#include "occ/errors.hpp"
#include "occ/harness.hpp"
#include "oracle.hpp"

using namespace occ;
using namespace occ::testing;

namespace {

struct Outcome_ {
  bool pass = true;
  std::string detail;
};

// Collects the first failure message; later ones are counted only.
class Check {
public:
  void expect(bool ok, const std::string& what) {
    if (ok) return;
    if (failures_++ == 0) first_ = what;
  }
  Outcome_ result(const std::string& summary) const {
    if (failures_ == 0) return {true, summary};
    return {false, first_ + " (" + std::to_string(failures_) + " failures)"};
  }

private:
  int failures_ = 0;
  std::string first_;
};

std::string fixture(const char* name) { return std::string(OCC_FIXTURE_DIR) + "/" + name; }

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

const ExpressionProfile& full22() { return ExpressionProfile::get(ProfileName::Full22); }

Trace replay(const KnowledgeBase& kb, const Scenario& sc, const EngineParams& p) {
  return run_scenario(kb, sc, full22(), ExpressionMode::Blend, p);
}

bool is_fortunes(Category c) { return group_of(c) == Group::FortunesOfOthers; }

// --- 1 ---------------------------------------------------------------------

Outcome_ golden_banana() {
  Check check;
  const KnowledgeBase kb = load_kb_file(fixture("banana_kb.json"));
  const Scenario sc = load_scenario_file(fixture("golden_banana.json"));
  const Trace trace = replay(kb, sc, EngineParams{});
  check.expect(trace.records.size() == 3, "expected 3 records");
  if (trace.records.size() != 3) return check.result("");
  const TraceRecord& gift = trace.records.back();

  const std::set<Category> want{Category::Pity, Category::Satisfaction, Category::Admiration,
                                Category::Love};
  std::set<Category> fired;
  for (const auto& s : gift.fired) fired.insert(s.category);
  check.expect(fired == want, "fired set differs");
  check.expect(gift.fired.size() == 4, "duplicate signals fired");

  std::set<Category> nonzero;
  for (Category c : kAllCategories) {
    if (gift.state[index_of(c)] != 0.0) nonzero.insert(c);
  }
  check.expect(nonzero == want, "nonzero state differs from fired set");

  const std::array<std::pair<Category, double>, 4> values{
      {{Category::Pity, 0.27}, {Category::Satisfaction, 0.4}, {Category::Admiration, 0.7},
       {Category::Love, 0.8}}};
  for (const auto& [c, v] : values) {
    check.expect(std::abs(gift.state[index_of(c)] - v) < 1e-12,
                 std::string(to_string(c)) + " = " + fmt(gift.state[index_of(c)]));
  }
  return check.result("{pity 0.27, satisfaction 0.4, admiration 0.7, love 0.8}, nothing else");
}

// --- 2 ---------------------------------------------------------------------

Outcome_ goal_ordering() {
  Check check;
  std::mt19937_64 rng(2002);
  int pairs = 0;
  for (int tree = 0; tree < 200; ++tree) {
    const KnowledgeBase kb = random_goal_tree(rng);
    std::uniform_real_distribution<double> unit(1e-3, 1.0);
    for (const auto& [id, goal] : kb.tables().goals) {
      if (!goal.parent) continue;
      ++pairs;
      const double c = unit(rng);
      const double r = unit(rng);
      auto event_on = [&](const std::string& g) {
        Stimulus s;
        s.id = "complete";
        s.type_key = "complete-" + g;
        s.event = EventFacet{{GoalImpact{g, SignedAppraisal(c), r}}, {}, std::nullopt};
        return s;
      };
      const Stimulus on_parent = event_on(*goal.parent);
      const Stimulus on_child = event_on(id);
      const double dp = self_desirability(*on_parent.event, kb);
      const double ds = self_desirability(*on_child.event, kb);
      check.expect(dp >= ds, "parent " + *goal.parent + " below child " + id);
      if (goal.weight < 1.0) check.expect(dp > ds, "not strict for child " + id);

      const auto ip = appraise(on_parent, kb, History{}, 0, EngineParams{});
      const auto is = appraise(on_child, kb, History{}, 0, EngineParams{});
      const double joy_p = ip.empty() ? 0.0 : ip[0].intensity.value();
      const double joy_s = is.empty() ? 0.0 : is[0].intensity.value();
      check.expect(joy_p >= joy_s, "joy ordering broken for child " + id);
    }
  }
  return check.result("200 trees, " + std::to_string(pairs) + " parent/child pairs");
}

// --- 3 ---------------------------------------------------------------------

Outcome_ repetition_damping() {
  Check check;
  // Frozen from the mpmath recurrence oracle (tests/oracles/derive_expected.py).
  const std::array<double, 10> frozen{0.576,
                                      0.42964516492070956,
                                      0.32263033334302466,
                                      0.24386073192233939,
                                      0.1855047605320942,
                                      0.14199770983119648,
                                      0.10936006212933127,
                                      0.084727956509672832,
                                      0.066027692899181393,
                                      0.051748659296614569};
  const KnowledgeBase kb = load_kb_file(fixture("banana_kb.json"));
  Engine engine(kb, EngineParams{});
  std::vector<double> seen;
  for (int i = 0; i < 10; ++i) {
    engine.advance_to(1000 * i);
    Stimulus s;
    s.id = "meal" + std::to_string(i);
    s.type_key = "eat-banana";
    s.event = EventFacet{{GoalImpact{"eat", SignedAppraisal(0.8), 1.0}}, {}, std::nullopt};
    const auto signals = engine.process(s);
    check.expect(signals.size() == 1 && signals[0].category == Category::Joy, "expected one joy signal");
    seen.push_back(signals.empty() ? 0.0 : signals[0].intensity.value());
  }
  for (std::size_t i = 1; i < seen.size(); ++i) {
    check.expect(seen[i] <= seen[i - 1], "increase at stimulus " + std::to_string(i + 1));
  }
  for (std::size_t i = 0; i < seen.size(); ++i) {
    check.expect(std::abs(seen[i] - frozen[i]) < 1e-12, "stimulus " + std::to_string(i + 1) + " = " + fmt(seen[i]));
  }
  const double drop = (seen.front() - seen.back()) / seen.front();
  check.expect(drop >= 0.10, "drop only " + fmt(drop));
  return check.result("first " + fmt(seen.front()) + ", last " + fmt(seen.back()) + ", drop " +
                      fmt(100.0 * drop) + "%");
}

// --- 4 ---------------------------------------------------------------------

Outcome_ likelihood_floor() {
  Check check;
  std::mt19937_64 rng(4004);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  double worst_recovery = 0.0;
  for (int h = 0; h < 10000; ++h) {
    KnowledgeBase::Tables t;
    t.default_likelihood = unit(rng) < 0.1 ? 0.0 : 0.99 * unit(rng);
    const KnowledgeBase kb(std::move(t));
    EngineParams p;
    p.likelihood_alpha = 1e-3 + unit(rng);
    p.likelihood_half_life_ms = 1 + static_cast<DurationMs>(unit(rng) * 60000);

    History history;
    TimestampMs now = 0;
    const int n = static_cast<int>(unit(rng) * 51);
    for (int i = 0; i < n; ++i) {
      now += static_cast<TimestampMs>(unit(rng) * 3000);
      Stimulus s;
      s.id = "s";
      s.type_key = unit(rng) < 0.7 ? "a" : "b";
      history.record(s, now, p);
      const double l = history.likelihood_of(s.type_key, kb, now, p);
      check.expect(l >= kb.default_likelihood() && l < 1.0, "likelihood " + fmt(l) + " out of [d,1)");
    }
    for (const char* key : {"a", "b", "never"}) {
      const double l = history.likelihood_of(key, kb, now, p);
      check.expect(l >= kb.default_likelihood(), "floor broken for " + std::string(key));
      const double later = history.likelihood_of(key, kb, now + 20 * p.likelihood_half_life_ms, p);
      worst_recovery = std::max(worst_recovery, std::abs(later - kb.default_likelihood()));
      check.expect(std::abs(later - kb.default_likelihood()) < 1e-4, "no recovery: " + fmt(later));
    }
  }
  return check.result("10000 histories, worst |L-d| after 20 half-lives " + fmt(worst_recovery));
}

// --- 5 ---------------------------------------------------------------------

Outcome_ ekman_partition() {
  Check check;
  const ExpressionProfile& ek = ExpressionProfile::get(ProfileName::Ekman6);
  for (Category c : kAllCategories) {
    check.expect(ek.channel_of(c).has_value(), std::string(to_string(c)) + " unmapped");
  }
  auto sources = [&](const char* channel) {
    const auto idx = ek.find_channel(channel);
    check.expect(idx.has_value(), std::string("missing channel ") + channel);
    return idx ? ek.sources_of(*idx) : std::vector<Category>{};
  };
  std::set<Category> positives;
  for (Category c : kAllCategories) {
    if (valence_of(c) == Valence::Positive) positives.insert(c);
  }
  const auto happy = sources("happiness");
  check.expect(std::set<Category>(happy.begin(), happy.end()) == positives && happy.size() == 11,
               "happiness sources are not the 11 positives");
  const std::array<std::pair<const char*, std::size_t>, 4> negatives{
      {{"anger", 3}, {"sadness", 6}, {"fear", 1}, {"disgust", 1}}};
  for (const auto& [channel, count] : negatives) {
    const auto src = sources(channel);
    check.expect(src.size() == count, std::string(channel) + " has " + std::to_string(src.size()));
    for (Category c : src) check.expect(valence_of(c) == Valence::Negative, "positive source in " + std::string(channel));
  }
  check.expect(sources("surprise").empty(), "surprise has sources");

  std::mt19937_64 rng(5005);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (int i = 0; i < 1000; ++i) {
    EmotionState::Values v{};
    for (double& x : v) x = unit(rng) < 0.3 ? 0.0 : unit(rng);
    const EmotionState state(v, 0);
    for (ExpressionMode mode : {ExpressionMode::Blend, ExpressionMode::Dominant}) {
      const ExpressionFrame frame = map_state(state, ek, mode, EngineParams{});
      check.expect(frame.channel("surprise") == 0.0, "surprise nonzero");
    }
  }
  return check.result("22 covered, happiness 11, anger/sadness/fear/disgust 3/6/1/1, surprise 0 over 1000 states");
}

// --- 6 ---------------------------------------------------------------------

Outcome_ fortunes_exclusion() {
  Check check;
  std::mt19937_64 rng(6006);
  KbShape shape;
  shape.user_models = false;
  std::size_t signals = 0;
  for (int i = 0; i < 1000; ++i) {
    const KnowledgeBase kb = random_kb(rng, shape);
    const Scenario sc = random_scenario(rng, kb);
    const Trace trace = replay(kb, sc, random_params(rng));
    for (const auto& rec : trace.records) {
      signals += rec.fired.size();
      for (const auto& s : rec.fired) check.expect(!is_fortunes(s.category), "fortunes signal fired");
      for (Category c : kAllCategories) {
        if (is_fortunes(c)) check.expect(rec.state[index_of(c)] == 0.0, "fortunes state nonzero");
      }
    }
  }
  return check.result("1000 scenarios, " + std::to_string(signals) + " signals, none fortunes-of-others");
}

// --- 7 ---------------------------------------------------------------------

Outcome_ prospect_lifecycle() {
  Check check;
  const KnowledgeBase kb = load_kb_file(fixture("banana_kb.json"));
  struct Row {
    double d;
    Outcome outcome;
    Category expected;
    double intensity;
  };
  const double l = 0.3;
  const std::array<Row, 4> table{{{0.6, Outcome::Confirmed, Category::Satisfaction, 0.6 * l},
                                  {0.6, Outcome::Disconfirmed, Category::Disappointment, 0.6 * (1 - l)},
                                  {-0.6, Outcome::Confirmed, Category::FearsConfirmed, 0.6 * l},
                                  {-0.6, Outcome::Disconfirmed, Category::Relief, 0.6 * (1 - l)}}};
  for (const Row& row : table) {
    Engine engine(kb, EngineParams{});
    const auto hope = engine.register_prospect(Prospect{"p", "k", SignedAppraisal(row.d), l});
    check.expect(hope && hope->category == (row.d > 0 ? Category::Hope : Category::Fear), "anticipation category");
    engine.advance_to(500);
    const EmotionState before = engine.state();
    const auto fired = engine.resolve_prospect("p", row.outcome);
    check.expect(fired && fired->category == row.expected, "wrong category for " +
                                                               std::string(to_string(row.expected)));
    check.expect(fired && std::abs(fired->intensity.value() - row.intensity) < 1e-12, "wrong intensity");
    for (Category c : kAllCategories) {
      if (c == row.expected || c == Category::Hope || c == Category::Fear) continue;
      check.expect(engine.state()[c] == before[c], "side effect on " + std::string(to_string(c)));
    }
    bool threw = false;
    try {
      engine.resolve_prospect("p", row.outcome);
    } catch (const HistoryError&) {
      threw = true;
    }
    check.expect(threw, "double resolution accepted");
  }

  // Same lifecycle through the stimulus route and through a replayed scenario.
  {
    Engine engine(kb, EngineParams{});
    engine.register_prospect(Prospect{"q", "k", SignedAppraisal(-0.5), 0.4});
    Stimulus s;
    s.id = "bad-news";
    s.type_key = "k";
    s.event = EventFacet{{}, {}, std::string("q")};
    const auto fired = engine.process(s);
    check.expect(fired.size() == 1 && fired[0].category == Category::FearsConfirmed, "stimulus route");
    bool threw = false;
    try {
      engine.resolve_prospect("q", Outcome::Disconfirmed);
    } catch (const HistoryError&) {
      threw = true;
    }
    check.expect(threw, "double resolution after stimulus accepted");
  }
  {
    Scenario sc;
    sc.steps.push_back({0, ProspectDecl{"p", "k", SignedAppraisal(0.5), 0.5}});
    sc.steps.push_back({1, Resolution{"p", Outcome::Confirmed}});
    sc.steps.push_back({2, Resolution{"p", Outcome::Disconfirmed}});
    bool threw = false;
    try {
      replay(kb, sc, EngineParams{});
    } catch (const StepError& e) {
      threw = e.step_index() == 2;
    }
    check.expect(threw, "scenario double resolution not reported at step 2");
  }
  return check.result("4 sign/outcome pairs plus stimulus route; double resolution raises");
}

// --- 8 ---------------------------------------------------------------------

Outcome_ quiescence_closure() {
  Check check;
  std::mt19937_64 rng(8008);
  double worst_idle = 0.0;
  for (int i = 0; i < 1000; ++i) {
    const KnowledgeBase kb = random_kb(rng);
    const Scenario sc = random_scenario(rng, kb);
    EngineParams p = random_params(rng);
    p.state_half_life_ms = EngineParams{}.state_half_life_ms;
    const Trace trace = replay(kb, sc, p);
    for (const auto& rec : trace.records) {
      for (double v : rec.state) check.expect(v >= 0.0 && v <= 1.0, "entry " + fmt(v) + " outside [0,1]");
    }
    const TraceRecord& last = trace.records.back();
    const EmotionState idle = decay(EmotionState(last.state, last.t_ms), 60000, p);
    for (double v : idle.values()) {
      worst_idle = std::max(worst_idle, v);
      check.expect(v < 1e-3, "entry " + fmt(v) + " after 60 s idle");
    }
  }
  return check.result("1000 fuzz scenarios in [0,1]; max entry after 60 s idle " + fmt(worst_idle));
}

// --- 9 ---------------------------------------------------------------------

Outcome_ oracle_equivalence() {
  Check check;
  std::mt19937_64 rng(9009);
  double worst = 0.0;
  std::size_t records = 0;
  for (int i = 0; i < 100; ++i) {
    KbShape shape;
    shape.user_models = i % 4 != 0;
    const KnowledgeBase kb = random_kb(rng, shape);
    const Scenario sc = random_scenario(rng, kb, 100);
    const EngineParams p = random_params(rng);
    const Trace trace = replay(kb, sc, p);
    const auto expected = oracle_replay(kb.tables(), sc, p);
    check.expect(trace.records.size() == expected.size(), "record count differs");
    const std::size_t n = std::min(trace.records.size(), expected.size());
    records += n;
    for (std::size_t r = 0; r < n; ++r) {
      const auto& got = trace.records[r];
      const auto& want = expected[r];
      check.expect(got.t_ms == want.t_ms, "record time differs");
      for (std::size_t k = 0; k < 22; ++k) {
        const double diff = std::abs(got.state[k] - want.state[k]);
        worst = std::max(worst, diff);
        check.expect(diff <= 1e-9, "scenario " + std::to_string(i) + " record " + std::to_string(r) + " " +
                                       std::string(to_string(kAllCategories[k])) + " differs by " + fmt(diff));
      }
      std::vector<std::pair<int, double>> fired;
      for (const auto& s : got.fired) fired.emplace_back(static_cast<int>(index_of(s.category)), s.intensity.value());
      auto sorted_want = want.fired;
      std::sort(fired.begin(), fired.end());
      std::sort(sorted_want.begin(), sorted_want.end());
      bool same = fired.size() == sorted_want.size();
      for (std::size_t k = 0; same && k < fired.size(); ++k) {
        same = fired[k].first == sorted_want[k].first && std::abs(fired[k].second - sorted_want[k].second) <= 1e-9;
      }
      check.expect(same, "scenario " + std::to_string(i) + " record " + std::to_string(r) + " fired signals differ");
    }
  }
  return check.result("100 scenarios, " + std::to_string(records) + " records, max |diff| " + fmt(worst));
}

// --- 10 --------------------------------------------------------------------

Outcome_ determinism() {
  Check check;
  std::vector<std::pair<KnowledgeBase, Scenario>> cases;
  cases.emplace_back(load_kb_file(fixture("banana_kb.json")), load_scenario_file(fixture("golden_banana.json")));
  cases.emplace_back(load_kb_file(fixture("banana_kb.json")), load_scenario_file(fixture("banana_repeats.json")));
  std::mt19937_64 rng(10010);
  for (int i = 0; i < 50; ++i) {
    KnowledgeBase kb = random_kb(rng);
    Scenario sc = random_scenario(rng, kb);
    cases.emplace_back(std::move(kb), std::move(sc));
  }
  for (const auto& [kb, sc] : cases) {
    for (ProfileName profile : {ProfileName::Full22, ProfileName::OrtonyReduced, ProfileName::Ekman6}) {
      const auto& pr = ExpressionProfile::get(profile);
      const std::string a = emit_trace(run_scenario(kb, sc, pr, ExpressionMode::Blend, EngineParams{}), TraceFormat::Csv);
      const std::string b = emit_trace(run_scenario(kb, sc, pr, ExpressionMode::Blend, EngineParams{}), TraceFormat::Csv);
      check.expect(a == b, "csv differs between runs");
      const std::string ja = emit_trace(run_scenario(kb, sc, pr, ExpressionMode::Dominant, EngineParams{}), TraceFormat::Jsonl);
      const std::string jb = emit_trace(run_scenario(kb, sc, pr, ExpressionMode::Dominant, EngineParams{}), TraceFormat::Jsonl);
      check.expect(ja == jb, "jsonl differs between runs");
    }
  }
  return check.result(std::to_string(cases.size()) + " scenarios x 3 profiles byte-identical");
}

struct Criterion {
  int number;
  const char* name;
  std::function<Outcome_()> run;
  double budget_s;  // 0: no runtime bound
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "golden-banana", golden_banana, 1.0},
      {2, "goal-hierarchy-ordering", goal_ordering, 5.0},
      {3, "repetition-damping", repetition_damping, 0.0},
      {4, "likelihood-floor-recovery", likelihood_floor, 0.0},
      {5, "ekman6-partition", ekman_partition, 0.0},
      {6, "fortunes-exclusion", fortunes_exclusion, 0.0},
      {7, "prospect-lifecycle", prospect_lifecycle, 0.0},
      {8, "quiescence-closure", quiescence_closure, 0.0},
      {9, "oracle-equivalence", oracle_equivalence, 30.0},
      {10, "determinism", determinism, 0.0},
  };

  int failed = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome_ out;
    try {
      out = c.run();
    } catch (const std::exception& e) {
      out = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.budget_s > 0.0 && secs >= c.budget_s) {
      out.pass = false;
      out.detail += "; over the " + fmt(c.budget_s) + " s budget";
    }
    if (!out.pass) ++failed;
    std::printf("[%s] %2d %-26s %s (%.3f s)\n", out.pass ? "PASS" : "FAIL", c.number, c.name, out.detail.c_str(), secs);
  }
  std::printf("%s: %d/%zu criteria passed\n", failed == 0 ? "PASS" : "FAIL",
              static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
