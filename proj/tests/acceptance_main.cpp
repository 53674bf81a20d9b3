// Acceptance suite: one criterion per section, one PASS/FAIL line each.
// Run with --criterion N to execute a single section (used by ctest), or
// with no arguments to run everything.

#include <sys/wait.h>
#include <unistd.h>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <memory>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "helpers.hpp"
#include "idm/approx.hpp"
#include "idm/count_occ.hpp"
#include "idm/dynamic.hpp"
#include "idm/exact.hpp"
#include "idm/oracle.hpp"
#include "idm/squares.hpp"

using namespace idm;
using testutil::Rng;
namespace fs = std::filesystem;

namespace {

int g_failures = 0;

void report(int criterion, bool ok, const std::string& what,
            const std::string& detail = "") {
  std::cout << (ok ? "PASS" : "FAIL") << " criterion " << criterion << ": " << what;
  if (!detail.empty()) std::cout << " [" << detail << "]";
  std::cout << std::endl;
  if (!ok) ++g_failures;
}

struct Proc {
  int exit_code;
  std::string out;
};

Proc run_cli(const std::string& args) {
  std::string cmd = std::string(IDM_CLI_PATH) + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return {127, "popen failed"};
  std::string out;
  char buf[1 << 14];
  size_t got;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, got);
  return {WEXITSTATUS(pclose(pipe)), out};
}

struct TempDir {
  fs::path dir;
  TempDir() {
    dir = fs::temp_directory_path() / ("idm_acceptance_" + std::to_string(::getpid()));
    fs::create_directories(dir);
  }
  ~TempDir() { fs::remove_all(dir); }
  std::string file(const std::string& name, const std::string& content) const {
    fs::path p = dir / name;
    std::ofstream(p, std::ios::binary) << content;
    return p.string();
  }
};

// The random instance family shared by criteria 2, 3 and 6.
struct Instance {
  std::string text;
  std::vector<std::pair<int32_t, int32_t>> dict;
};

Instance make_instance(uint64_t seed) {
  Rng rng(seed);
  Instance inst;
  int32_t n = rng.ri(1, 200);
  inst.text = testutil::random_text(rng, n, rng.ri(1, 4));
  int32_t d = rng.ri(0, 50);
  inst.dict = testutil::random_fragments(rng, n, d);
  return inst;
}

constexpr int kInstances = 500;
constexpr uint64_t kSeedBase = 0x1D5EED00;

// The deterministic corpus shared by criteria 4 and 6.
std::vector<std::string> squares_corpus() {
  std::vector<std::string> texts;
  for (int32_t n : {34, 89, 200, 300}) texts.push_back(testutil::fibonacci_word(n));
  for (int32_t n : {64, 128, 300}) texts.push_back(testutil::thue_morse(n));
  for (int32_t n : {1, 7, 120, 300}) texts.push_back(std::string(n, 'a'));
  Rng rng(0x5B1A);
  for (int t = 0; t < 6; ++t)
    texts.push_back(testutil::random_text(rng, rng.ri(2, 300), 2));
  return texts;
}

// --------------------------------------------------------------------------

void criterion_1_worked_example() {
  using Clock = std::chrono::steady_clock;
  TempDir tmp;
  auto text = tmp.file("t.txt", "adaaaabaabbaac\n");
  auto dict = tmp.file("d.txt", "3 4\n3 6\n9 12\n14 14\n");
  auto qs = tmp.file("q.txt", "5 12\n2 6\n2 12\n");
  auto t0 = Clock::now();
  Proc canonical =
      run_cli("query " + text + " " + dict + " " + qs + " --mode exact-canonical --m 4");
  Proc pathset =
      run_cli("query " + text + " " + dict + " " + qs + " --mode exact-pathset --m 2");
  Proc squares = run_cli("query " + text + " " + dict + " " + qs + " --mode squares");
  auto t1 = Clock::now();
  double secs = std::chrono::duration<double>(t1 - t0).count();
  bool ok = canonical.exit_code == 0 && canonical.out == "2\n2\n3\n" &&
            pathset.exit_code == 0 && pathset.out == "2\n2\n3\n" &&
            squares.exit_code == 0 && squares.out == "3\n2\n4\n" && secs < 1.0;
  report(1, ok, "worked-example fixtures exact in every mode",
         "elapsed " + std::to_string(secs) + " s");
}

void criterion_2_exact_oracle() {
  int64_t mismatches = 0, windows = 0;
  for (int t = 0; t < kInstances; ++t) {
    Instance inst = make_instance(kSeedBase + t);
    int32_t n = (int32_t)inst.text.size();
    MirroredText mt{Text(inst.text)};
    oracle::NaiveDict nd(inst.text, inst.dict);
    auto eng = std::make_shared<DeltaEngine>(
        mt, Dictionary(mt.fwd, testutil::as_fragments(inst.dict)));
    int32_t msqrt = std::max<int32_t>(1, (int32_t)std::lround(std::sqrt((double)n)));
    std::vector<int32_t> ms{1, msqrt, n};
    for (int32_t m : ms) {
      CanonicalIndex can(eng, m);
      PathSetIndex ps(eng, m);
      for (int32_t i = 1; i <= n; ++i)
        for (int32_t j = i; j <= n; ++j) {
          int64_t truth = nd.count_distinct(i, j);
          mismatches += can.count_distinct(i, j) != truth;
          mismatches += ps.count_distinct(i, j) != truth;
          ++windows;
        }
    }
  }
  report(2, mismatches == 0, "both exact tradeoffs equal brute force on all windows",
         std::to_string(windows) + " window checks, " + std::to_string(mismatches) +
             " mismatches");
}

void criterion_3_approx_guarantee() {
  int64_t violations = 0, windows = 0;
  for (int t = 0; t < kInstances; ++t) {
    Instance inst = make_instance(kSeedBase + t);
    int32_t n = (int32_t)inst.text.size();
    MirroredText mt{Text(inst.text)};
    oracle::NaiveDict nd(inst.text, inst.dict);
    ApproxIndex ap(mt, Dictionary(mt.fwd, testutil::as_fragments(inst.dict)));
    for (int32_t i = 1; i <= n; ++i)
      for (int32_t j = i; j <= n; ++j) {
        int64_t truth = nd.count_distinct(i, j);
        ApproxAnswer got = ap.query(i, j);
        if (!(truth <= got.value && got.value <= 2 * truth)) ++violations;
        // equality whenever no occurring pattern lives in both halves
        bool in_both = false;
        if (got.split)
          for (int32_t pid = 0; pid < nd.size() && !in_both; ++pid)
            in_both = nd.occurs_in(pid, i, got.i_prime) &&
                      nd.occurs_in(pid, got.j_prime, j);
        if (!in_both && got.value != truth) ++violations;
        ++windows;
      }
  }
  report(3, violations == 0,
         "approx2 stays within [truth, 2*truth], exact when halves do not overlap",
         std::to_string(windows) + " windows, " + std::to_string(violations) +
             " violations");
}

void criterion_4_squares_oracle() {
  int64_t mismatches = 0, windows = 0;
  for (const std::string& s : squares_corpus()) {
    TextIndex ti{Text(s)};
    SquaresIndex sq(ti);
    oracle::NaiveSquares naive(s);
    for (int32_t i = 1; i <= (int32_t)s.size(); ++i)
      for (int32_t j = i; j <= (int32_t)s.size(); ++j) {
        mismatches += sq.count_distinct(i, j) != naive.count(i, j);
        ++windows;
      }
  }
  report(4, mismatches == 0,
         "squares mode equals exhaustive counting on fibonacci/thue-morse/unary/random",
         std::to_string(windows) + " windows, " + std::to_string(mismatches) +
             " mismatches");
}

void criterion_5_sub_oracles() {
  int64_t bad = 0;
  int64_t c_runs = 0, c_rep = 0, c_blcp = 0, c_3fc = 0, c_per = 0, c_bsq = 0,
          c_rsq = 0;
  Rng rng(0xACC5);

  // runs: exhaustive definition check, texts up to n = 200
  for (int t = 0; t < 800; ++t) {
    std::string s = testutil::random_text(
        rng, rng.ri(1, t % 8 == 0 ? 200 : 96), rng.ri(1, 3));
    TextIndex ti{Text(s)};
    auto naive = oracle::runs(s);
    if (naive.size() != ti.runs().size()) {
      ++bad;
      continue;
    }
    for (size_t r = 0; r < naive.size(); ++r) {
      const Run& got = ti.runs()[r];
      bad += !(naive[r].start == got.start && naive[r].end == got.end &&
               naive[r].period == got.period);
      ++c_runs;
    }
    c_runs += 1;  // the per-text set comparison itself

    // run_of and reconstruction on sampled fragments
    for (int q = 0; q < 20; ++q) {
      int32_t a = rng.ri(1, (int32_t)s.size()), b = rng.ri(a, (int32_t)s.size());
      std::string sub = s.substr(a - 1, b - a + 1);
      int32_t per = oracle::period(sub);
      auto run = ti.run_of(Fragment(a, b));
      if (run.has_value() != (2 * per <= (int32_t)sub.size()) ||
          (run && run->period != per)) {
        ++bad;
        continue;
      }
      if (run) {
        PeriodicRep rep = ti.periodic_rep(Fragment(a, b));
        std::string root(ti.text().sub(ti.root_fragment(rep.root_id)));
        std::string rec = root.substr(root.size() - rep.head);
        for (int32_t x = 0; x < rep.reps; ++x) rec += root;
        rec += root.substr(0, rep.tail);
        bad += rec != sub;
      }
      ++c_rep;
    }
  }

  // bounded lcp
  for (int t = 0; t < 260; ++t) {
    std::string s = testutil::random_text(rng, rng.ri(1, 80), rng.ri(1, 4));
    TextIndex ti{Text(s)};
    int32_t n = (int32_t)s.size();
    for (int q = 0; q < 40; ++q) {
      int32_t u1 = rng.ri(1, n), u2 = rng.ri(u1, n);
      int32_t v1 = rng.ri(1, n), v2 = rng.ri(v1, n);
      bad += bounded_lcp(ti, Fragment(u1, u2), Fragment(v1, v2)) !=
             oracle::bounded_lcp(s, u1, u2, v1, v2);
      ++c_blcp;
    }
  }

  // three-fragment counting and periodic counting
  for (int t = 0; t < 650; ++t) {
    std::string s = testutil::random_text(rng, rng.ri(10, 100), rng.ri(1, 2));
    int32_t n = (int32_t)s.size();
    auto prs = testutil::random_fragments(rng, n, rng.ri(0, 12));
    MirroredText mt{Text(s)};
    ApproxIndex ap(mt, Dictionary(mt.fwd, testutil::as_fragments(prs)));
    for (int q = 0; q < 18; ++q) {
      int32_t f1 = rng.ri(0, (n - 1) / 10);
      int32_t f2 = rng.ri(8 * f1, n - 2 * f1);
      if (2 * f1 + f2 > n || 2 * f1 + f2 < 1) continue;
      int32_t start = rng.ri(1, n - 2 * f1 - f2 + 1);
      Fragment F1(start, start + f1 - 1), F2(start + f1, start + f1 + f2 - 1),
          F3(start + f1 + f2, start + 2 * f1 + f2 - 1);
      bad += ap.three_fragments_count(F1, F2, F3) !=
             oracle::three_fragments(s, prs, F1.start, F1.end, F2.start, F2.end,
                                     F3.start, F3.end);
      ++c_3fc;
    }
    // sample periodic operands inside runs so the suite gets real volume
    const auto& runs = mt.fwd.runs();
    for (int q = 0; q < 40; ++q) {
      int32_t a, b;
      if (!runs.empty()) {
        const Run& r = runs[rng.ri(0, (int32_t)runs.size() - 1)];
        a = rng.ri(r.start, r.end);
        b = rng.ri(a, r.end);
      } else {
        a = rng.ri(1, n);
        b = rng.ri(a, n);
      }
      if (!oracle::is_periodic(std::string_view(s).substr(a - 1, b - a + 1))) continue;
      bad += ap.periodic_count(Fragment(a, b)) != oracle::periodic_count(s, prs, a, b);
      ++c_per;
    }
  }

  // square arithmetic over every run of random texts
  for (int t = 0; t < 1200; ++t) {
    std::string s = testutil::random_text(rng, rng.ri(4, 80), rng.ri(1, 2));
    TextIndex ti{Text(s)};
    SquaresIndex sq(ti);
    for (const Run& r : ti.runs()) {
      std::string f = s.substr(r.start - 1, r.len());
      bad += sq.run_squares(Fragment(r.start, r.end)) != oracle::run_squares(f);
      ++c_rsq;
      for (int q = 0; q < 6; ++q) {
        int32_t f1 = rng.ri(0, r.period), f2 = rng.ri(0, r.period);
        Fragment F1 = f1 ? Fragment(r.start, r.start + f1 - 1)
                         : Fragment::empty_at(r.start);
        Fragment F2 =
            f2 ? Fragment(r.end - f2 + 1, r.end) : Fragment::empty_at(r.end + 1);
        bad += sq.bsq(Fragment(r.start, r.end), F1, F2) != oracle::bsq(f, f1, f2);
        bad += sq.bsq_prime(Fragment(r.start, r.end), f1) !=
               oracle::bsq_prime_sum(r.len(), r.period, f1);
        c_bsq += 2;
      }
    }
  }

  std::ostringstream detail;
  detail << "cases: runs=" << c_runs << " rep=" << c_rep << " blcp=" << c_blcp
         << " 3fc=" << c_3fc << " periodic=" << c_per << " bsq=" << c_bsq
         << " runsq=" << c_rsq << ", mismatches=" << bad;
  bool volume = c_runs >= 10000 && c_rep >= 10000 && c_blcp >= 10000 &&
                c_3fc >= 10000 && c_per >= 10000 && c_bsq >= 10000 &&
                c_rsq >= 10000;
  report(5, bad == 0 && volume, "sub-oracle suites agree with brute force",
         detail.str());
}

void criterion_6_combinatorial_bounds() {
  int64_t violations = 0, texts = 0;
  auto check_text = [&](const std::string& s) {
    TextIndex ti{Text(s)};
    double n = (double)s.size();
    double logn = std::max(1.0, std::log2(n));
    double sum_exp = 0;
    int64_t hp_len = 0;
    for (const Run& r : ti.runs()) {
      sum_exp += r.exponent();
      if (4 * r.period <= r.len()) hp_len += r.len();
    }
    SquaresIndex sq(ti);
    violations += !(ti.runs().size() <= s.size());
    violations += !(sum_exp <= 4.0 * n);
    violations += !(hp_len <= 8.0 * n * logn);
    violations += !(sq.boundary_total() <= 8.0 * n * logn);
    ++texts;
  };
  for (int t = 0; t < kInstances; ++t) check_text(make_instance(kSeedBase + t).text);
  for (const std::string& s : squares_corpus()) check_text(s);
  report(6, violations == 0,
         "run counts, exponent sums, periodic-run and boundary volumes inside envelopes",
         std::to_string(texts) + " texts");
}

void criterion_7_dynamic() {
  int64_t violations = 0, queries = 0;
  int32_t ks[3] = {1, 8, 32};
  Rng rng(0xD4A);
  for (int sched = 0; sched < 200; ++sched) {
    int32_t n = rng.ri(8, 128);
    std::string s = testutil::random_text(rng, n, rng.ri(1, 3));
    MirroredText mt{Text(s)};
    auto init = testutil::random_fragments(rng, n, rng.ri(0, 8));
    DynamicIndex dyn(mt, testutil::as_fragments(init), ks[sched % 3]);

    std::vector<std::pair<int32_t, int32_t>> live;
    std::set<std::string> contents;
    auto text_of = [&](int32_t a, int32_t b) { return s.substr(a - 1, b - a + 1); };
    for (auto [a, b] : init)
      if (contents.insert(text_of(a, b)).second) live.push_back({a, b});

    int ops = rng.ri(20, 300);
    for (int step = 0; step < ops; ++step) {
      int op = rng.ri(0, 2);
      if (op == 0) {
        int32_t a = rng.ri(1, n), b = rng.ri(a, n);
        dyn.insert_pattern(Fragment(a, b));
        if (contents.insert(text_of(a, b)).second) live.push_back({a, b});
      } else if (op == 1 && !live.empty()) {
        int32_t idx = rng.ri(0, (int32_t)live.size() - 1);
        auto [a, b] = live[idx];
        dyn.delete_pattern(Fragment(a, b));
        contents.erase(text_of(a, b));
        live.erase(live.begin() + idx);
      } else {
        int32_t i = rng.ri(1, n), j = rng.ri(i, n);
        int64_t truth = live.empty() ? 0 : oracle::count_distinct(s, live, i, j);
        int64_t got = dyn.count_distinct(i, j);
        violations += !(truth <= got && got <= 2 * truth);
        ++queries;
      }
    }
    if (sched % 10 == 0) {  // 20 sampled schedules: fold and compare to fresh
      dyn.rebuild();
      ApproxIndex fresh(mt, Dictionary(mt.fwd, testutil::as_fragments(live)));
      for (int32_t i = 1; i <= n; ++i)
        for (int32_t j = i; j <= n; ++j)
          violations += dyn.base().count_distinct(i, j) != fresh.count_distinct(i, j);
    }
  }
  report(7, violations == 0,
         "dynamic schedules keep the 2-approximation and fold to fresh builds",
         std::to_string(queries) + " queries, " + std::to_string(violations) +
             " violations");
}

void criterion_8_bench_scaling() {
  Proc bench = run_cli(
      "bench --modes exact-canonical --n 100000 --d 1000 --m 16,32,64,128,256,512 "
      "--queries 200 --seed 1");
  if (bench.exit_code != 0) {
    report(8, false, "bench run failed", bench.out.substr(0, 200));
    return;
  }
  std::vector<double> ms, lat, bytes;
  std::istringstream ss(bench.out);
  std::string line;
  std::getline(ss, line);  // header
  while (std::getline(ss, line)) {
    std::vector<std::string> cols;
    std::stringstream ls(line);
    std::string tok;
    while (std::getline(ls, tok, ',')) cols.push_back(tok);
    if (cols.size() != 8) continue;
    ms.push_back(std::stod(cols[3]));
    bytes.push_back(std::stod(cols[5]));
    lat.push_back(std::stod(cols[6]));
  }
  if (ms.size() != 6) {
    report(8, false, "bench produced an unexpected number of rows",
           std::to_string(ms.size()));
    return;
  }
  auto fit_slope = [](const std::vector<double>& xs, const std::vector<double>& ys,
                      double& slope, double& intercept) {
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    int n = (int)xs.size();
    for (int i = 0; i < n; ++i) {
      double x = std::log2(xs[i]), y = std::log2(ys[i]);
      sx += x;
      sy += y;
      sxx += x * x;
      sxy += x * y;
    }
    slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
    intercept = (sy - slope * sx) / n;
  };
  auto max_residual = [](const std::vector<double>& xs, const std::vector<double>& ys,
                         double slope, double intercept) {
    double worst = 1.0;
    for (size_t i = 0; i < xs.size(); ++i) {
      double fit = std::exp2(intercept + slope * std::log2(xs[i]));
      double ratio = ys[i] > fit ? ys[i] / fit : fit / ys[i];
      worst = std::max(worst, ratio);
    }
    return worst;
  };
  double s_lat, b_lat, s_mem, b_mem;
  fit_slope(ms, lat, s_lat, b_lat);
  fit_slope(ms, bytes, s_mem, b_mem);
  double r_lat = max_residual(ms, lat, s_lat, b_lat);
  double r_mem = max_residual(ms, bytes, s_mem, b_mem);
  bool ok = s_lat > 0.0 && s_lat <= 1.35 && r_lat <= 3.0 && s_mem <= -1.7 &&
            r_mem <= 3.0;
  std::ostringstream detail;
  detail << "latency slope " << s_lat << " (residual x" << r_lat << "), memory slope "
         << s_mem << " (residual x" << r_mem << ")";
  report(8, ok, "canonical query latency scales ~m and table memory ~1/m^2",
         detail.str());
}

void criterion_9_determinism() {
  TempDir tmp;
  Rng rng(0x9D9D);
  std::string s = testutil::random_text(rng, 160, 3);
  auto text = tmp.file("t.txt", s + "\n");
  std::string dict_lines, query_lines, ops_lines;
  for (auto [a, b] : testutil::random_fragments(rng, 160, 24))
    dict_lines += std::to_string(a) + " " + std::to_string(b) + "\n";
  for (int q = 0; q < 120; ++q) {
    int32_t i = rng.ri(1, 160), j = rng.ri(i, 160);
    query_lines += std::to_string(i) + " " + std::to_string(j) + "\n";
  }
  {
    Rng orng(0x0D5);
    std::set<std::pair<int32_t, int32_t>> live;
    for (auto [a, b] : testutil::random_fragments(rng, 160, 24)) live.insert({a, b});
    for (auto [a, b] : live) ops_lines += "+ " + std::to_string(a) + " " + std::to_string(b) + "\n";
    for (int q = 0; q < 40; ++q) {
      int32_t i = orng.ri(1, 160), j = orng.ri(i, 160);
      ops_lines += "? " + std::to_string(i) + " " + std::to_string(j) + "\n";
    }
  }
  auto dict = tmp.file("d.txt", dict_lines);
  auto qs = tmp.file("q.txt", query_lines);
  auto ops = tmp.file("ops.txt", ops_lines);

  std::vector<std::string> cmds;
  for (const char* mode :
       {"approx2", "exact-canonical", "exact-pathset", "squares", "count"})
    cmds.push_back("query " + text + " " + dict + " " + qs + " --mode " + mode);
  cmds.push_back("dynamic " + text + " " + dict + " " + ops + " --k 8");
  cmds.push_back("verify --seed 11 --sizes 12,24 --trials 3");

  bool ok = true;
  for (const std::string& cmd : cmds) {
    Proc first = run_cli(cmd);
    ok &= first.exit_code == 0;
    for (int rep = 0; rep < 2; ++rep) {
      Proc again = run_cli(cmd);
      ok &= again.exit_code == first.exit_code && again.out == first.out;
    }
  }
  report(9, ok, "byte-identical outputs across three repeated runs",
         std::to_string(cmds.size()) + " commands x 3 runs");
}

}  // namespace

int main(int argc, char** argv) {
  int only = 0;
  for (int a = 1; a < argc; ++a)
    if (std::strcmp(argv[a], "--criterion") == 0 && a + 1 < argc)
      only = std::atoi(argv[a + 1]);
  std::function<void()> suites[] = {
      criterion_1_worked_example, criterion_2_exact_oracle,
      criterion_3_approx_guarantee, criterion_4_squares_oracle,
      criterion_5_sub_oracles,  criterion_6_combinatorial_bounds,
      criterion_7_dynamic,      criterion_8_bench_scaling,
      criterion_9_determinism};
  for (int c = 1; c <= 9; ++c)
    if (only == 0 || only == c) suites[c - 1]();
  return g_failures == 0 ? 0 : 1;
}
