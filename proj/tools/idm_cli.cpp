// idm: build internal-dictionary indexes over a text and answer
// CountDistinct / Count queries in the chosen mode, stream dynamic
// dictionary updates, cross-check every operation against brute force, or
// benchmark the tradeoff structures.

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <random>
#include <set>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "idm/approx.hpp"
#include "idm/count_occ.hpp"
#include "idm/dynamic.hpp"
#include "idm/exact.hpp"
#include "idm/oracle.hpp"
#include "idm/squares.hpp"

namespace {

using namespace idm;

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Text read_text(const std::string& path) {
  std::string data = read_file(path);
  if (!data.empty() && data.back() == '\n') data.pop_back();
  return Text(std::move(data));
}

std::vector<std::string> split_lines(const std::string& data) {
  std::vector<std::string> lines;
  size_t pos = 0;
  while (pos < data.size()) {
    size_t nl = data.find('\n', pos);
    if (nl == std::string::npos) {
      lines.push_back(data.substr(pos));
      break;
    }
    lines.push_back(data.substr(pos, nl - pos));
    pos = nl + 1;
  }
  return lines;
}

std::vector<Fragment> parse_dict(const std::string& path, int32_t n) {
  std::vector<Fragment> out;
  auto lines = split_lines(read_file(path));
  for (size_t idx = 0; idx < lines.size(); ++idx) {
    const std::string& line = lines[idx];
    if (line.empty()) continue;
    std::istringstream ss(line);
    long long a, b;
    std::string rest;
    if (!(ss >> a >> b) || (ss >> rest))
      throw ParseError(path + ":" + std::to_string(idx + 1) +
                       ": malformed dictionary line: '" + line + "'");
    if (a < 1 || b > n || b < a)
      throw ParseError(path + ":" + std::to_string(idx + 1) + ": pattern (" +
                       std::to_string(a) + ", " + std::to_string(b) +
                       ") is empty or out of range for n=" + std::to_string(n));
    out.push_back(Fragment(static_cast<int32_t>(a), static_cast<int32_t>(b)));
  }
  return out;
}

std::vector<Fragment> parse_queries(const std::string& path, int32_t n) {
  std::vector<Fragment> out;
  auto lines = split_lines(read_file(path));
  for (size_t idx = 0; idx < lines.size(); ++idx) {
    const std::string& line = lines[idx];
    if (line.empty()) continue;
    std::istringstream ss(line);
    long long i, j;
    std::string rest;
    if (!(ss >> i >> j) || (ss >> rest))
      throw ParseError(path + ":" + std::to_string(idx + 1) +
                       ": malformed query line: '" + line + "'");
    if (i < 1 || i > n || j > n || j < i - 1)
      throw ParseError(path + ":" + std::to_string(idx + 1) + ": window (" +
                       std::to_string(i) + ", " + std::to_string(j) +
                       ") out of range for n=" + std::to_string(n));
    out.push_back(Fragment(static_cast<int32_t>(i), static_cast<int32_t>(j)));
  }
  return out;
}

struct DynOp {
  char kind;  // '+', '-', '?'
  int32_t a, b;
};

std::vector<DynOp> parse_ops(const std::string& path, int32_t n) {
  std::vector<DynOp> out;
  auto lines = split_lines(read_file(path));
  for (size_t idx = 0; idx < lines.size(); ++idx) {
    const std::string& line = lines[idx];
    if (line.empty()) continue;
    std::istringstream ss(line);
    std::string op, rest;
    long long a, b;
    if (!(ss >> op >> a >> b) || (ss >> rest) ||
        (op != "+" && op != "-" && op != "?"))
      throw ParseError(path + ":" + std::to_string(idx + 1) +
                       ": malformed op line: '" + line + "'");
    bool is_query = op == "?";
    long long b_lo = is_query ? a - 1 : a;
    if (a < 1 || a > n || b > n || b < b_lo)
      throw ParseError(path + ":" + std::to_string(idx + 1) + ": operands (" +
                       std::to_string(a) + ", " + std::to_string(b) +
                       ") out of range for n=" + std::to_string(n));
    out.push_back({op[0], static_cast<int32_t>(a), static_cast<int32_t>(b)});
  }
  return out;
}

void print_answers(const std::vector<int64_t>& answers) {
  std::string buf;
  for (int64_t v : answers) {
    buf += std::to_string(v);
    buf += '\n';
  }
  fwrite(buf.data(), 1, buf.size(), stdout);
}

template <typename Fn>
std::vector<int64_t> answer_all(const std::vector<Fragment>& queries, int threads,
                                Fn&& fn) {
  std::vector<int64_t> out(queries.size());
  if (threads <= 1) {
    for (size_t q = 0; q < queries.size(); ++q)
      out[q] = fn(queries[q].start, queries[q].end);
    return out;
  }
  std::atomic<size_t> next{0};
  std::vector<std::thread> pool;
  for (int t = 0; t < threads; ++t)
    pool.emplace_back([&] {
      while (true) {
        size_t q = next.fetch_add(64);
        if (q >= queries.size()) break;
        size_t hi = std::min(queries.size(), q + 64);
        for (; q < hi; ++q) out[q] = fn(queries[q].start, queries[q].end);
      }
    });
  for (auto& th : pool) th.join();
  return out;
}

int run_query(const std::string& text_path, const std::string& dict_path,
              const std::string& queries_path, const std::string& mode,
              int32_t m_param, int64_t max_occ, int threads) {
  Text text = read_text(text_path);
  if (text.n() == 0) throw ParseError(text_path + ": empty text");
  MirroredText mt(std::move(text));
  const int32_t n = mt.n();
  auto queries = parse_queries(queries_path, n);
  int32_t m = m_param > 0
                  ? m_param
                  : std::max<int32_t>(1, (int32_t)std::lround(std::sqrt((double)n)));
  if (m > n) m = n;

  std::vector<int64_t> answers;
  if (mode == "squares") {
    SquaresIndex idx(mt.fwd);
    answers = answer_all(queries, threads,
                         [&](int32_t i, int32_t j) { return idx.count_distinct(i, j); });
  } else {
    Dictionary dict(mt.fwd, parse_dict(dict_path, n));
    if (mode == "approx2") {
      ApproxIndex idx(mt, std::move(dict), ApproxOptions{max_occ});
      answers = answer_all(queries, threads, [&](int32_t i, int32_t j) {
        return idx.count_distinct(i, j);
      });
    } else if (mode == "exact-canonical") {
      auto eng = std::make_shared<DeltaEngine>(mt, std::move(dict));
      CanonicalIndex idx(eng, m);
      answers = answer_all(queries, threads, [&](int32_t i, int32_t j) {
        return idx.count_distinct(i, j);
      });
    } else if (mode == "exact-pathset") {
      auto eng = std::make_shared<DeltaEngine>(mt, std::move(dict));
      PathSetIndex idx(eng, m, max_occ);
      answers = answer_all(queries, threads, [&](int32_t i, int32_t j) {
        return idx.count_distinct(i, j);
      });
    } else if (mode == "count") {
      CountOccIndex idx(mt.fwd, dict, max_occ);
      answers = answer_all(queries, threads,
                           [&](int32_t i, int32_t j) { return idx.count(i, j); });
    } else {
      throw ParseError("unknown mode: " + mode);
    }
  }
  print_answers(answers);
  return 0;
}

int run_dynamic(const std::string& text_path, const std::string& dict_path,
                const std::string& ops_path, int32_t k, int64_t max_occ) {
  Text text = read_text(text_path);
  if (text.n() == 0) throw ParseError(text_path + ": empty text");
  MirroredText mt(std::move(text));
  const int32_t n = mt.n();
  auto initial = parse_dict(dict_path, n);
  auto ops = parse_ops(ops_path, n);
  DynamicIndex dyn(mt, initial, k, ApproxOptions{max_occ});
  std::vector<int64_t> answers;
  for (const DynOp& op : ops) {
    switch (op.kind) {
      case '+':
        dyn.insert_pattern(Fragment(op.a, op.b));
        break;
      case '-':
        dyn.delete_pattern(Fragment(op.a, op.b));
        break;
      default:
        answers.push_back(dyn.count_distinct(op.a, op.b));
    }
  }
  print_answers(answers);
  return 0;
}

// ---------------------------------------------------------------------------
// verify: randomized cross-checks of every operation against brute force.

struct VerifyContext {
  std::mt19937_64 rng;
  std::string text;
  std::vector<std::pair<int32_t, int32_t>> dict;

  int32_t ri(int32_t lo, int32_t hi) {
    return lo + static_cast<int32_t>(rng() % (hi - lo + 1));
  }
};

[[noreturn]] void report_mismatch(const VerifyContext& ctx, const std::string& suite,
                                  const std::string& query, long long want,
                                  long long got) {
  std::cout << "MISMATCH in " << suite << "\n";
  std::cout << "text: " << ctx.text << "\n";
  std::cout << "dictionary:";
  for (auto& [a, b] : ctx.dict) std::cout << " (" << a << "," << b << ")";
  std::cout << "\nquery: " << query << "\nexpected: " << want << "\nactual: " << got
            << "\n";
  std::exit(3);
}

void expect(const VerifyContext& ctx, const std::string& suite, const std::string& q,
            long long want, long long got) {
  if (want != got) report_mismatch(ctx, suite, q, want, got);
}

int run_verify(uint64_t seed, const std::vector<int32_t>& sizes, int trials) {
  int64_t cases = 0;
  std::mt19937_64 master(seed);
  for (int32_t size : sizes) {
    for (int trial = 0; trial < trials; ++trial) {
      VerifyContext ctx;
      ctx.rng.seed(master());
      int32_t n = ctx.ri(1, size);
      int32_t sigma = ctx.ri(1, 4);
      ctx.text.assign(n, 'a');
      for (auto& c : ctx.text) c = static_cast<char>('a' + ctx.ri(0, sigma - 1));
      int32_t d = ctx.ri(0, std::min(n, 12));
      std::vector<Fragment> frags;
      for (int32_t p = 0; p < d; ++p) {
        int32_t a = ctx.ri(1, n), b = ctx.ri(a, n);
        ctx.dict.push_back({a, b});
        frags.push_back(Fragment(a, b));
      }

      MirroredText mt{Text(ctx.text)};
      const TextIndex& ti = mt.fwd;
      oracle::NaiveDict nd(ctx.text, ctx.dict);
      Dictionary dict(ti, frags);

      auto naive_runs = oracle::runs(ctx.text);
      const auto& runs = ti.runs();
      expect(ctx, "runs/count", "-", (long long)naive_runs.size(),
             (long long)runs.size());
      for (size_t r = 0; r < runs.size(); ++r) {
        if (naive_runs[r].start != runs[r].start || naive_runs[r].end != runs[r].end ||
            naive_runs[r].period != runs[r].period)
          report_mismatch(ctx, "runs/set", "run #" + std::to_string(r),
                          naive_runs[r].start, runs[r].start);
        ++cases;
      }

      for (int rep = 0; rep < 20; ++rep) {
        int32_t i = ctx.ri(1, n), j = ctx.ri(1, n);
        expect(ctx, "lce", std::to_string(i) + " " + std::to_string(j),
               oracle::lce(ctx.text, i, j), ti.lce(i, j));
        int32_t a = ctx.ri(1, n), b = ctx.ri(a, n);
        std::string sub = ctx.text.substr(a - 1, b - a + 1);
        auto run = ti.run_of(Fragment(a, b));
        int32_t per = oracle::period(sub);
        expect(ctx, "run_of/presence", std::to_string(a) + " " + std::to_string(b),
               2 * per <= (int32_t)sub.size(), run.has_value());
        if (run) {
          expect(ctx, "run_of/period", std::to_string(a) + " " + std::to_string(b),
                 per, run->period);
          auto rform = ti.periodic_rep(Fragment(a, b));
          std::string root(ti.text().sub(ti.root_fragment(rform.root_id)));
          std::string rec = root.substr(root.size() - rform.head);
          for (int32_t t = 0; t < rform.reps; ++t) rec += root;
          rec += root.substr(0, rform.tail);
          if (rec != sub)
            report_mismatch(ctx, "periodic_rep/reconstruction",
                            std::to_string(a) + " " + std::to_string(b), 0, 1);
        }
        if (b - a + 1 <= 64)
          expect(ctx, "minimal_rotation", std::to_string(a) + " " + std::to_string(b),
                 oracle::minimal_rotation(sub), ti.minimal_rotation(Fragment(a, b)));
        int32_t u1 = ctx.ri(1, n), u2 = ctx.ri(u1, n);
        int32_t v1 = ctx.ri(1, n), v2 = ctx.ri(v1, n);
        expect(ctx, "bounded_lcp",
               "[" + std::to_string(u1) + "," + std::to_string(u2) + "] in [" +
                   std::to_string(v1) + "," + std::to_string(v2) + "]",
               oracle::bounded_lcp(ctx.text, u1, u2, v1, v2),
               bounded_lcp(ti, Fragment(u1, u2), Fragment(v1, v2)));
        bool ex = exists(ti, Fragment(u1, u2), v1, v2);
        bool exn = !oracle::occurrences(
                        std::string_view(ctx.text).substr(v1 - 1, v2 - v1 + 1),
                        ctx.text.substr(u1 - 1, u2 - u1 + 1))
                        .empty();
        expect(ctx, "exists", "-", exn, ex);
        cases += 5;
      }

      ApproxIndex ap(mt, dict);
      auto eng = std::make_shared<DeltaEngine>(mt, dict);
      const DModTree& tree = eng->fwd_tree();
      int32_t msqrt = std::max<int32_t>(1, (int32_t)std::lround(std::sqrt((double)n)));
      CanonicalIndex can1(eng, 1), can2(eng, msqrt), can3(eng, n);
      PathSetIndex ps1(eng, 1), ps2(eng, msqrt), ps3(eng, n);
      CountOccIndex co(ti, dict, 10'000'000);
      SquaresIndex sq(ti);
      oracle::NaiveSquares nsq(ctx.text);
      for (int32_t i = 1; i <= n; ++i)
        for (int32_t j = i; j <= n; ++j) {
          std::string q = std::to_string(i) + " " + std::to_string(j);
          long long truth = nd.count_distinct(i, j);
          long long approx = ap.count_distinct(i, j);
          if (!(truth <= approx && approx <= 2 * truth))
            report_mismatch(ctx, "approx2/bounds", q, truth, approx);
          for (CanonicalIndex* c : {&can1, &can2, &can3})
            expect(ctx, "exact-canonical m=" + std::to_string(c->m()), q, truth,
                   c->count_distinct(i, j));
          for (PathSetIndex* p : {&ps1, &ps2, &ps3})
            expect(ctx, "exact-pathset", q, truth, p->count_distinct(i, j));
          expect(ctx, "count", q, nd.count(i, j), co.count(i, j));
          expect(ctx, "squares", q, nsq.count(i, j), sq.count_distinct(i, j));
          expect(ctx, "delta/left", q,
                 nd.count_distinct(i, j) - nd.count_distinct(i + 1, j),
                 eng->delta_only_at_left(i, j));
          expect(ctx, "delta/right", q,
                 nd.count_distinct(i, j) - nd.count_distinct(i, j - 1),
                 eng->delta_only_at_right(i, j));
          cases += 9;
        }

      // tree prefix counts and the longest-pattern-prefix lookup
      for (int32_t l = 1; l <= n; ++l) {
        for (int32_t len = 0; len <= n - l + 1; ++len) {
          long long naive = 0;
          for (int32_t pid = 0; pid < nd.size(); ++pid) {
            const std::string& p = nd.content(pid);
            if ((int32_t)p.size() <= len &&
                ctx.text.compare(l - 1, p.size(), p) == 0)
              ++naive;
          }
          expect(ctx, "pattern_prefix_count",
                 std::to_string(l) + " len " + std::to_string(len), naive,
                 tree.pattern_prefix_count(l, len));
          ++cases;
        }
        long long best = 0;
        for (int32_t pid = 0; pid < nd.size(); ++pid) {
          const std::string& p = nd.content(pid);
          if (l + (int32_t)p.size() - 1 <= n &&
              ctx.text.compare(l - 1, p.size(), p) == 0)
            best = std::max<long long>(best, (long long)p.size());
        }
        auto got = tree.pref_d(l, n);
        expect(ctx, "pref_d", std::to_string(l), best, got ? got->second : 0);
        ++cases;
      }

      // periodic counting and three-fragment counting
      for (int rep = 0; rep < 25; ++rep) {
        const auto& runs = ti.runs();
        if (!runs.empty()) {
          const Run& r = runs[ctx.ri(0, (int32_t)runs.size() - 1)];
          int32_t a = ctx.ri(r.start, r.end), b = ctx.ri(a, r.end);
          if (oracle::is_periodic(std::string_view(ctx.text).substr(a - 1, b - a + 1))) {
            expect(ctx, "periodic_count", std::to_string(a) + " " + std::to_string(b),
                   oracle::periodic_count(ctx.text, ctx.dict, a, b),
                   ap.periodic_count(Fragment(a, b)));
            ++cases;
          }
        }
        int32_t f1 = ctx.ri(0, (n - 1) / 10);
        int32_t f2_lo = 8 * f1;
        if (2 * f1 + f2_lo > n) continue;
        int32_t f2 = ctx.ri(f2_lo, n - 2 * f1);
        if (2 * f1 + f2 < 1) continue;
        int32_t start = ctx.ri(1, n - 2 * f1 - f2 + 1);
        Fragment F1(start, start + f1 - 1), F2(start + f1, start + f1 + f2 - 1),
            F3(start + f1 + f2, start + 2 * f1 + f2 - 1);
        expect(ctx, "three_fragments_count", "-",
               oracle::three_fragments(ctx.text, ctx.dict, F1.start, F1.end, F2.start,
                                       F2.end, F3.start, F3.end),
               ap.three_fragments_count(F1, F2, F3));
        ++cases;
      }

      // square arithmetic over this text's runs
      for (const Run& r : ti.runs()) {
        std::string f = ctx.text.substr(r.start - 1, r.len());
        expect(ctx, "run_squares", std::to_string(r.start) + " " + std::to_string(r.end),
               oracle::run_squares(f), sq.run_squares(Fragment(r.start, r.end)));
        int32_t f1 = ctx.ri(0, r.period), f2 = ctx.ri(0, r.period);
        Fragment B1 = f1 ? Fragment(r.start, r.start + f1 - 1)
                         : Fragment::empty_at(r.start);
        Fragment B2 =
            f2 ? Fragment(r.end - f2 + 1, r.end) : Fragment::empty_at(r.end + 1);
        expect(ctx, "bsq", "-", oracle::bsq(f, f1, f2),
               sq.bsq(Fragment(r.start, r.end), B1, B2));
        expect(ctx, "bsq_prime", "-", oracle::bsq_prime_sum(r.len(), r.period, f1),
               sq.bsq_prime(Fragment(r.start, r.end), f1));
        cases += 3;
      }

      // a short dynamic schedule against the live dictionary
      {
        DynamicIndex dyn(mt, frags, ctx.ri(1, 8));
        std::vector<std::pair<int32_t, int32_t>> live;
        std::set<std::string> contents;
        for (auto [a, b] : ctx.dict)
          if (contents.insert(ctx.text.substr(a - 1, b - a + 1)).second)
            live.push_back({a, b});
        for (int step = 0; step < 25; ++step) {
          int op = ctx.ri(0, 2);
          if (op == 0) {
            int32_t a = ctx.ri(1, n), b = ctx.ri(a, n);
            dyn.insert_pattern(Fragment(a, b));
            if (contents.insert(ctx.text.substr(a - 1, b - a + 1)).second)
              live.push_back({a, b});
          } else if (op == 1 && !live.empty()) {
            int32_t idx = ctx.ri(0, (int32_t)live.size() - 1);
            auto [a, b] = live[idx];
            dyn.delete_pattern(Fragment(a, b));
            contents.erase(ctx.text.substr(a - 1, b - a + 1));
            live.erase(live.begin() + idx);
          } else {
            int32_t i = ctx.ri(1, n), j = ctx.ri(i, n);
            long long truth =
                live.empty() ? 0 : oracle::count_distinct(ctx.text, live, i, j);
            long long got = dyn.count_distinct(i, j);
            if (!(truth <= got && got <= 2 * truth))
              report_mismatch(ctx, "dynamic/bounds",
                              std::to_string(i) + " " + std::to_string(j), truth, got);
            ++cases;
          }
        }
      }

      // geometry primitives on synthetic points
      {
        int32_t npts = ctx.ri(0, 60);
        std::vector<Point2D> pts(npts);
        std::vector<ColoredPoint> cpts(npts);
        for (int32_t x = 0; x < npts; ++x) {
          pts[x] = {ctx.ri(-9, 9), ctx.ri(-9, 9)};
          cpts[x] = {pts[x].x, pts[x].y, ctx.ri(0, 5)};
        }
        PointSet2D set(pts);
        ColoredPointSet cset(cpts);
        for (int rep = 0; rep < 10; ++rep) {
          Rect rect{ctx.ri(-10, 10), ctx.ri(-10, 10), ctx.ri(-10, 10), ctx.ri(-10, 10)};
          if (rect.x1 > rect.x2) std::swap(rect.x1, rect.x2);
          if (rect.y1 > rect.y2) std::swap(rect.y1, rect.y2);
          long long want = 0;
          for (const Point2D& p : pts)
            want += p.x >= rect.x1 && p.x <= rect.x2 && p.y >= rect.y1 && p.y <= rect.y2;
          expect(ctx, "range_count", "-", want, set.count(rect));
          Quadrant quad{{ctx.ri(-10, 10), ctx.ri(0, 1) == 1},
                        {ctx.ri(-10, 10), ctx.ri(0, 1) == 1}};
          std::set<int32_t> colors;
          for (const ColoredPoint& p : cpts) {
            bool okx = quad.x.upper ? p.x <= quad.x.value : p.x >= quad.x.value;
            bool oky = quad.y.upper ? p.y <= quad.y.value : p.y >= quad.y.value;
            if (okx && oky) colors.insert(p.color);
          }
          expect(ctx, "color_count_quarterplane", "-", (long long)colors.size(),
                 cset.color_count(quad));
          cases += 2;
        }
      }
    }
  }
  std::cout << "ok primary-vs-oracle cases=" << cases << "\n";
  std::cout << "VERIFY OK seed=" << seed << "\n";
  return 0;
}

// ---------------------------------------------------------------------------
// bench: CSV of build time, structure size and query latency per mode.

double quantile(std::vector<double>& v, double q) {
  if (v.empty()) return 0;
  std::sort(v.begin(), v.end());
  size_t idx = std::min(v.size() - 1, (size_t)(q * v.size()));
  return v[idx];
}

int run_bench(const std::vector<int32_t>& ns, const std::vector<int32_t>& ds,
              const std::vector<int32_t>& ms, const std::vector<std::string>& modes,
              uint64_t seed, int queries) {
  using Clock = std::chrono::steady_clock;
  std::cout << "mode,n,d,m,build_ms,bytes,query_us_p50,query_us_p99\n";
  for (int32_t n : ns) {
    for (int32_t d : ds) {
      std::mt19937_64 rng(seed ^ (static_cast<uint64_t>(n) << 24) ^
                          static_cast<uint64_t>(d));
      std::string s(n, 'a');
      for (auto& c : s) c = static_cast<char>('a' + rng() % 2);
      MirroredText mt{Text(std::move(s))};
      std::vector<Fragment> frags;
      for (int32_t p = 0; p < d; ++p) {
        int32_t a = 1 + static_cast<int32_t>(rng() % n);
        int32_t len = 1 + static_cast<int32_t>(rng() % std::min(64, n - a + 1));
        frags.push_back(Fragment(a, a + len - 1));
      }
      Dictionary dict(mt.fwd, frags);
      auto eng = std::make_shared<DeltaEngine>(mt, dict);
      std::vector<Fragment> qs;
      for (int p = 0; p < queries; ++p) {
        int32_t i = 1 + static_cast<int32_t>(rng() % n);
        int32_t j = i + static_cast<int32_t>(rng() % (n - i + 1));
        qs.push_back(Fragment(i, j));
      }
      auto emit = [&](const std::string& mode, int32_t m, double build_ms,
                      int64_t bytes, auto&& query_one) {
        std::vector<double> lat;
        lat.reserve(qs.size());
        int64_t sink = 0;
        for (const Fragment& w : qs) {
          auto q0 = Clock::now();
          sink += query_one(w.start, w.end);
          auto q1 = Clock::now();
          lat.push_back(std::chrono::duration<double, std::micro>(q1 - q0).count());
        }
        (void)sink;
        printf("%s,%d,%d,%d,%.3f,%lld,%.3f,%.3f\n", mode.c_str(), n, d, m, build_ms,
               (long long)bytes, quantile(lat, 0.50), quantile(lat, 0.99));
        fflush(stdout);
      };
      for (const std::string& mode : modes) {
        if (mode == "approx2") {
          auto t0 = Clock::now();
          ApproxIndex idx(mt, dict);
          auto t1 = Clock::now();
          emit(mode, 0, std::chrono::duration<double, std::milli>(t1 - t0).count(),
               idx.basic_table().bytes(),
               [&](int32_t i, int32_t j) { return idx.count_distinct(i, j); });
        } else if (mode == "exact-canonical") {
          for (int32_t m : ms) {
            if (m > n) continue;
            auto t0 = Clock::now();
            CanonicalIndex idx(eng, m);
            auto t1 = Clock::now();
            emit(mode, m, std::chrono::duration<double, std::milli>(t1 - t0).count(),
                 idx.table_bytes(),
                 [&](int32_t i, int32_t j) { return idx.count_distinct(i, j); });
          }
        } else if (mode == "exact-pathset") {
          for (int32_t m : ms) {
            if (m > n) continue;
            auto t0 = Clock::now();
            PathSetIndex idx(eng, m);
            auto t1 = Clock::now();
            emit(mode, m, std::chrono::duration<double, std::milli>(t1 - t0).count(),
                 idx.bytes(),
                 [&](int32_t i, int32_t j) { return idx.count_distinct(i, j); });
          }
        } else if (mode == "squares") {
          auto t0 = Clock::now();
          SquaresIndex idx(mt.fwd);
          auto t1 = Clock::now();
          emit(mode, 0, std::chrono::duration<double, std::milli>(t1 - t0).count(),
               idx.bytes(),
               [&](int32_t i, int32_t j) { return idx.count_distinct(i, j); });
        } else if (mode == "count") {
          auto t0 = Clock::now();
          CountOccIndex idx(mt.fwd, dict, 10'000'000);
          auto t1 = Clock::now();
          emit(mode, 0, std::chrono::duration<double, std::milli>(t1 - t0).count(),
               idx.bytes(), [&](int32_t i, int32_t j) { return idx.count(i, j); });
        } else {
          throw ParseError("unknown bench mode: " + mode);
        }
      }
    }
  }
  return 0;
}

std::vector<int32_t> parse_int_list(const std::string& s) {
  std::vector<int32_t> out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ','))
    if (!tok.empty()) out.push_back(std::stoi(tok));
  return out;
}

std::vector<std::string> parse_str_list(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ','))
    if (!tok.empty()) out.push_back(tok);
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"internal dictionary matching: distinct-pattern counting"};
  app.require_subcommand(1);

  std::string text_path, dict_path, queries_path, ops_path;
  std::string mode = "approx2";
  int32_t m_param = 0;
  int32_t k_param = 32;
  int64_t max_occ = 10'000'000;
  int threads = 1;
  uint64_t seed = 1;

  auto* q = app.add_subcommand("query", "answer a batch of window queries");
  q->add_option("text", text_path, "text file (raw bytes)")->required();
  q->add_option("dict", dict_path, "dictionary file: one 'a b' fragment per line")
      ->required();
  q->add_option("queries", queries_path, "queries file: one 'i j' window per line")
      ->required();
  q->add_option("--mode", mode,
                "approx2 | exact-canonical | exact-pathset | squares | count");
  q->add_option("--m", m_param, "tradeoff parameter (default: round(sqrt(n)))");
  q->add_option("--max-occ", max_occ, "occurrence cap for materialized structures");
  q->add_option("--threads", threads, "parallelism for the query batch");

  auto* dyn = app.add_subcommand("dynamic", "stream dictionary updates and queries");
  dyn->add_option("text", text_path, "text file")->required();
  dyn->add_option("dict", dict_path, "initial dictionary file")->required();
  dyn->add_option("ops", ops_path, "ops file: '+ a b' | '- a b' | '? i j'")
      ->required();
  dyn->add_option("--k", k_param, "rebuild after this many updates");
  dyn->add_option("--max-occ", max_occ, "occurrence cap");

  std::string sizes_str = "16,32,64";
  int trials = 40;
  auto* ver =
      app.add_subcommand("verify", "randomized cross-check against brute force");
  ver->add_option("--seed", seed, "random seed");
  ver->add_option("--sizes", sizes_str, "comma-separated text size caps");
  ver->add_option("--trials", trials, "instances per size");

  std::string ns_str = "65536", ds_str = "256", ms_str = "16,64,256";
  std::string modes_str = "approx2,exact-canonical,exact-pathset,squares,count";
  int bench_queries = 200;
  auto* ben = app.add_subcommand("bench", "CSV of build/space/latency per mode");
  ben->add_option("--n", ns_str, "text sizes");
  ben->add_option("--d", ds_str, "dictionary sizes");
  ben->add_option("--m", ms_str, "tradeoff parameters");
  ben->add_option("--modes", modes_str, "modes to measure");
  ben->add_option("--seed", seed, "random seed");
  ben->add_option("--queries", bench_queries, "queries per point");

  CLI11_PARSE(app, argc, argv);

  try {
    if (q->parsed())
      return run_query(text_path, dict_path, queries_path, mode, m_param, max_occ,
                       threads);
    if (dyn->parsed()) {
      if (k_param < 1) throw ParseError("--k must be >= 1");
      return run_dynamic(text_path, dict_path, ops_path, k_param, max_occ);
    }
    if (ver->parsed()) return run_verify(seed, parse_int_list(sizes_str), trials);
    if (ben->parsed())
      return run_bench(parse_int_list(ns_str), parse_int_list(ds_str),
                       parse_int_list(ms_str), parse_str_list(modes_str), seed,
                       bench_queries);
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const build_limit_error& e) {
    std::cerr << "error: " << e.what() << " (limit " << e.limit << ", requested "
              << e.requested << ")\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
