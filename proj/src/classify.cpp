#include "ipd/classify.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <stdexcept>
#include <thread>

#include "ipd/rng.hpp"

namespace ipd {

namespace {

int resolve_threads(int threads) {
  if (threads > 0) return threads;
  unsigned hc = std::thread::hardware_concurrency();
  return hc == 0 ? 1 : static_cast<int>(hc);
}

void require_pd_game(const StageGame& g, const char* what) {
  if (!g.is_prisoners_dilemma())
    throw std::domain_error(std::string(what) +
                            " is defined for strict prisoner's dilemmas only");
}

// Deterministic merge regardless of how the scan was partitioned: strictly
// larger payoff wins, exact ties go to the smaller index.
struct BestDeviant {
  double payoff = -1e300;
  std::uint32_t index = 0;
  void consider(double value, std::uint32_t idx) {
    if (value > payoff || (value == payoff && idx < index)) {
      payoff = value;
      index = idx;
    }
  }
  void merge(const BestDeviant& other) { consider(other.payoff, other.index); }
};

// Runs fn(index, chunk_result) over [0, count) on `threads` workers.
template <typename Fn>
std::vector<BestDeviant> parallel_scan(std::uint32_t count, int threads,
                                       std::atomic<bool>* stop, Fn&& fn) {
  const int nt = resolve_threads(threads);
  std::vector<BestDeviant> results(nt);
  std::vector<std::thread> workers;
  workers.reserve(nt);
  const std::uint32_t chunk = (count + nt - 1) / nt;
  for (int t = 0; t < nt; ++t) {
    const std::uint32_t lo = t * chunk;
    const std::uint32_t hi = std::min(count, lo + chunk);
    workers.emplace_back([&, t, lo, hi] {
      for (std::uint32_t i = lo; i < hi; ++i) {
        if (stop && stop->load(std::memory_order_relaxed)) return;
        fn(i, results[t]);
      }
    });
  }
  for (auto& w : workers) w.join();
  return results;
}

}  // namespace

Memory1Strategy deterministic_memory1(std::uint32_t index) {
  if (index >= kNumDeterministicM1)
    throw std::invalid_argument("deterministic_memory1: index out of range");
  auto bit = [index](int k) { return (index >> k) & 1u; };
  return Memory1Strategy(bit(4), bit(3), bit(2), bit(1), bit(0));
}

Memory2Strategy deterministic_memory2(std::uint32_t index) {
  if (index >= kNumDeterministicM2)
    throw std::invalid_argument("deterministic_memory2: index out of range");
  auto bit = [index](int k) { return static_cast<double>((index >> k) & 1u); };
  Memory2Strategy s;
  s.p0 = bit(20);
  for (int i = 0; i < 4; ++i) s.r2[i] = bit(19 - i);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) s.h2[i][j] = bit(15 - (4 * i + j));
  return s;
}

NashResult is_nash(const Memory1Strategy& sigma, const StageGame& g, double w,
                   double tol, bool short_circuit) {
  NashResult res;
  res.self_payoff = payoff_m1_any(sigma, sigma, g, w);
  BestDeviant best;
  for (std::uint32_t i = 0; i < kNumDeterministicM1; ++i) {
    const Memory1Strategy dev = deterministic_memory1(i);
    best.consider(payoff_m1_any(dev, sigma, g, w), i);
    if (short_circuit && best.payoff > res.self_payoff + tol) break;
  }
  res.worst = {best.payoff, best.index};
  res.is_nash = best.payoff <= res.self_payoff + tol;
  return res;
}

NashResult is_nash(const Memory2Strategy& sigma, const StageGame& g, double w,
                   double tol, bool short_circuit, int threads) {
  if (!(w > 0.0))
    throw std::invalid_argument("memory-2 Nash check requires w > 0");
  NashResult res;
  res.self_payoff = payoff_m2(sigma, sigma, g, w);
  std::atomic<bool> stop{false};
  auto chunks = parallel_scan(
      kNumDeterministicM2, threads, short_circuit ? &stop : nullptr,
      [&](std::uint32_t i, BestDeviant& best) {
        const Memory2Strategy dev = deterministic_memory2(i);
        best.consider(payoff_m2(dev, sigma, g, w), i);
        if (short_circuit && best.payoff > res.self_payoff + tol)
          stop.store(true, std::memory_order_relaxed);
      });
  BestDeviant best;
  for (const auto& c : chunks) best.merge(c);
  res.worst = {best.payoff, best.index};
  res.is_nash = best.payoff <= res.self_payoff + tol;
  return res;
}

bool is_partner(const Memory1Strategy& sigma, const StageGame& g, double w,
                double tol) {
  require_pd_game(g, "is_partner");
  const NashResult nash = is_nash(sigma, g, w, tol);
  return nash.is_nash && std::abs(nash.self_payoff - g.a_ll) <= tol;
}

bool is_partner(const Memory2Strategy& sigma, const StageGame& g, double w,
                double tol, int threads) {
  require_pd_game(g, "is_partner");
  const NashResult nash = is_nash(sigma, g, w, tol, false, threads);
  return nash.is_nash && std::abs(nash.self_payoff - g.a_ll) <= tol;
}

bool is_rival(const Memory1Strategy& sigma, const StageGame& g, double w,
              double tol) {
  require_pd_game(g, "is_rival");
  for (std::uint32_t i = 0; i < kNumDeterministicM1; ++i) {
    const Memory1Strategy dev = deterministic_memory1(i);
    const double mine = payoff_m1_any(sigma, dev, g, w);
    const double theirs = payoff_m1_any(dev, sigma, g, w);
    if (mine < theirs - tol) return false;
  }
  return true;
}

bool is_rival(const Memory2Strategy& sigma, const StageGame& g, double w,
              double tol, int threads) {
  require_pd_game(g, "is_rival");
  if (!(w > 0.0))
    throw std::invalid_argument("memory-2 rival check requires w > 0");
  std::atomic<bool> violated{false};
  parallel_scan(kNumDeterministicM2, threads, &violated,
                [&](std::uint32_t i, BestDeviant&) {
                  const Memory2Strategy dev = deterministic_memory2(i);
                  const double mine = payoff_m2(sigma, dev, g, w);
                  const double theirs = payoff_m2(dev, sigma, g, w);
                  if (mine < theirs - tol)
                    violated.store(true, std::memory_order_relaxed);
                });
  return !violated.load();
}

double beat_percentage(const Memory1Strategy& sigma, const StageGame& g,
                       double w, std::size_t n_samples, std::uint64_t seed,
                       int threads) {
  if (n_samples == 0)
    throw std::invalid_argument("beat_percentage requires n_samples >= 1");
  const double self = payoff_m1_any(sigma, sigma, g, w);
  const int nt = resolve_threads(threads);
  std::vector<std::size_t> counts(nt, 0);
  std::vector<std::thread> workers;
  const std::size_t chunk = (n_samples + nt - 1) / nt;
  for (int t = 0; t < nt; ++t) {
    const std::size_t lo = t * chunk;
    const std::size_t hi = std::min(n_samples, lo + chunk);
    workers.emplace_back([&, t, lo, hi] {
      std::size_t beaten = 0;
      for (std::size_t i = lo; i < hi; ++i) {
        Xoshiro256 rng = substream(seed, i);
        const double p0 = rng.uniform();
        const double pll = rng.uniform();
        const double plr = rng.uniform();
        const double prl = rng.uniform();
        const double prr = rng.uniform();
        const Memory1Strategy opp(p0, pll, plr, prl, prr);
        if (payoff_m1_any(opp, sigma, g, w) > self) ++beaten;
      }
      counts[t] = beaten;
    });
  }
  for (auto& wk : workers) wk.join();
  std::size_t total = 0;
  for (auto c : counts) total += c;
  return 100.0 * static_cast<double>(total) / static_cast<double>(n_samples);
}

namespace {

template <typename Strategy>
Classification classify_impl(const Strategy& sigma, const StageGame& g,
                             double w, const ClassifyOptions& opts) {
  Classification out;
  out.game = g;
  out.w = w;

  NashResult nash;
  if constexpr (std::is_same_v<Strategy, Memory1Strategy>) {
    nash = is_nash(sigma, g, w, opts.tol);
  } else {
    nash = is_nash(sigma, g, w, opts.tol, false, opts.threads);
  }
  out.is_nash = nash.is_nash;
  out.self_payoff = nash.self_payoff;
  out.worst_deviation_payoff = nash.worst.payoff;

  if (opts.require_pd) require_pd_game(g, "classify");
  out.is_partner =
      out.is_nash && std::abs(nash.self_payoff - g.a_ll) <= opts.tol;
  if constexpr (std::is_same_v<Strategy, Memory1Strategy>) {
    out.worst_deviation = deterministic_memory1(nash.worst.index).to_json();
    bool rival = true;
    for (std::uint32_t i = 0; i < kNumDeterministicM1 && rival; ++i) {
      const Memory1Strategy dev = deterministic_memory1(i);
      if (payoff_m1_any(sigma, dev, g, w) <
          payoff_m1_any(dev, sigma, g, w) - opts.tol)
        rival = false;
    }
    out.is_rival = rival;
    if (!out.is_nash && opts.compute_beat)
      out.beat_percentage = beat_percentage(sigma, g, w, opts.beat_samples,
                                            opts.seed, opts.threads);
  } else {
    out.worst_deviation = deterministic_memory2(nash.worst.index).to_json();
    std::atomic<bool> violated{false};
    parallel_scan(kNumDeterministicM2, opts.threads, &violated,
                  [&](std::uint32_t i, BestDeviant&) {
                    const Memory2Strategy dev = deterministic_memory2(i);
                    if (payoff_m2(sigma, dev, g, w) <
                        payoff_m2(dev, sigma, g, w) - opts.tol)
                      violated.store(true, std::memory_order_relaxed);
                  });
    out.is_rival = !violated.load();
  }
  return out;
}

}  // namespace

Classification classify(const Memory1Strategy& sigma, const StageGame& g,
                        double w, const ClassifyOptions& opts) {
  return classify_impl(sigma, g, w, opts);
}

Classification classify(const Memory2Strategy& sigma, const StageGame& g,
                        double w, const ClassifyOptions& opts) {
  return classify_impl(sigma, g, w, opts);
}

PayoffRegionSample payoff_region(const Memory1Strategy& sigma,
                                 const StageGame& g, double w,
                                 std::size_t n_samples, std::uint64_t seed) {
  PayoffRegionSample out;
  out.points.reserve(n_samples + kNumDeterministicM1);
  auto add = [&](const Memory1Strategy& opp) {
    const double opp_payoff = payoff_m1_any(opp, sigma, g, w);
    const double self_payoff = payoff_m1_any(sigma, opp, g, w);
    out.points.emplace_back(opp_payoff, self_payoff);
  };
  for (std::uint32_t i = 0; i < kNumDeterministicM1; ++i)
    add(deterministic_memory1(i));
  for (std::size_t i = 0; i < n_samples; ++i) {
    Xoshiro256 rng = substream(seed, i);
    const double p0 = rng.uniform();
    const double pll = rng.uniform();
    const double plr = rng.uniform();
    const double prl = rng.uniform();
    const double prr = rng.uniform();
    add(Memory1Strategy(p0, pll, plr, prl, prr));
  }
  out.opp_min = out.opp_max = out.points.front().first;
  out.self_min = out.self_max = out.points.front().second;
  for (const auto& [opp, self] : out.points) {
    out.opp_min = std::min(out.opp_min, opp);
    out.opp_max = std::max(out.opp_max, opp);
    out.self_min = std::min(out.self_min, self);
    out.self_max = std::max(out.self_max, self);
  }
  return out;
}

double best_response_payoff_m1(const Memory1Strategy& sigma,
                               const StageGame& g, double w) {
  if (!(w > 0.0 && w <= 1.0))
    throw std::invalid_argument("best_response_payoff_m1 requires w in (0,1]");

  // 4-state discounted decision process: state = last outcome from the
  // deviant's perspective, action = cooperate or defect, the opponent's
  // move drawn from sigma's reaction at the swapped outcome.
  const Real discount = 1 - static_cast<Real>(w);
  std::array<Real, 4> coop_prob;  // opponent's cooperation prob per state
  for (Outcome o : all_outcomes)
    coop_prob[index_of(o)] = sigma.reaction(swap_perspective(o));
  const std::array<Real, 4> gv = {g.a_ll, g.a_lr, g.a_rl, g.a_rr};

  // distribution over next outcomes given action a (1 = cooperate)
  auto next_dist = [&](int state, int a) {
    std::array<Real, 4> d{};
    const Real b = coop_prob[state];
    if (a == 1) {
      d[index_of(Outcome::LL)] = b;
      d[index_of(Outcome::LR)] = 1 - b;
    } else {
      d[index_of(Outcome::RL)] = b;
      d[index_of(Outcome::RR)] = 1 - b;
    }
    return d;
  };

  std::array<int, 4> policy{};  // start from all-defect
  Eigen::Matrix<Real, 4, 1> v = Eigen::Matrix<Real, 4, 1>::Zero();
  for (int iter = 0; iter < 64; ++iter) {
    // policy evaluation: v = r + discount * P v
    Eigen::Matrix<Real, 4, 4> pmat;
    Eigen::Matrix<Real, 4, 1> r;
    for (int s = 0; s < 4; ++s) {
      auto d = next_dist(s, policy[s]);
      Real reward = 0;
      for (int o = 0; o < 4; ++o) {
        pmat(s, o) = d[o];
        reward += d[o] * gv[o];
      }
      r[s] = reward;
    }
    Eigen::Matrix<Real, 4, 4> a =
        Eigen::Matrix<Real, 4, 4>::Identity() - discount * pmat;
    v = a.partialPivLu().solve(r);

    bool changed = false;
    for (int s = 0; s < 4; ++s) {
      Real best_q = -1e300L;
      int best_a = policy[s];
      for (int a2 = 0; a2 < 2; ++a2) {
        auto d = next_dist(s, a2);
        Real q = 0;
        for (int o = 0; o < 4; ++o) q += d[o] * (gv[o] + discount * v[o]);
        if (q > best_q + 1e-15L) {
          best_q = q;
          best_a = a2;
        }
      }
      if (best_a != policy[s]) {
        policy[s] = best_a;
        changed = true;
      }
    }
    if (!changed) break;
  }

  // opening move
  Real best0 = -1e300L;
  for (int a0 = 0; a0 < 2; ++a0) {
    const Real b = sigma.p0;
    std::array<Real, 4> d{};
    if (a0 == 1) {
      d[index_of(Outcome::LL)] = b;
      d[index_of(Outcome::LR)] = 1 - b;
    } else {
      d[index_of(Outcome::RL)] = b;
      d[index_of(Outcome::RR)] = 1 - b;
    }
    Real q = 0;
    for (int o = 0; o < 4; ++o) q += d[o] * (gv[o] + discount * v[o]);
    best0 = std::max(best0, q);
  }
  return static_cast<double>(static_cast<Real>(w) * best0);
}

}  // namespace ipd
