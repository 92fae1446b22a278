#pragma once

// Exhaustive search engines over truth-table spaces: root-bent functions,
// autocorrelation-profile matches, and Golay pairs at small lengths.
//
// Candidates are enumerated by ascending truth-table integer.  The parallel
// driver hands out contiguous blocks through an atomic cursor and stitches
// per-block results back together in block order, so output is identical
// for any thread count.  Every hit is re-verified against the naive oracle
// before it is returned.

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <thread>
#include <vector>

#include "rooth/anf.hpp"
#include "rooth/complementarity.hpp"
#include "rooth/correlations.hpp"
#include "rooth/gbf.hpp"
#include "rooth/transforms.hpp"

namespace rooth {

constexpr std::uint64_t kMaxSearchSpace = std::uint64_t{1} << 24;

struct SearchSpace {
  int n = 0;
  int k = 1;
  // fixed mode: base with component `free_component` identically zero; the
  // search enumerates that component.  Absent base = full space.  An explicit
  // candidate list overrides enumeration entirely.
  std::optional<GeneralizedBooleanFunction> base;
  int free_component = 0;
  std::optional<int> degree_bound;
  std::vector<GeneralizedBooleanFunction> explicit_candidates;

  void validate() const {
    table_size(n);
    if (k < 1 || k > 8) throw std::invalid_argument("k: bit width must be in [1, 8]");
    if (base) {
      if (base->n != n || base->k != k)
        throw std::invalid_argument("base: dimension or width mismatch");
      if (free_component < 0 || free_component >= k)
        throw std::invalid_argument("free_component: outside [0, k-1]");
      for (auto v : base->values)
        if ((v >> free_component) & 1)
          throw std::invalid_argument("base: free component must be identically zero");
    }
    for (const auto& f : explicit_candidates)
      if (f.n != n || f.k != k)
        throw std::invalid_argument("candidates: dimension or width mismatch");
  }

  std::uint64_t candidate_count() const {
    if (!explicit_candidates.empty()) return explicit_candidates.size();
    const int bits = base ? (1 << n) : k * (1 << n);
    if (bits > 63) return kMaxSearchSpace + 1;  // certainly refused
    return std::uint64_t{1} << bits;
  }

  GeneralizedBooleanFunction candidate(std::uint64_t c) const {
    if (!explicit_candidates.empty()) return explicit_candidates[static_cast<std::size_t>(c)];
    const std::uint32_t size = table_size(n);
    std::vector<std::uint8_t> v(size);
    if (base) {
      for (Point x = 0; x < size; ++x)
        v[x] = static_cast<std::uint8_t>(base->values[x] |
                                         (((c >> x) & 1) << free_component));
    } else {
      const std::uint64_t mask = (std::uint64_t{1} << k) - 1;
      for (Point x = 0; x < size; ++x)
        v[x] = static_cast<std::uint8_t>((c >> (static_cast<std::uint64_t>(x) * k)) & mask);
    }
    return GeneralizedBooleanFunction(n, k, std::move(v));
  }

  // degree filter: free component's ANF degree (fixed mode), max component
  // degree (full mode); explicit lists pass unfiltered
  bool admits(const GeneralizedBooleanFunction& F) const {
    if (!degree_bound || !explicit_candidates.empty()) return true;
    if (base) {
      std::vector<std::uint8_t> t(F.values.size());
      for (std::size_t x = 0; x < t.size(); ++x)
        t[x] = (F.values[x] >> free_component) & 1;
      return anf_degree(BooleanFunction(n, std::move(t))) <= *degree_bound;
    }
    for (const auto& comp : decompose_components(F))
      if (anf_degree(comp) > *degree_bound) return false;
    return true;
  }
};

struct ProfileTarget {
  int n = 0;
  int ring_exponent = 0;
  std::map<Point, CycElement> required;  // unspecified shifts must be zero
  std::vector<Point> wildcards;          // shifts exempt from any constraint

  // An autocorrelation is always 2^n at shift 0, so a satisfiable target
  // either omits shift 0, wildcards it, or requires exactly 2^n there.
  // Anything else is legal input and simply matches nothing.
  bool satisfiable() const {
    const auto it = required.find(0);
    return it == required.end() || is_wildcard(0) ||
           it->second == CycElement(std::int64_t{1} << n);
  }
  bool is_wildcard(Point u) const {
    for (Point w : wildcards)
      if (w == u) return true;
    return false;
  }
  CycElement expected(Point u) const {
    const auto it = required.find(u);
    return it == required.end() ? CycElement() : it->second;
  }
};

namespace detail {

inline int resolve_jobs(int jobs) {
  if (jobs > 0) return jobs;
  const unsigned hw = std::thread::hardware_concurrency();
  return hw ? static_cast<int>(hw) : 1;
}

// Deterministic block-parallel filter over [0, total).  `make_check` is
// invoked once per worker thread; the returned callable may carry mutable
// scratch state.
template <typename CheckFactory>
std::vector<std::uint64_t> parallel_filter(std::uint64_t total, int jobs,
                                           CheckFactory make_check) {
  jobs = detail::resolve_jobs(jobs);
  constexpr std::uint64_t kBlock = 4096;
  const std::uint64_t blocks = (total + kBlock - 1) / kBlock;
  std::vector<std::vector<std::uint64_t>> found(static_cast<std::size_t>(blocks));
  std::atomic<std::uint64_t> cursor{0};
  auto worker = [&] {
    auto check = make_check();
    for (;;) {
      const std::uint64_t b = cursor.fetch_add(1);
      if (b >= blocks) return;
      const std::uint64_t lo = b * kBlock;
      const std::uint64_t hi = std::min(total, lo + kBlock);
      auto& out = found[static_cast<std::size_t>(b)];
      for (std::uint64_t c = lo; c < hi; ++c)
        if (check(c)) out.push_back(c);
    }
  };
  if (jobs == 1 || blocks <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    const int nthreads = static_cast<int>(std::min<std::uint64_t>(jobs, blocks));
    pool.reserve(nthreads);
    for (int i = 0; i < nthreads; ++i) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  std::vector<std::uint64_t> merged;
  for (auto& v : found) merged.insert(merged.end(), v.begin(), v.end());
  return merged;
}

// flat-buffer root autocorrelation check against a target, early exit;
// definition orientation, exact coefficients accumulated by zeta exponent
class ProfileProbe {
 public:
  ProfileProbe(const RootSpec& spec, int k, const ProfileTarget& target)
      : spec_(spec), k_(k), target_(target) {
    M_ = std::max(spec.ring_exponent(), k);
    if (target.ring_exponent > M_) M_ = target.ring_exponent;
    half_ = static_cast<std::uint32_t>(CycElement::half_period(M_));
    size_ = table_size(spec.n);
    acc_.resize(half_);
    expected_.reserve(size_);
    for (Point u = 0; u < size_; ++u)
      expected_.push_back(target.expected(u).lift(M_).coeffs());
    // shifts with a required nonzero value last: generic candidates die
    // fastest on the required-zero shifts
    for (Point u = 1; u < size_; ++u)
      if (!target_.is_wildcard(u) && target_.expected(u) == CycElement(0)) order_.push_back(u);
    for (Point u = 1; u < size_; ++u)
      if (!target_.is_wildcard(u) && target_.expected(u) != CycElement(0)) order_.push_back(u);
    if (!target_.is_wildcard(0)) order_.push_back(0);
  }

  bool matches(const GeneralizedBooleanFunction& F) {
    for (Point z : order_) {
      std::fill(acc_.begin(), acc_.end(), 0);
      for (Point x = 0; x < size_; ++x) {
        std::int64_t e = (static_cast<std::int64_t>(F.values[x ^ z]) - F.values[x])
                             << (M_ - k_);
        e += spec_.mu_exponent(x, z, M_);
        e &= (std::int64_t{1} << M_) - 1;
        if (M_ == 0 || e < half_)
          acc_[static_cast<std::uint32_t>(e)] += 1;
        else
          acc_[static_cast<std::uint32_t>(e - half_)] -= 1;
      }
      if (acc_ != expected_[z]) return false;
    }
    return true;
  }

 private:
  RootSpec spec_;
  int k_;
  ProfileTarget target_;
  int M_ = 0;
  std::uint32_t half_ = 1, size_ = 0;
  std::vector<std::int64_t> acc_;
  std::vector<std::vector<std::int64_t>> expected_;
  std::vector<Point> order_;
};

}  // namespace detail

// All candidates whose root spectrum satisfies |entry|^2 = 2^n everywhere,
// ascending by candidate integer.
inline std::vector<GeneralizedBooleanFunction> search_root_bent(const SearchSpace& space,
                                                                const RootSpec& spec,
                                                                int jobs = 0) {
  space.validate();
  if (spec.n != space.n) throw std::invalid_argument("spec: dimension differs from space");
  const std::uint64_t total = space.candidate_count();
  if (total > kMaxSearchSpace)
    throw std::invalid_argument("space: more than 2^24 candidates, refusing");
  const CycElement flat(std::int64_t{1} << space.n);
  auto hits = detail::parallel_filter(total, jobs, [&] {
    return [&](std::uint64_t c) {
      const auto F = space.candidate(c);
      if (!space.admits(F)) return false;
      const Spectrum S = root_hadamard(F, spec);
      for (const auto& e : S.entries)
        if (e.abs_sq() != flat) return false;
      return true;
    };
  });
  std::vector<GeneralizedBooleanFunction> out;
  out.reserve(hits.size());
  for (auto c : hits) {
    auto F = space.candidate(c);
    if (!is_flat(root_hadamard_naive(F, spec)))
      throw std::logic_error("search: hit failed naive re-verification");
    out.push_back(std::move(F));
  }
  return out;
}

// All candidates whose root autocorrelation profile equals the target.
inline std::vector<GeneralizedBooleanFunction> search_profile_match(const SearchSpace& space,
                                                                    const RootSpec& spec,
                                                                    const ProfileTarget& target,
                                                                    int jobs = 0) {
  space.validate();
  if (spec.n != space.n || target.n != space.n)
    throw std::invalid_argument("spec/target: dimension differs from space");
  const std::uint64_t total = space.candidate_count();
  if (total > kMaxSearchSpace)
    throw std::invalid_argument("space: more than 2^24 candidates, refusing");
  auto hits = detail::parallel_filter(total, jobs, [&] {
    return [&, probe = detail::ProfileProbe(spec, space.k, target)](std::uint64_t c) mutable {
      const auto F = space.candidate(c);
      return space.admits(F) && probe.matches(F);
    };
  });
  std::vector<GeneralizedBooleanFunction> out;
  out.reserve(hits.size());
  for (auto c : hits) {
    auto F = space.candidate(c);
    const std::uint32_t size = table_size(space.n);
    for (Point u = 0; u < size; ++u) {
      if (target.is_wildcard(u)) continue;
      if (root_autocorrelation(F, spec, u) != target.expected(u))
        throw std::logic_error("search: hit failed naive re-verification");
    }
    out.push_back(std::move(F));
  }
  return out;
}

// All complementary pairs of the given kind at length N, deduplicated with
// a <= b in code order and sorted ascending by (a, b).
inline std::vector<std::pair<BipolarSequence, BipolarSequence>> search_golay_pairs(
    int N, SeqCorrelation kind) {
  if (N < 1 || N > 16) throw std::invalid_argument("N: length must be in [1, 16]");
  const std::uint32_t count = 1u << N;
  // group sequences by autocorrelation vector; partners are exactly the
  // sequences with the negated vector
  std::map<std::vector<std::int64_t>, std::vector<std::uint32_t>> by_profile;
  for (std::uint32_t c = 0; c < count; ++c) {
    const auto s = BipolarSequence::from_code(c, N);
    std::vector<std::int64_t> prof(static_cast<std::size_t>(N - 1));
    for (int k = 1; k < N; ++k) prof[k - 1] = seq_autocorr(s, k, kind);
    by_profile[std::move(prof)].push_back(c);
  }
  std::vector<std::pair<BipolarSequence, BipolarSequence>> out;
  for (std::uint32_t a = 0; a < count; ++a) {
    const auto sa = BipolarSequence::from_code(a, N);
    std::vector<std::int64_t> neg(static_cast<std::size_t>(N - 1));
    for (int k = 1; k < N; ++k) neg[k - 1] = -seq_autocorr(sa, k, kind);
    const auto it = by_profile.find(neg);
    if (it == by_profile.end()) continue;
    for (std::uint32_t b : it->second)
      if (b >= a) out.emplace_back(sa, BipolarSequence::from_code(b, N));
  }
  for (const auto& [a, b] : out)
    if (!is_complementary_set({a, b}, kind).holds)
      throw std::logic_error("search: pair failed direct re-verification");
  return out;
}

}  // namespace rooth
