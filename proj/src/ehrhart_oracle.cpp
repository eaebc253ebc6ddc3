#include "positroid/ehrhart_oracle.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <optional>

namespace positroid {

namespace {

constexpr long long kUnbounded = std::numeric_limits<long long>::max() / 4;

// Linear block [first, last] of coordinates with lower and upper bounds on its sum.
struct Block {
  int first = 1;
  int last = 1;
  long long lower = -kUnbounded;
  long long upper = kUnbounded;
};

class BlockSystem {
 public:
  BlockSystem(int n, long long total) : n_(n), total_(total) {}

  // Adds lower <= sum_{a in indices} x_a <= upper.
  void add(const std::vector<int>& indices, long long lower, long long upper) {
    if (indices.empty()) {
      if (lower > 0 || upper < 0) infeasible_ = true;
      return;
    }
    std::vector<bool> in(static_cast<std::size_t>(n_) + 1, false);
    for (int a : indices) in[static_cast<std::size_t>(a)] = true;
    if (auto span = linear_span(in, true)) {
      merge(span->first, span->second, lower, upper);
      return;
    }
    // A wrapping interval: its complement is linear and sum_S = total - sum_complement.
    auto span = linear_span(in, false);
    if (!span) throw std::logic_error("interval sum is neither linear nor co-linear");
    const long long lo = upper >= kUnbounded ? -kUnbounded : total_ - upper;
    const long long hi = lower <= -kUnbounded ? kUnbounded : total_ - lower;
    merge(span->first, span->second, lo, hi);
  }

  long long count() {
    if (infeasible_) return 0;
    containing_.assign(static_cast<std::size_t>(n_) + 1, {});
    for (const auto& [key, block] : blocks_) {
      if (block.lower > block.upper) return 0;
      for (int p = block.first; p <= block.last; ++p) containing_[static_cast<std::size_t>(p)].push_back(block);
    }
    prefix_.assign(static_cast<std::size_t>(n_) + 1, 0);
    return descend(1);
  }

  void set_coordinate_bound(long long t) { coordinate_bound_ = t; }

 private:
  // The contiguous run of indices with in[a] == want, if it is a single run.
  std::optional<std::pair<int, int>> linear_span(const std::vector<bool>& in, bool want) const {
    int first = 0, last = 0;
    for (int a = 1; a <= n_; ++a) {
      if (in[static_cast<std::size_t>(a)] != want) continue;
      if (first == 0) first = a;
      else if (last != a - 1) return std::nullopt;
      last = a;
    }
    if (first == 0) return std::nullopt;
    return std::make_pair(first, last);
  }

  void merge(int first, int last, long long lower, long long upper) {
    auto& b = blocks_[{first, last}];
    b.first = first;
    b.last = last;
    b.lower = std::max(b.lower, lower);
    b.upper = std::min(b.upper, upper);
  }

  long long descend(int p) {
    const long long before = prefix_[static_cast<std::size_t>(p - 1)];
    long long lo = std::max(0LL, total_ - before - coordinate_bound_ * (n_ - p));
    long long hi = std::min(coordinate_bound_, total_ - before);
    for (const auto& b : containing_[static_cast<std::size_t>(p)]) {
      const long long partial = before - prefix_[static_cast<std::size_t>(b.first - 1)];
      if (b.upper < kUnbounded) hi = std::min(hi, b.upper - partial);
      if (b.lower > -kUnbounded) lo = std::max(lo, b.lower - partial - coordinate_bound_ * (b.last - p));
    }
    if (lo > hi) return 0;
    long long total = 0;
    for (long long v = lo; v <= hi; ++v) {
      prefix_[static_cast<std::size_t>(p)] = before + v;
      total += p == n_ ? 1 : descend(p + 1);
    }
    return total;
  }

  int n_;
  long long total_;
  long long coordinate_bound_ = 0;
  bool infeasible_ = false;
  std::map<std::pair<int, int>, Block> blocks_;
  std::vector<std::vector<Block>> containing_;
  std::vector<long long> prefix_;
};

mpz_class binomial(long n, long k) {
  if (k < 0 || k > n) return 0;
  mpz_class out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return out;
}

}  // namespace

long long count_points(const HRepresentation& h, const std::vector<IntervalEquality>& equalities, long long t) {
  if (t < 0) throw std::invalid_argument("dilation factor must be nonnegative");
  BlockSystem system(h.n, t * h.rank);
  system.set_coordinate_bound(t);
  for (const auto& ineq : h.inequalities) {
    const long long bound = t * ineq.bound;
    if (ineq.sense == Sense::less_equal)
      system.add(ineq.interval.sum_indices(), -kUnbounded, ineq.strict ? bound - 1 : bound);
    else
      system.add(ineq.interval.sum_indices(), ineq.strict ? bound + 1 : bound, kUnbounded);
  }
  for (const auto& eq : equalities) system.add(eq.interval.sum_indices(), t * eq.bound, t * eq.bound);
  return system.count();
}

CountProfile count_profile(const HRepresentation& h, const std::vector<IntervalEquality>& equalities, int dim,
                           int tmax) {
  CountProfile profile{dim, {}};
  const int last = std::max(dim, tmax);
  for (int t = 0; t <= last; ++t) profile.counts.push_back(count_points(h, equalities, t));
  return profile;
}

EhrhartPolynomial ehrhart_interpolate(const CountProfile& profile) {
  const int d = profile.dim;
  if (static_cast<int>(profile.counts.size()) < d + 1) throw std::invalid_argument("profile needs dim + 1 counts");
  ExactPolynomial poly;
  for (int k = 0; k <= d; ++k) {
    ExactPolynomial basis = ExactPolynomial::constant(1);
    for (int m = 0; m <= d; ++m) {
      if (m == k) continue;
      basis *= ExactPolynomial(std::vector<mpq_class>{mpq_class(-m), mpq_class(1)});
      basis *= mpq_class(1) / mpq_class(k - m);
    }
    poly += basis * mpq_class(static_cast<long>(profile.counts[static_cast<std::size_t>(k)]));
  }
  if (poly.degree() != d || sgn(poly.coefficient(d)) <= 0)
    throw ConsistencyFailure("interpolated Ehrhart polynomial has degree " + std::to_string(poly.degree()) +
                             ", expected " + std::to_string(d));
  for (std::size_t t = static_cast<std::size_t>(d) + 1; t < profile.counts.size(); ++t)
    if (poly.evaluate(static_cast<long>(t)) != static_cast<long>(profile.counts[t]))
      throw ConsistencyFailure("count at t = " + std::to_string(t) + " is off the interpolated polynomial");
  return {std::move(poly), d};
}

ExactPolynomial hstar_from_counts(const CountProfile& profile) {
  const int d = profile.dim;
  const int m = static_cast<int>(profile.counts.size());
  if (m < d + 1) throw std::invalid_argument("profile needs dim + 1 counts");
  std::vector<mpq_class> coeffs;
  for (int j = 0; j < m; ++j) {
    mpz_class h = 0;
    for (int i = 0; i <= std::min(j, d + 1); ++i) {
      const mpz_class term = binomial(d + 1, i) * mpz_class(std::to_string(profile.counts[static_cast<std::size_t>(j - i)]));
      h += (i % 2 == 0) ? term : mpz_class(-term);
    }
    if (j <= d) {
      if (h < 0) throw ConsistencyFailure("h*_" + std::to_string(j) + " = " + h.get_str() + " is negative");
      coeffs.emplace_back(h);
    } else if (h != 0) {
      throw ConsistencyFailure("h*_" + std::to_string(j) + " = " + h.get_str() + " beyond the dimension");
    }
  }
  return ExactPolynomial(std::move(coeffs));
}

ExactPolynomial hstar_from_ehrhart(const EhrhartPolynomial& e) {
  CountProfile profile{e.dim, {}};
  for (int t = 0; t <= e.dim; ++t) {
    const mpq_class v = e.poly.evaluate(t);
    if (v.get_den() != 1 || !v.get_num().fits_slong_p()) throw ConsistencyFailure("Ehrhart value is not an integer");
    profile.counts.push_back(v.get_num().get_si());
  }
  return hstar_from_counts(profile);
}

EhrhartPolynomial ehrhart_product(const std::vector<EhrhartPolynomial>& factors) {
  EhrhartPolynomial out{ExactPolynomial::constant(1), 0};
  for (const auto& f : factors) {
    out.poly *= f.poly;
    out.dim += f.dim;
  }
  return out;
}

ExactPolynomial face_hstar(const HRepresentation& h, const std::vector<IntervalEquality>& face_equalities, int face_dim) {
  const CountProfile profile = count_profile(h, face_equalities, face_dim, std::max(face_dim, 1));
  if (profile.counts[1] == 0) throw std::invalid_argument("face has no lattice points");
  return hstar_from_counts(profile);
}

int polytope_dimension(const PositroidBases& bases) {
  return bases.n() - static_cast<int>(decompose_direct_sum(bases).size());
}

EhrhartPolynomial ehrhart_by_counting(const GrassmannNecklace& necklace, int tmax) {
  const int d = polytope_dimension(bases_from_necklace(necklace));
  return ehrhart_interpolate(count_profile(h_representation(necklace), {}, d, tmax));
}

ExactPolynomial hstar_oracle(const GrassmannNecklace& necklace, int tmax) {
  const int d = polytope_dimension(bases_from_necklace(necklace));
  return hstar_from_counts(count_profile(h_representation(necklace), {}, d, tmax));
}

EhrhartPolynomial ehrhart_by_components(const PositroidBases& bases) {
  std::vector<EhrhartPolynomial> factors;
  for (const auto& component : decompose_direct_sum(bases)) {
    if (component.ground.size() == 1) {
      factors.push_back({ExactPolynomial::constant(1), 0});
      continue;
    }
    const GrassmannNecklace necklace = necklace_from_bases(component.bases);
    if (!(bases_from_necklace(necklace) == component.bases))
      throw std::invalid_argument("direct-sum component is not a positroid");
    factors.push_back(ehrhart_by_counting(necklace));
  }
  return ehrhart_product(factors);
}

}  // namespace positroid
