#include "tiltlab/roots.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <optional>
#include <string>

#include "tiltlab/error.hpp"
#include "tiltlab/linalg.hpp"

namespace tiltlab {

namespace {

bool nonnegative(const DimensionVector& x) {
  return std::all_of(x.begin(), x.end(), [](long long v) { return v >= 0; });
}
bool nonpositive(const DimensionVector& x) {
  return std::all_of(x.begin(), x.end(), [](long long v) { return v <= 0; });
}

std::string show(const DimensionVector& x) {
  std::string s = "(";
  for (std::size_t i = 0; i < x.size(); ++i) s += (i ? "," : "") + std::to_string(x[i]);
  return s + ")";
}

long long as_ll(const Integer& z) {
  if (!z.fits_slong_p()) throw ComputationError("form coefficient too large");
  return z.get_si();
}

// Lattice points x in [0, bound]^l with q(x) = 1 and r·x >= 0 for every
// constraint row r. The vertices split into A, where q restricts to a positive
// definite form, and the rest B. Then
//   q(x) = (x_A + W x_B)^t M_AA (x_A + W x_B) + x_B^t S x_B,
// with W = M_AA^{-1} M_AB and S the Schur complement, so each choice of x_B
// leaves an ellipsoid in x_A. B is enumerated over the box, A coordinate by
// coordinate through an LDL^t factorisation. Floating point only prunes; the
// leaves are checked exactly.
class RootSearch {
 public:
  RootSearch(const IntMatrix& euler, std::vector<std::vector<long long>> constraints, long long bound,
             std::size_t node_cap)
      : l_(euler.rows()), bound_(bound), cap_(node_cap), cons_(std::move(constraints)) {
    euler_.assign(l_, std::vector<long long>(l_));
    for (std::size_t i = 0; i < l_; ++i)
      for (std::size_t j = 0; j < l_; ++j) euler_[i][j] = as_ll(euler(i, j));
    RatMatrix m(l_, l_);
    for (std::size_t i = 0; i < l_; ++i)
      for (std::size_t j = 0; j < l_; ++j) m(i, j) = Rational(Integer(euler(i, j) + euler(j, i)), 2);

    std::vector<Rational> d;
    std::vector<std::vector<Rational>> lower;
    for (std::size_t v = 0; v < l_; ++v) {
      std::vector<std::size_t> trial = a_;
      trial.push_back(v);
      if (factor(m, trial, d, lower)) a_ = std::move(trial);
      else b_.push_back(v);
    }
    factor(m, a_, d, lower);
    const std::size_t na = a_.size(), nb = b_.size();
    d_.resize(na);
    lower_.assign(na, std::vector<double>(na, 0.0));
    for (std::size_t k = 0; k < na; ++k) {
      d_[k] = d[k].get_d();
      for (std::size_t i = k + 1; i < na; ++i) lower_[i][k] = lower[i][k].get_d();
    }
    w_.assign(na, std::vector<double>(nb, 0.0));
    schur_.assign(nb, std::vector<double>(nb, 0.0));
    if (na && nb) {
      RatMatrix maa(na, na), mab(na, nb), w;
      for (std::size_t i = 0; i < na; ++i) {
        for (std::size_t j = 0; j < na; ++j) maa(i, j) = m(a_[i], a_[j]);
        for (std::size_t j = 0; j < nb; ++j) mab(i, j) = m(a_[i], b_[j]);
      }
      solve(maa, mab, w);
      RatMatrix corr = mab.transpose() * w;
      for (std::size_t i = 0; i < na; ++i)
        for (std::size_t j = 0; j < nb; ++j) w_[i][j] = w(i, j).get_d();
      for (std::size_t i = 0; i < nb; ++i)
        for (std::size_t j = 0; j < nb; ++j) schur_[i][j] = Rational(m(b_[i], b_[j]) - corr(i, j)).get_d();
    } else {
      for (std::size_t i = 0; i < nb; ++i)
        for (std::size_t j = 0; j < nb; ++j) schur_[i][j] = m(b_[i], b_[j]).get_d();
    }

    // fixing order: B, then A from its last coordinate to its first
    order_ = b_;
    for (std::size_t k = na; k-- > 0;) order_.push_back(a_[k]);
    headroom_.assign(cons_.size(), std::vector<long long>(l_ + 1, 0));
    for (std::size_t c = 0; c < cons_.size(); ++c)
      for (std::size_t p = l_; p-- > 0;)
        headroom_[c][p] = headroom_[c][p + 1] + std::max<long long>(0, cons_[c][order_[p]]) * bound_;
  }

  RootSet run() {
    x_.assign(l_, 0);
    partial_.assign(cons_.size(), 0);
    shift_.assign(a_.size(), 0.0);
    nodes_ = 0;
    found_.clear();
    descend(0, 0.0);
    return found_;
  }

 private:
  // Exact LDL^t of m restricted to idx; false unless positive definite.
  static bool factor(const RatMatrix& m, const std::vector<std::size_t>& idx, std::vector<Rational>& d,
                     std::vector<std::vector<Rational>>& lower) {
    const std::size_t n = idx.size();
    std::vector<std::vector<Rational>> a(n, std::vector<Rational>(n));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) a[i][j] = m(idx[i], idx[j]);
    d.assign(n, Rational(0));
    for (std::size_t k = 0; k < n; ++k) {
      d[k] = a[k][k];
      if (d[k] <= 0) return false;
      for (std::size_t i = k + 1; i < n; ++i) a[i][k] /= d[k];
      for (std::size_t i = k + 1; i < n; ++i)
        for (std::size_t j = k + 1; j <= i; ++j) a[i][j] -= a[i][k] * a[j][k] * d[k];
    }
    lower = std::move(a);
    return true;
  }

  bool fix(std::size_t p, long long v) {
    const std::size_t var = order_[p];
    x_[var] = v;
    bool ok = true;
    for (std::size_t c = 0; c < cons_.size(); ++c) {
      partial_[c] += cons_[c][var] * v;
      if (partial_[c] + headroom_[c][p + 1] < 0) ok = false;
    }
    return ok;
  }
  void unfix(std::size_t p) {
    const std::size_t var = order_[p];
    for (std::size_t c = 0; c < cons_.size(); ++c) partial_[c] -= cons_[c][var] * x_[var];
    x_[var] = 0;
  }

  // After B is fixed: the shift W x_B and the budget 1 - x_B^t S x_B.
  double enter_ellipsoid() {
    const std::size_t nb = b_.size();
    for (std::size_t i = 0; i < a_.size(); ++i) {
      double t = 0;
      for (std::size_t j = 0; j < nb; ++j) t += w_[i][j] * x_[b_[j]];
      shift_[i] = t;
    }
    double q = 0;
    for (std::size_t i = 0; i < nb; ++i)
      for (std::size_t j = 0; j < nb; ++j) q += schur_[i][j] * x_[b_[i]] * x_[b_[j]];
    return 1.0 - q;
  }

  void descend(std::size_t p, double budget) {
    if (++nodes_ > cap_) throw ComputationError("root search exceeded node cap " + std::to_string(cap_));
    if (p == l_) {
      leaf();
      return;
    }
    const std::size_t nb = b_.size();
    if (p < nb) {
      for (long long v = 0; v <= bound_; ++v) {
        if (fix(p, v)) descend(p + 1, p + 1 == nb ? enter_ellipsoid() : 0.0);
        unfix(p);
      }
      return;
    }
    if (p == nb && nb == 0) budget = 1.0;
    if (budget < -kSlack) return;
    const std::size_t k = a_.size() - 1 - (p - nb);
    double c = shift_[k];
    for (std::size_t i = k + 1; i < a_.size(); ++i) c += lower_[i][k] * (x_[a_[i]] + shift_[i]);
    const double r = std::sqrt(std::max(budget, 0.0) / d_[k]) + kSlack;
    const long long lo = std::max<long long>(0, static_cast<long long>(std::ceil(-c - r)));
    const long long hi = std::min<long long>(bound_, static_cast<long long>(std::floor(-c + r)));
    for (long long v = lo; v <= hi; ++v) {
      if (fix(p, v)) descend(p + 1, budget - d_[k] * (v + c) * (v + c));
      unfix(p);
    }
  }

  void leaf() {
    long long q = 0;
    for (std::size_t i = 0; i < l_; ++i)
      for (std::size_t j = 0; j < l_; ++j) q += euler_[i][j] * x_[i] * x_[j];
    if (q == 1) found_.insert(x_);
  }

  static constexpr double kSlack = 1e-6;
  std::size_t l_;
  long long bound_;
  std::size_t cap_;
  std::vector<std::vector<long long>> cons_;
  std::vector<std::vector<long long>> euler_;
  std::vector<std::size_t> a_, b_, order_;
  std::vector<double> d_;
  std::vector<std::vector<double>> lower_, w_, schur_;
  std::vector<std::vector<long long>> headroom_;
  DimensionVector x_;
  std::vector<long long> partial_;
  std::vector<double> shift_;
  std::size_t nodes_ = 0;
  RootSet found_;
};

RootSet search_box(const IntMatrix& euler, std::vector<std::vector<long long>> constraints, long long bound,
                   std::size_t node_cap) {
  return RootSearch(euler, std::move(constraints), bound, node_cap).run();
}

}  // namespace

ClusterRootTable cluster_roots_phi(const BoundQuiverAlgebra& a) {
  const std::size_t l = a.size();
  CoxeterData cox = coxeter(a);
  std::map<DimensionVector, int> projectives;
  for (std::size_t j = 0; j < l; ++j) projectives.emplace(dimension_of_projective(a, static_cast<int>(j)), j);
  const std::size_t cap = cox.order * l;
  ClusterRootTable t;
  for (std::size_t i = 0; i < l; ++i) {
    std::vector<DimensionVector> orb{dimension_of_injective(a, static_cast<int>(i))};
    while (!projectives.count(orb.back())) {
      if (orb.size() > cap) throw ComputationError("orbit of I_" + a.quiver().label(static_cast<int>(i)) +
                                                   " does not reach a projective within " + std::to_string(cap) +
                                                   " steps");
      DimensionVector next = apply_matrix(cox.phi, orb.back());
      if (!nonnegative(next))
        throw ComputationError("orbit of I_" + a.quiver().label(static_cast<int>(i)) + " leaves the positive cone at " +
                               show(next));
      orb.push_back(std::move(next));
    }
    t.sigma.push_back(projectives.at(orb.back()));
    t.exponents.push_back(orb.size() - 1);
    t.all_roots.insert(orb.begin(), orb.end());
    t.orbits.push_back(std::move(orb));
  }
  return t;
}

std::vector<DimensionVector> orbit(const IntMatrix& m, const DimensionVector& x, std::size_t cap) {
  std::vector<DimensionVector> out{x};
  for (DimensionVector y = apply_matrix(m, x); y != x; y = apply_matrix(m, y)) {
    if (out.size() >= cap) throw ComputationError("orbit longer than " + std::to_string(cap));
    out.push_back(y);
  }
  return out;
}

ReflectionRoots cluster_roots_reflections(const ReflectionSequence& seq, const std::vector<int>& order) {
  const std::size_t l = order.size();
  ReflectionRoots r;
  for (std::size_t i = 0; i < l; ++i) {
    IntMatrix m = IntMatrix::identity(l);
    for (std::size_t s = 0; s < i; ++s) m = m * inverse_unimodular(seq.reflections[s].matrix);
    r.p.push_back(apply_matrix(m, unit_vector(l, order[i])));
    IntMatrix w = IntMatrix::identity(l);
    for (std::size_t s = i + 1; s < l; ++s) w = seq.reflections[s].matrix * w;
    r.q.push_back(apply_matrix(w, unit_vector(l, order[i])));
  }
  RootSet qs(r.q.begin(), r.q.end());
  const std::size_t cap = matrix_order(seq.product_inverse) + 1;
  for (const auto& p : r.p) {
    std::vector<DimensionVector> chain{p};
    while (!qs.count(chain.back())) {
      if (chain.size() > cap) throw ComputationError("chain from " + show(p) + " does not reach an injective");
      DimensionVector next = apply_matrix(seq.product_inverse, chain.back());
      if (!nonnegative(next)) throw ComputationError("chain from " + show(p) + " leaves the positive cone");
      chain.push_back(std::move(next));
    }
    r.all_roots.insert(chain.begin(), chain.end());
    r.chains.push_back(std::move(chain));
  }
  return r;
}

ReflectionRoots cluster_roots_reflections(const BoundQuiverAlgebra& a) {
  return cluster_roots_reflections(reflection_sequence(a), admissible_ordering(a.quiver()));
}

RootSet positive_roots(const BoundQuiverAlgebra& a, long long bound, std::size_t node_cap) {
  if (bound < 1) throw ValidationError("bound must be at least 1");
  return search_box(euler_matrix(a), {}, bound, node_cap);
}

RootSet phi_positive_roots(const BoundQuiverAlgebra& a, long long bound, std::size_t node_cap) {
  if (bound < 1) throw ValidationError("bound must be at least 1");
  CoxeterData cox = coxeter(a);
  std::set<std::vector<long long>> rows;
  IntMatrix p = IntMatrix::identity(a.size());
  for (std::size_t m = 0; m < cox.order; ++m) {
    for (std::size_t i = 0; i < p.rows(); ++i) {
      std::vector<long long> r;
      for (std::size_t j = 0; j < p.cols(); ++j) r.push_back(as_ll(p(i, j)));
      if (!nonnegative(r)) rows.insert(r);
    }
    p = cox.phi * p;
  }
  RootSet found = search_box(euler_matrix(a), {rows.begin(), rows.end()}, bound, node_cap);
  RootSet out;
  for (const auto& x : found)
    if (classify(a, cox, x).phi_positive) out.insert(x);
  return out;
}

RootClassification classify(const BoundQuiverAlgebra& a, const CoxeterData& cox, const DimensionVector& x) {
  RootClassification c;
  c.is_root = quadratic_form(a, x) == 1;
  c.phi_positive = c.phi_nonpositive = c.sign_coherent = true;
  DimensionVector y = x;
  for (std::size_t m = 0; m < cox.order; ++m) {
    bool pos = nonnegative(y), neg = nonpositive(y);
    c.phi_positive = c.phi_positive && pos;
    c.phi_nonpositive = c.phi_nonpositive && neg;
    if (!pos && !neg && c.sign_coherent) {
      c.sign_coherent = false;
      c.witness = m;
    }
    y = apply_matrix(cox.phi, y);
  }
  return c;
}

RootClassification classify(const BoundQuiverAlgebra& a, const DimensionVector& x) {
  return classify(a, coxeter(a), x);
}

ConjectureReport check_conjecture(const BoundQuiverAlgebra& a, long long bound, std::size_t node_cap) {
  ConjectureReport r;
  r.cluster_roots = cluster_roots_phi(a).all_roots;
  if (bound <= 0) {
    long long mx = 0;
    for (const auto& x : r.cluster_roots)
      for (long long v : x) mx = std::max(mx, v);
    bound = mx + 1;
  }
  r.bound = bound;
  r.phi_positive_roots = phi_positive_roots(a, bound, node_cap);
  CoxeterData cox = coxeter(a);
  r.cluster_sign_coherent = true;
  for (const auto& x : r.cluster_roots) {
    if (!classify(a, cox, x).sign_coherent) r.cluster_sign_coherent = false;
    bool inside = std::all_of(x.begin(), x.end(), [&](long long v) { return v <= bound; });
    if (!inside) {
      ++r.cluster_roots_outside_box;
      continue;
    }
    if (!r.phi_positive_roots.count(x)) r.only_cluster.insert(x);
  }
  for (const auto& x : r.phi_positive_roots)
    if (!r.cluster_roots.count(x)) r.only_phi_positive.insert(x);
  r.cluster_in_phi_positive = r.only_cluster.empty();
  r.phi_positive_in_cluster = r.only_phi_positive.empty();
  r.conjecture_applies = a.n() == 2;
  r.verdict = r.cluster_in_phi_positive && r.phi_positive_in_cluster ? "holds within box" : "fails within box";
  return r;
}

}  // namespace tiltlab
