#include "ipd/payoff.hpp"

#include <stdexcept>

namespace ipd {

namespace {

void check_w_positive(double w) {
  if (!(w > 0.0 && w <= 1.0))
    throw std::invalid_argument("stopping probability w must be in (0, 1]");
}

Vector4 game_vector(const StageGame& g) {
  Vector4 v;
  v << static_cast<Real>(g.a_ll), static_cast<Real>(g.a_lr),
      static_cast<Real>(g.a_rl), static_cast<Real>(g.a_rr);
  return v;
}

// Places the joint-move distribution of one round into `row`: player 1
// cooperates with probability a, player 2 with probability b.
template <typename Row>
void fill_joint(Row&& row, Real a, Real b) {
  row[0] = a * b;
  row[1] = a * (1 - b);
  row[2] = (1 - a) * b;
  row[3] = (1 - a) * (1 - b);
}

}  // namespace

Matrix4 transition_matrix_m1(const Memory1Strategy& q,
                             const Memory1Strategy& p) {
  Matrix4 m;
  for (Outcome o : all_outcomes) {
    const int i = index_of(o);
    const Real a = q.reaction(o);
    const Real b = p.reaction(swap_perspective(o));
    fill_joint(m.row(i), a, b);
  }
  return m;
}

Vector4 initial_distribution_m1(const Memory1Strategy& q,
                                const Memory1Strategy& p) {
  Vector4 v;
  fill_joint(v, static_cast<Real>(q.p0), static_cast<Real>(p.p0));
  return v;
}

double payoff_m1(const Memory1Strategy& q, const Memory1Strategy& p,
                 const StageGame& g, double w) {
  check_w_positive(w);
  const Matrix4 m = transition_matrix_m1(q, p);
  const Vector4 v0 = initial_distribution_m1(q, p);
  const Real ww = w;
  Matrix4 a = Matrix4::Identity() - (1 - ww) * m.transpose();
  Vector4 u = a.partialPivLu().solve(Vector4(ww * v0));
  return static_cast<double>(u.dot(game_vector(g)));
}

double payoff_m1_limit(const Memory1Strategy& q, const Memory1Strategy& p,
                       const StageGame& g) {
  const Matrix4 m4 = transition_matrix_m1(q, p);
  const Vector4 v04 = initial_distribution_m1(q, p);
  MatrixX m = m4;
  VectorX v0 = v04;

  const ChainDecomposition dec = decompose_chain(m);
  const std::vector<Real> weights = absorption_probabilities(m, dec, v0);
  const Vector4 gv = game_vector(g);

  Real total = 0;
  for (std::size_t c = 0; c < dec.recurrent_classes.size(); ++c) {
    if (weights[c] <= 0) continue;
    VectorX pi = class_stationary(m, dec.recurrent_classes[c]);
    Real value = 0;
    for (int i = 0; i < 4; ++i) value += pi[i] * gv[i];
    total += weights[c] * value;
  }
  return static_cast<double>(total);
}

double payoff_m1_any(const Memory1Strategy& q, const Memory1Strategy& p,
                     const StageGame& g, double w) {
  return w == 0.0 ? payoff_m1_limit(q, p, g) : payoff_m1(q, p, g, w);
}

Vector16 initial_distribution_m2(const Memory2Strategy& q,
                                 const Memory2Strategy& p) {
  Vector4 d1;
  fill_joint(d1, static_cast<Real>(q.p0), static_cast<Real>(p.p0));
  Vector16 v = Vector16::Zero();
  for (Outcome o1 : all_outcomes) {
    const Real a = q.reaction_round2(o1);
    const Real b = p.reaction_round2(swap_perspective(o1));
    Real joint[4];
    fill_joint(joint, a, b);
    for (Outcome o2 : all_outcomes)
      v[Memory2Strategy::flat_index(o2, o1)] =
          d1[index_of(o1)] * joint[index_of(o2)];
  }
  return v;
}

Matrix16 transition_matrix_m2(const Memory2Strategy& q,
                              const Memory2Strategy& p) {
  Matrix16 m = Matrix16::Zero();
  for (Outcome last : all_outcomes) {
    for (Outcome before : all_outcomes) {
      const int s = Memory2Strategy::flat_index(last, before);
      const Real a = q.reaction(last, before);
      const Real b = p.reaction(swap_perspective(last), swap_perspective(before));
      Real joint[4];
      fill_joint(joint, a, b);
      for (Outcome next : all_outcomes)
        m(s, Memory2Strategy::flat_index(next, last)) = joint[index_of(next)];
    }
  }
  return m;
}

double payoff_m2(const Memory2Strategy& q, const Memory2Strategy& p,
                 const StageGame& g, double w) {
  check_w_positive(w);
  const Real ww = w;

  Vector4 d1;
  fill_joint(d1, static_cast<Real>(q.p0), static_cast<Real>(p.p0));
  const Vector4 gv = game_vector(g);
  const Real round1 = d1.dot(gv);
  if (w == 1.0) return static_cast<double>(round1);

  const Vector16 v0 = initial_distribution_m2(q, p);
  const Matrix16 m = transition_matrix_m2(q, p);
  Matrix16 a = Matrix16::Identity() - (1 - ww) * m.transpose();
  const Eigen::PartialPivLU<Matrix16> lu(a);
  const Vector16 b = ww * v0;
  Vector16 u = lu.solve(b);

  // One refinement step; at w near 1e-10 the raw solve can lose enough
  // digits to matter for 1e-9 payoff comparisons.
  u += lu.solve(Vector16(b - a * u));

  Real tail = 0;
  for (Outcome last : all_outcomes)
    for (Outcome before : all_outcomes)
      tail += u[Memory2Strategy::flat_index(last, before)] * gv[index_of(last)];

  return static_cast<double>(ww * round1 + (1 - ww) * tail);
}

}  // namespace ipd
