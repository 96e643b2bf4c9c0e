#include "gauge2/pairing.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace gauge2 {

TupleIterator::TupleIterator(int len, int dim) : tuple_(len, 0), dim_(dim), done_(len >= 0 && dim > 0 ? false : true)
{
  if (len == 0) done_ = false; // single empty tuple
}

void TupleIterator::next()
{
  for (int i = static_cast<int>(tuple_.size()) - 1; i >= 0; --i) {
    if (++tuple_[i] < dim_) return;
    tuple_[i] = 0;
  }
  done_ = true;
}

InvariantPairing::InvariantPairing(int arity, int dim_g, int dim_h)
    : arity_(arity), dim_g_(dim_g), dim_h_(dim_h)
{
  if (arity < 1) throw std::invalid_argument("pairing arity must be positive");
  std::size_t n = dim_h_;
  for (int i = 0; i < arity_; ++i) n *= dim_g_;
  t_.assign(n, Rational(0));
}

std::size_t InvariantPairing::index(std::span<const int> g_idx, int h_idx) const
{
  if (static_cast<int>(g_idx.size()) != arity_)
    throw std::invalid_argument("pairing arity mismatch");
  std::size_t idx = 0;
  for (int i = 0; i < arity_; ++i) {
    if (g_idx[i] < 0 || g_idx[i] >= dim_g_) throw std::out_of_range("pairing g index");
    idx = idx * dim_g_ + g_idx[i];
  }
  if (h_idx < 0 || h_idx >= dim_h_) throw std::out_of_range("pairing h index");
  return idx * dim_h_ + h_idx;
}

void InvariantPairing::set(std::span<const int> g_idx, int h_idx, const Rational& value)
{
  t_[index(g_idx, h_idx)] = value;
}

const Rational& InvariantPairing::at(std::span<const int> g_idx, int h_idx) const
{
  return t_[index(g_idx, h_idx)];
}

bool InvariantPairing::is_zero() const
{
  return std::all_of(t_.begin(), t_.end(), [](const Rational& v) { return v == 0; });
}

ValidationReport InvariantPairing::validate(const CrossedModule& cm) const
{
  if (cm.g().dim() != dim_g_ || cm.h().dim() != dim_h_)
    throw std::invalid_argument("pairing dimensions do not match the crossed module");

  ValidationReport report;
  const int n = arity_;

  // Symmetry in the g slots: adjacent transpositions generate the rest.
  AxiomCheck sym{"pairing_symmetry"};
  for (int slot = 0; slot + 1 < n; ++slot) {
    for (TupleIterator it(n, dim_g_); !it.done(); it.next()) {
      const auto& a = it.tuple();
      std::vector<int> b = a;
      std::swap(b[slot], b[slot + 1]);
      for (int y = 0; y < dim_h_; ++y) {
        const Rational r = at(a, y) - at(b, y);
        if (r != 0) {
          std::vector<int> w = a;
          w.push_back(y);
          w.push_back(slot);
          sym.residuals.push_back({w, r});
        }
      }
    }
  }
  sym.pass = sym.residuals.empty();
  report.checks.push_back(std::move(sym));

  // Ad-invariance: <X_1..X_n, X |> Y> = -sum_i <X_1..[X,X_i]..X_n, Y>.
  AxiomCheck inv{"pairing_ad_invariance"};
  for (TupleIterator it(n, dim_g_); !it.done(); it.next()) {
    const auto& a = it.tuple();
    for (int x = 0; x < dim_g_; ++x)
      for (int y = 0; y < dim_h_; ++y) {
        Rational lhs = 0;
        for (int b = 0; b < dim_h_; ++b) {
          const Rational& r = cm.act(x, y, b);
          if (r != 0) lhs += r * at(a, b);
        }
        Rational rhs = 0;
        for (int slot = 0; slot < n; ++slot) {
          std::vector<int> mod = a;
          for (int k = 0; k < dim_g_; ++k) {
            const Rational& cc = cm.g().c(x, a[slot], k);
            if (cc == 0) continue;
            mod[slot] = k;
            rhs -= cc * at(mod, y);
          }
        }
        const Rational r = lhs - rhs;
        if (r != 0) {
          std::vector<int> w = a;
          w.push_back(x);
          w.push_back(y);
          inv.residuals.push_back({w, r});
        }
      }
  }
  inv.pass = inv.residuals.empty();
  report.checks.push_back(std::move(inv));

  // Alpha swap: <X_1..alpha(Y_i)..X_n, Y> = <X_1..alpha(Y)..X_n, Y_i>.
  AxiomCheck swap{"pairing_alpha_swap"};
  for (int slot = 0; slot < n; ++slot) {
    for (TupleIterator it(n - 1, dim_g_); !it.done(); it.next()) {
      const auto& rest = it.tuple();
      for (int yi = 0; yi < dim_h_; ++yi)
        for (int y = 0; y < dim_h_; ++y) {
          Rational lhs = 0, rhs = 0;
          std::vector<int> full(n);
          // Tuple with the summation index `a` inserted at `slot`.
          for (int a = 0; a < dim_g_; ++a) {
            int r = 0;
            for (int i = 0; i < n; ++i) {
              if (i == slot)
                full[i] = a;
              else
                full[i] = rest[r++];
            }
            if (cm.alpha().at(a, yi) != 0) lhs += cm.alpha().at(a, yi) * at(full, y);
            if (cm.alpha().at(a, y) != 0) rhs += cm.alpha().at(a, y) * at(full, yi);
          }
          const Rational r = lhs - rhs;
          if (r != 0) {
            std::vector<int> w = rest;
            w.push_back(yi);
            w.push_back(y);
            w.push_back(slot);
            swap.residuals.push_back({w, r});
          }
        }
    }
  }
  swap.pass = swap.residuals.empty();
  report.checks.push_back(std::move(swap));

  return report;
}

std::vector<AxiomResidual> InvariantPairing::conjugation_residual(const RatMatrix& conj,
                                                                  const RatMatrix& act) const
{
  if (conj.rows() != dim_g_ || conj.cols() != dim_g_ || act.rows() != dim_h_ || act.cols() != dim_h_)
    throw std::invalid_argument("conjugation matrix dimensions mismatch");
  std::vector<AxiomResidual> residuals;
  for (TupleIterator it(arity_, dim_g_); !it.done(); it.next()) {
    const auto& a = it.tuple();
    for (int y = 0; y < dim_h_; ++y) {
      // sum over transformed tuples
      Rational lhs = 0;
      for (TupleIterator jt(arity_, dim_g_); !jt.done(); jt.next()) {
        const auto& b = jt.tuple();
        Rational factor = 1;
        for (int i = 0; i < arity_ && factor != 0; ++i) factor *= conj.at(b[i], a[i]);
        if (factor == 0) continue;
        for (int yb = 0; yb < dim_h_; ++yb) {
          const Rational& m = act.at(yb, y);
          if (m != 0) lhs += factor * m * at(b, yb);
        }
      }
      const Rational r = lhs - at(a, y);
      if (r != 0) {
        std::vector<int> w = a;
        w.push_back(y);
        residuals.push_back({w, r});
      }
    }
  }
  return residuals;
}

InvariantPairing InvariantPairing::from_trace(const CrossedModule& cm, int arity)
{
  if (!cm.has_representation())
    throw std::invalid_argument("trace pairing requires a matrix representation on g");
  const int dg = cm.g().dim(), dh = cm.h().dim();
  const auto& rho = cm.g().representation();
  const int d = cm.g().rep_size();

  std::vector<RatMatrix> alpha_rep;
  alpha_rep.reserve(dh);
  for (int b = 0; b < dh; ++b) alpha_rep.push_back(cm.rep_alpha(b));

  InvariantPairing p(arity, dg, dh);
  std::vector<int> perm(arity);
  for (TupleIterator it(arity, dg); !it.done(); it.next()) {
    const auto& a = it.tuple();
    for (int b = 0; b < dh; ++b) {
      Rational total = 0;
      std::iota(perm.begin(), perm.end(), 0);
      // All orderings of the arguments (as positions, so n! terms even with
      // repeated indices) and all insertion positions of alpha(Y_b).
      do {
        for (int pos = 0; pos <= arity; ++pos) {
          RatMatrix m = RatMatrix::identity_like(d, Rational(1), Rational(0));
          for (int i = 0; i < arity; ++i) {
            if (i == pos) m = m * alpha_rep[b];
            m = m * rho[a[perm[i]]];
          }
          if (pos == arity) m = m * alpha_rep[b];
          Rational tr = 0;
          for (int i = 0; i < d; ++i) tr += m.at(i, i);
          total += tr;
        }
      } while (std::next_permutation(perm.begin(), perm.end()));
      if (total != 0) p.set(a, b, total);
    }
  }
  return p;
}

} // namespace gauge2
