#include "intsimplex/canonical.hpp"

#include <stdexcept>

#include "intsimplex/kernels.hpp"

namespace intsimplex {

namespace {

using kernels::DistanceRow;

// Shared state of one labeling search over an n-point matrix.
class LabelingSearch {
 public:
  explicit LabelingSearch(const IntMatrix& a) : a_(a), n_(a.rows()) {
    if (!a.is_square()) throw std::invalid_argument("canonical form of a non-square matrix");
    if (n_ > kernels::kLanes) throw std::invalid_argument("canonical form: too many points");
    for (std::size_t i = 0; i < n_; ++i) {
      for (std::size_t j = 0; j < n_; ++j) {
        if (a(i, j) < 0 || a(i, j) > 63) throw std::invalid_argument("canonical form: entry out of range");
      }
    }
    twin_rep_.resize(n_);
    for (std::size_t v = 0; v < n_; ++v) {
      twin_rep_[v] = v;
      for (std::size_t u = 0; u < v; ++u) {
        if (twins(u, v)) {
          twin_rep_[v] = twin_rep_[u];
          break;
        }
      }
    }
    perm_.resize(n_);
    used_.assign(n_, false);
    rows_.resize(n_);
  }

  // Row of vertex v against the vertices already placed at positions < pos.
  void gather(std::size_t v, std::size_t pos, DistanceRow& out) const {
    for (std::size_t j = 0; j < pos; ++j) out[j] = static_cast<std::int8_t>(a_(v, perm_[j]));
  }

  // Identity row `pos` of the input word.
  DistanceRow identity_row(std::size_t pos) const {
    DistanceRow r;
    for (std::size_t j = 0; j < pos; ++j) r[j] = static_cast<std::int8_t>(a_(pos, j));
    return r;
  }

  // Among unplaced twins only the first one in index order is expanded.
  bool skip(std::size_t v) const {
    if (used_[v]) return true;
    for (std::size_t u = twin_rep_[v]; u < v; ++u) {
      if (!used_[u] && twin_rep_[u] == twin_rep_[v]) return true;
    }
    return false;
  }

  // Finds a strictly smaller word than the identity labeling's.
  bool find_smaller(std::size_t pos) {
    if (pos == n_) return false;
    const DistanceRow target = identity_row(pos);
    DistanceRow cand;
    for (std::size_t v = 0; v < n_; ++v) {
      if (skip(v)) continue;
      gather(v, pos, cand);
      const int c = kernels::compare_rows(cand, target, pos);
      if (c > 0) continue;
      if (c < 0) return true;
      place(pos, v);
      const bool found = find_smaller(pos + 1);
      unplace(v);
      if (found) return true;
    }
    return false;
  }

  // Branch and bound for the minimal word. The current path's rows are never
  // above the incumbent's; below_ is set once they are strictly below, and
  // cleared when a leaf replaces the incumbent (the path then equals it).
  void minimize(std::size_t pos) {
    if (pos == n_) {
      if (below_) {
        best_rows_ = rows_;
        best_perm_ = perm_;
        below_ = false;
      }
      return;
    }
    DistanceRow cand;
    for (std::size_t v = 0; v < n_; ++v) {
      if (skip(v)) continue;
      gather(v, pos, cand);
      if (!below_) {
        const int c = kernels::compare_rows(cand, best_rows_[pos], pos);
        if (c > 0) continue;
        if (c < 0) below_ = true;
      }
      rows_[pos] = cand;
      place(pos, v);
      minimize(pos + 1);
      unplace(v);
    }
  }

  CanonicalForm run_minimize() {
    best_perm_.resize(n_);
    best_rows_.assign(n_, DistanceRow{});
    for (std::size_t i = 0; i < n_; ++i) {
      best_perm_[i] = i;
      best_rows_[i] = identity_row(i);
    }
    below_ = false;
    minimize(0);
    CanonicalForm out;
    out.labeling = best_perm_;
    for (std::size_t i = 1; i < n_; ++i) {
      for (std::size_t j = 0; j < i; ++j) out.word.push_back(best_rows_[i][j]);
    }
    return out;
  }

 private:
  bool twins(std::size_t u, std::size_t v) const {
    for (std::size_t w = 0; w < n_; ++w) {
      if (w != u && w != v && a_(u, w) != a_(v, w)) return false;
    }
    return true;
  }

  void place(std::size_t pos, std::size_t v) {
    perm_[pos] = v;
    used_[v] = true;
  }
  void unplace(std::size_t v) { used_[v] = false; }

  const IntMatrix& a_;
  std::size_t n_;
  std::vector<std::size_t> twin_rep_;
  std::vector<std::size_t> perm_;
  std::vector<bool> used_;
  std::vector<DistanceRow> rows_;
  std::vector<DistanceRow> best_rows_;
  std::vector<std::size_t> best_perm_;
  bool below_ = false;
};

}  // namespace

std::vector<std::int64_t> distance_word(const IntMatrix& a) {
  std::vector<std::int64_t> w;
  for (std::size_t i = 1; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < i; ++j) w.push_back(a(i, j));
  }
  return w;
}

CanonicalForm canonical_form(const IntMatrix& a) { return LabelingSearch(a).run_minimize(); }

bool is_canonical(const IntMatrix& a) { return !LabelingSearch(a).find_smaller(0); }

IntMatrix relabel(const IntMatrix& a, const std::vector<std::size_t>& labeling) {
  const std::size_t n = a.rows();
  if (labeling.size() != n) throw std::invalid_argument("relabel: labeling size mismatch");
  IntMatrix out = IntMatrix::square(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) out(i, j) = a(labeling[i], labeling[j]);
  }
  return out;
}

IntMatrix canonical_matrix(const IntMatrix& a) { return relabel(a, canonical_form(a).labeling); }

}  // namespace intsimplex
