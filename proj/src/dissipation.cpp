#include "hermax/dissipation.hpp"

#include <stdexcept>

#include "hermax/kernels.hpp"

namespace hermax {

DissipationState::DissipationState(const Grid& grid, int m,
                                   std::vector<int> slots,
                                   std::vector<double> gammas, int p, double h)
    : grid_(grid), m_(m), p_(p), h_(h), slots_(std::move(slots)),
      gammas_(std::move(gammas)) {
  if (slots_.size() != gammas_.size())
    throw std::invalid_argument("DissipationState: slots/gammas mismatch");
  block_ = 1;
  for (int a = 0; a < grid.dim; ++a) block_ *= std::size_t(m + 1);
  data_.assign(grid.n_nodes() * slots_.size() * std::size_t(p + 1) * block_,
               0.0);
  lvec_ = nordsieck_corrector_vector(p);
}

double* DissipationState::slot_block(std::size_t node, int dcomp, int j) {
  return data_.data() +
         ((node * slots_.size() + dcomp) * std::size_t(p_ + 1) + j) * block_;
}

const double* DissipationState::slot_block(std::size_t node, int dcomp,
                                           int j) const {
  return data_.data() +
         ((node * slots_.size() + dcomp) * std::size_t(p_ + 1) + j) * block_;
}

void DissipationState::derivative_block(std::size_t node, int dcomp, int r,
                                        double s, double* out) const {
  if (r > p_) {
    for (std::size_t i = 0; i < block_; ++i) out[i] = 0.0;
    return;
  }
  double fact = 1.0;
  for (int i = 2; i <= r; ++i) fact *= i;
  double hpow = 1.0;
  for (int i = 0; i < r; ++i) hpow *= h_;
  double binom = 1.0, spow = 1.0;
  kernels::scale(block_, fact / hpow, slot_block(node, dcomp, r), out);
  for (int j = r + 1; j <= p_; ++j) {
    binom = binom * j / (j - r);
    spow *= s;
    kernels::axpy(block_, binom * spow * fact / hpow,
                  slot_block(node, dcomp, j), out);
  }
}

void DissipationState::advance_and_correct(const HermiteField& new_field) {
  if (empty()) return;
  const std::size_t n_nodes = grid_.n_nodes();
  std::vector<double> delta(block_);
  for (std::size_t node = 0; node < n_nodes; ++node) {
    for (int d = 0; d < int(slots_.size()); ++d) {
      // Taylor shift by one step, slab-wise over DOFs
      for (int i = 0; i < p_; ++i)
        for (int j = p_ - 1; j >= i; --j)
          kernels::axpy(block_, 1.0, slot_block(node, d, j + 1),
                        slot_block(node, d, j));
      // delta = h*f_new - zhat_1, f = -gamma*u
      kernels::scale(block_, -h_ * gammas_[d],
                     new_field.block(node, slots_[d]), delta.data());
      kernels::axpy(block_, -1.0, slot_block(node, d, 1), delta.data());
      for (int j = 0; j <= p_; ++j)
        kernels::axpy(block_, lvec_[j], delta.data(), slot_block(node, d, j));
    }
  }
}

void DissipationState::init_exact(const SymmetrizedSystem& sys, char which,
                                  const ExactSolution& sol, double t0) {
  if (empty()) return;
  const auto& slots = (which == 'v') ? sys.v_slots : sys.w_slots;
  const int dim = grid_.dim;
  const std::size_t n_nodes = grid_.n_nodes();
  std::vector<double> dxfac(block_, 1.0);
  std::vector<std::array<int, 3>> alphas(block_, {0, 0, 0});
  for (std::size_t idx = 0; idx < block_; ++idx) {
    std::size_t rem = idx;
    for (int a = 0; a < dim; ++a) {
      alphas[idx][a] = int(rem % std::size_t(m_ + 1));
      rem /= std::size_t(m_ + 1);
      double f = 1.0;
      for (int r = 1; r <= alphas[idx][a]; ++r) f *= grid_.dx(a) / r;
      dxfac[idx] *= f;
    }
  }
  for (std::size_t node = 0; node < n_nodes; ++node) {
    const auto ic = grid_.node_coords(node);
    double x[3] = {0.0, 0.0, 0.0};
    for (int a = 0; a < dim; ++a) x[a] = grid_.coord(a, ic[a]);
    for (int d = 0; d < int(slots_.size()); ++d) {
      const TrigMode& mode = sol.mode(slots[slots_[d]].name);
      const double scale = slots[slots_[d]].scale;
      double hj = 1.0, fj = 1.0;
      for (int j = 0; j <= p_; ++j) {
        double* blk = slot_block(node, d, j);
        if (j == 0) {
          for (std::size_t i = 0; i < block_; ++i) blk[i] = 0.0;
        } else {
          hj *= h_;
          fj *= j;
          // z_j = (h^j/j!) * (-gamma) * u^{(j-1)}, u the scaled slot
          for (std::size_t i = 0; i < block_; ++i)
            blk[i] = (hj / fj) * (-gammas_[d]) * scale * dxfac[i] *
                     sol.eval(mode, alphas[i], j - 1, x, t0);
        }
      }
    }
  }
}

void DissipationState::init_general(const HermiteField& field0) {
  if (empty()) return;
  std::fill(data_.begin(), data_.end(), 0.0);
  const std::size_t n_nodes = grid_.n_nodes();
  for (std::size_t node = 0; node < n_nodes; ++node)
    for (int d = 0; d < int(slots_.size()); ++d)
      kernels::scale(block_, -h_ * gammas_[d],
                     field0.block(node, slots_[d]), slot_block(node, d, 1));
}

}  // namespace hermax
