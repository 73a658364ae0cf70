// Copyright 2026 The qwalk Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qwalk/csd.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "qwalk/error.hpp"

namespace qwalk {

namespace {

using Eigen::Index;
using Eigen::VectorXd;

// Rows/columns within this distance of a unit vector count as untouched.
constexpr double kDeflateTol = 1e-14;

// Columns with sines below this are re-diagonalised jointly; dropping the
// off-diagonal QR terms costs about eps/sine, and the rebuilt left columns
// divide by a cosine of at least sqrt(3)/2.
constexpr double kSmallSine = 0.5;

/**
 * u = (l1 (+) l2) * Sigma(angles) * (r1h (+) r2h), with Sigma the cosine-sine
 * factor [[C, S], [-S, C]] on a single block of size 2h.
 */
struct CsSplit {
  MatrixXcd l1, l2, r1h, r2h;
  std::vector<double> angles;
};

CsSplit cs_split_dense(const MatrixXcd &v) {
  const Index h = v.rows() / 2;
  const MatrixXcd v11 = v.topLeftCorner(h, h);
  const MatrixXcd v12 = v.topRightCorner(h, h);
  const MatrixXcd v21 = v.bottomLeftCorner(h, h);
  const MatrixXcd v22 = v.bottomRightCorner(h, h);

  // Work with cosines ascending (sines descending) so that Householder QR
  // meets the well-conditioned columns first; flipped back at the end.
  Eigen::JacobiSVD<MatrixXcd> svd(v11, Eigen::ComputeFullU | Eigen::ComputeFullV);
  MatrixXcd l1 = svd.matrixU().rowwise().reverse();
  MatrixXcd r1 = svd.matrixV().rowwise().reverse();
  VectorXd c = svd.singularValues().reverse().cwiseMin(1.0);

  const MatrixXcd w = v21 * r1;
  Eigen::HouseholderQR<MatrixXcd> qr(w);
  MatrixXcd q = qr.householderQ();
  const MatrixXcd t = qr.matrixQR().triangularView<Eigen::Upper>();

  // Trailing columns with small sines: their QR diagonal is not trustworthy.
  Index split = h;
  while (split > 0 && w.col(split - 1).norm() < kSmallSine) --split;

  VectorXd s(h);
  MatrixXcd l2(h, h);
  for (Index i = 0; i < split; ++i) {
    const complex_t tii = t(i, i);
    const double mag = std::abs(tii);
    s(i) = mag;
    const complex_t phase = mag > 0.0 ? tii / mag : complex_t(-1.0);
    l2.col(i) = -q.col(i) * phase;
  }
  if (split < h) {
    const Index k = h - split;
    Eigen::JacobiSVD<MatrixXcd> small(t.bottomRightCorner(k, k),
                                      Eigen::ComputeFullU | Eigen::ComputeFullV);
    const MatrixXcd &x = small.matrixU();
    const MatrixXcd &y = small.matrixV();
    l2.rightCols(k) = -q.rightCols(k) * x;
    r1.rightCols(k) = r1.rightCols(k) * y;
    s.tail(k) = small.singularValues();
    // v11 r1 has orthogonal columns of norm c, and c ~ 1 here
    const MatrixXcd v11r = v11 * r1.rightCols(k);
    for (Index i = split; i < h; ++i) {
      c(i) = std::sqrt(std::max(0.0, 1.0 - s(i) * s(i)));
      l1.col(i) = v11r.col(i - split) / c(i);
    }
  }

  std::vector<double> angles(h);
  VectorXd cs(h), sn(h);
  for (Index i = 0; i < h; ++i) {
    angles[i] = std::atan2(s(i), c(i));
    cs(i) = std::cos(angles[i]);
    sn(i) = std::sin(angles[i]);
  }

  // v12 = l1 S r2h and v22 = l2 C r2h, so r2h = S l1* v12 + C l2* v22 holds
  // without dividing by either.
  const MatrixXcd r2h = sn.asDiagonal() * (l1.adjoint() * v12) +
                        cs.asDiagonal() * (l2.adjoint() * v22);

  CsSplit out;
  out.l1 = l1.rowwise().reverse();
  out.l2 = l2.rowwise().reverse();
  out.r1h = r1.rowwise().reverse().adjoint();
  out.r2h = r2h.colwise().reverse();
  out.angles.assign(angles.rbegin(), angles.rend());
  return out;
}

bool untouched(const MatrixXcd &u, Index i) {
  for (Index k = 0; k < u.rows(); ++k) {
    const complex_t expect = (k == i) ? 1.0 : 0.0;
    if (std::abs(u(i, k) - expect) > kDeflateTol ||
        std::abs(u(k, i) - expect) > kDeflateTol) {
      return false;
    }
  }
  return true;
}

CsSplit identity_split(Index h) {
  CsSplit out;
  out.l1 = MatrixXcd::Identity(h, h);
  out.l2 = MatrixXcd::Identity(h, h);
  out.r1h = MatrixXcd::Identity(h, h);
  out.r2h = MatrixXcd::Identity(h, h);
  out.angles.assign(h, 0.0);
  return out;
}

// Touched bottom indices are a proper subset of the touched top ones. The
// surplus top directions get cosine 1 and leave every untouched index alone.
CsSplit cs_split_nested(const MatrixXcd &u, const std::vector<Index> &top,
                        const std::vector<Index> &bot) {
  const Index h = u.rows() / 2;
  const Index a = static_cast<Index>(top.size());
  const Index b = static_cast<Index>(bot.size());
  std::vector<Index> bh;
  for (Index r : bot) bh.push_back(r + h);
  const MatrixXcd m11 = u(top, top);
  const MatrixXcd m12 = u(top, bh);
  const MatrixXcd m21 = u(bh, top);
  const MatrixXcd m22 = u(bh, bh);

  // null space of m21: inputs the coin keeps in the top half
  MatrixXcd z = MatrixXcd::Identity(a, a);
  if (b > 0) {
    Eigen::JacobiSVD<MatrixXcd> svd(m21, Eigen::ComputeFullV);
    z = svd.matrixV();
  }
  const MatrixXcd z1 = z.leftCols(b);
  const MatrixXcd z2 = z.rightCols(a - b);
  const MatrixXcd e = m11 * z2;
  Eigen::HouseholderQR<MatrixXcd> qr(e);
  const MatrixXcd qfull = qr.householderQ();
  const MatrixXcd q1 = qfull.rightCols(b);

  CsSplit out = identity_split(h);
  MatrixXcd l1(a, a), r1(a, a);
  if (b > 0) {
    MatrixXcd k(2 * b, 2 * b);
    k << q1.adjoint() * m11 * z1, q1.adjoint() * m12, m21 * z1, m22;
    const CsSplit sub = cs_split_dense(k);
    const MatrixXcd l1b = q1 * sub.l1;
    const MatrixXcd r1b = z1 * sub.r1h.adjoint();
    out.l2(bot, bot) = sub.l2;
    out.r2h(bot, bot) = sub.r2h;
    Index i = 0;
    for (Index r : bot) out.angles[r] = sub.angles[i++];
    i = 0;
    for (Index pos = 0; pos < a; ++pos) {
      if (i < b && top[pos] == bot[i]) {
        l1.col(pos) = l1b.col(i);
        r1.col(pos) = r1b.col(i);
        ++i;
      }
    }
  }
  Index extra = 0;
  for (Index pos = 0, i = 0; pos < a; ++pos) {
    if (i < b && top[pos] == bot[i]) {
      ++i;
      continue;
    }
    l1.col(pos) = e.col(extra);
    r1.col(pos) = z2.col(extra);
    ++extra;
  }
  out.l1(top, top) = l1;
  out.r1h(top, top) = r1.adjoint();
  return out;
}

CsSplit cs_split(const MatrixXcd &u) {
  const Index h = u.rows() / 2;
  std::vector<Index> active, top, bot;
  for (Index r = 0; r < h; ++r) {
    const bool t = !untouched(u, r);
    const bool b = !untouched(u, r + h);
    if (t) top.push_back(r);
    if (b) bot.push_back(r);
    if (t || b) active.push_back(r);
  }
  if (static_cast<Index>(active.size()) == h && top == bot) {
    return cs_split_dense(u);
  }
  if (active.empty()) return identity_split(h);

  auto contains = [](const std::vector<Index> &big, const std::vector<Index> &small) {
    return std::includes(big.begin(), big.end(), small.begin(), small.end());
  };
  if (top != bot && contains(top, bot)) return cs_split_nested(u, top, bot);
  if (top != bot && contains(bot, top)) {
    // swap halves: P U P has the nested shape, and P CS(t) P = CS(-t)
    MatrixXcd swapped(2 * h, 2 * h);
    swapped << u.bottomRightCorner(h, h), u.bottomLeftCorner(h, h),
        u.topRightCorner(h, h), u.topLeftCorner(h, h);
    CsSplit s = cs_split_nested(swapped, bot, top);
    CsSplit out;
    out.l1 = std::move(s.l2);
    out.l2 = std::move(s.l1);
    out.r1h = std::move(s.r2h);
    out.r2h = std::move(s.r1h);
    for (double &t : s.angles) t = -t;
    out.angles = std::move(s.angles);
    return out;
  }

  // Pairs with both ends untouched deflate; the rest is split densely.
  CsSplit out = identity_split(h);
  std::vector<Index> idx(active);
  for (Index r : active) idx.push_back(r + h);
  const CsSplit sub = cs_split_dense(u(idx, idx));
  out.l1(active, active) = sub.l1;
  out.l2(active, active) = sub.l2;
  out.r1h(active, active) = sub.r1h;
  out.r2h(active, active) = sub.r2h;
  for (std::size_t a = 0; a < active.size(); ++a) {
    out.angles[active[a]] = sub.angles[a];
  }
  return out;
}

// Decomposes the block-diagonal matrix diag(blocks) (all the same size) into
// factors in application order.
std::vector<CsdFactor> decompose_blocks(const std::vector<MatrixXcd> &blocks) {
  const Index b = blocks.front().rows();
  if (b == 2) {
    CsdFactor f;
    f.d = 2;
    f.kind = FactorKind::General2;
    for (const MatrixXcd &m : blocks) f.blocks.emplace_back(m);
    return {f};
  }

  CsdFactor middle;
  middle.d = static_cast<int>(b);
  middle.kind = FactorKind::CosineSine;
  std::vector<MatrixXcd> left, right;
  for (const MatrixXcd &m : blocks) {
    CsSplit split = cs_split(m);
    left.push_back(std::move(split.l1));
    left.push_back(std::move(split.l2));
    right.push_back(std::move(split.r1h));
    right.push_back(std::move(split.r2h));
    middle.angles.push_back(std::move(split.angles));
  }

  std::vector<CsdFactor> out = decompose_blocks(right);
  out.push_back(std::move(middle));
  for (CsdFactor &f : decompose_blocks(left)) out.push_back(std::move(f));
  return out;
}

}  // namespace

CsdProgram csd_decompose(const MatrixXcd &u) {
  if (u.rows() != u.cols() || u.rows() < 2 || !is_power_of_two(u.rows())) {
    throw Error(ErrorCode::NotPowerOfTwo,
                "cosine-sine decomposition needs a 2^m x 2^m matrix (m >= 1), "
                "got " +
                    std::to_string(u.rows()) + "x" + std::to_string(u.cols()));
  }
  const double defect = unitarity_defect(u);
  if (defect > 1e-10) {
    std::ostringstream msg;
    msg << "matrix is not unitary (defect " << defect << ")";
    throw Error(ErrorCode::NotUnitary, msg.str());
  }
  CsdProgram p;
  p.n = static_cast<int>(u.rows());
  p.factors = decompose_blocks({u});
  return p;
}

Matrix2cd cs_rotation(double angle) {
  const double c = std::cos(angle);
  const double s = std::sin(angle);
  Matrix2cd m;
  m << c, s, -s, c;
  return m;
}

MatrixXcd materialize(const CsdFactor &f, int n) {
  if (f.d < 2 || n < f.d || n % f.d != 0) {
    throw Error(ErrorCode::BadBlockSize, "block size " + std::to_string(f.d) +
                                             " does not divide dimension " +
                                             std::to_string(n));
  }
  MatrixXcd m = MatrixXcd::Zero(n, n);
  const int n_blocks = n / f.d;
  if (f.kind == FactorKind::General2) {
    if (f.d != 2 || static_cast<int>(f.blocks.size()) != n_blocks) {
      throw Error(ErrorCode::BadBlockSize,
                  "general 2x2 factor needs " + std::to_string(n / 2) +
                      " blocks of size 2");
    }
    for (int k = 0; k < n_blocks; ++k) m.block<2, 2>(2 * k, 2 * k) = f.blocks[k];
    return m;
  }
  const int half = f.d / 2;
  if (static_cast<int>(f.angles.size()) != n_blocks) {
    throw Error(ErrorCode::BadBlockSize,
                "cosine-sine factor needs " + std::to_string(n_blocks) +
                    " angle blocks");
  }
  for (int k = 0; k < n_blocks; ++k) {
    if (static_cast<int>(f.angles[k].size()) != half) {
      throw Error(ErrorCode::BadBlockSize,
                  "cosine-sine block " + std::to_string(k + 1) + " needs " +
                      std::to_string(half) + " angles");
    }
    for (int r = 0; r < half; ++r) {
      const int p = k * f.d + r;
      const int q = p + half;
      const double c = std::cos(f.angles[k][r]);
      const double s = std::sin(f.angles[k][r]);
      m(p, p) = c;
      m(p, q) = s;
      m(q, p) = -s;
      m(q, q) = c;
    }
  }
  return m;
}

MatrixXcd program_matrix(const CsdProgram &p) {
  MatrixXcd acc = MatrixXcd::Identity(p.n, p.n);
  for (const CsdFactor &f : p.factors) acc = materialize(f, p.n) * acc;
  return acc;
}

PulseSchedule emit_schedule(const CsdProgram &p, double drop_tol) {
  PulseSchedule out;
  out.n = p.n;
  const Matrix2cd id = Matrix2cd::Identity();
  for (const CsdFactor &f : p.factors) {
    Stage stage;
    stage.interval = f.d / 2;
    auto keep = [&](int p0, int q0, const Matrix2cd &u) {
      if ((u - id).cwiseAbs().maxCoeff() > drop_tol) {
        stage.rotations.push_back({p0 + 1, q0 + 1, u});
      }
    };
    if (f.kind == FactorKind::General2) {
      for (std::size_t k = 0; k < f.blocks.size(); ++k) {
        keep(static_cast<int>(2 * k), static_cast<int>(2 * k + 1), f.blocks[k]);
      }
    } else {
      for (std::size_t k = 0; k < f.angles.size(); ++k) {
        for (std::size_t r = 0; r < f.angles[k].size(); ++r) {
          const int p0 = static_cast<int>(k) * f.d + static_cast<int>(r);
          keep(p0, p0 + stage.interval, cs_rotation(f.angles[k][r]));
        }
      }
    }
    out.stages.push_back(std::move(stage));
  }
  return out;
}

VectorXcd execute_schedule(const VectorXcd &v, const PulseSchedule &s) {
  if (v.size() != s.n) {
    throw Error(ErrorCode::DimensionMismatch,
                "vector of length " + std::to_string(v.size()) +
                    " for a schedule of dimension " + std::to_string(s.n));
  }
  VectorXcd out = v;
  std::vector<int> owner(s.n);
  for (std::size_t i = 0; i < s.stages.size(); ++i) {
    std::fill(owner.begin(), owner.end(), 0);
    for (const PairRotation &rot : s.stages[i].rotations) {
      for (int idx : {rot.p, rot.q}) {
        if (idx < 1 || idx > s.n) {
          throw Error(ErrorCode::IndexCollision,
                      "stage " + std::to_string(i + 1) + " addresses index " +
                          std::to_string(idx) + " outside the vector");
        }
        if (owner[idx - 1]++ > 0) {
          throw Error(ErrorCode::IndexCollision,
                      "stage " + std::to_string(i + 1) + " uses index " +
                          std::to_string(idx) + " twice");
        }
      }
      const complex_t a = out(rot.p - 1);
      const complex_t b = out(rot.q - 1);
      out(rot.p - 1) = rot.u(0, 0) * a + rot.u(0, 1) * b;
      out(rot.q - 1) = rot.u(1, 0) * a + rot.u(1, 1) * b;
    }
  }
  return out;
}

CompiledCoins compile_coin_set(const CoinSet &c) {
  CompiledCoins out;
  out.programs.reserve(c.coins.size());
  out.schedules.reserve(c.coins.size());
  for (const MatrixXcd &coin : c.coins) {
    out.programs.push_back(csd_decompose(coin));
    out.schedules.push_back(emit_schedule(out.programs.back()));
  }
  return out;
}

StateSpace compiled_coin_apply(const StateSpace &s,
                               const std::vector<PulseSchedule> &schedules,
                               Orientation orientation) {
  if (static_cast<int>(schedules.size()) != s.n()) {
    throw Error(ErrorCode::DimensionMismatch,
                std::to_string(schedules.size()) + " schedules for a " +
                    std::to_string(s.n()) + "x" + std::to_string(s.n()) +
                    " state");
  }
  StateSpace out = s;
  for (int j = 0; j < s.n(); ++j) {
    if (orientation == Orientation::Horizontal) {
      out.amps().row(j) =
          execute_schedule(s.amps().row(j).transpose(), schedules[j]).transpose();
    } else {
      out.amps().col(j) = execute_schedule(s.amps().col(j), schedules[j]);
    }
  }
  return out;
}

}  // namespace qwalk
