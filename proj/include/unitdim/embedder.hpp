#pragma once

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <limits>
#include <numbers>
#include <optional>
#include <random>
#include <string>
#include <thread>
#include <tuple>
#include <vector>

#include <Eigen/Dense>

#include "unitdim/geometry.hpp"
#include "unitdim/graph.hpp"

namespace unitdim {

// Vertex coordinates, one row per vertex.
struct Embedding {
  Graph graph;
  int ambient_dim = 0;
  Eigen::MatrixXd coords;

  Eigen::VectorXd point(int v) const { return coords.row(v).transpose(); }
};

inline constexpr double kFoundResidual = 1e-8;
inline constexpr double kCertificateTol = 1e-6;
inline constexpr double kSeparationFloor = 1e-4;
inline constexpr double kSphereMargin = 1e-6;
inline constexpr double kCrossingTol = 1e-7;

struct EmbedRequest {
  Graph graph;
  int ambient_dim = 2;
  bool on_sphere = false;
  std::optional<double> sphere_radius;  // fixed radius, otherwise free
  double max_radius = 1.0 - 1e-4;       // cap for a free radius
  bool forbid_crossings = false;
  int restarts = 100;
  std::uint64_t seed = 0;
  double tolerance = kCertificateTol;
  int threads = 0;  // 0: UNITDIM_THREADS or hardware concurrency
};

struct CertificateReport {
  double max_edge_residual = 0.0;
  double min_vertex_separation = std::numeric_limits<double>::infinity();
  std::optional<double> sphere_deviation;
  std::optional<double> sphere_radius;
  std::vector<std::pair<Edge, Edge>> crossings;
  std::vector<std::pair<int, Edge>> vertex_on_edge;
  bool valid = false;
  std::string reason;
};

struct EmbedResult {
  bool found = false;
  std::optional<Embedding> embedding;
  int restart_index = -1;  // restart that produced the embedding
  int restarts_tried = 0;
  double best_cost = std::numeric_limits<double>::infinity();
  CertificateReport report;

  std::string status() const {
    return found ? "found"
                 : "inconclusive after " + std::to_string(restarts_tried) + " restarts";
  }
};

// ---------------------------------------------------------------------------
// Segment geometry

struct ClosestPair {
  double distance = 0.0;
  double s = 0.0;  // parameter on the first segment
  double t = 0.0;  // parameter on the second segment
};

inline ClosestPair point_segment(const Eigen::VectorXd& p, const Eigen::VectorXd& a,
                                 const Eigen::VectorXd& b) {
  const Eigen::VectorXd ab = b - a;
  const double len2 = ab.squaredNorm();
  double t = len2 > 0 ? (p - a).dot(ab) / len2 : 0.0;
  t = std::clamp(t, 0.0, 1.0);
  return {(p - (a + t * ab)).norm(), 0.0, t};
}

// Closest points of segments [p1,p2] and [q1,q2] in any dimension.
inline ClosestPair segment_segment(const Eigen::VectorXd& p1, const Eigen::VectorXd& p2,
                                   const Eigen::VectorXd& q1, const Eigen::VectorXd& q2) {
  const Eigen::VectorXd d1 = p2 - p1, d2 = q2 - q1, r = p1 - q1;
  const double a = d1.squaredNorm(), e = d2.squaredNorm(), f = d2.dot(r);
  double s = 0, t = 0;
  constexpr double eps = 1e-300;
  if (a <= eps && e <= eps) return {r.norm(), 0, 0};
  if (a <= eps) {
    t = std::clamp(f / e, 0.0, 1.0);
  } else {
    const double c = d1.dot(r);
    if (e <= eps) {
      s = std::clamp(-c / a, 0.0, 1.0);
    } else {
      const double b = d1.dot(d2);
      const double denom = a * e - b * b;
      s = denom > 1e-15 * a * e ? std::clamp((b * f - c * e) / denom, 0.0, 1.0) : 0.0;
      t = (b * s + f) / e;
      if (t < 0) {
        t = 0;
        s = std::clamp(-c / a, 0.0, 1.0);
      } else if (t > 1) {
        t = 1;
        s = std::clamp((b - c) / a, 0.0, 1.0);
      }
    }
  }
  // Parallel overlapping segments can leave a better pair at an endpoint.
  ClosestPair best{((p1 + s * d1) - (q1 + t * d2)).norm(), s, t};
  auto consider = [&](double ss, double tt) {
    const double dist = ((p1 + ss * d1) - (q1 + tt * d2)).norm();
    if (dist < best.distance) best = {dist, ss, tt};
  };
  if (e > eps) {
    consider(0, point_segment(p1, q1, q2).t);
    consider(1, point_segment(p2, q1, q2).t);
  }
  if (a > eps) {
    consider(point_segment(q1, p1, p2).t, 0);
    consider(point_segment(q2, p1, p2).t, 1);
  }
  return best;
}

// ---------------------------------------------------------------------------
// Sphere fitting

inline int affine_rank(const Eigen::MatrixXd& pts, double tol = 1e-9) {
  if (pts.rows() <= 1) return 0;
  const Eigen::MatrixXd centered = pts.rowwise() - pts.colwise().mean();
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(centered);
  const auto& sv = svd.singularValues();
  int rank = 0;
  for (int i = 0; i < sv.size(); ++i)
    if (sv(i) > tol * std::max(1.0, sv(0))) ++rank;
  return rank;
}

// Least-squares sphere through the points inside their affine hull. The
// sphere dimension equals the affine rank; nullopt when the points are not
// cospherical within tol.
inline std::optional<SphereSpec> fitted_sphere(const Eigen::MatrixXd& pts, double tol = kCertificateTol) {
  const int n = static_cast<int>(pts.rows());
  const int ambient = static_cast<int>(pts.cols());
  if (n < 2) return std::nullopt;
  const Eigen::RowVectorXd mean = pts.colwise().mean();
  const Eigen::MatrixXd centered = pts.rowwise() - mean;
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(centered, Eigen::ComputeThinV);
  const int k = affine_rank(pts);
  if (k == 0) return std::nullopt;
  const Eigen::MatrixXd basis = svd.matrixV().leftCols(k);  // ambient x k
  const Eigen::MatrixXd y = centered * basis;                // n x k
  // |y - c|^2 = rho^2  <=>  2 y.c + (rho^2 - |c|^2) = |y|^2
  Eigen::MatrixXd A(n, k + 1);
  Eigen::VectorXd b(n);
  for (int i = 0; i < n; ++i) {
    A.row(i).head(k) = 2.0 * y.row(i);
    A(i, k) = 1.0;
    b(i) = y.row(i).squaredNorm();
  }
  const Eigen::VectorXd sol = A.colPivHouseholderQr().solve(b);
  const Eigen::VectorXd c = sol.head(k);
  const double rho2 = sol(k) + c.squaredNorm();
  if (!(rho2 > 0)) return std::nullopt;
  const double rho = std::sqrt(rho2);
  for (int i = 0; i < n; ++i)
    if (std::abs((y.row(i).transpose() - c).norm() - rho) > tol) return std::nullopt;
  SphereSpec s;
  s.ambient_dim = ambient;
  s.sphere_dim = k;
  s.center = mean.transpose() + basis * c;
  s.radius = rho;
  s.carrier = basis;
  return s;
}

inline std::optional<SphereSpec> fitted_sphere(const Embedding& e, double tol = kCertificateTol) {
  return fitted_sphere(e.coords, tol);
}

// ---------------------------------------------------------------------------
// Certificate validation, independent of the optimizer.

inline CertificateReport validate(const Embedding& e, bool on_sphere = false,
                                  std::optional<double> sphere_radius = std::nullopt,
                                  bool forbid_crossings = false, double tol = kCertificateTol) {
  CertificateReport rep;
  const Graph& g = e.graph;
  const int n = g.vertex_count();
  if (e.coords.rows() != n || e.coords.cols() != e.ambient_dim || !e.coords.allFinite()) {
    rep.reason = "coordinates malformed or not finite";
    return rep;
  }
  const auto edges = g.edges();
  for (auto [u, v] : edges)
    rep.max_edge_residual =
        std::max(rep.max_edge_residual, std::abs((e.point(u) - e.point(v)).norm() - 1.0));
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      rep.min_vertex_separation =
          std::min(rep.min_vertex_separation, (e.point(u) - e.point(v)).norm());
  for (int w = 0; w < n; ++w)
    for (auto [u, v] : edges) {
      if (w == u || w == v) continue;
      if (point_segment(e.point(w), e.point(u), e.point(v)).distance < kCrossingTol)
        rep.vertex_on_edge.push_back({w, {u, v}});
    }
  for (std::size_t i = 0; i < edges.size(); ++i)
    for (std::size_t j = i + 1; j < edges.size(); ++j) {
      auto [a, b] = edges[i];
      auto [c, d] = edges[j];
      if (a == c || a == d || b == c || b == d) continue;
      if (segment_segment(e.point(a), e.point(b), e.point(c), e.point(d)).distance < kCrossingTol)
        rep.crossings.push_back({edges[i], edges[j]});
    }

  bool sphere_ok = true;
  if (on_sphere) {
    if (n == 1) {
      rep.sphere_deviation = 0.0;
      rep.sphere_radius = sphere_radius.value_or(0.5);
    } else if (auto s = fitted_sphere(e, tol)) {
      double dev = 0;
      for (int v = 0; v < n; ++v)
        dev = std::max(dev, std::abs((e.point(v) - s->center).norm() - s->radius));
      rep.sphere_deviation = dev;
      rep.sphere_radius = s->radius;
      if (s->radius > 1.0 - kSphereMargin) sphere_ok = false;
      if (sphere_radius) {
        // A lower-dimensional sphere sits on ambient spheres of any larger radius.
        if (s->sphere_dim == e.ambient_dim) sphere_ok = sphere_ok && std::abs(s->radius - *sphere_radius) <= tol;
        else sphere_ok = sphere_ok && s->radius <= *sphere_radius + tol;
      }
    } else {
      sphere_ok = false;
    }
  }

  if (rep.max_edge_residual > tol) rep.reason = "edge length residual above tolerance";
  else if (rep.min_vertex_separation < kSeparationFloor) rep.reason = "vertices coincide";
  else if (!rep.vertex_on_edge.empty()) rep.reason = "an edge passes through a vertex";
  else if (forbid_crossings && !rep.crossings.empty()) rep.reason = "edges cross";
  else if (!sphere_ok) rep.reason = "vertices not on a sphere of admissible radius";
  rep.valid = rep.reason.empty();
  return rep;
}

inline CertificateReport validate(const Embedding& e, const EmbedRequest& req) {
  return validate(e, req.on_sphere, req.sphere_radius, req.forbid_crossings, req.tolerance);
}

// ---------------------------------------------------------------------------
// Realization search: Levenberg-Marquardt on edge, hinge and sphere residuals.

namespace detail {

inline constexpr double kSeparationHinge = 0.05;
inline constexpr double kEdgeHinge = 0.02;

class RealizationProblem {
 public:
  explicit RealizationProblem(const EmbedRequest& req)
      : req_(req), n_(req.graph.vertex_count()), d_(req.ambient_dim), edges_(req.graph.edges()) {
    free_radius_ = req.on_sphere && !req.sphere_radius;
    vars_ = n_ * d_ + (free_radius_ ? 1 : 0);
  }

  int variables() const { return vars_; }

  // Fills residuals and Jacobian rows for the hinges active at x.
  void evaluate(const Eigen::VectorXd& x, Eigen::VectorXd& r, Eigen::MatrixXd& J) const {
    rows_.clear();
    jac_.clear();
    auto p = [&](int v) { return x.segment(v * d_, d_); };
    auto add_row = [&]() {
      rows_.push_back(0.0);
      jac_.emplace_back(Eigen::VectorXd::Zero(vars_));
      return static_cast<int>(rows_.size()) - 1;
    };
    for (auto [u, v] : edges_) {
      const Eigen::VectorXd diff = p(u) - p(v);
      const int i = add_row();
      rows_[i] = diff.squaredNorm() - 1.0;
      jac_[i].segment(u * d_, d_) = 2 * diff;
      jac_[i].segment(v * d_, d_) = -2 * diff;
    }
    const double s2 = kSeparationHinge * kSeparationHinge;
    for (int u = 0; u < n_; ++u)
      for (int v = u + 1; v < n_; ++v) {
        const Eigen::VectorXd diff = p(u) - p(v);
        const double h = s2 - diff.squaredNorm();
        if (h <= 0) continue;
        const int i = add_row();
        rows_[i] = h;
        jac_[i].segment(u * d_, d_) = -2 * diff;
        jac_[i].segment(v * d_, d_) = 2 * diff;
      }
    for (int w = 0; w < n_; ++w)
      for (auto [u, v] : edges_) {
        if (w == u || w == v) continue;
        const Eigen::VectorXd a = p(u), b = p(v), q = p(w);
        const ClosestPair cp = point_segment(q, a, b);
        if (cp.distance >= kEdgeHinge) continue;
        const Eigen::VectorXd foot = a + cp.t * (b - a);
        Eigen::VectorXd nrm = q - foot;
        if (nrm.norm() < 1e-12) nrm = random_unit(w * 131 + u * 17 + v);
        else nrm /= nrm.norm();
        const int i = add_row();
        rows_[i] = kEdgeHinge - cp.distance;
        jac_[i].segment(w * d_, d_) = -nrm;
        jac_[i].segment(u * d_, d_) = (1 - cp.t) * nrm;
        jac_[i].segment(v * d_, d_) = cp.t * nrm;
      }
    if (req_.forbid_crossings) add_crossing_rows(x, add_row);
    if (req_.on_sphere) {
      const double rho = free_radius_ ? x(vars_ - 1) : *req_.sphere_radius;
      for (int v = 0; v < n_; ++v) {
        const int i = add_row();
        rows_[i] = p(v).squaredNorm() - rho * rho;
        jac_[i].segment(v * d_, d_) = 2 * p(v);
        if (free_radius_) jac_[i](vars_ - 1) = -2 * rho;
      }
      if (free_radius_) {
        if (rho > req_.max_radius) {
          const int i = add_row();
          rows_[i] = rho - req_.max_radius;
          jac_[i](vars_ - 1) = 1.0;
        }
        if (rho < 0.05) {
          const int i = add_row();
          rows_[i] = 0.05 - rho;
          jac_[i](vars_ - 1) = -1.0;
        }
      }
    }
    const int m = static_cast<int>(rows_.size());
    r.resize(m);
    J.resize(m, vars_);
    for (int i = 0; i < m; ++i) {
      r(i) = rows_[i];
      J.row(i) = jac_[i].transpose();
    }
  }

  double edge_residual(const Eigen::VectorXd& x) const {
    double worst = 0;
    for (auto [u, v] : edges_)
      worst = std::max(worst, std::abs((x.segment(u * d_, d_) - x.segment(v * d_, d_)).norm() - 1));
    return worst;
  }

  Embedding to_embedding(const Eigen::VectorXd& x) const {
    Embedding e{req_.graph, d_, Eigen::MatrixXd(n_, d_)};
    for (int v = 0; v < n_; ++v) e.coords.row(v) = x.segment(v * d_, d_).transpose();
    return e;
  }

  bool free_radius() const { return free_radius_; }

 private:
  template <class AddRow>
  void add_crossing_rows(const Eigen::VectorXd& x, AddRow& add_row) const {
    auto p = [&](int v) { return Eigen::VectorXd(x.segment(v * d_, d_)); };
    for (std::size_t i = 0; i < edges_.size(); ++i)
      for (std::size_t j = i + 1; j < edges_.size(); ++j) {
        auto [a, b] = edges_[i];
        auto [c, d] = edges_[j];
        if (a == c || a == d || b == c || b == d) continue;
        const Eigen::VectorXd pa = p(a), pb = p(b), pc = p(c), pd = p(d);
        const ClosestPair cp = segment_segment(pa, pb, pc, pd);
        if (cp.distance >= kEdgeHinge) continue;
        if (cp.distance > 1e-12) {
          const Eigen::VectorXd diff = (pa + cp.s * (pb - pa)) - (pc + cp.t * (pd - pc));
          const Eigen::VectorXd nrm = diff / cp.distance;
          const int k = add_row();
          rows_[k] = kEdgeHinge - cp.distance;
          jac_[k].segment(a * d_, d_) = -(1 - cp.s) * nrm;
          jac_[k].segment(b * d_, d_) = -cp.s * nrm;
          jac_[k].segment(c * d_, d_) = (1 - cp.t) * nrm;
          jac_[k].segment(d * d_, d_) = cp.t * nrm;
          continue;
        }
        // Properly crossing: pull the shallowest endpoint back over the other segment.
        struct Cand { int w, u, v; double dist, t; };
        std::vector<Cand> cands;
        for (auto [w, u, v] : {std::tuple{a, c, d}, {b, c, d}, {c, a, b}, {d, a, b}}) {
          const ClosestPair q = point_segment(p(w), p(u), p(v));
          cands.push_back({w, u, v, q.distance, q.t});
        }
        const Cand best = *std::min_element(cands.begin(), cands.end(),
                                            [](auto& l, auto& r) { return l.dist < r.dist; });
        const Eigen::VectorXd foot = p(best.u) + best.t * (p(best.v) - p(best.u));
        Eigen::VectorXd nrm = p(best.w) - foot;
        if (nrm.norm() < 1e-12) continue;
        nrm /= nrm.norm();
        const int k = add_row();
        rows_[k] = kEdgeHinge + best.dist;
        jac_[k].segment(best.w * d_, d_) = nrm;
        jac_[k].segment(best.u * d_, d_) = -(1 - best.t) * nrm;
        jac_[k].segment(best.v * d_, d_) = -best.t * nrm;
      }
  }

  Eigen::VectorXd random_unit(int salt) const {
    Eigen::VectorXd v(d_);
    for (int k = 0; k < d_; ++k) v(k) = std::sin(1.7 * (salt + 1) * (k + 1)) + 0.1;
    return v / v.norm();
  }

  const EmbedRequest& req_;
  int n_, d_;
  std::vector<Edge> edges_;
  bool free_radius_ = false;
  int vars_ = 0;
  mutable std::vector<double> rows_;
  mutable std::vector<Eigen::VectorXd> jac_;
};

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

struct RestartOutcome {
  bool success = false;
  double cost = std::numeric_limits<double>::infinity();
  Eigen::VectorXd x;
};

// Alternative start: a hub at the origin, the rest walked around the unit
// circle in 60 degree steps along paths of G - hub. Non-neighbours of the hub
// start a little outside the circle, with shorter steps either side.
inline void hub_start(const EmbedRequest& req, std::mt19937_64& rng, Eigen::VectorXd& x) {
  const Graph& g = req.graph;
  const int n = g.vertex_count(), d = req.ambient_dim;
  if (n < 3) return;
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  int top = 0;
  for (int v = 0; v < n; ++v) top = std::max(top, g.degree(v));
  std::vector<int> hubs;
  for (int v = 0; v < n; ++v)
    if (g.degree(v) == top) hubs.push_back(v);
  const int hub = hubs[static_cast<std::size_t>(unit(rng) * hubs.size()) % hubs.size()];

  std::vector<int> order;
  std::vector<char> seen(n, 0);
  seen[hub] = 1;
  auto walk = [&](int start) {
    int cur = start;
    while (cur >= 0) {
      seen[cur] = 1;
      order.push_back(cur);
      int next = -1;
      for (std::uint64_t row = g.neighbors(cur); row; row &= row - 1) {
        const int w = std::countr_zero(row);
        if (!seen[w] && (next < 0 || g.degree(w) < g.degree(next))) next = w;
      }
      cur = next;
    }
  };
  for (int v = 0; v < n; ++v)
    if (!seen[v] && g.degree(v) - (g.adjacent(v, hub) ? 1 : 0) <= 1) walk(v);
  for (int v = 0; v < n; ++v)
    if (!seen[v]) walk(v);

  const double step = std::numbers::pi / 3.0;
  double angle = unit(rng) * 2 * std::numbers::pi;
  const double sign = unit(rng) < 0.5 ? -1.0 : 1.0;
  x.segment(hub * d, d).setZero();
  for (std::size_t i = 0; i < order.size(); ++i) {
    const int v = order[i];
    if (i > 0) {
      const int u = order[i - 1];
      double turn = step * (0.15 + 0.5 * unit(rng));  // gap between separate walks
      if (g.adjacent(u, v))
        turn = g.adjacent(u, hub) && g.adjacent(v, hub) ? step : step * (0.3 + 0.3 * unit(rng));
      angle += sign * turn;
    }
    const double rad = g.adjacent(v, hub) ? 1.0 : 1.3 + 0.5 * unit(rng);
    auto seg = x.segment(v * d, d);
    seg.setZero();
    seg(0) = rad * std::cos(angle);
    seg(1) = rad * std::sin(angle);
    for (int k = 2; k < d; ++k) seg(k) = 0.05 * (unit(rng) - 0.5);
  }
}

inline RestartOutcome run_restart(const EmbedRequest& req, int index) {
  RealizationProblem prob(req);
  const int nv = prob.variables();
  std::mt19937_64 rng(splitmix64(req.seed ^ splitmix64(static_cast<std::uint64_t>(index) + 1)));
  std::uniform_real_distribution<double> init(-1.5, 1.5);
  Eigen::VectorXd x(nv);
  for (int i = 0; i < nv; ++i) x(i) = init(rng);
  if (prob.free_radius()) x(nv - 1) = std::uniform_real_distribution<double>(0.3, 0.95)(rng);
  if (index % 2 == 1 && !req.on_sphere && req.ambient_dim >= 2) hub_start(req, rng, x);
  if (req.on_sphere) {
    // Start on the sphere so the sphere rows begin satisfied.
    const double rho = prob.free_radius() ? x(nv - 1) : *req.sphere_radius;
    const int n = req.graph.vertex_count(), d = req.ambient_dim;
    for (int v = 0; v < n; ++v) {
      auto seg = x.segment(v * d, d);
      const double len = seg.norm();
      if (len > 1e-9) seg *= rho / len;
    }
  }

  Eigen::VectorXd r;
  Eigen::MatrixXd J;
  prob.evaluate(x, r, J);
  double cost = r.squaredNorm();
  double lambda = 1e-3;
  int stall = 0;
  for (int it = 0; it < 400 && cost > 1e-26; ++it) {
    const Eigen::MatrixXd JtJ = J.transpose() * J;
    const Eigen::VectorXd g = J.transpose() * r;
    Eigen::MatrixXd H = JtJ;
    H.diagonal().array() += lambda * (1.0 + JtJ.diagonal().array());
    const Eigen::VectorXd step = H.ldlt().solve(-g);
    if (!step.allFinite()) break;
    Eigen::VectorXd xn = x + step;
    Eigen::VectorXd rn;
    Eigen::MatrixXd Jn;
    prob.evaluate(xn, rn, Jn);
    const double cn = rn.squaredNorm();
    if (cn < cost) {
      stall = (cost - cn < 1e-10 * cost) ? stall + 1 : 0;
      x = std::move(xn);
      r = std::move(rn);
      J = std::move(Jn);
      cost = cn;
      lambda = std::max(lambda / 3.0, 1e-12);
    } else {
      lambda *= 4.0;
      ++stall;
    }
    if (lambda > 1e10 || stall > 40) break;
  }
  RestartOutcome out;
  out.cost = cost;
  out.x = x;
  out.success = cost < 1e-14 && prob.edge_residual(x) < kFoundResidual;
  if (out.success) {
    const CertificateReport rep = validate(prob.to_embedding(x), req);
    out.success = rep.valid;
  }
  return out;
}

inline int worker_count(int requested) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("UNITDIM_THREADS")) {
    const int v = std::atoi(env);
    if (v > 0) return v;
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

}  // namespace detail

// Randomized restarts of damped least squares. Restart i is seeded from
// (seed, i) and the lowest successful index wins, so the result does not
// depend on the worker count. Failure is inconclusive, never a proof.
inline EmbedResult find_embedding(const EmbedRequest& req) {
  if (req.graph.vertex_count() < 1) throw ParameterError("find_embedding requires |G| >= 1");
  if (req.ambient_dim < 1) throw ParameterError("find_embedding requires ambient_dim >= 1");
  if (req.restarts < 1) throw ParameterError("restarts must be positive");
  if (req.sphere_radius && !(*req.sphere_radius > 0 && *req.sphere_radius < 1))
    throw ParameterError("fixed sphere radius must lie in (0,1)");
  if (!(req.tolerance > 0)) throw ParameterError("tolerance must be positive");

  EmbedResult res;
  const int workers = std::min(detail::worker_count(req.threads), req.restarts);
  detail::RealizationProblem prob(req);
  for (int base = 0; base < req.restarts; base += workers) {
    const int batch = std::min(workers, req.restarts - base);
    std::vector<detail::RestartOutcome> outs(batch);
    if (batch == 1) {
      outs[0] = detail::run_restart(req, base);
    } else {
      std::vector<std::thread> pool;
      for (int k = 0; k < batch; ++k)
        pool.emplace_back([&, k] { outs[k] = detail::run_restart(req, base + k); });
      for (auto& t : pool) t.join();
    }
    for (int k = 0; k < batch; ++k) {
      res.restarts_tried = base + k + 1;
      res.best_cost = std::min(res.best_cost, outs[k].cost);
      if (outs[k].success) {
        res.found = true;
        res.restart_index = base + k;
        res.embedding = prob.to_embedding(outs[k].x);
        res.report = validate(*res.embedding, req);
        return res;
      }
    }
  }
  return res;
}

// ---------------------------------------------------------------------------
// Exact constructions

// Vertices of the regular {n/m} polygon with unit sides, centered at the origin.
inline Embedding star_polygon_embedding(int n, int m) {
  const auto r = star_polygon_radius(n, m);
  if (!r) throw DomainError("degenerate star polygon");
  Embedding e{cycle_graph(n), 2, Eigen::MatrixXd(n, 2)};
  for (int i = 0; i < n; ++i) {
    const double a = 2.0 * std::numbers::pi * m * i / n;
    e.coords(i, 0) = *r * std::cos(a);
    e.coords(i, 1) = *r * std::sin(a);
  }
  return e;
}

// Unit simplex K_n in R^{n-1}, centered at the origin.
inline Embedding simplex_embedding(int n) {
  if (n < 1) throw ParameterError("simplex_embedding requires n >= 1");
  const int d = std::max(1, n - 1);
  Embedding e{complete_graph(n), d, Eigen::MatrixXd::Zero(n, d)};
  if (n == 1) return e;
  // Scaled standard basis vectors in R^n, projected onto the sum-zero plane.
  Eigen::MatrixXd pts = Eigen::MatrixXd::Identity(n, n) / std::sqrt(2.0);
  pts = pts.rowwise() - pts.colwise().mean();
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(pts, Eigen::ComputeThinV);
  e.coords = pts * svd.matrixV().leftCols(d);
  return e;
}

// Embedding of G+H from sphere embeddings whose radii satisfy r1^2 + r2^2 = 1:
// G in the first coordinate block, H in the orthogonal block, both centered.
inline Embedding orthogonal_join_embedding(const Embedding& eg, const Embedding& eh,
                                           double tol = kCertificateTol) {
  const auto sg = fitted_sphere(eg, tol);
  const auto sh = fitted_sphere(eh, tol);
  if (!sg || !sh) throw PreconditionError("both factors must lie on a sphere");
  if (std::abs(sg->radius * sg->radius + sh->radius * sh->radius - 1.0) >= tol)
    throw PreconditionError("factor radii must satisfy r1^2 + r2^2 = 1");
  const int k1 = sg->sphere_dim, k2 = sh->sphere_dim;
  const int n1 = eg.graph.vertex_count(), n2 = eh.graph.vertex_count();
  Embedding out{join(eg.graph, eh.graph), k1 + k2, Eigen::MatrixXd::Zero(n1 + n2, k1 + k2)};
  for (int v = 0; v < n1; ++v)
    out.coords.row(v).head(k1) = ((eg.point(v) - sg->center).transpose() * sg->carrier);
  for (int v = 0; v < n2; ++v)
    out.coords.row(n1 + v).tail(k2) = ((eh.point(v) - sh->center).transpose() * sh->carrier);
  return out;
}

// Points spread on a circle of the given radius, with the graph supplied.
inline Embedding circle_embedding(const Graph& g, const std::vector<double>& angles, double radius) {
  Embedding e{g, 2, Eigen::MatrixXd(g.vertex_count(), 2)};
  for (int i = 0; i < g.vertex_count(); ++i) {
    e.coords(i, 0) = radius * std::cos(angles.at(i));
    e.coords(i, 1) = radius * std::sin(angles.at(i));
  }
  return e;
}

}  // namespace unitdim
