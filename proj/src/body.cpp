#include "dcone/body.hpp"

#include "dcone/error.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/QR>

#include <cmath>
#include <string>

namespace dcone {

namespace {

void require_nonzero(const Vec& u, int dim)
{
  if (u.size() != dim) {
    throw GeometryError(ErrorCode::InvalidInput, "direction has dimension " +
                                                     std::to_string(u.size()) + ", expected " +
                                                     std::to_string(dim));
  }
  const double n2 = u.squaredNorm();
  if (!(n2 > 0.0) || !std::isfinite(n2)) {
    throw GeometryError(ErrorCode::InvalidInput, "support query with zero or non-finite direction");
  }
}

void require_dim(int dim)
{
  if (dim < 2 || dim > kMaxDim) {
    throw GeometryError(ErrorCode::InvalidInput, "body dimension out of range");
  }
}

}  // namespace

ConvexBody::ConvexBody(int dim, std::variant<EllipsoidData, LpBallData, SumData> data)
  : dim_(dim), data_(std::move(data))
{
}

ConvexBody ConvexBody::ellipsoid(const Mat& shape, const Vec& center)
{
  const int dim = static_cast<int>(center.size());
  require_dim(dim);
  if (shape.rows() != dim || shape.cols() != dim) {
    throw GeometryError(ErrorCode::InvalidInput, "ellipsoid matrix does not match center dimension");
  }
  if (!shape.allFinite() || !center.allFinite()) {
    throw GeometryError(ErrorCode::InvalidInput, "ellipsoid parameters must be finite");
  }
  const double scale = shape.cwiseAbs().maxCoeff();
  if ((shape - shape.transpose()).cwiseAbs().maxCoeff() > 1e-12 * scale) {
    throw GeometryError(ErrorCode::InvalidInput, "ellipsoid matrix is not symmetric");
  }
  const Mat sym = 0.5 * (shape + shape.transpose());
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(Eigen::MatrixXd(sym), Eigen::EigenvaluesOnly);
  if (!(eig.eigenvalues().minCoeff() > 0.0)) {
    throw GeometryError(ErrorCode::InvalidInput, "ellipsoid matrix is not positive definite");
  }
  return ConvexBody(dim, EllipsoidData{sym, center});
}

ConvexBody ConvexBody::lp_ball(double p, double radius, const Vec& center)
{
  const int dim = static_cast<int>(center.size());
  require_dim(dim);
  if (!(p > 1.0) || !std::isfinite(p)) {
    throw GeometryError(ErrorCode::InvalidInput, "lp_ball exponent must satisfy 1 < p < inf");
  }
  if (!(radius > 0.0) || !std::isfinite(radius)) {
    throw GeometryError(ErrorCode::InvalidInput, "lp_ball radius must be positive");
  }
  if (!center.allFinite()) {
    throw GeometryError(ErrorCode::InvalidInput, "lp_ball center must be finite");
  }
  return ConvexBody(dim, LpBallData{p, p / (p - 1.0), radius, center});
}

ConvexBody ConvexBody::minkowski_sum(std::vector<ConvexBody> summands, const Vec& offset)
{
  if (summands.empty()) {
    throw GeometryError(ErrorCode::InvalidInput, "minkowski_sum needs at least one summand");
  }
  const int dim = summands.front().dim();
  for (const auto& s : summands) {
    if (s.dim() != dim) {
      throw GeometryError(ErrorCode::InvalidInput, "minkowski_sum summands differ in dimension");
    }
  }
  if (offset.size() != dim || !offset.allFinite()) {
    throw GeometryError(ErrorCode::InvalidInput, "minkowski_sum offset does not match dimension");
  }
  return ConvexBody(dim, SumData{std::move(summands), offset});
}

ConvexBody ConvexBody::minkowski_sum(std::vector<ConvexBody> summands)
{
  if (summands.empty()) {
    throw GeometryError(ErrorCode::InvalidInput, "minkowski_sum needs at least one summand");
  }
  const Vec zero = Vec::Zero(summands.front().dim());
  return minkowski_sum(std::move(summands), zero);
}

ConvexBody ConvexBody::unit_ball(int dim)
{
  return lp_ball(2.0, 1.0, Vec::Zero(dim));
}

BodyKind ConvexBody::kind() const noexcept
{
  switch (data_.index()) {
    case 0: return BodyKind::Ellipsoid;
    case 1: return BodyKind::LpBall;
    default: return BodyKind::MinkowskiSum;
  }
}

double ConvexBody::evaluate(const Vec& u, Vec* gradient) const
{
  if (const auto* e = std::get_if<EllipsoidData>(&data_)) {
    Vec au(dim_);
    au.noalias() = e->shape * u;
    const double s = std::sqrt(u.dot(au));
    if (gradient != nullptr) {
      *gradient = au / s + e->center;
    }
    return s + e->center.dot(u);
  }

  if (const auto* b = std::get_if<LpBallData>(&data_)) {
    // Scale by the largest component so the q-th powers cannot under/overflow.
    const double m = u.cwiseAbs().maxCoeff();
    double sum = 0.0;
    for (int i = 0; i < dim_; ++i) {
      sum += std::pow(std::abs(u[i]) / m, b->q);
    }
    const double scaled_norm = std::pow(sum, 1.0 / b->q);
    if (gradient != nullptr) {
      Vec& g = *gradient;
      g.resize(dim_);
      const double denom = std::pow(scaled_norm, b->q - 1.0);
      for (int i = 0; i < dim_; ++i) {
        const double a = std::abs(u[i]) / m;
        g[i] = b->radius * std::copysign(std::pow(a, b->q - 1.0), u[i]) / denom + b->center[i];
      }
    }
    return b->radius * m * scaled_norm + b->center.dot(u);
  }

  const auto& sum = std::get<SumData>(data_);
  double h = sum.offset.dot(u);
  if (gradient != nullptr) {
    *gradient = sum.offset;
    Vec part(dim_);
    for (const auto& s : sum.summands) {
      h += s.evaluate(u, &part);
      *gradient += part;
    }
  } else {
    for (const auto& s : sum.summands) {
      h += s.evaluate(u, nullptr);
    }
  }
  return h;
}

double ConvexBody::support(const Vec& u) const
{
  require_nonzero(u, dim_);
  return evaluate(u, nullptr);
}

Vec ConvexBody::support_gradient(const Vec& u) const
{
  require_nonzero(u, dim_);
  Vec g(dim_);
  evaluate(u, &g);
  return g;
}

double ConvexBody::support_and_gradient(const Vec& u, Vec& gradient) const
{
  require_nonzero(u, dim_);
  return evaluate(u, &gradient);
}

Vec ConvexBody::reference_point() const
{
  if (const auto* e = std::get_if<EllipsoidData>(&data_)) {
    return e->center;
  }
  if (const auto* b = std::get_if<LpBallData>(&data_)) {
    return b->center;
  }
  const auto& sum = std::get<SumData>(data_);
  Vec c = sum.offset;
  for (const auto& s : sum.summands) {
    c += s.reference_point();
  }
  return c;
}

const Mat& ConvexBody::shape() const
{
  return std::get<EllipsoidData>(data_).shape;
}

double ConvexBody::exponent() const
{
  return std::get<LpBallData>(data_).p;
}

double ConvexBody::radius() const
{
  return std::get<LpBallData>(data_).radius;
}

const Vec& ConvexBody::center() const
{
  if (const auto* e = std::get_if<EllipsoidData>(&data_)) {
    return e->center;
  }
  if (const auto* b = std::get_if<LpBallData>(&data_)) {
    return b->center;
  }
  return std::get<SumData>(data_).offset;
}

const std::vector<ConvexBody>& ConvexBody::summands() const
{
  return std::get<SumData>(data_).summands;
}

Hyperplane supporting_hyperplane(const ConvexBody& body, const Vec& u)
{
  require_nonzero(u, body.dim());
  const Vec n = u.normalized();
  return Hyperplane{n, body.support(n)};
}

double central_asymmetry(const ConvexBody& body, const Vec& c, std::span<const Vec> samples)
{
  if (samples.empty()) {
    throw GeometryError(ErrorCode::InvalidInput, "asymmetry needs a nonempty sample");
  }
  if (c.size() != body.dim()) {
    throw GeometryError(ErrorCode::InvalidInput, "center dimension mismatch");
  }
  double worst = 0.0;
  for (const Vec& u : samples) {
    const double defect = body.support(u) - body.support(-u) - 2.0 * c.dot(u);
    worst = std::max(worst, std::abs(defect));
  }
  return worst;
}

Vec estimate_center(const ConvexBody& body, std::span<const Vec> samples)
{
  const int n = body.dim();
  const auto m = static_cast<Eigen::Index>(samples.size());
  Eigen::MatrixXd design(m, n);
  Eigen::VectorXd rhs(m);
  for (Eigen::Index i = 0; i < m; ++i) {
    const Vec& u = samples[static_cast<std::size_t>(i)];
    design.row(i) = 2.0 * Eigen::VectorXd(u).transpose();
    rhs[i] = body.support(u) - body.support(-u);
  }
  Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(design);
  if (m < n || qr.rank() < n) {
    throw GeometryError(ErrorCode::DegenerateSamples,
                        "direction sample does not span R^" + std::to_string(n));
  }
  return Vec(qr.solve(rhs));
}

}  // namespace dcone
