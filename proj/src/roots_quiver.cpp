#include "srt/roots_quiver.hpp"

#include "srt/error.hpp"
#include "srt/linalg.hpp"
#include "srt/parabolics.hpp"

namespace srt {

CMQuiver::CMQuiver(StarType type)
    : star_(type), toward_node_(star_.edges().size(), true) {}

CMQuiver::CMQuiver(StarType type, std::vector<bool> toward_node)
    : star_(type), toward_node_(std::move(toward_node)) {
  if (toward_node_.size() != star_.edges().size()) {
    throw InputError("orientation needs one entry per edge (" + std::to_string(star_.edges().size()) + ")");
  }
}

std::string CMQuiver::label(int v) const { return v == s_vertex() ? "s" : star_.label(v); }

std::vector<std::pair<int, int>> CMQuiver::star_arrows() const {
  std::vector<std::pair<int, int>> out;
  const auto& edges = star_.edges();
  for (std::size_t e = 0; e < edges.size(); ++e) {
    const auto [outer, inner] = edges[e];
    out.emplace_back(toward_node_[e] ? outer : inner, toward_node_[e] ? inner : outer);
  }
  return out;
}

std::vector<std::pair<int, int>> CMQuiver::arrows() const {
  auto out = star_arrows();
  out.emplace_back(s_vertex(), star_.affinizing());
  return out;
}

std::vector<int> delta(StarType type) {
  const McKayData& data = mckay_data(type);
  const int v = data.star.num_vertices();
  const auto uv = static_cast<std::size_t>(v);
  linalg::Matrix<Rational> cartan(uv, std::vector<Rational>(uv, 0));
  for (int a = 0; a < v; ++a) {
    for (int b = 0; b < v; ++b) {
      const int ia = data.vertex_irrep[static_cast<std::size_t>(a)];
      const int ib = data.vertex_irrep[static_cast<std::size_t>(b)];
      cartan[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] =
          (a == b ? 2 : 0) - data.graph[static_cast<std::size_t>(ia)][static_cast<std::size_t>(ib)];
    }
  }
  auto kernel = linalg::nullspace(cartan, uv);
  if (kernel.size() != 1) throw MathError("affine Cartan matrix does not have a one-dimensional kernel");
  const Rational scale = kernel[0][static_cast<std::size_t>(data.star.affinizing())];
  std::vector<int> out;
  for (const auto& x : kernel[0]) {
    const Rational y = x / scale;
    if (y.get_den() != 1 || y <= 0) throw MathError("kernel of the affine Cartan matrix is not a positive integer vector");
    out.push_back(static_cast<int>(y.get_num().get_si()));
  }
  return out;
}

std::vector<Rational> partial_vector(const CMQuiver& q, int n) {
  const std::vector<int> d = delta(q.star().type());
  std::vector<Rational> out(d.size());
  for (std::size_t i = 0; i < d.size(); ++i) out[i] = -d[i];
  for (const auto& [t, h] : q.star_arrows()) {
    out[static_cast<std::size_t>(t)] += d[static_cast<std::size_t>(h)];
  }
  for (auto& x : out) x *= n;
  return out;
}

std::vector<int> alpha_cm(StarType type, int n) {
  std::vector<int> out = delta(type);
  for (auto& x : out) x *= n;
  out.push_back(1);
  return out;
}

std::vector<Rational> chi_cm(const CMQuiver& q, int n, const Rational& k, const ClassFunction& c) {
  const McKayData& data = mckay_data(q.star().type());
  const RootWeight lambda = lambda_of_c(data, c);
  const std::vector<Rational> part = partial_vector(q, n);
  std::vector<Rational> out;
  for (std::size_t i = 0; i < part.size(); ++i) out.push_back(lambda.coords[i] - part[i]);
  out[static_cast<std::size_t>(q.star().affinizing())] -= k / 2;
  out.push_back(n * (k / 2 - 1));
  return out;
}

long tits_form(const CMQuiver& q, std::vector<long> beta) {
  if (beta.size() == static_cast<std::size_t>(q.star().num_vertices())) beta.push_back(0);
  if (beta.size() != static_cast<std::size_t>(q.num_vertices())) {
    throw InputError("dimension vector has " + std::to_string(beta.size()) + " entries, expected " +
                     std::to_string(q.num_vertices()));
  }
  long value = 0;
  for (long b : beta) value += b * b;
  for (const auto& [t, h] : q.arrows()) value -= beta[static_cast<std::size_t>(t)] * beta[static_cast<std::size_t>(h)];
  return value;
}

OpenOrbitAudit open_orbit_audit(StarType type, int n) {
  if (n < 1) throw InputError("n must be positive");
  const DynkinStar star(type);
  const int l = star.ell(), r = n * l;
  OpenOrbitAudit audit;
  audit.dim_group = r * r - 1;
  for (int j = 1; j < star.num_legs(); ++j) {
    audit.terms.push_back(blocks(ParabolicKind::P, star.leg_length(j), r).flag_dimension());
  }
  audit.terms.push_back(blocks(ParabolicKind::PTildeDoublePrime, l, r).flag_dimension());
  for (int t : audit.terms) audit.dim_space += t;
  return audit;
}

}  // namespace srt
