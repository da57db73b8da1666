#include "kronecker/quiver.hpp"

#include <random>
#include <sstream>
#include <stdexcept>

#include "kronecker/cluster.hpp"

namespace kronecker {

namespace {

// phi1(u_k) = v_k and phi2(u_k) = v_{k+1} for k in [1, n]; M2 has dimension
// d2 (n + 1 for the preprojective form, n for the regular one).
std::vector<RationalMatrix> shift_maps(int n, std::int64_t d2) {
  RationalMatrix phi1(d2, n);
  RationalMatrix phi2(d2, n);
  for (std::int64_t k = 0; k < n; ++k) {
    phi1(k, k) = 1;
    if (k + 1 < d2) phi2(k + 1, k) = 1;
  }
  return {phi1, phi2};
}

std::vector<RationalMatrix> transposed(const std::vector<RationalMatrix>& maps) {
  std::vector<RationalMatrix> out;
  out.reserve(maps.size());
  for (const auto& m : maps) out.push_back(m.transpose());
  return out;
}

void check_tag(int b, std::int64_t d1, std::int64_t d2, const std::vector<RationalMatrix>& maps,
               const BasisTag& tag) {
  if (tag.kind == BasisTag::Kind::none) return;
  if (b != 2) throw std::invalid_argument("basis tags are defined for b = 2 only");
  if (tag.n < 0) throw std::invalid_argument("basis tag index must be nonnegative");
  std::vector<RationalMatrix> expected;
  DimVector expected_dim;
  switch (tag.kind) {
    case BasisTag::Kind::preprojective:
      expected = shift_maps(tag.n, tag.n + 1);
      expected_dim = {tag.n, tag.n + 1};
      break;
    case BasisTag::Kind::preinjective:
      expected = transposed(shift_maps(tag.n, tag.n + 1));
      expected_dim = {tag.n + 1, tag.n};
      break;
    case BasisTag::Kind::regular:
      expected = shift_maps(tag.n, tag.n);
      expected_dim = {tag.n, tag.n};
      break;
    case BasisTag::Kind::none:
      return;
  }
  if (expected_dim != DimVector{d1, d2} || expected != maps) {
    throw std::invalid_argument("maps do not match basis tag " + tag.to_string());
  }
}

void check_build_dim(std::int64_t d) {
  if (d > kMaxBuildDim) {
    throw SizeLimit("build_M: dimension " + std::to_string(d) + " exceeds " +
                    std::to_string(kMaxBuildDim));
  }
}

}  // namespace

std::string BasisTag::to_string() const {
  switch (kind) {
    case Kind::none:
      return "none";
    case Kind::preprojective:
      return "preprojective(" + std::to_string(n) + ")";
    case Kind::preinjective:
      return "preinjective(" + std::to_string(n) + ")";
    case Kind::regular:
      return "regular(" + std::to_string(n) + ")";
  }
  return "none";
}

QuiverRep::QuiverRep(int b, std::int64_t d1, std::int64_t d2, std::vector<RationalMatrix> maps,
                     BasisTag tag)
    : b_(b), d1_(d1), d2_(d2), maps_(std::move(maps)), tag_(tag) {
  if (b < 2) throw std::invalid_argument("QuiverRep: b must be at least 2");
  if (d1 < 0 || d2 < 0) throw std::invalid_argument("QuiverRep: negative dimension");
  if (maps_.size() != static_cast<std::size_t>(b)) {
    throw std::invalid_argument("QuiverRep: expected exactly b maps");
  }
  for (const auto& m : maps_) {
    if (m.rows() != d2 || m.cols() != d1) {
      throw std::invalid_argument("QuiverRep: every map must be d2 x d1");
    }
  }
  check_tag(b, d1, d2, maps_, tag_);
}

QuiverRep QuiverRep::zero(int b) {
  return QuiverRep(b, 0, 0, std::vector<RationalMatrix>(static_cast<std::size_t>(b)));
}

RationalMatrix QuiverRep::phi_column() const { return stack_vertical(maps_, d1_); }

RationalMatrix QuiverRep::phi_row() const { return stack_horizontal(maps_, d2_); }

QuiverRep QuiverRep::without_tag() const { return QuiverRep(b_, d1_, d2_, maps_); }

std::string QuiverRep::to_string() const {
  std::ostringstream os;
  os << "b = " << b_ << ", dim = (" << d1_ << ", " << d2_ << ")";
  if (tag_.kind != BasisTag::Kind::none) os << ", basis " << tag_.to_string();
  for (std::size_t k = 0; k < maps_.size(); ++k) {
    os << "\nphi" << (k + 1) << " = " << maps_[k].to_string();
  }
  return os.str();
}

QuiverRep simple(int b, int vertex) {
  if (vertex != 1 && vertex != 2) throw std::invalid_argument("simple: vertex must be 1 or 2");
  const std::int64_t d1 = vertex == 1 ? 1 : 0;
  const std::int64_t d2 = vertex == 2 ? 1 : 0;
  std::vector<RationalMatrix> maps(static_cast<std::size_t>(b < 0 ? 0 : b), RationalMatrix(d2, d1));
  return QuiverRep(b, d1, d2, std::move(maps));
}

QuiverRep dual(const QuiverRep& m) {
  BasisTag tag;
  switch (m.basis_tag().kind) {
    case BasisTag::Kind::preprojective:
      tag = BasisTag::preinjective(m.basis_tag().n);
      break;
    case BasisTag::Kind::preinjective:
      tag = BasisTag::preprojective(m.basis_tag().n);
      break;
    default:
      break;
  }
  return QuiverRep(m.b(), m.d2(), m.d1(), transposed(m.maps()), tag);
}

QuiverRep t_plus(const QuiverRep& m) {
  const RationalMatrix projection = cokernel_projection(m.phi_column());
  const std::int64_t new_d1 = m.d2();
  const std::int64_t new_d2 = projection.rows();
  std::vector<RationalMatrix> maps;
  maps.reserve(static_cast<std::size_t>(m.b()));
  for (int k = 0; k < m.b(); ++k) {
    maps.push_back(projection.block(0, k * new_d1, new_d2, new_d1));
  }
  return QuiverRep(m.b(), new_d1, new_d2, std::move(maps));
}

QuiverRep t_minus(const QuiverRep& m) {
  const RationalMatrix embedding = kernel_basis(m.phi_row());
  const std::int64_t new_d2 = m.d1();
  const std::int64_t new_d1 = embedding.cols();
  std::vector<RationalMatrix> maps;
  maps.reserve(static_cast<std::size_t>(m.b()));
  for (int k = 0; k < m.b(); ++k) {
    maps.push_back(embedding.block(k * new_d2, 0, new_d2, new_d1));
  }
  return QuiverRep(m.b(), new_d1, new_d2, std::move(maps));
}

bool phi_c_injective(const QuiverRep& m) { return rank(m.phi_column()) == m.d1(); }

QuiverRep build_M(int b, std::int64_t m) {
  if (b < 2) throw std::invalid_argument("build_M: b must be at least 2");
  if (m == 1 || m == 2) {
    throw InitialClusterIndex("build_M: x_" + std::to_string(m) + " is an initial cluster variable");
  }
  if (m <= 0) {
    QuiverRep rep = simple(b, 2);
    for (std::int64_t step = 0; step < -m; ++step) {
      // T+ sends dimension d to (d2, b d2 - d1) on its image.
      check_build_dim(static_cast<std::int64_t>(b) * rep.d2());
      rep = t_plus(rep);
    }
    return rep;
  }
  QuiverRep rep = simple(b, 1);
  for (std::int64_t step = 0; step < m - 3; ++step) {
    check_build_dim(static_cast<std::int64_t>(b) * rep.d1());
    rep = t_minus(rep);
  }
  return rep;
}

bool build_M_within_limit(int b, std::int64_t m) {
  if (b < 2 || m == 1 || m == 2) return false;
  try {
    if (m <= 0) {
      for (std::int64_t step = 0; step < -m; ++step) {
        if (static_cast<std::int64_t>(b) * alpha(b, -step).d2 > kMaxBuildDim) return false;
      }
      return true;
    }
    for (std::int64_t step = 0; step < m - 3; ++step) {
      if (static_cast<std::int64_t>(b) * alpha(b, step + 3).d1 > kMaxBuildDim) return false;
    }
    return true;
  } catch (const std::overflow_error&) {
    return false;
  }
}

QuiverRep build_preprojective_explicit(int n) {
  if (n < 0) throw std::invalid_argument("build_preprojective_explicit: n must be >= 0");
  return QuiverRep(2, n, n + 1, shift_maps(n, n + 1), BasisTag::preprojective(n));
}

QuiverRep build_preinjective_explicit(int n) { return dual(build_preprojective_explicit(n)); }

QuiverRep build_regular_explicit(int n) {
  if (n < 0) throw std::invalid_argument("build_regular_explicit: n must be >= 0");
  return QuiverRep(2, n, n, shift_maps(n, n), BasisTag::regular(n));
}

QuiverRep direct_sum(const QuiverRep& a, const QuiverRep& b) {
  if (a.b() != b.b()) throw std::invalid_argument("direct_sum: quivers differ");
  std::vector<RationalMatrix> maps;
  maps.reserve(static_cast<std::size_t>(a.b()));
  for (int k = 0; k < a.b(); ++k) {
    maps.push_back(block_diagonal(a.maps()[static_cast<std::size_t>(k)], b.maps()[static_cast<std::size_t>(k)]));
  }
  return QuiverRep(a.b(), a.d1() + b.d1(), a.d2() + b.d2(), std::move(maps));
}

bool EquivConditionsReport::consistent() const {
  const bool all = phi_c_injective && dim_tplus_is_reflection && tminus_tplus_keeps_dim;
  const bool none = !phi_c_injective && !dim_tplus_is_reflection && !tminus_tplus_keeps_dim;
  return (all || none) && (s1_summand_witness == none);
}

EquivConditionsReport check_equiv_conditions(const QuiverRep& m) {
  EquivConditionsReport report;
  const RationalMatrix column = m.phi_column();
  report.kernel_dim = kernel_basis(column).cols();
  report.phi_c_injective = report.kernel_dim == 0;
  const QuiverRep plus = t_plus(m);
  const DimVector reflected = reflect(reflect(m.dim(), Reflection::s1, m.b()), Reflection::sigma, m.b());
  report.dim_tplus_is_reflection = plus.dim() == reflected;
  report.tminus_tplus_keeps_dim = t_minus(plus).dim() == m.dim();
  report.s1_summand_witness = report.kernel_dim > 0;
  return report;
}

bool is_isomorphism(const QuiverRep& m, const QuiverRep& n, const Isomorphism& iso) {
  if (m.b() != n.b() || m.dim() != n.dim()) return false;
  if (iso.on_first.rows() != m.d1() || iso.on_first.cols() != m.d1()) return false;
  if (iso.on_second.rows() != m.d2() || iso.on_second.cols() != m.d2()) return false;
  for (int k = 0; k < m.b(); ++k) {
    const auto& phi = m.maps()[static_cast<std::size_t>(k)];
    const auto& psi = n.maps()[static_cast<std::size_t>(k)];
    if (iso.on_second * phi != psi * iso.on_first) return false;
  }
  return sgn(determinant(iso.on_first)) != 0 && sgn(determinant(iso.on_second)) != 0;
}

std::optional<Isomorphism> find_isomorphism(const QuiverRep& m, const QuiverRep& n) {
  if (m.b() != n.b() || m.dim() != n.dim()) return std::nullopt;
  const std::int64_t d1 = m.d1();
  const std::int64_t d2 = m.d2();
  const std::int64_t unknowns = d1 * d1 + d2 * d2;
  auto a_index = [&](std::int64_t i, std::int64_t j) { return i * d1 + j; };
  auto b_index = [&](std::int64_t i, std::int64_t j) { return d1 * d1 + i * d2 + j; };

  // One equation per entry of B phi_k - psi_k A.
  RationalMatrix system(static_cast<std::int64_t>(m.b()) * d2 * d1, unknowns);
  std::int64_t row = 0;
  for (int k = 0; k < m.b(); ++k) {
    const auto& phi = m.maps()[static_cast<std::size_t>(k)];
    const auto& psi = n.maps()[static_cast<std::size_t>(k)];
    for (std::int64_t i = 0; i < d2; ++i) {
      for (std::int64_t j = 0; j < d1; ++j, ++row) {
        for (std::int64_t l = 0; l < d2; ++l) system(row, b_index(i, l)) += phi(l, j);
        for (std::int64_t l = 0; l < d1; ++l) system(row, a_index(l, j)) -= psi(i, l);
      }
    }
  }
  const RationalMatrix solutions = kernel_basis(system);
  if (solutions.cols() == 0) {
    if (unknowns == 0) return Isomorphism{RationalMatrix(0, 0), RationalMatrix(0, 0)};
    return std::nullopt;
  }

  auto candidate = [&](const std::vector<Rational>& weights) {
    Isomorphism iso{RationalMatrix(d1, d1), RationalMatrix(d2, d2)};
    for (std::int64_t c = 0; c < solutions.cols(); ++c) {
      const Rational& w = weights[static_cast<std::size_t>(c)];
      if (sgn(w) == 0) continue;
      for (std::int64_t i = 0; i < d1; ++i) {
        for (std::int64_t j = 0; j < d1; ++j) iso.on_first(i, j) += w * solutions(a_index(i, j), c);
      }
      for (std::int64_t i = 0; i < d2; ++i) {
        for (std::int64_t j = 0; j < d2; ++j) iso.on_second(i, j) += w * solutions(b_index(i, j), c);
      }
    }
    return iso;
  };

  const auto dimension = static_cast<std::size_t>(solutions.cols());
  // Basis vectors first (Hom is often one-dimensional), then random
  // combinations; a generic element of the space is invertible if any is.
  for (std::size_t c = 0; c < dimension; ++c) {
    std::vector<Rational> weights(dimension);
    weights[c] = 1;
    Isomorphism iso = candidate(weights);
    if (is_isomorphism(m, n, iso)) return iso;
  }
  std::mt19937_64 rng(0x5eed);
  std::uniform_int_distribution<long> coeff(-64, 64);
  for (int attempt = 0; attempt < 16; ++attempt) {
    std::vector<Rational> weights(dimension);
    for (auto& w : weights) w = coeff(rng);
    Isomorphism iso = candidate(weights);
    if (is_isomorphism(m, n, iso)) return iso;
  }
  return std::nullopt;
}

}  // namespace kronecker
