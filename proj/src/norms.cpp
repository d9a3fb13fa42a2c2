#include "projconst/norms.hpp"

#include <array>
#include <cmath>

#include "projconst/eigen.hpp"
#include "projconst/errors.hpp"

namespace projconst {

void NormedSpaceSpec::validate() const {
  if (n == 0 || functionals.rows() == 0) throw ShapeError("NormedSpaceSpec: empty spec");
  if (functionals.cols() != n) throw ShapeError("NormedSpaceSpec: functional length differs from n");
  // rank(F) == n  <=>  F*F positive definite
  Matrix m = functionals.adjoint() * functionals;
  auto eig = hermitian_eigendecomposition(m);
  double top = eig.eigenvalues.back();
  if (top <= 0.0 || eig.eigenvalues.front() < 1e-10 * top)
    throw ShapeError("NormedSpaceSpec: functionals do not span the space (seminorm only)");
}

double norm_from_system(const NormedSpaceSpec& spec, const std::vector<cx>& x) {
  if (x.size() != spec.n) throw ShapeError("norm_from_system: dimension mismatch");
  double best = 0.0;
  for (std::size_t s = 0; s < spec.functionals.rows(); ++s)
    best = std::max(best, std::abs(dot(x, spec.functionals.row(s))));
  return best;
}

NormedSpaceSpec spec_from_system(const LineSystem& s, std::string label) {
  NormedSpaceSpec spec;
  spec.field = s.field;
  spec.n = s.n;
  spec.functionals = s.vectors;
  spec.label = std::move(label);
  spec.validate();
  return spec;
}

TableSpace parse_space_id(const std::string& id) {
  if (id == "R2-hexagon") return TableSpace::R2Hexagon;
  if (id == "R3-dodecahedron") return TableSpace::R3Dodecahedron;
  if (id == "R7") return TableSpace::R7;
  if (id == "R23") return TableSpace::R23;
  if (id == "C2") return TableSpace::C2;
  if (id == "C3") return TableSpace::C3;
  throw UnsupportedError("unknown space id: \"" + id + "\"");
}

std::string space_id_name(TableSpace sp) {
  switch (sp) {
    case TableSpace::R2Hexagon: return "R2-hexagon";
    case TableSpace::R3Dodecahedron: return "R3-dodecahedron";
    case TableSpace::R7: return "R7";
    case TableSpace::R23: return "R23";
    case TableSpace::C2: return "C2";
    case TableSpace::C3: return "C3";
  }
  return {};
}

Field space_field(TableSpace sp) {
  return (sp == TableSpace::C2 || sp == TableSpace::C3) ? Field::Complex : Field::Real;
}

std::size_t space_dim(TableSpace sp) {
  switch (sp) {
    case TableSpace::R2Hexagon: return 2;
    case TableSpace::R3Dodecahedron: return 3;
    case TableSpace::R7: return 7;
    case TableSpace::R23: return 23;
    case TableSpace::C2: return 2;
    case TableSpace::C3: return 3;
  }
  return 0;
}

double space_lambda_expected(TableSpace sp) {
  switch (sp) {
    case TableSpace::R2Hexagon: return 4.0 / 3.0;
    case TableSpace::R3Dodecahedron: return (1.0 + std::sqrt(5.0)) / 2.0;
    case TableSpace::R7: return 2.5;
    case TableSpace::R23: return 14.0 / 3.0;
    case TableSpace::C2: return (1.0 + std::sqrt(3.0)) / 2.0;
    case TableSpace::C3: return 5.0 / 3.0;
  }
  return 0.0;
}

NormedSpaceSpec table_functionals(TableSpace sp) {
  NormedSpaceSpec spec;
  spec.field = space_field(sp);
  spec.n = space_dim(sp);
  spec.label = space_id_name(sp);
  switch (sp) {
    case TableSpace::R2Hexagon: {
      const double s3 = std::sqrt(3.0);
      spec.functionals = Matrix{{2.0, 0.0}, {1.0, -s3}, {1.0, s3}};
      break;
    }
    case TableSpace::R3Dodecahedron: {
      const double tau = std::sqrt((std::sqrt(5.0) + 1.0) / 2.0);
      const double sig = std::sqrt((std::sqrt(5.0) - 1.0) / 2.0);
      spec.functionals = Matrix{{tau, sig, 0.0},  {tau, -sig, 0.0}, {0.0, tau, sig},
                                {0.0, tau, -sig}, {sig, 0.0, tau},  {-sig, 0.0, tau}};
      break;
    }
    case TableSpace::R7: {
      spec.functionals = Matrix(28, 7);
      std::size_t row = 0;
      for (int i = 0; i < 7; ++i)
        for (int j = i + 1; j < 7; ++j, ++row) {
          spec.functionals(row, std::size_t(i)) = 1.0;
          spec.functionals(row, std::size_t(j)) = 1.0;
        }
      for (int j = 0; j < 7; ++j, ++row)
        for (int i = 0; i < 7; ++i) spec.functionals(row, std::size_t(i)) = (i == j) ? 0.0 : 1.0;
      break;
    }
    case TableSpace::C2: {
      const double s3 = std::sqrt(3.0);
      // |a1 + i a2| corresponds to the functional (1, -i); |a1 - i a2| to (1, i).
      spec.functionals = Matrix{{cx(s3, 0), cx(1, 0)},
                                {cx(1, 0), cx(s3, 0)},
                                {cx(1, 0), cx(0, -1)},
                                {cx(1, 0), cx(0, 1)}};
      break;
    }
    case TableSpace::C3: {
      const cx w = std::polar(1.0, 2.0 * M_PI / 3.0);
      spec.functionals = Matrix(9, 3);
      std::size_t row = 0;
      for (int j = 0; j < 3; ++j) {
        cx wk(1.0, 0.0);
        for (int k = 0; k < 3; ++k, ++row) {
          spec.functionals(row, std::size_t(j)) = 1.0;
          // value |a_j - w^k a_{j+1}| means the functional conjugates -w^k
          spec.functionals(row, std::size_t((j + 1) % 3)) = -std::conj(wk);
          wk *= w;
        }
      }
      break;
    }
    case TableSpace::R23:
      throw UnsupportedError(
          "R23: no closed-form norm is available (Leech-lattice construction out of scope)");
  }
  spec.validate();
  return spec;
}

double table_norm(TableSpace sp, const std::vector<cx>& x) {
  if (sp == TableSpace::R23)
    throw UnsupportedError(
        "R23: no closed-form norm is available (Leech-lattice construction out of scope)");
  if (x.size() != space_dim(sp)) throw ShapeError("table_norm: dimension mismatch");
  switch (sp) {
    case TableSpace::R2Hexagon: {
      const double s3 = std::sqrt(3.0);
      return std::max({std::abs(2.0 * x[0]), std::abs(x[0] - s3 * x[1]), std::abs(x[0] + s3 * x[1])});
    }
    case TableSpace::R3Dodecahedron: {
      const double tau = std::sqrt((std::sqrt(5.0) + 1.0) / 2.0);
      const double sig = std::sqrt((std::sqrt(5.0) - 1.0) / 2.0);
      double best = 0.0;
      for (int j = 0; j < 3; ++j) {
        const cx a = x[std::size_t(j)], b = x[std::size_t((j + 1) % 3)];
        best = std::max({best, std::abs(tau * a + sig * b), std::abs(tau * a - sig * b)});
      }
      return best;
    }
    case TableSpace::R7: {
      double best = 0.0;
      for (int i = 0; i < 7; ++i)
        for (int j = i + 1; j < 7; ++j)
          best = std::max(best, std::abs(x[std::size_t(i)] + x[std::size_t(j)]));
      cx total = 0.0;
      for (int i = 0; i < 7; ++i) total += x[std::size_t(i)];
      for (int j = 0; j < 7; ++j) best = std::max(best, std::abs(total - x[std::size_t(j)]));
      return best;
    }
    case TableSpace::C2: {
      const double s3 = std::sqrt(3.0);
      const cx i(0.0, 1.0);
      return std::max({std::abs(s3 * x[0] + x[1]), std::abs(x[0] + s3 * x[1]),
                       std::abs(x[0] + i * x[1]), std::abs(x[0] - i * x[1])});
    }
    case TableSpace::C3: {
      const cx w = std::polar(1.0, 2.0 * M_PI / 3.0);
      double best = 0.0;
      for (int j = 0; j < 3; ++j) {
        cx wk(1.0, 0.0);
        for (int k = 0; k < 3; ++k) {
          best = std::max(best, std::abs(x[std::size_t(j)] - wk * x[std::size_t((j + 1) % 3)]));
          wk *= w;
        }
      }
      return best;
    }
    case TableSpace::R23:
      throw UnsupportedError(
          "R23: no closed-form norm is available (Leech-lattice construction out of scope)");
  }
  return 0.0;
}

namespace {

bool solve2(const std::array<std::array<double, 2>, 2>& a, std::array<double, 2>& x) {
  double det = a[0][0] * a[1][1] - a[0][1] * a[1][0];
  if (std::abs(det) < 1e-12) return false;
  x[0] = (a[1][1] - a[0][1]) / det;
  x[1] = (a[0][0] - a[1][0]) / det;
  return true;
}

bool solve3(const std::array<std::array<double, 3>, 3>& a, std::array<double, 3>& x) {
  double det = a[0][0] * (a[1][1] * a[2][2] - a[1][2] * a[2][1]) -
               a[0][1] * (a[1][0] * a[2][2] - a[1][2] * a[2][0]) +
               a[0][2] * (a[1][0] * a[2][1] - a[1][1] * a[2][0]);
  if (std::abs(det) < 1e-12) return false;
  for (int c = 0; c < 3; ++c) {
    auto m = a;
    for (int r = 0; r < 3; ++r) m[std::size_t(r)][std::size_t(c)] = 1.0;
    double d = m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
               m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
               m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
    x[std::size_t(c)] = d / det;
  }
  return true;
}

}  // namespace

std::vector<std::vector<double>> ball_vertices(const NormedSpaceSpec& spec) {
  if (spec.field != Field::Real || (spec.n != 2 && spec.n != 3))
    throw UnsupportedError("ball_vertices: implemented for real n in {2, 3} only");
  const std::size_t F = spec.functionals.rows();
  std::vector<std::vector<double>> fr(F, std::vector<double>(spec.n));
  for (std::size_t s = 0; s < F; ++s)
    for (std::size_t j = 0; j < spec.n; ++j) fr[s][j] = spec.functionals(s, j).real();

  auto inside = [&](const std::vector<double>& x) {
    for (std::size_t s = 0; s < F; ++s) {
      double v = 0.0;
      for (std::size_t j = 0; j < spec.n; ++j) v += fr[s][j] * x[j];
      if (std::abs(v) > 1.0 + 1e-9) return false;
    }
    return true;
  };

  std::vector<std::vector<double>> verts;
  auto push_unique = [&](const std::vector<double>& x) {
    for (const auto& v : verts) {
      double d = 0.0;
      for (std::size_t j = 0; j < x.size(); ++j) d += (v[j] - x[j]) * (v[j] - x[j]);
      if (std::sqrt(d) < 1e-9) return;
    }
    verts.push_back(x);
  };

  if (spec.n == 2) {
    for (std::size_t a = 0; a < F; ++a)
      for (std::size_t b = a + 1; b < F; ++b)
        for (int sa = -1; sa <= 1; sa += 2)
          for (int sb = -1; sb <= 1; sb += 2) {
            std::array<std::array<double, 2>, 2> m = {
                {{sa * fr[a][0], sa * fr[a][1]}, {sb * fr[b][0], sb * fr[b][1]}}};
            std::array<double, 2> x{};
            if (!solve2(m, x)) continue;
            std::vector<double> xv{x[0], x[1]};
            if (inside(xv)) push_unique(xv);
          }
  } else {
    for (std::size_t a = 0; a < F; ++a)
      for (std::size_t b = a + 1; b < F; ++b)
        for (std::size_t c = b + 1; c < F; ++c)
          for (int sa = -1; sa <= 1; sa += 2)
            for (int sb = -1; sb <= 1; sb += 2)
              for (int sc = -1; sc <= 1; sc += 2) {
                std::array<std::array<double, 3>, 3> m = {
                    {{sa * fr[a][0], sa * fr[a][1], sa * fr[a][2]},
                     {sb * fr[b][0], sb * fr[b][1], sb * fr[b][2]},
                     {sc * fr[c][0], sc * fr[c][1], sc * fr[c][2]}}};
                std::array<double, 3> x{};
                if (!solve3(m, x)) continue;
                std::vector<double> xv{x[0], x[1], x[2]};
                if (inside(xv)) push_unique(xv);
              }
  }
  return verts;
}

}  // namespace projconst
