#include "bsq/quadratic_form.hpp"

#include <cmath>
#include <map>
#include <numbers>
#include <sstream>
#include <tuple>

#include "bsq/bogoliubov.hpp"
#include "bsq/errors.hpp"

namespace bsq {

namespace {

// Adds lambda * sym(r_a r_b) to the form 1/2 r^T M r.
void add_monomial(Eigen::MatrixXd& m, std::size_t a, std::size_t b, double lambda) {
  if (a == b) {
    m(a, a) += 2.0 * lambda;
  } else {
    m(a, b) += lambda;
    m(b, a) += lambda;
  }
}

}  // namespace

void QuadraticForm::check(std::size_t i) const {
  if (i >= mode_count_) {
    std::ostringstream msg;
    msg << "term references mode " << i << " but the form has " << mode_count_ << " modes";
    throw ValidationError(msg.str());
  }
}

QuadraticForm QuadraticForm::from_matrices(const Eigen::MatrixXcd& hopping, const Eigen::MatrixXcd& pairing,
                                           const Eigen::VectorXcd& linear) {
  const auto n = hopping.rows();
  if (hopping.cols() != n || pairing.rows() != n || pairing.cols() != n || linear.size() != n) {
    throw ValidationError("hopping, pairing and linear coefficients must share one mode count");
  }
  const double scale = std::max({1.0, hopping.cwiseAbs().maxCoeff(), pairing.cwiseAbs().maxCoeff()});
  if ((hopping - hopping.adjoint()).cwiseAbs().maxCoeff() > 1e-12 * scale) {
    throw ValidationError("hopping matrix is not Hermitian");
  }
  if ((pairing - pairing.transpose()).cwiseAbs().maxCoeff() > 1e-12 * scale) {
    throw ValidationError("pairing matrix is not symmetric");
  }
  QuadraticForm form(static_cast<std::size_t>(n));
  for (Eigen::Index i = 0; i < n; ++i) {
    const auto ui = static_cast<std::size_t>(i);
    if (hopping(i, i) != 0.0) form.add_hopping(ui, ui, 0.5 * hopping(i, i).real());
    if (pairing(i, i) != 0.0) form.add_pair(ui, ui, 0.5 * pairing(i, i));
    if (linear(i) != 0.0) form.add_linear(ui, linear(i));
    for (Eigen::Index j = i + 1; j < n; ++j) {
      const auto uj = static_cast<std::size_t>(j);
      if (hopping(i, j) != 0.0) form.add_hopping(ui, uj, hopping(i, j));
      if (pairing(i, j) != 0.0) form.add_pair(ui, uj, pairing(i, j));
    }
  }
  return form;
}

void QuadraticForm::add_hopping(std::size_t i, std::size_t j, complex coeff, double frequency) {
  check(i);
  check(j);
  terms_.push_back({TermKind::Hopping, i, j, coeff, frequency});
}

void QuadraticForm::add_pair(std::size_t i, std::size_t j, complex coeff, double frequency) {
  check(i);
  check(j);
  terms_.push_back({TermKind::Pair, i, j, coeff, frequency});
}

void QuadraticForm::add_linear(std::size_t i, complex coeff, double frequency) {
  check(i);
  terms_.push_back({TermKind::Linear, i, i, coeff, frequency});
}

bool QuadraticForm::time_dependent() const {
  for (const auto& term : terms_) {
    if (term.frequency != 0.0) return true;
  }
  return false;
}

QuadraticForm QuadraticForm::resonant(double tolerance) const {
  QuadraticForm out(mode_count_);
  for (auto term : terms_) {
    if (std::abs(term.frequency) <= tolerance) {
      term.frequency = 0.0;
      out.terms_.push_back(term);
    }
  }
  return out;
}

QuadraticForm QuadraticForm::simplified() const {
  // Keyed on (kind, i, j, frequency) after orienting every term canonically.
  using Key = std::tuple<int, std::size_t, std::size_t, double>;
  std::map<Key, complex> merged;
  std::vector<Key> order;
  for (auto term : terms_) {
    if (term.kind == TermKind::Pair && term.i > term.j) std::swap(term.i, term.j);
    if (term.kind == TermKind::Hopping && term.i > term.j) {
      std::swap(term.i, term.j);
      term.coeff = std::conj(term.coeff);
      term.frequency = -term.frequency;
    }
    if (term.kind == TermKind::Hopping && term.i == term.j && term.frequency == 0.0) {
      term.coeff = term.coeff.real();
    }
    const Key key{static_cast<int>(term.kind), term.i, term.j, term.frequency};
    auto [it, inserted] = merged.emplace(key, complex{});
    if (inserted) order.push_back(key);
    it->second += term.coeff;
  }
  QuadraticForm out(mode_count_);
  for (const auto& key : order) {
    const complex c = merged.at(key);
    if (c == complex{}) continue;
    out.terms_.push_back({static_cast<TermKind>(std::get<0>(key)), std::get<1>(key), std::get<2>(key), c,
                          std::get<3>(key)});
  }
  return out;
}

void QuadraticForm::quadrature_generator(double t, Eigen::MatrixXd& m, Eigen::VectorXd& d) const {
  const auto dim = static_cast<Eigen::Index>(2 * mode_count_);
  m = Eigen::MatrixXd::Zero(dim, dim);
  d = Eigen::VectorXd::Zero(dim);
  for (const auto& term : terms_) {
    const complex c = term.frequency == 0.0 ? term.coeff : term.coeff * std::polar(1.0, term.frequency * t);
    const double cr = c.real();
    const double ci = c.imag();
    const std::size_t xi = 2 * term.i, pi = xi + 1;
    const std::size_t xj = 2 * term.j, pj = xj + 1;
    switch (term.kind) {
      case TermKind::Hopping:
        // cr (x_i x_j + p_i p_j) + ci (p_i x_j - x_i p_j)
        add_monomial(m, xi, xj, cr);
        add_monomial(m, pi, pj, cr);
        add_monomial(m, pi, xj, ci);
        add_monomial(m, xi, pj, -ci);
        break;
      case TermKind::Pair:
        // cr (x_i x_j - p_i p_j) + ci (x_i p_j + p_i x_j)
        add_monomial(m, xi, xj, cr);
        add_monomial(m, pi, pj, -cr);
        add_monomial(m, xi, pj, ci);
        add_monomial(m, pi, xj, ci);
        break;
      case TermKind::Linear:
        d(static_cast<Eigen::Index>(xi)) += std::numbers::sqrt2 * cr;
        d(static_cast<Eigen::Index>(pi)) += std::numbers::sqrt2 * ci;
        break;
    }
  }
}

QuadraticForm to_particle_basis(const QuadraticForm& qp, const ModeRegistry& modes) {
  if (qp.mode_count() != modes.size()) {
    throw ValidationError("quadratic form and registry disagree on the number of modes");
  }
  std::vector<double> u(modes.size()), v(modes.size());
  std::vector<std::size_t> bar(modes.size());
  for (std::size_t k = 0; k < modes.size(); ++k) {
    const BogoliubovCoeffs c = coeffs(std::abs(modes.label(k)));
    u[k] = c.u;
    v[k] = c.v;
    bar[k] = modes.partner(k);
  }

  // alpha_i = u_i a_i + v_i a+_{bar i}. Products are normal ordered; the
  // commutator constants only shift the energy and are dropped.
  QuadraticForm out(qp.mode_count());
  for (const auto& t : qp.terms()) {
    const std::size_t i = t.i, j = t.j;
    const double nu = t.frequency;
    const complex c = t.coeff;
    switch (t.kind) {
      case TermKind::Hopping:
        // (u_i a+_i + v_i a_ibar)(u_j a_j + v_j a+_jbar)
        out.add_hopping(i, j, c * u[i] * u[j], nu);
        out.add_pair(i, bar[j], c * u[i] * v[j], nu);
        out.add_pair(j, bar[i], std::conj(c * v[i] * u[j]), -nu);  // a_ibar a_j
        out.add_hopping(bar[j], bar[i], c * v[i] * v[j], nu);       // a_ibar a+_jbar
        break;
      case TermKind::Pair:
        // (u_i a+_i + v_i a_ibar)(u_j a+_j + v_j a_jbar)
        out.add_pair(i, j, c * u[i] * u[j], nu);
        out.add_hopping(i, bar[j], c * u[i] * v[j], nu);
        out.add_hopping(j, bar[i], c * v[i] * u[j], nu);                    // a_ibar a+_j
        out.add_pair(bar[j], bar[i], std::conj(c * v[i] * v[j]), -nu);     // a_ibar a_jbar
        break;
      case TermKind::Linear:
        out.add_linear(i, c * u[i], nu);
        out.add_linear(bar[i], std::conj(c * v[i]), -nu);
        break;
    }
  }
  return out.simplified();
}

}  // namespace bsq
