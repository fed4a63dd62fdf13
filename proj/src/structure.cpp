#include "flagdt/structure.hpp"

#include <sstream>

namespace flagdt {

namespace {

GForm gbasis(CoframeIndex i) { return GForm::basis(i); }

GForm i_times(const GForm& f) {
  GForm out;
  for (const auto& [m, c] : f.terms()) out.add(m, GaussRational::unit_i() * c);
  return out;
}

} // namespace

StructureTable::StructureTable() {
  const GForm b1 = gbasis(CoframeIndex::Beta1);
  const GForm b2 = gbasis(CoframeIndex::Beta2);
  const GForm e1 = gbasis(CoframeIndex::Eta1);
  const GForm t1 = gbasis(CoframeIndex::Theta1);
  const GForm e2 = gbasis(CoframeIndex::Eta2);
  const GForm t2 = gbasis(CoframeIndex::Theta2);
  const GForm e3 = gbasis(CoframeIndex::Eta3);
  const GForm t3 = gbasis(CoframeIndex::Theta3);

  std::array<std::array<GForm, 3>, 3> mu;
  mu[0][0] = i_times(b1);
  mu[0][1] = t3 + i_times(e3);
  mu[0][2] = -t2 + i_times(e2);
  mu[1][0] = -t3 + i_times(e3);
  mu[1][1] = i_times(b2);
  mu[1][2] = t1 + i_times(e1);
  mu[2][0] = t2 + i_times(e2);
  mu[2][1] = -t1 + i_times(e1);
  mu[2][2] = i_times(-(b1 + b2));

  std::array<std::array<GForm, 3>, 3> dmu;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      GForm s;
      for (int k = 0; k < 3; ++k) s += wedge(mu[i][k], mu[k][j]);
      dmu[i][j] = -s;
    }

  auto require = [](bool ok, const char* what) {
    if (!ok) throw ConsistencyError(std::string("structure table derivation: ") + what);
  };

  // Diagonal entries are i*b: real parts must vanish exactly.
  require(real_part(dmu[0][0]).is_zero(), "Re d(mu_11) != 0");
  require(real_part(dmu[1][1]).is_zero(), "Re d(mu_22) != 0");
  QForm db1 = imag_part(dmu[0][0]);
  QForm db2 = imag_part(dmu[1][1]);
  require(imag_part(dmu[2][2]) == -(db1 + db2), "d(mu_33) inconsistent with traceless b3");

  // mu_23 = t1 + i e1, mu_32 = -t1 + i e1 must give the same dt1, de1.
  QForm dt1 = real_part(dmu[1][2]);
  QForm de1 = imag_part(dmu[1][2]);
  require(real_part(dmu[2][1]) == -dt1 && imag_part(dmu[2][1]) == de1, "mu_32 cross-check");

  // mu_13 = -t2 + i e2, mu_31 = t2 + i e2.
  QForm dt2 = -real_part(dmu[0][2]);
  QForm de2 = imag_part(dmu[0][2]);
  require(real_part(dmu[2][0]) == dt2 && imag_part(dmu[2][0]) == de2, "mu_31 cross-check");

  // mu_12 = t3 + i e3, mu_21 = -t3 + i e3.
  QForm dt3 = real_part(dmu[0][1]);
  QForm de3 = imag_part(dmu[0][1]);
  require(real_part(dmu[1][0]) == -dt3 && imag_part(dmu[1][0]) == de3, "mu_21 cross-check");

  d_exact_[0] = db1;
  d_exact_[1] = db2;
  d_exact_[2] = de1;
  d_exact_[3] = dt1;
  d_exact_[4] = de2;
  d_exact_[5] = dt2;
  d_exact_[6] = de3;
  d_exact_[7] = dt3;

  for (int i = 0; i < 8; ++i) d_complex_[i] = to_complex_form(d_exact_[i]);

  for (int i = 0; i < 8; ++i) {
    QForm dd = exterior_derivative(QForm::basis(static_cast<CoframeIndex>(i)), *this);
    dd = exterior_derivative(dd, *this);
    if (!dd.is_zero()) {
      std::ostringstream os;
      os << "d^2 != 0 on basis 1-form " << coframe_name(static_cast<CoframeIndex>(i));
      throw ConsistencyError(os.str());
    }
  }
}

std::array<QForm, 8> StructureTable::d_squared_residuals() const {
  std::array<QForm, 8> out;
  for (int i = 0; i < 8; ++i) {
    QForm d1 = exterior_derivative(QForm::basis(static_cast<CoframeIndex>(i)), *this);
    out[i] = exterior_derivative(d1, *this);
  }
  return out;
}

const StructureTable& StructureTable::instance() {
  static const StructureTable table;
  return table;
}

} // namespace flagdt
