#include "folres/indices.hpp"

#include <algorithm>
#include <set>

#include "folres/error.hpp"
#include "folres/random.hpp"

namespace folres {

namespace {

std::string point_tag(const SingularComponent& z, const GenericPointCertificate& cert) {
  return z.certificate.point == cert.point ? "p1" : "p2";
}

std::string point_id(const SingularComponent& z, const GenericPointCertificate& cert) {
  return z.label + "/" + point_tag(z, cert);
}

std::string curve_id(const SingularComponent& z, const std::string& v, const GenericPointCertificate& cert) {
  return z.label + "/" + v + "/curve@" + point_tag(z, cert);
}

std::string vector_string(std::span<const Rational> v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? ", " : "") + to_string(v[i]);
  return out + ")";
}

template <typename F>
auto with_escalation(int truncation, F&& body) {
  for (int n = std::max(truncation, 1);; n *= 2) {
    try {
      return body(n);
    } catch (const Error& e) {
      const bool retry = e.code() == ErrorCode::PoleOrderOverflow || e.code() == ErrorCode::OrderExceedsTruncation;
      if (!retry || n * 2 > kMaxTruncation) throw;
    }
  }
}

std::string saito_name(const SaitoDecomposition& s) {
  return s.label.empty() ? "{" + s.f.to_string() + " = 0}" : s.label;
}

RationalOneForm variation_form(const SaitoDecomposition& s) {
  RationalOneForm theta = RationalOneForm::logarithmic_differential(s.h);
  if (!s.g.is_constant()) theta -= RationalOneForm::logarithmic_differential(s.g);
  RationalOneForm eta(s.eta);
  eta *= RationalFunction(Polynomial::constant(s.h.variables(), Rational(1)), s.h);
  theta -= eta;
  return theta;
}

}  // namespace

std::string_view index_kind_name(IndexKind kind) noexcept {
  switch (kind) {
    case IndexKind::Var: return "Var";
    case IndexKind::GSV: return "GSV";
    case IndexKind::CS: return "CS";
    case IndexKind::BB: return "BB";
  }
  return "?";
}

std::string_view index_method_name(IndexMethod method) noexcept {
  switch (method) {
    case IndexMethod::Residue: return "residue";
    case IndexMethod::ClosedForm: return "closed_form";
    case IndexMethod::Liouville: return "liouville";
    case IndexMethod::Jacobian: return "jacobian";
    case IndexMethod::FirstIntegral: return "first_integral";
    case IndexMethod::Difference: return "difference";
  }
  return "?";
}

IndexValue var_residue(const SaitoDecomposition& s, const SingularComponent& z, const GenericPointCertificate& cert,
                       int truncation) {
  const RationalOneForm theta = variation_form(s);
  const Rational value = with_escalation(truncation, [&](int n) {
    const TransverseCurve curve = transverse_curve(s.f, cert, n);
    return laurent_residue(pullback_to_curve(theta, curve.series));
  });
  IndexValue v;
  v.kind = IndexKind::Var;
  v.value = value;
  v.method = IndexMethod::Residue;
  v.hypersurface = saito_name(s);
  v.component = z.label;
  v.certificates = {point_id(z, cert), curve_id(z, v.hypersurface, cert)};
  return v;
}

IndexValue var_closed_form(const LogarithmicPresentation& p, std::size_t j, const SingularComponent& z,
                           const GenericPointCertificate& cert, int truncation) {
  IndexValue v;
  v.kind = IndexKind::Var;
  v.value = 0;
  v.method = IndexMethod::ClosedForm;
  v.hypersurface = "V" + std::to_string(j + 1);
  v.component = z.label;
  v.certificates = {point_id(z, cert)};
  if (!z.contained_in(j) || p.factors.at(j).evaluate(cert.point) != 0) {
    v.contained = false;
    return v;
  }
  const TransverseCurve curve = transverse_curve(p.factors[j], cert, truncation);
  for (std::size_t l = 0; l < p.factors.size(); ++l) {
    if (l == j) continue;
    const int order = vanishing_order(p.factors[l], curve);
    if (order != 0) v.value += (1 - p.weights[l] / p.weights[j]) * order;
  }
  v.certificates.push_back(curve_id(z, v.hypersurface, cert));
  return v;
}

IndexValue gsv(const SaitoDecomposition& s, const SingularComponent& z, const GenericPointCertificate& cert,
               int truncation) {
  const TransverseCurve curve = transverse_curve(s.f, cert, truncation);
  IndexValue v;
  v.kind = IndexKind::GSV;
  v.value = vanishing_order(RationalFunction(s.h, s.g), curve);
  v.method = IndexMethod::Residue;
  v.hypersurface = saito_name(s);
  v.component = z.label;
  v.certificates = {point_id(z, cert), curve_id(z, v.hypersurface, cert)};
  return v;
}

IndexValue cs(const IndexValue& var, const IndexValue& gsv_value) {
  if (var.kind != IndexKind::Var || gsv_value.kind != IndexKind::GSV) {
    throw Error(ErrorCode::MismatchedComponent, "CS needs a Var and a GSV value");
  }
  if (var.component != gsv_value.component || var.hypersurface != gsv_value.hypersurface) {
    throw Error(ErrorCode::MismatchedComponent, "Var at (" + var.hypersurface + ", " + var.component +
                                                    ") but GSV at (" + gsv_value.hypersurface + ", " +
                                                    gsv_value.component + ")");
  }
  IndexValue v;
  v.kind = IndexKind::CS;
  v.value = var.value - gsv_value.value;
  v.method = IndexMethod::Difference;
  v.hypersurface = var.hypersurface;
  v.component = var.component;
  v.certificates = var.certificates;
  for (const auto& id : gsv_value.certificates) {
    if (std::find(v.certificates.begin(), v.certificates.end(), id) == v.certificates.end()) {
      v.certificates.push_back(id);
    }
  }
  return v;
}

IndexValue bb_liouville(const LogarithmicPresentation& p, const SingularComponent& z,
                        const GenericPointCertificate& cert, const Rational& t, int truncation) {
  const CofactorForm gamma = cofactor(p, t);
  IndexValue v;
  v.kind = IndexKind::BB;
  v.value = 0;
  v.method = IndexMethod::Liouville;
  v.component = z.label;
  v.gauge = t;
  v.certificates = {point_id(z, cert)};
  for (std::size_t j : z.containing) {
    const Rational residue = gamma.gamma0.residue_along(p.factors[j]);
    if (residue == 0) continue;
    const IndexValue var = var_residue(canonical_saito(p, j), z, cert, truncation);
    v.value += residue * var.value;
    v.certificates.push_back(var.certificates.back());
  }
  return v;
}

IndexValue bb_jacobian(const OneForm& omega, const SingularComponent& z, const GenericPointCertificate& cert,
                       std::uint64_t seed, int max_attempts) {
  const auto at_point = omega.evaluate(cert.point);
  if (std::any_of(at_point.begin(), at_point.end(), [](const Rational& x) { return x != 0; })) {
    throw Error(ErrorCode::ComponentNotSingular, z.label + ": omega does not vanish at the certified point");
  }
  const std::vector<Rational> origin{Rational(0), Rational(0)};
  const auto planes = transverse_plane_candidates(cert, seed, max_attempts);
  for (std::size_t k = 0; k < planes.size(); ++k) {
    const OneForm r = restrict_to_plane(omega, planes[k].plane);
    const Polynomial& a = r[0];
    const Polynomial& b = r[1];
    // X = B d/ds - A d/dt
    const std::array<Rational, 4> jx{b.derivative(0).evaluate(origin), b.derivative(1).evaluate(origin),
                                     -a.derivative(0).evaluate(origin), -a.derivative(1).evaluate(origin)};
    const Rational det = jx[0] * jx[3] - jx[1] * jx[2];
    if (det == 0) continue;
    const Rational trace = jx[0] + jx[3];
    IndexValue v;
    v.kind = IndexKind::BB;
    v.value = trace * trace / det;
    v.method = IndexMethod::Jacobian;
    v.component = z.label;
    v.jacobian = jx;
    v.certificates = {point_id(z, cert), z.label + "/plane" + std::to_string(k + 1)};
    return v;
  }
  throw Error(ErrorCode::DegenerateLinearPart, z.label + ": det JX = 0 on all " + std::to_string(planes.size()) +
                                                   " certified transverse planes");
}

IndexValue bb_first_integral(const FirstIntegralPresentation& p, const SingularComponent& z,
                             const GenericPointCertificate& cert, int truncation) {
  IndexValue v;
  v.kind = IndexKind::BB;
  v.value = 0;
  v.method = IndexMethod::FirstIntegral;
  v.component = z.label;
  v.certificates = {point_id(z, cert)};
  const auto& in = z.containing;
  for (std::size_t a = 0; a < in.size(); ++a) {
    const std::size_t l = in[a];
    const TransverseCurve curve = transverse_curve(p.factors[l], cert, truncation);
    v.certificates.push_back(curve_id(z, "V" + std::to_string(l + 1), cert));
    for (std::size_t b = a + 1; b < in.size(); ++b) {
      const std::size_t j = in[b];
      const Rational ml(p.multiplicities[l]);
      const Rational mj(p.multiplicities[j]);
      const Rational diff = ml - mj;
      v.value -= diff * diff / (ml * mj) * vanishing_order(p.factors[j], curve);
    }
  }
  return v;
}

std::optional<Rational> IndexReport::find(IndexKind kind, std::string_view component, std::string_view hypersurface,
                                          std::optional<IndexMethod> method) const {
  for (const auto& v : values) {
    if (v.kind != kind || v.component != component) continue;
    if (!hypersurface.empty() && v.hypersurface != hypersurface) continue;
    if (method && v.method != *method) continue;
    return v.value;
  }
  return std::nullopt;
}

bool IndexReport::all_agree() const {
  return std::all_of(agreement.begin(), agreement.end(), [](const AgreementFlag& f) { return f.agree; });
}

namespace {

class Builder {
 public:
  Builder(const Foliation& fol, const IndexOptions& options, IndexReport& report)
      : fol_(fol), options_(options), report_(report) {}

  void component(const SingularComponent& z) {
    record_point(z, z.certificate, "p1");
    if (z.second_certificate) record_point(z, *z.second_certificate, "p2");
    for (std::size_t j = 0; j < fol_.hypersurfaces.size(); ++j) hypersurface(z, j);
    baum_bott(z);
  }

 private:
  void record_point(const SingularComponent& z, const GenericPointCertificate& c, const std::string& tag) {
    CertificateRecord r{z.label + "/" + tag, "generic_point", {}};
    r.facts.emplace_back("point", vector_string(c.point));
    r.facts.emplace_back("cut", c.cut[0].to_string() + " ; " + c.cut[1].to_string());
    r.facts.emplace_back("minor_columns", fol_.variables[c.minor_columns[0]] + "," + fol_.variables[c.minor_columns[1]]);
    r.facts.emplace_back("minor", to_string(c.minor));
    std::string avoided;
    for (const auto& g : c.avoided) avoided += (avoided.empty() ? "" : " ; ") + g.to_string();
    r.facts.emplace_back("avoided", avoided);
    r.facts.emplace_back("recheck", c.recheck() ? "pass" : "fail");
    std::string containing;
    for (auto k : z.containing) containing += (containing.empty() ? "" : ",") + fol_.labels[k];
    r.facts.emplace_back("contained_in", containing);
    report_.certificates.push_back(std::move(r));
  }

  void record_curve(const SingularComponent& z, std::size_t j, const GenericPointCertificate& c) {
    const std::string id = curve_id(z, fol_.labels[j], c);
    for (const auto& r : report_.certificates) {
      if (r.id == id) return;
    }
    const TransverseCurve curve = transverse_curve(fol_.hypersurfaces[j], c, options_.truncation);
    CertificateRecord r{id, "transverse_curve", {}};
    r.facts.emplace_back("inside", curve.inside.to_string());
    r.facts.emplace_back("direction", vector_string(curve.direction));
    r.facts.emplace_back("correction_coordinate", fol_.variables[curve.correction_coordinate]);
    r.facts.emplace_back("transversal_cut", c.cut[curve.transversal_cut].to_string());
    r.facts.emplace_back("truncation", std::to_string(curve.truncation()));
    report_.certificates.push_back(std::move(r));
  }

  void agree(std::string check, const std::string& comp, const std::string& hyp, const Rational& a,
             const Rational& b) {
    report_.agreement.push_back({std::move(check), comp, hyp, a == b, to_string(a) + " vs " + to_string(b)});
  }

  const SaitoDecomposition& saito_for(std::size_t j) {
    if (saito_.empty()) {
      if (fol_.logarithmic) {
        for (std::size_t k = 0; k < fol_.hypersurfaces.size(); ++k) saito_.push_back(canonical_saito(*fol_.logarithmic, k));
      } else {
        saito_ = std::get<ExplicitPresentation>(fol_.presentation).saito;
      }
    }
    return saito_[j];
  }

  void hypersurface(const SingularComponent& z, std::size_t j) {
    const std::string& v = fol_.labels[j];
    if (!z.contained_in(j)) {
      IndexValue zero;
      zero.kind = IndexKind::Var;
      zero.value = 0;
      zero.method = IndexMethod::ClosedForm;
      zero.hypersurface = v;
      zero.component = z.label;
      zero.contained = false;
      zero.certificates = {z.label + "/p1"};
      report_.values.push_back(std::move(zero));
      return;
    }
    const SaitoDecomposition& s = saito_for(j);
    record_curve(z, j, z.certificate);
    IndexValue var = var_residue(s, z, z.certificate, options_.truncation);
    var.hypersurface = v;
    IndexValue g = gsv(s, z, z.certificate, options_.truncation);
    g.hypersurface = v;
    IndexValue c = cs(var, g);
    if (fol_.logarithmic) {
      IndexValue closed = var_closed_form(*fol_.logarithmic, j, z, z.certificate, options_.truncation);
      agree("var_residue=var_closed_form", z.label, v, var.value, closed.value);
      report_.values.push_back(var);
      report_.values.push_back(std::move(closed));
    } else {
      report_.values.push_back(var);
    }
    if (z.second_certificate) {
      record_curve(z, j, *z.second_certificate);
      const IndexValue var2 = var_residue(s, z, *z.second_certificate, options_.truncation);
      const IndexValue g2 = gsv(s, z, *z.second_certificate, options_.truncation);
      agree("var_point_independence", z.label, v, var.value, var2.value);
      agree("gsv_point_independence", z.label, v, g.value, g2.value);
      IndexValue g2v = g2;
      g2v.hypersurface = v;
      IndexValue var2v = var2;
      var2v.hypersurface = v;
      agree("cs_point_independence", z.label, v, c.value, cs(var2v, g2v).value);
    }
    report_.values.push_back(std::move(g));
    report_.values.push_back(std::move(c));
  }

  void baum_bott(const SingularComponent& z) {
    std::optional<Rational> liouville;
    if (fol_.logarithmic) {
      const auto& p = *fol_.logarithmic;
      IndexValue primary = bb_liouville(p, z, z.certificate, p.gauge, options_.truncation);
      liouville = primary.value;
      std::set<Rational> probed{p.gauge};
      for (int t : kGaugeProbe) {
        if (!probed.insert(Rational(t)).second) continue;
        const IndexValue other = bb_liouville(p, z, z.certificate, Rational(t), options_.truncation);
        agree("bb_gauge_invariance(t=" + std::to_string(t) + ")", z.label, "", primary.value, other.value);
      }
      if (z.second_certificate) {
        const IndexValue other = bb_liouville(p, z, *z.second_certificate, p.gauge, options_.truncation);
        agree("bb_point_independence", z.label, "", primary.value, other.value);
      }
      report_.values.push_back(std::move(primary));
    }
    try {
      const std::uint64_t seed = RandomStream(options_.seed).split(z.label + "/plane").seed();
      IndexValue jac = bb_jacobian(fol_.omega, z, z.certificate, seed, options_.max_attempts);
      const std::size_t k = std::stoul(jac.certificates.back().substr(z.label.size() + 6)) - 1;
      const auto planes = transverse_plane_candidates(z.certificate, seed, options_.max_attempts);
      CertificateRecord r{jac.certificates.back(), "transverse_plane", {}};
      r.facts.emplace_back("base", vector_string(planes[k].plane.base));
      r.facts.emplace_back("dir_s", vector_string(planes[k].plane.dir_s));
      r.facts.emplace_back("dir_t", vector_string(planes[k].plane.dir_t));
      r.facts.emplace_back("cut_jacobian", to_string(planes[k].cut_jacobian));
      report_.certificates.push_back(std::move(r));
      if (liouville) agree("bb_liouville=bb_jacobian", z.label, "", *liouville, jac.value);
      report_.values.push_back(std::move(jac));
    } catch (const Error& e) {
      if (e.code() != ErrorCode::DegenerateLinearPart) throw;
      report_.warnings.push_back(e.what());
    }
    if (const auto* fi = std::get_if<FirstIntegralPresentation>(&fol_.presentation)) {
      IndexValue closed = bb_first_integral(*fi, z, z.certificate, options_.truncation);
      if (liouville) agree("bb_first_integral=bb_liouville", z.label, "", closed.value, *liouville);
      report_.agreement.push_back(
          {"bb_sign", z.label, "", closed.value <= 0, to_string(closed.value) + " <= 0"});
      report_.values.push_back(std::move(closed));
    }
  }

  const Foliation& fol_;
  const IndexOptions& options_;
  IndexReport& report_;
  std::vector<SaitoDecomposition> saito_;
};

}  // namespace

IndexReport compute_indices(const Foliation& foliation, const ComponentSet& components, const IndexOptions& options) {
  IndexReport report;
  report.warnings = components.warnings;
  if (const auto* ex = std::get_if<ExplicitPresentation>(&foliation.presentation)) {
    std::vector<std::vector<Rational>> points;
    for (const auto& z : components.components) points.push_back(z.certificate.point);
    for (const auto& s : ex->saito) {
      const auto seed = RandomStream(options.seed).split("saito/" + s.label).seed();
      const SaitoCertificate sc = verify_saito(s, foliation.omega, seed, options.max_attempts, points);
      CertificateRecord r{"saito/" + s.label, "saito", {}};
      r.facts.emplace_back("identity", "g*omega = h*df + f*eta");
      r.facts.emplace_back("coprimality", sc.method);
      for (const auto& pt : sc.points) r.facts.emplace_back("point", vector_string(pt));
      report.certificates.push_back(std::move(r));
    }
  }
  Builder builder(foliation, options, report);
  for (const auto& z : components.components) builder.component(z);
  return report;
}

}  // namespace folres
