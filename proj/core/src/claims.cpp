#include "rbx/claims.hpp"

#include <functional>
#include <sstream>

#include "rbx/error.hpp"
#include "rbx/jordan.hpp"
#include "rbx/rb.hpp"

namespace rbx {

std::string PassReport::to_text() const {
  std::ostringstream os;
  os << summary << '\n';
  for (const auto& d : details) os << d << '\n';
  if (counterexample) os << "counterexample: " << counterexample->to_string() << '\n';
  return os.str();
}

const std::vector<std::string>& claim_ids() {
  static const std::vector<std::string> ids = {
      "T2-even-splitting", "T4-gr2", "T5-k3", "T6-soundness", "P1-gr2-weight0", "P2-k3-weight0",
      "C5-no-invertible-derivations"};
  return ids;
}

namespace {

struct Setup {
  AlgebraPtr algebra;
  FieldElement weight;
};

Setup setup(const ClaimParams& params, const std::string& default_algebra, long default_weight, int weight_rule) {
  Field F = Field::prime(params.p, params.allow_char2);
  Setup s;
  s.algebra = build_algebra(F, params.algebra.value_or(default_algebra));
  s.weight = params.weight ? F.parse_element(*params.weight) : F.from_int(default_weight);
  if (weight_rule > 0 && s.weight.is_zero()) fail(ErrorCode::invalid_spec, "this claim needs a nonzero weight");
  if (weight_rule == 0 && !s.weight.is_zero()) fail(ErrorCode::invalid_spec, "this claim is about weight zero");
  return s;
}

EnumSpec spec_for(const Setup& s, const ClaimParams& params) {
  EnumSpec spec;
  spec.algebra = s.algebra;
  spec.weight = s.weight;
  spec.chunks = params.jobs;
  return spec;
}

PassReport all_splitting(const std::string& id, const Setup& s, const ClaimParams& params,
                         const std::function<void(const std::vector<LinearOperator>&, PassReport&)>& extra = {}) {
  PassReport rep{id, true, "", {}, std::nullopt};
  auto ops = enumerate_rb(spec_for(s, params));
  std::size_t split = 0;
  for (const auto& op : ops) {
    if (is_splitting(op, s.weight).splitting) {
      ++split;
    } else if (!rep.counterexample) {
      rep.counterexample = op.matrix;
    }
  }
  rep.pass = split == ops.size();
  rep.summary = rep.pass ? "pass: all splitting" : "fail: non-splitting operator found";
  rep.details.push_back("algebra=" + s.algebra->name() + " field=" + s.algebra->field().to_string() +
                        " weight=" + s.weight.to_string());
  rep.details.push_back("operators=" + std::to_string(ops.size()) + " splitting=" + std::to_string(split));
  if (extra) extra(ops, rep);
  return rep;
}

PassReport t2(const ClaimParams& params) {
  Setup s = setup(params, "jordan:1,1", 1, 1);
  auto diag = detect_jordan_form(*s.algebra);
  if (!diag || diag->size() % 2 != 0) fail(ErrorCode::invalid_spec, "T2-even-splitting needs J_{n+1} with n even");
  return all_splitting("T2-even-splitting", s, params, [&](const std::vector<LinearOperator>& ops, PassReport& rep) {
    const Vector one = *s.algebra->unit();
    const Vector minus_w = scale(-s.weight, one);
    std::size_t zero_up_to_phi = 0;
    for (const auto& op : ops) {
      const Vector r1 = op.apply(one);
      if (is_zero(r1) || r1 == minus_w) {
        ++zero_up_to_phi;
      } else if (!rep.counterexample) {
        rep.counterexample = op.matrix;
      }
    }
    rep.details.push_back("R(1)=0 up to phi: " + std::to_string(zero_up_to_phi) + "/" + std::to_string(ops.size()));
    if (zero_up_to_phi != ops.size()) {
      rep.pass = false;
      rep.summary = "fail: R(1) nonzero up to phi";
    }
  });
}

PassReport t6(const ClaimParams& params) {
  Setup s = setup(params, "matrix:2", 0, 0);
  const Algebra& a = *s.algebra;
  PassReport rep{"T6-soundness", true, "", {}, std::nullopt};
  auto ops = enumerate_rb(spec_for(s, params));
  const Vector one = *a.unit();
  std::size_t bad = 0;
  for (const auto& op : ops) {
    const Diagnostics d = diagnostics(op, s.weight);
    const bool unit_outside = !column_space(op.matrix).contains(one);
    const bool ok = unit_outside && d.kernel_dim >= 2 && d.degenerate_image.value_or(false);
    if (!ok) {
      ++bad;
      if (!rep.counterexample) rep.counterexample = op.matrix;
    }
  }
  std::vector<std::string> missing;
  for (int k = 1; k <= 4; ++k) {
    const Matrix m = m_operator(s.algebra, k).matrix;
    bool found = false;
    for (const auto& op : ops) found = found || op.matrix == m;
    if (!found) missing.push_back("M" + std::to_string(k));
  }
  rep.pass = bad == 0 && missing.empty();
  if (rep.pass) {
    rep.summary = "pass: every operator has 1 outside the image, dim ker >= 2 and a degenerate image; M1-M4 present";
  } else if (bad) {
    rep.summary = "fail: " + std::to_string(bad) + " operators violate a necessary condition";
  } else {
    std::string list;
    for (const auto& m : missing) list += (list.empty() ? "" : ",") + m;
    rep.summary = "fail: missing " + list;
  }
  rep.details.push_back("algebra=" + a.name() + " field=" + a.field().to_string() + " weight=0");
  rep.details.push_back("operators=" + std::to_string(ops.size()));

  EnumSpec spec = spec_for(s, params);
  spec.use_transpose = true;
  spec.use_scaling = true;
  auto autos = enumerate_automorphisms(s.algebra, params.jobs);
  OrbitReport orbits = orbit_classify(ops, autos, spec);
  rep.details.push_back("automorphisms=" + std::to_string(autos.size()));
  std::istringstream lines(orbits.to_text());
  for (std::string line; std::getline(lines, line);) rep.details.push_back(line);
  rep.details.push_back("completeness (reported only): " + std::to_string(orbits.orbits.size()) +
                        " orbits including zero; 5 over an algebraically closed field");
  return rep;
}

PassReport normal_form_claim(const std::string& id, const std::string& algebra,
                             const std::function<bool(const Matrix&)>& normal, const ClaimParams& params) {
  ClaimParams fixed = params;
  fixed.algebra = algebra;
  Setup s = setup(fixed, algebra, 0, 0);
  PassReport rep{id, true, "", {}, std::nullopt};
  auto ops = enumerate_rb(spec_for(s, params));
  auto autos = enumerate_automorphisms(s.algebra, params.jobs);
  OrbitReport orbits = orbit_classify(ops, autos, spec_for(s, params));
  std::size_t bad = 0;
  for (const auto& o : orbits.orbits) {
    bool hit = false;
    for (std::size_t k : o.members) hit = hit || normal(ops[k].matrix);
    if (!hit) {
      ++bad;
      if (!rep.counterexample) rep.counterexample = o.representative;
    }
  }
  rep.pass = bad == 0;
  rep.summary = rep.pass ? "pass: every operator is conjugate to the normal form"
                         : "fail: " + std::to_string(bad) + " orbits miss the normal form";
  rep.details.push_back("algebra=" + s.algebra->name() + " field=" + s.algebra->field().to_string() + " weight=0");
  rep.details.push_back("operators=" + std::to_string(ops.size()) + " automorphisms=" + std::to_string(autos.size()) +
                        " orbits=" + std::to_string(orbits.orbits.size()));
  return rep;
}

PassReport p1(const ClaimParams& params) {
  // basis 1, e1, e2, e12: R(1), R(e1) in span{e2, e12}, R(e2) = R(e12) = 0
  return normal_form_claim("P1-gr2-weight0", "grassmann2",
                           [](const Matrix& m) {
                             for (std::size_t i = 0; i < 4; ++i) {
                               for (std::size_t j = 0; j < 4; ++j) {
                                 const bool free = j < 2 && i >= 2;
                                 if (!free && !m(i, j).is_zero()) return false;
                               }
                             }
                             return true;
                           },
                           params);
}

PassReport p2(const ClaimParams& params) {
  // basis e, x, y: R(e) = R(x) = 0, R(y) = a e + b x
  return normal_form_claim("P2-k3-weight0", "kaplansky3",
                           [](const Matrix& m) {
                             for (std::size_t i = 0; i < 3; ++i) {
                               for (std::size_t j = 0; j < 3; ++j) {
                                 const bool free = j == 2 && i < 2;
                                 if (!free && !m(i, j).is_zero()) return false;
                               }
                             }
                             return true;
                           },
                           params);
}

PassReport c5(const ClaimParams& params) {
  Setup s = setup(params, "grassmann2", 1, 1);
  const Algebra& a = *s.algebra;
  PassReport rep{"C5-no-invertible-derivations", true, "", {}, std::nullopt};
  auto ds = enumerate_derivations(s.algebra, s.weight, params.jobs);
  const Matrix trivial = -s.weight.inverse() * Matrix::identity(a.field(), a.dim());
  std::size_t invertible = 0;
  for (const auto& d : ds) {
    if (rank(d) != a.dim()) continue;
    ++invertible;
    if (!(d == trivial)) {
      rep.pass = false;
      if (!rep.counterexample) rep.counterexample = d;
    }
  }
  rep.summary = rep.pass ? "pass: only trivial invertible derivations" : "fail: nontrivial invertible derivation";
  rep.details.push_back("algebra=" + a.name() + " field=" + a.field().to_string() + " weight=" + s.weight.to_string());
  rep.details.push_back("derivations=" + std::to_string(ds.size()) + " invertible=" + std::to_string(invertible));
  return rep;
}

}  // namespace

PassReport verify_claim(const std::string& id, const ClaimParams& params) {
  if (id == "T2-even-splitting") return t2(params);
  if (id == "T4-gr2") {
    ClaimParams fixed = params;
    fixed.algebra = "grassmann2";
    return all_splitting(id, setup(fixed, "grassmann2", 1, 1), params);
  }
  if (id == "T5-k3") {
    ClaimParams fixed = params;
    fixed.algebra = "kaplansky3";
    return all_splitting(id, setup(fixed, "kaplansky3", 1, 1), params);
  }
  if (id == "T6-soundness") return t6(params);
  if (id == "P1-gr2-weight0") return p1(params);
  if (id == "P2-k3-weight0") return p2(params);
  if (id == "C5-no-invertible-derivations") return c5(params);
  fail(ErrorCode::invalid_spec, "unknown claim " + id);
}

}  // namespace rbx
