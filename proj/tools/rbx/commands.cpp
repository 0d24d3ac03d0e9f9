#include "commands.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <nlohmann/json.hpp>
#include <sstream>

#include "rbx/claims.hpp"
#include "rbx/error.hpp"
#include "rbx/io.hpp"
#include "rbx/jordan.hpp"
#include "rbx/rb.hpp"
#include "rbx/search.hpp"
#include "rbx/ybe.hpp"

namespace rbx::cli {

namespace {

using json = nlohmann::ordered_json;

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  for (std::string part; std::getline(ss, part, sep);) out.push_back(part);
  return out;
}

Vector parse_vector(const Field& f, const std::string& text, std::size_t n) {
  Vector v;
  for (const auto& e : split(text, ',')) v.push_back(f.parse_element(e));
  if (v.size() != n) fail(ErrorCode::parse_error, "vector '" + text + "' needs " + std::to_string(n) + " entries");
  return v;
}

/// "a,b;c,d" -> two vectors.
std::vector<Vector> parse_vectors(const Field& f, const std::string& text, std::size_t n) {
  std::vector<Vector> out;
  for (const auto& part : split(text, ';')) {
    if (!part.empty()) out.push_back(parse_vector(f, part, n));
  }
  return out;
}

Matrix parse_matrix(const Field& f, const std::string& text, std::size_t rows, std::size_t cols) {
  auto vs = parse_vectors(f, text, cols);
  if (vs.size() != rows) fail(ErrorCode::parse_error, "matrix needs " + std::to_string(rows) + " rows");
  return Matrix::from_rows(f, vs, cols);
}

std::vector<FieldElement> parse_elements(const Field& f, const std::string& text) {
  std::vector<FieldElement> out;
  for (const auto& e : split(text, ',')) out.push_back(f.parse_element(e));
  return out;
}

std::string yes_no(bool b) { return b ? "true" : "false"; }

class Session {
public:
  Session(const Global& g, const Inputs& in) : g_(g), in_(in) {}

  bool machine() const { return g_.format == "machine"; }

  Field field() const { return Field::parse(in_.field, g_.allow_char2); }

  AlgebraPtr algebra() const {
    if (!in_.algebra.empty()) return read_algebra(read_file(in_.algebra), g_.allow_char2);
    if (!in_.builder.empty()) return build_algebra(field(), in_.builder);
    fail(ErrorCode::invalid_spec, "one of --algebra or --builder is required");
  }

  OperatorFile op(const AlgebraPtr& a) const {
    if (in_.op.empty()) fail(ErrorCode::invalid_spec, "--op is required");
    OperatorFile f = read_operator(read_file(in_.op), a);
    if (in_.weight) f.weight = a->field().parse_element(*in_.weight);
    return f;
  }

  FieldElement weight(const Field& f, long fallback) const {
    return in_.weight ? f.parse_element(*in_.weight) : f.from_int(fallback);
  }

  void emit(const std::string& text) const {
    if (in_.out.empty()) {
      std::cout << text;
    } else {
      write_file(in_.out, text);
    }
  }

  void emit_algebra(const Algebra& a) const {
    if (!in_.algebra_out.empty()) write_file(in_.algebra_out, write_algebra(a));
  }

  void emit_json(const json& j) const { emit(j.dump(2) + "\n"); }

private:
  const Global& g_;
  const Inputs& in_;
};

json diagnostics_json(const RBOperator& r) {
  const Diagnostics d = diagnostics(r.op(), r.weight());
  json j;
  j["rb"] = true;
  j["weight"] = d.weight.to_string();
  j["splitting"] = d.splitting;
  j["case"] = case_label(r);
  j["kernel_dim"] = d.kernel_dim;
  j["image_dim"] = d.image_dim;
  j["square_zero"] = d.square_zero;
  j["r_one"] = d.r_one ? json(to_string(*d.r_one)) : json(nullptr);
  j["r_one_scalar"] = d.r_one_scalar ? json(*d.r_one_scalar) : json(nullptr);
  j["unit_case"] = to_string(d.unit_case);
  j["norm_vanishes_on_traceless"] =
      d.norm_vanishes_on_traceless ? json(*d.norm_vanishes_on_traceless) : json(nullptr);
  j["degenerate_image"] = d.degenerate_image ? json(*d.degenerate_image) : json(nullptr);
  return j;
}

void algebra_options(CLI::App* app, Inputs& in) {
  app->add_option("--algebra", in.algebra, "Algebra file")->check(CLI::ExistingFile);
  app->add_option("--builder", in.builder, "Built-in algebra, e.g. matrix:2, jordan:1,1, grassmann2");
  app->add_option("--field", in.field, "Field for --builder: Q, F5, F7(sqrt3)");
}

}  // namespace

void Commands::install(CLI::App& app) {
  add_check(app);
  add_construct(app);
  add_convert(app);
  add_gen_system(app);
  add_enumerate(app);
  add_classify(app);
  add_verify(app);
  add_info(app);
}

void Commands::add_check(CLI::App& app) {
  auto* c = app.add_subcommand("check", "Verify the identity for an operator and report diagnostics");
  algebra_options(c, in_);
  c->add_option("--op", in_.op, "Operator file")->required()->check(CLI::ExistingFile);
  c->add_option("--weight", in_.weight, "Override the weight in the operator file");
  c->callback([this] {
    action_ = [this] {
      Session s(global_, in_);
      auto a = s.algebra();
      auto f = s.op(a);
      const FieldElement w = a->field().embed(f.weight);
      if (!check_rb(f.op, w)) {
        if (s.machine()) {
          s.emit_json(json{{"rb", false}, {"weight", w.to_string()}});
        } else {
          s.emit("not RB weight=" + w.to_string() + "\n");
        }
        return 1;
      }
      const RBOperator r = RBOperator::validate(f.op, w);
      if (s.machine()) {
        s.emit_json(diagnostics_json(r));
      } else {
        s.emit("RB weight=" + w.to_string() + " splitting=" + yes_no(is_splitting(r).splitting) +
               " case=" + case_label(r) + "\n");
      }
      return 0;
    };
  });
}

void Commands::add_construct(CLI::App& app) {
  auto* c = app.add_subcommand("construct", "Build operators, tensors and algebras");
  c->require_subcommand(1);

  auto out_options = [this](CLI::App* sub) {
    sub->add_option("--out", in_.out, "Write here instead of stdout");
    sub->add_option("--algebra-out", in_.algebra_out, "Also write the algebra file here");
  };
  auto op_result = [this](const RBOperator& r) {
    Session s(global_, in_);
    s.emit_algebra(*r.algebra());
    s.emit(write_operator(r.op(), r.weight()));
    return 0;
  };

  auto* alg = c->add_subcommand("algebra", "Algebra file from a builder");
  alg->add_option("--builder", in_.builder, "matrix:N, jordan:d1,..., grassmann2, kaplansky3, cayley-dickson:a1,..., "
                                             "sl2, termwise:K")
      ->required();
  alg->add_option("--field", in_.field, "Field");
  out_options(alg);
  alg->callback([this] {
    action_ = [this] {
      Session s(global_, in_);
      s.emit(write_algebra(*s.algebra()));
      return 0;
    };
  });

  auto* split_cmd = c->add_subcommand("split", "Splitting operator of a decomposition A = A1 + A2");
  algebra_options(split_cmd, in_);
  split_cmd->add_option("--a1", a1_, "Spanning vectors of A1, 'a,b,..;c,d,..'")->required();
  split_cmd->add_option("--a2", a2_, "Spanning vectors of A2")->required();
  split_cmd->add_option("--weight", in_.weight, "Weight")->required();
  out_options(split_cmd);
  split_cmd->callback([this, op_result] {
    action_ = [this, op_result] {
      Session s(global_, in_);
      auto a = s.algebra();
      const Field& F = a->field();
      Decomposition d{Subspace::span(F, a->dim(), parse_vectors(F, a1_, a->dim())),
                      Subspace::span(F, a->dim(), parse_vectors(F, a2_, a->dim()))};
      return op_result(split_op(a, d, s.weight(F, 1)));
    };
  });

  auto* phi = c->add_subcommand("phi", "-R - weight id");
  algebra_options(phi, in_);
  phi->add_option("--op", in_.op, "Operator file")->required()->check(CLI::ExistingFile);
  out_options(phi);
  phi->callback([this, op_result] {
    action_ = [this, op_result] {
      Session s(global_, in_);
      auto a = s.algebra();
      auto f = s.op(a);
      return op_result(apply_phi(RBOperator::validate(f.op, f.weight)));
    };
  });

  auto* conj = c->add_subcommand("conjugate", "psi^-1 R psi for an automorphism psi");
  algebra_options(conj, in_);
  conj->add_option("--op", in_.op, "Operator file")->required()->check(CLI::ExistingFile);
  conj->add_option("--psi", psi_, "Automorphism matrix, rows 'a,b,..;c,d,..'")->required();
  out_options(conj);
  conj->callback([this, op_result] {
    action_ = [this, op_result] {
      Session s(global_, in_);
      auto a = s.algebra();
      auto f = s.op(a);
      const Matrix psi = parse_matrix(a->field(), psi_, a->dim(), a->dim());
      return op_result(conjugate(RBOperator::validate(f.op, f.weight), psi));
    };
  });

  auto* le = c->add_subcommand("l-e", "Left multiplication by e with e^2 = -lambda e");
  algebra_options(le, in_);
  le->add_option("--e", e_, "Coefficients of e")->required();
  le->add_option("--lambda", lambda_, "lambda; the result has this weight");
  out_options(le);
  le->callback([this, op_result] {
    action_ = [this, op_result] {
      Session s(global_, in_);
      auto a = s.algebra();
      const FieldElement lambda = a->field().parse_element(lambda_);
      return op_result(RBOperator::validate(left_mult_op(a, parse_vector(a->field(), e_, a->dim()), lambda), lambda));
    };
  });

  auto* der = c->add_subcommand("from-derivation", "Inverse of an invertible derivation of the file's weight");
  algebra_options(der, in_);
  der->add_option("--op", in_.op, "Derivation in operator format")->required()->check(CLI::ExistingFile);
  out_options(der);
  der->callback([this, op_result] {
    action_ = [this, op_result] {
      Session s(global_, in_);
      auto a = s.algebra();
      auto f = s.op(a);
      return op_result(rb_from_inverse_derivation(f.op, f.weight));
    };
  });

  auto* t2r = c->add_subcommand("triple-to-rb", "Weight-zero operator from a triple (S, I, D)");
  algebra_options(t2r, in_);
  t2r->add_option("--s", s_, "Spanning vectors of S")->required();
  t2r->add_option("--i", i_, "Spanning vectors of I");
  t2r->add_option("--d", d_, "D on the echelon basis of S, as rows")->required();
  out_options(t2r);
  t2r->callback([this, op_result] {
    action_ = [this, op_result] {
      Session s(global_, in_);
      auto a = s.algebra();
      const Field& F = a->field();
      Subspace S = Subspace::span(F, a->dim(), parse_vectors(F, s_, a->dim()));
      Subspace I = Subspace::span(F, a->dim(), parse_vectors(F, i_, a->dim()));
      RBTriple t{S, I, parse_matrix(F, d_, a->dim(), S.dim())};
      return op_result(triple_to_rb(a, t));
    };
  });

  auto* e10 = c->add_subcommand("ex10", "Odd-dimensional example on J_{n+1}");
  e10->add_option("--field", in_.field, "Field")->required();
  e10->add_option("--diag", diag_, "d_1,...,d_n with n odd")->required();
  e10->add_option("--weight", in_.weight, "Weight (default 1)");
  out_options(e10);
  e10->callback([this, op_result] {
    action_ = [this, op_result] {
      Session s(global_, in_);
      const Field F = s.field();
      return op_result(ex10(F, parse_elements(F, diag_), s.weight(F, 1)));
    };
  });

  auto* e11 = c->add_subcommand("ex11", "Non-splitting example on J4 over F5");
  out_options(e11);
  e11->callback([this, op_result] { action_ = [op_result] { return op_result(ex11()); }; });

  auto* e12 = c->add_subcommand("ex12", "Splitting example on J4 over F13");
  out_options(e12);
  e12->callback([this, op_result] { action_ = [op_result] { return op_result(ex12()); }; });

  auto* e13 = c->add_subcommand("ex13", "R(1) = 0, R(e1) = k a, R(e2) = l a on J3");
  e13->add_option("--field", in_.field, "Field")->required();
  e13->add_option("--diag", diag_, "d_1,d_2")->required();
  e13->add_option("--k", k_, "k")->required();
  e13->add_option("--l", l_, "l")->required();
  e13->add_option("--alpha", alpha_, "a0,a1,a2")->required();
  e13->add_option("--weight", in_.weight, "Weight (default 1)");
  out_options(e13);
  e13->callback([this, op_result] {
    action_ = [this, op_result] {
      Session s(global_, in_);
      const Field F = s.field();
      return op_result(ex13(F, parse_elements(F, diag_), F.parse_element(k_), F.parse_element(l_),
                            parse_elements(F, alpha_), s.weight(F, 1)));
    };
  });

  for (int k = 1; k <= 4; ++k) {
    auto* m = c->add_subcommand("m" + std::to_string(k), "Weight-zero operator M" + std::to_string(k) + " on M2");
    m->add_option("--field", in_.field, "Field (default Q)");
    out_options(m);
    m->callback([this, op_result, k] {
      action_ = [this, op_result, k] {
        Session s(global_, in_);
        auto m2 = matrix_algebra(s.field(), 2);
        return op_result(RBOperator::validate(m_operator(m2, k), m2->field().zero()));
      };
    });
  }

  auto* e14 = c->add_subcommand("example14", "Weight-one operator on M2");
  e14->add_option("--field", in_.field, "Field (default Q)");
  out_options(e14);
  e14->callback([this, op_result] {
    action_ = [this, op_result] {
      Session s(global_, in_);
      auto m2 = matrix_algebra(s.field(), 2);
      return op_result(RBOperator::validate(example14(m2), m2->field().one()));
    };
  });

  auto* e16 = c->add_subcommand("example16", "Tensor on M4 solving the associative equation");
  e16->add_option("--field", in_.field, "Field (default Q)");
  out_options(e16);
  e16->callback([this] {
    action_ = [this] {
      Session s(global_, in_);
      auto m4 = matrix_algebra(s.field(), 4);
      s.emit_algebra(*m4);
      s.emit(write_tensor(example16_tensor(m4)));
      return 0;
    };
  });
}

void Commands::add_convert(CLI::App& app) {
  auto* c = app.add_subcommand("convert", "Convert between tensors, operators, skew witnesses and triples");
  algebra_options(c, in_);
  c->add_option("--op", in_.op, "Operator file")->check(CLI::ExistingFile);
  c->add_option("--tensor", in_.tensor, "Tensor file")->check(CLI::ExistingFile);
  c->add_option("--to", to_, "Target")->required()->check(CLI::IsMember({"operator", "tensor", "skew", "triple", "algebra"}));
  c->add_flag("--sandwich", sandwich_, "Tensor to operator by x -> sum a x b instead of the trace form");
  c->add_option("--weight", in_.weight, "Override the operator file's weight");
  c->add_option("--out", in_.out, "Write here instead of stdout");
  c->callback([this] {
    action_ = [this] {
      Session s(global_, in_);
      auto a = s.algebra();
      if (to_ == "algebra") {
        s.emit(write_algebra(*a));
        return 0;
      }
      if (to_ == "operator") {
        if (in_.tensor.empty()) fail(ErrorCode::invalid_spec, "--to operator needs --tensor");
        Tensor2 r = read_tensor(read_file(in_.tensor), a);
        LinearOperator op =
            sandwich_ ? op_from_tensor_sandwich(r) : op_from_tensor_form(r, AssociativeForm::make(a, trace_form(*a)));
        s.emit(write_operator(op, a->field().zero()));
        return 0;
      }
      auto f = s.op(a);
      if (to_ == "tensor") {
        s.emit(write_tensor(tensor_from_op(f.op, AssociativeForm::make(a, trace_form(*a)))));
        return 0;
      }
      const RBOperator r = RBOperator::validate(f.op, f.weight);
      std::ostringstream os;
      if (to_ == "skew") {
        SkewWitness w = rb_to_skew(r);
        os << "skew field=" << w.m.field().to_string() << " shift=" << (w.shift_sign > 0 ? "+1" : "-1")
           << " dim=" << w.m.rows() << '\n';
        for (std::size_t i = 0; i < w.m.rows(); ++i) {
          for (std::size_t j = 0; j < w.m.cols(); ++j) os << (j ? " " : "") << w.m(i, j).to_string();
          os << '\n';
        }
      } else {
        RBTriple t = rb_to_triple(r);
        auto rows = [](const std::vector<Vector>& vs) {
          std::string out;
          for (std::size_t k = 0; k < vs.size(); ++k) out += (k ? ";" : "") + to_string(vs[k]);
          return out;
        };
        std::vector<Vector> drows;
        for (std::size_t i = 0; i < t.d.rows(); ++i) drows.push_back(t.d.row(i));
        os << "triple dim_s=" << t.s.dim() << " dim_i=" << t.i.dim() << '\n';
        os << "s=" << rows(t.s.basis()) << '\n';
        os << "i=" << rows(t.i.basis()) << '\n';
        os << "d=" << rows(drows) << '\n';
      }
      s.emit(os.str());
      return 0;
    };
  });
}

void Commands::add_gen_system(CLI::App& app) {
  auto* c = app.add_subcommand("gen-system", "Polynomial system for RB-operators on J_{n+1}(diag)");
  c->add_option("--algebra", in_.algebra, "Jordan algebra file (instead of --field/--diag)")->check(CLI::ExistingFile);
  c->add_option("--field", in_.field, "Field");
  c->add_option("--diag", diag_, "d_1,...,d_n");
  c->add_option("--weight", in_.weight, "Weight (default 1)");
  c->add_flag("--reduced", reduced_, "Normalized system in the barred variables");
  c->add_option("--z", z_, "Sign z of the reduced system")->check(CLI::IsMember({-1, 1}));
  c->add_option("--out", in_.out, "Write here instead of stdout");
  c->callback([this] {
    action_ = [this] {
      Session s(global_, in_);
      JordanFormSpec spec;
      if (!in_.algebra.empty()) {
        auto a = s.algebra();
        auto d = detect_jordan_form(*a);
        if (!d) fail(ErrorCode::invalid_spec, a->name() + " is not a Jordan algebra of a diagonal form");
        spec.field = a->field();
        spec.diagonal = *d;
      } else {
        if (diag_.empty()) fail(ErrorCode::invalid_spec, "--diag or --algebra is required");
        spec.field = s.field();
        spec.diagonal = parse_elements(spec.field, diag_);
      }
      spec.weight = s.weight(spec.field, 1);
      s.emit(gen_system(spec, reduced_, z_).to_text());
      return 0;
    };
  });
}

void Commands::add_enumerate(CLI::App& app) {
  auto* c = app.add_subcommand("enumerate", "Every RB-operator, automorphism or derivation over F_p");
  algebra_options(c, in_);
  c->add_option("--weight", in_.weight, "Weight (default 0)");
  c->add_option("--what", what_, "rb, automorphisms or derivations")
      ->check(CLI::IsMember({"rb", "automorphisms", "derivations"}));
  c->add_option("--strategy", strategy_, "pruned or raw")->check(CLI::IsMember({"pruned", "raw"}));
  c->add_option("--jobs", in_.jobs, "Parallel chunks")->check(CLI::PositiveNumber);
  c->add_option("--out", in_.out, "Write here instead of stdout");
  c->callback([this] {
    action_ = [this] {
      global_.timing = true;
      Session s(global_, in_);
      auto a = s.algebra();
      const auto strategy = strategy_ == "raw" ? SearchStrategy::raw : SearchStrategy::pruned;
      std::vector<Matrix> found;
      if (what_ == "rb") {
        EnumSpec spec;
        spec.algebra = a;
        spec.weight = s.weight(a->field(), 0);
        spec.chunks = in_.jobs;
        spec.strategy = strategy;
        for (auto& op : enumerate_rb(spec)) found.push_back(std::move(op.matrix));
      } else if (what_ == "automorphisms") {
        found = enumerate_automorphisms(a, in_.jobs, strategy);
      } else {
        found = enumerate_derivations(a, s.weight(a->field(), 1), in_.jobs, strategy);
      }
      if (s.machine()) {
        json j;
        j["algebra"] = a->name();
        j["field"] = a->field().to_string();
        j["what"] = what_;
        j["count"] = found.size();
        j["matrices"] = json::array();
        for (const auto& m : found) j["matrices"].push_back(m.hex());
        s.emit_json(j);
      } else {
        std::ostringstream os;
        for (const auto& m : found) os << m.hex() << ' ' << m.to_string() << '\n';
        os << "count=" << found.size() << '\n';
        s.emit(os.str());
      }
      return 0;
    };
  });
}

void Commands::add_classify(CLI::App& app) {
  auto* c = app.add_subcommand("classify", "Orbits of RB-operators under automorphisms and optional moves");
  algebra_options(c, in_);
  c->add_option("--weight", in_.weight, "Weight (default 0)");
  c->add_flag("--transpose", transpose_, "Add the anti-automorphism move");
  c->add_flag("--scaling", scaling_, "Add scalar multiples (weight 0)");
  c->add_option("--jobs", in_.jobs, "Parallel chunks")->check(CLI::PositiveNumber);
  c->add_option("--out", in_.out, "Write here instead of stdout");
  c->callback([this] {
    action_ = [this] {
      global_.timing = true;
      Session s(global_, in_);
      EnumSpec spec;
      spec.algebra = s.algebra();
      spec.weight = s.weight(spec.algebra->field(), 0);
      spec.chunks = in_.jobs;
      spec.use_transpose = transpose_;
      spec.use_scaling = scaling_;
      validate(spec);
      auto ops = enumerate_rb(spec);
      auto autos = enumerate_automorphisms(spec.algebra, in_.jobs);
      OrbitReport rep = orbit_classify(ops, autos, spec);
      if (s.machine()) {
        json j;
        j["algebra"] = spec.algebra->name();
        j["field"] = spec.algebra->field().to_string();
        j["weight"] = spec.weight.to_string();
        j["automorphisms"] = autos.size();
        j["total"] = rep.total;
        j["orbits"] = json::array();
        for (std::size_t k = 0; k < rep.orbits.size(); ++k) {
          const auto& o = rep.orbits[k];
          j["orbits"].push_back({{"index", k + 1},
                                 {"size", o.size},
                                 {"rep", o.representative.hex()},
                                 {"matrix", o.representative.to_string()},
                                 {"tags",
                                  {{"splitting", o.tags.splitting},
                                   {"r1", o.tags.r_one},
                                   {"case", o.tags.unit_case},
                                   {"r2zero", o.tags.square_zero}}}});
        }
        s.emit_json(j);
      } else {
        s.emit(rep.to_text());
      }
      return 0;
    };
  });
}

void Commands::add_verify(CLI::App& app) {
  auto* c = app.add_subcommand("verify", "Machine-check a classification claim by exhaustive search");
  std::string ids;
  for (const auto& id : claim_ids()) ids += (ids.empty() ? "" : ", ") + id;
  c->add_option("--claim", claim_, ids)->required()->check(CLI::IsMember(claim_ids()));
  c->add_option("--p", p_, "Prime")->check(CLI::PositiveNumber);
  c->add_option("--weight", in_.weight, "Weight (claim default otherwise)");
  c->add_option("--builder", in_.builder, "Algebra override for T2-even-splitting and C5-no-invertible-derivations");
  c->add_option("--jobs", in_.jobs, "Parallel chunks")->check(CLI::PositiveNumber);
  c->callback([this] {
    action_ = [this] {
      global_.timing = true;
      Session s(global_, in_);
      ClaimParams params;
      params.p = p_;
      params.weight = in_.weight;
      if (!in_.builder.empty()) params.algebra = in_.builder;
      params.jobs = in_.jobs;
      params.allow_char2 = global_.allow_char2;
      PassReport rep = verify_claim(claim_, params);
      if (s.machine()) {
        json j;
        j["claim"] = rep.claim;
        j["pass"] = rep.pass;
        j["summary"] = rep.summary;
        j["details"] = rep.details;
        j["counterexample"] = rep.counterexample ? json(rep.counterexample->to_string()) : json(nullptr);
        s.emit_json(j);
      } else {
        s.emit(rep.to_text());
      }
      return rep.pass ? 0 : 1;
    };
  });
}

void Commands::add_info(CLI::App& app) {
  auto* c = app.add_subcommand("info", "Describe an algebra, or list claims and builders");
  algebra_options(c, in_);
  c->callback([this] {
    action_ = [this] {
      Session s(global_, in_);
      std::ostringstream os;
      if (in_.algebra.empty() && in_.builder.empty()) {
        os << "builders: matrix:N jordan:d1,...,dn grassmann2 kaplansky3 cayley-dickson:a1,...,ak sl2 termwise:K\n";
        os << "claims:";
        for (const auto& id : claim_ids()) os << ' ' << id;
        os << '\n';
        s.emit(os.str());
        return 0;
      }
      auto a = s.algebra();
      json j;
      j["name"] = a->name();
      j["field"] = a->field().to_string();
      j["dim"] = a->dim();
      j["basis"] = a->labels();
      j["unit"] = a->unit() ? json(to_string(*a->unit())) : json(nullptr);
      j["graded"] = a->grading().has_value();
      j["commutative"] = a->is_commutative();
      j["associative"] = a->is_associative();
      if (a->quadratic()) {
        try {
          j["quadratic"] = verify_quadratic(*a);
        } catch (const Error&) {
          j["quadratic"] = false;
        }
      } else {
        j["quadratic"] = nullptr;
      }
      auto diag = detect_jordan_form(*a);
      j["jordan_diagonal"] = diag ? json(to_string(*diag)) : json(nullptr);
      if (s.machine()) {
        s.emit_json(j);
        return 0;
      }
      for (const auto& [key, value] : j.items()) {
        os << key << '=';
        if (value.is_string()) {
          os << value.get<std::string>();
        } else if (value.is_array()) {
          for (std::size_t k = 0; k < value.size(); ++k) os << (k ? " " : "") << value[k].get<std::string>();
        } else if (value.is_null()) {
          os << "none";
        } else {
          os << value.dump();
        }
        os << '\n';
      }
      s.emit(os.str());
      return 0;
    };
  });
}

}  // namespace rbx::cli
