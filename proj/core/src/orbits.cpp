#include <deque>
#include <map>
#include <set>
#include <sstream>

#include "rbx/error.hpp"
#include "rbx/jordan.hpp"
#include "rbx/search.hpp"
#include "search_packed.hpp"

namespace rbx {

std::string OrbitTags::to_string() const {
  std::ostringstream os;
  os << "splitting=" << (splitting ? "yes" : "no") << ",r1=" << r_one << ",case=" << unit_case
     << ",r2zero=" << (square_zero ? "yes" : "no");
  return os.str();
}

std::string OrbitReport::to_text() const {
  std::ostringstream os;
  for (std::size_t k = 0; k < orbits.size(); ++k) {
    const auto& o = orbits[k];
    os << "orbit " << k + 1 << ": size=" << o.size << " rep=" << o.representative.hex()
       << " tags=" << o.tags.to_string() << '\n';
  }
  os << "total=" << total << " orbits=" << orbits.size() << '\n';
  return os.str();
}

namespace {

OrbitTags compute_tags(const LinearOperator& op, const FieldElement& weight) {
  OrbitTags t;
  const Diagnostics d = diagnostics(op, weight);
  t.splitting = d.splitting;
  t.square_zero = d.square_zero;
  if (!d.r_one) {
    t.r_one = "none";
  } else if (is_zero(*d.r_one)) {
    t.r_one = "zero";
  } else {
    t.r_one = *d.r_one_scalar ? "scalar" : "other";
  }
  t.unit_case = case_label(RBOperator::validate(op, weight));
  return t;
}

}  // namespace

OrbitReport orbit_classify(const std::vector<LinearOperator>& ops, const std::vector<Matrix>& autos,
                           const EnumSpec& spec) {
  validate(spec);
  const Algebra& a = *spec.algebra;
  const Field& F = a.field();
  packed::Context ctx(a);

  // Each move is X -> L X R for a pair of packed matrices.
  std::vector<std::pair<packed::Packed, packed::Packed>> moves;
  for (const auto& psi : autos) {
    auto p = packed::pack(psi);
    auto inv = packed::inverse(ctx, p);
    if (!inv) fail(ErrorCode::not_automorphism, "singular automorphism");
    moves.emplace_back(std::move(*inv), std::move(p));
  }
  if (spec.use_transpose) {
    const Matrix tau = spec.antiautomorphism ? *spec.antiautomorphism : *default_antiautomorphism(a);
    auto p = packed::pack(tau);
    auto inv = packed::inverse(ctx, p);
    if (!inv) fail(ErrorCode::invalid_spec, "singular anti-automorphism");
    moves.emplace_back(std::move(p), std::move(*inv));
  }
  std::vector<packed::Word> scalars;
  if (spec.use_scaling) {
    for (packed::Word c = 2; c < ctx.p; ++c) scalars.push_back(c);
  }

  std::map<packed::Packed, std::vector<std::size_t>> index;
  for (std::size_t k = 0; k < ops.size(); ++k) {
    if (!check_rb(ops[k], spec.weight)) fail(ErrorCode::not_rb, "orbit_classify input " + std::to_string(k));
    index[packed::pack(ops[k].matrix)].push_back(k);
  }

  OrbitReport report;
  report.total = ops.size();
  std::vector<bool> seen(ops.size(), false);
  for (std::size_t k = 0; k < ops.size(); ++k) {
    if (seen[k]) continue;
    std::set<packed::Packed> orbit;
    std::deque<packed::Packed> queue;
    auto visit = [&](packed::Packed x) {
      if (orbit.insert(x).second) queue.push_back(std::move(x));
    };
    visit(packed::pack(ops[k].matrix));
    while (!queue.empty()) {
      packed::Packed x = std::move(queue.front());
      queue.pop_front();
      for (const auto& [l, r] : moves) visit(packed::multiply(ctx, packed::multiply(ctx, l, x), r));
      for (packed::Word c : scalars) {
        packed::Packed y = x;
        for (auto& e : y) e = ctx.mul(e, c);
        visit(std::move(y));
      }
    }
    Orbit o;
    for (const auto& x : orbit) {
      auto it = index.find(x);
      if (it == index.end()) continue;
      for (std::size_t j : it->second) {
        seen[j] = true;
        o.members.push_back(j);
      }
    }
    std::sort(o.members.begin(), o.members.end());
    o.size = o.members.size();
    o.representative = packed::unpack(F, a.dim(), *orbit.begin());
    o.tags = compute_tags(make_operator(spec.algebra, o.representative), spec.weight);
    report.orbits.push_back(std::move(o));
  }
  std::sort(report.orbits.begin(), report.orbits.end(),
            [](const Orbit& x, const Orbit& y) { return lex_less(x.representative, y.representative); });
  return report;
}

}  // namespace rbx
