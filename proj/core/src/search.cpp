#include "rbx/search.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <thread>

#include "rbx/error.hpp"
#include "search_packed.hpp"

namespace rbx {

namespace packed {

Context::Context(const Algebra& a) : p(a.field().characteristic()), n(a.dim()) {
  if (a.field().kind() != FieldKind::prime) {
    fail(ErrorCode::unsupported_field, "search needs a prime field, got " + a.field().to_string());
  }
  c.assign(n * n * n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const Vector& v = a.product(i, j);
      for (std::size_t k = 0; k < n; ++k) c[(i * n + j) * n + k] = static_cast<Word>(v[k].residue());
    }
  }
  if (p <= 65536) {
    inv.assign(p, 0);
    for (Word x = 1; x < p; ++x) inv[x] = static_cast<Word>(pow(x, p - 2));
  }
}

Word Context::pow(Word x, std::uint64_t e) const {
  std::uint64_t r = 1 % p, b = x % p;
  while (e) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return static_cast<Word>(r);
}

Word Context::inverse(Word x) const { return inv.empty() ? pow(x, p - 2) : inv[x]; }

void Context::product(const Word* x, const Word* y, Word* out) const {
  std::fill(out, out + n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    if (!x[i]) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (!y[j]) continue;
      const std::uint64_t s = std::uint64_t(x[i]) * y[j] % p;
      const Word* cij = &c[(i * n + j) * n];
      for (std::size_t k = 0; k < n; ++k) {
        if (cij[k]) out[k] = add(out[k], mul(static_cast<Word>(s), cij[k]));
      }
    }
  }
}

Packed multiply(const Context& ctx, const Packed& a, const Packed& b) {
  const std::size_t n = ctx.n;
  Packed out(n * n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      const Word aik = a[i * n + k];
      if (!aik) continue;
      for (std::size_t j = 0; j < n; ++j) out[i * n + j] = ctx.add(out[i * n + j], ctx.mul(aik, b[k * n + j]));
    }
  }
  return out;
}

std::size_t rank(const Context& ctx, Packed m, std::size_t rows, std::size_t cols) {
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && !m[piv * cols + c]) ++piv;
    if (piv == rows) continue;
    for (std::size_t k = 0; k < cols; ++k) std::swap(m[r * cols + k], m[piv * cols + k]);
    const Word s = ctx.inverse(m[r * cols + c]);
    for (std::size_t k = 0; k < cols; ++k) m[r * cols + k] = ctx.mul(m[r * cols + k], s);
    for (std::size_t i = r + 1; i < rows; ++i) {
      const Word f = m[i * cols + c];
      if (!f) continue;
      for (std::size_t k = 0; k < cols; ++k) m[i * cols + k] = ctx.sub(m[i * cols + k], ctx.mul(f, m[r * cols + k]));
    }
    ++r;
  }
  return r;
}

std::optional<Packed> inverse(const Context& ctx, const Packed& m) {
  const std::size_t n = ctx.n, w = 2 * n;
  Packed aug(n * w, 0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug[i * w + j] = m[i * n + j];
    aug[i * w + n + i] = 1;
  }
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && !aug[piv * w + c]) ++piv;
    if (piv == n) return std::nullopt;
    for (std::size_t k = 0; k < w; ++k) std::swap(aug[c * w + k], aug[piv * w + k]);
    const Word s = ctx.inverse(aug[c * w + c]);
    for (std::size_t k = 0; k < w; ++k) aug[c * w + k] = ctx.mul(aug[c * w + k], s);
    for (std::size_t i = 0; i < n; ++i) {
      const Word f = aug[i * w + c];
      if (i == c || !f) continue;
      for (std::size_t k = 0; k < w; ++k) aug[i * w + k] = ctx.sub(aug[i * w + k], ctx.mul(f, aug[c * w + k]));
    }
  }
  Packed out(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) out[i * n + j] = aug[i * w + n + j];
  }
  return out;
}

Packed pack(const Matrix& m) {
  Packed out(m.rows() * m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) out[i * m.cols() + j] = static_cast<Word>(m(i, j).residue());
  }
  return out;
}

Matrix unpack(const Field& f, std::size_t n, const Packed& x) {
  Matrix m(f, n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) m(i, j) = f.element(x[i * n + j]);
  }
  return m;
}

namespace {

/// Backtracking over the columns of X for one of three equation families.
/// Every family reads, for a pair (i, j) of assigned columns,
///   sum_m v_m X[:, m] = target
/// with v and target determined by columns i and j.
class Engine {
public:
  Engine(const Context& ctx, Kind kind, Word weight, const std::vector<std::vector<std::size_t>>& rows, bool prune)
      : ctx_(ctx), kind_(kind), w_(weight), rows_(rows), prune_(prune), n_(ctx.n), x_(n_ * n_, 0) {
    v_.resize(n_);
    target_.resize(n_);
    a_.resize(n_);
    b_.resize(n_);
    sys_.resize(n_ * n_ * 2 * n_);
  }

  std::uint64_t column_count(std::size_t j) const {
    std::uint64_t total = 1;
    for (std::size_t k = 0; k < rows_[j].size(); ++k) total *= ctx_.p;
    return total;
  }

  void run(std::uint64_t first, std::uint64_t last, std::vector<Packed>& out) {
    for (std::uint64_t code = first; code < last; ++code) {
      set_column(0, code);
      descend(1, out);
    }
  }

private:
  void set_column(std::size_t j, std::uint64_t code) {
    for (std::size_t i = 0; i < n_; ++i) x_[i * n_ + j] = 0;
    for (std::size_t r : rows_[j]) {
      x_[r * n_ + j] = static_cast<Word>(code % ctx_.p);
      code /= ctx_.p;
    }
  }

  void descend(std::size_t k, std::vector<Packed>& out) {
    if (prune_ && !consistent(k)) return;
    if (k == n_) {
      if (prune_ || direct_check()) {
        if (kind_ != Kind::automorphism || rank(ctx_, x_, n_, n_) == n_) out.push_back(x_);
      }
      return;
    }
    const std::uint64_t count = column_count(k);
    for (std::uint64_t code = 0; code < count; ++code) {
      set_column(k, code);
      descend(k + 1, out);
    }
    for (std::size_t i = 0; i < n_; ++i) x_[i * n_ + k] = 0;
  }

  void column(std::size_t j, Word* out) const {
    for (std::size_t i = 0; i < n_; ++i) out[i] = x_[i * n_ + j];
  }

  /// Fills v_ and target_ for the pair (i, j).
  void pair_equation(std::size_t i, std::size_t j) {
    std::vector<Word>& a = a_;
    std::vector<Word>& b = b_;
    column(i, a.data());
    column(j, b.data());
    const Word* cij = &ctx_.c[(i * n_ + j) * n_];
    switch (kind_) {
      case Kind::rb: {
        ctx_.product(a.data(), b.data(), target_.data());
        // v = R(b_i) b_j + b_i R(b_j) + w b_i b_j
        for (std::size_t k = 0; k < n_; ++k) v_[k] = ctx_.mul(w_, cij[k]);
        for (std::size_t s = 0; s < n_; ++s) {
          if (a[s]) {
            const Word* csj = &ctx_.c[(s * n_ + j) * n_];
            for (std::size_t k = 0; k < n_; ++k) v_[k] = ctx_.add(v_[k], ctx_.mul(a[s], csj[k]));
          }
          if (b[s]) {
            const Word* cis = &ctx_.c[(i * n_ + s) * n_];
            for (std::size_t k = 0; k < n_; ++k) v_[k] = ctx_.add(v_[k], ctx_.mul(b[s], cis[k]));
          }
        }
        break;
      }
      case Kind::automorphism:
        std::copy(cij, cij + n_, v_.begin());
        ctx_.product(a.data(), b.data(), target_.data());
        break;
      case Kind::derivation: {
        std::copy(cij, cij + n_, v_.begin());
        ctx_.product(a.data(), b.data(), target_.data());
        for (std::size_t k = 0; k < n_; ++k) target_[k] = ctx_.mul(w_, target_[k]);
        for (std::size_t s = 0; s < n_; ++s) {
          if (a[s]) {
            const Word* csj = &ctx_.c[(s * n_ + j) * n_];
            for (std::size_t k = 0; k < n_; ++k) target_[k] = ctx_.add(target_[k], ctx_.mul(a[s], csj[k]));
          }
          if (b[s]) {
            const Word* cis = &ctx_.c[(i * n_ + s) * n_];
            for (std::size_t k = 0; k < n_; ++k) target_[k] = ctx_.add(target_[k], ctx_.mul(b[s], cis[k]));
          }
        }
        break;
      }
    }
  }

  /// Columns 0..k-1 are assigned. Each pair of assigned columns gives a
  /// linear system in the unassigned columns; reject when some system has no
  /// solution.
  bool consistent(std::size_t k) {
    const std::size_t u = n_ - k, width = u + n_;
    std::size_t rows = 0;
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = 0; j < k; ++j) {
        pair_equation(i, j);
        Word* row = &sys_[rows * width];
        for (std::size_t m = 0; m < u; ++m) row[m] = v_[k + m];
        // rhs = target - sum_{m<k} v_m X[:, m]
        for (std::size_t r = 0; r < n_; ++r) {
          Word acc = target_[r];
          for (std::size_t m = 0; m < k; ++m) {
            if (v_[m]) acc = ctx_.sub(acc, ctx_.mul(v_[m], x_[r * n_ + m]));
          }
          row[u + r] = acc;
        }
        ++rows;
      }
    }
    std::size_t rank = 0;
    for (std::size_t c = 0; c < u && rank < rows; ++c) {
      std::size_t piv = rank;
      while (piv < rows && !sys_[piv * width + c]) ++piv;
      if (piv == rows) continue;
      if (piv != rank) {
        for (std::size_t t = 0; t < width; ++t) std::swap(sys_[rank * width + t], sys_[piv * width + t]);
      }
      const Word s = ctx_.inverse(sys_[rank * width + c]);
      for (std::size_t t = c; t < width; ++t) sys_[rank * width + t] = ctx_.mul(sys_[rank * width + t], s);
      for (std::size_t i = rank + 1; i < rows; ++i) {
        const Word f = sys_[i * width + c];
        if (!f) continue;
        for (std::size_t t = c; t < width; ++t) {
          sys_[i * width + t] = ctx_.sub(sys_[i * width + t], ctx_.mul(f, sys_[rank * width + t]));
        }
      }
      ++rank;
    }
    for (std::size_t i = rank; i < rows; ++i) {
      for (std::size_t t = u; t < width; ++t) {
        if (sys_[i * width + t]) return false;
      }
    }
    return true;
  }

  /// The defining identity on every pair, evaluated directly.
  bool direct_check() {
    for (std::size_t i = 0; i < n_; ++i) {
      for (std::size_t j = 0; j < n_; ++j) {
        pair_equation(i, j);
        for (std::size_t r = 0; r < n_; ++r) {
          Word acc = 0;
          for (std::size_t m = 0; m < n_; ++m) acc = ctx_.add(acc, ctx_.mul(x_[r * n_ + m], v_[m]));
          if (acc != target_[r]) return false;
        }
      }
    }
    return true;
  }

  const Context& ctx_;
  Kind kind_;
  Word w_;
  const std::vector<std::vector<std::size_t>>& rows_;
  bool prune_;
  std::size_t n_;
  Packed x_;
  std::vector<Word> v_, target_, a_, b_, sys_;
};

}  // namespace

std::vector<Packed> search(const Algebra& a, Kind kind, const FieldElement& weight, std::size_t chunks,
                           SearchStrategy strategy) {
  Context ctx(a);
  const std::size_t n = ctx.n;
  const double bits = std::log2(static_cast<double>(ctx.p));
  const bool prune = strategy == SearchStrategy::pruned;
  if (!prune && double(n * n) * bits > 26.0 + 1e-9) {
    fail(ErrorCode::search_space_too_large, "raw search needs dim^2 log2 p <= 26");
  }
  if (prune && (n > 8 || double(n) * bits > 22.0 + 1e-9)) {
    fail(ErrorCode::search_space_too_large, "pruned search needs dim log2 p <= 22 and dim <= 8");
  }
  if (weight.field() != a.field()) fail(ErrorCode::field_mismatch, "weight lies in another field");

  // Rows allowed to be nonzero in each column: graded automorphisms of the
  // pruned strategy stay in the homogeneous component.
  std::vector<std::vector<std::size_t>> rows(n);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < n; ++i) {
      const bool graded = kind == Kind::automorphism && a.grading();
      if (!graded || (*a.grading())[i] == (*a.grading())[j]) rows[j].push_back(i);
    }
  }
  if (!prune) {
    for (auto& r : rows) {
      r.clear();
      for (std::size_t i = 0; i < n; ++i) r.push_back(i);
    }
  }

  const Word w = static_cast<Word>(weight.residue());
  std::uint64_t first_count = 1;
  for (std::size_t k = 0; k < rows[0].size(); ++k) first_count *= ctx.p;
  chunks = std::max<std::size_t>(1, std::min<std::uint64_t>(chunks, first_count));

  std::vector<std::vector<Packed>> parts(chunks);
  std::vector<std::exception_ptr> errors(chunks);
  auto work = [&](std::size_t c) {
    try {
      Engine engine(ctx, kind, w, rows, prune);
      const std::uint64_t lo = first_count * c / chunks, hi = first_count * (c + 1) / chunks;
      engine.run(lo, hi, parts[c]);
    } catch (...) {
      errors[c] = std::current_exception();
    }
  };
  if (chunks == 1) {
    work(0);
  } else {
    std::vector<std::thread> threads;
    for (std::size_t c = 0; c < chunks; ++c) threads.emplace_back(work, c);
    for (auto& t : threads) t.join();
  }
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }

  std::vector<Packed> out;
  for (auto& part : parts) out.insert(out.end(), part.begin(), part.end());
  if (!prune && kind == Kind::automorphism && a.grading()) {
    const auto& g = *a.grading();
    std::erase_if(out, [&](const Packed& x) {
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
          if (x[i * n + j] && g[i] != g[j]) return true;
        }
      }
      return false;
    });
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace packed

namespace {

bool is_matrix_algebra(const Algebra& a, std::size_t& n) {
  n = static_cast<std::size_t>(std::lround(std::sqrt(double(a.dim()))));
  return n * n == a.dim() && !a.labels().empty() && a.labels()[0] == "e11" &&
         a.has_same_structure(*matrix_algebra(a.field(), n));
}

}  // namespace

void validate(const EnumSpec& spec) {
  if (!spec.algebra) fail(ErrorCode::invalid_spec, "no algebra");
  if (spec.algebra->field().kind() != FieldKind::prime) {
    fail(ErrorCode::unsupported_field, "search needs a prime field");
  }
  if (spec.use_scaling && !spec.weight.is_zero()) {
    fail(ErrorCode::invalid_spec, "scaling is only an orbit move for weight zero");
  }
  if (spec.use_transpose) {
    if (!spec.algebra->is_associative()) fail(ErrorCode::invalid_spec, "transpose needs an associative algebra");
    std::size_t n = 0;
    if (!spec.antiautomorphism && !spec.algebra->is_commutative() && !is_matrix_algebra(*spec.algebra, n)) {
      fail(ErrorCode::invalid_spec, "no anti-automorphism for the transpose move");
    }
    if (spec.antiautomorphism && !check_antiautomorphism(*spec.algebra, *spec.antiautomorphism)) {
      fail(ErrorCode::invalid_spec, "supplied map is not an anti-automorphism");
    }
  }
}

std::vector<LinearOperator> enumerate_rb(const EnumSpec& spec) {
  validate(spec);
  const Algebra& a = *spec.algebra;
  auto found = packed::search(a, packed::Kind::rb, spec.weight, spec.chunks, spec.strategy);
  std::vector<LinearOperator> out;
  out.reserve(found.size());
  for (const auto& x : found) out.push_back(make_operator(spec.algebra, packed::unpack(a.field(), a.dim(), x)));
  return out;
}

std::vector<Matrix> enumerate_automorphisms(const AlgebraPtr& a, std::size_t chunks, SearchStrategy strategy) {
  auto found = packed::search(*a, packed::Kind::automorphism, a->field().zero(), chunks, strategy);
  std::vector<Matrix> out;
  for (const auto& x : found) out.push_back(packed::unpack(a->field(), a->dim(), x));
  return out;
}

std::vector<Matrix> enumerate_derivations(const AlgebraPtr& a, const FieldElement& weight, std::size_t chunks,
                                          SearchStrategy strategy) {
  auto found = packed::search(*a, packed::Kind::derivation, weight, chunks, strategy);
  std::vector<Matrix> out;
  for (const auto& x : found) out.push_back(packed::unpack(a->field(), a->dim(), x));
  return out;
}

bool lex_less(const Matrix& lhs, const Matrix& rhs) {
  for (std::size_t i = 0; i < lhs.rows(); ++i) {
    for (std::size_t j = 0; j < lhs.cols(); ++j) {
      if (FieldElement::canonical_less(lhs(i, j), rhs(i, j))) return true;
      if (FieldElement::canonical_less(rhs(i, j), lhs(i, j))) return false;
    }
  }
  return false;
}

std::optional<Matrix> default_antiautomorphism(const Algebra& a) {
  std::size_t n = 0;
  if (is_matrix_algebra(a, n)) return matrix_transpose(a.field(), n);
  if (a.is_commutative()) return Matrix::identity(a.field(), a.dim());
  return std::nullopt;
}

}  // namespace rbx
