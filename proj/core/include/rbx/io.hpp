#pragma once

#include <string>
#include <string_view>

#include "rbx/algebra.hpp"
#include "rbx/rb.hpp"
#include "rbx/ybe.hpp"

namespace rbx {

// Plain text formats; grammar in docs/formats.md. Every reader throws
// ParseError with the offending line number.

std::string write_algebra(const Algebra& a);
AlgebraPtr read_algebra(std::string_view text, bool allow_char2 = false);

struct OperatorFile {
  LinearOperator op;
  FieldElement weight;
};

std::string write_operator(const LinearOperator& op, const FieldElement& weight);
/// The header's algebra name must match `a`.
OperatorFile read_operator(std::string_view text, const AlgebraPtr& a);

std::string write_tensor(const Tensor2& r);
Tensor2 read_tensor(std::string_view text, const AlgebraPtr& a);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& text);

}  // namespace rbx
