#pragma once

#include "freedist/polynomial.hpp"
#include "freedist/vector_field.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace freedist {

// Grammar (precedence ^ > unary - > * > binary +,-):
//   expr   := term (('+'|'-') term)*
//   term   := factor ('*' factor)*
//   factor := atom ('^' uint)? | '-' factor | '(' expr ')' ('^' uint)?
//   atom   := rational | 'sqrt2' | 'x' uint | 'y[' uint ',' uint ']'
//           | 'Dx' uint | 'Dy[' uint ',' uint ']'
// y[k,j] with k > j denotes -y[j,k]; D-atoms are only legal in vector fields.
Polynomial parse_expression(std::string_view text, const Chart& chart);
VectorField parse_vector_field(std::string_view text, const Chart& chart);

// Constant expression without coordinates, e.g. "1/2*sqrt2".
ExactScalar parse_scalar(std::string_view text);

// "l: <int>" then "X<i>: <vector field>" for i = 1..l; '#' starts a comment line.
struct DistributionSpec {
    int l = 0;
    std::vector<VectorField> fields;
};
DistributionSpec parse_frame_file(std::string_view text);

}  // namespace freedist
