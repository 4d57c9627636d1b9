#pragma once

#include <vector>

#include "sparsepm/code.hpp"

namespace sparsepm {

// A code remapped so that its first k nodes hold the message.
struct SystematicCode {
  Code base;    // before remapping
  Code code;    // after remapping; its generator is G_sys
  Matrix remap; // B x B, G_sys = G * remap

  const GeneratorMatrix& g_sys() const noexcept { return code.generator(); }
};

// G_k^{-1}, where G_k is the top B x B block of g. Throws Singular.
Matrix systematic_remap_matrix(const GeneratorMatrix& g);
// G * G_k^{-1}.
GeneratorMatrix remap_generic(const GeneratorMatrix& g);
SystematicCode remap_generic(const Code& base);

// Embeds (sa, sb) into the (alpha+1) x alpha block of the first k nodes:
// upper triangle of sa (with diagonal), strict lower triangle of sb, and the
// diagonal of sb as the last row.
Matrix triangular_inclusion(const MessageMatrix& m);

// Row-major position in the (alpha+1) x alpha block of every packed message
// coordinate under the triangular inclusion.
std::vector<std::size_t> inclusion_positions(std::size_t alpha);
// Permutation matrix Pi with flatten(triangular_inclusion(pack(m))) = Pi m.
Matrix inclusion_permutation(std::size_t alpha, FieldPtr field);

// G_k^{-1} Pi: the remap whose first k nodes store the triangular inclusion
// of the message. Works for any MDS base code.
Matrix inclusion_remap_matrix(const GeneratorMatrix& g);

// Same remap, computed column by column with the closed-form identity-block
// decoder. Requires an untransformed code whose first alpha rows of phi are
// the identity; throws DesignMismatch otherwise. The top block of the
// resulting generator is Pi rather than I.
SystematicCode remap_via_inclusion(const Code& base);

}  // namespace sparsepm
