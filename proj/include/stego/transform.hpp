// Shared transform parameters for the two invertible decompositions.
#pragma once

#include "stego/common.hpp"

namespace stego {

enum class TransformKind { Iwt, Drt };

struct TransformParams {
    TransformKind kind = TransformKind::Iwt;
    int levels = 0;           // scale count; 0 = per-kind default (IWT 1, DRT 3)
    double support_c = 1.0;   // ripplet support (DRT); 1 with degree 2 = curvelet law
    double degree_d = 2.0;    // ripplet degree (DRT)
    double quant_step = 1.0;  // integerization step for DRT coefficients

    int effective_levels() const {
        if (levels > 0) return levels;
        return kind == TransformKind::Iwt ? 1 : 3;
    }

    void validate() const {
        if (levels < 0) throw parse_error("levels must be >= 1");
        if (kind == TransformKind::Drt) {
            if (support_c <= 0.0) throw parse_error("support_c must be positive");
            if (degree_d < 1.0) throw parse_error("degree_d must be >= 1");
            if (quant_step <= 0.0) throw parse_error("quant_step must be positive");
        }
    }
};

}  // namespace stego
