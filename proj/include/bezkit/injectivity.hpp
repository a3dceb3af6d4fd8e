#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bezkit/bezoutian.hpp"

namespace bez {

enum class Verdict { CertifiedInjective, NotInjectiveOverClosure, Inconclusive };

std::string verdict_name(Verdict v);

struct InjectivityCertificate {
    bool global = false;
    std::optional<RationalPoint> point;  // set iff !global
    Verdict verdict = Verdict::Inconclusive;
    Polynomial bezoutian;
    Polynomial jacobian;
    bool jacobian_is_unit = false;
    // Reduction evidence; absent for global certificates, which only need
    // polynomial-level constancy.
    std::optional<BezoutianReport> reduction;
    std::vector<std::string> notes;
};

// Certifies |f^{-1}(q)| <= 1 when the reduced Bezoutian at q is constant.
// Throws NotFiniteFibers when (f - q) is neither zero-dimensional nor unit.
InjectivityCertificate certify_point(const PolySystem& f, const RationalPoint& q);

// Certifies injectivity on rational points when Bez(f) itself is constant.
InjectivityCertificate certify_global(const PolySystem& f);

struct FiberDimensionReport {
    std::optional<size_t> dimension;  // nullopt = infinite, no bound
    std::string bound_statement;
};

FiberDimensionReport fiber_dimension_report(const PolySystem& f,
                                            const RationalPoint& q);

}  // namespace bez
