#include "bezkit/injectivity.hpp"

namespace bez {

std::string verdict_name(Verdict v) {
    switch (v) {
        case Verdict::CertifiedInjective: return "CertifiedInjective";
        case Verdict::NotInjectiveOverClosure: return "NotInjectiveOverClosure";
        case Verdict::Inconclusive: return "Inconclusive";
    }
    return "?";
}

namespace {
bool is_unit_constant(const Polynomial& p) {
    return p.is_constant() && !p.is_zero();
}
}  // namespace

InjectivityCertificate certify_point(const PolySystem& f, const RationalPoint& q) {
    InjectivityCertificate cert;
    cert.global = false;
    cert.point = q;

    BezoutianReport report = reduced_bezoutian(f, q);
    cert.bezoutian = report.bezoutian;
    cert.jacobian = report.jacobian;
    cert.jacobian_is_unit = is_unit_constant(report.jacobian);

    if (report.reduced_is_constant) {
        cert.verdict = Verdict::CertifiedInjective;
        if (report.ideal_is_unit)
            cert.notes.push_back("the fiber over q is empty (unit ideal)");
    } else if (cert.jacobian_is_unit) {
        cert.verdict = Verdict::NotInjectiveOverClosure;
        cert.notes.push_back(
            "converse applies only over an algebraically closed field of "
            "characteristic 0; no claim is made over Q itself");
    } else {
        cert.verdict = Verdict::Inconclusive;
        cert.notes.push_back(
            "constancy of the reduced Bezoutian is sufficient but not "
            "necessary for injectivity at q");
    }
    cert.reduction = std::move(report);
    return cert;
}

InjectivityCertificate certify_global(const PolySystem& f) {
    InjectivityCertificate cert;
    cert.global = true;
    cert.bezoutian = bezoutian(f);
    cert.jacobian = jacobian(f);
    cert.jacobian_is_unit = is_unit_constant(cert.jacobian);

    if (cert.bezoutian.is_constant()) {
        cert.verdict = Verdict::CertifiedInjective;
        cert.notes.push_back("injective on all rational points");
        if (cert.jacobian_is_unit)
            cert.notes.push_back(
                "with invertible Jacobian, injectivity on rational points "
                "implies invertibility over char-0 fields");
    } else {
        cert.verdict = Verdict::Inconclusive;
        cert.notes.push_back(
            "Bez(f) is nonconstant; per-point certification may still succeed");
    }
    return cert;
}

FiberDimensionReport fiber_dimension_report(const PolySystem& f,
                                            const RationalPoint& q) {
    FiberDimensionReport report;
    report.dimension = quotient_dimension(f, q);
    if (report.dimension) {
        report.bound_statement =
            "|f^-1(q)| <= " + std::to_string(*report.dimension) +
            " over any field extension";
    } else {
        report.bound_statement = "quotient is infinite-dimensional; no bound";
    }
    return report;
}

}  // namespace bez
