#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "bezkit/bezoutian.hpp"
#include "bezkit/druzkowski.hpp"
#include "bezkit/injectivity.hpp"
#include "bezkit/parse.hpp"

using json = nlohmann::json;

namespace {

std::string read_file_or_throw(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw bez::Error("cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string fnv1a_digest(const std::string& data) {
    uint64_t h = 1469598103934665603ull;
    for (unsigned char c : data) {
        h ^= c;
        h *= 1099511628211ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

json result_envelope(const std::string& command, const std::string& digest) {
    return json{{"schema", 1},
                {"command", command},
                {"input_digest", digest},
                {"status", "ok"}};
}

void emit(const json& doc) { std::cout << doc.dump(2) << "\n"; }

json dimension_json(const std::optional<size_t>& dim) {
    if (dim) return json(*dim);
    return json("infinite");
}

std::string dimension_str(const std::optional<size_t>& dim) {
    return dim ? std::to_string(*dim) : "infinite";
}

json matrix_json(const bez::RationalMatrix& m) {
    json rows = json::array();
    for (const auto& row : m) {
        json r = json::array();
        for (const auto& e : row) r.push_back(bez::render_rational(e));
        rows.push_back(std::move(r));
    }
    return rows;
}

struct SystemInput {
    std::string path;
    std::string point_text;
    bool use_global = false;
    std::string digest;
    bez::PolySystem system;
    bez::RationalPoint point;

    void load() {
        std::string text = read_file_or_throw(path);
        digest = fnv1a_digest(text);
        system = bez::parse_system_text(text);
        if (point_text.empty())
            point.assign(system.n(), bez::Rational(0));
        else
            point = bez::parse_point(point_text, system.n());
    }
};

struct MatrixInput {
    std::string path;
    std::string digest;
    bez::RationalMatrix matrix;

    void load() {
        std::string text = read_file_or_throw(path);
        digest = fnv1a_digest(text);
        matrix = bez::parse_matrix_text(text);
    }
};

json report_json(const bez::BezoutianReport& r) {
    json payload{{"bezoutian", bez::render_polynomial(r.bezoutian)},
                 {"jacobian", bez::render_polynomial(r.jacobian)},
                 {"reduced_bezoutian", bez::render_polynomial(r.reduced_bezoutian)},
                 {"constant", r.reduced_is_constant},
                 {"unit_ideal", r.ideal_is_unit},
                 {"quotient_dimension", dimension_json(r.quotient_dimension_x)}};
    if (r.reduced_constant_value)
        payload["value"] = bez::render_rational(*r.reduced_constant_value);
    return payload;
}

void print_report(const bez::BezoutianReport& r) {
    std::cout << "reduced bezoutian: " << bez::render_polynomial(r.reduced_bezoutian)
              << "\n";
    std::cout << "constant: " << (r.reduced_is_constant ? "yes" : "no") << "\n";
    if (r.reduced_constant_value)
        std::cout << "value: " << bez::render_rational(*r.reduced_constant_value)
                  << "\n";
    std::cout << "unit ideal: " << (r.ideal_is_unit ? "yes" : "no") << "\n";
    std::cout << "quotient dimension: " << dimension_str(r.quotient_dimension_x)
              << "\n";
}

int dispatch(const std::string& command, SystemInput& sys, MatrixInput& mat,
             bool json_mode, int max_n, size_t samples, uint64_t seed,
             unsigned range, const std::string& csv_path) {
    if (command == "bezoutian" || command == "jacobian") {
        sys.load();
        bez::Polynomial p = (command == "bezoutian") ? bez::bezoutian(sys.system)
                                                     : bez::jacobian(sys.system);
        if (json_mode) {
            json doc = result_envelope(command, sys.digest);
            doc["payload"] = {{command, bez::render_polynomial(p)}};
            emit(doc);
        } else {
            std::cout << bez::render_polynomial(p) << "\n";
        }
        return 0;
    }
    if (command == "reduced-bezoutian") {
        sys.load();
        bez::BezoutianReport r = bez::reduced_bezoutian(sys.system, sys.point);
        if (json_mode) {
            json doc = result_envelope(command, sys.digest);
            json payload = report_json(r);
            payload["point"] = bez::render_point(sys.point);
            doc["payload"] = std::move(payload);
            emit(doc);
        } else {
            print_report(r);
        }
        return 0;
    }
    if (command == "quotient-dim") {
        sys.load();
        auto dim = bez::quotient_dimension(sys.system, sys.point);
        if (json_mode) {
            json doc = result_envelope(command, sys.digest);
            doc["payload"] = {{"point", bez::render_point(sys.point)},
                              {"dimension", dimension_json(dim)}};
            emit(doc);
        } else {
            std::cout << dimension_str(dim) << "\n";
        }
        return 0;
    }
    if (command == "check-injectivity") {
        sys.load();
        bez::InjectivityCertificate cert =
            sys.use_global ? bez::certify_global(sys.system)
                           : bez::certify_point(sys.system, sys.point);
        if (json_mode) {
            json doc = result_envelope(command, sys.digest);
            json payload{{"scope", cert.global ? "global" : "at_point"},
                         {"verdict", bez::verdict_name(cert.verdict)},
                         {"bezoutian", bez::render_polynomial(cert.bezoutian)},
                         {"jacobian", bez::render_polynomial(cert.jacobian)},
                         {"jacobian_is_unit", cert.jacobian_is_unit},
                         {"notes", cert.notes}};
            if (cert.point) payload["point"] = bez::render_point(*cert.point);
            if (cert.reduction) payload["reduction"] = report_json(*cert.reduction);
            doc["payload"] = std::move(payload);
            emit(doc);
        } else {
            std::cout << "verdict: " << bez::verdict_name(cert.verdict) << "\n";
            std::cout << "scope: "
                      << (cert.global ? std::string("global")
                                      : "at (" + bez::render_point(*cert.point) + ")")
                      << "\n";
            std::cout << "bezoutian: " << bez::render_polynomial(cert.bezoutian)
                      << "\n";
            std::cout << "jacobian: " << bez::render_polynomial(cert.jacobian)
                      << "\n";
            std::cout << "jacobian is unit: " << (cert.jacobian_is_unit ? "yes" : "no")
                      << "\n";
            if (cert.reduction) print_report(*cert.reduction);
            for (const auto& note : cert.notes) std::cout << "note: " << note << "\n";
        }
        return 0;
    }
    if (command == "coefficient-matrix") {
        sys.load();
        bez::CoefficientMatrix cm = bez::coefficient_matrix(sys.system, sys.point);
        if (json_mode) {
            json doc = result_envelope(command, sys.digest);
            json basis = json::array();
            for (const auto& m : cm.basis.monomials)
                basis.push_back(bez::render_monomial(m, *sys.system.ring));
            doc["payload"] = {{"point", bez::render_point(sys.point)},
                              {"basis", std::move(basis)},
                              {"matrix", matrix_json(cm.entries)},
                              {"determinant", bez::render_rational(cm.det())}};
            emit(doc);
        } else {
            std::cout << "basis:";
            for (const auto& m : cm.basis.monomials)
                std::cout << " " << bez::render_monomial(m, *sys.system.ring);
            std::cout << "\n";
            for (const auto& row : cm.entries) {
                std::cout << "row:";
                for (const auto& e : row) std::cout << " " << bez::render_rational(e);
                std::cout << "\n";
            }
            std::cout << "determinant: " << bez::render_rational(cm.det()) << "\n";
        }
        return 0;
    }
    if (command == "druzkowski") {
        mat.load();
        bez::DruzkowskiSpec spec = bez::from_matrix(mat.matrix);
        if (json_mode) {
            json doc = result_envelope(command, mat.digest);
            doc["payload"] = {
                {"system_file", bez::render_system(spec.system)},
                {"jacobian", bez::render_rational(spec.jacobian_constant)}};
            emit(doc);
        } else {
            std::cout << bez::render_system(spec.system);
        }
        return 0;
    }
    if (command == "conjugate-search") {
        mat.load();
        auto witness = bez::conjugate_search(mat.matrix, max_n);
        if (json_mode) {
            json doc = result_envelope(command, mat.digest);
            json payload{{"found", witness.has_value()}};
            if (witness) {
                json perm = json::array();
                for (int p : witness->permutation) perm.push_back(p + 1);
                payload["permutation"] = std::move(perm);
                payload["signs"] = witness->signs;
                payload["conjugated"] = matrix_json(witness->conjugated);
            }
            doc["payload"] = std::move(payload);
            emit(doc);
        } else if (!witness) {
            std::cout << "none\n";
        } else {
            std::cout << "permutation:";
            for (int p : witness->permutation) std::cout << " " << (p + 1);
            std::cout << "\nsigns:";
            for (int s : witness->signs) std::cout << " " << (s > 0 ? "+1" : "-1");
            std::cout << "\n";
            for (const auto& row : witness->conjugated) {
                std::cout << "row:";
                for (const auto& e : row) std::cout << " " << bez::render_rational(e);
                std::cout << "\n";
            }
        }
        return 0;
    }
    if (command == "experiment") {
        mat.load();
        auto records = bez::question411_experiment(mat.matrix, samples, seed, range);
        if (!csv_path.empty()) {
            std::ofstream csv(csv_path);
            if (!csv) throw bez::Error("cannot open file: " + csv_path);
            csv << "sample_index,q,constant_value,is_one,elapsed_ms\n";
            for (const auto& rec : records) {
                std::string q;
                for (size_t i = 0; i < rec.q.size(); ++i) {
                    if (i) q += ";";
                    q += bez::render_rational(rec.q[i]);
                }
                csv << rec.sample_index << "," << q << ","
                    << (rec.constant_value ? bez::render_rational(*rec.constant_value)
                                           : "nonconstant")
                    << "," << (rec.is_one ? "true" : "false") << ",";
                char buf[32];
                std::snprintf(buf, sizeof(buf), "%.3f", rec.elapsed_ms);
                csv << buf << "\n";
            }
        }
        if (json_mode) {
            json doc = result_envelope("experiment q411", mat.digest);
            json recs = json::array();
            for (const auto& rec : records) {
                json r{{"sample_index", rec.sample_index},
                       {"q", bez::render_point(rec.q)},
                       {"is_one", rec.is_one}};
                if (rec.constant_value)
                    r["value"] = bez::render_rational(*rec.constant_value);
                recs.push_back(std::move(r));
            }
            doc["payload"] = {{"samples", samples},
                              {"seed", seed},
                              {"range", range},
                              {"records", std::move(recs)}};
            emit(doc);
        } else {
            for (const auto& rec : records) {
                std::cout << "sample " << rec.sample_index << ": q=("
                          << bez::render_point(rec.q) << ") value="
                          << (rec.constant_value
                                  ? bez::render_rational(*rec.constant_value)
                                  : "nonconstant")
                          << " is_one=" << (rec.is_one ? "true" : "false") << "\n";
            }
        }
        return 0;
    }
    throw std::logic_error("unknown command: " + command);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Bezoutian toolkit: injectivity certification of polynomial maps"};
    app.require_subcommand(1);

    bool json_mode = false;
    app.add_flag("--json", json_mode, "emit JSON output");

    SystemInput sys;
    MatrixInput mat;
    int max_n = 6;
    size_t samples = 1;
    uint64_t seed = 0;
    unsigned range = 3;
    std::string csv_path;
    std::string command;

    auto add_system_cmd = [&](const std::string& name, const std::string& desc,
                              bool with_point) {
        CLI::App* c = app.add_subcommand(name, desc);
        c->add_option("system-file", sys.path, "system file")->required();
        if (with_point)
            c->add_option("--point", sys.point_text,
                          "comma-separated rational coordinates (default: origin)");
        c->callback([&, name] { command = name; });
        return c;
    };

    add_system_cmd("bezoutian", "print Bez(f)", false);
    add_system_cmd("jacobian", "print Jac(f)", false);
    add_system_cmd("reduced-bezoutian", "print Bez(f-q) mod (f(x)-q, f(y)-q)", true);
    add_system_cmd("quotient-dim", "print dim_k k[x]/(f-q)", true);
    CLI::App* inj =
        add_system_cmd("check-injectivity", "print an injectivity certificate", true);
    inj->add_flag("--global", sys.use_global, "certify injectivity globally");
    add_system_cmd("coefficient-matrix",
                   "print the standard-monomial basis and the matrix B_ij", true);

    CLI::App* dru = app.add_subcommand("druzkowski",
                                       "build the cubic-linear system of a matrix");
    dru->add_option("--matrix", mat.path, "matrix file")->required();
    dru->callback([&] { command = "druzkowski"; });

    CLI::App* srch = app.add_subcommand(
        "conjugate-search",
        "search permutation/sign conjugations for strict upper triangularity");
    srch->add_option("--matrix", mat.path, "matrix file")->required();
    srch->add_option("--max-n", max_n, "largest matrix size to search");
    srch->callback([&] { command = "conjugate-search"; });

    CLI::App* exp = app.add_subcommand("experiment", "run an experiment harness");
    std::string experiment_name;
    exp->add_option("name", experiment_name, "experiment name (q411)")->required();
    exp->add_option("--matrix", mat.path, "matrix file")->required();
    exp->add_option("--samples", samples, "number of sample points")->required();
    exp->add_option("--seed", seed, "random seed");
    exp->add_option("--range", range, "coordinate range [-range, range]");
    exp->add_option("--csv", csv_path, "write a CSV evidence table here");
    exp->callback([&] {
        if (experiment_name != "q411")
            throw CLI::ValidationError("experiment",
                                       "unknown experiment: " + experiment_name);
        command = "experiment";
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        return dispatch(command, sys, mat, json_mode, max_n, samples, seed, range,
                        csv_path);
    } catch (const bez::NotFiniteFibers& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const bez::NotDruzkowski& e) {
        std::cerr << "error: " << e.what()
                  << " (Jacobian = " << bez::render_polynomial(e.offending_jacobian)
                  << ")\n";
        return 3;
    } catch (const bez::SearchSpaceTooLarge& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const bez::UnitIdealError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const bez::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
}
