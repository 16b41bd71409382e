#include "koszul/cli.hpp"

#include <fstream>
#include <memory>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "koszul/json_io.hpp"

namespace koszul {

namespace {

struct CommonArgs {
    std::string file;
    int maxdeg = -1;  // -1 = use the file's bound
    int size_guard = 20000;
};

void attach_common(CLI::App* cmd, CommonArgs& args) {
    cmd->add_option("file", args.file, "presentation file")->required();
    cmd->add_option("--maxdeg", args.maxdeg, "override the truncation degree");
    cmd->add_option("--size-guard", args.size_guard,
                    "largest allowed tensor block (columns)");
}

std::unique_ptr<Session> open_session(const CommonArgs& args) {
    std::ifstream in(args.file);
    if (!in) throw ValidationError("cannot open '" + args.file + "'");
    std::stringstream text;
    text << in.rdbuf();
    Presentation pres = parse_presentation(text.str());
    std::optional<int> maxdeg;
    if (args.maxdeg >= 0) maxdeg = args.maxdeg;
    return std::make_unique<Session>(std::move(pres), maxdeg, args.size_guard);
}

Json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ValidationError("cannot open '" + path + "'");
    try {
        return Json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        throw ValidationError("bad JSON in '" + path + "': " + e.what());
    }
}

void emit(std::ostream& out, const Json& j) { out << j.dump(2) << "\n"; }

int run_verify(Session& session, std::ostream& out) {
    const Context c = session.ctx();
    int maxdeg = session.maxdeg();
    int top = c.res.top();
    Json checks = Json::array();
    bool all_ok = true;
    auto record = [&](const std::string& name, bool ok, const std::string& witness) {
        Json entry;
        entry["name"] = name;
        entry["status"] = ok ? "pass" : "fail";
        if (!ok && !witness.empty()) entry["witness"] = witness;
        checks.push_back(std::move(entry));
        all_ok = all_ok && ok;
    };

    {
        const ExactnessReport& report = session.exactness();
        std::string witness;
        if (!report.ok) {
            witness = "homology at (n=" + std::to_string(report.first_failure->first) +
                      ", d=" + std::to_string(report.first_failure->second) + ")";
        }
        record("exactness", report.ok, witness);
    }
    {
        std::string witness;
        record("complex", verify_complex(c, top, &witness), witness);
    }
    {
        bool ok = true;
        std::string witness;
        for (int n = 1; n <= top && ok; ++n) {
            for (int r = 0; r <= n && ok; ++r) {
                ok = c.comult.verify_reconstruction(n, r, &witness);
            }
        }
        record("reconstruction", ok, witness);
    }
    {
        bool ok = true;
        std::string witness;
        for (int n = 2; n <= maxdeg && ok; ++n) {
            for (int r = 0; r <= n && ok; ++r) {
                for (int s = 0; r + s <= n && ok; ++s) {
                    ok = c.comult.verify_coassociativity(n, r, s, &witness);
                }
            }
        }
        record("coassociativity", ok, witness);
    }
    {
        bool ok = true;
        std::string witness;
        for (int n = 1; n + 2 <= top && ok; ++n) {
            for (int r = 1; n + r + 1 <= top && ok; ++r) {
                ok = verify_lifting_identity(c, n, r, &witness);
            }
        }
        record("lifting", ok, witness);
    }
    {
        std::string witness;
        record("dual_associativity", verify_dual_associativity(c, maxdeg, &witness), witness);
    }

    Json j;
    j["maxdeg"] = maxdeg;
    j["status"] = all_ok ? "pass" : "fail";
    j["checks"] = std::move(checks);
    emit(out, j);
    return all_ok ? 0 : 3;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact invariants of quadratic quiver algebra presentations"};
    app.require_subcommand(1);

    CommonArgs resolve_args;
    CLI::App* resolve_cmd =
        app.add_subcommand("resolve", "syzygy levels and their generators");
    attach_common(resolve_cmd, resolve_args);

    CommonArgs comult_args;
    int comult_n = 0, comult_r = 0;
    CLI::App* comult_cmd =
        app.add_subcommand("comult", "one slice of the splitting coefficients");
    attach_common(comult_cmd, comult_args);
    comult_cmd->add_option("--n", comult_n, "level to split")->required();
    comult_cmd->add_option("--r", comult_r, "left factor degree")->required();

    CommonArgs hh_args;
    int hh_n = 0;
    int hh_weight = -1;
    bool hh_weight_set = false;
    CLI::App* hh_cmd = app.add_subcommand("hh", "Hochschild cohomology dimensions");
    attach_common(hh_cmd, hh_args);
    hh_cmd->add_option("--n", hh_n, "cohomological degree")->required();
    hh_cmd->add_option("--weight", hh_weight, "internal degree")
        ->each([&](const std::string&) { hh_weight_set = true; });

    CommonArgs cup_args;
    std::string eta_path, theta_path;
    bool cup_reduce = false;
    CLI::App* cup_cmd = app.add_subcommand("cup", "cup product of two cochains");
    attach_common(cup_cmd, cup_args);
    cup_cmd->add_option("--eta", eta_path, "first cochain (JSON)")->required();
    cup_cmd->add_option("--theta", theta_path, "second cochain (JSON)")->required();
    cup_cmd->add_flag("--reduce", cup_reduce, "also reduce the product modulo coboundaries");

    CommonArgs dual_args;
    int dual_m = 0, dual_n = 0;
    CLI::App* dual_cmd =
        app.add_subcommand("dual", "structure constants of the dual algebra");
    attach_common(dual_cmd, dual_args);
    dual_cmd->add_option("--m", dual_m, "degree of the left factor")->required();
    dual_cmd->add_option("--n", dual_n, "degree of the right factor")->required();

    CommonArgs center_args;
    CLI::App* center_cmd =
        app.add_subcommand("center", "graded centre of the dual algebra");
    attach_common(center_cmd, center_args);

    CommonArgs verify_args;
    CLI::App* verify_cmd =
        app.add_subcommand("verify", "run every structural check and report");
    attach_common(verify_cmd, verify_args);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            // --help and friends
            return app.exit(e, out, err);
        }
        app.exit(e, out, err);
        return 2;
    }

    try {
        if (resolve_cmd->parsed()) {
            auto session = open_session(resolve_args);
            emit(out, resolution_to_json(session->ctx(), session->maxdeg()));
        } else if (comult_cmd->parsed()) {
            auto session = open_session(comult_args);
            if (comult_r < 0 || comult_r > comult_n || comult_n > session->resolution().top()) {
                throw ValidationError("need 0 <= r <= n <= computed levels");
            }
            emit(out, slice_to_json(session->comult().slice(comult_n, comult_r)));
        } else if (hh_cmd->parsed()) {
            auto session = open_session(hh_args);
            session->require_koszul();
            if (hh_weight_set) {
                emit(out, hh_dims_to_json(cohomology_dims(session->ctx(), hh_n, hh_weight)));
            } else {
                std::vector<HHDims> all = cohomology_dims_all(session->ctx(), hh_n);
                Json weights = Json::array();
                int total_hh = 0, total_im = 0, total_ker = 0;
                for (const HHDims& d : all) {
                    weights.push_back(hh_dims_to_json(d));
                    total_hh += d.dim_hh;
                    total_im += d.dim_im;
                    total_ker += d.dim_ker;
                }
                Json j;
                j["n"] = hh_n;
                j["weights"] = std::move(weights);
                j["total"] = Json{{"dim_ker", total_ker},
                                  {"dim_im", total_im},
                                  {"dim_hh", total_hh}};
                emit(out, j);
            }
        } else if (cup_cmd->parsed()) {
            auto session = open_session(cup_args);
            session->require_koszul();
            Context c = session->ctx();
            Cochain eta = cochain_from_json(c, load_json_file(eta_path));
            Cochain theta = cochain_from_json(c, load_json_file(theta_path));
            Cochain product = cup(c, eta, theta);
            Json j;
            j["n"] = eta.degree;
            j["m"] = theta.degree;
            Json values = Json::array();
            for (const AlgebraElement& v : product.values) {
                values.push_back(algebra_element_to_json(c.alg, v));
            }
            j["representative"] = std::move(values);
            if (cup_reduce) {
                j["class"] = class_to_json(reduce_class(c, product));
            }
            emit(out, j);
        } else if (dual_cmd->parsed()) {
            auto session = open_session(dual_args);
            session->require_koszul();
            if (dual_m < 0 || dual_n < 0 ||
                dual_m + dual_n > session->resolution().top()) {
                throw ValidationError("need m, n >= 0 with m + n within the computed levels");
            }
            emit(out, dual_table_to_json(session->ctx(), dual_m, dual_n));
        } else if (center_cmd->parsed()) {
            auto session = open_session(center_args);
            session->require_koszul();
            emit(out, centre_to_json(session->ctx(), session->maxdeg()));
        } else if (verify_cmd->parsed()) {
            auto session = open_session(verify_args);
            return run_verify(*session, out);
        }
    } catch (const ExactnessError& e) {
        err << "error: " << e.what() << "\n";
        return 3;
    } catch (const KoszulViolationError& e) {
        err << "error: " << e.what() << "\n";
        return 3;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}

}  // namespace koszul
