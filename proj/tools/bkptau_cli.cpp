#include "bkptau/fock.hpp"
#include "bkptau/hierarchy.hpp"
#include "bkptau/json_io.hpp"
#include "bkptau/schur.hpp"
#include "bkptau/tau.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

using namespace bkptau;
using nlohmann::json;

namespace {

constexpr int kOk = 0;
constexpr int kFalse = 1;
constexpr int kInputError = 2;

struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Options {
    std::string kind;
    std::string lambda;
    std::string constants;
    std::string spec_file;
    std::string poly;
    std::string poly2;
    std::string word;
    unsigned k{0};
    unsigned d{0};
    unsigned m{2};
    int order{20};
    unsigned trials{50};
    std::uint64_t seed{1};
    bool json{false};
    std::string out;
};

std::vector<unsigned> parse_parts(const std::string& text) {
    std::vector<unsigned> parts;
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        if (item.empty()) continue;
        std::size_t used = 0;
        long v = 0;
        try {
            v = std::stol(item, &used);
        } catch (const std::exception&) {
            throw InputError("lambda entries must be integers: '" + item + "'");
        }
        if (used != item.size() || v < 0) throw InputError("lambda entries must be nonnegative integers: '" + item + "'");
        parts.push_back(static_cast<unsigned>(v));
    }
    return parts;
}

TauSpec load_spec(const Options& o) {
    if (!o.spec_file.empty()) {
        std::ifstream in(o.spec_file);
        if (!in) throw InputError("cannot open spec file " + o.spec_file);
        try {
            return tau_spec_from_json(json::parse(in));
        } catch (const json::exception& e) {
            throw InputError(std::string("malformed spec file: ") + e.what());
        }
    }
    if (o.lambda.empty()) throw InputError("--lambda or --spec is required");
    TauSpec spec = TauSpec::plain(ExtendedStrictPartition(parse_parts(o.lambda)));
    if (!o.constants.empty()) {
        auto rows = parse_constants(o.constants);
        if (rows.size() > spec.lambda.length()) throw InputError("more constant rows than parts of lambda");
        rows.resize(spec.lambda.length());
        spec.constants = std::move(rows);
    }
    return spec;
}

class Output {
public:
    explicit Output(const std::string& path) {
        if (!path.empty()) {
            file_.open(path);
            if (!file_) throw InputError("cannot write " + path);
        }
    }
    std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

private:
    std::ofstream file_;
};

int report_poly(const Options& o, const Poly& p) {
    Output out(o.out);
    if (o.json)
        out.stream() << poly_json(p).dump() << "\n";
    else
        out.stream() << canonical_string(p) << "\n";
    return kOk;
}

int report_defect(const Options& o, const std::string& label, const DefectReport& r) {
    Output out(o.out);
    if (o.json) {
        out.stream() << to_json(r).dump() << "\n";
    } else if (r.is_zero) {
        out.stream() << label << ": identity holds\n";
    } else {
        out.stream() << label << ": identity fails\n";
        out.stream() << "witness: " << r.witness->to_string() << "\n";
        out.stream() << "defect: " << canonical_string(r.defect) << "\n";
    }
    return r.is_zero ? kOk : kFalse;
}

int cmd_tau(const Options& o) {
    if (o.kind == "kdv") return report_poly(o, kdv_tau(o.k));
    if (o.kind == "kdv-half") return report_poly(o, kdv_half(o.k));
    if (o.kind == "schur") return report_poly(o, schur_lambda(Partition(parse_parts(o.lambda))));
    const TauSpec spec = load_spec(o);
    if (o.kind == "bkp") return report_poly(o, tau_bkp(spec));
    if (o.kind == "kp-square") return report_poly(o, tau_kp_square(spec));
    if (o.kind == "qschur") return report_poly(o, q_schur(spec.lambda));
    throw InputError("unknown tau kind " + o.kind);
}

int verify_caianiello(const Options& o) {
    if ((o.m + o.k) % 2 != 0) throw InputError("caianiello needs m + k even");
    if (o.m > 8 || o.k > 8) throw InputError("caianiello blocks are limited to 8");
    std::mt19937_64 gen(o.seed);
    auto rational = [&] {
        Rational r(std::uniform_int_distribution<int>(-5, 5)(gen), std::uniform_int_distribution<int>(1, 4)(gen));
        r.canonicalize();
        return r;
    };
    unsigned failures = 0;
    for (unsigned trial = 0; trial < o.trials; ++trial) {
        UpperTriMatrix<Rational> x(o.m), y(o.k);
        RectMatrix<Rational> w(o.m, o.k);
        for (std::size_t i = 0; i < o.m; ++i)
            for (std::size_t j = i + 1; j < o.m; ++j) x.at(i, j) = rational();
        for (std::size_t i = 0; i < o.k; ++i)
            for (std::size_t j = i + 1; j < o.k; ++j) y.at(i, j) = rational();
        for (std::size_t i = 0; i < o.m; ++i)
            for (std::size_t j = 0; j < o.k; ++j) w(i, j) = rational();
        if (caianiello_expand(x, y, w) != pfaffian(assemble_block(x, y, w))) ++failures;
    }
    Output out(o.out);
    if (o.json)
        out.stream() << json{{"trials", o.trials}, {"failures", failures}, {"is_zero", failures == 0}}.dump() << "\n";
    else
        out.stream() << "caianiello: " << o.trials - failures << "/" << o.trials << " instances agree\n";
    return failures == 0 ? kOk : kFalse;
}

int cmd_verify(const Options& o) {
    if (o.kind == "character") {
        if (o.order < 0) throw InputError("--order must be nonnegative");
        const bool ok = character_check(o.order);
        Output out(o.out);
        if (o.json)
            out.stream() << json{{"order", o.order}, {"is_zero", ok}}.dump() << "\n";
        else
            out.stream() << "character identity through q^" << o.order << ": " << (ok ? "holds" : "fails") << "\n";
        return ok ? kOk : kFalse;
    }
    if (o.kind == "caianiello") return verify_caianiello(o);
    if (o.kind == "kp") {
        Poly a;
        Poly b;
        if (!o.poly.empty()) {
            a = parse_poly(o.poly);
            b = o.poly2.empty() ? a : parse_poly(o.poly2);
        } else {
            a = b = tau_kp_square(load_spec(o));
        }
        return report_defect(o, "kp", kp_defect(a, b, o.d));
    }
    if (o.kind == "bkp") {
        const Poly tau = o.poly.empty() ? tau_bkp(load_spec(o)) : parse_poly(o.poly);
        return report_defect(o, "bkp", bkp_defect(tau));
    }
    if (o.kind == "square") {
        const TauSpec spec = load_spec(o);
        return report_defect(o, "square", make_report(tau_bkp(spec).pow(2) - restrict_even_zero(tau_kp_square(spec))));
    }
    throw InputError("unknown verify kind " + o.kind);
}

int cmd_oracle(const Options& o) {
    if (o.kind == "vev") {
        if (o.word.empty()) throw InputError("--word is required");
        return report_poly(o, fock::wick_vev(fock::parse_word(o.word)));
    }
    if (o.kind != "cross-check") throw InputError("unknown oracle kind " + o.kind);
    const TauSpec spec = load_spec(o);
    spec.validate();
    if (spec.lambda.max_part() > 4 || spec.lambda.length() > 4)
        throw InputError("oracle is limited to lambda_1 <= 4 and length <= 4");
    const Poly bkp = tau_bkp(spec);
    const Poly bkp_oracle = fock::oracle_tau_bkp(spec);
    const Poly sq = tau_kp_square(spec);
    const Poly sq_oracle = fock::oracle_tau_kp_square(spec);
    const bool match = bkp == bkp_oracle && sq == sq_oracle;
    Output out(o.out);
    if (o.json) {
        out.stream() << json{{"bkp", canonical_string(bkp)},
                             {"bkp_oracle", canonical_string(bkp_oracle)},
                             {"kp_square", canonical_string(sq)},
                             {"kp_square_oracle", canonical_string(sq_oracle)},
                             {"match", match}}
                            .dump()
                     << "\n";
    } else {
        out.stream() << "bkp:              " << canonical_string(bkp) << "\n";
        out.stream() << "bkp oracle:       " << canonical_string(bkp_oracle) << "\n";
        out.stream() << "kp-square:        " << canonical_string(sq) << "\n";
        out.stream() << "kp-square oracle: " << canonical_string(sq_oracle) << "\n";
        out.stream() << (match ? "MATCH" : "MISMATCH") << "\n";
    }
    return match ? kOk : kFalse;
}

void add_common(CLI::App* cmd, Options& o) {
    cmd->add_option("--lambda", o.lambda, "comma-separated parts, e.g. 3,2,1");
    cmd->add_option("--constants", o.constants, "JSON rows of rationals, e.g. [[1,0,1/2],[0,1]]");
    cmd->add_option("--spec", o.spec_file, "JSON file {\"lambda\": [...], \"constants\": [...]}");
    cmd->add_flag("--json", o.json, "emit JSON");
    cmd->add_option("--out", o.out, "write the result to a file");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Polynomial BKP and KP tau-functions: construction and exact verification"};
    app.require_subcommand(1);
    Options o;

    auto* tau = app.add_subcommand("tau", "build a tau-function and print it");
    tau->add_option("kind", o.kind, "bkp | kp-square | kdv | kdv-half | schur | qschur")
        ->required()
        ->check(CLI::IsMember({"bkp", "kp-square", "kdv", "kdv-half", "schur", "qschur"}));
    add_common(tau, o);
    tau->add_option("--k", o.k, "staircase size for kdv / kdv-half");

    auto* verify = app.add_subcommand("verify", "check an identity exactly; exit 0 iff it holds");
    verify->add_option("kind", o.kind, "kp | bkp | square | caianiello | character")
        ->required()
        ->check(CLI::IsMember({"kp", "bkp", "square", "caianiello", "character"}));
    add_common(verify, o);
    verify->add_option("--poly", o.poly, "polynomial in t1, t2, ...");
    verify->add_option("--poly2", o.poly2, "second polynomial of a KP pair (defaults to --poly)");
    verify->add_option("--d", o.d, "modified KP index k - l");
    verify->add_option("--m", o.m, "caianiello: size of X");
    verify->add_option("--k", o.k, "caianiello: size of Y");
    verify->add_option("--trials", o.trials, "caianiello: random instances");
    verify->add_option("--seed", o.seed, "caianiello: random seed");
    verify->add_option("--order", o.order, "character: last power of q compared");

    auto* oracle = app.add_subcommand("oracle", "free-fermion brute force");
    oracle->add_option("kind", o.kind, "cross-check | vev")->required()->check(CLI::IsMember({"cross-check", "vev"}));
    add_common(oracle, o);
    oracle->add_option("--word", o.word, "space-separated modes, e.g. \"phi:2 phihat:-1 psi+:1/2\"");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kInputError;
    }

    try {
        if (tau->parsed()) return cmd_tau(o);
        if (verify->parsed()) return cmd_verify(o);
        return cmd_oracle(o);
    } catch (const InputError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInputError;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInputError;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInputError;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kFalse;
    }
}
