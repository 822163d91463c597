// skewgal command line: verify (config -> report), eval (expression ->
// coordinates and p q^{-1} pair), construct-s3 (interpolation, certification,
// lifted series roots).
//
// Exit codes: 0 all tasks pass, 1 verification failure, 2 usage/schema error.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "skewgal/skewgal.hpp"

namespace {

using namespace skewgal;

constexpr int exit_ok = 0;
constexpr int exit_verification_failure = 1;
constexpr int exit_usage = 2;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ConfigError("cannot open file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ConfigError("cannot write file: " + path);
    out << text;
}

// "hamilton", "quaternion:a,b", "matrix:n", "matrix-units:n"
StructureAlgebra<Rat> builtin_algebra(const std::string& spec) {
    if (spec == "hamilton") return quaternion_algebra(Rat(-1), Rat(-1));
    auto colon = spec.find(':');
    std::string head = spec.substr(0, colon);
    std::string args = colon == std::string::npos ? "" : spec.substr(colon + 1);
    if (head == "quaternion") {
        auto comma = args.find(',');
        if (comma == std::string::npos) throw ConfigError("quaternion spec needs a,b");
        return quaternion_algebra(Rat::from_string(args.substr(0, comma)),
                                  Rat::from_string(args.substr(comma + 1)));
    }
    if (head == "matrix") return matrix_algebra(std::stoi(args), Rat(1)).alg;
    if (head == "matrix-units") return matrix_algebra_units(std::stoi(args), Rat(1)).alg;
    throw ConfigError("unknown algebra spec \"" + spec + "\" (try hamilton, quaternion:a,b, matrix:n)");
}

Poly<Rat> coeff_list(const std::string& csv) {
    std::vector<Rat> c;
    std::string cur;
    std::istringstream ss(csv);
    while (std::getline(ss, cur, ',')) c.push_back(Rat::from_string(cur));
    return Poly<Rat>(std::move(c));
}

int cmd_verify(const std::string& config_path, const std::string& report_path, int order_override,
               long seed_override, bool quiet) {
    JobConfig cfg = parse_config(read_file(config_path));
    if (order_override > 0) cfg.order = order_override;
    if (seed_override >= 0) cfg.seed = static_cast<std::uint64_t>(seed_override);
    Report rep = run_verification(cfg);
    std::string text = rep.to_json().dump(2) + "\n";
    if (!report_path.empty())
        write_file(report_path, text);
    else
        std::cout << text;
    if (!quiet)
        for (const auto& t : rep.tasks)
            std::cerr << (t.status == "pass" ? "[pass] " : t.status == "fail" ? "[FAIL] " : "[????] ")
                      << t.name << "\n";
    return rep.all_passed() ? exit_ok : exit_verification_failure;
}

int cmd_eval(const std::string& algebra_spec, const std::string& config_path, const std::string& expr,
             bool as_json) {
    StructureAlgebra<Rat> H = [&] {
        if (config_path.empty()) return builtin_algebra(algebra_spec);
        JobConfig cfg = parse_config(read_file(config_path));
        auto it = cfg.algebras.find(algebra_spec);
        if (it == cfg.algebras.end()) throw ConfigError("algebra \"" + algebra_spec + "\" not in config");
        return it->second;
    }();
    SkewField<Rat> Ht(&H);
    ExpressionParser<Rat> parser(Ht);
    SkewRatElem<Rat> x = parser.parse(expr);
    auto pair = to_fraction_pair(x);
    if (as_json) {
        ordered_json doc;
        doc["coordinates"] = ordered_json::array();
        for (const auto& c : x.coords) doc["coordinates"].push_back(to_string(c));
        doc["printed"] = print_element(x);
        doc["pair"] = ordered_json{{"p", print_skew_poly(pair.p)}, {"q", print_skew_poly(pair.q)}};
        std::cout << doc.dump(2) << "\n";
    } else {
        std::cout << "element   " << print_element(x) << "\n";
        std::cout << "coords    [";
        for (std::size_t h = 0; h < x.coords.size(); ++h)
            std::cout << (h ? ", " : "") << to_string(x.coords[h]);
        std::cout << "]\n";
        std::cout << "pair p    " << print_skew_poly(pair.p) << "\n";
        std::cout << "pair q    " << print_skew_poly(pair.q) << "\n";
    }
    return exit_ok;
}

int cmd_construct_s3(const std::string& p0_csv, const std::string& p1_csv, int order,
                     const std::string& report_path) {
    Poly<Rat> P0 = coeff_list(p0_csv), P1 = coeff_list(p1_csv);
    BivarPoly P = interpolation_construct(P0, P1);
    auto cert = certify_s3(P);
    ordered_json doc;
    doc["polynomial"] = to_string(to_x_poly_over_ratfunc(P), "x");
    doc["certified_s3"] = cert.certified;
    doc["irreducible"] = cert.irreducible;
    doc["disc"] = to_string(cert.disc);
    doc["disc_nonsquare"] = cert.disc_nonsquare;
    if (cert.root) doc["ratfunc_root"] = to_string(*cert.root);
    doc["roots"] = ordered_json::array();
    Poly<Rat> p0_at0 = eval_at_t(P, Rat(0));
    for (const Rat& r0 : rational_roots(p0_at0)) {
        if (p0_at0.derivative().eval(r0).is_zero()) continue;
        auto lifted = hensel_lift(P, r0, order);
        ordered_json jr;
        jr["r0"] = to_string(r0);
        jr["series"] = to_string(lifted.root);
        doc["roots"].push_back(std::move(jr));
    }
    std::string text = doc.dump(2) + "\n";
    if (!report_path.empty())
        write_file(report_path, text);
    else
        std::cout << text;
    return cert.certified ? exit_ok : exit_verification_failure;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact verification toolkit for skew rational function fields H(t)"};
    app.require_subcommand(1);

    std::string config_path, report_path, algebra_spec = "hamilton", expr_text, p0_csv, p1_csv;
    int order_override = -1, s3_order = 16;
    long seed_override = -1;
    bool quiet = false, as_json = false;

    auto* verify = app.add_subcommand("verify", "run the verification tasks of a JSON config");
    verify->add_option("-c,--config", config_path, "job configuration (JSON)")->required();
    verify->add_option("-o,--report", report_path, "write the report here instead of stdout");
    verify->add_option("--order", order_override, "override the series truncation order (>= 2)");
    verify->add_option("--seed", seed_override, "override the randomization seed");
    verify->add_flag("-q,--quiet", quiet, "suppress the per-task status lines");

    auto* eval = app.add_subcommand("eval", "evaluate an H(t) expression to coordinates and pair form");
    eval->add_option("-a,--algebra", algebra_spec,
                     "builtin algebra: hamilton | quaternion:a,b | matrix:n | matrix-units:n, or a "
                     "config algebra name with --config");
    eval->add_option("-c,--config", config_path, "config supplying named algebras");
    eval->add_option("expression", expr_text, "expression over 1,i,j,k / e1..ed, t")->required();
    eval->add_flag("--json", as_json, "emit JSON");

    auto* s3 = app.add_subcommand("construct-s3", "interpolate P0, P1 to P(t,x), certify S3, lift roots");
    s3->add_option("--p0", p0_csv, "coefficients of monic P0, low degree first, comma separated")->required();
    s3->add_option("--p1", p1_csv, "coefficients of monic P1, low degree first, comma separated")->required();
    s3->add_option("--order", s3_order, "series truncation order for the lifted roots");
    s3->add_option("-o,--report", report_path, "write the JSON result here instead of stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? exit_ok : exit_usage;
    }

    try {
        if (verify->parsed()) return cmd_verify(config_path, report_path, order_override, seed_override, quiet);
        if (eval->parsed()) return cmd_eval(algebra_spec, config_path, expr_text, as_json);
        if (s3->parsed()) return cmd_construct_s3(p0_csv, p1_csv, s3_order, report_path);
    } catch (const ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return exit_usage;
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        if (!e.expected.empty()) std::cerr << "expected: " << e.expected << "\n";
        return exit_usage;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return exit_verification_failure;
    }
    return exit_usage;
}
