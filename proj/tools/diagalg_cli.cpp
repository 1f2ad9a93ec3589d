// diagalg: batch front end for the diagonal generating-function pipeline.
//
// Exit status: 0 all checks passed, 1 a check failed, 2 usage/parse errors.

#include "diagalg/a348410.hpp"
#include "diagalg/burmann.hpp"
#include "diagalg/expr.hpp"
#include "diagalg/holonomic.hpp"
#include "diagalg/io.hpp"
#include "diagalg/series.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <string>

namespace {

using namespace diagalg;

struct Options {
    std::string f_expr;
    std::string format = "text";
    std::string rec_path;
    long n_to = 10;
    int order = 30;
    long from = 0;
    long to = 0;
};

void emit(const Json& payload, const Options& opt)
{
    if (opt.format == "json")
        std::cout << payload.dump(2) << "\n";
}

Json header(const std::string& subcommand, const std::string& status, const Options& opt)
{
    return Json{{"schema", 1}, {"subcommand", subcommand}, {"status", status}, {"f", opt.f_expr}};
}

int run_seq(const Options& opt)
{
    RatFunc f = parse_ratfunc(opt.f_expr);
    auto values = diagonal_sequence(f, opt.n_to);
    if (opt.format == "text") {
        for (long n = 0; n <= opt.n_to; ++n)
            std::cout << "a(" << n << ") = " << rat_to_string(values[size_t(n)]) << "\n";
    } else {
        Json out = header("seq", "ok", opt);
        out["n_to"] = opt.n_to;
        Json vals = Json::array();
        for (const auto& v : values) vals.push_back(rat_to_string(v));
        out["values"] = vals;
        emit(out, opt);
    }
    return 0;
}

int run_alg_eq(const Options& opt)
{
    RatFunc f = parse_ratfunc(opt.f_expr);
    AlgebraicEquation eq = eliminate(parametric_system(f));
    if (opt.format == "text") {
        std::cout << eq.P.str() << "\n";
    } else {
        Json out = header("alg-eq", "ok", opt);
        out["degA"] = eq.degA;
        out["degT"] = eq.degT;
        out["P"] = bipoly_to_triples(eq.P);
        emit(out, opt);
    }
    return 0;
}

int run_verify_series(const Options& opt)
{
    RatFunc f = parse_ratfunc(opt.f_expr);
    AlgebraicEquation eq = eliminate(parametric_system(f));
    auto values = diagonal_sequence(f, opt.order);
    auto oracle = [&values](long n) { return n >= 0 ? values[size_t(n)] : Rational(0); };
    CheckReport rep = verify_algebraic(eq, oracle, opt.order);
    if (opt.format == "text") {
        std::cout << (rep.pass ? "PASS: " : "FAIL: ") << rep.detail << "\n";
    } else {
        Json out = header("verify-series", rep.pass ? "ok" : "fail", opt);
        out["order"] = opt.order;
        if (!rep.pass) out["first_fail"] = rep.first_fail;
        out["detail"] = rep.detail;
        emit(out, opt);
    }
    return rep.pass ? 0 : 1;
}

int run_ode(const Options& opt)
{
    RatFunc f = parse_ratfunc(opt.f_expr);
    DiffOperator op = derive_ode(eliminate(parametric_system(f)));
    if (opt.format == "text") {
        for (int i = op.order(); i >= 0; --i)
            std::cout << "p" << i << "(t) = " << op.coeffs[size_t(i)].str() << "\n";
    } else {
        Json out = header("ode", "ok", opt);
        out["operator"] = diff_operator_to_json(op);
        emit(out, opt);
    }
    return 0;
}

int run_rec(const Options& opt)
{
    RatFunc f = parse_ratfunc(opt.f_expr);
    ShiftOperator rec = ode_to_recurrence(derive_ode(eliminate(parametric_system(f))));
    if (opt.format == "text") {
        for (int i = 0; i <= rec.order(); ++i)
            std::cout << "c" << i << "(n) = " << rec.coeffs[size_t(i)].str() << "\n";
        std::cout << "offset n0 = " << rec.offset << "\n";
    } else {
        Json out = header("rec", "ok", opt);
        out["operator"] = shift_operator_to_json(rec);
        emit(out, opt);
    }
    return 0;
}

int run_check_rec(const Options& opt)
{
    RatFunc f = parse_ratfunc(opt.f_expr);
    std::ifstream in(opt.rec_path);
    if (!in) {
        std::cerr << "error: cannot open recurrence file: " << opt.rec_path << "\n";
        return 2;
    }
    Json j = Json::parse(in);
    ShiftOperator rec = shift_operator_from_json(j);

    auto values = diagonal_sequence(f, opt.to);
    auto oracle = [&values](long n) { return n >= 0 ? values[size_t(n)] : Rational(0); };
    RecurrenceReport rep = check_recurrence(rec, oracle, opt.from, opt.to);
    if (opt.format == "text") {
        std::cout << (rep.pass ? "PASS: " : "FAIL: ") << rep.detail << "\n";
        for (long n : rep.leading_zeros)
            std::cout << "note: leading coefficient vanishes at n = " << n << "\n";
    } else {
        Json out = header("check-rec", rep.pass ? "ok" : "fail", opt);
        out["from"] = opt.from;
        out["to"] = opt.to;
        if (!rep.pass) {
            out["first_fail"] = rep.first_fail;
            out["residual"] = rat_to_string(rep.residual);
        }
        Json lz = Json::array();
        for (long n : rep.leading_zeros) lz.push_back(n);
        out["leading_zeros"] = lz;
        out["detail"] = rep.detail;
        emit(out, opt);
    }
    return rep.pass ? 0 : 1;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"exact toolkit for diagonal generating functions: algebraic "
                 "equations, annihilating ODEs, and P-recursive recurrences"};
    app.require_subcommand(1);
    Options opt;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--f", opt.f_expr, "rational function of x, e.g. \"1/((1-x)*(1-x^2))\"")
            ->required();
        sub->add_option("--format", opt.format, "output format")
            ->check(CLI::IsMember({"text", "json"}));
    };

    auto* seq = app.add_subcommand("seq", "print [x^n] f^n for n = 0..N");
    add_common(seq);
    seq->add_option("--n-to", opt.n_to, "largest n")->check(CLI::NonNegativeNumber);

    auto* alg = app.add_subcommand("alg-eq", "algebraic equation P(t, A) = 0 for the diagonal OGF");
    add_common(alg);

    auto* ver = app.add_subcommand("verify-series", "check P(t, A_N(t)) = 0 mod t^{N+1}");
    add_common(ver);
    ver->add_option("--order", opt.order, "truncation order N")->check(CLI::NonNegativeNumber);

    auto* ode = app.add_subcommand("ode", "derive the annihilating linear ODE");
    add_common(ode);

    auto* rec = app.add_subcommand("rec", "derive the P-recursive recurrence");
    add_common(rec);

    auto* chk = app.add_subcommand("check-rec", "check a recurrence file against exact values");
    add_common(chk);
    chk->add_option("--rec", opt.rec_path, "recurrence JSON file")->required();
    chk->add_option("--from", opt.from, "first n")->required();
    chk->add_option("--to", opt.to, "last n")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (seq->parsed()) return run_seq(opt);
        if (alg->parsed()) return run_alg_eq(opt);
        if (ver->parsed()) return run_verify_series(opt);
        if (ode->parsed()) return run_ode(opt);
        if (rec->parsed()) return run_rec(opt);
        if (chk->parsed()) return run_check_rec(opt);
    } catch (const diagalg::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
