// Command-line front end: lattice generation, operator action,
// best-approximation sequences, Chebyshev moments, recurrence
// coefficients, table verification, explicit polynomials and
// Pearson mass propagation, with CSV/JSON emission.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "snul/conic.hpp"
#include "snul/dd.hpp"
#include "snul/diffop.hpp"
#include "snul/diophantine.hpp"
#include "snul/moments.hpp"
#include "snul/orthopoly.hpp"
#include "snul/polynomial.hpp"
#include "snul/semiclassical.hpp"

namespace {

using snul::DD;

struct Table {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;
};

std::string fmt(double v, int sig = 17) {
    if (std::isnan(v)) return "";
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.*g", sig, v);
    return buf;
}

std::string fmt_fixed(double v, int decimals) {
    if (std::isnan(v)) return "";
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.*f", decimals, v);
    return buf;
}

void emit(const Table& t, const std::string& format, std::ostream& os) {
    if (format == "json") {
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& row : t.rows) {
            nlohmann::json obj = nlohmann::json::object();
            for (std::size_t i = 0; i < t.header.size(); ++i)
                obj[t.header[i]] = i < row.size() ? row[i] : "";
            arr.push_back(obj);
        }
        os << arr.dump(2) << "\n";
        return;
    }
    for (std::size_t i = 0; i < t.header.size(); ++i)
        os << t.header[i] << (i + 1 < t.header.size() ? "," : "\n");
    for (const auto& row : t.rows) {
        for (std::size_t i = 0; i < row.size(); ++i)
            os << row[i] << (i + 1 < row.size() ? "," : "\n");
    }
}

std::vector<double> parse_doubles(const std::string& csv) {
    std::vector<double> out;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(std::stod(item));
    return out;
}

snul::Conic parse_conic(const std::string& csv) {
    const auto v = parse_doubles(csv);
    if (v.size() != 6)
        throw snul::Error("--conic expects six values A,B,C,D,E,F");
    return {v[0], v[1], v[2], v[3], v[4], v[5]};
}

DD parse_rho(const std::string& s) {
    if (s == "golden") return snul::kGoldenRho;
    if (s == "sqrt2") return snul::kSqrt2;
    return snul::dd_from_string(s);
}

Table run_lattice(const std::string& conic_csv, double s1, int count, int orientation) {
    snul::LatticeSpec spec = snul::classify(parse_conic(conic_csv));
    spec.orientation = orientation;
    Table t;
    t.header = {"s", "x", "y"};
    for (const auto& p : snul::lattice_points(spec, s1, count))
        t.rows.push_back({fmt(p.s), fmt(p.x), fmt(p.y)});
    return t;
}

Table run_diffop(const std::string& conic_csv, const std::string& poly_csv,
                 const std::string& op) {
    const snul::Conic conic = parse_conic(conic_csv);
    const snul::Polynomial f(parse_doubles(poly_csv));
    snul::Polynomial g;
    if (op == "dd") {
        g = snul::divided_difference(conic, f);
    } else if (op == "mean") {
        g = snul::mean(conic, f);
    } else {
        throw snul::Error("--op must be dd or mean");
    }
    Table t;
    t.header = {"k", "coefficient"};
    for (std::size_t k = 0; k < g.coeffs().size(); ++k)
        t.rows.push_back({std::to_string(k), fmt(g.coeffs()[k])});
    return t;
}

Table run_approx(const std::string& rho_str, long long upto) {
    const DD rho = parse_rho(rho_str);
    Table t;
    t.header = {"j", "kind", "denominator", "eps", "iota"};
    snul::ApproxState s = snul::approx_init(rho);
    t.rows.push_back({"1", "init", "1", snul::dd_to_string(s.eps, 19),
                      snul::dd_to_string(s.iota, 19)});
    while (s.xi + s.eta <= upto) {
        s = snul::approx_advance(s);
        t.rows.push_back({std::to_string(s.j),
                          s.last_event_was_xi ? "xi" : "eta",
                          std::to_string(s.last_event_was_xi ? s.xi : s.eta),
                          snul::dd_to_string(s.eps, 19),
                          snul::dd_to_string(s.iota, 19)});
    }
    return t;
}

Table run_moments(const std::string& rho_str, long long pmax, long long terms) {
    const DD rho = parse_rho(rho_str);
    const double theta = snul::theta_from_rho(rho);
    Table t;
    t.header = {"p", "tau_closed", "tau_series", "rel_err"};
    for (long long p = 0; p <= pmax; ++p) {
        const double closed = snul::tau_closed(rho, p);
        const double series = snul::tau_series(theta, p, terms);
        const double rel = std::abs(series - closed) / std::abs(closed);
        t.rows.push_back({std::to_string(p), fmt(closed), fmt(series), fmt(rel, 3)});
    }
    return t;
}

Table run_recurrence(const std::string& rho_str, long long K, long long N) {
    const DD rho = parse_rho(rho_str);
    const auto measure = snul::build_measure(snul::theta_from_rho(rho), K);
    const auto rc = snul::stieltjes_recurrence(measure, N);
    Table t;
    t.header = {"n", "a_n", "b_n", "gamma_ratio"};
    for (long long n = 0; n <= N; ++n) {
        t.rows.push_back({std::to_string(n),
                          n == 0 ? "" : fmt(rc.a[n - 1]), fmt(rc.b[n]),
                          fmt(rc.gamma_ratio[n])});
    }
    return t;
}

Table run_verify_table(const std::string& rho_str, long long K, long long N,
                       bool full_precision) {
    const auto report = snul::verify_table(parse_rho(rho_str), K, N);
    Table t;
    t.header = {"n",      "a_n",     "b_n",       "eps_2n1", "iota_2n1",
                "eps_2n", "iota_2n", "computed",  "predicted", "rel_err"};
    for (const auto& r : report.rows) {
        auto col = [&](double v) { return full_precision ? fmt(v) : fmt_fixed(v, 4); };
        t.rows.push_back({std::to_string(r.n), col(r.a_n), col(r.b_n), col(r.eps_2n1),
                          col(r.iota_2n1), col(r.eps_2n), col(r.iota_2n),
                          col(r.computed), col(r.predicted),
                          full_precision ? fmt(r.rel_err) : fmt(r.rel_err, 3)});
    }
    return t;
}

Table run_pn(const std::string& rho_str, long long n, const std::string& eval_csv) {
    const auto combo = snul::explicit_pn(parse_rho(rho_str), n);
    Table t;
    if (eval_csv.empty()) {
        t.header = {"degree", "coefficient"};
        for (const auto& [d, c] : combo.terms)
            t.rows.push_back({std::to_string(d), fmt(c)});
    } else {
        t.header = {"x", "pn"};
        for (double x : parse_doubles(eval_csv))
            t.rows.push_back({fmt(x), fmt(combo.eval(x))});
    }
    return t;
}

Table run_pearson(const std::string& table_path, double seed,
                  const std::string& range) {
    const auto colon = range.find(':');
    if (colon == std::string::npos)
        throw snul::Error("--range expects k0:k1");
    const long long k0 = std::stoll(range.substr(0, colon));
    const long long k1 = std::stoll(range.substr(colon + 1));

    std::ifstream in(table_path);
    if (!in) throw snul::Error("cannot open ratio table " + table_path);
    std::map<long long, double> ratios;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        const auto comma = line.find(',');
        if (comma == std::string::npos) continue;
        const std::string key = line.substr(0, comma);
        if (key == "k") continue; // header
        ratios[std::stoll(key)] = std::stod(line.substr(comma + 1));
    }
    auto ratio = [&](long long k) {
        const auto it = ratios.find(k);
        if (it == ratios.end())
            throw snul::Error("ratio table missing k = " + std::to_string(k));
        return it->second;
    };
    const auto res = snul::pearson_masses(ratio, k0, k1, seed);
    Table t;
    t.header = {"k", "mass"};
    for (std::size_t i = 0; i < res.masses.size(); ++i)
        t.rows.push_back({std::to_string(res.k_start + (long long)i), fmt(res.masses[i])});
    return t;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"difference calculus and orthogonal polynomials on special "
                 "non-uniform lattices"};
    app.require_subcommand(1);

    std::string format = "csv";
    std::string output_path;
    app.add_option("--format", format, "output format")
        ->check(CLI::IsMember({"csv", "json"}));
    app.add_option("--output", output_path, "write to file instead of stdout");

    std::string conic_csv, poly_csv, op = "dd", rho = "golden", eval_csv;
    std::string ratio_table, range;
    double s1 = 0.0, seed = 1.0;
    int count = 10, orientation = 1;
    long long upto = 55, pmax = 10, terms = 20000, K = 20000, N = 10, n_index = 0;
    bool full_precision = false;

    auto* lat = app.add_subcommand("lattice", "generate snul lattice points");
    lat->add_option("--conic", conic_csv, "A,B,C,D,E,F")->required();
    lat->add_option("--s1", s1, "first parameter value");
    lat->add_option("--count", count, "number of points")->required();
    lat->add_option("--orientation", orientation, "sign of the half-step shift")
        ->check(CLI::IsMember({-1, 1}));

    auto* dif = app.add_subcommand("diffop", "apply the divided-difference or mean operator");
    dif->add_option("--conic", conic_csv, "A,B,C,D,E,F")->required();
    dif->add_option("--poly", poly_csv, "c0,c1,...,cn")->required();
    dif->add_option("--op", op, "dd|mean")->required();

    auto* apx = app.add_subcommand("approx", "best-approximation denominators of rho");
    apx->add_option("--rho", rho, "golden|sqrt2|<decimal string>")->required();
    apx->add_option("--upto", upto, "largest index")->required();

    auto* mom = app.add_subcommand("moments", "Chebyshev moments, closed form vs series");
    mom->add_option("--rho", rho)->required();
    mom->add_option("--pmax", pmax)->required();
    mom->add_option("--series-terms", terms);

    auto* rec = app.add_subcommand("recurrence", "Stieltjes recurrence coefficients");
    rec->add_option("--rho", rho)->required();
    rec->add_option("--K", K, "truncation size");
    rec->add_option("--N", N, "number of coefficients")->required();

    auto* ver = app.add_subcommand("verify-table", "reproduce the 9-column table");
    ver->add_option("--rho", rho)->required();
    ver->add_option("--K", K);
    ver->add_option("--N", N)->required();
    ver->add_flag("--full-precision", full_precision, "17 digits instead of 4 decimals");

    auto* pnc = app.add_subcommand("pn", "explicit orthonormal polynomial");
    pnc->add_option("--rho", rho)->required();
    pnc->add_option("--n", n_index)->required();
    pnc->add_option("--eval", eval_csv, "x1,x2,... evaluate instead of listing terms");

    auto* pea = app.add_subcommand("pearson", "propagate masses by the Pearson relation");
    pea->add_option("--ratio-table", ratio_table, "CSV with columns k,ratio")->required();
    pea->add_option("--seed", seed, "mass at k0")->required();
    pea->add_option("--range", range, "k0:k1")->required();

    // Let the global --format/--output flags appear after the subcommand.
    for (CLI::App* sub : app.get_subcommands([](const CLI::App*) { return true; }))
        sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        Table t;
        if (lat->parsed()) t = run_lattice(conic_csv, s1, count, orientation);
        if (dif->parsed()) t = run_diffop(conic_csv, poly_csv, op);
        if (apx->parsed()) t = run_approx(rho, upto);
        if (mom->parsed()) t = run_moments(rho, pmax, terms);
        if (rec->parsed()) t = run_recurrence(rho, K, N);
        if (ver->parsed()) t = run_verify_table(rho, K, N, full_precision);
        if (pnc->parsed()) t = run_pn(rho, n_index, eval_csv);
        if (pea->parsed()) t = run_pearson(ratio_table, seed, range);

        if (output_path.empty()) {
            emit(t, format, std::cout);
        } else {
            std::ofstream out(output_path);
            if (!out) throw snul::Error("cannot open output file " + output_path);
            emit(t, format, out);
        }
    } catch (const snul::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
