// sqdist: squared distance spectra of complete multipartite graphs.
//
// Exit status: 0 success, 1 domain error, 2 failed verification or violated
// claim, 64 usage error.

#include <cstdio>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "sqdist/error.hpp"
#include "sqdist/extremal.hpp"
#include "sqdist/io.hpp"
#include "sqdist/oracle.hpp"

namespace {

using sqdist::io::Json;

constexpr int kExitDomain = 1;
constexpr int kExitVerification = 2;
constexpr int kExitUsage = 64;

struct Options {
    std::string partition;
    std::string other;
    int n = 0;
    int t = 0;
    int h = 0;
    int nmax = 10;
    double tol = 0.0;
    bool json = false;
    bool csv = false;
};

struct Output {
    std::string text;
    int status = 0;
};

std::string fmt(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return buf;
}

std::string line(const Json& j) { return j.dump() + "\n"; }

Output run_spectrum(const Options& o) {
    const auto p = sqdist::Partition::parse(o.partition);
    const auto report = sqdist::full_spectrum(p);
    if (o.csv) {
        std::ostringstream out;
        out << "kind,value,multiplicity,lo,hi\n";
        for (const auto& e : report.exact_part) out << "exact," << sqdist::io::exact_string(e.value) << ',' << e.multiplicity << ",,\n";
        for (const auto& r : report.isolated_part) out << "isolated," << fmt(r.value) << ",1," << fmt(r.lo) << ',' << fmt(r.hi) << '\n';
        return {out.str()};
    }
    Json j{{"partition", sqdist::io::to_json(p)}};
    j.update(sqdist::io::to_json(report));
    return {line(j)};
}

Output run_inertia(const Options& o) {
    const auto p = sqdist::Partition::parse(o.partition);
    const auto in = sqdist::inertia(p);
    if (o.csv) {
        return {"n_plus,n_zero,n_minus,derivation\n" + std::to_string(in.n_plus) + "," + std::to_string(in.n_zero) +
                "," + std::to_string(in.n_minus) + "," + std::string(to_string(in.derivation)) + "\n"};
    }
    Json j{{"partition", sqdist::io::to_json(p)}};
    j.update(sqdist::io::to_json(in));
    return {line(j)};
}

Output run_energy(const Options& o) {
    const auto e = sqdist::energy(sqdist::Partition::parse(o.partition));
    if (o.csv) {
        return {"integer_part,theta,value\n" + e.integer_part.str() + "," + (e.theta ? fmt(*e.theta) : "") + "," +
                fmt(e.value) + "\n"};
    }
    return {line(sqdist::io::to_json(e))};
}

Output run_radius(const Options& o) {
    const auto p = sqdist::Partition::parse(o.partition);
    sqdist::RootBracket r = sqdist::spectral_radius(p);
    if (o.tol > 0.0) {
        const sqdist::SecularEquation eq(p);
        r = eq.isolate(eq.root_count() - 1, r.lo, r.hi, o.tol, 200);
    }
    if (o.csv) return {"value,lo,hi\n" + fmt(r.value) + "," + fmt(r.lo) + "," + fmt(r.hi) + "\n"};
    Json j{{"partition", sqdist::io::to_json(p)}};
    j.update(sqdist::io::to_json(r));
    if (p.t() == 2) j["bipartite_closed"] = sqdist::io::round12(sqdist::radius_bipartite_closed(p[0], p[1]));
    return {line(j)};
}

Output run_charpoly(const Options& o) {
    const auto p = sqdist::Partition::parse(o.partition);
    const auto f = sqdist::char_poly_factored(p);
    const auto expanded = f.expand();
    if (o.csv) {
        std::ostringstream out;
        out << "power,coefficient\n";
        for (std::size_t i = 0; i < expanded.coefficients().size(); ++i) out << i << ',' << expanded.coefficients()[i] << '\n';
        return {out.str()};
    }
    return {line(Json{{"partition", sqdist::io::to_json(p)},
                      {"factored", sqdist::io::to_json(f)},
                      {"expanded", sqdist::io::to_json(expanded)},
                      {"text", expanded.to_string()},
                      {"det", sqdist::det_delta_exact(p).str()}})};
}

Output scan_output(const sqdist::ScanReport& r, const Options& o) {
    const int status = r.violated_claims.empty() ? 0 : kExitVerification;
    for (const auto& v : r.violated_claims) std::cerr << "violated: " << v << '\n';
    if (o.csv) return {sqdist::io::scan_csv(r), status};
    return {line(sqdist::io::to_json(r)), status};
}

Output run_chain(const Options& o) {
    const auto y = sqdist::Partition::parse(o.partition);
    const auto x = sqdist::Partition::parse(o.other);
    const auto report = sqdist::verify_chain_monotone(y, x);
    for (const auto& v : report.violated_claims) std::cerr << "violated: " << v << '\n';
    const int status = report.ok() ? 0 : kExitVerification;
    if (o.csv) return {sqdist::io::chain_csv(report), status};
    return {line(sqdist::io::to_json(report)), status};
}

Output run_verify(const Options& o) {
    sqdist::VerifyTolerances tol;
    if (o.tol > 0.0) tol.eigenvalue = o.tol;
    const auto summary = sqdist::sweep(o.nmax, tol);
    const int status = summary.failures == 0 ? 0 : kExitVerification;
    std::string text;
    if (o.csv) {
        text = sqdist::io::sweep_csv(summary);
        std::cerr << summary.failures << " failures\n";
    } else {
        for (const auto& rec : summary.records) text += line(sqdist::io::to_json(rec));
        text += line(sqdist::io::summary_json(summary));
    }
    return {text, status};
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Squared distance spectra of complete multipartite graphs"};
    app.require_subcommand(1);
    Options o;

    const auto add_format = [&](CLI::App* sub) {
        auto* json = sub->add_flag("--json", o.json, "JSON output (default)");
        auto* csv = sub->add_flag("--csv", o.csv, "CSV output");
        json->excludes(csv);
    };
    const auto partition_cmd = [&](const std::string& name, const std::string& help) {
        auto* sub = app.add_subcommand(name, help);
        sub->add_option("partition", o.partition, "part sizes, e.g. 5,2,2,1")->required();
        add_format(sub);
        return sub;
    };
    const auto family_cmd = [&](const std::string& name, const std::string& help) {
        auto* sub = app.add_subcommand(name, help);
        sub->add_option("n", o.n, "vertex count")->required();
        sub->add_option("t", o.t, "part count")->required();
        add_format(sub);
        return sub;
    };

    auto* spectrum = partition_cmd("spectrum", "exact and isolated eigenvalues");
    auto* inertia = partition_cmd("inertia", "inertia triple from the exact criterion");
    auto* energy = partition_cmd("energy", "squared distance energy");
    auto* radius = partition_cmd("radius", "spectral radius with bracket");
    radius->add_option("--tol", o.tol, "bracket width")->check(CLI::PositiveNumber);
    auto* charpoly = partition_cmd("charpoly", "characteristic polynomial, factored and expanded");
    auto* scan_energy = family_cmd("scan-energy", "energy over all partitions of n into t parts");
    auto* scan_radius = family_cmd("scan-radius", "radius over all partitions of n into t parts");
    auto* scan_h = family_cmd("scan-h", "energy over M(n,t,h)");
    scan_h->set_help_flag("--help", "Print this help message and exit");
    scan_h->add_option("--h", o.h, "singleton parts")->required();
    auto* chain = app.add_subcommand("chain", "elementary majorization chain from Y down to X");
    chain->add_option("Y", o.partition, "majorizing partition")->required();
    chain->add_option("X", o.other, "majorized partition")->required();
    add_format(chain);
    auto* verify = app.add_subcommand("verify", "closed forms against the dense oracle");
    verify->add_option("--nmax", o.nmax, "largest n")->capture_default_str();
    verify->add_option("--tol", o.tol, "eigenvalue tolerance")->check(CLI::PositiveNumber);
    add_format(verify);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << e.what() << "\n\n" << app.help();
        return kExitUsage;
    }

    try {
        Output out;
        if (*spectrum) {
            out = run_spectrum(o);
        } else if (*inertia) {
            out = run_inertia(o);
        } else if (*energy) {
            out = run_energy(o);
        } else if (*radius) {
            out = run_radius(o);
        } else if (*charpoly) {
            out = run_charpoly(o);
        } else if (*scan_energy) {
            out = scan_output(sqdist::scan_energy(o.n, o.t), o);
        } else if (*scan_radius) {
            out = scan_output(sqdist::scan_radius(o.n, o.t), o);
        } else if (*scan_h) {
            out = scan_output(sqdist::scan_energy_h(o.n, o.t, o.h), o);
        } else if (*chain) {
            out = run_chain(o);
        } else if (*verify) {
            out = run_verify(o);
        }
        std::cout << out.text << std::flush;
        return out.status;
    } catch (const sqdist::Error& e) {
        std::cerr << "sqdist: " << e.what() << '\n';
        return kExitDomain;
    }
}
