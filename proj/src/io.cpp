#include "sqdist/io.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

namespace sqdist::io {

double round12(double x) {
    if (!std::isfinite(x) || x == 0.0) return x;
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return std::strtod(buf, nullptr);
}

std::string exact_string(const ExactRational& r) {
    const ExactInt num = boost::multiprecision::numerator(r);
    const ExactInt den = boost::multiprecision::denominator(r);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

namespace {

std::string fmt(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return buf;
}

std::string ordering_string(std::strong_ordering o) {
    if (o == std::strong_ordering::less) return "less";
    if (o == std::strong_ordering::greater) return "greater";
    return "equal";
}

Json partition_list(const std::vector<Partition>& ps) {
    Json out = Json::array();
    for (const auto& p : ps) out.push_back(p.to_string());
    return out;
}

}  // namespace

Json to_json(const Partition& p) {
    return Json{{"parts", std::vector<int>(p.parts().begin(), p.parts().end())},
                {"n", p.n()},
                {"t", p.t()},
                {"h", p.h()},
                {"s", p.s()}};
}

Json to_json(const IntPolynomial& p) {
    Json coeffs = Json::array();
    for (const auto& c : p.coefficients()) coeffs.push_back(c.str());
    return Json{{"coeffs", coeffs}, {"ascending", true}};
}

Json to_json(const FactoredCharPoly& f) {
    return Json{{"x_plus_4_power", f.minus_four_power},
                {"x_plus_1_power", f.minus_one_power},
                {"residual", to_json(f.residual)}};
}

Json to_json(const SpectrumReport& s) {
    Json exact = Json::array();
    for (const auto& e : s.exact_part) exact.push_back({{"value", exact_string(e.value)}, {"mult", e.multiplicity}});
    Json isolated = Json::array();
    for (const auto& r : s.isolated_part) {
        isolated.push_back({{"value", round12(r.value)},
                            {"lo", round12(r.lo)},
                            {"hi", round12(r.hi)},
                            {"root_index", r.secular_index}});
    }
    return Json{{"exact", exact}, {"isolated", isolated}};
}

Json to_json(const InertiaTriple& in) {
    return Json{{"n_plus", in.n_plus},
                {"n_zero", in.n_zero},
                {"n_minus", in.n_minus},
                {"derivation", std::string(to_string(in.derivation))}};
}

Json to_json(const EnergyReport& e) {
    Json out{{"integer_part", e.integer_part.str()}, {"theta", nullptr}, {"value", round12(e.value)}};
    if (e.theta) {
        out["theta"] = round12(*e.theta);
        out["theta_lo"] = round12(e.theta_bracket->lo);
        out["theta_hi"] = round12(e.theta_bracket->hi);
    }
    return out;
}

Json to_json(const RootBracket& r) {
    return Json{{"value", round12(r.value)}, {"lo", round12(r.lo)}, {"hi", round12(r.hi)}};
}

Json to_json(const ScanEntry& e) {
    Json out{{"partition", e.partition.to_string()},
             {"h", e.partition.h()},
             {"energy", to_json(e.energy)},
             {"radius", to_json(e.radius)},
             {"inertia", to_json(e.inertia)},
             {"lambda_s1_sign", nullptr}};
    if (e.lambda_s1) out["lambda_s1_sign"] = std::string(to_string(*e.lambda_s1));
    return out;
}

Json to_json(const ScanReport& r) {
    Json entries = Json::array();
    for (const auto& e : r.entries) entries.push_back(to_json(e));
    Json out{{"kind", std::string(to_string(r.kind))}, {"n", r.n}, {"t", r.t}, {"h", nullptr}};
    if (r.h) out["h"] = *r.h;
    out["energy_argmax"] = partition_list(r.energy_argmax);
    out["energy_argmin"] = partition_list(r.energy_argmin);
    out["radius_argmax"] = partition_list(r.radius_argmax);
    out["radius_argmin"] = partition_list(r.radius_argmin);
    out["energy_max_unique"] = r.energy_max_unique();
    out["energy_min_unique"] = r.energy_min_unique();
    out["radius_max_unique"] = r.radius_max_unique();
    out["radius_min_unique"] = r.radius_min_unique();
    out["violated_claims"] = r.violated_claims;
    out["notes"] = r.notes;
    out["entries"] = entries;
    return out;
}

Json to_json(const ChainReport& c) {
    Json members = Json::array();
    for (const auto& m : c.members) members.push_back(to_json(m));
    Json links = Json::array();
    for (const auto& l : c.links) {
        links.push_back({{"from", l.from.to_string()},
                         {"to", l.to.to_string()},
                         {"step", {l.step.from, l.step.to}},
                         {"radius_gap", round12(l.radius_gap)},
                         {"radius_decreases", l.radius_decreases},
                         {"energy_order", ordering_string(l.energy_order)},
                         {"energy_non_increasing", l.energy_non_increasing}});
    }
    return Json{{"length", c.links.size()},
                {"members", members},
                {"links", links},
                {"violated_claims", c.violated_claims}};
}

Json to_json(const VerificationRecord& v) {
    return Json{{"partition", v.partition.to_string()},
                {"passed", v.passed()},
                {"max_eigenvalue_deviation", round12(v.max_eigenvalue_deviation)},
                {"inertia", to_json(v.closed_form_inertia)},
                {"oracle_inertia", {v.oracle_plus, v.oracle_zero, v.oracle_minus}},
                {"energy", round12(v.energy_closed_form)},
                {"energy_oracle", round12(v.energy_oracle)},
                {"energy_deviation", round12(v.energy_deviation)},
                {"det", v.det_exact},
                {"det_oracle_product", round12(v.det_oracle_product)},
                {"det_relative_deviation", round12(v.det_relative_deviation)},
                {"eigenvalues_ok", v.eigenvalues_ok},
                {"inertia_ok", v.inertia_ok},
                {"energy_ok", v.energy_ok},
                {"det_ok", v.det_ok}};
}

Json summary_json(const SweepSummary& s) {
    return Json{{"summary", std::to_string(s.failures) + " failures"},
                {"n_max", s.n_max},
                {"partitions", s.records.size()},
                {"failures", s.failures},
                {"worst_eigenvalue_deviation", round12(s.worst_eigenvalue_deviation)},
                {"worst_energy_deviation", round12(s.worst_energy_deviation)},
                {"worst_det_relative_deviation", round12(s.worst_det_relative_deviation)}};
}

std::string scan_csv(const ScanReport& r) {
    std::ostringstream out;
    out << "partition,h,energy,energy_integer_part,theta,radius,n_plus,n_zero,n_minus,lambda_s1_sign\n";
    for (const auto& e : r.entries) {
        out << '"' << e.partition.to_string() << "\"," << e.partition.h() << ',' << fmt(e.energy.value) << ','
            << e.energy.integer_part << ',' << (e.energy.theta ? fmt(*e.energy.theta) : "") << ','
            << fmt(e.radius.value) << ',' << e.inertia.n_plus << ',' << e.inertia.n_zero << ',' << e.inertia.n_minus
            << ',' << (e.lambda_s1 ? to_string(*e.lambda_s1) : "") << '\n';
    }
    return out.str();
}

std::string chain_csv(const ChainReport& c) {
    std::ostringstream out;
    out << "index,partition,energy,radius,radius_decreases,energy_non_increasing\n";
    for (std::size_t i = 0; i < c.members.size(); ++i) {
        const auto& m = c.members[i];
        out << i << ",\"" << m.partition.to_string() << "\"," << fmt(m.energy.value) << ',' << fmt(m.radius.value)
            << ',';
        if (i > 0) out << (c.links[i - 1].radius_decreases ? "yes" : "no");
        out << ',';
        if (i > 0) out << (c.links[i - 1].energy_non_increasing ? "yes" : "no");
        out << '\n';
    }
    return out.str();
}

std::string sweep_csv(const SweepSummary& s) {
    std::ostringstream out;
    out << "partition,passed,max_eigenvalue_deviation,energy_deviation,det,det_relative_deviation\n";
    for (const auto& v : s.records) {
        out << '"' << v.partition.to_string() << "\"," << (v.passed() ? "yes" : "no") << ','
            << fmt(v.max_eigenvalue_deviation) << ',' << fmt(v.energy_deviation) << ',' << v.det_exact << ','
            << fmt(v.det_relative_deviation) << '\n';
    }
    return out.str();
}

}  // namespace sqdist::io
