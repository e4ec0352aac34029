#include "psik/report.hpp"

#include <iomanip>
#include <ostream>
#include <sstream>

#include <nlohmann/json.hpp>

namespace psik {

using ordered_json = nlohmann::ordered_json;

OutputFormat format_from_name(const std::string& name) {
    if (name == "table") return OutputFormat::Table;
    if (name == "json") return OutputFormat::Json;
    if (name == "csv") return OutputFormat::Csv;
    throw usage_error("unknown format '" + name + "'; valid: table json csv");
}

namespace {

std::string csv_quote(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += "\"\"";
        else out += c;
    }
    out += '"';
    return out;
}

std::string instance_text(const BoundReport& r) {
    std::string out;
    for (const auto& [k, v] : r.instance) {
        if (!out.empty()) out += ' ';
        out += k + "=" + v;
    }
    return out;
}

} // namespace

std::string report_json_line(const BoundReport& r) {
    ordered_json inst = ordered_json::object();
    for (const auto& [k, v] : r.instance) inst[k] = v;
    ordered_json j{{"theorem", theorem_name(r.theorem)},
                   {"verdict", verdict_name(r.verdict)},
                   {"lhs", r.lhs_scaled.str()},
                   {"rhs", r.rhs_scaled.str()},
                   {"margin", r.margin.str()},
                   {"instance", std::move(inst)}};
    return j.dump();
}

ReportEmitter::ReportEmitter(std::ostream& os, OutputFormat format) : os_(os), format_(format) {
    if (format_ == OutputFormat::Csv)
        os_ << "theorem,verdict,lhs,rhs,margin,instance\n";
}

ReportEmitter::~ReportEmitter() {
    if (format_ == OutputFormat::Table) os_ << count_ << " report(s)\n";
}

void ReportEmitter::emit(const BoundReport& r) {
    ++count_;
    switch (format_) {
    case OutputFormat::Json:
        os_ << report_json_line(r) << '\n';
        break;
    case OutputFormat::Csv:
        os_ << theorem_name(r.theorem) << ',' << verdict_name(r.verdict) << ','
            << csv_quote(r.lhs_scaled.str()) << ',' << csv_quote(r.rhs_scaled.str()) << ','
            << csv_quote(r.margin.str()) << ',' << csv_quote(instance_text(r)) << '\n';
        break;
    case OutputFormat::Table:
        os_ << std::left << std::setw(20) << theorem_name(r.theorem) << std::setw(16)
            << verdict_name(r.verdict) << instance_text(r) << "  lhs=" << r.lhs_scaled
            << " rhs=" << r.rhs_scaled << " margin=" << r.margin << '\n';
        break;
    }
}

void emit_compute(std::ostream& os, const GroupSpec& spec, const PsiValue& v,
                  OutputFormat format) {
    switch (format) {
    case OutputFormat::Json: {
        ordered_json j{{"group", spec.canonical()},
                       {"order", v.group_order.str()},
                       {"k", v.k},
                       {"psi_k", v.value.str()},
                       {"route", v.route}};
        os << j.dump() << '\n';
        break;
    }
    case OutputFormat::Csv:
        os << "group,order,k,psi_k,route\n"
           << csv_quote(spec.canonical()) << ',' << csv_quote(v.group_order.str()) << ',' << v.k
           << ',' << csv_quote(v.value.str()) << ',' << v.route << '\n';
        break;
    case OutputFormat::Table:
        os << "group  " << spec.canonical() << "\norder  " << v.group_order << "\nk      " << v.k
           << "\npsi_k  " << v.value << "\nroute  " << v.route << '\n';
        break;
    }
}

void emit_spectrum(std::ostream& os, const GroupSpec& spec, const OrderSpectrum& s,
                   OutputFormat format) {
    switch (format) {
    case OutputFormat::Json: {
        ordered_json pairs = ordered_json::array();
        for (const auto& [d, c] : s.counts)
            pairs.push_back(ordered_json::array({d.str(), c.str()}));
        ordered_json j{{"group", spec.canonical()},
                       {"order", s.group_order.str()},
                       {"spectrum", std::move(pairs)}};
        os << j.dump() << '\n';
        break;
    }
    case OutputFormat::Csv:
        os << "order,count\n";
        for (const auto& [d, c] : s.counts)
            os << csv_quote(d.str()) << ',' << csv_quote(c.str()) << '\n';
        break;
    case OutputFormat::Table:
        os << "group " << spec.canonical() << " (order " << s.group_order << ")\n";
        for (const auto& [d, c] : s.counts)
            os << "  order " << std::setw(8) << d.str() << " count " << c << '\n';
        break;
    }
}

void emit_reversals(std::ostream& os, const std::vector<ReversalWitness>& ws,
                    OutputFormat format) {
    switch (format) {
    case OutputFormat::Json:
        for (const auto& w : ws) {
            ordered_json j{{"g1", w.g1.canonical()},
                           {"g2", w.g2.canonical()},
                           {"k_low", w.k_low},
                           {"k_high", w.k_high},
                           {"psi_low_g1", w.psi_low_g1.str()},
                           {"psi_low_g2", w.psi_low_g2.str()},
                           {"psi_high_g1", w.psi_high_g1.str()},
                           {"psi_high_g2", w.psi_high_g2.str()}};
            os << j.dump() << '\n';
        }
        break;
    case OutputFormat::Csv:
        os << "g1,g2,k_low,k_high,psi_low_g1,psi_low_g2,psi_high_g1,psi_high_g2\n";
        for (const auto& w : ws)
            os << csv_quote(w.g1.canonical()) << ',' << csv_quote(w.g2.canonical()) << ','
               << w.k_low << ',' << w.k_high << ',' << csv_quote(w.psi_low_g1.str()) << ','
               << csv_quote(w.psi_low_g2.str()) << ',' << csv_quote(w.psi_high_g1.str()) << ','
               << csv_quote(w.psi_high_g2.str()) << '\n';
        break;
    case OutputFormat::Table:
        for (const auto& w : ws)
            os << w.g1.canonical() << " vs " << w.g2.canonical() << ": psi_" << w.k_low << " "
               << w.psi_low_g1 << " < " << w.psi_low_g2 << " but psi_" << w.k_high << " "
               << w.psi_high_g1 << " > " << w.psi_high_g2 << '\n';
        os << ws.size() << " reversal(s)\n";
        break;
    }
}

void emit_extremal(std::ostream& os, std::uint64_t n, unsigned k, const ExtremalResult& res,
                   OutputFormat format) {
    switch (format) {
    case OutputFormat::Json: {
        ordered_json vals = ordered_json::array();
        for (const auto& e : res.ranked)
            vals.push_back(ordered_json{{"group", e.spec.canonical()}, {"psi_k", e.value.str()}});
        ordered_json j{{"n", n},
                       {"k", k},
                       {"argmax", res.argmax().spec.canonical()},
                       {"argmin", res.argmin().spec.canonical()},
                       {"max_strict", res.max_strict()},
                       {"min_strict", res.min_strict()},
                       {"values", std::move(vals)}};
        os << j.dump() << '\n';
        break;
    }
    case OutputFormat::Csv:
        os << "group,psi_k\n";
        for (const auto& e : res.ranked)
            os << csv_quote(e.spec.canonical()) << ',' << csv_quote(e.value.str()) << '\n';
        break;
    case OutputFormat::Table:
        os << "order " << n << ", k = " << k << '\n';
        for (const auto& e : res.ranked)
            os << "  " << std::left << std::setw(24) << e.spec.canonical() << ' ' << e.value
               << '\n';
        os << "argmax " << res.argmax().spec.canonical() << (res.max_strict() ? " (strict)" : "")
           << ", argmin " << res.argmin().spec.canonical() << (res.min_strict() ? " (strict)" : "")
           << '\n';
        break;
    }
}

void emit_ratios(std::ostream& os, const RatioScanResult& res, OutputFormat format) {
    switch (format) {
    case OutputFormat::Json:
        for (const auto& r : res.top) {
            ordered_json j{{"group", r.spec.canonical()},
                           {"n", r.spec.order().str()},
                           {"k", r.k},
                           {"psi_g", r.psi_g.str()},
                           {"psi_zn", r.psi_zn.str()},
                           {"at_bound", r.at_bound}};
            os << j.dump() << '\n';
        }
        break;
    case OutputFormat::Csv:
        os << "group,n,k,psi_g,psi_zn,at_bound\n";
        for (const auto& r : res.top)
            os << csv_quote(r.spec.canonical()) << ',' << csv_quote(r.spec.order().str()) << ','
               << r.k << ',' << csv_quote(r.psi_g.str()) << ',' << csv_quote(r.psi_zn.str()) << ','
               << (r.at_bound ? "true" : "false") << '\n';
        break;
    case OutputFormat::Table:
        for (const auto& r : res.top)
            os << "  " << std::left << std::setw(24) << r.spec.canonical() << " n=" << std::setw(8)
               << r.spec.order().str() << " ratio " << r.psi_g << "/" << r.psi_zn
               << (r.at_bound ? "  (at bound)" : "") << '\n';
        break;
    }
}

} // namespace psik
