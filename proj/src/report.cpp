#include "sfq/report.hpp"

#include "json.hpp"

#include <sstream>
#include <stdexcept>

namespace sfq {

using json = nlohmann::ordered_json;

Format parse_format(const std::string& s) {
    if (s == "json") return Format::Json;
    if (s == "csv") return Format::Csv;
    throw std::invalid_argument("unknown format '" + s + "' (expected json or csv)");
}

namespace {

json shape_json(const Partition& p) { return json(p.vec()); }

Partition shape_from(const json& j) { return Partition(j.get<std::vector<int>>()); }

json record_json(const VerificationRecord& r) {
    json j;
    j["kind"] = r.kind;
    json shapes = json::array();
    for (auto& s : r.shapes) shapes.push_back(shape_json(s));
    j["shapes"] = shapes;
    j["q"] = r.q;
    j["basis"] = to_string(r.basis);
    j["count0"] = r.measured ? json(to_string(r.count)) : json(nullptr);
    j["total"] = r.measured ? json(r.total) : json(nullptr);
    j["prob"] = r.measured ? json(to_string(r.value)) : json(nullptr);
    j["predicted"] = r.predicted ? json(to_string(*r.predicted)) : json(nullptr);
    j["rule"] = r.rule;
    j["relation"] = to_string(r.relation);
    j["verdict"] = to_string(r.verdict);
    j["asserted"] = r.asserted;
    j["reason"] = r.reason;
    j["ms"] = r.ms ? json(*r.ms) : json(nullptr);
    return j;
}

VerificationRecord record_from(const json& j) {
    VerificationRecord r;
    r.kind = j.at("kind").get<std::string>();
    for (auto& s : j.at("shapes")) r.shapes.push_back(shape_from(s));
    r.q = j.at("q").get<std::uint64_t>();
    r.basis = parse_basis(j.at("basis").get<std::string>());
    r.measured = !j.at("prob").is_null();
    if (r.measured) {
        r.count = BigInt(j.at("count0").get<std::string>());
        r.total = j.at("total").get<std::string>();
        r.value = parse_rational(j.at("prob").get<std::string>());
    }
    if (!j.at("predicted").is_null()) r.predicted = parse_rational(j.at("predicted").get<std::string>());
    r.rule = j.at("rule").get<std::string>();
    r.relation = parse_relation(j.at("relation").get<std::string>());
    r.verdict = parse_verdict(j.at("verdict").get<std::string>());
    r.asserted = j.at("asserted").get<bool>();
    r.reason = j.at("reason").get<std::string>();
    if (!j.at("ms").is_null()) r.ms = j.at("ms").get<double>();
    return r;
}

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

} // namespace

std::string report_emit(const ScanReport& r, Format f) {
    if (f == Format::Csv) {
        std::ostringstream os;
        os << "shape,q,basis,count0,total,prob,predicted,rule,verdict,ms\n";
        for (auto& x : r.records) {
            std::string shapes;
            for (auto& s : x.shapes) shapes += (shapes.empty() ? "" : ";") + s.to_string();
            os << csv_field(shapes) << ',' << x.q << ',' << to_string(x.basis) << ','
               << (x.measured ? to_string(x.count) : "") << ',' << (x.measured ? x.total : "") << ','
               << (x.measured ? to_string(x.value) : "") << ','
               << (x.predicted ? to_string(*x.predicted) : "") << ',' << csv_field(x.rule) << ','
               << to_string(x.verdict) << ',';
            if (x.ms) os << *x.ms;
            os << '\n';
        }
        return os.str();
    }
    json j;
    j["command"] = r.command;
    json cfg = json::object();
    for (auto& [k, v] : r.config) cfg[k] = v;
    j["config"] = cfg;
    json recs = json::array();
    for (auto& x : r.records) recs.push_back(record_json(x));
    j["records"] = recs;
    json fits = json::array();
    for (auto& fs : r.fits)
        fits.push_back({{"shape", shape_json(fs.shape)},
                        {"modulus", fs.modulus},
                        {"degree", fs.degree},
                        {"fitted", fs.fitted},
                        {"expected", fs.expected},
                        {"agrees", fs.agrees}});
    j["fits"] = fits;
    const ScanSummary s = r.summary();
    j["summary"] = {{"total", s.total},
                    {"match", s.match},
                    {"mismatch", s.mismatch},
                    {"no_prediction", s.no_prediction},
                    {"skipped", s.skipped},
                    {"asserted_mismatch", s.asserted_mismatch},
                    {"conjecture_violations", s.conjecture_violations},
                    {"exit_code", r.exit_code()}};
    return j.dump(2) + "\n";
}

ScanReport report_parse(const std::string& text) {
    const json j = json::parse(text);
    ScanReport r;
    r.command = j.at("command").get<std::string>();
    for (auto& [k, v] : j.at("config").items()) r.config.emplace_back(k, v.get<std::string>());
    for (auto& x : j.at("records")) r.records.push_back(record_from(x));
    for (auto& x : j.at("fits")) {
        FitSummary fs;
        fs.shape = shape_from(x.at("shape"));
        fs.modulus = x.at("modulus").get<int>();
        fs.degree = x.at("degree").get<int>();
        fs.fitted = x.at("fitted").get<std::string>();
        fs.expected = x.at("expected").get<std::string>();
        fs.agrees = x.at("agrees").get<bool>();
        r.fits.push_back(fs);
    }
    return r;
}

std::string distribution_json(const ValueDistribution& d, bool all_counts) {
    json j;
    j["shape"] = shape_json(d.shape);
    j["basis"] = to_string(d.basis);
    j["q"] = d.field->q();
    j["modulus"] = d.field->modulus();
    j["m"] = d.m;
    json counts = json::object();
    for (std::uint32_t a = 0; a < d.field->q(); ++a)
        if (all_counts || a == 0) counts[std::to_string(a)] = to_string(d.counts[a]);
    j["counts"] = counts;
    const ExactProb p = d.prob_zero();
    j["total"] = p.total_string();
    j["prob_zero"] = p.value_string();
    return j.dump() + "\n";
}

} // namespace sfq
