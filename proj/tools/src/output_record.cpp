#include "output_record.hpp"

#include <nlohmann/json.hpp>

#include <charconv>
#include <sstream>
#include <stdexcept>

namespace hktool {

using hankelkit::BoundReport;
using hankelkit::Rational;
using json = nlohmann::ordered_json;

OutputFormat parse_format(const std::string& s) {
    if (s == "table") return OutputFormat::Table;
    if (s == "json") return OutputFormat::Json;
    if (s == "csv") return OutputFormat::Csv;
    throw std::invalid_argument("unknown format: " + s);
}

std::string format_double(double v) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

namespace {

json rational_json(const Rational& r) {
    const auto p = hankelkit::to_int64_pair(r);
    if (!p) throw std::runtime_error("rational too large for the wire format");
    return json{{"num", p->num}, {"den", p->den}};
}

json report_json(const BoundReport& r) {
    json j;
    j["class"] = hankelkit::class_flag(r.class_tag);
    j["functional"] = hankelkit::functional_flag(r.functional_name);
    j["model"] = r.model;
    j["best_modulus"] = r.best_modulus;
    j["best_params"] = r.best_params;
    j["paper_bound"] = r.paper_bound ? rational_json(*r.paper_bound) : json(nullptr);
    j["verdict"] = hankelkit::verdict_name(r.verdict);
    return j;
}

json coeffs_json(const CoeffTable& t) {
    json j;
    j["label"] = t.label;
    j["normalized"] = t.normalized;
    json cs = json::array();
    for (std::size_t i = 0; i < t.coeffs.size(); ++i) {
        const auto p = hankelkit::to_int64_pair(t.coeffs[i]);
        if (!p) throw std::runtime_error("rational too large for the wire format");
        json row;
        row["k"] = static_cast<int>(i) + 1;
        row["num"] = p->num;
        row["den"] = p->den;
        cs.push_back(std::move(row));
    }
    j["coefficients"] = std::move(cs);
    json fv = json::array();
    for (const auto& [fn, val] : t.functional_values) {
        json row;
        row["functional"] = hankelkit::functional_flag(fn);
        const auto p = hankelkit::to_int64_pair(val);
        if (!p) throw std::runtime_error("rational too large for the wire format");
        row["num"] = p->num;
        row["den"] = p->den;
        fv.push_back(std::move(row));
    }
    j["functional_values"] = std::move(fv);
    return j;
}

json audit_json(const AuditRow& a) {
    json j;
    j["class"] = hankelkit::class_flag(a.class_tag);
    json cons;
    cons["cap_a3"] = rational_json(a.inputs.cap_a3);
    cons["cap_a4"] = rational_json(a.inputs.cap_a4);
    cons["cap_a5"] = rational_json(a.inputs.cap_a5);
    cons["bound_h22"] = rational_json(a.inputs.bound_h22);
    cons["bound_t"] = rational_json(a.inputs.bound_t);
    cons["bound_fs"] = rational_json(a.inputs.bound_fs);
    j["constituents"] = std::move(cons);
    j["recomputed"] = rational_json(a.recomputed);
    j["printed"] = json{{"num", a.printed.num}, {"den", a.printed.den}};
    j["match"] = a.match;
    return j;
}

std::string render_json(const OutputRecord& rec) {
    json j;
    j["command"] = rec.command;
    json in;
    for (const auto& [k, v] : rec.inputs) in[k] = v;
    j["inputs"] = std::move(in);
    json rs = json::array();
    for (const auto& item : rec.results) {
        if (const auto* r = std::get_if<BoundReport>(&item))
            rs.push_back(report_json(*r));
        else if (const auto* t = std::get_if<CoeffTable>(&item))
            rs.push_back(coeffs_json(*t));
        else
            rs.push_back(audit_json(std::get<AuditRow>(item)));
    }
    j["results"] = std::move(rs);
    j["notes"] = rec.notes;
    return j.dump(2) + "\n";
}

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
    std::string out = "\"";
    for (const char c : s) {
        if (c == '"') out += "\"\"";
        else out += c;
    }
    out += "\"";
    return out;
}

std::string render_csv(const OutputRecord& rec) {
    std::ostringstream os;
    os << "class,functional,model,best_modulus,best_params,paper_bound,verdict\n";
    for (const auto& item : rec.results) {
        const auto* r = std::get_if<BoundReport>(&item);
        if (!r) continue;  // the CSV wire carries bound reports only
        std::string params;
        for (std::size_t i = 0; i < r->best_params.size(); ++i) {
            if (i) params += ';';
            params += format_double(r->best_params[i]);
        }
        os << csv_field(hankelkit::class_flag(r->class_tag)) << ','
           << csv_field(hankelkit::functional_flag(r->functional_name)) << ','
           << csv_field(r->model) << ','
           << format_double(r->best_modulus) << ','
           << csv_field(params) << ','
           << csv_field(r->paper_bound ? hankelkit::to_string(*r->paper_bound) : "") << ','
           << csv_field(hankelkit::verdict_name(r->verdict)) << '\n';
    }
    return os.str();
}

void render_table_item(std::ostringstream& os, const ResultItem& item) {
    if (const auto* r = std::get_if<BoundReport>(&item)) {
        os << "  [bound] " << hankelkit::class_name(r->class_tag) << " / "
           << hankelkit::functional_name(r->functional_name) << " / " << r->model << "\n";
        os << "    best modulus: " << format_double(r->best_modulus) << "\n";
        if (!r->best_params.empty()) {
            os << "    best params:  (";
            for (std::size_t i = 0; i < r->best_params.size(); ++i) {
                if (i) os << ", ";
                os << format_double(r->best_params[i]);
            }
            os << ")\n";
        }
        os << "    bound:        "
           << (r->paper_bound ? hankelkit::to_string(*r->paper_bound) : "none") << "\n";
        os << "    verdict:      " << hankelkit::verdict_name(r->verdict) << "\n";
    } else if (const auto* t = std::get_if<CoeffTable>(&item)) {
        os << "  [coefficients] " << t->label
           << (t->normalized ? "" : "  (NOT normalized)") << "\n";
        for (std::size_t i = 0; i < t->coeffs.size(); ++i)
            os << "    a" << i + 1 << " = " << hankelkit::to_string(t->coeffs[i]) << "\n";
        for (const auto& [fn, val] : t->functional_values)
            os << "    " << hankelkit::functional_name(fn) << " = " << hankelkit::to_string(val) << "\n";
    } else {
        const auto& a = std::get<AuditRow>(item);
        os << "  [ceiling audit] " << hankelkit::class_name(a.class_tag) << "\n";
        os << "    constituents: |a3|<=" << hankelkit::to_string(a.inputs.cap_a3)
           << "  |a4|<=" << hankelkit::to_string(a.inputs.cap_a4)
           << "  |a5|<=" << hankelkit::to_string(a.inputs.cap_a5) << "\n";
        os << "                  h2(2)<=" << hankelkit::to_string(a.inputs.bound_h22)
           << "  a2a3-a4<=" << hankelkit::to_string(a.inputs.bound_t)
           << "  fekete-szego<=" << hankelkit::to_string(a.inputs.bound_fs) << "\n";
        os << "    recomputed:   " << hankelkit::to_string(a.recomputed) << "\n";
        os << "    printed:      " << a.printed.str() << "\n";
        os << "    status:       " << (a.match ? "match" : "MISMATCH") << "\n";
    }
}

std::string render_table(const OutputRecord& rec) {
    std::ostringstream os;
    os << "command: " << rec.command << "\n";
    if (!rec.inputs.empty()) {
        os << "inputs:\n";
        for (const auto& [k, v] : rec.inputs) os << "  " << k << ": " << v << "\n";
    }
    if (!rec.results.empty()) {
        os << "results:\n";
        for (const auto& item : rec.results) render_table_item(os, item);
    }
    if (!rec.notes.empty()) {
        os << "notes:\n";
        for (const auto& n : rec.notes) os << "  - " << n << "\n";
    }
    return os.str();
}

}  // namespace

std::string render(const OutputRecord& rec, OutputFormat fmt) {
    switch (fmt) {
        case OutputFormat::Table: return render_table(rec);
        case OutputFormat::Json: return render_json(rec);
        case OutputFormat::Csv: return render_csv(rec);
    }
    throw std::logic_error("unreachable");
}

}  // namespace hktool
