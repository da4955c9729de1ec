#include "ede/kb_io.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <set>
#include <sstream>
#include <unordered_set>

#include <fmt/format.h>

namespace ede {

using nlohmann::json;

namespace {

std::string join_path(const std::string& base, std::string_view key) {
    if (base.empty()) return std::string(key);
    return fmt::format("{}.{}", base, key);
}

std::string index_path(const std::string& base, std::size_t i) { return fmt::format("{}[{}]", base, i); }

std::string_view type_name(const json& j) {
    if (j.is_boolean()) return "boolean";
    if (j.is_number()) return "number";
    return j.type_name();
}

// Collects schema diagnostics while walking a JSON document.
class Reader {
public:
    std::vector<Diagnostic> diagnostics;

    void fail(std::string path, std::string message) { diagnostics.push_back({std::move(path), std::move(message)}); }

    bool ok() const noexcept { return diagnostics.empty(); }

    void throw_if_failed(ErrorCode code = ErrorCode::Schema) {
        if (!diagnostics.empty()) throw Error(code, std::move(diagnostics));
    }

    bool object(const json& j, const std::string& path, std::initializer_list<std::string_view> allowed) {
        if (!j.is_object()) {
            fail(path, fmt::format("expected an object, found {}", type_name(j)));
            return false;
        }
        for (const auto& [key, _] : j.items()) {
            if (std::find(allowed.begin(), allowed.end(), key) == allowed.end()) {
                fail(join_path(path, key), fmt::format("unknown field '{}'", key));
            }
        }
        return true;
    }

    const json* field(const json& obj, const std::string& path, std::string_view key, bool required) {
        auto it = obj.find(key);
        if (it == obj.end()) {
            if (required) fail(join_path(path, key), "missing required field");
            return nullptr;
        }
        return &*it;
    }

    std::optional<std::string> string(const json& obj, const std::string& path, std::string_view key,
                                      bool required) {
        const json* j = field(obj, path, key, required);
        if (j == nullptr) return std::nullopt;
        if (!j->is_string()) {
            fail(join_path(path, key), fmt::format("expected a string, found {}", type_name(*j)));
            return std::nullopt;
        }
        return j->get<std::string>();
    }

    std::optional<double> number(const json& obj, const std::string& path, std::string_view key, bool required) {
        const json* j = field(obj, path, key, required);
        if (j == nullptr) return std::nullopt;
        if (!j->is_number()) {
            fail(join_path(path, key), fmt::format("expected a number, found {}", type_name(*j)));
            return std::nullopt;
        }
        const double v = j->get<double>();
        if (!std::isfinite(v)) {
            fail(join_path(path, key), "number must be finite");
            return std::nullopt;
        }
        return v;
    }

    std::optional<double> unit(const json& obj, const std::string& path, std::string_view key, bool required) {
        auto v = number(obj, path, key, required);
        if (v && !(*v >= 0.0 && *v <= 1.0)) {
            fail(join_path(path, key), fmt::format("{} out of [0,1]", key));
            return std::nullopt;
        }
        return v;
    }

    std::optional<long long> integer(const json& obj, const std::string& path, std::string_view key,
                                     bool required) {
        const json* j = field(obj, path, key, required);
        if (j == nullptr) return std::nullopt;
        if (!j->is_number_integer()) {
            fail(join_path(path, key), fmt::format("expected an integer, found {}", type_name(*j)));
            return std::nullopt;
        }
        return j->get<long long>();
    }

    const json* array(const json& obj, const std::string& path, std::string_view key, bool required) {
        const json* j = field(obj, path, key, required);
        if (j == nullptr) return nullptr;
        if (!j->is_array()) {
            fail(join_path(path, key), fmt::format("expected an array, found {}", type_name(*j)));
            return nullptr;
        }
        return j;
    }

    void version(const json& obj, const std::string& path) {
        auto v = string(obj, path, "format_version", false);
        if (v && *v != kFormatVersion) {
            fail(join_path(path, "format_version"),
                 fmt::format("unsupported format_version '{}' (expected '{}')", *v, kFormatVersion));
        }
    }
};

std::optional<ValueScale> read_scale(Reader& r, const json& j, const std::string& path) {
    if (!j.is_object()) {
        r.fail(path, fmt::format("expected an object, found {}", type_name(j)));
        return std::nullopt;
    }
    auto kind = r.string(j, path, "kind", true);
    if (!kind) return std::nullopt;
    if (*kind == "interval") {
        r.object(j, path, {"kind", "v_low", "v_high", "units"});
        auto lo = r.number(j, path, "v_low", true);
        auto hi = r.number(j, path, "v_high", true);
        auto units = r.string(j, path, "units", false);
        if (!lo || !hi) return std::nullopt;
        return IntervalScale{*lo, *hi, units.value_or("")};
    }
    if (*kind == "nominal" || *kind == "ordinal") {
        r.object(j, path, {"kind"});
        if (*kind == "nominal") return NominalScale{};
        return OrdinalScale{};
    }
    r.fail(join_path(path, "kind"), fmt::format("unknown scale kind '{}' (interval, nominal, ordinal)", *kind));
    return std::nullopt;
}

std::optional<RoleSpec> read_role(Reader& r, const json& j, const std::string& path) {
    if (!r.object(j, path, {"kind", "intensity"})) return std::nullopt;
    auto kind_text = r.string(j, path, "kind", true);
    auto intensity = r.unit(j, path, "intensity", true);
    std::optional<RoleKind> kind;
    if (kind_text) {
        kind = parse_role_kind(*kind_text);
        if (!kind) {
            r.fail(join_path(path, "kind"),
                   fmt::format("unknown role kind '{}' (supportive, adverse, sufficient, necessary, contrary)",
                               *kind_text));
        }
    }
    if (!kind || !intensity) return std::nullopt;
    return RoleSpec{*kind, *intensity};
}

std::optional<FactorSpec> read_factor(Reader& r, const json& j, const std::string& path) {
    if (!r.object(j, path, {"id", "label", "scale", "roles", "sharpness"})) return std::nullopt;
    FactorSpec f;
    bool complete = true;

    if (auto id = r.string(j, path, "id", true)) f.id = *id; else complete = false;
    f.label = r.string(j, path, "label", false).value_or("");

    if (const json* scale = r.field(j, path, "scale", true)) {
        if (auto s = read_scale(r, *scale, join_path(path, "scale"))) f.scale = *s; else complete = false;
    } else {
        complete = false;
    }

    if (const json* roles = r.array(j, path, "roles", true)) {
        if (roles->empty()) r.fail(join_path(path, "roles"), "factor plays no role");
        for (std::size_t i = 0; i < roles->size(); ++i) {
            if (auto role = read_role(r, (*roles)[i], index_path(join_path(path, "roles"), i))) {
                f.roles.push_back(*role);
            } else {
                complete = false;
            }
        }
    } else {
        complete = false;
    }

    if (auto n = r.integer(j, path, "sharpness", false)) {
        if (*n < 1 || *n > 1000) {
            r.fail(join_path(path, "sharpness"), fmt::format("sharpness {} must be in [1, 1000]", *n));
        } else {
            f.sharpness = static_cast<int>(*n);
        }
    }
    if (!complete) return std::nullopt;
    return f;
}

std::optional<EvidenceItem> read_evidence_entry(Reader& r, const json& j, const std::string& path) {
    if (!r.object(j, path, {"factor", "value", "eta", "unknown"})) return std::nullopt;
    auto factor = r.string(j, path, "factor", true);

    const int present = static_cast<int>(j.contains("value")) + static_cast<int>(j.contains("eta")) +
                        static_cast<int>(j.contains("unknown"));
    if (present != 1) {
        r.fail(path, "entry needs exactly one of 'value', 'eta' or 'unknown'");
        return std::nullopt;
    }

    Observation obs;
    if (j.contains("value")) {
        auto v = r.number(j, path, "value", true);
        if (!v) return std::nullopt;
        obs = ObservedValue{*v};
    } else if (j.contains("eta")) {
        auto eta = r.unit(j, path, "eta", true);
        if (!eta) return std::nullopt;
        obs = ObservedStrength{*eta};
    } else {
        const json& u = j.at("unknown");
        if (!u.is_boolean() || !u.get<bool>()) {
            r.fail(join_path(path, "unknown"), "'unknown' must be true");
            return std::nullopt;
        }
        obs = Unobserved{};
    }
    if (!factor) return std::nullopt;
    return EvidenceItem{*factor, obs};
}

std::string stage_name(RoleKind kind) { return std::string(to_string(kind)); }

}  // namespace

std::string format_belief(double value) { return fmt::format("{:.9f}", value); }

json parse_json(std::string_view text) {
    std::vector<std::unordered_set<std::string>> keys;
    std::vector<Diagnostic> duplicates;
    json::parser_callback_t callback = [&](int /*depth*/, json::parse_event_t event, json& parsed) {
        switch (event) {
            case json::parse_event_t::object_start:
                keys.emplace_back();
                break;
            case json::parse_event_t::object_end:
                if (!keys.empty()) keys.pop_back();
                break;
            case json::parse_event_t::key:
                if (!keys.empty() && !keys.back().insert(parsed.get<std::string>()).second) {
                    duplicates.push_back({"", fmt::format("duplicate key '{}'", parsed.get<std::string>())});
                }
                break;
            default:
                break;
        }
        return true;
    };

    json out;
    try {
        out = json::parse(text.begin(), text.end(), callback, true, false);
    } catch (const json::parse_error& e) {
        std::string message = e.what();
        if (auto pos = message.find("] "); pos != std::string::npos) message.erase(0, pos + 2);
        throw Error(ErrorCode::Syntax, message);
    }
    if (!duplicates.empty()) throw Error(ErrorCode::Syntax, std::move(duplicates));
    return out;
}

EvaluationOptions options_from_json(const json& doc, const std::string& path, EvaluationOptions base) {
    Reader r;
    if (!r.object(doc, path, {"tnorm", "lambda", "out_of_range"})) r.throw_if_failed();

    EvaluationOptions out = base;
    if (auto t = r.string(doc, path, "tnorm", false)) {
        if (auto kind = parse_tnorm_kind(*t)) {
            if (*kind != out.tnorm.kind) out.tnorm = TNorm{*kind, 1.0};
            if (*kind == TNormKind::Hamacher && !doc.contains("lambda") && base.tnorm.kind != TNormKind::Hamacher) {
                r.fail(join_path(path, "lambda"), "hamacher t-norm requires lambda");
            }
        } else {
            r.fail(join_path(path, "tnorm"),
                   fmt::format("unknown t-norm '{}' (product, min, lukasiewicz, hamacher)", *t));
        }
    }
    if (auto lambda = r.unit(doc, path, "lambda", false)) {
        if (out.tnorm.kind != TNormKind::Hamacher) {
            r.fail(join_path(path, "lambda"), "lambda applies only to the hamacher t-norm");
        } else {
            out.tnorm.lambda = *lambda;
        }
    }
    if (auto policy = r.string(doc, path, "out_of_range", false)) {
        if (*policy == "error") {
            out.out_of_range = OutOfRangePolicy::Error;
        } else if (*policy == "clamp") {
            out.out_of_range = OutOfRangePolicy::Clamp;
        } else {
            r.fail(join_path(path, "out_of_range"), fmt::format("unknown policy '{}' (error, clamp)", *policy));
        }
    }
    r.throw_if_failed();
    return out;
}

KbDocument kb_from_json(const json& doc) {
    Reader r;
    KbDocument out;
    if (!r.object(doc, "", {"format_version", "hypothesis", "prior", "factors", "options"})) r.throw_if_failed();
    r.version(doc, "");

    if (auto h = r.string(doc, "", "hypothesis", true)) out.kb.hypothesis = *h;
    if (auto p = r.unit(doc, "", "prior", false)) out.kb.prior = BeliefDegree(*p);

    if (const json* factors = r.array(doc, "", "factors", true)) {
        for (std::size_t i = 0; i < factors->size(); ++i) {
            if (auto f = read_factor(r, (*factors)[i], index_path("factors", i))) out.kb.factors.push_back(*f);
        }
    }

    if (const json* options = r.field(doc, "", "options", false)) {
        try {
            out.options = options_from_json(*options, "options", EvaluationOptions{});
        } catch (const Error& err) {
            for (const auto& d : err.diagnostics()) r.diagnostics.push_back(d);
        }
    }
    r.throw_if_failed();

    require_valid(out.kb);
    return out;
}

KbDocument parse_kb_document(std::string_view text) { return kb_from_json(parse_json(text)); }

KnowledgeBase parse_kb(std::string_view text) { return parse_kb_document(text).kb; }

std::vector<EvidenceItem> evidence_from_json(const json& entries) {
    Reader r;
    std::vector<EvidenceItem> out;
    if (!entries.is_array()) {
        r.fail("evidence", fmt::format("expected an array, found {}", type_name(entries)));
        r.throw_if_failed();
    }
    for (std::size_t i = 0; i < entries.size(); ++i) {
        if (auto item = read_evidence_entry(r, entries[i], index_path("evidence", i))) out.push_back(*item);
    }
    r.throw_if_failed();
    return out;
}

std::vector<EvidenceItem> parse_evidence_entries(std::string_view text) {
    const json doc = parse_json(text);
    Reader r;
    if (!r.object(doc, "", {"format_version", "evidence"})) r.throw_if_failed();
    r.version(doc, "");
    const json* entries = r.array(doc, "", "evidence", true);
    r.throw_if_failed();
    return evidence_from_json(*entries);
}

void check_evidence(std::span<const EvidenceItem> evidence, const KnowledgeBase& kb) {
    std::vector<Diagnostic> diagnostics;
    std::optional<ErrorCode> first;
    auto fail = [&](ErrorCode code, std::string path, std::string message) {
        if (!first) first = code;
        diagnostics.push_back({std::move(path), std::move(message)});
    };

    std::set<std::string, std::less<>> seen;
    for (std::size_t i = 0; i < evidence.size(); ++i) {
        const auto& item = evidence[i];
        const std::string path = index_path("evidence", i);
        const FactorSpec* f = kb.find(item.factor_id);
        if (f == nullptr) {
            fail(ErrorCode::UnknownFactor, path + ".factor", fmt::format("unknown factor '{}'", item.factor_id));
            continue;
        }
        if (!seen.insert(item.factor_id).second) {
            fail(ErrorCode::DuplicateEvidence, path + ".factor",
                 fmt::format("duplicate evidence for factor '{}'", item.factor_id));
        }
        if (std::holds_alternative<ObservedValue>(item.observation) &&
            !std::holds_alternative<IntervalScale>(f->scale)) {
            fail(ErrorCode::Scale, path + ".value",
                 fmt::format("factor '{}' has a {} scale; value observations require interval scale", f->id,
                             scale_kind_name(f->scale)));
        }
    }
    if (first) throw Error(*first, std::move(diagnostics));
}

std::vector<EvidenceItem> parse_evidence(std::string_view text, const KnowledgeBase& kb) {
    auto items = parse_evidence_entries(text);
    check_evidence(items, kb);
    return items;
}

json to_json(const EvaluationOptions& options) {
    json out = json::object();
    out["tnorm"] = std::string(to_string(options.tnorm.kind));
    if (options.tnorm.kind == TNormKind::Hamacher) out["lambda"] = options.tnorm.lambda;
    out["out_of_range"] = options.out_of_range == OutOfRangePolicy::Clamp ? "clamp" : "error";
    return out;
}

json to_json(const KbDocument& doc) {
    json out = json::object();
    out["format_version"] = doc.format_version;
    out["hypothesis"] = doc.kb.hypothesis;
    out["prior"] = doc.kb.prior.value();
    json factors = json::array();
    for (const auto& f : doc.kb.factors) {
        json jf = json::object();
        jf["id"] = f.id;
        jf["label"] = f.label;
        json scale = json::object();
        scale["kind"] = std::string(scale_kind_name(f.scale));
        if (const auto* interval = std::get_if<IntervalScale>(&f.scale)) {
            scale["v_low"] = interval->v_low;
            scale["v_high"] = interval->v_high;
            if (!interval->units.empty()) scale["units"] = interval->units;
        }
        jf["scale"] = std::move(scale);
        json roles = json::array();
        for (const auto& role : f.roles) {
            roles.push_back({{"kind", std::string(to_string(role.kind))}, {"intensity", role.intensity}});
        }
        jf["roles"] = std::move(roles);
        jf["sharpness"] = f.sharpness;
        factors.push_back(std::move(jf));
    }
    out["factors"] = std::move(factors);
    if (doc.options) out["options"] = to_json(*doc.options);
    return out;
}

std::string write_kb(const KbDocument& doc) { return to_json(doc).dump(2) + "\n"; }

json to_json(std::span<const EvidenceItem> evidence) {
    json out = json::array();
    for (const auto& item : evidence) {
        json entry = {{"factor", item.factor_id}};
        std::visit(
            [&entry](const auto& obs) {
                using T = std::decay_t<decltype(obs)>;
                if constexpr (std::is_same_v<T, ObservedValue>) {
                    entry["value"] = obs.v;
                } else if constexpr (std::is_same_v<T, ObservedStrength>) {
                    entry["eta"] = obs.eta;
                } else {
                    entry["unknown"] = true;
                }
            },
            item.observation);
        out.push_back(std::move(entry));
    }
    return out;
}

std::string write_evidence(std::span<const EvidenceItem> evidence) {
    json doc = {{"format_version", std::string(kFormatVersion)}, {"evidence", to_json(evidence)}};
    return doc.dump(2) + "\n";
}

json to_json(const EvaluationTrace& trace) {
    json stages = json::array();
    for (const auto& s : trace.stages) {
        json inputs = json::array();
        for (const auto& in : s.inputs) {
            inputs.push_back({{"factor", in.factor_id}, {"intensity", in.intensity}, {"eta", in.eta}});
        }
        stages.push_back({{"stage", stage_name(s.stage)},
                          {"inputs", std::move(inputs)},
                          {"belief_before", s.belief_before.value()},
                          {"belief_after", s.belief_after.value()}});
    }
    return stages;
}

std::string write_trace(const EvaluationTrace& trace) {
    json doc = json::object();
    doc["format_version"] = std::string(kFormatVersion);
    doc["stages"] = to_json(trace);
    doc["final_belief"] = trace.stages.empty() ? json(nullptr) : json(trace.stages.back().belief_after.value());
    return doc.dump(2) + "\n";
}

EvaluationTrace trace_from_json(const json& stages) {
    Reader r;
    EvaluationTrace out;
    if (!stages.is_array()) {
        r.fail("stages", fmt::format("expected an array, found {}", type_name(stages)));
        r.throw_if_failed();
    }
    std::size_t order_pos = 0;
    for (std::size_t i = 0; i < stages.size(); ++i) {
        const std::string path = index_path("stages", i);
        const json& js = stages[i];
        if (!r.object(js, path, {"stage", "inputs", "belief_before", "belief_after"})) continue;
        StageRecord rec;
        auto name = r.string(js, path, "stage", true);
        std::optional<RoleKind> kind = name ? parse_role_kind(*name) : std::nullopt;
        if (name && !kind) r.fail(join_path(path, "stage"), fmt::format("unknown stage '{}'", *name));
        if (kind) {
            auto it = std::find(kPipelineOrder.begin() + static_cast<std::ptrdiff_t>(order_pos), kPipelineOrder.end(),
                                *kind);
            if (it == kPipelineOrder.end()) {
                r.fail(join_path(path, "stage"), fmt::format("stage '{}' out of pipeline order", *name));
            } else {
                order_pos = static_cast<std::size_t>(it - kPipelineOrder.begin()) + 1;
                rec.stage = *kind;
            }
        }
        auto before = r.unit(js, path, "belief_before", true);
        auto after = r.unit(js, path, "belief_after", true);
        if (before) rec.belief_before = BeliefDegree(*before);
        if (after) rec.belief_after = BeliefDegree(*after);
        if (before && !out.stages.empty() && out.stages.back().belief_after != rec.belief_before) {
            r.fail(join_path(path, "belief_before"), "does not continue the previous stage's belief_after");
        }
        if (const json* inputs = r.array(js, path, "inputs", true)) {
            for (std::size_t k = 0; k < inputs->size(); ++k) {
                const std::string ipath = index_path(join_path(path, "inputs"), k);
                const json& ji = (*inputs)[k];
                if (!r.object(ji, ipath, {"factor", "intensity", "eta"})) continue;
                auto factor = r.string(ji, ipath, "factor", true);
                auto intensity = r.unit(ji, ipath, "intensity", true);
                auto eta = r.unit(ji, ipath, "eta", true);
                if (factor && intensity && eta) rec.inputs.push_back({*factor, *intensity, *eta});
            }
        }
        out.stages.push_back(std::move(rec));
    }
    r.throw_if_failed();
    return out;
}

EvaluationTrace parse_trace(std::string_view text) {
    const json doc = parse_json(text);
    Reader r;
    if (!r.object(doc, "", {"format_version", "stages", "final_belief"})) r.throw_if_failed();
    r.version(doc, "");
    const json* stages = r.array(doc, "", "stages", true);
    r.throw_if_failed();
    auto trace = trace_from_json(*stages);
    if (const json* fb = r.field(doc, "", "final_belief", false); fb != nullptr && !fb->is_null()) {
        auto v = r.unit(doc, "", "final_belief", true);
        if (v && (trace.stages.empty() || trace.stages.back().belief_after.value() != *v)) {
            r.fail("final_belief", "does not match the last stage's belief_after");
        }
    }
    r.throw_if_failed();
    return trace;
}

json to_json(std::span<const SweepRow> rows) {
    json out = json::array();
    for (const auto& row : rows) {
        json stages = json::object();
        for (std::size_t s = 0; s < kPipelineOrder.size(); ++s) stages[stage_name(kPipelineOrder[s])] = row.stage_beliefs[s];
        out.push_back({{"eta", row.eta}, {"belief", row.belief.value()}, {"stages", std::move(stages)}});
    }
    return out;
}

std::string write_sweep(std::span<const SweepRow> rows) {
    std::string out(kSweepHeader);
    out += '\n';
    for (const auto& row : rows) {
        out += format_belief(row.eta);
        out += ',';
        out += format_belief(row.belief.value());
        for (double b : row.stage_beliefs) {
            out += ',';
            out += format_belief(b);
        }
        out += '\n';
    }
    return out;
}

std::vector<SweepRow> parse_sweep(std::string_view text) {
    std::vector<SweepRow> rows;
    std::istringstream in{std::string(text)};
    std::string line;
    if (!std::getline(in, line) || line != kSweepHeader) {
        throw Error(ErrorCode::Schema, "sweep header mismatch", "line 1");
    }
    std::size_t line_no = 1;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) continue;
        std::array<double, 7> fields{};
        std::size_t count = 0;
        std::string_view rest = line;
        while (true) {
            const auto comma = rest.find(',');
            const auto cell = rest.substr(0, comma);
            double v = 0.0;
            auto [ptr, ec] = std::from_chars(cell.data(), cell.data() + cell.size(), v);
            if (ec != std::errc{} || ptr != cell.data() + cell.size() || count >= fields.size()) {
                throw Error(ErrorCode::Schema, fmt::format("malformed sweep row '{}'", line),
                            fmt::format("line {}", line_no));
            }
            fields[count++] = v;
            if (comma == std::string_view::npos) break;
            rest.remove_prefix(comma + 1);
        }
        if (count != fields.size()) {
            throw Error(ErrorCode::Schema, fmt::format("expected 7 columns, found {}", count),
                        fmt::format("line {}", line_no));
        }
        SweepRow row{fields[0], BeliefDegree(fields[1]), {}};
        std::copy(fields.begin() + 2, fields.end(), row.stage_beliefs.begin());
        rows.push_back(row);
    }
    return rows;
}

json field_schema() {
    auto field = [](std::string path, std::string type, bool required, std::string description) {
        return json{{"path", std::move(path)}, {"type", std::move(type)}, {"required", required},
                    {"description", std::move(description)}};
    };
    json role_kinds = json::array();
    for (auto kind : kAllRoleKinds) role_kinds.push_back(std::string(to_string(kind)));

    json kb = json::array();
    kb.push_back(field("format_version", "string", false, "document version; only \"1\" is accepted"));
    kb.push_back(field("hypothesis", "string", true, "the decision under consideration"));
    kb.push_back(field("prior", "number[0,1]", false, "initial degree of belief, default 0"));
    kb.push_back(field("factors", "array", true, "factor specifications in aggregation order"));
    kb.push_back(field("factors[].id", "string", true, "unique factor identifier"));
    kb.push_back(field("factors[].label", "string", false, "human-readable label"));
    kb.push_back(field("factors[].scale.kind", "enum", true, "interval, nominal or ordinal"));
    kb.push_back(field("factors[].scale.v_low", "number", false, "lower margin; interval scale only"));
    kb.push_back(field("factors[].scale.v_high", "number", false, "upper margin, > v_low; interval scale only"));
    kb.push_back(field("factors[].scale.units", "string", false, "units of the factor value"));
    kb.push_back(field("factors[].roles", "array", true, "non-empty list of roles"));
    kb.push_back(field("factors[].roles[].kind", "enum", true, "role kind"));
    kb.push_back(field("factors[].roles[].intensity", "number[0,1]", true, "role intensity"));
    kb.push_back(field("factors[].sharpness", "integer>=1", false, "exponent applied to the strength, default 1"));
    kb.push_back(field("options", "object", false, "default evaluation options"));

    json evidence = json::array();
    evidence.push_back(field("evidence[].factor", "string", true, "factor id"));
    evidence.push_back(field("evidence[].value", "number", false, "observed value within the margins"));
    evidence.push_back(field("evidence[].eta", "number[0,1]", false, "direct evidential strength"));
    evidence.push_back(field("evidence[].unknown", "true", false, "no evidence for the factor"));

    json options = json::array();
    options.push_back(field("tnorm", "enum", false, "product, min, lukasiewicz or hamacher"));
    options.push_back(field("lambda", "number[0,1]", false, "hamacher parameter"));
    options.push_back(field("out_of_range", "enum", false, "error or clamp"));

    return json{{"format_version", std::string(kFormatVersion)},
                {"kb", std::move(kb)},
                {"evidence", std::move(evidence)},
                {"options", std::move(options)},
                {"role_kinds", std::move(role_kinds)},
                {"scale_kinds", {"interval", "nominal", "ordinal"}},
                {"tnorms", {"product", "min", "lukasiewicz", "hamacher"}},
                {"stages", {"supportive", "adverse", "sufficient", "contrary", "necessary"}}};
}

}  // namespace ede
