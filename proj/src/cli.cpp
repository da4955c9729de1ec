#include "ede/cli.hpp"

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <fmt/format.h>

#include "CLI11.hpp"

#include "ede/aggregation.hpp"
#include "ede/calculi.hpp"
#include "ede/kb_io.hpp"
#include "ede/roles.hpp"

namespace ede::cli {

namespace {

struct OptionFlags {
    std::optional<std::string> tnorm;
    std::optional<double> lambda;
    bool clamp = false;
};

struct Inputs {
    std::string kb_path;
    std::string ev_path;
    OptionFlags flags;
    std::string format;
};

// Error raised while reading a named file, so diagnostics can carry the file.
struct FileError {
    std::string file;
    Error error;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(ErrorCode::Io, fmt::format("cannot read '{}'", path));
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

template <typename Fn>
auto load(const std::string& path, Fn&& parse) {
    try {
        return parse(read_file(path));
    } catch (const Error& err) {
        throw FileError{path, err};
    }
}

void add_option_flags(CLI::App* cmd, OptionFlags& flags) {
    cmd->add_option("--tnorm", flags.tnorm, "t-norm for aggregating evidence")
        ->check(CLI::IsMember({"product", "min", "lukasiewicz", "hamacher"}));
    cmd->add_option("--lambda", flags.lambda, "Hamacher parameter in [0, 1]");
    cmd->add_flag("--clamp", flags.clamp, "clamp out-of-range values to the margins instead of failing");
}

void add_inputs(CLI::App* cmd, Inputs& in) {
    cmd->add_option("kb", in.kb_path, "knowledge base (*.kb.json)")->required();
    cmd->add_option("evidence", in.ev_path, "evidence set (*.ev.json)")->required();
    add_option_flags(cmd, in.flags);
}

EvaluationOptions merge_options(const std::optional<EvaluationOptions>& embedded, const OptionFlags& flags) {
    EvaluationOptions out = embedded.value_or(EvaluationOptions{});
    if (flags.tnorm) {
        const auto kind = *parse_tnorm_kind(*flags.tnorm);
        if (kind == TNormKind::Hamacher) {
            if (flags.lambda) {
                out.tnorm = TNorm::hamacher(*flags.lambda);
            } else if (out.tnorm.kind != TNormKind::Hamacher) {
                throw Error(ErrorCode::Usage, "--tnorm hamacher requires --lambda");
            }
        } else {
            if (flags.lambda) throw Error(ErrorCode::Usage, "--lambda applies only to --tnorm hamacher");
            out.tnorm = TNorm{kind, 1.0};
        }
    } else if (flags.lambda) {
        if (out.tnorm.kind != TNormKind::Hamacher) {
            throw Error(ErrorCode::Usage, "--lambda applies only to --tnorm hamacher");
        }
        out.tnorm.lambda = *flags.lambda;
    }
    if (flags.clamp) out.out_of_range = OutOfRangePolicy::Clamp;
    validate_options(out);
    return out;
}

struct Loaded {
    KbDocument doc;
    std::vector<EvidenceItem> evidence;
    EvaluationOptions options;
};

Loaded load_inputs(const Inputs& in) {
    Loaded out;
    out.doc = load(in.kb_path, [](const std::string& text) { return parse_kb_document(text); });
    out.evidence = load(in.ev_path, [](const std::string& text) { return parse_evidence_entries(text); });
    out.options = merge_options(out.doc.options, in.flags);
    return out;
}

std::string format_inputs(const std::vector<StageInput>& inputs) {
    std::string out = "[";
    for (std::size_t i = 0; i < inputs.size(); ++i) {
        if (i > 0) out += "; ";
        out += fmt::format("{}: intensity={} eta={}", inputs[i].factor_id, format_belief(inputs[i].intensity),
                           format_belief(inputs[i].eta));
    }
    return out + "]";
}

int run_evaluate(const Inputs& in, bool show_trace, Streams& io) {
    const auto loaded = load_inputs(in);
    const auto result = evaluate_pipeline(loaded.doc.kb, loaded.evidence, loaded.options);

    if (in.format == "json") {
        nlohmann::json doc = {{"belief", result.belief.value()},
                              {"trace", to_json(result.trace)},
                              {"warnings", result.warnings}};
        io.out << doc.dump(2) << '\n';
        return kExitOk;
    }
    for (const auto& w : result.warnings) io.err << "warning: " << w << '\n';
    if (show_trace) {
        for (const auto& s : result.trace.stages) {
            io.out << fmt::format("{:<11} {} -> {}  {}\n", to_string(s.stage), format_belief(s.belief_before.value()),
                                  format_belief(s.belief_after.value()), format_inputs(s.inputs));
        }
    }
    io.out << format_belief(result.belief.value()) << '\n';
    return kExitOk;
}

int run_sweep(const Inputs& in, const std::string& factor, int steps, Streams& io) {
    const auto loaded = load_inputs(in);
    const auto rows = sweep_factor(loaded.doc.kb, loaded.evidence, loaded.options, factor, steps);
    if (in.format == "json") {
        nlohmann::json doc = {{"factor", factor}, {"steps", steps}, {"rows", to_json(rows)}};
        io.out << doc.dump(2) << '\n';
    } else {
        io.out << write_sweep(rows);
    }
    return kExitOk;
}

int run_compare(const Inputs& in, Streams& io) {
    const auto loaded = load_inputs(in);
    const auto table = compare_calculi(loaded.doc.kb, loaded.evidence, loaded.options);

    if (in.format == "json") {
        nlohmann::json rows = nlohmann::json::array();
        for (const auto& row : table.rows) {
            rows.push_back({{"calculus", std::string(to_string(row.calculus))},
                            {"value", row.value ? nlohmann::json(*row.value) : nlohmann::json(nullptr)},
                            {"note", row.note}});
        }
        nlohmann::json doc = {{"prior", table.prior},
                              {"support", table.support},
                              {"adversity", table.adversity},
                              {"rows", std::move(rows)}};
        io.out << doc.dump(2) << '\n';
    } else if (in.format == "csv") {
        io.out << "calculus,value\n";
        for (const auto& row : table.rows) {
            io.out << to_string(row.calculus) << ',' << (row.value ? format_belief(*row.value) : "") << '\n';
        }
    } else {
        for (const auto& row : table.rows) {
            io.out << fmt::format("{:<30}{}\n", to_string(row.calculus),
                                  row.value ? format_belief(*row.value) : "undefined (" + row.note + ")");
        }
    }
    return kExitOk;
}

int run_validate(const std::string& path, Streams& io) {
    const std::string text = load(path, [](const std::string& t) { return t; });
    auto is_evidence = [&] {
        if (path.size() >= 8 && path.compare(path.size() - 8, 8, ".ev.json") == 0) return true;
        try {
            const auto doc = nlohmann::json::parse(text);
            return doc.is_object() && doc.contains("evidence") && !doc.contains("factors");
        } catch (const nlohmann::json::exception&) {
            return false;
        }
    };
    if (is_evidence()) {
        const auto items = load(path, [](const std::string& t) { return parse_evidence_entries(t); });
        io.out << fmt::format("ok: {} (evidence, {} entries)\n", path, items.size());
    } else {
        const auto doc = load(path, [](const std::string& t) { return parse_kb_document(t); });
        io.out << fmt::format("ok: {} (knowledge base, {} factors)\n", path, doc.kb.factors.size());
    }
    return kExitOk;
}

int run_elicit(const std::string& kind, const std::vector<double>& values, Streams& io) {
    auto expect = [&](std::size_t n) {
        if (values.size() != n) {
            throw Error(ErrorCode::Usage, fmt::format("elicit {} takes {} value(s), got {}", kind, n, values.size()));
        }
    };
    double result = 0.0;
    if (kind == "supp") {
        expect(2);
        result = elicit_supp(BeliefDegree(values[0]), BeliefDegree(values[1]));
    } else if (kind == "adv") {
        expect(2);
        result = elicit_adv(BeliefDegree(values[0]), BeliefDegree(values[1]));
    } else if (kind == "nec") {
        expect(1);
        result = elicit_nec(BeliefDegree(values[0]));
    } else {
        expect(1);
        result = elicit_contr(BeliefDegree(values[0]));
    }
    io.out << format_belief(result) << '\n';
    return kExitOk;
}

void print_diagnostics(Streams& io, const std::string& file, const Error& err) {
    const char* label = io.color ? "\x1b[1;31merror\x1b[0m" : "error";
    for (const auto& d : err.diagnostics()) {
        io.err << label << ": ";
        if (!file.empty()) io.err << file << ": ";
        if (!d.path.empty()) io.err << d.path << ": ";
        io.err << d.message << '\n';
    }
}

int exit_code(const Error& err) { return err.is_input_error() ? kExitInput : kExitComputation; }

}  // namespace

int run(int argc, const char* const* argv, Streams streams) {
    CLI::App app{"Evidential decision engine: factor roles, partial evidence, staged belief aggregation", "ede"};
    app.require_subcommand(1);

    Inputs eval_in;
    bool show_trace = false;
    auto* evaluate = app.add_subcommand("evaluate", "evaluate a knowledge base against evidence");
    add_inputs(evaluate, eval_in);
    evaluate->add_flag("--trace", show_trace, "print the belief before and after each stage");
    eval_in.format = "text";
    evaluate->add_option("--format", eval_in.format, "output format")->check(CLI::IsMember({"text", "json"}));

    Inputs sweep_in;
    std::string sweep_factor_id;
    int steps = 11;
    auto* sweep = app.add_subcommand("sweep", "vary one factor's strength from 0 to 1");
    add_inputs(sweep, sweep_in);
    sweep->add_option("--factor", sweep_factor_id, "factor to vary")->required();
    sweep->add_option("--steps", steps, "number of evenly spaced strengths (>= 2)")
        ->capture_default_str()
        ->check(CLI::Range(2, 100000));
    sweep_in.format = "csv";
    sweep->add_option("--format", sweep_in.format, "output format")->check(CLI::IsMember({"csv", "json"}));

    Inputs compare_in;
    auto* compare = app.add_subcommand("compare", "compare against certainty factors and Dempster-Shafer");
    add_inputs(compare, compare_in);
    compare_in.format = "text";
    compare->add_option("--format", compare_in.format, "output format")
        ->check(CLI::IsMember({"text", "json", "csv"}));

    std::string validate_path;
    auto* validate = app.add_subcommand("validate", "check a knowledge base or evidence document");
    validate->add_option("path", validate_path, "document to check")->required();

    std::string elicit_kind;
    std::vector<double> elicit_values;
    auto* elicit = app.add_subcommand("elicit", "derive a role intensity from elicited beliefs");
    elicit->add_option("kind", elicit_kind, "supp PRIOR POSTERIOR | adv PRIOR POSTERIOR | nec BEL_AT_LOW | contr BEL_AT_HIGH")
        ->required()
        ->check(CLI::IsMember({"supp", "adv", "nec", "contr"}));
    elicit->add_option("values", elicit_values, "beliefs in [0, 1]")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, streams.out, streams.err);
        return code == 0 ? kExitOk : kExitInput;
    }

    try {
        if (*evaluate) return run_evaluate(eval_in, show_trace, streams);
        if (*sweep) return run_sweep(sweep_in, sweep_factor_id, steps, streams);
        if (*compare) return run_compare(compare_in, streams);
        if (*validate) return run_validate(validate_path, streams);
        if (*elicit) return run_elicit(elicit_kind, elicit_values, streams);
    } catch (const FileError& fe) {
        print_diagnostics(streams, fe.file, fe.error);
        return exit_code(fe.error);
    } catch (const Error& err) {
        print_diagnostics(streams, "", err);
        return exit_code(err);
    }
    return kExitInput;
}

}  // namespace ede::cli
