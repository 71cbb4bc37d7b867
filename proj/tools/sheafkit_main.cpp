// sheafkit CLI: parses the JSON interchange formats, dispatches to the
// analyses, and prints deterministic reports.
//
// Exit codes: 0 success, 1 flow-check verdict "not recoverable",
// 2 malformed input (bad JSON, schema violation, failed sheaf axioms).

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "sheafkit/errors.hpp"
#include "sheafkit/json_io.hpp"

using nlohmann::json;
using namespace sheafkit;

namespace {

struct Options {
    std::string file;
    std::string format = "json";
    bool human = false;
    std::string taps;
    std::string input;
    std::int64_t window = 1;
    std::string emit_path;

    bool human_output() const { return human || format == "human"; }
};

void emit(std::ostream& os, const json& j, int indent);

void emit_entry(std::ostream& os, const std::string& label, const json& value, int indent) {
    std::string pad(indent, ' ');
    auto scalar = [](const json& x) { return !x.is_object() && !x.is_array(); };
    if (scalar(value)) {
        os << pad << label << ": " << (value.is_string() ? value.get<std::string>() : value.dump()) << "\n";
        return;
    }
    if (value.is_array()) {
        bool flat = true;
        for (const json& item : value) {
            if (item.is_object() || item.is_array()) flat = false;
        }
        if (flat) {
            os << pad << label << ":";
            for (const json& item : value) {
                os << " " << (item.is_string() ? item.get<std::string>() : item.dump());
            }
            os << "\n";
            return;
        }
    }
    os << pad << label << ":\n";
    emit(os, value, indent + 2);
}

// Small indented key/value rendering for --human reports.
void emit(std::ostream& os, const json& j, int indent) {
    if (j.is_object()) {
        for (const auto& [key, value] : j.items()) emit_entry(os, key, value, indent);
        return;
    }
    if (j.is_array()) {
        std::size_t i = 0;
        for (const json& item : j) emit_entry(os, "[" + std::to_string(i++) + "]", item, indent);
        return;
    }
    os << std::string(indent, ' ') << (j.is_string() ? j.get<std::string>() : j.dump()) << "\n";
}

void print_report(const Options& opt, const json& report) {
    if (opt.human_output()) {
        emit(std::cout, report, 0);
    } else {
        std::cout << report.dump(2) << "\n";
    }
}

std::vector<Rational> parse_csv_rationals(const std::string& text, const std::string& what) {
    std::vector<Rational> out;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t comma = text.find(',', start);
        std::string token = text.substr(start, comma == std::string::npos ? comma : comma - start);
        try {
            out.push_back(Rational::parse(token));
        } catch (const std::invalid_argument& e) {
            throw ParseError(e.what(), what);
        }
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return out;
}

json violations_to_json(const std::vector<SheafViolation>& violations) {
    json out = json::array();
    for (const auto& v : violations) {
        json entry{{"kind", to_string(v.kind)}, {"detail", v.detail}};
        out.push_back(std::move(entry));
    }
    return out;
}

json morphism_violations_to_json(const std::vector<MorphismViolation>& violations) {
    json out = json::array();
    for (const auto& v : violations) {
        out.push_back(json{{"sub", v.sub.key()},
                           {"super", v.super.key()},
                           {"lhs", matrix_to_json(v.lhs)},
                           {"rhs", matrix_to_json(v.rhs)}});
    }
    return out;
}

json sections_to_json(const std::vector<Section>& sections) {
    json out = json::array();
    for (const Section& s : sections) out.push_back(section_to_json(s));
    return out;
}

// Commands that read a sheaf also accept a network file and compile it.
Sheaf sheaf_from_file(const json& j) {
    if (j.is_object() && j.contains("vertices") && j.contains("edges")) {
        return concentration_sheaf(network_from_json(j).network);
    }
    return sheaf_from_json(j);
}

[[noreturn]] void reject_invalid(const std::vector<SheafViolation>& violations) {
    json error{{"error", json{{"message", "sheaf fails validation"}, {"violations", violations_to_json(violations)}}}};
    std::cerr << error.dump(2) << "\n";
    std::exit(2);
}

int cmd_sections(const Options& opt) {
    Sheaf s = sheaf_from_file(load_json_file(opt.file));
    auto violations = validate(s);
    if (!violations.empty()) reject_invalid(violations);
    SectionSpace space = global_sections(s);
    print_report(opt, json{{"dimension", space.dimension()}, {"basis", sections_to_json(space.basis)}});
    return 0;
}

int cmd_validate(const Options& opt) {
    Sheaf s = sheaf_from_file(load_json_file(opt.file));
    auto violations = validate(s);
    print_report(opt, json{{"ok", violations.empty()}, {"violations", violations_to_json(violations)}});
    return violations.empty() ? 0 : 2;
}

int cmd_morphism_check(const Options& opt) {
    Morphism m = morphism_from_json(load_json_file(opt.file));
    auto violations = validate_morphism(m);
    print_report(opt, json{{"ok", violations.empty()}, {"violations", morphism_violations_to_json(violations)}});
    return violations.empty() ? 0 : 2;
}

int cmd_induced(const Options& opt) {
    Morphism m = morphism_from_json(load_json_file(opt.file));
    InducedMap ind = induced_map(m);
    print_report(opt, json{{"matrix", matrix_to_json(ind.matrix)},
                           {"source_dimension", ind.source_space.dimension()},
                           {"target_dimension", ind.target_space.dimension()}});
    return 0;
}

// Ambiguity of a sampling setup: accepts a network file with sensors, or an
// explicit morphism file.
int cmd_ambiguity(const Options& opt) {
    json j = load_json_file(opt.file);
    Morphism m = (j.is_object() && j.contains("vertices") && j.contains("edges"))
                     ? [&] {
                           NetworkFile nf = network_from_json(j);
                           return sampling_morphism(concentration_sheaf(nf.network), nf.sensors);
                       }()
                     : morphism_from_json(j);
    KernelSheaf kernel = kernel_sheaf(m);
    SectionSpace invisible = global_sections(kernel.sheaf);

    std::vector<Section> patterns;
    for (const Section& a : invisible.basis) {
        Section pattern;
        for (const Face& f : m.source.base().faces()) {
            pattern.values[f] = kernel.embedding.component.at(f) * a.at(f);
        }
        patterns.push_back(std::move(pattern));
    }
    print_report(opt, json{{"dimension", invisible.dimension()}, {"basis", sections_to_json(patterns)}});
    return 0;
}

int cmd_flow_check(const Options& opt) {
    NetworkFile nf = network_from_json(load_json_file(opt.file));
    RecoverabilityReport report = recoverability(concentration_sheaf(nf.network), nf.sensors);
    print_report(opt, json{{"recoverable", report.recoverable},
                           {"ambiguity_dimension", report.ambiguity_dimension},
                           {"induced_kernel_dimension", report.induced_kernel_dimension},
                           {"section_dimension", report.section_dimension},
                           {"unrecoverable_basis", sections_to_json(report.unrecoverable_basis)}});
    return report.recoverable ? 0 : 1;
}

int cmd_fir_apply(const Options& opt) {
    FilterSpec spec{parse_csv_rationals(opt.taps, "--taps"), 1};
    std::vector<Rational> input = parse_csv_rationals(opt.input, "--input");
    if (input.size() < spec.length()) {
        throw ParseError("input must carry at least as many values as there are taps", "--input");
    }
    Window window{0, static_cast<std::int64_t>(input.size() - spec.length())};
    std::vector<Rational> output = encode(spec, window).apply(input);

    if (opt.human_output()) {
        for (std::size_t i = 0; i < output.size(); ++i) std::cout << (i ? "," : "") << output[i].str();
        std::cout << "\n";
    } else {
        json values = json::array();
        for (const Rational& y : output) values.push_back(rational_to_json(y));
        std::cout << json{{"output", std::move(values)}}.dump(2) << "\n";
    }
    return 0;
}

int cmd_fir_encode(const Options& opt) {
    FilterSpec spec{parse_csv_rationals(opt.taps, "--taps"), 1};
    if (opt.window < 1) throw ParseError("--window must be at least 1", "--window");
    FilterEncoding enc = encode(spec, Window{0, opt.window - 1});
    json encoded = encoding_to_json(enc);

    if (opt.emit_path.empty()) {
        std::cout << encoded.dump(2) << "\n";
        return 0;
    }
    std::ofstream out(opt.emit_path);
    if (!out) throw ParseError("cannot write file '" + opt.emit_path + "'", "--emit-sheaves");
    out << encoded.dump(2) << "\n";
    print_report(opt, json{{"written", opt.emit_path},
                           {"taps", enc.spec.taps.size()},
                           {"window_vertices", enc.window.vertex_count()}});
    return 0;
}

void add_common(CLI::App* cmd, Options& opt) {
    cmd->add_option("--format", opt.format, "Report format")->check(CLI::IsMember({"json", "human"}));
    cmd->add_flag("--human", opt.human, "Shorthand for --format human");
}

void add_file(CLI::App* cmd, Options& opt) {
    cmd->add_option("file", opt.file, "Input JSON file")->required();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"sheafkit: exact sheaf computations on simplicial complexes"};
    app.require_subcommand(1);
    Options opt;

    int (*handler)(const Options&) = nullptr;
    auto reg = [&](CLI::App* cmd, int (*fn)(const Options&)) {
        cmd->callback([&handler, fn] { handler = fn; });
    };

    auto* sections = app.add_subcommand("sections", "Global section space of a sheaf (or network) file");
    add_file(sections, opt);
    add_common(sections, opt);
    reg(sections, cmd_sections);

    auto* validate_cmd = app.add_subcommand("validate", "Check the sheaf axioms on a file");
    add_file(validate_cmd, opt);
    add_common(validate_cmd, opt);
    reg(validate_cmd, cmd_validate);

    auto* morphism_check = app.add_subcommand("morphism-check", "Check commutativity of a morphism file");
    add_file(morphism_check, opt);
    add_common(morphism_check, opt);
    reg(morphism_check, cmd_morphism_check);

    auto* induced = app.add_subcommand("induced", "Induced section-space matrix of a morphism file");
    add_file(induced, opt);
    add_common(induced, opt);
    reg(induced, cmd_induced);

    auto* ambiguity = app.add_subcommand("ambiguity", "Sections invisible to a sampling setup");
    add_file(ambiguity, opt);
    add_common(ambiguity, opt);
    reg(ambiguity, cmd_ambiguity);

    auto* flow = app.add_subcommand("flow", "Flow-network analyses");
    auto* flow_check = flow->add_subcommand("check", "Recoverability of a sensed network");
    add_file(flow_check, opt);
    add_common(flow_check, opt);
    reg(flow_check, cmd_flow_check);
    flow->require_subcommand(1);

    auto* flow_check_alias = app.add_subcommand("flow-check", "Alias for 'flow check'");
    add_file(flow_check_alias, opt);
    add_common(flow_check_alias, opt);
    reg(flow_check_alias, cmd_flow_check);

    auto* fir = app.add_subcommand("fir", "Finite-impulse-response filters");
    auto* fir_apply = fir->add_subcommand("apply", "Run a filter over an input sequence");
    fir_apply->add_option("--taps", opt.taps, "Impulse response, e.g. 1/3,1/3,1/3")->required();
    fir_apply->add_option("--input", opt.input, "Input values, e.g. 1,1,9,2")->required();
    add_common(fir_apply, opt);
    reg(fir_apply, cmd_fir_apply);

    auto* fir_encode = fir->add_subcommand("encode", "Emit the sheaf encoding of a filter");
    fir_encode->add_option("--taps", opt.taps, "Impulse response")->required();
    fir_encode->add_option("--window", opt.window, "Number of output vertices")->required();
    fir_encode->add_option("--emit-sheaves", opt.emit_path, "Write the encoding to this file");
    add_common(fir_encode, opt);
    reg(fir_encode, cmd_fir_encode);
    fir->require_subcommand(1);

    auto* fir_apply_alias = app.add_subcommand("fir-apply", "Alias for 'fir apply'");
    fir_apply_alias->add_option("--taps", opt.taps)->required();
    fir_apply_alias->add_option("--input", opt.input)->required();
    add_common(fir_apply_alias, opt);
    reg(fir_apply_alias, cmd_fir_apply);

    auto* fir_encode_alias = app.add_subcommand("fir-encode", "Alias for 'fir encode'");
    fir_encode_alias->add_option("--taps", opt.taps)->required();
    fir_encode_alias->add_option("--window", opt.window)->required();
    fir_encode_alias->add_option("--emit-sheaves", opt.emit_path);
    add_common(fir_encode_alias, opt);
    reg(fir_encode_alias, cmd_fir_encode);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        return handler(opt);
    } catch (const ParseError& e) {
        json error{{"error", json{{"message", e.message()}, {"location", e.location()}, {"file", opt.file}}}};
        std::cerr << error.dump(2) << "\n";
        return 2;
    } catch (const std::exception& e) {
        json error{{"error", json{{"message", e.what()}, {"file", opt.file}}}};
        std::cerr << error.dump(2) << "\n";
        return 2;
    }
}
