#include "cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "effalg/constructions.hpp"
#include "effalg/decomposition.hpp"
#include "effalg/io.hpp"
#include "effalg/laws.hpp"
#include "effalg/state.hpp"
#include "json.hpp"

namespace effalg::cli {

namespace {

using Json = nlohmann::ordered_json;

// Raised for bad arguments that CLI11 can not see, such as unknown element names.
class UsageError : public Error {
  public:
    using Error::Error;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw UsageError("cannot read '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

EffectAlgebra load(const std::string& path) { return load_eaf(read_file(path)); }

ElementId element(const EffectAlgebra& algebra, const std::string& name) {
    auto id = algebra.find(name);
    if (!id) throw UsageError("unknown element '" + name + "'");
    return *id;
}

std::string yes_no(bool value) { return value ? "yes" : "no"; }

std::string joined(const EffectAlgebra& algebra, const std::vector<ElementId>& xs) {
    std::string out;
    for (auto x : xs) out += " " + algebra.name(x);
    return out;
}

Json name_list(const EffectAlgebra& algebra, const std::vector<ElementId>& xs) {
    Json out = Json::array();
    for (auto x : xs) out.push_back(algebra.name(x));
    return out;
}

Json value_list(const EffectAlgebra& algebra, const State& state) {
    Json out = Json::array();
    for (auto x : algebra.elements()) out.push_back({{"element", algebra.name(x)}, {"value", to_string(state[x])}});
    return out;
}

void print_values(std::ostream& out, const EffectAlgebra& algebra, const State& state) {
    for (auto x : algebra.elements()) out << "value " << algebra.name(x) << ' ' << to_string(state[x]) << "\n";
}

int verify(const std::string& path, bool json, std::ostream& out) {
    const auto doc = parse_eaf(read_file(path));
    AxiomReport report;
    std::string problem;
    std::size_t size = 0;
    try {
        size = build_effect_algebra(doc).size();
    } catch (const AxiomViolation& e) {
        report = e.report();
    } catch (const DuplicateSum& e) {
        problem = e.what();
    } catch (const DegenerateAlgebra& e) {
        problem = e.what();
    }
    auto witness_names = [&](const AxiomViolationRecord& v) {
        std::vector<std::string> names;
        for (auto w : v.witnesses) names.push_back(doc.names.at(w.index));
        return names;
    };
    const bool valid = report.ok() && problem.empty();
    if (json) {
        Json violations = Json::array();
        for (const auto& v : report.violations) {
            violations.push_back(
                {{"axiom", axiom_label(v.axiom)}, {"witnesses", witness_names(v)}, {"detail", v.detail}});
        }
        if (!problem.empty()) violations.push_back({{"axiom", "declaration"}, {"witnesses", Json::array()}, {"detail", problem}});
        Json doc_out{{"command", "verify"}, {"valid", valid}};
        if (valid) doc_out["elements"] = size;
        doc_out["violations"] = violations;
        out << doc_out.dump(2) << "\n";
    } else if (valid) {
        out << "valid\nelements " << size << "\n";
    } else {
        out << "invalid\n";
        for (const auto& v : report.violations) {
            out << "violation " << axiom_label(v.axiom) << " [";
            const auto names = witness_names(v);
            for (std::size_t i = 0; i < names.size(); ++i) out << (i ? " " : "") << names[i];
            out << "] " << v.detail << "\n";
        }
        if (!problem.empty()) out << "violation declaration [] " << problem << "\n";
    }
    return valid ? kOk : kFailure;
}

int analyze(const std::string& path, bool json, std::ostream& out) {
    const Analysis analysis(load(path));
    const auto& algebra = analysis.algebra();
    const auto& profile = analysis.profile();
    const auto cls = classify(algebra, analysis.order());

    std::vector<std::pair<ElementId, ElementId>> no_join;
    std::vector<std::pair<ElementId, ElementId>> no_meet;
    for (auto x : algebra.elements()) {
        for (auto y : algebra.elements()) {
            if (y <= x) continue;
            if (!analysis.order().join(x, y)) no_join.emplace_back(x, y);
            if (!analysis.order().meet(x, y)) no_meet.emplace_back(x, y);
        }
    }

    if (json) {
        Json ord = Json::object();
        Json supplement = Json::object();
        for (auto x : algebra.elements()) {
            if (x != algebra.zero()) ord[algebra.name(x)] = analysis.ord(x);
            supplement[algebra.name(x)] = algebra.name(algebra.supplement(x));
        }
        auto pairs = [&](const auto& list) {
            Json arr = Json::array();
            for (auto [x, y] : list) arr.push_back({algebra.name(x), algebra.name(y)});
            return arr;
        };
        Json doc{{"command", "analyze"},
                 {"elements", algebra.size()},
                 {"names", algebra.names()},
                 {"lattice", cls.is_lattice},
                 {"mv", cls.is_mv},
                 {"orthomodular_image", cls.is_orthomodular_image},
                 {"atomic", profile.flags.atomic},
                 {"archimedean", profile.flags.archimedean},
                 {"sharply_dominating", profile.flags.sharply_dominating},
                 {"s_dominating", profile.flags.s_dominating},
                 {"atoms", name_list(algebra, profile.atoms)},
                 {"sharp", name_list(algebra, profile.sharp)},
                 {"meager", name_list(algebra, profile.meager)},
                 {"ord", ord},
                 {"supplement", supplement},
                 {"no_join", pairs(no_join)},
                 {"no_meet", pairs(no_meet)}};
        out << doc.dump(2) << "\n";
        return kOk;
    }

    out << "elements " << algebra.size() << "\n";
    out << "names";
    for (const auto& n : algebra.names()) out << ' ' << n;
    out << "\n";
    out << "lattice " << yes_no(cls.is_lattice) << "\n";
    out << "mv " << yes_no(cls.is_mv) << "\n";
    out << "orthomodular-image " << yes_no(cls.is_orthomodular_image) << "\n";
    out << "atomic " << yes_no(profile.flags.atomic) << "\n";
    out << "archimedean " << yes_no(profile.flags.archimedean) << "\n";
    out << "sharply-dominating " << yes_no(profile.flags.sharply_dominating) << "\n";
    out << "s-dominating " << yes_no(profile.flags.s_dominating) << "\n";
    out << "atoms" << joined(algebra, profile.atoms) << "\n";
    out << "sharp" << joined(algebra, profile.sharp) << "\n";
    out << "meager" << joined(algebra, profile.meager) << "\n";
    for (auto x : algebra.elements()) {
        if (x != algebra.zero()) out << "ord " << algebra.name(x) << ' ' << analysis.ord(x) << "\n";
    }
    for (auto x : algebra.elements()) {
        out << "supplement " << algebra.name(x) << ' ' << algebra.name(algebra.supplement(x)) << "\n";
    }
    for (auto [x, y] : no_join) out << "no-join " << algebra.name(x) << ' ' << algebra.name(y) << "\n";
    for (auto [x, y] : no_meet) out << "no-meet " << algebra.name(x) << ' ' << algebra.name(y) << "\n";
    return kOk;
}

int decompose(const std::string& path, const std::string& name, bool json, std::ostream& out) {
    const Analysis analysis(load(path));
    const auto& algebra = analysis.algebra();
    const ElementId x = element(algebra, name);

    std::string mode;
    std::optional<ElementId> sharp_part;
    AtomicDecomposition parts;
    if (analysis.is_lattice()) {
        auto basic = basic_decomposition(analysis, x);
        mode = "basic";
        sharp_part = basic.sharp_part;
        parts = std::move(basic.meager_parts);
    } else {
        mode = "atomic-degraded";
        parts = atomic_decomposition(analysis, x);
    }

    if (json) {
        Json list = Json::array();
        for (const auto& p : parts.parts) list.push_back({{"atom", algebra.name(p.atom)}, {"multiplicity", p.multiplicity}});
        Json doc{{"command", "decompose"}, {"element", name}, {"mode", mode}};
        doc["sharp_part"] = sharp_part ? Json(algebra.name(*sharp_part)) : Json(nullptr);
        doc["parts"] = list;
        doc["unique"] = parts.unique;
        out << doc.dump(2) << "\n";
        return kOk;
    }
    out << "element " << name << "\n";
    out << "mode " << mode << "\n";
    if (sharp_part) out << "sharp-part " << algebra.name(*sharp_part) << "\n";
    for (const auto& p : parts.parts) out << "part " << algebra.name(p.atom) << ' ' << p.multiplicity << "\n";
    out << "unique " << yes_no(parts.unique) << "\n";
    return kOk;
}

Json certificate_json(const LinearSystem& system, const InfeasibilityCertificate& cert, const CertificateCheck& check) {
    Json rows = Json::array();
    for (std::size_t i = 0; i < system.equalities.size(); ++i) {
        if (cert.row_multipliers[i] != 0) {
            rows.push_back({{"row", system.equalities[i].label}, {"multiplier", to_string(cert.row_multipliers[i])}});
        }
    }
    auto bounds = [&](const std::vector<Rational>& values) {
        Json arr = Json::array();
        for (std::size_t j = 0; j < values.size(); ++j) {
            if (values[j] != 0) arr.push_back({{"element", system.variables[j]}, {"multiplier", to_string(values[j])}});
        }
        return arr;
    };
    return {{"rows", rows},
            {"upper", bounds(cert.upper_multipliers)},
            {"lower", bounds(cert.lower_multipliers)},
            {"gap", to_string(check.gap)},
            {"verified", check.valid}};
}

void print_certificate(std::ostream& out, const LinearSystem& system, const InfeasibilityCertificate& cert,
                       const CertificateCheck& check) {
    for (std::size_t i = 0; i < system.equalities.size(); ++i) {
        if (cert.row_multipliers[i] != 0) {
            out << "row " << to_string(cert.row_multipliers[i]) << ' ' << system.equalities[i].label << "\n";
        }
    }
    for (std::size_t j = 0; j < system.variables.size(); ++j) {
        if (cert.upper_multipliers[j] != 0) {
            out << "upper " << to_string(cert.upper_multipliers[j]) << ' ' << system.variables[j] << "\n";
        }
    }
    for (std::size_t j = 0; j < system.variables.size(); ++j) {
        if (cert.lower_multipliers[j] != 0) {
            out << "lower " << to_string(cert.lower_multipliers[j]) << ' ' << system.variables[j] << "\n";
        }
    }
    out << "gap " << to_string(check.gap) << "\n";
    out << (check.valid ? "verified" : "not-verified: " + check.reason) << "\n";
}

int states(const std::string& path, bool certify_none, bool json, std::ostream& out) {
    const EffectAlgebra algebra = load(path);
    const auto result = find_state(algebra);
    const auto* state = std::get_if<State>(&result);
    Json doc{{"command", "states"}, {"mode", certify_none ? "certify-none" : "find"}};
    if (state) {
        if (json) {
            doc["status"] = "state";
            doc["values"] = value_list(algebra, *state);
            out << doc.dump(2) << "\n";
        } else {
            out << "state\n";
            print_values(out, algebra, *state);
        }
        return certify_none ? kFailure : kOk;
    }
    const auto system = state_system(algebra);
    const auto& cert = std::get<InfeasibilityCertificate>(result);
    const auto check = check_certificate(system, cert);
    if (json) {
        doc["status"] = "no-state";
        doc["certificate"] = certificate_json(system, cert, check);
        out << doc.dump(2) << "\n";
    } else {
        out << "no-state\n";
        print_certificate(out, system, cert, check);
    }
    return certify_none && check.valid ? kOk : kFailure;
}

int smear(const std::string& path, const std::string& state_path, bool json, std::ostream& out) {
    const Analysis analysis(load(path));
    const auto& sharp = analysis.sharp_part();
    State omega{parse_state(read_file(state_path), sharp.algebra)};
    const State smeared = smear_state(analysis, omega);
    if (json) {
        out << Json{{"command", "smear"}, {"values", value_list(analysis.algebra(), smeared)}}.dump(2) << "\n";
    } else {
        out << serialize_state(analysis.algebra(), smeared);
    }
    return kOk;
}

int props(const std::string& path, const LawOptions& options, bool json, std::ostream& out) {
    const Analysis analysis(load(path));
    const auto report = run_law_suite(analysis, options);
    if (json) {
        Json laws = Json::array();
        for (const auto& r : report.results) {
            laws.push_back({{"law", r.law}, {"status", status_label(r.status)}, {"witnesses", r.witnesses}, {"detail", r.detail}});
        }
        out << Json{{"command", "props"}, {"counterexample_mode", options.counterexample_mode}, {"laws", laws}}.dump(2)
            << "\n";
    } else {
        std::size_t counts[3] = {0, 0, 0};
        for (const auto& r : report.results) {
            ++counts[static_cast<int>(r.status)];
            out << r.law << ' ' << status_label(r.status);
            if (r.status == LawStatus::Fail) {
                out << " [";
                for (std::size_t i = 0; i < r.witnesses.size(); ++i) out << (i ? " " : "") << r.witnesses[i];
                out << "] " << r.detail;
            } else if (r.status == LawStatus::Skipped) {
                out << " (" << r.detail << ")";
            }
            out << "\n";
        }
        out << "summary pass " << counts[0] << " fail " << counts[1] << " skipped " << counts[2] << "\n";
    }
    return report.ok() ? kOk : kFailure;
}

void emit(const EffectAlgebra& algebra, const std::string& output, std::ostream& out) {
    const auto text = serialize_eaf(algebra);
    if (output.empty()) {
        out << text;
        return;
    }
    std::ofstream file(output, std::ios::binary);
    if (!file || !(file << text)) throw UsageError("cannot write '" + output + "'");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Finite effect algebras: validation, structure, decompositions and states.", "effalg"};
    app.fallthrough();
    app.require_subcommand(1);
    bool json = false;
    app.add_flag("--json", json, "Print reports as JSON");

    std::string file;
    auto* verify_cmd = app.add_subcommand("verify", "Check the effect algebra axioms");
    verify_cmd->add_option("file", file, "EAF file")->required();

    auto* analyze_cmd = app.add_subcommand("analyze", "Order, sharp and meager elements, isotropic indices");
    analyze_cmd->add_option("file", file, "EAF file")->required();

    std::string element_name;
    auto* decompose_cmd = app.add_subcommand("decompose", "Basic (or degraded atomic) decomposition of an element");
    decompose_cmd->add_option("file", file, "EAF file")->required();
    decompose_cmd->add_option("element", element_name, "Element name")->required();

    bool certify_none = false;
    auto* states_cmd = app.add_subcommand("states", "Find a state or certify that none exists");
    states_cmd->add_option("file", file, "EAF file")->required();
    auto* find_flag = states_cmd->add_flag("--find", "Search for a state (default)");
    states_cmd->add_flag("--certify-none", certify_none, "Succeed only with an infeasibility certificate")
        ->excludes(find_flag);

    std::string state_file;
    auto* smear_cmd = app.add_subcommand("smear", "Extend a state on the sharp elements to the whole algebra");
    smear_cmd->add_option("file", file, "EAF file")->required();
    smear_cmd->add_option("--state", state_file, "STATE file over the sharp elements")->required();

    std::string output;
    auto* gen_cmd = app.add_subcommand("gen", "Generate an EAF file");
    gen_cmd->require_subcommand(1);
    gen_cmd->add_option("-o,--output", output, "Write to this file instead of standard output");
    std::size_t size = 0;
    std::string generator = "a";
    auto* gen_chain = gen_cmd->add_subcommand("mv-chain", "Chain 0 < a < 2a < ... < na = 1");
    gen_chain->add_option("n", size, "Length")->required();
    gen_chain->add_option("--generator", generator, "Name of the generating element");
    auto* gen_boolean = gen_cmd->add_subcommand("boolean", "Boolean algebra with k atoms");
    gen_boolean->add_option("k", size, "Number of atoms")->required();
    std::vector<std::string> files;
    auto* gen_hsum = gen_cmd->add_subcommand("hsum", "Horizontal sum glued at 0 and 1");
    gen_hsum->add_option("files", files, "EAF files")->required();
    auto* gen_product = gen_cmd->add_subcommand("product", "Direct product of two algebras");
    gen_product->add_option("files", files, "Two EAF files")->required()->expected(2);
    std::string fixture_name;
    auto* gen_fixture = gen_cmd->add_subcommand("fixture", "A shipped counterexample fixture");
    gen_fixture->add_option("name", fixture_name, "Fixture name")->required()->check(CLI::IsMember(fixture_names()));

    LawOptions law_options;
    auto* props_cmd = app.add_subcommand("props", "Run the law suite");
    props_cmd->add_option("file", file, "EAF file")->required();
    props_cmd->add_flag("--counterexample-mode", law_options.counterexample_mode,
                        "Check lattice-law conclusions on algebras that are not lattice ordered");
    props_cmd->add_option("--laws", law_options.selection, "Comma separated law ids")->delimiter(',');

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (*verify_cmd) return verify(file, json, out);
        if (*analyze_cmd) return analyze(file, json, out);
        if (*decompose_cmd) return decompose(file, element_name, json, out);
        if (*states_cmd) return states(file, certify_none, json, out);
        if (*smear_cmd) return smear(file, state_file, json, out);
        if (*props_cmd) return props(file, law_options, json, out);
        if (*gen_chain) emit(mv_chain(size, generator), output, out);
        if (*gen_boolean) emit(boolean_algebra(size), output, out);
        if (*gen_fixture) emit(fixture(fixture_name), output, out);
        if (*gen_product) emit(direct_product(load(files[0]), load(files[1])), output, out);
        if (*gen_hsum) {
            std::vector<EffectAlgebra> parts;
            for (const auto& f : files) parts.push_back(load(f));
            emit(horizontal_sum(parts), output, out);
        }
        return kOk;
    } catch (const ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const AxiomViolation& e) {
        err << "error: not an effect algebra: " << e.what() << "\n";
        return kFailure;
    } catch (const DuplicateSum& e) {
        err << "error: " << e.what() << "\n";
        return kFailure;
    } catch (const DegenerateAlgebra& e) {
        err << "error: " << e.what() << "\n";
        return kFailure;
    } catch (const PreconditionFailed& e) {
        err << "error: " << e.what() << "\n";
        return kFailure;
    } catch (const InvalidState& e) {
        err << "error: " << e.what() << "\n";
        return kFailure;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return kFailure;
    }
}

}  // namespace effalg::cli
