// Copyright 2026 The qsynth4 Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include "cli.h"

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "qsynth4/lowering.h"
#include "qsynth4/netlist.h"
#include "qsynth4/pla.h"
#include "qsynth4/search.h"
#include "qsynth4/simulator.h"
#include "qsynth4/synth.h"

#ifndef QSYNTH4_BENCHMARK_DIR
#define QSYNTH4_BENCHMARK_DIR "benchmarks"
#endif

namespace qsynth4::cli {

namespace {

using nlohmann::ordered_json;

constexpr const char *kCostNote =
    "actual cost counts each M-S gate and each one-qudit shift as 1; Toffoli, MAX and MIN keep their declared cost";

struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string read_file(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw InputError("cannot open '" + path + "'");
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string &path, const std::string &text) {
    std::ofstream out(path, std::ios::binary);
    if (!out || !(out << text)) {
        throw InputError("cannot write '" + path + "'");
    }
}

bool is_pla_path(const std::string &path) {
    return std::filesystem::path(path).extension() == ".pla";
}

// A table argument is a .qtt file, a .pla file, or a generator name.
QuaternaryFunction load_table(const std::string &arg, std::vector<std::string> *names = nullptr) {
    if (!std::filesystem::exists(arg) && is_generator(arg)) {
        if (names) {
            *names = generator_output_names(arg);
        }
        return make_generator(arg);
    }
    std::string text = read_file(arg);
    std::string stem = std::filesystem::path(arg).stem().string();
    try {
        if (is_pla_path(arg)) {
            return ingest_pla(text, stem);
        }
        QuaternaryFunction f = parse_qtt(text);
        if (f.name().empty()) {
            f.set_name(stem);
        }
        return f;
    } catch (const ParseError &e) {
        throw InputError(arg + ": " + e.what());
    }
}

Circuit load_netlist(const std::string &path) {
    std::string text = read_file(path);
    try {
        return parse_netlist(text);
    } catch (const ParseError &e) {
        throw InputError(path + ": " + e.what());
    }
}

ordered_json gate_counts_json(const std::map<GateKind, int> &counts) {
    ordered_json j = ordered_json::object();
    for (auto [k, n] : counts) {
        j[kind_name(k)] = n;
    }
    return j;
}

std::string gate_counts_text(const std::map<GateKind, int> &counts) {
    std::string out;
    for (auto [k, n] : counts) {
        if (!out.empty()) {
            out += ' ';
        }
        out += std::string(kind_name(k)) + "=" + std::to_string(n);
    }
    return out.empty() ? "none" : out;
}

struct SynthRun {
    QuaternaryFunction f;
    SynthResult result;
    Circuit lowered;
    int actual_cost = 0;
};

SynthRun synthesize(QuaternaryFunction f, std::vector<std::string> names, bool fresh_targets) {
    SynthOptions opts;
    opts.output_names = std::move(names);
    opts.lower.fresh_min_max_targets = fresh_targets;
    SynthRun run{std::move(f), {}, {}, 0};
    run.result = synth(run.f, opts);
    run.lowered = decompose(run.result.circuit);
    Equivalence eq = equivalent(run.lowered, run.f);
    if (!eq.equal) {
        throw SynthesisError("lowered circuit differs from the table at input " + digits(*eq.counterexample));
    }
    run.actual_cost = circuit_cost(run.lowered, CostModel::standard());
    return run;
}

ordered_json report_json(const SynthRun &run, bool lowered_written) {
    const SynthStats &s = run.result.stats;
    ordered_json j;
    j["name"] = run.f.name();
    j["inputs"] = run.f.num_inputs();
    j["outputs"] = run.f.num_outputs();
    j["n"] = s.n;
    j["p"] = s.p;
    j["s"] = s.s;
    j["max_ancilla"] = s.max_ancilla;
    j["reduced_ancilla"] = s.reduced_ancilla;
    j["levels"] = s.levels;
    j["declared_cost"] = s.cost;
    j["actual_cost"] = run.actual_cost;
    j["cost_convention"] = kCostNote;
    j["gate_counts"] = gate_counts_json(s.gate_counts);
    j["lowered"] = {
        {"written", lowered_written},
        {"levels", circuit_levels(run.lowered)},
        {"ancilla", ancilla_count(run.lowered)},
        {"gate_counts", gate_counts_json(gate_counts(run.lowered))},
    };
    ordered_json outs = ordered_json::array();
    for (const OutputStats &o : s.outputs) {
        outs.push_back({
            {"name", o.name},
            {"n", o.n},
            {"p", o.p},
            {"s", o.s},
            {"max_ancilla", o.max_ancilla},
            {"ancilla", o.ancilla},
            {"expression", o.expression},
            {"simplify",
             {{"absorb_constants", o.simplify.absorb_constants},
              {"complement", o.simplify.complement},
              {"pair_merges", o.simplify.pair_merges},
              {"idempotent", o.simplify.idempotent},
              {"multi_merges", o.simplify.multi_merges},
              {"zero_pairs_skipped", o.simplify.zero_pairs_skipped},
              {"passes", o.simplify.passes}}},
        });
    }
    j["per_output"] = outs;
    j["verified"] = true;
    return j;
}

void report_text(const SynthRun &run, std::ostream &out) {
    const SynthStats &s = run.result.stats;
    out << "circuit          " << (run.f.name().empty() ? "-" : run.f.name()) << "\n";
    out << "inputs/outputs   " << run.f.num_inputs() << "/" << run.f.num_outputs() << "\n";
    out << "minterms         " << s.n + s.p + s.s << " (level 1: " << s.n << ", level 2: " << s.p
        << ", level 3: " << s.s << ")\n";
    out << "max ancilla      " << s.max_ancilla << "\n";
    out << "reduced ancilla  " << s.reduced_ancilla << "\n";
    out << "levels           " << s.levels << "\n";
    out << "cost declared    " << s.cost << "\n";
    out << "cost actual      " << run.actual_cost << "\n";
    out << "gates            " << gate_counts_text(s.gate_counts) << "\n";
    out << "lowered gates    " << gate_counts_text(gate_counts(run.lowered)) << "\n";
    for (const OutputStats &o : s.outputs) {
        out << "output " << o.name << ": " << o.n + o.p + o.s << " minterms, " << o.ancilla << " ancilla\n";
        out << "  " << o.name << " = " << (o.expression.empty() ? "0" : o.expression) << "\n";
    }
    out << "verified         yes (exhaustive, " << run.f.num_rows() << " inputs)\n";
    out << "note: " << kCostNote << "\n";
}

int cmd_synth(const std::string &input, const std::string &output, bool lower, const std::string &format,
              bool fresh_targets, std::ostream &out) {
    std::vector<std::string> names;
    QuaternaryFunction f = load_table(input, &names);
    SynthRun run = synthesize(std::move(f), names, fresh_targets);
    if (!output.empty()) {
        write_file(output, serialize(lower ? run.lowered : run.result.circuit));
    }
    if (format == "json") {
        out << report_json(run, lower && !output.empty()).dump(2) << "\n";
    } else {
        report_text(run, out);
    }
    return kExitOk;
}

int cmd_verify(const std::string &netlist, const std::string &table, std::ostream &out) {
    Circuit c = load_netlist(netlist);
    QuaternaryFunction f = load_table(table);
    Equivalence eq;
    try {
        eq = equivalent(c, f);
    } catch (const std::invalid_argument &e) {
        throw InputError(e.what());
    }
    if (eq.equal) {
        out << "PASS " << eq.vectors_checked << " input vectors\n";
        return kExitOk;
    }
    const std::vector<Gf4> &in = *eq.counterexample;
    BasisState state = run(c, in);
    std::vector<Gf4> got;
    for (const Output &o : c.outputs()) {
        got.push_back(state[o.wire]);
    }
    std::span<const Gf4> want = f.outputs(QuaternaryFunction::row_of(in));
    out << "FAIL counterexample: input " << digits(in) << " gives " << digits(got) << ", expected "
        << digits(std::vector<Gf4>(want.begin(), want.end())) << "\n";
    return kExitVerifyFailed;
}

std::string opt_int(const std::optional<int> &v) {
    return v ? std::to_string(*v) : "-";
}

int cmd_bench(std::vector<std::string> names, const std::string &dir, const std::string &format,
              std::ostream &out) {
    if (names.empty() || (names.size() == 1 && names[0] == "all")) {
        names.assign(benchmark_names().begin(), benchmark_names().end());
    }
    for (const std::string &n : names) {
        if (find_reference(n) == nullptr && !is_generator(n)) {
            throw InputError("unknown benchmark '" + n + "'");
        }
    }
    std::vector<BenchRow> rows;
    for (const std::string &n : names) {
        rows.push_back(bench_one(n, dir));
    }
    bool failed = false;
    if (format == "json") {
        ordered_json arr = ordered_json::array();
        for (const BenchRow &r : rows) {
            ordered_json j;
            j["name"] = r.name;
            j["status"] = r.status;
            j["source"] = r.source;
            if (r.status == "ok") {
                j["inputs"] = r.inputs;
                j["outputs"] = r.outputs;
                j["max_ancilla"] = r.max_ancilla;
                j["reduced_ancilla"] = r.reduced_ancilla;
                j["levels"] = r.levels;
                j["declared_cost"] = r.declared_cost;
                j["actual_cost"] = r.actual_cost;
            }
            j["verified"] = r.verified;
            if (r.reference) {
                const ReferenceRow &ref = *r.reference;
                j["reference"] = {
                    {"max_ancilla", ref.max_ancilla}, {"reduced_ancilla", ref.reduced_ancilla},
                    {"levels", ref.levels},           {"cost", ref.cost},
                    {"comparable", ref.comparable},
                };
                j["reference"]["baseline_levels"] = ref.baseline_levels ? ordered_json(*ref.baseline_levels) : nullptr;
                j["reference"]["baseline_cost"] = ref.baseline_cost ? ordered_json(*ref.baseline_cost) : nullptr;
            }
            if (!r.note.empty()) {
                j["note"] = r.note;
            }
            failed |= r.status == "failed";
            arr.push_back(j);
        }
        ordered_json doc = {{"rows", arr}, {"cost_convention", kCostNote}};
        out << doc.dump(2) << "\n";
        return failed ? kExitVerifyFailed : kExitOk;
    }
    char line[256];
    std::snprintf(line, sizeof line, "%-8s %7s %7s %6s %6s %6s %-8s | %7s %7s %6s %6s %6s %6s\n", "circuit",
                  "max_anc", "red_anc", "levels", "cost", "actual", "verified", "ref_max", "ref_red", "ref_lv",
                  "ref_c", "base_l", "base_c");
    out << line;
    for (const BenchRow &r : rows) {
        std::string ref_max = "-", ref_red = "-", ref_lv = "-", ref_c = "-", base_l = "-", base_c = "-";
        if (r.reference) {
            ref_max = std::to_string(r.reference->max_ancilla);
            ref_red = std::to_string(r.reference->reduced_ancilla);
            ref_lv = std::to_string(r.reference->levels);
            ref_c = std::to_string(r.reference->cost);
            base_l = opt_int(r.reference->baseline_levels);
            base_c = opt_int(r.reference->baseline_cost);
        }
        if (r.status == "ok") {
            std::snprintf(line, sizeof line, "%-8s %7d %7d %6d %6d %6d %-8s | %7s %7s %6s %6s %6s %6s\n",
                          r.name.c_str(), r.max_ancilla, r.reduced_ancilla, r.levels, r.declared_cost, r.actual_cost,
                          r.verified ? "pass" : "FAIL", ref_max.c_str(), ref_red.c_str(), ref_lv.c_str(), ref_c.c_str(),
                          base_l.c_str(), base_c.c_str());
        } else {
            std::snprintf(line, sizeof line, "%-8s %7s %7s %6s %6s %6s %-8s | %7s %7s %6s %6s %6s %6s\n",
                          r.name.c_str(), "-", "-", "-", "-", "-", r.status.c_str(), ref_max.c_str(), ref_red.c_str(),
                          ref_lv.c_str(), ref_c.c_str(), base_l.c_str(), base_c.c_str());
        }
        out << line;
        failed |= r.status == "failed";
    }
    out << "\nref_* are published figures; base_* are the published figures of the earlier design.\n";
    for (const BenchRow &r : rows) {
        if (r.reference && !r.reference->comparable) {
            out << r.name << ": reference only, encoding unknown\n";
        }
        if (!r.note.empty()) {
            out << r.name << ": " << r.note << "\n";
        }
    }
    out << "note: " << kCostNote << "\n";
    return failed ? kExitVerifyFailed : kExitOk;
}

int cmd_tt(const std::string &name, const std::string &output, std::ostream &out) {
    if (!is_generator(name)) {
        throw InputError("unknown generator '" + name + "'");
    }
    std::string text = serialize_qtt(make_generator(name));
    if (output.empty()) {
        out << text;
    } else {
        write_file(output, text);
    }
    return kExitOk;
}

int cmd_ingest(const std::string &path, const std::string &output, std::ostream &out) {
    std::string text = read_file(path);
    QuaternaryFunction f;
    BinaryTable t;
    try {
        t = parse_pla(text);
        f = pack_binary(t, std::filesystem::path(path).stem().string());
    } catch (const ParseError &e) {
        throw InputError(path + ": " + e.what());
    }
    if (unpack_binary(f, t.num_inputs(), t.num_outputs()) != t) {
        throw SynthesisError("packing does not round-trip");
    }
    std::string qtt = serialize_qtt(f);
    if (output.empty()) {
        out << qtt;
    } else {
        write_file(output, qtt);
    }
    return kExitOk;
}

int cmd_gadgets(const std::string &output, std::ostream &out) {
    std::vector<Gadget> lib = gadget_library();
    bool ok = true;
    char line[160];
    std::snprintf(line, sizeof line, "%-16s %-8s %8s %6s %7s %s\n", "gadget", "kind", "declared", "actual", "scratch",
                  "verified");
    out << line;
    for (const Gadget &g : lib) {
        Equivalence eq = check_gadget(g);
        ok &= eq.equal;
        std::snprintf(line, sizeof line, "%-16s %-8s %8d %6d %7d %s\n", g.name.c_str(), kind_name(kind_of(g.pattern)),
                      g.declared_cost, g.actual_cost(), g.scratch_wires(), eq.equal ? "pass" : "FAIL");
        out << line;
    }
    out << "note: " << kCostNote << "\n";
    if (!output.empty()) {
        write_file(output, serialize_library(lib));
    }
    return ok ? kExitOk : kExitVerifyFailed;
}

int cmd_search(const std::string &netlist, int max_gates, const std::string &output, std::ostream &out) {
    Circuit c = load_netlist(netlist);
    if (c.num_wires() < 1 || c.num_wires() > kMaxSearchWires) {
        throw InputError("search needs a netlist on 1 or 2 wires");
    }
    StatePerm target;
    std::optional<std::vector<Gate>> found;
    SearchStats stats;
    try {
        target = state_permutation(c.gates(), c.num_wires());
        found = search_decomposition(target, c.num_wires(), max_gates, &stats);
    } catch (const std::invalid_argument &e) {
        throw InputError(e.what());
    }
    if (!found) {
        out << "not found within " << max_gates << " gates (" << stats.forward_states + stats.backward_states
            << " states visited)\n";
        return kExitOk;
    }
    std::string text = serialize(search_result_circuit(*found, c.num_wires()));
    out << "found " << found->size() << " gates\n";
    if (output.empty()) {
        out << text;
    } else {
        write_file(output, text);
    }
    return kExitOk;
}

}  // namespace

std::string default_benchmark_dir() {
    return QSYNTH4_BENCHMARK_DIR;
}

BenchRow bench_one(const std::string &name, const std::string &dir) {
    BenchRow row;
    row.name = name;
    row.reference = find_reference(name);
    QuaternaryFunction f;
    std::vector<std::string> names;
    if (is_generator(name)) {
        f = make_generator(name);
        names = generator_output_names(name);
        row.source = "built-in";
    } else {
        std::filesystem::path path = std::filesystem::path(dir) / (name + ".pla");
        row.source = path.string();
        if (!std::filesystem::exists(path)) {
            row.status = "skipped";
            row.note = "no benchmark file at " + path.string();
            return row;
        }
        BinaryTable t = parse_pla(read_file(path.string()));
        f = pack_binary(t, name);
        if (unpack_binary(f, t.num_inputs(), t.num_outputs()) != t) {
            row.status = "failed";
            row.note = "binary packing does not round-trip";
            return row;
        }
        row.note = std::to_string(t.num_inputs()) + " input bits and " + std::to_string(t.num_outputs()) +
                   " output bits packed msb-first into qudit pairs";
    }
    try {
        SynthRun run = synthesize(f, names, false);
        row.inputs = f.num_inputs();
        row.outputs = f.num_outputs();
        row.max_ancilla = run.result.stats.max_ancilla;
        row.reduced_ancilla = run.result.stats.reduced_ancilla;
        row.levels = run.result.stats.levels;
        row.declared_cost = run.result.stats.cost;
        row.actual_cost = run.actual_cost;
        row.verified = equivalent(run.result.circuit, f).equal && equivalent(run.lowered, f).equal;
        row.status = row.verified ? "ok" : "failed";
    } catch (const SynthesisError &e) {
        row.status = "failed";
        row.note = e.what();
    }
    return row;
}

int run(std::vector<std::string> args, std::ostream &out, std::ostream &err) {
    CLI::App app{"Quaternary GF(4) quantum logic synthesis"};
    app.name("qsynth4");
    app.require_subcommand(1);

    std::string synth_in, synth_out, synth_format = "text";
    bool synth_lower = false, synth_fresh = false;
    auto *synth_cmd = app.add_subcommand("synth", "Synthesize a truth table (.qtt, .pla or generator name)");
    synth_cmd->add_option("input", synth_in, "Table file or generator name")->required();
    synth_cmd->add_option("-o,--output", synth_out, "Netlist output file");
    synth_cmd->add_flag("--lower", synth_lower, "Write the M-S-level netlist");
    synth_cmd->add_option("--report", synth_format, "Report format")->check(CLI::IsMember({"text", "json"}));
    synth_cmd->add_flag("--fresh-targets", synth_fresh, "Give every MAX/MIN gate a fresh ancilla target");

    std::string verify_net, verify_table;
    auto *verify_cmd = app.add_subcommand("verify", "Check a netlist against a truth table");
    verify_cmd->add_option("netlist", verify_net)->required();
    verify_cmd->add_option("table", verify_table, "Table file or generator name")->required();

    std::vector<std::string> bench_names;
    std::string bench_dir = default_benchmark_dir(), bench_format = "text";
    auto *bench_cmd = app.add_subcommand("bench", "Run the benchmark suite");
    bench_cmd->add_option("names", bench_names, "Benchmarks, or 'all'");
    bench_cmd->add_option("--dir", bench_dir, "Directory holding <name>.pla files");
    bench_cmd->add_option("--report", bench_format, "Report format")->check(CLI::IsMember({"text", "json"}));

    std::string tt_name, tt_out;
    auto *tt_cmd = app.add_subcommand("tt", "Print a built-in generator as .qtt");
    tt_cmd->add_option("generator", tt_name)->required();
    tt_cmd->add_option("-o,--output", tt_out);

    std::string pla_in, pla_out;
    auto *pla_cmd = app.add_subcommand("ingest-pla", "Pack a binary PLA table into .qtt");
    pla_cmd->add_option("file", pla_in)->required();
    pla_cmd->add_option("-o,--output", pla_out);

    std::string gadgets_out;
    auto *gadgets_cmd = app.add_subcommand("gadgets", "Verify and list the gadget library");
    gadgets_cmd->add_option("-o,--output", gadgets_out, "Write the library netlist");

    std::string search_in, search_out;
    int search_max = 5;
    auto *search_cmd = app.add_subcommand("search", "Shortest M-S realization of a 1- or 2-wire netlist");
    search_cmd->add_option("netlist", search_in)->required();
    search_cmd->add_option("--max-gates", search_max)->check(CLI::Range(0, kMaxSearchGates));
    search_cmd->add_option("-o,--output", search_out);

    std::reverse(args.begin(), args.end());
    try {
        app.parse(args);
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp &e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForVersion &e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError &e) {
        app.exit(e, out, err);
        return kExitInputError;
    }

    try {
        if (*synth_cmd) {
            return cmd_synth(synth_in, synth_out, synth_lower, synth_format, synth_fresh, out);
        }
        if (*verify_cmd) {
            return cmd_verify(verify_net, verify_table, out);
        }
        if (*bench_cmd) {
            return cmd_bench(bench_names, bench_dir, bench_format, out);
        }
        if (*tt_cmd) {
            return cmd_tt(tt_name, tt_out, out);
        }
        if (*pla_cmd) {
            return cmd_ingest(pla_in, pla_out, out);
        }
        if (*gadgets_cmd) {
            return cmd_gadgets(gadgets_out, out);
        }
        if (*search_cmd) {
            return cmd_search(search_in, search_max, search_out, out);
        }
    } catch (const SynthesisError &e) {
        err << "error: self-check failed: " << e.what() << "\n";
        return kExitVerifyFailed;
    } catch (const InputError &e) {
        err << "error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const ParseError &e) {
        err << "error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const std::invalid_argument &e) {
        err << "error: " << e.what() << "\n";
        return kExitInputError;
    }
    return kExitInputError;
}

}  // namespace qsynth4::cli
