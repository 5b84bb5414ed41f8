#include "commands.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <charconv>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <map>
#include <sstream>

namespace comblock::cli {

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInvalid = 1;
constexpr int kExitUnreadable = 2;

// Writes to --out when given, otherwise to io.out.
int emit(const CliConfig& cfg, Streams io, const std::function<void(std::ostream&)>& body) {
    if (!cfg.out) {
        body(io.out);
        return kExitOk;
    }
    std::ofstream file(*cfg.out);
    if (!file) {
        io.err << "error: cannot write '" << cfg.out->string() << "'\n";
        return kExitInvalid;
    }
    body(file);
    return kExitOk;
}

std::string state_line(const LockSession& session) {
    std::ostringstream os;
    os << "t=" << session.now().count() << "ms";
    const auto& q = session.latches();
    for (std::size_t i = 0; i < q.size(); ++i) os << " Q" << i << '=' << level_label(q[i]);
    const auto o = session.outputs();
    os << " solenoid=" << to_string(o.solenoid) << " green=" << to_string(o.green) << " red=" << to_string(o.red);
    return os.str();
}

// Values are shown in base units except small currents, which read better in mA.
std::string format_figure(const CircuitFigure& f) {
    std::ostringstream os;
    os << std::fixed;
    if (f.unit == "ms") {
        os << std::setprecision(0) << f.value << " ms";
    } else if (f.unit == "A" && f.value < 0.1) {
        os << std::setprecision(3) << f.value * 1e3 << " mA";
    } else {
        os << std::setprecision(3) << f.value << ' ' << f.unit;
    }
    return os.str();
}

}  // namespace

int cmd_simulate(const std::filesystem::path& scenario, std::optional<Millis> t_end, const CliConfig& cfg,
                 Streams io) {
    std::vector<KeyEvent> events;
    try {
        events = load_scenario(scenario);
    } catch (const ScenarioParseError& e) {
        io.err << scenario.string() << ":" << e.line() << ": error: " << e.what() << '\n';
        return kExitUnreadable;
    } catch (const Error& e) {
        io.err << "error: " << e.what() << '\n';
        return kExitUnreadable;
    } catch (const std::runtime_error& e) {
        io.err << "error: " << e.what() << '\n';
        return kExitUnreadable;
    }

    const Millis last = events.empty() ? Millis(0) : std::max(Millis(0), events.back().t);
    const Millis end = t_end.value_or(last + cfg.lock.hold_time);

    SimTrace trace;
    try {
        trace = run_scenario(cfg.lock, events, end, cfg.sim);
    } catch (const Error& e) {
        io.err << "error: " << e.what() << '\n';
        return kExitInvalid;
    }

    return emit(cfg, io, [&](std::ostream& os) {
        if (cfg.format.value_or(Format::Csv) == Format::Csv) write_trace_csv(os, trace);
        else write_trace_text(os, trace);
    });
}

int cmd_table1(const CliConfig& cfg, Streams io) {
    Table1Report report;
    try {
        report = reproduce_table1(cfg.lock);
    } catch (const Error& e) {
        io.err << "error: " << e.what() << '\n';
        return kExitInvalid;
    }
    const int written = emit(cfg, io, [&](std::ostream& os) {
        if (cfg.format.value_or(Format::Text) == Format::Csv) write_table1_csv(os, report);
        else write_table1_text(os, report, cfg.circuit.v_high, cfg.circuit.v_low);
    });
    if (written != kExitOk) return written;
    return report.outputs_reproduced() ? kExitOk : kExitInvalid;
}

int cmd_analyze(int l_min, int l_max, const CliConfig& cfg, Streams io) {
    std::vector<KeyspaceStats> stats;
    try {
        stats = analyze_range(cfg.lock, l_min, l_max);
    } catch (const Error& e) {
        io.err << "error: " << e.what() << '\n';
        return kExitInvalid;
    }
    return emit(cfg, io, [&](std::ostream& os) {
        if (cfg.format.value_or(Format::Csv) == Format::Csv) write_keyspace_csv(os, stats);
        else write_keyspace_text(os, stats, cfg.lock);
    });
}

int cmd_circuit(const CliConfig& cfg, Streams io) {
    std::vector<CircuitFigure> figures;
    try {
        figures = circuit_report(cfg.circuit, cfg.load);
    } catch (const Error& e) {
        io.err << "error: " << e.what() << '\n';
        return kExitInvalid;
    }
    return emit(cfg, io, [&](std::ostream& os) {
        if (cfg.format.value_or(Format::Text) == Format::Csv) {
            os << "name,value,unit,provenance\n";
            for (const auto& f : figures)
                os << f.name << ',' << std::setprecision(10) << f.value << ',' << f.unit << ",\"" << f.provenance
                   << "\"\n";
            return;
        }
        os << "parameters:";
        if (cfg.overridden.empty()) os << " parts-list defaults";
        else
            for (const auto& name : cfg.overridden) os << ' ' << name << "(override)";
        os << "; load " << cfg.load.value << " A\n";
        for (const auto& f : figures)
            os << "  " << std::left << std::setw(24) << f.name << std::setw(14) << format_figure(f) << " ["
               << f.provenance << "]\n";
    });
}

int cmd_repl(const CliConfig& cfg, Streams io) {
    LockSession session(cfg.lock, cfg.sim);
    std::size_t shown = session.trace().records.size();

    auto report_new_records = [&] {
        const auto& recs = session.trace().records;
        for (; shown < recs.size(); ++shown)
            if (recs[shown].stimulus.kind == StimulusKind::HoldExpired)
                io.out << "  t=" << recs[shown].t.count() << "ms HoldExpired: latches cleared\n";
    };

    io.out << "virtual-time lock; commands: press <d[,d...]>, wait <ms>, state, quit\n";
    std::string line;
    while (true) {
        if (io.prompt) io.out << "> " << std::flush;
        if (!std::getline(io.in, line)) break;

        std::istringstream words(line);
        std::string cmd, arg;
        words >> cmd;
        std::getline(words >> std::ws, arg);
        if (cmd.empty()) continue;

        if (cmd == "quit" || cmd == "exit") break;
        if (cmd == "press") {
            std::vector<KeyId> keys;
            try {
                keys = parse_key_list(arg);
                if (keys.empty()) throw Error(ErrorCode::InvalidArgument, "press needs at least one key");
            } catch (const Error& e) {
                io.out << "error: " << e.what() << '\n';
                continue;
            }
            for (KeyId k : keys) {
                const auto& rec = session.press(k);
                if (rec.effect.kind != EffectKind::NoOp)
                    io.out << "  " << to_string(rec.stimulus) << ": " << to_string(rec.effect.kind) << '\n';
            }
        } else if (cmd == "wait") {
            long long ms = -1;
            const auto [ptr, ec] = std::from_chars(arg.data(), arg.data() + arg.size(), ms);
            if (arg.empty() || ec != std::errc{} || ptr != arg.data() + arg.size() || ms < 0) {
                io.out << "error: wait needs a non-negative integer number of milliseconds\n";
                continue;
            }
            session.wait(Millis(ms));
        } else if (cmd != "state") {
            io.out << "error: unknown command '" << cmd << "'\n";
            continue;
        }
        report_new_records();
        io.out << state_line(session) << '\n';
    }
    return kExitOk;
}

int run(const std::vector<std::string>& args, Streams io) {
    CLI::App app{"Latch-cascade combination lock: simulation, bench-table replay and keyspace audit", "comblock"};
    app.require_subcommand(1);
    app.fallthrough();

    std::optional<std::string> code, reset_keys, dummy_keys;
    std::optional<long long> hold_ms;
    std::string timer_mode = "on_unlock";
    std::string format;
    std::optional<std::string> out_path;
    std::optional<double> load;

    app.add_option("--code", code, "Code keys in order, e.g. 9,5,0,2");
    app.add_option("--reset-keys", reset_keys, "Reset keys, e.g. 3,4,7,8");
    app.add_option("--dummy-keys", dummy_keys, "Dummy (decoy) keys, e.g. 1,6");
    app.add_option("--hold-ms", hold_ms, "Hold window in ms (default: derived from R6*C1)");
    app.add_option("--timer-mode", timer_mode, "When the hold window is armed")
        ->check(CLI::IsMember({"on_unlock", "on_first_press"}));
    app.add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "csv"}));
    app.add_option("--out", out_path, "Write output to this file");
    app.add_option("--load-a", load, "Load current for the ripple estimate (default: transformer rating)");

    // circuit overrides; std::map keeps the optionals at stable addresses
    using Setter = std::function<void(CircuitParams&, double)>;
    const std::vector<std::pair<std::string, Setter>> circuit_fields = {
        {"r1", [](CircuitParams& p, double v) { p.r1 = Ohms(v); }},
        {"r2", [](CircuitParams& p, double v) { p.r2 = Ohms(v); }},
        {"r3", [](CircuitParams& p, double v) { p.r3 = Ohms(v); }},
        {"r4", [](CircuitParams& p, double v) { p.r4 = Ohms(v); }},
        {"r5", [](CircuitParams& p, double v) { p.r5 = Ohms(v); }},
        {"r6", [](CircuitParams& p, double v) { p.r6 = Ohms(v); }},
        {"r7", [](CircuitParams& p, double v) { p.r7 = Ohms(v); }},
        {"r8", [](CircuitParams& p, double v) { p.r8 = Ohms(v); }},
        {"r9", [](CircuitParams& p, double v) { p.r9 = Ohms(v); }},
        {"r10", [](CircuitParams& p, double v) { p.r10 = Ohms(v); }},
        {"c1", [](CircuitParams& p, double v) { p.c1 = Farads(v); }},
        {"c2", [](CircuitParams& p, double v) { p.c2 = Farads(v); }},
        {"c3", [](CircuitParams& p, double v) { p.c3 = Farads(v); }},
        {"c4", [](CircuitParams& p, double v) { p.c4 = Farads(v); }},
        {"c5", [](CircuitParams& p, double v) { p.c5 = Farads(v); }},
        {"vcc", [](CircuitParams& p, double v) { p.vcc = Volts(v); }},
        {"vbe", [](CircuitParams& p, double v) { p.vbe = Volts(v); }},
        {"hfe", [](CircuitParams& p, double v) { p.hfe = v; }},
        {"vhigh", [](CircuitParams& p, double v) { p.v_high = Volts(v); }},
        {"vlow", [](CircuitParams& p, double v) { p.v_low = Volts(v); }},
        {"mains-v", [](CircuitParams& p, double v) { p.mains_v = Volts(v); }},
        {"mains-f", [](CircuitParams& p, double v) { p.mains_f = Hertz(v); }},
        {"secondary-v", [](CircuitParams& p, double v) { p.secondary_v = Volts(v); }},
        {"regulator-out-v", [](CircuitParams& p, double v) { p.regulator_out_v = Volts(v); }},
        {"dropout-v", [](CircuitParams& p, double v) { p.regulator_dropout_v = Volts(v); }},
    };
    std::map<std::string, std::optional<double>> circuit_raw;
    for (const auto& [name, setter] : circuit_fields)
        app.add_option("--" + name, circuit_raw[name])->group("Circuit parameters");

    std::string scenario;
    std::optional<long long> t_end;
    auto* simulate = app.add_subcommand("simulate", "Replay a scenario file and print the trace");
    simulate->add_option("file", scenario, "Scenario file: '<t_ms> <key>' per line")->required();
    simulate->add_option("--t-end", t_end, "End of the simulated interval (default: last event + hold)");

    auto* table1 = app.add_subcommand("table1", "Replay the twenty bench-test combinations");

    int l_min = 0, l_max = 0;
    auto* analyze = app.add_subcommand("analyze", "Exhaustive keyspace audit for lengths lmin..lmax");
    analyze->add_option("lmin", l_min)->required();
    analyze->add_option("lmax", l_max)->required();

    auto* circuit = app.add_subcommand("circuit", "Print the derived circuit quantities");
    auto* repl = app.add_subcommand("repl", "Interactive lock with a virtual clock");

    try {
        std::vector<std::string> reversed(args.size() > 1 ? args.begin() + 1 : args.end(), args.end());
        std::reverse(reversed.begin(), reversed.end());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        io.out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
        io.out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        io.err << "error: " << e.what() << "\n" << "run with --help for usage\n";
        return kExitUnreadable;
    }

    CliConfig cfg;
    try {
        if (code) cfg.lock.code = parse_key_list(*code);
        if (reset_keys) cfg.lock.reset_keys = KeySet(parse_key_list(*reset_keys));
        if (dummy_keys) cfg.lock.dummy_keys = KeySet(parse_key_list(*dummy_keys));
        for (const auto& [name, setter] : circuit_fields) {
            if (const auto& v = circuit_raw[name]; v) {
                setter(cfg.circuit, *v);
                cfg.overridden.insert(name);
            }
        }
        validate_params(cfg.circuit);
        cfg.lock.hold_time = hold_ms ? Millis(*hold_ms) : derive_hold_time(cfg.circuit);
        validate_config(cfg.lock);
        cfg.load = Amperes(load.value_or(cfg.circuit.transformer_rating.value));
    } catch (const Error& e) {
        io.err << "error: " << e.what() << '\n';
        return kExitInvalid;
    }
    cfg.sim.timer_mode = timer_mode == "on_first_press" ? TimerMode::OnFirstPress : TimerMode::OnUnlock;
    if (!format.empty()) cfg.format = format == "csv" ? Format::Csv : Format::Text;
    if (out_path) cfg.out = *out_path;

    if (*simulate) return cmd_simulate(scenario, t_end ? std::optional<Millis>(*t_end) : std::nullopt, cfg, io);
    if (*table1) return cmd_table1(cfg, io);
    if (*analyze) return cmd_analyze(l_min, l_max, cfg, io);
    if (*circuit) return cmd_circuit(cfg, io);
    if (*repl) return cmd_repl(cfg, io);
    return kExitUnreadable;
}

}  // namespace comblock::cli
