/*
   Copyright 2026 The laurent-decide Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "laurent/cli.hpp"

#include <fstream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

namespace laurent::cli {

using nlohmann::ordered_json;
using greenberg::Refutation;
using greenberg::Status;

std::pair<int, int> parse_perturb_budget(const std::string& text) {
    const auto x = text.find('x');
    try {
        if (x == std::string::npos) throw Error("");
        std::size_t used = 0;
        const int dirs = std::stoi(text.substr(0, x), &used);
        if (used != x) throw Error("");
        const std::string rest = text.substr(x + 1);
        const int depths = std::stoi(rest, &used);
        if (used != rest.size()) throw Error("");
        return {dirs, depths};
    } catch (const std::exception&) {
        throw Error("perturb budget must look like 8x16, got '" + text + "'");
    }
}

namespace {

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

}  // namespace

frontend::Sentence parse_system(const std::string& text, const ff::Field& field) {
    std::istringstream in(text);
    std::string line;
    std::optional<std::string> header;
    std::vector<frontend::Formula> eqs;
    std::vector<frontend::Formula> neqs;
    std::vector<frontend::Variable> vars;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const std::string body = trim(line);
        if (body.empty() || body[0] == '#') continue;
        const auto sp = body.find_first_of(" \t");
        const std::string key = body.substr(0, sp);
        const std::string rest = sp == std::string::npos ? "" : trim(body.substr(sp));
        const std::string where = "line " + std::to_string(lineno) + ": ";
        if (!header) {
            if (key != "vars") throw Error(where + "expected a 'vars' header");
            header = rest;
            continue;
        }
        if (key != "eq" && key != "neq") throw Error(where + "expected 'eq' or 'neq', got '" + key + "'");
        const std::string prefix = "exists " + *header + ". ";
        frontend::Sentence s;
        try {
            s = frontend::parse(prefix + "(" + rest + ") = 0", field);
        } catch (const frontend::ParseError& e) {
            const int col = e.column() - static_cast<int>(prefix.size()) - 1;
            throw Error(where + "cannot parse '" + rest + "' (" + e.what() + ", polynomial column " +
                        std::to_string(std::max(col, 1)) + ")");
        } catch (const Error& e) {
            throw Error(where + e.what());
        }
        vars = s.vars;
        (key == "eq" ? eqs : neqs).push_back(std::move(s.matrix));
    }
    if (!header) throw Error("empty system file: expected a 'vars' header");
    if (vars.empty()) vars = frontend::parse("exists " + *header + ". 0 = 0", field).vars;
    frontend::Formula all{frontend::Formula::Kind::And, {}, {}, 0};
    for (auto& f : eqs) all.args.push_back(std::move(f));
    if (!neqs.empty()) {
        // prod g_i != 0, built as one atom so the system has one inequation.
        frontend::Term prod = neqs.front().terms[0];
        for (std::size_t i = 1; i < neqs.size(); ++i)
            prod = frontend::Term{frontend::Term::Kind::Mul, "", 0, {prod, neqs[i].terms[0]}, 0};
        frontend::Formula eq{frontend::Formula::Kind::Eq, {prod, neqs.front().terms[1]}, {}, 0};
        all.args.push_back(frontend::Formula{frontend::Formula::Kind::Not, {}, {std::move(eq)}, 0});
    }
    if (all.args.empty()) all = frontend::Formula{frontend::Formula::Kind::Eq, {{}, {}}, {}, 0};
    else if (all.args.size() == 1) all = frontend::Formula(all.args[0]);
    return frontend::Sentence{std::move(vars), std::move(all)};
}

namespace {

ordered_json coefficient(const ff::FqContext& ctx, ff::FqElem c) {
    if (ctx.n() == 1) return c.code;
    return ctx.coords(c);
}

ordered_json series_json(const series::TruncatedSeries& s) {
    ordered_json out = ordered_json::array();
    for (auto c : s.coeffs()) out.push_back(coefficient(*s.ctx(), c));
    return out;
}

std::string series_text(const series::TruncatedSeries& s) { return s.to_string(); }

const char* refutation_kind(Refutation::Kind k) {
    switch (k) {
        case Refutation::Kind::Truncation: return "truncation";
        case Refutation::Kind::Radical: return "radical";
        case Refutation::Kind::Composite: return "composite";
    }
    return "";
}

int witness_precision(const greenberg::SatEvidence& ev) {
    int p = ev.certificate.precision;
    for (const auto& s : ev.original) p = std::min(p, s.precision());
    return ev.original.empty() ? 0 : p;
}

std::vector<std::string> inverted_names(const frontend::Outcome& o) {
    std::vector<std::string> out;
    for (auto j : o.inverted) out.push_back(o.names[j]);
    return out;
}

std::string render_json(const frontend::Outcome& o, const RunConfig& cfg, const std::optional<resolve::Check>& check) {
    const auto& v = o.verdict;
    ordered_json doc;
    doc["schema"] = "laurent-decide/1";
    doc["status"] = greenberg::to_string(v.status);
    if (v.status == Status::Sat) {
        const auto& ev = *v.sat;
        ordered_json w = ordered_json::array();
        for (const auto& s : ev.original) w.push_back(series_json(s));
        doc["variables"] = o.names;
        doc["witness"] = w;
        doc["precision"] = witness_precision(ev);
        doc["certificate"] = {{"e", ev.certificate.e},
                              {"rows", ev.certificate.rows},
                              {"cols", ev.certificate.cols},
                              {"precision", ev.certificate.precision},
                              {"found_at", ev.found_at}};
        doc["chart"] = {{"disjunct", o.disjunct ? *o.disjunct + 1 : 0}, {"inverted", inverted_names(o)}};
    } else if (v.status == Status::Unsat) {
        doc["refuted_at"] = v.refutation->level;
        doc["refutation"] = refutation_kind(v.refutation->kind);
        doc["radical_certificates"] = v.refutation->radical.size();
    } else {
        doc["reason"] = v.reason;
    }
    doc["branches"] = o.branches;
    if (check) doc["verify"] = {{"ok", check->ok}, {"message", check->message}};
    if (cfg.trace) doc["trace"] = v.trace;
    return doc.dump() + "\n";
}

std::string render_text(const frontend::Outcome& o, const RunConfig& cfg, const std::optional<resolve::Check>& check) {
    const auto& v = o.verdict;
    std::ostringstream out;
    out << "status: " << greenberg::to_string(v.status) << "\n";
    if (v.status == Status::Sat) {
        const auto& ev = *v.sat;
        for (std::size_t j = 0; j < ev.original.size(); ++j) {
            const bool flipped = std::find(o.inverted.begin(), o.inverted.end(), j) != o.inverted.end();
            const std::string name = j < o.names.size() ? o.names[j] : "X" + std::to_string(j + 1);
            if (flipped) out << name << " = 1/(t*W_" << name << "), W_" << name;
            else out << name;
            out << " = " << series_text(ev.original[j]) << "\n";
        }
        out << "precision: " << witness_precision(ev) << "\n";
        out << "certificate: e = " << ev.certificate.e << ", rows {";
        for (std::size_t i = 0; i < ev.certificate.rows.size(); ++i) out << (i ? ", " : "") << ev.certificate.rows[i];
        out << "}, cols {";
        for (std::size_t i = 0; i < ev.certificate.cols.size(); ++i) out << (i ? ", " : "") << ev.certificate.cols[i];
        out << "}, found at N = " << ev.found_at << "\n";
    } else if (v.status == Status::Unsat) {
        out << "refuted at: " << v.refutation->level << " (" << refutation_kind(v.refutation->kind) << ")\n";
    } else {
        out << "reason: " << v.reason << "\n";
    }
    for (const auto& b : o.branches) out << "branch " << b << "\n";
    if (check) out << "verify: " << (check->ok ? "ok" : "FAILED") << " (" << check->message << ")\n";
    if (cfg.trace)
        for (const auto& l : v.trace) out << "trace: " << l << "\n";
    return out.str();
}

void validate(const RunConfig& c) {
    if (c.max_precision < 1) throw Error("max-precision must be at least 1");
    if (c.perturb_directions < 1 || c.perturb_depths < 1) throw Error("perturb budget entries must be at least 1");
    if (c.candidate_cap < 1) throw Error("candidate-cap must be at least 1");
    if (c.threads < 1) throw Error("threads must be at least 1");
    if (c.sentence.has_value() == c.system_file.has_value())
        throw Error("give exactly one of a sentence or --system-file");
}

}  // namespace

Report execute(const RunConfig& config) {
    Report rep;
    frontend::Outcome outcome;
    std::optional<resolve::Check> check;
    // Outlives the outcome, whose elements point into it.
    ff::Field field;
    try {
        validate(config);
        field = ff::FqContext::parse(config.field);
        frontend::Sentence s;
        if (config.sentence) {
            s = frontend::parse(*config.sentence, field);
        } else {
            std::ifstream in(*config.system_file);
            if (!in) throw Error("cannot read system file '" + *config.system_file + "'");
            std::stringstream buf;
            buf << in.rdbuf();
            s = parse_system(buf.str(), field);
        }
        resolve::ResolveConfig rc;
        rc.search.schedule.max_precision = config.max_precision;
        rc.search.candidate_cap = static_cast<std::size_t>(config.candidate_cap);
        rc.perturb = {config.perturb_directions, config.perturb_depths};
        outcome = frontend::decide(s, field, rc, config.threads);
        if (config.verify) check = resolve::verify(outcome.system, outcome.verdict);
    } catch (const Error& e) {
        rep.exit_code = exit_code::user_error;
        rep.errors = std::string("error: ") + e.what() + "\n";
        return rep;
    }
    rep.output = config.format == Format::Json ? render_json(outcome, config, check) : render_text(outcome, config, check);
    if (check && !check->ok) {
        rep.exit_code = exit_code::verify_failed;
        rep.errors = "verification failed: " + check->message + "\n";
    } else {
        rep.exit_code = outcome.verdict.status == Status::Unknown ? exit_code::unknown : exit_code::decided;
    }
    return rep;
}

Report run(const std::vector<std::string>& args) {
    CLI::App app{"Decides existential sentences over F_q((t))", "laurent_decide"};
    app.require_subcommand(1);
    auto* decide = app.add_subcommand("decide", "Decide one sentence or system");
    RunConfig cfg;
    std::string budget = "8x16";
    std::string format = "json";
    std::string sentence_flag;
    std::string positional;
    std::string system_file;
    decide->add_option("--field", cfg.field, "Field spec, e.g. \"p=3\" or \"p=2 n=2\"")->capture_default_str();
    decide->add_option("--sentence", sentence_flag, "Sentence text");
    decide->add_option("text", positional, "Sentence text (same as --sentence)");
    decide->add_option("--system-file", system_file, "System file (vars/eq/neq lines)");
    decide->add_option("--max-precision", cfg.max_precision, "Largest truncation level")->capture_default_str();
    decide->add_option("--perturb-budget", budget, "Directions x depths")->capture_default_str();
    decide->add_option("--candidate-cap", cfg.candidate_cap, "Candidates kept per level")->capture_default_str();
    decide->add_option("--format", format, "json or text")
        ->check(CLI::IsMember({"json", "text"}))
        ->capture_default_str();
    decide->add_option("--threads", cfg.threads, "Worker threads")->capture_default_str();
    decide->add_flag("--verify", cfg.verify, "Re-check the evidence independently");
    decide->add_flag("--trace", cfg.trace, "Include the step-by-step trace");

    Report rep;
    try {
        std::vector<std::string> rev(args.rbegin(), args.rend());
        app.parse(rev);
        if (!sentence_flag.empty() && !positional.empty()) throw Error("sentence given twice");
        if (!sentence_flag.empty()) cfg.sentence = sentence_flag;
        if (!positional.empty()) cfg.sentence = positional;
        if (!system_file.empty()) cfg.system_file = system_file;
        const auto [dirs, depths] = parse_perturb_budget(budget);
        cfg.perturb_directions = dirs;
        cfg.perturb_depths = depths;
        cfg.format = format == "text" ? Format::Text : Format::Json;
    } catch (const CLI::CallForHelp&) {
        rep.output = app.help();
        return rep;
    } catch (const CLI::ParseError& e) {
        rep.exit_code = exit_code::user_error;
        rep.errors = std::string("error: ") + e.what() + "\n" + app.help();
        return rep;
    } catch (const Error& e) {
        rep.exit_code = exit_code::user_error;
        rep.errors = std::string("error: ") + e.what() + "\n";
        return rep;
    }
    return execute(cfg);
}

}  // namespace laurent::cli
