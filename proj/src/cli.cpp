#include "dortho/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include "dortho/errors.hpp"
#include "dortho/json_io.hpp"

namespace dortho::cli {

namespace {

using json::Json;

constexpr int kDefaultN = 15;
constexpr int kDefaultM = 6;

// Thrown for anything that maps to exit code 2.
struct InputError : Error {
    using Error::Error;
};

struct Options {
    std::string operator_file;
    std::string family;
    std::string params;
    std::string descriptor;
    std::string table_file;
    std::string out_file;
    std::optional<int> N;
    std::optional<int> M;
    std::optional<int> probe_bound;
    int degree = 0;
};

Json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open '" + path + "'");
    try {
        return Json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        throw InputError("malformed JSON in '" + path + "': " + e.what());
    }
}

Json parse_json_text(const std::string& text, const char* what) {
    try {
        return Json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw InputError(std::string("malformed JSON in ") + what + ": " + e.what());
    }
}

int default_bound() {
    if (const char* env = std::getenv("DORTHO_PROBE_BOUND")) {
        try {
            const int v = std::stoi(env);
            if (v > 0) return v;
        } catch (const std::exception&) {
        }
        throw InputError(std::string("DORTHO_PROBE_BOUND must be a positive integer, got '") + env + "'");
    }
    return kDefaultN;
}

// A named family resolved to its operator and closed-form table.
struct Family {
    std::string name;
    std::optional<DiffOperator> op;
    std::function<RecurrenceTable(int)> table;
};

Rational param(const Json& params, size_t index, const char* key, std::optional<Rational> fallback = {}) {
    if (params.is_array()) {
        if (index < params.size()) return json::rational_from(params[index]);
    } else if (params.is_object() && params.contains(key)) {
        return json::rational_from(params.at(key));
    }
    if (fallback) return *fallback;
    throw InputError(std::string("missing parameter ") + key);
}

Family resolve_family(const std::string& name, const Json& params) {
    if (!params.is_null() && !params.is_array() && !params.is_object())
        throw InputError("--params must be a JSON array or object");
    Family f;
    f.name = name;
    if (name == "case1") {
        const Case1Params p{param(params, 0, "a0[0]"), param(params, 1, "a0[1]"), param(params, 2, "a1[1]"),
                            param(params, 3, "a0[2]"), param(params, 4, "a0[3]")};
        f.op = p.op();
        case1_coeffs(p, 0);  // parameter validation
        f.table = [p](int N) { return case1_coeffs(p, N); };
    } else if (name == "case2") {
        const Case2Params p(param(params, 0, "a0[0]"), param(params, 1, "a0[1]"), param(params, 2, "a1[1]"),
                            param(params, 3, "a0[3]"), param(params, 4, "a1[3]"), param(params, 5, "a2[3]"));
        f.op = p.op();
        f.table = [p](int N) { return case2_coeffs(p, N); };
    } else if (name == "corollary42") {
        f.op = corollary42_operator(param(params, 0, "a0[0]", Rational(1)));
        f.table = [](int N) { return corollary42_coeffs(N); };
    } else if (name == "table") {
        const RecurrenceTable rt = json::table_from(params);
        f.table = [rt](int) { return rt; };
    } else {
        throw InputError("unknown family '" + name + "' (expected case1, case2, corollary42 or table)");
    }
    return f;
}

struct Job {
    Family family;
    int N = kDefaultN;
    int M = kDefaultM;
    bool N_given = false;
};

Job resolve_job(const Options& o) {
    std::string name = o.family;
    Json params;
    std::optional<int> N = o.N;
    if (!o.descriptor.empty()) {
        const Json d = read_json_file(o.descriptor);
        if (!d.is_object() || !d.contains("family") || !d.at("family").is_string())
            throw InputError("descriptor needs a string 'family'");
        name = d.at("family").get<std::string>();
        if (d.contains("params")) params = d.at("params");
        if (!N && d.contains("N")) {
            if (!d.at("N").is_number_integer()) throw InputError("descriptor 'N' must be an integer");
            N = d.at("N").get<int>();
        }
    }
    if (!o.params.empty()) params = parse_json_text(o.params, "--params");
    if (!o.table_file.empty()) {
        name = "table";
        params = read_json_file(o.table_file);
    }
    if (name.empty()) throw InputError("no family given (use --family, --descriptor or --table)");

    Job job;
    job.family = resolve_family(name, params);
    job.N_given = N.has_value();
    job.N = N.value_or(default_bound());
    job.M = o.M.value_or(kDefaultM);
    if (o.probe_bound) {
        job.N = std::min(job.N, *o.probe_bound);
        job.M = std::min(job.M, *o.probe_bound);
    }
    if (job.N < 1 || job.M < 0) throw InputError("bounds must be positive");
    return job;
}

void prefix(VerificationReport& into, const VerificationReport& from, const std::string& tag) {
    for (auto e : from.entries()) {
        e.identity = tag + e.identity;
        into.add(std::move(e));
    }
    for (const auto& n : from.notes()) into.note(tag + n);
}

std::string summarize(const ReportEntry& e) {
    std::ostringstream os;
    os << "first failure: " << e.identity << " at n=" << e.n;
    if (e.m) os << " m=" << *e.m;
    if (e.nu) os << " nu=" << *e.nu;
    os << " (expected " << e.expect << ", residual " << e.residual() << ")";
    return os.str();
}

int finish(const VerificationReport& r, std::ostream& err) {
    if (r.passed()) return kPass;
    err << summarize(*r.first_failure()) << "\n";
    return kFail;
}

int cmd_eigen(const Options& o, Json& doc, std::ostream&) {
    const DiffOperator J = json::operator_from(read_json_file(o.operator_file));
    if (o.degree < 0) throw InputError("-n must be non-negative");
    const Poly P = eigenpoly(J, o.degree);
    doc["n"] = o.degree;
    doc["lambda"] = json::to_json(lambda_table(J, 0, o.degree).values.back());
    doc["poly"] = json::to_json(P);
    return kPass;
}

int cmd_classify(const Options& o, Json& doc, std::ostream&) {
    const DiffOperator J = json::operator_from(read_json_file(o.operator_file));
    const int bound = o.probe_bound.value_or(default_bound());
    const OperatorClass c = classify(J, bound);
    doc["class"] = to_string(c.kind);
    if (c.kind == OperatorKind::DerivativeLike) doc["k"] = c.k;
    if (c.kind == OperatorKind::Degenerate) {
        doc["witness"] = c.witness;
        if (c.witness_index) doc["witness_index"] = *c.witness_index;
    }
    doc["probe_bound"] = c.probe_bound;
    switch (c.closed_form.status) {
        case Nonvanishing::AllN: doc["all_n"] = "nonvanishing"; break;
        case Nonvanishing::VanishesAt:
            doc["all_n"] = "vanishes";
            doc["all_n_root"] = c.closed_form.root;
            break;
        case Nonvanishing::Undecided: doc["all_n"] = "undecided"; break;
        case Nonvanishing::NotApplicable: break;
    }
    if (c.kind == OperatorKind::Isomorphism && J.order() <= 3) {
        const auto s = classify_solvability(ThirdOrderParams::from_operator(J));
        doc["solvability"] = to_string(s.tag);
        doc["notes"] = s.notes;
        if (!s.residues.empty()) {
            Json res;
            for (const auto& [name, value] : s.residues) res[name] = json::to_json(value);
            doc["residues"] = res;
        }
    }
    return kPass;
}

int verify_derived(const Options& o, Json& doc, std::ostream& err) {
    const DiffOperator J = json::operator_from(read_json_file(o.operator_file));
    int N = o.N.value_or(default_bound());
    if (o.probe_bound) N = std::min(N, *o.probe_bound);
    doc["mode"] = "derive";
    doc["N"] = N;
    try {
        const auto derived = derive_recurrence(J, N + 8);
        VerificationReport r = derived.report;
        r.merge(verify_expansions(J, derived.table, N));
        doc["table"] = json::to_json(derived.table);
        doc["report"] = json::to_json(r);
        return finish(r, err);
    } catch (const NotTwoOrthogonal& e) {
        doc["status"] = "fail";
        doc["error"] = "NotTwoOrthogonal";
        doc["message"] = e.what();
        doc["at_n"] = e.n();
        if (e.nu() >= 0) doc["at_nu"] = e.nu();
        err << "NotTwoOrthogonal: " << e.what() << "\n";
        return kFail;
    }
}

int cmd_verify(const Options& o, Json& doc, std::ostream& err) {
    if (!o.operator_file.empty()) return verify_derived(o, doc, err);
    const Job job = resolve_job(o);
    if (!job.family.op) throw InputError("verify needs an operator family (case1, case2, corollary42)");
    const DiffOperator& J = *job.family.op;
    const int top = std::max(job.N + 8, 3 * job.M + 3);
    const RecurrenceTable rt = job.family.table(top);
    const MonicSequence seq = generate(rt, top);

    doc["family"] = job.family.name;
    doc["N"] = job.N;
    doc["M"] = job.M;

    // Some parameter choices make a closed-form gamma_n vanish; the eigen sequence
    // is then not regular and nothing below is meaningful.
    VerificationReport gate;
    for (int n = 1; n <= job.N; ++n) gate.check_scalar("closed-form-gamma", n, rt.gamma(n), false);
    if (!gate.passed()) {
        doc["report"] = json::to_json(gate);
        return finish(gate, err);
    }

    VerificationReport r = verify_expansions(J, rt, job.N);
    const auto derived = derive_recurrence(J, job.N);
    r.merge(compare_tables(rt, derived.table, job.N, "oracle"));
    r.merge(check_d_orthogonality(seq, 2, job.M));

    if (job.family.name == "case1") {
        const MonicSequence Q = derivative_sequence(seq);
        for (int n = 0; n < Q.size(); ++n) r.check_equal("appell-derivative-sequence", n, Q[n], seq[n]);
    }
    if (job.family.name == "corollary42") {
        const MonicSequence Q = derivative_sequence(seq);
        VerificationReport hahn = check_d_orthogonality(Q, 2, job.M);
        const RecurrenceTable qt = extract_two_orthogonal_table(Q);
        for (int n = 1; n <= qt.gamma_count(0); ++n) hahn.check_scalar("gamma", n, qt.gamma(n), false);
        prefix(r, hahn, "hahn:");
    }
    doc["report"] = json::to_json(r);
    return finish(r, err);
}

int cmd_duals(const Options& o, Json& doc, std::ostream& err) {
    const Job job = resolve_job(o);
    const int need = 3 * job.M + 2;
    const int top = job.N_given ? job.N : std::max(job.N, need);
    const RecurrenceTable rt = job.family.table(top);
    const int d = rt.d();
    const MonicSequence seq = generate(rt, std::min(top, job.family.name == "table" ? rt.beta_count() : top));

    doc["family"] = job.family.name;
    doc["d"] = d;
    doc["N"] = seq.top();
    doc["M"] = job.M;
    const DualMoments dm = dual_moments(seq, d);
    Json moments;
    for (int i = 0; i < d; ++i) {
        Json row = Json::array();
        for (const auto& v : dm.moments[static_cast<size_t>(i)]) row.push_back(json::to_json(v));
        moments["u" + std::to_string(i)] = row;
    }
    doc["moments"] = moments;
    const VerificationReport r = check_d_orthogonality(seq, d, job.M);
    doc["report"] = json::to_json(r);
    return finish(r, err);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact operator calculus and 2-orthogonal eigenfamily verification", "dortho"};
    app.require_subcommand(1);
    Options o;

    const auto add_out = [&](CLI::App* sub) { sub->add_option("--out", o.out_file, "Write JSON here instead of stdout"); };
    const auto add_family = [&](CLI::App* sub) {
        sub->add_option("--family", o.family, "case1, case2, corollary42 or table");
        sub->add_option("--params", o.params, "Family parameters as JSON");
        sub->add_option("--descriptor", o.descriptor, "Family descriptor JSON file");
        sub->add_option("-N", o.N, "Highest index checked");
        sub->add_option("-M", o.M, "Highest m in the d-orthogonality probe");
        sub->add_option("--probe-bound", o.probe_bound, "Cap on every n/m loop")->check(CLI::PositiveNumber);
    };

    auto* eigen = app.add_subcommand("eigen", "Monic eigenpolynomial of degree n");
    eigen->add_option("--operator", o.operator_file, "Operator JSON file")->required();
    eigen->add_option("-n,--degree", o.degree, "Degree")->required();
    add_out(eigen);

    auto* verify = app.add_subcommand("verify", "Verify every identity for a family, or derive from an operator");
    add_family(verify);
    verify->add_option("--operator", o.operator_file, "Operator JSON file (derive mode)");
    add_out(verify);

    auto* cls = app.add_subcommand("classify", "Classify an operator and its eigenproblem");
    cls->add_option("--operator", o.operator_file, "Operator JSON file")->required();
    cls->add_option("--probe-bound", o.probe_bound, "Highest n probed")->check(CLI::PositiveNumber);
    add_out(cls);

    auto* duals = app.add_subcommand("duals", "Dual moments and d-orthogonality report");
    add_family(duals);
    duals->add_option("--table", o.table_file, "Recurrence table JSON file");
    add_out(duals);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kPass;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return kInputError;
    }

    Json doc;
    int code = kInputError;
    try {
        if (eigen->parsed()) {
            doc["command"] = "eigen";
            code = cmd_eigen(o, doc, err);
        } else if (verify->parsed()) {
            doc["command"] = "verify";
            code = cmd_verify(o, doc, err);
        } else if (cls->parsed()) {
            doc["command"] = "classify";
            code = cmd_classify(o, doc, err);
        } else {
            doc["command"] = "duals";
            code = cmd_duals(o, doc, err);
        }
    } catch (const EigenvalueCollision& e) {
        err << "EigenvalueCollision: " << e.what() << "\n";
        return kFail;
    } catch (const NotIsomorphism& e) {
        err << "NotIsomorphism: " << e.what() << "\n";
        return kFail;
    } catch (const NotTwoOrthogonal& e) {
        err << "NotTwoOrthogonal: " << e.what() << "\n";
        return kFail;
    } catch (const DegreeViolation& e) {
        err << "invalid operator: " << e.what() << " (index " << e.index() << ")\n";
        return kInputError;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kInputError;
    }

    const std::string text = doc.dump(2) + "\n";
    if (o.out_file.empty()) {
        out << text;
    } else {
        std::ofstream f(o.out_file, std::ios::binary);
        if (!f) {
            err << "cannot write '" << o.out_file << "'\n";
            return kInputError;
        }
        f << text;
    }
    return code;
}

}  // namespace dortho::cli
