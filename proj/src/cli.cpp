#include "divcancel/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <map>
#include <ostream>
#include <sstream>
#include <thread>

#include "divcancel/parse.hpp"

namespace divcancel {

using nlohmann::json;

namespace {

std::string element_text(const json& v, const std::string& where) {
    if (v.is_string()) return v.get<std::string>();
    if (v.is_number_integer()) return v.dump();
    throw JobError(where + ": expected a string or an integer");
}

FieldElement element(const json& v, FieldKind k, const std::string& where) {
    try {
        return parse_element(element_text(v, where), k);
    } catch (const ParseError& e) {
        throw JobError(where + ": " + e.what());
    } catch (const std::domain_error& e) {
        throw JobError(where + ": " + e.what());
    }
}

const json& member(const json& j, const char* key, const std::string& where) {
    if (!j.is_object() || !j.contains(key)) throw JobError(where + ": missing \"" + key + "\"");
    return j.at(key);
}

long integer_member(const json& j, const char* key, long fallback, const std::string& where) {
    if (!j.contains(key)) return fallback;
    const json& v = j.at(key);
    if (!v.is_number_integer() || v.get<long>() < 0) throw JobError(where + "." + key + ": expected a non-negative integer");
    return v.get<long>();
}

Place parse_place(const json& j, FieldKind field, const std::string& where) {
    const std::string type = member(j, "type", where).is_string() ? j.at("type").get<std::string>() : "";
    try {
        if (type == "prime") {
            if (field != FieldKind::rationals) throw JobError(where + ": a prime place needs field Q");
            const json& p = member(j, "p", where);
            mpz_class v;
            if (p.is_number_integer())
                v = p.get<long>();
            else if (p.is_string() && v.set_str(p.get<std::string>(), 10) == 0)
                ;
            else
                throw JobError(where + ".p: expected an integer");
            return Place::rational_prime(v);
        }
        if (type == "poly") {
            if (field != FieldKind::function_field) throw JobError(where + ": a polynomial place needs field Q(t)");
            return Place::polynomial(element(member(j, "pi", where), FieldKind::function_field, where + ".pi"));
        }
    } catch (const std::invalid_argument& e) {
        throw JobError(where + ": " + e.what());
    }
    throw JobError(where + ".type: expected \"prime\" or \"poly\"");
}

std::string ext_text(const ExtInt& e) { return e.to_string(); }

json ext_json(const ExtInt& e) { return e.is_infinite() ? json("inf") : json(e.value()); }

ExtInt ext_from_json(const json& j) {
    if (j.is_string() && j.get<std::string>() == "inf") return ExtInt::infinity();
    return ExtInt(j.get<std::int64_t>());
}

json map_json(const ModelMap& m) {
    return {{"u", m.u.to_string()}, {"r", m.r.to_string()}, {"s", m.s.to_string()}, {"t", m.t.to_string()}};
}

json model_json(const WeierstrassModel& e) {
    json a = json::array();
    for (const auto& c : e.a()) a.push_back(c.to_string());
    return a;
}

std::string np_text(const std::optional<long>& n, long bound) {
    return n ? std::to_string(*n) : "not found <= " + std::to_string(bound);
}

json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw JobError(path + ": cannot open file");
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw JobError(path + ": " + e.what());
    }
}

struct Context {
    std::ostream& out;
    std::ostream& err;
};

int cmd_tate(const JobSpec& job, const std::string& format, Context& ctx) {
    const TateResult r = tate(job.model, job.place);
    const ReductionData& d = r.data;
    const bool multiplicative = d.type.symbol == KodairaType::Symbol::I;
    if (format == "json") {
        json j{{"place", job.place.to_string()},
               {"minimal_model", model_json(r.minimal)},
               {"map", map_json(r.map)},
               {"minimal", r.was_minimal},
               {"kodaira", d.type.to_string()},
               {"v_delta", d.v_delta},
               {"phi", d.phi_structure}};
        if (multiplicative) j["split"] = d.split;
        ctx.out << j.dump(2) << "\n";
        return 0;
    }
    ctx.out << "place: " << job.place.to_string() << "\n"
            << "minimal model: " << r.minimal.to_string() << "\n"
            << "map: " << r.map.to_string() << "\n"
            << "minimal: " << (r.was_minimal ? "true" : "false") << "\n"
            << "kodaira: " << d.type.to_string() << "\n"
            << "v(delta): " << d.v_delta << "\n"
            << "phi: " << d.phi_structure << "\n";
    if (multiplicative) ctx.out << "split: " << (d.split ? "true" : "false") << "\n";
    return 0;
}

int cmd_height(const JobSpec& job, const std::string& format, Context& ctx) {
    const TateResult r = tate(job.model, job.place);
    const CurvePoint p = transport(r.map, job.point);
    if (p.is_identity()) throw JobError("point: must be affine");
    const LocalHeightRecord h = local_height(job.place, r.minimal, r.data, p);
    const long mp = order_m_P(r.data, h.component);
    const std::optional<long> np = find_n_P(job.place, r.minimal, r.data, p, job.np_bound);
    const bool indexed = h.component.kind == ComponentIndex::Kind::index;
    if (format == "json") {
        json j{{"kodaira", r.data.type.to_string()},
               {"intersection", h.intersection},
               {"component", h.component.to_string()},
               {"m_P", mp},
               {"c_v", h.c_v.get_str()},
               {"lambda_hat", h.lambda_hat.get_str()},
               {"n_P", np ? json(*np) : json(nullptr)},
               {"np_bound", job.np_bound}};
        if (indexed) j["a_P"] = h.component.a;
        ctx.out << j.dump(2) << "\n";
        return 0;
    }
    ctx.out << "kodaira: " << r.data.type.to_string() << "\n"
            << "(P.O): " << h.intersection << "\n"
            << "component: " << h.component.to_string() << "\n";
    if (indexed) ctx.out << "a_P: " << h.component.a << "\n";
    ctx.out << "m_P: " << mp << "\n"
            << "c_v: " << h.c_v.get_str() << "\n"
            << "lambda_hat: " << h.lambda_hat.get_str() << "\n"
            << "n_P: " << np_text(np, job.np_bound) << "\n";
    return 0;
}

int cmd_kseq(const JobSpec& job, long n_max, const std::string& format, Context& ctx) {
    const VerifyReport rep = verify_range(job.place, job.model, job.point, n_max, {job.scalar_cap});
    if (format == "json") {
        json recs = json::array();
        for (const auto& r : rep.records) recs.push_back(krecord_to_json(r));
        json j{{"kodaira", rep.reduction.type.to_string()},
               {"component", rep.height.component.to_string()},
               {"records", recs},
               {"skipped", rep.skipped},
               {"mismatches", rep.mismatches}};
        ctx.out << j.dump(2) << "\n";
    } else {
        ctx.out << krecords_csv(rep.records);
    }
    for (long n : rep.skipped) ctx.err << "n=" << n << ": skipped, exceeds the scalar cap " << job.scalar_cap << "\n";
    return rep.mismatches == 0 ? 0 : 2;
}

/// Compares a report against the entry's frozen expectations; returns the
/// number of disagreements and describes them on `log`.
long check_expected(const JobSpec& job, const VerifyReport& rep, std::ostream& log) {
    long bad = 0;
    const json& x = job.expected;
    if (x.is_null()) return 0;
    if (x.contains("kodaira") && x["kodaira"].get<std::string>() != rep.reduction.type.to_string()) {
        log << "  expected kodaira " << x["kodaira"].get<std::string>() << ", got " << rep.reduction.type.to_string()
            << "\n";
        ++bad;
    }
    if (x.contains("c_v") && [&] { mpq_class c(x["c_v"].get<std::string>()); c.canonicalize(); return c; }() != rep.height.c_v) {
        log << "  expected c_v " << x["c_v"].get<std::string>() << ", got " << rep.height.c_v.get_str() << "\n";
        ++bad;
    }
    if (x.contains("k")) {
        const json& ks = x["k"];
        for (std::size_t i = 0; i < ks.size() && i < rep.records.size(); ++i) {
            const ExtInt want = ext_from_json(ks[i]);
            if (want != rep.records[i].k_direct) {
                log << "  n=" << i + 1 << ": expected k " << want.to_string() << ", got "
                    << rep.records[i].k_direct.to_string() << "\n";
                ++bad;
            }
        }
    }
    return bad;
}

int cmd_verify(const std::string& corpus_path, long n_max_override, unsigned jobs, Context& ctx) {
    const json corpus = read_json_file(corpus_path);
    if (!corpus.contains("entries") || !corpus["entries"].is_array())
        throw JobError(corpus_path + ": missing \"entries\" array");
    std::vector<JobSpec> specs;
    for (std::size_t i = 0; i < corpus["entries"].size(); ++i)
        specs.push_back(parse_job(corpus["entries"][i], corpus_path + ": entries[" + std::to_string(i) + "]"));
    if (specs.empty()) {
        ctx.err << "warning: corpus " << corpus_path << " has no entries\n";
        ctx.out << "summary: 0 entries, 0 records, 0 mismatches, 0 errors\n";
        return 0;
    }

    std::vector<VerifyTask> tasks;
    for (const auto& s : specs)
        tasks.push_back({s.place, s.model, s.point, n_max_override > 0 ? n_max_override : s.n_max});
    VerifyOptions opts;
    opts.scalar_cap = specs.front().scalar_cap;
    const std::vector<VerifyOutcome> results = verify_all(tasks, jobs, opts);

    long records = 0, mismatches = 0, errors = 0, skipped = 0;
    std::map<std::string, long> by_type;
    for (std::size_t i = 0; i < results.size(); ++i) {
        const JobSpec& s = specs[i];
        const std::string label = s.name.empty() ? "entries[" + std::to_string(i) + "]" : s.name;
        const VerifyOutcome& o = results[i];
        if (!o.report) {
            ctx.out << label << ": ERROR " << o.error << "\n";
            ++errors;
            continue;
        }
        const VerifyReport& rep = *o.report;
        std::ostringstream detail;
        long bad = rep.mismatches;
        for (const auto& r : rep.records)
            if (!r.matches)
                detail << "  n=" << r.n << ": k_direct=" << r.k_direct.to_string()
                       << " k_formula=" << r.k_formula.get_str() << "\n";
        bad += check_expected(s, rep, detail);
        ++by_type[rep.reduction.type.to_string()];
        records += static_cast<long>(rep.records.size());
        skipped += static_cast<long>(rep.skipped.size());
        mismatches += bad;
        ctx.out << label << ": " << rep.reduction.type.to_string() << " at " << s.place.to_string() << ", "
                << rep.height.component.to_string() << ", n<=" << rep.records.size() << ": "
                << (bad == 0 ? "ok" : "MISMATCH (" + std::to_string(bad) + ")") << "\n"
                << detail.str();
    }
    ctx.out << "by kodaira:";
    for (const auto& [k, c] : by_type) ctx.out << " " << k << "=" << c;
    ctx.out << "\nsummary: " << specs.size() << " entries, " << records << " records, " << mismatches
            << " mismatches, " << errors << " errors";
    if (skipped) ctx.out << ", " << skipped << " skipped";
    ctx.out << "\n";
    if (errors) return 1;
    return mismatches == 0 ? 0 : 2;
}

JobSpec load_job(const std::string& path) { return parse_job(read_json_file(path), path); }

}  // namespace

JobSpec parse_job(const json& j, const std::string& where) {
    if (!j.is_object()) throw JobError(where + ": expected a JSON object");
    FieldKind field;
    try {
        field = parse_field_kind(member(j, "field", where).get<std::string>());
    } catch (const std::exception& e) {
        throw JobError(where + ".field: " + e.what());
    }
    const json& a = member(j, "a", where);
    if (!a.is_array() || a.size() != 5) throw JobError(where + ".a: expected 5 coefficients a1, a2, a3, a4, a6");
    std::array<FieldElement, 5> coeffs;
    for (std::size_t i = 0; i < 5; ++i)
        coeffs[i] = element(a[i], field, where + ".a[" + std::to_string(i) + "]");
    const json& pt = member(j, "point", where);
    if (!pt.is_array() || pt.size() != 2) throw JobError(where + ".point: expected [x, y]");
    CurvePoint p{element(pt[0], field, where + ".point[0]"), element(pt[1], field, where + ".point[1]")};
    Place place = parse_place(member(j, "place", where), field, where + ".place");

    std::optional<WeierstrassModel> model;
    try {
        model.emplace(coeffs);
    } catch (const std::invalid_argument& e) {
        throw JobError(where + ".a: " + e.what());
    }
    if (!is_on_curve(*model, p)) throw JobError(where + ".point: not on the curve");

    JobSpec s{j.contains("name") ? j["name"].get<std::string>() : std::string(),
              field,
              std::move(*model),
              std::move(p),
              std::move(place),
              integer_member(j, "n_max", 10, where),
              integer_member(j, "np_bound", default_np_bound, where),
              integer_member(j, "scalar_cap", default_scalar_cap, where),
              j.contains("expected") ? j["expected"] : json()};
    return s;
}

json krecord_to_json(const KRecord& r) {
    return {{"n", r.n},
            {"v_psi_sq", ext_json(r.v_psi_sq)},
            {"v_phi", ext_json(r.v_phi)},
            {"k_direct", ext_json(r.k_direct)},
            {"k_formula", r.k_formula.get_str()},
            {"matches", r.matches},
            {"torsion", r.torsion}};
}

KRecord krecord_from_json(const json& j) {
    KRecord r;
    r.n = j.at("n").get<long>();
    r.v_psi_sq = ext_from_json(j.at("v_psi_sq"));
    r.v_phi = ext_from_json(j.at("v_phi"));
    r.k_direct = ext_from_json(j.at("k_direct"));
    r.k_formula = mpq_class(j.at("k_formula").get<std::string>());
    r.k_formula.canonicalize();
    r.matches = j.at("matches").get<bool>();
    r.torsion = j.at("torsion").get<bool>();
    return r;
}

std::string krecords_csv(const std::vector<KRecord>& records) {
    std::ostringstream os;
    os << "n,v_psi_sq,v_phi,k_direct,k_formula,matches,torsion_flag\n";
    for (const auto& r : records)
        os << r.n << ',' << ext_text(r.v_psi_sq) << ',' << ext_text(r.v_phi) << ',' << ext_text(r.k_direct) << ','
           << r.k_formula.get_str() << ',' << (r.matches ? "true" : "false") << ',' << (r.torsion ? "true" : "false")
           << '\n';
    return os.str();
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Cancellation exponents of division polynomial values on elliptic curves"};
    app.require_subcommand(1);

    std::string job_path, corpus_path, format;
    long n_max = 0, np_bound = 0;
    unsigned jobs = std::max(1U, std::thread::hardware_concurrency());

    auto* tate_cmd = app.add_subcommand("tate", "Minimal model and Kodaira type at the place");
    tate_cmd->add_option("--job", job_path, "job file (JSON)")->required();
    tate_cmd->add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));

    auto* height_cmd = app.add_subcommand("height", "Component, correction term and local height of the point");
    height_cmd->add_option("--job", job_path, "job file (JSON)")->required();
    height_cmd->add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));
    height_cmd->add_option("--np-bound", np_bound, "search bound for n_P")->check(CLI::PositiveNumber);

    auto* kseq_cmd = app.add_subcommand("kseq", "Both computations of k_{v,n} for n = 1 .. n_max");
    kseq_cmd->add_option("--job", job_path, "job file (JSON)")->required();
    kseq_cmd->add_option("--n-max", n_max, "largest n (default: the job's n_max)")->check(CLI::PositiveNumber);
    kseq_cmd->add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}));

    auto* verify_cmd = app.add_subcommand("verify", "Check the closed form against the valuations over a corpus");
    verify_cmd->add_option("--corpus", corpus_path, "corpus file (JSON)")->required();
    verify_cmd->add_option("--n-max", n_max, "override every entry's n_max")->check(CLI::PositiveNumber);
    verify_cmd->add_option("--jobs", jobs, "worker threads")->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 1;
    }

    Context ctx{out, err};
    try {
        if (*verify_cmd) return cmd_verify(corpus_path, n_max, jobs, ctx);
        JobSpec job = load_job(job_path);
        if (np_bound > 0) job.np_bound = np_bound;
        if (*tate_cmd) return cmd_tate(job, format.empty() ? "text" : format, ctx);
        if (*height_cmd) return cmd_height(job, format.empty() ? "text" : format, ctx);
        return cmd_kseq(job, n_max > 0 ? n_max : job.n_max, format.empty() ? "csv" : format, ctx);
    } catch (const JobError& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const ScalarCapExceeded& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
}

}  // namespace divcancel
