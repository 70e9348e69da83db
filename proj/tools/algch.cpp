// algch: command-line front end for constant Lie algebroid computations.

#include "algch/io.hpp"
#include "algch/pullback.hpp"
#include "algch/transgression.hpp"

#include <CLI11.hpp>

#include <exception>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

using namespace algch;
using io::json;

namespace {

const std::vector<std::string> commands{"validate", "cohomology", "char", "modular", "cs", "morita-check", "product"};

struct JobSpec {
    std::string command;
    std::vector<std::string> inputs;
    std::optional<unsigned> max_q;
    std::size_t k = 1;
    std::uint64_t seed = 1;
};

struct JobResult {
    std::string text;
    json report;
    int status = 0; // 0 ok, 1 asserted identity failed, 2 error
};

struct Loaded {
    std::string path;
    io::Document doc;
};

json options_json(const JobSpec& job)
{
    json o{{"k", job.k}, {"seed", job.seed}};
    o["max_q"] = job.max_q ? json(*job.max_q) : json(nullptr);
    return o;
}

std::string verdict(bool zero) { return zero ? "ZERO" : "NONZERO"; }

void need_inputs(const JobSpec& job, std::size_t count)
{
    if (job.inputs.size() != count)
        throw Error(job.command + " expects " + std::to_string(count) + " input file(s), got " +
                    std::to_string(job.inputs.size()));
}

TangentConnection tm_of(const io::Document& d)
{
    return d.tm ? *d.tm : TangentConnection::zero(d.algebroid);
}

HermitianMetric metric_of(const io::Document& d)
{
    return d.metric ? *d.metric : identity_adjoint_metric(d.algebroid);
}

json class_json(const ClassReport& r)
{
    json j{{"q", r.q}, {"representative", io::form_to_json(r.representative)}, {"is_zero_class", r.is_zero_class}};
    j["witness"] = r.witness ? io::form_to_json(*r.witness) : json(nullptr);
    return j;
}

int run_validate(const std::vector<Loaded>& in, std::ostream& out, json& res)
{
    int status = 0;
    for (const auto& l : in) {
        const auto rep = validate_algebroid(l.doc.algebroid);
        json issues = json::array();
        for (const auto& is : rep.issues)
            issues.push_back(is.describe());
        res.push_back(json{{"input", l.path}, {"valid", rep.ok()}, {"issues", issues}});
        out << l.path << ": " << (rep.ok() ? "VALID" : "INVALID") << "\n";
        for (const auto& is : rep.issues)
            out << "  " << is.describe() << "\n";
        if (!rep.ok())
            status = 1;
    }
    return status;
}

int run_cohomology(const std::vector<Loaded>& in, std::ostream& out, json& res)
{
    for (const auto& l : in) {
        const auto b = betti_numbers(l.doc.algebroid);
        res.push_back(json{{"input", l.path}, {"betti", b}});
        out << l.path << "\nbetti:";
        for (auto x : b)
            out << " " << x;
        out << "\n";
    }
    return 0;
}

int run_char(const JobSpec& job, const std::vector<Loaded>& in, std::ostream& out, json& res)
{
    for (const auto& l : in) {
        const auto& a = l.doc.algebroid;
        const unsigned mq = job.max_q.value_or(default_max_q(a));
        json entry{{"input", l.path}};
        out << l.path << "\n";
        json intrinsic = json::array();
        for (const auto& r : intrinsic_char(a, tm_of(l.doc), metric_of(l.doc), mq)) {
            intrinsic.push_back(class_json(r));
            out << "char^" << r.q << ": " << verdict(r.is_zero_class) << "  [" << io::form_to_string(r.representative)
                << "]\n";
        }
        entry["intrinsic"] = std::move(intrinsic);

        if (l.doc.representation) {
            const auto& rep = *l.doc.representation;
            json conns = json::array();
            for (std::size_t c = 0; c < rep.connections.size(); ++c) {
                const auto& conn = rep.connections[c];
                json cj;
                json ch = json::array();
                const auto entries = chern_character(conn, mq);
                bool primary_zero = true;
                for (unsigned q = 0; q < entries.size(); ++q) {
                    const bool exact = q == 0 ? entries[q].is_zero() : coboundary_witness(a, entries[q]).has_value();
                    if (q > 0 && !entries[q].is_zero())
                        primary_zero = false;
                    ch.push_back(json{{"q", q}, {"form", io::form_to_json(entries[q])}, {"is_zero_class", exact}});
                    out << "connection " << c + 1 << " ch^" << q << ": ";
                    if (q == 0)
                        out << io::form_to_string(entries[q]) << "\n";
                    else
                        out << verdict(exact) << "  [" << io::form_to_string(entries[q]) << "]\n";
                }
                cj["chern_character"] = std::move(ch);
                if (rep.metric && primary_zero) {
                    json sec = json::array();
                    for (const auto& r : secondary_class(conn, *rep.metric, mq)) {
                        sec.push_back(class_json(r));
                        out << "connection " << c + 1 << " u^" << r.q << ": " << verdict(r.is_zero_class) << "  ["
                            << io::form_to_string(r.representative) << "]\n";
                    }
                    cj["secondary"] = std::move(sec);
                }
                conns.push_back(std::move(cj));
            }
            entry["connections"] = std::move(conns);
        }
        res.push_back(std::move(entry));
    }
    return 0;
}

int run_modular(const std::vector<Loaded>& in, std::ostream& out, json& res)
{
    int status = 0;
    for (const auto& l : in) {
        const auto& a = l.doc.algebroid;
        const auto m = modular_class(a, tm_of(l.doc), metric_of(l.doc), true);
        json entry{{"input", l.path}, {"class", class_json(m.report)}, {"kappa", io::scalar_to_json(modular_kappa)},
                   {"normalized", io::form_to_json(*m.normalized)}};
        out << l.path << "\nmod: " << verdict(m.report.is_zero_class) << "\n"
            << "representative: " << io::form_to_string(m.report.representative) << "\n"
            << "normalized (1/" << to_string(modular_kappa) << "): " << io::form_to_string(*m.normalized) << "\n";
        if (a.base_dim() == 0) {
            const auto tc = trace_character(a);
            const bool agrees = *m.normalized == tc;
            entry["trace_character"] = io::form_to_json(tc);
            entry["matches_trace_character"] = agrees;
            out << "trace character: " << io::form_to_string(tc) << (agrees ? " (matches)" : " (MISMATCH)") << "\n";
            if (!agrees)
                status = 1;
        }
        res.push_back(std::move(entry));
    }
    return status;
}

int run_cs(const JobSpec& job, const std::vector<Loaded>& in, std::ostream& out, json& res)
{
    int status = 0;
    for (const auto& l : in) {
        const auto& a = l.doc.algebroid;
        if (!l.doc.representation || l.doc.representation->connections.empty())
            throw Error(l.path + ": cs needs a representation block with at least one connection");
        const auto& conns = l.doc.representation->connections;
        const std::size_t p = conns.size() - 1;
        const unsigned mq = job.max_q.value_or(default_max_q(a));
        json terms = json::array();
        out << l.path << "\np = " << p << "\n";
        for (unsigned q = (p + 1) / 2; q <= mq; ++q) {
            const auto f = cs_cochain(conns, q);
            // d cs(n_0..n_p) = sum_i (-1)^i cs(.., n_i omitted, ..)
            ScalarForm rhs(a.rank(), f.degree() + 1, Scalar());
            if (p > 0)
                for (std::size_t i = 0; i <= p; ++i) {
                    std::vector<Connection> face(conns);
                    face.erase(face.begin() + static_cast<std::ptrdiff_t>(i));
                    const auto t = cs_cochain(face, q);
                    rhs = i % 2 == 0 ? rhs + t : rhs - t;
                }
            const bool cocycle = ce_differential(a, f) == rhs;
            if (!cocycle)
                status = 1;
            terms.push_back(json{{"q", q}, {"form", io::form_to_json(f)}, {"cocycle_identity", cocycle}});
            out << "cs^" << q << ": " << io::form_to_string(f) << "  (cocycle identity " << (cocycle ? "holds" : "FAILS")
                << ")\n";
        }
        res.push_back(json{{"input", l.path}, {"p", p}, {"terms", std::move(terms)}});
    }
    return status;
}

int run_morita(const JobSpec& job, const std::vector<Loaded>& in, std::ostream& out, json& res)
{
    int status = 0;
    for (const auto& l : in) {
        const auto& a = l.doc.algebroid;
        const auto g = metric_of(l.doc);
        const unsigned mq = job.max_q.value_or(default_max_q(a));
        const auto rep = morita_check(a, SubmersionSpec::with_identity_metric(job.k), tm_of(l.doc), g.even_block(),
                                      g.odd_block(), mq, job.seed);
        json terms = json::array();
        out << l.path << "  (k = " << job.k << ", seed = " << job.seed << ")\n";
        for (const auto& t : rep.terms) {
            std::string v = t.equal ? "EQUAL" : "DIFFERENT";
            if (t.equal && t.lhs.is_zero())
                v += " (both zero)";
            else if (t.equal)
                v += t.lhs_exact ? " (exact)" : " (not exact)";
            out << "q=" << t.q << ": " << v << "; perturbed metric "
                << (t.perturbed_cohomologous ? "cohomologous" : "NOT cohomologous") << "\n";
            terms.push_back(json{{"q", t.q},
                                 {"lhs", io::form_to_json(t.lhs)},
                                 {"rhs", io::form_to_json(t.rhs)},
                                 {"equal", t.equal},
                                 {"lhs_exact", t.lhs_exact},
                                 {"perturbed_cohomologous", t.perturbed_cohomologous}});
        }
        if (!rep.all_equal() || !rep.all_cohomologous())
            status = 1;
        res.push_back(json{{"input", l.path}, {"seed", rep.seed}, {"terms", std::move(terms)}});
    }
    return status;
}

int run_product(const std::vector<Loaded>& in, std::ostream& out, json& res)
{
    const auto& a = in[0].doc.algebroid;
    const auto& b = in[1].doc.algebroid;
    const auto p = direct_product(a, b);
    const auto bp = betti_numbers(p), ba = betti_numbers(a), bb = betti_numbers(b);
    std::vector<std::size_t> kun(ba.size() + bb.size() - 1, 0);
    for (std::size_t i = 0; i < ba.size(); ++i)
        for (std::size_t j = 0; j < bb.size(); ++j)
            kun[i + j] += ba[i] * bb[j];
    const bool ok = validate_algebroid(p).ok() && kun == bp;
    res.push_back(json{{"product", io::algebroid_to_json(p)}, {"betti", bp}, {"kunneth", ok}});
    out << "product: base_dim " << p.base_dim() << ", rank " << p.rank() << "\nbetti:";
    for (auto x : bp)
        out << " " << x;
    out << "\nkunneth: " << (ok ? "holds" : "FAILS") << "\n" << io::algebroid_to_json(p).dump(2) << "\n";
    return ok ? 0 : 1;
}

JobResult run_job(const JobSpec& job)
{
    JobResult r;
    r.report = json{{"command", job.command}, {"options", options_json(job)}};
    std::ostringstream out;
    try {
        if (std::find(commands.begin(), commands.end(), job.command) == commands.end())
            throw Error("unknown command '" + job.command + "'");
        if (job.inputs.empty())
            throw Error(job.command + " needs at least one input file");
        if (job.command == "product")
            need_inputs(job, 2);
        std::vector<Loaded> in;
        json echoed = json::array();
        for (const auto& path : job.inputs) {
            auto doc = io::load_document(path);
            if (job.command != "validate")
                require_valid(doc.algebroid);
            std::ifstream raw(path);
            echoed.push_back(json{{"path", path}, {"document", json::parse(raw)}});
            in.push_back({path, std::move(doc)});
        }
        r.report["inputs"] = std::move(echoed);
        json res = json::array();
        if (job.command == "validate")
            r.status = run_validate(in, out, res);
        else if (job.command == "cohomology")
            r.status = run_cohomology(in, out, res);
        else if (job.command == "char")
            r.status = run_char(job, in, out, res);
        else if (job.command == "modular")
            r.status = run_modular(in, out, res);
        else if (job.command == "cs")
            r.status = run_cs(job, in, out, res);
        else if (job.command == "morita-check")
            r.status = run_morita(job, in, out, res);
        else
            r.status = run_product(in, out, res);
        r.report["results"] = std::move(res);
        r.report["status"] = r.status == 0 ? "ok" : "failed";
    } catch (const std::exception& e) {
        r.status = 2;
        r.report["status"] = "error";
        r.report["error"] = json{{"message", e.what()}};
        out << "error: " << e.what() << "\n";
    }
    r.text = out.str();
    return r;
}

std::vector<JobSpec> load_batch(const std::string& path, const JobSpec& defaults)
{
    std::ifstream f(path);
    if (!f)
        throw Error("cannot open batch file '" + path + "'");
    json j;
    try {
        j = json::parse(f);
    } catch (const json::parse_error& e) {
        throw Error(path + ": parse error: " + e.what());
    }
    if (!j.is_array())
        throw Error(path + ": a batch file is a list of jobs");
    const auto dir = std::filesystem::path(path).parent_path();
    std::vector<JobSpec> jobs;
    for (std::size_t i = 0; i < j.size(); ++i) {
        const auto& e = j[i];
        const std::string where = path + ": job " + std::to_string(i + 1);
        if (!e.is_object() || !e.contains("command") || !e["command"].is_string())
            throw Error(where + ": missing \"command\"");
        JobSpec s = defaults;
        s.command = e["command"].get<std::string>();
        s.inputs.clear();
        if (e.contains("inputs"))
            for (const auto& p : e["inputs"]) {
                if (!p.is_string())
                    throw Error(where + ": inputs must be paths");
                const std::filesystem::path ip(p.get<std::string>());
                s.inputs.push_back(ip.is_absolute() ? ip.string() : (dir / ip).string());
            }
        if (e.contains("max_q"))
            s.max_q = e["max_q"].get<unsigned>();
        if (e.contains("k"))
            s.k = e["k"].get<std::size_t>();
        if (e.contains("seed"))
            s.seed = e["seed"].get<std::uint64_t>();
        jobs.push_back(std::move(s));
    }
    return jobs;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Exact characteristic classes of constant Lie algebroids"};
    JobSpec job;
    unsigned max_q = 0;
    std::string out_path;
    auto all = commands;
    all.push_back("batch");
    app.add_option("command", job.command, "validate | cohomology | char | modular | cs | morita-check | product | batch")
        ->required()
        ->check(CLI::IsMember(all));
    app.add_option("inputs", job.inputs, "input JSON files (batch: one job list)")->required();
    auto* mq = app.add_option("--max-q", max_q, "highest power q");
    app.add_option("--k", job.k, "fibre dimension for morita-check")->check(CLI::Range(1, 8));
    app.add_option("--seed", job.seed, "seed for randomized metrics");
    app.add_option("--out", out_path, "write the JSON report here");
    CLI11_PARSE(app, argc, argv);
    if (*mq)
        job.max_q = max_q;

    json report;
    int status = 0;
    if (job.command == "batch") {
        std::vector<JobSpec> jobs;
        try {
            if (job.inputs.size() != 1)
                throw Error("batch expects exactly one job list");
            jobs = load_batch(job.inputs.front(), job);
        } catch (const std::exception& e) {
            std::cerr << "error: " << e.what() << "\n";
            return 2;
        }
        std::vector<JobResult> results(jobs.size());
#pragma omp parallel for schedule(dynamic)
        for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(jobs.size()); ++i)
            results[static_cast<std::size_t>(i)] = run_job(jobs[static_cast<std::size_t>(i)]);
        report = json{{"command", "batch"}, {"batch_file", job.inputs.front()}, {"jobs", json::array()}};
        for (std::size_t i = 0; i < jobs.size(); ++i) {
            std::cout << "== job " << i + 1 << ": " << jobs[i].command << "\n" << results[i].text;
            report["jobs"].push_back(results[i].report);
            status = std::max(status, results[i].status);
        }
        report["status"] = status == 0 ? "ok" : (status == 1 ? "failed" : "error");
    } else {
        auto r = run_job(job);
        (r.status == 2 ? std::cerr : std::cout) << r.text;
        report = std::move(r.report);
        status = r.status;
    }

    if (!out_path.empty()) {
        std::ofstream f(out_path);
        if (!f) {
            std::cerr << "error: cannot write '" << out_path << "'\n";
            return 2;
        }
        f << report.dump(2) << "\n";
    }
    return status;
}
