#include <CLI11.hpp>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "nhrmt/nhrmt.hpp"

using namespace nhrmt;

namespace {

enum Exit { ok = 0, verify_failed = 1, usage = 2, numerical = 3 };

std::vector<double> parse_csv_doubles(const std::string& s)
{
    std::vector<double> out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        std::size_t pos = 0;
        double v = 0.0;
        try {
            v = std::stod(tok, &pos);
        } catch (const std::exception&) {
            pos = 0;
        }
        if (pos == 0 || pos != tok.size())
            throw ContractViolation("--q: '" + tok + "' is not a number");
        out.push_back(v);
    }
    if (out.empty())
        throw ContractViolation("--q: no coordinates given");
    return out;
}

json load_json_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw ContractViolation("cannot open " + path);
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw ContractViolation(std::string("malformed JSON in ") + path + ": " + e.what());
    }
}

json structure_json(const StructureReport& r)
{
    json j{{"pass", r.pass}, {"dim", r.dim}, {"expected_dim", r.expected_dim}};
    j["failure"] = r.failure ? json(*r.failure) : json(nullptr);
    return j;
}

json opt_json(const std::optional<std::string>& s) { return s ? json(*s) : json(nullptr); }

std::string sign_char(const std::optional<int>& s) { return s ? (*s > 0 ? "+" : "-") : "."; }

std::string fmt(double x)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

bool finite(const json& j)
{
    if (j.is_number_float())
        return std::isfinite(j.get<double>());
    if (j.is_structured())
        for (const auto& v : j)
            if (!finite(v))
                return false;
    return true;
}

int cmd_catalog(const std::string& cls, const std::string& kinds)
{
    std::printf("%-8s %-6s %-5s %-6s %-6s %-6s %-6s %-10s %s\n", "id", "kinds", "unit", "eps_c", "eps_cp", "eps_pq",
                "eps_cq", "class", "flags");
    for (const auto& e : catalog()) {
        if (!cls.empty() && e.expected_class.value_or("") != cls)
            continue;
        if (!kinds.empty() && e.kinds() != kinds)
            continue;
        const SignTable s = e.build(1).signs();
        std::string eps_c = ".";
        for (const auto& op : e.ops)
            if (op.kind == 'C')
                eps_c = op.epsilon > 0 ? "+" : "-";
        std::string flags;
        for (const auto& f : e.flags)
            flags += (flags.empty() ? "" : ",") + f;
        std::printf("%-8s %-6s %-5zu %-6s %-6s %-6s %-6s %-10s %s\n", e.id.c_str(),
                    e.kinds().empty() ? "-" : e.kinds().c_str(), e.unit, eps_c.c_str(), sign_char(s.eps_cp).c_str(),
                    sign_char(s.eps_pq).c_str(), sign_char(s.eps_cq).c_str(), e.expected_class.value_or("-").c_str(),
                    flags.c_str());
    }
    return ok;
}

int cmd_verify(const std::string& entry_id, const std::string& spec_path, std::size_t half_size, double tol)
{
    json report;
    report["config"] = {{"command", "verify"}, {"half_size", half_size}, {"tolerance", tol}};
    const CatalogEntry* entry = nullptr;
    std::optional<EnsembleSpec> spec;
    if (!entry_id.empty()) {
        entry = &find_entry(entry_id);
        spec = entry->build(half_size);
        report["config"]["entry"] = entry->id;
        report["entry"] = entry->id;
        report["flags"] = entry->flags;
        report["expected_class"] = opt_json(entry->expected_class);
    } else {
        spec = spec_from_json(load_json_file(spec_path));
        report["config"]["spec"] = spec_path;
    }
    const SymmetricPair pair = solve(*spec);
    const PairReport pr = verify_symmetric_pair(pair, tol);
    report["n"] = spec->n();
    report["kinds"] = spec->kinds();
    report["signs"] = sign_table_json(check_commutativity(*spec));
    report["dim_p"] = pair.p_basis.real_dim();
    report["dim_k"] = pair.k_basis.real_dim();
    report["residuals"] = {{"kk_in_k", pr.residuals[0]}, {"kp_in_p", pr.residuals[1]}, {"pp_in_k", pr.residuals[2]}};
    report["orthogonality"] = pr.orthogonality_checked ? json(pr.orthogonality) : json(nullptr);
    report["group_type"] = pair.group_type;
    bool pass = pr.pass;
    if (entry) {
        const StructureReport ps = structure_report(pair.p_basis, entry->p_form, half_size);
        const StructureReport ks = structure_report(pair.k_basis, entry->k_form, half_size);
        report["p_structure"] = structure_json(ps);
        report["k_structure"] = structure_json(ks);
        pass = pass && ps.pass && ks.pass;
    }
    report["pass"] = pass;
    std::cout << report.dump(2) << '\n';
    if (!finite(report["residuals"]))
        return numerical;
    return pass ? ok : verify_failed;
}

int cmd_sample(const std::string& entry_id, std::size_t n, std::optional<double> sigma_opt, std::uint64_t seed,
               std::size_t samples, std::string out_dir, const std::string& prefix, unsigned workers)
{
    const CatalogEntry& e = find_entry(entry_id);
    if (n == 0 || n % e.unit)
        throw ContractViolation("entry " + e.id + " needs N divisible by " + std::to_string(e.unit) + ", got " +
                                std::to_string(n));
    if (samples == 0)
        throw ContractViolation("--samples must be positive");
    const double sigma = sigma_opt.value_or(1.0 / std::sqrt(double(n)));
    if (!(sigma > 0.0))
        throw ContractViolation("--sigma must be positive");
    if (out_dir.empty()) {
        const char* env = std::getenv("NHRMT_OUT_DIR");
        out_dir = env ? env : ".";
    }
    std::filesystem::create_directories(out_dir);

    const EnsembleSpec spec = e.build(n / e.unit);
    const GaussianSampler sampler = make_sampler(spec, sigma, seed);
    const auto results = run_campaign(spec, sampler, samples, workers);

    const std::filesystem::path csv_path = std::filesystem::path(out_dir) / (prefix + ".csv");
    const std::filesystem::path json_path = std::filesystem::path(out_dir) / (prefix + ".summary.json");
    {
        std::ofstream csv(csv_path, std::ios::binary);
        if (!csv)
            throw ContractViolation("cannot write " + csv_path.string());
        csv << "sample_index,re,im\n";
        for (std::size_t i = 0; i < results.size(); ++i)
            for (const auto& z : results[i].eigenvalues)
                csv << i << ',' << fmt(z.real()) << ',' << fmt(z.imag()) << '\n';
    }

    std::vector<std::vector<cd>> spectra;
    for (const auto& r : results)
        spectra.push_back(r.eigenvalues);
    const SpectrumSummary sum = summarize(spectra);

    json checks = json::array();
    bool pass = true;
    for (std::size_t k = 0; k < spec.ops().size(); ++k) {
        std::size_t passed = 0;
        double worst = 0.0;
        for (const auto& r : results) {
            passed += r.checks[k].pass;
            worst = std::max(worst, r.checks[k].distance);
        }
        const auto& c0 = results[0].checks[k];
        checks.push_back({{"kind", std::string(1, c0.kind)},
                          {"closure", c0.closure},
                          {"passed", passed},
                          {"samples", samples},
                          {"max_distance", worst},
                          {"pass", passed == samples}});
        pass = pass && passed == samples;
    }

    json summary;
    summary["config"] = {{"command", "sample"}, {"entry", e.id}, {"n", n}, {"sigma", sigma}, {"seed", seed},
                         {"samples", samples}, {"out_dir", out_dir}, {"prefix", prefix}};
    summary["csv"] = csv_path.string();
    summary["eigenvalues"] = sum.eigenvalues;
    summary["real_count"] = sum.real_count;
    summary["support"] = sum.support;
    summary["radial_histogram"] = {{"lo", sum.radial.lo}, {"width", sum.radial.width}, {"counts", sum.radial.counts}};
    summary["real_axis_histogram"] = {
        {"lo", sum.real_axis.lo}, {"width", sum.real_axis.width}, {"counts", sum.real_axis.counts}};
    summary["symmetry_checks"] = checks;
    summary["pass"] = pass;
    {
        std::ofstream js(json_path, std::ios::binary);
        js << summary.dump(2) << '\n';
    }
    json brief = summary;
    brief.erase("radial_histogram");
    brief.erase("real_axis_histogram");
    brief["summary"] = json_path.string();
    std::cout << brief.dump(2) << '\n';
    if (!std::isfinite(sum.support))
        return numerical;
    return pass ? ok : verify_failed;
}

int cmd_classify(const std::string& path)
{
    const EnsembleSpec spec = spec_from_json(load_json_file(path));
    const Classification c = classify(spec);
    json out;
    out["config"] = {{"command", "classify"}, {"spec", path}};
    out["fingerprint"] = c.fp.str();
    json matches = json::array(), duals = json::array();
    for (const auto* e : c.matches)
        matches.push_back({{"id", e->id}, {"expected_class", opt_json(e->expected_class)}, {"flags", e->flags}});
    for (const auto* e : c.dual_links)
        duals.push_back({{"id", e->id}, {"expected_class", opt_json(e->expected_class)}});
    out["matches"] = matches;
    out["dual_links"] = duals;
    std::string classes;
    for (const auto* list : {&c.matches, &c.dual_links})
        for (const auto* e : *list)
            if (e->expected_class && classes.find(*e->expected_class) == std::string::npos)
                classes += (classes.empty() ? "" : " / ") + *e->expected_class;
    out["expected_classes"] = classes;
    out["note"] = "equal fingerprints are necessary, not sufficient, for unitary equivalence";
    std::cout << out.dump(2) << '\n';
    return ok;
}

int cmd_spec(const std::string& entry_id, std::size_t half_size, bool matrices)
{
    const CatalogEntry& e = find_entry(entry_id);
    const json j = matrices ? spec_to_json(e.build(half_size)) : entry_spec_json(e, half_size);
    std::cout << j.dump(matrices ? -1 : 2) << '\n';
    return ok;
}

int cmd_jacobian(const std::string& family, std::size_t rank, int mo, int ml, int ms, const std::string& curvature,
                 const std::string& q_text)
{
    Curvature curv;
    if (curvature == "0")
        curv = Curvature::Zero;
    else if (curvature == "+")
        curv = Curvature::Positive;
    else if (curvature == "-")
        curv = Curvature::Negative;
    else
        throw ContractViolation("--curvature must be 0, + or -");
    if (mo < 0 || ml < 0 || ms < 0)
        throw ContractViolation("multiplicities must be non-negative");
    const RootSystemData d = restricted_positive_roots(family_from_string(family), rank, {mo, ml, ms});
    const JacobianValue j = jacobian(curv, parse_csv_doubles(q_text), d);
    json out;
    out["config"] = {{"command", "jacobian"}, {"family", family}, {"rank", rank}, {"coords", d.coords},
                     {"m_o", mo}, {"m_l", ml}, {"m_s", ms}, {"curvature", curvature}, {"q", q_text}};
    out["value"] = j.value;
    out["log_value"] = std::isinf(j.log_value) ? json("-inf") : json(j.log_value);
    std::cout << out.dump(2) << '\n';
    return std::isnan(j.log_value) ? numerical : ok;
}

int cmd_observables(double ml, double ms, double s, double gamma, double l)
{
    const NanotubeObservables o = nanotube_observables(s, l, gamma, ml, ms);
    json out;
    out["config"] = {{"command", "observables"}, {"m_l", ml}, {"m_s", ms}, {"s", s}, {"gamma", gamma}, {"l", l}};
    out["mean_log_dg"] = o.mean_log_dg;
    out["xi"] = o.xi;
    out["var_ratio"] = o.var_ratio;
    out["units"] = "s is the length in units of the mean free path l; xi is in the units of l; "
                   "mean_log_dg and var_ratio are dimensionless";
    std::cout << out.dump(2) << '\n';
    return ok;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"nhrmt: symmetry-defined random matrix ensembles"};
    app.require_subcommand(1);

    auto* catalog_cmd = app.add_subcommand("catalog", "list catalog entries");
    std::string cls, kinds;
    catalog_cmd->add_option("--class", cls, "only entries of this Cartan/Ginibre class");
    catalog_cmd->add_option("--kinds", kinds, "only entries with exactly these symmetry kinds, e.g. PQC");

    auto* verify_cmd = app.add_subcommand("verify", "solve P and K and check the symmetric-pair relations");
    std::string v_entry, v_spec;
    std::size_t v_half = 2;
    double v_tol = 1e-9;
    auto* ve = verify_cmd->add_option("--entry", v_entry, "catalog entry id");
    auto* vs = verify_cmd->add_option("--spec", v_spec, "JSON ensemble spec");
    ve->excludes(vs);
    verify_cmd->add_option("--half-size", v_half, "entry half-size (N = unit x half-size)")->check(CLI::PositiveNumber);
    verify_cmd->add_option("--tol", v_tol, "residual tolerance")->check(CLI::PositiveNumber);

    auto* sample_cmd = app.add_subcommand("sample", "sample an entry and write eigenvalues");
    std::string s_entry, s_out, s_prefix = "sample";
    std::size_t s_n = 0, s_samples = 100;
    std::optional<double> s_sigma;
    std::uint64_t s_seed = 1;
    unsigned s_workers = 0;
    sample_cmd->add_option("--entry", s_entry, "catalog entry id")->required();
    sample_cmd->add_option("--n", s_n, "matrix size N")->required();
    sample_cmd->add_option("--sigma", s_sigma, "coefficient standard deviation (default 1/sqrt(N))");
    sample_cmd->add_option("--seed", s_seed, "seed (default 1)");
    sample_cmd->add_option("--samples", s_samples, "number of samples (default 100)");
    sample_cmd->add_option("--out-dir", s_out, "output directory (default $NHRMT_OUT_DIR or .)");
    sample_cmd->add_option("--prefix", s_prefix, "output file prefix (default sample)");
    sample_cmd->add_option("--workers", s_workers, "worker threads (default: hardware concurrency)");

    auto* classify_cmd = app.add_subcommand("classify", "fingerprint a JSON spec and list matching entries");
    std::string c_path;
    classify_cmd->add_option("spec", c_path, "JSON ensemble spec")->required();

    auto* spec_cmd = app.add_subcommand("spec", "print the JSON spec of a catalog entry");
    std::string p_entry;
    std::size_t p_half = 1;
    bool p_matrices = false;
    spec_cmd->add_option("--entry", p_entry, "catalog entry id")->required();
    spec_cmd->add_option("--half-size", p_half, "half-size")->check(CLI::PositiveNumber);
    spec_cmd->add_flag("--matrices", p_matrices, "emit explicit matrices instead of named forms");

    auto* jac_cmd = app.add_subcommand("jacobian", "evaluate the eigenvalue Jacobian of a restricted root system");
    std::string j_family, j_curv = "0", j_q;
    std::size_t j_rank = 1;
    int j_mo = 0, j_ml = 0, j_ms = 0;
    jac_cmd->add_option("--family", j_family, "A, B, C, D or BC")->required();
    jac_cmd->add_option("--rank", j_rank, "Lie rank (A_r uses r + 1 coordinates)")->required();
    jac_cmd->add_option("--mo", j_mo, "ordinary multiplicity");
    jac_cmd->add_option("--ml", j_ml, "long multiplicity");
    jac_cmd->add_option("--ms", j_ms, "short multiplicity");
    jac_cmd->add_option("--curvature", j_curv, "0, + or -");
    jac_cmd->add_option("--q", j_q, "comma-separated coordinates")->required();

    auto* obs_cmd = app.add_subcommand("observables", "conductance observables from root multiplicities");
    double o_ml = 0, o_ms = 0, o_s = 0, o_gamma = 1, o_l = 1;
    obs_cmd->add_option("--ml", o_ml, "long multiplicity")->required();
    obs_cmd->add_option("--ms", o_ms, "short multiplicity")->required();
    obs_cmd->add_option("--s", o_s, "length in units of the mean free path")->required();
    obs_cmd->add_option("--gamma", o_gamma, "gamma (default 1)");
    obs_cmd->add_option("--l", o_l, "mean free path (default 1)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return usage;
    }

    try {
        if (*catalog_cmd)
            return cmd_catalog(cls, kinds);
        if (*verify_cmd) {
            if (v_entry.empty() == v_spec.empty())
                throw ContractViolation("verify needs exactly one of --entry or --spec");
            return cmd_verify(v_entry, v_spec, v_half, v_tol);
        }
        if (*sample_cmd)
            return cmd_sample(s_entry, s_n, s_sigma, s_seed, s_samples, s_out, s_prefix, s_workers);
        if (*classify_cmd)
            return cmd_classify(c_path);
        if (*spec_cmd)
            return cmd_spec(p_entry, p_half, p_matrices);
        if (*jac_cmd)
            return cmd_jacobian(j_family, j_rank, j_mo, j_ml, j_ms, j_curv, j_q);
        if (*obs_cmd)
            return cmd_observables(o_ml, o_ms, o_s, o_gamma, o_l);
    } catch (const ContractViolation& e) {
        std::cerr << "error: " << e.what() << '\n';
        return usage;
    } catch (const json::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return usage;
    } catch (const NumericalFailure& e) {
        std::cerr << "numerical failure: " << e.what() << '\n';
        return numerical;
    } catch (const std::filesystem::filesystem_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return usage;
    }
    return usage;
}
