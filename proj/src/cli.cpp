#include "sepvar/cli.hpp"

#include <atomic>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "sepvar/errors.hpp"
#include "sepvar/resolution.hpp"
#include "sepvar/generators.hpp"
#include "sepvar/hilbert.hpp"
#include "sepvar/oracle.hpp"
#include "sepvar/polyalg.hpp"

namespace sepvar {

namespace {

using json = nlohmann::ordered_json;

constexpr const char* kSchema = "sepvar/1";

std::string coord_string(long long twice) {
    if (twice % 2 == 0) return std::to_string(twice / 2);
    return std::to_string(twice) + "/2";
}

json weight_json(const Weight& w) {
    json arr = json::array();
    for (long long t : w.twice_coords()) arr.push_back(coord_string(t));
    return arr;
}

json series_json(const RationalSeries& s) {
    json num = json::array();
    for (const Int& c : s.numerator()) num.push_back(to_int64(c));
    return json{{"numerator", num}, {"pole_order", s.pole_order()}, {"display", s.to_string()}};
}

json poly_json(const MPoly& p) {
    json arr = json::array();
    for (const auto& [m, c] : p.terms()) {
        json mono = json::object();
        for (const auto& [v, e] : m.factors()) mono[var_name(v)] = e;
        arr.push_back(json{{"coeff", rat_to_string(c)}, {"monomial", mono}});
    }
    return arr;
}

json resolution_json(const Partition& sigma, int n, int k, const Resolution& res) {
    json stages = json::array();
    for (const auto& stage : res.stages) {
        json terms = json::array();
        for (const ResolutionTerm& t : stage)
            terms.push_back(json{{"weight", weight_json(t.weight)}, {"shift", t.shift}});
        stages.push_back(terms);
    }
    return json{{"schema", kSchema},     {"command", "resolve"},
                {"n", n},                {"k", k},
                {"sigma", sigma.to_string()}, {"lambda", weight_json(res.lambda)},
                {"r", res.r},            {"stages", stages}};
}

void emit(std::ostream& out, const json& j) { out << j.dump(2) << "\n"; }

struct CommonArgs {
    int n = 0;
    int k = 0;
    std::string sigma;
    std::string format = "json";
};

int cmd_resolve(const CommonArgs& a, std::ostream& out) {
    Partition sigma = Partition::parse(a.sigma);
    Resolution res = resolution(sigma, a.n, a.k);
    if (a.format == "text") {
        out << "resolution of L(sigma#) for sigma = (" << sigma.to_string() << "), n = " << a.n
            << ", k = " << a.k << ", r = " << res.r << "\n";
        for (size_t i = 0; i < res.stages.size(); ++i) {
            out << "stage " << i << ":";
            for (const auto& t : res.stages[i])
                out << "  N(" << t.weight.to_string() << ") shift " << t.shift;
            out << "\n";
        }
        return 0;
    }
    emit(out, resolution_json(sigma, a.n, a.k, res));
    return 0;
}

int cmd_hilbert(const CommonArgs& a, int terms, std::ostream& out) {
    RationalSeries i_series = hs_I(a.n, a.k);
    json j{{"schema", kSchema}, {"command", "hilbert"}, {"n", a.n}, {"k", a.k}};
    j["I"] = series_json(i_series);
    RationalSeries kernel;
    // --sigma "" is the trivial diagram; the marker means "not passed".
    bool have_sigma = (a.sigma != "\x01");
    if (have_sigma) {
        Partition sigma = Partition::parse(a.sigma);
        RationalSeries l_series = hs_L(sigma, a.n, a.k);
        kernel = hs_kernel(sigma, a.n, a.k);
        j["sigma"] = sigma.to_string();
        j["L"] = series_json(l_series);
        j["kernel"] = series_json(kernel);
        json exp = json::array();
        for (const Int& c : kernel.expand(terms)) exp.push_back(to_int64(c));
        j["kernel_expansion"] = exp;
    }
    if (a.format == "text") {
        out << "H_I = " << i_series.to_string() << "\n";
        if (have_sigma) {
            out << "H_L = " << j["L"]["display"].get<std::string>() << "\n";
            out << "H_K = " << kernel.to_string() << "\n";
        }
        return 0;
    }
    emit(out, j);
    return 0;
}

int cmd_generator(const CommonArgs& a, bool verify, std::ostream& out) {
    Partition sigma = Partition::parse(a.sigma);
    NarrowDecomposition nd = narrow_decompose(sigma);
    TensorElement gen = generator(nd.t, nd.d, nd.mu, a.n, a.k);
    Weight w = weight_of(gen, a.n, a.k);

    if (a.format == "latex") {
        int wa = nd.d - a.n + a.k, wb = nd.t - a.n + a.k;
        BorderedMatrix m = build_M(a.n, a.k);
        out << "\\begin{vmatrix}\n";
        for (int i = wa; i <= wa + a.n; ++i) {
            for (int j = wb; j <= wb + a.n; ++j) {
                if (j > wb) out << " & ";
                out << m.entry(i, j).to_latex();
            }
            out << " \\\\\n";
        }
        out << "\\end{vmatrix}\n";
        if (!nd.mu.trivial()) out << "\\cdot\\, " << delta_sigma(nd.mu, a.n, a.k).to_latex() << "\n";
        out << "= " << gen.poly.to_latex() << "\n";
        return 0;
    }

    json j{{"schema", kSchema}, {"command", "generator"}, {"n", a.n}, {"k", a.k},
           {"sigma", sigma.to_string()}};
    j["narrow_type"] = json{{"t", nd.t}, {"d", nd.d}, {"mu", nd.mu.to_string()}};
    j["weight"] = weight_json(w);
    j["terms"] = poly_json(gen.poly);
    if (verify) {
        GeneratorReport rep = verify_generator(nd.t, nd.d, nd.mu, a.n, a.k);
        j["verify"] = json{{"nonzero_in_IH", rep.nonzero_in_IH},
                           {"phi_zero", rep.phi_zero},
                           {"right_factors_harmonic", rep.right_factors_harmonic},
                           {"weight_matches", rep.weight_matches},
                           {"highest_weight", rep.highest_weight},
                           {"all_pass", rep.all_pass()}};
    }
    if (a.format == "text") {
        out << "generator for sigma = (" << sigma.to_string() << "): " << gen.poly.to_string()
            << "\n";
        out << "weight " << w.to_string() << "\n";
        if (verify) out << "all_pass = " << (j["verify"]["all_pass"].get<bool>() ? "true" : "false") << "\n";
        return 0;
    }
    emit(out, j);
    return 0;
}

int cmd_sigma0(const CommonArgs& a, int max_boxes, std::ostream& out) {
    json list = json::array();
    for (const Partition& sigma : enumerate_sigma(a.n, a.k, max_boxes)) {
        if (!in_sigma0(sigma, a.n, a.k)) continue;
        json entry{{"sigma", sigma.to_string()}};
        entry["gamma_min"] = gamma_min(sigma_sharp(sigma, a.n, a.k), a.k).to_string();
        entry["lambda_prime"] = weight_json(lambda_prime(sigma, a.n, a.k));
        entry["level_of_reduction"] = level_of_reduction(sigma, a.n, a.k);
        list.push_back(entry);
    }
    json j{{"schema", kSchema}, {"command", "sigma0"}, {"n", a.n}, {"k", a.k},
           {"max_boxes", max_boxes}, {"members", list}};
    if (a.format == "text") {
        for (const auto& e : j["members"])
            out << "(" << e["sigma"].get<std::string>() << ")  lambda' = "
                << e["lambda_prime"].dump() << "  level " << e["level_of_reduction"].get<int>()
                << "\n";
        return 0;
    }
    emit(out, j);
    return 0;
}

int cmd_oracle(const CommonArgs& a, int max_degree, std::ostream& out) {
    bool have_sigma = (a.sigma != "\x01");
    Partition sigma;
    if (have_sigma) sigma = Partition::parse(a.sigma);

    GradedDims p_dims, h_dims, i_dims, ker_total, ker_sigma;
    for (int d = 0; d <= max_degree; ++d) {
        p_dims[d] = dim_P(a.n, a.k, d);
        h_dims[d] = dim_H(a.n, a.k, d);
        i_dims[d] = dim_I(a.n, a.k, d);
        ker_total[d] = dim_ker_total(a.n, a.k, d);
        if (have_sigma) ker_sigma[d] = dim_ker_sigma(a.n, a.k, sigma, d);
    }

    if (a.format == "csv") {
        out << "degree,dim_P,dim_H,dim_I,dim_ker_total";
        if (have_sigma) out << ",dim_ker_sigma";
        out << "\n";
        for (int d = 0; d <= max_degree; ++d) {
            out << d << "," << p_dims[d] << "," << h_dims[d] << "," << i_dims[d] << ","
                << ker_total[d];
            if (have_sigma) out << "," << ker_sigma[d];
            out << "\n";
        }
        return 0;
    }

    json rows = json::array();
    for (int d = 0; d <= max_degree; ++d) {
        json row{{"degree", d},
                 {"dim_P", p_dims[d]},
                 {"dim_H", h_dims[d]},
                 {"dim_I", i_dims[d]},
                 {"dim_ker_total", ker_total[d]}};
        if (have_sigma) row["dim_ker_sigma"] = ker_sigma[d];
        rows.push_back(row);
    }
    json j{{"schema", kSchema}, {"command", "oracle"}, {"n", a.n}, {"k", a.k}};
    if (have_sigma) j["sigma"] = sigma.to_string();
    j["table"] = rows;
    emit(out, j);
    return 0;
}

struct CheckResult {
    std::string check;
    std::string sigma;
    int degree = -1;
    std::string expected;
    std::string actual;
    bool pass = false;
};

std::vector<CheckResult> crosscheck_cell(int n, int k, const Partition& sigma, int max_degree) {
    std::vector<CheckResult> out;

    // Hilbert series vs brute-force kernel dimensions.
    std::vector<Int> coeffs = hs_kernel(sigma, n, k).expand(max_degree);
    for (int d = 0; d <= max_degree; ++d) {
        std::int64_t actual = dim_ker_sigma(n, k, sigma, d);
        out.push_back(CheckResult{"hilbert_vs_oracle", sigma.to_string(), d,
                                  coeffs[static_cast<size_t>(d)].get_str(),
                                  std::to_string(actual),
                                  Int(static_cast<long>(actual)) == coeffs[static_cast<size_t>(d)]});
    }

    // Sigma^0 closed form vs Gamma machinery.
    bool formula = in_sigma0(sigma, n, k);
    bool gamma = !gamma_set(sigma_sharp(sigma, n, k), k).empty();
    out.push_back(CheckResult{"sigma0_vs_gamma", sigma.to_string(), -1,
                              formula ? "in Sigma^0" : "not in Sigma^0",
                              gamma ? "Gamma nonempty" : "Gamma empty", formula == gamma});

    // Generator weight (symbolic polynomials) vs lambda' (root combinatorics).
    if (!sigma.trivial() && formula) {
        NarrowDecomposition nd = narrow_decompose(sigma);
        Weight expected = lambda_prime(sigma, n, k);
        Weight actual = weight_of(generator(nd.t, nd.d, nd.mu, n, k), n, k);
        out.push_back(CheckResult{"generator_weight", sigma.to_string(), -1,
                                  expected.to_string(), actual.to_string(),
                                  expected == actual});
    }

    // Closed-form identities and boundary classifications.
    for (const ClosedFormCheck& c : closed_form_checks(n, k, sigma)) {
        if (!c.applicable) continue;
        out.push_back(
            CheckResult{"closed_form_" + c.name, sigma.to_string(), -1, "pass", c.detail, c.pass});
    }
    return out;
}

int cmd_crosscheck(const CommonArgs& a, int max_boxes, int max_degree, std::ostream& out) {
    std::vector<Partition> sigmas = enumerate_sigma(a.n, a.k, max_boxes);
    std::vector<std::vector<CheckResult>> results(sigmas.size());

    unsigned workers = std::max(1u, std::min<unsigned>(std::thread::hardware_concurrency(),
                                                       static_cast<unsigned>(sigmas.size())));
    std::atomic<size_t> cursor{0};
    auto worker = [&]() {
        for (size_t i; (i = cursor.fetch_add(1)) < sigmas.size();) {
            try {
                results[i] = crosscheck_cell(a.n, a.k, sigmas[i], max_degree);
            } catch (const std::exception& e) {
                results[i] = {CheckResult{"exception", sigmas[i].to_string(), -1, "", e.what(),
                                          false}};
            }
        }
    };
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(worker);
    for (auto& t : pool) t.join();

    json checks = json::array();
    int failures = 0;
    for (const auto& cell : results)
        for (const CheckResult& r : cell) {
            json entry{{"check", r.check}, {"sigma", r.sigma}};
            if (r.degree >= 0) entry["degree"] = r.degree;
            entry["expected"] = r.expected;
            entry["actual"] = r.actual;
            entry["pass"] = r.pass;
            checks.push_back(entry);
            if (!r.pass) ++failures;
        }
    json j{{"schema", kSchema}, {"command", "crosscheck"}, {"n", a.n}, {"k", a.k},
           {"max_boxes", max_boxes}, {"max_degree", max_degree},
           {"checks", checks}, {"failures", failures}, {"all_pass", failures == 0}};
    emit(out, j);
    return failures == 0 ? 0 : 3;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Separation-of-variables kernel toolkit"};
    app.require_subcommand(1);

    CommonArgs common;
    common.sigma = "\x01";  // marker: not passed
    int terms = 10, max_degree = 3, max_boxes = 4;
    bool verify = false;

    auto add_common = [&](CLI::App* sub, bool sigma_required, bool with_format = true) {
        sub->add_option("--n", common.n, "dimension n")->required()->check(CLI::PositiveNumber);
        sub->add_option("--k", common.k, "number of vector variables k")
            ->required()
            ->check(CLI::PositiveNumber);
        auto* opt = sub->add_option("--sigma", common.sigma,
                                    "partition, comma-separated parts (empty for trivial)");
        if (sigma_required) opt->required();
        if (with_format)
            sub->add_option("--format", common.format, "output format")
                ->check(CLI::IsMember({"json", "text", "latex", "csv"}));
    };

    CLI::App* resolve = app.add_subcommand("resolve", "resolution of L(sigma#)");
    add_common(resolve, true);
    CLI::App* hilbert = app.add_subcommand("hilbert", "Hilbert series of I, L and Ker phi_sigma");
    add_common(hilbert, false);
    hilbert->add_option("--terms", terms, "expansion order")->check(CLI::NonNegativeNumber);
    CLI::App* gen = app.add_subcommand("generator", "determinantal kernel generator");
    add_common(gen, true);
    gen->add_flag("--verify", verify, "run the five-point verification");
    CLI::App* sigma0 = app.add_subcommand("sigma0", "members of Sigma^0_{n,k}");
    add_common(sigma0, false);
    sigma0->add_option("--max-boxes", max_boxes, "box bound")->check(CLI::NonNegativeNumber);
    CLI::App* oracle = app.add_subcommand("oracle", "brute-force graded dimensions");
    add_common(oracle, false);
    oracle->add_option("--max-degree", max_degree, "degree bound")->check(CLI::NonNegativeNumber);
    CLI::App* crosscheck = app.add_subcommand("crosscheck", "full agreement suite");
    add_common(crosscheck, false, true);
    crosscheck->add_option("--max-boxes", max_boxes, "box bound")->check(CLI::NonNegativeNumber);
    crosscheck->add_option("--max-degree", max_degree, "degree bound")
        ->check(CLI::NonNegativeNumber);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            out << app.help();
            return 0;
        }
        err << e.what() << "\n";
        return 2;
    }

    try {
        if (resolve->parsed()) return cmd_resolve(common, out);
        if (hilbert->parsed()) return cmd_hilbert(common, terms, out);
        if (gen->parsed()) return cmd_generator(common, verify, out);
        if (sigma0->parsed()) return cmd_sigma0(common, max_boxes, out);
        if (oracle->parsed()) return cmd_oracle(common, max_degree, out);
        if (crosscheck->parsed()) return cmd_crosscheck(common, max_boxes, max_degree, out);
    } catch (const InputError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return 3;
    }
    err << "no subcommand\n";
    return 2;
}

}  // namespace sepvar
