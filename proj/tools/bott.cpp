#include <CLI11.hpp>

#include <bott/cubics.hpp>
#include <bott/points.hpp>
#include <bott/report.hpp>

#include <algorithm>
#include <atomic>
#include <chrono>
#include <set>
#include <functional>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace {

using namespace bott;

std::vector<long> parse_csv(const std::string& csv, const char* what) {
    std::vector<long> out;
    if (csv.empty()) return out;
    std::size_t pos = 0;
    while (pos <= csv.size()) {
        const std::size_t comma = csv.find(',', pos);
        const std::string tok = csv.substr(pos, comma == std::string::npos ? std::string::npos
                                                                           : comma - pos);
        try {
            std::size_t used = 0;
            out.push_back(std::stol(tok, &used));
            if (used != tok.size()) throw std::invalid_argument(tok);
        } catch (const std::exception&) {
            throw BadQuery(std::string("could not parse ") + what + " entry '" + tok + "'");
        }
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return out;
}

std::vector<int> parse_csv_int(const std::string& csv, const char* what) {
    std::vector<int> out;
    for (long v : parse_csv(csv, what)) out.push_back(static_cast<int>(v));
    return out;
}

struct CommonFlags {
    std::string format = "text";
    std::string weights;
    unsigned threads = 0;  // 0: one worker per hardware thread
    std::uint64_t seed = 0;
    bool progress = false;

    std::optional<WeightVector> weight_vector() const {
        if (weights.empty()) return std::nullopt;
        return parse_csv(weights, "--weights");
    }
};

void add_common(CLI::App* cmd, CommonFlags& c) {
    cmd->add_option("--format", c.format, "output format: text or json")
        ->check(CLI::IsMember({"text", "json"}));
    cmd->add_option("--weights", c.weights, "comma-separated torus weights, one per coordinate");
    cmd->add_option("--threads", c.threads, "worker threads (0 = all hardware threads)");
    cmd->add_option("--seed", c.seed, "seed for retry draws of the weight vector");
    cmd->add_flag("--progress", c.progress, "report fixpoint progress on stderr");
}

ProgressFn progress_printer(bool enabled) {
    if (!enabled) return {};
    auto last = std::make_shared<std::atomic<long>>(-1);
    return [last](std::size_t done, std::size_t total) {
        const long bucket = total ? static_cast<long>(done * 20 / total) : 20;
        long prev = last->load();
        while (bucket > prev && !last->compare_exchange_weak(prev, bucket)) {
        }
        if (bucket > prev)
            std::cerr << "progress: " << done << "/" << total << " fixpoints\n";
    };
}

// Localized integral with a caller-chosen numerator over either fixpoint locus.
Rat cubics_integral(int n, const WeightVector& w, unsigned threads,
                    const std::function<Int(const cubics::CubicFixpoint&,
                                            const WeightMultiset&)>& numerator) {
    auto fps = std::make_shared<const std::vector<cubics::CubicFixpoint>>(
        cubics::enumerate_fixpoints(n));
    ContributionFn f = [fps, n, w, &numerator](std::size_t i) {
        const auto& x = (*fps)[i];
        FixpointContribution c;
        c.label = x.label;
        c.tangent = specialize(cubics::tangent_rep(x, n), w);
        c.numerator = Rat(numerator(x, c.tangent));
        return c;
    };
    return integrate(fps->size(), f, threads).value;
}

Rat points_integral(int r, const WeightVector& w, unsigned threads,
                    const std::function<Int(const points::Tripartition&,
                                            const WeightMultiset&)>& numerator) {
    auto fps = std::make_shared<const std::vector<points::Tripartition>>(
        points::enumerate_tripartitions(r));
    ContributionFn f = [fps, w, &numerator](std::size_t i) {
        const auto& B = (*fps)[i];
        FixpointContribution c;
        c.label = B.label;
        c.tangent = specialize(points::tangent_rep(B), w);
        c.numerator = Rat(numerator(B, c.tangent));
        return c;
    };
    return integrate(fps->size(), f, threads).value;
}

// Coefficients of prod_k (1-t^k)^-3, the count of tripartitions by weight.
long tripartition_count_by_series(int r) {
    std::vector<long> f(static_cast<std::size_t>(r) + 1, 0);
    f[0] = 1;
    for (int k = 1; k <= r; ++k)
        for (int color = 0; color < 3; ++color)
            for (int v = k; v <= r; ++v)
                f[static_cast<std::size_t>(v)] += f[static_cast<std::size_t>(v - k)];
    return f[static_cast<std::size_t>(r)];
}

struct Space {
    bool is_cubics = false;
    int size = 0;  // ambient dimension for curves, length for points
};

Space parse_space(const std::string& s) {
    const std::size_t colon = s.find(':');
    if (colon != std::string::npos) {
        const std::string kind = s.substr(0, colon);
        try {
            const int size = static_cast<int>(std::stol(s.substr(colon + 1)));
            if (kind == "cubics") {
                if (size < 3 || size > 8) throw BadQuery("cubics space needs 3 <= n <= 8");
                return {true, size};
            }
            if (kind == "points") {
                if (size < 1 || size > 10) throw BadQuery("points space needs 1 <= r <= 10");
                return {false, size};
            }
        } catch (const BadQuery&) {
            throw;
        } catch (const std::exception&) {
        }
    }
    throw BadQuery("--space must look like cubics:4 or points:6");
}

void run_checks(const Space& sp, const std::string& suite, const CommonFlags& flags,
                RunReport& report) {
    const std::size_t vars = sp.is_cubics ? static_cast<std::size_t>(sp.size) + 1 : 3;
    const auto explicit_w = flags.weight_vector();
    const WeightVector w1 = explicit_w ? *explicit_w : default_weight_vector(vars, 0, flags.seed);
    const WeightVector w2 = default_weight_vector(vars, 1, flags.seed);
    report.weights = w1;

    auto add = [&report](const std::string& name, bool pass, std::string detail) {
        report.checks.push_back({name, pass, std::move(detail)});
    };

    auto c1_power = [&](const WeightVector& w, int k) {
        if (sp.is_cubics)
            return cubics_integral(sp.size, w, flags.threads,
                                   [&](const cubics::CubicFixpoint& x, const WeightMultiset&) {
                                       Int s1 = elementary_symmetric(
                                           specialize(cubics::sections_rep(x, sp.size, 1), w), 1);
                                       Int p(1);
                                       for (int i = 0; i < k; ++i) p *= s1;
                                       return p;
                                   });
        return points_integral(sp.size, w, flags.threads,
                               [&](const points::Tripartition& B, const WeightMultiset&) {
                                   Int s1 = elementary_symmetric(
                                       specialize(points::rep_E(B, sp.size), w), 1);
                                   Int p(1);
                                   for (int i = 0; i < k; ++i) p *= s1;
                                   return p;
                               });
    };

    const long dim = sp.is_cubics ? 4L * sp.size : 2L * sp.size;

    if (suite == "euler" || suite == "all") {
        std::size_t count, expected;
        if (sp.is_cubics) {
            count = cubics::enumerate_fixpoints(sp.size).size();
            expected = cubics::fixpoint_count(sp.size);
        } else {
            count = points::enumerate_tripartitions(sp.size).size();
            expected = static_cast<std::size_t>(tripartition_count_by_series(sp.size));
        }
        report.fixpoints = count;
        add("euler-count", count == expected,
            std::to_string(count) + " fixpoints, expected " + std::to_string(expected));

        auto top = [](const auto&, const WeightMultiset& t) { return weight_product(t); };
        const Rat integral = sp.is_cubics ? cubics_integral(sp.size, w1, flags.threads, top)
                                          : points_integral(sp.size, w1, flags.threads, top);
        add("euler-integral", integral == Rat(static_cast<long>(expected)),
            "top tangent class integrates to " + to_string(integral));
    }

    if (suite == "weights" || suite == "all") {
        const Rat v1 = c1_power(w1, static_cast<int>(dim));
        const Rat v2 = c1_power(w2, static_cast<int>(dim));
        add("weight-independence", v1 == v2 && is_integral(v1),
            to_string(v1) + " vs " + to_string(v2));
    }

    if (suite == "vanishing" || suite == "all") {
        add("vanishing-constant", c1_power(w1, 0) == 0, "integral of 1");
        for (int k : std::set<int>{1, static_cast<int>(dim) / 2, static_cast<int>(dim) - 1}) {
            const Rat v = c1_power(w1, k);
            add("vanishing-c1^" + std::to_string(k), v == 0, "integrates to " + to_string(v));
        }
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact equivariant intersection numbers by fixpoint localization"};
    app.require_subcommand(1);

    CommonFlags flags;

    auto* cub = app.add_subcommand("cubics", "rational space curves on complete intersections");
    int cub_n = 0;
    std::string cub_degrees, cub_partition;
    cub->add_option("--n", cub_n, "ambient projective dimension")->required();
    cub->add_option("--degrees", cub_degrees, "comma-separated hypersurface degrees");
    cub->add_option("--partition", cub_partition, "comma-separated residual codimensions");
    add_common(cub, flags);

    auto* pow = app.add_subcommand("powersum", "degrees of power sum hypersurface loci");
    int pow_r = 0;
    long pow_n = 0;
    bool pow_force = false, pow_poly = false;
    pow->add_option("--r", pow_r, "number of linear-form powers")->required();
    auto* pow_n_opt = pow->add_option("--n", pow_n, "hypersurface degree");
    auto* pow_poly_opt =
        pow->add_flag("--poly", pow_poly, "interpolate the degree as a polynomial in n");
    pow_poly_opt->excludes(pow_n_opt);
    pow->add_flag("--force", pow_force, "evaluate outside the validity range n >= r-1");
    add_common(pow, flags);

    auto* dar = app.add_subcommand("darboux", "degrees of Darboux curve loci");
    long dar_n = 0;
    dar->add_option("--n", dar_n, "curve degree")->required();
    add_common(dar, flags);

    auto* seg = app.add_subcommand("segre", "top Segre class of twisted section bundles");
    int seg_r = 0;
    long seg_n = 0, seg_m = 0;
    seg->add_option("--r", seg_r, "subscheme length")->required();
    seg->add_option("--n", seg_n, "section degree")->required();
    seg->add_option("--m", seg_m, "ideal-line twist");
    add_common(seg, flags);

    auto* chk = app.add_subcommand("check", "internal consistency suites");
    std::string chk_suite = "all", chk_space;
    chk->add_option("--suite", chk_suite, "euler, weights, vanishing, or all")
        ->check(CLI::IsMember({"euler", "weights", "vanishing", "all"}));
    chk->add_option("--space", chk_space, "fixpoint locus, e.g. cubics:4 or points:6")
        ->required();
    add_common(chk, flags);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    RunReport report;
    const auto t0 = std::chrono::steady_clock::now();
    int exit_code = 0;
    try {
        if (app.got_subcommand(cub)) {
            report.command = "cubics";
            cubics::GWQuery q;
            q.n = cub_n;
            q.degrees = parse_csv_int(cub_degrees, "--degrees");
            q.partition = parse_csv_int(cub_partition, "--partition");
            auto res = cubics::gw_number(q, flags.weight_vector(), flags.seed, flags.threads,
                                         progress_printer(flags.progress));
            report.result = {to_string(res.value)};
            report.fixpoints = res.fixpoints;
            report.weights = res.weights;
        } else if (app.got_subcommand(pow)) {
            report.command = "powersum";
            if (pow_poly) {
                Poly p = points::powersum_polynomial(pow_r, flags.weight_vector(), flags.seed,
                                                     flags.threads,
                                                     progress_printer(flags.progress));
                report.result = poly_coefficients(p);
                report.polynomial = true;
                report.fixpoints = points::enumerate_tripartitions(pow_r).size();
                report.weights = flags.weight_vector() ? *flags.weight_vector()
                                                       : default_weight_vector(3, 0, flags.seed);
            } else {
                if (pow_n_opt->count() == 0) throw BadQuery("powersum needs --n or --poly");
                auto res = points::powersum_degree(pow_r, pow_n, pow_force, flags.weight_vector(),
                                                   flags.seed, flags.threads,
                                                   progress_printer(flags.progress));
                report.result = {to_string(res.value)};
                report.fixpoints = res.fixpoints;
                report.weights = res.weights;
            }
        } else if (app.got_subcommand(dar)) {
            report.command = "darboux";
            auto res = points::darboux_degree(dar_n, flags.weight_vector(), flags.seed,
                                              flags.threads, progress_printer(flags.progress));
            report.result = {to_string(res.value)};
            report.fixpoints = res.fixpoints;
            report.weights = res.weights;
        } else if (app.got_subcommand(seg)) {
            report.command = "segre";
            auto res = points::segre_integral(points::SegreQuery{seg_r, seg_n, seg_m},
                                              flags.weight_vector(), flags.seed, flags.threads,
                                              progress_printer(flags.progress));
            report.result = {to_string(res.value)};
            report.fixpoints = res.fixpoints;
            report.weights = res.weights;
        } else if (app.got_subcommand(chk)) {
            report.command = "check";
            run_checks(parse_space(chk_space), chk_suite, flags, report);
            const bool all_pass = std::all_of(report.checks.begin(), report.checks.end(),
                                              [](const auto& c) { return c.pass; });
            report.result = {all_pass ? "pass" : "fail"};
            if (!all_pass) exit_code = 1;
        }
    } catch (const NonIntegralResult& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const BottError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }

    report.elapsed_ms = static_cast<long>(std::chrono::duration_cast<std::chrono::milliseconds>(
                                              std::chrono::steady_clock::now() - t0)
                                              .count());
    std::cout << (flags.format == "json" ? render_json(report) : render_text(report));
    return exit_code;
}
