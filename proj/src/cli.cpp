#include "braidhopf/cli.hpp"

#include "braidhopf/error.hpp"
#include "braidhopf/filtration.hpp"
#include "braidhopf/group_algebra.hpp"
#include "braidhopf/io.hpp"
#include "braidhopf/linalg.hpp"
#include "braidhopf/products.hpp"

#include <CLI11.hpp>

#include <functional>
#include <ostream>
#include <sstream>

namespace braidhopf {

namespace {

std::string vector_text(const Matrix& m, std::size_t col, const std::vector<std::string>& basis) {
    std::string s;
    for (const auto& e : m.column(col)) {
        if (!s.empty()) s += "+";
        s += e.value.get_str() + "*" + basis[e.row];
    }
    return s.empty() ? "0" : s;
}

std::string functional_text(const Matrix& row, const std::vector<std::string>& basis) {
    return vector_text(row.transpose(), 0, basis);
}

std::string dims_text(const std::vector<std::size_t>& dims) {
    std::string s = "[";
    for (std::size_t k = 0; k < dims.size(); ++k) s += (k ? "," : "") + std::to_string(dims[k]);
    return s + "]";
}

Morphism section(const BraidedBialgebra& a, const BraidedBialgebra& b, const std::string& file) {
    if (!file.empty()) return load_morphism(file, b, a);
    return Morphism(b.carrier, a.carrier, inclusion_by_name(b, a));
}

// pi from a file, or the first verified candidate of the search.
Morphism projection(const BraidedBialgebra& a, const BraidedBialgebra& b, const Morphism& sigma,
                    const std::string& file, Report& rep) {
    if (!file.empty()) return load_morphism(file, a, b);
    WeakProjectionSearch s = search_weak_projection(a, b, sigma);
    if (!s.pi) throw Error(ErrorKind::precondition_failed, "no weak projection found by search; pass one as a file");
    rep.note("pi_source", "search");
    return *s.pi;
}

Report precondition_failure(const std::string& message) {
    Report r;
    r.expect("preconditions", false, message);
    return r;
}

struct Inputs {
    std::string a, b, r, sigma, pi, i, x, y, z, group;
    std::size_t max_n = 16;
    std::string elements;
    std::string name;
};

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact verification of bialgebras, weak projections and their products in braided categories",
                 "braidhopf"};
    app.require_subcommand(1);
    app.fallthrough();
    std::string report_format = "plain";
    app.add_option("--report", report_format, "Report format")
        ->check(CLI::IsMember({"plain", "machine"}))
        ->capture_default_str();

    Inputs in;
    std::function<Report()> action;

    auto files = [&](CLI::App* sub, std::initializer_list<std::pair<const char*, std::string*>> required,
                     std::initializer_list<std::pair<const char*, std::string*>> optional = {}) {
        for (const auto& [name, target] : required) sub->add_option(name, *target)->required();
        for (const auto& [name, target] : optional) sub->add_option(name, *target);
    };

    // check
    CLI::App* check = app.add_subcommand("check", "Axiom suites");
    check->require_subcommand(1);
    for (const char* kind : {"hopf", "bialgebra", "coalgebra"}) {
        CLI::App* sub = check->add_subcommand(kind, std::string("Check the ") + kind + " axioms of a definition file");
        files(sub, {{"file", &in.a}});
        const std::string k = kind;
        sub->callback([&, k] {
            action = [&, k] {
                BraidedBialgebra a = load_algebra(in.a);
                if (k == "hopf") return verify_hopf(a);
                if (k == "bialgebra") return verify_bialgebra(a);
                return verify_coalgebra(a);
            };
        });
    }
    CLI::App* braid = check->add_subcommand("braiding", "Hexagons, invertibility and naturality on three objects");
    files(braid, {{"x", &in.x}, {"y", &in.y}, {"z", &in.z}});
    braid->callback([&] {
        action = [&] {
            Definition x = load_definition(in.x), y = load_definition(in.y), z = load_definition(in.z);
            const Backend& backend = x.algebra.backend;
            if (!(y.algebra.backend == backend) || !(z.algebra.backend == backend))
                throw Error(ErrorKind::backend_mismatch, "the three objects live in different backends");
            const CatObject& cx = x.algebra.carrier;
            const CatObject& cy = y.algebra.carrier;
            const CatObject& cz = z.algebra.carrier;
            std::vector<MorphismPair> samples{{generic_morphism(backend, cx, cx), generic_morphism(backend, cy, cy)},
                                              {generic_morphism(backend, cx, cz), generic_morphism(backend, cy, cx)}};
            Report r = verify_braiding_axioms(backend, cx, cy, cz, samples);
            r.note("backend", backend.description());
            return r;
        };
    });

    // integrals
    CLI::App* integral = app.add_subcommand("integral", "Solve for a total integral");
    files(integral, {{"file", &in.a}});
    integral->callback([&] {
        action = [&] {
            BraidedBialgebra h = load_algebra(in.a);
            Report r;
            auto lambda = solve_total_integral(h);
            r.expect("total_integral", lambda.has_value(), "the integral equations are inconsistent");
            if (lambda) {
                r.merge(verify_total_integral(h, lambda->lambda), "integral.");
                r.note("lambda", functional_text(lambda->lambda.mat(), h.basis));
            }
            return r;
        };
    });
    CLI::App* cosep = app.add_subcommand("cosep-section", "Build and verify the coseparability section");
    files(cosep, {{"file", &in.a}});
    cosep->callback([&] {
        action = [&] {
            BraidedBialgebra h = load_algebra(in.a);
            Report r;
            auto lambda = solve_total_integral(h);
            r.expect("total_integral", lambda.has_value(), "the integral equations are inconsistent");
            if (lambda) {
                Morphism theta = build_cosep_section(h, *lambda);
                r.merge(verify_cosep_section(h, *lambda, theta));
                r.expect_equal("integral_recovered", integral_from_section(h, theta).mat(), lambda->lambda.mat());
            }
            return r;
        };
    });

    // weak projections
    CLI::App* wp = app.add_subcommand("weakproj", "Weak projections A -> B");
    wp->require_subcommand(1);
    auto wp_sub = [&](const char* name, const char* help, std::function<Report(WeakProjectionContext&, Report&)> body) {
        CLI::App* sub = wp->add_subcommand(name, help);
        files(sub, {{"A", &in.a}, {"B", &in.b}}, {{"sigma", &in.sigma}, {"pi", &in.pi}});
        sub->callback([&, body] {
            action = [&, body] {
                BraidedBialgebra a = load_algebra(in.a), b = load_algebra(in.b);
                Morphism sigma = section(a, b, in.sigma);
                Report extra;
                Morphism pi = projection(a, b, sigma, in.pi, extra);
                WeakProjectionContext ctx = build_context(a, b, sigma, pi);
                Report r = body(ctx, extra);
                r.merge(extra);
                return r;
            };
        });
    };
    wp_sub("check", "Verify the weak projection conditions",
           [](WeakProjectionContext& ctx, Report&) { return verify_weak_projection(ctx.a, ctx.b, ctx.sigma, ctx.pi); });
    wp_sub("diagram", "Compute and verify the diagram R", [](WeakProjectionContext& ctx, Report&) {
        Report r = verify_diagram(ctx);
        for (std::size_t k = 0; k < ctx.r.dim(); ++k)
            r.note("r" + std::to_string(k), vector_text(ctx.i.mat(), k, ctx.a.basis));
        r.note("xi_trivial", xi_is_trivial(ctx) ? "yes" : "no");
        return r;
    });
    wp_sub("bd-suite", "The projector identities",
           [](WeakProjectionContext& ctx, Report&) { return run_bd_suite(ctx); });
    CLI::App* search = wp->add_subcommand("search", "Search for a weak projection");
    files(search, {{"A", &in.a}, {"B", &in.b}}, {{"sigma", &in.sigma}});
    search->callback([&] {
        action = [&] {
            BraidedBialgebra a = load_algebra(in.a), b = load_algebra(in.b);
            Morphism sigma = section(a, b, in.sigma);
            WeakProjectionSearch s = search_weak_projection(a, b, sigma);
            Report r = s.report;
            if (s.pi)
                for (std::size_t k = 0; k < a.dim(); ++k)
                    r.note("pi(" + a.basis[k] + ")", vector_text(s.pi->mat(), k, b.basis));
            return r;
        };
    });

    // products
    CLI::App* build = app.add_subcommand("build", "Product constructions");
    build->require_subcommand(1);
    CLI::App* cross = build->add_subcommand("cross", "Cross product bialgebra of a weak projection");
    files(cross, {{"A", &in.a}, {"B", &in.b}}, {{"sigma", &in.sigma}, {"pi", &in.pi}});
    cross->callback([&] {
        action = [&] {
            BraidedBialgebra a = load_algebra(in.a), b = load_algebra(in.b);
            Morphism sigma = section(a, b, in.sigma);
            Report extra;
            Morphism pi = projection(a, b, sigma, in.pi, extra);
            Report r = build_cross_product(build_context(a, b, sigma, pi), false).report;
            r.merge(extra);
            return r;
        };
    });
    CLI::App* smash = build->add_subcommand("smash", "Smash product and the bosonization checks");
    files(smash, {{"A", &in.a}, {"B", &in.b}}, {{"sigma", &in.sigma}, {"pi", &in.pi}});
    smash->callback([&] {
        action = [&] {
            BraidedBialgebra a = load_algebra(in.a), b = load_algebra(in.b);
            Morphism sigma = section(a, b, in.sigma);
            Report extra;
            Morphism pi = projection(a, b, sigma, in.pi, extra);
            Report r = bosonization_checks(build_context(a, b, sigma, pi));
            r.merge(extra);
            return r;
        };
    });
    auto group_pair = [&] {
        FiniteGroup g = load_group(in.group);
        BraidedBialgebra r = load_algebra(in.r), b = load_algebra(in.b);
        return group_matched_pair(g, element_indices(g, r.basis), element_indices(g, b.basis));
    };
    CLI::App* dc = build->add_subcommand("doublecross", "Double cross product of a group factorization G = R B");
    files(dc, {{"group", &in.group}, {"R", &in.r}, {"B", &in.b}});
    dc->callback([&] {
        action = [&] {
            MatchedPair mp = group_pair();
            Report r;
            r.merge(check_matched_pair(mp), "mp.");
            BraidedBialgebra d = build_double_cross(mp);
            r.merge(verify_bialgebra(d), "doublecross.");
            FiniteGroup g = load_group(in.group);
            BraidedBialgebra kg = group_algebra(g);
            Morphism phi(d.carrier, kg.carrier,
                         kg.m.mat() * kron(inclusion_by_name(mp.r, kg), inclusion_by_name(mp.b, kg)));
            r.merge(verify_bialgebra_isomorphism(phi, d, kg), "iso.");
            return r;
        };
    });

    // matched pairs
    CLI::App* mp = app.add_subcommand("matchedpair", "Matched pairs of bialgebras");
    mp->require_subcommand(1);
    CLI::App* mpc = mp->add_subcommand("check", "Matched pair of a group factorization G = R B");
    files(mpc, {{"group", &in.group}, {"R", &in.r}, {"B", &in.b}});
    mpc->callback([&] { action = [&] { return check_matched_pair(group_pair()); }; });
    CLI::App* mpd = mp->add_subcommand("derive", "Actions from a factorization A = R B");
    files(mpd, {{"A", &in.a}, {"B", &in.b}, {"R", &in.r}}, {{"sigma", &in.sigma}, {"i", &in.i}});
    mpd->callback([&] {
        action = [&] {
            BraidedBialgebra a = load_algebra(in.a), b = load_algebra(in.b), r = load_algebra(in.r);
            Morphism sigma = section(a, b, in.sigma);
            Morphism i = section(a, r, in.i);
            return derive_actions_general(make_factorization(a, b, r, sigma, i)).report;
        };
    });
    CLI::App* mpcc = mp->add_subcommand("cocomm", "Actions from a weak projection on a cocommutative A");
    files(mpcc, {{"A", &in.a}, {"B", &in.b}}, {{"sigma", &in.sigma}, {"pi", &in.pi}});
    mpcc->callback([&] {
        action = [&] {
            BraidedBialgebra a = load_algebra(in.a), b = load_algebra(in.b);
            Morphism sigma = section(a, b, in.sigma);
            Report extra;
            Morphism pi = projection(a, b, sigma, in.pi, extra);
            Report r = derive_actions_cocomm(build_context(a, b, sigma, pi)).report;
            r.merge(extra);
            return r;
        };
    });

    // filtrations
    CLI::App* filt = app.add_subcommand("filtration", "B-adic filtration of A");
    files(filt, {{"A", &in.a}, {"B", &in.b}}, {{"sigma", &in.sigma}});
    filt->add_option("--max-n", in.max_n, "Maximal number of steps")->capture_default_str();
    filt->callback([&] {
        action = [&] {
            BraidedBialgebra a = load_algebra(in.a), b = load_algebra(in.b);
            Morphism sigma = section(a, b, in.sigma);
            FiltrationReport f = b_adic_filtration(a, make_subobject(a.carrier, sigma.mat()), in.max_n);
            Report r;
            r.note("dims", dims_text(f.dims));
            r.note("stabilized_at", f.stabilized_at ? std::to_string(*f.stabilized_at) : "none");
            r.expect("exhaustive", f.exhaustive, "dims=" + dims_text(f.dims) + " dim_A=" + std::to_string(a.dim()));
            return r;
        };
    });
    CLI::App* corad = app.add_subcommand("coradical", "Coradical of an ordinary coalgebra");
    files(corad, {{"A", &in.a}});
    corad->callback([&] {
        action = [&] {
            BraidedBialgebra a = load_algebra(in.a);
            Subobject c = coradical(a);
            Report r;
            r.expect("subcoalgebra", is_subcoalgebra(c, a), "the computed coradical is not a subcoalgebra");
            r.note("dim", std::to_string(c.dim()));
            for (std::size_t k = 0; k < c.dim(); ++k)
                r.note("c" + std::to_string(k), vector_text(c.embedding, k, a.basis));
            return r;
        };
    });
    CLI::App* magnum = app.add_subcommand("magnum", "Hypotheses of the existence theorem for weak projections");
    files(magnum, {{"A", &in.a}, {"B", &in.b}}, {{"sigma", &in.sigma}});
    magnum->add_option("--max-n", in.max_n, "Maximal number of filtration steps")->capture_default_str();
    magnum->callback([&] {
        action = [&] {
            BraidedBialgebra a = load_algebra(in.a), b = load_algebra(in.b);
            return check_magnum_preconditions(a, b, section(a, b, in.sigma), in.max_n);
        };
    });

    // generation
    CLI::App* gen = app.add_subcommand("gen", "Write definition files");
    gen->require_subcommand(1);
    CLI::App* galg = gen->add_subcommand("groupalg", "Group algebra of a group file, written to stdout");
    files(galg, {{"group", &in.group}});
    galg->add_option("--elements", in.elements, "Comma separated subgroup elements");
    galg->add_option("--name", in.name, "Algebra name");
    bool generated = false;
    galg->callback([&] {
        generated = true;
        action = [&] {
            FiniteGroup g = load_group(in.group);
            BraidedBialgebra a;
            if (in.elements.empty()) {
                a = group_algebra(g, in.name);
            } else {
                std::vector<std::string> names;
                std::stringstream ss(in.elements);
                for (std::string n; std::getline(ss, n, ',');) names.push_back(n);
                a = subgroup_algebra(g, element_indices(g, names), in.name);
            }
            out << write_definition(a);
            return Report();
        };
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? exit_pass : exit_input_error;
    }

    std::string command;
    for (int k = 1; k < argc; ++k) {
        std::string arg = argv[k];
        if (arg == "--report") {
            ++k;
            continue;
        }
        if (arg.rfind("--report=", 0) == 0) continue;
        command += (command.empty() ? "" : " ") + arg;
    }

    Report report;
    try {
        report = action();
    } catch (const Error& e) {
        switch (e.kind()) {
            case ErrorKind::precondition_failed:
            case ErrorKind::not_invertible:
            case ErrorKind::split_failure:
            case ErrorKind::transcription_mismatch:
            case ErrorKind::backend_unsupported:
                report = precondition_failure(e.what());
                break;
            default:
                err << "error: " << e.what() << "\n";
                return exit_input_error;
        }
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return exit_input_error;
    }
    if (generated) return exit_pass;
    report.set_command(command);
    out << report.format(report_format == "machine" ? ReportFormat::machine : ReportFormat::plain);
    return report.passed() ? exit_pass : exit_fail;
}

}  // namespace braidhopf
