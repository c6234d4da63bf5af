#include "swfam/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <functional>
#include <sstream>

#include "swfam/errors.hpp"
#include "swfam/fm_blowup.hpp"
#include "swfam/selftest.hpp"
#include "swfam/wall_crossing.hpp"

namespace swfam {

namespace {

std::vector<long long> parse_csv_ints(const std::string& text, const char* what) {
    std::vector<long long> out;
    std::string tok;
    std::istringstream is(text);
    while (std::getline(is, tok, ',')) {
        try {
            size_t pos = 0;
            out.push_back(std::stoll(tok, &pos));
            if (pos != tok.size())
                throw std::invalid_argument(tok);
        } catch (const std::exception&) {
            throw ValidationError(std::string(what) + ": expected comma-separated integers, got '" +
                                  text + "'");
        }
    }
    if (out.empty())
        throw ValidationError(std::string(what) + ": empty vector");
    return out;
}

struct Options {
    std::string preset_name;
    std::string manifold_path;
    std::string spinc;
    std::vector<std::string> zetas;
    long long chamber = 1;
    int n = 1;
    std::string m_list;
    long long c0sq = 0, c0k = 0, c1sq = 0, c2 = 0;
    int order = 5;
    int eta_degree = 0;
    long long eta_c0 = 0, eta_c1 = 0;
    int trials = 20;
    std::uint64_t seed = 1;
    long long dimb = 0;
    bool dimb_set = false;
    std::string delta0 = "1";

    ManifoldModel model() const {
        if (!preset_name.empty())
            return preset(preset_name);
        if (!manifold_path.empty()) {
            std::ifstream in(manifold_path);
            if (!in)
                throw ValidationError("cannot open manifold file '" + manifold_path + "'");
            std::ostringstream text;
            text << in.rdbuf();
            return load_manifold(text.str());
        }
        throw ValidationError("a manifold is required: --preset {t4|k3|kodaira} or --manifold <path>");
    }

    SpincClass spinc_class() const {
        if (spinc.empty())
            throw ValidationError("--spinc <csv ints> is required");
        return SpincClass{parse_csv_ints(spinc, "--spinc")};
    }

    std::vector<OneCycle> zeta_list() const {
        std::vector<OneCycle> out;
        for (const auto& z : zetas)
            out.push_back(OneCycle{parse_csv_ints(z, "--zeta")});
        return out;
    }

    FMSpec fm_spec() const {
        FMSpec spec;
        spec.n = n;
        spec.m = m_list.empty() ? std::vector<long long>{}
                                : parse_csv_ints(m_list, "--m");
        spec.geometry = FMGeometry{c0sq, c0k, c1sq, c2};
        return spec;
    }
};

void add_manifold_flags(CLI::App* cmd, Options& opt) {
    auto* p = cmd->add_option("--preset", opt.preset_name, "built-in model: t4, k3 or kodaira")
                  ->check(CLI::IsMember({"t4", "k3", "kodaira"}));
    cmd->add_option("--manifold", opt.manifold_path, "path to a manifold file")->excludes(p);
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Options opt;
    CLI::App app{"exact wall-crossing calculator for family Seiberg-Witten invariants"};
    app.require_subcommand(1);
    std::function<void()> action;

    auto* dim = app.add_subcommand("dim", "expected dimension of the parametrized moduli space");
    add_manifold_flags(dim, opt);
    dim->add_option("--spinc", opt.spinc, "Spin^c class, csv integers in the H^2 basis");
    dim->add_option("--dimb", opt.dimb, "base dimension (default: bplus - 1)")
        ->each([&](const std::string&) { opt.dimb_set = true; });
    dim->callback([&] {
        action = [&] {
            ManifoldModel m = opt.model();
            long long dim_b = opt.dimb_set ? opt.dimb : m.bplus - 1;
            out << expected_dimension(m, opt.spinc_class(), dim_b) << "\n";
        };
    });

    auto* pure = app.add_subcommand("wcn-pure", "pure critical-case wall crossing number");
    add_manifold_flags(pure, opt);
    pure->add_option("--spinc", opt.spinc, "Spin^c class, csv integers");
    pure->callback([&] {
        action = [&] { out << wcn_pure(opt.model(), opt.spinc_class()).value << "\n"; };
    });

    auto* mixed = app.add_subcommand("wcn-mixed", "wall crossing number with H_1 insertions");
    add_manifold_flags(mixed, opt);
    mixed->add_option("--spinc", opt.spinc, "Spin^c class, csv integers");
    mixed->add_option("--zeta", opt.zetas, "one-cycle, csv integers in the H^1 basis (repeatable)");
    mixed->callback([&] {
        action = [&] {
            out << wcn_mixed(opt.model(), opt.spinc_class(), opt.zeta_list()).value << "\n";
        };
    });

    auto* winding = app.add_subcommand("winding", "invariant in a given winding chamber");
    add_manifold_flags(winding, opt);
    winding->add_option("--spinc", opt.spinc, "Spin^c class, csv integers");
    winding->add_option("--chamber", opt.chamber, "winding chamber index (default 1)");
    winding->callback([&] {
        action = [&] {
            WcnValue w = wcn_pure(opt.model(), opt.spinc_class());
            out << sw_from_winding(w, opt.chamber).value << "\n";
        };
    });

    auto* sq1 = app.add_subcommand("series-kodaira-q1",
                                   "Kodaira q=1 generating series (cross-checked)");
    sq1->add_option("--zeta", opt.zetas, "one-cycle, csv integers in the (dx,dy,dt) basis")
        ->required();
    sq1->add_option("--order", opt.order, "truncation order per variable (default 5)");
    sq1->callback([&] {
        action = [&] {
            if (opt.zetas.size() != 1)
                throw ValidationError("series-kodaira-q1 takes exactly one --zeta");
            OneCycle z{parse_csv_ints(opt.zetas[0], "--zeta")};
            out << kodaira_series_q1(z, opt.order).csv();
        };
    });

    auto* sq3 = app.add_subcommand("series-kodaira-q3", "Kodaira q=3 generating series");
    sq3->add_option("--zeta", opt.zetas, "one-cycle, csv integers (give three)")->required();
    sq3->add_option("--order", opt.order, "truncation order per variable (default 5)");
    sq3->callback([&] {
        action = [&] {
            if (opt.zetas.size() != 3)
                throw ValidationError("series-kodaira-q3 takes exactly three --zeta");
            OneCycle z1{parse_csv_ints(opt.zetas[0], "--zeta")};
            OneCycle z2{parse_csv_ints(opt.zetas[1], "--zeta")};
            OneCycle z3{parse_csv_ints(opt.zetas[2], "--zeta")};
            out << kodaira_series_q3(z1, z2, z3, opt.order).csv();
        };
    });

    auto* summands = app.add_subcommand("fm-summands", "Koszul-resolution summand table");
    summands->add_option("--n", opt.n, "number of blown-up points")->required();
    summands->add_option("--m", opt.m_list, "multiplicities, csv integers")->required();
    summands->callback([&] {
        action = [&] {
            out << "point,sym_power,rank,twist\n";
            for (const FMSummand& s : fm_summands(opt.fm_spec())) {
                std::string twist = "C0";
                for (size_t e = 0; e < s.twist_e.size(); ++e)
                    if (s.twist_e[e] != 0)
                        twist += "-" + std::to_string(s.twist_e[e]) + "E" + std::to_string(e + 1);
                out << s.point << "," << s.sym_power << "," << s.rank << "," << twist << "\n";
            }
        };
    });

    auto* fmwcn = app.add_subcommand("fm-wcn", "blow-up family wall crossing number (n = 1)");
    fmwcn->add_option("--m", opt.m_list, "multiplicity m_1, csv with one entry")->required();
    fmwcn->add_option("--c0sq", opt.c0sq, "C0 . C0");
    fmwcn->add_option("--c0k", opt.c0k, "C0 . c1(M)");
    fmwcn->add_option("--c1sq", opt.c1sq, "c1(M)^2");
    fmwcn->add_option("--c2", opt.c2, "c2(M)[M]");
    fmwcn->add_option("--delta0", opt.delta0, "wall crossing number of L0 (rational, default 1)");
    fmwcn->add_option("--eta-degree", opt.eta_degree, "mixed insertion degree: 0, 2 or 4")
        ->check(CLI::IsMember({0, 2, 4}));
    fmwcn->add_option("--eta-c0", opt.eta_c0, "eta . C0 (degree-2 insertion)");
    fmwcn->add_option("--eta-c1", opt.eta_c1, "eta . c1(M) (degree-2 insertion)");
    fmwcn->callback([&] {
        action = [&] {
            FMSpec spec = opt.fm_spec();
            spec.n = static_cast<int>(spec.m.size());
            WcnValue delta0{Rational::parse(opt.delta0)};
            out << fm_wcn_n1_mixed(spec, delta0, opt.eta_degree, opt.eta_c0, opt.eta_c1).value
                << "\n";
        };
    });

    auto* fmdim = app.add_subcommand("fm-dim", "expected dimension of the blow-up family");
    add_manifold_flags(fmdim, opt);
    fmdim->add_option("--n", opt.n, "number of blown-up points")->required();
    fmdim->add_option("--m", opt.m_list, "multiplicities, csv integers");
    fmdim->add_option("--c0sq", opt.c0sq, "C0 . C0");
    fmdim->add_option("--c0k", opt.c0k, "C0 . c1(M)");
    fmdim->add_option("--c1sq", opt.c1sq, "c1(M)^2");
    fmdim->callback([&] {
        action = [&] {
            ManifoldModel m = opt.model();
            FMSpec spec = opt.fm_spec();
            // L0 = 2 C0 - K_M, so L0^2 = 4 C0^2 + 4 C0.c1 + c1^2
            long long l0_sq = 4 * opt.c0sq + 4 * opt.c0k + opt.c1sq;
            out << fm_expected_dimension(m, l0_sq, spec) << "\n";
        };
    });

    auto* nodal = app.add_subcommand("fm-t4-nodal", "one-nodal curve numbers on T^4 (both routes)");
    nodal->add_option("--c0sq", opt.c0sq, "C0 . C0")->required();
    nodal->callback([&] {
        action = [&] {
            auto [literal, composed] = fm_t4_nodal(opt.c0sq);
            out << "literal " << literal.value << "\n";
            out << "composed " << composed.value << "\n";
            if (!(literal == composed))
                out << "note: the two published routes disagree; both are reported\n";
        };
    });

    auto* oracle = app.add_subcommand("oracle-check",
                                      "family index oracle vs cup-product shortcut on t4");
    oracle->add_option("--trials", opt.trials, "number of random Spin^c classes (default 20)");
    oracle->add_option("--seed", opt.seed, "random seed (default 1)");
    oracle->callback([&] {
        action = [&] { run_oracle_check(opt.trials, opt.seed, out); };
    });

    auto* selftest = app.add_subcommand("selftest", "run the full internal invariant suite");
    selftest->callback([&] {
        action = [&] { run_selftest(out); };
    });

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n";
        return 1;
    }

    try {
        action();
    } catch (const CrossCheckError& e) {
        err << "cross-check failure: " << e.what() << "\n";
        return 3;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}

} // namespace swfam
