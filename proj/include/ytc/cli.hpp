#ifndef YTC_CLI_HPP
#define YTC_CLI_HPP

#include <CLI11.hpp>

#include <cstdio>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "ytc/json_io.hpp"
#include "ytc/verify.hpp"

namespace ytc {

namespace cli_detail {

inline std::string face_text(const Face& f) {
    std::string s = "{";
    for (std::size_t i = 0; i < f.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(f[i]);
    }
    return s + "}";
}

inline void print_complex(const SimplicialComplex& c, bool as_json, std::ostream& out) {
    if (as_json) {
        out << complex_to_json(c).dump(2) << "\n";
        return;
    }
    if (c.is_void()) {
        out << "(void: no faces)\n";
        return;
    }
    for (const Face& f : c.facets()) out << face_text(f) << "\n";
}

inline void print_homotopy(const HomotopyClass& h, bool as_json, std::ostream& out) {
    if (as_json)
        out << homotopy_to_json(h).dump(2) << "\n";
    else
        out << h.to_string() << "\n";
}

inline void print_betti(const BettiVector& b, bool as_json, std::ostream& out) {
    if (as_json) {
        out << betti_to_json(b).dump(2) << "\n";
        return;
    }
    if (b.all_zero()) {
        out << "trivial (all reduced homology vanishes)\n";
        return;
    }
    for (auto& [d, v] : b.nonzero()) out << "H~_" << d << " = " << v << "\n";
}

struct CommonFlags {
    std::string lambda_text;
    int n = 0, t = 0, k = 0;
    std::string field_text = "q";
    bool json = false, dot = false, oracle = false;
    bool shelling = false, cm = false;

    Field field() const {
        if (field_text == "q") return Field::Rationals;
        if (field_text == "gf2") return Field::GF2;
        throw DomainError("--field must be 'q' or 'gf2'");
    }
};

}  // namespace cli_detail

// Runs the command line; returns the process exit status (0 success,
// 1 domain/precondition error, 2 capacity error).
inline int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    using namespace cli_detail;
    CLI::App app{"t-Young complexes, squarefree path-ideal powers, and their invariants"};
    app.require_subcommand(1);

    CommonFlags f;
    VerifyBounds bounds;

    auto add_lambda = [&](CLI::App* cmd, bool required = true) {
        auto* opt = cmd->add_option("--lambda", f.lambda_text,
                                    "partition as comma-separated decreasing integers");
        if (required) opt->required();
    };
    auto add_t = [&](CLI::App* cmd) {
        cmd->add_option("-t", f.t, "path length parameter (t >= 1)")->required();
    };
    auto add_ntk = [&](CLI::App* cmd) {
        cmd->add_option("-n", f.n, "number of path vertices")->required();
        add_t(cmd);
        cmd->add_option("-k", f.k, "squarefree power index")->required();
    };
    auto add_json = [&](CLI::App* cmd) { cmd->add_flag("--json", f.json, "emit JSON"); };

    CLI::App* young_cmd = app.add_subcommand("young", "facets of the t-Young complex of a partition");
    add_lambda(young_cmd);
    add_t(young_cmd);
    add_json(young_cmd);

    CLI::App* homotopy_cmd =
        app.add_subcommand("homotopy", "wedge-of-spheres homotopy type (partition or n,t,k)");
    add_lambda(homotopy_cmd, false);
    homotopy_cmd->add_option("-n", f.n, "number of path vertices");
    homotopy_cmd->add_option("-t", f.t, "path length parameter")->required();
    homotopy_cmd->add_option("-k", f.k, "squarefree power index");
    add_json(homotopy_cmd);

    CLI::App* homology_cmd =
        app.add_subcommand("homology", "reduced Betti numbers (partition or n,t,k)");
    add_lambda(homology_cmd, false);
    homology_cmd->add_option("-n", f.n, "number of path vertices");
    homology_cmd->add_option("-t", f.t, "path length parameter")->required();
    homology_cmd->add_option("-k", f.k, "squarefree power index");
    homology_cmd->add_option("--field", f.field_text, "coefficient field: q | gf2");
    add_json(homology_cmd);

    CLI::App* dual_cmd = app.add_subcommand("dual", "Alexander dual of the Stanley-Reisner complex");
    add_ntk(dual_cmd);
    dual_cmd->add_flag("--oracle", f.oracle, "dualize the Stanley-Reisner complex directly");
    add_json(dual_cmd);

    CLI::App* pathideal_cmd =
        app.add_subcommand("pathideal", "generators of the squarefree power of the t-path ideal");
    add_ntk(pathideal_cmd);
    add_json(pathideal_cmd);

    CLI::App* pd_cmd = app.add_subcommand("pd", "projective dimension of R/I");
    add_ntk(pd_cmd);
    pd_cmd->add_flag("--oracle", f.oracle, "compute through the graded Betti table");
    add_json(pd_cmd);

    CLI::App* dim_cmd = app.add_subcommand("dim", "Krull dimension of R/I");
    add_ntk(dim_cmd);
    dim_cmd->add_flag("--oracle", f.oracle, "compute through minimal transversals");
    add_json(dim_cmd);

    CLI::App* helly_cmd = app.add_subcommand("helly", "Helly number of the dual of the t-Young complex");
    add_lambda(helly_cmd);
    add_t(helly_cmd);
    helly_cmd->add_flag("--oracle", f.oracle, "enumerate minimal nonfaces");
    add_json(helly_cmd);

    CLI::App* leray_cmd = app.add_subcommand("leray", "Leray number of the dual complex");
    add_ntk(leray_cmd);
    leray_cmd->add_flag("--oracle", f.oracle, "brute-force over induced subcomplexes");
    add_json(leray_cmd);

    CLI::App* graph_cmd = app.add_subcommand("graph", "reduction digraph and path-label counts");
    add_ntk(graph_cmd);
    graph_cmd->add_flag("--dot", f.dot, "emit GraphViz DOT");
    add_json(graph_cmd);

    CLI::App* decomp_cmd = app.add_subcommand("decomp", "vertex decomposability of the t-Young complex");
    add_lambda(decomp_cmd);
    add_t(decomp_cmd);
    decomp_cmd->add_flag("--shelling", f.shelling, "also search for a shelling order");
    decomp_cmd->add_flag("--cm", f.cm, "also run the Cohen-Macaulay criterion");
    decomp_cmd->add_option("--field", f.field_text, "coefficient field for --cm: q | gf2");
    add_json(decomp_cmd);

    CLI::App* verify_cmd = app.add_subcommand("verify", "run the full cross-validation suite");
    verify_cmd->add_option("--max-n", bounds.max_n, "path-vertex bound for the sweeps");
    verify_cmd->add_option("--max-t", bounds.max_t, "bound on t");
    verify_cmd->add_option("--max-k", bounds.max_k, "bound on k");
    verify_cmd->add_option("--max-cells", bounds.max_cells, "bound on partition cells");
    verify_cmd->add_flag("--json", f.json, "emit JSON report");

    try {
        // CLI11 wants argv-style input, reversed
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            out << app.help();
            return 0;
        }
        err << "error: " << e.what() << "\n";
        return 1;
    }

    try {
        if (*young_cmd) {
            print_complex(young_complex(Partition::parse(f.lambda_text), f.t), f.json, out);
        } else if (*homotopy_cmd) {
            if (f.lambda_text.empty() && f.n == 0)
                throw DomainError("homotopy: provide --lambda, or -n and -k");
            HomotopyClass h = f.lambda_text.empty()
                                  ? dual_homotopy(f.n, f.k, f.t)
                                  : young_homotopy(Partition::parse(f.lambda_text), f.t);
            print_homotopy(h, f.json, out);
        } else if (*homology_cmd) {
            if (f.lambda_text.empty() && f.n == 0)
                throw DomainError("homology: provide --lambda, or -n and -k");
            SimplicialComplex c = f.lambda_text.empty()
                                      ? dual_complex({f.n, f.t, f.k})
                                      : young_complex(Partition::parse(f.lambda_text), f.t);
            print_betti(reduced_betti(c, f.field()), f.json, out);
        } else if (*dual_cmd) {
            PathIdealSpec spec{f.n, f.t, f.k};
            SimplicialComplex c =
                f.oracle ? dual_complex_via_alexander(spec) : dual_complex(spec);
            print_complex(c, f.json, out);
        } else if (*pathideal_cmd) {
            PathIdealSpec spec{f.n, f.t, f.k};
            auto supports = squarefree_power_generator_supports(spec);
            if (f.json) {
                out << monomial_set_to_json(spec, supports).dump(2) << "\n";
            } else {
                for (const Face& s : supports) out << face_text(s) << "\n";
            }
        } else if (*pd_cmd) {
            long long value = f.oracle
                                  ? pd_oracle(stanley_reisner_complex({f.n, f.t, f.k}),
                                              interval_mask(1, f.n))
                                  : pd_formula(f.n, f.k, f.t);
            if (f.json)
                out << json{{"n", f.n}, {"t", f.t}, {"k", f.k}, {"pd", value}}.dump(2) << "\n";
            else
                out << value << "\n";
        } else if (*dim_cmd) {
            long long value = f.oracle ? krull_height_oracle({f.n, f.t, f.k}).dim
                                       : krull_formula(f.n, f.k, f.t);
            if (f.json)
                out << json{{"n", f.n}, {"t", f.t}, {"k", f.k}, {"dim", value}}.dump(2) << "\n";
            else
                out << value << "\n";
        } else if (*helly_cmd) {
            Partition lambda = Partition::parse(f.lambda_text);
            HellyResult h = helly_formula(lambda, f.t);
            long long value = h.value;
            if (f.oracle && !h.simplex) {
                int n = (lambda.rows() - 1) * f.t + lambda.part(1);
                Mask uni = interval_mask(1, n);
                SimplicialComplex dual = alexander_dual(young_complex(lambda, f.t), uni);
                value = -1;
                for (Mask nf : minimal_nonface_masks(dual, uni))
                    value = std::max<long long>(value, popcount(nf) - 1);
            }
            if (f.json) {
                json j{{"lambda", lambda.parts()}, {"t", f.t}};
                if (h.simplex)
                    j["helly"] = "simplex";
                else
                    j["helly"] = value;
                out << j.dump(2) << "\n";
            } else {
                if (h.simplex)
                    out << "simplex (no nonfaces)\n";
                else
                    out << value << "\n";
            }
        } else if (*leray_cmd) {
            long long value = f.oracle
                                  ? leray_oracle(dual_complex({f.n, f.t, f.k}),
                                                 interval_mask(1, f.n))
                                  : leray_formula(f.n, f.k, f.t);
            if (f.json)
                out << json{{"n", f.n}, {"t", f.t}, {"k", f.k}, {"leray", value}}.dump(2) << "\n";
            else
                out << value << "\n";
        } else if (*graph_cmd) {
            ReductionGraph g = build_reduction_graph(f.n, f.k, f.t);
            if (f.dot) {
                out << g.to_dot();
            } else if (f.json) {
                out << reduction_graph_to_json(g).dump(2) << "\n";
            } else {
                for (const auto& e : g.edges)
                    out << "(" << e.from.m << "," << e.from.j << ") -> (" << e.to.m << ","
                        << e.to.j << ") [" << e.label << "]\n";
                for (const auto& pc : path_label_counts(g))
                    out << "N(" << pc.m << "," << pc.j << "," << pc.alpha << ") = " << pc.count
                        << "\n";
            }
        } else if (*decomp_cmd) {
            SimplicialComplex c = young_complex(Partition::parse(f.lambda_text), f.t);
            DecompCertificate vd = is_vertex_decomposable(c);
            json j;
            j["vd"] = certificate_to_json(vd);
            if (!f.json) out << "vertex-decomposable: " << (vd.verdict ? "true" : "false") << "\n";
            if (f.shelling) {
                DecompCertificate sh = is_shellable(c);
                j["shelling"] = certificate_to_json(sh);
                if (!f.json) out << "shellable: " << (sh.verdict ? "true" : "false") << "\n";
            }
            if (f.cm) {
                bool cm = is_cohen_macaulay(c, f.field());
                j["cohen_macaulay"] = cm;
                if (!f.json)
                    out << "cohen-macaulay(" << f.field_text << "): " << (cm ? "true" : "false")
                        << "\n";
            }
            if (f.json) out << j.dump(2) << "\n";
        } else if (*verify_cmd) {
            bounds.max_n_t1 = std::min(bounds.max_n_t1, bounds.max_n);
            std::vector<CheckResult> results = verify_suite(bounds);
            bool all_pass = true;
            if (f.json) {
                json j = json::array();
                for (const auto& r : results) {
                    all_pass = all_pass && r.pass;
                    j.push_back({{"check", r.name},
                                 {"pass", r.pass},
                                 {"cases", r.cases},
                                 {"detail", r.detail},
                                 {"seconds", r.seconds}});
                }
                out << j.dump(2) << "\n";
            } else {
                char buf[32];
                for (const auto& r : results) {
                    all_pass = all_pass && r.pass;
                    std::snprintf(buf, sizeof buf, "%.2fs", r.seconds);
                    out << (r.pass ? "PASS " : "FAIL ") << r.name << " (cases=" << r.cases
                        << ", " << buf << ")";
                    if (!r.detail.empty()) out << " -- " << r.detail;
                    out << "\n";
                }
                out << (all_pass ? "all checks passed\n" : "CHECKS FAILED\n");
            }
            return all_pass ? 0 : 1;
        }
    } catch (const CapacityError& e) {
        err << "capacity error: " << e.what() << "\n";
        return 2;
    } catch (const DomainError& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}

}  // namespace ytc

#endif
