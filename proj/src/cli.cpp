#include "lgp/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <functional>
#include <iomanip>
#include <sstream>

#include "lgp/descendants.hpp"
#include "lgp/json_io.hpp"
#include "lgp/laurent.hpp"
#include "lgp/potentials.hpp"
#include "lgp/quantum_periods.hpp"
#include "lgp/string_topology.hpp"

namespace lgp::cli {

using nlohmann::json;

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw DomainError("cannot open file: " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

json parse_json_text(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::exception& e) {
        throw DomainError(std::string("invalid JSON: ") + e.what());
    }
}

// Inline/file option pair; exactly one must be given when required.
struct JsonInput {
    std::string inline_text;
    std::string file_path;

    void attach(CLI::App* cmd, const std::string& inline_flag, const std::string& file_flag,
                const std::string& what) {
        cmd->add_option(inline_flag, inline_text, what + " (inline JSON)");
        cmd->add_option(file_flag, file_path, what + " (path to JSON file)");
    }

    bool present() const { return !inline_text.empty() || !file_path.empty(); }

    json load() const {
        if (!inline_text.empty() && !file_path.empty()) {
            throw DomainError("pass either the inline payload or the file, not both");
        }
        if (inline_text.empty() && file_path.empty()) throw DomainError("missing JSON payload");
        return parse_json_text(file_path.empty() ? inline_text : read_file(file_path));
    }
};

struct PolyInput {
    std::string text;
    std::string file_path;
    int dim = 0;  // 0 = infer

    void attach(CLI::App* cmd) {
        cmd->add_option("--poly", text, "polynomial in the x1/x2/... grammar");
        cmd->add_option("--poly-file", file_path, "path to a file holding the polynomial");
        cmd->add_option("--dim", dim, "ambient variable count (default: inferred)");
    }

    LaurentPoly load() const {
        if (!text.empty() && !file_path.empty()) {
            throw DomainError("pass either --poly or --poly-file, not both");
        }
        std::string source = file_path.empty() ? text : read_file(file_path);
        if (source.empty()) throw DomainError("missing polynomial");
        int n = dim > 0 ? dim : infer_dim(source);
        return parse_poly(source, n);
    }
};

struct Output {
    std::ostream& out;
    bool as_json;

    void value(const std::string& exact) const {
        if (as_json) {
            out << json{{"value", exact}}.dump() << "\n";
        } else {
            out << exact << "\n";
        }
    }
    void poly(const LaurentPoly& w) const {
        if (as_json) {
            out << json{{"dim", w.dim()}, {"poly", format_poly(w)}}.dump() << "\n";
        } else {
            out << format_poly(w) << "\n";
        }
    }
    void raw_json(const json& j) const { out << j.dump() << "\n"; }
};

ProjectiveProductSpec parse_target(const std::string& target) {
    // "cp:2" is CP^2, "cp:2,1" is CP^2 x CP^1.
    if (target.rfind("cp:", 0) != 0) {
        throw DomainError("unknown target '" + target + "'; expected cp:k1[,k2,...]");
    }
    ProjectiveProductSpec spec;
    std::stringstream ss(target.substr(3));
    std::string piece;
    while (std::getline(ss, piece, ',')) {
        try {
            spec.factors.push_back(std::stoi(piece));
        } catch (const std::exception&) {
            throw DomainError("bad factor '" + piece + "' in target");
        }
    }
    validate(spec);
    return spec;
}

}  // namespace

int dispatch(int argc, const char* const argv[], std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact toolkit for Laurent-polynomial periods, torus loop-space "
                 "operations, and descendant symbol calculus"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string format = "text";
    app.add_option("--format", format, "output format")->check(CLI::IsMember({"text", "json"}));

    std::function<void(const Output&)> action;

    // ---- period -----------------------------------------------------------
    {
        auto* cmd = app.add_subcommand("period", "constant term of W^d");
        auto poly = std::make_shared<PolyInput>();
        auto d = std::make_shared<int>(0);
        poly->attach(cmd);
        cmd->add_option("--d", *d, "power")->required();
        cmd->callback([&action, poly, d]() {
            action = [poly, d](const Output& o) {
                o.value(period(poly->load(), *d).get_str());
            };
        });
    }
    // ---- period-numeric ---------------------------------------------------
    {
        auto* cmd = app.add_subcommand("period-numeric", "Cauchy-integral quadrature of phi_d");
        auto poly = std::make_shared<PolyInput>();
        auto d = std::make_shared<int>(0);
        auto grid = std::make_shared<int>(64);
        auto tol = std::make_shared<double>(-1.0);
        poly->attach(cmd);
        cmd->add_option("--d", *d, "power")->required();
        cmd->add_option("--grid", *grid, "samples per circle (default 64)");
        cmd->add_option("--tol", *tol, "also compare against the exact period within this tolerance");
        cmd->callback([&action, poly, d, grid, tol]() {
            action = [poly, d, grid, tol](const Output& o) {
                LaurentPoly w = poly->load();
                double value = period_numeric(w, *d, *grid);
                std::ostringstream s;
                s << std::setprecision(17) << value;
                if (*tol >= 0) {
                    Int exact = period(w, *d);
                    double delta = std::abs(value - exact.get_d());
                    bool ok = delta <= *tol;
                    if (o.as_json) {
                        o.raw_json(json{{"value", value},
                                        {"exact", exact.get_str()},
                                        {"withinTol", ok}});
                    } else {
                        o.out << s.str() << (ok ? " (within " : " (OUTSIDE ") << *tol
                              << " of exact " << exact.get_str() << ")\n";
                    }
                    if (!ok) throw DomainError("quadrature outside tolerance");
                } else if (o.as_json) {
                    o.raw_json(json{{"value", value}});
                } else {
                    o.out << s.str() << "\n";
                }
            };
        });
    }
    // ---- series -----------------------------------------------------------
    {
        auto* cmd = app.add_subcommand("series", "classical period series of W");
        auto poly = std::make_shared<PolyInput>();
        auto maxd = std::make_shared<int>(0);
        poly->attach(cmd);
        cmd->add_option("--max-degree", *maxd, "truncation degree")->required();
        cmd->callback([&action, poly, maxd]() {
            action = [poly, maxd](const Output& o) {
                o.raw_json(to_json(classical_period_series(poly->load(), *maxd)));
            };
        });
    }
    // ---- mutate -----------------------------------------------------------
    {
        auto* cmd = app.add_subcommand("mutate", "wall-crossing substitution x_p -> x_p f");
        auto poly = std::make_shared<PolyInput>();
        auto pivot = std::make_shared<int>(0);
        auto factor = std::make_shared<std::string>();
        poly->attach(cmd);
        cmd->add_option("--pivot", *pivot, "1-based pivot variable")->required();
        cmd->add_option("--factor", *factor, "factor f, independent of the pivot")->required();
        cmd->callback([&action, poly, pivot, factor]() {
            action = [poly, pivot, factor](const Output& o) {
                LaurentPoly w = poly->load();
                LaurentPoly f = parse_poly(*factor, w.dim());
                o.poly(mutate(w, MutationSpec(*pivot, std::move(f))));
            };
        });
    }
    // ---- gl ----------------------------------------------------------------
    {
        auto* cmd = app.add_subcommand("gl", "apply a GL(n,Z) change of basis to W");
        auto poly = std::make_shared<PolyInput>();
        auto matrix = std::make_shared<std::string>();
        poly->attach(cmd);
        cmd->add_option("--matrix", *matrix, "unimodular matrix as JSON rows")->required();
        cmd->callback([&action, poly, matrix]() {
            action = [poly, matrix](const Output& o) {
                o.poly(apply_unimodular(poly->load(), matrix_from_json(parse_json_text(*matrix))));
            };
        });
    }
    // ---- mirror-check ------------------------------------------------------
    {
        auto* cmd = app.add_subcommand("mirror-check", "compare phi_d(W) with d! G_X coefficients");
        auto poly = std::make_shared<PolyInput>();
        auto target = std::make_shared<std::string>();
        auto series = std::make_shared<JsonInput>();
        auto maxd = std::make_shared<int>(0);
        poly->attach(cmd);
        cmd->add_option("--target", *target, "named quantum period series (cp:k1[,k2,...])");
        series->attach(cmd, "--series-json", "--series-file", "explicit PeriodSeries");
        cmd->add_option("--max-degree", *maxd, "degree bound")->required();
        cmd->callback([&action, poly, target, series, maxd]() {
            action = [poly, target, series, maxd](const Output& o) {
                PeriodSeries g;
                if (!target->empty() && series->present()) {
                    throw DomainError("pass either --target or an explicit series, not both");
                }
                if (!target->empty()) {
                    g = known_quantum_period(parse_target(*target), *maxd);
                } else {
                    g = series_from_json(series->load());
                }
                MirrorReport report = mirror_check(poly->load(), g, *maxd);
                if (o.as_json) {
                    json j{{"ok", report.success}};
                    if (!report.success) {
                        j["degree"] = report.mismatch_degree;
                        j["period"] = report.period_value.get_str();
                        j["expected"] = rat_to_string(report.expected_value);
                    }
                    o.raw_json(j);
                } else if (report.success) {
                    o.out << "OK\n";
                } else {
                    o.out << "mismatch at d=" << report.mismatch_degree << ": phi_d = "
                          << report.period_value.get_str() << ", d!*c_d = "
                          << rat_to_string(report.expected_value) << "\n";
                }
            };
        });
    }
    // ---- potential ---------------------------------------------------------
    {
        auto* cmd = app.add_subcommand("potential", "catalog potential constructors");
        cmd->require_subcommand(1);
        auto* toric = cmd->add_subcommand("toric", "Hori-Vafa potential of a ray set");
        auto rays = std::make_shared<std::string>();
        toric->add_option("--rays", *rays, "rays as JSON rows")->required();
        toric->callback([&action, rays]() {
            action = [rays](const Output& o) {
                IntMatrix rows = matrix_from_json(parse_json_text(*rays));
                ToricRaySet set;
                set.dim = static_cast<int>(rows.front().size());
                for (auto& r : rows) set.rays.emplace_back(r.begin(), r.end());
                o.poly(hori_vafa(set));
            };
        });
        auto* product = cmd->add_subcommand("product", "product-of-projective-spaces potential");
        auto factors = std::make_shared<std::string>();
        product->add_option("--factors", *factors, "factor dimensions as a JSON array")->required();
        product->callback([&action, factors]() {
            action = [factors](const Output& o) {
                ProjectiveProductSpec spec;
                for (const auto& k : parse_json_text(*factors)) spec.factors.push_back(k.get<int>());
                o.poly(product_projective_potential(spec));
            };
        });
    }
    // ---- bv / bracket / goldman --------------------------------------------
    {
        auto* cmd = app.add_subcommand("bv", "BV operator on a loop class");
        auto input = std::make_shared<JsonInput>();
        auto n = std::make_shared<int>(0);
        input->attach(cmd, "--json", "--json-file", "loop class");
        cmd->add_option("--n", *n, "rank (needed only for the empty class)");
        cmd->callback([&action, input, n]() {
            action = [input, n](const Output& o) {
                o.raw_json(to_json(bv(loop_class_from_json(input->load(), *n))));
            };
        });
    }
    {
        auto* cmd = app.add_subcommand("bracket", "loop bracket derived from the BV operator");
        auto x = std::make_shared<std::string>();
        auto y = std::make_shared<std::string>();
        auto n = std::make_shared<int>(0);
        cmd->add_option("--x", *x, "first loop class (JSON)")->required();
        cmd->add_option("--y", *y, "second loop class (JSON)")->required();
        cmd->add_option("--n", *n, "rank (needed only for empty classes)");
        cmd->callback([&action, x, y, n]() {
            action = [x, y, n](const Output& o) {
                LoopClass cx = loop_class_from_json(parse_json_text(*x), *n);
                LoopClass cy = loop_class_from_json(parse_json_text(*y), cx.n());
                o.raw_json(to_json(bracket(cx, cy)));
            };
        });
    }
    {
        auto* cmd = app.add_subcommand("goldman", "Goldman bracket on T^2");
        auto u = std::make_shared<std::string>();
        auto v = std::make_shared<std::string>();
        cmd->add_option("--u", *u, "first class (JSON pair)")->required();
        cmd->add_option("--v", *v, "second class (JSON pair)")->required();
        cmd->callback([&action, u, v]() {
            action = [u, v](const Output& o) {
                o.raw_json(to_json(goldman_t2(vector_from_json(parse_json_text(*u)),
                                              vector_from_json(parse_json_text(*v)))));
            };
        });
    }
    // ---- descendant ---------------------------------------------------------
    {
        auto* cmd = app.add_subcommand("descendant", "descendant symbol calculus");
        cmd->require_subcommand(1);

        auto* eval = cmd->add_subcommand("eval", "closed-form value of a symbol");
        auto eval_in = std::make_shared<JsonInput>();
        eval_in->attach(eval, "--json", "--json-file", "symbol");
        eval->callback([&action, eval_in]() {
            action = [eval_in](const Output& o) {
                o.value(evaluate(symbol_from_json(eval_in->load())).get_str());
            };
        });

        auto* relation = cmd->add_subcommand("relation", "terms of the basic skew relation");
        auto rel_in = std::make_shared<JsonInput>();
        auto rel_u = std::make_shared<std::string>();
        auto rel_omega = std::make_shared<std::string>();
        rel_in->attach(relation, "--json", "--json-file", "symbol");
        relation->add_option("--u", *rel_u, "shift vector (JSON array)")->required();
        relation->add_option("--omega", *rel_omega,
                             "degree-2 form as JSON [[i,j,\"c\"],...] (1-based, i<j)")
            ->required();
        relation->callback([&action, rel_in, rel_u, rel_omega]() {
            action = [rel_in, rel_u, rel_omega](const Output& o) {
                DescendantSymbol s = symbol_from_json(rel_in->load());
                SkewData data{vector_from_json(parse_json_text(*rel_u)), ExtElement(s.n())};
                for (const auto& entry : parse_json_text(*rel_omega)) {
                    if (!entry.is_array() || entry.size() != 3) {
                        throw DomainError("omega entries are [i, j, \"c\"] triples");
                    }
                    ExtElement term = ExtElement::from_indices(
                        s.n(), {entry[0].get<int>(), entry[1].get<int>()},
                        Int(entry[2].get<std::string>()));
                    data.omega = data.omega + term;
                }
                json terms = json::array();
                Rat residual(0);
                for (const auto& term : relation_terms(s, data)) {
                    json jt{{"coefficient", term.coefficient.get_str()}};
                    jt["symbol"] = term.symbol ? to_json(*term.symbol) : json(nullptr);
                    if (term.symbol) residual += Rat(term.coefficient * evaluate(*term.symbol));
                    terms.push_back(std::move(jt));
                }
                residual.canonicalize();
                o.raw_json(json{{"terms", terms}, {"residual", rat_to_string(residual)}});
            };
        });

        auto* reduce_cmd = cmd->add_subcommand("reduce", "derivation certificate for a symbol");
        auto red_in = std::make_shared<JsonInput>();
        red_in->attach(reduce_cmd, "--json", "--json-file", "symbol");
        reduce_cmd->callback([&action, red_in]() {
            action = [red_in](const Output& o) {
                o.raw_json(to_json(reduce(symbol_from_json(red_in->load()))));
            };
        });

        auto* verify = cmd->add_subcommand("verify", "re-check a certificate and return its value");
        auto ver_in = std::make_shared<JsonInput>();
        ver_in->attach(verify, "--json", "--json-file", "certificate");
        verify->callback([&action, ver_in]() {
            action = [ver_in](const Output& o) {
                o.value(rat_to_string(verify_certificate(certificate_from_json(ver_in->load()))));
            };
        });

        auto* bs = cmd->add_subcommand("bs-expand", "multilinear <BS|...|BS> expansion of W");
        auto bs_poly = std::make_shared<PolyInput>();
        auto bs_d = std::make_shared<int>(0);
        bs_poly->attach(bs);
        bs->add_option("--d", *bs_d, "number of inputs")->required();
        bs->callback([&action, bs_poly, bs_d]() {
            action = [bs_poly, bs_d](const Output& o) {
                o.value(bs_power_expansion(bs_poly->load(), *bs_d).get_str());
            };
        });
    }
    // ---- index ---------------------------------------------------------------
    {
        auto* cmd = app.add_subcommand("index", "dimension and normalization bookkeeping");
        cmd->require_subcommand(1);

        auto* dims = cmd->add_subcommand("dims", "moduli dimension formulas");
        dims->require_subcommand(1);
        auto* tangency = dims->add_subcommand("tangency", "2d - 2(m+1)");
        auto td = std::make_shared<int>(0);
        auto tm = std::make_shared<int>(0);
        tangency->add_option("--d", *td)->required();
        tangency->add_option("--m", *tm)->required();
        tangency->callback([&action, td, tm]() {
            action = [td, tm](const Output& o) {
                o.value(std::to_string(dim_tangency_moduli(*td, *tm)));
            };
        });
        auto* desc = dims->add_subcommand("descendant", "2(k-1) - 2m - sum(degs)");
        auto dk = std::make_shared<int>(0);
        auto dm = std::make_shared<int>(0);
        auto degs = std::make_shared<std::string>("[]");
        desc->add_option("--k", *dk)->required();
        desc->add_option("--m", *dm)->required();
        desc->add_option("--degs", *degs, "input degrees as a JSON array");
        desc->callback([&action, dk, dm, degs]() {
            action = [dk, dm, degs](const Output& o) {
                std::vector<int> d;
                for (const auto& x : parse_json_text(*degs)) d.push_back(x.get<int>());
                o.value(std::to_string(dim_descendant_moduli(*dk, *dm, d)));
            };
        });

        auto* degrees = cmd->add_subcommand("degrees", "check/hat degrees of an orbit");
        auto mu = std::make_shared<int>(0);
        auto nn = std::make_shared<int>(0);
        degrees->add_option("--mu", *mu)->required();
        degrees->add_option("--n", *nn)->required();
        degrees->callback([&action, mu, nn]() {
            action = [mu, nn](const Output& o) {
                auto [check, hat] = degree_dictionary(*mu, *nn);
                if (o.as_json) {
                    o.raw_json(json{{"check", check}, {"hat", hat}});
                } else {
                    o.out << "check=" << check << " hat=" << hat << "\n";
                }
            };
        });

        auto* stretch = cmd->add_subcommand("stretch", "unique stretching solution");
        auto sn = std::make_shared<int>(0);
        auto sd = std::make_shared<int>(0);
        stretch->add_option("--n", *sn)->required();
        stretch->add_option("--d", *sd)->required();
        stretch->callback([&action, sn, sd]() {
            action = [sn, sd](const Output& o) {
                StretchSolution s = stretch_solver(*sn, *sd);
                if (o.as_json) {
                    o.raw_json(json{{"p", s.p}, {"mus", s.mus}});
                } else {
                    o.out << "p=" << s.p << " mus=[";
                    for (std::size_t i = 0; i < s.mus.size(); ++i) {
                        o.out << (i ? "," : "") << s.mus[i];
                    }
                    o.out << "]\n";
                }
            };
        });

        auto* factors = cmd->add_subcommand("factors", "stabilisation comparison factors");
        auto fN = std::make_shared<int>(0);
        auto fd = std::make_shared<int>(0);
        auto fp = std::make_shared<int>(0);
        factors->add_option("--N", *fN)->required();
        factors->add_option("--d", *fd)->required();
        factors->add_option("--p", *fp)->required();
        factors->callback([&action, fN, fd, fp]() {
            action = [fN, fd, fp](const Output& o) {
                auto [many, single] = stabilization_factors(*fN, *fd, *fp);
                if (o.as_json) {
                    o.raw_json(json{{"many", many.get_str()}, {"single", single.get_str()}});
                } else {
                    o.out << "many=" << many.get_str() << " single=" << single.get_str() << "\n";
                }
            };
        });

        auto* gluing = cmd->add_subcommand("gluing", "reordering/divisor factor identity");
        auto gN = std::make_shared<int>(0);
        auto gd = std::make_shared<int>(0);
        gluing->add_option("--N", *gN)->required();
        gluing->add_option("--d", *gd)->required();
        gluing->callback([&action, gN, gd]() {
            action = [gN, gd](const Output& o) {
                o.value(gluing_factor_identity(*gN, *gd) ? "true" : "false");
            };
        });

        auto* norm = cmd->add_subcommand("norm", "d! = d(d-1)(d-2)! consistency");
        auto nd = std::make_shared<int>(0);
        norm->add_option("--d", *nd)->required();
        norm->callback([&action, nd]() {
            action = [nd](const Output& o) {
                o.value(normalization_consistency(*nd) ? "true" : "false");
            };
        });

        auto* psi = cmd->add_subcommand("psi", "(d-2)! conversion between counts");
        auto pv = std::make_shared<std::string>();
        auto pd = std::make_shared<int>(0);
        auto pdir = std::make_shared<std::string>("to-bullet");
        psi->add_option("--value", *pv, "exact rational p/q")->required();
        psi->add_option("--d", *pd)->required();
        psi->add_option("--direction", *pdir)->check(CLI::IsMember({"to-bullet", "from-bullet"}));
        psi->callback([&action, pv, pd, pdir]() {
            action = [pv, pd, pdir](const Output& o) {
                PsiConversion dir = *pdir == "to-bullet" ? PsiConversion::ToEnumerative
                                                         : PsiConversion::ToDescendant;
                o.value(rat_to_string(desc_enum_to_psi(rat_from_string(*pv), *pd, dir)));
            };
        });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return 2;
    }

    try {
        Output o{out, format == "json"};
        action(o);
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}

}  // namespace lgp::cli
