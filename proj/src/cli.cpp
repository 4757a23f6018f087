#include "vircat/cli.hpp"

#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "vircat/bpz.hpp"
#include "vircat/error.hpp"
#include "vircat/fusion.hpp"
#include "vircat/linalg.hpp"
#include "vircat/oracle.hpp"
#include "vircat/triplet.hpp"
#include "vircat/verma.hpp"
#include "vircat/zhu.hpp"

namespace vircat {

namespace {

using json = nlohmann::ordered_json;

json decomp_json(const Decomp& d) {
    json j;
    j["p"] = d.p;
    j["summands"] = json::array();
    for (const auto& [a, m] : d.entries) {
        json e;
        e["kind"] = a.kind_str();
        e["r"] = a.r;
        e["s"] = a.s;
        e["mult"] = m;
        j["summands"].push_back(e);
    }
    return j;
}

json triplet_json(const TripletDecomp& d) {
    json j;
    j["p"] = d.p;
    j["summands"] = json::array();
    for (const auto& [a, m] : d.entries) {
        json e;
        e["kind"] = a.kind_str();
        e["r"] = a.r;
        e["s"] = a.s;
        e["mult"] = m;
        j["summands"].push_back(e);
    }
    return j;
}

json labels_json(const std::vector<ModuleLabel>& v) {
    json arr = json::array();
    for (const auto& a : v) arr.push_back(a.str());
    return arr;
}

bool is_triplet_label(const std::string& s) { return !s.empty() && (s[0] == 'W' || s[0] == 'R'); }

struct Options {
    int p = 2;
    std::string format = "text";
    bool json_out() const { return format == "json"; }
};

}  // namespace

int dispatch(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact fusion rules, Zhu-algebra spectra, Verma-module linear algebra and "
                 "triplet-algebra induction for the Virasoro category at c = 13 - 6p - 6/p"};
    app.require_subcommand(1);
    Options opt;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--p", opt.p, "integer p >= 2 fixing the central charge")->required();
        cmd->add_option("--format", opt.format, "output format: text or json")
            ->check(CLI::IsMember({"text", "json"}));
    };

    // fuse
    std::vector<std::string> fuse_labels;
    auto* fuse = app.add_subcommand(
        "fuse", "tensor product of two modules, decomposed into simples L:r,s and projective "
                "covers P:r,s (or triplet modules W:r,s / R:r,s)");
    add_common(fuse);
    fuse->add_option("labels", fuse_labels, "two labels, e.g. L:1,2 L:1,2")->expected(2);

    // dim
    std::string dim_label;
    auto* dim = app.add_subcommand(
        "dim", "categorical dimension as an exact quantum integer in Z[zeta_2p]");
    add_common(dim);
    dim->add_option("label", dim_label, "module label L:r,s or P:r,s")->required();

    // loewy
    std::string loewy_label;
    auto* lw = app.add_subcommand("loewy", "socle series layers and composition factors");
    add_common(lw);
    lw->add_option("label", loewy_label, "module label L:r,s or P:r,s")->required();

    // zhu
    int zr = 1, zs = 1;
    std::vector<int> zgen{1, 2};
    auto* zhu = app.add_subcommand(
        "zhu", "Zhu-bimodule polynomial of a degenerate-field generator and the exact L_0 "
               "spectrum it induces on a top level");
    add_common(zhu);
    zhu->add_option("--gen", zgen, "generator indices (1 2, 2 1 or 3 1)")->expected(2);
    zhu->add_option("--r", zr, "target first index")->required();
    zhu->add_option("--s", zs, "target second index")->required();

    // singular
    int sing_level = 2, sing_r = 1, sing_s = 2;
    std::string sing_h;
    auto* sing = app.add_subcommand(
        "singular", "basis of the joint kernel of the raising operators L_1, L_2 at a level of "
                    "a Verma module");
    add_common(sing);
    sing->add_option("--level", sing_level, "grade to search")->required();
    sing->add_option("--r", sing_r, "Kac label r (weight h_{r,s})");
    sing->add_option("--s", sing_s, "Kac label s");
    sing->add_option("--hw", sing_h, "explicit lowest weight as a rational, overrides --r/--s");

    // gram
    int gram_level = 2, gram_r = 1, gram_s = 1;
    std::string gram_h;
    bool gram_det = false;
    auto* gram = app.add_subcommand(
        "gram", "Shapovalov matrix of a Verma-module level, or its exact determinant");
    add_common(gram);
    gram->add_option("--level", gram_level, "grade")->required();
    gram->add_option("--r", gram_r, "Kac label r");
    gram->add_option("--s", gram_s, "Kac label s");
    gram->add_option("--hw", gram_h, "explicit lowest weight as a rational, overrides --r/--s");
    gram->add_flag("--det", gram_det, "print only the determinant");

    // chain
    int ch_r = 1, ch_s = 1, ch_depth = 4;
    auto* chain = app.add_subcommand("chain", "descending chain of Verma submodules of V_{r,s}");
    add_common(chain);
    chain->add_option("--r", ch_r)->required();
    chain->add_option("--s", ch_s)->required();
    chain->add_option("--depth", ch_depth, "number of chain entries");

    // induce
    std::string ind_label;
    auto* ind = app.add_subcommand("induce", "induction of a Virasoro module to the triplet "
                                             "algebra W(p)");
    add_common(ind);
    ind->add_option("label", ind_label, "module label L:r,s or P:r,s")->required();

    // restrict
    std::string res_label;
    int res_cutoff = 3;
    auto* res = app.add_subcommand(
        "restrict", "restriction of a triplet-algebra module to Virasoro, truncated");
    add_common(res);
    res->add_option("label", res_label, "triplet label W:r,s or R:r,s")->required();
    res->add_option("--cutoff", res_cutoff, "number of terms - 1");

    // ss
    std::vector<std::string> ss_labels;
    auto* ss = app.add_subcommand(
        "ss", "tensor product in the semisimplification (negligible summands dropped)");
    add_common(ss);
    ss->add_option("labels", ss_labels, "two simple labels with s <= p-1")->expected(2);

    // verify
    int v_rmax = 4, v_jobs = 1, v_cutoff = 3;
    auto* verify = app.add_subcommand(
        "verify", "exhaustive cross-checks: ring axioms, recursion oracle agreement, dimension "
                  "multiplicativity, semisimplification, monodromy integrality, triplet "
                  "monoidality");
    add_common(verify);
    verify->add_option("--rmax", v_rmax, "sweep labels with r up to this bound");
    verify->add_option("--jobs", v_jobs, "worker threads for the pair sweep");
    verify->add_option("--cutoff", v_cutoff, "triplet sweep bound");

    // bpz
    auto* bpz = app.add_subcommand(
        "bpz", "rigidity invariant <v, R(v)> of the degenerate field, computed by closed form "
               "and by the hypergeometric connection route");
    add_common(bpz);

    std::vector<std::string> args(argv.rbegin(), argv.rend());
    try {
        app.parse(args);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            // --help
            out << app.help() << std::flush;
            return 0;
        }
        err << e.what() << "\n";
        return 1;
    }

    try {
        if (*fuse) {
            if (is_triplet_label(fuse_labels[0]) != is_triplet_label(fuse_labels[1]))
                throw std::invalid_argument("fuse: cannot mix Virasoro and triplet labels");
            if (is_triplet_label(fuse_labels[0])) {
                auto a = TripletLabel::parse(fuse_labels[0], opt.p);
                auto b = TripletLabel::parse(fuse_labels[1], opt.p);
                auto prod = triplet_tensor(a, b);
                if (opt.json_out()) {
                    json j = triplet_json(prod.decomp);
                    j["transported"] = prod.transported;
                    out << j.dump() << "\n";
                } else {
                    out << a.str() << " x " << b.str() << " = " << prod.decomp.str() << "\n";
                    if (prod.transported) out << "(derived via induction transport)\n";
                }
            } else {
                auto a = ModuleLabel::parse(fuse_labels[0], opt.p);
                auto b = ModuleLabel::parse(fuse_labels[1], opt.p);
                Decomp d = tensor(a, b);
                if (opt.json_out())
                    out << decomp_json(d).dump() << "\n";
                else
                    out << a.str() << " x " << b.str() << " = " << d.str() << "\n";
            }
            return 0;
        }

        if (*dim) {
            auto a = ModuleLabel::parse(dim_label, opt.p);
            CycScalar d = cat_dim(a);
            if (opt.json_out()) {
                json j;
                j["label"] = a.str();
                j["dim"] = d.str();
                j["value"] = d.embed().real();
                j["projective"] = projective_in_oc0(a);
                out << j.dump() << "\n";
            } else {
                out << "dim " << a.str() << " = " << d.str() << " = " << d.embed().real() << "\n";
                out << (projective_in_oc0(a) ? "projective" : "not projective")
                    << " in the subcategory\n";
            }
            return 0;
        }

        if (*lw) {
            auto a = ModuleLabel::parse(loewy_label, opt.p);
            LoewyData ld = loewy(a);
            Decomp cf = composition_factors(a);
            if (opt.json_out()) {
                json j;
                j["label"] = a.str();
                j["head"] = labels_json(ld.head);
                j["middle"] = labels_json(ld.middle);
                j["socle"] = labels_json(ld.socle);
                j["factors"] = decomp_json(cf)["summands"];
                out << j.dump() << "\n";
            } else {
                auto row = [](const std::vector<ModuleLabel>& v) {
                    std::string s;
                    for (const auto& a2 : v) s += (s.empty() ? "" : "  ") + a2.str();
                    return s.empty() ? std::string("-") : s;
                };
                out << "head:   " << row(ld.head) << "\n";
                out << "middle: " << row(ld.middle) << "\n";
                out << "socle:  " << row(ld.socle) << "\n";
                out << "factors: " << cf.str() << "\n";
            }
            return 0;
        }

        if (*zhu) {
            CentralData cd = CentralData::from_p(opt.p);
            BimodPoly bp = bimod_poly(cd, zgen[0], zgen[1]);
            Spectrum spec = top_level_spectrum(bp, cd, zr, zs);
            if (opt.json_out()) {
                json j;
                j["generator"] = {bp.generator.first, bp.generator.second};
                json f = json::array();
                for (const auto& [ij, a] : bp.f.monomials())
                    f.push_back({{"i", ij.first}, {"j", ij.second}, {"c", a.str()}});
                j["f"] = f;
                j["target"] = {zr, zs};
                json roots = json::array();
                for (const auto& [root, m] : spec.roots)
                    roots.push_back({{"h", root.str()}, {"mult", m}});
                j["spectrum"] = roots;
                j["logarithmic"] = logarithmic_flag(cd, zr, zs);
                out << j.dump() << "\n";
            } else {
                out << "f_{" << bp.generator.first << "," << bp.generator.second
                    << "}(x,y) = " << bp.f.str() << "\n";
                out << "spectrum at (" << zr << "," << zs << "):";
                for (const auto& [root, m] : spec.roots) {
                    out << " " << root.str();
                    if (m > 1) out << " (x" << m << ")";
                }
                out << "\n";
                if (logarithmic_flag(cd, zr, zs)) out << "logarithmic (double root at the top level)\n";
            }
            return 0;
        }

        if (*sing) {
            CentralData cd = CentralData::from_p(opt.p);
            Rat h = sing_h.empty() ? h_weight(cd, sing_r, sing_s) : Rat::parse(sing_h);
            auto svs = singular_vectors(cd, h, sing_level);
            if (opt.json_out()) {
                json j;
                j["h"] = h.str();
                j["level"] = sing_level;
                json arr = json::array();
                for (const auto& v : svs) {
                    json terms = json::array();
                    for (const auto& [lam, c] : v.terms) terms.push_back({{"parts", lam}, {"c", c.str()}});
                    arr.push_back(terms);
                }
                j["vectors"] = arr;
                out << j.dump() << "\n";
            } else {
                out << "h = " << h.str() << ", level " << sing_level << ": " << svs.size()
                    << " singular vector(s)\n";
                for (const auto& v : svs) out << "  " << v.str() << "\n";
            }
            return 0;
        }

        if (*gram) {
            CentralData cd = CentralData::from_p(opt.p);
            Rat h = gram_h.empty() ? h_weight(cd, gram_r, gram_s) : Rat::parse(gram_h);
            RatMatrix g = gram_matrix(cd, h, gram_level);
            if (gram_det) {
                Rat det = exact_determinant<Rat>(g);
                if (opt.json_out()) {
                    json j;
                    j["h"] = h.str();
                    j["level"] = gram_level;
                    j["det"] = det.str();
                    out << j.dump() << "\n";
                } else {
                    out << det.str() << "\n";
                }
            } else if (opt.json_out()) {
                json j;
                j["h"] = h.str();
                j["level"] = gram_level;
                json rows = json::array();
                for (Eigen::Index i = 0; i < g.rows(); ++i) {
                    json row = json::array();
                    for (Eigen::Index jx = 0; jx < g.cols(); ++jx) row.push_back(g(i, jx).str());
                    rows.push_back(row);
                }
                j["matrix"] = rows;
                out << j.dump() << "\n";
            } else {
                for (Eigen::Index i = 0; i < g.rows(); ++i) {
                    for (Eigen::Index jx = 0; jx < g.cols(); ++jx)
                        out << (jx ? " " : "") << g(i, jx).str();
                    out << "\n";
                }
            }
            return 0;
        }

        if (*chain) {
            auto ch = embedding_chain(opt.p, ch_r, ch_s, ch_depth);
            if (opt.json_out()) {
                json arr = json::array();
                for (auto [r, s] : ch) arr.push_back({r, s});
                json j;
                j["p"] = opt.p;
                j["chain"] = arr;
                out << j.dump() << "\n";
            } else {
                bool first = true;
                for (auto [r, s] : ch) {
                    if (!first) out << " <- ";
                    first = false;
                    out << "V(" << r << "," << s << ")";
                }
                out << "\n";
            }
            return 0;
        }

        if (*ind) {
            auto a = ModuleLabel::parse(ind_label, opt.p);
            TripletDecomp d = induce(a);
            if (opt.json_out())
                out << triplet_json(d).dump() << "\n";
            else
                out << "F(" << a.str() << ") = " << d.str() << "\n";
            return 0;
        }

        if (*res) {
            auto a = TripletLabel::parse(res_label, opt.p);
            auto terms = restrict_module(a, res_cutoff);
            if (opt.json_out()) {
                json arr = json::array();
                for (const auto& [x, m] : terms)
                    arr.push_back({{"kind", x.kind_str()}, {"r", x.r}, {"s", x.s}, {"mult", m}});
                json j;
                j["p"] = opt.p;
                j["label"] = a.str();
                j["cutoff"] = res_cutoff;
                j["terms"] = arr;
                out << j.dump() << "\n";
            } else {
                out << "G(" << a.str() << ") = ";
                bool first = true;
                for (const auto& [x, m] : terms) {
                    if (!first) out << " + ";
                    first = false;
                    out << m << "*" << x.str();
                }
                out << " + ...\n";
            }
            return 0;
        }

        if (*ss) {
            auto a = ModuleLabel::parse(ss_labels[0], opt.p);
            auto b = ModuleLabel::parse(ss_labels[1], opt.p);
            Decomp d = ss_tensor(a, b);
            if (opt.json_out())
                out << decomp_json(d).dump() << "\n";
            else
                out << a.str() << " x " << b.str() << " = " << d.str()
                    << "   (in the semisimplification)\n";
            return 0;
        }

        if (*verify) {
            CheckReport rep = check_ring_axioms(opt.p, v_rmax, v_jobs);
            // semisimplification consistency
            for (int r = 1; r <= v_rmax; ++r)
                for (int s = 1; s <= opt.p - 1; ++s)
                    for (int r2 = 1; r2 <= v_rmax; ++r2)
                        for (int s2 = 1; s2 <= opt.p - 1; ++s2) {
                            auto a = ModuleLabel::simple(r, s, opt.p);
                            auto b = ModuleLabel::simple(r2, s2, opt.p);
                            rep.checks++;
                            if (!(semisimplify(tensor(a, b)) == ss_tensor(a, b)))
                                rep.failures.push_back({"semisimplify", opt.p, a.str(), b.str(), "", ""});
                        }
            // monodromy integrality
            for (int r = 1; r <= v_rmax; ++r)
                for (int s = 1; s <= opt.p; ++s)
                    for (int n = 0; n <= 4; ++n)
                        for (int k = 1; k <= std::min(r, 2 * n + 1); ++k) {
                            rep.checks++;
                            try {
                                monodromy_exponent_check(opt.p, r, s, n, k);
                            } catch (const verification_error& e) {
                                rep.failures.push_back({"monodromy", opt.p, "L:" + std::to_string(r) + "," +
                                                        std::to_string(s), std::to_string(n),
                                                        std::to_string(k), e.what()});
                            }
                        }
            rep.merge(check_monoidal(opt.p, v_cutoff));
            for (int r = 1; r <= v_rmax; ++r)
                for (int s = 1; s <= opt.p; ++s) rep.merge(multiplicity_identity_check(opt.p, r, s, 6));

            if (opt.json_out())
                out << rep.to_json_lines();
            else
                out << rep.summary() << "\n";
            if (!rep.ok() && !opt.json_out()) err << rep.to_json_lines();
            return rep.ok() ? 0 : 2;
        }

        if (*bpz) {
            double closed = rigidity_invariant_closed_form(opt.p);
            double series = rigidity_invariant(opt.p);  // throws on route mismatch
            double lt = left_trace_check(opt.p);
            if (opt.json_out()) {
                json j;
                j["p"] = opt.p;
                j["closed_form"] = closed;
                j["series"] = series;
                j["difference"] = series - closed;
                j["left_trace"] = lt;
                out << j.dump() << "\n";
            } else {
                out.precision(15);
                out << "closed form  " << closed << "\n";
                out << "series route " << series << "\n";
                out << "difference   " << series - closed << "\n";
                out << "e o i        " << lt << "\n";
            }
            return 0;
        }
    } catch (const verification_error& e) {
        json j;
        j["error"] = "verification";
        j["what"] = e.what();
        err << j.dump() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << e.what() << "\n";
        return 1;
    }
    err << "no subcommand\n";
    return 1;
}

}  // namespace vircat
