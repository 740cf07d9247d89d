// Command line front end. Subcommands operate on workspace files; every
// command exits 0 when all computed verdicts pass, 1 on a failing verdict or
// a refused precondition, 2 on usage or parse errors.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "liecoh/complexes.hpp"
#include "liecoh/duality.hpp"
#include "liecoh/enveloping.hpp"
#include "liecoh/lie_algebra.hpp"
#include "liecoh/sayd.hpp"
#include "liecoh/weil.hpp"
#include "liecoh/workspace.hpp"

using nlohmann::ordered_json;
using namespace liecoh;

namespace {

struct Usage : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Usage("cannot read file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string mat_str(const Mat& m) {
    std::string s = "[";
    for (int r = 0; r < m.rows(); ++r) {
        if (r) s += "; ";
        for (int c = 0; c < m.cols(); ++c) {
            if (c) s += " ";
            s += rat_str(m(r, c));
        }
    }
    return s + "]";
}

ordered_json mat_json(const Mat& m) {
    ordered_json rows = ordered_json::array();
    for (int r = 0; r < m.rows(); ++r) {
        ordered_json row = ordered_json::array();
        for (int c = 0; c < m.cols(); ++c) row.push_back(rat_str(m(r, c)));
        rows.push_back(std::move(row));
    }
    return rows;
}

const char* pf(bool b) { return b ? "pass" : "fail"; }

struct Out {
    ordered_json report;
    std::string report_path;

    void line(const std::string& key, const std::string& value) {
        std::cout << key << ": " << value << "\n";
    }
    void verdict(const std::string& key, bool ok) {
        line(key, pf(ok));
        report[key] = ok;
    }
    void finish() const {
        if (report_path.empty()) return;
        std::ofstream f(report_path, std::ios::binary);
        if (!f) throw Usage("cannot write report: " + report_path);
        f << report.dump(2) << "\n";
    }
};

int cmd_check(const std::string& path, Out& out) {
    Workspace ws = parse_workspace(read_file(path));
    JacobiReport jac = validate_lie_algebra(ws.g);
    ModuleReport mod = check_module(ws.g, ws.mod.action);
    ComoduleReport com = check_comodule(ws.mod.coaction);
    SaydReport sayd = check_sayd(ws.g, ws.mod);
    out.report["command"] = "check";
    out.report["lie_dim"] = ws.g.dim();
    out.report["coefficients"] = ws.coefficients;
    out.report["module_dim"] = ws.mod.action.m;
    out.line("lie", "dim " + std::to_string(ws.g.dim()));
    out.line("coefficients", ws.coefficients + " dim " + std::to_string(ws.mod.action.m));
    out.verdict("jacobi", jac.ok);
    out.verdict("module", mod.ok);
    out.verdict("comodule", com.commuting);
    out.line("conilpotent", com.conilpotent ? "yes (index " + std::to_string(com.conilpotency_index) + ")" : "no");
    out.report["conilpotent"] = com.conilpotent;
    out.verdict("ayd", sayd.ayd);
    out.verdict("stability", sayd.stable);
    out.verdict("unimodular-stability", sayd.unimodular_stable);
    bool all = jac.ok && mod.ok && com.commuting && sayd.ayd && sayd.stable;
    out.verdict("sayd", all && true);
    return all ? 0 : 1;
}

int cmd_solve(const std::string& path, Out& out) {
    Workspace ws = parse_workspace(read_file(path));
    if (!check_module(ws.g, ws.mod.action).ok) throw RefusedError("action is not a right module");
    SolveReport rep = solve_ayd_linear(ws.g, ws.mod.action, ws.seed);
    out.report["command"] = "solve-sayd";
    out.report["unknowns"] = ws.g.dim() * ws.mod.action.m * ws.mod.action.m;
    out.report["dim"] = rep.dim;
    out.line("unknowns", std::to_string(ws.g.dim() * ws.mod.action.m * ws.mod.action.m));
    out.line("dim", std::to_string(rep.dim));
    std::string q = rep.quadratic.identically_commutative
                        ? std::string("commutative (") + (rep.quadratic.symbolic ? "symbolic" : "sampled") + ")"
                        : "obstructed";
    out.line("quadratic", q);
    out.report["quadratic_commutative"] = rep.quadratic.identically_commutative;
    out.report["quadratic_symbolic"] = rep.quadratic.symbolic;
    ordered_json basis = ordered_json::array();
    for (int a = 0; a < rep.dim; ++a) {
        ordered_json elem = ordered_json::array();
        for (int j = 0; j < ws.g.dim(); ++j) {
            out.line("S" + std::to_string(a + 1) + " A" + std::to_string(j + 1), mat_str(rep.basis[a].A[j]));
            elem.push_back(mat_json(rep.basis[a].A[j]));
        }
        basis.push_back(std::move(elem));
    }
    out.report["basis"] = std::move(basis);
    return 0;
}

int cmd_cohomology(const std::string& path, bool chain, int hc_smax, Out& out) {
    Workspace ws = parse_workspace(read_file(path));
    out.report["command"] = "cohomology";
    if (hc_smax >= 0) {
        TotalComplexReport rep = total_complexes(ws.g, ws.mod, hc_smax);
        out.line("complex", "cyclic staircase");
        out.report["complex"] = "cyclic";
        ordered_json dims = ordered_json::array(), betti = ordered_json::array();
        for (int s = 0; s <= hc_smax; ++s) {
            out.line("HC^" + std::to_string(s),
                     std::to_string(rep.hc_betti[s]) + " (space dim " + std::to_string(rep.hc_dims[s]) + ")");
            dims.push_back(rep.hc_dims[s]);
            betti.push_back(rep.hc_betti[s]);
        }
        out.report["dims"] = std::move(dims);
        out.report["betti"] = std::move(betti);
        return 0;
    }
    std::vector<int> betti = chain ? ce_chain_betti(ws.g, ws.mod) : ce_cochain_betti(ws.g, ws.mod);
    out.line("complex", chain ? "chain" : "cochain");
    out.report["complex"] = chain ? "chain" : "cochain";
    ordered_json arr = ordered_json::array();
    for (int p = 0; p < int(betti.size()); ++p) {
        out.line(chain ? "H_" + std::to_string(p) : "H^" + std::to_string(p), std::to_string(betti[p]));
        arr.push_back(betti[p]);
    }
    out.report["betti"] = std::move(arr);
    return 0;
}

int cmd_hp(const std::string& path, Out& out) {
    Workspace ws = parse_workspace(read_file(path));
    TotalComplexReport rep = total_complexes(ws.g, ws.mod, 1);
    out.report["command"] = "hp";
    out.line("dim-even", std::to_string(rep.hp_dims[0]));
    out.line("dim-odd", std::to_string(rep.hp_dims[1]));
    out.line("HP-even", std::to_string(rep.hp_betti[0]));
    out.line("HP-odd", std::to_string(rep.hp_betti[1]));
    out.report["dims"] = {rep.hp_dims[0], rep.hp_dims[1]};
    out.report["betti"] = {rep.hp_betti[0], rep.hp_betti[1]};
    return 0;
}

int cmd_duality(const std::string& path, Out& out) {
    Workspace ws = parse_workspace(read_file(path));
    DualityReport rep = duality_check(ws.g, ws.mod);
    out.report["command"] = "duality";
    out.verdict("invertible", rep.invertible);
    out.verdict("ce-transport", rep.ce_ok);
    std::string signs;
    ordered_json sgn_arr = ordered_json::array();
    for (int p = 0; p < rep.n; ++p) {
        if (p) signs += " ";
        signs += std::to_string(rep.ce_signs[p]);
        sgn_arr.push_back(rep.ce_signs[p]);
    }
    out.line("ce-signs", signs.empty() ? "-" : signs);
    out.report["ce_signs"] = std::move(sgn_arr);
    out.verdict("koszul-transport", rep.koszul_ok);
    auto dims_line = [&](const char* key, const std::vector<int>& v) {
        std::string s;
        ordered_json arr = ordered_json::array();
        for (std::size_t i = 0; i < v.size(); ++i) {
            if (i) s += " ";
            s += std::to_string(v[i]);
            arr.push_back(v[i]);
        }
        out.line(key, s);
        out.report[key] = std::move(arr);
    };
    dims_line("betti-cochain", rep.cochain_betti);
    dims_line("betti-chain-twisted", rep.twisted_chain_betti);
    out.verdict("betti-symmetric", rep.betti_symmetric);
    out.verdict("duality", rep.ok());
    return rep.ok() ? 0 : 1;
}

int cmd_weil(const std::string& path, int cap, Out& out) {
    Workspace ws = parse_workspace(read_file(path));
    TruncatedWeil w = build_truncated_weil(ws.g, cap);
    ModuleReport mod = check_module(ws.g, w.mod.action);
    ComoduleReport com = check_comodule(w.mod.coaction);
    SaydReport sayd = check_sayd(ws.g, w.mod);
    out.report["command"] = "weil";
    out.report["cap"] = cap;
    out.report["dim"] = w.basis.size();
    out.line("cap", std::to_string(cap));
    out.line("dim", std::to_string(w.basis.size()));
    out.verdict("module", mod.ok);
    out.verdict("comodule", com.commuting);
    out.line("conilpotent", com.conilpotent ? "yes (index " + std::to_string(com.conilpotency_index) + ")" : "no");
    out.report["conilpotent"] = com.conilpotent;
    out.verdict("ayd", sayd.ayd);
    out.verdict("stability", sayd.stable);
    out.verdict("unimodular-stability", sayd.unimodular_stable);
    ordered_json bj = ordered_json::array(), aj = ordered_json::array();
    for (int j = 0; j < ws.g.dim(); ++j) {
        out.line("B" + std::to_string(j + 1), mat_str(w.mod.action.B[j]));
        bj.push_back(mat_json(w.mod.action.B[j]));
    }
    for (int j = 0; j < ws.g.dim(); ++j) {
        out.line("A" + std::to_string(j + 1), mat_str(w.mod.coaction.A[j]));
        aj.push_back(mat_json(w.mod.coaction.A[j]));
    }
    out.report["B"] = std::move(bj);
    out.report["A"] = std::move(aj);
    bool ok = mod.ok && com.commuting && sayd.ayd && sayd.unimodular_stable;
    return ok ? 0 : 1;
}

struct UgFlags {
    bool simplicial = false, cyclic = false, bB = false, filtration = false, antisym = false;
    int count = 20;
    long seed = -1;
    int qcap = -1;
    std::string reading = "r4";
};

int cmd_ug_verify(const std::string& path, const UgFlags& fl, Out& out) {
    Workspace ws = parse_workspace(read_file(path));
    std::uint64_t seed = fl.seed >= 0 ? std::uint64_t(fl.seed) : ws.seed;
    int qcap = fl.qcap >= 0 ? fl.qcap : ws.qcap;
    BReading reading = BReading::R4;
    if (fl.reading == "r1") reading = BReading::R1;
    else if (fl.reading == "r2") reading = BReading::R2;
    else if (fl.reading == "r3") reading = BReading::R3;
    else if (fl.reading != "r4") throw Usage("unknown reading '" + fl.reading + "' (r1..r4)");
    bool any = fl.simplicial || fl.cyclic || fl.bB || fl.filtration || fl.antisym;
    bool do_simp = fl.simplicial || !any;
    bool do_cyc = fl.cyclic || !any;
    bool do_bB = fl.bB || !any;
    bool do_filt = fl.filtration || !any;

    CyclicSpace sp = make_cyclic_space(ws.g, ws.mod);
    out.report["command"] = "ug-verify";
    out.report["seed"] = seed;
    out.report["qcap"] = qcap;
    out.report["reading"] = fl.reading;
    out.line("extension-components", std::to_string(sp.coact.comp.size()));
    out.report["extension_components"] = sp.coact.comp.size();

    bool ok = true;
    bool coass = check_ug_coassociative(sp.coact);
    out.verdict("extension-coassociative", coass);
    ok = ok && coass;
    CoactionMatrices back = restrict_coaction(sp.coact);
    bool roundtrip = true;
    for (int j = 0; j < ws.g.dim(); ++j)
        if (back.A[j] != ws.mod.coaction.A[j]) roundtrip = false;
    out.verdict("restrict-roundtrip", roundtrip);
    ok = ok && roundtrip;
    bool ustab = ug_stability_defect(sp).is_zero();
    out.verdict("ug-stability", ustab);
    ok = ok && ustab;

    std::vector<ChainTensor> samples;
    auto samples_at = [&](int q) { return seeded_tensors(sp, q, fl.count, seed); };
    if (do_simp) {
        bool pass = true;
        for (int q = 0; q <= qcap; ++q) pass = pass && check_simplicial(sp, samples_at(q)).ok();
        out.verdict("simplicial", pass);
        ok = ok && pass;
    }
    if (do_cyc) {
        bool pass = true;
        for (int q = 1; q <= qcap; ++q) pass = pass && check_cyclic(sp, samples_at(q)).ok();
        out.verdict("cyclic", pass);
        ok = ok && pass;
    }
    if (do_bB) {
        bool pass = true;
        for (int q = 0; q <= qcap; ++q) pass = pass && check_b_B(sp, samples_at(q), reading).ok();
        out.verdict("bB", pass);
        ok = ok && pass;
    }
    if (do_filt) {
        FiltrationReport rep = check_filtration_behaviour(sp, ws.mod.coaction, qcap, fl.count, seed, reading);
        std::string dims;
        ordered_json arr = ordered_json::array();
        for (std::size_t i = 0; i < rep.level_dims.size(); ++i) {
            if (i) dims += " ";
            dims += std::to_string(rep.level_dims[i]);
            arr.push_back(rep.level_dims[i]);
        }
        out.line("filtration-levels", dims.empty() ? "-" : dims);
        out.report["filtration_levels"] = std::move(arr);
        out.verdict("filtration-exhaustive", rep.exhaustive);
        out.verdict("filtration-koszul-drops", rep.koszul_drops);
        out.verdict("filtration-ops-preserve", rep.ops_preserve);
        ok = ok && rep.ok();
    }
    if (fl.antisym) {
        AntisymReport rep = check_antisym_chain_map(sp, ws.g, ws.mod, std::min(qcap + 1, ws.g.dim()), reading);
        out.verdict("antisym-b-kills", rep.b_kills);
        out.verdict("antisym-B-transports", rep.B_transports);
        ok = ok && rep.ok();
    }
    out.verdict("ug-verify", ok);
    return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact cyclic and periodic (co)homology for Lie algebra coefficient modules"};
    app.require_subcommand(1);

    std::string ws_path, report_path;
    bool chain = false;
    int hc_smax = -1, weil_cap = -1;
    UgFlags ug;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("workspace", ws_path, "workspace file")->required();
        sub->add_option("--report", report_path, "write a JSON report to this path");
    };

    CLI::App* c_check = app.add_subcommand("check", "verify module, comodule and stability laws");
    add_common(c_check);
    CLI::App* c_solve = app.add_subcommand("solve-sayd", "solve the linear stability conditions for the action");
    add_common(c_solve);
    CLI::App* c_coh = app.add_subcommand("cohomology", "Betti numbers of the coefficient complexes");
    add_common(c_coh);
    c_coh->add_flag("--chain", chain, "use the chain-side complex (default: cochain)");
    c_coh->add_option("--hc", hc_smax, "cyclic staircase Betti numbers up to this total degree");
    CLI::App* c_hp = app.add_subcommand("hp", "2-periodic Betti numbers");
    add_common(c_hp);
    CLI::App* c_dual = app.add_subcommand("duality", "transport between cochain and twisted chain complexes");
    add_common(c_dual);
    CLI::App* c_weil = app.add_subcommand("weil", "build and verify the truncated polynomial coefficients");
    add_common(c_weil);
    c_weil->add_option("--cap", weil_cap, "maximal total degree kept")->required();
    CLI::App* c_ug = app.add_subcommand("ug-verify", "enveloping-level cyclic structure checks");
    add_common(c_ug);
    c_ug->add_flag("--simplicial", ug.simplicial, "face and degeneracy identities");
    c_ug->add_flag("--cyclic", ug.cyclic, "cyclic operator identities");
    c_ug->add_flag("--bB", ug.bB, "b and B boundary identities");
    c_ug->add_flag("--filtration", ug.filtration, "coaction filtration behaviour");
    c_ug->add_flag("--antisym", ug.antisym, "antisymmetrization chain map");
    c_ug->add_option("--count", ug.count, "sample tensors per level (default 20)");
    c_ug->add_option("--seed", ug.seed, "override the workspace seed");
    c_ug->add_option("--qcap", ug.qcap, "override the workspace level cap");
    c_ug->add_option("--reading", ug.reading, "degree-lowering boundary reading (r1..r4, default r4)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 2;
    }

    Out out;
    out.report_path = report_path;
    out.report["version"] = "1";
    int rc = 0;
    try {
        if (c_check->parsed()) rc = cmd_check(ws_path, out);
        else if (c_solve->parsed()) rc = cmd_solve(ws_path, out);
        else if (c_coh->parsed()) rc = cmd_cohomology(ws_path, chain, hc_smax, out);
        else if (c_hp->parsed()) rc = cmd_hp(ws_path, out);
        else if (c_dual->parsed()) rc = cmd_duality(ws_path, out);
        else if (c_weil->parsed()) rc = cmd_weil(ws_path, weil_cap, out);
        else if (c_ug->parsed()) rc = cmd_ug_verify(ws_path, ug, out);
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const Usage& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const RefusedError& e) {
        std::cerr << "refused: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    try {
        out.finish();
    } catch (const Usage& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return rc;
}
