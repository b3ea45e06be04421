// Command-line front end.
//
// Machine-readable JSON goes to standard output; a short human-readable
// summary goes to standard error. Exit codes: 0 success (verify-paper: all
// pass), 1 computation failure, 2 bad input.

#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "k3/curve.hpp"
#include "k3/gram.hpp"
#include "k3/io.hpp"
#include "k3/monomial.hpp"
#include "k3/polytope.hpp"
#include "k3/recognize.hpp"
#include "k3/report.hpp"
#include "k3/toric.hpp"

using namespace k3;

namespace {

void emit(const json& j, const std::string& summary) {
    std::cout << j.dump(2) << "\n";
    std::cerr << summary << "\n";
}

int cmd_polytope_dual(const std::string& file) {
    auto p = polytope_from_json(load_json_file(file));
    auto d = polar_dual(p);
    json j;
    j["integral"] = d.integral;
    json verts = json::array();
    for (const auto& v : d.dual_vertices) {
        json row = json::array();
        for (int i = 0; i < 3; ++i) row.push_back(rat_str(v.coords[i]));
        verts.push_back(row);
    }
    j["dual_vertices"] = verts;
    if (d.integral) j["dual"] = polytope_to_json(*d.polytope);
    emit(j, d.integral ? "polar dual is a lattice polytope with " +
                             std::to_string(d.polytope->vertices.size()) + " vertices"
                       : "polar dual has non-integral vertices");
    return 0;
}

int cmd_polytope_reflexive(const std::string& file) {
    auto p = polytope_from_json(load_json_file(file));
    bool r = is_reflexive(p);
    emit(json{{"reflexive", r}}, r ? "reflexive" : "not reflexive");
    return 0;
}

int cmd_polytope_points(const std::string& file) {
    auto p = polytope_from_json(load_json_file(file));
    json pts = json::array();
    for (const auto& q : p.lattice_points()) {
        json row = json::array();
        for (int i = 0; i < 3; ++i) row.push_back(q.coords[i].str());
        pts.push_back(row);
    }
    json j{{"count", p.lattice_points().size()}, {"points", pts}};
    emit(j, std::to_string(p.lattice_points().size()) + " lattice points");
    return 0;
}

int cmd_k3_picard(const std::string& file) {
    auto doc = load_json_file(file);
    auto p = polytope_from_json(doc);
    auto order = node_order_from_json(doc);
    Int l0 = rank_L0(p);
    Int rho = picard_rank(p);
    auto basis = picard_gram(build_intersection_graph(p, order), p);
    auto rec = recognize(basis.gram);
    json j;
    j["rank_L0"] = l0.str();
    j["picard_rank"] = rho.str();
    j["gram"] = mat_to_json(basis.gram);
    j["recognized"] = json{{"level", match_level_str(rec.level)}, {"name", rec.name}};
    emit(j, "picard rank " + rho.str() +
                (rec.name.empty() ? "" : ", recognized as " + rec.name + " (" +
                                             match_level_str(rec.level) + ")"));
    return 0;
}

int cmd_k3_duality(const std::string& file_s, const std::string& file_t) {
    Mat s = gram_from_json(load_json_file(file_s));
    Mat t = gram_from_json(load_json_file(file_t));
    auto r = check_duality(s, t);
    json j{{"rank_ok", r.rank_ok},
           {"signature_ok", r.signature_ok},
           {"disc_ok", r.disc_ok},
           {"all_ok", r.all_ok()}};
    emit(j, r.all_ok() ? "duality checks pass" : "duality checks fail");
    return 0;
}

int cmd_lattice_invariants(const std::string& file) {
    Mat g = gram_from_json(load_json_file(file));
    auto inv = invariants(g);
    json orders = json::array();
    for (const auto& o : inv.disc.orders) orders.push_back(o.str());
    json q = json::array(), b = json::array();
    for (const auto& x : inv.disc.q) q.push_back(rat_str(x));
    for (const auto& x : inv.disc.b) b.push_back(rat_str(x));
    json j;
    j["rank"] = inv.rank;
    j["signature"] = json::array({inv.signature.first, inv.signature.second});
    j["determinant"] = inv.determinant.str();
    j["disc"] = json{{"orders", orders}, {"q", q}, {"b", b}};
    emit(j, "rank " + std::to_string(inv.rank) + ", signature (" +
                std::to_string(inv.signature.first) + "," +
                std::to_string(inv.signature.second) + "), det " + inv.determinant.str());
    return 0;
}

int cmd_lattice_recognize(const std::string& file) {
    Mat g = gram_from_json(load_json_file(file));
    auto r = recognize(g);
    json j{{"level", match_level_str(r.level)}, {"name", r.name}};
    if (r.witness) j["witness"] = mat_to_json(*r.witness);
    emit(j, r.name.empty() ? "no catalog match" : r.name + " (" + match_level_str(r.level) + ")");
    return 0;
}

int cmd_curve_classify(const std::string& file) {
    auto c = curve_from_json(load_json_file(file));
    auto F = expand_torus(c.f2, c.f3);
    auto pts = c.points.empty() ? rational_singular_points(F) : c.points;
    json arr = json::array();
    std::string summary;
    for (const auto& p : pts) {
        auto rep = classify_ade(F, p);
        arr.push_back(json{{"point", proj_point_to_json(p)},
                           {"milnor", rep.milnor},
                           {"corank", rep.corank},
                           {"type", rep.ade_type}});
        if (!summary.empty()) summary += " + ";
        summary += rep.ade_type;
    }
    json j{{"singular_points", arr}};
    emit(j, summary.empty() ? "no rational singular points found" : summary);
    return 0;
}

int cmd_verify_paper(bool as_json) {
    auto rep = verify_paper();
    if (as_json) {
        json arr = json::array();
        for (const auto& c : rep.claims)
            arr.push_back(json{{"id", c.id},
                               {"description", c.description},
                               {"expected", c.expected},
                               {"computed", c.computed},
                               {"status", c.status}});
        json j{{"claims", arr},
               {"total", rep.claims.size()},
               {"pass", rep.passed()},
               {"fail", rep.failed()},
               {"computed_with_note", rep.noted()}};
        std::cout << j.dump(2) << "\n";
    } else {
        for (const auto& c : rep.claims)
            std::cout << c.status << "\t" << c.id << "\t" << c.expected << "\t" << c.computed
                      << "\n";
    }
    std::cerr << rep.claims.size() << " claims: " << rep.passed() << " pass, " << rep.failed()
              << " fail, " << rep.noted() << " computed-with-note\n";
    return rep.all_ok() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact lattice-polytope and K3 Picard-lattice toolkit"};
    app.require_subcommand(1);

    std::string file, file2, sub_file;

    auto* polytope = app.add_subcommand("polytope", "polytope operations");
    polytope->require_subcommand(1);
    std::string pd_file, pr_file, pp_file;
    auto* p_dual = polytope->add_subcommand("dual", "polar dual");
    p_dual->add_option("FILE", pd_file, "polytope JSON file")->required();
    auto* p_refl = polytope->add_subcommand("reflexive", "reflexivity check");
    p_refl->add_option("FILE", pr_file, "polytope JSON file")->required();
    auto* p_pts = polytope->add_subcommand("points", "lattice point enumeration");
    p_pts->add_option("FILE", pp_file, "polytope JSON file")->required();

    auto* k3c = app.add_subcommand("k3", "K3 family computations");
    k3c->require_subcommand(1);
    std::string kp_file, kd_s, kd_t;
    auto* k_pic = k3c->add_subcommand("picard", "Picard lattice of the toric family");
    k_pic->add_option("FILE", kp_file, "polytope JSON file")->required();
    auto* k_dual = k3c->add_subcommand("duality", "duality check for a pair of Grams");
    k_dual->add_option("FILE_S", kd_s, "lattice JSON file")->required();
    k_dual->add_option("FILE_T", kd_t, "lattice JSON file")->required();

    auto* lat = app.add_subcommand("lattice", "lattice operations");
    lat->require_subcommand(1);
    std::string li_file, lr_file;
    auto* l_inv = lat->add_subcommand("invariants", "rank/signature/determinant/disc form");
    l_inv->add_option("FILE", li_file, "lattice JSON file")->required();
    auto* l_rec = lat->add_subcommand("recognize", "catalog recognition");
    l_rec->add_option("FILE", lr_file, "lattice JSON file")->required();

    auto* curve = app.add_subcommand("curve", "torus-type sextic operations");
    curve->require_subcommand(1);
    std::string cc_file;
    auto* c_cls = curve->add_subcommand("classify", "classify singular points");
    c_cls->add_option("FILE", cc_file, "curve JSON file")->required();

    bool vp_json = false;
    auto* vp = app.add_subcommand("verify-paper", "recompute and check every published claim");
    vp->add_flag("--json", vp_json, "emit the report as JSON");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (p_dual->parsed()) return cmd_polytope_dual(pd_file);
        if (p_refl->parsed()) return cmd_polytope_reflexive(pr_file);
        if (p_pts->parsed()) return cmd_polytope_points(pp_file);
        if (k_pic->parsed()) return cmd_k3_picard(kp_file);
        if (k_dual->parsed()) return cmd_k3_duality(kd_s, kd_t);
        if (l_inv->parsed()) return cmd_lattice_invariants(li_file);
        if (l_rec->parsed()) return cmd_lattice_recognize(lr_file);
        if (c_cls->parsed()) return cmd_curve_classify(cc_file);
        if (vp->parsed()) return cmd_verify_paper(vp_json);
    } catch (const InputError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const DegenerateInput& e) {
        // a polytope file that cannot define a 3-dimensional body is bad input
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const ComputationError& e) {
        std::cerr << "computation error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
