#include "chambercoh/report.hpp"

namespace chambercoh {

std::string chamber_label(int index) { return "C" + std::to_string(index); }

namespace {

Json indices_1based(const std::vector<int>& v) {
    Json out = Json::array();
    for (int i : v) out.push_back(i + 1);
    return out;
}

Json edge_json(const EdgeAtInfinity& e) {
    if (e.is_h_infinity()) return "H_infinity";
    Json out;
    out["direction"] = e.point.normal.str();
    out["lines"] = indices_1based(e.point.members);
    return out;
}

}  // namespace

Json arrangement_summary(const Arrangement& a) {
    Json out;
    out["name"] = a.name();
    out["n"] = a.size();
    Json lines = Json::array();
    for (const auto& l : a.lines()) lines.push_back(l.str());
    out["lines"] = lines;
    Json pts = Json::array();
    for (const auto& p : a.intersection_points()) {
        Json pt;
        pt["x"] = p.x.str();
        pt["y"] = p.y.str();
        pt["lines"] = indices_1based(p.incident);
        pts.push_back(pt);
    }
    out["intersection_points"] = pts;
    auto dense = a.dense_edges();
    Json d;
    Json aff = Json::array();
    for (const auto& p : dense.affine_dense) {
        Json pt;
        pt["x"] = p.x.str();
        pt["y"] = p.y.str();
        pt["lines"] = indices_1based(p.incident);
        aff.push_back(pt);
    }
    d["affine"] = aff;
    Json inf = Json::array();
    for (const auto& x : dense.infinity_dense) {
        Json e;
        e["direction"] = x.normal.str();
        e["lines"] = indices_1based(x.members);
        inf.push_back(e);
    }
    d["infinity"] = inf;
    d["h_infinity"] = dense.h_infinity_dense;
    out["dense_edges"] = d;
    auto b = a.betti_numbers();
    out["betti"] = Json::array({b[0], b[1], b[2]});
    return out;
}

Json chambers_json(const Arrangement& a, const ChamberSet& cs) {
    Json rows = Json::array();
    for (int i = 0; i < int(cs.size()); ++i) {
        const Chamber& c = cs.at(i);
        Json row;
        row["index"] = i;
        row["label"] = chamber_label(i);
        row["sign"] = c.sign.str();
        row["witness"] = Json::array({c.wx.str(), c.wy.str()});
        row["kind"] = c.bounded() ? "bounded" : (c.narrow() ? "narrow" : "wide");
        if (!c.bounded()) {
            row["x_at_infinity"] = edge_json(*c.x_infinity);
            row["opposite"] = opposite(a, cs, i);
        }
        rows.push_back(row);
    }
    Json out;
    out["count"] = cs.size();
    out["bounded"] = cs.bounded_count();
    out["chambers"] = rows;
    return out;
}

Json flag_json(const Flag& f) {
    Json out;
    out["direction"] = Json::array(
        {f.f1_direction.first.get_str(), f.f1_direction.second.get_str()});
    out["f1_offset"] = f.f1_offset.str();
    out["f0"] = Json::array({f.f0x.str(), f.f0y.str()});
    Json crossings = Json::array();
    for (size_t i = 0; i < f.crossing_lines.size(); ++i) {
        Json c;
        c["line"] = f.crossing_lines[i] + 1;
        c["tau"] = f.crossing_tau[i].str();
        crossings.push_back(c);
    }
    out["crossings"] = crossings;
    return out;
}

Json decomposition_json(const ChamberSet& cs, const FlagDecomposition& dec) {
    auto labels = [&](const std::vector<int>& v) {
        Json out = Json::array();
        for (int c : v) out.push_back(chamber_label(c));
        return out;
    };
    Json out;
    out["ch0"] = Json::array({chamber_label(dec.c0)});
    out["ch1"] = labels(dec.ch1);
    out["ch2"] = labels(dec.ch2);
    out["bch0"] = Json::array({chamber_label(dec.c0)});
    out["uch0"] = Json::array();
    out["bch1"] = labels(dec.bch1);
    out["uch1"] = labels(dec.uch1);
    out["bch2"] = labels(dec.bch2);
    out["uch2"] = labels(dec.uch2);
    Json walls = Json::array();
    for (size_t i = 0; i < dec.ch1.size(); ++i) {
        Json w;
        w["chamber"] = chamber_label(dec.ch1[i]);
        w["lines"] = indices_1based(dec.walls1[i]);
        walls.push_back(w);
    }
    out["walls"] = walls;
    out["sizes"] = Json::array({1, dec.ch1.size(), dec.ch2.size()});
    out["bch_sizes"] = Json::array({1, dec.bch1.size(), dec.bch2.size()});
    out["uch_sizes"] = Json::array({0, dec.uch1.size(), dec.uch2.size()});
    return out;
}

Json matrices_json(const Arrangement& a, const FlagDecomposition& dec,
                   const CoboundaryMatrices& mats, const ReducedMatrix& red) {
    (void)a;
    auto labels = [&](const std::vector<int>& v) {
        Json out = Json::array();
        for (int c : v) out.push_back(chamber_label(c));
        return out;
    };
    Json out;
    Json d0;
    d0["columns"] = labels(dec.ch1);
    Json row0 = Json::array();
    for (const auto& p : mats.d0) row0.push_back(p.str());
    d0["entries"] = row0;
    out["d0"] = d0;
    Json d1;
    d1["rows"] = labels(dec.ch1);
    d1["columns"] = labels(dec.ch2);
    Json rows = Json::array();
    for (const auto& r : mats.d1) {
        Json row = Json::array();
        for (const auto& p : r) row.push_back(p.str());
        rows.push_back(row);
    }
    d1["entries"] = rows;
    out["d1"] = d1;
    Json rd;
    rd["rows"] = labels(red.rows);
    rd["columns"] = labels(red.cols);
    Json rrows = Json::array();
    for (const auto& r : red.m) {
        Json row = Json::array();
        for (const auto& p : r) row.push_back(p.str());
        rrows.push_back(row);
    }
    rd["entries"] = rrows;
    out["reduced"] = rd;
    return out;
}

Json cohomology_json(const CohomologyReport& rep) {
    Json out;
    out["h"] = Json::array({rep.h0, rep.h1, rep.h2});
    out["rank_d0"] = rep.rank_d0;
    out["rank_d1"] = rep.rank_d1;
    out["cdo_holds"] = rep.cdo_holds;
    out["dt_holds"] = rep.dt_holds;
    out["bounded_basis_holds"] = rep.bounded_basis_holds;
    out["indecomposable"] = rep.indecomposable;
    out["euler_check"] = rep.euler_check;
    out["generic"] = rep.generic;
    return out;
}

Json verdict_json(const MainTheoremVerdict& v) {
    Json out;
    out["indecomposable"] = v.indecomposable;
    out["i"] = v.i;
    out["ii"] = v.ii;
    out["iii"] = v.iii;
    if (v.indecomposable) out["equivalent"] = v.equivalent;
    out["implications_hold"] = v.implications_hold;
    return out;
}

Json suite_json(const SuiteSummary& s) {
    Json out;
    out["cases"] = s.cases;
    out["ok"] = s.ok();
    Json checks;
    checks["zaslavsky_failures"] = s.zaslavsky_failures;
    checks["involution_failures"] = s.involution_failures;
    checks["dense_edge_match_failures"] = s.dense_edge_match_failures;
    checks["counting_failures"] = s.counting_failures;
    checks["d_squared_failures"] = s.d_squared_failures;
    checks["degree_sign_failures"] = s.degree_sign_failures;
    checks["reduced_shape_failures"] = s.reduced_shape_failures;
    checks["det_checked"] = s.det_checked;
    checks["det_failures"] = s.det_failures;
    checks["sample_failures"] = s.sample_failures;
    checks["vanishing_checked"] = s.thm_vanishing_checked;
    checks["vanishing_failures"] = s.thm_vanishing_failures;
    checks["equivalence_checked"] = s.thm_equivalence_checked;
    checks["equivalence_failures"] = s.thm_equivalence_failures;
    checks["trivial_failures"] = s.trivial_failures;
    checks["euler_failures"] = s.euler_failures;
    checks["bound_failures"] = s.bound_failures;
    checks["metamorphic_failures"] = s.metamorphic_failures;
    out["checks"] = checks;
    Json msgs = Json::array();
    for (const auto& m : s.messages) msgs.push_back(m);
    out["messages"] = msgs;
    return out;
}

}  // namespace chambercoh
