#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "orthant/criterion.hpp"
#include "orthant/hensel.hpp"
#include "orthant/polyhedron.hpp"

namespace orthant {

using json = nlohmann::json;

inline constexpr int kSchemaVersion = 1;

inline json to_json(const FieldCtx& f) {
    json j;
    j["kind"] = f.kind == FieldCtx::Kind::Rationals ? "rationals" : "fp";
    if (f.kind == FieldCtx::Kind::PrimeField) j["p"] = f.p;
    return j;
}

inline json to_json(const RatPoint& p) {
    json j = json::array();
    for (const auto& c : p.c) j.push_back(c.str());
    return j;
}

inline json to_json(const ExpVec& e) {
    json j = json::array();
    for (auto v : e.entries()) j.push_back(v);
    return j;
}

inline json to_json(const DeltaPolyhedron& d) {
    json j;
    j["generators"] = json::array();
    for (const auto& g : d.generators) j["generators"].push_back(to_json(g));
    j["vertices"] = json::array();
    for (const auto& v : d.vertices) {
        json jv;
        jv["point"] = to_json(v.point);
        jv["witness_omega"] = json::array();
        for (const auto& w : v.witness_omega) jv["witness_omega"].push_back(w.str());
        j["vertices"].push_back(std::move(jv));
    }
    return j;
}

inline json to_json(const FaceWitness& f) {
    json j;
    j["a"] = f.apex;
    j["b"] = f.b;
    j["c"] = f.c;
    return j;
}

inline json to_json(const OrthantData& o) {
    json j;
    j["d_gamma"] = to_json(o.d_gamma);
    j["gamma"] = to_json(o.gamma);
    j["beta"] = to_json(o.beta);
    j["q"] = o.q;
    if (o.u) j["u"] = *o.u;
    if (o.m) j["m"] = *o.m;
    return j;
}

inline json to_json(const CheckReport& r) {
    json j;
    j["ok"] = r.ok;
    j["congruence_order"] = r.congruence_order;
    j["seeds_coprime"] = r.seeds_coprime;
    j["lattice_ok"] = r.lattice_ok;
    j["recomposition_ok"] = r.recomposition_ok;
    j["stage_violations"] = r.stage_violations;
    if (!r.first_mismatch.empty()) j["first_mismatch"] = r.first_mismatch;
    return j;
}

template <Field K>
json to_json(const Certificate<K>& c, const std::vector<std::string>& names) {
    json j;
    j["f1"] = c.f1.str(names);
    j["f2"] = c.f2.str(names);
    j["q"] = c.q;
    j["beta"] = to_json(c.beta);
    j["order"] = c.order;
    j["lift_order"] = c.lift_order;
    j["checks"] = to_json(c.checks);
    return j;
}

template <Field K>
json to_json(const Verdict<K>& v, const std::vector<std::string>& names) {
    json j;
    j["kind"] = verdict_kind_name(v.kind);
    j["reason"] = v.reason;
    if (v.vertex_witness) {
        j["vertices"] = json::array();
        for (const auto& p : *v.vertex_witness) j["vertices"].push_back(to_json(p));
    }
    if (v.orthant) j["orthant"] = to_json(*v.orthant);
    if (v.q_poly) j["q_poly"] = v.q_poly->str();
    if (v.power_form) {
        j["power_form"] = {{"phi", v.power_form->phi.str()}, {"r", v.power_form->r}};
    }
    if (v.bound_info) {
        j["degree_bound"] = {{"degree", v.bound_info->first}, {"bound", v.bound_info->second}};
    }
    if (v.certificate) j["certificate"] = to_json(*v.certificate, names);
    return j;
}

}  // namespace orthant
