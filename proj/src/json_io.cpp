#include "orex/json_io.hpp"

#include "orex/version.hpp"

namespace orex {

namespace {

Json json_links(const std::vector<ChainLink>& links) {
    Json out = Json::array();
    for (const ChainLink& link : links) {
        out.push_back({{"index", link.index},
                       {"element", link.element.str()},
                       {"stable_generator", link.stable_generator.str()},
                       {"strictly_above_next", link.strictly_above_next}});
    }
    return out;
}

Json json_polys(const std::vector<MPoly>& polys) {
    Json out = Json::array();
    for (const MPoly& p : polys) out.push_back(p.str());
    return out;
}

}  // namespace

Json describe(const DerivationSpec& spec) {
    return {{"q", spec.q.str()}, {"b", spec.b.str()}, {"dx", spec.dx.str()}};
}

Json describe(const NormalForm& form) {
    Json iso = {{"x_new", form.iso.x_new.str()},
                {"y_new", form.iso.y_new.str()},
                {"p", form.iso.p.str()},
                {"r", form.iso.r.str()},
                {"relation", form.iso.relation}};
    return {{"kind", normal_form_name(form.kind)},
            {"q", form.q.str()},
            {"dx", form.dx.str()},
            {"iso", std::move(iso)}};
}

Json describe(const DiamondVerdict& verdict) {
    Json out = {{"satisfied", verdict.satisfied},
                {"reason", diamond_reason_name(verdict.reason)}};
    if (verdict.order) {
        out["sigma_order"] = *verdict.order;
    } else {
        out["sigma_order"] = nullptr;
    }
    out["normal_form"] = describe(verdict.normal_form);
    out["note"] = verdict.note;
    return out;
}

Json describe(const EssentialWitness& witness, const Scalar& alpha) {
    const SkewPoly& product = witness.product;
    const bool in_s_theta = product.constant_coeff().is_zero();
    const bool outside_ideal = !in_theta_point_ideal(product, alpha);
    return {{"type", "essential_multiplier"},
            {"spec", describe(witness.multiplier.spec())},
            {"alpha", alpha.str()},
            {"data",
             {{"input", witness.input.str()},
              {"multiplier", witness.multiplier.str()},
              {"product", product.str()},
              {"shift_steps", witness.shift_steps}}},
            {"verification",
             {{"product_equals_multiplier_times_input",
               witness.multiplier * witness.input == product},
              {"product_in_theta_multiples", in_s_theta},
              {"product_outside_point_ideal", outside_ideal}}}};
}

Json describe(const ChainCertificate& cert) {
    const DerivationSpec spec(Scalar(1), Scalar(0), cert.f);
    bool closures_ok = true;
    bool strict_ok = true;
    for (const ChainLink& link : cert.links) {
        closures_ok =
            closures_ok && d_ideal_closure(link.element, spec) == link.stable_generator;
        strict_ok = strict_ok && !divides(link.element * cert.f, link.element);
    }
    return {{"type", "descending_chain"},
            {"spec", describe(spec)},
            {"alpha", cert.alpha.str()},
            {"data",
             {{"f", cert.f.str()}, {"length", cert.length}, {"links", json_links(cert.links)}}},
            {"verification",
             {{"stable_closures_match", closures_ok},
              {"inclusions_strict", strict_ok}}}};
}

Json describe(const MaximalityCertificate& cert) {
    const std::vector<Scalar> residue = reduce_at(cert.cofactor * cert.g, cert.alpha);
    const bool residue_is_one = residue.size() == 1 && residue[0] == Scalar(1);
    return {{"type", "maximality_cofactor"},
            {"spec", describe(cert.g.spec())},
            {"alpha", cert.alpha.str()},
            {"data",
             {{"g", cert.g.str()},
              {"cofactor", cert.cofactor.str()},
              {"search_degree", cert.search_degree}}},
            {"verification", {{"residue_is_one", residue_is_one}}}};
}

Json describe(const LocalNilpotency& result) {
    switch (result.kind) {
        case LocalNilpotency::Kind::Triangular: {
            Json order = Json::array();
            for (const unsigned i : result.order) order.push_back(i);
            return {{"certified", true},
                    {"kind", "triangular"},
                    {"variable_order", std::move(order)}};
        }
        case LocalNilpotency::Kind::Nilpotent:
            return {{"certified", true},
                    {"kind", "nilpotent"},
                    {"max_iterations", result.max_iterations}};
        case LocalNilpotency::Kind::NotNilpotentWithinBound:
            return {{"certified", false}, {"kind", "not_nilpotent_within_bound"}};
    }
    return {};
}

Json describe(const LieDatum& datum) {
    return {{"v_set", json_polys(datum.v_set)},
            {"basis_h", json_polys(datum.basis_h)},
            {"dim_h", datum.dim_h()},
            {"dim_g", datum.dim_g()},
            {"nilpotency_class", datum.nilpotency_class},
            {"note", "dimensions and spans are over the rational scalars"}};
}

Json make_report(const std::string& command, Json input, Json result,
                 double timing_ms) {
    return {{"tool", "orex"},
            {"version", kVersion},
            {"command", command},
            {"input", std::move(input)},
            {"result", std::move(result)},
            {"timing_ms", timing_ms}};
}

}  // namespace orex
