#include "orex/json_io.hpp"
#include "orex/parse.hpp"
#include "orex/selfcheck.hpp"
#include "orex/version.hpp"

#include "CLI11.hpp"

#include <chrono>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace {

using orex::Json;
using orex::Scalar;

// Exit codes: 0 success, 1 classify verdict "not satisfied", 2 input error,
// 3 internal verification failure.
constexpr int kExitNotSatisfied = 1;
constexpr int kExitInputError = 2;
constexpr int kExitVerifyError = 3;

struct Clock {
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    double ms() const {
        const auto now = std::chrono::steady_clock::now();
        return std::chrono::duration<double, std::milli>(now - start).count();
    }
};

void emit(const std::string& command, Json input, Json result, bool as_json,
          const std::string& text, double timing_ms) {
    if (as_json) {
        std::cout << orex::make_report(command, std::move(input), std::move(result),
                                       timing_ms)
                         .dump(2)
                  << "\n";
    } else {
        std::cout << text;
    }
}

Scalar resolve_alpha(const std::string& alpha_text, const orex::Poly& dx) {
    if (!alpha_text.empty()) return orex::parse_scalar(alpha_text);
    const auto witness = orex::d_primitive_witness(dx);
    if (!witness) {
        throw std::invalid_argument(
            "d(x) = 0 vanishes everywhere; pass --alpha explicitly");
    }
    return *witness;
}

std::string yesno(bool v) { return v ? "yes" : "no"; }

int run_classify(const std::string& q_text, const std::string& b_text,
                 const std::string& dx_text, unsigned k, bool as_json) {
    const Clock clock;
    const orex::DerivationSpec spec(orex::parse_scalar(q_text),
                                    orex::parse_scalar(b_text),
                                    orex::parse_poly(dx_text));
    const orex::DiamondVerdict verdict = orex::decide_diamond(spec);

    Json result = describe(verdict);
    std::ostringstream text;
    text << "q = " << spec.q.str() << ", b = " << spec.b.str()
         << ", d(x) = " << spec.dx.str() << "\n";
    const orex::IsoData& iso = verdict.normal_form.iso;
    text << "normal form: " << orex::normal_form_name(verdict.normal_form.kind)
         << " via x' = " << iso.x_new.str() << ", y' = " << iso.y_new.str()
         << ", relation " << iso.relation << "\n";
    text << "finiteness condition: "
         << (verdict.satisfied ? "satisfied" : "not satisfied") << " (reason: "
         << orex::diamond_reason_name(verdict.reason) << ")\n";
    if (verdict.order) text << "sigma order: " << *verdict.order << "\n";
    text << "note: " << verdict.note << "\n";

    if (verdict.reason == orex::DiamondReason::NotLocallyNilpotent) {
        const Scalar alpha = resolve_alpha("", spec.dx);
        const orex::ChainCertificate cert =
            orex::chain_certificate(spec.dx, alpha, k);
        result["witnesses"] = Json{{"descending_chain", describe(cert)}};
        text << "witness chain at alpha = " << alpha.str() << " (length "
             << cert.length << "):";
        for (const orex::ChainLink& link : cert.links) {
            text << (link.index == 1 ? " " : ", ") << link.stable_generator.str();
        }
        text << "\n";
    }

    emit("classify",
         Json{{"q", spec.q.str()},
              {"b", spec.b.str()},
              {"dx", spec.dx.str()},
              {"k", k}},
         std::move(result), as_json, text.str(), clock.ms());
    return verdict.satisfied ? 0 : kExitNotSatisfied;
}

int run_analyze(const std::string& dx_text, const std::string& g_text,
                bool as_json) {
    const Clock clock;
    const orex::DerivationSpec spec(Scalar(1), Scalar(0), orex::parse_poly(dx_text));
    const bool lnd = orex::is_locally_nilpotent(spec);
    const bool simple = orex::is_d_simple(spec);
    const auto witness = orex::d_primitive_witness(spec.dx);

    Json result = {{"dx", spec.dx.str()},
                   {"locally_nilpotent", lnd},
                   {"d_simple", simple}};
    if (witness) {
        result["primitive_witness"] = witness->str();
    } else {
        result["primitive_witness"] = nullptr;
    }
    std::ostringstream text;
    text << "d(x) = " << spec.dx.str() << "\n";
    text << "locally nilpotent: " << yesno(lnd) << "\n";
    text << "d-simple: " << yesno(simple) << "\n";
    text << "primitive witness alpha: " << (witness ? witness->str() : "none")
         << "\n";

    Json input = {{"dx", spec.dx.str()}};
    if (!g_text.empty()) {
        const orex::Poly g = orex::parse_poly(g_text);
        const orex::Poly closure = orex::d_ideal_closure(g, spec);
        input["g"] = g.str();
        result["closure"] = Json{{"g", g.str()}, {"generator", closure.str()}};
        text << "stable closure of (" << g.str() << "): generated by "
             << closure.str() << "\n";
    }

    emit("analyze-derivation", std::move(input), std::move(result), as_json,
         text.str(), clock.ms());
    return 0;
}

int run_witness_chain(const std::string& dx_text, const std::string& alpha_text,
                      unsigned k, bool as_json) {
    const Clock clock;
    const orex::Poly dx = orex::parse_poly(dx_text);
    const Scalar alpha = resolve_alpha(alpha_text, dx);
    const orex::ChainCertificate cert = orex::chain_certificate(dx, alpha, k);

    std::ostringstream text;
    text << "strictly descending stable chain for f = " << dx.str()
         << " at alpha = " << alpha.str() << ", length " << cert.length << ":\n";
    for (const orex::ChainLink& link : cert.links) {
        text << "  level " << link.index << ": generator "
             << link.stable_generator.str() << ", strictly above next: "
             << yesno(link.strictly_above_next) << "\n";
    }
    text << "all links verified\n";

    emit("witness-chain",
         Json{{"dx", dx.str()}, {"alpha", alpha.str()}, {"k", k}},
         describe(cert), as_json, text.str(), clock.ms());
    return 0;
}

int run_essentialize(const std::string& input_text, const std::string& dx_text,
                     const std::string& alpha_text, bool as_json) {
    const Clock clock;
    const orex::DerivationSpec spec(Scalar(1), Scalar(0), orex::parse_poly(dx_text));
    const orex::SkewPoly u = orex::parse_skew(input_text, spec);
    const Scalar alpha = resolve_alpha(alpha_text, spec.dx);
    const orex::EssentialWitness w = orex::essentialize(u, alpha);

    std::ostringstream text;
    text << "input: " << w.input.str() << "\n";
    text << "multiplier: " << w.multiplier.str() << "\n";
    text << "product: " << w.product.str() << "\n";
    text << "shift steps: " << w.shift_steps << "\n";
    text << "verified: product is a theta multiple outside the point ideal at "
            "alpha = "
         << alpha.str() << "\n";

    emit("essentialize",
         Json{{"input", u.str()},
              {"dx", spec.dx.str()},
              {"alpha", alpha.str()}},
         describe(w, alpha), as_json, text.str(), clock.ms());
    return 0;
}

int run_maximality(const std::string& gen_text, const std::string& dx_text,
                   const std::string& alpha_text, unsigned degree_bound,
                   bool as_json) {
    const Clock clock;
    const orex::DerivationSpec spec(Scalar(1), Scalar(0), orex::parse_poly(dx_text));
    const orex::SkewPoly g = orex::parse_skew(gen_text, spec);
    const Scalar alpha = resolve_alpha(alpha_text, spec.dx);
    const auto cert = orex::maximality_certificate(alpha, g, degree_bound);

    const Json input = {{"generator", g.str()},
                        {"dx", spec.dx.str()},
                        {"alpha", alpha.str()},
                        {"degree_bound", degree_bound}};
    if (!cert) {
        std::ostringstream text;
        text << "no cofactor found for g = " << g.str()
             << " through total degree " << degree_bound << "\n";
        emit("maximality", input,
             Json{{"found", false}, {"degree_bound", degree_bound}}, as_json,
             text.str(), clock.ms());
        return 0;
    }

    std::ostringstream text;
    text << "g = " << g.str() << ", alpha = " << alpha.str() << "\n";
    text << "cofactor: " << cert->cofactor.str() << " (found at total degree "
         << cert->search_degree << ")\n";
    text << "verified: cofactor * g reduces to 1 modulo the point ideal\n";

    Json result = describe(*cert);
    result["found"] = true;
    emit("maximality", input, std::move(result), as_json, text.str(), clock.ms());
    return 0;
}

int run_lie_datum(const std::vector<std::string>& image_texts, unsigned iter_bound,
                  bool as_json) {
    const Clock clock;
    const unsigned n = static_cast<unsigned>(image_texts.size());
    std::vector<orex::MPoly> images;
    images.reserve(n);
    for (const std::string& text : image_texts) {
        images.push_back(orex::parse_mpoly(text, n));
    }
    const orex::MultiDerivation d(std::move(images));
    const orex::LocalNilpotency nilp = orex::check_locally_nilpotent(d, iter_bound);
    const orex::LieDatum datum = orex::lie_datum(d, iter_bound);

    Json input = Json::object();
    Json echoed = Json::array();
    for (const orex::MPoly& img : d.images) echoed.push_back(img.str());
    input["images"] = std::move(echoed);
    input["iter_bound"] = iter_bound;

    std::ostringstream text;
    text << "derivation on " << n << " variable(s):";
    for (unsigned j = 0; j < n; ++j) {
        text << (j == 0 ? " " : ", ") << "d(x" << (j + 1)
             << ") = " << d.images[j].str();
    }
    text << "\n";
    if (nilp.kind == orex::LocalNilpotency::Kind::Triangular) {
        text << "locally nilpotent: yes (triangular variable order:";
        for (const unsigned i : nilp.order) text << " x" << (i + 1);
        text << ")\n";
    } else {
        text << "locally nilpotent: yes (all generators die by iteration "
             << nilp.max_iterations << ")\n";
    }
    text << "v-set (" << datum.v_set.size() << "):";
    for (size_t i = 0; i < datum.v_set.size(); ++i) {
        text << (i == 0 ? " " : ", ") << datum.v_set[i].str();
    }
    text << "\n";
    text << "dim h = " << datum.dim_h() << ", dim g = " << datum.dim_g()
         << ", nilpotency class = " << datum.nilpotency_class << "\n";

    emit("lie-datum", std::move(input),
         Json{{"nilpotency", describe(nilp)}, {"datum", describe(datum)}}, as_json,
         text.str(), clock.ms());
    return 0;
}

int run_verify(unsigned long seed, bool as_json) {
    const Clock clock;
    const std::vector<orex::CheckResult> results = orex::run_acceptance_suite(seed);
    const bool passed = orex::all_passed(results);

    Json checks = Json::array();
    std::ostringstream text;
    for (const orex::CheckResult& r : results) {
        checks.push_back(
            {{"name", r.name}, {"passed", r.passed}, {"detail", r.detail}});
        text << (r.passed ? "[PASS] " : "[FAIL] ") << r.name << ": " << r.detail
             << "\n";
    }
    text << (passed ? "all checks passed" : "some checks FAILED") << " (seed "
         << seed << ")\n";

    emit("verify", Json{{"seed", seed}},
         Json{{"seed", seed}, {"passed", passed}, {"checks", std::move(checks)}},
         as_json, text.str(), clock.ms());
    return passed ? 0 : kExitVerifyError;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact arithmetic for skew polynomial rings over K[x]: "
                 "classification, derivation analysis, and witness generation"};
    app.set_version_flag("--version", orex::kVersion);
    app.require_subcommand(1);

    std::string q_text = "1";
    std::string b_text = "0";
    std::string dx_text = "0";
    std::string alpha_text;
    std::string g_text;
    std::string format = "text";
    std::string gen_text;
    std::string input_text;
    std::vector<std::string> image_texts;
    unsigned k = 5;
    unsigned degree_bound = 8;
    unsigned iter_bound = 32;
    unsigned long seed = 20260817;

    const auto add_format = [&](CLI::App* cmd) {
        cmd->add_option("--format", format, "Output format")
            ->check(CLI::IsMember({"text", "json"}))
            ->capture_default_str();
    };

    CLI::App* classify =
        app.add_subcommand("classify", "Decide the injective-hull finiteness "
                                       "condition and name the normal form");
    classify->add_option("--q", q_text, "Twist scalar q")->capture_default_str();
    classify->add_option("--b", b_text, "Twist shift b")->capture_default_str();
    classify->add_option("--dx", dx_text, "Derivation image d(x)")
        ->capture_default_str();
    classify->add_option("--k", k, "Witness chain length")->capture_default_str();
    add_format(classify);

    CLI::App* analyze = app.add_subcommand(
        "analyze-derivation", "Report local nilpotency, simplicity, and stable "
                              "closures for d on K[x]");
    analyze->add_option("--dx", dx_text, "Derivation image d(x)")
        ->capture_default_str();
    analyze->add_option("--g", g_text, "Polynomial whose stable closure to compute");
    add_format(analyze);

    CLI::App* chain = app.add_subcommand(
        "witness-chain", "Produce a strictly descending chain of stable ideals");
    chain->add_option("--dx", dx_text, "Derivation image d(x)")
        ->capture_default_str();
    chain->add_option("--alpha", alpha_text,
                      "Evaluation point (defaults to the least non-root of d(x))");
    chain->add_option("--k", k, "Chain length")->capture_default_str();
    add_format(chain);

    CLI::App* essential = app.add_subcommand(
        "essentialize", "Multiply an element into the theta multiples without "
                        "entering the point ideal");
    essential->add_option("input", input_text, "Skew polynomial in x and t")
        ->required();
    essential->add_option("--dx", dx_text, "Derivation image d(x)")
        ->capture_default_str();
    essential->add_option("--alpha", alpha_text,
                          "Evaluation point (defaults to the least non-root of d(x))");
    add_format(essential);

    CLI::App* maximality = app.add_subcommand(
        "maximality", "Search for a cofactor certifying maximality of the "
                      "point ideal plus a generator");
    maximality->add_option("generator", gen_text, "Skew polynomial in x and t")
        ->required();
    maximality->add_option("--dx", dx_text, "Derivation image d(x)")
        ->capture_default_str();
    maximality
        ->add_option("--alpha", alpha_text,
                     "Evaluation point (defaults to the least non-root of d(x))");
    maximality->add_option("--degree-bound", degree_bound, "Search degree cap")
        ->capture_default_str();
    add_format(maximality);

    CLI::App* lie = app.add_subcommand(
        "lie-datum", "Build the finite-dimensional Lie structure attached to a "
                     "locally nilpotent derivation of K[x1..xn]");
    lie->add_option("images", image_texts,
                    "Images d(x1) d(x2) ... as polynomials in x1..xn")
        ->required();
    lie->add_option("--iter-bound", iter_bound, "Nilpotency iteration bound")
        ->capture_default_str();
    add_format(lie);

    CLI::App* verify = app.add_subcommand(
        "verify", "Run the full exact-arithmetic invariant suite");
    verify->add_option("--seed", seed, "Randomness seed")->capture_default_str();
    add_format(verify);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitInputError;
    }
    const bool as_json = format == "json";

    try {
        if (classify->parsed()) return run_classify(q_text, b_text, dx_text, k, as_json);
        if (analyze->parsed()) return run_analyze(dx_text, g_text, as_json);
        if (chain->parsed())
            return run_witness_chain(dx_text, alpha_text, k, as_json);
        if (essential->parsed())
            return run_essentialize(input_text, dx_text, alpha_text, as_json);
        if (maximality->parsed())
            return run_maximality(gen_text, dx_text, alpha_text, degree_bound,
                                  as_json);
        if (lie->parsed()) return run_lie_datum(image_texts, iter_bound, as_json);
        if (verify->parsed()) return run_verify(seed, as_json);
    } catch (const orex::ParseError& e) {
        std::cerr << "input error: " << e.what() << " (at byte " << e.position()
                  << ")\n";
        return kExitInputError;
    } catch (const std::invalid_argument& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitInputError;
    } catch (const std::logic_error& e) {
        std::cerr << "internal verification failure: " << e.what() << "\n";
        return kExitVerifyError;
    }
    return 0;
}
