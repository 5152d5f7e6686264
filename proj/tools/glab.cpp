#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <random>

#include <CLI11.hpp>

#include "glab/io.hpp"
#include "glab/lefschetz.hpp"
#include "glab/report.hpp"

using namespace glab;

namespace {

constexpr int exit_pass = 0;
constexpr int exit_hypothesis = 2;
constexpr int exit_probabilistic = 3;
constexpr int exit_input = 4;

struct Options {
    std::string input_file;
    std::string builtin;
    std::string field = "gf2k:64";
    uint64_t seed = 0;
    bool seed_given = false;
    int trials = 3;
    int resamples = 16;
    std::string json_path;
    std::string modulus_hex;
    bool no_simd = false;
};

struct Run {
    Options opt;
    SimplicialComplex cx;
    Json report;
    std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();

    CheckConfig config() const { return CheckConfig{opt.seed, opt.trials, opt.resamples}; }

    int finish(int code) {
        auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                      std::chrono::steady_clock::now() - t0)
                      .count();
        report["passed"] = (code == exit_pass);
        report["exit_code"] = code;
        report["timing_ms"] = ms;
        std::string text = report.dump(2);
        if (!opt.json_path.empty()) {
            std::ofstream out(opt.json_path);
            out << text << "\n";
        }
        std::cout << text << "\n";
        return code;
    }
};

uint64_t entropy_seed() {
    std::random_device rd;
    return ((uint64_t)rd() << 32) ^ rd();
}

int field_bits(const std::string& field) {
    if (field == "exact") return 0;
    if (field.rfind("gf2k:", 0) == 0) {
        int k = std::stoi(field.substr(5));
        if (k == 8 || k == 16 || k == 32 || k == 64 || k == 128) return k;
    }
    throw std::invalid_argument("field must be gf2k:{8,16,32,64,128} or exact");
}

template <class Fn>
int with_field(int k, Fn&& fn) {
    switch (k) {
        case 8: return fn.template operator()<Gf2k<8>>();
        case 16: return fn.template operator()<Gf2k<16>>();
        case 32: return fn.template operator()<Gf2k<32>>();
        case 64: return fn.template operator()<Gf2k<64>>();
        case 128: return fn.template operator()<Gf2k<128>>();
        default: throw std::invalid_argument("unsupported field width");
    }
}

template <int K>
void apply_modulus_override(const std::string& hex) {
    if (hex.empty()) return;
    uint64_t low = std::stoull(hex, nullptr, 16);
    // the reduction loop needs the low part to fit well under the word
    if (low >= (1ULL << 32))
        throw std::invalid_argument("modulus low part must have degree < 32");
    Gf2k<K>::modulus_low = low;
}

void apply_modulus(int k, const std::string& hex) {
    if (hex.empty()) return;
    switch (k) {
        case 8: apply_modulus_override<8>(hex); break;
        case 16: apply_modulus_override<16>(hex); break;
        case 32: apply_modulus_override<32>(hex); break;
        case 64: apply_modulus_override<64>(hex); break;
        case 128: apply_modulus_override<128>(hex); break;
        default: break;
    }
}

Run make_run(const Options& opt, const std::string& command) {
    Run run;
    run.opt = opt;
    if (!run.opt.seed_given) {
        const char* env = std::getenv("GLAB_SEED");
        run.opt.seed = env ? std::stoull(env) : entropy_seed();
    }
    if (run.opt.no_simd) simd::select_scalar_only(true);
    run.report["command"] = command;
    run.report["input"] = opt.builtin.empty() ? opt.input_file : "builtin:" + opt.builtin;
    run.report["field"] = opt.field;
    run.report["seed"] = run.opt.seed;
    run.report["trials"] = opt.trials;
    if (!opt.builtin.empty())
        run.cx = make_builtin(opt.builtin);
    else if (!opt.input_file.empty())
        run.cx = load_complex_file(opt.input_file);
    else
        throw std::invalid_argument("either --input or --builtin is required");
    return run;
}

// ---------------------------------------------------------------- analyze

int cmd_analyze(const Options& opt) {
    Run run = make_run(opt, "analyze");
    run.report["topology"] = to_json(topology_report(run.cx));
    if (!run.cx.is_pure()) {
        run.report["error"] = "NotPure: f/h-vectors need a pure complex";
        return run.finish(exit_hypothesis);
    }
    auto f = f_vector(run.cx);
    auto h = h_from_f(f);
    run.report["f_vector"] = f;
    run.report["h_vector"] = h;
    run.report["palindromic"] = is_palindromic(h);
    int d = run.cx.dim() + 1;
    bool sphere = is_homology_sphere_f2(run.cx);
    bool dims_ok = true;
    if (opt.field == "exact") {
        Frame<RatFn> frame = exact_frame(run.cx, d);
        ArtinianRing<RatFn> ring(run.cx, std::move(frame));
        Json dims = Json::array();
        for (int m = 0; m <= d; ++m) {
            dims.push_back(ring.dim(m));
            if ((long long)ring.dim(m) != h[(std::size_t)m]) dims_ok = false;
        }
        run.report["graded_dims"] = dims;
    } else {
        with_field(field_bits(opt.field), [&]<class K>() {
            Json trials = Json::array();
            for (int t = 0; t < opt.trials; ++t) {
                Rng rng(derive_seed(run.opt.seed, (uint64_t)t));
                Frame<K> frame = random_frame<K>(run.cx, d, rng);
                ArtinianRing<K> ring(run.cx, std::move(frame));
                Json dims = Json::array();
                for (int m = 0; m <= d; ++m) {
                    dims.push_back(ring.dim(m));
                    if ((long long)ring.dim(m) != h[(std::size_t)m]) dims_ok = false;
                }
                trials.push_back(dims);
            }
            run.report["graded_dims"] = trials;
            return 0;
        });
    }
    run.report["graded_dims_match_h"] = dims_ok;
    // dims == h is the expectation for homology spheres only
    return run.finish(sphere && !dims_ok ? exit_probabilistic : exit_pass);
}

// ---------------------------------------------------------------- volume

int cmd_volume(const Options& opt, const std::string& monomial_str) {
    Run run = make_run(opt, "volume");
    Monomial z = parse_monomial(monomial_str);
    run.report["monomial"] = z.to_string();
    int d = run.cx.dim() + 1;
    if (!run.cx.has_face(z.support())) {
        run.report["value"] = "0";
        run.report["note"] = "support is not a face";
        return run.finish(exit_pass);
    }
    if (z.degree() > d) {
        run.report["error"] = "monomial degree exceeds d = " + std::to_string(d);
        return run.finish(exit_input);
    }
    bool ok = true;
    if (z.degree() < d) {
        // below top degree the facet sum vanishes identically
        run.report["note"] = "degree below d: the evaluation is identically 0";
        if (opt.field == "exact") {
            Frame<RatFn> frame = exact_frame(run.cx, d);
            VolumeEvaluator<RatFn> vol{&run.cx, &frame, exact_point(d)};
            RatFn val = vol.monomial(z);
            run.report["value"] = val.to_string();
            ok = val.is_zero();
        } else {
            with_field(field_bits(opt.field), [&]<class K>() {
                Json trials = Json::array();
                for (int t = 0; t < opt.trials; ++t) {
                    uint64_t s = derive_seed(run.opt.seed, (uint64_t)t);
                    Rng rng(s);
                    Frame<K> frame = random_frame<K>(run.cx, d, rng);
                    K val = vol_monomial(run.cx, frame, z, rng, opt.resamples);
                    Json tj;
                    tj["seed"] = s;
                    tj["value"] = value_repr(val);
                    if (!val.is_zero()) ok = false;
                    trials.push_back(tj);
                }
                run.report["values_hex"] = trials;
                return 0;
            });
        }
        return run.finish(ok ? exit_pass : exit_probabilistic);
    }
    if (opt.field == "exact") {
        Frame<RatFn> frame = exact_frame(run.cx, d);
        VolumeEvaluator<RatFn> vol{&run.cx, &frame, exact_point(d)};
        RatFn direct = vol.monomial(z);
        auto moved = displace(run.cx, frame, ChowClass<RatFn>::of_monomial(z), Face::empty());
        RatFn via_displacement = vol.cls(moved);
        run.report["value"] = direct.to_string();
        run.report["value_via_displacement"] = via_displacement.to_string();
        ok = (direct == via_displacement);
        run.report["routes_agree"] = ok;
    } else {
        with_field(field_bits(opt.field), [&]<class K>() {
            Json trials = Json::array();
            for (int t = 0; t < opt.trials; ++t) {
                uint64_t s = derive_seed(run.opt.seed, (uint64_t)t);
                Rng rng(s);
                Frame<K> frame = random_frame<K>(run.cx, d, rng);
                K direct = vol_monomial(run.cx, frame, z, rng, opt.resamples);
                auto moved = displace(run.cx, frame, ChowClass<K>::of_monomial(z),
                                      Face::empty());
                K via = vol_class(run.cx, frame, moved, rng, opt.resamples);
                Json tj;
                tj["seed"] = s;
                tj["value"] = value_repr(direct);
                tj["value_via_displacement"] = value_repr(via);
                tj["routes_agree"] = (direct == via);
                if (!(direct == via)) ok = false;
                trials.push_back(tj);
            }
            run.report["values_hex"] = trials;
            return 0;
        });
    }
    return run.finish(ok ? exit_pass : exit_probabilistic);
}

// ---------------------------------------------------------------- identity

int cmd_identity(const Options& opt, const std::string& facet_str,
                 const std::string& gamma_str, const std::string& tau_str) {
    Run run = make_run(opt, "identity");
    Face sigma = parse_face(facet_str);
    int d = run.cx.dim() + 1;
    if ((int)sigma.size() != d || !run.cx.has_face(sigma)) {
        run.report["error"] = "facet not found: " + sigma.to_string();
        return run.finish(exit_input);
    }
    Face gamma = parse_face(gamma_str);
    Face tau = parse_face(tau_str);
    std::optional<VertexId> p;
    Face rest = sigma.minus(gamma.unite(tau));
    if (d % 2 == 1) {
        if (rest.size() != 1) {
            run.report["error"] = "odd d needs exactly one leftover vertex p";
            return run.finish(exit_input);
        }
        p = rest[0];
    } else if (!rest.is_empty()) {
        run.report["error"] = "gamma and tau must partition the facet";
        return run.finish(exit_input);
    }
    if (opt.field == "exact") {
        Frame<RatFn> frame = exact_frame(run.cx, d);
        auto y = exact_point(d);
        auto [lhs, rhs] = main_identity_once(run.cx, frame, sigma, gamma, tau, p, y);
        bool equal = (lhs == rhs);
        run.report["lhs"] = lhs.to_string();
        run.report["rhs"] = rhs.to_string();
        run.report["equal"] = equal;
        return run.finish(equal ? exit_pass : exit_probabilistic);
    }
    int code = with_field(field_bits(opt.field), [&]<class K>() {
        auto check = check_main_identity<K>(run.cx, sigma, gamma, tau, p, run.config());
        run.report["check"] = to_json(check);
        return check.passed ? exit_pass : exit_probabilistic;
    });
    return run.finish(code);
}

// ---------------------------------------------------------------- anisotropy

int cmd_anisotropy(const Options& opt, int count, const std::vector<std::string>& classes) {
    Run run = make_run(opt, "anisotropy");
    if (!is_homology_sphere_f2(run.cx)) {
        run.report["error"] = "input is not a GF(2) homology sphere";
        return run.finish(exit_hypothesis);
    }
    if (opt.field == "exact") {
        run.report["error"] = "anisotropy certificates run on specialized fields";
        return run.finish(exit_input);
    }
    int d = run.cx.dim() + 1;
    int e = (d % 2 == 0) ? d / 2 : (d - 1) / 2;
    int code = with_field(field_bits(opt.field), [&]<class K>() {
        Json checks = Json::array();
        bool all = true;
        auto run_one = [&](const ChowClass<K>& u, const std::string& label) {
            try {
                auto cert = certify_anisotropy(run.cx, u, run.config());
                Json j = to_json(cert);
                j["class_label"] = label;
                checks.push_back(j);
                if (!cert.passed) all = false;
            } catch (const std::invalid_argument& ex) {
                Json j;
                j["class_label"] = label;
                j["error"] = ex.what();
                checks.push_back(j);
                all = false;
            }
        };
        if (!classes.empty()) {
            for (auto& spec : classes) {
                auto eq = spec.find('=');
                Monomial z = parse_monomial(eq == std::string::npos ? spec
                                                                    : spec.substr(0, eq));
                K c = K::one();
                if (eq != std::string::npos)
                    c = K(std::stoull(spec.substr(eq + 1), nullptr, 16));
                run_one(ChowClass<K>::of_monomial(z, c), spec);
            }
        } else {
            Rng rng(derive_seed(run.opt.seed, 0xA));
            for (int i = 0; i < count; ++i) {
                ChowClass<K> u{e, {}};
                for (auto& z : monomials_of_degree(run.cx, e)) u.add(z, K::random(rng));
                run_one(u, "random_" + std::to_string(i));
            }
        }
        run.report["checks"] = checks;
        return all ? exit_pass : exit_probabilistic;
    });
    return run.finish(code);
}

// ---------------------------------------------------------------- lefschetz

int cmd_lefschetz(const Options& opt, bool strong, const std::string& element) {
    Run run = make_run(opt, "lefschetz");
    if (!is_homology_sphere_f2(run.cx)) {
        run.report["error"] = "input is not a GF(2) homology sphere";
        return run.finish(exit_hypothesis);
    }
    if (opt.field == "exact") {
        run.report["error"] = "lefschetz rank checks run on specialized fields";
        return run.finish(exit_input);
    }
    int code = with_field(field_bits(opt.field), [&]<class K>() {
        LefschetzReport rep = strong
                                  ? strong_lefschetz_check<K>(run.cx, element, run.config())
                                  : weak_lefschetz_check<K>(run.cx, element, run.config());
        run.report["check"] = to_json(rep);
        auto g = g_report<K>(run.cx, run.config());
        run.report["g_report"] = to_json(g);
        return (rep.passed && g.passed) ? exit_pass : exit_probabilistic;
    });
    return run.finish(code);
}

// ---------------------------------------------------------------- examples

int cmd_examples(const std::string& action, const std::string& name) {
    if (action == "list") {
        for (auto& n : builtin_examples()) std::cout << n << "\n";
        return exit_pass;
    }
    if (action == "emit") {
        SimplicialComplex cx = make_builtin(name);
        for (auto& f : cx.facets()) {
            for (std::size_t i = 0; i < f.size(); ++i)
                std::cout << (i ? " " : "") << f[i];
            std::cout << "\n";
        }
        return exit_pass;
    }
    std::cerr << "examples: expected list|emit\n";
    return exit_input;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"characteristic-2 Lefschetz laboratory for simplicial spheres"};
    app.require_subcommand(1);

    Options opt;
    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--input", opt.input_file, "facet list file (JSON or text)");
        sub->add_option("--builtin", opt.builtin, "builtin complex name");
        sub->add_option("--field", opt.field, "gf2k:{8,16,32,64,128} or exact");
        sub->add_option("--seed", opt.seed, "master seed (GLAB_SEED fallback)")
            ->each([&](const std::string&) { opt.seed_given = true; });
        sub->add_option("--trials", opt.trials, "independent specializations");
        sub->add_option("--resamples", opt.resamples, "resample budget per trial");
        sub->add_option("--json", opt.json_path, "also write the report here");
        sub->add_option("--modulus", opt.modulus_hex, "hex override of the field modulus");
        sub->add_flag("--no-simd", opt.no_simd, "force scalar kernels");
    };

    auto* analyze = app.add_subcommand("analyze", "topology, f/h-vectors, graded dimensions");
    add_common(analyze);

    std::string monomial_str;
    auto* volume = app.add_subcommand("volume", "volume of a degree-d monomial, two routes");
    add_common(volume);
    volume->add_option("--monomial", monomial_str, "monomial as v:exp,v:exp,...")->required();

    std::string facet_str, gamma_str, tau_str;
    auto* identity = app.add_subcommand("identity", "main differential identity on a facet split");
    add_common(identity);
    identity->add_option("--facet", facet_str, "facet as comma list")->required();
    identity->add_option("--gamma", gamma_str, "gamma as comma list")->required();
    identity->add_option("--tau", tau_str, "tau as comma list")->required();

    int count = 5;
    std::vector<std::string> class_specs;
    auto* anisotropy = app.add_subcommand("anisotropy", "anisotropy certificates");
    add_common(anisotropy);
    anisotropy->add_option("--count", count, "number of random middle-degree classes");
    anisotropy->add_option("--class", class_specs, "explicit class monomial[=coeffhex]");

    bool weak = false, strong = false;
    std::string element = "random";
    auto* lefschetz = app.add_subcommand("lefschetz", "weak/strong Lefschetz rank checks");
    add_common(lefschetz);
    lefschetz->add_flag("--weak", weak, "weak Lefschetz (default)");
    lefschetz->add_flag("--strong", strong, "strong Lefschetz");
    lefschetz->add_option("--element", element, "random | suspension");

    std::string ex_action = "list", ex_name;
    auto* examples = app.add_subcommand("examples", "list or emit builtin complexes");
    examples->add_option("action", ex_action, "list | emit");
    examples->add_option("name", ex_name, "builtin name for emit");

    CLI11_PARSE(app, argc, argv);

    try {
        if (opt.field != "exact") apply_modulus(field_bits(opt.field), opt.modulus_hex);
        if (analyze->parsed()) return cmd_analyze(opt);
        if (volume->parsed()) return cmd_volume(opt, monomial_str);
        if (identity->parsed()) return cmd_identity(opt, facet_str, gamma_str, tau_str);
        if (anisotropy->parsed()) return cmd_anisotropy(opt, count, class_specs);
        if (lefschetz->parsed()) return cmd_lefschetz(opt, strong, element);
        if (examples->parsed()) return cmd_examples(ex_action, ex_name);
    } catch (const invalid_facet& ex) {
        std::cerr << "input error: " << ex.what() << "\n";
        return exit_input;
    } catch (const empty_complex& ex) {
        std::cerr << "input error: " << ex.what() << "\n";
        return exit_input;
    } catch (const not_pure& ex) {
        std::cerr << "hypothesis failure: " << ex.what() << "\n";
        return exit_hypothesis;
    } catch (const no_witness_face& ex) {
        std::cerr << "hypothesis failure: " << ex.what() << "\n";
        return exit_hypothesis;
    } catch (const resample_needed& ex) {
        std::cerr << "probabilistic check could not stabilize: " << ex.what() << "\n";
        return exit_probabilistic;
    } catch (const std::invalid_argument& ex) {
        std::cerr << "input error: " << ex.what() << "\n";
        return exit_input;
    } catch (const std::exception& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return exit_input;
    }
    return exit_input;
}
