#pragma once

// Task runner: executes the configured verification pipelines in config
// order and assembles a machine-readable report. Reports are deterministic
// for a fixed config and seed, except for the timing fields.

#include <chrono>
#include <random>
#include <string>
#include <vector>

#include "skewgal/config.hpp"
#include "skewgal/expr.hpp"
#include "skewgal/scalar_ext.hpp"
#include "skewgal/version.hpp"

namespace skewgal {

struct TaskResult {
    std::string name;
    std::string type;
    std::string status; // pass | fail | inconclusive
    ordered_json detail;
    ordered_json witness; // null unless the task failed with a witness
    double timing_ms = 0;
};

struct Report {
    std::vector<TaskResult> tasks;
    std::string input_digest;
    std::uint64_t seed = 0;
    int order = 16;

    int count(const std::string& status) const {
        int n = 0;
        for (const auto& t : tasks)
            if (t.status == status) ++n;
        return n;
    }
    bool all_passed() const { return count("pass") == static_cast<int>(tasks.size()); }

    ordered_json to_json(bool include_timings = true) const {
        ordered_json doc;
        doc["schema"] = "skewgal-report/v1";
        doc["library_version"] = version;
        doc["input_digest"] = input_digest;
        doc["seed"] = seed;
        doc["order"] = order;
        doc["tasks"] = ordered_json::array();
        for (const auto& t : tasks) {
            ordered_json jt;
            jt["name"] = t.name;
            jt["type"] = t.type;
            jt["status"] = t.status;
            jt["detail"] = t.detail;
            jt["witness"] = t.witness;
            if (include_timings) jt["timing_ms"] = t.timing_ms;
            doc["tasks"].push_back(std::move(jt));
        }
        ordered_json summary;
        summary["pass"] = count("pass");
        summary["fail"] = count("fail");
        summary["inconclusive"] = count("inconclusive");
        doc["summary"] = std::move(summary);
        return doc;
    }
};

namespace run_detail {

inline ordered_json rat_vec_json(const std::vector<Rat>& v) {
    ordered_json out = ordered_json::array();
    for (const auto& x : v) out.push_back(to_string(x));
    return out;
}

inline ordered_json ratfunc_vec_json(const std::vector<KRatFunc>& v) {
    ordered_json out = ordered_json::array();
    for (const auto& x : v) out.push_back(to_string(x));
    return out;
}

template <class F>
ordered_json norm_form_json(const NormForm<F>& f) {
    ordered_json terms = ordered_json::array();
    for (const auto& [e, c] : f.form.terms) {
        ordered_json t;
        t["exps"] = e;
        t["coeff"] = to_string(c);
        terms.push_back(std::move(t));
    }
    ordered_json out;
    out["nvars"] = f.nvars;
    out["degree"] = f.degree;
    out["terms"] = std::move(terms);
    return out;
}

inline TaskResult run_one(const JobConfig& cfg, const json& task) {
    TaskResult r;
    r.name = task.at("name").get<std::string>();
    r.type = task.at("type").get<std::string>();
    r.witness = nullptr;
    const std::string& type = r.type;

    if (type == "scalar-extension") {
        const auto& H = resolve_algebra(cfg, task, "algebra");
        const auto& E = resolve_extension(cfg, task, "extension");
        int samples = task.contains("samples") ? task.at("samples").get<int>() : 12;
        auto obligations = scalar_extension_pipeline(H, E, cfg.seed, samples);
        ordered_json obl = ordered_json::array();
        bool all = true;
        for (const auto& ob : obligations) {
            ordered_json o;
            o["name"] = ob.name;
            o["pass"] = ob.pass;
            o["detail"] = ob.detail;
            if (!ob.dims.empty()) {
                ordered_json d;
                for (const auto& [k, v] : ob.dims) d[k] = v;
                o["dims"] = std::move(d);
            }
            if (!ob.basis.empty()) {
                ordered_json b = ordered_json::array();
                for (const auto& vec : ob.basis) b.push_back(ratfunc_vec_json(vec));
                o["basis"] = std::move(b);
            }
            obl.push_back(std::move(o));
            all = all && ob.pass;
        }
        r.detail["obligations"] = std::move(obl);
        r.status = all ? "pass" : "fail";
        if (!all) {
            for (const auto& ob : obligations)
                if (!ob.pass) {
                    r.witness = ordered_json{{"obligation", ob.name}, {"detail", ob.detail}};
                    break;
                }
        }
        return r;
    }
    if (type == "division-algebra") {
        const auto& A = resolve_algebra(cfg, task, "algebra");
        long radius = task.contains("radius") ? task.at("radius").get<long>() : 12;
        try {
            auto v = is_division_algebra(A, radius);
            r.detail["method"] = v.method;
            r.status = v.is_division ? "pass" : "fail";
            if (v.witness) r.witness = ordered_json{{"nontrivial_zero", rat_vec_json(*v.witness)}};
        } catch (const Inconclusive& ex) {
            r.status = "inconclusive";
            r.detail["reason"] = ex.what();
        }
        return r;
    }
    if (type == "norm-form") {
        const auto& A = resolve_algebra(cfg, task, "algebra");
        auto nf = norm_form(A);
        r.detail["form"] = norm_form_json(nf);
        if (task.contains("expect")) {
            MPoly<Rat> expect(nf.nvars);
            for (const auto& term : task.at("expect")) {
                std::vector<int> e = term.at("exps").get<std::vector<int>>();
                expect.add_term(e, cfg_detail::rat_from_json(term.at("coeff"), "expect.coeff"));
            }
            r.status = nf.form == expect ? "pass" : "fail";
            if (r.status == "fail") r.witness = ordered_json{{"computed_form", norm_form_json(nf)}};
        } else {
            r.status = "pass";
        }
        return r;
    }
    if (type == "tensor-center") {
        const auto& A = resolve_algebra(cfg, task, "left");
        const auto& B = resolve_algebra(cfg, task, "right");
        auto AB = tensor(A, B);
        auto za = center(A), zb = center(B);
        std::vector<Vec<Rat>> prod;
        for (const auto& x : za.basis)
            for (const auto& y : zb.basis) {
                Vec<Rat> v(x.size() * y.size());
                for (std::size_t i = 0; i < x.size(); ++i)
                    for (std::size_t j = 0; j < y.size(); ++j)
                        v[i * y.size() + j] = x[i] * y[j];
                prod.push_back(std::move(v));
            }
        auto zab = center(AB);
        bool ok = subspace_equal(zab, subspace_span(prod, AB.dim), AB.dim);
        r.detail["center_dim"] = zab.dim();
        r.status = ok ? "pass" : "fail";
        if (!ok) {
            ordered_json basis = ordered_json::array();
            for (const auto& v : zab.basis) basis.push_back(rat_vec_json(v));
            r.witness = ordered_json{{"center_basis", std::move(basis)}};
        }
        return r;
    }
    if (type == "tensor-simple") {
        const auto& A = resolve_algebra(cfg, task, "csa");
        const auto& B = resolve_algebra(cfg, task, "simple");
        bool expect_simple = task.contains("expect_simple") ? task.at("expect_simple").get<bool>() : true;
        try {
            bool simple = is_simple(tensor(A, B));
            r.detail["tensor_simple"] = simple;
            r.status = simple == expect_simple ? "pass" : "fail";
            if (r.status == "fail")
                r.witness = ordered_json{{"tensor_simple", simple}, {"expected", expect_simple}};
        } catch (const Inconclusive& ex) {
            r.status = "inconclusive";
            r.detail["reason"] = ex.what();
        }
        return r;
    }
    if (type == "invert-sample") {
        const auto& A = resolve_algebra(cfg, task, "algebra");
        int count = task.contains("count") ? task.at("count").get<int>() : 100;
        SkewField<Rat> Ht(&A);
        std::mt19937_64 rng(cfg.seed);
        auto one = SkewRatElem<Rat>::one(&Ht);
        int done = 0;
        bool ok = true;
        while (done < count && ok) {
            std::vector<KRatFunc> coords(static_cast<std::size_t>(A.dim));
            bool nz = false;
            for (auto& c : coords) {
                Poly<Rat> num(std::vector<Rat>{Rat(static_cast<long>(rng() % 9) - 4),
                                               Rat(static_cast<long>(rng() % 9) - 4)});
                Poly<Rat> den(std::vector<Rat>{Rat(static_cast<long>(rng() % 3) + 1),
                                               Rat(static_cast<long>(rng() % 3))});
                c = KRatFunc(num, den);
                nz = nz || !c.is_zero();
            }
            if (!nz) continue;
            ++done;
            SkewRatElem<Rat> x(&Ht, std::move(coords));
            auto xi = invert(x);
            ok = (x * xi == one) && (xi * x == one);
            if (!ok) r.witness = ordered_json{{"element", ratfunc_vec_json(x.coords)}};
        }
        r.detail["samples"] = done;
        r.status = ok ? "pass" : "fail";
        return r;
    }
    if (type == "galois-verify") {
        const auto& E = resolve_extension(cfg, task, "extension");
        auto v = verify_galois_presentation(E);
        r.status = v.ok ? "pass" : "fail";
        if (!v.ok) r.witness = ordered_json{{"violation", v.witness}};
        return r;
    }
    if (type == "s3") {
        if (!task.contains("p0") || !task.contains("p1")) throw ConfigError("s3 task needs \"p0\" and \"p1\"");
        Poly<Rat> P0 = cfg_detail::tpoly_from_json(task.at("p0"), "p0");
        Poly<Rat> P1 = cfg_detail::tpoly_from_json(task.at("p1"), "p1");
        auto P = interpolation_construct(P0, P1);
        auto cert = certify_s3(P);
        ordered_json roots = ordered_json::array();
        bool lifts_ok = true;
        for (const Rat& r0 : rational_roots(P0)) {
            if (eval_at_t(P, Rat(0)).derivative().eval(r0).is_zero()) continue;
            auto lifted = hensel_lift(P, r0, cfg.order);
            ordered_json jr;
            jr["r0"] = to_string(r0);
            jr["series"] = to_string(lifted.root);
            roots.push_back(std::move(jr));
        }
        r.detail["polynomial"] = to_string(to_x_poly_over_ratfunc(P), "x");
        r.detail["certified_s3"] = cert.certified;
        r.detail["irreducible"] = cert.irreducible;
        r.detail["disc_nonsquare"] = cert.disc_nonsquare;
        r.detail["disc"] = to_string(cert.disc);
        r.detail["lifted_roots"] = std::move(roots);
        r.status = cert.certified && lifts_ok ? "pass" : "fail";
        if (r.status == "fail") {
            if (cert.root)
                r.witness = ordered_json{{"ratfunc_root", to_string(*cert.root)}};
            else
                r.witness = ordered_json{{"disc", to_string(cert.disc)},
                                         {"disc_nonsquare", cert.disc_nonsquare}};
        }
        return r;
    }
    throw ConfigError("unknown task type \"" + type + "\"");
}

} // namespace run_detail

inline Report run_verification(const JobConfig& cfg) {
    Report rep;
    rep.seed = cfg.seed;
    rep.order = cfg.order;
    rep.input_digest = fnv1a_digest(cfg.raw);
    for (const auto& task : cfg.tasks) {
        auto start = std::chrono::steady_clock::now();
        TaskResult r;
        try {
            r = run_detail::run_one(cfg, task);
        } catch (const ConfigError&) {
            throw; // schema problems are not verification failures
        } catch (const Inconclusive& ex) {
            r.name = task.at("name").get<std::string>();
            r.type = task.at("type").get<std::string>();
            r.status = "inconclusive";
            r.detail["reason"] = ex.what();
            r.witness = nullptr;
        } catch (const Error& ex) {
            r.name = task.at("name").get<std::string>();
            r.type = task.at("type").get<std::string>();
            r.status = "fail";
            r.detail["error"] = ex.what();
            r.witness = nullptr;
        }
        auto stop = std::chrono::steady_clock::now();
        r.timing_ms = std::chrono::duration<double, std::milli>(stop - start).count();
        rep.tasks.push_back(std::move(r));
    }
    return rep;
}

} // namespace skewgal
