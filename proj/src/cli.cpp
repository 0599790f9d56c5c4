#include "primring/cli.hpp"

#include "primring/doublepoint.hpp"
#include "primring/dualtor.hpp"
#include "primring/hilbert.hpp"
#include "primring/regseq.hpp"

#include <chrono>
#include <functional>
#include <map>
#include <stdexcept>

namespace primring::cli {

namespace {

struct JobError : std::runtime_error {
    std::string code, location;
    JobError(std::string c, std::string loc, const std::string& msg)
        : std::runtime_error(msg), code(std::move(c)), location(std::move(loc)) {}
};

JobError schema(const std::string& loc, const std::string& msg) { return {"schema_error", loc, msg}; }

struct Options {
    int jet_order = 6;
    int degree_bound = 6;
    MonomialOrder order = MonomialOrder::grevlex();
    bool verify = false;
};

struct Ctx {
    json payload;
    Options opt;
    std::optional<TruncRing> ring;

    const TruncRing& R() const {
        if (!ring) throw schema("/ring", "this command needs a ring");
        return *ring;
    }
};

// --- reading --------------------------------------------------------------------

const json& need(const json& obj, const std::string& key, const std::string& where) {
    if (!obj.is_object() || !obj.contains(key)) throw schema(where + "/" + key, "missing field '" + key + "'");
    return obj.at(key);
}

int get_int(const json& v, const std::string& where) {
    if (!v.is_number_integer()) throw schema(where, "expected an integer");
    return v.get<int>();
}

std::string get_string(const json& v, const std::string& where) {
    if (!v.is_string()) throw schema(where, "expected a string");
    return v.get<std::string>();
}

const json& get_array(const json& v, const std::string& where) {
    if (!v.is_array()) throw schema(where, "expected an array");
    return v;
}

Poly parse_in(const RingPtr& r, const json& v, const std::string& where) {
    std::string s = v.is_number_integer() ? std::to_string(v.get<long long>()) : get_string(v, where);
    try {
        return Poly::parse(r, s);
    } catch (const std::exception& e) {
        throw JobError("parse_error", where, e.what());
    }
}

Poly poly(const TruncRing& R, const json& v, const std::string& where) { return R.reduce(parse_in(R.ring(), v, where)); }

std::vector<Poly> polys(const TruncRing& R, const json& v, const std::string& where) {
    std::vector<Poly> out;
    const auto& a = get_array(v, where);
    for (size_t i = 0; i < a.size(); ++i) out.push_back(poly(R, a[i], where + "/" + std::to_string(i)));
    return out;
}

Vec vec(const TruncRing& R, const json& v, const std::string& where, int rank = -1) {
    Vec out = polys(R, v, where);
    if (rank >= 0 && static_cast<int>(out.size()) != rank)
        throw schema(where, "expected " + std::to_string(rank) + " entries");
    return out;
}

std::vector<Vec> vecs(const TruncRing& R, const json& v, const std::string& where, int rank = -1) {
    std::vector<Vec> out;
    const auto& a = get_array(v, where);
    for (size_t i = 0; i < a.size(); ++i) out.push_back(vec(R, a[i], where + "/" + std::to_string(i), rank));
    return out;
}

std::vector<int> ints(const json& v, const std::string& where) {
    std::vector<int> out;
    const auto& a = get_array(v, where);
    for (size_t i = 0; i < a.size(); ++i) out.push_back(get_int(a[i], where + "/" + std::to_string(i)));
    return out;
}

TruncRing parse_ring(const json& j, const Options& opt) {
    const std::string w = "/ring";
    std::vector<std::string> names;
    const auto& vars = get_array(need(j, "vars", w), w + "/vars");
    for (size_t i = 0; i < vars.size(); ++i) names.push_back(get_string(vars[i], w + "/vars/" + std::to_string(i)));
    int n = j.contains("n") ? get_int(j["n"], w + "/n") : 1;
    if (n < 1) throw schema(w + "/n", "n must be positive");
    std::vector<int> weights = j.contains("weights") ? ints(j["weights"], w + "/weights") : std::vector<int>{};
    int tw = j.contains("t_weight") ? get_int(j["t_weight"], w + "/t_weight") : 1;
    std::string tname = j.contains("t_name") ? get_string(j["t_name"], w + "/t_name") : "t";
    Locality loc = Locality::Global;
    if (j.contains("locality")) {
        std::string l = get_string(j["locality"], w + "/locality");
        if (l == "origin") loc = Locality::Origin;
        else if (l != "global") throw schema(w + "/locality", "expected 'global' or 'origin'");
    }
    try {
        return TruncRing(names, n, weights, tw, opt.order, loc, tname).with_jet_order(opt.jet_order);
    } catch (const std::exception& e) {
        throw schema(w, e.what());
    }
}

// Module descriptions:
//   {"free": rank, "degrees": [...]}
//   {"ideal": [polys]}
//   {"cyclic": [polys], "degree": d}
//   {"R_i": i, "degree": d}
//   {"generators": g, "relations": [[...]], "degrees": [...]}
//   {"sum": [module, ...]}
PresMod module(const TruncRing& R, const json& j, const std::string& w) {
    if (!j.is_object()) throw schema(w, "expected a module object");
    if (j.contains("free")) {
        int p = get_int(j["free"], w + "/free");
        std::vector<int> d = j.contains("degrees") ? ints(j["degrees"], w + "/degrees") : std::vector<int>{};
        return PresMod::free(R, p, d);
    }
    if (j.contains("ideal")) return PresMod::ideal(R, polys(R, j["ideal"], w + "/ideal"));
    if (j.contains("cyclic")) {
        int d = j.contains("degree") ? get_int(j["degree"], w + "/degree") : 0;
        return PresMod::cyclic(R, polys(R, j["cyclic"], w + "/cyclic"), d);
    }
    if (j.contains("R_i")) {
        int d = j.contains("degree") ? get_int(j["degree"], w + "/degree") : 0;
        return PresMod::R_i(R, get_int(j["R_i"], w + "/R_i"), d);
    }
    if (j.contains("sum")) {
        const auto& parts = get_array(j["sum"], w + "/sum");
        PresMod out = PresMod::free(R, 0);
        for (size_t i = 0; i < parts.size(); ++i)
            out = PresMod::direct_sum(out, module(R, parts[i], w + "/sum/" + std::to_string(i)));
        return out;
    }
    PresMod M;
    M.ring = R;
    M.ngens = get_int(need(j, "generators", w), w + "/generators");
    if (j.contains("relations")) M.relations = vecs(R, j["relations"], w + "/relations", M.ngens);
    if (j.contains("degrees")) {
        auto d = ints(j["degrees"], w + "/degrees");
        if (static_cast<int>(d.size()) != M.ngens) throw schema(w + "/degrees", "one degree per generator");
        M.degrees = d;
    }
    M.normalize();
    return M;
}

// --- writing --------------------------------------------------------------------

json num(const Rational& q) {
    std::string s = q.to_string();
    if (s.find('/') == std::string::npos) {
        try {
            return std::stoll(s);
        } catch (const std::out_of_range&) {
        }
    }
    return s;
}

json out(const Poly& p) { return p.to_string(); }

json out(const Vec& v) {
    json a = json::array();
    for (const auto& p : v) a.push_back(p.to_string());
    return a;
}

json out(const std::vector<Vec>& vs) {
    json a = json::array();
    for (const auto& v : vs) a.push_back(out(v));
    return a;
}

json out(const PresMod& M) {
    json j;
    j["generators"] = M.ngens;
    j["relations"] = out(M.relations);
    if (M.degrees) j["degrees"] = *M.degrees;
    return j;
}

json out(const HilbPoly& P) {
    json c = json::array();
    for (const auto& q : P.coeffs()) c.push_back(num(q));
    return {{"polynomial", P.to_string()}, {"coefficients", c}};
}

json out(const FiltrationChain& F) {
    json members = json::array();
    for (const auto& m : F.members) members.push_back(out(m));
    json j{{"members", members}};
    if (F.ambient.is_graded()) {
        json hs = json::array();
        for (size_t k = 0; k + 1 < F.size(); ++k) hs.push_back(F.quotient(k).hilbert_series().to_string());
        j["quotient_hilbert_series"] = hs;
    }
    return j;
}

json out(const CheckReport& r) { return {{"ok", r.ok}, {"failures", r.failures}, {"notes", r.notes}}; }

// --- commands ---------------------------------------------------------------------

AutMap aut(const TruncRing& R, const json& j, const std::string& w) {
    auto images = polys(R, need(j, "vars", w), w + "/vars");
    Poly t = poly(R, need(j, "t", w), w + "/t");
    try {
        return AutMap(R, images, t);
    } catch (const std::invalid_argument& e) {
        throw JobError("invalid_argument", w, e.what());
    }
}

json aut_out(const AutMap& a) {
    json d = json::array();
    for (const auto& p : a.derivation()) d.push_back(out(p));
    json im = json::array();
    for (const auto& p : a.var_images()) im.push_back(out(p));
    return {{"vars", im}, {"t", out(a.t_image())}, {"derivation", d}, {"multiplier", out(a.multiplier())}};
}

PresMod payload_module(const Ctx& c, const std::string& key = "module") {
    return module(c.R(), need(c.payload, key, "/payload"), "/payload/" + key);
}

std::vector<TruncElem> sequence(const Ctx& c) {
    std::vector<TruncElem> out;
    for (const auto& p : polys(c.R(), need(c.payload, "sequence", "/payload"), "/payload/sequence"))
        out.emplace_back(c.R(), p);
    return out;
}

FiltrationChain chain(const PresMod& M, const json& j, const std::string& w) {
    FiltrationChain F{M, {}};
    const auto& a = get_array(j, w);
    for (size_t i = 0; i < a.size(); ++i) F.members.push_back(vecs(M.ring, a[i], w + "/" + std::to_string(i), M.ngens));
    return F;
}

TruncRing local_ring(const Ctx& c) { return local_double_ring(c.opt.jet_order); }

PointIdeal point(const TruncRing& R, const json& p, const std::string& a, const std::string& b) {
    return PointIdeal(R, poly(R, need(p, a, "/payload"), "/payload/" + a), poly(R, need(p, b, "/payload"), "/payload/" + b));
}

json lambda_out(const LambdaCoord& l) { return json::array({num(l.dx), num(l.dy)}); }

using Handler = std::function<json(const Ctx&)>;

const std::map<std::string, Handler>& handlers() {
    static const std::map<std::string, Handler> table = {
        {"gb",
         [](const Ctx& c) {
             const auto& R = c.R();
             std::vector<Vec> gens;
             int rank = 1;
             if (c.payload.contains("vectors")) {
                 rank = get_int(need(c.payload, "rank", "/payload"), "/payload/rank");
                 gens = vecs(R, c.payload["vectors"], "/payload/vectors", rank);
             } else {
                 for (const auto& p : polys(R, need(c.payload, "generators", "/payload"), "/payload/generators"))
                     gens.push_back({p});
             }
             auto gb = groebner_basis(R.ring(), rank, gens, {{}, R.trunc()});
             json basis = json::array();
             for (const auto& g : gb.generators()) basis.push_back(rank == 1 ? out(g[0]) : out(g));
             return json{{"basis", basis}};
         }},
        {"nf",
         [](const Ctx& c) {
             const auto& R = c.R();
             auto gens = polys(R, need(c.payload, "generators", "/payload"), "/payload/generators");
             Poly f = poly(R, need(c.payload, "element", "/payload"), "/payload/element");
             auto gb = ideal_basis(R.ring(), gens, R.trunc());
             Poly r = normal_form(f, gb);
             return json{{"normal_form", out(r)}, {"member", r.is_zero()}};
         }},
        {"syz",
         [](const Ctx& c) {
             const auto& R = c.R();
             std::vector<Vec> gens;
             for (const auto& p : polys(R, need(c.payload, "generators", "/payload"), "/payload/generators"))
                 gens.push_back({p});
             return json{{"syzygies", out(syzygy_basis(R.ring(), 1, gens, R.trunc()))}};
         }},
        {"ring.zerodivisor",
         [](const Ctx& c) {
             TruncElem u(c.R(), poly(c.R(), need(c.payload, "element", "/payload"), "/payload/element"));
             json j{{"zero_divisor", u.is_zero_divisor()}, {"in_S", u.in_S()}, {"local_unit", u.is_local_unit()}};
             if (u.is_local_unit()) j["jet_inverse"] = u.jet_inverse(c.opt.jet_order).to_string();
             return j;
         }},
        {"aut.compose",
         [](const Ctx& c) {
             auto phi = aut(c.R(), need(c.payload, "phi", "/payload"), "/payload/phi");
             auto psi = aut(c.R(), need(c.payload, "psi", "/payload"), "/payload/psi");
             return aut_out(compose(phi, psi));
         }},
        {"aut.cocycle",
         [](const Ctx& c) {
             auto ij = aut(c.R(), need(c.payload, "phi_ij", "/payload"), "/payload/phi_ij");
             auto jk = aut(c.R(), need(c.payload, "phi_jk", "/payload"), "/payload/phi_jk");
             auto ik = aut(c.R(), need(c.payload, "phi_ik", "/payload"), "/payload/phi_ik");
             return json{{"cocycle", verify_cocycle(ij, jk, ik)}};
         }},
        {"module.filtration",
         [](const Ctx& c) {
             auto M = payload_module(c);
             return json{{"first", out(first_canonical_filtration(M))},
                         {"second", out(second_canonical_filtration(M))}};
         }},
        {"module.balanced",
         [](const Ctx& c) {
             auto M = payload_module(c);
             auto r = is_balanced(M);
             auto k = balance_criteria(M);
             json j{{"balanced", r.balanced},
                    {"criteria",
                     {{"lambda_surjective", k.lambda_surjective},
                      {"gamma_lower_zero", k.gamma_lower_zero},
                      {"gamma_upper_zero", k.gamma_upper_zero},
                      {"mu_injective", k.mu_injective},
                      {"filtrations_equal", k.filtrations_equal}}}};
             if (r.witness) {
                 const auto& w = *r.witness;
                 j["witness"] = w.embedded ? (w.embedded->size() == 1 ? out((*w.embedded)[0]) : out(*w.embedded))
                                           : out(w.element);
                 j["witness_coordinates"] = out(w.element);
                 j["witness_index"] = w.i;
                 j["certificate"] = w.certificate;
             }
             return j;
         }},
        {"module.quasifree",
         [](const Ctx& c) {
             auto q = quasi_free_type(payload_module(c));
             json j{{"ranks", q.ranks}, {"first_non_free", q.first_non_free}};
             j["type"] = q.type ? json(*q.type) : json(nullptr);
             return j;
         }},
        {"module.generictype", [](const Ctx& c) { return json{{"type", generic_type(payload_module(c))}}; }},
        {"module.torsion",
         [](const Ctx& c) {
             auto T = torsion(payload_module(c));
             json w = json::array();
             for (const auto& x : T.witnesses) w.push_back({{"generator", out(x.generator)}, {"s", out(x.s)}});
             return json{{"torsion_free", T.torsion_free()}, {"generators", out(T.generators)}, {"witnesses", w}};
         }},
        {"module.dual",
         [](const Ctx& c) {
             auto M = payload_module(c);
             auto D = dual(M);
             auto nm = natural_map(M);
             return json{{"dual", out(D.pres)},
                         {"dual_generators", out(D.space.gens)},
                         {"natural_map_injective", nm.map.is_injective()},
                         {"natural_map_surjective", nm.map.is_surjective()}};
         }},
        {"module.ext1",
         [](const Ctx& c) {
             auto E = ext1_module(payload_module(c), payload_module(c, "target"));
             json j{{"presentation", out(E.pres)}, {"zero", E.space.is_zero()}};
             if (static_cast<int>(E.space.degrees.size()) == E.space.rank)
                 j["hilbert_series"] = E.space.hilbert_series().to_string();
             return j;
         }},
        {"module.extend",
         [](const Ctx& c) {
             const auto& R = c.R();
             Extension e;
             json j;
             if (c.payload.contains("sigma")) {
                 Poly s = poly(R, c.payload["sigma"], "/payload/sigma");
                 int i = get_int(need(c.payload, "i", "/payload"), "/payload/i");
                 e = extension_R_by_Ri(R, s, i);
                 j["is_R_i_plus_1"] = extension_is_R_i1(s);
             } else {
                 auto N = payload_module(c, "N"), M = payload_module(c, "M");
                 e = build_extension(N, M, vecs(R, need(c.payload, "f1", "/payload"), "/payload/f1", N.ngens));
             }
             j["presentation"] = out(e.P);
             j["exact"] = is_exact(e);
             j["balanced"] = is_balanced(e.P).balanced;
             return j;
         }},
        {"module.refine",
         [](const Ctx& c) {
             auto M = payload_module(c);
             auto D = c.payload.contains("D") ? chain(M, c.payload["D"], "/payload/D") : first_canonical_filtration(M);
             auto F = c.payload.contains("F") ? chain(M, c.payload["F"], "/payload/F") : second_canonical_filtration(M);
             auto r = refine_filtrations(D, F);
             return json{{"D", out(r.D)}, {"F", out(r.F)}, {"similar", r.similar}};
         }},
        {"regseq.check",
         [](const Ctx& c) {
             auto r = is_regular_sequence(sequence(c));
             json j{{"regular", r.verdict},
                    {"verdict_base", r.verdict_base},
                    {"verdict_direct", r.verdict_direct},
                    {"failure_index", r.failure_index}};
             json red = json::array();
             for (const auto& p : r.reductions) red.push_back(out(p));
             j["reductions"] = red;
             if (r.witness) j["witness"] = out(*r.witness);
             return j;
         }},
        {"regseq.shadow",
         [](const Ctx& c) {
             Poly y = poly(c.R(), need(c.payload, "y", "/payload"), "/payload/y");
             return json{{"member", shadow_membership(y, sequence(c))}};
         }},
        {"ideal.tau",
         [](const Ctx& c) {
             auto J = point(local_ring(c), c.payload, "a", "b");
             auto t = tau(J);
             json gens = json::array();
             for (const auto& g : J.generators()) gens.push_back(out(g));
             return json{{"tau", json::array({num(t.cx), num(t.cy)})}, {"generators", gens}};
         }},
        {"ideal.eq",
         [](const Ctx& c) {
             auto R = local_ring(c);
             return json{{"equal", ideals_equal(point(R, c.payload, "a1", "b1"), point(R, c.payload, "a2", "b2"))}};
         }},
        {"ideal.lambda",
         [](const Ctx& c) { return json{{"lambda", lambda_out(lambda_coord(point(local_ring(c), c.payload, "a", "b")))}}; }},
        {"ideal.chart",
         [](const Ctx& c) {
             auto R = local_ring(c);
             const json& ch = need(c.payload, "chart", "/payload");
             auto f = [&](const char* k, const char* def) {
                 return ch.contains(k) ? poly(R, ch[k], std::string("/payload/chart/") + k) : R.parse(def);
             };
             Chart chart{f("alpha", "1"), f("beta", "0"), f("gamma", "0"), f("delta", "1"), f("u", "0"), f("v", "0")};
             auto J = point(R, c.payload, "a", "b");
             auto r = change_chart(J, chart);
             json j{{"direct", lambda_out(r.direct)}, {"formula", lambda_out(r.formula)}, {"agree", r.direct == r.formula}};
             if (c.payload.contains("a2")) {
                 auto J2 = point(R, c.payload, "a2", "b2");
                 j["difference"] = lambda_out(affine_difference(J, J2, {Chart::identity(R), chart}));
             }
             return j;
         }},
        {"ideal.resolution",
         [](const Ctx& c) { return out(verify_maximal_ideal_resolution(local_ring(c), c.opt.degree_bound)); }},
        {"ideal.extcheck", [](const Ctx& c) { return out(ext_complex_check(local_ring(c), c.opt.degree_bound)); }},
        {"ideal.extend",
         [](const Ctx& c) {
             auto R = local_ring(c);
             Poly tb = poly(R, need(c.payload, "tau_bar", "/payload"), "/payload/tau_bar");
             Poly rho = poly(R, need(c.payload, "rho", "/payload"), "/payload/rho");
             auto e = extension_module(R, tb, rho);
             return json{{"presentation", out(e.P)},
                         {"exact", is_exact(e)},
                         {"balanced", is_balanced_extension(R, tb, rho)}};
         }},
        {"ideal.recover",
         [](const Ctx& c) {
             auto R = local_ring(c);
             auto J = recover_ideal(R, poly(R, need(c.payload, "tau_bar", "/payload"), "/payload/tau_bar"));
             json gens = json::array();
             for (const auto& g : J.generators()) gens.push_back(out(g));
             return json{{"a", out(J.a())}, {"b", out(J.b())}, {"generators", gens}};
         }},
        {"hilbert.poly",
         [](const Ctx& c) {
             auto M = payload_module(c);
             json j = out(hilbert_polynomial(M));
             auto gb = groebner_basis(M.ring.ring(), M.ngens, M.relations, {{}, M.ring.trunc()});
             j["hilbert_series"] = hilbert_series(gb, M.degree_vector(), M.ring.t_var(), M.ring.n()).to_string();
             return j;
         }},
        {"hilbert.pred",
         [](const Ctx& c) {
             auto M = payload_module(c);
             auto r = c.payload.contains("filtration")
                          ? reduced_hilbert_polynomial(M, chain(M, c.payload["filtration"], "/payload/filtration"))
                          : reduced_hilbert_polynomial(M);
             auto rd = rank_degree_reduced(M);
             json j = out(r.value);
             j["rank"] = num(rd.rank);
             j["degree"] = num(rd.degree);
             j["user_filtration"] = r.user_supplied;
             return j;
         }},
    };
    return table;
}

json error_doc(const std::string& code, const std::string& loc, const std::string& msg) {
    return {{"ok", false}, {"error", {{"code", code}, {"location", loc}, {"message", msg}}}};
}

}  // namespace

const std::vector<std::string>& commands() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> v;
        for (const auto& [k, h] : handlers()) v.push_back(k);
        return v;
    }();
    return names;
}

json run(const json& job, const Overrides& ov) {
    auto start = std::chrono::steady_clock::now();
    std::string command;
    try {
        if (!job.is_object()) throw schema("", "job must be an object");
        command = get_string(need(job, "command", ""), "/command");
        auto it = handlers().find(command);
        if (it == handlers().end()) throw schema("/command", "unknown command '" + command + "'");

        Ctx c;
        c.payload = job.contains("payload") ? job["payload"] : json::object();
        if (!c.payload.is_object()) throw schema("/payload", "payload must be an object");
        if (job.contains("options")) {
            const json& o = job["options"];
            if (!o.is_object()) throw schema("/options", "options must be an object");
            if (o.contains("jet_order")) c.opt.jet_order = get_int(o["jet_order"], "/options/jet_order");
            if (o.contains("degree_bound")) c.opt.degree_bound = get_int(o["degree_bound"], "/options/degree_bound");
            if (o.contains("verify")) {
                if (!o["verify"].is_boolean()) throw schema("/options/verify", "expected a boolean");
                c.opt.verify = o["verify"].get<bool>();
            }
            if (o.contains("order")) {
                std::string s = get_string(o["order"], "/options/order");
                if (s == "lex") c.opt.order = MonomialOrder::lex();
                else if (s != "grevlex") throw schema("/options/order", "expected 'grevlex' or 'lex'");
            }
        }
        if (ov.jet_order) c.opt.jet_order = *ov.jet_order;
        if (ov.degree_bound) c.opt.degree_bound = *ov.degree_bound;
        if (ov.order) {
            if (*ov.order == "lex") c.opt.order = MonomialOrder::lex();
            else if (*ov.order == "grevlex") c.opt.order = MonomialOrder::grevlex();
            else throw schema("--order", "expected 'grevlex' or 'lex'");
        }
        if (ov.verify) c.opt.verify = true;
        if (c.opt.jet_order < 1) throw schema("/options/jet_order", "jet order must be positive");
        if (c.opt.degree_bound < 0) throw schema("/options/degree_bound", "degree bound must be non-negative");
        if (job.contains("ring")) c.ring = parse_ring(job["ring"], c.opt);

        bool was = verify_enabled();
        set_verify(c.opt.verify);
        json result;
        try {
            result = it->second(c);
        } catch (...) {
            set_verify(was);
            throw;
        }
        set_verify(was);
        auto ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
        return {{"ok", true}, {"command", command}, {"result", result}, {"meta", {{"elapsed_ms", ms}}}};
    } catch (const JobError& e) {
        return error_doc(e.code, e.location, e.what());
    } catch (const std::invalid_argument& e) {
        return error_doc("invalid_argument", "/payload", e.what());
    } catch (const std::logic_error& e) {
        return error_doc("consistency_error", "", e.what());
    } catch (const std::exception& e) {
        return error_doc("computation_error", "", e.what());
    }
}

json run_text(const std::string& text, const Overrides& ov) {
    json job;
    try {
        job = json::parse(text);
    } catch (const json::parse_error& e) {
        return error_doc("parse_error", "byte " + std::to_string(e.byte), e.what());
    }
    return run(job, ov);
}

int exit_code(const json& result) {
    if (result.value("ok", false)) return 0;
    std::string code = result["error"].value("code", "");
    return code == "parse_error" || code == "schema_error" ? 2 : 3;
}

}  // namespace primring::cli
