// bkfilt: command-line front end.
//
//   bkfilt roots   --type B --rank 3
//   bkfilt qanalog --type A --rank 3 --mu 0,1,2 --lambda 0,0,0 --parabolic 2
//   bkfilt cht     --type A --rank 2 --weight -1,-1
//   bkfilt orbit   --type A --rank 3 --partition 3,1
//   bkfilt bk      --type G2 --rank 2 --mu 0,1 --lambda 0,0 --orbit subregular
//   bkfilt verify  --config instances.json

#include "bkf/height.hpp"
#include "bkf/io.hpp"
#include "bkf/qcomb.hpp"
#include "bkf/verify.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

using namespace bkf;
using nlohmann::json;

namespace {

struct Globals {
    std::string type = "A";
    int rank = 1;
    bool root_coords = false;
    bool json_out = false;
    std::uint64_t seed = 0;
    Caps caps;
};

Weight read_weight(const RootSystem& r, const Globals& g, const std::string& text) {
    auto v = parse_int_list(text);
    if (static_cast<int>(v.size()) != r.rank())
        throw Error("cli", "weight '" + text + "' needs " + std::to_string(r.rank()) + " coordinates");
    if (g.root_coords) return r.to_weight(RootVec(v));
    return Weight(v);
}

ParabolicSubset read_parabolic(const RootSystem& r, const std::string& text) {
    std::vector<int> idx;
    for (int i : parse_int_list(text)) {
        if (i < 1 || i > r.rank())
            throw Error("cli", "parabolic index " + std::to_string(i) + " out of range 1.." + std::to_string(r.rank()));
        idx.push_back(i - 1);
    }
    return ParabolicSubset(std::move(idx));
}

std::string one_based(const ParabolicSubset& p) {
    std::vector<int> v;
    for (int i : p.simple_indices) v.push_back(i + 1);
    return "{" + join_ints(v) + "}";
}

OrbitSpec read_orbit(const std::string& partition, const std::string& orbit, bool principal) {
    int given = (!partition.empty()) + (!orbit.empty()) + principal;
    if (given != 1) throw Error("cli", "give exactly one of --partition, --orbit, --principal");
    if (principal) return PrincipalOrbit{};
    if (!partition.empty()) return Partition(parse_int_list(partition));
    if (orbit == "subregular") return SubregularG2{};
    if (orbit == "principal") return PrincipalOrbit{};
    throw Error("cli", "unknown orbit '" + orbit + "' (built-ins: subregular, principal)");
}

int cmd_roots(const Globals& g) {
    RootSystem r = build_root_system(g.type, g.rank, g.caps);
    if (g.json_out) {
        json roots = json::array();
        for (const auto& b : r.positive_roots())
            roots.push_back({{"coords", b.coords.coords}, {"weight", b.weight.coords}, {"long", b.is_long}});
        std::cout << json{{"type", r.label()},
                          {"cartan", r.cartan_matrix()},
                          {"positive_roots", roots},
                          {"rho", r.rho().coords},
                          {"weyl_order", r.expected_weyl_order()}}
                         .dump(2)
                  << '\n';
        return 0;
    }
    std::cout << "type: " << r.label() << "\ncartan:\n";
    for (int i = 0; i < r.rank(); ++i) {
        std::cout << " ";
        for (int j = 0; j < r.rank(); ++j) std::cout << ' ' << r.cartan(i, j);
        std::cout << '\n';
    }
    std::cout << "positive roots (" << r.num_positive_roots() << "):\n";
    for (const auto& b : r.positive_roots())
        std::cout << "  " << to_string(b.coords) << (b.is_long ? " long" : " short") << "  weight "
                  << to_string(b.weight) << '\n';
    std::cout << "rho: " << to_string(r.rho()) << "\n|W|: " << r.expected_weyl_order() << '\n';
    return 0;
}

int cmd_qanalog(const Globals& g, const std::string& mu_s, const std::string& lambda_s, const std::string& par_s) {
    RootSystem r = build_root_system(g.type, g.rank, g.caps);
    Weight mu = read_weight(r, g, mu_s);
    Weight lambda = read_weight(r, g, lambda_s);
    ParabolicSubset p = read_parabolic(r, par_s);
    if (!r.is_dominant(mu)) std::cerr << "warning: mu " << to_string(mu) << " is not dominant\n";
    QPolynomial m = lusztig_q_analog(r, mu, lambda, p, g.caps, Execution::Parallel);
    if (g.json_out)
        std::cout << to_json(m).dump() << '\n';
    else
        std::cout << m.to_string() << '\n';
    return 0;
}

int cmd_cht(const Globals& g, const std::string& w_s) {
    RootSystem r = build_root_system(g.type, g.rank, g.caps);
    Weight w = read_weight(r, g, w_s);
    const Weight p = plus(r, w), s = star(r, w);
    const int c = cht(r, w);
    const bool fast = cht_is_zero_fast(r, w);
    if (g.json_out) {
        std::cout << json{{"weight", w.coords}, {"plus", p.coords}, {"star", s.coords}, {"cht", c}, {"cht_zero_fast", fast}}
                         .dump()
                  << '\n';
        return 0;
    }
    std::cout << "weight: " << to_string(w) << "\nplus: " << to_string(p) << "\nstar: " << to_string(s)
              << "\ncht=" << c << "\ncht_zero_fast: " << (fast ? "true" : "false") << '\n';
    return 0;
}

int cmd_orbit(const Globals& g, const std::string& partition, const std::string& orbit) {
    RootSystem r = build_root_system(g.type, g.rank, g.caps);
    OrbitSpec spec = read_orbit(partition, orbit, false);
    DynkinLabels d = labels_of(r, spec);
    ParabolicSubset p = associated_parabolic(d);
    bool even = is_even(d);
    if (auto* part = std::get_if<Partition>(&spec)) even = is_even(*part);
    json out{{"orbit", describe(spec)}, {"labels", d.labels}, {"parabolic", one_based(p)}, {"even", even}};
    ChevalleyAlgebra alg(r, g.caps);
    std::string support;
    if (even) {
        AlgebraElement x = good_position_representative(alg, d, g.seed);
        for (const auto& [k, c] : x.coefficients)
            support += (support.empty() ? "" : " + ") + (c == 1 ? "" : c.get_str() + "*") +
                       alg.basis_name(static_cast<std::size_t>(k));
        out["representative"] = support.empty() ? "0" : support;
        out["centralizer_dimension"] = centralizer_dimension(alg, x);
        out["levi_dimension"] = levi_dimension(alg, d);
    }
    if (g.json_out) {
        std::cout << out.dump() << '\n';
        return 0;
    }
    std::cout << "orbit: " << describe(spec) << "\nlabels: " << join_ints(d.labels) << "\nparabolic: " << one_based(p)
              << "\nevenness=" << (even ? "true" : "false") << '\n';
    if (even)
        std::cout << "representative: " << out["representative"].get<std::string>()
                  << "\ncentralizer dimension: " << out["centralizer_dimension"]
                  << "\nlevi dimension: " << out["levi_dimension"] << '\n';
    return 0;
}

int cmd_bk(const Globals& g, const std::string& mu_s, const std::string& lambda_s, const std::string& partition,
           const std::string& orbit, bool principal) {
    RootSystem r = build_root_system(g.type, g.rank, g.caps);
    Weight mu = read_weight(r, g, mu_s);
    Weight lambda = read_weight(r, g, lambda_s);
    VerifyOptions opt{g.caps, g.seed, Execution::Parallel};
    Verifier ver(r, read_orbit(partition, orbit, principal), opt);
    ExplicitModule v = build_irrep(r, mu, g.caps);
    FiltrationReport f = bk_jump_polynomial(ver.algebra(), v, ver.nilpotent(), lambda, ver.parabolic());
    if (g.json_out) {
        std::cout << to_json(f).dump() << '\n';
        return 0;
    }
    std::cout << "dim V: " << v.dim() << "\nparabolic: " << one_based(ver.parabolic()) << '\n' << to_text(f);
    return 0;
}

int cmd_verify(const Globals& g, const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cli", "cannot open config '" + path + "'");
    json cfg;
    try {
        cfg = json::parse(in);
    } catch (const json::exception& e) {
        throw Error("cli", std::string("invalid JSON in config: ") + e.what());
    }
    if (!cfg.is_array()) throw Error("cli", "config must be a JSON array of instances");
    json out = json::array();
    int failures = 0;
    for (const auto& inst : cfg) {
        Globals local = g;
        local.type = inst.at("type").get<std::string>();
        local.rank = inst.at("rank").get<int>();
        RootSystem r = build_root_system(local.type, local.rank, g.caps);
        auto weight = [&](const char* key) {
            const auto& j = inst.at(key);
            return j.is_string() ? read_weight(r, local, j.get<std::string>()) : read_weight(r, local, join_ints(j.get<std::vector<int>>()));
        };
        std::string partition;
        if (inst.contains("partition")) {
            const auto& j = inst["partition"];
            partition = j.is_string() ? j.get<std::string>() : join_ints(j.get<std::vector<int>>());
        }
        std::string orbit = inst.value("orbit", "");
        OrbitSpec spec = read_orbit(partition, orbit, false);
        VerificationReport rep =
            verify_theorem(r, weight("mu"), weight("lambda"), spec, VerifyOptions{g.caps, g.seed, Execution::Parallel});
        const bool certified = rep.certificate.verdict != Verdict::Unknown;
        if (certified && !rep.equal) ++failures;
        if (g.json_out) {
            out.push_back(to_json(rep));
        } else {
            std::cout << to_text(rep) << (certified ? (rep.equal ? "status: ok\n" : "status: MISMATCH\n")
                                                    : "status: unchecked\n")
                      << '\n';
        }
    }
    if (g.json_out) std::cout << out.dump(2) << '\n';
    return failures == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Brylinski-Kostant filtrations, parabolic q-analogs and combinatorial heights"};
    app.require_subcommand(1);
    Globals g;
    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--type", g.type, "root system type: A, B, C, D, G2, F4")->required();
        sub->add_option("--rank", g.rank, "rank")->required();
    };
    app.add_flag("--root-coords", g.root_coords, "read weights in simple-root coordinates");
    app.add_flag("--json", g.json_out, "JSON output");
    app.add_option("--seed", g.seed, "seed for good-position draws")->capture_default_str();
    app.add_option("--max-rank", g.caps.max_rank, "rank cap")->capture_default_str()->check(CLI::PositiveNumber);
    app.add_option("--max-weyl-order", g.caps.max_weyl_order, "Weyl group order cap")
        ->capture_default_str()
        ->check(CLI::PositiveNumber);
    app.add_option("--max-ambient-dim", g.caps.max_ambient_dim, "ambient tensor dimension cap")
        ->capture_default_str()
        ->check(CLI::PositiveNumber);
    app.add_option("--max-module-dim", g.caps.max_module_dim, "module dimension cap")
        ->capture_default_str()
        ->check(CLI::PositiveNumber);
    app.fallthrough();

    auto* roots = app.add_subcommand("roots", "print the root system");
    add_common(roots);

    std::string mu, lambda, parabolic, weight, partition, orbit, config;
    bool principal = false;
    auto* qanalog = app.add_subcommand("qanalog", "parabolic Lusztig q-analog m_mu^{P,lambda}(q)");
    add_common(qanalog);
    qanalog->add_option("--mu", mu, "highest weight")->required();
    qanalog->add_option("--lambda", lambda, "weight")->required();
    qanalog->add_option("--parabolic", parabolic, "simple roots of the Levi, 1-based");

    auto* chtc = app.add_subcommand("cht", "combinatorial height");
    add_common(chtc);
    chtc->add_option("--weight", weight, "weight")->required();

    auto* orb = app.add_subcommand("orbit", "nilpotent orbit data");
    add_common(orb);
    orb->add_option("--partition", partition, "type A partition, e.g. 3,1");
    orb->add_option("--orbit", orbit, "built-in orbit name (subregular)");

    auto* bk = app.add_subcommand("bk", "Brylinski-Kostant jump polynomial");
    add_common(bk);
    bk->add_option("--mu", mu, "highest weight")->required();
    bk->add_option("--lambda", lambda, "weight")->required();
    bk->add_option("--partition", partition, "type A partition");
    bk->add_option("--orbit", orbit, "built-in orbit name (subregular, principal)");
    bk->add_flag("--principal", principal, "principal nilpotent");

    auto* ver = app.add_subcommand("verify", "check r = m on a list of instances");
    ver->add_option("--config", config, "JSON array of {type, rank, partition|orbit, mu, lambda}")
        ->required()
        ->check(CLI::ExistingFile);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    }

    try {
        if (*roots) return cmd_roots(g);
        if (*qanalog) return cmd_qanalog(g, mu, lambda, parabolic);
        if (*chtc) return cmd_cht(g, weight);
        if (*orb) return cmd_orbit(g, partition, orbit);
        if (*bk) return cmd_bk(g, mu, lambda, partition, orbit, principal);
        if (*ver) return cmd_verify(g, config);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 2;
}
