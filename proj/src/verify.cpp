#include "bkf/verify.hpp"

#include "bkf/height.hpp"
#include "bkf/qcomb.hpp"

#include <algorithm>
#include <set>

namespace bkf {

namespace {
constexpr const char* kModule = "verify";

std::string indices_1based(const ParabolicSubset& p) {
    std::string s = "{";
    for (std::size_t k = 0; k < p.simple_indices.size(); ++k)
        s += (k ? "," : "") + std::to_string(p.simple_indices[k] + 1);
    return s + "}";
}
}  // namespace

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::PCharacter: return "PCharacter";
        case Verdict::BorelDominant: return "BorelDominant";
        case Verdict::ChtZeroBorel: return "ChtZeroBorel";
        case Verdict::MinimalParabolicDominant: return "MinimalParabolicDominant";
        case Verdict::MuMinusTwoRhoP: return "MuMinusTwoRhoP";
        case Verdict::TypeARegularDominant: return "TypeARegularDominant";
        case Verdict::Unknown: return "Unknown";
    }
    return "Unknown";
}

Verdict parse_verdict(const std::string& s) {
    for (auto v : {Verdict::PCharacter, Verdict::BorelDominant, Verdict::ChtZeroBorel,
                   Verdict::MinimalParabolicDominant, Verdict::MuMinusTwoRhoP, Verdict::TypeARegularDominant,
                   Verdict::Unknown})
        if (to_string(v) == s) return v;
    throw Error(kModule, "unknown verdict '" + s + "'");
}

VanishingCertificate vanishing_certificate(const RootSystem& r, const Weight& lambda, const ParabolicSubset& p) {
    r.check_weight(lambda, kModule);
    r.check_parabolic(p, kModule);
    const bool dominant = r.is_dominant(lambda);
    const std::string lam = to_string(lambda);
    const std::string par = indices_1based(p);

    bool character = dominant;
    for (int i : p.simple_indices)
        if (lambda[i] != 0) character = false;
    if (p.is_borel() && lambda != Weight::zero(r.rank())) character = false;
    if (character)
        return {Verdict::PCharacter,
                lam + " is dominant and orthogonal to every simple root of " + par + ", so it is a character of P"};
    if (p.is_borel() && dominant) return {Verdict::BorelDominant, lam + " is dominant and P = B"};
    if (p.is_borel() && cht_is_zero_fast(r, lambda))
        return {Verdict::ChtZeroBorel, "P = B and every coroot pairing of " + lam + " is >= -1, so cht = 0"};
    if (p.size() == 1 && dominant)
        return {Verdict::MinimalParabolicDominant, lam + " is dominant and P = " + par + " is minimal"};
    const Weight nu = lambda + r.two_rho_p(p);
    if (r.is_dominant(nu) && r.is_p_regular_dominant(nu, p))
        return {Verdict::MuMinusTwoRhoP,
                lam + " = nu - 2 rho_P with nu = " + to_string(nu) + " dominant and P-regular dominant"};
    if (r.type() == RootType::A && dominant && std::all_of(lambda.coords.begin(), lambda.coords.end(), [](int c) {
            return c > 0;
        }))
        return {Verdict::TypeARegularDominant, "type A and " + lam + " is regular dominant"};
    return {Verdict::Unknown, "no known vanishing condition applies to " + lam + " with P = " + par};
}

std::string describe(const OrbitSpec& o) {
    struct V {
        std::string operator()(const Partition& p) const {
            std::string s = "partition ";
            for (std::size_t k = 0; k < p.parts.size(); ++k) s += (k ? "," : "") + std::to_string(p.parts[k]);
            return s;
        }
        std::string operator()(const SubregularG2&) const { return "subregular"; }
        std::string operator()(const PrincipalOrbit&) const { return "principal"; }
        std::string operator()(const DynkinLabels& d) const {
            std::string s = "labels ";
            for (std::size_t k = 0; k < d.labels.size(); ++k) s += (k ? "," : "") + std::to_string(d.labels[k]);
            return s;
        }
    };
    return std::visit(V{}, o);
}

DynkinLabels labels_of(const RootSystem& r, const OrbitSpec& o) {
    if (auto* p = std::get_if<Partition>(&o)) {
        if (r.type() != RootType::A) throw Error(kModule, "partitions label orbits only in type A");
        if (p->size() != r.rank() + 1) throw Error(kModule, "partition does not match the rank");
        return weighted_dynkin(*p);
    }
    if (std::holds_alternative<SubregularG2>(o)) {
        if (r.type() != RootType::G2) throw Error(kModule, "the built-in subregular orbit is only provided for G2");
        return g2_subregular_labels();
    }
    if (std::holds_alternative<PrincipalOrbit>(o)) return principal_labels(r.rank());
    const auto& d = std::get<DynkinLabels>(o);
    if (static_cast<int>(d.labels.size()) != r.rank()) throw Error(kModule, "label vector has the wrong length");
    return d;
}

Verifier::Verifier(const RootSystem& r, const OrbitSpec& orbit, const VerifyOptions& opt)
    : r_(r),
      orbit_name_(describe(orbit)),
      opt_(opt),
      labels_(labels_of(r, orbit)),
      p_(associated_parabolic(labels_)),
      g_(r, opt.caps),
      x_(std::holds_alternative<PrincipalOrbit>(orbit) ? principal_nilpotent(g_)
                                                       : good_position_representative(g_, labels_, opt.seed)),
      weyl_(enumerate_weyl_group(r, opt.caps)) {
    if (!is_even(labels_)) throw Error(kModule, "orbit " + orbit_name_ + " is not even");
}

VerificationReport Verifier::run(const ExplicitModule& v, const Weight& lambda) const {
    return run(v, apply_element(g_, v, x_), lambda);
}

VerificationReport Verifier::run(const ExplicitModule& v, const SparseMatrix& x_matrix, const Weight& lambda) const {
    VerificationReport rep;
    rep.type_label = to_string(r_.type());
    rep.rank = r_.rank();
    rep.orbit = orbit_name_;
    rep.mu = v.highest_weight;
    rep.lambda = lambda;
    rep.parabolic = p_;
    FiltrationReport f = bk_jump_polynomial(v, x_matrix, lambda, p_);
    rep.subspace_dims = f.subspace_dims;
    rep.r = f.jump_polynomial;
    rep.m = lusztig_q_analog(r_, weyl_, v.highest_weight, lambda, p_, opt_.execution);
    rep.equal = rep.r == rep.m;
    rep.certificate = vanishing_certificate(r_, lambda, p_);
    return rep;
}

VerificationReport Verifier::run(const Weight& mu, const Weight& lambda) const {
    ExplicitModule v = build_irrep(r_, mu, opt_.caps);
    return run(v, lambda);
}

VerificationReport verify_theorem(const RootSystem& r, const Weight& mu, const Weight& lambda, const OrbitSpec& orbit,
                                  const VerifyOptions& opt) {
    r.check_weight(mu, kModule);
    r.check_weight(lambda, kModule);
    if (!r.is_dominant(mu)) throw Error(kModule, "highest weight " + to_string(mu) + " is not dominant");
    return Verifier(r, orbit, opt).run(mu, lambda);
}

std::vector<Weight> dominant_weights_up_to_dimension(const RootSystem& r, std::size_t max_dim) {
    // dim V(mu) strictly increases with each coordinate, so a BFS from 0
    // adding fundamental weights reaches every admissible mu.
    std::set<Weight> seen{Weight::zero(r.rank())};
    std::vector<Weight> queue{Weight::zero(r.rank())};
    const BigInt cap(static_cast<unsigned long>(max_dim));
    for (std::size_t head = 0; head < queue.size(); ++head)
        for (int i = 0; i < r.rank(); ++i) {
            Weight next = queue[head];
            next.coords[static_cast<std::size_t>(i)] += 1;
            if (seen.count(next) || weyl_dimension(r, next) > cap) continue;
            seen.insert(next);
            queue.push_back(next);
        }
    std::vector<std::pair<BigInt, Weight>> keyed;
    for (auto& w : queue) keyed.emplace_back(weyl_dimension(r, w), w);
    std::sort(keyed.begin(), keyed.end());
    std::vector<Weight> out;
    for (auto& [d, w] : keyed) out.push_back(w);
    return out;
}

std::vector<Partition> even_partitions(int n) {
    std::vector<Partition> out;
    for (auto& p : partitions_of(n))
        if (is_even(p)) out.push_back(p);
    return out;
}

}  // namespace bkf
