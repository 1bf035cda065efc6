#pragma once

// Decides which known sufficient condition for higher cohomology vanishing
// applies to (lambda, P), and compares the jump polynomial r with the
// parabolic q-analog m on concrete instances.

#include "bkf/filtration.hpp"
#include "bkf/kernels.hpp"
#include "bkf/orbits.hpp"
#include "bkf/qpoly.hpp"

#include <string>
#include <variant>
#include <vector>

namespace bkf {

enum class Verdict {
    PCharacter,
    BorelDominant,
    ChtZeroBorel,
    MinimalParabolicDominant,
    MuMinusTwoRhoP,
    TypeARegularDominant,
    Unknown
};

std::string to_string(Verdict v);
Verdict parse_verdict(const std::string& s);

struct VanishingCertificate {
    Verdict verdict = Verdict::Unknown;
    std::string detail;
    bool operator==(const VanishingCertificate&) const = default;
};

/// Rules are tried in the order of the Verdict enum. For the Borel, the
/// character rule is only used for lambda = 0 (every character of B is a
/// B-module, so the rule would otherwise swallow the dominant case).
VanishingCertificate vanishing_certificate(const RootSystem& r, const Weight& lambda, const ParabolicSubset& p);

struct PrincipalOrbit {};
struct SubregularG2 {};
using OrbitSpec = std::variant<Partition, SubregularG2, PrincipalOrbit, DynkinLabels>;

std::string describe(const OrbitSpec& o);
DynkinLabels labels_of(const RootSystem& r, const OrbitSpec& o);

struct VerificationReport {
    std::string type_label;
    int rank = 0;
    std::string orbit;
    Weight mu, lambda;
    ParabolicSubset parabolic;
    std::vector<std::size_t> subspace_dims;
    QPolynomial r, m;
    bool equal = false;
    VanishingCertificate certificate;
    bool operator==(const VerificationReport&) const = default;
};

struct VerifyOptions {
    Caps caps;
    std::uint64_t seed = 0;
    Execution execution = Execution::Serial;
};

/// Full pipeline on a single instance.
VerificationReport verify_theorem(const RootSystem& r, const Weight& mu, const Weight& lambda, const OrbitSpec& orbit,
                                  const VerifyOptions& opt = {});

/// Reusable context for sweeps: one algebra, Weyl group and representative
/// per (root system, orbit); modules are built per mu.
class Verifier {
public:
    Verifier(const RootSystem& r, const OrbitSpec& orbit, const VerifyOptions& opt = {});

    const RootSystem& root_system() const noexcept { return r_; }
    const ParabolicSubset& parabolic() const noexcept { return p_; }
    const ChevalleyAlgebra& algebra() const noexcept { return g_; }
    const AlgebraElement& nilpotent() const noexcept { return x_; }
    const std::vector<WeylElement>& weyl() const noexcept { return weyl_; }

    VerificationReport run(const ExplicitModule& v, const Weight& lambda) const;
    /// Same with the matrix of the nilpotent on v precomputed.
    VerificationReport run(const ExplicitModule& v, const SparseMatrix& x_matrix, const Weight& lambda) const;
    VerificationReport run(const Weight& mu, const Weight& lambda) const;

private:
    RootSystem r_;
    std::string orbit_name_;
    VerifyOptions opt_;
    DynkinLabels labels_;
    ParabolicSubset p_;
    ChevalleyAlgebra g_;
    AlgebraElement x_;
    std::vector<WeylElement> weyl_;
};

/// Dominant weights mu with dim V(mu) <= max_dim, sorted by (dim, coords).
std::vector<Weight> dominant_weights_up_to_dimension(const RootSystem& r, std::size_t max_dim);

/// The even partitions of n (only even or only odd parts).
std::vector<Partition> even_partitions(int n);

}  // namespace bkf
