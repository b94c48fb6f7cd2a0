// One line per acceptance criterion; exit status 0 iff every criterion passes.
#include "freedist/battery.hpp"
#include "freedist/cohomology.hpp"
#include "freedist/normalization.hpp"
#include "freedist/spinorial.hpp"
#include "support/frames.hpp"
#include "support/harmonic_checks.hpp"
#include "support/oracles.hpp"

#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>

using namespace freedist;

namespace {

struct Outcome {
    bool passed = true;
    std::ostringstream detail;

    void require(bool ok, const std::string& what)
    {
        if (ok) return;
        if (passed) detail << "failed: ";
        else detail << "; ";
        detail << what;
        passed = false;
    }
    void all(const std::vector<CheckResult>& results)
    {
        for (const CheckResult& r : results) require(r.passed, r.name + " (" + r.detail + ")");
    }
};

bool p_trace_free(int l, const Tensor& P)
{
    for (int s = 1; s <= l; ++s)
        for (int j = 1; j <= l; ++j)
            for (int k = 1; k <= l; ++k) {
                Polynomial t1, t2;
                for (int i = 1; i <= l; ++i) t1 += P({i, s, i, j, k});
                for (int r = 1; r <= l; ++r) t2 += P({r, s, j, r, k});
                if (!t1.is_zero() || !t2.is_zero()) return false;
            }
    return true;
}

Chain<Polynomial> homogeneous(const Chain<Polynomial>& c, int h)
{
    return c.filtered([&](const ChainKey& k) { return c.homogeneity(k) == h; });
}

void armstrong(Outcome& o)
{
    for (int l = 4; l <= 6; ++l) {
        const std::string at = " at l=" + std::to_string(l);
        Frame frame = build_frame(testsupport::armstrong_distribution(l));
        Analysis a = analyze(frame);
        const std::size_t slot34 = frame.pair_slot(3, 4);
        o.require(a.f.entries().size() == 1 && a.f.single_pair(slot34, 1, 1, 2) == Polynomial(1),
                  "f has the single entry f^[34]_1[12] = 1" + at);
        o.require(a.connection.A.is_zero() && a.connection.C.is_zero(), "A = C = 0" + at);
        o.require(a.curvature.P.entries().size() == 1 && a.curvature.P({3, 4, 1, 1, 2}) == Polynomial(1),
                  "P has the single entry P^[34]_1[12] = 1" + at);
        o.require(a.connection.E.is_zero() && a.connection.F.is_zero(), "E = F = 0" + at);
        o.require(a.curvature.R.is_zero() && a.curvature.S.is_zero() && a.curvature.T.is_zero(), "R = S = T = 0" + at);
        o.require(!a.flat, "flat = false" + at);
        o.require(a.kappa11_deg2_zero, "kappa11_deg2_zero" + at);
        Inclusion inc(l);
        o.require(kappa11_normality(inc, curvature_chain(inc.g(), a.curvature)), "kappa11 normality of the chain" + at);
    }
    o.detail << "l=4..6";
}

void flat_model(Outcome& o)
{
    for (int l = 4; l <= 5; ++l) {
        Analysis a = analyze(build_frame(testsupport::flat_distribution(l)));
        const auto& c = a.connection;
        const auto& k = a.curvature;
        o.require(a.f.entries().empty() && c.A.is_zero() && c.C.is_zero() && c.E.is_zero() && c.F.is_zero() &&
                      k.P.is_zero() && k.R.is_zero() && k.S.is_zero() && k.T.is_zero() && a.flat,
                  "flat model l=" + std::to_string(l));
    }
    o.detail << "l=4,5";
}

void algebra(Outcome& o)
{
    Inclusion inc(4);
    o.all(check_trace_form(*inc.g()));
    o.require(check_alpha_homomorphism(inc).passed, "alpha homomorphism");
    o.require(check_phi_duality(inc).passed, "phi duality");
    auto delta = check_delta_relations(inc);
    o.require(delta.size() == 5, "five Delta relations");
    o.all(delta);
    o.detail << "pairings, alpha, phi, " << delta.size() << " Delta relations";
}

void operator_identity(Outcome& o)
{
    Inclusion inc(4);
    auto checks = check_closed_forms(inc);
    o.all(checks);
    for (std::size_t i = 0; i < checks.size(); ++i) o.detail << (i ? "; " : "") << checks[i].name << " " << checks[i].detail;
}

void operator_kernel(Outcome& o)
{
    Inclusion inc(4);
    auto checks = check_operator_kernel(inc);
    o.all(checks);
    o.detail << checks.size() << " kernel checks";
}

void kappa11_suite(Outcome& o)
{
    Inclusion inc(4);
    Kappa11Suite s = kappa11_property_suite(inc, 100, 20240611);
    o.require(s.passed(), "random chain suite");
    o.detail << "rejected " << s.rejected_with_kappa11 << "/" << s.trials << ", accepted "
             << s.accepted_with_side_conditions << "/" << s.trials << ", side-condition space dim "
             << s.side_condition_dimension;
}

void cohomology(Outcome& o)
{
    auto g = GradedAlgebra::create(AlgebraKind::B, 4);
    HarmonicSpace h1 = harmonic_space(g, 2, 1);
    o.require(h1.dimension() > 0, "nonzero harmonic 2-chains at h=1");
    for (const ScalarChain& c : h1.basis) {
        o.require(oracle::in_hom_g1_g2_to_g2(*g, c), "support in Hom(g-1^g-2, g-2)");
        o.require(oracle::totally_trace_free(*g, c), "totally trace-free");
    }
    const std::size_t kernel = oracle::trace_free_dimension(4);
    o.require(h1.dimension() == kernel, "dimension equals trace-equation kernel");
    for (int h = 2; h <= 4; ++h) o.require(harmonic_space(g, 2, h).dimension() == 0, "H^2 vanishes at h=" + std::to_string(h));
    for (int h = 0; h <= 4; ++h) o.require(harmonic_space(g, 1, h).dimension() == 0, "H^1 vanishes at h=" + std::to_string(h));
    o.detail << "dim H^2_1 = " << h1.dimension() << ", kernel oracle = " << kernel;
}

void normalization(Outcome& o)
{
    const int l = 4;
    auto g = GradedAlgebra::create(AlgebraKind::B, l);
    std::mt19937 rng(8);
    int frames = 0, nonflat = 0;
    for (; frames < 25; ++frames) {
        Frame frame = build_frame(testsupport::parse_fields(testsupport::random_field_text(l, rng)));
        Analysis a = analyze(frame);
        nonflat += !a.flat;
        const std::string at = " (frame " + std::to_string(frames) + ")";
        Chain<Polynomial> kappa = curvature_chain(g, a.curvature);
        o.require(codifferential(homogeneous(kappa, 1)).is_zero(), "d* of homogeneity-1 chain" + at);
        o.require(codifferential(homogeneous(kappa, 2)).is_zero(), "d* of homogeneity-2 chain" + at);
        for (int k = 1; k <= l; ++k) {
            Polynomial tr;
            for (int i = 1; i <= l; ++i) tr += a.connection.A({i, i, k});
            o.require(tr.is_zero(), "sum_i A^i_ik = 0" + at);
        }
        o.require(p_trace_free(l, a.curvature.P), "P totally trace-free" + at);
        for (int i = 1; i <= l; ++i)
            for (int j = 1; j <= l; ++j) o.require(a.connection.F({i, j}) == a.connection.F({j, i}), "F symmetric" + at);
        Analysis b = analyze(frame);
        o.require(b.connection.A == a.connection.A && b.connection.C == a.connection.C &&
                      b.connection.E == a.connection.E && b.connection.F == a.connection.F &&
                      b.curvature.P == a.curvature.P && b.curvature.R == a.curvature.R &&
                      b.curvature.S == a.curvature.S && b.curvature.T == a.curvature.T,
                  "rerun identical" + at);
    }
    o.detail << frames << " frames, " << nonflat << " non-flat";
}

void pfaffian_cone(Outcome& o)
{
    std::mt19937 rng(9);
    std::uniform_int_distribution<long> num(-6, 6), den(1, 5);
    auto scalar = [&] { return ExactScalar::rational(num(rng), den(rng)) + ExactScalar::rational(num(rng), den(rng)) * ExactScalar::sqrt2(); };
    int squares = 0;
    for (std::size_t n : {4u, 6u})
        for (int t = 0; t < 20; ++t, ++squares) {
            ScalarMatrix m(n);
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = i + 1; j < n; ++j) m(i, j) = scalar(), m(j, i) = -m(i, j);
            const ExactScalar pf = pfaffian(m);
            o.require(pf * pf == determinant(m), "Pf^2 = det");
        }
    const Signature sig = signature(pfaffian_quadratic_form(3));
    o.require(sig == Signature{3, 3, 0}, "signature (3,3)");
    int decomposable = 0;
    for (int t = 0; t < 20; ++t, ++decomposable) {
        std::vector<ExactScalar> s(4), u(4);
        for (auto& x : s) x = scalar();
        for (auto& x : u) x = scalar();
        ScalarMatrix m(4);
        for (std::size_t i = 0; i < 4; ++i)
            for (std::size_t j = 0; j < 4; ++j) m(i, j) = s[i] * u[j] - u[i] * s[j];
        o.require(null_cone_member(3, skew_to_tangent(m)), "decomposable vector on the cone");
    }
    o.detail << squares << " Pf^2=det checks, signature (" << sig.positive << "," << sig.negative << "), "
             << decomposable << " decomposable vectors";
}

void complex_squares(Outcome& o)
{
    auto g = GradedAlgebra::create(AlgebraKind::B, 4);
    std::size_t chains = 0;
    for (int k = 0; k <= 2; ++k)
        for (const ChainKey& key : chain_basis(*g, k)) {
            ScalarChain c(g, k);
            c.add(key.slots, key.target, ExactScalar(1));
            o.require(differential(differential(c)).is_zero(), "d o d = 0 on degree " + std::to_string(k));
            ++chains;
        }
    for (int k = 2; k <= 3; ++k)
        for (const ChainKey& key : chain_basis(*g, k)) {
            ScalarChain c(g, k);
            c.add(key.slots, key.target, ExactScalar(1));
            o.require(codifferential(codifferential(c)).is_zero(), "d* o d* = 0 on degree " + std::to_string(k));
            ++chains;
        }
    o.detail << chains << " basis chains (d on degrees 0..2, d* on degrees 2..3)";
}

}  // namespace

int main()
{
    const std::vector<std::pair<std::string, std::function<void(Outcome&)>>> criteria = {
        {"Armstrong golden example", armstrong},
        {"flat model golden example", flat_model},
        {"algebra battery", algebra},
        {"commutator operator closed forms", operator_identity},
        {"kernel of the commutator operator", operator_kernel},
        {"kappa11 property suite", kappa11_suite},
        {"harmonic cochains", cohomology},
        {"normalization self-consistency", normalization},
        {"Pfaffian and null cone", pfaffian_cone},
        {"d o d = 0 and d* o d* = 0", complex_squares},
    };
    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Outcome o;
        const auto start = std::chrono::steady_clock::now();
        try {
            criteria[i].second(o);
        } catch (const std::exception& e) {
            o.require(false, std::string("exception: ") + e.what());
        }
        const auto ms =
            std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
        failures += !o.passed;
        std::cout << "criterion " << (i + 1) << " " << (o.passed ? "PASS" : "FAIL") << " " << criteria[i].first << ": "
                  << o.detail.str() << " [" << ms << " ms]" << std::endl;
    }
    return failures == 0 ? 0 : 1;
}
