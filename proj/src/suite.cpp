#include "powops/suite.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <chrono>
#include <exception>
#include <mutex>
#include <sstream>
#include <thread>

#include "json.hpp"
#include "powops/bott.hpp"
#include "powops/chartable.hpp"
#include "powops/eqmodule.hpp"
#include "powops/group.hpp"
#include "powops/lattices.hpp"
#include "powops/partitions.hpp"
#include "powops/quadfield.hpp"
#include "powops/symfunc.hpp"

namespace powops {

namespace {

using OJson = nlohmann::ordered_json;

struct RunOut {
    std::string status;
    std::string witness;
};

// ---- parameter access (fills defaults back into the object for the echo) --

long p_long(OJson& p, const std::string& key, long dflt) {
    if (!p.contains(key)) {
        p[key] = dflt;
        return dflt;
    }
    const OJson& v = p.at(key);
    if (!v.is_number_integer())
        throw domain_error("parameter '" + key + "' must be an integer");
    return v.get<long>();
}

std::string p_str(OJson& p, const std::string& key, const std::string& dflt) {
    if (!p.contains(key)) {
        p[key] = dflt;
        return dflt;
    }
    const OJson& v = p.at(key);
    if (!v.is_string()) throw domain_error("parameter '" + key + "' must be a string");
    return v.get<std::string>();
}

bool p_bool(OJson& p, const std::string& key, bool dflt) {
    if (!p.contains(key)) {
        p[key] = dflt;
        return dflt;
    }
    const OJson& v = p.at(key);
    if (!v.is_boolean()) throw domain_error("parameter '" + key + "' must be a boolean");
    return v.get<bool>();
}

std::vector<int> p_int_list(OJson& p, const std::string& key, std::vector<int> dflt) {
    if (!p.contains(key)) {
        p[key] = OJson(dflt);
        return dflt;
    }
    const OJson& v = p.at(key);
    if (!v.is_array()) throw domain_error("parameter '" + key + "' must be an array of integers");
    std::vector<int> out;
    for (const auto& e : v) {
        if (!e.is_number_integer())
            throw domain_error("parameter '" + key + "' must be an array of integers");
        out.push_back(e.get<int>());
    }
    if (out.empty()) throw domain_error("parameter '" + key + "' must not be empty");
    return out;
}

std::string join_longs(const std::vector<long>& v) {
    std::ostringstream os;
    for (size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
    return os.str();
}

bool squarefree_long(long d) {
    if (d < 0) d = -d;
    if (d == 0) return false;
    for (long q = 2; q * q <= d; ++q)
        while (d % q == 0) {
            d /= q;
            if (d % q == 0) return false;
        }
    return true;
}

// ---- individual check runners ----------------------------------------------

RunOut run_newton_cauchy(OJson& p) {
    long max_i = p_long(p, "max_i", 6);
    if (max_i < 1) throw domain_error("max_i must be >= 1");
    std::string sample;
    for (long i = 1; i <= max_i; ++i) {
        IdentityReport r = verify_newton_cauchy(static_cast<int>(i));
        if (!r.pass)
            return {"fail", "i=" + std::to_string(i) + ": lhs = " + r.lhs +
                                " but rhs = " + r.rhs};
        if (i == std::min<long>(2, max_i)) sample = r.lhs;
    }
    return {"pass", "N_i of the product class equals N_i(X)*N_i(Y) for i=1.." +
                        std::to_string(max_i) + "; sample i=2: " + sample};
}

RunOut run_q_specialization(OJson& p) {
    long max_j = p_long(p, "max_j", 6);
    if (max_j < 1) throw domain_error("max_j must be >= 1");
    std::string sample;
    for (long j = 1; j <= max_j; ++j) {
        IdentityReport r = verify_q_specialization(static_cast<int>(j));
        if (!r.pass)
            return {"fail", "j=" + std::to_string(j) + ": lhs = " + r.lhs +
                                " but rhs = " + r.rhs};
        if (j == std::min<long>(2, max_j)) sample = r.lhs;
    }
    return {"pass", "Q_j at the one-hot second alphabet equals N_j for j=1.." +
                        std::to_string(max_j) + "; sample j=2: " + sample};
}

RunOut run_module_cauchy(OJson& p) {
    std::string gs = p_str(p, "group", "S3");
    std::string vn = p_str(p, "V", "std");
    std::string wn = p_str(p, "W", "std");
    long max_i = p_long(p, "max_i", 4);
    GroupRef ctx = group_ctx_from_spec(gs);
    EquivariantModule V = module_by_name(ctx, vn);
    EquivariantModule W = module_by_name(ctx, wn);
    for (long i = 0; i <= max_i; ++i) {
        CheckResult r = verify_module_cauchy(V, W, static_cast<int>(i));
        if (!r.pass) return {"fail", "i=" + std::to_string(i) + ": " + r.detail};
    }
    return {"pass", gs + ": exterior characters of " + vn + " (dim " +
                        std::to_string(V.dim()) + ") tensor " + wn + " (dim " +
                        std::to_string(W.dim()) +
                        ") match the two-alphabet polynomials for i=0.." +
                        std::to_string(max_i)};
}

RunOut run_schur_law(OJson& p) {
    std::string gs = p_str(p, "group", "S3");
    std::string mn = p_str(p, "module", "std");
    long max_size = p_long(p, "max_size", 4);
    GroupRef ctx = group_ctx_from_spec(gs);
    EquivariantModule V = module_by_name(ctx, mn);
    int count = 0;
    for (long s = 1; s <= max_size; ++s)
        for (const Partition& lam : partitions_of(static_cast<int>(s))) {
            CheckResult r = verify_prop_2_1(V, lam);
            if (!r.pass)
                return {"fail", "lambda=" + partition_str(lam) + ": " + r.detail};
            ++count;
        }
    return {"pass", gs + ", " + mn + " (dim " + std::to_string(V.dim()) + "): " +
                        std::to_string(count) +
                        " shapes up to size " + std::to_string(max_size) +
                        ": image and coimage characters match the determinantal "
                        "evaluations, dimensions match the hook-content counts"};
}

RunOut run_regular_fixed(OJson& p) {
    std::string gs = p_str(p, "group", "S3");
    GroupRef ctx = group_ctx_from_spec(gs);
    long n = ctx->G.n;
    long max_k = p_long(p, "max_k", 2 * n);
    bool allow = p_bool(p, "allow_noncoprime", false);
    std::vector<long> tested;
    for (long k = 1; k <= max_k; ++k) {
        if (!allow && gcd_long(k, n) != 1) continue;
        CheckResult r = verify_regular_fixed(ctx, k, false);
        if (!r.pass) return {"fail", r.detail};
        tested.push_back(k);
    }
    return {"pass", gs + ": psi^k(reg) = reg for k in {" + join_longs(tested) + "}"};
}

RunOut run_orbit_law(OJson& p) {
    std::string gs = p_str(p, "group", "C2");
    long n = p_long(p, "n", 1);
    std::vector<int> ks = p_int_list(p, "powers", {2});
    GroupRef ctx = group_ctx_from_spec(gs);
    CheckResult r = verify_prop_1_1(ctx, static_cast<int>(n), ks);
    return {r.pass ? "pass" : "fail", r.detail};
}

RunOut run_adjoint(OJson& p) {
    std::string gs = p_str(p, "group", "S3");
    GroupRef ctx = group_ctx_from_spec(gs);
    CharacterTable t = character_table(ctx);
    long e = group_exponent(ctx->G);
    long max_k = p_long(p, "max_k", 2 * e);
    std::vector<long> inverted;
    for (long k = 1; k <= max_k; ++k) {
        CheckResult r = verify_adjoint_pairing(t, k);
        if (!r.pass) return {"fail", r.detail};
        if (gcd_long(k, ctx->G.n) == 1) {
            long kp = inverse_mod(k, e);
            CheckResult r2 = verify_adjoint_is_inverse_adams(t, k, kp);
            if (!r2.pass) return {"fail", r2.detail};
            inverted.push_back(k);
        }
    }
    return {"pass", gs + ": adjointness on all irreducible pairs for k=1.." +
                        std::to_string(max_k) +
                        "; adjoint equals the inverse-exponent operation at k in {" +
                        join_longs(inverted) + "} (exponent " + std::to_string(e) + ")"};
}

RunOut run_quaternion_symplectic(OJson& p) {
    long max_k = p_long(p, "max_k", 8);
    GroupRef ctx = group_ctx_from_spec("Q8");
    CharacterTable t = character_table(ctx);
    FSData fs = fs_classify(t);
    int h = -1;
    int triv = t.trivial_index();
    std::vector<int> ones;
    for (int i = 0; i < t.size(); ++i) {
        if (fs.indicator[i] == -1) {
            if (h != -1) return {"fail", "two quaternionic rows in the table"};
            h = i;
        }
        if (t.row(i).degree() == 1 && i != triv) ones.push_back(i);
    }
    if (h < 0 || ones.size() != 3 || t.size() != 5)
        return {"fail", "unexpected table shape for Q8"};

    std::vector<Int> coords = t.decompose(adams(t.row(h), 2));
    std::vector<Int> expected(t.size(), Int(0));
    expected[triv] = -1;
    for (int i : ones) expected[i] = 1;
    if (coords != expected) {
        std::ostringstream os;
        os << "psi^2(chi_H) decomposes as [";
        for (size_t i = 0; i < coords.size(); ++i) os << (i ? "," : "") << coords[i].get_str();
        os << "], expected -triv + the three nontrivial degree-1 rows";
        return {"fail", os.str()};
    }
    SymplecticCheck sc = in_symplectic_subgroup(t, fs, coords);
    if (sc.member)
        return {"fail", "psi^2(chi_H) unexpectedly lies in the symplectic subgroup"};
    std::string obstruction = sc.violations.empty() ? "" : sc.violations.front();

    for (long k = 1; k <= max_k; ++k) {
        std::vector<Int> ck = t.decompose(adams_adjoint(t.row(h), k));
        SymplecticCheck m = in_symplectic_subgroup(t, fs, ck);
        if (!m.member) {
            std::ostringstream os;
            os << "adjoint power k=" << k << " leaves the symplectic subgroup: [";
            for (size_t i = 0; i < ck.size(); ++i) os << (i ? "," : "") << ck[i].get_str();
            os << "]";
            return {"fail", os.str()};
        }
    }
    return {"pass", "psi^2(chi_H) = -triv + chi_a + chi_b + chi_c, outside the "
                    "symplectic subgroup (" + obstruction +
                    "); the adjoint powers stay inside for k=1.." + std::to_string(max_k)};
}

RunOut run_koszul_paths(OJson& p) {
    std::string gs = p_str(p, "group", "S3");
    long max_degree = p_long(p, "max_degree", 8);
    long max_i = p_long(p, "max_i", 4);
    GroupRef ctx = group_ctx_from_spec(gs);
    CharacterTable t = character_table(ctx);
    std::vector<ClassFunction> targets;
    for (int i = 0; i < t.size(); ++i)
        if (t.row(i).degree() <= max_degree) targets.push_back(t.row(i));
    if (Int(ctx->G.n) <= max_degree) targets.push_back(ClassFunction::regular(ctx));
    int koszul = 0;
    for (const ClassFunction& chi : targets)
        for (long i = 1; i <= max_i; ++i) {
            CheckResult r = verify_koszul(chi, static_cast<int>(i));
            if (!r.pass) return {"fail", r.detail};
            ++koszul;
        }
    int paths = 0;
    for (int a = 0; a < t.size(); ++a) {
        if (t.row(a).degree() > max_degree) continue;
        for (int b = 0; b < t.size(); ++b) {
            if (t.row(b).degree() > max_degree) continue;
            for (long i = 1; i <= max_i; ++i) {
                CheckResult r = verify_virtual_sigma_paths(t.row(a), t.row(b),
                                                           static_cast<int>(i));
                if (!r.pass)
                    return {"fail", "rows (" + std::to_string(a) + "," +
                                        std::to_string(b) + "), i=" + std::to_string(i) +
                                        ": " + r.detail};
                ++paths;
            }
        }
    }
    return {"pass", gs + ": " + std::to_string(koszul) +
                        " alternating sums vanish; " + std::to_string(paths) +
                        " virtual symmetric classes agree across the two routes"};
}

RunOut run_periodicity(OJson& p) {
    std::string gs = p_str(p, "group", "S3");
    GroupRef ctx = group_ctx_from_spec(gs);
    CharacterTable t = character_table(ctx);
    long e = group_exponent(ctx->G);
    long max_k = p_long(p, "max_k", 2 * e);
    for (long k = 1; k <= max_k; ++k) {
        CheckResult r = verify_periodicity(t, k);
        if (!r.pass) return {"fail", r.detail};
    }
    return {"pass", gs + ": psi^k = psi^(k+" + std::to_string(e) +
                        ") on all irreducibles for k=1.." + std::to_string(max_k)};
}

// Right-multiplication matrix of the group-ring element with the given
// coefficient vector (indexed by element id) on the left regular lattice.
IntMatrix right_mult_matrix(const GroupRef& ctx, const std::vector<long>& coeffs) {
    int n = ctx->G.n;
    if (static_cast<int>(coeffs.size()) > n)
        throw domain_error("group-ring coefficient vector longer than the group order");
    IntMatrix m(n, n);
    for (int x = 0; x < static_cast<int>(coeffs.size()); ++x) {
        if (coeffs[x] == 0) continue;
        for (int y = 0; y < n; ++y) m.at(ctx->G.mul[y][x], y) += coeffs[x];
    }
    return m;
}

RunOut run_lattice_compat(OJson& p) {
    std::string gs = p_str(p, "group", "C2");
    GroupRef ctx = group_ctx_from_spec(gs);

    if (!p.contains("beta")) p["beta"] = OJson::array({2, 1});
    const OJson& bspec = p.at("beta");
    std::vector<OJson> bitems;
    bool multi = bspec.is_array() && !bspec.empty() &&
                 (bspec.front().is_array() || bspec.front().is_string());
    if (multi)
        for (const auto& e : bspec) bitems.push_back(e);
    else
        bitems.push_back(bspec);

    std::vector<IntMatrix> betas;
    std::vector<std::string> beta_shown;
    for (const OJson& b : bitems) {
        if (b.is_string()) {
            betas.push_back(beta_from_file(b.get<std::string>()));
            beta_shown.push_back(b.get<std::string>());
        } else if (b.is_array()) {
            std::vector<long> coeffs;
            for (const auto& e : b) {
                if (!e.is_number_integer())
                    throw domain_error("parameter 'beta' must hold integers or a file path");
                coeffs.push_back(e.get<long>());
            }
            betas.push_back(right_mult_matrix(ctx, coeffs));
            std::ostringstream os;
            os << "[" << join_longs(coeffs) << "]";
            beta_shown.push_back(os.str());
        } else {
            throw domain_error("parameter 'beta' must be a coefficient array or a file path");
        }
    }

    long default_k = 2;
    while (gcd_long(default_k, ctx->G.n) != 1) ++default_k;
    std::vector<int> ks;
    if (p.contains("k") && p.at("k").is_array())
        ks = p_int_list(p, "k", {});
    else
        ks.assign(betas.size(), static_cast<int>(p_long(p, "k", default_k)));
    if (ks.size() != betas.size())
        throw domain_error("parameter 'k' must give one exponent per beta factor");

    long pr = p_long(p, "p", 0);
    if (pr == 0) {
        Int det_prod = 1;
        for (const IntMatrix& b : betas) det_prod *= bareiss_det(b);
        if (det_prod == 0) throw domain_error("beta must be nonsingular");
        if (det_prod < 0) det_prod = -det_prod;
        pr = 2;
        for (long q = 2; q <= 997; ++q) {
            bool isprime = q >= 2;
            for (long d2 = 2; d2 * d2 <= q; ++d2)
                if (q % d2 == 0) isprime = false;
            if (isprime && det_prod % q == 0) {
                pr = q;
                break;
            }
        }
        p["p"] = pr;
    }

    GammaLattice F = group_ring_lattice(ctx, 1);
    CheckResult r = verify_lemma_3_2b(F, betas, ks, pr);
    std::ostringstream head;
    head << gs << ", beta = ";
    for (size_t i = 0; i < beta_shown.size(); ++i) head << (i ? " (x) " : "") << beta_shown[i];
    head << ", k = ";
    for (size_t i = 0; i < ks.size(); ++i) head << (i ? "," : "") << ks[i];
    head << ", p = " << pr << ": ";
    return {r.pass ? "pass" : "fail", head.str() + r.detail};
}

RunOut run_quad_invariants(OJson& p) {
    long max_abs = p_long(p, "max_abs_D", 50);
    int fields = 0, primes = 0;
    for (long D = -max_abs; D <= max_abs; ++D) {
        if (D == 0 || D == 1 || !squarefree_long(D)) continue;
        QuadraticField Q = quad_build(D);
        DifferentData dd = quad_different(Q);
        OmegaPresentation om = quad_omega(Q);
        long abs_disc = Q.disc < 0 ? -Q.disc : Q.disc;
        if (om.order != abs_disc)
            return {"fail", "D=" + std::to_string(D) + ": presentation order " +
                                om.order.get_str() + " but |disc| = " +
                                std::to_string(abs_disc)};
        if (!om.annihilator_matches)
            return {"fail", "D=" + std::to_string(D) +
                                ": annihilator differs from the derivative ideal"};
        if (dd.norm != abs_disc)
            return {"fail", "D=" + std::to_string(D) + ": derivative norm " +
                                dd.norm.get_str() + " but |disc| = " +
                                std::to_string(abs_disc)};
        fields += 1;
        primes += static_cast<int>(dd.primes.size());
    }
    return {"pass", std::to_string(fields) + " fields with |D| <= " +
                        std::to_string(max_abs) +
                        ": presentation order = |disc|, annihilator = derivative "
                        "ideal, local valuations over " +
                        std::to_string(primes) + " ramified primes multiply back"};
}

RunOut run_quad_sequence(OJson& p) {
    if (p.contains("D") && p.contains("D_range"))
        throw domain_error("give either 'D' or 'D_range', not both");
    if (p.contains("D")) {
        long D = p_long(p, "D", 5);
        CheckResult r = verify_example_4_4(quad_build(D));
        return {r.pass ? "pass" : "fail", "D=" + std::to_string(D) + ": " + r.detail};
    }
    std::string range = p_str(p, "D_range", "-50..50");
    size_t dots = range.find("..");
    if (dots == std::string::npos)
        throw domain_error("parameter 'D_range' must look like \"-10..10\"");
    long lo = std::stol(range.substr(0, dots));
    long hi = std::stol(range.substr(dots + 2));
    if (lo > hi) throw domain_error("parameter 'D_range': empty range");
    int count = 0;
    std::string sample;
    for (long D = lo; D <= hi; ++D) {
        if (D == 0 || D == 1 || !squarefree_long(D)) continue;
        CheckResult r = verify_example_4_4(quad_build(D));
        if (!r.pass) return {"fail", "D=" + std::to_string(D) + ": " + r.detail};
        if (sample.empty()) sample = "D=" + std::to_string(D) + ": " + r.detail;
        ++count;
    }
    if (count == 0) return {"skip", "no squarefree D in " + range};
    return {"pass", std::to_string(count) + " fields in " + range +
                        ": scaled inverse-different sequence exact and equivariant; "
                        "sample " + sample};
}

RunOut run_quad_layers(OJson& p) {
    long D = p_long(p, "D", 3);
    CheckResult r = verify_thm_4_1_all(quad_build(D));
    return {r.pass ? "pass" : "fail", "D=" + std::to_string(D) + ": " + r.detail};
}

RunOut run_bott_identities(OJson& p) {
    bool single = p.contains("m") || p.contains("k") || p.contains("kprime");
    if (single) {
        long m = p_long(p, "m", 4);
        long k = p_long(p, "k", 3);
        long kp = p.contains("kprime") ? p_long(p, "kprime", 0) : inverse_mod(k, m);
        p["kprime"] = kp;
        CheckResult r = verify_lemma_5_7(static_cast<int>(m), k, kp);
        if (!r.pass) return {"fail", r.detail};
        Int aug = cyc_augmentation(bott_element(static_cast<int>(m), k));
        if (aug != k)
            return {"fail", "augmentation sends theta^k to " + aug.get_str() +
                                ", expected " + std::to_string(k)};
        return {"pass", r.detail + "; augmentation theta^k -> k"};
    }
    long max_m = p_long(p, "max_m", 12);
    long max_k = p_long(p, "max_k", 12);
    int count = 0;
    std::string sample;
    for (long m = 1; m <= max_m; ++m)
        for (long k = 1; k <= max_k; ++k) {
            if (gcd_long(k, m) != 1) continue;
            long kp = inverse_mod(k, m);
            CheckResult r = verify_lemma_5_7(static_cast<int>(m), k, kp);
            if (!r.pass)
                return {"fail", "m=" + std::to_string(m) + " k=" + std::to_string(k) +
                                    " kprime=" + std::to_string(kp) + ": " + r.detail};
            Int aug = cyc_augmentation(bott_element(static_cast<int>(m), k));
            if (aug != k)
                return {"fail", "m=" + std::to_string(m) + " k=" + std::to_string(k) +
                                    ": augmentation gives " + aug.get_str()};
            if (m == 4 && k == 3) sample = r.detail;
            ++count;
        }
    return {"pass", std::to_string(count) + " coprime pairs with m <= " +
                        std::to_string(max_m) + ", k <= " + std::to_string(max_k) +
                        ", minimal kprime: identities (i)-(iv) and the augmentation "
                        "shadow hold; sample " + sample};
}

RunOut run_bott_shape(OJson& p) {
    bool single = p.contains("m") || p.contains("k");
    if (single) {
        long m = p_long(p, "m", 4);
        long k = p_long(p, "k", 3);
        CheckResult r = verify_prop_5_3_shape(static_cast<int>(m), k);
        if (!r.pass) return {"fail", r.detail};
        CheckResult w = verify_bott_wraparound(static_cast<int>(m), k);
        if (!w.pass) return {"fail", w.detail};
        return {"pass", r.detail + "; wraparound theta^(k+m) = theta^k + nu"};
    }
    long max_m = p_long(p, "max_m", 12);
    long max_k = p_long(p, "max_k", 12);
    int count = 0;
    for (long m = 1; m <= max_m; ++m)
        for (long k = 1; k <= max_k; ++k) {
            CheckResult r = verify_prop_5_3_shape(static_cast<int>(m), k);
            if (!r.pass)
                return {"fail", "m=" + std::to_string(m) + " k=" + std::to_string(k) +
                                    ": " + r.detail};
            CheckResult w = verify_bott_wraparound(static_cast<int>(m), k);
            if (!w.pass)
                return {"fail", "m=" + std::to_string(m) + " k=" + std::to_string(k) +
                                    ": " + w.detail};
            ++count;
        }
    return {"pass", std::to_string(count) + " pairs with m <= " + std::to_string(max_m) +
                        ", k <= " + std::to_string(max_k) +
                        ": factorization, unit witness where coprime, and wraparound"};
}

RunOut run_table_consistency(OJson& p) {
    std::string gs = p_str(p, "group", "S3");
    GroupRef ctx = group_ctx_from_spec(gs);
    CharacterTable t = character_table(ctx);

    Int degsum = 0;
    for (int i = 0; i < t.size(); ++i) degsum += t.row(i).degree() * t.row(i).degree();
    if (degsum != ctx->G.n)
        return {"fail", gs + ": sum of squared degrees is " + degsum.get_str() +
                            ", group order is " + std::to_string(ctx->G.n)};

    for (int i = 0; i < t.size(); ++i)
        for (int j = 0; j < t.size(); ++j) {
            Cyclotomic pr = pairing(t.row(i), t.row(j));
            Cyclotomic want(Rat(i == j ? 1 : 0));
            if (pr != want)
                return {"fail", gs + ": <chi_" + std::to_string(i) + ", chi_" +
                                    std::to_string(j) + "> = " + pr.str()};
        }

    std::optional<CharacterTable> cf = closed_form_table(ctx);
    if (cf) {
        if (cf->size() != t.size())
            return {"fail", gs + ": modular method found " + std::to_string(t.size()) +
                                " rows, shipped table has " + std::to_string(cf->size())};
        for (int i = 0; i < t.size(); ++i)
            if (!(t.row(i) == cf->row(i)))
                return {"fail", gs + ": row " + std::to_string(i) +
                                    " differs: modular " + t.row(i).str() +
                                    " vs shipped " + cf->row(i).str()};
    }
    return {"pass", gs + ": " + std::to_string(t.size()) +
                        " irreducibles; orthogonality and the degree identity hold" +
                        (cf ? "; matches the shipped closed-form table"
                            : "; no shipped closed form, internal checks only")};
}

// ---- registry ---------------------------------------------------------------

struct CheckDef {
    std::string id;
    std::string title;
    std::vector<std::string> keys;
    RunOut (*fn)(OJson&);
};

const std::vector<CheckDef>& registry() {
    static const std::vector<CheckDef> defs = {
        {"cor2.3", "newton transform of the exterior cauchy product", {"max_i"},
         run_newton_cauchy},
        {"prop3.10", "one-hot specialization of the symmetric cauchy class", {"max_j"},
         run_q_specialization},
        {"thm2.2", "exterior powers of a tensor product of modules",
         {"group", "V", "W", "max_i"}, run_module_cauchy},
        {"prop2.1", "image and coimage module characters",
         {"group", "module", "max_size"}, run_schur_law},
        {"thm1.6e", "power operations fix the regular character",
         {"group", "max_k", "allow_noncoprime"}, run_regular_fixed},
        {"prop1.1", "orbit decomposition of symmetric power bases",
         {"group", "n", "powers"}, run_orbit_law},
        {"lemma3.6", "adjoint power operation pairing and inverse exponent",
         {"group", "max_k"}, run_adjoint},
        {"remark3.12", "quaternion symplectic membership under power maps", {"max_k"},
         run_quaternion_symplectic},
        {"thm1.6c", "koszul alternating sum and two-route virtual classes",
         {"group", "max_degree", "max_i"}, run_koszul_paths},
        {"cor3.8", "periodicity of power operations in the exponent",
         {"group", "max_k"}, run_periodicity},
        {"lemma3.2b", "symmetric powers of compatible sublattices",
         {"group", "beta", "k", "p"}, run_lattice_compat},
        {"sec4", "quadratic derivative ideal and presentation invariants",
         {"max_abs_D"}, run_quad_invariants},
        {"ex4.4", "inverse-different exact sequence witness", {"D", "D_range"},
         run_quad_sequence},
        {"thm4.1", "graded layers of the differential module", {"D"}, run_quad_layers},
        {"lemma5.7", "cyclic ring unit identities for the truncated sums",
         {"m", "k", "kprime", "max_m", "max_k"}, run_bott_identities},
        {"prop5.3", "truncated-sum factorization and unit witness",
         {"m", "k", "max_m", "max_k"}, run_bott_shape},
        {"tables", "character table cross-method consistency", {"group"},
         run_table_consistency},
    };
    return defs;
}

const CheckDef& find_check(const std::string& id) {
    for (const auto& d : registry())
        if (d.id == id) return d;
    std::string known;
    for (const auto& d : registry()) known += (known.empty() ? "" : ", ") + d.id;
    throw domain_error("unknown check id '" + id + "' (known: " + known + ")");
}

void validate_params(const CheckDef& def, const OJson& params) {
    if (!params.is_object()) throw domain_error("check parameters must be a JSON object");
    for (const auto& item : params.items()) {
        const std::string& k = item.key();
        if (k == "expect") {
            const OJson& v = item.value();
            if (!v.is_string() ||
                (v.get<std::string>() != "pass" && v.get<std::string>() != "fail"))
                throw domain_error("parameter 'expect' must be \"pass\" or \"fail\"");
            continue;
        }
        if (std::find(def.keys.begin(), def.keys.end(), k) == def.keys.end())
            throw domain_error("check " + def.id + ": unknown parameter '" + k + "'");
    }
}

VerificationReport run_check_impl(const std::string& id, OJson params) {
    const CheckDef& def = find_check(id);
    validate_params(def, params);
    std::string expect = "pass";
    if (params.contains("expect")) expect = params.at("expect").get<std::string>();

    OJson resolved = params;
    resolved.erase("expect");

    VerificationReport rep;
    rep.check = def.id;
    rep.title = def.title;
    rep.ref = def.id;

    auto t0 = std::chrono::steady_clock::now();
    RunOut out;
    try {
        out = def.fn(resolved);
    } catch (const budget_error& e) {
        out = {"skip", std::string(e.what())};
    } catch (const std::exception& e) {
        out = {"fail", std::string("error: ") + e.what()};
    }
    auto t1 = std::chrono::steady_clock::now();

    if (expect == "fail" && out.status != "skip") {
        if (out.status == "fail")
            out = {"pass", "failed as expected: " + out.witness};
        else
            out = {"fail", "expected a failure but the check passed: " + out.witness};
    }
    if (params.contains("expect")) resolved["expect"] = expect;

    rep.params = resolved.dump();
    rep.status = out.status;
    rep.witness = out.witness;
    rep.ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
    return rep;
}

struct Task {
    std::string id;
    OJson params;
};

void expand_grid(const std::string& id, const OJson& grid, std::vector<Task>& tasks) {
    if (!grid.is_object())
        throw domain_error("config: grid for '" + id + "' must be a JSON object");
    std::vector<std::string> keys;
    std::vector<std::vector<OJson>> choices;
    for (const auto& item : grid.items()) {
        keys.push_back(item.key());
        std::vector<OJson> c;
        if (item.value().is_array()) {
            if (item.value().empty())
                throw domain_error("config: empty choice list for '" + item.key() + "'");
            for (const auto& e : item.value()) c.push_back(e);
        } else {
            c.push_back(item.value());
        }
        choices.push_back(std::move(c));
    }
    std::vector<size_t> idx(keys.size(), 0);
    while (true) {
        OJson combo = OJson::object();
        for (size_t i = 0; i < keys.size(); ++i) combo[keys[i]] = choices[i][idx[i]];
        tasks.push_back({id, std::move(combo)});
        size_t pos = keys.size();
        while (pos > 0) {
            --pos;
            if (++idx[pos] < choices[pos].size()) break;
            idx[pos] = 0;
            if (pos == 0) return;
        }
        if (keys.empty()) return;
    }
}

}  // namespace

// ---- public surface ---------------------------------------------------------

std::string report_json(const VerificationReport& r) {
    OJson j;
    j["check"] = r.check;
    j["title"] = r.title;
    j["ref"] = r.ref;
    j["params"] = OJson::parse(r.params.empty() ? "{}" : r.params);
    j["status"] = r.status;
    j["witness"] = r.witness;
    j["ms"] = r.ms;
    return j.dump();
}

std::string report_text(const VerificationReport& r) {
    std::ostringstream os;
    std::string tag = r.status;
    std::transform(tag.begin(), tag.end(), tag.begin(), ::toupper);
    os << "[" << tag << "] " << r.check << "  (" << r.title << ")\n";
    os << "    params:  " << r.params << "\n";
    os << "    witness: " << r.witness << "\n";
    os << "    time:    " << r.ms << " ms";
    return os.str();
}

std::vector<std::string> suite_check_ids() {
    std::vector<std::string> out;
    for (const auto& d : registry()) out.push_back(d.id);
    return out;
}

std::string check_title(const std::string& id) { return find_check(id).title; }

namespace {
OJson parse_json_or_throw(const std::string& text, const char* what) {
    OJson parsed = OJson::parse(text, nullptr, false);
    if (parsed.is_discarded())
        throw domain_error(std::string(what) + ": input is not valid JSON");
    return parsed;
}
}  // namespace

VerificationReport run_check(const std::string& id, const std::string& params_json) {
    OJson params = params_json.empty() ? OJson::object()
                                       : parse_json_or_throw(params_json, "params");
    return run_check_impl(id, std::move(params));
}

std::vector<VerificationReport> run_suite(const std::string& config_json,
                                          const SuiteOptions& opts) {
    OJson cfg = parse_json_or_throw(config_json, "config");
    if (!cfg.is_object()) throw domain_error("config: top level must be a JSON object");

    std::vector<Task> tasks;
    for (const auto& item : cfg.items()) {
        const CheckDef& def = find_check(item.key());
        std::vector<OJson> grids;
        if (item.value().is_object()) {
            grids.push_back(item.value());
        } else if (item.value().is_array()) {
            for (const auto& g : item.value()) grids.push_back(g);
        } else {
            throw domain_error("config: value for '" + item.key() +
                               "' must be an object or an array of objects");
        }
        size_t before = tasks.size();
        for (const auto& g : grids) expand_grid(item.key(), g, tasks);
        for (size_t i = before; i < tasks.size(); ++i) validate_params(def, tasks[i].params);
    }

    std::vector<VerificationReport> out(tasks.size());
    int jobs = std::max(1, opts.jobs);
    if (jobs == 1 || tasks.size() <= 1) {
        for (size_t i = 0; i < tasks.size(); ++i)
            out[i] = run_check_impl(tasks[i].id, tasks[i].params);
        return out;
    }
    std::atomic<size_t> next{0};
    std::exception_ptr first_error = nullptr;
    std::mutex err_mutex;
    std::vector<std::thread> pool;
    int workers = std::min<size_t>(jobs, tasks.size());
    for (int w = 0; w < workers; ++w)
        pool.emplace_back([&] {
            while (true) {
                size_t i = next.fetch_add(1);
                if (i >= tasks.size()) return;
                try {
                    out[i] = run_check_impl(tasks[i].id, tasks[i].params);
                } catch (...) {
                    std::lock_guard<std::mutex> lock(err_mutex);
                    if (!first_error) first_error = std::current_exception();
                }
            }
        });
    for (auto& th : pool) th.join();
    if (first_error) std::rethrow_exception(first_error);
    return out;
}

namespace {

std::vector<std::string> catalog_le(int max_order) {
    struct Entry {
        const char* spec;
        int order;
    };
    static const Entry all[] = {
        {"C1", 1},   {"C2", 2},   {"C3", 3},   {"C4", 4},   {"C5", 5},
        {"C6", 6},   {"C7", 7},   {"C8", 8},   {"C9", 9},   {"C10", 10},
        {"C11", 11}, {"C12", 12}, {"C24", 24}, {"D3", 6},   {"D4", 8},
        {"D5", 10},  {"D6", 12},  {"D7", 14},  {"D8", 16},  {"D9", 18},
        {"D10", 20}, {"D11", 22}, {"D12", 24}, {"Q8", 8},   {"S3", 6},
        {"S4", 24},  {"A4", 12},  {"prod(C2,C2)", 4},  {"prod(C2,C4)", 8},
        {"prod(C2,C6)", 12},      {"prod(C3,C3)", 9},  {"prod(C2,Q8)", 16},
        {"prod(C2,D4)", 16},
    };
    std::vector<std::string> out;
    for (const Entry& e : all)
        if (e.order <= max_order) out.push_back(e.spec);
    return out;
}

std::vector<std::string> dim3_roster(const std::string& gs) {
    if (gs == "S3") return {"triv", "sgn", "std", "perm"};
    if (gs == "D4" || gs == "Q8")
        return {"line:0", "line:1", "line:2", "line:3", "2dim"};
    if (gs == "C6")
        return {"line:0", "line:1", "line:2", "line:3", "line:4", "line:5"};
    throw internal_error("no module roster for " + gs);
}

}  // namespace

std::string default_suite_config() {
    OJson cfg = OJson::object();
    cfg["cor2.3"] = {{"max_i", 6}};
    cfg["prop3.10"] = {{"max_j", 6}};

    OJson cauchy_grids = OJson::array();
    OJson law_grids = OJson::array();
    for (const std::string gs : {"S3", "D4", "Q8", "C6"}) {
        OJson roster = OJson(dim3_roster(gs));
        cauchy_grids.push_back(
            {{"group", gs}, {"V", roster}, {"W", roster}, {"max_i", 4}});
        law_grids.push_back({{"group", gs}, {"module", roster}, {"max_size", 4}});
    }
    cfg["thm2.2"] = cauchy_grids;
    cfg["prop2.1"] = law_grids;

    cfg["thm1.6e"] = {{"group", OJson(catalog_le(24))}};

    OJson powers = OJson::array();
    for (int total = 1; total <= 6; ++total)
        for (const Partition& lam : partitions_of(total)) powers.push_back(OJson(lam));
    cfg["prop1.1"] = {{"group", OJson(catalog_le(12))},
                      {"n", OJson::array({1, 2})},
                      {"powers", powers}};

    cfg["lemma3.6"] = {{"group", OJson(catalog_le(24))}};
    cfg["remark3.12"] = {{"max_k", 8}};
    cfg["thm1.6c"] = {{"group", OJson(catalog_le(24))},
                      {"max_degree", 8},
                      {"max_i", 4}};
    cfg["cor3.8"] = {{"group", OJson(catalog_le(24))}};

    OJson compat = OJson::array();
    compat.push_back({{"group", "C2"},
                      {"beta", OJson::array({OJson::array({2, 1}), OJson::array({3, 1}),
                                             OJson::array({1, 2})})},
                      {"k", OJson::array({1, 3})}});
    compat.push_back({{"group", "C3"},
                      {"beta", OJson::array({OJson::array({2, 1, 0}),
                                             OJson::array({1, 1, 0}),
                                             OJson::array({3, 1, 1})})},
                      {"k", OJson::array({1, 2})}});
    cfg["lemma3.2b"] = compat;

    cfg["sec4"] = {{"max_abs_D", 50}};
    cfg["ex4.4"] = {{"D_range", "-50..50"}};
    cfg["thm4.1"] = {{"D", OJson::array({-1, 2, 3, 5, 7, 13})}};
    cfg["lemma5.7"] = {{"max_m", 12}, {"max_k", 12}};
    cfg["prop5.3"] = {{"max_m", 12}, {"max_k", 12}};

    OJson tgroups = OJson::array();
    for (int n = 1; n <= 12; ++n) tgroups.push_back("C" + std::to_string(n));
    for (const char* g : {"D4", "Q8", "S3", "S4", "A4"}) tgroups.push_back(g);
    cfg["tables"] = {{"group", tgroups}};

    return cfg.dump();
}

bool all_passed(const std::vector<VerificationReport>& reports) {
    for (const auto& r : reports)
        if (r.status == "fail") return false;
    return true;
}

}  // namespace powops
