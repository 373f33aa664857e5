// powops — exact-arithmetic workbench for power operations on character
// rings, equivariant modules, integral lattices, quadratic orders, and
// cyclic group rings.  Every subcommand prints exact data (JSON or plain
// text); verification subcommands exit 0 when every executed check passes
// (skips do not fail) and 1 when any check fails.  Usage errors exit 2.

#include <fstream>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "powops/bott.hpp"
#include "powops/chartable.hpp"
#include "powops/common.hpp"
#include "powops/cyclotomic.hpp"
#include "powops/eqmodule.hpp"
#include "powops/group.hpp"
#include "powops/intmatrix.hpp"
#include "powops/lattices.hpp"
#include "powops/partitions.hpp"
#include "powops/quadfield.hpp"
#include "powops/suite.hpp"
#include "powops/symfunc.hpp"

namespace {

using OJ = nlohmann::ordered_json;
using namespace powops;

OJ jint(const Int& x) {
    if (x.fits_slong_p()) return OJ(x.get_si());
    return OJ(x.get_str());
}

OJ jints(const std::vector<Int>& xs) {
    OJ a = OJ::array();
    for (const Int& x : xs) a.push_back(jint(x));
    return a;
}

OJ jcycs(const std::vector<Cyclotomic>& vs) {
    OJ a = OJ::array();
    for (const Cyclotomic& v : vs) a.push_back(v.str());
    return a;
}

OJ jmatrix(const IntMatrix& m) {
    OJ rows = OJ::array();
    for (int r = 0; r < m.rows(); ++r) {
        OJ row = OJ::array();
        for (int c = 0; c < m.cols(); ++c) row.push_back(jint(m.at(r, c)));
        rows.push_back(row);
    }
    return rows;
}

std::vector<long> split_longs(const std::string& s) {
    std::vector<long> out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        size_t b = tok.find_first_not_of(" \t");
        size_t e = tok.find_last_not_of(" \t");
        if (b == std::string::npos)
            throw domain_error("empty entry in integer list '" + s + "'");
        tok = tok.substr(b, e - b + 1);
        size_t used = 0;
        long v = 0;
        try {
            v = std::stol(tok, &used);
        } catch (const std::exception&) {
            throw domain_error("'" + tok + "' is not an integer");
        }
        if (used != tok.size()) throw domain_error("'" + tok + "' is not an integer");
        out.push_back(v);
    }
    if (out.empty()) throw domain_error("expected a comma-separated integer list");
    return out;
}

std::vector<int> split_ints(const std::string& s) {
    std::vector<int> out;
    for (long v : split_longs(s)) out.push_back(static_cast<int>(v));
    return out;
}

// A --beta value is either a comma-separated group-ring coefficient vector
// or a path to a matrix file.
OJ beta_item(const std::string& s) {
    bool intlike =
        !s.empty() && s.find_first_not_of("0123456789,- \t") == std::string::npos;
    if (!intlike) return OJ(s);
    OJ a = OJ::array();
    for (long v : split_longs(s)) a.push_back(v);
    return a;
}

std::string quad_elem_str(const Int& u, const Int& v) {
    std::ostringstream os;
    if (v == 0) {
        os << u.get_str();
    } else {
        if (u != 0) os << u.get_str() << (v > 0 ? " + " : " - ");
        else if (v < 0) os << "-";
        Int av = v < 0 ? Int(-v) : v;
        if (av != 1) os << av.get_str() << "*";
        os << "t";
    }
    return os.str();
}

std::string quad_poly_str(long c1, long c0) {
    std::ostringstream os;
    os << "T^2";
    if (c1 != 0) {
        os << (c1 > 0 ? " + " : " - ");
        long a = c1 > 0 ? c1 : -c1;
        if (a != 1) os << a << "*";
        os << "T";
    }
    if (c0 != 0) os << (c0 > 0 ? " + " : " - ") << (c0 > 0 ? c0 : -c0);
    return os.str();
}

// Print a single check report and translate its status to an exit code.
int emit_report(const VerificationReport& r, const std::string& format) {
    if (format == "json")
        std::cout << report_json(r) << "\n";
    else
        std::cout << report_text(r) << "\n";
    return r.status == "fail" ? 1 : 0;
}

int run_single_check(const std::string& id, const OJ& params, const std::string& format) {
    return emit_report(run_check(id, params.dump()), format);
}

std::string slurp_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw domain_error("cannot read config file '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// Option values such as "--D -1" or "--D-range -10..10" start with a dash
// and would otherwise be classified as (unknown) option names; glue them to
// their option with '=' before parsing.
std::vector<std::string> glue_dash_values(int argc, char** argv) {
    static const std::set<std::string> glue = {"--D", "--D-range", "--beta"};
    std::vector<std::string> args;
    for (int i = 1; i < argc; ++i) {
        std::string a = argv[i];
        if (glue.count(a) && i + 1 < argc && argv[i + 1][0] == '-' &&
            std::string(argv[i + 1]).find_first_of("0123456789") != std::string::npos) {
            args.push_back(a + "=" + argv[i + 1]);
            ++i;
        } else {
            args.push_back(a);
        }
    }
    return args;
}

void print_check_list() {
    for (const std::string& id : suite_check_ids())
        std::cout << id << "  " << check_title(id) << "\n";
}

// ---------------------------------------------------------------- chartable

int cmd_chartable(const std::string& spec) {
    GroupRef ctx = group_ctx_from_spec(spec);
    CharacterTable t = character_table(ctx);
    OJ out;
    out["group"] = ctx->G.name;
    out["order"] = ctx->G.n;
    out["exponent"] = ctx->C.exponent;
    OJ reps = OJ::array(), sizes = OJ::array();
    for (size_t c = 0; c < ctx->C.reps.size(); ++c) {
        reps.push_back(ctx->G.labels[ctx->C.reps[c]]);
        sizes.push_back(ctx->C.sizes[c]);
    }
    out["class_reps"] = reps;
    out["class_sizes"] = sizes;
    out["degrees"] = jints(t.degrees());
    OJ rows = OJ::array();
    for (int i = 0; i < t.size(); ++i) {
        OJ row;
        row["index"] = i;
        row["degree"] = jint(t.row(i).degree());
        row["values"] = jcycs(t.row(i).values());
        rows.push_back(row);
    }
    out["rows"] = rows;
    std::cout << out.dump(2) << "\n";
    return 0;
}

// -------------------------------------------------------------------- adams

int cmd_adams(const std::string& spec, long k, int chi) {
    GroupRef ctx = group_ctx_from_spec(spec);
    CharacterTable t = character_table(ctx);
    if (chi < 0 || chi >= t.size())
        throw domain_error("--chi must index an irreducible row (0.." +
                           std::to_string(t.size() - 1) + ")");
    ClassFunction psik = adams(t.row(chi), k);
    OJ out;
    out["group"] = ctx->G.name;
    out["k"] = k;
    out["chi"] = chi;
    out["chi_values"] = jcycs(t.row(chi).values());
    out["psi_values"] = jcycs(psik.values());
    out["decomposition"] = jints(t.decompose(psik));
    std::cout << out.dump(2) << "\n";
    return 0;
}

// -------------------------------------------------------------- classify-fs

int cmd_classify_fs(const std::string& spec) {
    GroupRef ctx = group_ctx_from_spec(spec);
    CharacterTable t = character_table(ctx);
    FSData fs = fs_classify(t);
    OJ out;
    out["group"] = ctx->G.name;
    OJ rows = OJ::array();
    for (int i = 0; i < t.size(); ++i) {
        OJ row;
        row["index"] = i;
        row["degree"] = jint(t.row(i).degree());
        row["indicator"] = fs.indicator[i];
        row["type"] = fs.indicator[i] > 0 ? "R" : (fs.indicator[i] < 0 ? "H" : "C");
        if (fs.partner[i] >= 0)
            row["partner"] = fs.partner[i];
        else
            row["partner"] = nullptr;
        rows.push_back(row);
    }
    out["rows"] = rows;
    std::cout << out.dump(2) << "\n";
    return 0;
}

// ------------------------------------------------------------------- orbits

int cmd_orbits(const std::string& spec, int rank, const std::vector<int>& powers) {
    GroupRef ctx = group_ctx_from_spec(spec);
    OJ out;
    out["group"] = ctx->G.name;
    out["rank"] = rank;
    out["powers"] = powers;
    try {
        OrbitDecomposition d = sym_power_orbits(ctx, rank, powers);
        out["basis_size"] = jint(d.total);
        out["orbit_count"] = static_cast<long>(d.orbits.size());
        out["free_orbits"] = d.free_orbits;
        out["max_stabilizer"] = d.max_stabilizer;
        OJ orbs = OJ::array();
        for (const Orbit& o : d.orbits) {
            OJ jo;
            OJ factors = OJ::array();
            for (const auto& f : o.rep) {
                OJ mset = OJ::array();
                for (int e : f) mset.push_back(ctx->G.labels[e]);
                factors.push_back(mset);
            }
            jo["rep"] = factors;
            OJ stab = OJ::array();
            for (int e : o.stabilizer) stab.push_back(ctx->G.labels[e]);
            jo["stabilizer"] = stab;
            jo["orbit_size"] = o.size;
            orbs.push_back(jo);
        }
        out["orbits"] = orbs;
        out["permutation_character"] = jints(decomposition_character(d));
        OJ reps = OJ::array();
        for (size_t c = 0; c < ctx->C.reps.size(); ++c)
            reps.push_back(ctx->G.labels[ctx->C.reps[c]]);
        out["class_reps"] = reps;
    } catch (const budget_error& e) {
        out["status"] = "skip";
        out["detail"] = e.what();
        std::cout << out.dump(2) << "\n";
        return 0;
    }
    std::cout << out.dump(2) << "\n";
    return 0;
}

// -------------------------------------------------------------------- schur

int cmd_schur(const std::string& spec, const std::string& module,
              const std::vector<int>& lambda) {
    GroupRef ctx = group_ctx_from_spec(spec);
    EquivariantModule V = module_by_name(ctx, module);
    EquivariantModule S = schur_module(V, lambda);
    EquivariantModule K = coschur_module(V, lambda);
    CheckResult r = verify_prop_2_1(V, lambda);
    OJ out;
    out["group"] = ctx->G.name;
    out["module"] = V.name();
    out["module_dim"] = V.dim();
    out["lambda"] = lambda;
    out["schur_dim"] = S.dim();
    out["schur_character"] = jcycs(S.character().values());
    out["coschur_dim"] = K.dim();
    out["coschur_character"] = jcycs(K.character().values());
    out["determinantal_check"] = r.pass ? "pass" : "fail";
    out["detail"] = r.detail;
    std::cout << out.dump(2) << "\n";
    return r.pass ? 0 : 1;
}

// --------------------------------------------------------------------- quad

OJ quad_report_json(const QuadraticField& Q) {
    OJ out;
    out["D"] = Q.D;
    out["ring"] = Q.ring;
    out["t"] = Q.half_integral ? "(1+sqrt(" + std::to_string(Q.D) + "))/2"
                               : "sqrt(" + std::to_string(Q.D) + ")";
    out["discriminant"] = Q.disc;
    out["minimal_polynomial"] = quad_poly_str(Q.phi_c1, Q.phi_c0);
    DifferentData dd = quad_different(Q);
    OJ jd;
    jd["generator"] = quad_elem_str(dd.gen_u, dd.gen_v);
    jd["norm"] = jint(dd.norm);
    OJ primes = OJ::array();
    for (const RamifiedPrime& P : dd.primes) {
        OJ jp;
        jp["p"] = P.p;
        jp["wild"] = P.wild;
        jp["uniformizer"] = quad_elem_str(P.pi_u, P.pi_v);
        jp["valuation"] = P.phi_valuation;
        jp["lattice"] = jmatrix(P.lattice);
        primes.push_back(jp);
    }
    jd["ramified_primes"] = primes;
    out["different"] = jd;
    OmegaPresentation om = quad_omega(Q);
    OJ jo;
    jo["order"] = jint(om.order);
    jo["relations"] = jmatrix(om.relations);
    jo["involution"] = jmatrix(om.sigma_action);
    jo["annihilator_matches"] = om.annihilator_matches;
    out["differentials"] = jo;
    if (Q.half_integral) {
        CotangentElement ce = cotangent_element(Q);
        OJ jc;
        jc["minuend"] = ce.minuend;
        jc["subtrahend"] = ce.subtrahend;
        jc["witness_order"] = jint(ce.witness_order);
        jc["witness"] = ce.witness.pass ? "pass" : "fail";
        out["cotangent_class"] = jc;
    }
    return out;
}

int cmd_quad_verify(const QuadraticField& Q) {
    CheckResult seq = verify_example_4_4(Q);
    CheckResult layers = verify_thm_4_1_all(Q);
    std::cout << (seq.pass ? "pass" : "FAIL") << "  inverse-different exact sequence: "
              << seq.detail << "\n";
    std::cout << (layers.pass ? "pass" : "FAIL")
              << "  graded layers of the differential module: " << layers.detail << "\n";
    return (seq.pass && layers.pass) ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "powops: exact verification of power operations on character rings,\n"
        "equivariant modules, integral lattices, quadratic orders, and cyclic\n"
        "group rings."};
    app.require_subcommand(1);

    std::string format = "text";

    // chartable -------------------------------------------------------
    auto* c_table = app.add_subcommand(
        "chartable", "Irreducible character table of a finite group");
    std::string ct_spec;
    c_table->add_option("group", ct_spec,
                        "group spec: C<n>, D<n>, Q8, S<n>, A4, prod(a,b), table:<path>")
        ->required();

    // symfunc ---------------------------------------------------------
    auto* c_sym = app.add_subcommand("symfunc", "Symmetric-function identities");
    c_sym->require_subcommand(1);
    auto* c_newton = c_sym->add_subcommand(
        "newton", "Power sum P_i as a polynomial in elementary classes");
    int sf_i = 1;
    std::string sf_basis = "e";
    c_newton->add_option("i", sf_i, "degree i >= 1")->required();
    c_newton->add_option("--basis", sf_basis, "e (elementary) or h (complete)")
        ->check(CLI::IsMember({"e", "h"}));
    auto* c_schur_poly = c_sym->add_subcommand(
        "schur", "Determinantal Schur polynomial for a partition");
    std::string sf_lambda;
    c_schur_poly->add_option("--lambda", sf_lambda, "partition, e.g. 2,1")->required();
    c_schur_poly->add_option("--basis", sf_basis, "e (coSchur shape) or h (Schur shape)")
        ->check(CLI::IsMember({"e", "h"}));
    auto* c_cauchy = c_sym->add_subcommand(
        "cauchy", "Exterior Cauchy class P_i(X;Y) of a tensor product");
    c_cauchy->add_option("i", sf_i, "degree i >= 0")->required();
    auto* c_qclass = c_sym->add_subcommand(
        "q", "Symmetric Cauchy class Q_j(X;Y) of a tensor product");
    c_qclass->add_option("j", sf_i, "degree j >= 0")->required();
    auto* c_vcauchy = c_sym->add_subcommand(
        "verify-cauchy", "Newton transform of the exterior Cauchy product");
    int sf_max = 0;
    c_vcauchy->add_option("--max-i", sf_max, "verify degrees 1..max-i");
    c_vcauchy->add_option("--format", format, "text or json")
        ->check(CLI::IsMember({"text", "json"}));
    auto* c_vq = c_sym->add_subcommand(
        "verify-q", "One-hot specialization of the symmetric Cauchy class");
    c_vq->add_option("--max-j", sf_max, "verify degrees 1..max-j");
    c_vq->add_option("--format", format, "text or json")
        ->check(CLI::IsMember({"text", "json"}));

    // adams -----------------------------------------------------------
    auto* c_adams = app.add_subcommand(
        "adams", "Power map on an irreducible character, with decomposition");
    std::string ad_spec;
    long ad_k = 1;
    int ad_chi = 0;
    c_adams->add_option("group", ad_spec, "group spec")->required();
    c_adams->add_option("--k", ad_k, "exponent k")->required();
    c_adams->add_option("--chi", ad_chi, "row index of the irreducible")->required();

    // classify-fs -----------------------------------------------------
    auto* c_fs = app.add_subcommand(
        "classify-fs", "Frobenius-Schur indicators and real/complex/quaternionic types");
    std::string fs_spec;
    c_fs->add_option("group", fs_spec, "group spec")->required();

    // orbits ----------------------------------------------------------
    auto* c_orb = app.add_subcommand(
        "orbits", "Orbit decomposition of a symmetric-power monomial basis");
    std::string orb_spec, orb_powers;
    int orb_rank = 1;
    c_orb->add_option("--group", orb_spec, "group spec")->required();
    c_orb->add_option("--rank", orb_rank, "number of free group-ring factors")->required();
    c_orb->add_option("--powers", orb_powers, "symmetric-power degrees, e.g. 2,1")
        ->required();

    // schur -----------------------------------------------------------
    auto* c_schur = app.add_subcommand(
        "schur", "Schur and coSchur modules of an equivariant module");
    std::string sc_spec, sc_module, sc_lambda;
    c_schur->add_option("--group", sc_spec, "group spec")->required();
    c_schur->add_option("--module", sc_module,
                        "reg, triv, sgn, std, perm, 2dim, line:<i>, or a file path")
        ->required();
    c_schur->add_option("--lambda", sc_lambda, "partition, e.g. 2,1")->required();

    // quad ------------------------------------------------------------
    auto* c_quad = app.add_subcommand(
        "quad", "Quadratic order: different, ramified primes, differentials");
    long quad_D = 0;
    c_quad->add_option("--D", quad_D, "squarefree integer, not 0 or 1")->required();
    c_quad->require_subcommand(1);
    auto* c_quad_report =
        c_quad->add_subcommand("report", "Print the field/different/differentials data");
    auto* c_quad_verify = c_quad->add_subcommand(
        "verify", "Check the exact sequence and graded layers for this D");

    // bott ------------------------------------------------------------
    auto* c_bott = app.add_subcommand(
        "bott", "Truncated-sum elements in cyclic group rings");
    c_bott->require_subcommand(1);
    long bt_m = 0, bt_k = 0, bt_kprime = -1;
    auto* c_bott_verify = c_bott->add_subcommand(
        "verify", "Factorization and unit witness for one (m, k)");
    c_bott_verify->add_option("--m", bt_m, "cyclic order m >= 1")->required();
    c_bott_verify->add_option("--k", bt_k, "exponent k, coprime to m")->required();
    c_bott_verify->add_option("--format", format, "text or json")
        ->check(CLI::IsMember({"text", "json"}));
    auto* c_bott_lemma = c_bott->add_subcommand(
        "verify-lemma5.7", "Unit identity for the truncated sums at (m, k, k')");
    c_bott_lemma->add_option("--m", bt_m, "cyclic order m >= 1")->required();
    c_bott_lemma->add_option("--k", bt_k, "exponent k, coprime to m")->required();
    c_bott_lemma->add_option("--kprime", bt_kprime, "inverse exponent k' with kk' = 1 mod m");
    c_bott_lemma->add_option("--format", format, "text or json")
        ->check(CLI::IsMember({"text", "json"}));

    // verify ----------------------------------------------------------
    auto* c_verify = app.add_subcommand(
        "verify", "Run one registered check by id (see: verify --list)");
    std::string v_id;
    c_verify->add_option("check", v_id, "check id, e.g. thm1.6e or lemma3.6");
    bool v_list = false;
    c_verify->add_flag("--list", v_list, "list check ids and titles");
    std::string v_group, v_module, v_V, v_W, v_powers, v_k, v_beta_unused, v_Drange,
        v_expect;
    std::vector<std::string> v_betas;
    long v_n = 0, v_max_k = 0, v_max_i = 0, v_max_j = 0, v_max_size = 0, v_max_degree = 0,
         v_max_m = 0, v_max_abs_D = 0, v_p = 0, v_D = 0, v_m = 0, v_kprime = 0;
    bool v_noncop = false;
    c_verify->add_option("--group", v_group, "group spec");
    c_verify->add_option("--module", v_module, "module name (prop2.1)");
    c_verify->add_option("--V", v_V, "first module name (thm2.2)");
    c_verify->add_option("--W", v_W, "second module name (thm2.2)");
    c_verify->add_option("--n", v_n, "free rank (prop1.1)");
    c_verify->add_option("--powers", v_powers, "symmetric-power degrees, e.g. 2,1");
    c_verify->add_option("--max-k", v_max_k, "largest exponent");
    c_verify->add_option("--max-i", v_max_i, "largest degree i");
    c_verify->add_option("--max-j", v_max_j, "largest degree j");
    c_verify->add_option("--max-size", v_max_size, "largest partition weight (prop2.1)");
    c_verify->add_option("--max-degree", v_max_degree, "largest virtual degree (thm1.6c)");
    c_verify->add_option("--max-m", v_max_m, "largest cyclic order (bott sweeps)");
    c_verify->add_option("--max-abs-D", v_max_abs_D, "largest |D| (sec4)");
    c_verify->add_option("--beta", v_betas,
                         "group-ring coefficients '2,1' or a matrix file; repeatable")
        ->take_all();
    c_verify->add_option("--k", v_k, "exponent, or comma list (one per beta factor)");
    c_verify->add_option("--p", v_p, "prime for the compatibility check (lemma3.2b)");
    c_verify->add_option("--D", v_D, "squarefree integer (ex4.4, thm4.1)");
    c_verify->add_option("--D-range", v_Drange, "inclusive range, e.g. -10..10 (ex4.4)");
    c_verify->add_option("--m", v_m, "cyclic order (lemma5.7, prop5.3)");
    c_verify->add_option("--kprime", v_kprime, "inverse exponent (lemma5.7)");
    c_verify->add_flag("--allow-noncoprime", v_noncop,
                       "include exponents not coprime to the group order (thm1.6e)");
    c_verify->add_option("--expect", v_expect,
                         "pass or fail: with fail the run passes when the check fails")
        ->check(CLI::IsMember({"pass", "fail"}));
    c_verify->add_option("--format", format, "text or json")
        ->check(CLI::IsMember({"text", "json"}));

    // suite -----------------------------------------------------------
    auto* c_suite = app.add_subcommand(
        "suite", "Run a config of checks (default: the full built-in grid)");
    std::string su_config;
    int su_jobs = 1;
    bool su_list = false;
    std::string su_format = "json";
    c_suite->add_option("--config", su_config,
                        "JSON object mapping check id -> parameter grid");
    c_suite->add_option("--jobs", su_jobs, "worker threads")->check(CLI::PositiveNumber);
    c_suite->add_flag("--list", su_list, "list check ids and titles");
    c_suite->add_option("--format", su_format, "json (one object per line) or text")
        ->check(CLI::IsMember({"text", "json"}));

    std::vector<std::string> args = glue_dash_values(argc, argv);
    try {
        std::vector<const char*> ptrs;
        ptrs.push_back(argv[0]);
        for (const std::string& a : args) ptrs.push_back(a.c_str());
        app.parse(static_cast<int>(ptrs.size()), ptrs.data());
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    }

    try {
        if (*c_table) return cmd_chartable(ct_spec);

        if (*c_sym) {
            if (*c_newton) {
                std::cout << newton_poly(sf_i, sf_basis[0]).str() << "\n";
                return 0;
            }
            if (*c_schur_poly) {
                Partition lam = split_ints(sf_lambda);
                SymExpr e = sf_basis == "h" ? schur_in_h(lam) : schur_in_e(lam);
                std::cout << e.str() << "\n";
                return 0;
            }
            if (*c_cauchy) {
                std::cout << cauchy_P(sf_i).str() << "\n";
                return 0;
            }
            if (*c_qclass) {
                std::cout << sym_cauchy_Q(sf_i).str() << "\n";
                return 0;
            }
            if (*c_vcauchy) {
                OJ params = OJ::object();
                if (c_vcauchy->count("--max-i")) params["max_i"] = sf_max;
                return run_single_check("cor2.3", params, format);
            }
            if (*c_vq) {
                OJ params = OJ::object();
                if (c_vq->count("--max-j")) params["max_j"] = sf_max;
                return run_single_check("prop3.10", params, format);
            }
        }

        if (*c_adams) return cmd_adams(ad_spec, ad_k, ad_chi);
        if (*c_fs) return cmd_classify_fs(fs_spec);
        if (*c_orb) return cmd_orbits(orb_spec, orb_rank, split_ints(orb_powers));
        if (*c_schur) return cmd_schur(sc_spec, sc_module, split_ints(sc_lambda));

        if (*c_quad) {
            QuadraticField Q = quad_build(quad_D);
            if (*c_quad_report) {
                std::cout << quad_report_json(Q).dump(2) << "\n";
                return 0;
            }
            if (*c_quad_verify) return cmd_quad_verify(Q);
        }

        if (*c_bott) {
            if (*c_bott_verify) {
                OJ params = OJ::object();
                params["m"] = bt_m;
                params["k"] = bt_k;
                return run_single_check("prop5.3", params, format);
            }
            if (*c_bott_lemma) {
                OJ params = OJ::object();
                params["m"] = bt_m;
                params["k"] = bt_k;
                if (c_bott_lemma->count("--kprime")) params["kprime"] = bt_kprime;
                return run_single_check("lemma5.7", params, format);
            }
        }

        if (*c_verify) {
            if (v_list) {
                print_check_list();
                return 0;
            }
            if (v_id.empty())
                throw domain_error("give a check id (or --list to see them all)");
            OJ params = OJ::object();
            if (c_verify->count("--group")) params["group"] = v_group;
            if (c_verify->count("--module")) params["module"] = v_module;
            if (c_verify->count("--V")) params["V"] = v_V;
            if (c_verify->count("--W")) params["W"] = v_W;
            if (c_verify->count("--n")) params["n"] = v_n;
            if (c_verify->count("--powers")) {
                OJ a = OJ::array();
                for (int v : split_ints(v_powers)) a.push_back(v);
                params["powers"] = a;
            }
            if (c_verify->count("--max-k")) params["max_k"] = v_max_k;
            if (c_verify->count("--max-i")) params["max_i"] = v_max_i;
            if (c_verify->count("--max-j")) params["max_j"] = v_max_j;
            if (c_verify->count("--max-size")) params["max_size"] = v_max_size;
            if (c_verify->count("--max-degree")) params["max_degree"] = v_max_degree;
            if (c_verify->count("--max-m")) params["max_m"] = v_max_m;
            if (c_verify->count("--max-abs-D")) params["max_abs_D"] = v_max_abs_D;
            if (!v_betas.empty()) {
                if (v_betas.size() == 1) {
                    params["beta"] = beta_item(v_betas[0]);
                } else {
                    OJ a = OJ::array();
                    for (const std::string& b : v_betas) a.push_back(beta_item(b));
                    params["beta"] = a;
                }
            }
            if (c_verify->count("--k")) {
                if (v_k.find(',') != std::string::npos) {
                    OJ a = OJ::array();
                    for (long v : split_longs(v_k)) a.push_back(v);
                    params["k"] = a;
                } else {
                    params["k"] = split_longs(v_k)[0];
                }
            }
            if (c_verify->count("--p")) params["p"] = v_p;
            if (c_verify->count("--D")) params["D"] = v_D;
            if (c_verify->count("--D-range")) params["D_range"] = v_Drange;
            if (c_verify->count("--m")) params["m"] = v_m;
            if (c_verify->count("--kprime")) params["kprime"] = v_kprime;
            if (v_noncop) params["allow_noncoprime"] = true;
            if (c_verify->count("--expect")) params["expect"] = v_expect;
            return run_single_check(v_id, params, format);
        }

        if (*c_suite) {
            if (su_list) {
                print_check_list();
                return 0;
            }
            std::string cfg = c_suite->count("--config") ? slurp_file(su_config)
                                                         : default_suite_config();
            SuiteOptions opts;
            opts.jobs = su_jobs;
            std::vector<VerificationReport> reports = run_suite(cfg, opts);
            long passed = 0, failed = 0, skipped = 0;
            for (const VerificationReport& r : reports) {
                if (su_format == "json")
                    std::cout << report_json(r) << "\n";
                else
                    std::cout << report_text(r) << "\n";
                if (r.status == "pass") ++passed;
                else if (r.status == "fail") ++failed;
                else ++skipped;
            }
            if (su_format == "text")
                std::cout << passed << " passed, " << failed << " failed, " << skipped
                          << " skipped\n";
            return all_passed(reports) ? 0 : 1;
        }
    } catch (const budget_error& e) {
        std::cerr << "skip: " << e.what() << "\n";
        return 0;
    } catch (const domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
