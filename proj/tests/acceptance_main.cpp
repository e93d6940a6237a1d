// Acceptance gate: one pass/fail line per criterion over the full sweep
// g in [2,8], d in [g-4, g+6], all comparisons exact.

#include <hyperpic/hyperpic.hpp>

#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

using namespace hyperpic;

namespace {

constexpr int kGLo = 2, kGHi = 8;

std::string cell_tag(int g, long d) {
    return "g=" + std::to_string(g) + " d=" + std::to_string(d);
}

// Applies f to every sweep cell; returns the first failure message, empty on success.
std::string for_each_cell(const std::function<std::string(int, long)>& f) {
    for (int g = kGLo; g <= kGHi; ++g)
        for (long d = g - 4; d <= g + 6; ++d) {
            std::string err = f(g, d);
            if (!err.empty()) return err;
        }
    return "";
}

struct Gate {
    int failures = 0;

    void report(int n, const std::string& label, const std::string& err,
                const std::string& note = "") {
        if (err.empty()) {
            std::cout << "criterion " << n << " (" << label << "): PASS";
            if (!note.empty()) std::cout << " [" << note << "]";
            std::cout << "\n";
        } else {
            ++failures;
            std::cout << "criterion " << n << " (" << label << "): FAIL - " << err << "\n";
        }
    }
};

std::string check_c3_coefficients(int g, long d) {
    TowerElement c3 = c3_principal_parts(g, d);
    const GradedPolynomial& v = c3.value();
    TablePtr bt = base_table();
    auto coeff = [&](int ze, int zte) { return v.part("zeta", zte).part("z", ze).project(bt); };
    GradedPolynomial a1 = GradedPolynomial::variable(bt, "a1");
    GradedPolynomial a2 = GradedPolynomial::variable(bt, "a2");
    GradedPolynomial b1 = GradedPolynomial::variable(bt, "b1");
    GradedPolynomial c2 = GradedPolynomial::variable(bt, "c2");

    if (coeff(1, 1) != Rational(8 * g + 4) * b1)
        return cell_tag(g, d) + ": z*zeta coefficient is not (8g+4)b1";
    GradedPolynomial zeta_want =
        Rational(4) * (b1 * b1 - Rational(static_cast<long>(g) * g + g) * c2);
    if (coeff(0, 1) != zeta_want)
        return cell_tag(g, d) + ": zeta coefficient is not 4(b1^2 - (g^2+g)c2)";

    std::map<std::string, GradedPolynomial> kill;
    kill.emplace("b1", GradedPolynomial::zero(bt));
    kill.emplace("c2", GradedPolynomial::zero(bt));
    GradedPolynomial z_mod = coeff(1, 0).substitute(kill, bt);
    if (z_mod != Rational(g + 1) * (a1 * a1 - Rational(4) * a2))
        return cell_tag(g, d) + ": z coefficient mod <b1,c2> is not (g+1)(a1^2-4a2)";
    if (!coeff(0, 0).substitute(kill, bt).is_zero())
        return cell_tag(g, d) + ": constant coefficient does not vanish mod <b1,c2>";
    return "";
}

std::string check_discriminant(int g, long d) {
    GradedPolynomial b1 = GradedPolynomial::variable(base_table(), "b1");
    GradedPolynomial got = discriminant_class(g, d);
    if (got != Rational(8 * g + 4) * b1) return cell_tag(g, d) + ": pushforward is not (8g+4)b1";
    if (g == 2 && got != Rational(20) * b1) return cell_tag(g, d) + ": g=2 value is not 20b1";
    return "";
}

std::string check_splitting_battery(int& cases) {
    cases = 0;
    for (long e = -6; e <= 6; ++e) {
        const long start = ((e % 2) + 2) % 2 == 0 ? 2 : 1;
        for (long delta = start; delta <= 8; delta += 2) {
            const long i = (e - delta) / 2, j = i + delta;
            ++cases;
            std::string tag = "e=" + std::to_string(e) + " (i,j)=(" + std::to_string(i) + "," +
                              std::to_string(j) + ")";
            if (!verify_kernel(e, i, j)) return tag + ": kernel generators fail to vanish";
            SpecializeResult r = specialize_check(e, i, j);
            if (!r.is_power || r.scalar.is_zero())
                return tag + ": square specialization is not a nonzero power multiple";
            GradedPolynomial lhs = splitting_class(e, i - 1, j + 1).value;
            GradedPolynomial rhs =
                (alpha_class(i, j) * splitting_class(e, i, j).value).normalized().first;
            if (lhs != rhs) return tag + ": inductive product identity fails up to scalar";
        }
    }
    return "";
}

std::string check_kappa(int g, long d) {
    for (long i = -1; i <= 4; ++i)
        for (long j = 0; j <= 8; ++j) {
            if (i == -1 && j == 0) continue;
            if (kappa(i, j, g, d).value != kappa_closed(i, j, g, d).value)
                return cell_tag(g, d) + ": kappa(" + std::to_string(i) + "," +
                       std::to_string(j) + ") disagrees with its closed form";
        }
    TablePtr rt = TowerRing::reduced_base_table();
    if (kappa(-1, 1, g, d).value != GradedPolynomial::constant(rt, Rational(d)))
        return cell_tag(g, d) + ": kappa(-1,1) is not the fiber degree d";
    TowerRingPtr T = make_tower(g, d, Flavor::reduced);
    TowerElement lead = Rational(2) * T->sym("zeta") - T->sym("a1");
    GradedPolynomial h0 = T->push_pi(T->push_gamma(lead) * T->sym("z"));
    if (h0 != GradedPolynomial::constant(rt, Rational(2)))
        return cell_tag(g, d) + ": base case h(0) is not 2";
    if (!verify_recursions(g, d, 8))
        return cell_tag(g, d) + ": pushforward recursions fail below j = 8";
    return "";
}

std::string check_presentation(int g, long d) {
    try {
        presentation(g, d);
    } catch (const std::exception& e) {
        return cell_tag(g, d) + ": " + e.what();
    }
    GradedPolynomial k01 = kappa_closed(0, 1, g, d).value;
    GradedPolynomial k12 = kappa_closed(-1, 2, g, d).value;
    GradedPolynomial a1 = GradedPolynomial::variable(TowerRing::reduced_base_table(), "a1");
    GradedPolynomial a2p = GradedPolynomial::variable(TowerRing::reduced_base_table(), "a2p");
    GradedPolynomial gen_raw = Rational(d - g - 1) * a1 - Rational(2) * a2p;
    if (Rational(d) * k01 - Rational(g - 1) * k12 != Rational(-(g - 1)) * gen_raw)
        return cell_tag(g, d) + ": kappa-basis generator is not -(g-1)(e*a1 - 2*a2p)";
    if (!relscor_check(g, d, 8))
        return cell_tag(g, d) + ": kappa rewriting identities fail below j = 8";
    return "";
}

std::string check_theta() {
    GradedPolynomial a1 = GradedPolynomial::variable(TowerRing::reduced_base_table(), "a1");
    GradedPolynomial a2p = GradedPolynomial::variable(TowerRing::reduced_base_table(), "a2p");
    for (int g = kGLo; g <= kGHi; ++g) {
        ThetaReport r = theta(g);
        std::string tag = "g=" + std::to_string(g);
        if (!r.kappa10_vanishes) return tag + ": kappa(1,0) does not vanish at d = g-1";
        if (r.value != a1 + a2p) return tag + ": theta is not a1 + a2p";
        if (!r.nilpotent) return tag + ": theta^(g+1) is nonzero in the presentation";
        if (!r.socle_nonzero) return tag + ": theta^g vanishes in the presentation";
        if (!r.matches_boundary) return tag + ": theta does not match the (-2,0) stratum class";
    }
    return "";
}

std::string check_picard(int g, long d) {
    AbelianGroup fine = pic_sl2(g, d);
    if (fine.free_rank != 2 || fine.torsion.size() != 1 || fine.torsion[0] != 8 * g + 4)
        return cell_tag(g, d) + ": finer quotient group is not Z^2 + Z/(8g+4)";
    AbelianGroup coarse = pic_pgl2(g, d);
    const long want = g % 2 != 0 ? 8 * g + 4 : 4 * g + 2;
    if (coarse.free_rank != 2 || coarse.torsion.size() != 1 || coarse.torsion[0] != want)
        return cell_tag(g, d) + ": coarser quotient torsion does not follow genus parity";
    if (!generator_table(g, d).spans_lattice)
        return cell_tag(g, d) + ": generator c1 rows do not span the parity sublattice";
    const long gcd2 = (d - g + 1) % 2 == 0 ? 2 : 1;
    if (brauer_order(g, d) != gcd2)
        return cell_tag(g, d) + ": gerbe order is not gcd(d-g+1, 2)";
    return "";
}

}  // namespace

int main() {
    const auto t0 = std::chrono::steady_clock::now();
    std::cout << "acceptance sweep: g in [" << kGLo << "," << kGHi << "], d in [g-4, g+6]\n";
    Gate gate;

    gate.report(1, "principal parts top chern coefficients", for_each_cell(check_c3_coefficients));
    gate.report(2, "discriminant pushforward (8g+4)b1", for_each_cell(check_discriminant));

    int cases = 0;
    std::string err = check_splitting_battery(cases);
    gate.report(3, "splitting kernel/specialize/product battery", err,
                std::to_string(cases) + " cases");

    gate.report(4, "kappa closed forms and recursions", for_each_cell(check_kappa));
    gate.report(5, "chow presentation and kappa basis", for_each_cell(check_presentation));
    gate.report(6, "theta divisor nilpotency", check_theta());
    gate.report(7, "picard groups, generators, gerbe order", for_each_cell(check_picard));

    SuiteOptions opt;
    opt.g_lo = kGLo;
    opt.g_hi = kGHi;
    opt.threads = 1;
    std::vector<CheckResult> one = run_suites(opt);
    long n_checks = static_cast<long>(one.size());
    std::string oracle_err;
    if (!all_passed(one)) {
        for (const auto& r : one)
            if (!r.pass) {
                oracle_err = cell_tag(r.g, r.d) + " " + r.suite + "/" + r.check + ": " + r.witness;
                break;
            }
    }
    gate.report(8, "random-point oracle over all suites", oracle_err,
                std::to_string(n_checks) + " checks");

    opt.threads = 4;
    std::vector<CheckResult> four = run_suites(opt);
    std::string det_err;
    if (report_json(one) != report_json(four))
        det_err = "reports differ between 1 and 4 worker threads";
    gate.report(9, "thread-count determinism of reports", det_err);

    const auto t1 = std::chrono::steady_clock::now();
    const double secs = std::chrono::duration<double>(t1 - t0).count();
    std::ostringstream el;
    el.setf(std::ios::fixed);
    el.precision(1);
    el << secs;
    if (secs >= 60.0) {
        ++gate.failures;
        std::cout << "elapsed: " << el.str() << "s exceeds the 60s budget\n";
    } else {
        std::cout << "elapsed: " << el.str() << "s (budget 60s)\n";
    }

    if (gate.failures == 0) {
        std::cout << "all criteria passed\n";
        return 0;
    }
    std::cout << gate.failures << " criteria failed\n";
    return 1;
}
