#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "hyperpic/hyperpic.hpp"

namespace {

struct Range {
    long lo, hi;
};

long parse_long(const std::string& t) {
    std::size_t used = 0;
    long v = 0;
    try {
        v = std::stol(t, &used);
    } catch (const std::exception&) {
        throw std::invalid_argument("expected an integer, got '" + t + "'");
    }
    if (used != t.size() || t.empty())
        throw std::invalid_argument("expected an integer, got '" + t + "'");
    return v;
}

// "LO..HI" or a single integer
Range parse_range(const std::string& s) {
    const auto pos = s.find("..");
    if (pos == std::string::npos) {
        const long v = parse_long(s);
        return {v, v};
    }
    Range r{parse_long(s.substr(0, pos)), parse_long(s.substr(pos + 2))};
    if (r.lo > r.hi) throw std::invalid_argument("empty range '" + s + "'");
    return r;
}

hyperpic::TowerRingPtr ring_for_flavor(const std::string& flavor, int g, long d) {
    using namespace hyperpic;
    if (flavor == "full") return make_tower(g, d, Flavor::full);
    if (flavor == "reduced") return make_tower(g, d, Flavor::reduced);
    const std::string prefix = "splitting:";
    if (flavor.rfind(prefix, 0) == 0) {
        const std::string rest = flavor.substr(prefix.size());
        const auto comma = rest.find(',');
        if (comma == std::string::npos)
            throw std::invalid_argument("flavor splitting:I,J needs two indices");
        const long i = parse_long(rest.substr(0, comma));
        const long j = parse_long(rest.substr(comma + 1));
        return make_tower_splitting(g, d, i, j);
    }
    throw std::invalid_argument("unknown flavor '" + flavor +
                                "'; expected full | reduced | splitting:I,J");
}

std::string render_c1(const std::vector<hyperpic::Integer>& coords) {
    static const char* names[3] = {"a1", "a2p", "b1"};
    std::string out;
    for (std::size_t k = 0; k < coords.size() && k < 3; ++k) {
        if (coords[k] == 0) continue;
        hyperpic::Integer c = coords[k];
        if (out.empty()) {
            if (c < 0) out += "-";
        } else {
            out += c < 0 ? " - " : " + ";
        }
        hyperpic::Integer a = c < 0 ? hyperpic::Integer(-c) : c;
        if (a != 1) out += a.get_str() + "*";
        out += names[k];
    }
    return out.empty() ? "0" : out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"symbolic verifier for the Chow ring, Picard group and Brauer class of the "
                 "universal line bundle stack over hyperelliptic curves"};
    app.require_subcommand(1);
    int rc = 0;

    auto* verify = app.add_subcommand("verify", "run verification suites over a (g, d) sweep");
    std::string v_g, v_d, v_suite = "all", v_format = "text";
    int v_threads = 1;
    verify->add_option("--g", v_g, "genus range LO..HI or a single value (g >= 2)")->required();
    verify->add_option("--d", v_d,
                       "degree range LO..HI or a single value (default: g-4..g+6 per genus)");
    verify->add_option("--suite", v_suite, "suite name, or 'all'");
    verify->add_option("--format", v_format, "report format")
        ->check(CLI::IsMember({"json", "text"}));
    verify->add_option("--threads", v_threads, "worker threads")->check(CLI::PositiveNumber);
    verify->callback([&] {
        hyperpic::SuiteOptions opt;
        const Range gr = parse_range(v_g);
        opt.g_lo = static_cast<int>(gr.lo);
        opt.g_hi = static_cast<int>(gr.hi);
        if (!v_d.empty()) {
            const Range dr = parse_range(v_d);
            opt.d_lo = dr.lo;
            opt.d_hi = dr.hi;
            opt.d_given = true;
        }
        opt.suites = hyperpic::resolve_suites(v_suite);
        opt.threads = v_threads;
        const auto results = hyperpic::run_suites(opt);
        if (v_format == "json")
            std::cout << hyperpic::report_json(results) << "\n";
        else
            std::cout << hyperpic::report_text(results);
        rc = hyperpic::all_passed(results) ? 0 : 1;
    });

    auto* eval = app.add_subcommand("eval", "evaluate an expression in a tower ring");
    int e_g = 2;
    long e_d = 0;
    std::string e_flavor = "full";
    std::vector<std::string> e_expr;
    eval->add_option("--g", e_g, "genus (g >= 2)")->required();
    eval->add_option("--d", e_d, "degree")->required();
    eval->add_option("--flavor", e_flavor, "full | reduced | splitting:I,J");
    eval->add_option("expr", e_expr, "expression, e.g. \"(2*zeta - a1)^2\"")->required();
    eval->callback([&] {
        std::string text;
        for (const auto& part : e_expr) {
            if (!text.empty()) text += " ";
            text += part;
        }
        auto ring = ring_for_flavor(e_flavor, e_g, e_d);
        std::cout << hyperpic::evaluate_to_string(text, ring, e_g, e_d) << "\n";
    });

    auto* picard = app.add_subcommand("picard", "print Picard group structure and generators");
    int p_g = 2;
    long p_d = 0;
    std::string p_group;
    picard->add_option("--g", p_g, "genus (g >= 2)")->required();
    picard->add_option("--d", p_d, "degree")->required();
    picard->add_option("--group", p_group, "sl2 | pgl2 (default: both)")
        ->check(CLI::IsMember({"sl2", "pgl2"}));
    picard->callback([&] {
        if (p_group.empty() || p_group == "sl2")
            std::cout << "pic(sl2): " << hyperpic::pic_sl2(p_g, p_d).str() << "\n";
        if (p_group.empty() || p_group == "pgl2") {
            std::cout << "pic(pgl2): " << hyperpic::pic_pgl2(p_g, p_d).str() << "\n";
            const auto table = hyperpic::generator_table(p_g, p_d);
            std::cout << "generators (c1 in ambient coordinates; res = gerbe weight):\n";
            for (const auto& row : table.rows)
                std::cout << "  " << row.name << ": c1 = " << render_c1(row.c1)
                          << ", res = " << row.res.get_str() << "\n";
            std::cout << "generators span the descent sublattice: "
                      << (table.spans_lattice ? "yes" : "no") << "\n";
            std::cout << "brauer order: " << hyperpic::brauer_order(p_g, p_d) << "\n";
        }
    });

    auto* present = app.add_subcommand("present", "print the Chow ring presentation");
    int r_g = 2;
    long r_d = 0;
    present->add_option("--g", r_g, "genus (g >= 2)")->required();
    present->add_option("--d", r_d, "degree")->required();
    present->callback([&] {
        const auto p = hyperpic::presentation(r_g, r_d);
        std::cout << "generators:";
        for (const auto& [name, deg] : p.generators)
            std::cout << " " << name << " (deg " << deg << ")";
        std::cout << "\nrelation: " << p.relation.render() << "\n";
        std::cout << p.witness << "\n";
        const auto kp = hyperpic::kappa_presentation(r_g, r_d);
        std::cout << "kappa basis: " << kp.witness << "\n";
        const auto rp = hyperpic::rigidification(r_g, r_d);
        std::cout << "rigidification: " << rp.witness << "\n";
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return rc;
}
