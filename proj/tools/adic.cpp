// adic: exact adic-completion homological calculator.
//
// Subcommands:
//   run FILE       execute an .adic script, one JSON report per command
//   selftest       randomized arithmetic/order property checks

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include "adic/poly_parse.hpp"
#include "adic/runner.hpp"

namespace {

int run_file(const std::string& path, const adic::RunOptions& opt, bool summary) {
    std::ifstream in(path);
    if (!in) {
        std::cerr << "adic: cannot open " << path << "\n";
        return 2;
    }
    std::stringstream buf;
    buf << in.rdbuf();

    adic::SessionScript script;
    try {
        script = adic::parse_script(buf.str());
    } catch (const adic::ParseError& e) {
        std::cerr << "adic: " << e.what() << " (expected: " << e.expected << ")\n";
        return 2;
    }

    bool any_fail = false;
    try {
        std::vector<adic::Report> reports = adic::run_script(script, opt);
        for (const auto& r : reports) {
            std::cout << adic::report_to_json(r).dump() << "\n";
            if (summary) std::cerr << adic::report_summary_line(r) << "\n";
            if (r.verdict == "fail") any_fail = true;
        }
    } catch (const adic::AlgebraError& e) {
        std::cerr << "adic: " << e.what() << "\n";
        return 2;
    }
    return (any_fail && opt.strict) ? 1 : 0;
}

adic::Polynomial random_poly(const adic::RingPtr& r, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> nt(0, 4), de(0, 3);
    std::uniform_int_distribution<long> co(-9, 9);
    std::vector<adic::Term> terms;
    int n = nt(rng);
    for (int i = 0; i < n; ++i) {
        std::vector<std::uint32_t> e;
        for (std::size_t v = 0; v < r->nvars(); ++v)
            e.push_back(static_cast<std::uint32_t>(de(rng)));
        terms.push_back({adic::Monomial(e), adic::Scalar::of_int(co(rng), r->field())});
    }
    return adic::Polynomial::from_terms(r, terms);
}

int selftest(unsigned long seed) {
    using namespace adic;
    std::mt19937_64 rng(seed);
    int failures = 0;
    auto check = [&](bool ok, const char* what) {
        std::cout << (ok ? "[pass] " : "[FAIL] ") << what << "\n";
        if (!ok) ++failures;
    };

    for (Field f : {Field::rationals(), Field::prime(7)}) {
        RingPtr r = make_poly_ring(f, {"x", "y", "z"});
        bool assoc = true, dist = true, comm = true;
        for (int t = 0; t < 1000; ++t) {
            Polynomial a = random_poly(r, rng), b = random_poly(r, rng),
                       c = random_poly(r, rng);
            assoc = assoc && (a * b) * c == a * (b * c) && (a + b) + c == a + (b + c);
            dist = dist && a * (b + c) == a * b + a * c;
            comm = comm && a * b == b * a && a + b == b + a;
        }
        std::string tag = f.str();
        check(assoc, ("associativity over " + tag).c_str());
        check(dist, ("distributivity over " + tag).c_str());
        check(comm, ("commutativity over " + tag).c_str());
    }

    std::uniform_int_distribution<int> de(0, 6);
    for (OrderKind kind : {OrderKind::lex, OrderKind::grevlex}) {
        TermOrder ord{kind};
        bool mult = true, minimal = true;
        for (int t = 0; t < 1000; ++t) {
            auto rnd = [&] {
                std::vector<std::uint32_t> e(3);
                for (auto& x : e) x = static_cast<std::uint32_t>(de(rng));
                return Monomial(e);
            };
            Monomial a = rnd(), b = rnd(), c = rnd();
            if (ord.less(a, b)) mult = mult && ord.less(a * c, b * c);
            minimal = minimal && ord.compare(Monomial(3), a) <= 0;
        }
        check(mult, (ord.str() + " is multiplicative").c_str());
        check(minimal, ("1 is " + ord.str() + "-minimal").c_str());
    }
    return failures == 0 ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact adic-completion homological calculator"};
    app.require_subcommand(1);

    std::string file;
    adic::RunOptions opt;
    bool summary = false;
    auto* run = app.add_subcommand("run", "execute an .adic script");
    run->add_option("file", file, "script file")->required();
    run->add_option("--kmax", opt.kmax, "tower truncation level (default 4)");
    run->add_option("--depth", opt.depth, "homological depth bound (default 4)");
    run->add_flag("--strict", opt.strict, "exit 1 when any command fails");
    run->add_flag("--summary", summary, "human-readable summary on stderr");
    run->add_option("--seed", opt.seed, "seed for randomized subcommands");

    unsigned long selftest_seed = 20240901;
    auto* st = app.add_subcommand("selftest", "randomized property checks");
    st->add_option("--seed", selftest_seed, "random seed");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    if (run->parsed()) return run_file(file, opt, summary);
    if (st->parsed()) return selftest(selftest_seed);
    return 2;
}
