// Command-line frontend: decide membership in R, run the lattice
// embedding search, enumerate string families, sweep cross-checks and
// evaluate Casson-Gordon sums.

#include <atomic>
#include <cstdlib>
#include <iostream>
#include <mutex>
#include <numeric>
#include <sstream>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "lensball/cfrac.hpp"
#include "lensball/families.hpp"
#include "lensball/rset.hpp"
#include "lensball/search.hpp"

namespace {

using namespace lensball;
using cfrac::Fraction;
using cfrac::NegString;

i64 node_cap_from_env() {
    if (const char* env = std::getenv("LENSBALL_MAX_NODES")) {
        try {
            i64 v = std::stoll(env);
            if (v > 0) return v;
        } catch (const std::exception&) {
            // fall through to the default
        }
        std::cerr << "warning: ignoring invalid LENSBALL_MAX_NODES\n";
    }
    return search::kDefaultMaxNodes;
}

std::string status_name(search::EmbedStatus st) {
    switch (st) {
        case search::EmbedStatus::Found: return "found";
        case search::EmbedStatus::NotFound: return "not_found";
        case search::EmbedStatus::ResourceExceeded: return "resource_exceeded";
    }
    return "?";
}

int cmd_decide(const std::string& text) {
    Fraction fr = Fraction::parse(text);
    rset::RMembership res = rset::is_in_R(fr);
    std::cout << res.to_json() << "\n";
    return res.in_R ? 0 : 1;
}

int cmd_embed(const std::string& text, bool dual, i64 max_nodes, bool csv) {
    Fraction fr = Fraction::parse(text);
    if (dual) fr = rset::f_map(fr);
    NegString s = cfrac::neg_expand(fr);
    search::EmbeddingResult res = search::embed_string(s, max_nodes);
    if (csv) {
        if (res.found()) std::cout << lattice::gram_csv(*res.subset);
        return res.found() ? 0 : 1;
    }
    std::cout << "{\n"
              << "  \"fraction\": \"" << fr.str() << "\",\n"
              << "  \"string\": \"" << s.str() << "\",\n"
              << "  \"status\": \"" << status_name(res.status) << "\",\n"
              << "  \"nodes_explored\": " << res.nodes_explored;
    if (res.found()) std::cout << ",\n  \"matrix\": " << res.subset->to_json();
    std::cout << "\n}\n";
    return res.found() ? 0 : 1;
}

int cmd_family(i64 invariant, i64 max_param, int max_k) {
    std::cout << "invariant,kind,params,string,p,q\n";
    for (const auto& row : families::enumerate_family(invariant, max_param, max_k)) {
        std::cout << families::family_invariant(row.kind) << ','
                  << families::kind_name(row.kind) << ',' << row.params << ",\""
                  << row.string.str() << "\"," << row.fraction.p << ','
                  << row.fraction.q << "\n";
    }
    return 0;
}

int cmd_cg(i64 m, i64 q, double tolerance) {
    std::cout << search::casson_gordon_check(m, q, tolerance).to_json() << "\n";
    return 0;
}

int cmd_expand(const std::string& text) {
    Fraction fr = Fraction::parse(text);
    NegString s = cfrac::neg_expand(fr);
    NegString dual = cfrac::riemenschneider_dual(s);
    NegString rev = cfrac::reverse_string(s);
    std::cout << "{\n"
              << "  \"fraction\": \"" << fr.str() << "\",\n"
              << "  \"string\": \"" << s.str() << "\",\n"
              << "  \"negsum\": " << cfrac::negsum(s) << ",\n"
              << "  \"dual_string\": \"" << dual.str() << "\",\n"
              << "  \"dual_fraction\": \"" << cfrac::neg_eval(dual).str() << "\",\n"
              << "  \"reversed_string\": \"" << rev.str() << "\",\n"
              << "  \"reversed_fraction\": \"" << cfrac::neg_eval(rev).str() << "\"\n"
              << "}\n";
    return 0;
}

// One output line per coprime pair, produced by a deterministic worker
// shard and emitted in (p,q) order regardless of the job count.
int cmd_crosscheck(i64 max_p, int jobs, bool with_cg, bool arith, i64 max_nodes) {
    const i64 cap = arith ? 5000 : 300;
    if (max_p < 2 || max_p > cap)
        throw std::invalid_argument("--max-p must lie in 2.." + std::to_string(cap) +
                                    (arith ? " with --arith" : ""));
    std::vector<Fraction> pairs;
    for (i64 p = 2; p <= max_p; ++p)
        for (i64 q = 1; q < p; ++q)
            if (std::gcd(p, q) == 1) pairs.emplace_back(p, q);

    std::vector<std::string> lines(pairs.size());
    std::atomic<std::size_t> next{0};
    std::atomic<long long> failures{0};
    std::atomic<long long> expected_count{0};
    std::mutex error_mx;
    std::string error_msg;

    auto work_loop = [&] {
        for (;;) {
            std::size_t i = next.fetch_add(1);
            if (i >= pairs.size()) return;
            const Fraction& fr = pairs[i];
            std::ostringstream os;
            if (arith) {
                bool negsum_ok =
                    cfrac::negsum_of(fr) + cfrac::negsum_of(rset::f_map(fr)) == -2;
                auto orb = rset::orbit(fr);
                bool orbit_ok = orb.size() <= 4;
                bool membership_constant = true;
                bool base = rset::is_in_R(fr).in_R;
                for (const Fraction& e : orb)
                    membership_constant =
                        membership_constant && rset::is_in_R(e).in_R == base;
                bool ok = negsum_ok && orbit_ok && membership_constant;
                if (!ok) failures.fetch_add(1);
                os << "{\"p\": " << fr.p << ", \"q\": " << fr.q
                   << ", \"negsum_ok\": " << (negsum_ok ? "true" : "false")
                   << ", \"orbit_ok\": "
                   << (orbit_ok && membership_constant ? "true" : "false") << "}";
            } else {
                bool in_r = rset::is_in_R(fr).in_R;
                auto direct = search::embed_string(cfrac::neg_expand(fr), max_nodes);
                auto other =
                    search::embed_string(cfrac::neg_expand(rset::f_map(fr)), max_nodes);
                if (direct.status == search::EmbedStatus::ResourceExceeded ||
                    other.status == search::EmbedStatus::ResourceExceeded)
                    throw std::runtime_error("node budget exhausted on " + fr.str());
                bool agree = in_r == (direct.found() && other.found());
                // The family m^2/(mk+-1), gcd(m,k) = 2, embeds both ways
                // without lying in R; such disagreements are expected.
                bool expected = !agree && !in_r && rset::embedding_exception(fr);
                if (!agree) {
                    (expected ? expected_count : failures).fetch_add(1);
                }
                os << "{\"p\": " << fr.p << ", \"q\": " << fr.q
                   << ", \"in_R\": " << (in_r ? "true" : "false")
                   << ", \"embeds_pq\": " << (direct.found() ? "true" : "false")
                   << ", \"embeds_dual\": " << (other.found() ? "true" : "false");
                if (!agree)
                    os << ", \"expected_exception\": " << (expected ? "true" : "false");
                if (with_cg) {
                    i64 m = isqrt(fr.p);
                    if (m * m == fr.p && fr.p % 2 == 1 && m <= 31) {
                        auto rep = search::casson_gordon_check(m, fr.q);
                        os << ", \"cg_ok\": " << (rep.all_pm_one ? "true" : "false");
                    }
                }
                os << ", \"agree\": " << (agree ? "true" : "false") << "}";
            }
            lines[i] = os.str();
        }
    };
    auto worker = [&] {
        try {
            work_loop();
        } catch (const std::exception& e) {
            std::lock_guard<std::mutex> lock(error_mx);
            if (error_msg.empty()) error_msg = e.what();
            next.store(pairs.size());  // drain remaining work
        }
    };

    if (jobs < 1) jobs = 1;
    std::vector<std::thread> pool;
    for (int j = 1; j < jobs; ++j) pool.emplace_back(worker);
    worker();
    for (auto& th : pool) th.join();
    if (!error_msg.empty()) throw std::runtime_error(error_msg);

    for (const auto& line : lines) std::cout << line << "\n";
    std::cerr << "pairs: " << pairs.size() << ", "
              << (arith ? "failures: " : "unexplained disagreements: ")
              << failures.load();
    if (!arith) std::cerr << ", expected exceptions: " << expected_count.load();
    std::cerr << "\n";
    return failures.load() == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"lens space rational-ball / ribbon 2-bridge knot calculator"};
    app.require_subcommand(1);

    std::string fraction_text;
    bool dual = false, csv = false, with_cg = false, arith = false;
    i64 max_nodes = node_cap_from_env();
    i64 invariant = -3, max_param = 3, max_p = 300;
    int max_k = 4, jobs = 1;
    i64 cg_m = 3, cg_q = 2;
    double cg_tol = 1e-6;

    auto* decide = app.add_subcommand("decide", "membership of p/q in the set R");
    decide->add_option("fraction", fraction_text, "fraction p/q")->required();

    auto* embed = app.add_subcommand("embed", "lattice embedding search for p/q");
    embed->add_option("fraction", fraction_text, "fraction p/q")->required();
    embed->add_flag("--dual", dual, "search the string of p/(p-q) instead");
    embed->add_option("--max-nodes", max_nodes, "search node budget");
    embed->add_flag("--csv", csv, "print the Gram matrix as CSV instead of JSON");

    auto* family = app.add_subcommand("family", "enumerate closed-form families as CSV");
    family->add_option("--invariant", invariant, "negsum invariant: -1, -2 or -3")
        ->required();
    family->add_option("--max-param", max_param, "parameter bound");
    family->add_option("--max-k", max_k, "block-count bound for the -3 family");

    auto* crosscheck =
        app.add_subcommand("crosscheck", "sweep all coprime pairs and compare routes");
    crosscheck->add_option("--max-p", max_p, "largest p in the sweep");
    crosscheck->add_option("--jobs", jobs, "worker threads");
    crosscheck->add_flag("--with-cg", with_cg, "add Casson-Gordon column for odd squares");
    crosscheck->add_flag("--arith", arith, "arithmetic identities only (no search)");

    auto* cg = app.add_subcommand("cg", "Casson-Gordon sums for K(m^2, q)");
    cg->add_option("m", cg_m, "m (2..31)")->required();
    cg->add_option("q", cg_q, "q coprime to m^2")->required();
    cg->add_option("--tolerance", cg_tol, "deviation tolerance");

    auto* expand = app.add_subcommand("expand", "continued-fraction utilities for p/q");
    expand->add_option("fraction", fraction_text, "fraction p/q")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (decide->parsed()) return cmd_decide(fraction_text);
        if (embed->parsed()) return cmd_embed(fraction_text, dual, max_nodes, csv);
        if (family->parsed()) return cmd_family(invariant, max_param, max_k);
        if (crosscheck->parsed())
            return cmd_crosscheck(max_p, jobs, with_cg, arith, max_nodes);
        if (cg->parsed()) return cmd_cg(cg_m, cg_q, cg_tol);
        if (expand->parsed()) return cmd_expand(fraction_text);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
