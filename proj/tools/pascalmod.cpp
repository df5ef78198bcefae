// Command-line front end for the pascalmod library.

#include <pascalmod/pascalmod.hpp>

#include <CLI11.hpp>

#ifdef PASCALMOD_WITH_NETWORK
#define CPPHTTPLIB_OPENSSL_SUPPORT
#include <httplib.h>
#endif

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace fs = std::filesystem;
using namespace pascalmod;

namespace {

enum Exit { kOk = 0, kCheckFailed = 1, kUsage = 2, kIo = 3 };

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

Prime prime_arg(std::uint64_t p) {
    if (!Prime::is_prime(p)) throw UsageError("not a prime: " + std::to_string(p));
    return Prime(p);
}

/// Writes to `path`, or stdout when the path is empty or "-".
void write_output(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open " + path + " for writing");
    out << text;
    if (!out) throw IoError("write failed: " + path);
}

fs::path fixture_dir(const std::string& flag) {
    if (!flag.empty()) return flag;
    if (const char* v = std::getenv("PASCALMOD_OEIS_FIXTURES"); v && *v) return v;
    return PASCALMOD_DEFAULT_FIXTURE_DIR;
}

oeis::Fetcher network_fetcher() {
#ifdef PASCALMOD_WITH_NETWORK
    return [](const std::string& id) -> std::optional<std::string> {
        httplib::Client cli("https://oeis.org");
        cli.set_follow_location(true);
        cli.set_connection_timeout(10);
        auto res = cli.Get("/" + id + "/" + oeis::bfile_name(id));
        if (!res || res->status != 200) return std::nullopt;
        return res->body;
    };
#else
    return {};
#endif
}

std::string join_values(const std::vector<BigInt>& v) {
    std::string out;
    for (const auto& x : v) out += x.str() + "\n";
    return out;
}

Dfa machine_by_name(const std::string& name, Prime p, std::uint64_t a, std::uint64_t b) {
    if (name == "pair-N") return pair_dfa_N(p);
    if (name == "pair-N-composed") return pair_dfa_N_by_composition(p);
    if (name == "affine") return affine_dfa(a, b, p);
    if (name == "nim-triple") return nim_triple_dfa(p);
    if (name == "altsum") return altsum_dfa(p);
    throw UsageError("unknown machine: " + name);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Pascal's triangle and pyramid modulo a prime: sequences, automata and checks"};
    app.require_subcommand(1);

    // seq
    auto* seq = app.add_subcommand("seq", "Print the first terms of a named sequence");
    std::string seq_name;
    std::uint64_t seq_p = 2;
    std::size_t seq_count = 20;
    std::uint64_t seq_root = 1;
    std::string seq_x = "3";
    std::uint64_t seq_line = 0;
    bool seq_bfile = false;
    seq->add_option("name", seq_name, "t, tprime, N, alpha, evil, Ep, sub, fermat-product, fermat-prime, poly-eval, t-pyramid")
        ->required();
    seq->add_option("-p,--prime", seq_p, "Prime base");
    seq->add_option("-n,--count", seq_count, "Number of terms");
    seq->add_option("--root", seq_root, "Chain root for sub");
    seq->add_option("-x,--at", seq_x, "Evaluation point for poly-eval");
    seq->add_option("--line", seq_line, "Line index for t-pyramid");
    seq->add_flag("--bfile", seq_bfile, "Print as index/value pairs");

    // row
    auto* row_cmd = app.add_subcommand("row", "Print a row of Pascal's triangle mod p and its value");
    std::uint64_t row_n = 0;
    std::uint64_t row_p = 2;
    std::string row_method = "sweep";
    row_cmd->add_option("n", row_n, "Row index")->required();
    row_cmd->add_option("-p,--prime", row_p, "Prime");
    row_cmd->add_option("--method", row_method, "sweep, lucas or concat")
        ->check(CLI::IsMember({"sweep", "lucas", "concat"}));

    // render
    auto* render = app.add_subcommand("render", "Render the triangle or a pyramid plane");
    render->require_subcommand(1);
    auto* r_tri = render->add_subcommand("triangle", "Rows 0..rows-1 of the triangle mod p");
    std::uint64_t rt_p = 2;
    std::size_t rt_rows = 32;
    std::string rt_format = "pgm";
    std::string rt_out;
    r_tri->add_option("-p,--prime", rt_p, "Prime");
    r_tri->add_option("--rows", rt_rows, "Number of rows");
    r_tri->add_option("--format", rt_format, "pgm or svg")->check(CLI::IsMember({"pgm", "svg"}));
    r_tri->add_option("-o,--output", rt_out, "Output file (default stdout)");
    auto* r_plane = render->add_subcommand("pyramid-plane", "Plane x+y+z=n of the pyramid mod p");
    std::uint64_t rp_n = 0;
    std::uint64_t rp_p = 2;
    std::string rp_out;
    r_plane->add_option("n", rp_n, "Plane index")->required();
    r_plane->add_option("-p,--prime", rp_p, "Prime");
    r_plane->add_option("-o,--output", rp_out, "Output file (default stdout)");
    auto* r_cube = render->add_subcommand("pyramid-cube", "z-slices of sigma^k(1) as PGM files");
    std::uint64_t rc_p = 2;
    std::size_t rc_k = 3;
    std::string rc_dir;
    r_cube->add_option("-p,--prime", rc_p, "Prime");
    r_cube->add_option("-k,--depth", rc_k, "Iterations of sigma");
    r_cube->add_option("--out-dir", rc_dir, "Directory for slice_<z>.pgm")->required();

    // plot
    auto* plot = app.add_subcommand("plot", "CSV data for plots");
    std::string plot_kind;
    std::uint64_t plot_from = 0;
    std::uint64_t plot_to = 128;
    std::uint64_t plot_p = 2;
    std::size_t plot_k = 4;
    plot->add_option("kind", plot_kind, "alpha-diff, sn-se, nim-scatter or parabola")
        ->required()
        ->check(CLI::IsMember({"alpha-diff", "sn-se", "nim-scatter", "parabola"}));
    plot->add_option("--from", plot_from, "First sample");
    plot->add_option("--to", plot_to, "One past the last sample");
    plot->add_option("-p,--prime", plot_p, "Prime for alpha-diff and nim-scatter");
    plot->add_option("-k", plot_k, "Dyadic level for parabola");

    // dfa
    auto* dfa = app.add_subcommand("dfa", "Export or run an automaton");
    dfa->require_subcommand(1);
    std::string dfa_machine;
    std::uint64_t dfa_p = 2;
    std::uint64_t dfa_a = 2;
    std::uint64_t dfa_b = 0;
    bool dfa_min = false;
    std::string dfa_out;
    std::vector<std::string> dfa_values;
    auto add_machine_opts = [&](CLI::App* c) {
        c->add_option("machine", dfa_machine, "pair-N, pair-N-composed, affine, nim-triple or altsum")->required();
        c->add_option("-p,--prime", dfa_p, "Prime");
        c->add_option("-a", dfa_a, "Multiplier for affine");
        c->add_option("-b", dfa_b, "Offset for affine");
        c->add_flag("--minimize", dfa_min, "Minimize first");
    };
    auto* dfa_export = dfa->add_subcommand("export", "Graphviz DOT text");
    add_machine_opts(dfa_export);
    dfa_export->add_option("-o,--output", dfa_out, "Output file (default stdout)");
    auto* dfa_run = dfa->add_subcommand("run", "Run on padded values and print the visited states");
    add_machine_opts(dfa_run);
    dfa_run->add_option("values", dfa_values, "One integer per track")->required();

    // morphism
    auto* morph = app.add_subcommand("morphism", "Uniform morphism for the alternating-sum set");
    std::uint64_t mo_p = 2;
    std::size_t mo_len = 27;
    bool mo_coded = false;
    morph->add_option("-p,--prime", mo_p, "Prime");
    morph->add_option("--length", mo_len, "Prefix length of the fixed point");
    morph->add_flag("--coded", mo_coded, "Apply the coding");

    // summatory
    auto* summ = app.add_subcommand("summatory", "Summatory functions of e and N");
    std::optional<std::uint64_t> su_M;
    std::optional<std::size_t> su_k;
    summ->add_option("-M", su_M, "Print S_e(M), S_N(M) and the residual");
    summ->add_option("--dyadic", su_k, "Report on [2^k, 2^{k+1}) as CSV");

    // pyramid
    auto* pyr = app.add_subcommand("pyramid", "Pascal's pyramid mod p");
    pyr->require_subcommand(1);
    auto* block = pyr->add_subcommand("block-check", "Block law against direct trinomials");
    std::uint64_t bc_p = 2;
    std::uint64_t bc_limit = 64;
    block->add_option("-p,--prime", bc_p, "Prime");
    block->add_option("--limit", bc_limit, "Bound on x+y+z");

    // oeis
    auto* oe = app.add_subcommand("oeis", "OEIS b-file cross-checks");
    oe->require_subcommand(1);
    auto* verify = oe->add_subcommand("verify", "Compare emitted sequences with b-files");
    std::vector<std::string> ve_ids;
    std::string ve_fixtures;
    bool ve_network = false;
    std::size_t ve_terms = 0;
    verify->add_option("ids", ve_ids, "Identifiers (default: all cited entries)");
    verify->add_option("--fixtures", ve_fixtures, "Fixture directory");
    verify->add_flag("--network", ve_network, "Allow download when no fixture or cached copy exists");
    verify->add_option("--terms", ve_terms, "Compare at most this many terms");

    // check
    auto* chk = app.add_subcommand("check", "Run the property suite");
    std::string ck_level = "quick";
    bool ck_fault = false;
    std::string ck_fixtures;
    chk->add_option("--level", ck_level, "quick or full")->check(CLI::IsMember({"quick", "full"}));
    chk->add_flag("--inject-fault", ck_fault, "Corrupt one mu multiplier; the run must fail");
    chk->add_option("--fixtures", ck_fixtures, "Fixture directory");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kOk : kUsage;
    }

    try {
        if (*seq) {
            if (seq_x.empty() || seq_x.find_first_not_of("-0123456789") != std::string::npos) {
                throw UsageError("--at needs an integer");
            }
            SequenceDescriptor d{seq_name, prime_arg(seq_p), seq_root, BigInt(seq_x), seq_line};
            const auto values = emit_sequence(d, seq_count);
            if (seq_bfile) {
                std::cout << oeis::format_bfile(oeis::make_bfile("A000000", sequence_offset(d), values));
            } else {
                std::cout << join_values(values);
            }
        } else if (*row_cmd) {
            const Prime p = prime_arg(row_p);
            ResidueRow r;
            if (row_method == "sweep") {
                r = row(row_n, p);
            } else if (row_method == "concat") {
                r = row_concat(row_n, p);
            } else {
                r = ResidueRow{row_n, p, {}};
                for (std::uint64_t k = 0; k <= row_n; ++k) r.coeffs.push_back(binom_mod(row_n, k, p));
            }
            for (std::size_t i = 0; i < r.coeffs.size(); ++i) std::cout << (i ? " " : "") << r.coeffs[i];
            std::cout << "\n" << row_value(r) << "\n";
        } else if (*r_tri) {
            const Prime p = prime_arg(rt_p);
            if (rt_rows < 1) throw UsageError("--rows must be >= 1");
            write_output(rt_out, rt_format == "pgm" ? to_pgm(render_triangle(p, rt_rows)) : render_triangle_svg(p, rt_rows));
        } else if (*r_plane) {
            write_output(rp_out, to_pgm(render_plane(plane(rp_n, prime_arg(rp_p)))));
        } else if (*r_cube) {
            const auto cube = iterate_sigma(prime_arg(rc_p), rc_k);
            std::error_code ec;
            fs::create_directories(rc_dir, ec);
            if (ec) throw IoError("cannot create " + rc_dir + ": " + ec.message());
            const auto slices = cube_slices(cube);
            for (std::size_t z = 0; z < slices.size(); ++z) {
                write_output((fs::path(rc_dir) / ("slice_" + std::to_string(z) + ".pgm")).string(),
                             to_pgm(slices[z], "z = " + std::to_string(z)));
            }
        } else if (*plot) {
            if (plot_kind == "parabola") {
                if (plot_k < 2) throw UsageError("-k must be >= 2");
                std::cout << plot_parabola(plot_k);
            } else if (plot_from > plot_to) {
                throw UsageError("--from must not exceed --to");
            } else if (plot_kind == "alpha-diff") {
                std::cout << plot_alpha_diff(plot_from, plot_to, prime_arg(plot_p));
            } else if (plot_kind == "sn-se") {
                std::cout << plot_sn_se(plot_from, plot_to);
            } else {
                std::cout << plot_nim_scatter(plot_from, plot_to, prime_arg(plot_p));
            }
        } else if (*dfa_export || *dfa_run) {
            Dfa d = machine_by_name(dfa_machine, prime_arg(dfa_p), dfa_a, dfa_b);
            if (dfa_min) d = minimize(d);
            if (*dfa_export) {
                write_output(dfa_out, to_dot(d));
            } else {
                if (dfa_values.size() != d.arity()) {
                    throw UsageError("machine reads " + std::to_string(d.arity()) + " values");
                }
                std::vector<BigInt> vals;
                for (const auto& v : dfa_values) vals.emplace_back(v);
                const auto word = pad_tuple<BigInt>(vals, d.base());
                const auto path = d.trace(encode_word(d, word));
                std::cout << word.to_string() << " " << to_string(d.direction()) << "\n";
                for (std::size_t i = 0; i < path.size(); ++i) std::cout << (i ? " -> " : "") << path[i];
                std::cout << "\n" << (d.accepting(path.back()) ? "accept" : "reject") << "\n";
            }
        } else if (*morph) {
            const auto m = cobham_morphism(prime_arg(mo_p));
            for (std::size_t j = 0; j < m.images.size(); ++j) {
                std::cout << j << " -> ";
                for (Digit s : m.images[j]) std::cout << s << (m.p > 10 ? "." : "");
                std::cout << "  tau=" << m.coding[j] << "\n";
            }
            const auto w = fixed_point_prefix(m, mo_len);
            for (Digit s : w) std::cout << (mo_coded ? m.coding[s] : s) << (m.p > 10 ? " " : "");
            std::cout << "\n";
        } else if (*summ) {
            if (!su_M && !su_k) throw UsageError("give -M or --dyadic");
            if (su_M) {
                std::cout << "S_e(" << *su_M << ") = " << S_e_closed(*su_M) << "\n";
                std::cout << "S_N(" << *su_M << ") = " << S_N_via_alpha(*su_M) << "\n";
                if (*su_M >= 2) std::cout << "R = " << S_N_residual(*su_M) << "\n";
            }
            if (su_k) {
                if (*su_k < 2) throw UsageError("--dyadic needs k >= 2");
                const auto rep = dyadic_report(*su_k);
                std::cerr << "max " << rep.max_difference << " at M = " << rep.argmax << " (closed form "
                          << rep.closed_form_max << ")\n";
                std::cout << dyadic_csv(rep);
                if (!rep.ok()) return kCheckFailed;
            }
        } else if (*block) {
            const Prime p = prime_arg(bc_p);
            CheckReport r;
            for (std::uint64_t X = 0; X <= bc_limit; ++X) {
                for (std::uint64_t Y = 0; X + Y <= bc_limit; ++Y) {
                    for (std::uint64_t Z = 0; X + Y + Z <= bc_limit; ++Z) {
                        ++r.checked;
                        if (trinomial_mod(X + Y + Z, X, Y, Z, p) !=
                            block_relation(X / p, Y / p, Z / p, X % p, Y % p, Z % p, p)) {
                            r.fail("(" + std::to_string(X) + "," + std::to_string(Y) + "," + std::to_string(Z) + ")");
                        }
                    }
                }
            }
            std::cout << (r.ok ? "PASS" : "FAIL") << " block law, " << r.checked << " cells" << (r.ok ? "" : ": " + r.failure)
                      << "\n";
            if (!r.ok) return kCheckFailed;
        } else if (*verify) {
            oeis::Source src{fixture_dir(ve_fixtures), oeis::default_cache_dir(), {}};
            if (ve_network) src.fetch = network_fetcher();
            if (ve_network && !src.fetch) throw UsageError("this build has no network support");
            if (ve_ids.empty()) {
                for (const auto& b : oeis_bindings) ve_ids.emplace_back(b.id);
            }
            bool all_ok = true;
            for (const auto& id : ve_ids) {
                const auto binding = find_binding(id);
                if (!binding) throw UsageError("no sequence is bound to " + id);
                const auto file = src.load(id);
                std::size_t want = file.entries.size();
                if (binding->max_terms) want = std::min(want, binding->max_terms);
                if (ve_terms) want = std::min(want, ve_terms);
                SequenceDescriptor d{std::string(binding->sequence), Prime(binding->p)};
                const auto cmp = oeis::compare(file, emit_sequence(d, want), sequence_offset(d));
                std::cout << (cmp.match ? "PASS " : "FAIL ") << cmp.message << "\n";
                all_ok = all_ok && cmp.match;
            }
            if (!all_ok) return kCheckFailed;
        } else if (*chk) {
            CheckOptions opt;
            opt.level = ck_level == "full" ? CheckLevel::Full : CheckLevel::Quick;
            opt.inject_mu_fault = ck_fault;
            const fs::path fx = fixture_dir(ck_fixtures);
            if (fs::is_directory(fx)) opt.fixture_dir = fx;
            const auto results = run_checks(opt, std::cout);
            if (!all_passed(results)) return kCheckFailed;
        }
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::length_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const IoError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kIo;
    } catch (const oeis::OfflineError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kIo;
    } catch (const oeis::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kIo;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kCheckFailed;
    }
    return kOk;
}
