#ifndef HNAMBU_CLI_HPP
#define HNAMBU_CLI_HPP

#include <hnambu/cohomology.hpp>
#include <hnambu/constructions.hpp>
#include <hnambu/derivations.hpp>
#include <hnambu/identities.hpp>
#include <hnambu/io.hpp>

#include <CLI11.hpp>
#include <openssl/evp.h>

#include <cstdio>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

/// Command-line front end. Every command prints a line-oriented report of
/// `key: value` lines and exits 0 when all verdicts hold, 1 when one fails and
/// 2 on usage or input errors.
namespace hnambu::cli {

inline std::string sha256_hex(const std::string& data) {
    unsigned char md[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    if (EVP_Digest(data.data(), data.size(), md, &len, EVP_sha256(), nullptr) != 1)
        throw std::runtime_error("SHA-256 failed");
    std::ostringstream os;
    for (unsigned int i = 0; i < len; ++i) os << std::hex << std::setw(2) << std::setfill('0') << int(md[i]);
    return os.str();
}

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

inline std::string tuple_text(const std::vector<std::size_t>& t) {
    std::string s = "(";
    for (std::size_t i = 0; i < t.size(); ++i) s += (i ? ", " : "") + std::to_string(t[i] + 1);
    return s + ")";
}

/// Report body plus the running verdict.
class Report {
public:
    void line(const std::string& key, const std::string& value) { body_ << key << ": " << value << "\n"; }
    void line(const std::string& key, std::size_t value) { line(key, std::to_string(value)); }

    void raw(const std::string& text) { body_ << text; }

    void block(const std::string& key, const std::string& text, const std::string& indent = "  ") {
        body_ << key << ":\n";
        std::istringstream in(text);
        for (std::string l; std::getline(in, l);) body_ << indent << l << "\n";
    }

    void verdict(const std::string& key, const IdentityReport& r) {
        std::ostringstream v;
        v << (r.holds ? "holds" : "fails") << " (" << r.instances << " instances";
        if (!r.holds) v << ", " << r.failures << " failures";
        if (r.out_of_truncation) v << ", " << r.out_of_truncation << " out of truncation";
        v << ")";
        line(key, v.str());
        for (std::size_t i = 0; i < r.witnesses.size(); ++i) {
            const auto& w = r.witnesses[i];
            body_ << "  witness " << i + 1 << ": " << tuple_text(w.tuple) << " lhs " << io::format_vector(w.lhs)
                  << " rhs " << io::format_vector(w.rhs) << "\n";
        }
        pass_ = pass_ && r.holds;
    }

    void verdict(const std::string& key, bool holds) {
        line(key, holds ? "holds" : "fails");
        pass_ = pass_ && holds;
    }

    void fail() { pass_ = false; }
    [[nodiscard]] bool pass() const { return pass_; }

    [[nodiscard]] std::string finish() {
        line("status", pass_ ? "pass" : "fail");
        return body_.str();
    }

private:
    std::ostringstream body_;
    bool pass_ = true;
};

inline void describe_algebra(Report& rep, const std::string& label, const HomNambuAlgebra& alg) {
    rep.line(label, alg.name());
    rep.line(label + "-sha256", sha256_hex(io::serialize_algebra(alg)));
    rep.line("dim", alg.dim());
    rep.line("arity", alg.arity());
}

inline void describe_output(Report& rep, const HomNambuAlgebra& out, const std::optional<std::string>& path,
                            bool print) {
    const std::string text = io::serialize_algebra(out);
    rep.line("output", out.name());
    rep.line("output-sha256", sha256_hex(text));
    rep.line("output-dim", out.dim());
    rep.line("output-arity", out.arity());
    rep.line("output-constants", out.bracket().nonzero_count());
    rep.verdict("round-trip", io::parse_algebra(text) == out && io::parse_algebra(text).name() == out.name());
    if (print) rep.block("output-document", text);
    if (path) {
        std::ofstream o(*path, std::ios::binary);
        if (!o) throw std::runtime_error("cannot write '" + *path + "'");
        o << text;
    }
}

inline std::string matrix_text(const Matrix& m) { return io::format_matrix_inline(m); }

inline void derivation_block(Report& rep, const DerivationBasis& b) {
    rep.line("degree " + std::to_string(b.degree), "dimension " + std::to_string(b.size()));
    for (std::size_t i = 0; i < b.size(); ++i)
        rep.raw("  basis " + std::to_string(i + 1) + ": " + matrix_text(b.basis[i]) + "\n");
}

inline void vector_list(Report& rep, const std::string& key, const std::vector<Vector>& vs) {
    rep.line(key, vs.size());
    for (std::size_t i = 0; i < vs.size(); ++i)
        rep.raw("  " + std::to_string(i + 1) + ": " + io::format_vector(vs[i]) + "\n");
}

struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Runs one command line (argv[0] is the program name). The report goes to
/// `out`, diagnostics to `err`.
inline int run(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact computations with n-ary Hom-Nambu algebras", "hnambu"};
    app.require_subcommand(1);
    std::string golden;
    bool bless = false;
    app.add_option("--golden", golden, "Compare the report with this file");
    app.add_flag("--bless", bless, "Write the report to the --golden file instead of comparing");

    std::string alg_path, second_path, rep_path, omega_path, out_path, variant = "plain", hom_gm;
    std::size_t k = 0, witnesses = 10, module_dim = 1;
    std::optional<std::size_t> kmax;
    bool hom_lie = false, require_mult = false, compose = false, print = false;
    std::function<void(Report&)> action;

    auto input_errors = [&](auto&& fn) {
        try {
            return fn();
        } catch (const ParseError& e) {
            throw InputError(e.what());
        } catch (const RangeError& e) {
            throw InputError(e.what());
        } catch (const DuplicateKey& e) {
            throw InputError(e.what());
        } catch (const std::runtime_error& e) {
            throw InputError(e.what());
        }
    };
    auto load_alg = [&](const std::string& p) {
        return input_errors([&] { return io::parse_algebra(read_file(p)); });
    };
    auto load_mat = [&](const std::string& p) { return input_errors([&] { return io::parse_matrix(read_file(p)); }); };
    auto load_coc = [&](const std::string& p) {
        return input_errors([&] { return io::parse_cochain(read_file(p)); });
    };
    auto load_rep = [&](const HomNambuAlgebra& alg) {
        if (rep_path.empty()) return trivial_representation(alg, module_dim);
        return input_errors([&] { return io::parse_representation(read_file(rep_path)); });
    };
    auto describe_rep = [&](Report& r, const Representation& rep) {
        r.line("module", rep.name);
        r.line("module-sha256", sha256_hex(io::serialize_representation(rep)));
        r.line("module-dim", rep.module_dim);
    };
    auto opts = [&] { return VerifyOptions{witnesses}; };

    auto* verify = app.add_subcommand("verify", "Check the twisted fundamental identity of an algebra");
    verify->add_option("algebra", alg_path)->required();
    verify->add_flag("--hom-lie", hom_lie, "Also check antisymmetry and the Hom-Jacobi identity");
    verify->add_flag("--require-multiplicative", require_mult, "Count multiplicativity as a verdict");
    verify->add_option("--witnesses", witnesses, "Maximum witnesses listed per verdict");
    verify->callback([&] {
        action = [&](Report& r) {
            const auto alg = load_alg(alg_path);
            describe_algebra(r, "algebra", alg);
            r.verdict("hom-nambu", verify_hom_nambu(alg, opts()));
            if (alg.has_identity_twists()) r.verdict("leibniz", verify_leibniz(alg, opts()));
            if (require_mult)
                r.verdict("multiplicative", verify_multiplicative(alg, opts()));
            else
                r.line("multiplicative", alg.is_multiplicative() ? "yes" : "no");
            if (alg.is_multiplicative()) r.verdict("hom-nambu-multiplicative", verify_hom_nambu_multiplicative(alg, opts()));
            if (hom_lie) r.verdict("hom-lie", verify_hom_lie(alg, opts()));
        };
    });

    auto* morph = app.add_subcommand("morphism", "Check that a matrix is an algebra morphism");
    morph->add_option("algebra", alg_path)->required();
    morph->add_option("matrix", second_path)->required();
    morph->add_option("--target", omega_path, "Target algebra (defaults to the source)");
    morph->add_option("--witnesses", witnesses);
    morph->callback([&] {
        action = [&](Report& r) {
            const auto src = load_alg(alg_path);
            const auto tgt = omega_path.empty() ? src : load_alg(omega_path);
            const auto f = load_mat(second_path);
            describe_algebra(r, "algebra", src);
            if (!omega_path.empty()) r.line("target", tgt.name());
            r.line("matrix", matrix_text(f));
            r.verdict("morphism", verify_morphism(f, src, tgt, opts()));
        };
    });

    auto* twist = app.add_subcommand("twist", "Twist an algebra along a morphism");
    twist->add_option("algebra", alg_path)->required();
    twist->add_option("matrix", second_path)->required();
    twist->add_flag("--compose", compose, "Compose with the existing twist even when it is the identity");
    twist->add_option("--out", out_path, "Write the twisted algebra here");
    twist->add_flag("--print", print, "Include the twisted algebra in the report");
    twist->add_option("--witnesses", witnesses);
    twist->callback([&] {
        action = [&](Report& r) {
            const auto alg = load_alg(alg_path);
            const auto f = load_mat(second_path);
            describe_algebra(r, "algebra", alg);
            r.line("matrix", matrix_text(f));
            const bool by_endo = alg.has_identity_twists() && !compose;
            r.line("construction", by_endo ? "endomorphism" : "composition");
            const auto res = by_endo ? twist_by_endomorphism(alg, f) : compose_twist(alg, f);
            describe_output(r, res, out_path.empty() ? std::nullopt : std::optional(out_path), print);
            r.verdict("hom-nambu", verify_hom_nambu(res, opts()));
            r.verdict("multiplicative", verify_multiplicative(res, opts()));
        };
    });

    auto* derive = app.add_subcommand("derive", "Derivation spaces Der_{alpha^k}");
    derive->add_option("algebra", alg_path)->required();
    derive->add_option("--k", k, "Degree");
    derive->add_option("--kmax", kmax, "Compute degrees 0..kmax and the bracket structure");
    derive->add_option("--witnesses", witnesses);
    derive->callback([&] {
        action = [&](Report& r) {
            const auto alg = load_alg(alg_path);
            describe_algebra(r, "algebra", alg);
            if (!kmax) {
                derivation_block(r, derivation_space(alg, k));
                return;
            }
            const auto g = assemble_der_algebra(alg, *kmax, opts());
            for (const auto& b : g.degrees) derivation_block(r, b);
            r.line("total-dimension", g.total_dim);
            r.verdict("graded-closure", g.closure);
            r.verdict("hom-lie", g.hom_lie);
        };
    });

    auto* inner = app.add_subcommand("inner", "Inner derivations and the inner ideal");
    inner->add_option("algebra", alg_path)->required();
    inner->add_option("--k", k, "Index of ad_k");
    inner->add_option("--kmax", kmax, "Also check the ideal property up to this degree");
    inner->add_option("--witnesses", witnesses);
    inner->callback([&] {
        action = [&](Report& r) {
            const auto alg = load_alg(alg_path);
            describe_algebra(r, "algebra", alg);
            const auto ib = inner_space(alg, k);
            vector_list(r, "fixed-subspace", ib.fixed_basis);
            r.line("generators", ib.generators.size());
            bool all = true;
            for (std::size_t i = 0; i < ib.generators.size(); ++i) {
                const bool ok = is_derivation(alg, ib.generators[i], k + 1);
                all = all && ok;
                r.raw("  ad" + tuple_text(ib.generator_args[i]) + ": " + matrix_text(ib.generators[i]) + "\n");
            }
            r.verdict("generators-in-der-" + std::to_string(k + 1), all);
            r.line("inner-dimension", ib.span.size());
            if (kmax) r.verdict("inner-ideal", check_inn_ideal(alg, *kmax, opts()));
        };
    });

    auto* omega = app.add_subcommand("omega-derive", "omega-alpha^k-derivations of a multilinear map");
    omega->add_option("algebra", alg_path, "Supplies the space and alpha (and omega by default)")->required();
    omega->add_option("--omega", omega_path, "Algebra file whose bracket is used as omega");
    omega->add_option("--k", k, "Degree");
    omega->callback([&] {
        action = [&](Report& r) {
            const auto alg = load_alg(alg_path);
            describe_algebra(r, "algebra", alg);
            const MultiLinearMap w = omega_path.empty() ? alg.bracket() : load_alg(omega_path).bracket();
            r.line("omega", omega_path.empty() ? std::string("bracket") : omega_path);
            const auto b = omega_derivation_space(alg.dim(), w, alg.alpha(), k);
            derivation_block(r, b);
            if (omega_path.empty() && alg.is_multiplicative())
                r.verdict("matches-derivation-space", derivation_space(alg, k).basis == b.basis);
        };
    });

    auto* tensor = app.add_subcommand("tensor", "Tensor power constructions");
    tensor->add_option("algebra", alg_path)->required();
    tensor->add_option("--variant", variant, "plain, hom or power")
        ->check(CLI::IsMember({"plain", "hom", "power"}));
    tensor->add_option("--k", k, "Tensor power for the power variant");
    tensor->add_option("--out", out_path, "Write the constructed algebra here");
    tensor->add_option("--witnesses", witnesses);
    tensor->callback([&] {
        action = [&](Report& r) {
            const auto alg = load_alg(alg_path);
            describe_algebra(r, "algebra", alg);
            r.line("variant", variant);
            const std::optional<std::string> path = out_path.empty() ? std::nullopt : std::optional(out_path);
            if (variant == "hom") {
                const auto res = tensor_hom_leibniz(alg);
                describe_output(r, res, path, false);
                r.verdict("hom-leibniz", verify_hom_nambu(res, opts()));
                r.verdict("multiplicative", verify_multiplicative(res, opts()));
                return;
            }
            Constructed c = [&] {
                if (variant == "plain") return tensor_leibniz(alg, opts());
                if (k == 0 || (alg.arity() - 1) % k != 0)
                    throw ArityMismatch("--k must divide arity - 1 = " + std::to_string(alg.arity() - 1));
                return tensor_power_nary(alg, k, (alg.arity() - 1) / k, opts());
            }();
            if (variant == "power") r.line("k", k);
            describe_output(r, c.algebra, path, false);
            r.verdict("hom-nambu", c.verdict);
            r.line("multiplicative", c.algebra.is_multiplicative() ? "yes" : "no");
        };
    });

    auto* repv = app.add_subcommand("rep-verify", "Check that a module is a representation");
    repv->add_option("algebra", alg_path)->required();
    repv->add_option("--rep", rep_path, "Representation file (default: trivial module)");
    repv->add_option("--module-dim", module_dim, "Dimension of the trivial module");
    repv->add_option("--hom-gm", hom_gm, "Check Hom(g, M) over the plain or hom tensor algebra instead")
        ->check(CLI::IsMember({"plain", "hom"}));
    repv->add_option("--witnesses", witnesses);
    repv->callback([&] {
        action = [&](Report& r) {
            const auto alg = load_alg(alg_path);
            const auto rep = load_rep(alg);
            describe_algebra(r, "algebra", alg);
            describe_rep(r, rep);
            if (hom_gm.empty()) {
                r.verdict("representation", verify_representation(alg, rep, opts()));
                return;
            }
            const auto base = hom_gm_base(alg, hom_gm == "plain" ? TensorVariant::plain : TensorVariant::hom);
            const auto hg = hom_gm_representation(alg, rep);
            r.line("base", base.name());
            r.line("hom-gm-dim", hg.module_dim);
            r.line("hom-gm-sha256", sha256_hex(io::serialize_representation(hg)));
            r.verdict("representation", verify_representation(base, hg, opts()));
        };
    });

    auto* coh = app.add_subcommand("cohomology", "Cocycles, coboundaries and Ext");
    coh->add_option("algebra", alg_path)->required();
    coh->add_option("--rep", rep_path, "Representation file (default: trivial module)");
    coh->add_option("--module-dim", module_dim, "Dimension of the trivial module");
    coh->callback([&] {
        action = [&](Report& r) {
            const auto alg = load_alg(alg_path);
            const auto rep = load_rep(alg);
            describe_algebra(r, "algebra", alg);
            describe_rep(r, rep);
            const auto z = cocycle_space(alg, rep);
            const auto b = coboundary_space(alg, rep);
            vector_list(r, "dim-Z", z);
            vector_list(r, "dim-B", b);
            bool inside = true;
            for (const auto& v : b) inside = inside && in_span(v, z);
            r.verdict("B-in-Z", inside);
            if (inside) r.line("ext", quotient_dimension(z, b));
        };
    });

    auto* split = app.add_subcommand("split", "Decide whether a cocycle is a coboundary of an alpha-invariant map");
    split->add_option("algebra", alg_path)->required();
    split->add_option("cochain", second_path)->required();
    split->add_option("--rep", rep_path, "Representation file (default: trivial module)");
    split->add_option("--module-dim", module_dim, "Dimension of the trivial module");
    split->add_option("--witnesses", witnesses);
    split->callback([&] {
        action = [&](Report& r) {
            const auto alg = load_alg(alg_path);
            const auto rep = load_rep(alg);
            const auto f = load_coc(second_path);
            describe_algebra(r, "algebra", alg);
            describe_rep(r, rep);
            r.line("cochain-sha256", sha256_hex(io::serialize_cochain(f)));
            const auto res = cocycle_residual(alg, rep, f, opts());
            r.verdict("cocycle", res);
            if (!res.holds) return;
            const auto h = split_check(alg, rep, f);
            r.line("split", h ? matrix_text(*h) : std::string("none"));
            if (h) r.verdict("coboundary-matches", coboundary(alg, rep, *h) == f);
        };
    });

    auto* ext = app.add_subcommand("extension", "Build M + g from a cochain and check it");
    ext->add_option("algebra", alg_path)->required();
    ext->add_option("cochain", second_path)->required();
    ext->add_option("--rep", rep_path, "Representation file (default: trivial module)");
    ext->add_option("--module-dim", module_dim, "Dimension of the trivial module");
    ext->add_option("--out", out_path, "Write the extension here");
    ext->add_flag("--print", print, "Include the extension in the report");
    ext->add_option("--witnesses", witnesses);
    ext->callback([&] {
        action = [&](Report& r) {
            const auto alg = load_alg(alg_path);
            const auto rep = load_rep(alg);
            const auto f = load_coc(second_path);
            describe_algebra(r, "algebra", alg);
            describe_rep(r, rep);
            r.line("cochain-sha256", sha256_hex(io::serialize_cochain(f)));
            const auto h = semidirect_algebra(alg, rep, f);
            describe_output(r, h, out_path.empty() ? std::nullopt : std::optional(out_path), print);
            const auto hn = verify_hom_nambu(h, opts());
            const auto co = cocycle_residual(alg, rep, f, opts());
            r.verdict("hom-nambu", hn);
            r.verdict("cocycle", co);
            r.line("agreement", hn.holds == co.holds ? "yes" : "no");
            if (hn.holds != co.holds) r.fail();
        };
    });

    for (auto* sub : app.get_subcommands({})) sub->fallthrough();

    std::vector<const char*> cargv;
    for (const auto& a : argv) cargv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(cargv.size()), cargv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }

    // Command echo without the golden options.
    std::string echo;
    for (std::size_t i = 1; i < argv.size(); ++i) {
        if (argv[i] == "--bless") continue;
        if (argv[i] == "--golden") {
            ++i;
            continue;
        }
        if (argv[i].rfind("--golden=", 0) == 0) continue;
        echo += (echo.empty() ? "" : " ") + argv[i];
    }

    Report report;
    report.line("command", echo);
    try {
        action(report);
    } catch (const InputError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        report.line("error", e.what());
        report.fail();
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    const std::string body = report.finish();
    out << body;

    if (!golden.empty()) {
        if (bless) {
            std::ofstream g(golden, std::ios::binary);
            if (!g) {
                err << "error: cannot write '" << golden << "'\n";
                return 2;
            }
            g << body;
            out << "golden: blessed\n";
        } else {
            std::string expected;
            try {
                expected = read_file(golden);
            } catch (const std::exception& e) {
                err << "error: " << e.what() << "\n";
                return 2;
            }
            const bool match = expected == body;
            out << "golden: " << (match ? "match" : "mismatch") << "\n";
            if (!match) return 1;
        }
    }
    return report.pass() ? 0 : 1;
}

}  // namespace hnambu::cli

#endif  // HNAMBU_CLI_HPP
