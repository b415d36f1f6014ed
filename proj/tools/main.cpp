// Command-line surface over the library: algebra/module/bimodule data
// commands, rank varieties, cohomology dimensions, and the verification
// suite. File formats are documented in bimodkit/json_io.hpp.

#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "bimodkit/json_io.hpp"
#include "bimodkit/verify.hpp"

using namespace bimodkit;

namespace {

void emit(const std::string& out_path, const std::string& content) {
    if (out_path.empty())
        std::cout << content << "\n";
    else
        write_file(out_path, content);
}

std::string dir_of(const std::string& path) {
    std::size_t slash = path.find_last_of('/');
    return slash == std::string::npos ? std::string(".") : path.substr(0, slash);
}

Module load_module(const std::string& path) { return module_from_json(read_file(path), dir_of(path)); }

Bimodule load_bimodule(const std::string& path) {
    return bimodule_from_json(read_file(path), dir_of(path));
}

HopfAlgebra hopf_for(const AlgebraPtr& a) {
    if (a->kind() != AlgebraKind::Truncated)
        throw std::invalid_argument("this operation needs a group algebra presentation");
    HopfAlgebra h = group_algebra_abelian(a->p(), a->exponents());
    if (!h.poly_algebra->same_as(*a))
        throw std::invalid_argument("algebra does not match a group algebra presentation");
    return h;
}

FpMatrix parse_square_matrix(u32 p, std::size_t n, const std::string& csv) {
    std::vector<u32> vals;
    std::string cur;
    for (char ch : csv + ",") {
        if (ch == ',') {
            if (!cur.empty()) vals.push_back(static_cast<u32>(std::stoul(cur)));
            cur.clear();
        } else if (!isspace(static_cast<unsigned char>(ch))) {
            cur += ch;
        }
    }
    if (vals.size() != n * n)
        throw std::invalid_argument("expected " + std::to_string(n * n) + " comma-separated entries");
    FpMatrix m(p, n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m.set(i, j, vals[i * n + j]);
    return m;
}

std::string bool_json(bool v) { return std::string("{\n  \"result\": ") + (v ? "true" : "false") + "\n}"; }

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact computations with modules and bimodules over unipotent algebras on prime fields"};
    app.require_subcommand(1);

    std::string out, file_a, file_b, format = "json", kind, exponents_csv, orders_csv, alpha_csv, beta_csv,
                side = "left";
    u32 p = 2;
    std::size_t nrank = 1, degree = 6;
    u64 seed = 12345;
    bool holm = false;

    // algebra new/check/env
    auto* alg = app.add_subcommand("algebra", "construct and inspect algebras");
    auto* alg_new = alg->add_subcommand("new", "construct a built-in algebra");
    alg_new->add_option("--kind", kind, "truncated | elementary-abelian | cyclic | group")->required();
    alg_new->add_option("-p", p, "prime modulus")->required();
    alg_new->add_option("-n", nrank, "rank for elementary-abelian");
    alg_new->add_option("--exponents", exponents_csv, "comma-separated truncation exponents");
    alg_new->add_option("--orders", orders_csv, "comma-separated p-power orders for group");
    alg_new->add_option("-o", out, "output file");
    auto* alg_check = alg->add_subcommand("check", "validate an algebra file and print a summary");
    alg_check->add_option("file", file_a)->required();
    auto* alg_env = alg->add_subcommand("env", "enveloping algebra");
    alg_env->add_option("file", file_a)->required();
    alg_env->add_option("-o", out, "output file");

    // module check/syzygy/cosyzygy
    auto* mod = app.add_subcommand("module", "module-level operations");
    auto* mod_check = mod->add_subcommand("check", "validate a module file");
    mod_check->add_option("file", file_a)->required();
    auto* mod_syz = mod->add_subcommand("syzygy", "kernel of the projective cover");
    mod_syz->add_option("file", file_a)->required();
    mod_syz->add_option("-o", out, "output file");
    auto* mod_cosyz = mod->add_subcommand("cosyzygy", "inverse syzygy over a selfinjective algebra");
    mod_cosyz->add_option("file", file_a)->required();
    mod_cosyz->add_option("-o", out, "output file");

    // bimod lrp/tensor/dual/twist/zigzag
    auto* bim = app.add_subcommand("bimod", "bimodule-level operations");
    auto* bim_lrp = bim->add_subcommand("lrp", "left-right projectivity test");
    bim_lrp->add_option("file", file_a)->required();
    auto* bim_tensor = bim->add_subcommand("tensor", "tensor product over the base algebra");
    bim_tensor->add_option("left", file_a)->required();
    bim_tensor->add_option("right", file_b)->required();
    bim_tensor->add_option("-o", out, "output file");
    auto* bim_dual = bim->add_subcommand("dual", "left or right dual");
    bim_dual->add_option("--side", side, "left | right")->check(CLI::IsMember({"left", "right"}));
    bim_dual->add_option("file", file_a)->required();
    bim_dual->add_option("-o", out, "output file");
    auto* bim_twist = bim->add_subcommand("twist", "twisted bimodule from linear substitutions");
    bim_twist->add_option("algebra", file_a, "truncated algebra file")->required();
    bim_twist->add_option("--alpha", alpha_csv, "row-major n x n entries for the left twist");
    bim_twist->add_option("--beta", beta_csv, "row-major n x n entries for the right twist");
    bim_twist->add_option("-o", out, "output file");
    auto* bim_zigzag = bim->add_subcommand("zigzag", "verify the duality triangle identities");
    bim_zigzag->add_option("file", file_a)->required();

    // hopf F/G/verify-gf
    auto* hop = app.add_subcommand("hopf", "induction functors between modules and bimodules");
    auto* hop_f = hop->add_subcommand("F", "induce a bimodule from a module");
    hop_f->add_option("file", file_a)->required();
    hop_f->add_option("-o", out, "output file");
    auto* hop_g = hop->add_subcommand("G", "restrict a bimodule to a module");
    hop_g->add_option("file", file_a)->required();
    hop_g->add_option("-o", out, "output file");
    auto* hop_gf = hop->add_subcommand("verify-gf", "check that G(F(M)) recovers M");
    hop_gf->add_option("file", file_a)->required();

    // variety compute/tpp
    auto* var = app.add_subcommand("variety", "rank varieties at rational points");
    auto* var_compute = var->add_subcommand("compute", "rank variety of a module");
    var_compute->add_option("file", file_a)->required();
    var_compute->add_option("-o", out, "output file");
    auto* var_tpp = var->add_subcommand("tpp", "tensor product property for two modules");
    var_tpp->add_option("left", file_a)->required();
    var_tpp->add_option("right", file_b)->required();

    // cohom ext/hh
    auto* coh = app.add_subcommand("cohom", "Ext and Hochschild dimensions");
    auto* coh_ext = coh->add_subcommand("ext", "dim Ext^i(M, N) up to a degree");
    coh_ext->add_option("left", file_a)->required();
    coh_ext->add_option("right", file_b)->required();
    coh_ext->add_option("-d,--max-degree", degree, "top degree");
    auto* coh_hh = coh->add_subcommand("hh", "Hochschild cohomology dimensions of an algebra");
    coh_hh->add_option("file", file_a)->required();
    coh_hh->add_option("-d,--max-degree", degree, "top degree");
    coh_hh->add_flag("--holm", holm, "also compare against dim A * dim H^i(A,k)");

    // verify
    auto* ver = app.add_subcommand("verify", "replay the structural identities on generated corpora");
    ver->add_option("-p", p, "prime in {2,3,5}")->required();
    ver->add_option("-n", nrank, "rank in {1,2}")->required();
    ver->add_option("-d,--max-degree", degree, "cohomology degree cap");
    ver->add_option("--seed", seed, "seed for every randomized search");
    ver->add_option("--format", format, "json | table")->check(CLI::IsMember({"json", "table"}));

    CLI11_PARSE(app, argc, argv);

    try {
        auto parse_sizes = [](const std::string& csv) {
            std::vector<std::size_t> v;
            std::string cur;
            for (char ch : csv + ",") {
                if (ch == ',') {
                    if (!cur.empty()) v.push_back(std::stoul(cur));
                    cur.clear();
                } else if (!isspace(static_cast<unsigned char>(ch))) {
                    cur += ch;
                }
            }
            return v;
        };

        if (alg_new->parsed()) {
            if (kind == "truncated") {
                auto a = truncated_polynomial_algebra(p, parse_sizes(exponents_csv));
                emit(out, algebra_to_json(*a));
            } else if (kind == "elementary-abelian") {
                HopfAlgebra h = group_algebra_abelian(p, std::vector<std::size_t>(nrank, p));
                emit(out, hopf_to_json(h));
            } else if (kind == "cyclic") {
                std::vector<std::size_t> orders = parse_sizes(orders_csv);
                if (orders.empty()) orders = {p};
                HopfAlgebra h = group_algebra_abelian(p, {orders[0]});
                emit(out, hopf_to_json(h));
            } else if (kind == "group") {
                HopfAlgebra h = group_algebra_abelian(p, parse_sizes(orders_csv));
                emit(out, hopf_to_json(h));
            } else {
                throw std::invalid_argument("unknown algebra kind '" + kind + "'");
            }
        } else if (alg_check->parsed()) {
            AlgebraPtr a = algebra_from_json(read_file(file_a));
            std::cout << "dim " << a->dim() << ", " << a->generators().size() << " generators, unipotent: "
                      << (a->is_unipotent() ? "yes" : "no") << "\n";
        } else if (alg_env->parsed()) {
            AlgebraPtr a = algebra_from_json(read_file(file_a));
            emit(out, algebra_to_json(*enveloping(a)));
        } else if (mod_check->parsed()) {
            Module m = load_module(file_a);
            std::cout << "ok: dim " << m.dim() << " over a dim-" << m.algebra()->dim() << " algebra\n";
        } else if (mod_syz->parsed()) {
            emit(out, module_to_json(syzygy(load_module(file_a))));
        } else if (mod_cosyz->parsed()) {
            emit(out, module_to_json(cosyzygy(load_module(file_a))));
        } else if (bim_lrp->parsed()) {
            bool r = is_lrp(load_bimodule(file_a));
            emit("", bool_json(r));
            return r ? 0 : 1;
        } else if (bim_tensor->parsed()) {
            TensorProduct t = tensor_over_algebra_full(load_bimodule(file_a), load_bimodule(file_b));
            if (t.balanced_warning)
                std::cerr << "note: neither factor is one-sided projective; "
                             "the result is the plain coequalizer\n";
            emit(out, bimodule_to_json(t.prod));
        } else if (bim_dual->parsed()) {
            Bimodule b = load_bimodule(file_a);
            emit(out, bimodule_to_json(side == "left" ? left_dual(b) : right_dual(b)));
        } else if (bim_twist->parsed()) {
            AlgebraPtr a = algebra_from_json(read_file(file_a));
            std::size_t n = a->generators().size();
            Automorphism alpha = alpha_csv.empty()
                                     ? identity_automorphism(a)
                                     : automorphism_from_linear(a, parse_square_matrix(a->p(), n, alpha_csv));
            Automorphism beta = beta_csv.empty()
                                    ? identity_automorphism(a)
                                    : automorphism_from_linear(a, parse_square_matrix(a->p(), n, beta_csv));
            emit(out, bimodule_to_json(twisted_bimodule(alpha, beta)));
        } else if (bim_zigzag->parsed()) {
            bool r = verify_zigzag(load_bimodule(file_a));
            emit("", bool_json(r));
            return r ? 0 : 1;
        } else if (hop_f->parsed()) {
            Module m = load_module(file_a);
            emit(out, bimodule_to_json(functor_F(hopf_for(m.algebra()), m)));
        } else if (hop_g->parsed()) {
            emit(out, module_to_json(functor_G(load_bimodule(file_a))));
        } else if (hop_gf->parsed()) {
            Module m = load_module(file_a);
            bool r = check_GF_identity(hopf_for(m.algebra()), m);
            emit("", bool_json(r));
            return r ? 0 : 1;
        } else if (var_compute->parsed()) {
            emit(out, variety_to_json(rank_variety(load_module(file_a))));
        } else if (var_tpp->parsed()) {
            Module m = load_module(file_a), n2 = load_module(file_b);
            bool r = tensor_product_property_check(hopf_for(m.algebra()), m, n2);
            emit("", bool_json(r));
            return r ? 0 : 1;
        } else if (coh_ext->parsed()) {
            emit(out, dims_to_json(ext_dims(load_module(file_a), load_module(file_b), degree)));
        } else if (coh_hh->parsed()) {
            AlgebraPtr a = algebra_from_json(read_file(file_a));
            GradedDims d = hochschild_dims(a, degree);
            std::string text = dims_to_json(d);
            if (holm) {
                bool ok = holm_check(a, degree);
                text.insert(text.size() - 2, ",\n  \"holm\": " + std::string(ok ? "true" : "false"));
            }
            emit(out, text);
        } else if (ver->parsed()) {
            VerifyReport r = run_verify_suite(p, nrank, degree, seed);
            std::cout << (format == "table" ? report_to_table(r) : report_to_json(r)) << "\n";
            return r.all_pass() ? 0 : 2;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
