#include "bimodkit/json_io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace bimodkit {

using nlohmann::json;

namespace {

json matrix_to_j(const FpMatrix& m) {
    json j;
    j["p"] = m.p();
    j["rows"] = m.rows();
    j["cols"] = m.cols();
    j["entries"] = m.entries();
    return j;
}

FpMatrix matrix_from_j(const json& j) {
    FpMatrix m(j.at("p").get<u32>(), j.at("rows").get<std::size_t>(), j.at("cols").get<std::size_t>());
    std::vector<u32> entries = j.at("entries").get<std::vector<u32>>();
    if (entries.size() != m.rows() * m.cols()) throw std::invalid_argument("matrix: entries length mismatch");
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t c = 0; c < m.cols(); ++c) m.set(i, c, entries[i * m.cols() + c]);
    return m;
}

json algebra_to_j(const Algebra& a) {
    json j;
    j["p"] = a.p();
    switch (a.kind()) {
        case AlgebraKind::Truncated: {
            j["kind"] = "truncated";
            j["exponents"] = a.exponents();
            std::vector<std::string> vars;
            for (std::size_t g = 0; g < a.generators().size(); ++g) vars.push_back(a.generator_label(g));
            j["vars"] = vars;
            break;
        }
        case AlgebraKind::Group:
            throw std::invalid_argument("algebra_to_json: serialize group algebras via hopf_to_json");
        case AlgebraKind::Table: {
            j["kind"] = "table";
            j["basis_labels"] = a.basis_labels();
            std::vector<std::vector<std::vector<u32>>> table;
            for (std::size_t i = 0; i < a.dim(); ++i) {
                std::vector<std::vector<u32>> row;
                for (std::size_t c = 0; c < a.dim(); ++c) row.push_back(a.left_mult(i).column(c).entries());
                table.push_back(std::move(row));
            }
            j["mult_table"] = table;
            j["unit_index"] = a.unit_index();
            j["generators"] = a.generators();
            j["augmentation"] = a.augmentation().entries();
            json rels = json::array();
            for (const Relation& r : a.relations()) {
                json jr;
                jr["label"] = r.label;
                json terms = json::array();
                for (const auto& t : r.terms) terms.push_back({{"coeff", t.coeff}, {"word", t.word}});
                jr["terms"] = terms;
                rels.push_back(jr);
            }
            j["relations"] = rels;
            break;
        }
    }
    return j;
}

AlgebraPtr algebra_from_j(const json& j) {
    const u32 p = j.at("p").get<u32>();
    std::string kind = j.at("kind").get<std::string>();
    if (kind == "truncated") {
        std::vector<std::string> vars;
        if (j.contains("vars")) vars = j.at("vars").get<std::vector<std::string>>();
        return truncated_polynomial_algebra(p, j.at("exponents").get<std::vector<std::size_t>>(), vars);
    }
    if (kind == "group")
        return group_algebra_abelian(p, j.at("orders").get<std::vector<std::size_t>>()).poly_algebra;
    if (kind == "table") {
        std::vector<std::string> labels = j.at("basis_labels").get<std::vector<std::string>>();
        const std::size_t dim = labels.size();
        std::vector<FpMatrix> lmul(dim, FpMatrix(p, dim, dim));
        const json& table = j.at("mult_table");
        for (std::size_t i = 0; i < dim; ++i)
            for (std::size_t c = 0; c < dim; ++c) {
                std::vector<u32> coords = table.at(i).at(c).get<std::vector<u32>>();
                for (std::size_t r = 0; r < dim; ++r) lmul[i].set(r, c, coords[r]);
            }
        FpMatrix aug(p, 1, dim);
        std::vector<u32> av = j.at("augmentation").get<std::vector<u32>>();
        for (std::size_t c = 0; c < dim; ++c) aug.set(0, c, av[c]);
        std::vector<Relation> rels;
        if (j.contains("relations"))
            for (const json& jr : j.at("relations")) {
                Relation r;
                r.label = jr.value("label", "");
                for (const json& jt : jr.at("terms"))
                    r.terms.push_back(
                        {jt.at("coeff").get<u32>(), jt.at("word").get<std::vector<std::size_t>>()});
                rels.push_back(std::move(r));
            }
        return std::make_shared<Algebra>(FieldSpec(p), std::move(labels), std::move(lmul),
                                         j.at("unit_index").get<std::size_t>(),
                                         j.at("generators").get<std::vector<std::size_t>>(), std::move(aug),
                                         std::move(rels), AlgebraKind::Table);
    }
    throw std::invalid_argument("algebra: unknown kind '" + kind + "'");
}

json resolve_algebra_field(const json& field, const std::string& base_dir) {
    if (field.is_string()) {
        std::string path = field.get<std::string>();
        if (!path.empty() && path[0] != '/') path = base_dir + "/" + path;
        return json::parse(read_file(path));
    }
    return field;
}

json module_to_j(const Module& m) {
    json j;
    j["algebra"] = algebra_to_j(*m.algebra());
    j["dim"] = m.dim();
    json actions;
    for (std::size_t g = 0; g < m.actions().size(); ++g)
        actions[m.algebra()->generator_label(g)] = matrix_to_j(m.action(g));
    j["actions"] = actions;
    return j;
}

Module module_from_j(const json& j, const std::string& base_dir) {
    AlgebraPtr a = algebra_from_j(resolve_algebra_field(j.at("algebra"), base_dir));
    std::size_t dim = j.at("dim").get<std::size_t>();
    std::vector<FpMatrix> acts;
    const json& actions = j.at("actions");
    for (std::size_t g = 0; g < a->generators().size(); ++g) {
        std::string label = a->generator_label(g);
        if (!actions.contains(label))
            throw std::invalid_argument("module: missing action for generator " + label);
        acts.push_back(matrix_from_j(actions.at(label)));
    }
    return Module(std::move(a), dim, std::move(acts));
}

}  // namespace

std::string matrix_to_json(const FpMatrix& m) { return matrix_to_j(m).dump(2); }
FpMatrix matrix_from_json(const std::string& text) { return matrix_from_j(json::parse(text)); }

std::string algebra_to_json(const Algebra& a) { return algebra_to_j(a).dump(2); }
AlgebraPtr algebra_from_json(const std::string& text) { return algebra_from_j(json::parse(text)); }

std::string hopf_to_json(const HopfAlgebra& h) {
    json j;
    j["kind"] = "group";
    j["p"] = h.p();
    j["orders"] = h.orders;
    return j.dump(2);
}

HopfAlgebra hopf_from_json(const std::string& text) {
    json j = json::parse(text);
    if (j.at("kind").get<std::string>() != "group")
        throw std::invalid_argument("hopf_from_json: expected a group algebra");
    return group_algebra_abelian(j.at("p").get<u32>(), j.at("orders").get<std::vector<std::size_t>>());
}

std::string module_to_json(const Module& m) { return module_to_j(m).dump(2); }
Module module_from_json(const std::string& text, const std::string& base_dir) {
    return module_from_j(json::parse(text), base_dir);
}

std::string bimodule_to_json(const Bimodule& b) {
    json j = module_to_j(b.inner);
    j["base"] = algebra_to_j(*b.base);
    json split;
    std::vector<std::string> u, v;
    for (std::size_t i = 0; i < b.n_left(); ++i) {
        u.push_back(b.env->generator_label(i));
        v.push_back(b.env->generator_label(b.n_left() + i));
    }
    split["u"] = u;
    split["v"] = v;
    j["split"] = split;
    return j.dump(2);
}

Bimodule bimodule_from_json(const std::string& text, const std::string& base_dir) {
    json j = json::parse(text);
    Module inner = module_from_j(j, base_dir);
    AlgebraPtr base = algebra_from_j(resolve_algebra_field(j.at("base"), base_dir));
    // The split must list the env generators in the stored u-then-v order.
    if (j.contains("split")) {
        std::vector<std::string> u = j.at("split").at("u").get<std::vector<std::string>>();
        std::vector<std::string> v = j.at("split").at("v").get<std::vector<std::string>>();
        if (u.size() != base->generators().size() || v.size() != u.size())
            throw std::invalid_argument("bimodule: split sizes do not match the base generators");
        for (std::size_t i = 0; i < u.size(); ++i) {
            if (inner.algebra()->generator_label(i) != u[i] ||
                inner.algebra()->generator_label(u.size() + i) != v[i])
                throw std::invalid_argument("bimodule: split does not match the env generator order");
        }
    }
    AlgebraPtr env = inner.algebra();
    return make_bimodule(std::move(base), std::move(env), std::move(inner));
}

std::string variety_to_json(const RankVariety& v) {
    json j;
    j["p"] = v.p;
    j["ambient"] = v.ambient;
    json pts = json::array();
    for (const ProjectivePoint& pt : v.points) pts.push_back(pt.coords);
    j["points"] = pts;
    return j.dump(2);
}

RankVariety variety_from_json(const std::string& text) {
    json j = json::parse(text);
    RankVariety v;
    v.p = j.at("p").get<u32>();
    v.ambient = j.at("ambient").get<std::size_t>();
    for (const json& pt : j.at("points"))
        v.points.push_back(ProjectivePoint::normalized(v.p, pt.get<std::vector<u32>>()));
    std::sort(v.points.begin(), v.points.end());
    v.points.erase(std::unique(v.points.begin(), v.points.end()), v.points.end());
    return v;
}

std::string dims_to_json(const GradedDims& d) {
    json j;
    j["dims"] = d.dims;
    return j.dump(2);
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot read " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << content;
}

}  // namespace bimodkit
