#include "sho/serialization.hpp"

#include <random>

#include "sho/gf.hpp"

namespace sho {

using nlohmann::json;

json params_to_json(const Parameters& par) {
    return json{{"p", par.p()}, {"m", par.m()}, {"t", par.t()}};
}

ParamsPtr params_from_json(const json& j) {
    return make_parameters(j.at("p").get<int>(), j.at("m").get<int>(),
                           j.at("t").get<std::vector<int>>());
}

json element_to_json(const SuperElement& f) {
    const int m = f.params()->m();
    json terms = json::array();
    for (const auto& [mn, c] : f.terms()) {
        json u = json::array();
        for (int k = 0; k < m; ++k)
            if (mn.u >> k & 1) u.push_back(m + k + 1);
        terms.push_back(json{{"alpha", mn.alpha}, {"u", u}, {"c", c}});
    }
    return terms;
}

SuperElement element_from_json(const ParamsPtr& par, const json& j) {
    SuperElement f(par);
    const int m = par->m();
    for (const auto& term : j) {
        Mono mn;
        mn.alpha = term.at("alpha").get<std::vector<int>>();
        if (static_cast<int>(mn.alpha.size()) != m)
            throw config_error("element term: alpha must have m entries");
        for (int i = 0; i < m; ++i)
            if (mn.alpha[i] < 0 || mn.alpha[i] > par->pi(i))
                throw config_error("element term: alpha out of range");
        for (int v : term.at("u").get<std::vector<int>>()) {
            if (v < m + 1 || v > 2 * m) throw config_error("element term: odd index out of range");
            if (mn.u >> (v - m - 1) & 1) throw config_error("element term: repeated odd index");
            mn.u |= 1u << (v - m - 1);
        }
        int c = term.at("c").get<int>();
        f.add_term(mn, c);
    }
    return f;
}

json derivation_to_json(const Derivation& d) {
    json coeffs = json::array();
    for (int r = 0; r < d.params()->nvars(); ++r) coeffs.push_back(element_to_json(d.coeff(r)));
    return coeffs;
}

Derivation derivation_from_json(const ParamsPtr& par, const json& j) {
    if (static_cast<int>(j.size()) != par->nvars())
        throw config_error("derivation must have 2m coefficient entries");
    Derivation d(par);
    for (int r = 0; r < par->nvars(); ++r) d.coeff(r) = element_from_json(par, j[r]);
    return d;
}

namespace {

std::vector<std::string> basis_labels(const GradedSubspace& s) {
    std::vector<std::string> labels;
    for (const auto& [deg, count] : s.dims())
        for (int k = 0; k < count; ++k)
            labels.push_back("d" + std::to_string(deg) + "_" + std::to_string(k));
    return labels;
}

}  // namespace

json automorphism_to_json(const OAutomorphism& sigma) {
    json images = json::array();
    for (const SuperElement& y : sigma.images()) images.push_back(element_to_json(y));
    return json{{"params", params_to_json(*sigma.params())}, {"images", images}};
}

OAutomorphism automorphism_from_json(const json& j) {
    auto par = params_from_json(j.at("params"));
    const json& jimages = j.at("images");
    if (static_cast<int>(jimages.size()) != par->nvars())
        throw config_error("automorphism must list 2m generator images");
    std::vector<SuperElement> images;
    for (const auto& y : jimages) images.push_back(element_from_json(par, y));
    return OAutomorphism::make(par, std::move(images));
}

json gautomorphism_to_json(const GAutomorphism& phi_map, const std::string& name) {
    const GradedSubspace& g = phi_map.algebra();
    json header = params_to_json(*g.params());
    header["algebra"] = name;
    const Mat& matrix = phi_map.matrix();
    json rows = json::array();
    for (int i = 0; i < matrix.rows; ++i) {
        json row = json::array();
        for (int k = 0; k < matrix.cols; ++k) row.push_back(matrix.at(i, k));
        rows.push_back(row);
    }
    return json{{"header", header}, {"basis", basis_labels(g)}, {"matrix", rows}};
}

GAutomorphism gautomorphism_from_json(const GradedSubspace& g, const json& j) {
    auto par = params_from_json(j.at("header"));
    ensure_same(par, g.params());
    auto labels = basis_labels(g);
    if (j.at("basis").get<std::vector<std::string>>() != labels)
        throw config_error("automorphism basis labels do not match the algebra");
    const int n = static_cast<int>(labels.size());
    const json& rows = j.at("matrix");
    if (static_cast<int>(rows.size()) != n)
        throw config_error("automorphism matrix has the wrong number of rows");
    Mat matrix(n, n);
    for (int i = 0; i < n; ++i) {
        if (static_cast<int>(rows[i].size()) != n)
            throw config_error("automorphism matrix has the wrong number of columns");
        for (int k = 0; k < n; ++k) {
            int v = rows[i][k].get<int>();
            if (v < 0 || v >= par->p()) throw config_error("matrix entry out of range");
            matrix.at(i, k) = static_cast<std::uint8_t>(v);
        }
    }
    return GAutomorphism::make(g, std::move(matrix));
}

json export_structure_constants(const GradedSubspace& s, const std::string& name) {
    if (!s.frozen()) throw config_error("export requires a frozen subspace");
    const auto& par = s.params();
    const auto& basis = s.flat_basis();
    const int n = static_cast<int>(basis.size());

    json header = params_to_json(*par);
    header["algebra"] = name;

    json jbasis = json::array();
    std::vector<std::string> labels;
    for (const auto& [deg, count] : s.dims()) {
        for (int k = 0; k < count; ++k) {
            std::string label = "d" + std::to_string(deg) + "_" + std::to_string(k);
            labels.push_back(label);
            const Derivation& b = basis[s.flat_offset(deg) + k];
            jbasis.push_back(json{{"label", label},
                                  {"degree", deg},
                                  {"parity", b.parity()},
                                  {"vector", derivation_to_json(b)}});
        }
    }

    json constants = json::array();
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) {
            auto coords = s.coords(bracket(basis[i], basis[j]));
            if (!coords) throw config_error("subspace is not closed under the bracket");
            json result = json::array();
            for (int k = 0; k < n; ++k)
                if ((*coords)[k]) result.push_back(json::array({labels[k], (*coords)[k]}));
            if (!result.empty())
                constants.push_back(json{{"i", labels[i]}, {"j", labels[j]}, {"result", result}});
        }
    return json{{"header", header}, {"basis", jbasis}, {"constants", constants}};
}

std::vector<int> StructureConstantAlgebra::bracket_basis(int i, int j) const {
    std::vector<int> out(dim, 0);
    if (i <= j) {
        for (const auto& [k, c] : table[i][j - i]) out[k] = c;
    } else {
        // [e_i, e_j] = -(-1)^{p_i p_j} [e_j, e_i]
        int sign = (parities[i] & parities[j]) ? 1 : -1;
        for (const auto& [k, c] : table[j][i - j]) out[k] = gf::norm(sign * c, p);
    }
    return out;
}

bool StructureConstantAlgebra::check_consistency(int samples, unsigned long long seed) const {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> pick(0, dim - 1);
    auto add_into = [&](std::vector<int>& acc, const std::vector<int>& v, int scale) {
        for (int k = 0; k < dim; ++k) acc[k] = gf::norm(acc[k] + static_cast<long long>(scale) * v[k], p);
    };
    // skew: [e_i,e_j] + (-1)^{p_i p_j} [e_j,e_i] = 0 (exhaustive; it is cheap)
    for (int i = 0; i < dim; ++i)
        for (int j = i; j < dim; ++j) {
            auto ij = bracket_basis(i, j);
            auto ji = bracket_basis(j, i);
            int sign = (parities[i] & parities[j]) ? -1 : 1;
            std::vector<int> acc(dim, 0);
            add_into(acc, ij, 1);
            add_into(acc, ji, sign);
            for (int v : acc)
                if (v) return false;
        }
    // super Jacobi: exhaustive at desk scale, sampled beyond it
    auto jacobi = [&](int a, int b, int c) {
        std::vector<int> acc(dim, 0);
        auto term = [&](int x, int y, int z) {
            // (-1)^{p_x p_z} [x, [y, z]]
            auto inner = bracket_basis(y, z);
            std::vector<int> outer(dim, 0);
            for (int k = 0; k < dim; ++k)
                if (inner[k]) add_into(outer, bracket_basis(x, k), inner[k]);
            add_into(acc, outer, (parities[x] & parities[z]) ? -1 : 1);
        };
        term(a, b, c);
        term(b, c, a);
        term(c, a, b);
        for (int v : acc)
            if (v) return false;
        return true;
    };
    if (static_cast<long long>(dim) * dim * dim <= 200000) {
        for (int a = 0; a < dim; ++a)
            for (int b = a; b < dim; ++b)
                for (int c = b; c < dim; ++c)
                    if (!jacobi(a, b, c)) return false;
    } else {
        for (int s = 0; s < samples; ++s)
            if (!jacobi(pick(rng), pick(rng), pick(rng))) return false;
    }
    return true;
}

StructureConstantAlgebra import_structure_constants(const json& j) {
    StructureConstantAlgebra alg;
    const json& header = j.at("header");
    auto par = params_from_json(header);
    alg.p = par->p();
    std::map<std::string, int> label_index;
    for (const auto& b : j.at("basis")) {
        std::string label = b.at("label").get<std::string>();
        if (label_index.count(label)) throw config_error("duplicate basis label: " + label);
        label_index[label] = alg.dim++;
        alg.labels.push_back(label);
        alg.degrees.push_back(b.at("degree").get<int>());
        alg.parities.push_back(b.at("parity").get<int>());
    }
    alg.table.assign(alg.dim, {});
    for (int i = 0; i < alg.dim; ++i) alg.table[i].assign(alg.dim - i, {});
    for (const auto& entry : j.at("constants")) {
        auto it_i = label_index.find(entry.at("i").get<std::string>());
        auto it_j = label_index.find(entry.at("j").get<std::string>());
        if (it_i == label_index.end() || it_j == label_index.end())
            throw config_error("structure constants reference an unknown label");
        int i = it_i->second, jj = it_j->second;
        if (i > jj) throw config_error("structure constants must be listed with i <= j");
        auto& cell = alg.table[i][jj - i];
        for (const auto& kv : entry.at("result")) {
            auto it_k = label_index.find(kv.at(0).get<std::string>());
            if (it_k == label_index.end())
                throw config_error("structure constants reference an unknown label");
            int c = kv.at(1).get<int>();
            if (c <= 0 || c >= alg.p) throw config_error("structure constant out of range");
            cell.emplace_back(it_k->second, c);
        }
    }
    if (!alg.check_consistency(500, 0x53484f1ull))
        throw config_error("imported structure constants violate skew-symmetry or Jacobi");

    // when basis vectors are stored, re-derive the table from actual brackets
    std::vector<Derivation> vectors;
    bool have_vectors = true;
    for (const auto& b : j.at("basis")) {
        if (!b.contains("vector")) {
            have_vectors = false;
            break;
        }
        vectors.push_back(derivation_from_json(par, b.at("vector")));
    }
    if (have_vectors && alg.dim > 0) {
        std::mt19937_64 rng(0x53484f2ull);
        std::uniform_int_distribution<int> pick(0, alg.dim - 1);
        const bool exhaustive = alg.dim <= 150;
        int pairs = exhaustive ? alg.dim * (alg.dim + 1) / 2 : 1000;
        int a = 0, b = 0;
        for (int s = 0; s < pairs; ++s) {
            int i, jj;
            if (exhaustive) {
                i = a;
                jj = b;
                if (++b == alg.dim) b = ++a;
            } else {
                i = pick(rng);
                jj = pick(rng);
            }
            Derivation expect(par);
            std::vector<int> row = alg.bracket_basis(i, jj);
            for (int k = 0; k < alg.dim; ++k)
                if (row[k]) expect += vectors[k].scaled(row[k]);
            if (!(bracket(vectors[i], vectors[jj]) == expect))
                throw config_error("structure constants disagree with the stored basis vectors at (" +
                                   alg.labels[i] + ", " + alg.labels[jj] + ")");
        }
    }
    return alg;
}

}  // namespace sho
