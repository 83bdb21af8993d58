#include "ldef/cli/document.hpp"

#include "ldef/graded/filiation.hpp"

#include <openssl/evp.h>

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <set>
#include <sstream>

namespace ldef {

namespace {

constexpr size_t kMaxCatalogSize = 32;

std::string bracket_text(size_t i, size_t j, size_t k) {
    return "[e" + std::to_string(i) + ", e" + std::to_string(j) + "] -> e" + std::to_string(k);
}

Rational rational_field(const json& v, const std::string& where, std::vector<std::string>& problems) {
    try {
        if (v.is_string()) return parse_rational(v.get<std::string>());
        if (v.is_number_integer()) return Rational(v.get<long>());
    } catch (const std::exception&) {
    }
    problems.push_back(where + ": expected a rational \"p/q\" string");
    return 0;
}

std::optional<size_t> index_field(const json& obj, const char* key, const std::string& where,
                                  std::vector<std::string>& problems) {
    if (!obj.contains(key) || !obj[key].is_number_integer() || obj[key].get<long>() < 1) {
        problems.push_back(where + ": field '" + key + "' must be a positive integer");
        return std::nullopt;
    }
    return obj[key].get<size_t>();
}

json weight_json(const Weight& w) {
    json a = json::array();
    for (auto& x : w) a.push_back(to_string(x));
    return a;
}

Weight parse_weight(const json& a, size_t rank, const std::string& where, std::vector<std::string>& problems) {
    Weight w;
    if (!a.is_array()) {
        problems.push_back(where + ": expected an array of rationals");
        return w;
    }
    for (size_t c = 0; c < a.size(); ++c) w.push_back(rational_field(a[c], where + "[" + std::to_string(c) + "]", problems));
    if (rank && w.size() != rank)
        problems.push_back(where + ": expected " + std::to_string(rank) + " entries, found " + std::to_string(w.size()));
    return w;
}

std::pair<std::string, size_t> split_name(const std::string& name) {
    auto pos = name.find_last_of('_');
    if (pos == std::string::npos) return {name, 0};
    std::string tail = name.substr(pos + 1);
    if (tail.empty() || !std::all_of(tail.begin(), tail.end(), ::isdigit)) return {name, 0};
    return {name.substr(0, pos), std::stoul(tail)};
}

}  // namespace

bool AlgebraDocument::operator==(const AlgebraDocument& o) const { return to_json(*this) == to_json(o); }

json to_json(const AlgebraDocument& doc) {
    json j = json::object();
    if (!doc.name.empty()) j["name"] = doc.name;
    j["dim"] = doc.dim;
    json br = json::array();
    for (auto& b : doc.brackets) br.push_back({{"i", b.i}, {"j", b.j}, {"k", b.k}, {"coeff", to_string(b.coeff)}});
    j["brackets"] = br;
    if (doc.weights) {
        json ws = json::array();
        for (auto& w : *doc.weights) ws.push_back(weight_json(w));
        j["torus"] = {{"rank", doc.weights->empty() ? 0 : doc.weights->front().size()}, {"weights", ws}};
    }
    if (!doc.labels.empty()) j["labels"] = doc.labels;
    return j;
}

AlgebraDocument parse_document(const json& j) {
    std::vector<std::string> problems;
    if (!j.is_object()) throw DocumentError("document must be a JSON object");
    AlgebraDocument doc;
    for (auto& [key, v] : j.items())
        if (key != "name" && key != "dim" && key != "brackets" && key != "torus" && key != "labels")
            problems.push_back("unknown field '" + key + "'");
    if (j.contains("name")) {
        if (j["name"].is_string())
            doc.name = j["name"].get<std::string>();
        else
            problems.push_back("field 'name' must be a string");
    }
    if (!j.contains("dim") || !j["dim"].is_number_integer() || j["dim"].get<long>() < 1)
        throw DocumentError("field 'dim' must be a positive integer");
    doc.dim = j["dim"].get<size_t>();

    std::map<std::array<size_t, 3>, Rational> entries;
    if (j.contains("brackets")) {
        const json& br = j["brackets"];
        if (!br.is_array()) {
            problems.push_back("field 'brackets' must be an array");
        } else {
            for (size_t n = 0; n < br.size(); ++n) {
                std::string where = "bracket " + std::to_string(n + 1);
                if (!br[n].is_object()) {
                    problems.push_back(where + ": expected an object");
                    continue;
                }
                auto i = index_field(br[n], "i", where, problems);
                auto jj = index_field(br[n], "j", where, problems);
                auto k = index_field(br[n], "k", where, problems);
                if (!br[n].contains("coeff")) {
                    problems.push_back(where + ": missing 'coeff'");
                    continue;
                }
                Rational c = rational_field(br[n]["coeff"], where + " coeff", problems);
                if (!i || !jj || !k) continue;
                if (*i > doc.dim || *jj > doc.dim || *k > doc.dim) {
                    problems.push_back(where + ": index out of range 1.." + std::to_string(doc.dim));
                    continue;
                }
                if (*i >= *jj) {
                    problems.push_back(where + ": requires i < j");
                    continue;
                }
                if (!entries.emplace(std::array<size_t, 3>{*i, *jj, *k}, c).second)
                    problems.push_back(where + ": duplicate entry for " + bracket_text(*i, *jj, *k));
            }
        }
    }
    for (auto& [key, c] : entries)
        if (!is_zero(c)) doc.brackets.push_back({key[0], key[1], key[2], c});

    if (j.contains("torus")) {
        const json& t = j["torus"];
        if (!t.is_object() || !t.contains("weights") || !t["weights"].is_array()) {
            problems.push_back("field 'torus' must be an object with a 'weights' array");
        } else {
            size_t rank = 0;
            if (t.contains("rank")) {
                if (t["rank"].is_number_integer() && t["rank"].get<long>() >= 0)
                    rank = t["rank"].get<size_t>();
                else
                    problems.push_back("torus rank must be a nonnegative integer");
            }
            const json& ws = t["weights"];
            if (ws.size() != doc.dim)
                problems.push_back("torus has " + std::to_string(ws.size()) + " weights for dimension " +
                                   std::to_string(doc.dim));
            if (!rank && !ws.empty() && ws[0].is_array()) rank = ws[0].size();
            std::vector<Weight> out;
            for (size_t n = 0; n < ws.size(); ++n)
                out.push_back(parse_weight(ws[n], rank, "weight " + std::to_string(n + 1), problems));
            doc.weights = out;
        }
    }
    if (j.contains("labels")) {
        const json& l = j["labels"];
        if (!l.is_array() || l.size() != doc.dim ||
            !std::all_of(l.begin(), l.end(), [](const json& x) { return x.is_string(); }))
            problems.push_back("field 'labels' must list one string per basis vector");
        else
            doc.labels = l.get<std::vector<std::string>>();
    }
    if (!problems.empty()) throw DocumentError("malformed document", problems);
    return doc;
}

AlgebraDocument read_document(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw DocumentError("cannot read " + path);
    json j = json::parse(in, nullptr, false);
    if (j.is_discarded()) throw DocumentError(path + " is not valid JSON");
    return parse_document(j);
}

AlgebraDocument document_of(const GradedAlgebra& g, std::string name) {
    AlgebraDocument doc;
    doc.name = std::move(name);
    doc.dim = g.algebra.dim();
    for (auto& [key, c] : g.algebra.constants()) doc.brackets.push_back({key[0] + 1, key[1] + 1, key[2] + 1, c});
    if (!g.weights.empty()) doc.weights = g.weights;
    if (std::any_of(g.algebra.labels().begin(), g.algebra.labels().end(), [](auto& s) { return !s.empty(); }))
        doc.labels = g.algebra.labels();
    return doc;
}

std::string describe(const JacobiViolation& v) {
    return "J(" + std::to_string(v.i + 1) + "," + std::to_string(v.j + 1) + "," + std::to_string(v.k + 1) + ") on e" +
           std::to_string(v.l + 1) + " = " + to_string(v.value);
}

GradedAlgebra load_algebra(const AlgebraDocument& doc, bool require_jacobi) {
    GradedAlgebra g;
    g.algebra = LieAlgebra(doc.dim, doc.labels);
    for (auto& b : doc.brackets) g.algebra.set(b.i - 1, b.j - 1, b.k - 1, b.coeff);
    std::vector<std::string> problems;
    if (require_jacobi)
        for (auto& v : check_jacobi(g.algebra)) problems.push_back(describe(v));
    if (doc.weights) {
        g.weights = *doc.weights;
        for (auto& b : doc.brackets) {
            const Weight &a = g.weights[b.i - 1], &c = g.weights[b.j - 1], &e = g.weights[b.k - 1];
            bool graded = true;
            for (size_t r = 0; r < a.size(); ++r) graded = graded && a[r] + c[r] == e[r];
            if (!graded) problems.push_back("torus weights do not grade " + bracket_text(b.i, b.j, b.k));
        }
    }
    if (!problems.empty()) throw DocumentError("invalid Lie algebra", problems);
    return g;
}

std::vector<std::string> catalog_names() { return {"abelian", "example52", "f", "heisenberg", "sl2", "witt"}; }

AlgebraDocument catalog_generate(const std::string& name, std::optional<size_t> size) {
    auto [base, suffix] = split_name(name);
    if (suffix) {
        if (size && *size != suffix) throw std::invalid_argument("conflicting sizes for " + name);
        size = suffix;
    }
    auto need = [&](size_t lo, size_t hi) {
        if (!size) throw std::invalid_argument(base + " requires a size");
        if (*size < lo || *size > hi)
            throw std::invalid_argument(base + " size must lie in " + std::to_string(lo) + ".." + std::to_string(hi));
        return *size;
    };
    auto label = [&](size_t n) { return base + "_" + std::to_string(n); };
    if (base == "f") {
        size_t n = need(5, kMaxCatalogSize);
        return document_of(f_family(n), label(n));
    }
    if (base == "witt") {
        size_t n = need(2, kMaxCatalogSize);
        return document_of(witt(n), label(n));
    }
    if (base == "abelian") {
        size_t n = need(1, kMaxCatalogSize);
        return document_of(abelian(n), label(n));
    }
    if (base == "example52") {
        size_t n = size ? need(4, 13) : 13;
        FiliationRun run = example52_run(n);
        if (run.families.empty() || run.families.back().dim() != n)
            throw std::runtime_error("filiation halted: " + run.message);
        const GradedFamily& F = run.families.back();
        return document_of(GradedAlgebra{F.base(), F.weights}, label(n));
    }
    if (size) throw std::invalid_argument(base + " takes no size");
    if (base == "heisenberg") return document_of(heisenberg(), "heisenberg");
    if (base == "sl2") return document_of(sl2(), "sl2");
    throw std::invalid_argument("unknown catalog entry '" + name + "'");
}

WeightPath parse_weight_path(const json& j) {
    std::vector<std::string> problems;
    if (!j.is_object() || !j.contains("weights") || !j["weights"].is_array())
        throw DocumentError("weight path must be an object with a 'weights' array");
    WeightPath p;
    p.rank = j.value("rank", 0);
    p.n0 = j.value("n0", 0);
    if (!p.n0) problems.push_back("weight path requires a positive 'n0'");
    for (size_t n = 0; n < j["weights"].size(); ++n)
        p.weights.push_back(parse_weight(j["weights"][n], p.rank, "weight " + std::to_string(n + 1), problems));
    if (!p.rank && !p.weights.empty()) p.rank = p.weights[0].size();
    if (p.n0 > p.weights.size()) problems.push_back("n0 exceeds the number of weights");
    std::set<Weight> seen(p.weights.begin(), p.weights.end());
    p.simple = seen.size() == p.weights.size();
    if (!problems.empty()) throw DocumentError("malformed weight path", problems);
    return p;
}

json to_json(const WeightPath& path) {
    json ws = json::array();
    for (auto& w : path.weights) ws.push_back(weight_json(w));
    return {{"rank", path.rank}, {"n0", path.n0}, {"weights", ws}};
}

DeformationSeries parse_deformation(const json& j, const LieAlgebra& base) {
    std::vector<std::string> problems;
    if (!j.is_object() || !j.contains("params") || !j["params"].is_array() || !j.contains("order") ||
        !j["order"].is_number_integer() || j["order"].get<long>() < 1)
        throw DocumentError("deformation must list 'params' and a positive 'order'");
    std::vector<std::string> params;
    for (auto& p : j["params"]) {
        if (!p.is_string()) throw DocumentError("parameter names must be strings");
        params.push_back(p.get<std::string>());
    }
    unsigned order = j["order"].get<unsigned>();
    DeformationSeries phi = trivial_deformation(base, params, order);
    RingPtr ring = make_ring(params);
    const size_t m = base.dim();
    CochainSpace s2(m, 2, m);
    for (size_t n = 0; n < j.value("perturbation", json::array()).size(); ++n) {
        const json& e = j["perturbation"][n];
        std::string where = "perturbation " + std::to_string(n + 1);
        auto i = index_field(e, "i", where, problems);
        auto jj = index_field(e, "j", where, problems);
        auto k = index_field(e, "k", where, problems);
        if (!i || !jj || !k) continue;
        if (*i >= *jj || *jj > m || *k > m) {
            problems.push_back(where + ": indices must satisfy i < j <= " + std::to_string(m) + ", k <= " +
                               std::to_string(m));
            continue;
        }
        if (!e.contains("series") || !e["series"].is_string()) {
            problems.push_back(where + ": missing 'series'");
            continue;
        }
        try {
            TruncatedSeries s = TruncatedSeries::from_poly(Poly::parse(ring, e["series"].get<std::string>()), order);
            if (!is_zero(s.constant_term())) {
                problems.push_back(where + ": series must have no constant term");
                continue;
            }
            phi.set_perturbation(s2.index({*i - 1, *jj - 1}, *k - 1), s);
        } catch (const std::exception& ex) {
            problems.push_back(where + ": " + ex.what());
        }
    }
    if (!problems.empty()) throw DocumentError("malformed deformation", problems);
    return phi;
}

json to_json(const DeformationSeries& phi) {
    const size_t m = phi.base.dim();
    CochainSpace s2(m, 2, m);
    RingPtr ring = make_ring(phi.params);
    json entries = json::array();
    for (auto& [idx, s] : phi.xi) {
        if (s.is_zero()) continue;
        auto [t, k] = s2.at(idx);
        entries.push_back({{"i", t[0] + 1}, {"j", t[1] + 1}, {"k", k + 1}, {"series", s.to_poly(ring).to_string()}});
    }
    return {{"params", phi.params}, {"order", phi.order}, {"perturbation", entries}};
}

std::string digest(const json& j) {
    std::string text = j.dump();
    unsigned char md[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    EVP_Digest(text.data(), text.size(), md, &len, EVP_sha256(), nullptr);
    std::ostringstream os;
    for (unsigned int i = 0; i < len; ++i) os << std::hex << std::setw(2) << std::setfill('0') << int(md[i]);
    return os.str();
}

}  // namespace ldef
