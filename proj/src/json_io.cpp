#include "nsq/json_io.hpp"

#include <stdexcept>

namespace nsq {

std::string rat_string(const Rat& q) { return q.get_str(); }

Rat rat_from_string(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("empty rational string");
    Rat q;
    if (q.set_str(s, 10) != 0 || q.get_den() == 0)
        throw std::invalid_argument("bad rational string: " + s);
    q.canonicalize();
    return q;
}

Json json_of(const Composition& a) {
    Json j = Json::array();
    for (int p : a.parts) j.push_back(p);
    return j;
}

Json json_of(const QElement& x) {
    Json terms = Json::array();
    for (const auto& [w, c] : x.terms)
        terms.push_back({{"word", json_of(w)}, {"coeff", rat_string(c)}});
    return {{"algebra", "qsymm"}, {"terms", terms}};
}

namespace {

Json json_lword(const LWord& w) {
    Json jw = Json::array();
    for (const Letter& l : w)
        jw.push_back({{"letter", std::string(1, alphabet_name(l.tag))}, {"index", l.index}});
    return jw;
}

LWord lword_from_json(const Json& jw) {
    LWord w;
    for (const Json& jl : jw) {
        std::string name = jl.at("letter").get<std::string>();
        Alphabet tag;
        if (name == "Z") tag = Alphabet::Z;
        else if (name == "X") tag = Alphabet::X;
        else if (name == "Y") tag = Alphabet::Y;
        else if (name == "U") tag = Alphabet::U;
        else throw std::invalid_argument("bad letter name: " + name);
        w.push_back({tag, jl.at("index").get<int>()});
    }
    return w;
}

} // namespace

Json json_of(const AlgebraElement& x) {
    Json terms = Json::array();
    for (const auto& [w, c] : x.terms)
        terms.push_back({{"word", json_lword(w)}, {"coeff", rat_string(c)}});
    return {{"algebra", "words"}, {"terms", terms}};
}

Json json_of(const QTensor& t) {
    Json terms = Json::array();
    for (const auto& [k, c] : t.terms)
        terms.push_back({{"left", json_of(k.first)},
                         {"right", json_of(k.second)},
                         {"coeff", rat_string(c)}});
    return {{"algebra", "qsymm_tensor"}, {"terms", terms}};
}

Json json_of(const TensorElement& t) {
    Json terms = Json::array();
    for (const auto& [k, c] : t.terms)
        terms.push_back({{"left", json_lword(k.first)},
                         {"right", json_lword(k.second)},
                         {"coeff", rat_string(c)}});
    return {{"algebra", "words_tensor"}, {"terms", terms}};
}

Json json_of(const IntMatrix& m) {
    Json rows = Json::array();
    for (const auto& row : m) {
        Json jr = Json::array();
        for (const Int& e : row) jr.push_back(e.get_str());
        rows.push_back(jr);
    }
    return rows;
}

Json json_of(const VerifyReport& r) {
    Json clauses = Json::array();
    for (const SuiteClause& c : r.clauses)
        clauses.push_back(
            {{"name", c.name}, {"pass", c.pass}, {"witness", c.witness}});
    Json j = {{"suite", r.suite}, {"maxweight", r.maxweight}};
    if (r.n != 0) j["n"] = r.n;
    j["seed"] = r.seed;
    j["clauses"] = clauses;
    j["all_pass"] = r.all_pass;
    return j;
}

Composition composition_from_json(const Json& j) {
    Composition a;
    for (const Json& p : j) a.parts.push_back(p.get<int>());
    return a;
}

QElement qelement_from_json(const Json& j) {
    if (j.at("algebra") != "qsymm")
        throw std::invalid_argument("not a qsymm element");
    QElement x;
    for (const Json& t : j.at("terms")) {
        Rat c = rat_from_string(t.at("coeff").get<std::string>());
        if (c != 0) x.terms[composition_from_json(t.at("word"))] = c;
    }
    return x;
}

AlgebraElement algebra_element_from_json(const Json& j) {
    if (j.at("algebra") != "words")
        throw std::invalid_argument("not a word-algebra element");
    AlgebraElement x;
    for (const Json& t : j.at("terms")) {
        Rat c = rat_from_string(t.at("coeff").get<std::string>());
        if (c != 0) x.terms[lword_from_json(t.at("word"))] = c;
    }
    return x;
}

IntMatrix matrix_from_json(const Json& j) {
    IntMatrix m;
    for (const Json& jr : j) {
        std::vector<Int> row;
        for (const Json& e : jr) row.emplace_back(e.get<std::string>());
        m.push_back(std::move(row));
    }
    return m;
}

} // namespace nsq
