#include "maymust/io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <unordered_map>

#include <json.hpp>

#include "maymust/error.hpp"

namespace maymust {

namespace {

std::vector<std::string_view> tokenize(std::string_view line) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
        const std::size_t start = i;
        while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
        if (i > start) out.push_back(line.substr(start, i - start));
    }
    return out;
}

std::uint32_t parse_natural(std::string_view tok, std::size_t line) {
    std::uint32_t v = 0;
    const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc{} || ptr != tok.data() + tok.size())
        throw SyntaxError(line, "expected a natural number, got '" + std::string(tok) + "'");
    return v;
}

Rational parse_fraction(std::string_view tok, std::size_t line) {
    Rational r;
    try {
        r = Rational::parse_decimal(tok);
    } catch (const Error&) {
        throw SyntaxError(line, "expected a decimal fraction, got '" + std::string(tok) + "'");
    }
    if (Rational{1, 1} < r) throw SyntaxError(line, "fraction '" + std::string(tok) + "' exceeds 1");
    return r;
}

std::string with_line(std::size_t line, const std::string& msg) { return "line " + std::to_string(line) + ": " + msg; }

std::string escaped(const std::string& id) {
    std::string out;
    for (char c : id) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    return out;
}

std::string quoted(const std::string& id) { return "\"" + escaped(id) + "\""; }

}  // namespace

InstanceDocument parse_document(std::string_view text) {
    InstanceDocument doc;
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t end = std::min(text.find('\n', pos), text.size());
        std::string_view line = text.substr(pos, end - pos);
        pos = end + 1;
        ++line_no;
        if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
        const auto tok = tokenize(line);
        if (tok.empty()) {
            if (end == text.size()) break;
            continue;
        }
        if (tok[0] == "att") {
            if (tok.size() != 3) throw SyntaxError(line_no, "expected 'att <src> <dst>'");
            doc.attacks.push_back({std::string(tok[1]), std::string(tok[2]), line_no});
        } else if (tok[0] == "arg") {
            if (tok.size() < 3) throw SyntaxError(line_no, "expected 'arg <id> ...'");
            InstanceDocument::Argument arg{std::string(tok[1]), NuanceTuple{}, line_no};
            if (tok.size() == 3 && tok[2] == "dung") {
                arg.spec = DungDirective{};
            } else if (tok[2] == "ratio") {
                if (tok.size() != 7 && !(tok.size() == 9 && tok[7] == "floor"))
                    throw SyntaxError(line_no, "expected 'arg <id> ratio <am> <aM> <rm> <rM> [floor <k>]'");
                RatioSpec r{parse_fraction(tok[3], line_no), parse_fraction(tok[4], line_no),
                            parse_fraction(tok[5], line_no), parse_fraction(tok[6], line_no), 0};
                if (tok.size() == 9) r.rej_floor = parse_natural(tok[8], line_no);
                arg.spec = r;
            } else if (tok.size() == 6) {
                arg.spec = NuanceTuple{parse_natural(tok[2], line_no), parse_natural(tok[3], line_no),
                                       parse_natural(tok[4], line_no), parse_natural(tok[5], line_no)};
            } else {
                throw SyntaxError(line_no, "expected four naturals, 'dung' or 'ratio ...' after the argument id");
            }
            doc.arguments.push_back(std::move(arg));
        } else {
            throw SyntaxError(line_no, "unknown declaration '" + std::string(tok[0]) + "'");
        }
        if (end == text.size()) break;
    }
    return doc;
}

Framework resolve(const InstanceDocument& doc) {
    std::unordered_map<std::string, ArgIndex> index;
    std::vector<std::string> names;
    for (const auto& a : doc.arguments) {
        if (!index.emplace(a.id, names.size()).second)
            throw Error(ErrorKind::DuplicateArgument, with_line(a.line, "argument '" + a.id + "' declared twice"));
        names.push_back(a.id);
    }
    std::vector<std::pair<ArgIndex, ArgIndex>> edges;
    for (const auto& at : doc.attacks) {
        const auto s = index.find(at.source);
        const auto t = index.find(at.target);
        if (s == index.end() || t == index.end())
            throw Error(ErrorKind::UnknownArgumentInAttack,
                        with_line(at.line, "attack " + at.source + " -> " + at.target + " names an undeclared argument"));
        edges.emplace_back(s->second, t->second);
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    std::vector<std::size_t> indegree(names.size(), 0);
    for (const auto& e : edges) ++indegree[e.second];

    std::vector<NuanceTuple> tuples;
    for (std::size_t i = 0; i < doc.arguments.size(); ++i) {
        const auto& a = doc.arguments[i];
        NuanceTuple t;
        if (const auto* abs = std::get_if<NuanceTuple>(&a.spec)) {
            t = *abs;
            if (!t.valid())
                throw Error(ErrorKind::MayExceedsMust, with_line(a.line, "argument '" + a.id + "' has tuple " + to_string(t)));
        } else if (std::holds_alternative<DungDirective>(a.spec)) {
            t = dung_tuple(indegree[i]);
        } else {
            try {
                t = ratio_tuple(indegree[i], std::get<RatioSpec>(a.spec));
            } catch (const Error& e) {
                throw Error(e.kind(), with_line(a.line, "argument '" + a.id + "': " + e.what()));
            }
        }
        tuples.push_back(t);
    }
    return Framework::from_indices(std::move(names), std::move(tuples), edges);
}

Framework parse_mmaf(std::string_view text) { return resolve(parse_document(text)); }

Framework load_mmaf(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_mmaf(ss.str());
}

std::string serialize_document(const InstanceDocument& doc) {
    std::ostringstream out;
    for (const auto& a : doc.arguments) {
        out << "arg " << a.id;
        if (const auto* t = std::get_if<NuanceTuple>(&a.spec)) {
            out << ' ' << t->acc_may << ' ' << t->acc_must << ' ' << t->rej_may << ' ' << t->rej_must;
        } else if (std::holds_alternative<DungDirective>(a.spec)) {
            out << " dung";
        } else {
            const auto& r = std::get<RatioSpec>(a.spec);
            out << " ratio " << r.acc_may.to_decimal() << ' ' << r.acc_must.to_decimal() << ' '
                << r.rej_may.to_decimal() << ' ' << r.rej_must.to_decimal();
            if (r.rej_floor != 0) out << " floor " << r.rej_floor;
        }
        out << '\n';
    }
    for (const auto& at : doc.attacks) out << "att " << at.source << ' ' << at.target << '\n';
    return out.str();
}

std::string serialize_mmaf(const Framework& f) {
    InstanceDocument doc;
    for (ArgIndex a = 0; a < f.size(); ++a) doc.arguments.push_back({f.name(a), f.tuple(a), 0});
    for (const auto& [s, t] : f.attacks()) doc.attacks.push_back({f.name(s), f.name(t), 0});
    return serialize_document(doc);
}

std::string format_labelling(const Framework& f, const Labelling& l) {
    std::string out = "[";
    bool first = true;
    for (ArgIndex a = 0; a < l.universe(); ++a) {
        const auto v = l.get(a);
        if (!v) continue;
        if (!first) out += ", ";
        first = false;
        out += (a < f.size() ? f.name(a) : "#" + std::to_string(a)) + ":" + std::string(to_string(*v));
    }
    return out + "]";
}

std::string render_json(const Framework& f, const SemanticsResult& r) {
    nlohmann::ordered_json doc;
    doc["semantics"] = std::string(to_string(r.semantics));
    doc["engine"] = std::string(to_string(r.engine));
    doc["count"] = r.labellings.size();
    doc["labellings"] = nlohmann::ordered_json::array();
    for (const Labelling& l : r.labellings) {
        nlohmann::ordered_json entry = nlohmann::ordered_json::object();
        for (ArgIndex a = 0; a < f.size(); ++a)
            if (const auto v = l.get(a)) entry[f.name(a)] = std::string(to_string(*v));
        doc["labellings"].push_back(std::move(entry));
    }
    return doc.dump(2) + "\n";
}

std::string render_text(const Framework& f, const SemanticsResult& r) {
    std::ostringstream out;
    out << "semantics: " << to_string(r.semantics) << '\n'
        << "engine: " << to_string(r.engine) << '\n'
        << "count: " << r.labellings.size() << '\n';
    if (r.empty()) out << (r.semantics == Semantics::MaxiStable ? "STABLE: none" : "none") << '\n';
    for (const Labelling& l : r.labellings) out << format_labelling(f, l) << '\n';
    return out.str();
}

namespace {

void dot_graph(std::ostringstream& out, const Framework& f, const Labelling* l, const std::string& name) {
    out << "digraph " << name << " {\n";
    for (ArgIndex a = 0; a < f.size(); ++a) {
        out << "  " << quoted(f.name(a));
        const auto v = l ? l->get(a) : std::nullopt;
        if (v) {
            const char* colour = *v == Label::In ? "green" : *v == Label::Out ? "red" : "gray";
            out << " [style=filled, fillcolor=" << colour << ", label=" << "\"" << escaped(f.name(a)) << "\\n" << to_string(*v) << "\""
                << "]";
        }
        out << ";\n";
    }
    for (const auto& [s, t] : f.attacks()) out << "  " << quoted(f.name(s)) << " -> " << quoted(f.name(t)) << ";\n";
    out << "}\n";
}

}  // namespace

std::string render_dot(const Framework& f, const SemanticsResult& r, bool all) {
    std::ostringstream out;
    if (!all || r.labellings.size() <= 1) {
        dot_graph(out, f, r.empty() ? nullptr : &r.labellings.front(), "maymust");
        return out.str();
    }
    for (std::size_t i = 0; i < r.labellings.size(); ++i)
        dot_graph(out, f, &r.labellings[i], "labelling_" + std::to_string(i + 1));
    return out.str();
}

std::string render(const Framework& f, const SemanticsResult& r, OutputFormat fmt, bool all_graphs) {
    switch (fmt) {
        case OutputFormat::Json: return render_json(f, r);
        case OutputFormat::Text: return render_text(f, r);
        case OutputFormat::Dot: return render_dot(f, r, all_graphs);
    }
    return {};
}

}  // namespace maymust
