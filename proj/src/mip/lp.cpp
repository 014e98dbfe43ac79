#include "mecs/mip/lp.hpp"

#include <algorithm>
#include <cctype>
#include <istream>
#include <ostream>
#include <sstream>
#include <vector>

#include "mecs/errors.hpp"

namespace mecs::mip {

namespace {

constexpr std::size_t kWrapColumn = 200;

// Exact decimal form; only denominators of shape 2^a * 5^b terminate.
std::string number_text(const Rational& r) {
    if (r.den() == 1) return std::to_string(r.num());
    std::int64_t den = r.den();
    int twos = 0, fives = 0;
    while (den % 2 == 0) { den /= 2; ++twos; }
    while (den % 5 == 0) { den /= 5; ++fives; }
    if (den != 1) {
        throw std::invalid_argument("coefficient " + r.str() + " has no exact decimal form");
    }
    const int digits = std::max(twos, fives);
    __int128 scaled = r.num();
    for (int i = 0; i < digits; ++i) scaled *= 10;
    scaled /= r.den();
    const bool negative = scaled < 0;
    if (negative) scaled = -scaled;
    std::string body;
    for (int i = 0; i < digits; ++i) {
        body.push_back(static_cast<char>('0' + static_cast<int>(scaled % 10)));
        scaled /= 10;
    }
    std::string head = scaled == 0 ? "0" : "";
    while (scaled > 0) {
        head.push_back(static_cast<char>('0' + static_cast<int>(scaled % 10)));
        scaled /= 10;
    }
    std::reverse(head.begin(), head.end());
    std::reverse(body.begin(), body.end());
    while (body.size() > 1 && body.back() == '0') body.pop_back();
    return (negative ? "-" : "") + head + "." + body;
}

struct LineWriter {
    std::ostream& out;
    std::string line{};

    void push(const std::string& chunk) {
        if (line.empty()) {
            line = " " + chunk;
            return;
        }
        if (line.size() + chunk.size() + 1 > kWrapColumn) {
            out << line << "\n";
            line = " " + chunk;
            return;
        }
        line += " " + chunk;
    }

    void flush() {
        if (!line.empty()) out << line << "\n";
        line.clear();
    }
};

void write_expression(LineWriter& w, const MipModel& model, const std::vector<Term>& terms,
                      const Rational& constant, bool force_constant) {
    bool first = true;
    for (const Term& t : terms) {
        if (t.coeff == Rational(0)) continue;
        const bool negative = t.coeff < Rational(0);
        const Rational mag = negative ? -t.coeff : t.coeff;
        std::string chunk;
        if (first) {
            if (negative) chunk = "- ";
        } else {
            chunk = negative ? "- " : "+ ";
        }
        if (mag != Rational(1)) chunk += number_text(mag) + " ";
        chunk += model.variable(t.var).name;
        w.push(chunk);
        first = false;
    }
    if (constant != Rational(0) || (first && force_constant)) {
        const bool negative = constant < Rational(0);
        const Rational mag = negative ? -constant : constant;
        std::string chunk;
        if (first) {
            if (negative) chunk = "- ";
        } else {
            chunk = negative ? "- " : "+ ";
        }
        chunk += number_text(mag);
        w.push(chunk);
        first = false;
    }
    if (first) throw std::invalid_argument("empty expression in LP output");
}

const char* sense_text(Sense s) {
    switch (s) {
        case Sense::LessEq: return "<=";
        case Sense::GreaterEq: return ">=";
        case Sense::Equal: return "=";
    }
    return "?";
}

}  // namespace

void write_lp(const MipModel& model, std::ostream& out) {
    const ModelInfo& info = model.info;
    out << "\\ formulation=" << (info.formulation.empty() ? "custom" : info.formulation)
        << " nodes=" << info.nodes << " edges=" << info.edges << " L=" << info.L
        << " bound=" << info.bound.str() << " fingerprint=" << info.graph_fingerprint << "\n";

    out << "Minimize\n";
    {
        LineWriter w{out};
        w.push("obj:");
        write_expression(w, model, model.objective_terms(), model.objective_constant(), true);
        w.flush();
    }

    out << "Subject To\n";
    for (const Constraint& c : model.constraints()) {
        LineWriter w{out};
        w.push(c.name + ":");
        write_expression(w, model, c.terms, Rational(0), false);
        w.push(std::string(sense_text(c.sense)) + " " + number_text(c.rhs));
        w.flush();
    }

    std::vector<const Variable*> continuous, binaries;
    for (const Variable& v : model.variables()) {
        (v.kind == VarKind::Binary ? binaries : continuous).push_back(&v);
    }
    const auto by_name = [](const Variable* a, const Variable* b) { return a->name < b->name; };
    std::sort(continuous.begin(), continuous.end(), by_name);
    std::sort(binaries.begin(), binaries.end(), by_name);

    if (!continuous.empty()) {
        out << "Bounds\n";
        for (const Variable* v : continuous) {
            out << " " << number_text(v->lower) << " <= " << v->name
                << " <= " << number_text(v->upper) << "\n";
        }
    }
    if (!binaries.empty()) {
        out << "Binaries\n";
        LineWriter w{out};
        for (const Variable* v : binaries) w.push(v->name);
        w.flush();
    }
    out << "End\n";
}

std::string write_lp_string(const MipModel& model) {
    std::ostringstream out;
    write_lp(model, out);
    return out.str();
}

namespace {

bool is_number_token(const std::string& t) {
    std::size_t i = 0;
    if (t[i] == '+' || t[i] == '-') ++i;
    if (i >= t.size()) return false;
    return std::isdigit(static_cast<unsigned char>(t[i])) || t[i] == '.';
}

Rational parse_number(const std::string& t) {
    try {
        return Rational::parse(t);
    } catch (const std::exception& e) {
        throw parse_error("bad number '" + t + "' in LP file: " + e.what());
    }
}

struct LpParser {
    MipModel model;
    std::unordered_map<std::string, int> bounded;  // 1 = lower, 2 = upper

    int var_of(const std::string& name) {
        const int existing = model.variable_index(name);
        if (existing >= 0) return existing;
        return model.add_variable(name, VarKind::Continuous, Rational(0), Rational(0));
    }

    // Parses "sign? coeff? name" sequences; returns the trailing constant.
    Rational parse_terms(const std::vector<std::string>& tokens, std::size_t begin,
                         std::size_t end, std::vector<Term>& out) {
        Rational constant(0);
        int sign = 1;
        bool have_coeff = false;
        Rational coeff(1);
        for (std::size_t i = begin; i < end; ++i) {
            const std::string& t = tokens[i];
            if (t == "+" || t == "-") {
                if (have_coeff) throw parse_error("dangling coefficient in LP expression");
                sign = (t == "-") ? -sign : sign;
                continue;
            }
            if (is_number_token(t)) {
                if (have_coeff) {
                    // Two numbers in a row: the first was a bare constant.
                    constant = constant + (sign < 0 ? -coeff : coeff);
                    sign = 1;
                }
                coeff = parse_number(t);
                have_coeff = true;
                continue;
            }
            Rational value = have_coeff ? coeff : Rational(1);
            if (sign < 0) value = -value;
            out.push_back({var_of(t), value});
            sign = 1;
            have_coeff = false;
        }
        if (have_coeff) constant = constant + (sign < 0 ? -coeff : coeff);
        return constant;
    }
};

std::vector<std::string> tokenize(const std::string& text) {
    std::vector<std::string> tokens;
    std::istringstream in(text);
    std::string t;
    while (in >> t) tokens.push_back(t);
    return tokens;
}

std::string lowercase(std::string s) {
    for (char& c : s) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    return s;
}

}  // namespace

MipModel read_lp(std::istream& in) {
    enum class Section { Preamble, Objective, Constraints, Bounds, Binaries, Done };
    Section section = Section::Preamble;

    LpParser parser;
    std::vector<std::string> objective_tokens;
    std::vector<std::string> constraint_tokens;
    std::vector<std::string> binary_names;
    std::vector<std::string> bounds_lines;

    std::string raw;
    bool header_seen = false;
    while (std::getline(in, raw)) {
        const auto comment = raw.find('\\');
        if (comment != std::string::npos) {
            // The writer's metadata header is restored so that a write,
            // read, rewrite cycle reproduces the file exactly.
            if (!header_seen && raw.find("formulation=", comment) != std::string::npos) {
                header_seen = true;
                std::istringstream fields(raw.substr(comment + 1));
                std::string field;
                ModelInfo& info = parser.model.info;
                while (fields >> field) {
                    const auto eq = field.find('=');
                    if (eq == std::string::npos) continue;
                    const std::string key = field.substr(0, eq);
                    const std::string value = field.substr(eq + 1);
                    try {
                        if (key == "formulation") info.formulation = value;
                        if (key == "nodes") info.nodes = std::stoi(value);
                        if (key == "edges") info.edges = std::stoi(value);
                        if (key == "L") info.L = std::stoi(value);
                        if (key == "bound") info.bound = Rational::parse(value);
                        if (key == "fingerprint") info.graph_fingerprint = std::stoull(value);
                    } catch (const std::exception&) {
                        throw parse_error("bad metadata field '" + field + "'");
                    }
                }
            }
            raw.erase(comment);
        }
        const std::string lower = lowercase(raw);
        const auto tokens = tokenize(raw);
        if (tokens.empty()) continue;

        const std::string head = lowercase(tokens[0]);
        if (head == "minimize" && tokens.size() == 1) {
            section = Section::Objective;
            continue;
        }
        if (head == "maximize") throw parse_error("only minimization models are supported");
        if (head == "subject" && tokens.size() == 2 && lowercase(tokens[1]) == "to") {
            section = Section::Constraints;
            continue;
        }
        if ((head == "bounds") && tokens.size() == 1) {
            section = Section::Bounds;
            continue;
        }
        if ((head == "binaries" || head == "binary") && tokens.size() == 1) {
            section = Section::Binaries;
            continue;
        }
        if (head == "end" && tokens.size() == 1) {
            section = Section::Done;
            continue;
        }

        switch (section) {
            case Section::Preamble:
                throw parse_error("unexpected content before Minimize: " + raw);
            case Section::Objective:
                objective_tokens.insert(objective_tokens.end(), tokens.begin(), tokens.end());
                break;
            case Section::Constraints:
                constraint_tokens.insert(constraint_tokens.end(), tokens.begin(), tokens.end());
                break;
            case Section::Bounds:
                bounds_lines.push_back(raw);
                break;
            case Section::Binaries:
                binary_names.insert(binary_names.end(), tokens.begin(), tokens.end());
                break;
            case Section::Done:
                throw parse_error("content after End: " + raw);
        }
    }

    if (objective_tokens.empty() || objective_tokens[0] != "obj:") {
        throw parse_error("objective must start with 'obj:'");
    }
    {
        std::vector<Term> terms;
        const Rational constant =
            parser.parse_terms(objective_tokens, 1, objective_tokens.size(), terms);
        parser.model.set_objective(std::move(terms), constant);
    }

    std::size_t pos = 0;
    const auto& ct = constraint_tokens;
    while (pos < ct.size()) {
        std::string name = ct[pos];
        if (name.size() < 2 || name.back() != ':') {
            throw parse_error("expected constraint name, got '" + name + "'");
        }
        name.pop_back();
        ++pos;
        std::size_t sense_pos = pos;
        while (sense_pos < ct.size() && ct[sense_pos] != "<=" && ct[sense_pos] != ">=" &&
               ct[sense_pos] != "=" && ct[sense_pos] != "<" && ct[sense_pos] != ">") {
            ++sense_pos;
        }
        if (sense_pos + 1 >= ct.size()) {
            throw parse_error("constraint " + name + " lacks a comparison or right-hand side");
        }
        Constraint c;
        c.name = name;
        const Rational constant = parser.parse_terms(ct, pos, sense_pos, c.terms);
        const std::string& s = ct[sense_pos];
        c.sense = (s == "<=" || s == "<") ? Sense::LessEq
                  : (s == ">=" || s == ">") ? Sense::GreaterEq
                                            : Sense::Equal;
        c.rhs = parse_number(ct[sense_pos + 1]) - constant;
        parser.model.add_constraint(std::move(c));
        pos = sense_pos + 2;
    }

    for (const std::string& line : bounds_lines) {
        const auto tokens = tokenize(line);
        if (tokens.size() == 5 && tokens[1] == "<=" && tokens[3] == "<=") {
            Variable& v = parser.model.mutable_variable(parser.var_of(tokens[2]));
            v.lower = parse_number(tokens[0]);
            v.upper = parse_number(tokens[4]);
            parser.bounded[tokens[2]] = 3;
        } else if (tokens.size() == 3 && (tokens[1] == "<=" || tokens[1] == ">=")) {
            Variable& v = parser.model.mutable_variable(parser.var_of(tokens[0]));
            if (tokens[1] == "<=") {
                v.upper = parse_number(tokens[2]);
                parser.bounded[tokens[0]] |= 2;
            } else {
                v.lower = parse_number(tokens[2]);
                parser.bounded[tokens[0]] |= 1;
            }
        } else {
            throw parse_error("unsupported bounds line: " + line);
        }
    }

    for (const std::string& name : binary_names) {
        Variable& v = parser.model.mutable_variable(parser.var_of(name));
        v.kind = VarKind::Binary;
        v.lower = Rational(0);
        v.upper = Rational(1);
    }

    for (const Variable& v : parser.model.variables()) {
        if (v.kind == VarKind::Continuous && parser.bounded[v.name] != 3) {
            throw parse_error("continuous variable " + v.name + " lacks explicit bounds");
        }
    }
    return parser.model;
}

bool structurally_equal(const MipModel& a, const MipModel& b) {
    if (a.variables().size() != b.variables().size()) return false;
    for (const Variable& va : a.variables()) {
        const int idx = b.variable_index(va.name);
        if (idx < 0) return false;
        const Variable& vb = b.variable(idx);
        if (va.kind != vb.kind || va.lower != vb.lower || va.upper != vb.upper) return false;
    }
    if (a.constraints().size() != b.constraints().size()) return false;
    for (std::size_t i = 0; i < a.constraints().size(); ++i) {
        const Constraint& ca = a.constraints()[i];
        const Constraint& cb = b.constraints()[i];
        if (ca.name != cb.name || ca.sense != cb.sense || ca.rhs != cb.rhs) return false;
        if (ca.terms.size() != cb.terms.size()) return false;
        for (std::size_t t = 0; t < ca.terms.size(); ++t) {
            if (a.variable(ca.terms[t].var).name != b.variable(cb.terms[t].var).name ||
                ca.terms[t].coeff != cb.terms[t].coeff) {
                return false;
            }
        }
    }
    if (a.objective_terms().size() != b.objective_terms().size()) return false;
    for (std::size_t t = 0; t < a.objective_terms().size(); ++t) {
        if (a.variable(a.objective_terms()[t].var).name !=
                b.variable(b.objective_terms()[t].var).name ||
            a.objective_terms()[t].coeff != b.objective_terms()[t].coeff) {
            return false;
        }
    }
    return a.objective_constant() == b.objective_constant();
}

std::unordered_map<std::string, double> read_solution(std::istream& in) {
    std::unordered_map<std::string, double> values;
    std::string raw;
    while (std::getline(in, raw)) {
        const auto comment = raw.find('#');
        if (comment != std::string::npos) raw.erase(comment);
        const auto tokens = tokenize(raw);
        if (tokens.empty()) continue;
        if (tokens.size() < 2) throw parse_error("bad solution line: " + raw);
        try {
            values[tokens[0]] = std::stod(tokens[1]);
        } catch (const std::exception&) {
            throw parse_error("bad solution value in line: " + raw);
        }
    }
    return values;
}

}  // namespace mecs::mip
