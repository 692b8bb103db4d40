#include "prym/io.hpp"
#include "prym/errors.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace prym {

namespace {

std::string trim(const std::string& s) {
    size_t a = 0, b = s.size();
    while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
    while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
    return s.substr(a, b - a);
}

bool significant(const std::string& line) {
    std::string t = trim(line);
    return !t.empty() && t[0] != '#';
}

std::vector<std::string> split_ws(const std::string& s) {
    std::istringstream in(s);
    std::vector<std::string> out;
    std::string tok;
    while (in >> tok) out.push_back(tok);
    return out;
}

std::vector<std::string> split_on(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char ch : s) {
        if (ch == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += ch;
        }
    }
    out.push_back(cur);
    return out;
}

long long parse_int(const std::string& tok, const std::string& what) {
    size_t used = 0;
    long long v = 0;
    try {
        v = std::stoll(tok, &used);
    } catch (const std::exception&) {
        throw invalid_input("expected an integer for " + what + ", got '" + tok + "'");
    }
    if (used != tok.size())
        throw invalid_input("expected an integer for " + what + ", got '" + tok + "'");
    return v;
}

// Cycle word -> 0-based image vector of the given degree.
std::vector<int> parse_cycles(const std::string& word, int degree) {
    std::vector<int> images(static_cast<size_t>(degree));
    for (int i = 0; i < degree; ++i) images[static_cast<size_t>(i)] = i;
    std::vector<char> used(static_cast<size_t>(degree), 0);
    size_t i = 0;
    const auto fail = [&](const std::string& why) {
        throw invalid_input("bad cycle word '" + word + "': " + why);
    };
    while (i < word.size()) {
        if (std::isspace(static_cast<unsigned char>(word[i]))) {
            ++i;
            continue;
        }
        if (word[i] != '(') fail("expected '('");
        ++i;
        std::vector<int> cycle;
        std::string num;
        auto flush = [&]() {
            if (num.empty()) return;
            long long v = parse_int(num, "a cycle entry");
            if (v < 1 || v > degree) fail("entry out of range 1.." + std::to_string(degree));
            if (used[static_cast<size_t>(v - 1)]) fail("entry repeated");
            used[static_cast<size_t>(v - 1)] = 1;
            cycle.push_back(static_cast<int>(v - 1));
            num.clear();
        };
        for (; i < word.size() && word[i] != ')'; ++i) {
            char ch = word[i];
            if (ch == ',' || std::isspace(static_cast<unsigned char>(ch))) flush();
            else num += ch;
        }
        if (i >= word.size()) fail("missing ')'");
        flush();
        ++i;  // past ')'
        for (size_t j = 0; j < cycle.size(); ++j)
            images[static_cast<size_t>(cycle[j])] = cycle[(j + 1) % cycle.size()];
    }
    return images;
}

std::vector<int> abelian_digits_to_index_checked(const FiniteGroup& G,
                                                 const std::vector<std::string>& parts) {
    const std::vector<int>& factors = G.factors();
    if (parts.size() != factors.size())
        throw invalid_input("element needs " + std::to_string(factors.size()) +
                            " comma-separated residues, got " + std::to_string(parts.size()));
    std::vector<int> residues;
    for (size_t j = 0; j < parts.size(); ++j) {
        long long v = parse_int(trim(parts[j]), "a residue");
        long long f = factors[j];
        residues.push_back(static_cast<int>(((v % f) + f) % f));
    }
    return residues;
}

} // namespace

std::string format_element(const FiniteGroup& G, int x) { return G.element_name(x); }

int parse_element(const FiniteGroup& G, const std::string& token) {
    const std::string t = trim(token);
    if (t.empty()) throw invalid_input("empty element token");
    switch (G.kind()) {
        case FiniteGroup::Kind::abelian: {
            std::vector<int> residues = abelian_digits_to_index_checked(G, split_on(t, ','));
            long long idx = 0;
            for (size_t j = 0; j < residues.size(); ++j)
                idx = idx * G.factors()[j] + residues[j];
            return static_cast<int>(idx);
        }
        case FiniteGroup::Kind::permutation: {
            std::vector<int> images = parse_cycles(t, G.degree());
            for (int i = 0; i < G.order(); ++i)
                if (G.perm(i) == images) return i;
            throw invalid_input("permutation '" + t + "' is not an element of the group");
        }
        case FiniteGroup::Kind::quotient: {
            if (t.size() < 2 || t[0] != 'q')
                throw invalid_input("quotient elements are written q<index>");
            long long v = parse_int(t.substr(1), "a coset index");
            if (v < 0 || v >= G.order()) throw invalid_input("coset index out of range");
            return static_cast<int>(v);
        }
    }
    throw internal_inconsistency("unknown group kind");
}

std::vector<std::string> split_element_tokens(const std::string& text) {
    std::vector<std::string> out;
    std::string cur;
    int depth = 0;
    for (char ch : text) {
        if (ch == '(') ++depth;
        if (ch == ')') {
            --depth;
            if (depth < 0) throw invalid_input("unbalanced ')' in element list");
        }
        if (depth == 0 && std::isspace(static_cast<unsigned char>(ch))) {
            if (!cur.empty()) {
                out.push_back(cur);
                cur.clear();
            }
        } else {
            cur += ch;
        }
    }
    if (depth != 0) throw invalid_input("unbalanced '(' in element list");
    if (!cur.empty()) out.push_back(cur);
    return out;
}

std::shared_ptr<const FiniteGroup> parse_group_lines(const std::vector<std::string>& lines,
                                                     size_t& pos) {
    auto line_err = [](size_t idx, const std::string& why) {
        return invalid_input("line " + std::to_string(idx + 1) + ": " + why);
    };
    while (pos < lines.size() && !significant(lines[pos])) ++pos;
    if (pos >= lines.size()) throw invalid_input("missing group description");
    const size_t head_idx = pos;
    std::vector<std::string> head = split_ws(trim(lines[pos]));
    ++pos;
    try {
        if (head[0] == "abelian") {
            if (head.size() < 2) throw invalid_input("abelian group needs at least one factor");
            std::vector<int> factors;
            for (size_t j = 1; j < head.size(); ++j)
                factors.push_back(static_cast<int>(parse_int(head[j], "a cyclic factor")));
            return std::make_shared<FiniteGroup>(make_abelian(factors));
        }
        if (head[0] == "perm") {
            if (head.size() != 2) throw invalid_input("expected: perm <degree>");
            int degree = static_cast<int>(parse_int(head[1], "the degree"));
            if (degree < 1) throw invalid_input("degree must be positive");
            std::vector<std::vector<int>> gens;
            while (pos < lines.size()) {
                if (!significant(lines[pos])) {
                    ++pos;
                    continue;
                }
                std::string t = trim(lines[pos]);
                if (t.rfind("K:", 0) == 0 || t.rfind("mv:", 0) == 0) break;
                try {
                    gens.push_back(parse_cycles(t, degree));
                } catch (const invalid_input& ex) {
                    throw line_err(pos, ex.what());
                }
                ++pos;
            }
            if (gens.empty()) throw invalid_input("permutation group needs at least one generator line");
            return std::make_shared<FiniteGroup>(make_permutation_group(degree, gens));
        }
        throw invalid_input("unknown group kind '" + head[0] + "' (expected abelian or perm)");
    } catch (const invalid_input& ex) {
        std::string msg = ex.what();
        if (msg.rfind("line ", 0) == 0) throw;
        throw line_err(head_idx, msg);
    }
}

std::shared_ptr<const FiniteGroup> parse_group_token(const std::string& token) {
    const std::string t = trim(token);
    if (t.size() >= 9 && t.rfind("abelian[", 0) == 0 && t.back() == ']') {
        std::vector<int> factors;
        for (const std::string& part : split_on(t.substr(8, t.size() - 9), ','))
            factors.push_back(static_cast<int>(parse_int(trim(part), "a cyclic factor")));
        return std::make_shared<FiniteGroup>(make_abelian(factors));
    }
    if (t.size() >= 6 && t.rfind("perm[", 0) == 0 && t.back() == ']') {
        std::vector<std::string> parts = split_on(t.substr(5, t.size() - 6), ';');
        if (parts.size() < 2) throw invalid_input("perm token needs a degree and generators");
        int degree = static_cast<int>(parse_int(trim(parts[0]), "the degree"));
        std::vector<std::vector<int>> gens;
        for (size_t j = 1; j < parts.size(); ++j) gens.push_back(parse_cycles(trim(parts[j]), degree));
        return std::make_shared<FiniteGroup>(make_permutation_group(degree, gens));
    }
    throw invalid_input("unrecognized group token '" + t + "'");
}

OwnedDatum parse_datum_text(const std::string& text) {
    std::vector<std::string> lines;
    {
        std::istringstream in(text);
        std::string line;
        while (std::getline(in, line)) lines.push_back(line);
    }
    size_t pos = 0;
    OwnedDatum out;
    out.group = parse_group_lines(lines, pos);
    bool have_k = false, have_mv = false;
    std::vector<int> k_gens;
    for (; pos < lines.size(); ++pos) {
        if (!significant(lines[pos])) continue;
        std::string t = trim(lines[pos]);
        auto parse_list = [&](const std::string& body) {
            std::vector<int> elems;
            for (const std::string& tok : split_element_tokens(body)) {
                try {
                    elems.push_back(parse_element(*out.group, tok));
                } catch (const invalid_input& ex) {
                    throw invalid_input("line " + std::to_string(pos + 1) + ": " + ex.what());
                }
            }
            return elems;
        };
        if (t.rfind("K:", 0) == 0) {
            if (have_k)
                throw invalid_input("line " + std::to_string(pos + 1) + ": duplicate K: line");
            k_gens = parse_list(t.substr(2));
            if (k_gens.empty())
                throw invalid_input("line " + std::to_string(pos + 1) + ": K: needs generators");
            have_k = true;
        } else if (t.rfind("mv:", 0) == 0) {
            if (have_mv)
                throw invalid_input("line " + std::to_string(pos + 1) + ": duplicate mv: line");
            out.mv = parse_list(t.substr(3));
            have_mv = true;
        } else {
            throw invalid_input("line " + std::to_string(pos + 1) +
                                ": expected a K: or mv: line, got '" + t + "'");
        }
    }
    if (!have_k) throw invalid_input("datum file has no K: line");
    if (!have_mv) throw invalid_input("datum file has no mv: line");
    out.K = subgroup_from_generators(*out.group, k_gens);
    return out;
}

std::string group_to_text(const FiniteGroup& G) {
    std::ostringstream out;
    switch (G.kind()) {
        case FiniteGroup::Kind::abelian: {
            out << "abelian";
            for (int f : G.factors()) out << ' ' << f;
            out << "\n";
            return out.str();
        }
        case FiniteGroup::Kind::permutation: {
            // The token carries the original generator words.
            const std::string& tok = G.token();
            std::vector<std::string> parts = split_on(tok.substr(5, tok.size() - 6), ';');
            out << "perm " << parts[0] << "\n";
            for (size_t j = 1; j < parts.size(); ++j) out << parts[j] << "\n";
            return out.str();
        }
        case FiniteGroup::Kind::quotient:
            throw invalid_input("quotient groups have no file form");
    }
    throw internal_inconsistency("unknown group kind");
}

std::string datum_to_text(const OwnedDatum& datum) {
    std::ostringstream out;
    out << group_to_text(*datum.group);
    out << "K:";
    for (int g : datum.K.generators) out << ' ' << format_element(*datum.group, g);
    out << "\nmv:";
    for (int x : datum.mv) out << ' ' << format_element(*datum.group, x);
    out << "\n";
    return out.str();
}

std::string flags_string(const CoverInvariants& inv) {
    std::string s;
    auto add = [&](const char* name) {
        if (!s.empty()) s += ',';
        s += name;
    };
    if (inv.constant_prym) add("constant_prym");
    if (inv.noninjective) add("noninjective");
    if (inv.xiao) add("xiao");
    return s.empty() ? "-" : s;
}

std::string format_record_prefix(const FiniteGroup& G, const std::vector<int>& mv,
                                 const std::vector<int>& k_gens) {
    std::ostringstream out;
    out << "group=" << G.token() << " s=" << mv.size() << " mv=";
    for (size_t i = 0; i < mv.size(); ++i) {
        if (i) out << ';';
        out << format_element(G, mv[i]);
    }
    out << " K=";
    for (size_t i = 0; i < k_gens.size(); ++i) {
        if (i) out << ';';
        out << format_element(G, k_gens[i]);
    }
    return out.str();
}

std::string format_record_suffix(const CoverInvariants& inv) {
    std::ostringstream out;
    out << "gt=" << inv.g_tilde << " g=" << inv.g << " r=" << inv.r << " Ntilde=" << inv.Ntilde
        << " N=" << inv.N << " qh=" << inv.q_h << " flags=" << flags_string(inv);
    return out.str();
}

std::string format_finding_record(const FiniteGroup& G, const std::vector<int>& mv,
                                  const std::vector<int>& k_gens, const CoverInvariants& inv) {
    return format_record_prefix(G, mv, k_gens) + " " + format_record_suffix(inv);
}

bool looks_like_record(const std::string& line) { return trim(line).rfind("group=", 0) == 0; }

ParsedRecord parse_finding_record(const std::string& line) {
    // Fields are space-separated key=value pairs; mv/K values never contain
    // spaces, so a plain split is enough.
    ParsedRecord out;
    std::vector<int> k_gens;
    bool have_group = false, have_mv = false, have_k = false;
    for (const std::string& tok : split_ws(trim(line))) {
        size_t eq = tok.find('=');
        if (eq == std::string::npos)
            throw invalid_input("record field '" + tok + "' is not key=value");
        const std::string key = tok.substr(0, eq);
        const std::string val = tok.substr(eq + 1);
        if (key == "group") {
            out.datum.group = parse_group_token(val);
            have_group = true;
        } else if (key == "mv" || key == "K") {
            if (!have_group) throw invalid_input("record lists " + key + "= before group=");
            std::vector<int> elems;
            for (const std::string& part : split_on(val, ';'))
                if (!part.empty()) elems.push_back(parse_element(*out.datum.group, part));
            if (key == "mv") {
                out.datum.mv = std::move(elems);
                have_mv = true;
            } else {
                k_gens = std::move(elems);
                have_k = true;
            }
        } else if (key == "s") {
            out.stored.s = parse_int(val, "s");
        } else if (key == "gt") {
            out.stored.g_tilde = parse_int(val, "gt");
        } else if (key == "g") {
            out.stored.g = parse_int(val, "g");
        } else if (key == "r") {
            out.stored.r = parse_int(val, "r");
        } else if (key == "Ntilde") {
            out.stored.Ntilde = parse_int(val, "Ntilde");
        } else if (key == "N") {
            out.stored.N = parse_int(val, "N");
        } else if (key == "qh") {
            out.stored.q_h = parse_int(val, "qh");
        } else if (key == "flags") {
            if (val != "-")
                for (const std::string& f : split_on(val, ',')) {
                    if (f == "constant_prym") out.stored.constant_prym = true;
                    else if (f == "noninjective") out.stored.noninjective = true;
                    else if (f == "xiao") out.stored.xiao = true;
                    else throw invalid_input("unknown flag '" + f + "'");
                }
        } else {
            throw invalid_input("unknown record field '" + key + "'");
        }
    }
    if (!have_group || !have_mv || !have_k)
        throw invalid_input("record is missing group=, mv= or K=");
    if (k_gens.empty()) throw invalid_input("record has an empty K=");
    out.datum.K = subgroup_from_generators(*out.datum.group, k_gens);
    out.stored.d = out.datum.K.order();
    out.stored.family_dim = out.stored.s - 3;
    return out;
}

std::string chartab_text(const CharacterTable& tab) {
    const FiniteGroup& G = *tab.group;
    const ConjugacyClasses& cc = tab.classes;
    const int e = G.exponent();
    std::ostringstream out;
    out << "group: " << G.token() << "\n";
    out << "order: " << G.order() << "\n";
    out << "exponent: " << e << "\n";
    out << "classes: " << cc.count << "\n";
    for (int c = 0; c < cc.count; ++c)
        out << "class " << c << ": rep=" << G.element_name(cc.representatives[static_cast<size_t>(c)])
            << " size=" << cc.sizes[static_cast<size_t>(c)] << " order="
            << cc.rep_order[static_cast<size_t>(c)] << "\n";
    for (int r = 0; r < tab.irrep_count; ++r) {
        out << "irrep " << r << ": degree=" << tab.degrees[static_cast<size_t>(r)] << " values=";
        for (int c = 0; c < cc.count; ++c) {
            if (c) out << ' ';
            const Cyclotomic& v = tab.values[static_cast<size_t>(r)][static_cast<size_t>(c)];
            if (v.is_rational()) {
                out << v.as_rational().str();
                continue;
            }
            const detail::RootVec& rv = tab.values_rv[static_cast<size_t>(r)][static_cast<size_t>(c)];
            bool first = true;
            for (int j = 0; j < e; ++j) {
                long long n = rv.v[static_cast<size_t>(j)];
                if (n == 0) continue;
                if (!first) out << '+';
                first = false;
                if (j == 0) out << n;
                else {
                    if (n != 1) out << n;
                    out << 'z' << e << '^' << j;
                }
            }
            if (first) out << 0;
        }
        out << "\n";
    }
    return out.str();
}

std::string family_row_text(const FamilyRow& row) {
    std::ostringstream out;
    out << "class=" << row.class_id << " N=" << row.N << " k=" << row.k << " group="
        << row.group_token << " predicted=(" << row.pred.d << ',' << row.pred.s << ','
        << row.pred.g_tilde << ',' << row.pred.g << ',' << row.pred.r << ',' << row.N << ','
        << row.N << ")" << " computed=(" << row.inv.d << ',' << row.inv.s << ',' << row.inv.g_tilde
        << ',' << row.inv.g << ',' << row.inv.r << ',' << row.inv.Ntilde << ',' << row.inv.N << ")"
        << " flags=" << flags_string(row.inv) << (row.match ? " MATCH" : " MISMATCH");
    return out.str();
}

} // namespace prym
