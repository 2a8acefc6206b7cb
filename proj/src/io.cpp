#include "braidhopf/io.hpp"

#include "braidhopf/error.hpp"

#include <fstream>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <sstream>

namespace braidhopf {

namespace {

struct Line {
    std::size_t number;
    std::vector<std::string> tokens;
};

std::vector<Line> tokenize(std::string_view text) {
    std::vector<Line> out;
    std::size_t number = 0;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t end = text.find('\n', start);
        if (end == std::string_view::npos) end = text.size();
        ++number;
        std::string_view raw = text.substr(start, end - start);
        if (auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
        std::istringstream is{std::string(raw)};
        Line line{number, {}};
        for (std::string tok; is >> tok;) line.tokens.push_back(tok);
        if (!line.tokens.empty()) out.push_back(std::move(line));
        start = end + 1;
    }
    return out;
}

[[noreturn]] void fail(const std::string& source, std::size_t line, const std::string& message) {
    throw Error(ErrorKind::parse, source + ":" + std::to_string(line) + ": " + message);
}

std::string read_file(const std::filesystem::path& file) {
    std::ifstream in(file, std::ios::binary);
    if (!in) throw Error(ErrorKind::parse, file.string() + ": cannot open file");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// Parses a group block starting at lines[pos] ("group <name>") and advances pos.
FiniteGroup parse_group_block(const std::vector<Line>& lines, std::size_t& pos, const std::string& source) {
    const Line& head = lines[pos];
    if (head.tokens.size() != 2) fail(source, head.number, "expected `group <name>`");
    const std::string name = head.tokens[1];
    ++pos;
    if (pos >= lines.size() || lines[pos].tokens[0] != "elements")
        fail(source, head.number, "group " + name + " needs an `elements` line");
    std::vector<std::string> elements(lines[pos].tokens.begin() + 1, lines[pos].tokens.end());
    if (elements.empty()) fail(source, lines[pos].number, "group " + name + " has no elements");
    std::map<std::string, std::size_t> index;
    for (std::size_t k = 0; k < elements.size(); ++k)
        if (!index.emplace(elements[k], k).second)
            fail(source, lines[pos].number, "duplicate element " + elements[k]);
    ++pos;
    if (pos >= lines.size() || lines[pos].tokens.size() != 1 || lines[pos].tokens[0] != "table")
        fail(source, pos < lines.size() ? lines[pos].number : head.number, "group " + name + " needs a `table` line");
    const std::size_t table_line = lines[pos].number;
    ++pos;
    std::vector<std::vector<std::size_t>> table;
    for (std::size_t r = 0; r < elements.size(); ++r, ++pos) {
        if (pos >= lines.size()) fail(source, table_line, "table of " + name + " is missing rows");
        const Line& row = lines[pos];
        if (row.tokens.size() != elements.size())
            fail(source, row.number, "table row needs " + std::to_string(elements.size()) + " entries");
        std::vector<std::size_t> out;
        for (const auto& tok : row.tokens) {
            auto it = index.find(tok);
            if (it == index.end()) fail(source, row.number, "unknown group element " + tok);
            out.push_back(it->second);
        }
        table.push_back(std::move(out));
    }
    try {
        return FiniteGroup(name, elements, table);
    } catch (const Error& e) {
        fail(source, head.number, e.what());
    }
}

std::vector<int> parse_bichar(const std::string& tok, std::size_t n, const std::string& source, std::size_t line) {
    std::vector<int> out;
    std::stringstream ss(tok);
    for (std::string part; std::getline(ss, part, ',');) {
        if (part == "1" || part == "+1")
            out.push_back(1);
        else if (part == "-1")
            out.push_back(-1);
        else
            fail(source, line, "bicharacter values must be 1 or -1, got " + part);
    }
    if (out.size() != n * n)
        fail(source, line, "bicharacter needs " + std::to_string(n * n) + " comma separated values");
    return out;
}

class DefinitionParser {
public:
    DefinitionParser(std::string_view text, std::filesystem::path dir, std::string source)
        : lines_(tokenize(text)), dir_(std::move(dir)), source_(std::move(source)) {}

    Definition run() {
        collect_groups();
        std::size_t k = 0;
        for (; k < body_.size(); ++k) {
            const Line& l = body_[k];
            if (!header_) {
                header(l);
                continue;
            }
            statement(l);
        }
        if (!header_) fail(source_, 1, "missing header line");
        return finish();
    }

private:
    std::vector<Line> lines_;
    std::vector<Line> body_;
    std::filesystem::path dir_;
    std::string source_;
    std::map<std::string, FiniteGroup> groups_;

    std::optional<DefinitionKind> header_;
    std::size_t header_line_ = 0;
    std::string name_;
    std::optional<Backend> backend_;
    std::optional<std::size_t> dim_;
    std::vector<std::string> basis_;
    std::map<std::string, std::size_t> basis_index_;

    Matrix m_, u_, delta_, eps_, s_;
    bool has_antipode_ = false;
    std::vector<std::optional<std::size_t>> grades_;
    std::vector<Matrix> actions_;
    std::vector<std::vector<bool>> action_given_;

    void collect_groups() {
        for (std::size_t pos = 0; pos < lines_.size();) {
            if (lines_[pos].tokens[0] == "group") {
                FiniteGroup g = parse_group_block(lines_, pos, source_);
                std::string name = g.name();
                if (!groups_.emplace(name, std::move(g)).second)
                    fail(source_, lines_[pos - 1].number, "group " + name + " defined twice");
            } else {
                body_.push_back(lines_[pos++]);
            }
        }
    }

    const FiniteGroup& group(const std::string& name, std::size_t line) {
        auto it = groups_.find(name);
        if (it != groups_.end()) return it->second;
        const std::filesystem::path file = dir_ / (name + ".grp");
        if (!std::filesystem::exists(file))
            fail(source_, line, "group " + name + " is neither defined here nor found as " + file.string());
        FiniteGroup g = load_group(file);
        if (g.name() != name) fail(source_, line, file.string() + " defines group " + g.name() + ", not " + name);
        return groups_.emplace(name, std::move(g)).first->second;
    }

    void header(const Line& l) {
        static const std::map<std::string, DefinitionKind> kinds{{"hopf", DefinitionKind::hopf},
                                                                 {"bialgebra", DefinitionKind::bialgebra},
                                                                 {"coalgebra", DefinitionKind::coalgebra},
                                                                 {"object", DefinitionKind::object}};
        auto it = kinds.find(l.tokens[0]);
        if (it == kinds.end() || l.tokens.size() != 2)
            fail(source_, l.number, "expected header `hopf|bialgebra|coalgebra|object <name>`");
        header_ = it->second;
        header_line_ = l.number;
        name_ = l.tokens[1];
    }

    std::size_t basis(const std::string& tok, std::size_t line) {
        if (basis_.empty()) fail(source_, line, "`basis` must come before structure constants");
        auto it = basis_index_.find(tok);
        if (it == basis_index_.end()) fail(source_, line, "undeclared basis element " + tok);
        return it->second;
    }

    Scalar coeff(const std::string& tok, std::size_t line) {
        try {
            return parse_scalar(tok);
        } catch (const std::invalid_argument&) {
            fail(source_, line, "bad coefficient " + tok);
        }
    }

    void expect_arrow(const Line& l, std::size_t at, std::size_t size, const std::string& shape) {
        if (l.tokens.size() != size || l.tokens[at] != "->") fail(source_, l.number, "expected `" + shape + "`");
    }

    void require_algebra(const Line& l) {
        if (*header_ == DefinitionKind::coalgebra || *header_ == DefinitionKind::object)
            fail(source_, l.number, "`" + l.tokens[0] + "` is not allowed in a " + definition_kind_name(*header_) +
                                        " file");
    }

    void require_coalgebra(const Line& l) {
        if (*header_ == DefinitionKind::object)
            fail(source_, l.number, "`" + l.tokens[0] + "` is not allowed in an object file");
    }

    std::size_t group_element(const std::string& tok, std::size_t line) {
        if (!backend_ || !backend_->has_group()) fail(source_, line, "this backend has no grading group");
        const FiniteGroup& g = backend_->group();
        if (backend_->kind() == BackendKind::super) {
            if (tok == "even") return 0;
            if (tok == "odd") return 1;
        }
        auto idx = g.find(tok);
        if (!idx) fail(source_, line, "unknown group element " + tok);
        return *idx;
    }

    void allocate() {
        const std::size_t n = *dim_;
        m_ = Matrix(n, n * n);
        u_ = Matrix(n, 1);
        delta_ = Matrix(n * n, n);
        eps_ = Matrix(1, n);
        s_ = Matrix(n, n);
        grades_.assign(n, std::nullopt);
        if (backend_ && backend_->requires_action()) {
            actions_.assign(backend_->group().order(), Matrix(n, n));
            action_given_.assign(backend_->group().order(), std::vector<bool>(n, false));
        }
    }

    void statement(const Line& l) {
        const std::string& key = l.tokens[0];
        const auto& t = l.tokens;
        if (key == "backend") {
            if (backend_) fail(source_, l.number, "backend declared twice");
            if (!basis_.empty()) fail(source_, l.number, "`backend` must come before `basis`");
            if (t.size() == 2 && t[1] == "vec") {
                backend_ = Backend::vec();
            } else if (t.size() == 2 && t[1] == "super") {
                backend_ = Backend::super();
            } else if (t.size() == 4 && t[1] == "graded") {
                const FiniteGroup& g = group(t[2], l.number);
                try {
                    backend_ = Backend::sign_graded(g, parse_bichar(t[3], g.order(), source_, l.number));
                } catch (const Error& e) {
                    if (e.kind() == ErrorKind::parse) throw;
                    fail(source_, l.number, e.what());
                }
            } else if (t.size() == 3 && t[1] == "yd") {
                backend_ = Backend::yetter_drinfeld(group(t[2], l.number));
            } else {
                fail(source_, l.number, "expected `backend vec|super|graded <group> <bichar>|yd <group>`");
            }
        } else if (key == "dim") {
            if (t.size() != 2) fail(source_, l.number, "expected `dim <n>`");
            if (dim_) fail(source_, l.number, "dim declared twice");
            try {
                std::size_t used = 0;
                dim_ = std::stoul(t[1], &used);
                if (used != t[1].size()) throw std::invalid_argument("trailing");
            } catch (const std::logic_error&) {
                fail(source_, l.number, "bad dimension " + t[1]);
            }
        } else if (key == "basis") {
            if (!dim_) fail(source_, l.number, "`dim` must come before `basis`");
            if (!backend_) fail(source_, l.number, "`backend` must come before `basis`");
            if (!basis_.empty()) fail(source_, l.number, "basis declared twice");
            if (t.size() - 1 != *dim_)
                fail(source_, l.number, "basis lists " + std::to_string(t.size() - 1) + " names, dim is " +
                                            std::to_string(*dim_));
            for (std::size_t k = 1; k < t.size(); ++k) {
                if (t[k] == "->") fail(source_, l.number, "`->` is not a basis name");
                if (!basis_index_.emplace(t[k], k - 1).second)
                    fail(source_, l.number, "duplicate basis name " + t[k]);
                basis_.push_back(t[k]);
            }
            allocate();
        } else if (key == "mul") {
            require_algebra(l);
            expect_arrow(l, 3, 6, "mul <i> <j> -> <k> <coeff>");
            std::size_t i = basis(t[1], l.number), j = basis(t[2], l.number), k = basis(t[4], l.number);
            m_.add(k, i * *dim_ + j, coeff(t[5], l.number));
        } else if (key == "unit") {
            require_algebra(l);
            expect_arrow(l, 1, 4, "unit -> <i> <coeff>");
            u_.add(basis(t[2], l.number), 0, coeff(t[3], l.number));
        } else if (key == "comul") {
            require_coalgebra(l);
            expect_arrow(l, 2, 6, "comul <i> -> <j> <k> <coeff>");
            std::size_t i = basis(t[1], l.number), j = basis(t[3], l.number), k = basis(t[4], l.number);
            delta_.add(j * *dim_ + k, i, coeff(t[5], l.number));
        } else if (key == "counit") {
            require_coalgebra(l);
            expect_arrow(l, 2, 4, "counit <i> -> <coeff>");
            eps_.add(0, basis(t[1], l.number), coeff(t[3], l.number));
        } else if (key == "antipode") {
            if (*header_ != DefinitionKind::hopf)
                fail(source_, l.number, "`antipode` is only allowed in a hopf file");
            expect_arrow(l, 2, 5, "antipode <i> -> <j> <coeff>");
            s_.add(basis(t[3], l.number), basis(t[1], l.number), coeff(t[4], l.number));
            has_antipode_ = true;
        } else if (key == "grade") {
            expect_arrow(l, 2, 4, "grade <i> -> <group-element>");
            std::size_t i = basis(t[1], l.number);
            if (!backend_->requires_grading()) fail(source_, l.number, "vec objects are not graded");
            if (grades_[i]) fail(source_, l.number, "basis element " + t[1] + " graded twice");
            grades_[i] = group_element(t[3], l.number);
        } else if (key == "action") {
            expect_arrow(l, 3, 6, "action <g> <i> -> <j> <coeff>");
            if (!backend_ || !backend_->requires_action())
                fail(source_, l.number, "actions are only allowed in the yd backend");
            std::size_t g = group_element(t[1], l.number);
            std::size_t i = basis(t[2], l.number), j = basis(t[4], l.number);
            actions_[g].add(j, i, coeff(t[5], l.number));
            action_given_[g][i] = true;
        } else {
            fail(source_, l.number, "unknown statement `" + key + "`");
        }
    }

    Definition finish() {
        if (!backend_) fail(source_, header_line_, "missing `backend` line");
        if (!dim_) fail(source_, header_line_, "missing `dim` line");
        if (basis_.empty() && *dim_ > 0) fail(source_, header_line_, "missing `basis` line");
        if (basis_.empty()) allocate();

        CatObject carrier(*dim_);
        if (backend_->requires_grading()) {
            std::vector<std::size_t> grading;
            for (std::size_t k = 0; k < *dim_; ++k) {
                if (!grades_[k]) fail(source_, header_line_, "basis element " + basis_[k] + " has no grade");
                grading.push_back(*grades_[k]);
            }
            std::vector<Matrix> action;
            if (backend_->requires_action()) {
                // columns without action lines are fixed
                for (std::size_t g = 0; g < actions_.size(); ++g) {
                    for (std::size_t i = 0; i < *dim_; ++i)
                        if (!action_given_[g][i]) actions_[g].set(i, i, Scalar(1));
                    action.push_back(actions_[g]);
                }
            }
            try {
                carrier = CatObject(*dim_, std::make_shared<const FiniteGroup>(backend_->group()),
                                    std::move(grading), std::move(action));
                backend_->validate_object(carrier);
            } catch (const Error& e) {
                fail(source_, header_line_, e.what());
            }
        }

        Definition out;
        out.kind = *header_;
        BraidedBialgebra& a = out.algebra;
        switch (*header_) {
            case DefinitionKind::hopf:
            case DefinitionKind::bialgebra:
                a = make_bialgebra(name_, *backend_, carrier, basis_, m_, u_, delta_, eps_,
                                   *header_ == DefinitionKind::hopf ? std::optional<Matrix>(s_) : std::nullopt);
                if (*header_ == DefinitionKind::hopf && !has_antipode_)
                    fail(source_, header_line_, "hopf file without antipode entries");
                break;
            case DefinitionKind::coalgebra:
            case DefinitionKind::object: {
                a.name = name_;
                a.backend = *backend_;
                a.carrier = carrier;
                a.basis = basis_;
                a.kind = StructureKind::coalgebra;
                if (*header_ == DefinitionKind::coalgebra) {
                    a.delta = Morphism(carrier, a.square(), delta_);
                    a.eps = Morphism(carrier, a.unit_object(), eps_);
                }
                break;
            }
        }
        return out;
    }
};

std::string scalar_text(const Scalar& s) { return s.get_str(); }

}  // namespace

const char* definition_kind_name(DefinitionKind kind) {
    switch (kind) {
        case DefinitionKind::hopf: return "hopf";
        case DefinitionKind::bialgebra: return "bialgebra";
        case DefinitionKind::coalgebra: return "coalgebra";
        case DefinitionKind::object: return "object";
    }
    return "?";
}

Definition parse_definition(std::string_view text, const std::filesystem::path& search_dir,
                            const std::string& source) {
    return DefinitionParser(text, search_dir, source).run();
}

Definition load_definition(const std::filesystem::path& file) {
    return parse_definition(read_file(file), file.parent_path().empty() ? "." : file.parent_path(), file.string());
}

BraidedBialgebra load_algebra(const std::filesystem::path& file) {
    Definition d = load_definition(file);
    if (d.kind == DefinitionKind::object)
        throw Error(ErrorKind::parse, file.string() + ": expected an algebra or coalgebra, found an object");
    return std::move(d.algebra);
}

FiniteGroup parse_group(std::string_view text, const std::string& source) {
    std::vector<Line> lines = tokenize(text);
    if (lines.empty()) fail(source, 1, "empty group file");
    if (lines[0].tokens[0] != "group") fail(source, lines[0].number, "expected `group <name>`");
    std::size_t pos = 0;
    FiniteGroup g = parse_group_block(lines, pos, source);
    if (pos != lines.size()) fail(source, lines[pos].number, "unexpected content after the group table");
    return g;
}

FiniteGroup load_group(const std::filesystem::path& file) { return parse_group(read_file(file), file.string()); }

Morphism parse_morphism(std::string_view text, const CatObject& dom, const std::vector<std::string>& dom_basis,
                        const CatObject& cod, const std::vector<std::string>& cod_basis, const std::string& source) {
    std::map<std::string, std::size_t> di, ci;
    for (std::size_t k = 0; k < dom_basis.size(); ++k) di.emplace(dom_basis[k], k);
    for (std::size_t k = 0; k < cod_basis.size(); ++k) ci.emplace(cod_basis[k], k);
    Matrix mat(cod.dim(), dom.dim());
    bool named = false;
    for (const Line& l : tokenize(text)) {
        const auto& t = l.tokens;
        if (t[0] == "morphism") {
            if (named || t.size() != 2) fail(source, l.number, "expected a single `morphism <name>` line");
            named = true;
            continue;
        }
        if (t[0] != "map" || t.size() != 5 || t[2] != "->")
            fail(source, l.number, "expected `map <i> -> <j> <coeff>`");
        auto i = di.find(t[1]);
        if (i == di.end()) fail(source, l.number, "unknown domain basis element " + t[1]);
        auto j = ci.find(t[3]);
        if (j == ci.end()) fail(source, l.number, "unknown codomain basis element " + t[3]);
        Scalar c;
        try {
            c = parse_scalar(t[4]);
        } catch (const std::invalid_argument&) {
            fail(source, l.number, "bad coefficient " + t[4]);
        }
        mat.add(j->second, i->second, c);
    }
    return Morphism(dom, cod, std::move(mat));
}

Morphism load_morphism(const std::filesystem::path& file, const BraidedBialgebra& dom, const BraidedBialgebra& cod) {
    return parse_morphism(read_file(file), dom.carrier, dom.basis, cod.carrier, cod.basis, file.string());
}

std::string write_group(const FiniteGroup& g) {
    std::ostringstream os;
    os << "group " << g.name() << "\n";
    os << "elements";
    for (const auto& n : g.element_names()) os << " " << n;
    os << "\ntable\n";
    for (std::size_t a = 0; a < g.order(); ++a) {
        for (std::size_t b = 0; b < g.order(); ++b) os << (b ? " " : "") << g.element_name(g.mul(a, b));
        os << "\n";
    }
    return os.str();
}

std::string write_definition(const BraidedBialgebra& a) {
    std::ostringstream os;
    const std::size_t n = a.dim();
    const auto& names = a.basis;
    const Backend& b = a.backend;
    if (b.kind() == BackendKind::sign_graded || b.kind() == BackendKind::yetter_drinfeld)
        os << write_group(b.group()) << "\n";

    const char* header = a.kind == StructureKind::hopf        ? "hopf"
                         : a.kind == StructureKind::bialgebra ? "bialgebra"
                                                              : "coalgebra";
    os << header << " " << a.name << "\n";
    switch (b.kind()) {
        case BackendKind::vec: os << "backend vec\n"; break;
        case BackendKind::super: os << "backend super\n"; break;
        case BackendKind::sign_graded: {
            os << "backend graded " << b.group().name() << " ";
            const std::size_t k = b.group().order();
            for (std::size_t g = 0; g < k; ++g)
                for (std::size_t h = 0; h < k; ++h) os << (g || h ? "," : "") << b.chi(g, h);
            os << "\n";
            break;
        }
        case BackendKind::yetter_drinfeld: os << "backend yd " << b.group().name() << "\n"; break;
    }
    os << "dim " << n << "\nbasis";
    for (const auto& s : names) os << " " << s;
    os << "\n";

    if (a.carrier.graded()) {
        for (std::size_t k = 0; k < n; ++k)
            os << "grade " << names[k] << " -> " << b.group().element_name(a.carrier.degree(k)) << "\n";
    }
    if (a.carrier.has_action()) {
        const FiniteGroup& g = b.group();
        for (std::size_t h = 0; h < g.order(); ++h) {
            const Matrix& act = a.carrier.action(h);
            for (std::size_t c = 0; c < n; ++c) {
                const auto& col = act.column(c);
                if (col.size() == 1 && col[0].row == c && col[0].value == 1) continue;
                if (col.empty()) throw Error(ErrorKind::shape_mismatch, "action with a zero column is not writable");
                for (const auto& e : col)
                    os << "action " << g.element_name(h) << " " << names[c] << " -> " << names[e.row] << " "
                       << scalar_text(e.value) << "\n";
            }
        }
    }
    if (a.has_algebra()) {
        for (std::size_t c = 0; c < n * n; ++c)
            for (const auto& e : a.m.mat().column(c))
                os << "mul " << names[c / n] << " " << names[c % n] << " -> " << names[e.row] << " "
                   << scalar_text(e.value) << "\n";
        for (const auto& e : a.u.mat().column(0)) os << "unit -> " << names[e.row] << " " << scalar_text(e.value) << "\n";
    }
    for (std::size_t c = 0; c < n; ++c)
        for (const auto& e : a.delta.mat().column(c))
            os << "comul " << names[c] << " -> " << names[e.row / n] << " " << names[e.row % n] << " "
               << scalar_text(e.value) << "\n";
    for (std::size_t c = 0; c < n; ++c)
        for (const auto& e : a.eps.mat().column(c)) os << "counit " << names[c] << " -> " << scalar_text(e.value) << "\n";
    if (a.antipode) {
        for (std::size_t c = 0; c < n; ++c)
            for (const auto& e : a.antipode->mat().column(c))
                os << "antipode " << names[c] << " -> " << names[e.row] << " " << scalar_text(e.value) << "\n";
    }
    return os.str();
}

std::string write_morphism(const Morphism& f, const std::vector<std::string>& dom_basis,
                           const std::vector<std::string>& cod_basis) {
    std::ostringstream os;
    for (std::size_t c = 0; c < f.mat().cols(); ++c)
        for (const auto& e : f.mat().column(c))
            os << "map " << dom_basis[c] << " -> " << cod_basis[e.row] << " " << scalar_text(e.value) << "\n";
    return os.str();
}

}  // namespace braidhopf
