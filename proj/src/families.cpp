#include <kcoal/error.hpp>
#include <kcoal/families.hpp>

#include <charconv>
#include <fstream>

namespace kcoal {

namespace {

void require(bool ok, const std::string & what)
{
    if (! ok)
        throw InvalidArgument("invalid family parameters: " + what);
}

} // namespace

void FamilySpec::validate() const
{
    switch (kind) {
    case Kind::Path: require(a >= 1, "path needs n >= 1"); break;
    case Kind::Cycle: require(a >= 3, "cycle needs n >= 3"); break;
    case Kind::Complete: require(a >= 1, "complete needs n >= 1"); break;
    case Kind::Empty: require(a >= 1, "empty needs n >= 1"); break;
    case Kind::Biclique: require(a >= 1 && b >= 1, "biclique needs s, t >= 1"); break;
    case Kind::Star: require(a >= 1, "star needs k >= 1"); break;
    case Kind::Spider: require(a >= 1, "spider needs k >= 1"); break;
    case Kind::Cocktail: require(a >= 2 && a % 2 == 0, "cocktail needs an even n >= 2"); break;
    case Kind::Corona:
        require(parts.size() == 2, "corona needs outer and inner");
        parts[0].validate();
        parts[1].validate();
        break;
    }
    require(order() <= Graph::kMaxVertices, "more than " + std::to_string(Graph::kMaxVertices) + " vertices");
}

int FamilySpec::order() const
{
    switch (kind) {
    case Kind::Biclique: return a + b;
    case Kind::Star: return a + 1;
    case Kind::Spider: return 3 * a + 1;
    case Kind::Corona: {
        require(parts.size() == 2, "corona needs outer and inner");
        long long total = static_cast<long long>(parts[0].order()) * (1 + parts[1].order());
        return total > 1'000'000 ? 1'000'000 : static_cast<int>(total);
    }
    default: return a;
    }
}

Graph corona(const Graph & outer, const Graph & inner)
{
    int f = outer.order(), h = inner.order();
    if (f == 0 || h == 0)
        throw InvalidArgument("corona needs nonempty outer and inner graphs");
    long long total = static_cast<long long>(f) * (1 + h);
    if (total > Graph::kMaxVertices)
        throw InvalidArgument("corona product has " + std::to_string(total) + " vertices, more than supported");

    std::vector<Edge> es = outer.edges();
    for (Vertex i = 0; i < f; ++i) {
        Vertex base = f + i * h;
        for (auto [u, v] : inner.edges())
            es.emplace_back(base + u, base + v);
        for (Vertex j = 0; j < h; ++j)
            es.emplace_back(i, base + j);
    }
    return Graph(static_cast<int>(total), es);
}

Graph generate(const FamilySpec & spec)
{
    spec.validate();
    std::vector<Edge> es;
    int n = spec.order();
    switch (spec.kind) {
    case FamilySpec::Kind::Path:
        for (Vertex i = 0; i + 1 < n; ++i)
            es.emplace_back(i, i + 1);
        break;
    case FamilySpec::Kind::Cycle:
        for (Vertex i = 0; i + 1 < n; ++i)
            es.emplace_back(i, i + 1);
        es.emplace_back(0, n - 1);
        break;
    case FamilySpec::Kind::Complete:
        for (Vertex u = 0; u < n; ++u)
            for (Vertex v = u + 1; v < n; ++v)
                es.emplace_back(u, v);
        break;
    case FamilySpec::Kind::Biclique:
        for (Vertex u = 0; u < spec.a; ++u)
            for (Vertex v = spec.a; v < n; ++v)
                es.emplace_back(u, v);
        break;
    case FamilySpec::Kind::Star:
        for (Vertex leaf = 1; leaf < n; ++leaf)
            es.emplace_back(0, leaf);
        break;
    case FamilySpec::Kind::Spider: {
        int k = spec.a;
        for (Vertex leaf = 1; leaf <= k; ++leaf) {
            es.emplace_back(0, leaf);
            Vertex first = k + 1 + 2 * (leaf - 1);
            es.emplace_back(leaf, first);
            es.emplace_back(leaf, first + 1);
        }
        break;
    }
    case FamilySpec::Kind::Cocktail:
        for (Vertex u = 0; u < n; ++u)
            for (Vertex v = u + 1; v < n; ++v)
                if (! (u % 2 == 0 && v == u + 1))
                    es.emplace_back(u, v);
        break;
    case FamilySpec::Kind::Empty:
        break;
    case FamilySpec::Kind::Corona:
        return corona(generate(spec.parts[0]), generate(spec.parts[1]));
    }
    return Graph(n, es);
}

namespace {

class FamilyParser {
public:
    explicit FamilyParser(std::string_view text) : text_(text) {}

    FamilySpec parse_all()
    {
        FamilySpec spec = parse_spec();
        if (pos_ != text_.size())
            fail("trailing characters");
        return spec;
    }

private:
    std::string_view text_;
    std::size_t pos_ = 0;

    [[noreturn]] void fail(const std::string & why) const
    {
        throw ParseError(ParseErrorKind::BadFamily, 0,
            "\"" + std::string(text_) + "\" at offset " + std::to_string(pos_) + ": " + why);
    }

    void expect(char c)
    {
        if (pos_ >= text_.size() || text_[pos_] != c)
            fail(std::string("expected '") + c + "'");
        ++pos_;
    }

    int number()
    {
        int value = 0;
        auto [ptr, ec] = std::from_chars(text_.data() + pos_, text_.data() + text_.size(), value);
        if (ec != std::errc{})
            fail("expected a number");
        pos_ = ptr - text_.data();
        return value;
    }

    FamilySpec parse_spec()
    {
        auto colon = text_.find(':', pos_);
        if (colon == std::string_view::npos)
            fail("expected '<family>:'");
        std::string_view name = text_.substr(pos_, colon - pos_);
        pos_ = colon + 1;

        FamilySpec spec;
        if (name == "corona") {
            expect('(');
            FamilySpec outer = parse_spec();
            expect(')');
            expect(',');
            expect('(');
            FamilySpec inner = parse_spec();
            expect(')');
            spec = FamilySpec::corona(std::move(outer), std::move(inner));
        }
        else if (name == "biclique") {
            int s = number();
            expect(',');
            spec = FamilySpec::biclique(s, number());
        }
        else if (name == "path") spec = FamilySpec::path(number());
        else if (name == "cycle") spec = FamilySpec::cycle(number());
        else if (name == "complete") spec = FamilySpec::complete(number());
        else if (name == "star") spec = FamilySpec::star(number());
        else if (name == "spider") spec = FamilySpec::spider(number());
        else if (name == "cocktail") spec = FamilySpec::cocktail(number());
        else if (name == "empty") spec = FamilySpec::empty(number());
        else
            fail("unknown family \"" + std::string(name) + "\"");
        return spec;
    }
};

} // namespace

FamilySpec parse_family(std::string_view dsl)
{
    return FamilyParser(dsl).parse_all();
}

std::string to_string(const FamilySpec & spec)
{
    using K = FamilySpec::Kind;
    switch (spec.kind) {
    case K::Path: return "path:" + std::to_string(spec.a);
    case K::Cycle: return "cycle:" + std::to_string(spec.a);
    case K::Complete: return "complete:" + std::to_string(spec.a);
    case K::Biclique: return "biclique:" + std::to_string(spec.a) + "," + std::to_string(spec.b);
    case K::Star: return "star:" + std::to_string(spec.a);
    case K::Spider: return "spider:" + std::to_string(spec.a);
    case K::Cocktail: return "cocktail:" + std::to_string(spec.a);
    case K::Empty: return "empty:" + std::to_string(spec.a);
    case K::Corona: return "corona:(" + to_string(spec.parts.at(0)) + "),(" + to_string(spec.parts.at(1)) + ")";
    }
    return "?";
}

Graph load_graph(const std::string & text_or_path)
{
    if (text_or_path.find(':') != std::string::npos)
        return generate(parse_family(text_or_path));
    std::ifstream in(text_or_path);
    if (! in)
        throw InvalidArgument("cannot open graph file \"" + text_or_path + "\"");
    return read_edge_list(in);
}

} // namespace kcoal
