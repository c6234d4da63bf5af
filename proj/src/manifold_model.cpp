#include "swfam/manifold_model.hpp"

#include <algorithm>
#include <sstream>

#include "swfam/errors.hpp"
#include "swfam/ext_algebra.hpp"

namespace swfam {

long long ManifoldModel::quadruple(int i, int j, int k, int l) const {
    std::array<int, 4> idx{i, j, k, l};
    // sort and track parity
    int sign = 1;
    for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3 - a; ++b)
            if (idx[size_t(b)] > idx[size_t(b + 1)]) {
                std::swap(idx[size_t(b)], idx[size_t(b + 1)]);
                sign = -sign;
            }
    for (int a = 0; a < 3; ++a)
        if (idx[size_t(a)] == idx[size_t(a + 1)])
            return 0;
    auto it = quadruple_sorted.find(idx);
    return it == quadruple_sorted.end() ? 0 : sign * it->second;
}

long long ManifoldModel::pairing(const SpincClass& l1, const SpincClass& l2) const {
    if (static_cast<int>(l1.components.size()) != h2_rank ||
        static_cast<int>(l2.components.size()) != h2_rank)
        throw ValidationError("pairing: Spin^c vector length does not match h2_rank");
    long long acc = 0;
    for (int a = 0; a < h2_rank; ++a)
        for (int b = 0; b < h2_rank; ++b)
            acc += l1.components[size_t(a)] * intersection[size_t(a)][size_t(b)] *
                   l2.components[size_t(b)];
    return acc;
}

long long symmetric_signature(const std::vector<std::vector<long long>>& q) {
    const size_t n = q.size();
    std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j)
            m[i][j] = Rational(q[i][j]);

    auto add_multiple = [&](size_t dst, size_t src, const Rational& f) {
        for (size_t c = 0; c < n; ++c)
            m[dst][c] += m[src][c] * f;
        for (size_t r = 0; r < n; ++r)
            m[r][dst] += m[r][src] * f;
    };
    auto swap_basis = [&](size_t a, size_t b) {
        for (size_t c = 0; c < n; ++c)
            std::swap(m[a][c], m[b][c]);
        for (size_t r = 0; r < n; ++r)
            std::swap(m[r][a], m[r][b]);
    };

    long long npos = 0, nneg = 0;
    for (size_t k = 0; k < n; ++k) {
        if (m[k][k].is_zero()) {
            for (size_t j = k + 1; j < n; ++j)
                if (!m[j][j].is_zero()) {
                    swap_basis(k, j);
                    break;
                }
        }
        if (m[k][k].is_zero()) {
            for (size_t j = k + 1; j < n; ++j)
                if (!m[k][j].is_zero()) {
                    add_multiple(k, j, Rational(1)); // makes m[k][k] = 2 m[k][j]
                    break;
                }
        }
        if (m[k][k].is_zero())
            continue; // null direction
        if (m[k][k] > Rational(0))
            ++npos;
        else
            ++nneg;
        for (size_t i = k + 1; i < n; ++i)
            if (!m[k][i].is_zero())
                add_multiple(i, k, -(m[k][i] / m[k][k]));
    }
    return npos - nneg;
}

void ManifoldModel::validate() const {
    if (b1 < 0 || bplus < 0 || h2_rank < 0)
        throw ValidationError(name + ": negative Betti data");
    if (static_cast<long long>(h2_rank) != euler - 2 + 2 * static_cast<long long>(b1))
        throw ValidationError(name + ": Euler identity b2 = e - 2 + 2*b1 violated (b2 = " +
                              std::to_string(h2_rank) + ", e = " + std::to_string(euler) +
                              ", b1 = " + std::to_string(b1) + ")");
    if (static_cast<int>(intersection.size()) != h2_rank)
        throw ValidationError(name + ": intersection matrix is not h2_rank x h2_rank");
    for (const auto& row : intersection)
        if (static_cast<int>(row.size()) != h2_rank)
            throw ValidationError(name + ": intersection matrix is not h2_rank x h2_rank");
    for (int a = 0; a < h2_rank; ++a)
        for (int b = a + 1; b < h2_rank; ++b)
            if (intersection[size_t(a)][size_t(b)] != intersection[size_t(b)][size_t(a)])
                throw ValidationError(name + ": intersection matrix not symmetric at (" +
                                      std::to_string(a + 1) + "," + std::to_string(b + 1) + ")");
    if (bplus > h2_rank)
        throw ValidationError(name + ": bplus exceeds b2");
    if (2 * static_cast<long long>(bplus) - h2_rank != signature)
        throw ValidationError(name + ": signature != 2*bplus - b2");
    long long sig = symmetric_signature(intersection);
    if (sig != signature)
        throw ValidationError(name + ": signature of the intersection matrix (" +
                              std::to_string(sig) + ") != signature field (" +
                              std::to_string(signature) + ")");

    if (static_cast<int>(triple.size()) != b1)
        throw ValidationError(name + ": triple tensor is not b1 x b1 x b2");
    for (int i = 0; i < b1; ++i) {
        if (static_cast<int>(triple[size_t(i)].size()) != b1)
            throw ValidationError(name + ": triple tensor is not b1 x b1 x b2");
        for (int j = 0; j < b1; ++j) {
            if (static_cast<int>(triple[size_t(i)][size_t(j)].size()) != h2_rank)
                throw ValidationError(name + ": triple tensor is not b1 x b1 x b2");
            for (int a = 0; a < h2_rank; ++a)
                if (triple_at(i, j, a) != -triple_at(j, i, a))
                    throw ValidationError(name + ": triple tensor not antisymmetric in (i,j)");
        }
    }
    for (const auto& [idx, v] : quadruple_sorted) {
        if (!(idx[0] < idx[1] && idx[1] < idx[2] && idx[2] < idx[3]))
            throw ValidationError(name + ": quadruple indices not strictly increasing");
        if (idx[0] < 0 || idx[3] >= b1)
            throw ValidationError(name + ": quadruple index out of range (needs b1 >= 4)");
        (void)v;
    }
}

long long expected_dimension(const ManifoldModel& m, const SpincClass& l, long long dim_b) {
    long long c1sq = m.pairing(l, l);
    long long num = c1sq - (2 * m.euler + 3 * m.signature);
    if (num % 4 != 0)
        throw ValidationError(
            "expected_dimension: c1(L)^2 - (2e + 3sigma) = " + std::to_string(num) +
            " is not divisible by 4 — non-characteristic Spin^c class (parity obstruction)");
    return dim_b + num / 4;
}

// ---------------------------------------------------------------------------
// file format

namespace {

std::string trim(const std::string& s) {
    size_t a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos)
        return "";
    size_t b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

long long parse_int(const std::string& tok, int line) {
    try {
        size_t pos = 0;
        long long v = std::stoll(tok, &pos);
        if (pos != tok.size())
            throw std::invalid_argument(tok);
        return v;
    } catch (const std::exception&) {
        throw ParseError(line, "expected an integer, got '" + tok + "'");
    }
}

std::vector<std::string> split_ws(const std::string& s) {
    std::vector<std::string> out;
    std::istringstream is(s);
    std::string tok;
    while (is >> tok)
        out.push_back(tok);
    return out;
}

} // namespace

ManifoldModel load_manifold(const std::string& text) {
    ManifoldModel m;
    enum class Section { None, Manifold, Intersection, Triple, Quadruple };
    Section section = Section::None;
    std::map<std::string, bool> seen{{"name", false},     {"b1", false},
                                     {"bplus", false},    {"euler", false},
                                     {"signature", false}, {"h2_rank", false}};
    int intersection_rows = 0;
    bool shape_ready = false;

    auto ensure_shape = [&](int line) {
        if (shape_ready)
            return;
        for (const auto& [key, ok] : seen)
            if (!ok)
                throw ParseError(line, "section [manifold] incomplete: missing '" + key + "'");
        if (m.b1 < 0 || m.b1 > 16)
            throw ParseError(line, "b1 out of the supported range [0, 16]");
        if (m.h2_rank < 0 || m.h2_rank > 4096)
            throw ParseError(line, "h2_rank out of the supported range [0, 4096]");
        m.intersection.assign(size_t(m.h2_rank), {});
        m.triple.assign(size_t(m.b1),
                        std::vector<std::vector<long long>>(
                            size_t(m.b1), std::vector<long long>(size_t(m.h2_rank), 0)));
        shape_ready = true;
    };

    std::istringstream is(text);
    std::string raw;
    int line = 0;
    while (std::getline(is, raw)) {
        ++line;
        std::string s = raw;
        if (auto hash = s.find('#'); hash != std::string::npos)
            s = s.substr(0, hash);
        s = trim(s);
        if (s.empty())
            continue;
        if (s.front() == '[') {
            if (s == "[manifold]")
                section = Section::Manifold;
            else if (s == "[intersection]") {
                ensure_shape(line);
                section = Section::Intersection;
            } else if (s == "[triple]") {
                ensure_shape(line);
                section = Section::Triple;
            } else if (s == "[quadruple]") {
                ensure_shape(line);
                section = Section::Quadruple;
            } else
                throw ParseError(line, "unknown section " + s);
            continue;
        }
        switch (section) {
        case Section::None:
            throw ParseError(line, "content before any [section] header");
        case Section::Manifold: {
            auto eq = s.find('=');
            if (eq == std::string::npos)
                throw ParseError(line, "expected 'key = value'");
            std::string key = trim(s.substr(0, eq));
            std::string value = trim(s.substr(eq + 1));
            auto it = seen.find(key);
            if (it == seen.end())
                throw ParseError(line, "unknown key '" + key + "' in [manifold]");
            if (it->second)
                throw ParseError(line, "duplicate key '" + key + "'");
            it->second = true;
            if (key == "name")
                m.name = value;
            else if (key == "b1")
                m.b1 = static_cast<int>(parse_int(value, line));
            else if (key == "bplus")
                m.bplus = static_cast<int>(parse_int(value, line));
            else if (key == "euler")
                m.euler = parse_int(value, line);
            else if (key == "signature")
                m.signature = parse_int(value, line);
            else if (key == "h2_rank")
                m.h2_rank = static_cast<int>(parse_int(value, line));
            break;
        }
        case Section::Intersection: {
            if (intersection_rows >= m.h2_rank)
                throw ParseError(line, "more than h2_rank rows in [intersection]");
            auto toks = split_ws(s);
            if (static_cast<int>(toks.size()) != m.h2_rank)
                throw ParseError(line, "expected " + std::to_string(m.h2_rank) +
                                           " entries in the intersection row, got " +
                                           std::to_string(toks.size()));
            std::vector<long long> row;
            for (const auto& t : toks)
                row.push_back(parse_int(t, line));
            m.intersection[size_t(intersection_rows++)] = std::move(row);
            break;
        }
        case Section::Triple: {
            auto toks = split_ws(s);
            if (toks.size() != 4)
                throw ParseError(line, "expected 'i j a v' in [triple]");
            int i = static_cast<int>(parse_int(toks[0], line));
            int j = static_cast<int>(parse_int(toks[1], line));
            int a = static_cast<int>(parse_int(toks[2], line));
            long long v = parse_int(toks[3], line);
            if (i < 1 || j < 1 || i > m.b1 || j > m.b1 || i >= j)
                throw ParseError(line, "[triple] needs 1 <= i < j <= b1");
            if (a < 1 || a > m.h2_rank)
                throw ParseError(line, "[triple] needs 1 <= a <= h2_rank");
            m.triple[size_t(i - 1)][size_t(j - 1)][size_t(a - 1)] = v;
            m.triple[size_t(j - 1)][size_t(i - 1)][size_t(a - 1)] = -v;
            break;
        }
        case Section::Quadruple: {
            auto toks = split_ws(s);
            if (toks.size() != 5)
                throw ParseError(line, "expected 'i j k l v' in [quadruple]");
            std::array<int, 4> idx;
            for (int t = 0; t < 4; ++t)
                idx[size_t(t)] = static_cast<int>(parse_int(toks[size_t(t)], line)) - 1;
            long long v = parse_int(toks[4], line);
            if (!(idx[0] >= 0 && idx[0] < idx[1] && idx[1] < idx[2] && idx[2] < idx[3] &&
                  idx[3] < m.b1))
                throw ParseError(line, "[quadruple] needs 1 <= i < j < k < l <= b1");
            if (v != 0)
                m.quadruple_sorted[idx] = v;
            break;
        }
        }
    }
    if (!shape_ready)
        ensure_shape(line);
    if (intersection_rows != m.h2_rank)
        throw ParseError(line, "[intersection] has " + std::to_string(intersection_rows) +
                                   " rows, expected " + std::to_string(m.h2_rank));
    m.validate();
    return m;
}

std::string to_text(const ManifoldModel& m) {
    std::ostringstream os;
    os << "[manifold]\n";
    os << "name = " << m.name << "\n";
    os << "b1 = " << m.b1 << "\n";
    os << "bplus = " << m.bplus << "\n";
    os << "euler = " << m.euler << "\n";
    os << "signature = " << m.signature << "\n";
    os << "h2_rank = " << m.h2_rank << "\n";
    os << "\n[intersection]\n";
    for (int a = 0; a < m.h2_rank; ++a) {
        for (int b = 0; b < m.h2_rank; ++b)
            os << (b ? " " : "") << m.intersection[size_t(a)][size_t(b)];
        os << "\n";
    }
    os << "\n[triple]\n";
    for (int i = 0; i < m.b1; ++i)
        for (int j = i + 1; j < m.b1; ++j)
            for (int a = 0; a < m.h2_rank; ++a)
                if (long long v = m.triple_at(i, j, a))
                    os << i + 1 << " " << j + 1 << " " << a + 1 << " " << v << "\n";
    os << "\n[quadruple]\n";
    for (const auto& [idx, v] : m.quadruple_sorted)
        if (v != 0)
            os << idx[0] + 1 << " " << idx[1] + 1 << " " << idx[2] + 1 << " " << idx[3] + 1 << " "
               << v << "\n";
    return os.str();
}

// ---------------------------------------------------------------------------
// presets

namespace {

ManifoldModel make_t4() {
    ManifoldModel m;
    m.name = "t4";
    m.b1 = 4;
    m.bplus = 3;
    m.euler = 0;
    m.signature = 0;
    m.h2_rank = 6;

    // H^1 generators as one-forms; [M] sends x1x2x3x4 to +1
    BasisPtr basis = GeneratorBasis::named({"x1", "x2", "x3", "x4"});
    auto x = [&](int i) { return ExtElem::generator(basis, i); };
    std::vector<ExtElem> e; // lexicographic wedge basis of H^2
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
            e.push_back(x(i) * x(j));

    auto eval = [&](const ExtElem& form) {
        Rational c = top_coefficient(form);
        if (!c.is_integer())
            throw ValidationError("t4 preset: non-integer pairing");
        return static_cast<long long>(c.num().convert_to<long long>());
    };

    m.intersection.assign(6, std::vector<long long>(6, 0));
    for (int a = 0; a < 6; ++a)
        for (int b = 0; b < 6; ++b)
            m.intersection[size_t(a)][size_t(b)] = eval(e[size_t(a)] * e[size_t(b)]);

    m.triple.assign(4, std::vector<std::vector<long long>>(4, std::vector<long long>(6, 0)));
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            for (int a = 0; a < 6; ++a)
                m.triple[size_t(i)][size_t(j)][size_t(a)] = eval(x(i) * x(j) * e[size_t(a)]);

    m.quadruple_sorted[{0, 1, 2, 3}] = eval(x(0) * x(1) * x(2) * x(3));
    m.validate();
    return m;
}

ManifoldModel make_k3() {
    ManifoldModel m;
    m.name = "k3";
    m.b1 = 0;
    m.bplus = 3;
    m.euler = 24;
    m.signature = -16;
    m.h2_rank = 22;
    m.intersection.assign(22, std::vector<long long>(22, 0));

    // three hyperbolic planes
    for (int h = 0; h < 3; ++h) {
        m.intersection[size_t(2 * h)][size_t(2 * h + 1)] = 1;
        m.intersection[size_t(2 * h + 1)][size_t(2 * h)] = 1;
    }
    // two copies of -E8 (Bourbaki numbering: chain 1-3-4-5-6-7-8, node 2 on 4)
    static const int bonds[][2] = {{1, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {7, 8}, {2, 4}};
    for (int copy = 0; copy < 2; ++copy) {
        int base = 6 + 8 * copy;
        for (int d = 0; d < 8; ++d)
            m.intersection[size_t(base + d)][size_t(base + d)] = -2;
        for (const auto& b : bonds) {
            int u = base + b[0] - 1, v = base + b[1] - 1;
            m.intersection[size_t(u)][size_t(v)] = 1;
            m.intersection[size_t(v)][size_t(u)] = 1;
        }
    }
    m.validate();
    return m;
}

// A differential form on the primary Kodaira surface with polynomial
// dependence on the coordinate x: part[p] multiplies lambda^p x^p.
struct KodairaForm {
    std::array<ExtElem, 3> part;

    explicit KodairaForm(const BasisPtr& basis)
        : part{ExtElem::zero(basis), ExtElem::zero(basis), ExtElem::zero(basis)} {}
};

KodairaForm kodaira_mul(const KodairaForm& a, const KodairaForm& b) {
    KodairaForm r(a.part[0].basis());
    for (int p = 0; p < 3; ++p)
        for (int q = 0; p + q < 3; ++q)
            r.part[size_t(p + q)] += a.part[size_t(p)] * b.part[size_t(q)];
    return r;
}

// integrates over the unit fundamental domain; moments of x are 1, 1/2, 1/3
long long kodaira_eval(const KodairaForm& f) {
    Rational value = top_coefficient(f.part[0]);
    for (int p = 1; p < 3; ++p)
        if (!top_coefficient(f.part[size_t(p)]).is_zero())
            throw ValidationError("kodaira preset: pairing depends on lambda");
    if (!value.is_integer())
        throw ValidationError("kodaira preset: non-integer pairing");
    return static_cast<long long>(value.num().convert_to<long long>());
}

ManifoldModel make_kodaira() {
    ManifoldModel m;
    m.name = "kodaira";
    m.b1 = 3;
    m.bplus = 2;
    m.euler = 0;
    m.signature = 0;
    m.h2_rank = 4;

    // one-form generators dx, dy, dz, dt; [M] sends dx dy dz dt to +1
    BasisPtr forms = GeneratorBasis::named({"dx", "dy", "dz", "dt"});
    auto d = [&](int i) { return ExtElem::generator(forms, i); };
    const int DX = 0, DY = 1, DZ = 2, DT = 3;

    auto constant = [&](const ExtElem& c) {
        KodairaForm f(forms);
        f.part[0] = c;
        return f;
    };

    // H^1 basis (dx, dy, dt)
    std::vector<KodairaForm> h1{constant(d(DX)), constant(d(DY)), constant(d(DT))};

    // H^2 basis (dx^dt, dy^dt, dy^dz, dx^(dz - lambda x dy))
    std::vector<KodairaForm> h2;
    h2.push_back(constant(d(DX) * d(DT)));
    h2.push_back(constant(d(DY) * d(DT)));
    h2.push_back(constant(d(DY) * d(DZ)));
    KodairaForm e4(forms);
    e4.part[0] = d(DX) * d(DZ);
    e4.part[1] = -(d(DX) * d(DY)); // the -lambda x dx^dy term
    h2.push_back(e4);

    m.intersection.assign(4, std::vector<long long>(4, 0));
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b)
            m.intersection[size_t(a)][size_t(b)] = kodaira_eval(kodaira_mul(h2[size_t(a)], h2[size_t(b)]));

    m.triple.assign(3, std::vector<std::vector<long long>>(3, std::vector<long long>(4, 0)));
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            for (int a = 0; a < 4; ++a)
                m.triple[size_t(i)][size_t(j)][size_t(a)] =
                    kodaira_eval(kodaira_mul(kodaira_mul(h1[size_t(i)], h1[size_t(j)]), h2[size_t(a)]));

    m.validate();
    return m;
}

} // namespace

ManifoldModel preset(const std::string& name) {
    if (name == "t4")
        return make_t4();
    if (name == "k3")
        return make_k3();
    if (name == "kodaira")
        return make_kodaira();
    throw ValidationError("unknown preset '" + name + "' (expected t4, k3 or kodaira)");
}

} // namespace swfam
