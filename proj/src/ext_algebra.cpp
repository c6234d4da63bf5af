#include "swfam/ext_algebra.hpp"

#include <algorithm>
#include <bit>

#include "swfam/errors.hpp"

namespace swfam {

namespace {

constexpr int kMaxGenerators = 32;

void require_same_basis(const ExtElem& a, const ExtElem& b, const char* op) {
    if (a.basis() == b.basis() || *a.basis() == *b.basis())
        return;
    throw AlgebraError(std::string(op) + ": mismatched generator sets {" +
                       (a.basis()->size() ? a.basis()->name(0) : std::string("")) + ",... (" +
                       std::to_string(a.basis()->size()) + ")} vs {" +
                       (b.basis()->size() ? b.basis()->name(0) : std::string("")) + ",... (" +
                       std::to_string(b.basis()->size()) + ")}");
}

} // namespace

GeneratorBasis::GeneratorBasis(std::vector<std::string> names) : names_(std::move(names)) {
    if (names_.size() > kMaxGenerators)
        throw AlgebraError("GeneratorBasis: more than 32 generators unsupported");
}

std::shared_ptr<const GeneratorBasis> GeneratorBasis::named(std::vector<std::string> names) {
    return std::shared_ptr<const GeneratorBasis>(new GeneratorBasis(std::move(names)));
}

std::shared_ptr<const GeneratorBasis> GeneratorBasis::torus(int b1) {
    std::vector<std::string> names;
    for (int i = 1; i <= b1; ++i)
        names.push_back("y" + std::to_string(i));
    return named(std::move(names));
}

std::shared_ptr<const GeneratorBasis> GeneratorBasis::bigraded(int b1) {
    std::vector<std::string> names;
    for (int i = 1; i <= b1; ++i)
        names.push_back("x" + std::to_string(i));
    for (int i = 1; i <= b1; ++i)
        names.push_back("y" + std::to_string(i));
    return named(std::move(names));
}

int GeneratorBasis::index_of(const std::string& name) const {
    auto it = std::find(names_.begin(), names_.end(), name);
    return it == names_.end() ? -1 : static_cast<int>(it - names_.begin());
}

int koszul_sign(Mask a, Mask b) {
    int swaps = 0;
    for (Mask m = b; m; m &= m - 1) {
        int j = std::countr_zero(m);
        // generators of a strictly above position j must hop over it
        swaps += std::popcount(a >> (j + 1));
    }
    return (swaps & 1) ? -1 : 1;
}

ExtElem::ExtElem(BasisPtr basis) : basis_(std::move(basis)) {}

ExtElem ExtElem::generator(BasisPtr basis, int i) {
    if (i < 0 || i >= basis->size())
        throw AlgebraError("ExtElem::generator: index out of range");
    return monomial(std::move(basis), Mask(1) << i, 1);
}

ExtElem ExtElem::monomial(BasisPtr basis, Mask m, Rational c) {
    ExtElem e(std::move(basis));
    int n = e.basis_->size();
    if (n < kMaxGenerators && (m >> n))
        throw AlgebraError("ExtElem::monomial: mask outside generator set");
    if (!c.is_zero())
        e.terms_.emplace(m, std::move(c));
    return e;
}

Rational ExtElem::coefficient(Mask m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
}

int ExtElem::max_degree() const {
    int d = 0;
    for (const auto& [m, c] : terms_)
        d = std::max(d, std::popcount(m));
    return d;
}

bool ExtElem::is_homogeneous_of_degree(int d) const {
    for (const auto& [m, c] : terms_)
        if (std::popcount(m) != d)
            return false;
    return true;
}

ExtElem ExtElem::graded_part(int degree) const {
    ExtElem r(basis_);
    for (const auto& [m, c] : terms_)
        if (std::popcount(m) == degree)
            r.terms_.emplace(m, c);
    return r;
}

void ExtElem::insert_term(Mask m, const Rational& c) {
    auto [it, fresh] = terms_.try_emplace(m, c);
    if (!fresh) {
        it->second += c;
        if (it->second.is_zero())
            terms_.erase(it);
    } else if (it->second.is_zero()) {
        terms_.erase(it);
    }
}

ExtElem& ExtElem::operator+=(const ExtElem& o) {
    require_same_basis(*this, o, "ext add");
    for (const auto& [m, c] : o.terms_)
        insert_term(m, c);
    return *this;
}

ExtElem& ExtElem::operator-=(const ExtElem& o) {
    require_same_basis(*this, o, "ext sub");
    for (const auto& [m, c] : o.terms_)
        insert_term(m, -c);
    return *this;
}

ExtElem ExtElem::operator-() const {
    ExtElem r(basis_);
    for (const auto& [m, c] : terms_)
        r.terms_.emplace(m, -c);
    return r;
}

ExtElem operator*(const ExtElem& a, const ExtElem& b) {
    require_same_basis(a, b, "ext_mul");
    ExtElem r(a.basis_);
    for (const auto& [ma, ca] : a.terms_) {
        for (const auto& [mb, cb] : b.terms_) {
            if (ma & mb)
                continue; // repeated odd generator
            Rational c = ca * cb;
            if (koszul_sign(ma, mb) < 0)
                c = -c;
            r.insert_term(ma | mb, c);
        }
    }
    return r;
}

ExtElem operator*(const ExtElem& a, const Rational& c) {
    ExtElem r(a.basis_);
    if (c.is_zero())
        return r;
    for (const auto& [m, coeff] : a.terms_)
        r.terms_.emplace(m, coeff * c);
    return r;
}

ExtElem ExtElem::exp_nilpotent() const {
    if (!scalar_part().is_zero())
        throw AlgebraError("exp: nonzero scalar part");
    ExtElem sum = ExtElem::unit(basis_);
    ExtElem power = ExtElem::unit(basis_);
    // each factor raises the minimal degree, so k never exceeds |basis|
    for (int k = 1; k <= basis_->size(); ++k) {
        power = power * *this;
        if (power.is_zero())
            break;
        sum += power * Rational(Int(1), factorial(static_cast<unsigned>(k)));
    }
    return sum;
}

bool operator==(const ExtElem& a, const ExtElem& b) {
    return (a.basis_ == b.basis_ || *a.basis_ == *b.basis_) && a.terms_ == b.terms_;
}

std::string ExtElem::str() const {
    if (terms_.empty())
        return "0";
    std::string out;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        std::string mono;
        for (Mask r = m; r; r &= r - 1)
            mono += basis_->name(std::countr_zero(r));
        if (!first)
            out += c >= Rational(0) ? " + " : " - ";
        else if (c < Rational(0))
            out += "-";
        Rational abs = c < Rational(0) ? -c : c;
        if (mono.empty())
            out += abs.str();
        else if (abs == Rational(1))
            out += mono;
        else
            out += abs.str() + "*" + mono;
        first = false;
    }
    return out;
}

Rational top_coefficient(const ExtElem& a) {
    Mask top = a.basis()->size() == 32 ? ~Mask(0) : (Mask(1) << a.basis()->size()) - 1;
    return a.coefficient(top);
}

ExtElem fibre_integrate(const ExtElem& a, const std::vector<std::string>& fibre_generators) {
    Mask fibre = 0;
    for (const auto& name : fibre_generators) {
        int i = a.basis()->index_of(name);
        if (i < 0)
            throw AlgebraError("fibre_integrate: generator '" + name +
                               "' not in the generator set");
        fibre |= Mask(1) << i;
    }

    std::vector<std::string> rest_names;
    std::vector<int> compress(static_cast<size_t>(a.basis()->size()), -1);
    for (int i = 0; i < a.basis()->size(); ++i) {
        if (!(fibre >> i & 1)) {
            compress[static_cast<size_t>(i)] = static_cast<int>(rest_names.size());
            rest_names.push_back(a.basis()->name(i));
        }
    }
    BasisPtr rest = GeneratorBasis::named(std::move(rest_names));

    ExtElem r(rest);
    for (const auto& [m, c] : a.terms()) {
        if ((m & fibre) != fibre)
            continue; // no fibre top form
        Mask base_part = m & ~fibre;
        // move the fibre monomial to the left of the base monomial: each fibre
        // generator hops over every lower-index base generator
        int sign = koszul_sign(fibre, base_part);
        Mask reduced = 0;
        for (Mask g = base_part; g; g &= g - 1)
            reduced |= Mask(1) << compress[static_cast<size_t>(std::countr_zero(g))];
        ExtElem term = ExtElem::monomial(rest, reduced, sign < 0 ? -c : c);
        r += term;
    }
    return r;
}

} // namespace swfam
