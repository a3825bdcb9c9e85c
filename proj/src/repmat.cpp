#include "fpalg/repmat.hpp"

#include "fpalg/print.hpp"

namespace fpalg {

ExactMatrix ExactMatrix::identity(unsigned dim) {
    ExactMatrix m(dim);
    for (unsigned k = 0; k < dim; ++k) m.at(k, k) = Scalar(1);
    return m;
}

const Scalar& ExactMatrix::at(unsigned row, unsigned col) const {
    if (row >= dim_ || col >= dim_) throw Error("matrix index out of range");
    return entries_[std::size_t(row) * dim_ + col];
}

Scalar& ExactMatrix::at(unsigned row, unsigned col) {
    if (row >= dim_ || col >= dim_) throw Error("matrix index out of range");
    return entries_[std::size_t(row) * dim_ + col];
}

bool ExactMatrix::is_zero() const {
    for (const auto& e : entries_)
        if (!e.is_zero()) return false;
    return true;
}

void ExactMatrix::check_same_dim(const ExactMatrix& o) const {
    if (dim_ != o.dim_) throw Error("matrix dimension mismatch");
}

ExactMatrix ExactMatrix::operator-() const {
    ExactMatrix out(dim_);
    for (std::size_t k = 0; k < entries_.size(); ++k) out.entries_[k] = -entries_[k];
    return out;
}

ExactMatrix ExactMatrix::operator+(const ExactMatrix& o) const {
    check_same_dim(o);
    ExactMatrix out(dim_);
    for (std::size_t k = 0; k < entries_.size(); ++k)
        out.entries_[k] = entries_[k] + o.entries_[k];
    return out;
}

ExactMatrix ExactMatrix::operator-(const ExactMatrix& o) const {
    check_same_dim(o);
    ExactMatrix out(dim_);
    for (std::size_t k = 0; k < entries_.size(); ++k)
        out.entries_[k] = entries_[k] - o.entries_[k];
    return out;
}

ExactMatrix ExactMatrix::operator*(const ExactMatrix& o) const {
    check_same_dim(o);
    ExactMatrix out(dim_);
    for (unsigned r = 0; r < dim_; ++r)
        for (unsigned k = 0; k < dim_; ++k) {
            const Scalar& left = at(r, k);
            if (left.is_zero()) continue;
            for (unsigned c = 0; c < dim_; ++c) {
                const Scalar& right = o.at(k, c);
                if (right.is_zero()) continue;
                out.at(r, c) += left * right;
            }
        }
    return out;
}

ExactMatrix ExactMatrix::operator*(const Scalar& c) const {
    ExactMatrix out(dim_);
    for (std::size_t k = 0; k < entries_.size(); ++k) out.entries_[k] = entries_[k] * c;
    return out;
}

std::string ExactMatrix::to_string() const {
    std::string out;
    for (unsigned r = 0; r < dim_; ++r) {
        out += "[";
        for (unsigned c = 0; c < dim_; ++c) {
            if (c) out += ", ";
            out += at(r, c).to_string();
        }
        out += "]";
        if (r + 1 < dim_) out += "\n";
    }
    return out;
}

Representation sl2_irrep(unsigned n) {
    const unsigned dim = n + 1;
    ExactMatrix E(dim), F(dim), H(dim);
    for (unsigned k = 0; k <= n; ++k) {
        // Column k holds the image of basis vector v_k.
        H.at(k, k) = Scalar(Rational(long(n) - 2 * long(k)));
        if (k >= 1) E.at(k - 1, k) = Scalar(Rational(long(n) - long(k) + 1));
        if (k + 1 <= n) F.at(k + 1, k) = Scalar(Rational(long(k) + 1));
    }
    return Representation{builtin(Builtin::Sl2).alphabet,
                          {std::move(E), std::move(F), std::move(H)}, dim};
}

ExactMatrix weyl_operator(unsigned n) {
    ExactMatrix P(n + 1);
    for (unsigned k = 0; k <= n; ++k) P.at(n - k, k) = Scalar(1);
    return P;
}

ExactMatrix eval(const Poly& p, const Representation& rep) {
    ExactMatrix out(rep.dim);
    for (const auto& [w, c] : p.terms()) {
        ExactMatrix factor = ExactMatrix::identity(rep.dim);
        for (unsigned g : w) {
            if (g >= rep.images.size())
                throw Error("eval: no matrix assigned to generator index " +
                            std::to_string(g));
            factor = factor * rep.images[g];
        }
        out = out + factor * c;
    }
    return out;
}

Representation induced_rep(InducedRep which, unsigned n) {
    Representation sl2 = sl2_irrep(n);
    if (which == InducedRep::So3) {
        const Hom& hom = builtin_hom(BuiltinHom::So3ToSl2);
        Representation out{hom.source.alphabet, {}, sl2.dim};
        for (unsigned g = 0; g < 3; ++g)
            out.images.push_back(eval(hom.images.at(g), sl2));
        return out;
    }
    // Everything else lives inside the extended sl2 representation, where the
    // group generator acts by the basis reversal.
    Representation ext{builtin(Builtin::Sl2Z2).alphabet, sl2.images, sl2.dim};
    ext.images.push_back(weyl_operator(n));
    switch (which) {
        case InducedRep::Sl2Z2:
            return ext;
        case InducedRep::Acsa: {
            const Hom& hom = builtin_hom(BuiltinHom::AcsaToSl2Z2);
            Representation out{hom.source.alphabet, {}, ext.dim};
            for (unsigned g = 0; g < 3; ++g)
                out.images.push_back(eval(hom.images.at(g), ext));
            return out;
        }
        case InducedRep::AcsaZ2: {
            const Hom& hom = builtin_hom(BuiltinHom::AcsaZ2ToSl2Z2);
            Representation out{hom.source.alphabet, {}, ext.dim};
            for (unsigned g = 0; g < 4; ++g)
                out.images.push_back(eval(hom.images.at(g), ext));
            return out;
        }
        case InducedRep::RacahImages: {
            const Hom& hom = builtin_hom(BuiltinHom::RacahToSl2);
            Representation out{builtin(Builtin::Racah).alphabet, {}, ext.dim};
            ExactMatrix a = eval(hom.images.at(0), sl2);
            ExactMatrix b = eval(hom.images.at(1), sl2);
            ExactMatrix delta = (a * b - b * a) * Scalar(Rational(1, 2));
            out.images = {std::move(a), std::move(b), eval(hom.images.at(2), sl2),
                          std::move(delta)};
            return out;
        }
        default:
            throw Error("unknown induced representation");
    }
}

namespace {

RepCheck check_zero(std::string label, ExactMatrix residual) {
    bool pass = residual.is_zero();
    return RepCheck{std::move(label), std::move(residual), pass};
}

} // namespace

RepReport verify_rep(const RewriteSystem& system, const Representation& rep) {
    if (system.alphabet() != rep.alphabet)
        throw Error("verify_rep: the representation does not cover the "
                    "system's alphabet");
    std::vector<RepCheck> checks;
    for (const auto& rule : system.rules()) {
        Poly relation = Poly::monomial(rule.lhs) - rule.rhs;
        checks.push_back(check_zero(
            to_string(rule.lhs, system.alphabet()) + " -> " +
                to_string(rule.rhs, system.alphabet()),
            eval(relation, rep)));
    }
    bool pass = true;
    for (const auto& c : checks) pass = pass && c.pass;
    return RepReport{"rep-check dim " + std::to_string(rep.dim), std::move(checks),
                     pass};
}

RepReport verify_racah_rep(const Representation& rep) {
    const Presentation& racah = builtin(Builtin::Racah);
    if (rep.alphabet != racah.alphabet)
        throw Error("verify_racah_rep: not a representation of the racah "
                    "presentation");
    const RacahData& data = racah_data();
    std::vector<RepCheck> checks;
    for (const auto& rel : racah.relations)
        checks.push_back(
            check_zero(to_string(rel, racah.alphabet) + " -> 0", eval(rel, rep)));
    checks.push_back(check_zero("alpha -> 0", eval(data.alpha, rep)));
    checks.push_back(check_zero("beta -> 0", eval(data.beta, rep)));
    checks.push_back(check_zero("gamma -> 0", eval(data.gamma, rep)));
    bool pass = true;
    for (const auto& c : checks) pass = pass && c.pass;
    return RepReport{"rep-check racah dim " + std::to_string(rep.dim),
                     std::move(checks), pass};
}

} // namespace fpalg
