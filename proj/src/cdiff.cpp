#include "jetvar/cdiff.hpp"

#include <algorithm>
#include <stdexcept>

namespace jetvar {

CDiffOp::CDiffOp(const JetSpaceConfig& cfg, int rows, int cols) : cfg_(cfg), rows_(rows), cols_(cols) {
    if (rows < 1 || cols < 1) throw std::invalid_argument("operator shape must be positive");
    entries_.resize(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols));
}

CDiffOp CDiffOp::identity(const JetSpaceConfig& cfg, int k) {
    CDiffOp op(cfg, k, k);
    for (int i = 0; i < k; ++i) op.add_to_entry(i, i, MultiIndex(cfg.n), JetPoly::constant(Rational(1)));
    return op;
}

CDiffOp CDiffOp::scalar(const JetSpaceConfig& cfg, JetPoly f) {
    CDiffOp op(cfg, 1, 1);
    op.add_to_entry(0, 0, MultiIndex(cfg.n), f);
    return op;
}

CDiffOp CDiffOp::total_derivative(const JetSpaceConfig& cfg, int lambda) {
    return total_derivative(cfg, MultiIndex(cfg.n).raised(lambda));
}

CDiffOp CDiffOp::total_derivative(const JetSpaceConfig& cfg, const MultiIndex& sigma) {
    CDiffOp op(cfg, 1, 1);
    op.add_to_entry(0, 0, sigma, JetPoly::constant(Rational(1)));
    return op;
}

const CDiffOp::Entry& CDiffOp::entry(int r, int c) const {
    if (r < 0 || r >= rows_ || c < 0 || c >= cols_) throw std::out_of_range("operator entry out of range");
    return entries_[static_cast<std::size_t>(r) * static_cast<std::size_t>(cols_) + static_cast<std::size_t>(c)];
}

void CDiffOp::add_to_entry(int r, int c, const MultiIndex& sigma, const JetPoly& coeff) {
    if (r < 0 || r >= rows_ || c < 0 || c >= cols_) throw std::out_of_range("operator entry out of range");
    if (sigma.dim() != cfg_.n) throw std::invalid_argument("multi-index dimension does not match base");
    if (coeff.is_zero()) return;
    Entry& e = entries_[static_cast<std::size_t>(r) * static_cast<std::size_t>(cols_) + static_cast<std::size_t>(c)];
    auto [it, inserted] = e.emplace(sigma, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second.is_zero()) e.erase(it);
    }
}

bool CDiffOp::is_zero() const {
    for (const Entry& e : entries_)
        if (!e.empty()) return false;
    return true;
}

int CDiffOp::order() const {
    int r = 0;
    for (const Entry& e : entries_)
        for (const auto& [sigma, c] : e) r = std::max(r, sigma.order() + c.order());
    return r;
}

int CDiffOp::derivative_order() const {
    int r = 0;
    for (const Entry& e : entries_)
        for (const auto& [sigma, c] : e) r = std::max(r, sigma.order());
    return r;
}

CDiffOp CDiffOp::operator-() const {
    CDiffOp op = *this;
    for (Entry& e : op.entries_)
        for (auto& [sigma, c] : e) c = -c;
    return op;
}

CDiffOp& CDiffOp::operator+=(const CDiffOp& o) {
    if (rows_ != o.rows_ || cols_ != o.cols_ || !(cfg_ == o.cfg_))
        throw std::invalid_argument("operator shape mismatch");
    for (int r = 0; r < rows_; ++r)
        for (int c = 0; c < cols_; ++c)
            for (const auto& [sigma, coeff] : o.entry(r, c)) add_to_entry(r, c, sigma, coeff);
    return *this;
}

CDiffOp& CDiffOp::operator-=(const CDiffOp& o) { return *this += -o; }

CDiffOp operator*(const Rational& q, const CDiffOp& op) {
    CDiffOp out(op.config(), op.rows(), op.cols());
    for (int r = 0; r < op.rows(); ++r)
        for (int c = 0; c < op.cols(); ++c)
            for (const auto& [sigma, coeff] : op.entry(r, c)) out.add_to_entry(r, c, sigma, q * coeff);
    return out;
}

bool CDiffOp::operator==(const CDiffOp& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && entries_ == o.entries_;
}

std::vector<JetPoly> CDiffOp::apply(const std::vector<JetPoly>& phi) const {
    if (static_cast<int>(phi.size()) != cols_) throw std::invalid_argument("argument length does not match columns");
    std::vector<JetPoly> out(static_cast<std::size_t>(rows_));
    for (int r = 0; r < rows_; ++r)
        for (int c = 0; c < cols_; ++c)
            for (const auto& [sigma, coeff] : entry(r, c))
                out[static_cast<std::size_t>(r)] += coeff * phi[static_cast<std::size_t>(c)].total_derivative(sigma);
    return out;
}

JetPoly CDiffOp::apply_scalar(const JetPoly& phi) const {
    if (rows_ != 1 || cols_ != 1) throw std::invalid_argument("apply_scalar needs a 1x1 operator");
    return apply({phi})[0];
}

CDiffOp compose(const CDiffOp& a, const CDiffOp& b) {
    if (a.cols() != b.rows() || !(a.config() == b.config()))
        throw std::invalid_argument("operator composition shape mismatch");
    CDiffOp out(a.config(), a.rows(), b.cols());
    for (int r = 0; r < a.rows(); ++r)
        for (int k = 0; k < a.cols(); ++k)
            for (const auto& [sigma, f] : a.entry(r, k))
                for (int c = 0; c < b.cols(); ++c)
                    for (const auto& [tau, g] : b.entry(k, c))
                        // f D_sigma . g D_tau = f sum_{rho <= sigma}
                        // choose(sigma,rho) (D_rho g) D_{(sigma-rho) tau}
                        for (const MultiIndex& rho : sub_multiindices(sigma)) {
                            JetPoly coeff = choose(sigma, rho) * (f * g.total_derivative(rho));
                            out.add_to_entry(r, c, union_of(difference(sigma, rho), tau), coeff);
                        }
    return out;
}

CDiffOp adjoint(const CDiffOp& op) {
    CDiffOp out(op.config(), op.cols(), op.rows());
    for (int r = 0; r < op.rows(); ++r)
        for (int c = 0; c < op.cols(); ++c)
            for (const auto& [sigma, coeff] : op.entry(r, c)) {
                // (-1)^{|sigma|} D_sigma . coeff, Leibniz-expanded.
                Rational sign = (sigma.order() % 2 == 0) ? Rational(1) : Rational(-1);
                for (const MultiIndex& rho : sub_multiindices(sigma)) {
                    JetPoly part = (sign * choose(sigma, rho)) * coeff.total_derivative(rho);
                    out.add_to_entry(c, r, difference(sigma, rho), part);
                }
            }
    return out;
}

CDiffOp linearization(const JetSpaceConfig& cfg, const std::vector<JetPoly>& F) {
    if (F.empty()) throw std::invalid_argument("linearization of an empty family");
    CDiffOp out(cfg, static_cast<int>(F.size()), cfg.m);
    for (int a = 0; a < static_cast<int>(F.size()); ++a)
        for (const JetCoord& c : F[static_cast<std::size_t>(a)].coordinates()) {
            if (!c.is_fibre()) continue;
            out.add_to_entry(a, c.fibre_index(), c.sigma(), F[static_cast<std::size_t>(a)].partial(c));
        }
    return out;
}

std::vector<JetPoly> euler_defect(const JetSpaceConfig& cfg, const JetPoly& f) {
    if (f.is_zero()) return std::vector<JetPoly>(static_cast<std::size_t>(cfg.m));
    std::vector<JetPoly> ones(1, JetPoly::constant(Rational(1)));
    return adjoint(linearization(cfg, {f})).apply(ones);
}

EvolutionaryField::EvolutionaryField(JetSpaceConfig c, std::vector<JetPoly> comps)
    : cfg(c), components(std::move(comps)) {
    if (static_cast<int>(components.size()) != cfg.m)
        throw std::invalid_argument("evolutionary field needs one component per fibre dimension");
}

JetPoly EvolutionaryField::apply(const JetPoly& f) const {
    JetPoly out;
    for (const JetCoord& c : f.coordinates()) {
        if (!c.is_fibre()) continue;
        out += f.partial(c) * components[static_cast<std::size_t>(c.fibre_index())].total_derivative(c.sigma());
    }
    return out;
}

Form evo_insert(const EvolutionaryField& phi, const Form& a) {
    if (!a.is_zero() && a.degree() < 1) throw std::invalid_argument("cannot contract a 0-form");
    Form out = Form::zero(a.config(), std::max(a.degree() - 1, 0));
    for (const auto& [w, c] : a.terms()) {
        for (std::size_t t = 0; t < w.size(); ++t) {
            if (!w[t].is_omega()) continue;  // evolutionary fields are vertical
            JetPoly pairing =
                phi.components[static_cast<std::size_t>(w[t].fibre_index())].total_derivative(w[t].sigma());
            JetPoly coeff = c * pairing;
            if (t % 2 == 1) coeff = -coeff;
            WedgeWord rest(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(t));
            rest.insert(rest.end(), w.begin() + static_cast<std::ptrdiff_t>(t) + 1, w.end());
            out.add_term(rest, coeff);
        }
    }
    return out;
}

Form nabla_apply(const Form& a, const std::vector<EvolutionaryField>& phis) {
    Form out = a;
    for (auto it = phis.rbegin(); it != phis.rend(); ++it) out = evo_insert(*it, out);
    return out;
}

FormOperator::FormOperator(Form a) : form_(std::move(a)) {
    if (form_.is_zero()) return;
    auto p = form_.homogeneous_contact_degree();
    if (!p) throw std::invalid_argument("operator form must be contact-degree homogeneous");
    arity_ = *p;
}

Form FormOperator::operator()(const std::vector<EvolutionaryField>& phis) const {
    if (static_cast<int>(phis.size()) != arity_) throw std::invalid_argument("operator arity mismatch");
    return nabla_apply(form_, phis);
}

GreenRemainder green_remainder(const CDiffOp& op, const std::vector<JetPoly>& p, const std::vector<JetPoly>& q) {
    std::vector<JetPoly> dp = op.apply(p);
    std::vector<JetPoly> aq = adjoint(op).apply(q);
    JetPoly g;
    for (std::size_t i = 0; i < dp.size(); ++i) g += q[i] * dp[i];
    for (std::size_t i = 0; i < aq.size(); ++i) g -= aq[i] * p[i];
    GreenRemainder out;
    out.remainder = g;
    out.euler_defect = euler_defect(op.config(), g);
    if (op.config().n == 1) out.primitive = divergence_primitive_1d(op.config(), g);
    return out;
}

std::optional<JetPoly> divergence_primitive_1d(const JetSpaceConfig& cfg, const JetPoly& g) {
    if (cfg.n != 1) throw std::invalid_argument("divergence primitive is constructed for n = 1 only");
    JetPoly rest = g;
    JetPoly w;
    while (!rest.is_base_only()) {
        int k = rest.order();
        if (k == 0) return std::nullopt;  // fibre-dependent but derivative-free: not a divergence
        // A divergence D_x W with order(W) = k-1 is affine in the top
        // coordinates u^i_(k); peel one layer per pass.
        JetPoly layer;
        for (int i = 0; i < cfg.m; ++i) {
            JetCoord top = JetCoord::fibre(i, MultiIndex(std::vector<int>{k}));
            JetPoly a = rest.partial(top);
            if (a.is_zero()) continue;
            if (!a.partial(top).is_zero()) return std::nullopt;  // not affine in the top coordinate
            if (a.order() >= k) return std::nullopt;
            JetCoord below = JetCoord::fibre(i, MultiIndex(std::vector<int>{k - 1}));
            layer += (a - layer.partial(below)).antiderivative(below);
        }
        w += layer;
        rest -= layer.total_derivative(0);
        // The top layer must be gone now; otherwise the mixed-partial
        // integrability condition failed and g is not a divergence.
        for (int i = 0; i < cfg.m; ++i)
            if (!rest.partial(JetCoord::fibre(i, MultiIndex(std::vector<int>{k}))).is_zero()) return std::nullopt;
    }
    w += rest.antiderivative(JetCoord::base(0));
    if (!(w.total_derivative(0) - g).is_zero()) return std::nullopt;
    return w;
}

}  // namespace jetvar
