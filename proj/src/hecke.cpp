#include "gamma1/hecke.hpp"

#include <algorithm>
#include <array>
#include <memory>
#include <mutex>
#include <set>
#include <sstream>
#include <stdexcept>

namespace gamma1 {

namespace {

void add_to(HeckeElem::Map& m, const ExtAffElem& w, const Scalar& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = m.try_emplace(w, c);
    if (inserted) return;
    it->second += c;
    if (it->second.is_zero()) m.erase(it);
}

Scalar Q() { return Scalar::v_pow(-1) - Scalar::v_pow(1); }

ExtAffElem perm_elem(const std::vector<int>& c) {
    return ExtAffElem::make(std::vector<int>(c.size(), 0), c);
}

bool nondecreasing_in_blocks(const LeviDatum& L, const std::vector<int>& mu) {
    for (const auto& blk : L.blocks())
        for (std::size_t j = 0; j + 1 < blk.size(); ++j)
            if (mu[static_cast<std::size_t>(blk[j])] > mu[static_cast<std::size_t>(blk[j + 1])]) return false;
    return true;
}

}  // namespace

// ---------------------------------------------------------------- HeckeElem

HeckeElem::HeckeElem(LeviDatum levi, const ExtAffElem& w, Scalar c) : levi_(std::move(levi)) { add(w, c); }

Scalar HeckeElem::coeff(const ExtAffElem& w) const {
    auto it = coeffs_.find(w);
    return it == coeffs_.end() ? Scalar() : it->second;
}

std::vector<ExtAffElem> HeckeElem::support() const {
    std::vector<ExtAffElem> out;
    out.reserve(coeffs_.size());
    for (const auto& [w, c] : coeffs_) out.push_back(w);
    return out;
}

void HeckeElem::add(const ExtAffElem& w, const Scalar& c) { add_to(coeffs_, w, c); }

HeckeElem HeckeElem::operator-() const {
    HeckeElem r = *this;
    for (auto& [w, c] : r.coeffs_) c = -c;
    return r;
}

HeckeElem& HeckeElem::operator+=(const HeckeElem& o) {
    if (levi_ != o.levi_) throw std::invalid_argument("HeckeElem: context mismatch");
    for (const auto& [w, c] : o.coeffs_) add_to(coeffs_, w, c);
    return *this;
}

HeckeElem& HeckeElem::operator-=(const HeckeElem& o) { return *this += -o; }

HeckeElem operator*(const Scalar& c, const HeckeElem& h) {
    HeckeElem r(h.levi_);
    if (c.is_zero()) return r;
    for (const auto& [w, x] : h.coeffs_) add_to(r.coeffs_, w, c * x);
    return r;
}

HeckeElem HeckeElem::reduce_v(const Rational& q0) const {
    HeckeElem r(levi_);
    for (const auto& [w, c] : coeffs_) add_to(r.coeffs_, w, c.reduce_v(q0));
    return r;
}

std::string HeckeElem::str() const {
    if (coeffs_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [w, c] : coeffs_) {
        if (!first) os << " + ";
        first = false;
        os << "(" << c.str() << ")*T" << w.str();
    }
    return os.str();
}

// --------------------------------------------------------------- SymLaurent

std::vector<std::vector<int>> levi_orbit(const LeviDatum& L, const std::vector<int>& mu) {
    if (static_cast<int>(mu.size()) != L.rank()) throw std::invalid_argument("levi_orbit: rank mismatch");
    std::vector<std::vector<int>> out{mu};
    for (const auto& blk : L.blocks()) {
        std::vector<std::vector<int>> next;
        for (const auto& x : out) {
            std::vector<int> vals;
            for (int i : blk) vals.push_back(x[static_cast<std::size_t>(i)]);
            std::sort(vals.begin(), vals.end());
            do {
                std::vector<int> y = x;
                for (std::size_t j = 0; j < blk.size(); ++j) y[static_cast<std::size_t>(blk[j])] = vals[j];
                next.push_back(std::move(y));
            } while (std::next_permutation(vals.begin(), vals.end()));
        }
        out = std::move(next);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

SymLaurent::SymLaurent(LeviDatum group, Map terms) : group_(std::move(group)) {
    for (auto& [lam, c] : terms)
        if (!c.is_zero()) terms_.emplace(lam, std::move(c));
    check_invariant();
}

void SymLaurent::check_invariant() const {
    for (const auto& [lam, c] : terms_) {
        if (static_cast<int>(lam.size()) != group_.rank()) throw std::invalid_argument("SymLaurent: exponent of wrong rank");
        for (const auto& blk : group_.blocks())
            for (std::size_t j = 0; j + 1 < blk.size(); ++j) {
                std::vector<int> sw = lam;
                std::swap(sw[static_cast<std::size_t>(blk[j])], sw[static_cast<std::size_t>(blk[j + 1])]);
                auto it = terms_.find(sw);
                if (it == terms_.end() || it->second != c)
                    throw std::invalid_argument("SymLaurent: not invariant under the declared group " + group_.str());
            }
    }
}

SymLaurent SymLaurent::monomial_symmetric(const LeviDatum& group, const std::vector<int>& mu) {
    Map m;
    for (auto& lam : levi_orbit(group, mu)) m.emplace(std::move(lam), Scalar(1));
    return SymLaurent(group, std::move(m));
}

SymLaurent SymLaurent::constant(const LeviDatum& group, const Scalar& c) {
    Map m;
    m.emplace(std::vector<int>(static_cast<std::size_t>(group.rank()), 0), c);
    return SymLaurent(group, std::move(m));
}

SymLaurent operator+(const SymLaurent& a, const SymLaurent& b) {
    if (a.group_ != b.group_) throw std::invalid_argument("SymLaurent: group mismatch");
    SymLaurent::Map m = a.terms_;
    for (const auto& [lam, c] : b.terms_) m[lam] += c;
    return SymLaurent(a.group_, std::move(m));
}

SymLaurent operator*(const SymLaurent& a, const SymLaurent& b) {
    if (a.group_ != b.group_) throw std::invalid_argument("SymLaurent: group mismatch");
    SymLaurent::Map m;
    for (const auto& [la, ca] : a.terms_)
        for (const auto& [lb, cb] : b.terms_) {
            std::vector<int> l = la;
            for (std::size_t j = 0; j < l.size(); ++j) l[j] += lb[j];
            m[l] += ca * cb;
        }
    return SymLaurent(a.group_, std::move(m));
}

SymLaurent operator*(const Scalar& c, const SymLaurent& p) {
    SymLaurent::Map m;
    for (const auto& [l, x] : p.terms_) m.emplace(l, c * x);
    return SymLaurent(p.group_, std::move(m));
}

SymLaurent SymLaurent::reduce_v(const Rational& q0) const {
    Map m;
    for (const auto& [l, x] : terms_) m.emplace(l, x.reduce_v(q0));
    return SymLaurent(group_, std::move(m));
}

std::string SymLaurent::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [lam, c] = *it;
        if (!first) os << " + ";
        first = false;
        std::ostringstream mono;
        bool any = false;
        for (std::size_t j = 0; j < lam.size(); ++j) {
            if (lam[j] == 0) continue;
            if (any) mono << "*";
            any = true;
            mono << "x" << j + 1;
            if (lam[j] != 1) mono << "^" << lam[j];
        }
        if (!any) {
            os << c.str();
        } else if (c == Scalar(1)) {
            os << mono.str();
        } else {
            os << "(" << c.str() << ")*" << mono.str();
        }
    }
    return os.str();
}

Scalar eval_central(const SymLaurent& p, const std::vector<Scalar>& eta) {
    if (static_cast<int>(eta.size()) != p.group().rank()) throw std::invalid_argument("eval_central: eta has wrong length");
    for (const auto& e : eta)
        if (e.is_zero()) throw std::invalid_argument("eval_central: eta has a zero entry");
    Scalar acc;
    for (const auto& [lam, c] : p.terms()) {
        Scalar t = c;
        for (std::size_t j = 0; j < lam.size(); ++j)
            if (lam[j] != 0) t *= eta[j].pow(lam[j]);
        acc += t;
    }
    return acc;
}

SymLaurent base_change(const SymLaurent& p, int r) {
    if (r < 1) throw std::invalid_argument("base_change: r must be positive");
    SymLaurent::Map m;
    for (const auto& [lam, c] : p.terms()) {
        std::vector<int> l = lam;
        for (int& x : l) x *= r;
        m.emplace(std::move(l), c);
    }
    return SymLaurent(p.group(), std::move(m));
}

int two_rho_pairing(const std::vector<int>& lambda) {
    int d = static_cast<int>(lambda.size());
    int s = 0;
    for (int j = 1; j <= d; ++j) s += (d + 1 - 2 * j) * lambda[static_cast<std::size_t>(j - 1)];
    return s;
}

std::optional<std::vector<Cyclo>> as_polynomial_in_Q(const Scalar& s) {
    std::vector<Cyclo> out;
    Scalar rest = s;
    while (!rest.is_zero()) {
        int e = rest.min_exponent();
        if (e > 0) return std::nullopt;
        auto k = static_cast<std::size_t>(-e);
        if (out.size() <= k) out.resize(k + 1);
        Cyclo a = rest.coeff(e);
        out[k] = a;
        rest -= Scalar(a) * Q().pow(static_cast<long>(k));
    }
    return out;
}

Scalar substitute_q(const Scalar& s, const Scalar& q) {
    if (!s.all_exponents_even()) throw std::domain_error("substitute_q: odd power of v in " + s.str());
    Scalar acc;
    for (const auto& [e, c] : s.terms()) acc += Scalar(c) * q.pow(e / 2);
    return acc;
}

// ------------------------------------------------------------- HeckeAlgebra

HeckeAlgebra::HeckeAlgebra(int d) : W_(d) {}

HeckeAlgebra::HeckeAlgebra(LeviDatum levi) : W_(std::move(levi)) {}

void HeckeAlgebra::check(const HeckeElem& h) const {
    if (h.levi() != levi()) throw std::invalid_argument("HeckeAlgebra: element from a different algebra");
}

HeckeElem HeckeAlgebra::one() const { return T(ExtAffElem::identity(W_.rank())); }

HeckeElem HeckeAlgebra::T(const ExtAffElem& w) const {
    if (!W_.contains(w)) throw std::invalid_argument("T: " + w.str() + " not in the group");
    return HeckeElem(levi(), w);
}

HeckeElem HeckeAlgebra::T_normalized(const ExtAffElem& w) const {
    return HeckeElem(levi(), w, Scalar::v_pow(-W_.length(w)));
}

HeckeElem HeckeAlgebra::T_inverse(const ExtAffElem& w) const {
    // w = s_1 ... s_k omega, so T_w^-1 = T_{omega^-1} T_{s_k}^-1 ... T_{s_1}^-1
    OmegaDecomp dec = W_.omega_decompose(w);
    HeckeElem h = T(inverse(dec.omega));
    Scalar qinv = Scalar::q().inverse();
    Scalar c0 = qinv - Scalar(1);
    for (auto it = dec.word.rbegin(); it != dec.word.rend(); ++it)
        h = qinv * right_mul_simple(h, *it) + c0 * h;
    return h;
}

HeckeElem HeckeAlgebra::T_normalized_inverse(const ExtAffElem& w) const {
    return Scalar::v_pow(W_.length(w)) * T_inverse(w);
}

void HeckeAlgebra::left_mul_simple_into(int s, const ExtAffElem& y, const Scalar& c, HeckeElem::Map& out) const {
    ExtAffElem sy = gamma1::multiply(W_.simple(s), y);
    if (!W_.is_left_descent(s, y)) {
        add_to(out, sy, c);
    } else {
        add_to(out, y, (Scalar::q() - Scalar(1)) * c);
        add_to(out, sy, Scalar::q() * c);
    }
}

void HeckeAlgebra::right_mul_simple_into(const ExtAffElem& y, int s, const Scalar& c, HeckeElem::Map& out) const {
    ExtAffElem ys = gamma1::multiply(y, W_.simple(s));
    if (!W_.is_right_descent(y, s)) {
        add_to(out, ys, c);
    } else {
        add_to(out, y, (Scalar::q() - Scalar(1)) * c);
        add_to(out, ys, Scalar::q() * c);
    }
}

HeckeElem HeckeAlgebra::left_mul_simple(int s, const HeckeElem& h) const {
    check(h);
    HeckeElem::Map out;
    for (const auto& [y, c] : h.coeffs()) left_mul_simple_into(s, y, c, out);
    HeckeElem r(levi());
    for (auto& [w, c] : out) r.add(w, c);
    return r;
}

HeckeElem HeckeAlgebra::right_mul_simple(const HeckeElem& h, int s) const {
    check(h);
    HeckeElem::Map out;
    for (const auto& [y, c] : h.coeffs()) right_mul_simple_into(y, s, c, out);
    HeckeElem r(levi());
    for (auto& [w, c] : out) r.add(w, c);
    return r;
}

HeckeElem HeckeAlgebra::right_mul_omega(const HeckeElem& h, const ExtAffElem& omega) const {
    HeckeElem r(levi());
    for (const auto& [y, c] : h.coeffs()) r.add(gamma1::multiply(y, omega), c);
    return r;
}

HeckeElem HeckeAlgebra::right_mul_normalized(const HeckeElem& h, int s, int eps) const {
    // T~_s = v^-1 T_s and T~_s^-1 = T~_s + Q
    HeckeElem r = Scalar::v_pow(-1) * right_mul_simple(h, s);
    if (eps < 0) r += Q() * h;
    return r;
}

HeckeElem HeckeAlgebra::multiply(const HeckeElem& a, const HeckeElem& b) const {
    check(a);
    check(b);
    HeckeElem result(levi());
    if (a.coeffs().size() <= b.coeffs().size()) {
        for (const auto& [x, cx] : a.coeffs()) {
            OmegaDecomp dec = W_.omega_decompose(x);
            HeckeElem tmp(levi());
            for (const auto& [y, cy] : b.coeffs()) tmp.add(gamma1::multiply(dec.omega, y), cy);
            for (auto it = dec.word.rbegin(); it != dec.word.rend(); ++it) tmp = left_mul_simple(*it, tmp);
            result += cx * tmp;
        }
    } else {
        for (const auto& [y, cy] : b.coeffs()) {
            OmegaDecomp dec = W_.omega_decompose(y);
            HeckeElem tmp = a;
            for (int s : dec.word) tmp = right_mul_simple(tmp, s);
            result += cy * right_mul_omega(tmp, dec.omega);
        }
    }
    return result;
}

std::vector<int> HeckeAlgebra::chamber_generator(const std::vector<int>& c) const {
    ExtAffElem cw = perm_elem(c);
    if (!W_.contains(cw)) throw std::invalid_argument("chamber permutation does not preserve the blocks");
    std::vector<int> g(static_cast<std::size_t>(W_.rank()));
    for (int i = 0; i < W_.rank(); ++i) g[static_cast<std::size_t>(i)] = levi().position(i) - 1;
    return permute(cw, g);
}

bool HeckeAlgebra::is_chamber_dominant(const std::vector<int>& lambda, const std::vector<int>& c) const {
    ExtAffElem cw = perm_elem(c);
    if (!W_.contains(cw)) throw std::invalid_argument("chamber permutation does not preserve the blocks");
    return nondecreasing_in_blocks(levi(), permute(inverse(cw), lambda));
}

HeckeElem HeckeAlgebra::theta_with_shift(const std::vector<int>& lambda, const std::vector<int>& c, int extra) const {
    if (static_cast<int>(lambda.size()) != W_.rank()) throw std::invalid_argument("theta: rank mismatch");
    std::vector<int> g = chamber_generator(c);
    std::vector<int> mu = permute(inverse(perm_elem(c)), lambda);
    int N = 0;
    for (const auto& blk : levi().blocks())
        for (std::size_t j = 0; j + 1 < blk.size(); ++j)
            N = std::max(N, mu[static_cast<std::size_t>(blk[j])] - mu[static_cast<std::size_t>(blk[j + 1])]);
    N += extra;
    std::vector<int> l2(g.size()), l1(g.size());
    for (std::size_t j = 0; j < g.size(); ++j) {
        l2[j] = N * g[j];
        l1[j] = lambda[j] + l2[j];
    }
    if (!is_chamber_dominant(l1, c) || !is_chamber_dominant(l2, c))
        throw std::logic_error("theta: decomposition is not chamber-dominant");
    return multiply(T_normalized(ExtAffElem::translation(l1)), T_normalized_inverse(ExtAffElem::translation(l2)));
}

HeckeElem HeckeAlgebra::theta(const std::vector<int>& lambda, const std::vector<int>& c) const {
    HeckeElem a = theta_with_shift(lambda, c, 0);
    HeckeElem b = theta_with_shift(lambda, c, 1);
    if (a != b) throw std::logic_error("theta: value depends on the dominant decomposition");
    return a;
}

std::vector<int> HeckeAlgebra::walk_signs(const std::vector<int>& c, const std::vector<int>& word) const {
    ExtAffElem cw = perm_elem(c);
    if (!W_.contains(cw)) throw std::invalid_argument("chamber permutation does not preserve the blocks");
    ExtAffElem cinv = inverse(cw);
    std::vector<int> signs;
    ExtAffElem x = ExtAffElem::identity(W_.rank());
    for (int s : word) {
        const Wall& h = W_.walls().at(static_cast<std::size_t>(s));
        // x maps the wall p_a - p_b = k to y_{u(a)} - y_{u(b)} = k + mu_{u(a)} - mu_{u(b)}
        int a = x.perm[static_cast<std::size_t>(h.a)];
        int b = x.perm[static_cast<std::size_t>(h.b)];
        int k = h.k + x.lambda[static_cast<std::size_t>(a)] - x.lambda[static_cast<std::size_t>(b)];
        if (a > b) {
            std::swap(a, b);
            k = -k;
        }
        // y_a - y_b on the chamber opposite to C
        int pa = levi().position(cinv.perm[static_cast<std::size_t>(a)]);
        int pb = levi().position(cinv.perm[static_cast<std::size_t>(b)]);
        int far_side = pa > pb ? -1 : 1;
        signs.push_back(W_.side(x, Wall{a, b, k}) == far_side ? 1 : -1);
        x = gamma1::multiply(x, W_.simple(s));
    }
    return signs;
}

HeckeElem HeckeAlgebra::theta_walk(const std::vector<int>& lambda, const std::vector<int>& c,
                                   const std::vector<int>& word, const ExtAffElem& omega) const {
    if (W_.compose(word, omega) != ExtAffElem::translation(lambda))
        throw std::invalid_argument("theta_walk: expression does not evaluate to the translation");
    std::vector<int> eps = walk_signs(c, word);
    HeckeElem h = one();
    for (std::size_t i = 0; i < word.size(); ++i) h = right_mul_normalized(h, word[i], eps[i]);
    return right_mul_omega(h, omega);
}

HeckeElem HeckeAlgebra::theta_fast(const std::vector<int>& lambda, const std::vector<int>& c) const {
    OmegaDecomp dec = W_.omega_decompose(ExtAffElem::translation(lambda));
    return theta_walk(lambda, c, dec.word, dec.omega);
}

HeckeElem HeckeAlgebra::z_mu_chamber(const std::vector<int>& mu, const std::vector<int>& c) const {
    if (static_cast<int>(mu.size()) != W_.rank()) throw std::invalid_argument("z_mu: rank mismatch");
    for (const auto& blk : levi().blocks()) {
        for (std::size_t j = 0; j + 1 < blk.size(); ++j)
            if (mu[static_cast<std::size_t>(blk[j])] < mu[static_cast<std::size_t>(blk[j + 1])])
                throw std::invalid_argument("z_mu: coweight is not dominant");
        if (mu[static_cast<std::size_t>(blk.front())] - mu[static_cast<std::size_t>(blk.back())] > 1)
            throw std::invalid_argument("z_mu: coweight is not minuscule");
    }
    HeckeElem z(levi());
    for (const auto& lam : levi_orbit(levi(), mu)) z += theta_fast(lam, c);
    return z;
}

HeckeElem HeckeAlgebra::z_mu(const std::vector<int>& mu) const {
    std::vector<int> id(mu.size());
    for (std::size_t j = 0; j < id.size(); ++j) id[j] = static_cast<int>(j);
    return z_mu_chamber(mu, id);
}

HeckeElem HeckeAlgebra::k_mu(const std::vector<int>& mu) const {
    return Scalar::v_pow(W_.two_rho_pairing(mu)) * z_mu(mu);
}

bool HeckeAlgebra::is_central(const HeckeElem& h, std::optional<Rational> q0) const {
    check(h);
    auto same = [&](const HeckeElem& a, const HeckeElem& b) {
        return q0 ? a.reduce_v(*q0) == b.reduce_v(*q0) : a == b;
    };
    for (int s = 0; s < W_.num_simple(); ++s)
        if (!same(left_mul_simple(s, h), right_mul_simple(h, s))) return false;
    for (std::size_t k = 0; k < levi().blocks().size(); ++k) {
        ExtAffElem t = W_.tau(static_cast<int>(k));
        HeckeElem left(levi());
        for (const auto& [y, c] : h.coeffs()) left.add(gamma1::multiply(t, y), c);
        if (!same(left, right_mul_omega(h, t))) return false;
    }
    return true;
}

SymLaurent HeckeAlgebra::bernstein_coeffs(const HeckeElem& h, std::optional<Rational> q0) const {
    check(h);
    std::vector<int> id(static_cast<std::size_t>(W_.rank()));
    for (std::size_t j = 0; j < id.size(); ++j) id[j] = static_cast<int>(j);
    HeckeElem rest = q0 ? h.reduce_v(*q0) : h;
    SymLaurent::Map out;
    // Theta_lambda = T~_{t_lambda} + (Bruhat-lower terms), so a maximal-length
    // term of a combination of Thetas is always a translation.
    for (int guard = 0; !rest.is_zero(); ++guard) {
        if (guard > 100000) throw std::domain_error("bernstein_coeffs: expansion did not terminate");
        const ExtAffElem* top = nullptr;
        int top_len = -1;
        for (const auto& [w, c] : rest.coeffs()) {
            int l = W_.length(w);
            if (l > top_len) {
                top_len = l;
                top = &w;
            }
        }
        if (!top->is_translation())
            throw std::domain_error("bernstein_coeffs: leading term " + top->str() + " is not a translation");
        std::vector<int> lam = top->lambda_vec();
        Scalar c = Scalar::v_pow(top_len) * rest.coeff(*top);
        if (q0) c = c.reduce_v(*q0);
        HeckeElem sub = c * theta_fast(lam, id);
        rest -= q0 ? sub.reduce_v(*q0) : sub;
        out[lam] += c;
    }
    for (auto it = out.begin(); it != out.end();) it = it->second.is_zero() ? out.erase(it) : std::next(it);
    return SymLaurent(levi(), std::move(out));
}

const HeckeElem& kottwitz_mu0(int d) {
    if (d < 1 || d > kMaxRank) throw std::invalid_argument("kottwitz_mu0: rank out of range");
    static std::array<std::once_flag, kMaxRank + 1> once;
    static std::array<std::unique_ptr<HeckeElem>, kMaxRank + 1> cache;
    auto ud = static_cast<std::size_t>(d);
    std::call_once(once[ud], [&] {
        std::vector<int> mu0(ud, 0);
        mu0[0] = 1;
        cache[ud] = std::make_unique<HeckeElem>(HeckeAlgebra(d).k_mu(mu0));
    });
    return *cache[ud];
}

}  // namespace gamma1
