#include "stackychow/chow_ring.hpp"

#include "stackychow/errors.hpp"
#include "stackychow/monomial_format.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace stackychow {

struct ChowRing::Builder
{
	std::shared_ptr<ChowRing> r = std::make_shared<ChowRing>();

	ChowRing &operator*() { return *r; }
	ChowRing *operator->() { return r.get(); }

	static void check_names(std::vector<Generator> const &gens)
	{
		std::set<std::string> seen;
		for (auto const &g : gens) {
			if (g.name.empty() || g.name == "t")
				throw DomainError("invalid generator name '" + g.name + "'");
			if (g.codim < 1)
				throw DomainError("generator '" + g.name + "' must have codimension >= 1");
			if (!seen.insert(g.name).second)
				throw DomainError("duplicate generator name '" + g.name + "'");
		}
	}
};

namespace {

void add_term(ClassPoly &p, Monomial const &m, Rat const &c)
{
	if (c.is_zero())
		return;
	auto [it, inserted] = p.try_emplace(m, c);
	if (!inserted) {
		it->second += c;
		if (it->second.is_zero())
			p.erase(it);
	}
}

Monomial padded(Monomial m, std::size_t n)
{
	m.resize(n, 0);
	return m;
}

ClassPoly padded(ClassPoly const &p, std::size_t n)
{
	ClassPoly out;
	for (auto const &[m, c] : p)
		out.emplace(padded(m, n), c);
	return out;
}

void require_same_ring(GradedClass const &a, GradedClass const &b)
{
	if (a.ring() != b.ring())
		throw DomainError("classes live in different rings");
}

} // namespace

// ---------------------------------------------------------------------------
// ChowRing

std::optional<std::size_t> ChowRing::generator_index(std::string_view name) const
{
	for (std::size_t i = 0; i < gens_.size(); ++i)
		if (gens_[i].name == name)
			return i;
	return std::nullopt;
}

bool ChowRing::descends_from(ChowRing const &other) const
{
	for (ChowRing const *r = this; r; r = r->base_.get())
		if (r == &other)
			return true;
	return false;
}

bool ChowRing::has_degree_functional() const
{
	return base_ ? base_->has_degree_functional() : degree_.has_value();
}

int ChowRing::codim(Monomial const &m) const
{
	int d = 0;
	for (std::size_t i = 0; i < m.size(); ++i)
		d += m[i] * gens_[i].codim;
	return d;
}

bool ChowRing::truncated(Monomial const &m) const
{
	for (auto const &[prefix, max_codim] : truncations_) {
		int d = 0;
		for (std::size_t i = 0; i < prefix; ++i)
			d += m[i] * gens_[i].codim;
		if (d > max_codim)
			return true;
	}
	return false;
}

ClassPoly ChowRing::normal_form(ClassPoly p) const
{
	std::vector<std::size_t> order(relations_.size());
	std::iota(order.begin(), order.end(), 0);
	return normal_form(std::move(p), order);
}

ClassPoly ChowRing::normal_form(ClassPoly p, std::vector<std::size_t> const &relation_order) const
{
	// Each rewrite lowers the exponent of its generator and touches only
	// earlier generators, so the reverse-lexicographic exponent order
	// decreases and the loop terminates for any relation order.
	for (bool changed = true; changed;) {
		changed = false;
		ClassPoly next;
		for (auto const &[m, c] : p) {
			if (m.size() != gens_.size())
				throw DomainError("monomial arity does not match the ring");
			if (truncated(m))
				continue;
			Relation const *rule = nullptr;
			for (std::size_t k : relation_order) {
				auto const &rel = relations_.at(k);
				if (m[rel.generator] >= rel.power) {
					rule = &rel;
					break;
				}
			}
			if (!rule) {
				add_term(next, m, c);
				continue;
			}
			changed = true;
			Monomial rest = m;
			rest[rule->generator] -= rule->power;
			for (auto const &[rm, rc] : rule->rhs) {
				Monomial prod = rest;
				for (std::size_t i = 0; i < prod.size(); ++i)
					prod[i] += rm[i];
				if (!truncated(prod))
					add_term(next, prod, c * rc);
			}
		}
		p = std::move(next);
	}
	return p;
}

std::string ChowRing::format(ClassPoly const &p) const
{
	std::vector<std::pair<Monomial, Rat>> ordered(p.begin(), p.end());
	std::stable_sort(ordered.begin(), ordered.end(), [&](auto const &a, auto const &b) {
		int ca = codim(a.first), cb = codim(b.first);
		if (ca != cb)
			return ca > cb;
		return a.first > b.first;
	});
	std::vector<std::pair<Rat, FactorList>> rows;
	for (auto const &[m, c] : ordered) {
		FactorList f;
		for (std::size_t i = 0; i < m.size(); ++i)
			f.emplace_back(gens_[i].name, m[i]);
		rows.emplace_back(c, std::move(f));
	}
	return format_polynomial(rows);
}

std::optional<Rat> ChowRing::leaf_degree(ClassPoly const &p) const
{
	if (!degree_)
		return std::nullopt;
	Rat total(0);
	for (auto const &[m, c] : p) {
		if (codim(m) != dim_)
			continue;
		auto it = degree_->find(m);
		if (it != degree_->end())
			total += c * it->second;
	}
	return total;
}

// ---------------------------------------------------------------------------
// GradedClass

GradedClass::GradedClass(RingPtr ring, ClassPoly terms) : ring_(std::move(ring))
{
	if (!ring_)
		throw DomainError("class without a ring");
	terms_ = ring_->normal_form(std::move(terms));
}

GradedClass GradedClass::part(int k) const
{
	ClassPoly out;
	for (auto const &[m, c] : terms_)
		if (ring_->codim(m) == k)
			out.emplace(m, c);
	return GradedClass(ring_, std::move(out));
}

int GradedClass::max_codim() const
{
	int d = -1;
	for (auto const &[m, c] : terms_)
		d = std::max(d, ring_->codim(m));
	return d;
}

bool GradedClass::is_homogeneous(int k) const
{
	return std::all_of(terms_.begin(), terms_.end(),
	                   [&](auto const &t) { return ring_->codim(t.first) == k; });
}

Rat GradedClass::constant_term() const
{
	auto it = terms_.find(Monomial(ring_->num_generators(), 0));
	return it == terms_.end() ? Rat(0) : it->second;
}

GradedClass &GradedClass::operator+=(GradedClass const &o)
{
	require_same_ring(*this, o);
	for (auto const &[m, c] : o.terms_)
		add_term(terms_, m, c);
	return *this;
}

GradedClass &GradedClass::operator-=(GradedClass const &o)
{
	require_same_ring(*this, o);
	for (auto const &[m, c] : o.terms_)
		add_term(terms_, m, -c);
	return *this;
}

GradedClass operator*(GradedClass const &a, GradedClass const &b)
{
	require_same_ring(a, b);
	ClassPoly out;
	for (auto const &[ma, ca] : a.terms_)
		for (auto const &[mb, cb] : b.terms_) {
			Monomial m = ma;
			for (std::size_t i = 0; i < m.size(); ++i)
				m[i] += mb[i];
			add_term(out, m, ca * cb);
		}
	return GradedClass(a.ring_, std::move(out));
}

GradedClass operator*(Rat const &k, GradedClass const &a)
{
	ClassPoly out;
	for (auto const &[m, c] : a.terms_)
		add_term(out, m, k * c);
	return GradedClass(a.ring_, std::move(out));
}

GradedClass GradedClass::operator-() const
{
	return Rat(-1) * *this;
}

GradedClass GradedClass::pow(int e) const
{
	if (e < 0)
		throw DomainError("negative power of a Chow class");
	GradedClass r = one(ring_), b = *this;
	while (e > 0) {
		if (e & 1)
			r = r * b;
		b = b * b;
		e >>= 1;
	}
	return r;
}

bool operator==(GradedClass const &a, GradedClass const &b)
{
	return a.ring_ == b.ring_ && a.terms_ == b.terms_;
}

std::string GradedClass::to_string() const
{
	return ring_->format(terms_);
}

// ---------------------------------------------------------------------------
// BundleClass

BundleClass::BundleClass(int rank, GradedClass total_chern)
    : rank_(rank), total_(std::move(total_chern))
{
	if (rank_ < 0)
		throw DomainError("bundle rank must be nonnegative");
	if (total_.part(0) != one(total_.ring()))
		throw DomainError("total Chern class must start with 1");
	if (total_.max_codim() > rank_)
		throw DomainError("Chern classes vanish above the rank (c_i = 0 for i > " +
		                  std::to_string(rank_) + ")");
}

BundleClass BundleClass::trivial(RingPtr const &ring, int rank)
{
	return BundleClass(rank, one(ring));
}

BundleClass BundleClass::line(GradedClass const &c1)
{
	if (!c1.is_homogeneous(1))
		throw DomainError("first Chern class of a line bundle must have codimension 1");
	return BundleClass(1, one(c1.ring()) + c1);
}

GradedClass BundleClass::chern(int i) const
{
	if (i < 0 || i > rank_)
		return GradedClass(ring(), {});
	return total_.part(i);
}

// ---------------------------------------------------------------------------
// Rings

RingPtr stacky_point(std::int64_t order)
{
	if (order < 1)
		throw DomainError("stabilizer order must be positive");
	ChowRing::Builder b;
	b->degree_ = std::map<Monomial, Rat>{{Monomial{}, Rat(1, order)}};
	return b.r;
}

RingPtr point_ring()
{
	static RingPtr const pt = stacky_point(1);
	return pt;
}

RingPtr truncated_ring(std::vector<Generator> gens, int dimension,
                       std::optional<std::map<Monomial, Rat>> degree)
{
	if (dimension < 0)
		throw DomainError("ring dimension must be nonnegative");
	ChowRing::Builder::check_names(gens);
	ChowRing::Builder b;
	b->truncations_ = {{gens.size(), dimension}};
	b->gens_ = std::move(gens);
	b->dim_ = dimension;
	b->degree_ = std::move(degree);
	return b.r;
}

RingPtr weighted_projective_line(std::int64_t a, std::int64_t b, std::string gen)
{
	if (a < 1 || b < 1)
		throw DomainError("weights of a weighted projective line must be positive");
	return truncated_ring({{std::move(gen), 1}}, 1,
	                      std::map<Monomial, Rat>{{Monomial{1}, Rat(1, a * b)}});
}

RingPtr projective_bundle(BundleClass const &E, std::string gen)
{
	int e = E.rank();
	if (e < 1)
		throw DomainError("projective bundle of a rank 0 bundle");
	RingPtr const &base = E.ring();
	std::size_t n = base->num_generators() + 1;

	ChowRing::Builder b;
	b->gens_ = base->gens_;
	b->gens_.push_back({std::move(gen), 1});
	ChowRing::Builder::check_names(b->gens_);
	b->dim_ = base->dim_ + e - 1;
	b->base_ = base;
	b->bundle_ = E;
	for (auto const &rel : base->relations_)
		b->relations_.push_back({rel.generator, rel.power, padded(rel.rhs, n)});
	// zeta^e = -(c_1 zeta^(e-1) + ... + c_e)
	ClassPoly rhs;
	for (int i = 1; i <= e; ++i)
		for (auto const &[m, c] : E.chern(i).terms()) {
			Monomial mm = padded(m, n);
			mm.back() = e - i;
			add_term(rhs, mm, -c);
		}
	b->relations_.push_back({n - 1, e, std::move(rhs)});
	b->truncations_ = base->truncations_;
	b->truncations_.push_back({n, b->dim_});
	return b.r;
}

RingPtr projective_space(int n, std::string gen)
{
	if (n < 0)
		throw DomainError("projective space of negative dimension");
	return projective_bundle(BundleClass::trivial(point_ring(), n + 1), std::move(gen));
}

GradedClass generator(RingPtr const &ring, std::string_view name)
{
	auto idx = ring->generator_index(name);
	if (!idx)
		throw DomainError("ring has no generator '" + std::string(name) + "'");
	Monomial m(ring->num_generators(), 0);
	m[*idx] = 1;
	return GradedClass(ring, {{m, Rat(1)}});
}

GradedClass scalar(RingPtr const &ring, Rat const &c)
{
	return GradedClass(ring, {{Monomial(ring->num_generators(), 0), c}});
}

GradedClass one(RingPtr const &ring)
{
	return scalar(ring, 1);
}

GradedClass pullback(GradedClass const &alpha, RingPtr const &target)
{
	if (alpha.ring() == target)
		return alpha;
	if (!target->descends_from(*alpha.ring()))
		throw DomainError("no pullback: target ring is not built over the class's ring");
	return GradedClass(target, padded(alpha.terms(), target->num_generators()));
}

Rat integrate(GradedClass const &alpha)
{
	auto const &ring = alpha.ring();
	if (ring->base())
		return integrate(pushforward_pb(alpha));
	if (auto d = ring->leaf_degree(alpha.terms()))
		return *d;
	throw DomainError("ring has no degree functional");
}

// ---------------------------------------------------------------------------
// Bundles

GradedClass segre_total(BundleClass const &E)
{
	auto const &ring = E.ring();
	int d = ring->dimension();
	// s_0 = 1, s_k = -(c_1 s_{k-1} + ... + c_k s_0)
	std::vector<GradedClass> s{one(ring)};
	for (int k = 1; k <= d; ++k) {
		GradedClass sk(ring, {});
		for (int i = 1; i <= std::min(k, E.rank()); ++i)
			sk -= E.chern(i) * s[k - i];
		s.push_back(sk);
	}
	GradedClass total(ring, {});
	for (auto const &sk : s)
		total += sk;
	return total;
}

GradedClass segre(BundleClass const &E, int i)
{
	if (i < 0)
		return GradedClass(E.ring(), {});
	return segre_total(E).part(i);
}

BundleClass whitney_sum(BundleClass const &E, BundleClass const &F)
{
	return BundleClass(E.rank() + F.rank(), E.total_chern() * F.total_chern());
}

BundleClass dual_bundle(BundleClass const &E)
{
	GradedClass total(E.ring(), {});
	for (int i = 0; i <= E.rank(); ++i)
		total += Rat(i % 2 == 0 ? 1 : -1) * E.chern(i);
	return BundleClass(E.rank(), total);
}

BundleClass tensor_line(BundleClass const &E, GradedClass const &c1_line)
{
	if (!c1_line.is_homogeneous(1))
		throw DomainError("tensor_line expects a codimension-1 class");
	if (c1_line.ring() != E.ring())
		throw DomainError("line bundle and bundle live in different rings");
	// c(E (x) L) = sum_i c_i(E) (1 + l)^(e - i)
	GradedClass one_plus_l = one(E.ring()) + c1_line;
	GradedClass total(E.ring(), {});
	for (int i = 0; i <= E.rank(); ++i)
		total += E.chern(i) * one_plus_l.pow(E.rank() - i);
	return BundleClass(E.rank(), total);
}

GradedClass c_top(BundleClass const &E)
{
	return E.chern(E.rank());
}

// ---------------------------------------------------------------------------
// Projective bundle structure

namespace {

ChowRing const &bundle_ring_of(GradedClass const &alpha)
{
	if (!alpha.ring()->base())
		throw DomainError("class does not live on a projective bundle");
	return *alpha.ring();
}

} // namespace

std::vector<GradedClass> theta_decompose(GradedClass const &alpha)
{
	ChowRing const &ring = bundle_ring_of(alpha);
	RingPtr const &base = ring.base();
	int e = ring.bundle()->rank();
	std::size_t nb = base->num_generators();
	std::vector<ClassPoly> parts(e);
	for (auto const &[m, c] : alpha.terms()) {
		int k = m.back(); // normal form guarantees k < e
		parts[k].emplace(Monomial(m.begin(), m.begin() + static_cast<std::ptrdiff_t>(nb)), c);
	}
	std::vector<GradedClass> out;
	for (auto &p : parts)
		out.emplace_back(base, std::move(p));
	return out;
}

GradedClass theta_reassemble(RingPtr const &ring, std::vector<GradedClass> const &parts)
{
	if (!ring->base())
		throw DomainError("theta_reassemble needs a projective bundle ring");
	if (static_cast<int>(parts.size()) != ring->bundle()->rank())
		throw DomainError("theta_reassemble needs one base class per power of zeta");
	GradedClass zeta = generator(ring, ring->generators().back().name);
	GradedClass total(ring, {});
	for (std::size_t i = 0; i < parts.size(); ++i)
		total += zeta.pow(static_cast<int>(i)) * pullback(parts[i], ring);
	return total;
}

GradedClass pushforward_pb(GradedClass const &alpha)
{
	ChowRing const &ring = bundle_ring_of(alpha);
	// p_*(zeta^i beta) = s_{i-e+1}(E) beta vanishes for i < e - 1 and is beta
	// for i = e - 1; normal forms have no higher powers of zeta.
	return theta_decompose(alpha).at(ring.bundle()->rank() - 1);
}

} // namespace stackychow
