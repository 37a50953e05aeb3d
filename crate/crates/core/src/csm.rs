//! The staircase class of a matroid, its coefficient formula, the
//! contraction-deletion machinery (deletion pullback, the distinguished
//! degree-one class, the contraction embedding, and the T/S/U/V flat
//! partition), CSM cycles by two independent routes, and verifiers for the
//! algebraic identities tying everything together.

use std::collections::BTreeMap;
use std::fmt;

use crate::chow::{self, ChainMonomial, ChowContext, ChowElement, Presentation};
use crate::error::{Error, Result};
use crate::fan::{
    balance_certificate, cap_by_degree, courant_divisor, flags_of_dim, modification_pullback,
    one_top, FlagCone, MinkowskiWeight, PLFunction,
};
use crate::matroid::{ElementMap, FlatLattice, Matroid};
use crate::subset::Subset;

/// `1 - sum_{rk(F) >= r} x_F` over all nonempty flats, the r-th staircase
/// factor in the all-flats presentation.
pub fn staircase_factor(lattice: &FlatLattice, r: usize) -> ChowElement {
    let mut out = ChowElement::one(Presentation::AllFlats);
    for (f, rank) in lattice.nonempty() {
        if rank >= r {
            out = out.add(&ChowElement::variable(Presentation::AllFlats, f).neg());
        }
    }
    out
}

/// The staircase class `prod_{r=1}^{rk(E)} (1 - sum_{rk(F) >= r} x_F)` in the
/// all-flats presentation, truncated to the top degree of the ring. Matroids
/// with loops have staircase class zero and never reach here (no Chow
/// context exists for them; callers short-circuit).
pub fn staircase(ctx: &ChowContext) -> ChowElement {
    let lattice = ctx.lattice();
    let rk = ctx.top_degree() + 1;
    let mut out = ChowElement::one(Presentation::AllFlats);
    for r in 1..=rk {
        out = out.mul(&staircase_factor(lattice, r), Some(ctx.top_degree()));
    }
    out
}

/// Fully expands the staircase product as a commutative polynomial over all
/// nonempty flats, dropping non-chain monomials and nothing else. This is the
/// independent oracle for the coefficient formula.
pub fn expand_staircase_bruteforce(m: &Matroid) -> Result<BTreeMap<ChainMonomial, i64>> {
    if m.has_loops() {
        return Err(Error::HasLoop);
    }
    let lattice = m.flats_lattice();
    let rk = m.full_rank();
    let mut out = ChowElement::one(Presentation::AllFlats);
    for r in 1..=rk {
        out = out.mul(&staircase_factor(&lattice, r), None);
    }
    Ok(out.terms().map(|(mo, c)| (mo.clone(), c)).collect())
}

/// The closed-form coefficient of a multiset chain in the staircase
/// expansion:
/// `(-1)^k (r_1)(r_2 - 1) ... (r_k - k + 1) / (m(1)! m(2)! ... m(rk)!)`.
pub fn coefficient_cf(m: &Matroid, chain: &ChainMonomial) -> i64 {
    let flats = chain.expanded();
    let k = flats.len();
    let mut numerator: i64 = 1;
    for (idx, &f) in flats.iter().enumerate() {
        numerator *= m.rank(f) as i64 - idx as i64;
        if numerator == 0 {
            return 0;
        }
    }
    let mut denominator: i64 = 1;
    for &(_, e) in chain.factors() {
        for t in 1..=e as i64 {
            denominator *= t;
        }
    }
    let sign = if k.is_multiple_of(2) { 1 } else { -1 };
    assert_eq!(
        numerator % denominator,
        0,
        "coefficient formula is not integral"
    );
    sign * (numerator / denominator)
}

/// The rational product form
/// `prod_{F in L} ((1 - sum_{F' ⊇ F} x_{F'}) / (1 - sum_{F' ⊋ F} x_{F'}))^{rk(F)}`,
/// with denominators inverted as geometric series truncated to the top
/// degree. Normalizes equal to the staircase class.
pub fn rational_product_form(ctx: &ChowContext) -> ChowElement {
    let lattice = ctx.lattice();
    let cap = Some(ctx.top_degree());
    let p = Presentation::AllFlats;
    let mut out = ChowElement::one(p);
    for (f, rank) in lattice.nonempty() {
        let strict_sum = ChowElement::from_terms(
            p,
            lattice
                .nonempty()
                .filter(|&(g, _)| f.is_proper_subset_of(g))
                .map(|(g, _)| (ChainMonomial::variable(g), 1i64)),
        );
        let numerator = ChowElement::one(p)
            .sub(&strict_sum)
            .sub(&ChowElement::variable(p, f));
        // (1 - s)^{-1} = 1 + s + s^2 + ... truncated.
        let mut inverse = ChowElement::one(p);
        let mut power = ChowElement::one(p);
        for _ in 0..ctx.top_degree() {
            power = power.mul(&strict_sum, cap);
            if power.is_zero() {
                break;
            }
            inverse = inverse.add(&power);
        }
        let factor = numerator.mul(&inverse, cap);
        for _ in 0..rank {
            out = out.mul(&factor, cap);
        }
    }
    out
}

/// The deletion pullback: the ring homomorphism `A*(M\i) -> A*(M)` sending
/// `y_F` to the sum of `x_{F'}` over flats of M with `F' \ i = F`. Input and
/// output are in the all-flats presentation.
pub fn deletion_pullback(ctx: &ChowContext, i: usize, y: &ChowElement) -> Result<ChowElement> {
    let m = ctx.matroid();
    if m.is_coloop(i) {
        return Err(Error::IsColoop(i));
    }
    assert_eq!(
        y.presentation(),
        Presentation::AllFlats,
        "deletion pullback expects the all-flats presentation"
    );
    let map = ElementMap::removing(m.n(), i);
    let p = Presentation::AllFlats;
    let image_of = |f: Subset| -> ChowElement {
        let parent = map.to_parent(f);
        let mut img = ChowElement::zero(p);
        if ctx.lattice().is_flat(parent) {
            img = img.add(&ChowElement::variable(p, parent));
        }
        if ctx.lattice().is_flat(parent.insert(i)) {
            img = img.add(&ChowElement::variable(p, parent.insert(i)));
        }
        img
    };
    let mut out = ChowElement::zero(p);
    for (mono, c) in y.terms() {
        let mut piece = ChowElement::term(p, ChainMonomial::one(), c);
        for &(f, e) in mono.factors() {
            let img = image_of(f);
            for _ in 0..e {
                piece = piece.mul(&img, Some(ctx.top_degree()));
            }
        }
        out = out.add(&piece);
    }
    Ok(out)
}

/// The distinguished degree-one class `y_i` of the deletion: minus the sum of
/// `y_F` over nonempty flats of `M\i` that are not flats of M but become
/// flats after adding i. Lives over `M\i` in the all-flats presentation.
pub fn y_element(m: &Matroid, i: usize) -> Result<ChowElement> {
    if m.has_loops() {
        return Err(Error::HasLoop);
    }
    if m.is_coloop(i) {
        return Err(Error::IsColoop(i));
    }
    let (del, map) = m.delete(i)?;
    let p = Presentation::AllFlats;
    let mut out = ChowElement::zero(p);
    for (f, _) in del.flats_lattice().nonempty() {
        let parent = map.to_parent(f);
        if !m.is_flat(parent) && m.is_flat(parent.insert(i)) {
            out = out.add(&ChowElement::variable(p, f).neg());
        }
    }
    Ok(out)
}

/// Embeds `A*(M/i)` into `A*(M\i)` as `z -> y_i * ι(z)`, where ι relabels
/// contraction flats as deletion flats (the labels coincide).
pub fn contraction_embedding(m: &Matroid, i: usize, z: &ChowElement) -> Result<ChowElement> {
    if m.is_coloop(i) {
        return Err(Error::IsColoop(i));
    }
    assert_eq!(
        z.presentation(),
        Presentation::AllFlats,
        "contraction embedding expects the all-flats presentation"
    );
    let yi = y_element(m, i)?;
    // Non-coloop deletion keeps the rank, so A*(M\i) has the same top degree.
    let cap = Some(m.full_rank() - 1);
    Ok(yi.mul(z, cap))
}

/// The four-way partition of the nonempty flats of M relative to an element:
/// T (i outside, F+i not a flat), S (i outside, F+i a flat), U (i inside,
/// F-i a flat or empty), V (i inside, F-i not a flat).
#[derive(Debug, Clone)]
pub struct TsuvPartition {
    element: usize,
    t: Vec<(Subset, usize)>,
    s: Vec<(Subset, usize)>,
    u: Vec<(Subset, usize)>,
    v: Vec<(Subset, usize)>,
    top_rank: usize,
}

/// Classifies every nonempty flat of M by the flowchart on membership of `i`
/// and flatness of `F ∪ i` / `F \ i`.
pub fn tsuv_partition(m: &Matroid, i: usize) -> Result<TsuvPartition> {
    if i >= m.n() {
        return Err(Error::OutOfRange {
            element: i,
            n: m.n(),
        });
    }
    let lattice = m.flats_lattice();
    let mut part = TsuvPartition {
        element: i,
        t: Vec::new(),
        s: Vec::new(),
        u: Vec::new(),
        v: Vec::new(),
        top_rank: m.full_rank(),
    };
    for (f, r) in lattice.nonempty() {
        if !f.contains(i) {
            if m.is_flat(f.insert(i)) {
                part.s.push((f, r));
            } else {
                part.t.push((f, r));
            }
        } else {
            let without = f.remove(i);
            if without.is_empty() || m.is_flat(without) {
                part.u.push((f, r));
            } else {
                part.v.push((f, r));
            }
        }
    }
    Ok(part)
}

impl TsuvPartition {
    pub fn element(&self) -> usize {
        self.element
    }

    pub fn t(&self) -> &[(Subset, usize)] {
        &self.t
    }

    pub fn s(&self) -> &[(Subset, usize)] {
        &self.s
    }

    pub fn u(&self) -> &[(Subset, usize)] {
        &self.u
    }

    pub fn v(&self) -> &[(Subset, usize)] {
        &self.v
    }

    /// `U \ i` as subsets of the parent ground set (may contain the empty set).
    pub fn u_minus_i(&self) -> Vec<Subset> {
        self.u
            .iter()
            .map(|&(f, _)| f.remove(self.element))
            .collect()
    }

    /// `V \ i` as subsets of the parent ground set.
    pub fn v_minus_i(&self) -> Vec<Subset> {
        self.v
            .iter()
            .map(|&(f, _)| f.remove(self.element))
            .collect()
    }

    fn rank_sum(set: &[(Subset, usize)], r: usize) -> ChowElement {
        ChowElement::from_terms(
            Presentation::AllFlats,
            set.iter()
                .filter(|&&(_, rank)| rank == r)
                .map(|&(f, _)| (ChainMonomial::variable(f), 1i64)),
        )
    }

    pub fn t_sum(&self, r: usize) -> ChowElement {
        Self::rank_sum(&self.t, r)
    }

    pub fn s_sum(&self, r: usize) -> ChowElement {
        Self::rank_sum(&self.s, r)
    }

    pub fn u_sum(&self, r: usize) -> ChowElement {
        Self::rank_sum(&self.u, r)
    }

    pub fn v_sum(&self, r: usize) -> ChowElement {
        Self::rank_sum(&self.v, r)
    }

    pub fn top_rank(&self) -> usize {
        self.top_rank
    }
}

/// Which route computes the CSM cycle.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Route {
    /// Cap each graded piece of the staircase class by the degree map.
    Degree,
    /// Apply the staircase factors as divisor operators to the fundamental
    /// weight, factor ranks descending.
    Divisor,
}

/// The CSM cycle as Minkowski weights indexed by dimension `0..=d`. Matroids
/// with loops yield all-zero weights.
pub fn csm_cycle(m: &Matroid, route: Route) -> Result<Vec<MinkowskiWeight>> {
    if m.full_rank() == 0 {
        return Ok(Vec::new());
    }
    let d = m.full_rank() - 1;
    if m.has_loops() {
        return Ok((0..=d).map(MinkowskiWeight::zero).collect());
    }
    let ctx = ChowContext::new(m)?;
    match route {
        Route::Degree => {
            let st = staircase(&ctx);
            let mut out = Vec::with_capacity(d + 1);
            for dim in 0..=d {
                let piece = st.graded_piece(d - dim);
                out.push(cap_by_degree(&ctx, &piece)?);
            }
            Ok(out)
        }
        Route::Divisor => {
            let lattice = ctx.lattice();
            let rk = d + 1;
            let mut current: BTreeMap<usize, MinkowskiWeight> = BTreeMap::from([(d, one_top(m)?)]);
            for r in (1..=rk).rev() {
                let class = ctx.to_proper(
                    &staircase_factor(lattice, r).sub(&ChowElement::one(Presentation::AllFlats)),
                );
                let psi = PLFunction::of_class(&ctx, &class.neg())?;
                let mut next = current.clone();
                for (&dim, w) in &current {
                    if dim >= 1 && !w.is_zero() {
                        let div = courant_divisor(lattice, w, &psi)?;
                        let slot = next
                            .entry(dim - 1)
                            .or_insert_with(|| MinkowskiWeight::zero(dim - 1));
                        *slot = slot.minus(&div);
                    }
                }
                current = next;
            }
            Ok((0..=d)
                .map(|dim| {
                    current
                        .remove(&dim)
                        .unwrap_or_else(|| MinkowskiWeight::zero(dim))
                })
                .collect())
        }
    }
}

/// Runs both routes and checks they agree cone by cone.
pub fn csm_cycle_checked(m: &Matroid) -> Result<Vec<MinkowskiWeight>> {
    let by_degree = csm_cycle(m, Route::Degree)?;
    let by_divisor = csm_cycle(m, Route::Divisor)?;
    for (dim, (a, b)) in by_degree.iter().zip(by_divisor.iter()).enumerate() {
        if a != b {
            let cone = a
                .iter()
                .map(|(c, _)| c.clone())
                .chain(b.iter().map(|(c, _)| c.clone()))
                .find(|c| a.get(c) != b.get(c))
                .unwrap_or_else(FlagCone::origin);
            return Err(Error::RouteMismatch {
                dim,
                cone: cone.to_string(),
                degree_route: a.get(&cone),
                divisor_route: b.get(&cone),
            });
        }
    }
    Ok(by_degree)
}

/// The named identities the verifier can check.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Identity {
    CdTheorem41,
    TsuvVanishing,
    PhiDivisor,
    PullbackLemma44,
    Coefficients31,
    RouteEquivalence,
    Duality,
}

impl Identity {
    pub fn all() -> [Identity; 7] {
        [
            Identity::CdTheorem41,
            Identity::TsuvVanishing,
            Identity::PhiDivisor,
            Identity::PullbackLemma44,
            Identity::Coefficients31,
            Identity::RouteEquivalence,
            Identity::Duality,
        ]
    }

    pub fn name(self) -> &'static str {
        match self {
            Identity::CdTheorem41 => "cd-theorem-4.1",
            Identity::TsuvVanishing => "tsuv-vanishing",
            Identity::PhiDivisor => "phi-divisor",
            Identity::PullbackLemma44 => "pullback-lemma-4.4",
            Identity::Coefficients31 => "coefficients-3.1",
            Identity::RouteEquivalence => "route-equivalence",
            Identity::Duality => "duality",
        }
    }

    pub fn parse(s: &str) -> Result<Identity> {
        Identity::all()
            .into_iter()
            .find(|id| id.name() == s)
            .ok_or_else(|| Error::UnknownIdentity(s.to_string()))
    }

    /// Whether the identity quantifies over a ground-set element.
    pub fn per_element(self) -> bool {
        matches!(
            self,
            Identity::CdTheorem41
                | Identity::TsuvVanishing
                | Identity::PhiDivisor
                | Identity::PullbackLemma44
        )
    }
}

impl fmt::Display for Identity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Result of one identity check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum VerifyOutcome {
    Pass,
    Fail(String),
    NotApplicable(String),
}

impl VerifyOutcome {
    pub fn passed(&self) -> bool {
        matches!(self, VerifyOutcome::Pass | VerifyOutcome::NotApplicable(_))
    }
}

/// Checks one named identity on one matroid (and element where applicable).
/// Coloops and loops yield `NotApplicable` for checks whose hypotheses they
/// violate; genuine mismatches yield `Fail` with a witness.
pub fn verify_identity(m: &Matroid, id: Identity, element: Option<usize>) -> Result<VerifyOutcome> {
    if id.per_element() {
        let Some(i) = element else {
            return Err(Error::Parse(format!("identity {id} requires an element")));
        };
        if i >= m.n() {
            return Err(Error::OutOfRange {
                element: i,
                n: m.n(),
            });
        }
    }
    if m.has_loops() {
        return Ok(match id {
            Identity::RouteEquivalence => match csm_cycle_checked(m) {
                Ok(_) => VerifyOutcome::Pass,
                Err(Error::RouteMismatch {
                    dim,
                    cone,
                    degree_route,
                    divisor_route,
                }) => VerifyOutcome::Fail(format!(
                    "dim {dim} cone {cone}: {degree_route} vs {divisor_route}"
                )),
                Err(e) => return Err(e),
            },
            _ => VerifyOutcome::NotApplicable("matroid has a loop; st(M) = 0".into()),
        });
    }
    match id {
        Identity::CdTheorem41 => {
            let i = element.expect("checked above");
            if m.is_coloop(i) {
                return Ok(VerifyOutcome::NotApplicable(format!("element {i} is a coloop")));
            }
            verify_cd_theorem(m, i)
        }
        Identity::TsuvVanishing => verify_tsuv(m, element.expect("checked above")),
        Identity::PhiDivisor => {
            let i = element.expect("checked above");
            if m.is_coloop(i) {
                return Ok(VerifyOutcome::NotApplicable(format!("element {i} is a coloop")));
            }
            verify_phi_divisor(m, i)
        }
        Identity::PullbackLemma44 => {
            let i = element.expect("checked above");
            if m.is_coloop(i) {
                return Ok(VerifyOutcome::NotApplicable(format!("element {i} is a coloop")));
            }
            verify_pullback(m, i)
        }
        Identity::Coefficients31 => verify_coefficients(m),
        Identity::RouteEquivalence => match csm_cycle_checked(m) {
            Ok(_) => Ok(VerifyOutcome::Pass),
            Err(Error::RouteMismatch { dim, cone, degree_route, divisor_route }) => {
                Ok(VerifyOutcome::Fail(format!(
                    "dim {dim} cone {cone}: degree route {degree_route} vs divisor route {divisor_route}"
                )))
            }
            Err(e) => Err(e),
        },
        Identity::Duality => verify_duality(m),
    }
}

/// Theorem: `st(M) = δ̄*(st(M\i)) - δ̄*(y_i · ι(st(M/i)))` for non-coloop i,
/// verified in the proper presentation after conversion.
fn verify_cd_theorem(m: &Matroid, i: usize) -> Result<VerifyOutcome> {
    let ctx = ChowContext::new(m)?;
    let (del, _) = m.delete(i)?;
    let (con, _) = m.contract(i)?;
    let ctx_del = ChowContext::new(&del)?;
    let st_m = staircase(&ctx);
    let st_del = staircase(&ctx_del);
    let st_con = if con.has_loops() {
        ChowElement::zero(Presentation::AllFlats)
    } else if con.full_rank() == 0 {
        ChowElement::one(Presentation::AllFlats)
    } else {
        staircase(&ChowContext::new(&con)?)
    };
    let lhs = ctx.normalize(&st_m);
    let pulled_del = deletion_pullback(&ctx, i, &st_del)?;
    let embedded = contraction_embedding(m, i, &st_con)?;
    let pulled_con = deletion_pullback(&ctx, i, &embedded)?;
    let rhs = ctx.normalize(&pulled_del.sub(&pulled_con));
    if lhs == rhs {
        Ok(VerifyOutcome::Pass)
    } else {
        let diff = lhs.sub(&rhs);
        let witness = diff
            .terms()
            .next()
            .map(|(mo, c)| format!("{c} * {mo}"))
            .unwrap_or_default();
        Ok(VerifyOutcome::Fail(format!(
            "st(M) - rhs has normal form term {witness}"
        )))
    }
}

/// The vanishing identities of the T/S/U/V partition, the partition's set
/// equalities, and the pullback of `y_i` as the U-sum.
fn verify_tsuv(m: &Matroid, i: usize) -> Result<VerifyOutcome> {
    let ctx = ChowContext::new(m)?;
    let part = tsuv_partition(m, i)?;
    let rk = part.top_rank();
    // Disjoint union is all of L(M).
    let total = part.t.len() + part.s.len() + part.u.len() + part.v.len();
    if total != ctx.lattice().nonempty().count() {
        return Ok(VerifyOutcome::Fail("partition does not cover L(M)".into()));
    }
    // U \ i = S ∪ {∅}, where the empty set occurs exactly when {i} is itself
    // a flat (for parallel elements the closure of i is larger and U misses
    // the singleton member).
    let mut u_minus: Vec<Subset> = part.u_minus_i();
    u_minus.sort();
    let mut s_side: Vec<Subset> = part.s.iter().map(|&(f, _)| f).collect();
    if m.is_flat(Subset::singleton(i)) {
        s_side.push(Subset::EMPTY);
    }
    s_side.sort();
    if u_minus != s_side {
        return Ok(VerifyOutcome::Fail("U \\ i differs from S ∪ {∅}".into()));
    }
    // S ∪ V\i = L(M/i) and T ∪ S ∪ V\i = L(M\i), via the stored label maps.
    let (con, conmap) = m.contract(i)?;
    let mut sv: Vec<Subset> = part
        .s
        .iter()
        .map(|&(f, _)| f)
        .chain(part.v_minus_i())
        .map(|f| conmap.from_parent(f))
        .collect();
    sv.sort();
    let mut con_flats: Vec<Subset> = con.flats_lattice().nonempty().map(|(f, _)| f).collect();
    con_flats.sort();
    if sv != con_flats {
        return Ok(VerifyOutcome::Fail("S ∪ V\\i differs from L(M/i)".into()));
    }
    let (del, delmap) = m.delete(i)?;
    let mut tsv: Vec<Subset> = part
        .t
        .iter()
        .chain(part.s.iter())
        .map(|&(f, _)| f)
        .chain(part.v_minus_i())
        .map(|f| delmap.from_parent(f))
        .collect();
    tsv.sort();
    let mut del_flats: Vec<Subset> = del.flats_lattice().nonempty().map(|(f, _)| f).collect();
    del_flats.sort();
    if tsv != del_flats {
        return Ok(VerifyOutcome::Fail(
            "T ∪ S ∪ V\\i differs from L(M\\i)".into(),
        ));
    }
    // Vanishing products in A*(M).
    for j in 1..=rk {
        for l in 1..=rk {
            let tu = ctx.normalize(&ctx.multiply(&part.t_sum(j), &part.u_sum(l)));
            if !tu.is_zero() {
                return Ok(VerifyOutcome::Fail(format!("t_{j} u_{l} != 0: {tu}")));
            }
            if j <= l {
                let us = ctx.normalize(&ctx.multiply(&part.u_sum(j), &part.s_sum(l)));
                if !us.is_zero() {
                    return Ok(VerifyOutcome::Fail(format!("u_{j} s_{l} != 0: {us}")));
                }
            }
            if l < j {
                let uv = ctx.normalize(&ctx.multiply(&part.u_sum(j), &part.v_sum(l)));
                if !uv.is_zero() {
                    return Ok(VerifyOutcome::Fail(format!("u_{j} v_{l} != 0: {uv}")));
                }
            }
        }
    }
    // δ̄*(y_i) = sum over U, as classes (needs a non-coloop element).
    if !m.is_coloop(i) {
        let pulled = deletion_pullback(&ctx, i, &y_element(m, i)?)?;
        let u_total = (1..=rk).fold(ChowElement::zero(Presentation::AllFlats), |acc, r| {
            acc.add(&part.u_sum(r))
        });
        if !ctx.equivalent(&pulled, &u_total) {
            return Ok(VerifyOutcome::Fail("δ̄*(y_i) differs from the U-sum".into()));
        }
    }
    Ok(VerifyOutcome::Pass)
}

/// Lemma: the divisor of φ on `B(M\i)` is the fundamental cycle of `B(M/i)`.
fn verify_phi_divisor(m: &Matroid, i: usize) -> Result<VerifyOutcome> {
    let phi = crate::fan::phi_function(m, i)?;
    let (del, _) = m.delete(i)?;
    let (con, _) = m.contract(i)?;
    let lattice = del.flats_lattice();
    let div = courant_divisor(&lattice, &one_top(&del)?, &phi)?;
    let expected = if con.has_loops() {
        MinkowskiWeight::zero(div.dim())
    } else {
        MinkowskiWeight::from_weights(
            div.dim(),
            flags_of_dim(&con.flats_lattice(), div.dim())
                .into_iter()
                .map(|c| (c, 1)),
        )
    };
    if div == expected {
        Ok(VerifyOutcome::Pass)
    } else {
        let cone = div
            .iter()
            .map(|(c, _)| c.clone())
            .chain(expected.iter().map(|(c, _)| c.clone()))
            .find(|c| div.get(c) != expected.get(c))
            .unwrap_or_else(FlagCone::origin);
        Ok(VerifyOutcome::Fail(format!(
            "cone {cone}: divisor weight {} vs contraction fan weight {}",
            div.get(&cone),
            expected.get(&cone)
        )))
    }
}

/// Lemma: capping commutes with the pullbacks,
/// `δ̄*(y) ∩ 1_M = δ*(y ∩ 1_{M\i})`, for y over the degree-one basis and the
/// staircase graded pieces of `M \ i`.
fn verify_pullback(m: &Matroid, i: usize) -> Result<VerifyOutcome> {
    let ctx = ChowContext::new(m)?;
    let (del, _) = m.delete(i)?;
    let ctx_del = ChowContext::new(&del)?;
    let mut checks: Vec<(String, ChowElement)> = Vec::new();
    if ctx_del.top_degree() >= 1 {
        for b in ctx_del.basis(1) {
            checks.push((
                format!("basis element {b}"),
                ctx_del.to_all_flats(&ChowElement::term(Presentation::Proper, b.clone(), 1)),
            ));
        }
    }
    let st_del = staircase(&ctx_del);
    for j in 0..=ctx_del.top_degree() {
        checks.push((
            format!("staircase piece of degree {j}"),
            st_del.graded_piece(j),
        ));
    }
    for (label, y) in checks {
        let lhs = cap_by_degree(&ctx, &deletion_pullback(&ctx, i, &y)?)?;
        let capped = cap_by_degree(&ctx_del, &y)?;
        let rhs = modification_pullback(m, i, &capped)?;
        if lhs != rhs {
            return Ok(VerifyOutcome::Fail(format!("mismatch for {label}")));
        }
    }
    Ok(VerifyOutcome::Pass)
}

/// Theorem: staircase expansion coefficients equal the closed formula on
/// every multiset chain of nonempty flats.
fn verify_coefficients(m: &Matroid) -> Result<VerifyOutcome> {
    let expansion = expand_staircase_bruteforce(m)?;
    let lattice = m.flats_lattice();
    let mut flats: Vec<Subset> = lattice.nonempty().map(|(f, _)| f).collect();
    flats.sort();
    for k in 0..=m.full_rank() {
        for chain in chow::chain_monomials(&flats, k) {
            let brute = expansion.get(&chain).copied().unwrap_or(0);
            let formula = coefficient_cf(m, &chain);
            if brute != formula {
                return Ok(VerifyOutcome::Fail(format!(
                    "chain {chain}: expansion {brute} vs formula {formula}"
                )));
            }
        }
    }
    // Nothing in the expansion falls outside the enumerated chains.
    if expansion.keys().any(|c| c.degree() > m.full_rank()) {
        return Ok(VerifyOutcome::Fail(
            "expansion has degree above rk(E)".into(),
        ));
    }
    Ok(VerifyOutcome::Pass)
}

/// Poincaré duality at desk scale: every pairing matrix is unimodular, and
/// the graded ranks are palindromic.
fn verify_duality(m: &Matroid) -> Result<VerifyOutcome> {
    let ctx = ChowContext::new(m)?;
    let ranks = ctx.graded_ranks();
    for k in 0..=ctx.top_degree() {
        if ranks[k] != ranks[ctx.top_degree() - k] {
            return Ok(VerifyOutcome::Fail(format!(
                "graded ranks not palindromic at {k}"
            )));
        }
        let pm = ctx.pairing_matrix(k)?;
        let det = crate::linalg::determinant(&pm);
        if det != num_bigint::BigInt::from(1) && det != num_bigint::BigInt::from(-1) {
            return Ok(VerifyOutcome::Fail(format!(
                "pairing at degree {k} has determinant {det}"
            )));
        }
    }
    Ok(VerifyOutcome::Pass)
}

/// Runs the requested identities over a matroid, expanding per-element
/// identities over the requested elements (all elements when `None`).
pub fn run_verifier(
    m: &Matroid,
    identities: &[Identity],
    element: Option<usize>,
) -> Result<Vec<(Identity, Option<usize>, VerifyOutcome)>> {
    let mut out = Vec::new();
    for &id in identities {
        if id.per_element() {
            let elements: Vec<usize> = match element {
                Some(i) => vec![i],
                None => (0..m.n()).collect(),
            };
            for i in elements {
                let outcome = verify_identity(m, id, Some(i))?;
                out.push((id, Some(i), outcome));
            }
        } else {
            let outcome = verify_identity(m, id, None)?;
            out.push((id, None, outcome));
        }
    }
    Ok(out)
}

/// Balancing holds for the fundamental weight and every CSM weight.
pub fn verify_csm_balancing(m: &Matroid) -> Result<bool> {
    if m.has_loops() || m.full_rank() == 0 {
        return Ok(true);
    }
    let lattice = m.flats_lattice();
    if balance_certificate(&lattice, &one_top(m)?).is_some() {
        return Ok(false);
    }
    for w in csm_cycle(m, Route::Degree)? {
        if balance_certificate(&lattice, &w).is_some() {
            return Ok(false);
        }
    }
    Ok(true)
}


#[cfg(test)]
mod pullback_corpus {
    use super::*;
    use crate::corpus::builtin_corpus;

    #[test]
    fn pullback_lemma_across_the_whole_corpus() {
        for entry in builtin_corpus() {
            let m = entry.matroid().unwrap();
            if m.has_loops() {
                continue;
            }
            for i in 0..m.n() {
                if m.is_coloop(i) {
                    continue;
                }
                match verify_identity(&m, Identity::PullbackLemma44, Some(i)) {
                    Ok(VerifyOutcome::Pass) => {}
                    other => panic!("{} element {i}: {other:?}", entry.name),
                }
            }
        }
    }
}
